from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from currentmods.rootsys import (
    ENGINE_TYPES,
    UnsupportedAlgebra,
    build_root_system,
    weight_class,
)

ALL = ["A1", "A2", "A3", "A4", "B2", "C2", "G2"]


@pytest.mark.parametrize("label,order", [
    ("A1", 2), ("A2", 6), ("A3", 24), ("A4", 120), ("B2", 8), ("C2", 8), ("G2", 12),
])
def test_weyl_group_order(label, order):
    assert len(build_root_system(label).weyl_group) == order


def test_unknown_label():
    with pytest.raises(UnsupportedAlgebra):
        build_root_system("E9")


def test_engine_gate():
    build_root_system("A3").require_engine()
    with pytest.raises(UnsupportedAlgebra):
        build_root_system("B2").require_engine()
    assert ENGINE_TYPES == ("A1", "A2", "A3")


@pytest.mark.parametrize("label", ALL)
def test_w0_is_minus_involution_in_type_a(label):
    rs = build_root_system(label)
    for i in range(rs.rank):
        w = rs.w0(rs.fundamental(i))
        if rs.is_type_a:
            # w0 omega_i = -omega_{r+1-i}
            assert w == tuple(-1 if j == rs.rank - 1 - i else 0 for j in range(rs.rank))
        assert rs.w0(w) == rs.fundamental(i)


@pytest.mark.parametrize("label", ALL)
def test_rho_orbit_is_regular(label):
    rs = build_root_system(label)
    assert len(rs.orbit(rs.rho)) == len(rs.weyl_group)
    assert rs.w0(rs.rho) == tuple(-x for x in rs.rho)


def test_simple_roots_columns():
    rs = build_root_system("A2")
    assert rs.simple_root(0) == (2, -1)
    assert rs.simple_root(1) == (-1, 2)
    b2 = build_root_system("B2")
    assert b2.simple_root(0) == (2, -1)
    assert b2.simple_root(1) == (-2, 2)


def test_weyl_act_order_and_range():
    rs = build_root_system("A2")
    mu = (1, 0)
    # rightmost acts first: s1 s2 (omega_1) = s1 (omega_1) = (-1, 1)
    assert rs.weyl_act([1, 2], mu) == (-1, 1)
    assert rs.weyl_act([2, 1], mu) == (0, -1)
    with pytest.raises(ValueError):
        rs.weyl_act([3], mu)


@given(st.sampled_from(["A1", "A2", "A3", "B2", "G2"]), st.data())
def test_reflections_are_involutions(label, data):
    rs = build_root_system(label)
    mu = tuple(data.draw(st.integers(-6, 6)) for _ in range(rs.rank))
    i = data.draw(st.integers(0, rs.rank - 1))
    assert rs.reflect(i, rs.reflect(i, mu)) == mu


@given(st.sampled_from(["A1", "A2", "A3"]), st.data())
def test_norm_is_weyl_invariant(label, data):
    rs = build_root_system(label)
    mu = tuple(data.draw(st.integers(-5, 5)) for _ in range(rs.rank))
    for i in range(rs.rank):
        assert rs.norm_sq(rs.reflect(i, mu)) == rs.norm_sq(mu)


def test_norms_type_a():
    a1 = build_root_system("A1")
    assert a1.norm_sq((1,)) == Fraction(1, 2)
    assert a1.norm_sq((2,)) == 2  # simple root
    a2 = build_root_system("A2")
    assert a2.norm_sq((1, 0)) == Fraction(2, 3)
    assert a2.norm_sq((1, 1)) == 2


def test_norm_needs_simply_laced():
    with pytest.raises(UnsupportedAlgebra):
        build_root_system("B2").norm_sq((1, 0))


def test_iota():
    assert build_root_system("A3").iota((1, 2, 3)) == (1, 2, 3)
    b2 = build_root_system("B2")
    # long and short coroots differ by a factor 2
    assert sorted(b2.coroot_lengths) == [2, 4]


@pytest.mark.parametrize("label,lam,cls", [
    ("A1", (1,), 1), ("A1", (2,), 0), ("A1", (3,), 1),
    ("A2", (1, 0), 1), ("A2", (0, 1), 2), ("A2", (1, 1), 0),
    ("A3", (0, 1, 0), 2), ("A3", (1, 1, 0), 3),
])
def test_weight_class(label, lam, cls):
    assert weight_class(build_root_system(label), lam) == cls


def test_dominant_decompose():
    rs = build_root_system("A2")
    assert rs.dominant_decompose((2, 1)) == [(1, 0), (1, 0), (0, 1)]
    with pytest.raises(ValueError):
        rs.dominant_decompose((1, -1))


def test_bad_cartan_rejected():
    from currentmods.rootsys import _check_cartan
    with pytest.raises(ValueError):
        _check_cartan(((2, 1), (-1, 2)))
    with pytest.raises(ValueError):
        _check_cartan(((2, 0), (-1, 2)))
