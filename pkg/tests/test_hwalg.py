from fractions import Fraction

import pytest
import sympy

from currentmods.hwalg import (
    build_hw_algebra,
    check_surjection,
    hilbert_A_lambda,
    hilbert_via_arrangement,
    merge_variables,
    monomials,
    polynomial_ring_hilbert,
)
from currentmods.rootsys import build_root_system

from oracles import partitions_bounded

A1 = build_root_system("A1")
A2 = build_root_system("A2")
A3 = build_root_system("A3")


def test_two_fundamentals_give_symmetric_polynomials():
    assert build_hw_algebra(A1, [(1,), (1,)], 6).hilbert == [1, 1, 2, 2, 3, 3, 4]


@pytest.mark.parametrize("k", [1, 2, 3])
def test_equal_fundamentals_are_symmetric(k):
    h = build_hw_algebra(A1, [(1,)] * k, 6).hilbert
    assert h == [partitions_bounded(d, k) for d in range(7)]


def test_single_coweight_is_one_variable():
    assert build_hw_algebra(A1, [(2,)], 5).hilbert == [1] * 6


def test_distinct_colours_give_full_polynomial_ring():
    # p^{h1}_s = z1^s + z2^s and p^{h2}_s = z1^s generate Q[z1, z2]
    assert build_hw_algebra(A2, [(1, 1), (1, 0)], 5).hilbert == polynomial_ring_hilbert(2, 5)
    assert build_hw_algebra(A2, [(1, 0), (0, 1)], 5).hilbert == polynomial_ring_hilbert(2, 5)


def test_weighted_generators_against_sympy():
    # A(2 omega, omega): generators 2 z1^s + z2^s; compare spans with sympy
    z1, z2 = sympy.symbols("z1 z2")
    alg = build_hw_algebra(A1, [(2,), (1,)], 4)
    gens = [2 * z1 ** s + z2 ** s for s in range(1, 5)]
    for d in range(5):
        prods = set()
        def rec(start, deg, acc):
            if deg == d:
                prods.add(sympy.expand(acc))
                return
            for s in range(start, d - deg + 1):
                rec(s, deg + s, acc * gens[s - 1])
        rec(1, 0, sympy.Integer(1))
        mons = [z1 ** a * z2 ** (d - a) for a in range(d + 1)]
        rows = [[sympy.Poly(p, z1, z2).coeff_monomial(m) for m in mons] for p in prods]
        assert alg.hilbert[d] == (sympy.Matrix(rows).rank() if rows else 0)


def test_algebra_is_closed_and_contains_generators():
    alg = build_hw_algebra(A1, [(2,), (1,)], 5)
    assert alg.is_closed()
    for s in range(1, 4):
        for g in alg.generators(s):
            assert alg.contains(g)
    assert not alg.contains({(1, 0): Fraction(1)})
    with pytest.raises(ValueError):
        alg.contains({(6, 0): Fraction(1)})


def test_build_errors():
    with pytest.raises(ValueError):
        build_hw_algebra(A1, [], 3)
    with pytest.raises(ValueError):
        build_hw_algebra(A1, [(-1,)], 3)


@pytest.mark.parametrize("rs,lam,expect", [
    (A1, (2,), [1, 1, 2, 2, 3, 3, 4]),
    (A2, (1, 1), [1, 2, 3, 4, 5, 6, 7]),
    (A2, (2, 1), [1, 2, 4, 6, 9, 12, 16]),
    (A3, (0, 3, 0), [1, 1, 2, 3, 4, 5, 7]),
])
def test_closed_form(rs, lam, expect):
    assert hilbert_A_lambda(rs, lam, 6) == expect


@pytest.mark.parametrize("rs,lams", [
    (A1, [(1,), (1,)]),
    (A1, [(2,)]),
    (A1, [(1,), (1,), (1,)]),
    (A1, [(2,), (1,)]),
    (A2, [(1, 1), (1, 0)]),
    (A2, [(1, 0), (0, 1)]),
])
def test_arrangement_agrees_with_generators(rs, lams):
    assert hilbert_via_arrangement(rs, lams, 6) == build_hw_algebra(rs, lams, 6).hilbert


@pytest.mark.parametrize("rs,lams", [
    (A1, [(1,), (1,)]),
    (A1, [(2,), (1,)]),
    (A1, [(1,), (2,), (1,)]),
    (A2, [(1, 1), (1, 0)]),
    (A2, [(2, 0), (0, 1)]),
])
def test_surjection_from_A_lambda(rs, lams):
    out = check_surjection(rs, lams, 5)
    assert out["ok"], out
    assert all(a <= b for a, b in zip(out["hilbert_A"], out["hilbert_A_lambda"]))
    assert out["image_dims"] == out["hilbert_A"]


def test_surjection_zero_coweight():
    assert check_surjection(A1, [(0,)], 3)["ok"]


def test_merge_variables():
    p = {(1, 2, 3): Fraction(1), (2, 1, 3): Fraction(-1)}
    assert merge_variables(p, 0) == {}
    assert merge_variables({(1, 2, 3): Fraction(2)}, 1) == {(1, 5): Fraction(2)}


def test_monomials_count():
    assert len(monomials(3, 4)) == 15
    assert monomials(0, 0) == [()]
    assert monomials(0, 2) == []
