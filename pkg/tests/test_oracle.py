import pytest
from hypothesis import given, strategies as st

from currentmods.constructions import demazure_local
from currentmods.oracle import (
    AffineWeight,
    affine_reflect,
    demazure_apply,
    demazure_character,
    extremal_target,
    fundamental_affine,
    greedy_reduced_word,
    is_dominant,
    oracle_character,
    shortest_word_length,
)
from currentmods.rootsys import UnsupportedAlgebra, build_root_system

from oracles import ssyt_character

A1 = build_root_system("A1")
A2 = build_root_system("A2")
A3 = build_root_system("A3")

L0 = AffineWeight((0,), 1, 0)


def test_reflection_examples():
    # alpha^vee has finite coordinate 2 for sl2
    assert affine_reflect(A1, 1, AffineWeight((-2,), 1, -1)) == AffineWeight((2,), 1, -1)
    assert affine_reflect(A1, 0, L0) == AffineWeight((2,), 1, -1)
    with pytest.raises(ValueError):
        affine_reflect(A1, 2, L0)
    with pytest.raises(UnsupportedAlgebra):
        affine_reflect(build_root_system("B2"), 0, AffineWeight((0, 0), 1, 0))


@given(st.sampled_from(["A1", "A2", "A3"]), st.data())
def test_reflections_square_to_identity(label, data):
    rs = build_root_system(label)
    chi = AffineWeight(tuple(data.draw(st.integers(-5, 5)) for _ in range(rs.rank)),
                       data.draw(st.integers(0, 3)), data.draw(st.integers(-4, 4)))
    i = data.draw(st.integers(0, rs.rank))
    once = affine_reflect(rs, i, chi)
    assert affine_reflect(rs, i, once) == chi
    assert once.level == chi.level
    if i > 0:
        assert once.ddeg == chi.ddeg


@pytest.mark.parametrize("ell,lam,target,comp", [
    (1, (2,), AffineWeight((-2,), 1, -1), 0),
    (1, (0,), AffineWeight((0,), 1, 0), 0),
    (2, (2,), AffineWeight((-4,), 2, -2), 0),
    (1, (1,), AffineWeight((-1,), 1, 0), 1),
])
def test_extremal_targets(ell, lam, target, comp):
    assert extremal_target(A1, ell, lam) == (target, comp)


def test_greedy_words():
    assert greedy_reduced_word(A1, AffineWeight((-2,), 1, -1)) == ((1, 0), 0)
    assert greedy_reduced_word(A1, L0) == ((), 0)
    word, j = greedy_reduced_word(A1, extremal_target(A1, 1, (1,))[0])
    assert len(word) == 1 and j == 1


def test_greedy_rejects_non_fundamental_end():
    with pytest.raises(ValueError):
        greedy_reduced_word(A1, AffineWeight((1,), 2, 0))  # Lambda_0 + Lambda_1


def test_words_reconstruct_the_target():
    for rs, ell, lam in [(A1, 2, (3,)), (A2, 1, (2, 1)), (A3, 1, (1, 1, 0))]:
        target, j = extremal_target(rs, ell, lam)
        word, jj = greedy_reduced_word(rs, target)
        chi = fundamental_affine(rs, jj, ell)
        for i in reversed(word):
            chi = affine_reflect(rs, i, chi)
        assert chi == target and jj == j


@pytest.mark.parametrize("rs,ell,lam", [
    (A1, 1, (2,)), (A1, 1, (3,)), (A1, 2, (4,)), (A2, 1, (1, 1)), (A2, 1, (2, 1)), (A3, 1, (1, 0, 1)),
])
def test_greedy_words_are_minimal(rs, ell, lam):
    target, _ = extremal_target(rs, ell, lam)
    word, _ = greedy_reduced_word(rs, target)
    assert shortest_word_length(rs, target, len(word)) == len(word)


def test_demazure_operator_examples():
    assert demazure_apply(A1, 1, {L0: 1}) == {L0: 1}
    assert demazure_apply(A1, 0, {L0: 1}) == {L0: 1, AffineWeight((2,), 1, -1): 1}
    # pairing -1 gives zero, pairing -2 gives minus the middle term
    assert demazure_apply(A1, 1, {AffineWeight((-1,), 1, 0): 1}) == {}
    assert demazure_apply(A1, 1, {AffineWeight((-2,), 1, 0): 1}) == {AffineWeight((0,), 1, 0): -1}


@pytest.mark.parametrize("rs,word", [(A1, (1, 0)), (A2, (1, 2, 1, 0)), (A2, (0, 2))])
def test_demazure_operators_are_idempotent(rs, word):
    f = demazure_character(rs, word, fundamental_affine(rs, 0, 2))
    for i in range(rs.rank + 1):
        once = demazure_apply(rs, i, f)
        assert demazure_apply(rs, i, once) == once


def test_oracle_examples():
    assert oracle_character(A1, 1, (2,), 3).terms == {((2,), 0): 1, ((0,), 0): 1, ((-2,), 0): 1, ((0,), 1): 1}
    assert oracle_character(A1, 1, (1,), 3).terms == {((1,), 0): 1, ((-1,), 0): 1}
    for ell in (1, 2, 3):
        assert oracle_character(A2, ell, (0, 0), 3).terms == {((0, 0), 0): 1}


@pytest.mark.parametrize("rs,lam", [(A1, (3,)), (A2, (1, 1)), (A2, (2, 1)), (A3, (0, 1, 1))])
def test_degree_zero_is_the_irreducible(rs, lam):
    ch = oracle_character(rs, 1, lam, 0)
    assert ch.degree_slice(0) == ssyt_character(rs.rank, lam)


@pytest.mark.parametrize("rs,ell,lam", [(A1, 2, (3,)), (A2, 1, (2, 1)), (A2, 2, (1, 1))])
def test_slices_are_weyl_invariant(rs, ell, lam):
    assert oracle_character(rs, ell, lam, 10).is_weyl_invariant(rs)


@pytest.mark.parametrize("rs,ell,lam", [
    (A1, 1, (1,)), (A1, 1, (2,)), (A1, 1, (3,)), (A1, 2, (1,)), (A1, 2, (2,)), (A1, 2, (3,)),
    (A2, 1, (1, 0)), (A2, 1, (1, 1)), (A2, 2, (0, 1)), (A3, 1, (0, 1, 0)),
])
def test_oracle_agrees_with_engine(rs, ell, lam):
    assert oracle_character(rs, ell, lam, 8) == demazure_local(rs, ell, lam).character().truncate(8)


def test_oracle_input_checks():
    with pytest.raises(ValueError):
        oracle_character(A1, 1, (-1,), 3)
    with pytest.raises(ValueError):
        extremal_target(A1, 0, (1,))
    assert is_dominant(A1, L0)
