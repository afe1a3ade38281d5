"""Acceptance criteria 1-10, exact comparisons.

Each test carries a ``criterion`` marker; conftest prints one PASS/FAIL line
per criterion at the end of the run.
"""

import pytest

from currentmods.character import Character
from currentmods.constructions import dual_character, fiber_zero, global_demazure
from currentmods.hwalg import build_hw_algebra
from currentmods.rootsys import build_root_system
from currentmods.verify import PASS, CheckSpec, run_check

W, W2, W3 = (1,), (2,), (3,)
A1_ITEMS = [(lams, ell, 5) for lams in [(W, W), (W2, W), (W, W, W)] for ell in (1, 2)]
A2_ITEMS = [(lams, 1, 4) for lams in [((1, 0), (0, 1)), ((1, 1), (1, 0))]]
GRID = [("A1",) + it for it in A1_ITEMS] + [("A2",) + it for it in A2_ITEMS]
GRID_IDS = [f"{a}-{';'.join(','.join(map(str, l)) for l in lams)}-l{ell}-D{cap}" for a, lams, ell, cap in GRID]


def passes(check, algebra, lams, ell, cap, **kw):
    r = run_check(CheckSpec(check, algebra, tuple(lams), ell, cap, **kw))
    assert r.status == PASS, (r.status, r.detail.get("witness", r.detail.get("reason")))
    return r


@pytest.mark.criterion(1)
def test_dual_leading_terms():
    R = global_demazure(build_root_system("A1"), 1, [W, W], 3)
    lead = dual_character(R, 2).truncate(0, low=-1)
    # q^{-1} + (z^2 + 2 + z^{-2})
    assert lead == Character({((0,), -1): 1, ((2,), 0): 1, ((0,), 0): 2, ((-2,), 0): 1}, rank=1)


@pytest.mark.criterion(2)
@pytest.mark.parametrize("algebra,lams,ell,cap", GRID, ids=GRID_IDS)
def test_fat_character(algebra, lams, ell, cap):
    passes("V7", algebra, lams, ell, cap)


@pytest.mark.criterion(3)
@pytest.mark.parametrize("algebra,lams,ell,cap", GRID, ids=GRID_IDS)
def test_special_fiber(algebra, lams, ell, cap):
    passes("V2", algebra, lams, ell, cap)


@pytest.mark.criterion(3)
@pytest.mark.parametrize("algebra,lams,dim", [("A1", (W, W), 4), ("A2", ((1, 0), (0, 1)), 9)])
def test_special_fiber_dimension(algebra, lams, dim):
    assert fiber_zero(global_demazure(build_root_system(algebra), 1, list(lams), 4)).dim == dim


@pytest.mark.criterion(4)
@pytest.mark.parametrize("algebra,lams,ell,cap", GRID, ids=GRID_IDS)
def test_fiber_factorization(algebra, lams, ell, cap):
    r = passes("V4", algebra, lams, ell, cap, seed=17)
    assert len(r.detail["configurations"]) >= 3 or len(lams) == 1
    passes("V5", algebra, lams, ell, cap, seed=17)


@pytest.mark.criterion(5)
@pytest.mark.parametrize("algebra,lams,ell,cap", GRID, ids=GRID_IDS)
def test_freeness_identity(algebra, lams, ell, cap):
    passes("V3", algebra, lams, ell, cap)


@pytest.mark.criterion(6)
def test_power_over_A():
    passes("V6", "A1", (W, W), 2, 4)


@pytest.mark.criterion(7)
@pytest.mark.parametrize("lams", [(W, W, W), (W2, W, W), (W, W2, W3)])
def test_fusion_independence_and_associativity(lams):
    r = passes("V8", "A1", lams, 1, 0, seed=23)
    assert len(r.detail["point_sets"]) == 3
    assert "nested" in r.detail


@pytest.mark.criterion(8)
@pytest.mark.parametrize("algebra,lams,ell", [
    ("A1", (W, W2, W3), 1), ("A1", (W, W2, W3), 2), ("A2", ((1, 0), (1, 1)), 1),
])
def test_oracle_cross_validation(algebra, lams, ell):
    passes("V11", algebra, lams, ell, 8)


@pytest.mark.criterion(9)
@pytest.mark.parametrize("algebra,lams,ell,cap", GRID, ids=GRID_IDS)
def test_lie_action(algebra, lams, ell, cap):
    passes("V1", algebra, lams, ell, cap)


@pytest.mark.criterion(10)
@pytest.mark.parametrize("algebra,lams", [
    ("A1", (W, W)), ("A1", (W2,)), ("A1", (W, W, W)), ("A2", ((1, 1), (1, 0))),
])
def test_hilbert_double_computation(algebra, lams):
    passes("V12", algebra, lams, 1, 6)


@pytest.mark.criterion(10)
def test_hilbert_series_of_two_fundamentals():
    assert build_hw_algebra(build_root_system("A1"), [W, W], 6).hilbert == [1, 1, 2, 2, 3, 3, 4]
