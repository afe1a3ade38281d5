import json
import random
from fractions import Fraction

import pytest

from currentmods.verify import (
    ERROR,
    FAIL,
    INCONCLUSIVE,
    PASS,
    GRIDS,
    CheckResult,
    CheckSpec,
    draw_points,
    exit_status,
    point_configurations,
    quick_grid,
    report_json,
    run_check,
    run_suite,
    summary_table,
)

W = (1,)


def test_quick_grid_passes():
    results = run_suite(quick_grid())
    bad = [(r.spec.check, r.status, r.detail) for r in results if not r.ok]
    assert not bad
    assert exit_status(results) == 0


def test_empty_grid():
    results = run_suite(GRIDS["empty"]())
    assert results == [] and exit_status(results) == 0
    doc = json.loads(report_json(results, seed=3))
    assert doc["results"] == [] and doc["seed"] == 3


def test_unsupported_algebra_is_an_error_and_suite_continues():
    specs = [CheckSpec("V2", "B2", ((1, 0), (0, 1))), CheckSpec("V10", "A1", (W, W), 1, 3)]
    results = run_suite(specs)
    assert [r.status for r in results] == [ERROR, PASS]
    assert "B2" in results[0].detail["reason"]
    assert exit_status(results) == 1


def test_wrong_rank_is_an_error():
    assert run_check(CheckSpec("V2", "A2", (W,))).status == ERROR


def test_low_cap_is_inconclusive_not_pass():
    r = run_check(CheckSpec("V10", "A1", (W, W), 1, 0))
    assert r.status == INCONCLUSIVE
    assert exit_status([r]) == 1


def test_generic_fiber_rejects_colliding_points():
    r = run_check(CheckSpec("V5", "A1", (W, W), 1, 3, points=((1, 1),)))
    assert r.status == ERROR and "distinct" in r.detail["reason"]


def test_mismatch_reports_a_witness(monkeypatch):
    import currentmods.verify as v
    # pretend the local module were one degree shorter than it is
    real = v.demazure_local

    class Short:
        def __init__(self, D):
            self.D = D

        def character(self):
            return self.D.character().truncate(0)

    monkeypatch.setattr(v, "demazure_local", lambda rs, ell, lam: Short(real(rs, ell, lam)))
    r = run_check(CheckSpec("V2", "A1", (W, W), 1, 3))
    assert r.status == FAIL
    assert r.detail["witness"] == {"q": 1, "weight": [0], "left": 1, "right": 0}


def test_freeness_example():
    r = run_check(CheckSpec("V3", "A1", (W, W), 1, 4))
    assert r.status == PASS
    assert r.detail["hilbert"] == [1, 1, 2, 2, 3]
    assert r.detail["degrees_checked"] == "<= 4"


def test_dual_example():
    r = run_check(CheckSpec("V9", "A1", (W, W), 1, 2))
    assert r.status == PASS
    lead = [x for x in r.detail["dual"] if x["q"] <= 0]
    assert lead == [{"q": -1, "weight": [0], "coeff": 1}, {"q": 0, "weight": [-2], "coeff": 1},
                    {"q": 0, "weight": [0], "coeff": 2}, {"q": 0, "weight": [2], "coeff": 1}]


def test_reports_are_deterministic():
    specs = quick_grid(seed=5)[:4]
    a = report_json(run_suite(specs), seed=5)
    b = report_json(run_suite(specs, jobs=2), seed=5)
    assert a == b
    assert json.loads(a)["summary"][PASS] == 4


def test_parallel_keeps_spec_order():
    specs = [CheckSpec(c, "A1", (W, W), 1, 2) for c in ("V12", "V2", "V10")]
    assert [r.spec.check for r in run_suite(specs, jobs=3)] == ["V12", "V2", "V10"]


def test_check_spec_validation():
    with pytest.raises(ValueError):
        CheckSpec("V13", "A1", (W,))
    with pytest.raises(ValueError):
        CheckSpec("V1", "A1", ())
    with pytest.raises(ValueError):
        CheckSpec("V1", "A1", ((-1,),))
    with pytest.raises(ValueError):
        CheckSpec("V1", "A1", (W,), ell=0)
    d = CheckSpec("V4", "A1", (W, W), points=((Fraction(1, 2), 0),)).to_dict()
    assert d["points"] == [["1/2", "0"]]


def test_point_configurations():
    spec = CheckSpec("V4", "A1", (W, W, W), seed=11)
    configs = point_configurations(spec, 3)
    assert len(configs) == 3
    assert len(set(configs[0])) == 3
    assert configs[1][0] == configs[1][1]
    assert len(set(configs[2])) == 1 and configs[2][0] != 0
    assert configs == point_configurations(spec, 3)


def test_draw_points_are_small_rationals():
    pts = draw_points(random.Random(0), 8)
    assert len(set(pts)) == 8
    assert all(abs(p.numerator) <= 6 and p.denominator <= 3 for p in pts)


def test_summary_table_shape():
    r = CheckResult(CheckSpec("V2", "A1", (W, W)), FAIL, {}, 0.5)
    lines = summary_table([r]).splitlines()
    assert lines[0].split() == ["check", "algebra", "coweights", "level", "cap", "status", "seconds"]
    assert lines[1].split() == ["V2", "A1", "1;1", "1", "4", "fail", "0.50"]
