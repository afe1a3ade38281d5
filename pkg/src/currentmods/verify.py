"""Checks V1..V12 over a grid of cases, with deterministic JSON reports.

Every comparison is an exact equality of integer coefficients.  A check ends
in one of four states: ``pass``, ``fail`` (with the first mismatching
coefficient as witness), ``inconclusive`` (the cap is too small to decide),
or ``error`` (the case itself is outside what the engine supports).
"""

from __future__ import annotations

import json
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable, Sequence

from .character import Character
from .constructions import (
    InconclusiveAtCap,
    NotFree,
    cyclic_power_over_A,
    demazure_local,
    dual_character,
    expected_fat_character,
    fat_base_change,
    fiber_point,
    fiber_zero,
    fusion,
    global_demazure,
    hilbert_character,
)
from .hwalg import build_hw_algebra, check_surjection, hilbert_via_arrangement
from .modules import check_lie_action, evaluation_module, promote
from .oracle import oracle_character
from .rootsys import UnsupportedAlgebra, build_root_system

CHECKS = ("V1", "V2", "V3", "V4", "V5", "V6", "V7", "V8", "V9", "V10", "V11", "V12")

PASS, FAIL, INCONCLUSIVE, ERROR = "pass", "fail", "inconclusive", "error"


@dataclass(frozen=True)
class CheckSpec:
    check: str
    algebra: str
    lams: tuple[tuple[int, ...], ...]
    ell: int = 1
    cap: int = 4
    points: tuple[tuple[Fraction, ...], ...] = ()
    seed: int = 0

    def __post_init__(self):
        if self.check not in CHECKS:
            raise ValueError(f"unknown check {self.check!r}")
        if not self.lams:
            raise ValueError("a check needs at least one coweight")
        for lam in self.lams:
            if any(m < 0 for m in lam):
                raise ValueError(f"coweight {lam} is not dominant")
        if self.ell < 1 or self.cap < 0:
            raise ValueError("level must be positive and cap nonnegative")

    def to_dict(self) -> dict:
        return {
            "check": self.check,
            "algebra": self.algebra,
            "coweights": [list(l) for l in self.lams],
            "level": self.ell,
            "cap": self.cap,
            "points": [[_fmt_q(c) for c in p] for p in self.points],
            "seed": self.seed,
        }


@dataclass
class CheckResult:
    spec: CheckSpec
    status: str
    detail: dict = field(default_factory=dict)
    seconds: float = 0.0

    @property
    def ok(self) -> bool:
        return self.status == PASS

    def to_dict(self) -> dict:
        # timings are left out so that reports are byte-identical across runs
        return {"spec": self.spec.to_dict(), "status": self.status, "detail": self.detail}


def _fmt_q(c) -> str:
    c = Fraction(c)
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def _records(ch: Character) -> list[dict]:
    return ch.to_records()


def _compare(left: Character, right: Character, names=("left", "right"), **extra) -> tuple[str, dict]:
    bad = left.first_mismatch(right)
    detail = dict(extra)
    detail[names[0]] = _records(left)
    detail[names[1]] = _records(right)
    if bad is None:
        return PASS, detail
    detail["witness"] = bad
    return FAIL, detail


def _lam_sum(lams):
    return tuple(sum(c) for c in zip(*lams))


def _ungraded_product(chars: Iterable[Character], rank: int) -> Character:
    out = Character.monomial((0,) * rank)
    for ch in chars:
        out = out * ch.ungraded()
    return out


def draw_points(rng: random.Random, k: int, distinct: bool = True) -> tuple[Fraction, ...]:
    """Small rationals p/q with |p| <= 6, 1 <= q <= 3."""
    pool = sorted({Fraction(p, q) for p in range(-6, 7) for q in range(1, 4)})
    if distinct:
        return tuple(rng.sample(pool, k))
    return tuple(rng.choice(pool) for _ in range(k))


def point_configurations(spec: CheckSpec, k: int) -> list[tuple[Fraction, ...]]:
    """Explicit points, else three seeded configurations.

    The seeded ones are: pairwise distinct, a collision of the first two
    coordinates, and all coordinates equal to one nonzero point.
    """
    if spec.points:
        for p in spec.points:
            if len(p) != k:
                raise ValueError("point configuration has the wrong length")
        return [tuple(Fraction(c) for c in p) for p in spec.points]
    rng = random.Random(spec.seed)
    out = [draw_points(rng, k)]
    if k >= 2:
        p = list(draw_points(rng, k))
        p[1] = p[0]
        out.append(tuple(p))
    c = Fraction(0)
    while c == 0:
        c = draw_points(rng, 1)[0]
    out.append((c,) * k)
    return out


# ---------------------------------------------------------------- individual checks


def _v1(rs, spec):
    cap = spec.cap
    mods = {}
    for lam in sorted(set(spec.lams)):
        D = demazure_local(rs, spec.ell, lam)
        mods[D.label] = D
        mods[f"{D.label}[t]"] = promote(D, cap)
    lam = _lam_sum(spec.lams)
    D = demazure_local(rs, spec.ell, lam)
    mods[D.label] = D
    R = global_demazure(rs, spec.ell, spec.lams, cap)
    mods[R.label] = R
    mods[R.label + "|0"] = fiber_zero(R)
    checked = []
    for name, M in mods.items():
        bad = check_lie_action(M, smax=cap)
        checked.append({"module": name, "dim": M.dim})
        if bad is not None:
            return FAIL, {"modules": checked, "witness": dict(bad, module=name)}
    return PASS, {"modules": checked, "max_power_sum": cap}


def _v2(rs, spec):
    R = global_demazure(rs, spec.ell, spec.lams, spec.cap)
    F = fiber_zero(R).character()
    D = demazure_local(rs, spec.ell, _lam_sum(spec.lams)).character().truncate(spec.cap)
    return _compare(F, D, ("fiber_zero", "local_demazure"), degrees_checked=f"<= {spec.cap}")


def _v3(rs, spec):
    R = global_demazure(rs, spec.ell, spec.lams, spec.cap)
    F = fiber_zero(R).character()
    H = hilbert_character(R, spec.cap)
    return _compare(R.character(), F * H, ("global", "fiber_times_hilbert"),
                    hilbert=H.dims_by_degree(spec.cap), degrees_checked=f"<= {spec.cap}")


def _v4(rs, spec):
    k = len(spec.lams)
    configs = point_configurations(spec, k)
    R = global_demazure(rs, spec.ell, spec.lams, spec.cap)
    rows = []
    for c in configs:
        got = fiber_point(R, c).character
        groups: dict = {}
        for lam, cj in zip(spec.lams, c):
            groups.setdefault(cj, []).append(lam)
        expect = _ungraded_product(
            (demazure_local(rs, spec.ell, _lam_sum(g)).character() for g in groups.values()), rs.rank)
        row = {"points": [_fmt_q(x) for x in c], "fiber": _records(got), "expected": _records(expect)}
        bad = got.first_mismatch(expect)
        if bad is not None:
            row["witness"] = bad
            rows.append(row)
            return FAIL, {"configurations": rows}
        # splitting off the first factor, when its point is not shared
        if k >= 2 and c[0] not in c[1:]:
            left = global_demazure(rs, spec.ell, spec.lams[:1], spec.cap)
            right = global_demazure(rs, spec.ell, spec.lams[1:], spec.cap)
            prod = fiber_point(left, c[:1]).character * fiber_point(right, c[1:]).character
            bad = got.first_mismatch(prod)
            row["split_product"] = _records(prod)
            if bad is not None:
                row["witness"] = bad
                rows.append(row)
                return FAIL, {"configurations": rows}
        rows.append(row)
    return PASS, {"configurations": rows}


def _v5(rs, spec):
    k = len(spec.lams)
    rng = random.Random(spec.seed + 1)
    c = tuple(Fraction(x) for x in spec.points[0]) if spec.points else draw_points(rng, k)
    if len(set(c)) != k:
        raise ValueError("generic fiber needs pairwise distinct points")
    R = global_demazure(rs, spec.ell, spec.lams, spec.cap)
    got = fiber_point(R, c).character
    expect = _ungraded_product((demazure_local(rs, spec.ell, l).character() for l in spec.lams), rs.rank)
    status, detail = _compare(got, expect, ("fiber", "product"), points=[_fmt_q(x) for x in c])
    if status != PASS:
        return status, detail
    special = fiber_zero(R).character()
    if special.degree_slice(spec.cap):
        raise InconclusiveAtCap("special fiber reaches the cap; flatness cannot be compared")
    return _compare(got, special.ungraded(), ("fiber", "special_fiber"), points=[_fmt_q(x) for x in c])


def _v6(rs, spec):
    if spec.ell < 2:
        raise ValueError("V6 needs level >= 2")
    R = global_demazure(rs, 1, spec.lams, spec.cap)
    C = cyclic_power_over_A(R, spec.ell)
    G = global_demazure(rs, spec.ell, spec.lams, spec.cap)
    return _compare(C.character(), G.character(), ("power_over_A", "global_of_powers"))


def _v7(rs, spec):
    got = fat_base_change(rs, spec.ell, spec.lams, spec.cap).character()
    expect = expected_fat_character(rs, spec.ell, spec.lams, spec.cap)
    return _compare(got, expect, ("fat", "local_times_geometric"))


def _v8(rs, spec):
    mods = [evaluation_module(rs, rs.iota(l)) for l in spec.lams]
    k = len(mods)
    rng = random.Random(spec.seed)
    sets = [tuple(Fraction(x) for x in p) for p in spec.points] or [draw_points(rng, k) for _ in range(3)]
    chars = []
    for p in sets:
        chars.append(fusion(mods, p).character())
    detail = {"point_sets": [[_fmt_q(x) for x in p] for p in sets], "character": _records(chars[0])}
    for p, ch in zip(sets[1:], chars[1:]):
        bad = chars[0].first_mismatch(ch)
        if bad is not None:
            detail["witness"] = dict(bad, points=[_fmt_q(x) for x in p])
            return FAIL, detail
    if k >= 3:
        inner = fusion(mods[:2], sets[0][:2])
        nested = fusion([inner] + mods[2:], sets[0][1:]).character()
        bad = nested.first_mismatch(chars[0])
        detail["nested"] = _records(nested)
        if bad is not None:
            detail["witness"] = bad
            return FAIL, detail
    return PASS, detail


# leading terms q^{-1} + (z^2 + 2 + z^{-2}) of the dual of the global Weyl module W_{2 omega} for sl_2
_DUAL_LEADING = {((0,), -1): 1, ((2,), 0): 1, ((0,), 0): 2, ((-2,), 0): 1}


def _v9(rs, spec):
    R = global_demazure(rs, spec.ell, spec.lams, spec.cap)
    try:
        dual = dual_character(R, spec.cap)
    except NotFree as exc:
        return FAIL, {"reason": str(exc)}
    detail = {"dual": _records(dual)}
    # independent expansion: arrangement Hilbert series times the reversed special fiber
    H = Character.series(hilbert_via_arrangement(rs, spec.lams, 2 * spec.cap), rs.rank, cap=2 * spec.cap)
    other = (H * fiber_zero(R).character().q_inverse()).truncate(spec.cap, low=-spec.cap)
    bad = dual.first_mismatch(other)
    if bad is not None:
        detail["witness"] = bad
        return FAIL, detail
    for q in dual.q_degrees():
        if not Character({(w, 0): c for w, c in dual.degree_slice(q).items()}).is_weyl_invariant(rs):
            detail["witness"] = {"q": q, "reason": "slice is not Weyl invariant"}
            return FAIL, detail
    if rs.type_label == "A1" and spec.ell == 1 and sorted(spec.lams) == [(1,), (1,)]:
        lead = Character(_DUAL_LEADING, rank=1)
        got = dual.truncate(0, low=-1)
        bad = got.first_mismatch(lead)
        detail["expected_leading"] = _records(lead)
        if bad is not None:
            detail["witness"] = bad
            return FAIL, detail
    return PASS, detail


def _v10(rs, spec):
    R = global_demazure(rs, spec.ell, spec.lams, spec.cap)
    F = fiber_zero(R).character()
    expect = 1
    for l in spec.lams:
        expect *= demazure_local(rs, spec.ell, l).dim
    detail = {"fiber_dim": F.dimension(), "product_of_dims": expect, "fiber": _records(F)}
    if F.dimension() == expect:
        return PASS, detail
    if F.dimension() < expect and F.degree_slice(spec.cap):
        raise InconclusiveAtCap(f"fiber has dimension {F.dimension()} < {expect} and reaches the cap")
    detail["witness"] = {"left": F.dimension(), "right": expect}
    return FAIL, detail


def _v11(rs, spec):
    out = []
    for lam in spec.lams:
        o = oracle_character(rs, spec.ell, lam, spec.cap)
        e = demazure_local(rs, spec.ell, lam).character().truncate(spec.cap)
        status, detail = _compare(o, e, ("oracle", "engine"), coweight=list(lam))
        out.append(detail)
        if status != PASS:
            return status, {"items": out}
    return PASS, {"items": out}


def _v12(rs, spec):
    a = build_hw_algebra(rs, spec.lams, spec.cap).hilbert
    b = hilbert_via_arrangement(rs, spec.lams, spec.cap)
    detail = {"generated": a, "arrangement": b}
    if a != b:
        d = next(i for i in range(len(a)) if a[i] != b[i])
        detail["witness"] = {"q": d, "left": a[d], "right": b[d]}
        return FAIL, detail
    surj = check_surjection(rs, spec.lams, spec.cap)
    detail["surjection"] = surj
    if not surj["ok"]:
        detail["witness"] = {"q": surj["witness_degree"], "reason": surj["reason"]}
        return FAIL, detail
    return PASS, detail


_RUNNERS: dict[str, Callable] = {
    "V1": _v1, "V2": _v2, "V3": _v3, "V4": _v4, "V5": _v5, "V6": _v6,
    "V7": _v7, "V8": _v8, "V9": _v9, "V10": _v10, "V11": _v11, "V12": _v12,
}

# checks that only need root-system data, not the module engine
_NO_ENGINE = {"V12"}


def run_check(spec: CheckSpec) -> CheckResult:
    t0 = time.perf_counter()
    try:
        rs = build_root_system(spec.algebra)
        if spec.check not in _NO_ENGINE:
            rs.require_engine()
        for lam in spec.lams:
            if len(lam) != rs.rank:
                raise ValueError(f"coweight {list(lam)} has the wrong rank for {spec.algebra}")
        status, detail = _RUNNERS[spec.check](rs, spec)
    except InconclusiveAtCap as exc:
        status, detail = INCONCLUSIVE, {"reason": str(exc)}
    except (UnsupportedAlgebra, ValueError) as exc:
        status, detail = ERROR, {"reason": str(exc)}
    return CheckResult(spec, status, detail, time.perf_counter() - t0)


def run_suite(specs: Sequence[CheckSpec], jobs: int = 1) -> list[CheckResult]:
    """Run every spec; results come back in spec order regardless of scheduling."""
    specs = list(specs)
    if jobs <= 1 or len(specs) <= 1:
        return [run_check(s) for s in specs]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(run_check, specs))


def exit_status(results: Sequence[CheckResult]) -> int:
    return 0 if all(r.ok for r in results) else 1


def report_json(results: Sequence[CheckResult], seed: int | None = None) -> str:
    counts = {s: sum(r.status == s for r in results) for s in (PASS, FAIL, INCONCLUSIVE, ERROR)}
    doc = {"seed": seed, "summary": counts, "results": [r.to_dict() for r in results]}
    return json.dumps(doc, indent=1, sort_keys=True)


def summary_table(results: Sequence[CheckResult], timings: bool = True) -> str:
    rows = [("check", "algebra", "coweights", "level", "cap", "status", "seconds")]
    for r in results:
        s = r.spec
        rows.append((s.check, s.algebra, ";".join(",".join(map(str, l)) for l in s.lams),
                     str(s.ell), str(s.cap), r.status, f"{r.seconds:.2f}" if timings else "-"))
    widths = [max(len(row[i]) for row in rows) for i in range(len(rows[0]))]
    lines = ["  ".join(c.ljust(w) for c, w in zip(row, widths)).rstrip() for row in rows]
    return "\n".join(lines)


# ---------------------------------------------------------------- grids

A1_W, A1_2W, A1_3W = (1,), (2,), (3,)
GRID_A1 = [(A1_W, A1_W), (A1_2W, A1_W), (A1_W, A1_W, A1_W)]
GRID_A2 = [((1, 0), (0, 1)), ((1, 1), (1, 0))]


def default_grid(seed: int = 0) -> list[CheckSpec]:
    """The desk grid covering every acceptance check."""
    out: list[CheckSpec] = []
    items = [("A1", lams, ell, 5) for lams in GRID_A1 for ell in (1, 2)]
    items += [("A2", lams, 1, 4) for lams in GRID_A2]
    for n, (alg, lams, ell, cap) in enumerate(items):
        for chk in ("V1", "V2", "V3", "V4", "V5", "V7", "V10"):
            out.append(CheckSpec(chk, alg, lams, ell, cap, seed=seed + n))
    out.append(CheckSpec("V6", "A1", (A1_W, A1_W), 2, 4, seed=seed))
    for n, lams in enumerate([(A1_W, A1_W, A1_W), (A1_2W, A1_W, A1_W), (A1_W, A1_2W, A1_3W)]):
        out.append(CheckSpec("V8", "A1", lams, 1, 0, seed=seed + n))
    out.append(CheckSpec("V9", "A1", (A1_W, A1_W), 1, 2, seed=seed))
    out.append(CheckSpec("V9", "A1", (A1_W, A1_W), 1, 4, seed=seed))
    for ell in (1, 2):
        out.append(CheckSpec("V11", "A1", (A1_W, A1_2W, A1_3W), ell, 6, seed=seed))
    out.append(CheckSpec("V11", "A2", ((1, 0), (1, 1)), 1, 6, seed=seed))
    for lams in [(A1_W, A1_W), (A1_2W,), (A1_W, A1_W, A1_W)]:
        out.append(CheckSpec("V12", "A1", lams, 1, 6, seed=seed))
    out.append(CheckSpec("V12", "A2", ((1, 1), (1, 0)), 1, 6, seed=seed))
    return out


def quick_grid(seed: int = 0) -> list[CheckSpec]:
    """A small grid exercising every check once, for smoke runs."""
    out = [CheckSpec(c, "A1", (A1_W, A1_W), 1, 3, seed=seed) for c in
           ("V1", "V2", "V3", "V4", "V5", "V7", "V9", "V10", "V12")]
    out.append(CheckSpec("V6", "A1", (A1_W, A1_W), 2, 3, seed=seed))
    out.append(CheckSpec("V8", "A1", (A1_W, A1_W, A1_W), 1, 0, seed=seed))
    out.append(CheckSpec("V11", "A1", (A1_2W,), 1, 4, seed=seed))
    return out


GRIDS = {"default": default_grid, "quick": quick_grid, "empty": lambda seed=0: []}
