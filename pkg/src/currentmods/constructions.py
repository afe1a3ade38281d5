"""Fusion products, local and global Demazure modules, fibers and base changes."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

from .character import Character
from .hwalg import build_hw_algebra
from .linalg import QQ, Vec, axpy
from .modules import (
    CurrentModule,
    MatrixModule,
    QuotientModule,
    SubModule,
    TensorModule,
    chevalley_generators,
    cyclic_span,
    evaluation_module,
    materialize,
    promote,
    staged_closure,
    submodule_generated,
    twist,
    TrivialModule,
)
from .rootsys import Coweight, RootSystem, add, scale


class InconclusiveAtCap(RuntimeError):
    """The degree cap is too small to decide the requested quantity."""


class NotFree(RuntimeError):
    """The global module failed the freeness check over its highest-weight algebra."""


# ---------------------------------------------------------------- fusion


def fusion(modules: Sequence[CurrentModule], points=None, label: str = "") -> MatrixModule:
    """Associated graded of ``(x) M_i(c_i)`` for the filtration by t-degree.

    Each M_i must be a graded, finite, cyclic module.  The filtration on the
    twisted tensor product T is ``F_d = span{ x_1 t^{s_1} ... x_n t^{s_n} v :
    sum s_j <= d }``; it is computed stage by stage and the graded pieces are
    materialized with the induced action.
    """
    modules = list(modules)
    if not modules:
        raise ValueError("fusion needs at least one module")
    if points is None:
        points = range(len(modules))
    points = [QQ(c) for c in points]
    if len(points) != len(modules):
        raise ValueError("need one point per module")
    if len(set(points)) != len(points):
        raise ValueError("fusion points must be pairwise distinct")
    for M in modules:
        if not M.graded or M.truncated or not M.cyclic:
            raise ValueError("fusion factors must be graded, finite and cyclic")
    rs = modules[0].rs
    T = TensorModule([twist(M, c) for M, c in zip(modules, points)])
    blocks = staged_closure(T, [(0, T.cyclic)], by_degree=False, stop_dim=T.dim)
    if sum(len(e) for e in blocks.values()) != T.dim:
        raise ValueError("tensor product of the twisted factors is not cyclic")
    rows = []  # (stage, weight, row index)
    for wt, ech in blocks.items():
        for r, st in enumerate(ech.stages):
            rows.append((st, wt, r))
    rows.sort(key=lambda t: (t[0], tuple(-c for c in t[1]), t[2]))
    pos = {(wt, r): n for n, (_, wt, r) in enumerate(rows)}
    top = max(st for st, _, _ in rows)
    tables = {}
    for x in chevalley_generators(rs):
        for s in range(top + 1):
            col = []
            for st, wt, r in rows:
                out: Vec = {}
                if st + s <= top:
                    v = T.act(x, s, blocks[wt].rows[r])
                    if v:
                        nwt = T.weights[next(iter(v))]
                        ech = blocks[nwt]
                        for rr, c in ech.coordinates(v).items():
                            nst = ech.stages[rr]
                            if nst > st + s:
                                raise ArithmeticError("filtration is not respected by the action")
                            if nst == st + s:
                                out[pos[(nwt, rr)]] = c
                col.append(out)
            tables[(x, s)] = col
    cyc = T.cyclic
    wt0 = T.weights[next(iter(cyc))]
    r0 = blocks[wt0].coordinates(cyc)
    cyclic = {pos[(wt0, r)]: c for r, c in r0.items()}
    return MatrixModule(rs, [w for _, w, _ in rows], [st for st, _, _ in rows], tables,
                        s_bound=top + 1, cyclic=cyclic,
                        label=label or "*".join(M.label for M in modules))


# ---------------------------------------------------------------- local Demazure modules


def cyclic_power(M: CurrentModule, ell: int, label: str = "") -> CurrentModule:
    """Cyclic span of ``v^{(x) ell}`` in ``M^{(x) ell}``."""
    if ell < 1:
        raise ValueError("level must be positive")
    if ell == 1:
        return M
    T = TensorModule([M] * ell)
    S = cyclic_span(T, T.cyclic, label=label)
    if S.graded and not S.truncated:
        return materialize(S, label=label or f"{M.label}^{ell}")
    return S


@lru_cache(maxsize=None)
def _demazure_local(rs: RootSystem, ell: int, lam: Coweight) -> MatrixModule:
    rs.require_engine()
    lam_w = rs.iota(lam)
    if not any(lam_w):
        base = materialize(TrivialModule(rs))
    else:
        parts = [evaluation_module(rs, rs.fundamental(i)) for i, m in enumerate(lam_w) for _ in range(m)]
        base = fusion(parts) if len(parts) > 1 else materialize(parts[0])
    out = cyclic_power(base, ell)
    if not isinstance(out, MatrixModule):
        out = materialize(out)
    out.label = f"D({ell},{list(lam)})"
    return out


def demazure_local(rs: RootSystem, ell: int, lam: Coweight) -> MatrixModule:
    """Local Demazure module D_{ell, lam}: the ell-th cyclic power of D_{1, lam}."""
    lam = tuple(lam)
    if len(lam) != rs.rank or not rs.is_dominant(lam):
        raise ValueError(f"coweight {lam} is not dominant for {rs.type_label}")
    return _demazure_local(rs, ell, lam)


# ---------------------------------------------------------------- global modules


class GlobalModule(SubModule):
    """Cyclic span of ``(x)_j (v_j (x) 1)`` inside ``(x)_j M_j[t]`` up to degree ``cap``.

    The right action of ``C[z_1..z_k]`` shifts the t-power of factor j; the
    highest-weight algebra acts through it.
    """

    def __init__(self, factors: Sequence[CurrentModule], cap: int, label: str = ""):
        self.factors = list(factors)
        self.promoted = [promote(M, cap) for M in self.factors]
        A = TensorModule(self.promoted, cap=cap)
        blocks = staged_closure(A, [(0, A.cyclic)], by_degree=True, stage_cap=cap)
        super().__init__(A, blocks, by_degree=True, cyclic=A.cyclic,
                         label=label or "R(" + ",".join(M.label for M in self.factors) + ")")
        self.factor_weights = [M.cyclic_weight for M in self.factors]

    @property
    def k(self) -> int:
        return len(self.factors)

    def _z_power_ambient(self, j: int, n: int, v: Vec) -> Vec:
        A = self.ambient
        out: Vec = {}
        for idx, c in self.to_ambient(v).items():
            key = A.keys[idx]
            nk = self.promoted[j].shift(key[j], n)
            if nk is None:
                continue
            nidx = A.index.get(key[:j] + (nk,) + key[j + 1:])
            if nidx is not None:
                axpy(out, c, {nidx: 1})
        return out

    def hw_generator(self, s: int, i: int, v: Vec) -> Vec:
        """``v . p_{s,i}`` with ``p_{s,i} = sum_j <wt(v_j), h_i> z_j^s``.

        R is stable under A but not under the single variables z_j, so the
        sum is formed in the ambient tensor product first.
        """
        out: Vec = {}
        for j, wt in enumerate(self.factor_weights):
            if wt[i]:
                axpy(out, wt[i], self._z_power_ambient(j, s, v))
        return self.coordinates(out)

    def hw_algebra(self, cap: int | None = None):
        return build_hw_algebra(self.rs, self.factor_weights, self.cap if cap is None else cap, weights=True)

    def rebuilt(self, cap: int) -> "GlobalModule":
        return GlobalModule(self.factors, cap, label=self.label)


def global_module(modules: Sequence[CurrentModule], cap: int, label: str = "") -> GlobalModule:
    return GlobalModule(modules, cap, label)


def global_demazure(rs: RootSystem, ell: int, lams: Sequence[Coweight], cap: int) -> GlobalModule:
    """Global module built from the local Demazure modules D_{ell, lam_j}."""
    Ms = [demazure_local(rs, ell, lam) for lam in lams]
    label = f"DD({ell};" + ";".join(str(list(l)) for l in lams) + ")"
    return GlobalModule(Ms, cap, label)


# ---------------------------------------------------------------- fibers


def fiber_zero(R: GlobalModule) -> QuotientModule:
    """``R / R . A_+``, generated by the relators ``h_i t^s v`` with s >= 1."""
    seeds = []
    for i in range(R.rs.rank):
        for s in range(1, R.cap + 1):
            v = R.act(("h", i), s, R.cyclic)
            if v:
                seeds.append((s, v))
    blocks = staged_closure(R, seeds, by_degree=True, stage_cap=R.cap)
    return QuotientModule(R, blocks, by_degree=True, label=f"{R.label}|0")


def _point_quotient_dims(R: GlobalModule, c: Sequence) -> Character:
    weights = R.factor_weights
    seeds = []
    for i in range(R.rs.rank):
        for s in range(1, R.cap + 1):
            kappa = sum((wt[i] * (-QQ(cj)) ** s for wt, cj in zip(weights, c)), QQ(0))
            v = R.act(("h", i), s, R.cyclic)
            axpy(v, -kappa, R.cyclic)
            if v:
                seeds.append((s, v))
    blocks = staged_closure(R, seeds, by_degree=False, stage_cap=R.cap)
    terms: dict = {}
    for w in R.weights:
        terms[(w, 0)] = terms.get((w, 0), 0) + 1
    for w, ech in blocks.items():
        terms[(w, 0)] -= len(ech)
    return Character(terms, rank=R.rs.rank)


@dataclass
class FiberResult:
    character: Character  # ungraded
    cap: int
    stable: bool

    @property
    def dim(self) -> int:
        return self.character.dimension()


def fiber_point(R: GlobalModule, c: Sequence) -> FiberResult:
    """Ungraded character of the fiber of R at ``z = c``.

    The fiber is cut out by ``h_i t^s v = (sum_j <wt(v_j), h_i> (-c_j)^s) v``.
    It is computed from the truncation at the cap and again one degree
    higher; a difference raises :class:`InconclusiveAtCap`.
    """
    c = [QQ(x) for x in c]
    if len(c) != R.k:
        raise ValueError("need one coordinate per factor")
    lo = _point_quotient_dims(R, c)
    hi = _point_quotient_dims(R.rebuilt(R.cap + 1), c)
    if lo != hi:
        raise InconclusiveAtCap(f"fiber at {c} not stable between caps {R.cap} and {R.cap + 1}")
    return FiberResult(lo, R.cap, True)


# ---------------------------------------------------------------- A-module constructions


def cyclic_power_over_A(R: GlobalModule, ell: int) -> SubModule:
    """Cyclic span of ``v^{(x) ell}`` in the ell-fold tensor power of R over its highest-weight algebra.

    The tensor power over A is ``R^{(x) ell}`` modulo the relators
    ``(.. b a (x) b' ..) - (.. b (x) b' a ..)`` for adjacent positions and
    generators ``a`` of A, closed under g[t].
    """
    if ell < 1:
        raise ValueError("level must be positive")
    T = TensorModule([R] * ell, cap=R.cap)
    if ell == 1:
        return cyclic_span(T, T.cyclic, label=f"{R.label}^1")
    cap = R.cap
    seeds = []
    for j in range(T.dim):
        key, deg = T.keys[j], T.degrees[j]
        for s in range(1, cap - deg + 1):
            for i in range(R.rs.rank):
                for p in range(ell - 1):
                    rel: Vec = {}
                    for side, sign in ((p, 1), (p + 1, -1)):
                        moved = R.hw_generator(s, i, {key[side]: QQ(1)})
                        for b, cb in moved.items():
                            nk = key[:side] + (b,) + key[side + 1:]
                            idx = T.index.get(nk)
                            if idx is not None:
                                axpy(rel, sign * cb, {idx: 1})
                    if rel:
                        seeds.append((deg + s, rel))
    blocks = staged_closure(T, seeds, by_degree=True, stage_cap=cap)
    Q = QuotientModule(T, blocks, by_degree=True, label=f"{R.label}^(x)A{ell}")
    return cyclic_span(Q, Q.cyclic, label=f"{R.label}^{ell}")


def fat_base_change(rs: RootSystem, ell: int, lams: Sequence[Coweight], cap: int) -> SubModule:
    """Submodule of ``(x)_j D_{ell, lam_j}[t]`` generated by all highest-weight vectors.

    The highest-weight space of each factor is ``v_j (x) C[t]``, so the seeds
    are the pure tensors ``(x)_j (v_j (x) t^{a_j})`` with ``sum a_j <= cap``.
    """
    Ms = [demazure_local(rs, ell, lam) for lam in lams]
    P = [promote(M, cap) for M in Ms]
    A = TensorModule(P, cap=cap)
    hw = []
    for M in Ms:
        (m,) = M.cyclic
        hw.append(m)
    seeds = []
    for a in itertools.product(range(cap + 1), repeat=len(Ms)):
        if sum(a) > cap:
            continue
        key = tuple(Pj.index[(m, aj)] for Pj, m, aj in zip(P, hw, a))
        seeds.append({A.index[key]: QQ(1)})
    return submodule_generated(A, seeds, label="fat(" + ";".join(str(list(l)) for l in lams) + ")")


# ---------------------------------------------------------------- characters


def hilbert_character(R: GlobalModule, cap: int) -> Character:
    return Character.series(R.hw_algebra(cap).hilbert, R.rs.rank, cap=cap)


def freeness_defect(R: GlobalModule):
    """First mismatch between ch R and ch(R|_0) * Hilb(A), or None."""
    F = fiber_zero(R).character()
    prod = F * hilbert_character(R, R.cap)
    return R.character().first_mismatch(prod)


def dual_character(R: GlobalModule, D: int | None = None) -> Character:
    """Character of the graded dual, truncated to q-degrees in ``[-D, D]``.

    Uses ``ch R^* = Hilb(A)(q) * ch(R|_0)(q^{-1})``, which needs R to be free
    over A; this is checked up to the cap first.
    """
    if D is None:
        D = R.cap
    if D > R.cap:
        raise InconclusiveAtCap("dual character requested beyond the cap")
    bad = freeness_defect(R)
    if bad is not None:
        raise NotFree(f"module is not free over its highest-weight algebra: {bad}")
    F = fiber_zero(R).character()
    H = hilbert_character(R, D + R.cap)
    return (H * F.q_inverse()).truncate(D, low=-D)


def expected_fat_character(rs: RootSystem, ell: int, lams: Sequence[Coweight], cap: int) -> Character:
    lam = tuple(sum(l[i] for l in lams) for i in range(rs.rank))
    return demazure_local(rs, ell, lam).character().truncate(cap).geometric(len(lams))


def lam_sum(lams: Sequence[Coweight]) -> Coweight:
    lams = [tuple(l) for l in lams]
    out = lams[0]
    for l in lams[1:]:
        out = add(out, l)
    return out


def level_weight(rs: RootSystem, ell: int, lam: Coweight):
    return scale(ell, rs.iota(tuple(lam)))
