"""Finite (or degree-truncated) modules over the current algebra g[t].

Every module exposes a basis with a weight and a degree per vector, and the
action of the Chevalley generators ``x (x) t^s`` as sparse rational vectors.
Actions are computed lazily and cached per basis vector.  Two kinds of
objects appear:

* finite modules: the whole module is stored (``cap is None``);
* truncations: all basis vectors of degree ``<= cap`` of a graded module,
  with actions that would leave the truncation dropped.  Such truncations are
  exact degreewise because every generator has nonnegative degree.

``s_bound`` is the number of t-powers that generate the action: the
operators ``x t^s`` with ``s >= s_bound`` are either zero or linear
combinations of lower ones.
"""

from __future__ import annotations

import heapq
import itertools
from functools import lru_cache
from math import comb
from typing import Iterable, Sequence

from .character import Character
from .linalg import QQ, Echelon, Vec, axpy
from .rootsys import RootSystem, Weight, add, build_root_system

Gen = tuple[str, int]


def chevalley_generators(rs: RootSystem) -> list[Gen]:
    return [(k, i) for k in ("e", "f", "h") for i in range(rs.rank)]


def generator_weight(rs: RootSystem, x: Gen) -> Weight:
    kind, i = x
    if kind == "e":
        return rs.simple_root(i)
    if kind == "f":
        return tuple(-c for c in rs.simple_root(i))
    return rs.zero()


class CurrentModule:
    """Base class; subclasses fill in the basis data and ``_act_basis``."""

    rs: RootSystem
    weights: list[Weight]
    degrees: list[int]
    graded: bool = True
    cap: int | None = None
    s_bound: int = 1
    cyclic: Vec | None = None
    label: str = ""

    def _init_cache(self):
        self._cache: dict = {}

    @property
    def dim(self) -> int:
        return len(self.weights)

    @property
    def truncated(self) -> bool:
        return self.cap is not None

    @property
    def max_degree(self) -> int:
        return max(self.degrees, default=0)

    def _act_basis(self, x: Gen, s: int, i: int) -> Vec:
        raise NotImplementedError

    def act_basis(self, x: Gen, s: int, i: int) -> Vec:
        key = (x, s, i)
        out = self._cache.get(key)
        if out is None:
            out = self._act_basis(x, s, i)
            if self.cap is not None:
                out = {k: c for k, c in out.items() if self.degrees[k] <= self.cap}
            self._cache[key] = out
        return out

    def act(self, x: Gen, s: int, v: Vec) -> Vec:
        out: Vec = {}
        for i, c in v.items():
            axpy(out, c, self.act_basis(x, s, i))
        return out

    def act_word(self, word: Sequence[tuple[Gen, int]], v: Vec) -> Vec:
        """Apply ``word[0] word[1] ... word[-1]`` (rightmost first)."""
        for x, s in reversed(word):
            v = self.act(x, s, v)
        return v

    def block_key(self, i: int, by_degree: bool | None = None):
        if by_degree is None:
            by_degree = self.graded
        return (self.weights[i], self.degrees[i]) if by_degree else self.weights[i]

    @property
    def cyclic_weight(self) -> Weight | None:
        if not self.cyclic:
            return None
        return self.weights[next(iter(self.cyclic))]

    def character(self) -> Character:
        if not self.graded:
            raise ValueError("module is not graded; use ungraded_character")
        terms: dict = {}
        for w, d in zip(self.weights, self.degrees):
            terms[(w, d)] = terms.get((w, d), 0) + 1
        return Character(terms, cap=self.cap, rank=self.rs.rank)

    def ungraded_character(self) -> Character:
        terms: dict = {}
        for w in self.weights:
            terms[(w, 0)] = terms.get((w, 0), 0) + 1
        return Character(terms, cap=None, rank=self.rs.rank)

    def dims_table(self) -> list[dict]:
        """Dimension per (weight, degree) in the character record layout."""
        if self.graded:
            return self.character().to_records()
        return self.ungraded_character().to_records()

    def __repr__(self):
        return f"<{type(self).__name__} {self.label} dim={self.dim} graded={self.graded} cap={self.cap}>"


class MatrixModule(CurrentModule):
    """Fully materialized graded finite module."""

    def __init__(self, rs, weights, degrees, tables, s_bound, cyclic=None, label=""):
        self.rs = rs
        self.weights = list(weights)
        self.degrees = list(degrees)
        self.tables = tables  # {(x, s): list[Vec]}
        self.s_bound = s_bound
        self.cyclic = cyclic
        self.graded = True
        self.cap = None
        self.label = label
        self._init_cache()

    def _act_basis(self, x, s, i):
        col = self.tables.get((x, s))
        if col is None:
            return {}
        return dict(col[i])


def materialize(M: CurrentModule, label: str | None = None) -> MatrixModule:
    """Freeze a graded finite module into explicit action tables."""
    if not M.graded or M.truncated:
        raise ValueError("only graded finite modules can be materialized")
    smax = max(M.max_degree + 1, 1)
    tables = {}
    for x in chevalley_generators(M.rs):
        for s in range(smax):
            tables[(x, s)] = [M.act_basis(x, s, i) for i in range(M.dim)]
    return MatrixModule(M.rs, M.weights, M.degrees, tables, smax,
                        cyclic=dict(M.cyclic) if M.cyclic else None,
                        label=label if label is not None else M.label)


class FundamentalModule(CurrentModule):
    """Exterior power of the vector representation of sl_{r+1}, in degree 0."""

    def __init__(self, rs: RootSystem, k: int):
        rs.require_engine()
        n = rs.rank + 1
        if not 1 <= k <= rs.rank:
            raise ValueError("fundamental index out of range")
        self.rs = rs
        self.subsets = list(itertools.combinations(range(1, n + 1), k))
        self.index = {S: j for j, S in enumerate(self.subsets)}
        self.weights = [
            tuple(int(i in S) - int(i + 1 in S) for i in range(1, n)) for S in self.subsets
        ]
        self.degrees = [0] * len(self.subsets)
        self.graded = True
        self.cap = None
        self.s_bound = 1
        self.cyclic = {0: QQ(1)}
        self.label = f"L{k}"
        self._init_cache()

    def _act_basis(self, x, s, j):
        if s > 0:
            return {}
        kind, i = x
        a = i + 1  # 1-based simple index
        S = self.subsets[j]
        if kind == "h":
            c = self.weights[j][i]
            return {j: QQ(c)} if c else {}
        src, dst = (a + 1, a) if kind == "e" else (a, a + 1)
        if src in S and dst not in S:
            T = tuple(sorted((set(S) - {src}) | {dst}))
            return {self.index[T]: QQ(1)}
        return {}


class TrivialModule(CurrentModule):
    def __init__(self, rs: RootSystem):
        self.rs = rs
        self.weights = [rs.zero()]
        self.degrees = [0]
        self.graded = True
        self.cap = None
        self.s_bound = 1
        self.cyclic = {0: QQ(1)}
        self.label = "triv"
        self._init_cache()

    def _act_basis(self, x, s, i):
        return {}


@lru_cache(maxsize=None)
def irreducible(type_label: str, mu: Weight) -> MatrixModule:
    """Irreducible g-module V_mu, placed in degree 0 (evaluation at 0).

    Fundamental weights use exterior powers; other dominant weights are cut
    out as the Cartan component of a tensor product of fundamentals.
    """
    rs = build_root_system(type_label)
    rs.require_engine()
    mu = tuple(mu)
    if len(mu) != rs.rank or not rs.is_dominant(mu):
        raise ValueError(f"weight {mu} is not dominant for {type_label}")
    if sum(mu) == 0:
        return materialize(TrivialModule(rs), label="V0")
    if sum(mu) == 1:
        return materialize(FundamentalModule(rs, mu.index(1) + 1), label=f"V{list(mu)}")
    factors = [FundamentalModule(rs, i + 1) for i, m in enumerate(mu) for _ in range(m)]
    T = TensorModule(factors)
    sub = cyclic_span(T, T.cyclic)
    return materialize(sub, label=f"V{list(mu)}")


class EvaluationModule(CurrentModule):
    """V_mu with ``x t^s`` acting by ``c^s x``; graded exactly when c = 0."""

    def __init__(self, rs: RootSystem, mu: Weight, c=0):
        self.base = irreducible(rs.type_label, tuple(mu))
        self.rs = rs
        self.c = QQ(c)
        self.weights = self.base.weights
        self.degrees = self.base.degrees
        self.graded = self.c == 0
        self.cap = None
        self.s_bound = 1
        self.cyclic = dict(self.base.cyclic)
        self.label = f"V{list(mu)}({self.c})"
        self._init_cache()

    def _act_basis(self, x, s, i):
        v = self.base.act_basis(x, 0, i)
        if s == 0:
            return dict(v)
        f = self.c ** s
        return {k: f * c for k, c in v.items()} if f else {}


def evaluation_module(rs: RootSystem, mu: Weight, c=0) -> EvaluationModule:
    return EvaluationModule(rs, mu, c)


class TwistedModule(CurrentModule):
    """M(c): ``x t^i`` acts as ``x (t - c)^i`` does on M."""

    def __init__(self, M: CurrentModule, c):
        if M.truncated:
            raise ValueError("cannot twist a truncated module")
        self.M = M
        self.rs = M.rs
        self.c = QQ(c)
        self.weights = M.weights
        self.degrees = M.degrees
        self.graded = False
        self.cap = None
        self.s_bound = M.s_bound
        self.cyclic = dict(M.cyclic) if M.cyclic else None
        self.label = f"{M.label}({self.c})"
        self._init_cache()

    def _act_basis(self, x, s, i):
        out: Vec = {}
        m = -self.c
        for j in range(s + 1):
            if self.M.graded and j > self.M.max_degree:
                break
            coef = comb(s, j) * m ** (s - j)
            if coef:
                axpy(out, coef, self.M.act_basis(x, j, i))
        return out


def twist(M: CurrentModule, c) -> CurrentModule:
    if QQ(c) == 0:
        return M
    return TwistedModule(M, c)


class TensorModule(CurrentModule):
    """Tensor product with the Leibniz action, optionally truncated at total degree ``cap``."""

    def __init__(self, factors: Sequence[CurrentModule], cap: int | None = None):
        if not factors:
            raise ValueError("empty tensor product")
        rs = factors[0].rs
        if any(F.rs != rs for F in factors):
            raise ValueError("factors over different root systems")
        self.factors = list(factors)
        self.rs = rs
        self.graded = all(F.graded for F in factors)
        if cap is not None and not self.graded:
            raise ValueError("only graded tensor products can be truncated")
        caps = [F.cap for F in factors if F.cap is not None]
        if caps:
            cap = min([cap] + caps) if cap is not None else min(caps)
        self.cap = cap
        self.keys: list[tuple[int, ...]] = []
        self.weights = []
        self.degrees = []
        self._enumerate()
        self.index = {k: j for j, k in enumerate(self.keys)}
        if self.cap is not None:
            self.s_bound = self.cap + 1
        elif self.graded:
            self.s_bound = max(F.s_bound for F in factors)
        else:
            self.s_bound = sum(F.s_bound for F in factors)
        if all(F.cyclic for F in factors):
            vec: Vec = {}
            for combo in itertools.product(*(F.cyclic.items() for F in factors)):
                key = tuple(i for i, _ in combo)
                c = QQ(1)
                for _, a in combo:
                    c *= a
                if key in self.index:
                    axpy(vec, 1, {self.index[key]: c})
            self.cyclic = vec or None
        else:
            self.cyclic = None
        self.label = "(x)".join(F.label for F in factors)
        self._init_cache()

    def _enumerate(self):
        cap = self.cap
        order = [sorted(range(F.dim), key=lambda i, F=F: (F.degrees[i], i)) for F in self.factors]

        def rec(pos, key, wt, deg):
            if pos == len(self.factors):
                self.keys.append(tuple(key))
                self.weights.append(wt)
                self.degrees.append(deg)
                return
            F = self.factors[pos]
            for i in order[pos]:
                d = deg + F.degrees[i]
                if cap is not None and d > cap:
                    break
                key.append(i)
                rec(pos + 1, key, add(wt, F.weights[i]), d)
                key.pop()

        rec(0, [], self.rs.zero(), 0)

    def _act_basis(self, x, s, j):
        key = self.keys[j]
        out: Vec = {}
        for pos, F in enumerate(self.factors):
            for i, c in F.act_basis(x, s, key[pos]).items():
                nk = key[:pos] + (i,) + key[pos + 1:]
                idx = self.index.get(nk)
                if idx is not None:
                    nv = out.get(idx, 0) + c
                    if nv:
                        out[idx] = nv
                    else:
                        del out[idx]
        return out

    def pure(self, idxs: Sequence[int]) -> int | None:
        return self.index.get(tuple(idxs))


class PromotedModule(CurrentModule):
    """M[t] = M (x) C[t] truncated at degree ``cap``.

    The action is
    ``x t^l . (m (x) t^k) = sum_j (-1)^(l-j) C(l,j) (x t^j . m) (x) t^(l+k-j)``.
    """

    def __init__(self, M: CurrentModule, cap: int):
        if not M.graded or M.truncated:
            raise ValueError("promote needs a graded finite module")
        if not M.cyclic:
            raise ValueError("promote needs a cyclic vector")
        v = M.cyclic
        if min(M.degrees[i] for i in v) > cap:
            raise ValueError("cap too small to hold the cyclic vector")
        for i in range(M.rs.rank):
            for s in range(1, M.max_degree + 1):
                if M.act(("h", i), s, v):
                    raise ValueError("t h[t] does not annihilate the cyclic vector")
        self.M = M
        self.rs = M.rs
        self.cap = cap
        self.graded = True
        self.s_bound = cap + 1
        self.keys = [(m, a) for a in range(cap + 1) for m in range(M.dim) if M.degrees[m] + a <= cap]
        self.keys.sort(key=lambda k: (M.degrees[k[0]] + k[1], k[1], k[0]))
        self.index = {k: j for j, k in enumerate(self.keys)}
        self.weights = [M.weights[m] for m, _ in self.keys]
        self.degrees = [M.degrees[m] + a for m, a in self.keys]
        self.cyclic = {self.index[(i, 0)]: c for i, c in v.items()}
        self.label = f"{M.label}[t]"
        self._init_cache()

    def _act_basis(self, x, l, j):
        m, k = self.keys[j]
        out: Vec = {}
        for jj in range(min(l, self.M.max_degree) + 1):
            coef = (-1) ** (l - jj) * comb(l, jj)
            for i, c in self.M.act_basis(x, jj, m).items():
                idx = self.index.get((i, l + k - jj))
                if idx is not None:
                    axpy(out, coef * c, {idx: 1})
        return out

    def shift(self, j: int, n: int = 1) -> int | None:
        """Index of ``m (x) t^(k+n)`` for basis vector ``m (x) t^k`` (right C[t]-action)."""
        m, k = self.keys[j]
        return self.index.get((m, k + n))


def promote(M: CurrentModule, cap: int) -> PromotedModule:
    return PromotedModule(M, cap)


class SubModule(CurrentModule):
    """Submodule spanned by the rows of per-block echelon forms."""

    def __init__(self, ambient: CurrentModule, blocks: dict, by_degree: bool, cyclic=None, label=""):
        self.ambient = ambient
        self.rs = ambient.rs
        self.by_degree = by_degree
        self.blocks = blocks
        self.graded = ambient.graded and by_degree
        self.cap = ambient.cap
        self.s_bound = ambient.s_bound
        self.label = label
        self.rows: list[tuple] = []  # (block key, row index)
        self.weights, self.degrees = [], []
        self.position = {}
        for key in sorted(blocks, key=_block_sort_key):
            ech = blocks[key]
            for r in range(len(ech)):
                self.position[(key, r)] = len(self.rows)
                self.rows.append((key, r))
                if by_degree:
                    self.weights.append(key[0])
                    self.degrees.append(key[1])
                else:
                    self.weights.append(key)
                    self.degrees.append(ech.stages[r])
        self.cyclic = self.coordinates(cyclic) if cyclic else None
        self._init_cache()

    def vector(self, j: int) -> Vec:
        key, r = self.rows[j]
        return self.blocks[key].rows[r]

    def _split(self, v: Vec) -> dict:
        parts: dict = {}
        for i, c in v.items():
            parts.setdefault(self.ambient.block_key(i, self.by_degree), {})[i] = c
        return parts

    def coordinates(self, v: Vec) -> Vec:
        """Coordinates of an ambient vector lying in the submodule."""
        out: Vec = {}
        for key, part in self._split(v).items():
            ech = self.blocks.get(key)
            if ech is None:
                raise ValueError("vector leaves the submodule")
            for r, c in ech.coordinates(part).items():
                out[self.position[(key, r)]] = c
        return out

    def to_ambient(self, v: Vec) -> Vec:
        out: Vec = {}
        for j, c in v.items():
            axpy(out, c, self.vector(j))
        return out

    def _act_basis(self, x, s, j):
        return self.coordinates(self.ambient.act(x, s, self.vector(j)))


class QuotientModule(CurrentModule):
    """Quotient of a module by a submodule given as per-block echelon forms.

    The quotient basis is the set of ambient basis vectors that are not pivots
    of the submodule echelon forms.
    """

    def __init__(self, ambient: CurrentModule, blocks: dict, by_degree: bool, label=""):
        self.ambient = ambient
        self.rs = ambient.rs
        self.by_degree = by_degree
        self.blocks = blocks
        self.graded = ambient.graded and by_degree
        self.cap = ambient.cap
        self.s_bound = ambient.s_bound
        self.label = label
        pivots = set()
        for ech in blocks.values():
            pivots |= ech.pivot_set
        self.free = [i for i in range(ambient.dim) if i not in pivots]
        self.position = {i: a for a, i in enumerate(self.free)}
        self.weights = [ambient.weights[i] for i in self.free]
        self.degrees = [ambient.degrees[i] for i in self.free]
        self.cyclic = self.project(ambient.cyclic) if ambient.cyclic else None
        self._init_cache()

    def project(self, v: Vec) -> Vec:
        out: Vec = {}
        parts: dict = {}
        for i, c in v.items():
            parts.setdefault(self.ambient.block_key(i, self.by_degree), {})[i] = c
        for key, part in parts.items():
            ech = self.blocks.get(key)
            r = ech.reduce(part)[0] if ech is not None else part
            for i, c in r.items():
                out[self.position[i]] = c
        return out

    def _act_basis(self, x, s, j):
        return self.project(self.ambient.act_basis(x, s, self.free[j]))


def _block_sort_key(key):
    if isinstance(key, tuple) and len(key) == 2 and isinstance(key[0], tuple):
        w, d = key
        return (d, tuple(-c for c in w))
    return (0, tuple(-c for c in key))


def staged_closure(M: CurrentModule, seeds: Iterable[tuple[int, Vec]], by_degree: bool | None = None,
                   stage_cap: int | None = None, s_max: int | None = None,
                   stop_dim: int | None = None) -> dict:
    """Smallest generator-stable subspace containing the seeds, with stages.

    Each seed carries a stage; applying ``x t^s`` to a row of stage ``d``
    produces a vector of stage ``d + s``.  Candidates are processed in stage
    order, so the rows of stage ``<= d`` span the stage-``d`` part of the
    filtration

        F_d = span(seeds of stage <= d) + sum_s (x t^s) F_{d-s}.

    For a graded module with degree-homogeneous seeds the stage of a row is
    its degree, and the result is the ordinary cyclic span.  Blocks are keyed
    by weight, or by (weight, degree) when ``by_degree``.
    """
    if by_degree is None:
        by_degree = M.graded
    if s_max is None:
        s_max = M.s_bound - 1
    gens = chevalley_generators(M.rs)
    blocks: dict = {}
    heap: list = []
    counter = itertools.count()
    total = 0

    def key_of(v):
        keys = {M.block_key(i, by_degree) for i in v}
        if len(keys) != 1:
            raise ValueError("vector is not homogeneous for the block decomposition")
        return keys.pop()

    for stage, v in seeds:
        if v:
            heapq.heappush(heap, (stage, next(counter), "vec", v))
    while heap:
        stage, _, kind, payload = heapq.heappop(heap)
        if stage_cap is not None and stage > stage_cap:
            break
        if kind == "vec":
            v = payload
        else:
            bkey, r, x, s = payload
            v = M.act(x, s, blocks[bkey].rows[r])
            if not v:
                continue
        key = key_of(v)
        ech = blocks.setdefault(key, Echelon())
        r = ech.insert(v, stage)
        if r is None:
            continue
        total += 1
        if stop_dim is not None and total >= stop_dim:
            break
        for s in range(s_max + 1):
            ns = stage + s
            if stage_cap is not None and ns > stage_cap:
                break
            for x in gens:
                heapq.heappush(heap, (ns, next(counter), "app", (key, r, x, s)))
    return {k: e for k, e in blocks.items() if len(e)}


def cyclic_span(M: CurrentModule, v: Vec, label: str = "") -> SubModule:
    """U(g[t]) . v inside M, with restricted action tables and cyclic vector set."""
    if not v:
        return SubModule(M, {}, by_degree=M.graded, cyclic=None, label=label or "0")
    if M.graded:
        degs = {M.degrees[i] for i in v}
        if len(degs) != 1:
            raise ValueError("cyclic vector of a graded module must be homogeneous")
        seeds = [(degs.pop(), v)]
    else:
        seeds = [(0, v)]
    blocks = staged_closure(M, seeds, by_degree=M.graded, stage_cap=M.cap)
    return SubModule(M, blocks, by_degree=M.graded, cyclic=v, label=label)


def submodule_generated(M: CurrentModule, vectors: Iterable[Vec], label: str = "") -> SubModule:
    """U(g[t])-saturation of a set of homogeneous vectors in a graded module."""
    if not M.graded:
        raise ValueError("submodule_generated expects a graded module")
    seeds = []
    for v in vectors:
        if v:
            seeds.append((min(M.degrees[i] for i in v), v))
    blocks = staged_closure(M, seeds, by_degree=True, stage_cap=M.cap)
    return SubModule(M, blocks, by_degree=True, cyclic=None, label=label)


def lie_relations(rs: RootSystem, smax: int):
    """Relations among generators ``(x, a)`` that hold in g[t].

    Yields ``(lhs, rhs)`` where ``lhs`` is a list of ``(coeff, word)`` and
    ``rhs`` likewise; a word is a tuple of ``(generator, t-power)`` applied
    right to left.  Covered: the bracket table of the Chevalley basis, the
    Serre relations, and ``[x t^a, y t^b] = [x t^(a+b), y]`` for root
    vectors whose bracket is not a Chevalley generator.
    """
    r = rs.rank
    A = rs.cartan
    gens = chevalley_generators(rs)

    def bracket(x, y):
        (kx, i), (ky, j) = x, y
        if kx == "h" and ky == "h":
            return {}
        if kx == "h":
            c = A[i][j] if ky == "e" else -A[i][j]
            return {y: c} if c else {}
        if ky == "h":
            return {g: -c for g, c in bracket(y, x).items()}
        if kx == ky:
            if i == j or A[i][j] == 0:
                return {}
            return None
        if kx == "e" and ky == "f":
            return {("h", i): 1} if i == j else {}
        return {g: -c for g, c in bracket(y, x).items()}

    pairs = [(a, b) for a in range(smax + 1) for b in range(smax + 1) if a + b <= smax]
    for x in gens:
        for y in gens:
            br = bracket(x, y)
            for a, b in pairs:
                lhs = [(1, ((x, a), (y, b))), (-1, ((y, b), (x, a)))]
                if br is not None:
                    yield lhs, [(c, ((g, a + b),)) for g, c in br.items()]
                elif (a, b) != (a + b, 0):
                    yield lhs, [(1, ((x, a + b), (y, 0))), (-1, ((y, 0), (x, a + b)))]
    for kind in ("e", "f"):
        for i in range(r):
            for j in range(r):
                if i == j or A[i][j] == 0:
                    continue
                n = 1 - A[i][j]
                for powers in itertools.product(range(smax + 1), repeat=n + 1):
                    if sum(powers) > smax:
                        continue
                    # ad(x_i t^p1) ... ad(x_i t^pn) (x_j t^q) = 0, expanded into words
                    terms = [(1, (((kind, j), powers[-1]),))]
                    for p in reversed(powers[:-1]):
                        xi = ((kind, i), p)
                        nt = []
                        for c, w in terms:
                            nt.append((c, (xi,) + w))
                            nt.append((-c, w + (xi,)))
                        terms = nt
                    yield terms, []


def check_lie_action(M: CurrentModule, smax: int | None = None, basis: Iterable[int] | None = None):
    """Check every relation of :func:`lie_relations` on the basis of M.

    Returns None when all hold, otherwise a witness dict.
    """
    if smax is None:
        smax = M.cap if M.cap is not None else max(M.s_bound - 1, 0)
    idx = list(range(M.dim)) if basis is None else list(basis)
    for lhs, rhs in lie_relations(M.rs, smax):
        for i in idx:
            e = {i: QQ(1)}
            total: Vec = {}
            for c, w in lhs:
                axpy(total, c, M.act_word(w, e))
            for c, w in rhs:
                axpy(total, -c, M.act_word(w, e))
            if total:
                return {"basis": i, "lhs": _fmt_words(lhs), "rhs": _fmt_words(rhs)}
    return None


def _fmt_words(terms):
    out = []
    for c, w in terms:
        out.append(f"{c:+d}*" + "".join(f"{k}{i + 1}t^{s}" for (k, i), s in w))
    return " ".join(out) if out else "0"
