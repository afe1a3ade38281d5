"""Highest-weight algebras as subalgebras of polynomial rings.

For a collection of dominant coweights ``lams = (lam_1, ..., lam_k)`` the
algebra A(lams) sits inside Q[z_1, ..., z_k] and is generated by the weighted
power sums

    p_{s,i} = sum_j <iota(lam_j), h_i> z_j^s,   s >= 1.

Polynomials are dicts ``{exponent tuple: Fraction}``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from typing import Sequence

from .linalg import Echelon, rank
from .rootsys import Coweight, RootSystem

Poly = dict


def _poly_mul(a: Poly, b: Poly) -> Poly:
    out: Poly = {}
    for ea, ca in a.items():
        for eb, cb in b.items():
            e = tuple(x + y for x, y in zip(ea, eb))
            v = out.get(e, 0) + ca * cb
            if v:
                out[e] = v
            else:
                out.pop(e, None)
    return out


def monomials(nvars: int, d: int) -> list[tuple[int, ...]]:
    """Exponent vectors of total degree d, in lexicographically decreasing order."""
    if nvars == 0:
        return [()] if d == 0 else []
    out = []
    for first in range(d, -1, -1):
        for rest in monomials(nvars - 1, d - first):
            out.append((first,) + rest)
    return out


def _index_poly(p: Poly, index: dict) -> dict:
    return {index[e]: c for e, c in p.items()}


def power_sum_generator(pairing: Sequence[Sequence[int]], i: int, s: int) -> Poly:
    k = len(pairing[0]) if pairing else 0
    out: Poly = {}
    for j in range(k):
        c = pairing[i][j]
        if c:
            e = tuple(s if jj == j else 0 for jj in range(k))
            out[e] = out.get(e, 0) + Fraction(c)
    return out


@dataclass
class HwAlgebra:
    """Degreewise basis of A(lams) inside Q[z_1..z_k], up to degree ``cap``."""

    k: int
    pairing: tuple[tuple[int, ...], ...]  # pairing[i][j] = <iota(lam_j), h_i>
    cap: int
    bases: list[list[Poly]] = field(repr=False)

    @property
    def hilbert(self) -> list[int]:
        return [len(b) for b in self.bases]

    def generators(self, s: int) -> list[Poly]:
        return [g for i in range(len(self.pairing)) if (g := power_sum_generator(self.pairing, i, s))]

    def contains(self, p: Poly) -> bool:
        if not p:
            return True
        d = sum(next(iter(p)))
        if d > self.cap:
            raise ValueError("degree beyond cap")
        index = {e: n for n, e in enumerate(monomials(self.k, d))}
        ech = Echelon()
        for b in self.bases[d]:
            ech.insert(_index_poly(b, index))
        return ech.contains(_index_poly(p, index))

    def is_closed(self) -> bool:
        """Products of basis elements stay in the algebra (within the cap)."""
        for d1 in range(1, self.cap + 1):
            for d2 in range(d1, self.cap + 1 - d1):
                for a in self.bases[d1]:
                    for b in self.bases[d2]:
                        if not self.contains(_poly_mul(a, b)):
                            return False
        return True


def pairing_table(rs: RootSystem, lams: Sequence[Coweight]) -> tuple[tuple[int, ...], ...]:
    ws = [rs.iota(tuple(l)) for l in lams]
    return tuple(tuple(w[i] for w in ws) for i in range(rs.rank))


def build_hw_algebra(rs: RootSystem, lams: Sequence[Coweight], cap: int, weights: bool = False) -> HwAlgebra:
    """Span the products of generators degree by degree.

    ``A_d = sum_{s, i} p_{s,i} * A_{d-s}``, which is exact for every degree
    because a generator of degree s cannot contribute below degree s.  With
    ``weights=True`` the entries of ``lams`` are already weights (no iota).
    """
    if not lams:
        raise ValueError("need at least one coweight")
    for l in lams:
        if not rs.is_dominant(tuple(l)):
            raise ValueError(f"{tuple(l)} is not dominant")
    if weights:
        pairing = tuple(tuple(l[i] for l in lams) for i in range(rs.rank))
    else:
        pairing = pairing_table(rs, lams)
    k = len(lams)
    bases: list[list[Poly]] = [[{(0,) * k: Fraction(1)}]]
    for d in range(1, cap + 1):
        index = {e: n for n, e in enumerate(monomials(k, d))}
        ech = Echelon()
        basis = []
        for s in range(1, d + 1):
            gens = [g for i in range(rs.rank) if (g := power_sum_generator(pairing, i, s))]
            for g in gens:
                for b in bases[d - s]:
                    p = _poly_mul(g, b)
                    if ech.insert(_index_poly(p, index)) is not None:
                        basis.append(p)
        bases.append(basis)
    return HwAlgebra(k, pairing, cap, bases)


def _series_mul(a: list[int], b: list[int], cap: int) -> list[int]:
    out = [0] * (cap + 1)
    for i, x in enumerate(a[: cap + 1]):
        if x:
            for j, y in enumerate(b[: cap + 1 - i]):
                out[i + j] += x * y
    return out


def inverse_one_minus_qj(j: int, cap: int) -> list[int]:
    return [1 if n % j == 0 else 0 for n in range(cap + 1)]


def hilbert_A_lambda(rs: RootSystem, lam: Coweight, cap: int) -> list[int]:
    """Hilbert series of Q[z_1..z_N]^{S_lambda}: prod_i prod_{j<=m_i} (1-q^j)^{-1}."""
    if not rs.is_dominant(tuple(lam)):
        raise ValueError(f"{tuple(lam)} is not dominant")
    out = [1] + [0] * cap
    for m in lam:
        for j in range(1, m + 1):
            out = _series_mul(out, inverse_one_minus_qj(j, cap), cap)
    return out


def polynomial_ring_hilbert(k: int, cap: int) -> list[int]:
    return [comb(k + d - 1, d) if k else int(d == 0) for d in range(cap + 1)]


def _pieces(rs: RootSystem, lams: Sequence[Coweight]) -> list[tuple[int, int]]:
    """Fundamental pieces (group a, color b) of the collection, group-major."""
    out = []
    for a, lam in enumerate(lams):
        for b, m in enumerate(lam):
            out.extend([(a, b)] * m)
    return out


def merge_variables(p: Poly, first: int) -> Poly:
    """Substitute ``z_{first+1} -> z_first`` and shift later variables down by one."""
    out: Poly = {}
    for e, c in p.items():
        ne = e[:first] + (e[first] + e[first + 1],) + e[first + 2:]
        v = out.get(ne, 0) + c
        if v:
            out[ne] = v
        else:
            out.pop(ne, None)
    return out


def check_surjection(rs: RootSystem, lams: Sequence[Coweight], cap: int) -> dict:
    """Verify that identifying variables maps A_lambda onto A(lams) up to ``cap``.

    A_lambda is realized as A(omega_{b_1}, ..., omega_{b_N}) with one variable
    per fundamental piece, pieces of the same lam_a adjacent.  The map merges
    adjacent variables of one group repeatedly.
    """
    lams = [tuple(l) for l in lams]
    pieces = _pieces(rs, lams)
    lam = tuple(sum(l[i] for l in lams) for i in range(rs.rank))
    if not pieces:
        return {"ok": True, "witness_degree": None, "reason": "zero coweight"}
    fund = [rs.fundamental(b) for _, b in pieces]
    big = build_hw_algebra(rs, fund, cap)
    small = build_hw_algebra(rs, lams, cap)
    # groups with lam_a = 0 contribute no variable to the image; keep their
    # variables in A(lams) (they never appear in generators)
    groups = [a for a, _ in pieces]

    def image(p: Poly) -> Poly:
        q, g = p, list(groups)
        pos = 0
        while pos < len(g) - 1:
            if g[pos] == g[pos + 1]:
                q = merge_variables(q, pos)
                del g[pos + 1]
            else:
                pos += 1
        # re-embed into k variables (insert zero exponents for empty groups)
        k = len(lams)
        out: Poly = {}
        for e, c in q.items():
            ne = [0] * k
            for var, a in enumerate(g):
                ne[a] = e[var]
            out[tuple(ne)] = out.get(tuple(ne), 0) + c
        return {e: c for e, c in out.items() if c}

    image_dims = [1]
    hb, hs = big.hilbert, small.hilbert
    for d in range(1, cap + 1):
        index = {e: n for n, e in enumerate(monomials(len(lams), d))}
        ech = Echelon()
        for b in big.bases[d]:
            ech.insert(_index_poly(image(b), index))
        image_dims.append(len(ech))
        for g in small.generators(d):
            if not ech.contains(_index_poly(g, index)):
                return {"ok": False, "witness_degree": d, "reason": "generator outside image",
                        "hilbert_A_lambda": hb, "hilbert_A": hs, "image_dims": image_dims}
        if len(ech) != hs[d]:
            return {"ok": False, "witness_degree": d, "reason": "image differs from A(lams)",
                    "hilbert_A_lambda": hb, "hilbert_A": hs, "image_dims": image_dims}
        if hs[d] > hb[d]:
            return {"ok": False, "witness_degree": d, "reason": "Hilbert series not dominated",
                    "hilbert_A_lambda": hb, "hilbert_A": hs, "image_dims": image_dims}
    closed = hilbert_A_lambda(rs, lam, cap)
    return {"ok": closed == hb, "witness_degree": None if closed == hb else
            next(d for d in range(cap + 1) if closed[d] != hb[d]),
            "reason": "" if closed == hb else "closed form disagrees with A_lambda",
            "hilbert_A_lambda": hb, "hilbert_A": hs, "image_dims": image_dims}


def _symmetric_group_product(sizes: Sequence[int]):
    """All elements of S_{m_1} x ... x S_{m_r} as tuples of permutations."""
    return itertools.product(*(itertools.permutations(range(m)) for m in sizes))


def hilbert_via_arrangement(rs: RootSystem, lams: Sequence[Coweight], cap: int) -> list[int]:
    """Hilbert series of the coordinate ring of (S_lambda V) / S_lambda.

    Coordinates ``x_{b,j}`` (color b, j < m_b); V identifies the coordinates
    inside each group Gamma_a.  Degree by degree, the coordinate ring of the
    union of the subspaces sigma(V) is Q[x]_d modulo the intersection of their
    linear ideals, i.e. the image of restriction to all sigma(V) at once; its
    S_lambda-invariants are the image of the Reynolds-averaged monomials.
    """
    lams = [tuple(l) for l in lams]
    r = rs.rank
    sizes = [sum(l[b] for l in lams) for b in range(r)]
    coords = [(b, j) for b in range(r) for j in range(sizes[b])]
    cindex = {c: n for n, c in enumerate(coords)}
    N = len(coords)
    group = {}
    for b in range(r):
        j = 0
        for a, l in enumerate(lams):
            for _ in range(l[b]):
                group[(b, j)] = a
                j += 1
    perms = list(_symmetric_group_product(sizes))
    # each permutation sends coordinate (b, j) to (b, perm_b[j])
    def act(perm, e):
        out = [0] * N
        for (b, j), n in cindex.items():
            out[cindex[(b, perm[b][j])]] = e[n]
        return tuple(out)

    # distinct subspaces sigma(V), recorded as coordinate -> group maps
    subspaces = sorted({tuple(group[(b, perm[b].index(j))] for (b, j) in coords) for perm in perms})
    k = len(lams)
    out = [1]
    for d in range(1, cap + 1):
        mons = monomials(N, d)
        ymons = {e: n for n, e in enumerate(monomials(k, d))}
        seen = set()
        rows = []
        for m in mons:
            if m in seen:
                continue
            orbit = {act(p, m) for p in perms}
            seen |= orbit
            # Reynolds image up to a positive scalar: the orbit sum
            row = [Fraction(0)] * (len(subspaces) * len(ymons))
            for e in orbit:
                for si, gmap in enumerate(subspaces):
                    ye = [0] * k
                    for n, a in enumerate(gmap):
                        ye[a] += e[n]
                    row[si * len(ymons) + ymons[tuple(ye)]] += 1
            rows.append(row)
        out.append(rank(rows) if rows else 0)
    return out
