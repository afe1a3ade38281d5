"""Exact sparse linear algebra over the rationals.

Vectors are plain dicts ``{index: Fraction}`` with no zero entries.  The
workhorse is :class:`Echelon`, an incrementally built row-echelon basis in
which every stored row remembers the *stage* at which it entered.  Reducing a
vector against it yields both the residual and the coefficients on stored
rows, which is what the filtration and subquotient constructions need.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Sequence

QQ = Fraction
Vec = dict  # {int: Fraction}


def clean(v: Mapping[int, Fraction]) -> Vec:
    return {k: c for k, c in v.items() if c != 0}


def axpy(y: Vec, a, x: Mapping[int, Fraction]) -> None:
    """In place ``y += a * x``."""
    for k, c in x.items():
        nv = y.get(k, 0) + a * c
        if nv:
            y[k] = nv
        else:
            y.pop(k, None)


def scaled(a, x: Mapping[int, Fraction]) -> Vec:
    if a == 0:
        return {}
    return {k: a * c for k, c in x.items()}


class Echelon:
    """Row-echelon basis of a subspace, built one vector at a time.

    Rows are kept in insertion order.  Each new row is reduced against all
    earlier rows before being stored, so it vanishes on their pivots; its
    pivot is its lowest remaining index.  Reduction of a vector walks the
    rows in insertion order, which leaves the residual zero on every pivot.
    """

    __slots__ = ("rows", "pivots", "stages", "_pivot_set")

    def __init__(self):
        self.rows: list[Vec] = []
        self.pivots: list[int] = []
        self.stages: list[int] = []
        self._pivot_set: set[int] = set()

    def __len__(self) -> int:
        return len(self.rows)

    def reduce(self, v: Mapping[int, Fraction], want_coeffs: bool = False):
        """Return ``(residual, coeffs)`` with ``v = residual + sum coeffs[j] * rows[j]``."""
        r = dict(v)
        coeffs = {} if want_coeffs else None
        if not r:
            return r, coeffs
        if not self._pivot_set.intersection(r):
            return r, coeffs
        for j, (row, p) in enumerate(zip(self.rows, self.pivots)):
            c = r.get(p)
            if c:
                f = c / row[p]
                axpy(r, -f, row)
                if want_coeffs:
                    coeffs[j] = f
        return r, coeffs

    def contains(self, v: Mapping[int, Fraction]) -> bool:
        return not self.reduce(v)[0]

    def insert(self, v: Mapping[int, Fraction], stage: int = 0) -> int | None:
        """Add ``v`` if it is independent; return the new row index or None."""
        r, _ = self.reduce(v)
        if not r:
            return None
        p = min(r)
        self.rows.append(r)
        self.pivots.append(p)
        self.stages.append(stage)
        self._pivot_set.add(p)
        return len(self.rows) - 1

    def coordinates(self, v: Mapping[int, Fraction]) -> dict[int, Fraction]:
        """Coefficients of ``v`` on the stored rows; raises if ``v`` is outside the span."""
        r, coeffs = self.reduce(v, want_coeffs=True)
        if r:
            raise ValueError("vector is not in the span")
        return coeffs

    @property
    def pivot_set(self) -> frozenset[int]:
        return frozenset(self._pivot_set)


def _as_sparse(vec: Sequence) -> Vec:
    return {i: QQ(c) for i, c in enumerate(vec) if c != 0}


def exact_span(vectors: Iterable[Sequence]) -> list[tuple[Fraction, ...]]:
    """Reduced row-echelon basis of the span of dense rational vectors."""
    vectors = [list(v) for v in vectors]
    if not vectors:
        return []
    n = len(vectors[0])
    if any(len(v) != n for v in vectors):
        raise ValueError("dimension mismatch")
    ech = Echelon()
    for v in vectors:
        ech.insert(_as_sparse(v))
    # back-substitute to reduced form, pivots increasing
    order = sorted(range(len(ech)), key=lambda j: ech.pivots[j])
    rows = [dict(ech.rows[j]) for j in order]
    piv = [ech.pivots[j] for j in order]
    for a in range(len(rows)):
        inv = 1 / rows[a][piv[a]]
        rows[a] = {k: c * inv for k, c in rows[a].items()}
    for a in range(len(rows) - 1, -1, -1):
        for b in range(len(rows)):
            if b != a:
                c = rows[b].get(piv[a])
                if c:
                    axpy(rows[b], -c, rows[a])
    return [tuple(row.get(i, QQ(0)) for i in range(n)) for row in rows]


def rank(vectors: Iterable[Sequence]) -> int:
    ech = Echelon()
    n = None
    for v in vectors:
        v = list(v)
        if n is None:
            n = len(v)
        elif len(v) != n:
            raise ValueError("dimension mismatch")
        ech.insert(_as_sparse(v))
    return len(ech)


def subspace_quotient(ambient_dim: int, sub: Iterable[Sequence]):
    """Quotient of Q^n by the span of ``sub``.

    Returns ``(basis_indices, project)``: the standard basis vectors with
    these indices map to a basis of the quotient, and ``project(v)`` gives
    the coordinates of the class of ``v`` in that basis.
    """
    ech = Echelon()
    for v in sub:
        v = list(v)
        if len(v) != ambient_dim:
            raise ValueError("dimension mismatch")
        ech.insert(_as_sparse(v))
    free = [i for i in range(ambient_dim) if i not in ech.pivot_set]
    pos = {i: a for a, i in enumerate(free)}

    def project(v: Sequence) -> tuple[Fraction, ...]:
        v = list(v)
        if len(v) != ambient_dim:
            raise ValueError("dimension mismatch")
        r, _ = ech.reduce(_as_sparse(v))
        out = [QQ(0)] * len(free)
        for k, c in r.items():
            out[pos[k]] = c
        return tuple(out)

    return free, project
