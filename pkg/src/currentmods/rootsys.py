"""Cartan data, weight and coweight lattices, and the finite Weyl group.

Weights and coweights are stored as integer coordinate tuples in the
fundamental bases.  All pairings go through the Cartan matrix, with the
convention ``cartan[i][j] = <alpha_j, alpha_i^vee>``, so that the simple
root ``alpha_j`` has fundamental coordinates ``(cartan[0][j], ..., cartan[r-1][j])``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Sequence

Weight = tuple[int, ...]
Coweight = tuple[int, ...]

_CARTAN = {
    "A1": ((2,),),
    "A2": ((2, -1), (-1, 2)),
    "A3": ((2, -1, 0), (-1, 2, -1), (0, -1, 2)),
    "A4": ((2, -1, 0, 0), (-1, 2, -1, 0), (0, -1, 2, -1), (0, 0, -1, 2)),
    "B2": ((2, -2), (-1, 2)),
    "C2": ((2, -1), (-2, 2)),
    "G2": ((2, -1), (-3, 2)),
}

# Types the module engine can build representations for.
ENGINE_TYPES = ("A1", "A2", "A3")


class UnsupportedAlgebra(ValueError):
    """Raised for type labels (or operations) outside the supported range."""


def _check_cartan(cartan: Sequence[Sequence[int]]) -> None:
    r = len(cartan)
    for i in range(r):
        if len(cartan[i]) != r:
            raise ValueError("Cartan matrix must be square")
        if cartan[i][i] != 2:
            raise ValueError("Cartan matrix diagonal must be 2")
        for j in range(r):
            if i == j:
                continue
            if cartan[i][j] > 0:
                raise ValueError("off-diagonal Cartan entries must be <= 0")
            if (cartan[i][j] == 0) != (cartan[j][i] == 0):
                raise ValueError("c_ij = 0 must imply c_ji = 0")


def _mat_mul(a, b):
    n = len(a)
    return tuple(
        tuple(sum(a[i][k] * b[k][j] for k in range(n)) for j in range(n)) for i in range(n)
    )


@dataclass(frozen=True)
class RootSystem:
    type_label: str
    cartan: tuple[tuple[int, ...], ...] = field(repr=False)

    @property
    def rank(self) -> int:
        return len(self.cartan)

    @property
    def is_type_a(self) -> bool:
        return self.type_label.startswith("A")

    @property
    def is_simply_laced(self) -> bool:
        return all(
            self.cartan[i][j] == self.cartan[j][i]
            for i in range(self.rank)
            for j in range(self.rank)
        )

    def zero(self) -> Weight:
        return (0,) * self.rank

    def fundamental(self, i: int) -> Weight:
        """Fundamental (co)weight with 0-based index ``i``."""
        return tuple(1 if j == i else 0 for j in range(self.rank))

    def simple_root(self, j: int) -> Weight:
        return tuple(self.cartan[i][j] for i in range(self.rank))

    def pair(self, mu: Weight, i: int) -> int:
        """<mu, alpha_i^vee>: the i-th fundamental coordinate."""
        return mu[i]

    def reflect(self, i: int, mu: Weight) -> Weight:
        """Simple reflection s_i (0-based) applied to a weight."""
        n = mu[i]
        if n == 0:
            return tuple(mu)
        return tuple(mu[k] - n * self.cartan[k][i] for k in range(self.rank))

    def weyl_act(self, word: Iterable[int], mu: Weight) -> Weight:
        """Apply ``s_{w_1} s_{w_2} ... s_{w_n}`` (1-based indices) to ``mu``.

        The rightmost reflection acts first.
        """
        word = list(word)
        for i in word:
            if not 1 <= i <= self.rank:
                raise ValueError(f"reflection index {i} out of range 1..{self.rank}")
        out = tuple(mu)
        for i in reversed(word):
            out = self.reflect(i - 1, out)
        return out

    @cached_property
    def _reflection_matrices(self):
        mats = []
        for i in range(self.rank):
            cols = [self.reflect(i, self.fundamental(j)) for j in range(self.rank)]
            mats.append(tuple(tuple(cols[j][k] for j in range(self.rank)) for k in range(self.rank)))
        return mats

    @cached_property
    def weyl_group(self) -> tuple[tuple[tuple[int, ...], ...], ...]:
        """All Weyl group elements as integer matrices on fundamental coordinates.

        Enumerated by closure under right multiplication with simple
        reflections; a guard bounds the search so that a non-finite type
        fails loudly instead of looping.
        """
        ident = tuple(tuple(int(i == j) for j in range(self.rank)) for i in range(self.rank))
        seen = {ident}
        frontier = [ident]
        while frontier:
            nxt = []
            for g in frontier:
                for s in self._reflection_matrices:
                    h = _mat_mul(g, s)
                    if h not in seen:
                        seen.add(h)
                        nxt.append(h)
            if len(seen) > 100_000:
                raise ValueError("Weyl group closure did not terminate")
            frontier = nxt
        return tuple(sorted(seen))

    @cached_property
    def rho(self) -> Weight:
        return (1,) * self.rank

    @cached_property
    def longest_word(self) -> tuple[int, ...]:
        """A reduced word (1-based) for w0, found by straightening -rho."""
        mu = tuple(-x for x in self.rho)
        word = []
        while True:
            neg = [i for i in range(self.rank) if mu[i] < 0]
            if not neg:
                break
            i = neg[0]
            mu = self.reflect(i, mu)
            word.append(i + 1)
        return tuple(word)

    def w0(self, mu: Weight) -> Weight:
        return self.weyl_act(self.longest_word, mu)

    @cached_property
    def _inverse_cartan(self) -> tuple[tuple[Fraction, ...], ...]:
        n = self.rank
        m = [[Fraction(self.cartan[i][j]) for j in range(n)] + [Fraction(int(i == j)) for j in range(n)]
             for i in range(n)]
        for c in range(n):
            p = next(r for r in range(c, n) if m[r][c] != 0)
            m[c], m[p] = m[p], m[c]
            piv = m[c][c]
            m[c] = [x / piv for x in m[c]]
            for r in range(n):
                if r != c and m[r][c] != 0:
                    f = m[r][c]
                    m[r] = [x - f * y for x, y in zip(m[r], m[c])]
        return tuple(tuple(row[n:]) for row in m)

    @cached_property
    def coroot_lengths(self) -> tuple[Fraction, ...]:
        """Squared lengths of simple coroots, normalized so short coroots have length 2."""
        # Symmetrize the coroot Cartan matrix (the transpose): a_ji L_i = a_ij L_j.
        n = self.rank
        lengths: list[Fraction | None] = [None] * n
        lengths[0] = Fraction(1)
        stack = [0]
        while stack:
            i = stack.pop()
            for j in range(n):
                if j != i and self.cartan[i][j] != 0 and lengths[j] is None:
                    lengths[j] = lengths[i] * Fraction(self.cartan[j][i], self.cartan[i][j])
                    stack.append(j)
        short = min(lengths)
        return tuple(2 * x / short for x in lengths)

    def norm_sq(self, mu: Weight) -> Fraction:
        """Normalized squared length of a weight (simply-laced types only)."""
        if not self.is_simply_laced:
            raise UnsupportedAlgebra("norm_sq is only used for simply-laced types")
        inv = self._inverse_cartan
        n = self.rank
        return sum((mu[i] * inv[i][j] * mu[j] for i in range(n) for j in range(n)), Fraction(0))

    def iota(self, lam: Coweight) -> Weight:
        """Level-one map from coweights to weights.

        Diagonal in the fundamental bases, ``omega_i -> (|alpha_i|^2 / 2) omega_i^vee``;
        the identity in simply-laced types.
        """
        out = []
        for m, length in zip(lam, self.coroot_lengths):
            v = m * length / 2
            if v.denominator != 1:
                raise ValueError("iota produced a non-integral weight")
            out.append(int(v))
        return tuple(out)

    def is_dominant(self, mu: Weight) -> bool:
        return all(x >= 0 for x in mu)

    def dominant_decompose(self, lam: Coweight) -> list[Coweight]:
        """Split a dominant coweight into fundamental coweights (with multiplicity)."""
        if not self.is_dominant(lam):
            raise ValueError(f"coweight {lam} is not dominant")
        out = []
        for i, m in enumerate(lam):
            out.extend([self.fundamental(i)] * m)
        return out

    def orbit(self, mu: Weight) -> set[Weight]:
        seen = {tuple(mu)}
        frontier = [tuple(mu)]
        while frontier:
            nxt = []
            for v in frontier:
                for i in range(self.rank):
                    w = self.reflect(i, v)
                    if w not in seen:
                        seen.add(w)
                        nxt.append(w)
            frontier = nxt
        return seen

    def require_engine(self) -> None:
        if self.type_label not in ENGINE_TYPES:
            raise UnsupportedAlgebra(
                f"module constructions need type A of rank <= 3, got {self.type_label}"
            )


def build_root_system(type_label: str) -> RootSystem:
    try:
        cartan = _CARTAN[type_label]
    except KeyError:
        raise UnsupportedAlgebra(f"unsupported type label {type_label!r}") from None
    _check_cartan(cartan)
    return RootSystem(type_label, cartan)


def weight_class(rs: RootSystem, lam: Coweight) -> int:
    """Class of a type-A coweight in P/Q, i.e. the index j of Lambda_j it lives over."""
    if not rs.is_type_a:
        raise UnsupportedAlgebra("weight classes are only implemented for type A")
    return sum((i + 1) * m for i, m in enumerate(lam)) % (rs.rank + 1)


def add(a: Sequence[int], b: Sequence[int]) -> Weight:
    return tuple(x + y for x, y in zip(a, b))


def scale(c: int, a: Sequence[int]) -> Weight:
    return tuple(c * x for x in a)
