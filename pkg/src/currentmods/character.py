"""Truncated Laurent polynomials in weight variables z and a grading variable q."""

from __future__ import annotations

import json
from collections import defaultdict
from typing import Iterable, Mapping

from .rootsys import RootSystem, Weight


class Character:
    """Integer combination of monomials ``z^weight q^degree``.

    ``cap`` bounds the q-degree from above; terms beyond it are dropped by
    every operation.  ``cap=None`` means no truncation.  Negative q-degrees
    are allowed (dual characters).
    """

    __slots__ = ("terms", "cap", "rank")

    def __init__(self, terms: Mapping[tuple[Weight, int], int] | None = None, cap: int | None = None,
                 rank: int | None = None):
        self.cap = cap
        clean = {}
        for (wt, q), c in (terms or {}).items():
            if c and (cap is None or q <= cap):
                clean[(tuple(wt), q)] = clean.get((tuple(wt), q), 0) + c
        self.terms = {k: v for k, v in clean.items() if v}
        if rank is None and self.terms:
            rank = len(next(iter(self.terms))[0])
        self.rank = rank

    # construction helpers
    @classmethod
    def monomial(cls, wt: Weight, q: int = 0, coeff: int = 1, cap: int | None = None) -> "Character":
        return cls({(tuple(wt), q): coeff}, cap=cap, rank=len(wt))

    @classmethod
    def series(cls, coeffs: Iterable[int], rank: int, cap: int | None = None) -> "Character":
        """Weight-zero character from a q-series given by its coefficient list."""
        zero = (0,) * rank
        return cls({(zero, d): c for d, c in enumerate(coeffs)}, cap=cap, rank=rank)

    def _rank(self, other: "Character") -> int | None:
        return self.rank if self.rank is not None else other.rank

    @staticmethod
    def _min_cap(a, b):
        if a is None:
            return b
        if b is None:
            return a
        return min(a, b)

    def __add__(self, other: "Character") -> "Character":
        terms = dict(self.terms)
        for k, v in other.terms.items():
            terms[k] = terms.get(k, 0) + v
        return Character(terms, self._min_cap(self.cap, other.cap), self._rank(other))

    def __neg__(self) -> "Character":
        return Character({k: -v for k, v in self.terms.items()}, self.cap, self.rank)

    def __sub__(self, other: "Character") -> "Character":
        return self + (-other)

    def __mul__(self, other: "Character") -> "Character":
        cap = self._min_cap(self.cap, other.cap)
        out = defaultdict(int)
        for (w1, q1), c1 in self.terms.items():
            for (w2, q2), c2 in other.terms.items():
                q = q1 + q2
                if cap is not None and q > cap:
                    continue
                out[(tuple(a + b for a, b in zip(w1, w2)), q)] += c1 * c2
        return Character(out, cap, self._rank(other))

    def __eq__(self, other) -> bool:
        if not isinstance(other, Character):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self) -> bool:
        return bool(self.terms)

    def truncate(self, cap: int | None, low: int | None = None) -> "Character":
        terms = {k: v for k, v in self.terms.items() if low is None or k[1] >= low}
        return Character(terms, self._min_cap(self.cap, cap), self.rank)

    def geometric(self, k: int = 1) -> "Character":
        """Multiply by ``(1 - q)^{-k}``; needs a finite cap."""
        if self.cap is None:
            raise ValueError("geometric series needs a finite cap")
        out = self
        for _ in range(k):
            acc = defaultdict(int)
            for (w, q), c in out.terms.items():
                for d in range(q, self.cap + 1):
                    acc[(w, d)] += c
            out = Character(acc, self.cap, self.rank)
        return out

    def q_inverse(self) -> "Character":
        """Substitute ``q -> q^{-1}``; the result is untruncated."""
        return Character({(w, -q): c for (w, q), c in self.terms.items()}, None, self.rank)

    def ungraded(self) -> "Character":
        out = defaultdict(int)
        for (w, _), c in self.terms.items():
            out[(w, 0)] += c
        return Character(out, None, self.rank)

    def dimension(self) -> int:
        return sum(self.terms.values())

    def degree_slice(self, q: int) -> dict[Weight, int]:
        return {w: c for (w, d), c in self.terms.items() if d == q}

    def q_degrees(self) -> list[int]:
        return sorted({d for _, d in self.terms})

    def dims_by_degree(self, upto: int | None = None) -> list[int]:
        hi = upto if upto is not None else (max(self.q_degrees()) if self.terms else -1)
        out = [0] * (hi + 1)
        for (_, d), c in self.terms.items():
            if 0 <= d <= hi:
                out[d] += c
        return out

    def weight_component(self, wt: Weight) -> list[int]:
        """q-series of the coefficient of ``z^wt`` (nonnegative degrees up to the cap)."""
        hi = self.cap if self.cap is not None else max([d for _, d in self.terms] or [0])
        out = [0] * (hi + 1)
        for (w, d), c in self.terms.items():
            if w == tuple(wt) and 0 <= d <= hi:
                out[d] += c
        return out

    def is_weyl_invariant(self, rs: RootSystem) -> bool:
        for (w, d), c in self.terms.items():
            for i in range(rs.rank):
                if self.terms.get((rs.reflect(i, w), d), 0) != c:
                    return False
        return True

    def first_mismatch(self, other: "Character"):
        """Smallest ``(q, weight)`` where the coefficients differ, with both values."""
        keys = set(self.terms) | set(other.terms)
        bad = sorted((q, w) for (w, q) in keys if self.terms.get((w, q), 0) != other.terms.get((w, q), 0))
        if not bad:
            return None
        q, w = bad[0]
        return {"q": q, "weight": list(w), "left": self.terms.get((w, q), 0),
                "right": other.terms.get((w, q), 0)}

    def to_records(self) -> list[dict]:
        items = sorted(((q, w), c) for (w, q), c in self.terms.items())
        return [{"weight": list(w), "q": q, "coeff": c} for (q, w), c in items]

    @classmethod
    def from_records(cls, records, cap: int | None = None) -> "Character":
        terms = {(tuple(r["weight"]), r["q"]): r["coeff"] for r in records}
        return cls(terms, cap=cap)

    def to_json(self) -> str:
        return json.dumps(self.to_records())

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for q in self.q_degrees():
            sl = self.degree_slice(q)
            inner = " + ".join(f"{c}*z^{list(w)}" for w, c in sorted(sl.items(), reverse=True))
            parts.append(f"q^{q}*({inner})")
        return " + ".join(parts)
