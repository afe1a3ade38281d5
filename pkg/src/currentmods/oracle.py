"""Demazure characters from the affine Weyl group of type A_r^(1).

This is an independent route to the characters of the local Demazure modules.
It never builds a module: it straightens an extremal affine weight to a
dominant one, records the reflections used, and applies the matching Demazure
operators to a single exponential.

Affine weights are ``(finite, level, ddeg)``: a finite weight in fundamental
coordinates, the level (pairing with the central element) and the
coefficient of the null root.  The fundamental weights are
``Lambda_0 = (0, 1, 0)`` and ``Lambda_j = (omega_j, 1, 0)``.
"""

from __future__ import annotations

from collections import defaultdict, deque
from fractions import Fraction
from typing import NamedTuple, Sequence

from .character import Character
from .rootsys import Coweight, RootSystem, UnsupportedAlgebra, weight_class

MAX_WORD = 10_000


class AffineWeight(NamedTuple):
    finite: tuple[int, ...]
    level: int
    ddeg: int

    def __add__(self, other):  # type: ignore[override]
        return AffineWeight(tuple(a + b for a, b in zip(self.finite, other.finite)),
                            self.level + other.level, self.ddeg + other.ddeg)

    def scaled(self, n: int) -> "AffineWeight":
        return AffineWeight(tuple(n * a for a in self.finite), n * self.level, n * self.ddeg)


def _require(rs: RootSystem) -> None:
    if not rs.is_type_a or rs.rank > 3:
        raise UnsupportedAlgebra(f"affine oracle supports type A of rank <= 3, got {rs.type_label}")


def highest_root(rs: RootSystem) -> tuple[int, ...]:
    out = [0] * rs.rank
    for j in range(rs.rank):
        for i, c in enumerate(rs.simple_root(j)):
            out[i] += c
    return tuple(out)


def fundamental_affine(rs: RootSystem, j: int, level: int = 1) -> AffineWeight:
    """``level * Lambda_j`` for j in 0..r."""
    fin = rs.zero() if j == 0 else rs.fundamental(j - 1)
    return AffineWeight(fin, 1, 0).scaled(level)


def affine_root(rs: RootSystem, i: int) -> AffineWeight:
    if i == 0:
        return AffineWeight(tuple(-c for c in highest_root(rs)), 0, 1)
    return AffineWeight(rs.simple_root(i - 1), 0, 0)


def affine_pair(rs: RootSystem, chi: AffineWeight, i: int) -> int:
    """``<chi, alpha_i^vee>``; for i = 0 this is level minus the pairing with theta^vee."""
    if i == 0:
        return chi.level - sum(chi.finite)
    return chi.finite[i - 1]


def _check_index(rs: RootSystem, i: int) -> None:
    if not 0 <= i <= rs.rank:
        raise ValueError(f"affine reflection index {i} out of range 0..{rs.rank}")


def affine_reflect(rs: RootSystem, i: int, chi: AffineWeight) -> AffineWeight:
    _require(rs)
    _check_index(rs, i)
    n = affine_pair(rs, chi, i)
    if n == 0:
        return chi
    return chi + affine_root(rs, i).scaled(-n)


def is_dominant(rs: RootSystem, chi: AffineWeight) -> bool:
    return all(affine_pair(rs, chi, i) >= 0 for i in range(rs.rank + 1))


def extremal_target(rs: RootSystem, ell: int, lam: Coweight) -> tuple[AffineWeight, int]:
    """Affine weight of the generator of D_{ell, lam}, and the index j of ell*Lambda_j.

    The finite part is ``ell * w0(iota(lam))``.  The null-root coordinate is
    fixed by invariance of the norm under the extended affine Weyl group:
    ``|chi|^2 = |fin|^2 + 2 level ddeg`` equals ``ell^2 |omega_j|^2``.
    """
    _require(rs)
    if ell < 1:
        raise ValueError("level must be positive")
    mu = rs.w0(rs.iota(tuple(lam)))
    j = weight_class(rs, tuple(lam))
    base = Fraction(0) if j == 0 else rs.norm_sq(rs.fundamental(j - 1))
    d = -(rs.norm_sq(mu) - base) / 2
    if d.denominator != 1:
        raise ValueError("extremal target has a non-integral null-root coordinate")
    return AffineWeight(mu, 1, int(d)).scaled(ell), j


def greedy_reduced_word(rs: RootSystem, target: AffineWeight) -> tuple[tuple[int, ...], int]:
    """Straighten ``target`` to a dominant weight, lowest index first.

    Returns ``(word, j)`` with ``target = s_{word[0]} ... s_{word[-1]} (level * Lambda_j)``.
    The rotation index j is read off the dominant end.
    """
    _require(rs)
    chi = target
    steps = []
    while True:
        neg = [i for i in range(rs.rank + 1) if affine_pair(rs, chi, i) < 0]
        if not neg:
            break
        i = neg[0]
        chi = affine_reflect(rs, i, chi)
        steps.append(i)
        if len(steps) > MAX_WORD:
            raise RuntimeError("straightening did not terminate; malformed target")
    lev = chi.level
    if lev <= 0:
        raise ValueError("target must have positive level")
    for j in range(rs.rank + 1):
        if chi == fundamental_affine(rs, j, lev):
            return tuple(steps), j
    raise ValueError(f"dominant end {chi} is not a multiple of a fundamental weight")


def shortest_word_length(rs: RootSystem, target: AffineWeight, bound: int) -> int | None:
    """Breadth-first search for a dominant weight in the orbit, up to ``bound`` steps."""
    seen = {target}
    frontier = deque([(target, 0)])
    while frontier:
        chi, d = frontier.popleft()
        if is_dominant(rs, chi):
            return d
        if d == bound:
            continue
        for i in range(rs.rank + 1):
            nxt = affine_reflect(rs, i, chi)
            if nxt not in seen:
                seen.add(nxt)
                frontier.append((nxt, d + 1))
    return None


AffineChar = dict  # {AffineWeight: int}


def demazure_apply(rs: RootSystem, i: int, f: AffineChar) -> AffineChar:
    """Isobaric Demazure operator ``(e^chi - e^{s_i chi - alpha_i}) / (1 - e^{-alpha_i})``."""
    _require(rs)
    _check_index(rs, i)
    a = affine_root(rs, i)
    out: dict = defaultdict(int)
    for chi, c in f.items():
        n = affine_pair(rs, chi, i)
        if n >= 0:
            cur = chi
            for _ in range(n + 1):
                out[cur] += c
                cur = cur + a.scaled(-1)
        elif n <= -2:
            cur = chi + a
            for _ in range(-n - 1):
                out[cur] -= c
                cur = cur + a
    return {k: v for k, v in out.items() if v}


def demazure_character(rs: RootSystem, word: Sequence[int], start: AffineWeight) -> AffineChar:
    """``D_{word[0]} ... D_{word[-1]} e^{start}``, rightmost operator first."""
    f: AffineChar = {start: 1}
    for i in reversed(word):
        f = demazure_apply(rs, i, f)
    return f


def oracle_character(rs: RootSystem, ell: int, lam: Coweight, cap: int) -> Character:
    """Character of D_{ell, lam} with the cyclic vector at weight ``ell*iota(lam)``, degree 0.

    Intermediate characters are not truncated: operators with negative
    pairing move terms to higher null-root degree, so only the final result
    is cut at ``cap``.
    """
    lam = tuple(lam)
    if len(lam) != rs.rank or not rs.is_dominant(lam):
        raise ValueError(f"coweight {lam} is not dominant for {rs.type_label}")
    target, j = extremal_target(rs, ell, lam)
    word, jj = greedy_reduced_word(rs, target)
    if jj != j:
        raise ValueError(f"straightening ended at component {jj}, expected {j}")
    f = demazure_character(rs, word, fundamental_affine(rs, j, ell))
    top = tuple(ell * c for c in rs.iota(lam))
    base = target.ddeg
    for wt in (top, target.finite):
        if f.get(AffineWeight(wt, ell, base), 0) != 1:
            raise ValueError(f"extremal term of weight {wt} is missing from the Demazure character")
    terms = {}
    for chi, c in f.items():
        q = chi.ddeg - base
        if q < 0:
            raise ValueError("Demazure character has terms below the extremal degree")
        terms[(chi.finite, q)] = terms.get((chi.finite, q), 0) + c
    return Character(terms, cap=cap, rank=rs.rank)
