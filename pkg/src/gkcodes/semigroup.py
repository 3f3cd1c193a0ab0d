"""Numerical semigroups and the order-bound quantities built on them.

Indexing follows the usual one-point-code convention: ``rho(S, 1) == 0`` is
the smallest non-gap, and ``nu(S, l)`` counts ordered pairs of non-gaps
(as values) summing to ``rho(S, l + 1)``.  So ``nu(S, 0) == 1`` always.
"""

from __future__ import annotations

from bisect import bisect_right
from dataclasses import dataclass, field
from functools import lru_cache, reduce
from math import gcd
from typing import Sequence

import numpy as np

from .curve import O1, O2


class SemigroupError(ValueError):
    pass


@dataclass(frozen=True)
class NumericalSemigroup:
    generators: tuple[int, ...]
    elements: tuple[int, ...]  # all non-gaps below ``bound``
    conductor: int
    genus: int
    bound: int = field(repr=False)

    def __contains__(self, n: int) -> bool:
        if n < 0:
            return False
        if n >= self.conductor:
            return True
        return n in self._element_set

    @property
    def _element_set(self) -> frozenset:
        s = self.__dict__.get("_es")
        if s is None:
            s = frozenset(self.elements)
            object.__setattr__(self, "_es", s)
        return s

    @property
    def gaps(self) -> list[int]:
        return [n for n in range(1, self.conductor) if n not in self]

    @property
    def frobenius_number(self) -> int:
        return self.conductor - 1


def from_generators(gens: Sequence[int]) -> NumericalSemigroup:
    gens = tuple(sorted(set(int(g) for g in gens)))
    if not gens or gens[0] <= 0:
        raise SemigroupError("generators must be positive integers")
    if reduce(gcd, gens) != 1:
        raise SemigroupError("infinite gaps: generators are not coprime")
    # sieve until max(gens) consecutive members appear; beyond that all integers are in
    top = gens[-1]
    member = [True]
    run = 1
    n = 0
    while run < gens[0]:
        n += 1
        ok = any(n >= g and member[n - g] for g in gens)
        member.append(ok)
        run = run + 1 if ok else 0
    conductor = n - run + 1
    bound = conductor + 2 * top
    while len(member) < bound:
        member.append(True)
    elems = tuple(i for i, ok in enumerate(member[:bound]) if ok)
    genus = sum(1 for ok in member[:conductor] if not ok)
    return NumericalSemigroup(gens, elems, conductor, genus, bound)


def rho(S: NumericalSemigroup, ell: int) -> int:
    """The ell-th smallest non-gap (1-based)."""
    if ell < 1:
        raise SemigroupError("index must be at least 1")
    # non-gaps below the conductor: conductor - genus of them
    below = S.conductor - S.genus
    if ell <= below:
        return S.elements[ell - 1]
    return S.conductor + (ell - below - 1)


def index_of(S: NumericalSemigroup, value: int) -> int:
    """Inverse of :func:`rho`."""
    if value not in S:
        raise SemigroupError(f"{value} is a gap")
    if value >= S.conductor:
        return value - S.conductor + 1 + (S.conductor - S.genus)
    return bisect_right(S.elements, value)


def nu(S: NumericalSemigroup, ell: int) -> int:
    """Number of ordered pairs (a, b) of non-gaps with a + b = rho(ell + 1)."""
    if ell < 0:
        raise SemigroupError("index must be non-negative")
    target = rho(S, ell + 1)
    return sum(1 for a in range(target + 1) if a in S and (target - a) in S)


def tail_start(S: NumericalSemigroup) -> int:
    """2c - g - 1: from here on nu(l) = l + 1 - g."""
    return 2 * S.conductor - S.genus - 1


def order_bound(S: NumericalSemigroup, ell: int) -> int:
    """Feng-Rao order bound min{nu(m) : m >= ell}."""
    if ell < 0:
        raise SemigroupError("index must be non-negative")
    t = tail_start(S)
    if ell >= t:
        return ell + 1 - S.genus
    # nu(m) for m >= t is increasing, so nu(t) covers the whole tail
    return min(_nu_prefix(S, t)[ell:])


@lru_cache(maxsize=64)
def _nu_prefix(S: NumericalSemigroup, upto: int) -> tuple[int, ...]:
    top = rho(S, upto + 1)
    member = np.array([n in S for n in range(top + 1)], dtype=np.int64)
    pairs = np.convolve(member, member)[: top + 1]
    return tuple(int(pairs[rho(S, ell + 1)]) for ell in range(upto + 1))


def nu_values(S: NumericalSemigroup, upto: int) -> list[int]:
    """[nu(0), ..., nu(upto)], computed in one convolution."""
    return list(_nu_prefix(S, upto))


def improved_indices(S: NumericalSemigroup, d: int) -> list[int]:
    """The indices i >= 0 with nu(i) < d (each selects parity row h_{i+1})."""
    if d < 2:
        raise SemigroupError("designed distance must be at least 2")
    # nu(i) = i + 1 - g >= d once i >= max(tail_start, d + g - 1)
    stop = max(tail_start(S), d + S.genus - 1)
    return [i for i, v in enumerate(_nu_prefix(S, stop)) if v < d]


def r_d(S: NumericalSemigroup, d: int) -> int:
    """Redundancy #{i >= 0 : nu(i) < d} of the improved code."""
    return len(improved_indices(S, d))


_KNOWN_O2 = {
    2: (7, 8, 9, 13),
    3: (25, 27, 28, 74, 121),
}


def gk_generators(qbar: int, orbit: str) -> tuple[int, ...]:
    if orbit == O1:
        return (qbar**3 - qbar**2 + qbar, qbar**3, qbar**3 + 1)
    if orbit == O2:
        if qbar not in _KNOWN_O2:
            raise SemigroupError(f"semigroup unknown at O2 points for qbar={qbar}")
        return _KNOWN_O2[qbar]
    raise SemigroupError(f"unknown orbit {orbit!r}")


def gk_semigroup(qbar: int, orbit: str) -> NumericalSemigroup:
    """Weierstrass semigroup of the GK curve at a rational point of ``orbit``."""
    return from_generators(gk_generators(qbar, orbit))
