"""Lattice points of the dilated simplex and of the monotone order region.

Two coordinate systems are used throughout the package:

* lattice points ``v`` with ``k`` non-negative integer entries summing to ``q``;
* monotone points ``w`` with ``k - 1`` entries ``0 <= w[0] <= ... <= w[-1] <= q``.

:func:`monotone_to_lattice` (successive differences) and
:func:`lattice_to_monotone` (prefix sums) are mutually inverse bijections.

Vertex identifiers are positions in the lexicographic enumeration of lattice
points. That order is part of every file format the package writes, so it must
never change.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import accumulate, combinations_with_replacement

LatticePoint = tuple[int, ...]
MonotonePoint = tuple[int, ...]

MAX_K = 16
MAX_Q = 64
INT64_MAX = 2**63 - 1


class DomainError(ValueError):
    """Raised for parameters outside the supported domain."""


def checked_int(value: int, what: str = "value") -> int:
    """Return ``value`` unchanged, failing loudly if it leaves signed 64-bit range."""
    if not -INT64_MAX - 1 <= value <= INT64_MAX:
        raise OverflowError(f"{what} = {value} does not fit in 64 bits")
    return value


def check_params(k: int, q: int) -> None:
    if not isinstance(k, int) or not isinstance(q, int):
        raise DomainError(f"k and q must be integers, got k={k!r}, q={q!r}")
    if k < 2:
        raise DomainError(f"k must be >= 2, got {k}")
    if q < 1:
        raise DomainError(f"q must be >= 1, got {q}")
    if k > MAX_K or q > MAX_Q:
        raise DomainError(f"(k, q) = ({k}, {q}) exceeds the cap k <= {MAX_K}, q <= {MAX_Q}")


def num_points(k: int, q: int) -> int:
    """Number of lattice points, ``C(q + k - 1, k - 1)``."""
    check_params(k, q)
    return checked_int(math.comb(q + k - 1, k - 1), "point count")


def _compositions(total: int, parts: int):
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, parts - 1):
            yield (first, *rest)


@lru_cache(maxsize=None)
def enum_delta_points(k: int, q: int) -> tuple[LatticePoint, ...]:
    """All compositions of ``q`` into ``k`` non-negative parts, lexicographically."""
    check_params(k, q)
    return tuple(_compositions(q, k))


@lru_cache(maxsize=None)
def enum_monotone_points(k: int, q: int) -> tuple[MonotonePoint, ...]:
    """All non-decreasing ``(k-1)``-vectors with entries in ``[0, q]``, lexicographically."""
    check_params(k, q)
    return tuple(combinations_with_replacement(range(q + 1), k - 1))


def is_lattice_point(v, k: int, q: int) -> bool:
    return len(v) == k and all(isinstance(x, int) and x >= 0 for x in v) and sum(v) == q


def is_monotone_point(w, k: int, q: int) -> bool:
    if len(w) != k - 1 or not all(isinstance(x, int) for x in w):
        return False
    return all(0 <= a <= b for a, b in zip((0, *w), (*w, q)))


def monotone_to_lattice(w: MonotonePoint, q: int) -> LatticePoint:
    """Map ``(w1, ..., w_{k-1})`` to ``(w1, w2 - w1, ..., q - w_{k-1})``."""
    padded = (0, *w, q)
    return tuple(b - a for a, b in zip(padded, padded[1:]))


def lattice_to_monotone(v: LatticePoint) -> MonotonePoint:
    """Prefix sums of the first ``k - 1`` coordinates."""
    return tuple(accumulate(v[:-1]))


def rank_point(v: LatticePoint) -> int:
    """Lexicographic rank of ``v`` among compositions of ``sum(v)`` into ``len(v)`` parts."""
    k = len(v)
    remaining = sum(v)
    rank = 0
    for i, x in enumerate(v[:-1]):
        tail = k - i - 1  # parts still to fill after position i
        # compositions sharing the prefix but with a smaller entry at i
        for smaller in range(x):
            rank += math.comb(remaining - smaller + tail - 1, tail - 1)
        remaining -= x
    return rank


def unrank_point(rank: int, k: int, q: int) -> LatticePoint:
    if not 0 <= rank < math.comb(q + k - 1, k - 1):
        raise KeyError(f"vertex id {rank} out of range for k={k}, q={q}")
    out = []
    remaining = q
    for i in range(k - 1):
        tail = k - i - 1
        x = 0
        while True:
            block = math.comb(remaining - x + tail - 1, tail - 1)
            if rank < block:
                break
            rank -= block
            x += 1
        out.append(x)
        remaining -= x
    out.append(remaining)
    return tuple(out)


@dataclass(frozen=True)
class VertexIndex:
    """Bidirectional map between lattice points and dense vertex ids."""

    k: int
    q: int
    points: tuple[LatticePoint, ...] = field(init=False, repr=False)
    _ids: dict = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        pts = enum_delta_points(self.k, self.q)
        object.__setattr__(self, "points", pts)
        object.__setattr__(self, "_ids", {p: i for i, p in enumerate(pts)})

    def __len__(self) -> int:
        return len(self.points)

    def id_of(self, v) -> int:
        try:
            return self._ids[tuple(v)]
        except KeyError:
            raise KeyError(f"{tuple(v)} is not a lattice point of k={self.k}, q={self.q}") from None

    def point(self, vid: int) -> LatticePoint:
        if not 0 <= vid < len(self.points):
            raise KeyError(f"vertex id {vid} out of range [0, {len(self.points)})")
        return self.points[vid]

    def id_of_monotone(self, w: MonotonePoint) -> int:
        return self.id_of(monotone_to_lattice(w, self.q))


@lru_cache(maxsize=None)
def vertex_index(k: int, q: int) -> VertexIndex:
    check_params(k, q)
    return VertexIndex(k, q)


def vertex_id(v: LatticePoint, q: int | None = None) -> int:
    """Vertex id of ``v``; ``q`` defaults to ``sum(v)``."""
    q = sum(v) if q is None else q
    return vertex_index(len(v), q).id_of(v)


def vertex_point(vid: int, k: int, q: int) -> LatticePoint:
    return vertex_index(k, q).point(vid)
