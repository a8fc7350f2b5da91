"""Sperner labelings and colour counting on the regular triangulation."""

from __future__ import annotations

import json
import math
from collections import Counter
from dataclasses import dataclass
from itertools import product
from typing import Iterator

import numpy as np

from .lattice import DomainError, LatticePoint, check_params, checked_int, vertex_index
from .triangulation import Triangulation


class NotSpernerError(ValueError):
    """A labeling gives some vertex a colour whose coordinate is zero."""


def allowed_colors(v: LatticePoint) -> frozenset[int]:
    """Colours ``i`` (1-based) with ``v_i > 0``."""
    return frozenset(i + 1 for i, x in enumerate(v) if x > 0)


@dataclass(frozen=True)
class Labeling:
    """Colours indexed by vertex id, 1-based."""

    k: int
    q: int
    colors: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "colors", tuple(int(c) for c in self.colors))
        n = len(vertex_index(self.k, self.q))
        if len(self.colors) != n:
            raise ValueError(f"labeling has {len(self.colors)} colours, expected {n}")

    def __getitem__(self, vid: int) -> int:
        return self.colors[vid]

    def as_dict(self) -> dict[LatticePoint, int]:
        return dict(zip(vertex_index(self.k, self.q).points, self.colors))

    def to_json(self) -> str:
        return json.dumps({"k": self.k, "q": self.q, "colors": list(self.colors)}, separators=(",", ":")) + "\n"

    @classmethod
    def from_json(cls, text: str) -> "Labeling":
        data = json.loads(text)
        return cls(int(data["k"]), int(data["q"]), tuple(data["colors"]))


def sperner_violations(l: Labeling) -> list[int]:
    pts = vertex_index(l.k, l.q).points
    return [i for i, (v, c) in enumerate(zip(pts, l.colors)) if c not in allowed_colors(v)]


def is_sperner(l: Labeling) -> bool:
    return not sperner_violations(l)


def first_choice_labeling(k: int, q: int) -> Labeling:
    """Each vertex gets the smallest index of a positive coordinate."""
    check_params(k, q)
    pts = vertex_index(k, q).points
    return Labeling(k, q, tuple(min(allowed_colors(v)) for v in pts))


def _require_sperner(t: Triangulation, l: Labeling) -> None:
    if (t.k, t.q) != (l.k, l.q):
        raise ValueError(f"labeling is for k={l.k}, q={l.q} but triangulation is k={t.k}, q={t.q}")
    bad = sperner_violations(l)
    if bad:
        raise NotSpernerError(f"not a Sperner labeling; first offending vertex id {bad[0]}")


def cell_color_counts(t: Triangulation, l: Labeling) -> list[int]:
    """Number of distinct colours on each cell, in cell order."""
    _require_sperner(t, l)
    colors = l.colors
    return [len({colors[v] for v in cell}) for cell in t.cells]


def color_histogram(t: Triangulation, l: Labeling) -> dict[int, int]:
    """``{number of colours: number of cells}``; values sum to the cell count."""
    hist = Counter(cell_color_counts(t, l))
    return {j: hist.get(j, 0) for j in range(1, t.k + 1)}


def count_nonmono(t: Triangulation, l: Labeling) -> int:
    """Cells carrying at least two colours."""
    return sum(1 for c in cell_color_counts(t, l) if c >= 2)


def count_cells_with_at_least_j_colors(t: Triangulation, l: Labeling, j: int) -> int:
    if not 1 <= j <= t.k:
        raise DomainError(f"j must lie in [1, {t.k}], got {j}")
    return sum(1 for c in cell_color_counts(t, l) if c >= j)


# --------------------------------------------------------------------------
# exhaustive enumeration of Sperner labelings
# --------------------------------------------------------------------------


def allowed_color_lists(k: int, q: int) -> list[list[int]]:
    return [sorted(allowed_colors(v)) for v in vertex_index(k, q).points]


def labeling_space_size(k: int, q: int) -> int:
    """Number of Sperner labelings, the product of the allowed-set sizes."""
    check_params(k, q)
    return math.prod(len(a) for a in allowed_color_lists(k, q))


def iter_sperner_labelings(k: int, q: int) -> Iterator[Labeling]:
    """Every Sperner labeling, vertex 0 as the most significant digit."""
    for colors in product(*allowed_color_lists(k, q)):
        yield Labeling(k, q, colors)


def labeling_blocks(k: int, q: int, block_size: int = 1 << 16) -> Iterator[tuple[int, np.ndarray]]:
    """Every Sperner labeling as rows of uint8 arrays, in :func:`iter_sperner_labelings` order.

    Yields ``(offset, block)`` where row ``r`` of ``block`` is labeling number
    ``offset + r`` of the mixed-radix counter.
    """
    choices = allowed_color_lists(k, q)
    radices = np.array([len(c) for c in choices], dtype=np.int64)
    table = np.zeros((len(choices), k), dtype=np.uint8)
    for i, c in enumerate(choices):
        table[i, : len(c)] = c
    total = checked_int(math.prod(len(c) for c in choices), "labeling space")
    # place value of each digit; the last vertex varies fastest
    weights = np.ones(len(choices), dtype=np.int64)
    for i in range(len(choices) - 2, -1, -1):
        weights[i] = weights[i + 1] * radices[i + 1]
    vids = np.arange(len(choices))
    for offset in range(0, total, block_size):
        idx = np.arange(offset, min(offset + block_size, total), dtype=np.int64)
        digits = (idx[:, None] // weights[None, :]) % radices[None, :]
        yield offset, table[vids[None, :], digits]


def nonmono_counts_block(cells: np.ndarray, block: np.ndarray) -> np.ndarray:
    """Non-monochromatic cell counts for each labeling row of ``block``."""
    colored = block[:, cells]  # (rows, cells, k)
    mono = (colored == colored[:, :, :1]).all(axis=2)
    return cells.shape[0] - mono.sum(axis=1)
