"""Simplex-lattice hypergraph: the "upward" cells ``{b + e_1, ..., b + e_k}``."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .labeling import Labeling, labeling_blocks, labeling_space_size, nonmono_counts_block
from .lattice import LatticePoint, check_params, enum_delta_points, vertex_index
from .triangulation import Cell, Triangulation, dumps_compact


@dataclass(frozen=True)
class Hyperedge:
    base: LatticePoint
    vertex_ids: Cell


def build_hypergraph(k: int, q: int) -> list[Hyperedge]:
    """One hyperedge per lattice point ``b`` of the simplex at level ``q - 1``."""
    check_params(k, q)
    index = vertex_index(k, q)
    # level q - 1 may be 0, which enum_delta_points rejects
    bases = enum_delta_points(k, q - 1) if q > 1 else (tuple([0] * k),)
    edges = []
    for b in bases:
        ids = []
        for i in range(k):
            v = list(b)
            v[i] += 1
            ids.append(index.id_of(v))
        edges.append(Hyperedge(tuple(b), tuple(sorted(ids))))
    return edges


def expected_hyperedge_count(k: int, q: int) -> int:
    return math.comb(q + k - 2, k - 1)


def hyperedges_are_cells(h: Sequence[Hyperedge], t: Triangulation) -> bool:
    cells = t.cell_set()
    return all(e.vertex_ids in cells for e in h)


def count_nonmono_hyperedges(h: Sequence[Hyperedge], l: Labeling) -> int:
    colors = l.colors
    return sum(1 for e in h if len({colors[v] for v in e.vertex_ids}) >= 2)


def hypergraph_to_json(k: int, q: int, h: Sequence[Hyperedge]) -> str:
    pts = vertex_index(k, q).points
    return dumps_compact(
        {
            "kind": "hyperedge",
            "k": k,
            "q": q,
            "vertex_count": len(pts),
            "cell_count": len(h),
            "vertices": [list(p) for p in pts],
            "cells": [list(e.vertex_ids) for e in h],
        }
    )


def min_nonmono_hyperedges(k: int, q: int, budget: int = 10**7) -> int:
    """Minimum over every Sperner labeling of the non-monochromatic hyperedge count."""
    size = labeling_space_size(k, q)
    if size > budget:
        raise RuntimeError(f"{size} Sperner labelings exceed the budget {budget}")
    edges = np.array([e.vertex_ids for e in build_hypergraph(k, q)], dtype=np.int64)
    best = None
    for _, block in labeling_blocks(k, q):
        low = int(nonmono_counts_block(edges, block).min())
        best = low if best is None else min(best, low)
    return best
