"""The regular (Kuhn-type) triangulation of the lattice simplex.

Three independent constructions are provided and are expected to agree:

* :func:`triangulate_by_permutations` walks every anchor ``w`` and every
  permutation consistent with it and keeps the staircase cells that stay inside
  the monotone region;
* :func:`triangulate_by_cliques` with ``GraphVariant.MONOTONE`` takes all
  ``k``-cliques of the 0/1-difference graph on monotone points;
* :func:`triangulate_by_cliques` with ``GraphVariant.LATTICE`` takes all
  ``k``-cliques of the alternating-sign graph directly on lattice points.

Cells are sorted tuples of vertex ids, so triangulations compare as sets.
"""

from __future__ import annotations

import enum
import json
from collections import defaultdict
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Iterator

from .lattice import (
    LatticePoint,
    MonotonePoint,
    check_params,
    enum_monotone_points,
    is_monotone_point,
    lattice_to_monotone,
    monotone_to_lattice,
    vertex_index,
)

Cell = tuple[int, ...]


class GraphVariant(str, enum.Enum):
    CELL = "cell"  # edges read off the permutation cells (on monotone points)
    MONOTONE = "monotone"  # 0/1 difference rule (on monotone points)
    LATTICE = "lattice"  # alternating-sign rule (on lattice points)


# --------------------------------------------------------------------------
# permutation cells
# --------------------------------------------------------------------------


def _tie_blocks(w: MonotonePoint) -> list[int]:
    sizes = []
    for i, x in enumerate(w):
        if i and x == w[i - 1]:
            sizes[-1] += 1
        else:
            sizes.append(1)
    return sizes


def consistent_permutations(w: MonotonePoint) -> list[tuple[int, ...]]:
    """Permutations ``pi`` of ``1..len(w)`` with ``w[i] == w[i+1] => pi[i] < pi[i+1]``.

    Returned as 1-based tuples ``(pi(1), ..., pi(k-1))`` in lexicographic order.
    Each run of tied entries receives an increasing run of values, so the
    permutations are generated block by block rather than filtered.
    """
    n = len(w)
    sizes = _tie_blocks(w)
    out: list[tuple[int, ...]] = []

    def fill(block: int, free: frozenset[int], acc: tuple[int, ...]):
        if block == len(sizes):
            out.append(acc)
            return
        for chosen in combinations(sorted(free), sizes[block]):
            fill(block + 1, free.difference(chosen), acc + chosen)

    fill(0, frozenset(range(1, n + 1)), ())
    out.sort()
    return out


def sigma_vertices(w: MonotonePoint, pi: tuple[int, ...]) -> list[MonotonePoint]:
    """The ``k`` corners of the staircase cell anchored at ``w``.

    ``pi[j]`` is the rank of coordinate ``j`` in the chain of increments:
    corner ``t`` adds one to every coordinate whose rank is at least ``k - t``,
    so corner 0 is ``w`` and corner ``k-1`` is ``w + (1, ..., 1)``.
    Corners may fall outside the monotone region; callers filter.
    """
    k = len(w) + 1
    return [
        tuple(x + (1 if pi[j] >= k - t else 0) for j, x in enumerate(w))
        for t in range(k)
    ]


def _monotone_cells(k: int, q: int) -> set[frozenset[MonotonePoint]]:
    cells = set()
    for w in enum_monotone_points(k, q):
        for pi in consistent_permutations(w):
            corners = sigma_vertices(w, pi)
            if all(is_monotone_point(z, k, q) for z in corners):
                cells.add(frozenset(corners))
    return cells


# --------------------------------------------------------------------------
# triangulation value
# --------------------------------------------------------------------------


@dataclass(frozen=True)
class Triangulation:
    k: int
    q: int
    cells: tuple[Cell, ...]
    method: str = ""

    @property
    def points(self) -> tuple[LatticePoint, ...]:
        return vertex_index(self.k, self.q).points

    @property
    def num_vertices(self) -> int:
        return len(self.points)

    def cell_set(self) -> frozenset[Cell]:
        return frozenset(self.cells)

    def cell_points(self, cell: Cell) -> list[LatticePoint]:
        pts = self.points
        return [pts[i] for i in cell]

    def same_cells(self, other: "Triangulation") -> bool:
        return (self.k, self.q) == (other.k, other.q) and self.cell_set() == other.cell_set()


def _canonical(cells: Iterable[Iterable[int]]) -> tuple[Cell, ...]:
    return tuple(sorted({tuple(sorted(c)) for c in cells}))


def triangulate_by_permutations(k: int, q: int) -> Triangulation:
    """Cells from all (anchor, consistent permutation) pairs, mapped to lattice points."""
    check_params(k, q)
    index = vertex_index(k, q)
    cells = (
        [index.id_of_monotone(w) for w in corners] for corners in _monotone_cells(k, q)
    )
    return Triangulation(k, q, _canonical(cells), "permutations")


# --------------------------------------------------------------------------
# adjacency graphs and clique enumeration
# --------------------------------------------------------------------------


def is_monotone_edge(w1: MonotonePoint, w2: MonotonePoint) -> bool:
    """Difference entrywise in {0, 1} or entrywise in {-1, 0}."""
    diff = [a - b for a, b in zip(w1, w2)]
    if not any(diff):
        return False
    return all(d in (0, 1) for d in diff) or all(d in (-1, 0) for d in diff)


def is_lattice_edge(v1: LatticePoint, v2: LatticePoint) -> bool:
    """Difference in {-1, 0, 1}, balanced, with nonzero entries alternating in sign."""
    nonzero = [a - b for a, b in zip(v1, v2) if a != b]
    if not nonzero or any(abs(d) != 1 for d in nonzero):
        return False
    if sum(nonzero) != 0:
        return False
    return all(a != b for a, b in zip(nonzero, nonzero[1:]))


@dataclass(frozen=True)
class AdjacencyGraph:
    """Undirected simple graph on ``0..n-1`` with bit-set adjacency rows.

    Vertex ``i`` is the ``i``-th monotone point for the CELL and MONOTONE
    variants and the ``i``-th lattice point (its vertex id) for LATTICE.
    """

    k: int
    q: int
    variant: GraphVariant
    n: int
    edges: frozenset[tuple[int, int]]
    rows: tuple[int, ...] = field(repr=False, compare=False)

    @classmethod
    def from_edges(cls, k, q, variant, n, edges):
        rows = [0] * n
        norm = set()
        for a, b in edges:
            if a == b:
                raise ValueError(f"self-loop at {a}")
            a, b = min(a, b), max(a, b)
            norm.add((a, b))
            rows[a] |= 1 << b
            rows[b] |= 1 << a
        return cls(k, q, GraphVariant(variant), n, frozenset(norm), tuple(rows))

    def vertices(self) -> tuple[tuple[int, ...], ...]:
        if self.variant is GraphVariant.LATTICE:
            return vertex_index(self.k, self.q).points
        return enum_monotone_points(self.k, self.q)

    def has_edge(self, a: int, b: int) -> bool:
        return bool(self.rows[a] >> b & 1)


def build_graph(k: int, q: int, variant: GraphVariant | str) -> AdjacencyGraph:
    """All-pairs application of the MONOTONE or LATTICE edge rule."""
    check_params(k, q)
    variant = GraphVariant(variant)
    if variant is GraphVariant.MONOTONE:
        pts, test = enum_monotone_points(k, q), is_monotone_edge
    elif variant is GraphVariant.LATTICE:
        pts, test = vertex_index(k, q).points, is_lattice_edge
    else:
        return build_cell_graph(k, q)
    edges = [(a, b) for a, b in combinations(range(len(pts)), 2) if test(pts[a], pts[b])]
    return AdjacencyGraph.from_edges(k, q, variant, len(pts), edges)


def build_cell_graph(k: int, q: int) -> AdjacencyGraph:
    """Monotone points joined whenever some permutation cell contains both."""
    check_params(k, q)
    pts = enum_monotone_points(k, q)
    pos = {w: i for i, w in enumerate(pts)}
    edges = set()
    for cell in _monotone_cells(k, q):
        ids = sorted(pos[w] for w in cell)
        edges.update(combinations(ids, 2))
    return AdjacencyGraph.from_edges(k, q, GraphVariant.CELL, len(pts), edges)


def k_cliques(rows: tuple[int, ...], size: int) -> Iterator[tuple[int, ...]]:
    """All cliques with exactly ``size`` vertices, as increasing tuples.

    Walks vertices in increasing order, carrying the bit set of common
    higher-numbered neighbours; a branch is cut once fewer candidates remain
    than vertices still needed.
    """
    n = len(rows)
    higher = [row & ~((1 << (v + 1)) - 1) for v, row in enumerate(rows)]

    def extend(clique: tuple[int, ...], cand: int):
        need = size - len(clique)
        if need == 0:
            yield clique
            return
        while cand and cand.bit_count() >= need:
            low = cand & -cand
            v = low.bit_length() - 1
            cand ^= low
            yield from extend(clique + (v,), cand & higher[v])

    for v in range(n):
        if size == 1:
            yield (v,)
        else:
            yield from extend((v,), higher[v])


def triangulate_by_cliques(k: int, q: int, variant: GraphVariant | str = GraphVariant.LATTICE) -> Triangulation:
    """Cells as the ``k``-cliques of an adjacency graph."""
    variant = GraphVariant(variant)
    graph = build_graph(k, q, variant)
    index = vertex_index(k, q)
    if variant is GraphVariant.LATTICE:
        cells = k_cliques(graph.rows, k)
    else:
        pts = graph.vertices()
        cells = ([index.id_of_monotone(pts[i]) for i in c] for c in k_cliques(graph.rows, k))
    return Triangulation(k, q, _canonical(cells), f"cliques:{variant.value}")


def triangulate(k: int, q: int) -> Triangulation:
    """The regular triangulation (lattice-graph clique route, the fastest)."""
    return triangulate_by_cliques(k, q, GraphVariant.LATTICE)


# --------------------------------------------------------------------------
# validation
# --------------------------------------------------------------------------


def exact_det(matrix: list[list[int]]) -> int:
    """Integer determinant by fraction-free (Bareiss) elimination."""
    a = [list(map(int, row)) for row in matrix]
    n = len(a)
    if any(len(row) != n for row in a):
        raise ValueError("matrix must be square")
    if n == 0:
        return 1
    sign, prev = 1, 1
    for i in range(n - 1):
        if a[i][i] == 0:
            swap = next((r for r in range(i + 1, n) if a[r][i] != 0), None)
            if swap is None:
                return 0
            a[i], a[swap] = a[swap], a[i]
            sign = -sign
        for r in range(i + 1, n):
            for c in range(i + 1, n):
                a[r][c] = (a[r][c] * a[i][i] - a[r][i] * a[i][c]) // prev
        prev = a[i][i]
    return sign * a[n - 1][n - 1]


def cell_determinant(t: Triangulation, cell: Cell) -> int:
    """Determinant of the edge-difference matrix of ``cell`` in monotone coordinates."""
    ws = [lattice_to_monotone(v) for v in t.cell_points(cell)]
    base = ws[0]
    return exact_det([[a - b for a, b in zip(w, base)] for w in ws[1:]])


@dataclass
class CheckResult:
    name: str
    passed: bool
    detail: str = ""
    counterexamples: list = field(default_factory=list)


@dataclass
class TriangulationReport:
    k: int
    q: int
    checks: list[CheckResult]
    interior_facets: int = 0
    boundary_facets: int = 0

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def __getitem__(self, name: str) -> CheckResult:
        return next(c for c in self.checks if c.name == name)

    def lines(self) -> list[str]:
        return [
            f"[{'PASS' if c.passed else 'FAIL'}] {c.name}: {c.detail}"
            + (f" e.g. {c.counterexamples[:3]}" if c.counterexamples else "")
            for c in self.checks
        ]


def facet_incidence(cells: Iterable[Cell]) -> dict[Cell, int]:
    counts: dict[Cell, int] = defaultdict(int)
    for cell in cells:
        for facet in combinations(cell, len(cell) - 1):
            counts[facet] += 1
    return dict(counts)


def verify_triangulation(t: Triangulation, max_examples: int = 10) -> TriangulationReport:
    """Check cell count, unimodularity, facet incidence and boundary placement.

    Failures are reported in the returned value, never raised.
    """
    k, q = t.k, t.q
    n = t.num_vertices
    checks = []

    expected = q ** (k - 1)
    checks.append(
        CheckResult("cell_count", len(t.cells) == expected, f"{len(t.cells)} cells, expected {expected}")
    )

    malformed = [c for c in t.cells if len(set(c)) != k or any(not 0 <= i < n for i in c)]
    checks.append(
        CheckResult("well_formed", not malformed, f"{len(malformed)} malformed cells", malformed[:max_examples])
    )
    good = [c for c in t.cells if c not in set(malformed)]

    bad_det = [(c, d) for c in good if abs(d := cell_determinant(t, c)) != 1]
    checks.append(
        CheckResult(
            "unimodular",
            not bad_det,
            f"{len(good) - len(bad_det)}/{len(good)} cells with determinant +-1",
            bad_det[:max_examples],
        )
    )

    pts = t.points
    incidence = facet_incidence(good)
    interior = boundary = 0
    bad_count, bad_boundary = [], []
    for facet, count in sorted(incidence.items()):
        on_boundary = any(all(pts[v][i] == 0 for v in facet) for i in range(k))
        if count == 2 and not on_boundary:
            interior += 1
        elif count == 1 and on_boundary:
            boundary += 1
        elif count == 1:
            bad_boundary.append(facet)
        else:
            bad_count.append((facet, count))
    checks.append(
        CheckResult(
            "facet_incidence",
            not bad_count,
            f"{interior} interior facets in 2 cells, {boundary} boundary facets in 1 cell",
            bad_count[:max_examples],
        )
    )
    checks.append(
        CheckResult(
            "boundary_facets",
            not bad_boundary,
            f"{len(bad_boundary)} single-cell facets off every face x_i = 0",
            bad_boundary[:max_examples],
        )
    )
    return TriangulationReport(k, q, checks, interior, boundary)


# --------------------------------------------------------------------------
# JSON
# --------------------------------------------------------------------------


def triangulation_to_dict(t: Triangulation) -> dict:
    return {
        "k": t.k,
        "q": t.q,
        "vertex_count": t.num_vertices,
        "cell_count": len(t.cells),
        "vertices": [list(p) for p in t.points],
        "cells": [list(c) for c in t.cells],
    }


def dumps_compact(obj: dict) -> str:
    return json.dumps(obj, separators=(",", ":")) + "\n"


def triangulation_to_json(t: Triangulation) -> str:
    return dumps_compact(triangulation_to_dict(t))


def triangulation_from_json(text: str) -> Triangulation:
    data = json.loads(text)
    k, q = int(data["k"]), int(data["q"])
    t = Triangulation(k, q, tuple(tuple(sorted(c)) for c in data["cells"]), "json")
    if [tuple(v) for v in data.get("vertices", t.points)] != list(t.points):
        raise ValueError("vertex array does not match the lexicographic enumeration")
    return t


def check_equivalences(k: int, q: int) -> list[CheckResult]:
    """Compare the three constructions and the three graphs on one instance."""
    perm = triangulate_by_permutations(k, q)
    mono = triangulate_by_cliques(k, q, GraphVariant.MONOTONE)
    latt = triangulate_by_cliques(k, q, GraphVariant.LATTICE)
    a, b, c = perm.cell_set(), mono.cell_set(), latt.cell_set()
    checks = [
        CheckResult(
            "cells_permutations_eq_monotone_cliques", a == b,
            f"{len(a)} vs {len(b)} cells", sorted(a ^ b)[:5],
        ),
        CheckResult(
            "cells_permutations_eq_lattice_cliques", a == c,
            f"{len(a)} vs {len(c)} cells", sorted(a ^ c)[:5],
        ),
    ]
    cell_graph = build_cell_graph(k, q)
    mono_graph = build_graph(k, q, GraphVariant.MONOTONE)
    diff = cell_graph.edges ^ mono_graph.edges
    checks.append(
        CheckResult(
            "cell_graph_eq_monotone_graph", not diff,
            f"{len(cell_graph.edges)} vs {len(mono_graph.edges)} edges", sorted(diff)[:5],
        )
    )
    # pairwise check of the coordinate map against the lattice edge rule
    wpts = enum_monotone_points(k, q)
    vpts = [monotone_to_lattice(w, q) for w in wpts]
    mismatched = [
        (wpts[i], wpts[j])
        for i, j in combinations(range(len(wpts)), 2)
        if mono_graph.has_edge(i, j) != is_lattice_edge(vpts[i], vpts[j])
    ]
    checks.append(
        CheckResult(
            "monotone_graph_isomorphic_to_lattice_graph", not mismatched,
            f"{len(wpts) * (len(wpts) - 1) // 2} pairs compared", mismatched[:5],
        )
    )
    return checks
