"""Exact minimum number of non-monochromatic cells over all Sperner labelings.

Two independent routes:

* :func:`brute_force_min` scores every labeling of the mixed-radix counter in
  numpy blocks;
* :func:`branch_bound_min` runs a depth-first search with an admissible bound.

Both report the lexicographically smallest optimal labeling (vertex 0 most
significant, smaller colour first), so their witnesses are comparable byte
for byte.
"""

from __future__ import annotations

import json
import logging
import multiprocessing as mp
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import product

import numpy as np

from .bounds import lower_bound, upper_bound
from .labeling import (
    Labeling,
    allowed_color_lists,
    count_nonmono,
    first_choice_labeling,
    is_sperner,
    labeling_blocks,
    labeling_space_size,
    nonmono_counts_block,
)
from .lattice import check_params
from .triangulation import Triangulation, triangulate, triangulate_by_permutations

log = logging.getLogger(__name__)

DEFAULT_BUDGET = 10**8


class BudgetExceeded(RuntimeError):
    def __init__(self, size: int, budget: int):
        super().__init__(f"labeling space has {size} Sperner labelings, over the budget of {budget}")
        self.size = size
        self.budget = budget


@dataclass
class SearchConfig:
    budget: int = DEFAULT_BUDGET
    threads: int = 1
    # vertices whose colours are fixed per parallel task; None picks a default
    split_depth: int | None = None
    block_size: int = 1 << 15


@dataclass
class SearchResult:
    k: int
    q: int
    m: int
    witness: Labeling
    nodes_explored: int
    wall_time: float
    method: str
    stats: dict = field(default_factory=dict)

    def to_certificate(self) -> dict:
        return {
            "k": self.k,
            "q": self.q,
            "m": self.m,
            "method": self.method,
            "colors": list(self.witness.colors),
            "nodes_explored": self.nodes_explored,
        }

    def certificate_json(self) -> str:
        return json.dumps(self.to_certificate(), separators=(",", ":")) + "\n"


@lru_cache(maxsize=32)
def _triangulation(k: int, q: int) -> Triangulation:
    return triangulate(k, q)


@lru_cache(maxsize=32)
def _reference_triangulation(k: int, q: int) -> Triangulation:
    return triangulate_by_permutations(k, q)


# --------------------------------------------------------------------------
# brute force
# --------------------------------------------------------------------------


def brute_force_min(k: int, q: int, budget: int = DEFAULT_BUDGET, block_size: int = 1 << 15) -> SearchResult:
    check_params(k, q)
    size = labeling_space_size(k, q)
    if size > budget:
        raise BudgetExceeded(size, budget)
    start = time.perf_counter()
    cells = np.array(_triangulation(k, q).cells, dtype=np.int64)
    best, best_row = None, None
    for _, block in labeling_blocks(k, q, block_size):
        counts = nonmono_counts_block(cells, block)
        r = int(np.argmin(counts))  # first occurrence
        if best is None or counts[r] < best:
            best, best_row = int(counts[r]), block[r].copy()
    witness = Labeling(k, q, tuple(int(c) for c in best_row))
    return SearchResult(k, q, best, witness, size, time.perf_counter() - start, "brute")


# --------------------------------------------------------------------------
# branch and bound
# --------------------------------------------------------------------------


def vertex_order_heuristic(t: Triangulation) -> list[int]:
    """Greedy order completing as many cells as possible at each step; ties by smallest id."""
    n = t.num_vertices
    vcells: list[list[int]] = [[] for _ in range(n)]
    for ci, cell in enumerate(t.cells):
        for v in cell:
            vcells[v].append(ci)
    missing = [len(c) for c in t.cells]
    placed = [False] * n
    order = []
    for _ in range(n):
        best_v, best_gain = -1, -1
        for v in range(n):
            if placed[v]:
                continue
            gain = sum(1 for ci in vcells[v] if missing[ci] == 1)
            if gain > best_gain:
                best_v, best_gain = v, gain
        placed[best_v] = True
        order.append(best_v)
        for ci in vcells[best_v]:
            missing[ci] -= 1
    return order


class _BranchBound:
    """Depth-first colour assignment with per-cell candidate masks.

    For every cell the search keeps the bitwise AND of its vertices' candidate
    colour sets (a singleton once the vertex is coloured). A cell whose AND is
    empty is non-monochromatic in every completion, so the number of such cells
    never overestimates the final cost.
    """

    def __init__(self, t: Triangulation, order: list[int]):
        self.t = t
        self.order = order
        n = t.num_vertices
        self.colors = allowed_color_lists(t.k, t.q)
        masks = [sum(1 << (c - 1) for c in cs) for cs in self.colors]
        self.vcells: list[list[int]] = [[] for _ in range(n)]
        self.cand = []
        for ci, cell in enumerate(t.cells):
            acc = -1
            for v in cell:
                self.vcells[v].append(ci)
                acc &= masks[v]
            self.cand.append(acc)
        self.cost = sum(1 for a in self.cand if a == 0)
        self.assign = [0] * n
        self.nodes = 0
        self.limit = 0
        self.best: tuple[int, ...] | None = None
        self.best_cost: int | None = None
        self.stop_at_first = False
        self.shared = None  # multiprocessing.Value holding a global incumbent

    def _apply(self, v: int, c: int) -> tuple[list[tuple[int, int]], int]:
        bit = 1 << (c - 1)
        cand = self.cand
        changed = []
        added = 0
        for ci in self.vcells[v]:
            old = cand[ci]
            new = old & bit
            if new != old:
                cand[ci] = new
                changed.append((ci, old))
                if not new:
                    added += 1
        self.cost += added
        self.assign[v] = c
        return changed, added

    def _undo(self, v: int, changed, added: int) -> None:
        cand = self.cand
        for ci, old in changed:
            cand[ci] = old
        self.cost -= added
        self.assign[v] = 0

    def fix_prefix(self, colors: tuple[int, ...]) -> bool:
        for v, c in zip(self.order, colors):
            self._apply(v, c)
        return self.cost < self.limit

    def run(self, depth: int = 0) -> bool:
        """Explore below ``depth``; return True once the search should stop."""
        self.nodes += 1
        if self.shared is not None and not self.nodes & 1023:
            self.limit = min(self.limit, self.shared.value)
        if depth == len(self.order):
            self.best_cost = self.cost
            self.best = tuple(self.assign)
            if self.stop_at_first:
                return True
            self.limit = self.cost
            if self.shared is not None:
                with self.shared.get_lock():
                    if self.cost < self.shared.value:
                        self.shared.value = self.cost
            return False
        v = self.order[depth]
        for c in self.colors[v]:
            changed, added = self._apply(v, c)
            if self.cost < self.limit and self.run(depth + 1):
                self._undo(v, changed, added)
                return True
            self._undo(v, changed, added)
        return False


_worker_shared = None


def _init_worker(shared):
    global _worker_shared
    _worker_shared = shared


def _run_task(args):
    k, q, order, prefix, limit = args
    bb = _BranchBound(_triangulation(k, q), order)
    bb.shared = _worker_shared
    bb.limit = min(limit, _worker_shared.value) if _worker_shared is not None else limit
    if bb.fix_prefix(prefix):
        bb.run(len(prefix))
    return bb.best_cost, bb.nodes


def _prefixes(bb: _BranchBound, depth: int) -> list[tuple[int, ...]]:
    return list(product(*(bb.colors[v] for v in bb.order[:depth])))


def _improve(t: Triangulation, order: list[int], incumbent: int, config: SearchConfig) -> tuple[int, int]:
    """Smallest cost strictly below ``incumbent``, or ``incumbent`` itself; plus node count."""
    if config.threads <= 1:
        bb = _BranchBound(t, order)
        bb.limit = incumbent
        bb.run()
        return (incumbent if bb.best_cost is None else bb.best_cost), bb.nodes

    probe = _BranchBound(t, order)
    depth = config.split_depth
    if depth is None:
        depth = 0
        while depth < len(order) and len(_prefixes(probe, depth)) < 8 * config.threads:
            depth += 1
    tasks = [(t.k, t.q, order, p, incumbent) for p in _prefixes(probe, depth)]
    shared = mp.Value("i", incumbent)
    best, nodes = incumbent, 0
    with ProcessPoolExecutor(config.threads, initializer=_init_worker, initargs=(shared,)) as pool:
        for cost, n in pool.map(_run_task, tasks):
            nodes += n
            if cost is not None:
                best = min(best, cost)
    return best, nodes


def lex_min_labeling(t: Triangulation, target: int) -> tuple[Labeling, int]:
    """Lexicographically smallest Sperner labeling of cost at most ``target``."""
    bb = _BranchBound(t, list(range(t.num_vertices)))
    bb.limit = target + 1
    bb.stop_at_first = True
    bb.run()
    if bb.best is None:
        raise ValueError(f"no Sperner labeling with at most {target} non-monochromatic cells")
    return Labeling(t.k, t.q, bb.best), bb.nodes


def branch_bound_min(k: int, q: int, config: SearchConfig | None = None) -> SearchResult:
    """Exact minimum by branch and bound, seeded with the first-choice cost.

    Phase one proves the optimum value using the greedy vertex order; phase two
    recovers the lexicographically smallest optimal labeling in vertex-id
    order, which is independent of thread count.
    """
    config = config or SearchConfig()
    check_params(k, q)
    start = time.perf_counter()
    t = _triangulation(k, q)
    seed = count_nonmono(t, first_choice_labeling(k, q))
    order = vertex_order_heuristic(t)
    m, nodes1 = _improve(t, order, seed, config)
    witness, nodes2 = lex_min_labeling(t, m)
    elapsed = time.perf_counter() - start
    log.info("k=%d q=%d m=%d nodes=%d+%d %.2fs", k, q, m, nodes1, nodes2, elapsed)
    return SearchResult(
        k, q, m, witness, nodes1 + nodes2, elapsed, "branch_bound",
        {"seed": seed, "prove_nodes": nodes1, "witness_nodes": nodes2},
    )


def minimize(k: int, q: int, method: str = "branch_bound", config: SearchConfig | None = None) -> SearchResult:
    config = config or SearchConfig()
    if method in ("brute", "brute_force"):
        return brute_force_min(k, q, config.budget, config.block_size)
    if method in ("bb", "branch_bound"):
        return branch_bound_min(k, q, config)
    raise ValueError(f"unknown method {method!r}")


# --------------------------------------------------------------------------
# certificates
# --------------------------------------------------------------------------


def verify_certificate(k: int, q: int, witness: Labeling, claimed_m: int) -> bool:
    """Recount the witness on an independently built triangulation."""
    if (witness.k, witness.q) != (k, q) or not is_sperner(witness):
        return False
    return count_nonmono(_reference_triangulation(k, q), witness) == claimed_m


def load_certificate(text: str) -> tuple[int, int, Labeling, int]:
    data = json.loads(text)
    k, q = int(data["k"]), int(data["q"])
    return k, q, Labeling(k, q, tuple(data["colors"])), int(data["m"])


def check_certificate_json(text: str) -> bool:
    try:
        k, q, witness, m = load_certificate(text)
    except (KeyError, ValueError, TypeError):
        return False
    return verify_certificate(k, q, witness, m)


def conjecture_probe(result: SearchResult) -> dict:
    """Where the exact value sits between the closed-form bounds (descriptive only)."""
    lo, up = lower_bound(result.k, result.q), upper_bound(result.k, result.q)
    return {"k": result.k, "q": result.q, "lower": lo, "exact": result.m, "upper": up, "meets_upper": result.m == up}
