"""Closed-form bounds on the minimum number of non-monochromatic cells, and CSV tables."""

from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass, fields
from typing import Iterable, Mapping

from .lattice import DomainError, checked_int


def _check(k: int, q: int) -> None:
    if k < 2 or q < 1:
        raise DomainError(f"need k >= 2 and q >= 1, got k={k}, q={q}")


def lower_bound(k: int, q: int) -> int:
    """``C(q + k - 3, k - 2)``."""
    _check(k, q)
    return checked_int(math.comb(q + k - 3, k - 2), f"lower_bound({k}, {q})")


def upper_bound(k: int, q: int) -> int:
    """``q^(k-1) - (q-1)^(k-1)``, attained by the first-choice labeling."""
    _check(k, q)
    checked_int(q ** (k - 1), f"{q}^{k - 1}")
    return checked_int(q ** (k - 1) - (q - 1) ** (k - 1), f"upper_bound({k}, {q})")


def q2_exact(k: int) -> int:
    """Exact minimum for ``q = 2``: ``2^(k-1) - 1``."""
    _check(k, 2)
    return checked_int(2 ** (k - 1) - 1, f"q2_exact({k})")


@dataclass
class BoundRow:
    k: int
    q: int
    lower: int
    upper: int
    first_choice_count: int
    exact: int | None = None

    def consistent(self) -> bool:
        ok = self.lower <= self.upper and self.first_choice_count == self.upper
        if self.exact is not None:
            ok = ok and self.lower <= self.exact <= self.upper and self.exact <= self.first_choice_count
        return ok


def bound_row(k: int, q: int, exact: int | None = None, first_choice_count: int | None = None) -> BoundRow:
    up = upper_bound(k, q)
    return BoundRow(k, q, lower_bound(k, q), up, up if first_choice_count is None else first_choice_count, exact)


def emit_figure1_csv(k: int, q_range: Iterable[int], exact: Mapping[int, int] | None = None) -> str:
    """CSV of lower bound and first-choice count per ``q``.

    The ``exact`` column is written only when ``exact`` is given; missing
    entries are left blank.
    """
    qs = list(q_range)
    if not qs:
        raise DomainError("q_range must be non-empty")
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    header = ["q", "lower_bound", "first_choice"]
    if exact is not None:
        header.append("exact")
    writer.writerow(header)
    for q in qs:
        row = [q, lower_bound(k, q), upper_bound(k, q)]
        if exact is not None:
            row.append(exact.get(q, ""))
        writer.writerow(row)
    return buf.getvalue()


def rows_to_csv(rows: Iterable[BoundRow]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    names = [f.name for f in fields(BoundRow)]
    writer.writerow(names)
    for r in rows:
        writer.writerow(["" if getattr(r, n) is None else getattr(r, n) for n in names])
    return buf.getvalue()


def rows_to_table(rows: Iterable[BoundRow]) -> str:
    rows = list(rows)
    head = f"{'k':>3} {'q':>3} {'lower':>10} {'exact':>10} {'upper':>10}"
    lines = [head, "-" * len(head)]
    for r in rows:
        ex = "-" if r.exact is None else str(r.exact)
        lines.append(f"{r.k:>3} {r.q:>3} {r.lower:>10} {ex:>10} {r.upper:>10}")
    return "\n".join(lines) + "\n"
