"""Exhaustive enumeration of small operation tables."""

from __future__ import annotations

import itertools
from concurrent.futures import ProcessPoolExecutor
from functools import lru_cache

from ..core import CheckMode, ClassificationReport, as_mode, classify
from ..errors import LabError
from ..table import CayleyTable

FILTERS = {
    "all": None,
    "semigroup": "isAssociative",
    "monoid": "isMonoid",
    "regular": "isRegularSemigroup",
    "inverse": "isInverseSemigroup",
    "literal": "isDisguisedLiteral",
    "strict": "isDisguisedStrict",
    "disguised": None,
    "commutative": "isCommutative",
    "group": "isGroup",
}
MAX_FULL_SCAN = 3
MAX_PRUNED = 4


def _raw_associative(rows) -> bool:
    n = len(rows)
    for x in range(n):
        rx = rows[x]
        for y in range(n):
            rxy = rows[rx[y]]
            ry = rows[y]
            for z in range(n):
                if rxy[z] != rx[ry[z]]:
                    return False
    return True


def full_scan(n: int):
    """Every ``n x n`` table, in lexicographic order of the row-major cells."""
    for cells in itertools.product(range(n), repeat=n * n):
        yield tuple(cells[i * n:(i + 1) * n] for i in range(n))


def _consistent(t, n) -> bool:
    for x in range(n):
        tx = t[x]
        for y in range(n):
            a = tx[y]
            if a < 0:
                continue
            ta = t[a]
            ty = t[y]
            for z in range(n):
                b = ta[z]
                if b < 0:
                    continue
                c = ty[z]
                if c < 0:
                    continue
                d = tx[c]
                if d >= 0 and b != d:
                    return False
    return True


def pruned_semigroups(n: int, first_row: tuple[int, ...] | None = None):
    """Associative tables by cell-by-cell backtracking.

    Cells are filled in row-major order with values ascending, and every
    associativity triple whose four cells are known is checked as soon as a
    cell is set, so output is in lexicographic order.  ``first_row`` fixes row
    0, which is how work is split between processes.
    """
    t = [[-1] * n for _ in range(n)]
    start = 0
    if first_row is not None:
        t[0] = list(first_row)
        if not _consistent(t, n):
            return
        start = n
    cells = n * n

    def fill(k):
        if k == cells:
            yield tuple(tuple(r) for r in t)
            return
        i, j = divmod(k, n)
        row = t[i]
        for v in range(n):
            row[j] = v
            if _consistent(t, n):
                yield from fill(k + 1)
        row[j] = -1

    yield from fill(start)


def _matches(report: ClassificationReport, filt: str, mode: CheckMode) -> bool:
    if filt == "all":
        return True
    if filt == "disguised":
        return report.is_disguised(mode)
    return getattr(report, FILTERS[filt])


def _make(rows) -> CayleyTable:
    return CayleyTable(tuple(str(i) for i in range(len(rows))), rows)


def _check_bounds(n: int, filt: str):
    if filt not in FILTERS:
        raise LabError(f"unknown filter {filt!r}; known: {', '.join(FILTERS)}")
    if n < 1:
        raise LabError("order must be at least 1")
    if filt == "all" and n > MAX_FULL_SCAN:
        raise LabError(f"filter 'all' is limited to order {MAX_FULL_SCAN}")
    if n > MAX_PRUNED:
        raise LabError(f"enumeration is limited to order {MAX_PRUNED}")


def _prefix_job(args):
    n, filt, mode, first_row = args
    out = []
    for rows in pruned_semigroups(n, first_row):
        if filt in ("all", "semigroup") or _matches(classify(_make(rows)), filt, mode):
            out.append(rows)
    return out


def enumerate_tables(n: int, filter: str = "all", mode=CheckMode.LITERAL, workers: int = 1) -> list[CayleyTable]:
    """All tables of order ``n`` in a class, in lexicographic order.

    Orders up to 3 are scanned in full; order 4 goes through pruned
    backtracking and needs a filter at least as strong as ``semigroup``.
    """
    mode = as_mode(mode)
    _check_bounds(n, filter)
    return [_make(rows) for rows in _enumerate_rows(n, filter, mode, max(1, workers))]


@lru_cache(maxsize=64)
def _enumerate_rows(n: int, filt: str, mode: CheckMode, workers: int) -> tuple:
    if n <= MAX_FULL_SCAN:
        out = []
        for rows in full_scan(n):
            if filt == "all":
                out.append(rows)
            elif _raw_associative(rows) and (filt == "semigroup" or _matches(classify(_make(rows)), filt, mode)):
                out.append(rows)
        return tuple(out)
    jobs = [(n, filt, mode, row) for row in itertools.product(range(n), repeat=n)]
    if workers == 1:
        results = map(_prefix_job, jobs)
    else:
        with ProcessPoolExecutor(workers) as pool:
            results = list(pool.map(_prefix_job, jobs, chunksize=max(1, len(jobs) // (4 * workers))))
    return tuple(sorted(rows for chunk in results for rows in chunk))


def pruned_tables(n: int) -> list[CayleyTable]:
    """Associative tables of order ``n`` from backtracking alone (no full scan)."""
    if not 1 <= n <= MAX_PRUNED:
        raise LabError(f"pruned enumeration supports orders 1..{MAX_PRUNED}")
    return [_make(rows) for rows in pruned_semigroups(n)]
