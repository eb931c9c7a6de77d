"""Normality tests, coset partitions and quotient tables."""

from __future__ import annotations

from dataclasses import dataclass

from .core import CheckMode, ClassificationReport, as_mode, classify, global_identities, profiles
from .errors import NotApplicable, QuotientError
from .subobjects import (
    _subgroup_witness,
    is_disguised_subgroup,
    require_disguised,
    unique_inverse,
)
from .table import CayleyTable, Check, SubsetView, as_subset


def _require_subgroup(table: CayleyTable, q, mode) -> SubsetView:
    q = as_subset(table, q)
    sub = is_disguised_subgroup(table, q, mode)
    if not sub:
        raise NotApplicable(f"{q} is not a disguised-subgroup ({mode}): {sub.witness}")
    return q


def is_normal_def(table: CayleyTable, q, mode=CheckMode.LITERAL) -> Check:
    """``(g1*q1)*(g2*q2) = q3*(g1*g2)`` for some ``q3`` in ``q``, for all choices.

    Witness is the first failing quadruple ``(g1, q1, g2, q2)``.
    """
    q = _require_subgroup(table, q, mode)
    return _normal_def(table, q)


def _normal_def(table: CayleyTable, q: SubsetView) -> Check:
    t = table.products
    members = q.members
    n = table.order
    # left translates q3*x for every x, computed once
    translates = [{t[q3][x] for q3 in members} for x in range(n)]
    for g1 in range(n):
        for q1 in members:
            a = t[g1][q1]
            for g2 in range(n):
                target = translates[t[g1][g2]]
                for q2 in members:
                    if t[a][t[g2][q2]] not in target:
                        return Check(False, (g1, q1, g2, q2))
    return Check(True)


def conjugation_witness(table: CayleyTable, q: SubsetView, inverses) -> tuple | None:
    """First ``(g, q, h)`` with ``g*q*h`` outside ``q``, ``h`` ranging over ``inverses(g)``."""
    t = table.products
    for g in table.elements:
        for x in q.members:
            for h in sorted(inverses(g)):
                if t[t[g][x]][h] not in q:
                    return (g, x, h)
    return None


def is_normal_conjugation(table: CayleyTable, q) -> Check:
    """``g*q*g^-1`` stays in ``q``; needs the unique inverses of a strict table."""
    q = _require_subgroup(table, q, CheckMode.STRICT)
    w = conjugation_witness(table, q, lambda g: (unique_inverse(table, g),))
    return Check(w is None, w if w is None else w[:2])


def commutation_witness(table: CayleyTable, q: SubsetView, uniform: bool) -> tuple | None:
    t = table.products
    els = table.elements
    members = q.members
    for side in ("left", "right"):
        # left clause: g*q1 = q2*g ; right clause: q2*g = g*q1 with q2 given
        for a in members:
            if uniform:
                ok = any(
                    all((t[g][a] == t[b][g]) if side == "left" else (t[a][g] == t[g][b]) for g in els)
                    for b in members
                )
                if not ok:
                    return (side, a)
            else:
                for g in els:
                    ok = any((t[g][a] == t[b][g]) if side == "left" else (t[a][g] == t[g][b]) for b in members)
                    if not ok:
                        return (side, a, g)
    return None


def is_normal_commutation(table: CayleyTable, q, mode=CheckMode.LITERAL, uniform: bool = False) -> Check:
    """Commutation criterion in both directions.

    ``uniform=False``: for every ``q1`` and every ``g`` some ``q2`` has
    ``g*q1 = q2*g`` (and symmetrically), i.e. ``gQ = Qg``.
    ``uniform=True``: one ``q2`` per ``q1`` must serve every ``g`` at once,
    which is stronger than normality in a group.
    """
    q = _require_subgroup(table, q, mode)
    w = commutation_witness(table, q, uniform)
    return Check(w is None, w)


def is_disguised_normal(table: CayleyTable, q, mode=CheckMode.LITERAL) -> Check:
    q = _require_subgroup(table, q, mode)
    missing = sorted(global_identities(table) - set(q.members))
    return Check(not missing, (missing[0],) if missing else None)


def complement_subgroup_search(table: CayleyTable, q, mode=CheckMode.LITERAL) -> SubsetView | None:
    """First disguised-subgroup (in bitmask order) lying entirely outside ``q``."""
    q = as_subset(table, q)
    mode = require_disguised(table, mode)
    outside = q.complement().mask
    sub = outside
    candidates = []
    # all nonempty submasks of the complement, then sorted for bitmask order
    while sub:
        candidates.append(sub)
        sub = (sub - 1) & outside
    for mask in sorted(candidates):
        s = SubsetView(table, mask)
        if _subgroup_witness(table, s, mode) is None:
            return s
    return None


@dataclass(frozen=True)
class CosetPartition:
    table: CayleyTable
    subgroup: SubsetView
    cosets: tuple[frozenset[int], ...]
    """``cosets[g]`` is ``[g] = g*Q``."""
    blocks: tuple[frozenset[int], ...]
    representatives: tuple[int, ...]
    well_defined: bool
    violation: tuple | None

    def block_of(self, g: int) -> int:
        return self.blocks.index(self.cosets[g])


def cosets(table: CayleyTable, q, mode=CheckMode.LITERAL) -> CosetPartition:
    """Left cosets ``[g] = {g*q}``.

    The partition is well defined when distinct cosets are disjoint, they
    cover the table, and each ``g`` lies in its own coset ``[g]``.
    Blocks are ordered by their least element, which is the representative.
    """
    q = _require_subgroup(table, q, mode)
    return _cosets(table, q)


def _cosets(table: CayleyTable, q: SubsetView) -> CosetPartition:
    t = table.products
    n = table.order
    cs = tuple(frozenset(t[g][x] for x in q.members) for g in range(n))
    distinct = sorted(set(cs), key=min)
    violation = None
    for i, a in enumerate(distinct):
        for b in distinct[i + 1:]:
            if a & b:
                ga = cs.index(a)
                gb = cs.index(b)
                violation = ("overlap", ga, gb, min(a & b))
                break
        if violation:
            break
    if violation is None:
        covered = frozenset().union(*distinct)
        if len(covered) != n:
            violation = ("uncovered", min(set(range(n)) - covered))
    if violation is None:
        stray = next((g for g in range(n) if g not in cs[g]), None)
        if stray is not None:
            violation = ("not-in-own-coset", stray)
    reps = tuple(min(b) for b in distinct)
    return CosetPartition(table, q, cs, tuple(distinct), reps, violation is None, violation)


@dataclass(frozen=True)
class QuotientResult:
    partition: CosetPartition
    quotient_table: CayleyTable
    induced_op_well_defined: bool
    group_report: ClassificationReport


def _block_names(table: CayleyTable, reps) -> list[str]:
    return [f"[{table.names[r]}]" for r in reps]


def _quotient_from_classes(table: CayleyTable, blocks, class_of) -> tuple[CayleyTable | None, tuple | None]:
    """Induced product on blocks, checked for every pair of members."""
    t = table.products
    rows = []
    for a in blocks:
        row = []
        for b in blocks:
            target = None
            first = None
            for x in sorted(a):
                for y in sorted(b):
                    k = class_of[t[x][y]]
                    if target is None:
                        target, first = k, (x, y)
                    elif k != target:
                        return None, (*first, x, y)
            row.append(target)
        rows.append(row)
    reps = [min(b) for b in blocks]
    return CayleyTable.from_rows(_block_names(table, reps), rows), None


def build_quotient(table: CayleyTable, q, mode=CheckMode.LITERAL) -> QuotientResult:
    """Quotient by left cosets with ``[g1]*[g2] = [g1*g2]``.

    Raises :class:`QuotientError` when cosets fail to partition or when the
    induced product depends on the chosen representatives; the witness for the
    latter is ``(x1, y1, x2, y2)`` with ``x1, x2`` in one block, ``y1, y2`` in
    another and ``x1*y1``, ``x2*y2`` in different blocks.
    """
    part = cosets(table, q, mode)
    return _build_quotient(table, part)


def _build_quotient(table: CayleyTable, part: CosetPartition) -> QuotientResult:
    if not part.well_defined:
        raise QuotientError("cosets do not partition the table", part.violation)
    class_of = {g: part.block_of(g) for g in table.elements}
    qt, w = _quotient_from_classes(table, part.blocks, class_of)
    if qt is None:
        raise QuotientError("induced product depends on representatives", w)
    return QuotientResult(part, qt, True, classify(qt))


@dataclass(frozen=True)
class RelationQuotient:
    classes: tuple[frozenset[int], ...]
    result: QuotientResult | None
    equivalence: Check
    cosets: QuotientResult | None
    same_partition: bool
    same_table: bool


def _relation_matrix(table: CayleyTable, q: SubsetView):
    t = table.products
    n = table.order
    return [[t[a][unique_inverse(table, b)] in q for b in range(n)] for a in range(n)]


def quotient_by_relation(table: CayleyTable, q) -> RelationQuotient:
    """Quotient by ``g1 ~ g2 iff g1 * g2^-1 in Q`` compared with the coset quotient."""
    q = as_subset(table, q)
    require_disguised(table, CheckMode.STRICT)
    q = _require_subgroup(table, q, CheckMode.STRICT)
    if not _normal_def(table, q):
        raise NotApplicable(f"{q} is not normal")
    n = table.order
    rel = _relation_matrix(table, q)
    eq = Check(True)
    for a in range(n):
        if not rel[a][a]:
            eq = Check(False, ("reflexive", a))
            break
    if eq:
        for a in range(n):
            for b in range(n):
                if rel[a][b] and not rel[b][a]:
                    eq = Check(False, ("symmetric", a, b))
                    break
            if not eq:
                break
    if eq:
        for a in range(n):
            for b in range(n):
                if not rel[a][b]:
                    continue
                c = next((c for c in range(n) if rel[b][c] and not rel[a][c]), None)
                if c is not None:
                    eq = Check(False, ("transitive", a, b, c))
                    break
            if not eq:
                break

    classes = tuple(sorted({frozenset(b for b in range(n) if rel[a][b]) for a in range(n)}, key=min))
    result = None
    if eq:
        class_of = {}
        for k, c in enumerate(classes):
            for g in c:
                class_of[g] = k
        qt, _ = _quotient_from_classes(table, classes, class_of)
        if qt is not None:
            part = CosetPartition(
                table, q, tuple(classes[class_of[g]] for g in range(n)), classes,
                tuple(min(c) for c in classes), True, None,
            )
            result = QuotientResult(part, qt, True, classify(qt))
    try:
        coset_result = _build_quotient(table, _cosets(table, q))
    except QuotientError:
        coset_result = None
    same_partition = coset_result is not None and set(coset_result.partition.blocks) == set(classes)
    same_table = (
        same_partition and result is not None
        and coset_result.quotient_table == result.quotient_table
    )
    return RelationQuotient(classes, result, eq, coset_result, same_partition, same_table)


def right_cosets(table: CayleyTable, q: SubsetView) -> tuple[frozenset[int], ...]:
    t = table.products
    return tuple(frozenset(t[x][g] for x in q.members) for g in table.elements)


def left_equals_right_cosets(table: CayleyTable, q) -> bool:
    q = as_subset(table, q)
    t = table.products
    return all(
        frozenset(t[g][x] for x in q.members) == frozenset(t[x][g] for x in q.members)
        for g in table.elements
    )
