"""Disguised-subgroups, generated closures, set products and the S-set partition."""

from __future__ import annotations

from dataclasses import dataclass

from .core import CheckMode, as_mode, cached_classify, global_identities, profiles
from .errors import NotApplicable
from .table import CayleyTable, Check, SubsetView, as_subset


def require_disguised(table: CayleyTable, mode) -> CheckMode:
    mode = as_mode(mode)
    if not cached_classify(table).is_disguised(mode):
        raise NotApplicable(f"table is not a {mode} disguised-group")
    return mode


def identity_requirements(table: CayleyTable, g: int, mode) -> frozenset[int]:
    """Identities of ``g`` that a subgroup containing ``g`` must also contain.

    Both modes reduce to ``I_R(g) | I_L(g)``: in strict mode these are the two
    unique identities, in literal mode every identity is required.
    """
    return profiles(table)[g].identities


def inverse_requirements(table: CayleyTable, g: int, mode) -> frozenset[int]:
    return profiles(table)[g].inverses


def _subgroup_witness(table: CayleyTable, q: SubsetView, mode: CheckMode):
    t = table.products
    members = q.members
    for a in members:
        for b in members:
            if t[a][b] not in q:
                return ("closure", a, b, t[a][b])
    for g in members:
        missing = sorted(identity_requirements(table, g, mode) - set(members))
        if missing:
            return ("identity", g, missing[0])
    for g in members:
        missing = sorted(inverse_requirements(table, g, mode) - set(members))
        if missing:
            return ("inverse", g, missing[0])
    return None


def is_disguised_subgroup(table: CayleyTable, q, mode=CheckMode.LITERAL) -> Check:
    """Closure, identities and inverses of members all inside ``q``.

    The witness names the first violated condition: ``("closure", a, b, a*b)``,
    ``("identity", g, id)`` or ``("inverse", g, h)``.
    """
    q = as_subset(table, q)
    if not q.mask:
        raise NotApplicable("empty subset")
    mode = require_disguised(table, mode)
    w = _subgroup_witness(table, q, mode)
    return Check(w is None, w)


def is_subgroup_fast(table: CayleyTable, q: SubsetView, mode) -> bool:
    """Same decision as :func:`is_disguised_subgroup` without the precondition checks."""
    return bool(q.mask) and _subgroup_witness(table, q, as_mode(mode)) is None


def unique_inverse(table: CayleyTable, g: int) -> int:
    (h,) = profiles(table)[g].inverses
    return h


def subgroup_criterion(table: CayleyTable, q) -> Check:
    """``q1 * q2^-1`` stays in ``q`` for all members; witness is the violating pair."""
    q = as_subset(table, q)
    if not q.mask:
        raise NotApplicable("empty subset")
    require_disguised(table, CheckMode.STRICT)
    t = table.products
    for a in q.members:
        for b in q.members:
            if t[a][unique_inverse(table, b)] not in q:
                return Check(False, (a, b))
    return Check(True)


def enumerate_disguised_subgroups(table: CayleyTable, mode=CheckMode.LITERAL, max_size: int | None = None):
    n = table.order
    if max_size is None:
        max_size = n
    if max_size > n:
        raise ValueError("max_size exceeds the table order")
    mode = require_disguised(table, mode)
    out = []
    for mask in range(1, 1 << n):
        if bin(mask).count("1") > max_size:
            continue
        q = SubsetView(table, mask)
        if _subgroup_witness(table, q, mode) is None:
            out.append(q)
    return out


def generated_closure(table: CayleyTable, seed) -> SubsetView:
    """Smallest subset containing ``seed`` and closed under the operation."""
    seed = as_subset(table, seed)
    t = table.products
    members = set(seed.members)
    frontier = list(members)
    while frontier:
        new = set()
        for a in frontier:
            for b in list(members):
                for p in (t[a][b], t[b][a]):
                    if p not in members:
                        new.add(p)
        members |= new
        frontier = list(new)
    return SubsetView.of(table, members)


def setwise_product(table: CayleyTable, a, b) -> SubsetView:
    a = as_subset(table, a)
    b = as_subset(table, b)
    t = table.products
    return SubsetView.of(table, {t[x][y] for x in a.members for y in b.members})


def identity_invariance_check(table: CayleyTable, q, identity: int) -> Check:
    """``q * {id} == q`` and ``{id} * q == q``.

    Witness is ``("right", ...)`` / ``("left", ...)`` followed by the
    translated set.
    """
    q = as_subset(table, q)
    table.check_index(identity)
    if identity not in q:
        raise NotApplicable(f"{table.names[identity]} is not in the subset")
    if identity not in global_identities(table):
        raise NotApplicable(f"{table.names[identity]} is not an identity")
    t = table.products
    right = SubsetView.of(table, {t[x][identity] for x in q.members})
    if right != q:
        return Check(False, ("right", identity, *right.members))
    left = SubsetView.of(table, {t[identity][x] for x in q.members})
    if left != q:
        return Check(False, ("left", identity, *left.members))
    return Check(True)


@dataclass(frozen=True)
class SPartition:
    """The S-set of a disguised-subgroup together with per-part verdicts.

    A part whose premise does not hold has verdict ``None``.
    """

    subgroup: SubsetView
    s: SubsetView
    identities_inside: bool
    part1: Check | None
    part2i: Check | None
    part2ii: Check | None
    part2iii: Check | None

    def parts(self) -> dict[str, Check | None]:
        return {"1": self.part1, "2i": self.part2i, "2ii": self.part2ii, "2iii": self.part2iii}


def s_set(table: CayleyTable, q: SubsetView, mode) -> SubsetView:
    outside = q.complement()
    return SubsetView.of(
        table,
        (g for g in outside.members if identity_requirements(table, g, mode) <= set(outside.members)),
    )


def s_partition(table: CayleyTable, q, mode=CheckMode.LITERAL) -> SPartition:
    q = as_subset(table, q)
    mode = as_mode(mode)
    sub = is_disguised_subgroup(table, q, mode)
    if not sub:
        raise NotApplicable(f"{q} is not a disguised-subgroup: {sub.witness}")
    t = table.products
    s = s_set(table, q, mode)
    ids = global_identities(table)
    inside = ids <= set(q.members)
    if inside:
        part1 = Check(True) if not s.mask else Check(False, ("S-nonempty", *s.members))
        return SPartition(q, s, True, part1, None, None, None)

    if not s.mask:
        part2i = Check(False, ("S-empty", min(ids - set(q.members))))
    else:
        w = _subgroup_witness(table, s, mode)
        part2i = Check(w is None, None if w is None else ("S-not-subgroup", *w))

    rest = (q | s).complement()
    part2ii = Check(True)
    for a in q.members:
        for b in s.members:
            for x, y in ((a, b), (b, a)):
                if t[x][y] not in rest:
                    part2ii = Check(False, ("product", x, y, t[x][y]))
                    break
            if not part2ii:
                break
        if not part2ii:
            break
    if part2ii:
        for g in rest.members:
            stray = sorted(inverse_requirements(table, g, mode) - set(rest.members))
            if stray:
                part2ii = Check(False, ("inverse", g, stray[0]))
                break

    part2iii = Check(True)
    outside = q.complement()
    for a in q.members:
        for b in outside.members:
            for x, y in ((a, b), (b, a)):
                if t[x][y] in s:
                    part2iii = Check(False, ("product", x, y, t[x][y]))
                    break
            if not part2iii:
                break
        if not part2iii:
            break
    return SPartition(q, s, False, None, part2i, part2ii, part2iii)
