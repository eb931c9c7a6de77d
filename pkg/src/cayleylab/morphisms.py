"""Homomorphisms from disguised-groups into groups and the isomorphy theorems."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .core import CheckMode, cached_classify, global_identities, group_inverse, profiles, two_sided_identity
from .errors import BudgetExceeded, CategoryError, NotApplicable, QuotientError
from .normality import _build_quotient, _cosets, _normal_def
from .subobjects import _subgroup_witness, is_disguised_subgroup, setwise_product
from .table import CayleyTable, Check, SubsetView, as_subset

DEFAULT_BUDGET = 10**7


@dataclass(frozen=True)
class Morphism:
    domain: CayleyTable
    codomain: CayleyTable
    map: tuple[int, ...]

    def __post_init__(self):
        if len(self.map) != self.domain.order:
            raise ValueError("map length must equal the domain order")
        if any(not 0 <= v < self.codomain.order for v in self.map):
            raise ValueError("map value outside the codomain")

    def __call__(self, g: int) -> int:
        return self.map[g]

    @classmethod
    def parse(cls, domain: CayleyTable, codomain: CayleyTable, text: str) -> Morphism:
        """Parse ``g->h(g)`` pairs, e.g. ``e->e,c->a,c2->e,c3->a``."""
        images: dict[int, int] = {}
        for part in text.replace(" ", "").split(","):
            if not part:
                continue
            src, arrow, dst = part.partition("->")
            if not arrow:
                raise ValueError(f"bad map entry {part!r}")
            g = domain.index(src)
            if g in images:
                raise ValueError(f"{src} mapped twice")
            images[g] = codomain.index(dst)
        missing = [domain.names[g] for g in domain.elements if g not in images]
        if missing:
            raise ValueError(f"no image for {', '.join(missing)}")
        return cls(domain, codomain, tuple(images[g] for g in domain.elements))

    def format(self) -> str:
        return ",".join(f"{self.domain.names[g]}->{self.codomain.names[v]}" for g, v in enumerate(self.map))

    def __str__(self):
        return self.format()


@dataclass(frozen=True)
class MorphismReport:
    is_homomorphism: Check
    is_disguised_injective: Check
    is_surjective: bool
    kernel: SubsetView
    image: frozenset[int]
    identities_to_identity: Check
    """Every identity of the domain maps to the codomain identity."""
    inverses_preserved: Check | None
    """``h(g)^-1 == h(g^-1)``; ``None`` unless the domain is strict."""


def require_group(table: CayleyTable, role: str = "codomain") -> int:
    if not cached_classify(table).isGroup:
        raise CategoryError(f"{role} is not a group")
    return two_sided_identity(table)


def _hom_witness(h: Morphism):
    t = h.domain.products
    u = h.codomain.products
    m = h.map
    n = h.domain.order
    for a in range(n):
        for b in range(n):
            if m[t[a][b]] != u[m[a]][m[b]]:
                return (a, b)
    return None


def check_morphism(h: Morphism) -> MorphismReport:
    e = require_group(h.codomain)
    dom = h.domain
    m = h.map
    hw = _hom_witness(h)
    kernel = SubsetView.of(dom, (g for g in dom.elements if m[g] == e))
    image = frozenset(m)
    outside = [g for g in dom.elements if m[g] != e]
    inj = Check(True)
    for i, a in enumerate(outside):
        b = next((b for b in outside[i + 1:] if m[b] == m[a]), None)
        if b is not None:
            inj = Check(False, (a, b))
            break
    bad_id = sorted(g for g in global_identities(dom) if m[g] != e)
    ids = Check(not bad_id, (bad_id[0],) if bad_id else None)
    inv = None
    if cached_classify(dom).isDisguisedStrict:
        inv = Check(True)
        for g in dom.elements:
            (gi,) = profiles(dom)[g].inverses
            if group_inverse(h.codomain, m[g]) != m[gi]:
                inv = Check(False, (g, gi))
                break
    return MorphismReport(
        Check(hw is None, hw), inj, image == frozenset(h.codomain.elements), kernel, image, ids, inv
    )


def is_homomorphism(h: Morphism) -> bool:
    return _hom_witness(h) is None


def enumerate_morphisms(domain: CayleyTable, codomain: CayleyTable, budget: int = DEFAULT_BUDGET) -> list[Morphism]:
    """All homomorphisms in lexicographic order of the image tuple."""
    require_group(codomain)
    n, k = domain.order, codomain.order
    if k ** n > budget:
        raise BudgetExceeded(f"{k}^{n} candidate maps exceed the budget of {budget}")
    t = domain.products
    u = codomain.products
    out = []
    m = [-1] * n

    def consistent(i: int) -> bool:
        # every pair with both factors assigned and the product assigned
        for a in range(i + 1):
            for b in range(i + 1):
                if a != i and b != i:
                    continue
                p = t[a][b]
                if p <= i and m[p] != u[m[a]][m[b]]:
                    return False
        for a in range(i):
            for b in range(i):
                if t[a][b] == i and m[i] != u[m[a]][m[b]]:
                    return False
        return True

    def extend(i: int):
        if i == n:
            out.append(Morphism(domain, codomain, tuple(m)))
            return
        for v in range(k):
            m[i] = v
            if consistent(i):
                extend(i + 1)
        m[i] = -1

    extend(0)
    return out


def transfer_subgroup(h: Morphism, q, direction: str = "forward", mode=CheckMode.LITERAL):
    """Image (``forward``) or preimage (``backward``) of a subgroup.

    Returns ``(subset, report)`` where the report holds ``subgroup`` and, when
    the source is normal (and ``h`` is onto, for images), ``normal``.
    """
    rep = check_morphism(h)
    if not rep.is_homomorphism:
        raise NotApplicable(f"not a homomorphism: {rep.is_homomorphism.witness}")
    if direction == "forward":
        q = as_subset(h.domain, q)
        src = is_disguised_subgroup(h.domain, q, mode)
        if not src:
            raise NotApplicable(f"{q} is not a disguised-subgroup of the domain")
        out = SubsetView.of(h.codomain, {h.map[g] for g in q.members})
        report = {"subgroup": is_disguised_subgroup(h.codomain, out, CheckMode.STRICT)}
        if _normal_def(h.domain, q) and rep.is_surjective:
            report["normal"] = _normal_def(h.codomain, out)
    elif direction == "backward":
        q = as_subset(h.codomain, q)
        src = is_disguised_subgroup(h.codomain, q, CheckMode.STRICT)
        if not src:
            raise NotApplicable(f"{q} is not a subgroup of the codomain")
        out = SubsetView.of(h.domain, (g for g in h.domain.elements if h.map[g] in q))
        report = {"subgroup": is_disguised_subgroup(h.domain, out, mode)}
        if _normal_def(h.codomain, q):
            sub = report["subgroup"]
            report["normal"] = _normal_def(h.domain, out) if sub else Check(False, ("not-subgroup",))
    else:
        raise ValueError("direction must be 'forward' or 'backward'")
    return out, report


@dataclass(frozen=True)
class IsoReport:
    """Outcome of building a canonical map and checking it is an isomorphism.

    ``stage`` names the first failing step, or is ``None`` on success.
    """

    ok: bool
    stage: str | None = None
    witness: tuple | None = None
    map: tuple[int, ...] | None = None
    source: CayleyTable | None = None
    target: CayleyTable | None = None
    notes: dict = field(default_factory=dict)

    def __bool__(self):
        return self.ok


def _check_iso(source: CayleyTable, target: CayleyTable, mapping: Sequence[int]) -> IsoReport:
    s, t = source.products, target.products
    for a in source.elements:
        for b in source.elements:
            if mapping[s[a][b]] != t[mapping[a]][mapping[b]]:
                return IsoReport(False, "homomorphism", (a, b), tuple(mapping), source, target)
    if len(set(mapping)) != len(mapping):
        a = next(a for a in source.elements if list(mapping).count(mapping[a]) > 1)
        return IsoReport(False, "injective", (a,), tuple(mapping), source, target)
    if len(mapping) != target.order:
        missing = min(set(target.elements) - set(mapping))
        return IsoReport(False, "surjective", (missing,), tuple(mapping), source, target)
    return IsoReport(True, None, None, tuple(mapping), source, target)


def _canonical_map(target_of, blocks) -> tuple[list[int] | None, tuple | None]:
    """Send each block to the common ``target_of`` value of its members."""
    out = []
    for k, block in enumerate(blocks):
        vals = {target_of(g) for g in block}
        if len(vals) != 1:
            a, b = sorted(block, key=target_of)[0], sorted(block, key=target_of)[-1]
            return None, (k, a, b)
        out.append(vals.pop())
    return out, None


def first_isomorphy(h: Morphism, mode=CheckMode.LITERAL) -> IsoReport:
    """Verify ``domain / Ker(h)`` is isomorphic to ``Im(h)`` via ``[g] -> h(g)``."""
    rep = check_morphism(h)
    if not rep.is_homomorphism:
        raise NotApplicable(f"not a homomorphism: {rep.is_homomorphism.witness}")
    dom = h.domain
    kernel = rep.kernel
    sub = _subgroup_witness(dom, kernel, mode)
    if sub is not None:
        return IsoReport(False, "kernel-subgroup", sub)
    try:
        quotient = _build_quotient(dom, _cosets(dom, kernel))
    except QuotientError as exc:
        return IsoReport(False, "quotient", exc.witness)
    image = sorted(rep.image)
    image_table = h.codomain.restrict(image)
    pos = {v: k for k, v in enumerate(image)}
    blocks = quotient.partition.blocks
    mapping, w = _canonical_map(lambda g: pos[h.map[g]], blocks)
    if mapping is None:
        return IsoReport(False, "well-defined", w)
    out = _check_iso(quotient.quotient_table, image_table, mapping)
    out.notes["onto_codomain"] = rep.is_surjective
    out.notes["quotient_is_group"] = quotient.group_report.isGroup
    if out.ok and not quotient.group_report.isGroup:
        return IsoReport(False, "quotient-group", (), out.map, out.source, out.target, out.notes)
    return out


def _normal_subgroup_or_raise(table: CayleyTable, q: SubsetView, name: str, mode):
    w = _subgroup_witness(table, q, mode) if q.mask else ("empty",)
    if w is not None:
        raise NotApplicable(f"{name}={q} is not a disguised-subgroup: {w}")
    if not _normal_def(table, q):
        raise NotApplicable(f"{name}={q} is not normal")


def _image_subset(part, sub: SubsetView, quotient_table: CayleyTable) -> SubsetView:
    blocks = part.blocks
    chosen = [k for k, b in enumerate(blocks) if b <= set(sub.members)]
    return SubsetView.of(quotient_table, chosen)


def second_third_isomorphy(table: CayleyTable, q1, q2, which: str, mode=CheckMode.LITERAL) -> IsoReport:
    """Build both sides of the second or third isomorphism theorem and compare.

    ``second``: ``q1`` and ``q2`` are nested normal subgroups, in either
    order; with ``N`` the smaller and ``K`` the larger the check is
    ``(G/N)/(K/N) ~ G/K`` through ``[[g]_N] -> [g]_K``.

    ``third``: ``q2`` normal, ``q1`` any subgroup; the check is
    ``(q1*q2)/q2 ~ q1/(q1 & q2)`` through ``x(q1 & q2) -> x q2``.
    """
    q1 = as_subset(table, q1)
    q2 = as_subset(table, q2)
    if which == "second":
        return _second(table, q1, q2, mode)
    if which == "third":
        return _third(table, q1, q2, mode)
    raise ValueError("which must be 'second' or 'third'")


def _second(table, q1, q2, mode) -> IsoReport:
    if q1 <= q2:
        small, big = q1, q2
    elif q2 <= q1:
        small, big = q2, q1
    else:
        raise NotApplicable("subgroups are not nested")
    _normal_subgroup_or_raise(table, small, "inner", mode)
    _normal_subgroup_or_raise(table, big, "outer", mode)
    notes = {"inner": small.format(), "outer": big.format()}
    try:
        g_mod_n = _build_quotient(table, _cosets(table, small))
    except QuotientError as exc:
        return IsoReport(False, "G/inner", exc.witness, notes=notes)
    k_mod_n = _image_subset(g_mod_n.partition, big, g_mod_n.quotient_table)
    if not g_mod_n.group_report.isGroup:
        return IsoReport(False, "G/inner-group", (), notes=notes)
    w = _subgroup_witness(g_mod_n.quotient_table, k_mod_n, CheckMode.STRICT)
    if w is not None:
        return IsoReport(False, "outer/inner-subgroup", w, notes=notes)
    if not _normal_def(g_mod_n.quotient_table, k_mod_n):
        return IsoReport(False, "outer/inner-normal", (), notes=notes)
    try:
        lhs = _build_quotient(g_mod_n.quotient_table, _cosets(g_mod_n.quotient_table, k_mod_n))
        rhs = _build_quotient(table, _cosets(table, big))
    except QuotientError as exc:
        return IsoReport(False, "quotient", exc.witness, notes=notes)
    inner_part = g_mod_n.partition
    outer_part = rhs.partition
    # block of lhs -> the G/K block containing any g in the union of its G/N blocks
    mapping = []
    for outer_block in lhs.partition.blocks:
        elements = set().union(*(inner_part.blocks[k] for k in outer_block))
        targets = {outer_part.block_of(g) for g in elements}
        if len(targets) != 1:
            return IsoReport(False, "well-defined", tuple(sorted(elements)), notes=notes)
        mapping.append(targets.pop())
    out = _check_iso(lhs.quotient_table, rhs.quotient_table, mapping)
    out.notes.update(notes)
    return out


def _third(table, q1, q2, mode) -> IsoReport:
    w = _subgroup_witness(table, q1, mode) if q1.mask else ("empty",)
    if w is not None:
        raise NotApplicable(f"Q1={q1} is not a disguised-subgroup: {w}")
    _normal_subgroup_or_raise(table, q2, "Q2", mode)
    prod = setwise_product(table, q1, q2)
    inter = q1 & q2
    notes = {"product": prod.format(), "intersection": inter.format()}
    w = _subgroup_witness(table, prod, mode)
    if w is not None:
        return IsoReport(False, "product-subgroup", w, notes=notes)
    if not _normal_def(table, prod):
        notes["product_normal"] = False
    if not inter.mask:
        return IsoReport(False, "intersection-empty", (), notes=notes)
    prod_table = table.restrict(prod.members)
    q1_table = table.restrict(q1.members)
    pos_prod = {g: k for k, g in enumerate(prod.members)}
    pos_q1 = {g: k for k, g in enumerate(q1.members)}
    q2_in_prod = SubsetView.of(prod_table, (pos_prod[g] for g in q2.members))
    inter_in_q1 = SubsetView.of(q1_table, (pos_q1[g] for g in inter.members))
    for sub_table, sub, stage in ((prod_table, q2_in_prod, "Q2-in-product"), (q1_table, inter_in_q1, "intersection-in-Q1")):
        w = _subgroup_witness(sub_table, sub, mode)
        if w is not None:
            return IsoReport(False, stage + "-subgroup", w, notes=notes)
        if not _normal_def(sub_table, sub):
            return IsoReport(False, stage + "-normal", (), notes=notes)
    try:
        lhs = _build_quotient(prod_table, _cosets(prod_table, q2_in_prod))
        rhs = _build_quotient(q1_table, _cosets(q1_table, inter_in_q1))
    except QuotientError as exc:
        return IsoReport(False, "quotient", exc.witness, notes=notes)
    # rhs block x(Q1&Q2) -> lhs block x Q2, with x read back as an element of the product
    q1_members = q1.members
    mapping, w = _canonical_map(
        lambda k: lhs.partition.block_of(pos_prod[q1_members[k]]), rhs.partition.blocks
    )
    if mapping is None:
        return IsoReport(False, "well-defined", w, notes=notes)
    out = _check_iso(rhs.quotient_table, lhs.quotient_table, mapping)
    out.notes.update(notes)
    return out


@dataclass(frozen=True)
class IsoWitness:
    mediating: CayleyTable
    left: Morphism
    right: Morphism
    left_report: MorphismReport
    right_report: MorphismReport


def disguised_isomorphisms(domain: CayleyTable, group: CayleyTable, budget: int = DEFAULT_BUDGET) -> list[Morphism]:
    """Surjective, disguised-injective homomorphisms in lexicographic order."""
    out = []
    for h in enumerate_morphisms(domain, group, budget):
        r = check_morphism(h)
        if r.is_surjective and r.is_disguised_injective:
            out.append(h)
    return out


def isomorphic_via_group(
    g1: CayleyTable, g2: CayleyTable, mediators: Sequence[CayleyTable], budget: int = DEFAULT_BUDGET
) -> IsoWitness | None:
    for med in mediators:
        require_group(med, "mediator")
        left = disguised_isomorphisms(g1, med, budget)
        if not left:
            continue
        right = disguised_isomorphisms(g2, med, budget)
        if right:
            return IsoWitness(med, left[0], right[0], check_morphism(left[0]), check_morphism(right[0]))
    return None

