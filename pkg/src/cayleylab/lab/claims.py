"""Registry of audited statements and their per-structure evaluation.

Each claim expands into quantifier instances (an element, a subset, a
morphism, ...).  An instance evaluates to ``holds``, ``counterexample`` or
``not-applicable`` (its premise is false).  A claim holds on a structure when
no instance is a counterexample and at least one instance applies.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Iterable

from ..core import (
    CheckMode,
    as_mode,
    cached_classify,
    global_identities,
    power,
    profiles,
)
from ..errors import NotApplicable, QuotientError
from ..morphisms import (
    Morphism,
    check_morphism,
    enumerate_morphisms,
    first_isomorphy,
    isomorphic_via_group,
    second_third_isomorphy,
)
from ..normality import (
    _build_quotient,
    _cosets,
    _normal_def,
    commutation_witness,
    complement_subgroup_search,
    conjugation_witness,
    quotient_by_relation,
)
from ..subobjects import (
    _subgroup_witness,
    enumerate_disguised_subgroups,
    identity_invariance_check,
    s_partition,
)
from ..table import CayleyTable, SubsetView, decode_products
from .canonical import MAX_CANONICAL_ORDER, canonical_form

HOLDS = "holds"
COUNTEREXAMPLE = "counterexample"
NOT_APPLICABLE = "not-applicable"

REGISTRY = {
    "CL-LEM24": "every right (left) identity of g equals g^-1*g (g*g^-1)",
    "CL-IIR": "I_R(g) = I_L(g^-1) and I_L(g) = I_R(g^-1)",
    "CL-P26A": "identities are unique; I_R(g) = I(G) forces a group",
    "CL-P26B": "id^n = id for every identity",
    "CL-P26C": "inverses are unique and (g^-1)^-1 = g",
    "CL-P26D": "finite order n: I_R(g) = I_L(g) and g^-1 = g^(n-1)",
    "CL-P26E": "I_R(g1*g2) = I_R(g2) and I_L(g1*g2) = I_L(g1)",
    "CL-P26F": "a unique global right or left identity forces a group",
    "CL-P26G": "left or right cancellativity forces a group",
    "CL-R27": "regular = disguised = inverse",
    "CL-R211": "Q*id = id*Q = Q for identities id in Q",
    "CL-P212": "S-set partition parts 1, 2i, 2ii, 2iii",
    "CL-L32": "normal subgroups contain I(G)",
    "CL-P33": "definition, conjugation and commutation normality agree",
    "CL-T34A": "a central element forces a group",
    "CL-T34B": "cyclic forces a group",
    "CL-T34C": "a normal disguised-subgroup forces a group",
    "CL-T37": "G/Q is a group when I(G) is inside Q",
    "CL-C38": "G/Q is a group when G\\Q holds no disguised-subgroup",
    "CL-C39": "coset quotient equals the relation quotient",
    "CL-P43": "homomorphisms send identities to e",
    "CL-P45": "kernels are normal disguised-subgroups",
    "CL-C46": "a homomorphism into a group forces a group",
    "CL-P47": "images and preimages of (normal) subgroups",
    "CL-P48": "isomorphic structures have matching quotients",
    "CL-ISO1": "G/Ker(h) is isomorphic to Im(h)",
    "CL-ISO2": "(G/N)/(K/N) is isomorphic to G/K",
    "CL-ISO3": "(Q1*Q2)/Q2 is isomorphic to Q1/(Q1&Q2)",
}
CLAIM_IDS = tuple(REGISTRY)


@dataclass(frozen=True)
class AuditFinding:
    claim: str
    structure: str
    mode: CheckMode
    verdict: str
    params: str = ""
    witness: str = ""

    def sort_key(self):
        return (self.claim, len(self.structure), self.structure, self.params)

    def line(self) -> str:
        return "\t".join(
            (self.claim, str(self.mode), self.structure, self.params or "-", self.verdict, self.witness or "-")
        )

    @classmethod
    def from_line(cls, line: str) -> AuditFinding:
        claim, mode, structure, params, verdict, witness = line.rstrip("\n").split("\t")
        return cls(
            claim, structure, CheckMode(mode), verdict,
            "" if params == "-" else params, "" if witness == "-" else witness,
        )


@dataclass(frozen=True)
class AuditContext:
    """Groups used as homomorphism targets and mediators, and partner structures for CL-P48."""

    codomains: tuple[CayleyTable, ...]
    partners: tuple[CayleyTable, ...] = ()


@lru_cache(maxsize=None)
def small_groups(max_order: int) -> tuple[CayleyTable, ...]:
    """One canonical table per group isomorphism class of order up to ``max_order`` (at most 4)."""
    from .enumeration import enumerate_tables

    out = {}
    for k in range(1, min(max_order, 4) + 1):
        for t in enumerate_tables(k, "group"):
            out.setdefault(canonical_form(t), None)
    return tuple(decode_products(code) for code in sorted(out, key=lambda c: (len(c), c)))


def default_context(table: CayleyTable) -> AuditContext:
    return AuditContext(small_groups(max(1, min(table.order, 4))), (table,))


def structure_code(table: CayleyTable) -> str:
    return canonical_form(table) if table.order <= MAX_CANONICAL_ORDER else table.encoding()


# formatting ----------------------------------------------------------------

def _nm(t: CayleyTable, g: int) -> str:
    return t.names[g]


def _set(t: CayleyTable, s: Iterable[int]) -> str:
    return "[" + " ".join(t.names[g] for g in sorted(s)) + "]"


def _fmt_cls_witness(t: CayleyTable, w: tuple | None) -> str:
    if not w:
        return ""
    if isinstance(w[0], str):
        return f"{w[0]}({','.join(t.names[i] for i in w[1:])})"
    return "(" + ",".join(t.names[i] for i in w) + ")"


def _not_group(t: CayleyTable) -> str:
    return "isGroup=0:" + _fmt_cls_witness(t, cached_classify(t).witnesses.get("isGroup"))


def format_params(t: CayleyTable, params: dict) -> str:
    parts = []
    for key, val in params.items():
        if isinstance(val, SubsetView):
            val = val.format()
        elif isinstance(val, Morphism):
            val = ",".join(f"{t.names[g]}->{v}" for g, v in enumerate(val.map))
        elif isinstance(val, CayleyTable):
            val = val.encoding()
        elif isinstance(val, int) and key in _ELEMENT_KEYS:
            val = t.names[val]
        parts.append(f"{key}={val}")
    return ";".join(parts)


_ELEMENT_KEYS = {"g", "h", "g1", "g2", "id"}
_SUBSET_KEYS = {"Q", "Q1", "Q2", "N", "K"}


def parse_params(t: CayleyTable, text: str) -> dict:
    """Inverse of :func:`format_params`; morphisms need a preceding ``cod=`` entry."""
    out: dict = {}
    if not text:
        return out
    for part in text.split(";"):
        key, _, val = part.partition("=")
        if key in _ELEMENT_KEYS:
            out[key] = t.index(val)
        elif key in _SUBSET_KEYS:
            out[key] = SubsetView.parse(t, val)
        elif key == "R":
            # a subset of the codomain
            out[key] = SubsetView.parse(out["cod"], val)
        elif key in ("cod", "G2"):
            out[key] = decode_products(val)
        elif key == "hom":
            cod = out["cod"]
            images = dict(p.split("->") for p in val.split(","))
            out[key] = Morphism(t, cod, tuple(int(images[n]) for n in t.names))
        else:
            out[key] = val
    return out


# claims ----------------------------------------------------------------------

Outcome = tuple  # (verdict, witness)
_NA: Outcome = (NOT_APPLICABLE, "")
_OK: Outcome = (HOLDS, "")


def _cx(witness: str) -> Outcome:
    return (COUNTEREXAMPLE, witness)


@dataclass(frozen=True)
class Claim:
    id: str
    instances: Callable
    evaluate: Callable
    standing: Callable | None = None
    """Returns a reason string when the structure fails the claim's standing hypothesis."""


def _standing_disguised(t: CayleyTable, mode: CheckMode):
    if not cached_classify(t).is_disguised(mode):
        return f"not a {mode} disguised-group"
    return None


def _elements(t, mode, ctx):
    for g in t.elements:
        yield {"g": g}


def _element_inverse_pairs(t, mode, ctx):
    for g in t.elements:
        for h in sorted(profiles(t)[g].inverses):
            yield {"g": g, "h": h}


def _single(t, mode, ctx):
    yield {}


@lru_cache(maxsize=2048)
def _subgroups(t: CayleyTable, mode: CheckMode) -> tuple[SubsetView, ...]:
    return tuple(enumerate_disguised_subgroups(t, mode))


@lru_cache(maxsize=2048)
def _normal_subgroups(t: CayleyTable, mode: CheckMode) -> tuple[SubsetView, ...]:
    return tuple(q for q in _subgroups(t, mode) if _normal_def(t, q))


def _subgroup_instances(t, mode, ctx):
    for q in _subgroups(t, mode):
        yield {"Q": q}


@lru_cache(maxsize=2048)
def _morphisms(t: CayleyTable, cod: CayleyTable) -> tuple[Morphism, ...]:
    return tuple(enumerate_morphisms(t, cod))


def _morphism_instances(t, mode, ctx):
    for cod in ctx.codomains:
        for h in _morphisms(t, cod):
            yield {"cod": cod, "hom": h}


# CL-LEM24
def _lem24(t, p, mode, ctx):
    g, h = p["g"], p["h"]
    prof = profiles(t)[g]
    tp = t.products
    applied = False
    hg, gh = tp[h][g], tp[g][h]
    if hg in prof.right_identities:
        applied = True
        other = sorted(prof.right_identities - {hg})
        if other:
            return _cx(f"h*g={_nm(t, hg)};id2={_nm(t, other[0])};side=right")
    if gh in prof.left_identities:
        applied = True
        other = sorted(prof.left_identities - {gh})
        if other:
            return _cx(f"g*h={_nm(t, gh)};id2={_nm(t, other[0])};side=left")
    return _OK if applied else _NA


# CL-IIR
def _iir(t, p, mode, ctx):
    g, h = p["g"], p["h"]
    pg, ph = profiles(t)[g], profiles(t)[h]
    if pg.right_identities != ph.left_identities:
        return _cx(f"I_R(g)={_set(t, pg.right_identities)};I_L(h)={_set(t, ph.left_identities)}")
    if pg.left_identities != ph.right_identities:
        return _cx(f"I_L(g)={_set(t, pg.left_identities)};I_R(h)={_set(t, ph.right_identities)}")
    return _OK


# CL-P26A
def _p26a_instances(t, mode, ctx):
    for g in t.elements:
        yield {"part": "unique", "g": g}
    yield {"part": "group"}


def _p26a(t, p, mode, ctx):
    if p["part"] == "unique":
        g = p["g"]
        prof = profiles(t)[g]
        name = _nm(t, g)
        if len(prof.right_identities) != 1:
            return _cx(f"|I_R({name})|={len(prof.right_identities)};I_R({name})={_set(t, prof.right_identities)}")
        if len(prof.left_identities) != 1:
            return _cx(f"|I_L({name})|={len(prof.left_identities)};I_L({name})={_set(t, prof.left_identities)}")
        return _OK
    ids = global_identities(t)
    full = next(
        (g for g in t.elements if profiles(t)[g].right_identities == ids or profiles(t)[g].left_identities == ids),
        None,
    )
    if full is None:
        return _NA
    if cached_classify(t).isGroup:
        return _OK
    return _cx(f"g={_nm(t, full)};I(G)={_set(t, ids)};{_not_group(t)}")


# CL-P26B
def _identity_instances(t, mode, ctx):
    for i in sorted(global_identities(t)):
        yield {"id": i}


def _p26b(t, p, mode, ctx):
    i = p["id"]
    for k in range(2, t.order + 2):
        v = power(t, i, k)
        if v != i:
            return _cx(f"k={k};id^k={_nm(t, v)}")
    prof = profiles(t)[i]
    if i not in prof.right_identities or i not in prof.left_identities:
        return _cx("id is not its own two-sided identity")
    if i not in prof.inverses:
        return _cx("id is not its own inverse")
    return _OK


# CL-P26C
def _p26c(t, p, mode, ctx):
    g = p["g"]
    inv = profiles(t)[g].inverses
    if len(inv) != 1:
        return _cx(f"inverses({_nm(t, g)})={_set(t, inv)}")
    (h,) = inv
    back = profiles(t)[h].inverses
    if back != {g}:
        return _cx(f"inverses({_nm(t, h)})={_set(t, back)}")
    return _OK


# CL-P26D
def _p26d(t, p, mode, ctx):
    g = p["g"]
    prof = profiles(t)[g]
    n = prof.order
    if n == float("inf"):
        return _NA
    if prof.right_identities != prof.left_identities:
        return _cx(f"order={n};I_R={_set(t, prof.right_identities)};I_L={_set(t, prof.left_identities)}")
    if n >= 2:
        expected = power(t, g, n - 1)
        if prof.inverses != {expected}:
            return _cx(f"order={n};g^(n-1)={_nm(t, expected)};inverses={_set(t, prof.inverses)}")
    return _OK


# CL-P26E
def _pairs(t, mode, ctx):
    for a in t.elements:
        for b in t.elements:
            yield {"g1": a, "g2": b}


def _p26e(t, p, mode, ctx):
    a, b = p["g1"], p["g2"]
    ab = t.products[a][b]
    pr = profiles(t)
    if pr[ab].right_identities != pr[b].right_identities:
        return _cx(f"I_R(g1*g2)={_set(t, pr[ab].right_identities)};I_R(g2)={_set(t, pr[b].right_identities)}")
    if pr[ab].left_identities != pr[a].left_identities:
        return _cx(f"I_L(g1*g2)={_set(t, pr[ab].left_identities)};I_L(g1)={_set(t, pr[a].left_identities)}")
    return _OK


# CL-P26F
def _p26f(t, p, mode, ctx):
    rep = cached_classify(t)
    if not (rep.hasUniqueGlobalRightIdentity or rep.hasUniqueGlobalLeftIdentity):
        return _NA
    return _OK if rep.isGroup else _cx(_not_group(t))


# CL-P26G
def _p26g(t, p, mode, ctx):
    rep = cached_classify(t)
    if not (rep.isLeftCancellative or rep.isRightCancellative):
        return _NA
    side = "left" if rep.isLeftCancellative else "right"
    return _OK if rep.isGroup else _cx(f"{side}-cancellative;{_not_group(t)}")


# CL-R27
def _standing_semigroup(t, mode):
    return None if cached_classify(t).isAssociative else "not associative"


def _r27(t, p, mode, ctx):
    rep = cached_classify(t)
    vals = (rep.isRegularSemigroup, rep.is_disguised(mode), rep.isInverseSemigroup)
    if not any(vals):
        return _NA
    if all(vals):
        return _OK
    return _cx("regular={:d};disguised={:d};inverse={:d}".format(*vals))


# CL-R211
def _r211_instances(t, mode, ctx):
    ids = global_identities(t)
    for q in _subgroups(t, mode):
        for i in q.members:
            if i in ids:
                yield {"Q": q, "id": i}


def _r211(t, p, mode, ctx):
    c = identity_invariance_check(t, p["Q"], p["id"])
    if c:
        return _OK
    side, _, *members = c.witness
    return _cx(f"{side}={_set(t, members)}")


# CL-P212
def _p212(t, p, mode, ctx):
    part = s_partition(t, p["Q"], mode)
    for name, verdict in part.parts().items():
        if verdict is not None and not verdict:
            w = verdict.witness or ("fails",)
            detail = w[0] + "(" + ",".join(t.names[i] for i in w[1:] if isinstance(i, int)) + ")"
            return _cx(f"part={name};S={part.s.format()};{detail}")
    return _OK


# CL-L32
def _l32(t, p, mode, ctx):
    q = p["Q"]
    if not _normal_def(t, q):
        return _NA
    missing = sorted(global_identities(t) - set(q.members))
    return _cx(f"missing={_nm(t, missing[0])}") if missing else _OK


# CL-P33
def _p33(t, p, mode, ctx):
    q = p["Q"]
    by_def = bool(_normal_def(t, q))
    by_conj = conjugation_witness(t, q, lambda g: profiles(t)[g].inverses) is None
    by_comm = commutation_witness(t, q, uniform=True) is None
    if by_def == by_conj == by_comm:
        return _OK
    return _cx(f"def={by_def:d};conj={by_conj:d};comm={by_comm:d}")


# CL-T34A
def _t34a(t, p, mode, ctx):
    tp = t.products
    central = next((g for g in t.elements if all(tp[g][x] == tp[x][g] for x in t.elements)), None)
    if central is None:
        return _NA
    return _OK if cached_classify(t).isGroup else _cx(f"central={_nm(t, central)};{_not_group(t)}")


# CL-T34B
def _t34b(t, p, mode, ctx):
    rep = cached_classify(t)
    if not rep.isCyclic:
        return _NA
    gen = rep.witnesses["isCyclic"][1]
    return _OK if rep.isGroup else _cx(f"generator={_nm(t, gen)};{_not_group(t)}")


# CL-T34C
def _t34c(t, p, mode, ctx):
    if not _normal_def(t, p["Q"]):
        return _NA
    return _OK if cached_classify(t).isGroup else _cx(_not_group(t))


def _quotient_outcome(t, q) -> Outcome:
    try:
        res = _build_quotient(t, _cosets(t, q))
    except QuotientError as exc:
        w = exc.witness
        return _cx(f"quotient:{w[0] if isinstance(w[0], str) else 'product'}(" + ",".join(
            t.names[i] for i in w if isinstance(i, int)) + ")")
    if not res.group_report.isGroup:
        return _cx(f"quotient={res.quotient_table.encoding()};{_not_group(res.quotient_table)}")
    return _OK


# CL-T37
def _t37(t, p, mode, ctx):
    q = p["Q"]
    if not global_identities(t) <= set(q.members):
        return _NA
    return _quotient_outcome(t, q)


# CL-C38
def _c38(t, p, mode, ctx):
    q = p["Q"]
    if complement_subgroup_search(t, q, mode) is not None:
        return _NA
    return _quotient_outcome(t, q)


# CL-C39
def _standing_c39(t, mode):
    base = _standing_disguised(t, mode)
    if base:
        return base
    return None if cached_classify(t).isDisguisedStrict else "inverses are not unique"


def _c39_instances(t, mode, ctx):
    for q in _normal_subgroups(t, mode):
        yield {"Q": q}


def _c39(t, p, mode, ctx):
    try:
        r = quotient_by_relation(t, p["Q"])
    except NotApplicable:
        return _NA
    if not r.equivalence:
        w = r.equivalence.witness
        return _cx(f"relation-not-{w[0]}(" + ",".join(t.names[i] for i in w[1:]) + ")")
    if not r.same_partition:
        return _cx("classes=" + "|".join(_set(t, c) for c in r.classes))
    if not r.same_table:
        return _cx("tables differ")
    return _OK


# CL-P43 / CL-P45 / CL-C46 / CL-ISO1
def _p43(t, p, mode, ctx):
    rep = check_morphism(p["hom"])
    ok = rep.identities_to_identity
    return _OK if ok else _cx(f"id={_nm(t, ok.witness[0])};h(id)={p['hom'].map[ok.witness[0]]}")


def _p45(t, p, mode, ctx):
    k = check_morphism(p["hom"]).kernel
    w = _subgroup_witness(t, k, mode)
    if w is not None:
        return _cx(f"kernel={k.format()};not-subgroup:{w[0]}")
    if not _normal_def(t, k):
        return _cx(f"kernel={k.format()};not-normal")
    return _OK


def _c46(t, p, mode, ctx):
    return _OK if cached_classify(t).isGroup else _cx(_not_group(t))


def _iso1(t, p, mode, ctx):
    r = first_isomorphy(p["hom"], mode)
    return _OK if r else _cx(f"stage={r.stage}")


# CL-P47
def _p47_instances(t, mode, ctx):
    for cod in ctx.codomains:
        cod_subs = _subgroups(cod, CheckMode.STRICT)
        cod_normal = _normal_subgroups(cod, CheckMode.STRICT)
        for h in _morphisms(t, cod):
            for q in _subgroups(t, mode):
                yield {"cod": cod, "hom": h, "part": "a", "Q": q}
            for q in cod_subs:
                yield {"cod": cod, "hom": h, "part": "b", "R": q}
            for q in cod_normal:
                yield {"cod": cod, "hom": h, "part": "c", "R": q}
            if check_morphism(h).is_surjective:
                for q in _normal_subgroups(t, mode):
                    yield {"cod": cod, "hom": h, "part": "d", "Q": q}


def _p47(t, p, mode, ctx):
    h = p["hom"]
    cod = h.codomain
    part = p["part"]
    if part in ("a", "d"):
        q = p["Q"]
        img = SubsetView.of(cod, {h.map[g] for g in q.members})
        if _subgroup_witness(cod, img, CheckMode.STRICT) is not None:
            return _cx(f"image={img.format()};not-subgroup")
        if part == "d" and not _normal_def(cod, img):
            return _cx(f"image={img.format()};not-normal")
        return _OK
    q2 = p["R"]
    pre = SubsetView.of(t, (g for g in t.elements if h.map[g] in q2))
    if not pre.mask or _subgroup_witness(t, pre, mode) is not None:
        return _cx(f"preimage={pre.format()};not-subgroup")
    if part == "c" and not _normal_def(t, pre):
        return _cx(f"preimage={pre.format()};not-normal")
    return _OK


# CL-P48
def _p48_instances(t, mode, ctx):
    normal = [q for q in _subgroups(t, mode) if global_identities(t) <= set(q.members)]
    for g2 in ctx.partners:
        for q in normal:
            yield {"G2": g2, "Q": q}


@lru_cache(maxsize=4096)
def _iso_via(a: CayleyTable, b: CayleyTable, mediators: tuple[CayleyTable, ...]):
    return isomorphic_via_group(a, b, mediators)


@lru_cache(maxsize=4096)
def _quotient_forms(t: CayleyTable, mode: CheckMode) -> dict:
    """Canonical forms of G/Q for disguised-normal Q, keyed by Q's mask."""
    out = {}
    if not cached_classify(t).is_disguised(mode):
        return out
    ids = global_identities(t)
    for q in _subgroups(t, mode):
        if ids <= set(q.members):
            try:
                res = _build_quotient(t, _cosets(t, q))
            except QuotientError:
                continue
            out[q.mask] = canonical_form(res.quotient_table)
    return out


def _p48(t, p, mode, ctx):
    g2 = p["G2"]
    q = p["Q"]
    if not cached_classify(g2).is_disguised(mode):
        return _NA
    wit = _iso_via(t, g2, ctx.codomains)
    if wit is None:
        return _NA
    mine = _quotient_forms(t, mode).get(q.mask)
    if mine is None:
        return _NA
    theirs = set(_quotient_forms(g2, mode).values())
    if mine in theirs:
        return _OK
    return _cx(f"mediator={wit.mediating.encoding()};G/Q={mine};no-matching-quotient")


# CL-ISO2 / CL-ISO3
def _iso2_instances(t, mode, ctx):
    normal = _normal_subgroups(t, mode)
    for small in normal:
        for big in normal:
            if small <= big:
                yield {"N": small, "K": big}


def _iso2(t, p, mode, ctx):
    try:
        r = second_third_isomorphy(t, p["N"], p["K"], "second", mode)
    except NotApplicable:
        return _NA
    return _OK if r else _cx(f"stage={r.stage}")


def _iso3_instances(t, mode, ctx):
    for q1 in _subgroups(t, mode):
        for q2 in _normal_subgroups(t, mode):
            yield {"Q1": q1, "Q2": q2}


def _iso3(t, p, mode, ctx):
    try:
        r = second_third_isomorphy(t, p["Q1"], p["Q2"], "third", mode)
    except NotApplicable:
        return _NA
    return _OK if r else _cx(f"stage={r.stage}")


CLAIMS: dict[str, Claim] = {
    c.id: c
    for c in (
        Claim("CL-LEM24", _element_inverse_pairs, _lem24),
        Claim("CL-IIR", _element_inverse_pairs, _iir),
        Claim("CL-P26A", _p26a_instances, _p26a),
        Claim("CL-P26B", _identity_instances, _p26b),
        Claim("CL-P26C", _elements, _p26c),
        Claim("CL-P26D", _elements, _p26d),
        Claim("CL-P26E", _pairs, _p26e),
        Claim("CL-P26F", _single, _p26f),
        Claim("CL-P26G", _single, _p26g),
        Claim("CL-R27", _single, _r27, _standing_semigroup),
        Claim("CL-R211", _r211_instances, _r211),
        Claim("CL-P212", _subgroup_instances, _p212),
        Claim("CL-L32", _subgroup_instances, _l32),
        Claim("CL-P33", _subgroup_instances, _p33),
        Claim("CL-T34A", _single, _t34a),
        Claim("CL-T34B", _single, _t34b),
        Claim("CL-T34C", _subgroup_instances, _t34c),
        Claim("CL-T37", _subgroup_instances, _t37),
        Claim("CL-C38", _subgroup_instances, _c38),
        Claim("CL-C39", _c39_instances, _c39, _standing_c39),
        Claim("CL-P43", _morphism_instances, _p43),
        Claim("CL-P45", _morphism_instances, _p45),
        Claim("CL-C46", _morphism_instances, _c46),
        Claim("CL-P47", _p47_instances, _p47),
        Claim("CL-P48", _p48_instances, _p48),
        Claim("CL-ISO1", _morphism_instances, _iso1),
        Claim("CL-ISO2", _iso2_instances, _iso2),
        Claim("CL-ISO3", _iso3_instances, _iso3),
    )
}
assert tuple(CLAIMS) == CLAIM_IDS


def check_claim(
    claim: str,
    table: CayleyTable,
    params: dict | str | None = None,
    mode=CheckMode.LITERAL,
    ctx: AuditContext | None = None,
) -> AuditFinding:
    """Evaluate one claim on one structure.

    With ``params`` only that instance is evaluated; otherwise every
    admissible instance is tried in order and the first counterexample, if
    any, is reported together with its parameters.
    """
    try:
        spec = CLAIMS[claim]
    except KeyError:
        raise KeyError(f"unknown claim {claim!r}") from None
    mode = as_mode(mode)
    ctx = ctx or default_context(table)
    code = structure_code(table)
    standing = (spec.standing or _standing_disguised)(table, mode)
    if standing:
        return AuditFinding(claim, code, mode, NOT_APPLICABLE, "", standing)
    if params is not None:
        if isinstance(params, str):
            params = parse_params(table, params)
        verdict, witness = spec.evaluate(table, params, mode, ctx)
        return AuditFinding(claim, code, mode, verdict, format_params(table, params), witness)
    applied = 0
    for inst in spec.instances(table, mode, ctx):
        verdict, witness = spec.evaluate(table, inst, mode, ctx)
        if verdict == COUNTEREXAMPLE:
            return AuditFinding(claim, code, mode, verdict, format_params(table, inst), witness)
        if verdict == HOLDS:
            applied += 1
    if not applied:
        return AuditFinding(claim, code, mode, NOT_APPLICABLE, "", "no applicable instance")
    return AuditFinding(claim, code, mode, HOLDS, "", f"instances={applied}")


def replay(finding: AuditFinding, ctx: AuditContext | None = None) -> AuditFinding:
    """Re-evaluate the recorded instance of a finding on its structure."""
    table = decode_products(finding.structure)
    return check_claim(finding.claim, table, finding.params or {}, finding.mode, ctx)
