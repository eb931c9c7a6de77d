"""Per-element identity/inverse profiles and structure classification."""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from functools import lru_cache

from .table import CayleyTable

INFINITE = math.inf


class CheckMode(str, enum.Enum):
    """How to read the axioms.

    ``LITERAL`` takes the axioms verbatim, so elements may own several
    identities and inverses.  ``STRICT`` additionally demands a unique right
    identity, left identity and inverse for every element.
    """

    LITERAL = "literal"
    STRICT = "strict"

    def __str__(self):
        return self.value


def as_mode(mode) -> CheckMode:
    return mode if isinstance(mode, CheckMode) else CheckMode(str(mode))


@dataclass(frozen=True)
class ElementProfile:
    element: int
    right_identities: frozenset[int]
    left_identities: frozenset[int]
    identities: frozenset[int]
    inverses: frozenset[int]
    """Inverses in the one-sided sense: g*h or h*g is an identity of g."""
    d_inverses: frozenset[int]
    """Those inverses with h*g a right identity of g and g*h a left identity of g."""
    order: int | float


@lru_cache(maxsize=4096)
def _profiles(table: CayleyTable) -> tuple[ElementProfile, ...]:
    t = table.products
    n = table.order
    rid = [frozenset(x for x in range(n) if t[g][x] == g) for g in range(n)]
    lid = [frozenset(x for x in range(n) if t[x][g] == g) for g in range(n)]
    ids = [rid[g] | lid[g] for g in range(n)]
    all_ids = frozenset().union(*ids)
    out = []
    for g in range(n):
        inv = frozenset(h for h in range(n) if t[g][h] in ids[g] or t[h][g] in ids[g])
        d_inv = frozenset(h for h in inv if t[h][g] in rid[g] and t[g][h] in lid[g])
        out.append(ElementProfile(g, rid[g], lid[g], ids[g], inv, d_inv, _order(t, g, all_ids)))
    return tuple(out)


def _order(t, g, all_ids) -> int | float:
    # left-associated powers g, g*g, (g*g)*g, ...; the sequence is eventually periodic
    seen = set()
    p, k = g, 1
    while p not in seen:
        if p in all_ids:
            return k
        seen.add(p)
        p = t[p][g]
        k += 1
    return INFINITE


def element_profile(table: CayleyTable, g: int) -> ElementProfile:
    table.check_index(g)
    return _profiles(table)[g]


def profiles(table: CayleyTable) -> tuple[ElementProfile, ...]:
    return _profiles(table)


def global_identities(table: CayleyTable) -> frozenset[int]:
    """Every element that is a one-sided identity of at least one element."""
    return frozenset().union(*(p.identities for p in _profiles(table)))


def power(table: CayleyTable, g: int, k: int) -> int:
    """``g^k`` bracketed from the left, ``((g*g)*g)*...``.

    Bracketing only matters on non-associative tables.
    """
    table.check_index(g)
    if k < 1:
        raise ValueError("power exponent must be >= 1")
    p = g
    for _ in range(k - 1):
        p = table.products[p][g]
    return p


def powers(table: CayleyTable, g: int) -> frozenset[int]:
    """``{g^k : k >= 1}``."""
    t = table.products
    seen = []
    p = g
    while p not in seen:
        seen.append(p)
        p = t[p][g]
    return frozenset(seen)


def associativity_witness(table: CayleyTable) -> tuple[int, int, int] | None:
    t = table.products
    n = table.order
    for x in range(n):
        tx = t[x]
        for y in range(n):
            xy = tx[y]
            ty = t[y]
            txy = t[xy]
            for z in range(n):
                if txy[z] != tx[ty[z]]:
                    return (x, y, z)
    return None


def is_associative(table: CayleyTable) -> bool:
    return associativity_witness(table) is None


def idempotents(table: CayleyTable) -> list[int]:
    return [e for e in table.elements if table.products[e][e] == e]


def two_sided_identity(table: CayleyTable) -> int | None:
    t = table.products
    for e in table.elements:
        if all(t[e][x] == x and t[x][e] == x for x in table.elements):
            return e
    return None


def group_inverse(table: CayleyTable, g: int) -> int:
    """Two-sided inverse of ``g`` with respect to the global identity."""
    e = two_sided_identity(table)
    if e is None:
        raise ValueError("table has no two-sided identity")
    for h in table.elements:
        if table.products[g][h] == e and table.products[h][g] == e:
            return h
    raise ValueError(f"{table.names[g]} has no inverse")


def semigroup_inverses(table: CayleyTable, x: int) -> list[int]:
    """``{x' : x x' x = x and x' x x' = x'}``."""
    t = table.products
    return [y for y in table.elements if t[t[x][y]][x] == x and t[t[y][x]][y] == y]


def inverse_by_idempotents(table: CayleyTable) -> tuple[bool, tuple | None]:
    """Regular semigroup whose idempotents commute."""
    w = associativity_witness(table)
    if w:
        return False, ("non-associative", *w)
    t = table.products
    for x in table.elements:
        if not any(t[t[x][y]][x] == x for y in table.elements):
            return False, ("not-regular", x)
    es = idempotents(table)
    for e in es:
        for f in es:
            if t[e][f] != t[f][e]:
                return False, ("idempotents-do-not-commute", e, f)
    return True, None


def inverse_by_unique_inverses(table: CayleyTable) -> tuple[bool, tuple | None]:
    """Every element has exactly one semigroup inverse."""
    w = associativity_witness(table)
    if w:
        return False, ("non-associative", *w)
    for x in table.elements:
        v = semigroup_inverses(table, x)
        if len(v) != 1:
            return False, ("inverse-count", x, *v)
    return True, None


@dataclass(frozen=True)
class ClassificationReport:
    isAssociative: bool
    isMonoid: bool
    isGroup: bool
    isCommutative: bool
    isCyclic: bool
    isLeftCancellative: bool
    isRightCancellative: bool
    isRegularSemigroup: bool
    isInverseSemigroup: bool
    isDisguisedLiteral: bool
    isDisguisedStrict: bool
    hasUniqueGlobalRightIdentity: bool
    hasUniqueGlobalLeftIdentity: bool
    witnesses: dict = field(default_factory=dict, compare=False)

    FLAGS = (
        "isAssociative", "isMonoid", "isGroup", "isCommutative", "isCyclic",
        "isLeftCancellative", "isRightCancellative", "isRegularSemigroup",
        "isInverseSemigroup", "isDisguisedLiteral", "isDisguisedStrict",
        "hasUniqueGlobalRightIdentity", "hasUniqueGlobalLeftIdentity",
    )

    def flags(self) -> dict[str, bool]:
        return {f: getattr(self, f) for f in self.FLAGS}

    def is_disguised(self, mode) -> bool:
        return self.isDisguisedStrict if as_mode(mode) is CheckMode.STRICT else self.isDisguisedLiteral


def _disguised_literal_witness(table: CayleyTable):
    t = table.products
    for p in _profiles(table):
        g = p.element
        if not p.right_identities:
            return ("no-right-identity", g)
        if not p.left_identities:
            return ("no-left-identity", g)
        if not p.inverses:
            return ("no-inverse", g)
        for h in sorted(p.inverses - p.d_inverses):
            if t[h][g] not in p.right_identities:
                return ("inverse-right-condition", g, h)
            return ("inverse-left-condition", g, h)
    return None


def _strict_witness(table: CayleyTable):
    for p in _profiles(table):
        if len(p.right_identities) != 1:
            return ("right-identities", p.element, *sorted(p.right_identities))
        if len(p.left_identities) != 1:
            return ("left-identities", p.element, *sorted(p.left_identities))
        if len(p.inverses) != 1:
            return ("inverses", p.element, *sorted(p.inverses))
    return None


def _unique_global_witness(table: CayleyTable, side: str):
    sets = [p.right_identities if side == "right" else p.left_identities for p in _profiles(table)]
    for g, s in enumerate(sets):
        if len(s) != 1:
            return (f"{side}-identities", g, *sorted(s))
    for g, s in enumerate(sets):
        if s != sets[0]:
            return (f"different-{side}-identity", 0, g)
    return None


def classify(table: CayleyTable) -> ClassificationReport:
    t = table.products
    n = table.order
    els = range(n)
    w: dict[str, tuple] = {}
    flags: dict[str, bool] = {}

    aw = associativity_witness(table)
    assoc = aw is None
    flags["isAssociative"] = assoc
    if not assoc:
        w["isAssociative"] = aw
        for f in ClassificationReport.FLAGS[1:]:
            flags[f] = False
            w[f] = ("non-associative", *aw)
        return ClassificationReport(**flags, witnesses=w)

    e = two_sided_identity(table)
    flags["isMonoid"] = e is not None
    if e is None:
        w["isMonoid"] = ("no-identity", *(
            next(x for x in els if t[c][x] != x or t[x][c] != x) for c in els
        ))
        flags["isGroup"] = False
        w["isGroup"] = w["isMonoid"]
    else:
        bad = next((g for g in els if not any(t[g][h] == e == t[h][g] for h in els)), None)
        flags["isGroup"] = bad is None
        if bad is not None:
            w["isGroup"] = ("no-inverse", bad)

    pair = next(((x, y) for x in els for y in els if t[x][y] != t[y][x]), None)
    flags["isCommutative"] = pair is None
    if pair:
        w["isCommutative"] = pair

    gen = next((g for g in els if len(powers(table, g)) == n), None)
    flags["isCyclic"] = gen is not None
    if gen is None:
        w["isCyclic"] = ("no-generator", *(min(set(els) - powers(table, g)) for g in els))
    else:
        w["isCyclic"] = ("generator", gen)

    lc = next(((a, b, c) for a in els for b in els for c in els if b != c and t[a][b] == t[a][c]), None)
    flags["isLeftCancellative"] = lc is None
    if lc:
        w["isLeftCancellative"] = lc
    rc = next(((a, b, c) for a in els for b in els for c in els if b != c and t[b][a] == t[c][a]), None)
    flags["isRightCancellative"] = rc is None
    if rc:
        w["isRightCancellative"] = rc

    irregular = next((x for x in els if not any(t[t[x][y]][x] == x for y in els)), None)
    flags["isRegularSemigroup"] = irregular is None
    if irregular is not None:
        w["isRegularSemigroup"] = ("not-regular", irregular)

    inv_a, wa = inverse_by_idempotents(table)
    inv_b, wb = inverse_by_unique_inverses(table)
    if inv_a != inv_b:
        raise AssertionError(f"inverse-semigroup procedures disagree on {table.encoding()}")
    flags["isInverseSemigroup"] = inv_a
    if not inv_a:
        w["isInverseSemigroup"] = wa

    dl = _disguised_literal_witness(table)
    flags["isDisguisedLiteral"] = dl is None
    if dl:
        w["isDisguisedLiteral"] = dl
        flags["isDisguisedStrict"] = False
        w["isDisguisedStrict"] = dl
    else:
        ds = _strict_witness(table)
        flags["isDisguisedStrict"] = ds is None
        if ds:
            w["isDisguisedStrict"] = ds

    for side, name in (("right", "hasUniqueGlobalRightIdentity"), ("left", "hasUniqueGlobalLeftIdentity")):
        uw = _unique_global_witness(table, side)
        flags[name] = uw is None
        if uw:
            w[name] = uw
        else:
            w[name] = ("identity", next(iter(_profiles(table)[0].right_identities if side == "right"
                                                else _profiles(table)[0].left_identities)))

    return ClassificationReport(**flags, witnesses=w)


@lru_cache(maxsize=4096)
def cached_classify(table: CayleyTable) -> ClassificationReport:
    return classify(table)
