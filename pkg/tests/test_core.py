import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from cayleylab.core import (
    CheckMode,
    classify,
    element_profile,
    global_identities,
    inverse_by_idempotents,
    inverse_by_unique_inverses,
    power,
)
from cayleylab.lab.builtins import builtin_example
from cayleylab.lab.enumeration import enumerate_tables
from cayleylab.table import CayleyTable


def names(t, s):
    return {t.names[i] for i in s}


def test_profile_z2():
    t = builtin_example("Z2")
    p = element_profile(t, t.index("a"))
    assert names(t, p.right_identities) == {"e"}
    assert names(t, p.left_identities) == {"e"}
    assert names(t, p.inverses) == {"a"}
    assert p.order == 2


def test_profile_lz2():
    t = builtin_example("LZ2")
    p = element_profile(t, t.index("a"))
    assert names(t, p.right_identities) == {"a", "b"}
    assert names(t, p.left_identities) == {"a"}
    assert names(t, p.inverses) == {"a", "b"}
    assert names(t, p.d_inverses) == {"a", "b"}


def test_profile_sl2():
    t = builtin_example("SL2")
    p0 = element_profile(t, t.index("0"))
    p1 = element_profile(t, t.index("1"))
    assert names(t, p0.identities) == {"0", "1"}
    assert names(t, p0.inverses) == {"0", "1"}
    assert names(t, p1.identities) == {"1"}
    assert names(t, p1.inverses) == {"1"}


def test_profile_index_out_of_range():
    with pytest.raises(IndexError):
        element_profile(builtin_example("Z2"), 5)


def test_global_identities_small():
    assert names(builtin_example("Z2"), global_identities(builtin_example("Z2"))) == {"e"}
    assert names(builtin_example("LZ2"), global_identities(builtin_example("LZ2"))) == {"a", "b"}


def test_global_identities_b2_against_oracle():
    # 0 absorbs, so every element is a right identity of 0; I(B2) is the whole table
    t = builtin_example("B2")
    assert global_identities(t) == oracles.all_ids(t.products)
    assert names(t, global_identities(t)) == {"e11", "e12", "e21", "e22", "0"}


def test_powers():
    z4 = builtin_example("Z4")
    assert power(z4, z4.index("c"), 4) == z4.index("e")
    lz2 = builtin_example("LZ2")
    assert power(lz2, lz2.index("a"), 7) == lz2.index("a")
    for t in (z4, lz2):
        for g in t.elements:
            assert power(t, g, 1) == g
    with pytest.raises(ValueError):
        power(z4, 0, 0)


def test_power_left_associated_on_magma():
    # x*y = x+1 mod 3 ignores y; left-associated g^3 = (g*g)*g = g+2
    t = CayleyTable.from_function(["0", "1", "2"], lambda i, j: (i + 1) % 3)
    assert power(t, 0, 3) == 2


def test_order_infinite_when_cycle_avoids_identities():
    # no element fixes anything, so I(T) is empty and every power cycle misses it
    t = CayleyTable.from_rows("abc", [[1, 2, 1], [2, 0, 0], [1, 0, 0]])
    assert global_identities(t) == frozenset()
    assert element_profile(t, 0).order == math.inf


def test_classify_examples():
    z2 = classify(builtin_example("Z2"))
    assert z2.isGroup and z2.isDisguisedStrict and z2.isInverseSemigroup

    lz2 = classify(builtin_example("LZ2"))
    assert lz2.isAssociative and lz2.isRegularSemigroup and lz2.isDisguisedLiteral
    assert not (lz2.isInverseSemigroup or lz2.isDisguisedStrict or lz2.isGroup)

    sl2 = classify(builtin_example("SL2"))
    assert sl2.isInverseSemigroup and sl2.isDisguisedLiteral and not sl2.isDisguisedStrict


def test_classify_non_associative_has_witness():
    t = CayleyTable.from_function(["0", "1", "2"], lambda i, j: (i - j) % 3)
    rep = classify(t)
    assert not rep.isAssociative
    x, y, z = rep.witnesses["isAssociative"]
    p = t.products
    assert p[p[x][y]][z] != p[x][p[y][z]]
    assert not any(v for k, v in rep.flags().items() if k != "isAssociative")


def test_cyclic_uses_positive_powers():
    assert classify(builtin_example("Z4")).isCyclic
    assert not classify(builtin_example("V4")).isCyclic
    assert not classify(builtin_example("S3")).isCyclic


def test_cancellativity_flags():
    lz2 = classify(builtin_example("LZ2"))
    assert lz2.isRightCancellative and not lz2.isLeftCancellative
    rz2 = classify(builtin_example("RZ2"))
    assert rz2.isLeftCancellative and not rz2.isRightCancellative


LATTICE = [
    ("isGroup", "isMonoid"),
    ("isMonoid", "isAssociative"),
    ("isGroup", "isInverseSemigroup"),
    ("isInverseSemigroup", "isRegularSemigroup"),
    ("isRegularSemigroup", "isAssociative"),
    ("isGroup", "isDisguisedStrict"),
    ("isDisguisedStrict", "isDisguisedLiteral"),
    ("isDisguisedLiteral", "isAssociative"),
]


def _check_lattice(rep):
    for lo, hi in LATTICE:
        assert not getattr(rep, lo) or getattr(rep, hi), (lo, hi)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_classifier_matches_oracles_on_full_scan(n):
    for t in enumerate_tables(n, "all"):
        rep = classify(t)
        _check_lattice(rep)
        rows = t.products
        assert rep.isAssociative == oracles.associative(rows)
        if not rep.isAssociative:
            continue
        assert rep.isGroup == oracles.group(rows)
        assert rep.isMonoid == oracles.monoid(rows)
        assert rep.isRegularSemigroup == oracles.regular(rows)
        assert rep.isInverseSemigroup == oracles.inverse_semigroup(rows)
        assert rep.isDisguisedLiteral == oracles.literal_dg(rows)
        assert rep.isDisguisedStrict == oracles.strict_dg(rows)
        assert rep.isCommutative == oracles.commutative(rows)


def test_false_flags_carry_witnesses():
    for t in enumerate_tables(3, "semigroup"):
        rep = classify(t)
        for flag, value in rep.flags().items():
            if not value:
                assert rep.witnesses.get(flag), flag


def test_profile_invariants_on_semigroups():
    for t in enumerate_tables(3, "semigroup"):
        ids = global_identities(t)
        for g in t.elements:
            p = element_profile(t, g)
            assert p.right_identities | p.left_identities == p.identities
            assert p.d_inverses <= p.inverses
            if p.order != math.inf:
                assert power(t, g, p.order) in ids
                assert all(power(t, g, m) not in ids for m in range(1, p.order))


def test_inverse_procedures_agree_on_regular_tables():
    for n in (1, 2, 3, 4):
        for t in enumerate_tables(n, "regular"):
            assert inverse_by_idempotents(t)[0] == inverse_by_unique_inverses(t)[0]


@st.composite
def semigroup_and_exponents(draw):
    n = draw(st.integers(1, 3))
    pool = enumerate_tables(n, "semigroup")
    t = pool[draw(st.integers(0, len(pool) - 1))]
    return t, draw(st.integers(0, n - 1)), draw(st.integers(1, 9)), draw(st.integers(1, 9))


@settings(max_examples=200, deadline=None)
@given(semigroup_and_exponents())
def test_power_additivity(case):
    t, g, j, k = case
    assert power(t, g, j + k) == t.products[power(t, g, j)][power(t, g, k)]


def test_idempotent_identities_are_fixed_by_powers():
    for t in enumerate_tables(3, "semigroup"):
        for i in global_identities(t):
            if t.products[i][i] == i:
                assert all(power(t, i, k) == i for k in range(1, 8))


def test_mode_parsing():
    from cayleylab.core import as_mode

    assert as_mode("strict") is CheckMode.STRICT
    with pytest.raises(ValueError):
        as_mode("loose")
