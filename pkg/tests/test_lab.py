import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from cayleylab.errors import LabError
from cayleylab.lab.audit import audit_corpus, findings_text, manifest_text, write_audit
from cayleylab.lab.builtins import builtin_example
from cayleylab.lab.canonical import canonical_form, canonical_table, isomorphic
from cayleylab.lab.claims import CLAIM_IDS, AuditContext, AuditFinding, check_claim, replay, small_groups
from cayleylab.lab.enumeration import enumerate_tables, pruned_tables
from cayleylab.morphisms import Morphism
from cayleylab.table import CayleyTable, decode_products, read_table


def rows_of(tables):
    return [t.products for t in tables]


def test_enumeration_order_two():
    assert len(enumerate_tables(2, "all")) == 16
    assert len(enumerate_tables(2, "group")) == 2
    naive = [r for r in oracles.all_tables(2) if oracles.associative(r)]
    assert rows_of(enumerate_tables(2, "semigroup")) == naive
    assert len(naive) == 8


def test_enumeration_order_three_matches_naive_scan():
    naive = [r for r in oracles.all_tables(3) if oracles.associative(r)]
    assert len(naive) == 113
    assert rows_of(enumerate_tables(3, "semigroup")) == naive
    assert rows_of(pruned_tables(3)) == naive


def test_pruned_order_four():
    tables = pruned_tables(4)
    assert len(tables) == 3492
    rows = rows_of(tables)
    assert rows == sorted(rows)
    assert all(oracles.associative(r) for r in rows)
    assert rows_of(enumerate_tables(4, "semigroup", workers=2)) == rows


def test_enumeration_bounds():
    with pytest.raises(LabError):
        enumerate_tables(4, "all")
    with pytest.raises(LabError):
        enumerate_tables(5, "semigroup")
    with pytest.raises(LabError):
        enumerate_tables(0, "group")
    with pytest.raises(LabError):
        enumerate_tables(2, "bogus")


@pytest.mark.parametrize("n", [1, 2, 3])
def test_class_counts_monotone(n):
    count = {f: len(enumerate_tables(n, f)) for f in ("semigroup", "regular", "inverse", "literal", "strict", "group")}
    assert count["group"] <= count["strict"] <= count["literal"] <= count["semigroup"]
    assert count["group"] <= count["inverse"] <= count["regular"] <= count["semigroup"]


def test_canonical_examples():
    lz2 = builtin_example("LZ2")
    swapped = lz2.relabel([1, 0])
    assert canonical_form(swapped) == canonical_form(lz2)
    assert canonical_form(builtin_example("Z2")) != canonical_form(lz2)
    g1, g2 = enumerate_tables(2, "group")
    assert g1.products != g2.products and canonical_form(g1) == canonical_form(g2)
    with pytest.raises(ValueError):
        canonical_form(builtin_example("Z12"))


@st.composite
def relabelings(draw):
    n = draw(st.integers(1, 5))
    rows = draw(st.lists(st.lists(st.integers(0, n - 1), min_size=n, max_size=n), min_size=n, max_size=n))
    perm = draw(st.permutations(range(n)))
    return CayleyTable.from_rows([str(i) for i in range(n)], rows), list(perm)


@settings(max_examples=120, deadline=None)
@given(relabelings())
def test_canonical_form_is_relabeling_invariant(case):
    t, perm = case
    code = canonical_form(t)
    assert canonical_form(t.relabel(perm)) == code
    assert canonical_form(canonical_table(t)) == code
    assert oracles.isomorphic_by_search(t.products, canonical_table(t).products)


def test_canonical_classes_match_search_at_order_three():
    tables = enumerate_tables(3, "semigroup")
    rng = random.Random(7)
    for _ in range(150):
        a, b = rng.choice(tables), rng.choice(tables)
        assert isomorphic(a, b) == oracles.isomorphic_by_search(a.products, b.products)


def test_builtins():
    b2 = builtin_example("B2")
    assert b2.names[b2.op(b2.index("e12"), b2.index("e21"))] == "e11"
    assert b2.names[b2.op(b2.index("e12"), b2.index("e12"))] == "0"
    assert builtin_example("I2").order == 7
    sl2 = builtin_example("SL2")
    assert sl2.op(sl2.index("0"), sl2.index("1")) == sl2.index("0")
    assert builtin_example("LZ3").products == ((0, 0, 0), (1, 1, 1), (2, 2, 2))
    with pytest.raises(KeyError):
        builtin_example("Q8")


def test_i2_is_inverse_monoid_by_oracle():
    rows = builtin_example("I2").products
    assert oracles.inverse_semigroup(rows) and oracles.monoid(rows) and not oracles.group(rows)


# claim pins ---------------------------------------------------------------

def test_p26a_on_lz2():
    f = check_claim("CL-P26A", builtin_example("LZ2"), mode="literal")
    assert f.verdict == "counterexample"
    assert f.witness.startswith("|I_R(a)|=2")


def test_t34c_on_lz2_full_subgroup():
    lz2 = builtin_example("LZ2")
    f = check_claim("CL-T34C", lz2, "Q=[a b]", "literal")
    assert f.verdict == "counterexample"


def test_c46_on_lz2_constant_map():
    lz2 = builtin_example("LZ2")
    z1 = decode_products("0")
    f = check_claim("CL-C46", lz2, {"cod": z1, "hom": Morphism(lz2, z1, (0, 0))})
    assert f.verdict == "counterexample"
    assert f.params == "cod=0;hom=a->0,b->0"


def test_t37_on_z4():
    z4 = builtin_example("Z4")
    assert check_claim("CL-T37", z4, "Q=[e c2]", "strict").verdict == "holds"
    assert check_claim("CL-T37", z4, mode="strict").verdict == "holds"


def test_unknown_claim():
    with pytest.raises(KeyError):
        check_claim("CL-NOPE", builtin_example("Z2"))


def test_standing_hypothesis_gives_not_applicable():
    f = check_claim("CL-P26C", builtin_example("LZ2"), mode="strict")
    assert f.verdict == "not-applicable"


def test_every_claim_holds_on_small_abelian_groups():
    for name in ("Z1", "Z2", "Z3", "Z4", "V4"):
        t = builtin_example(name)
        for claim in CLAIM_IDS:
            f = check_claim(claim, t, mode="strict")
            assert f.verdict in ("holds", "not-applicable"), (name, f.line())


def test_p48_trivial_mediator():
    # every structure maps onto Z1 with nothing outside the kernel, so Z1 mediates
    # between Z2 and Z1 although their quotients differ
    z1, z2 = decode_products("0"), decode_products("0110")
    ctx = AuditContext(small_groups(2), (z2, z1))
    f = check_claim("CL-P48", z2, mode="strict", ctx=ctx)
    assert f.verdict == "counterexample"
    assert f.params == "G2=0;Q=[0]"
    assert f.witness.startswith("mediator=0;")


def test_s3_findings():
    s3 = builtin_example("S3")
    assert check_claim("CL-P33", s3, mode="strict").witness == "def=1;conj=1;comm=0"
    # I(S3) = {e} lies in every subgroup, but only normal ones give a quotient
    assert check_claim("CL-T37", s3, mode="strict").params == "Q=[e (12)]"


# audits ---------------------------------------------------------------------

@pytest.fixture(scope="module")
def literal3():
    return audit_corpus(3, "literal")


def test_audit_p26a_order_two():
    findings, manifest, _ = audit_corpus(2, "literal", ["CL-P26A"])
    lz2 = canonical_form(builtin_example("LZ2"))
    assert any(f.structure == lz2 and f.verdict == "counterexample" for f in findings)
    assert int(manifest["claim.CL-P26A.counterexample"]) >= 1


def test_counterexamples_replay(literal3):
    findings, _, _ = literal3
    cx = [f for f in findings if f.verdict == "counterexample"]
    assert cx
    for f in cx:
        again = replay(f)
        if f.params:
            assert again == f, f.line()
        else:
            assert again.verdict == "counterexample"


def test_findings_round_trip_through_text(literal3):
    findings, _, _ = literal3
    text = findings_text(findings)
    assert [AuditFinding.from_line(line) for line in text.splitlines()] == findings


def test_manifest_counts_match_oracles(literal3):
    _, manifest, _ = literal3
    naive = [r for r in oracles.all_tables(3) if oracles.associative(r)]
    assert manifest["corpus.order-3.labeled.semigroup"] == str(len(naive))
    assert manifest["corpus.order-3.labeled.regular"] == str(sum(map(oracles.regular, naive)))
    assert manifest["corpus.order-3.labeled.inverse"] == str(sum(map(oracles.inverse_semigroup, naive)))
    assert manifest["corpus.order-3.labeled.literal-dg"] == str(sum(map(oracles.literal_dg, naive)))
    assert manifest["corpus.order-3.labeled.strict-dg"] == str(sum(map(oracles.strict_dg, naive)))
    assert manifest["corpus.order-3.labeled.group"] == str(sum(map(oracles.group, naive)))


def test_audit_sorted_and_complete(literal3):
    findings, manifest, _ = literal3
    assert findings == sorted(findings, key=AuditFinding.sort_key)
    total = sum(int(v) for k, v in manifest.items() if k.startswith("claim."))
    assert total == len(findings) == int(manifest["findings.count"])


def test_audit_deterministic_across_workers(literal3):
    findings, manifest, _ = literal3
    again, manifest2, _ = audit_corpus(3, "literal", workers=3)
    assert findings_text(again) == findings_text(findings)
    assert manifest_text(manifest2) == manifest_text(manifest)


def test_write_audit_layout(tmp_path, literal3):
    findings, manifest, orders = literal3
    write_audit(tmp_path, findings, manifest, orders, "literal")
    assert (tmp_path / "findings.tsv").read_text() == findings_text(findings)
    lines = (tmp_path / "manifest.txt").read_text().splitlines()
    assert lines == sorted(lines)
    files = sorted((tmp_path / "corpus" / "order-2").iterdir())
    assert len(files) == int(manifest["corpus.order-2.classes.literal-dg"])
    for p in files:
        assert canonical_form(read_table(p)) == p.stem


def test_audit_rejects_bad_arguments():
    with pytest.raises(LabError):
        audit_corpus(5, "strict")
    with pytest.raises(LabError):
        audit_corpus(2, "strict", ["CL-XYZ"])
