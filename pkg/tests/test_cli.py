import pytest

from cayleylab.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.fixture
def lz2(tmp_path):
    p = tmp_path / "lz2.tbl"
    p.write_text("elements: a b\ntable:\na a\nb b\n")
    return str(p)


def test_classify_lz2(capsys, lz2):
    code, out, _ = run(capsys, "classify", lz2)
    assert code == 0
    assert "literal-DG=yes strict-DG=no" in out
    assert "isDisguisedStrict: no  witness" in out


def test_normal_exit_codes(capsys):
    code, out, _ = run(capsys, "normal", "@S3", "--subset", "e,(12)", "--method", "def")
    assert code == 1 and out.splitlines()[-1].startswith("witness: (")
    for method in ("def", "conj", "comm"):
        assert run(capsys, "normal", "@S3", "--subset", "e,(123),(132)", "--method", method)[0] == 0
    assert run(capsys, "normal", "@S3", "--subset", "e,(123),(132)", "--method", "comm-uniform")[0] == 1
    code, out, _ = run(capsys, "normal", "@LZ2", "--subset", "a,b", "--method", "conj")
    assert code == 2 and out.startswith("not applicable")


def test_quotient_emit(capsys, tmp_path):
    dest = tmp_path / "q.tbl"
    code, out, _ = run(capsys, "quotient", "@Z4", "--subset", "e,c2", "--emit", str(dest))
    assert code == 0 and "group: yes" in out
    assert dest.read_text() == "elements: [e] [c]\ntable:\n[e] [c]\n[c] [e]\n"
    assert run(capsys, "quotient", "@S3", "--subset", "e,(12)")[0] == 1


def test_hom(capsys):
    assert run(capsys, "hom", "@Z4", "@Z2", "--map", "e->e,c->a,c2->e,c3->a")[0] == 0
    code, out, _ = run(capsys, "hom", "@Z4", "@Z2", "--map", "e->e,c->a,c2->a,c3->a")
    assert code == 1 and "witness: h(c*c)" in out
    assert run(capsys, "hom", "@Z2", "@LZ2", "--map", "e->a,a->a")[0] == 2
    assert run(capsys, "hom", "@Z2", "@Z2", "--map", "e->e")[0] == 3


def test_input_errors(capsys, tmp_path):
    bad = tmp_path / "bad.tbl"
    bad.write_text("elements: a b\ntable:\na c\nb b\n")
    code, _, err = run(capsys, "classify", str(bad))
    assert code == 3 and "line 3, column 3" in err
    assert run(capsys, "classify", str(tmp_path / "missing.tbl"))[0] == 3
    assert run(capsys, "example", "Q8")[0] == 3
    assert run(capsys, "bogus")[0] == 3
    assert run(capsys, "enumerate", "--order", "4", "--filter", "all")[0] == 3


def test_budget_exit(capsys):
    assert run(capsys, "subgroups", "@Z2")[0] == 0
    from cayleylab.errors import BudgetExceeded
    import cayleylab.cli as cli

    def boom(args):
        raise BudgetExceeded("too big")

    orig = cli.cmd_elements
    cli.cmd_elements = boom
    try:
        parser_exit = main(["elements", "@Z2"])
    finally:
        cli.cmd_elements = orig
    # handlers are bound at parser construction, so patching the module function reaches them
    assert parser_exit == 4


def test_enumerate_out(capsys, tmp_path):
    code, out, _ = run(capsys, "enumerate", "--order", "2", "--filter", "semigroup", "--out", str(tmp_path))
    assert code == 0 and "count: 8" in out and "classes: 5" in out
    assert len((tmp_path / "order-2-semigroup.txt").read_text().splitlines()) == 8
    assert len(list((tmp_path / "order-2").iterdir())) == 5


def test_audit_order_two(capsys, tmp_path):
    code, out, _ = run(capsys, "audit", "--order", "2", "--mode", "literal", "--claims", "CL-P26A", "--out", str(tmp_path))
    assert code == 0
    assert "CL-P26A\tliteral\t0011\tpart=unique;g=0\tcounterexample\t|I_R(0)|=2" in out
    assert (tmp_path / "findings.tsv").exists() and (tmp_path / "manifest.txt").exists()


def test_example_emit_and_output_stable(capsys, tmp_path):
    dest = tmp_path / "b2.tbl"
    first = run(capsys, "example", "B2", "--emit", str(dest))
    second = run(capsys, "example", "B2")
    assert first == second
    assert dest.read_text() == first[1]
    assert run(capsys, "elements", str(dest))[1] == run(capsys, "elements", "@B2")[1]
