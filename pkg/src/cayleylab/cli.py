"""Command-line front end.

Exit codes: 0 completed (and the asked property holds), 1 property fails,
2 hypotheses unmet, 3 input or format error, 4 search budget exceeded.
"""

from __future__ import annotations

import argparse
import os
import sys

from .core import CheckMode, classify, global_identities, profiles
from .errors import BudgetExceeded, LabError, NotApplicable, QuotientError, TableFormatError
from .lab.audit import audit_corpus, manifest_text, write_audit, write_corpus
from .lab.builtins import builtin_example
from .lab.canonical import canonical_form, canonical_table
from .lab.claims import COUNTEREXAMPLE, CLAIM_IDS
from .lab.enumeration import FILTERS, enumerate_tables
from .morphisms import Morphism, check_morphism
from .normality import build_quotient, is_normal_commutation, is_normal_conjugation, is_normal_def
from .subobjects import enumerate_disguised_subgroups
from .table import CayleyTable, SubsetView, emit_table, read_table

EXIT_OK, EXIT_FAIL, EXIT_NA, EXIT_INPUT, EXIT_BUDGET = range(5)


class InputError(Exception):
    pass


def _load(spec: str) -> CayleyTable:
    """A table file, or ``@NAME`` for a built-in example."""
    if spec.startswith("@"):
        try:
            return builtin_example(spec[1:])
        except KeyError as exc:
            raise InputError(exc.args[0]) from None
    try:
        return read_table(spec)
    except OSError as exc:
        raise InputError(f"{spec}: {exc.strerror}") from None
    except TableFormatError as exc:
        raise InputError(f"{spec}: {exc}") from None


def _subset(t: CayleyTable, text: str) -> SubsetView:
    try:
        return SubsetView.parse(t, text)
    except (KeyError, ValueError) as exc:
        raise InputError(f"bad subset {text!r}: {exc}") from None


def _names(t: CayleyTable, items) -> str:
    return "[" + " ".join(t.names[i] for i in sorted(items)) + "]"


def _witness(t: CayleyTable, w) -> str:
    if w is None:
        return "-"
    parts = []
    for x in w:
        parts.append(t.names[x] if isinstance(x, int) and not isinstance(x, bool) else str(x))
    return "(" + ", ".join(parts) + ")"


def _yes(flag: bool) -> str:
    return "yes" if flag else "no"


def cmd_classify(args) -> int:
    t = _load(args.file)
    rep = classify(t)
    print(f"order: {t.order}")
    print(f"canonical: {canonical_form(t) if t.order <= 6 else t.encoding()}")
    for name, value in rep.flags().items():
        line = f"{name}: {_yes(value)}"
        w = rep.witnesses.get(name)
        if w:
            line += f"  witness {_witness(t, w)}"
        print(line)
    print(f"summary: literal-DG={_yes(rep.isDisguisedLiteral)} strict-DG={_yes(rep.isDisguisedStrict)} "
          f"group={_yes(rep.isGroup)} mode={args.mode} disguised={_yes(rep.is_disguised(args.mode))}")
    return EXIT_OK


def cmd_elements(args) -> int:
    t = _load(args.file)
    print(f"I(T) = {_names(t, global_identities(t))}")
    for p in profiles(t):
        order = "inf" if p.order == float("inf") else str(p.order)
        print(
            f"{t.names[p.element]}: I_R={_names(t, p.right_identities)} I_L={_names(t, p.left_identities)} "
            f"inverses={_names(t, p.inverses)} d-inverses={_names(t, p.d_inverses)} order={order}"
        )
    return EXIT_OK


def cmd_subgroups(args) -> int:
    t = _load(args.file)
    subs = enumerate_disguised_subgroups(t, args.mode, args.max_size)
    for q in subs:
        print(q.format())
    print(f"count: {len(subs)}")
    return EXIT_OK


def cmd_normal(args) -> int:
    t = _load(args.file)
    q = _subset(t, args.subset)
    if args.method == "def":
        res = is_normal_def(t, q, args.mode)
    elif args.method == "conj":
        res = is_normal_conjugation(t, q)
    else:
        res = is_normal_commutation(t, q, args.mode, uniform=args.method == "comm-uniform")
    print(f"normal ({args.method}): {_yes(res.ok)}")
    if not res:
        print(f"witness: {_witness(t, res.witness)}")
        return EXIT_FAIL
    return EXIT_OK


def cmd_quotient(args) -> int:
    t = _load(args.file)
    q = _subset(t, args.subset)
    try:
        res = build_quotient(t, q, args.mode)
    except QuotientError as exc:
        print(f"quotient: not well defined ({exc})")
        print(f"witness: {_witness(t, exc.witness)}")
        return EXIT_FAIL
    qt = res.quotient_table
    print("cosets: " + " ".join(_names(t, b) for b in res.partition.blocks))
    sys.stdout.write(emit_table(qt))
    print(f"group: {_yes(res.group_report.isGroup)}")
    if args.emit:
        with open(args.emit, "w", encoding="utf-8") as fh:
            fh.write(emit_table(qt))
    return EXIT_OK


def cmd_hom(args) -> int:
    dom = _load(args.domain)
    cod = _load(args.codomain)
    try:
        h = Morphism.parse(dom, cod, args.map)
    except (KeyError, ValueError) as exc:
        raise InputError(f"bad map: {exc}") from None
    rep = check_morphism(h)
    print(f"homomorphism: {_yes(rep.is_homomorphism.ok)}")
    if not rep.is_homomorphism:
        a, b = rep.is_homomorphism.witness
        print(f"witness: h({dom.names[a]}*{dom.names[b]}) != h({dom.names[a]})*h({dom.names[b]})")
        return EXIT_FAIL
    print(f"kernel: {rep.kernel.format()}")
    print(f"image: {_names(cod, rep.image)}")
    print(f"surjective: {_yes(rep.is_surjective)}")
    print(f"disguised-injective: {_yes(rep.is_disguised_injective.ok)}")
    print(f"identities-to-identity: {_yes(rep.identities_to_identity.ok)}")
    return EXIT_OK


def cmd_enumerate(args) -> int:
    tables = enumerate_tables(args.order, args.filter, args.mode, args.workers)
    classes = sorted({canonical_form(t) for t in tables}) if args.order <= 6 else []
    for t in tables:
        print(t.encoding())
    print(f"count: {len(tables)}")
    print(f"classes: {len(classes)}")
    if args.out:
        os.makedirs(args.out, exist_ok=True)
        with open(os.path.join(args.out, f"order-{args.order}-{args.filter}.txt"), "w", encoding="utf-8") as fh:
            fh.write("".join(t.encoding() + "\n" for t in tables))
        write_corpus(args.out, args.order, (canonical_table(t) for t in _representatives(tables)))
    return EXIT_OK


def _representatives(tables):
    seen = {}
    for t in tables:
        seen.setdefault(canonical_form(t), t)
    return [seen[k] for k in sorted(seen)]


def cmd_audit(args) -> int:
    claims = [c.strip() for c in args.claims.split(",") if c.strip()] if args.claims else list(CLAIM_IDS)
    findings, manifest, orders = audit_corpus(args.order, args.mode, claims, args.workers)
    sys.stdout.write(manifest_text(manifest))
    for f in findings:
        if f.verdict == COUNTEREXAMPLE:
            print(f.line())
    if args.out:
        write_audit(args.out, findings, manifest, orders, args.mode)
    return EXIT_OK


def cmd_example(args) -> int:
    try:
        t = builtin_example(args.name)
    except KeyError as exc:
        raise InputError(exc.args[0]) from None
    text = emit_table(t)
    sys.stdout.write(text)
    if args.emit:
        with open(args.emit, "w", encoding="utf-8") as fh:
            fh.write(text)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="cayleylab", description="Classify and audit finite operation tables.")
    sub = p.add_subparsers(dest="command", required=True)
    modes = [m.value for m in CheckMode]
    table_help = "table file, or @NAME for a built-in example"

    def add(name, func, help):
        sp = sub.add_parser(name, help=help)
        sp.set_defaults(func=func)
        return sp

    sp = add("classify", cmd_classify, "classification report")
    sp.add_argument("file", help=table_help)
    sp.add_argument("--mode", choices=modes, default="literal")

    sp = add("elements", cmd_elements, "per-element identities, inverses and orders")
    sp.add_argument("file", help=table_help)

    sp = add("subgroups", cmd_subgroups, "list disguised-subgroups")
    sp.add_argument("file", help=table_help)
    sp.add_argument("--max-size", type=int, default=None)
    sp.add_argument("--mode", choices=modes, default="literal")

    sp = add("normal", cmd_normal, "normality of a subset")
    sp.add_argument("file", help=table_help)
    sp.add_argument("--subset", required=True)
    sp.add_argument("--method", choices=("def", "conj", "comm", "comm-uniform"), default="def")
    sp.add_argument("--mode", choices=modes, default="literal")

    sp = add("quotient", cmd_quotient, "coset quotient table")
    sp.add_argument("file", help=table_help)
    sp.add_argument("--subset", required=True)
    sp.add_argument("--emit", metavar="PATH")
    sp.add_argument("--mode", choices=modes, default="literal")

    sp = add("hom", cmd_hom, "check a map into a group")
    sp.add_argument("domain", help=table_help)
    sp.add_argument("codomain", help=table_help)
    sp.add_argument("--map", required=True, help="e.g. 'e->e,c->a'")

    sp = add("enumerate", cmd_enumerate, "all tables of one order in a class")
    sp.add_argument("--order", type=int, required=True)
    sp.add_argument("--filter", choices=tuple(FILTERS), default="semigroup")
    sp.add_argument("--mode", choices=modes, default="literal")
    sp.add_argument("--out", metavar="DIR")
    sp.add_argument("--workers", type=int, default=1)

    sp = add("audit", cmd_audit, "run the claim registry over the small corpus")
    sp.add_argument("--order", type=int, required=True)
    sp.add_argument("--mode", choices=modes, required=True)
    sp.add_argument("--claims", help="comma-separated claim ids (default: all)")
    sp.add_argument("--out", metavar="DIR")
    sp.add_argument("--workers", type=int, default=1)

    sp = add("example", cmd_example, "print a built-in table")
    sp.add_argument("name")
    sp.add_argument("--emit", metavar="PATH")
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on usage errors; usage errors are input errors here
        return EXIT_INPUT if exc.code else EXIT_OK
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except NotApplicable as exc:
        print(f"not applicable: {exc}")
        return EXIT_NA
    except BudgetExceeded as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (LabError, KeyError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
