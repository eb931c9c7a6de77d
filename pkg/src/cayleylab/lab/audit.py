"""Run the claim registry over every small disguised-group and write the results."""

from __future__ import annotations

import hashlib
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from ..core import CheckMode, as_mode, classify
from ..errors import LabError
from ..table import CayleyTable, decode_products, emit_table
from .canonical import canonical_form
from .claims import CLAIM_IDS, COUNTEREXAMPLE, HOLDS, NOT_APPLICABLE, AuditContext, AuditFinding, check_claim, small_groups
from .enumeration import MAX_PRUNED, enumerate_tables

STAT_CLASSES = (
    ("semigroup", "isAssociative"),
    ("regular", "isRegularSemigroup"),
    ("inverse", "isInverseSemigroup"),
    ("literal-dg", "isDisguisedLiteral"),
    ("strict-dg", "isDisguisedStrict"),
    ("group", "isGroup"),
)


@dataclass
class CorpusOrder:
    order: int
    labeled: dict[str, int]
    classes: dict[str, list[str]]
    """Sorted canonical forms per statistic class."""


def _order_key(code: str):
    return (len(code), code)


def corpus_order(k: int, workers: int = 1) -> CorpusOrder:
    labeled = {name: 0 for name, _ in STAT_CLASSES}
    classes: dict[str, set[str]] = {name: set() for name, _ in STAT_CLASSES}
    for t in enumerate_tables(k, "semigroup", workers=workers):
        rep = classify(t)
        hit = [name for name, flag in STAT_CLASSES if getattr(rep, flag)]
        # plain semigroups are only counted, so skip the n! canonicalization for them
        code = canonical_form(t) if len(hit) > 1 else None
        for name in hit:
            labeled[name] += 1
            if name != "semigroup":
                classes[name].add(code)
    return CorpusOrder(k, labeled, {name: sorted(v, key=_order_key) for name, v in classes.items()})


def _claim_corpus(claim: str, mode: CheckMode, orders: list[CorpusOrder]) -> list[str]:
    key = "literal-dg" if mode is CheckMode.LITERAL else "strict-dg"
    out = []
    for co in orders:
        if claim == "CL-R27":
            codes = set(co.classes["regular"]) | set(co.classes["inverse"]) | set(co.classes[key])
            out.extend(sorted(codes, key=_order_key))
        else:
            out.extend(co.classes[key])
    return out


def _job(args) -> AuditFinding:
    claim, code, mode, ctx = args
    return check_claim(claim, decode_products(code), None, mode, ctx)


def audit_corpus(
    n: int,
    mode=CheckMode.LITERAL,
    claims: list[str] | None = None,
    workers: int = 1,
) -> tuple[list[AuditFinding], dict[str, str], list[CorpusOrder]]:
    """Evaluate ``claims`` on one representative per isomorphism class.

    The corpus is every disguised-group (in ``mode``) of order at most ``n``;
    CL-R27 instead ranges over semigroups that are regular, inverse or
    disguised.  Homomorphism targets are the groups of order up to ``n`` and
    the CL-P48 partners are the corpus itself.
    """
    mode = as_mode(mode)
    if not 1 <= n <= MAX_PRUNED:
        raise LabError(f"audit order must be in 1..{MAX_PRUNED}")
    claims = list(claims or CLAIM_IDS)
    unknown = [c for c in claims if c not in CLAIM_IDS]
    if unknown:
        raise LabError(f"unknown claim(s): {', '.join(unknown)}")
    claims = [c for c in CLAIM_IDS if c in claims]
    workers = max(1, workers)

    orders = [corpus_order(k, workers) for k in range(1, n + 1)]
    key = "literal-dg" if mode is CheckMode.LITERAL else "strict-dg"
    partners = tuple(decode_products(code) for co in orders for code in co.classes[key])
    ctx = AuditContext(small_groups(n), partners)

    jobs = [(c, code, mode, ctx) for c in claims for code in _claim_corpus(c, mode, orders)]
    if workers == 1 or len(jobs) < 2:
        findings = [_job(j) for j in jobs]
    else:
        with ProcessPoolExecutor(workers) as pool:
            findings = list(pool.map(_job, jobs, chunksize=max(1, len(jobs) // (8 * workers))))
    findings.sort(key=AuditFinding.sort_key)
    return findings, build_manifest(n, mode, claims, findings, orders), orders


def findings_text(findings: list[AuditFinding]) -> str:
    return "".join(f.line() + "\n" for f in findings)


def build_manifest(n, mode, claims, findings, orders) -> dict[str, str]:
    m = {
        "audit.claims": ",".join(claims),
        "audit.max-order": str(n),
        "audit.mode": str(mode),
        "findings.count": str(len(findings)),
        "findings.sha256": hashlib.sha256(findings_text(findings).encode()).hexdigest(),
    }
    for c in claims:
        for verdict in (HOLDS, COUNTEREXAMPLE, NOT_APPLICABLE):
            m[f"claim.{c}.{verdict}"] = str(sum(1 for f in findings if f.claim == c and f.verdict == verdict))
    for co in orders:
        for name, _ in STAT_CLASSES:
            m[f"corpus.order-{co.order}.labeled.{name}"] = str(co.labeled[name])
            if name != "semigroup":
                m[f"corpus.order-{co.order}.classes.{name}"] = str(len(co.classes[name]))
    return m


def manifest_text(manifest: dict[str, str]) -> str:
    return "".join(f"{k}={manifest[k]}\n" for k in sorted(manifest))


def write_audit(out_dir: str, findings, manifest, orders, mode) -> None:
    """Write ``findings.tsv``, ``manifest.txt`` and ``corpus/order-N/<canonical>.tbl``."""
    os.makedirs(out_dir, exist_ok=True)
    with open(os.path.join(out_dir, "findings.tsv"), "w", encoding="utf-8") as fh:
        fh.write(findings_text(findings))
    with open(os.path.join(out_dir, "manifest.txt"), "w", encoding="utf-8") as fh:
        fh.write(manifest_text(manifest))
    key = "literal-dg" if as_mode(mode) is CheckMode.LITERAL else "strict-dg"
    for co in orders:
        write_corpus(os.path.join(out_dir, "corpus"), co.order, (decode_products(c) for c in co.classes[key]))


def write_corpus(root: str, order: int, tables) -> list[str]:
    folder = os.path.join(root, f"order-{order}")
    os.makedirs(folder, exist_ok=True)
    paths = []
    for t in tables:
        path = os.path.join(folder, canonical_form(t) + ".tbl")
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(emit_table(t))
        paths.append(path)
    return paths
