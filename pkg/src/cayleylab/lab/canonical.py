"""Canonical forms up to renaming of elements."""

from __future__ import annotations

import itertools

from ..table import CayleyTable, decode_products, encode_products

MAX_CANONICAL_ORDER = 6


def canonical_products(products) -> tuple[tuple[int, ...], ...]:
    """Lexicographically least product matrix over all relabelings."""
    n = len(products)
    if n > MAX_CANONICAL_ORDER:
        raise ValueError(f"canonical form is limited to order {MAX_CANONICAL_ORDER}, got {n}")
    best = None
    for inv in itertools.permutations(range(n)):
        # inv[new] = old
        perm = [0] * n
        for new, old in enumerate(inv):
            perm[old] = new
        cand = tuple(perm[products[inv[a]][inv[b]]] for a in range(n) for b in range(n))
        if best is None or cand < best:
            best = cand
    return tuple(best[i * n:(i + 1) * n] for i in range(n))


def canonical_form(table: CayleyTable) -> str:
    return encode_products(canonical_products(table.products))


def canonical_table(table: CayleyTable) -> CayleyTable:
    return decode_products(canonical_form(table))


def isomorphic(a: CayleyTable, b: CayleyTable) -> bool:
    return a.order == b.order and canonical_form(a) == canonical_form(b)
