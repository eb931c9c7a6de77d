"""Named example tables."""

from __future__ import annotations

import itertools
import re
import string

from ..table import CayleyTable

_SMALL_CYCLIC_NAMES = {
    1: ["e"],
    2: ["e", "a"],
    3: ["e", "c", "c2"],
    4: ["e", "c", "c2", "c3"],
}

NAMES = ("Z1", "Z2", "Z3", "Z4", "Z6", "Z12", "S3", "V4", "LZ2", "LZk", "RZ2", "RZk", "SL2", "B2", "I2")


def cyclic(k: int) -> CayleyTable:
    names = _SMALL_CYCLIC_NAMES.get(k) or [str(i) for i in range(k)]
    return CayleyTable.from_function(names, lambda i, j: (i + j) % k)


def left_zero(k: int) -> CayleyTable:
    return CayleyTable.from_function(_letters(k), lambda i, j: i)


def right_zero(k: int) -> CayleyTable:
    return CayleyTable.from_function(_letters(k), lambda i, j: j)


def _letters(k: int) -> list[str]:
    if k <= 26:
        return list(string.ascii_lowercase[:k])
    return [f"x{i}" for i in range(k)]


def symmetric3() -> CayleyTable:
    # x*y applies y first, then x
    perms = [(0, 1, 2), (1, 0, 2), (2, 1, 0), (0, 2, 1), (1, 2, 0), (2, 0, 1)]
    names = ["e", "(12)", "(13)", "(23)", "(123)", "(132)"]
    index = {p: i for i, p in enumerate(perms)}

    def op(i, j):
        x, y = perms[i], perms[j]
        return index[tuple(x[y[k]] for k in range(3))]

    return CayleyTable.from_function(names, op)


def klein4() -> CayleyTable:
    return CayleyTable.from_function(["e", "a", "b", "c"], lambda i, j: i ^ j)


def semilattice2() -> CayleyTable:
    return CayleyTable.from_function(["0", "1"], min)


def brandt2() -> CayleyTable:
    """Matrix units e_ij of 2x2 matrices plus zero: ``e_ij e_kl = e_il`` if ``j == k``."""
    units = [(1, 1), (1, 2), (2, 1), (2, 2)]
    names = [f"e{i}{j}" for i, j in units] + ["0"]
    zero = len(units)

    def op(a, b):
        if a == zero or b == zero:
            return zero
        (i, j), (k, l) = units[a], units[b]
        return units.index((i, l)) if j == k else zero

    return CayleyTable.from_function(names, op)


def symmetric_inverse_monoid2() -> CayleyTable:
    """Partial injections of {1, 2}; ``f*g`` applies ``f`` first, then ``g``."""
    maps = []
    for dom_size in range(3):
        for dom in itertools.combinations((1, 2), dom_size):
            for img in itertools.permutations((1, 2), dom_size):
                maps.append(dict(zip(dom, img)))

    def name(f):
        if not f:
            return "0"
        if f == {1: 1, 2: 2}:
            return "id"
        if f == {1: 2, 2: 1}:
            return "sw"
        ((a, b),) = f.items()
        return f"{a}>{b}"

    def compose(f, g):
        return {x: g[f[x]] for x in f if f[x] in g}

    return CayleyTable.from_function([name(f) for f in maps], lambda i, j: maps.index(compose(maps[i], maps[j])))


def builtin_example(name: str) -> CayleyTable:
    """Look up a named table; ``Zk``, ``LZk`` and ``RZk`` take any size ``k >= 1``."""
    fixed = {
        "S3": symmetric3,
        "V4": klein4,
        "SL2": semilattice2,
        "B2": brandt2,
        "I2": symmetric_inverse_monoid2,
    }
    if name in fixed:
        return fixed[name]()
    m = re.fullmatch(r"(Z|LZ|RZ)(\d+)", name)
    if m and int(m.group(2)) >= 1:
        k = int(m.group(2))
        return {"Z": cyclic, "LZ": left_zero, "RZ": right_zero}[m.group(1)](k)
    raise KeyError(f"unknown example {name!r}; known: {', '.join(NAMES)}")


def corpus_groups(max_order: int = 6) -> list[CayleyTable]:
    """One group per isomorphism class up to order 6.

    Orders up to 4 come from enumeration; 5 and 6 are filled in by hand since
    Z5, Z6 and S3 are the only groups there.
    """
    from .canonical import canonical_form
    from .enumeration import enumerate_tables

    if not 1 <= max_order <= 6:
        raise ValueError("corpus groups are available for orders 1..6")
    out = []
    for k in range(1, min(max_order, 4) + 1):
        seen = {}
        for t in enumerate_tables(k, "group"):
            seen.setdefault(canonical_form(t), t)
        out.extend(seen[c] for c in sorted(seen))
    if max_order >= 5:
        out.append(cyclic(5))
    if max_order >= 6:
        out.extend([cyclic(6), symmetric3()])
    return out
