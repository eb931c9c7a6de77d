"""Finite operation tables, subsets of them, and the text table format."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

from .errors import TableFormatError


@dataclass(frozen=True)
class CayleyTable:
    """A finite set with a total binary operation.

    ``products[i][j]`` is the index of ``names[i] * names[j]``; rows are the
    left operand.
    """

    names: tuple[str, ...]
    products: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        n = len(self.names)
        if n < 1:
            raise ValueError("a table needs at least one element")
        if len(set(self.names)) != n:
            raise ValueError("element names must be distinct")
        for name in self.names:
            if not name or any(ch.isspace() for ch in name):
                raise ValueError(f"bad element name {name!r}")
        if len(self.products) != n or any(len(row) != n for row in self.products):
            raise ValueError("products must be an n x n matrix")
        for row in self.products:
            for v in row:
                if not 0 <= v < n:
                    raise ValueError(f"product index {v} out of range")

    @classmethod
    def from_rows(cls, names: Iterable[str], rows: Iterable[Iterable[int]]) -> CayleyTable:
        return cls(tuple(names), tuple(tuple(r) for r in rows))

    @classmethod
    def from_function(cls, names: Sequence[str], op) -> CayleyTable:
        """Build a table from ``op(i, j) -> k`` on indices."""
        n = len(names)
        return cls(tuple(names), tuple(tuple(op(i, j) for j in range(n)) for i in range(n)))

    @property
    def order(self) -> int:
        return len(self.names)

    @property
    def elements(self) -> range:
        return range(len(self.names))

    def op(self, i: int, j: int) -> int:
        return self.products[i][j]

    @cached_property
    def _index(self) -> dict[str, int]:
        return {name: i for i, name in enumerate(self.names)}

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise KeyError(f"unknown element {name!r}") from None

    def check_index(self, g: int) -> int:
        if not isinstance(g, int) or not 0 <= g < self.order:
            raise IndexError(f"element index {g!r} out of range for order {self.order}")
        return g

    def restrict(self, members: Iterable[int]) -> CayleyTable:
        """Sub-table on a closed subset, keeping element names."""
        members = sorted(members)
        pos = {g: k for k, g in enumerate(members)}
        rows = []
        for i in members:
            row = []
            for j in members:
                p = self.products[i][j]
                if p not in pos:
                    raise ValueError(f"subset not closed: {self.names[i]}*{self.names[j]}={self.names[p]}")
                row.append(pos[p])
            rows.append(row)
        return CayleyTable.from_rows((self.names[g] for g in members), rows)

    def relabel(self, perm: Sequence[int], names: Sequence[str] | None = None) -> CayleyTable:
        """Isomorphic copy where old element ``i`` becomes new element ``perm[i]``."""
        n = self.order
        inv = [0] * n
        for i, p in enumerate(perm):
            inv[p] = i
        rows = [[perm[self.products[inv[a]][inv[b]]] for b in range(n)] for a in range(n)]
        if names is None:
            names = [self.names[inv[a]] for a in range(n)]
        return CayleyTable.from_rows(names, rows)

    def encoding(self) -> str:
        """Row-concatenated index string, e.g. ``0110`` for Z2."""
        return encode_products(self.products)

    def __repr__(self):
        return f"CayleyTable(order={self.order}, names={' '.join(self.names)})"


def encode_products(products) -> str:
    n = len(products)
    if n <= 10:
        return "".join(str(v) for row in products for v in row)
    return ".".join(str(v) for row in products for v in row)


def decode_products(code: str) -> CayleyTable:
    """Inverse of :meth:`CayleyTable.encoding`; elements are named by index."""
    cells = [int(c) for c in code.split(".")] if "." in code else [int(c) for c in code]
    n = round(len(cells) ** 0.5)
    if n * n != len(cells) or n < 1:
        raise ValueError(f"encoding {code!r} is not a square table")
    return CayleyTable.from_rows(
        [str(i) for i in range(n)], [cells[i * n:(i + 1) * n] for i in range(n)]
    )


@dataclass(frozen=True)
class SubsetView:
    """A subset of a table's elements held as a bitmask over indices."""

    table: CayleyTable
    mask: int

    def __post_init__(self):
        if self.mask < 0 or self.mask >> self.table.order:
            raise ValueError("subset mask has bits outside the table")

    @classmethod
    def of(cls, table: CayleyTable, members: Iterable[int]) -> SubsetView:
        mask = 0
        for g in members:
            table.check_index(g)
            mask |= 1 << g
        return cls(table, mask)

    @classmethod
    def parse(cls, table: CayleyTable, text: str) -> SubsetView:
        """Accept ``"e,c2"``, ``"e c2"`` or ``"[e c2]"``."""
        text = text.strip()
        if text.startswith("[") and text.endswith("]"):
            text = text[1:-1]
        tokens = [t for t in text.replace(",", " ").split() if t]
        return cls.of(table, (table.index(t) for t in tokens))

    @classmethod
    def full(cls, table: CayleyTable) -> SubsetView:
        return cls(table, (1 << table.order) - 1)

    @property
    def members(self) -> tuple[int, ...]:
        return tuple(g for g in range(self.table.order) if self.mask >> g & 1)

    def __iter__(self):
        return iter(self.members)

    def __len__(self):
        return bin(self.mask).count("1")

    def __contains__(self, g: int) -> bool:
        return bool(self.mask >> g & 1)

    def __le__(self, other: SubsetView) -> bool:
        return self.mask & ~other.mask == 0

    def complement(self) -> SubsetView:
        return SubsetView(self.table, ((1 << self.table.order) - 1) & ~self.mask)

    def __and__(self, other: SubsetView) -> SubsetView:
        return SubsetView(self.table, self.mask & other.mask)

    def __or__(self, other: SubsetView) -> SubsetView:
        return SubsetView(self.table, self.mask | other.mask)

    def format(self) -> str:
        return "[" + " ".join(self.table.names[g] for g in self.members) + "]"

    def __str__(self):
        return self.format()

    def __repr__(self):
        return f"SubsetView({self.format()})"


def as_subset(table: CayleyTable, q) -> SubsetView:
    if isinstance(q, SubsetView):
        if q.table != table:
            raise ValueError("subset belongs to a different table")
        return q
    if isinstance(q, str):
        return SubsetView.parse(table, q)
    return SubsetView.of(table, q)


@dataclass(frozen=True)
class Check:
    """Outcome of a yes/no check; ``witness`` explains a failure (or an existential success)."""

    ok: bool
    witness: tuple | None = None

    def __bool__(self):
        return self.ok


def parse_table(text: str) -> CayleyTable:
    lines = text.splitlines()
    names: list[str] | None = None
    rows: list[list[int]] = []
    row_lines: list[int] = []
    in_table = False
    for lineno, raw in enumerate(lines, start=1):
        stripped = raw.strip()
        if not stripped or stripped.startswith("#"):
            continue
        if names is None:
            key, sep, rest = stripped.partition(":")
            if not sep or key.strip() != "elements":
                raise TableFormatError("expected header 'elements: t1 ... tn'", lineno)
            names = rest.split()
            if not names:
                raise TableFormatError("header lists no elements", lineno, len(raw))
            seen: dict[str, int] = {}
            col = raw.index(":") + 1
            for k, tok in enumerate(names):
                col = raw.index(tok, col)
                if tok in seen:
                    raise TableFormatError(f"duplicate element name {tok!r}", lineno, col + 1)
                seen[tok] = k
                col += len(tok)
            continue
        if not in_table:
            if stripped != "table:":
                raise TableFormatError("expected line 'table:'", lineno)
            in_table = True
            continue
        tokens = stripped.split()
        if len(rows) >= len(names):
            raise TableFormatError(f"too many rows: expected {len(names)}", lineno)
        if len(tokens) != len(names):
            raise TableFormatError(
                f"row has {len(tokens)} entries, expected {len(names)}", lineno, len(raw.rstrip()) + 1
            )
        row = []
        col = 0
        for tok in tokens:
            col = raw.index(tok, col)
            if tok not in seen:
                raise TableFormatError(f"unknown element {tok!r}", lineno, col + 1)
            row.append(seen[tok])
            col += len(tok)
        rows.append(row)
        row_lines.append(lineno)
    last = len(lines) + 1
    if names is None:
        raise TableFormatError("missing 'elements:' header", last)
    if not in_table:
        raise TableFormatError("missing 'table:' line", last)
    if len(rows) != len(names):
        raise TableFormatError(f"table has {len(rows)} rows, expected {len(names)}", last)
    return CayleyTable.from_rows(names, rows)


def emit_table(table: CayleyTable) -> str:
    out = ["elements: " + " ".join(table.names), "table:"]
    for row in table.products:
        out.append(" ".join(table.names[v] for v in row))
    return "\n".join(out) + "\n"


def read_table(path) -> CayleyTable:
    with open(path, encoding="utf-8") as fh:
        return parse_table(fh.read())
