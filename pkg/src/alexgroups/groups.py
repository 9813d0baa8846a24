"""Finite groups as Cayley tables, and the group Z x F_n.

Every table uses index 0 as the identity. Elements of Z x F_n are
:class:`XnElement` pairs ``(a, b)`` with ``a`` an integer and ``b`` an index
into the finite factor.
"""
from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from typing import NamedTuple

from .verdict import InputError, Verdict

__all__ = [
    "FiniteGroup",
    "XnElement",
    "XnGroup",
    "BUILTIN_GROUPS",
    "validate_cayley",
    "group_from_table",
    "builtin_group",
    "load_group",
    "resolve_group",
    "group_mul",
    "group_inv",
    "xn_mul",
    "xn_inv",
    "INT_MIN",
    "INT_MAX",
]

# Z coordinates are kept inside the signed 64-bit range.
INT_MIN = -(2**63)
INT_MAX = 2**63 - 1


def _as_table(table) -> list[list]:
    rows = [list(row) for row in table]
    if not rows:
        raise InputError("Cayley table is empty")
    n = len(rows)
    for i, row in enumerate(rows):
        if len(row) != n:
            raise InputError(f"Cayley table is not square: row {i} has {len(row)} entries, expected {n}")
    return rows


def validate_cayley(table) -> Verdict:
    """Group axioms for a table with identity at index 0.

    Checked in order: closure (witness ``(i, j)``), identity (witness ``x``),
    inverses (witness ``x``), associativity (witness ``(i, j, k)``).
    """
    t = _as_table(table)
    n = len(t)
    for i in range(n):
        for j in range(n):
            v = t[i][j]
            if not isinstance(v, int) or isinstance(v, bool) or not 0 <= v < n:
                return Verdict.fail((i, j), "closure")
    for x in range(n):
        if t[0][x] != x or t[x][0] != x:
            return Verdict.fail(x, "identity at 0")
    for x in range(n):
        if not any(t[x][y] == 0 and t[y][x] == 0 for y in range(n)):
            return Verdict.fail(x, "inverse")
    for i in range(n):
        ti = t[i]
        for j in range(n):
            tij = t[ti[j]]
            tj = t[j]
            for k in range(n):
                if tij[k] != ti[tj[k]]:
                    return Verdict.fail((i, j, k), "associativity")
    return Verdict.ok()


@dataclass(frozen=True)
class FiniteGroup:
    name: str
    order: int
    table: tuple[tuple[int, ...], ...]
    inv: tuple[int, ...]

    def mul(self, x: int, y: int) -> int:
        return self.table[x][y]

    def is_abelian(self) -> bool:
        return all(self.table[i][j] == self.table[j][i] for i in range(self.order) for j in range(i))

    def non_commuting_pair(self):
        for i in range(self.order):
            for j in range(self.order):
                if self.table[i][j] != self.table[j][i]:
                    return (i, j)
        return None

    def check(self, x: int) -> None:
        if not isinstance(x, int) or not 0 <= x < self.order:
            raise InputError(f"element {x!r} not in group {self.name} of order {self.order}")

    def to_dict(self) -> dict:
        return {"name": self.name, "order": self.order, "table": [list(r) for r in self.table]}


def _reindex_identity(t: list[list]) -> list[list]:
    """Move a two-sided identity found at index e to index 0 by swapping e and 0."""
    n = len(t)
    for e in range(n):
        if all(t[e][x] == x and t[x][e] == x for x in range(n)):
            break
    else:
        return t
    if e == 0:
        return t
    swap = list(range(n))
    swap[0], swap[e] = e, 0
    return [[swap[t[swap[i]][swap[j]]] for j in range(n)] for i in range(n)]


def group_from_table(table, name: str = "custom") -> FiniteGroup:
    """Validate a Cayley table and build the group.

    A table whose identity sits at another index is re-indexed so that the
    identity becomes 0; a table with no identity is rejected.
    """
    t = _as_table(table)
    n = len(t)
    if all(isinstance(v, int) and not isinstance(v, bool) and 0 <= v < n for row in t for v in row):
        t = _reindex_identity(t)
    verdict = validate_cayley(t)
    if not verdict:
        raise InputError(f"invalid Cayley table for {name}: {verdict.reason} fails at {verdict.witness}")
    inv = tuple(next(y for y in range(n) if t[x][y] == 0) for x in range(n))
    return FiniteGroup(name, n, tuple(tuple(r) for r in t), inv)


def _cyclic(k: int) -> list[list[int]]:
    return [[(i + j) % k for j in range(k)] for i in range(k)]


def _klein() -> list[list[int]]:
    return [[i ^ j for j in range(4)] for i in range(4)]


def _s3() -> list[list[int]]:
    # permutations of {0,1,2} in lexicographic order, identity first;
    # product is composition (p*q)(x) = p(q(x))
    perms = list(itertools.permutations(range(3)))
    index = {p: i for i, p in enumerate(perms)}
    return [[index[tuple(p[q[x]] for x in range(3))] for q in perms] for p in perms]


BUILTIN_GROUPS = {
    "trivial": lambda: _cyclic(1),
    "c2": lambda: _cyclic(2),
    "c3": lambda: _cyclic(3),
    "c4": lambda: _cyclic(4),
    "c5": lambda: _cyclic(5),
    "c6": lambda: _cyclic(6),
    "v4": _klein,
    "s3": _s3,
}


def builtin_group(name: str) -> FiniteGroup:
    try:
        make = BUILTIN_GROUPS[name]
    except KeyError:
        raise InputError(f"unknown group {name!r}; choose from {', '.join(BUILTIN_GROUPS)}") from None
    return group_from_table(make(), name)


def load_group(path) -> FiniteGroup:
    """Read ``{"name": ..., "order": n, "table": [[...], ...]}`` from a JSON file."""
    try:
        with open(path) as fh:
            data = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise InputError(f"cannot read group file {path}: {exc}") from exc
    if not isinstance(data, dict) or "table" not in data:
        raise InputError(f"{path}: expected an object with a 'table' entry")
    table = data["table"]
    if "order" in data and data["order"] != len(table):
        raise InputError(f"{path}: order {data['order']} does not match table size {len(table)}")
    return group_from_table(table, str(data.get("name", "custom")))


def resolve_group(spec: str) -> FiniteGroup:
    """A builtin name, or else a path to a Cayley JSON file."""
    if spec in BUILTIN_GROUPS:
        return builtin_group(spec)
    return load_group(spec)


def group_mul(G: FiniteGroup, x: int, y: int) -> int:
    G.check(x)
    G.check(y)
    return G.table[x][y]


def group_inv(G: FiniteGroup, x: int) -> int:
    G.check(x)
    return G.inv[x]


class XnElement(NamedTuple):
    a: int
    b: int

    def __str__(self) -> str:
        return f"({self.a},{self.b})"


@dataclass(frozen=True)
class XnGroup:
    """Z x F_n with componentwise multiplication."""

    fn: FiniteGroup

    @property
    def n(self) -> int:
        return self.fn.order

    @property
    def identity(self) -> XnElement:
        return XnElement(0, 0)

    def check(self, p) -> XnElement:
        if not isinstance(p, tuple) or len(p) != 2:
            raise InputError(f"expected a pair (a, b), got {p!r}")
        a, b = p
        if not isinstance(a, int) or isinstance(a, bool):
            raise InputError(f"integer coordinate must be an int, got {a!r}")
        if not INT_MIN <= a <= INT_MAX:
            raise InputError(f"integer coordinate {a} outside the 64-bit range")
        self.fn.check(b)
        return XnElement(a, b)


def _checked_int(v: int) -> int:
    if not INT_MIN <= v <= INT_MAX:
        raise OverflowError(f"integer coordinate {v} overflows the 64-bit range")
    return v


def xn_mul(X: XnGroup, p, q) -> XnElement:
    p, q = X.check(p), X.check(q)
    return XnElement(_checked_int(p.a + q.a), X.fn.table[p.b][q.b])


def xn_inv(X: XnGroup, p) -> XnElement:
    p = X.check(p)
    return XnElement(_checked_int(-p.a), X.fn.inv[p.b])
