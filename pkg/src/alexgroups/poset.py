"""Finite partial orders, read as T0 Alexandroff spaces.

Elements are the indices ``0..size-1``. The open sets of the associated
topology are exactly the down-sets, so the minimal open neighbourhood of
``x`` is ``down_set(P, x)`` and its minimal closed set is ``up_set(P, x)``.
A map between two such spaces is continuous iff it is order-preserving.
"""
from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

from .verdict import InputError, Verdict

__all__ = [
    "Poset",
    "HasseDiagram",
    "validate_poset",
    "down_set",
    "up_set",
    "is_open",
    "is_closed",
    "covers",
    "is_monotone",
    "product_order",
    "comparability_components",
    "antichain",
    "chain",
    "poset_from_pairs",
    "load_poset",
]


def _as_matrix(relation) -> tuple[tuple[bool, ...], ...]:
    rows = [tuple(bool(v) for v in row) for row in relation]
    if not rows:
        raise InputError("relation has an empty carrier")
    k = len(rows)
    for i, row in enumerate(rows):
        if len(row) != k:
            raise InputError(f"relation is not square: row {i} has {len(row)} entries, expected {k}")
    return tuple(rows)


def validate_poset(relation) -> Verdict:
    """Check reflexivity, antisymmetry and transitivity of a raw relation.

    The three axioms are scanned in that order, each lexicographically; the
    witness is ``(i, i)``, ``(i, j)`` or ``(i, j, k)`` respectively.
    """
    leq = _as_matrix(relation)
    k = len(leq)
    for i in range(k):
        if not leq[i][i]:
            return Verdict.fail((i, i), "reflexivity")
    for i in range(k):
        for j in range(i + 1, k):
            if leq[i][j] and leq[j][i]:
                return Verdict.fail((i, j), "antisymmetry")
    up = [_mask(row) for row in leq]
    for i in range(k):
        for j in range(k):
            if leq[i][j]:
                bad = up[j] & ~up[i]
                if bad:
                    return Verdict.fail((i, j, _lowest_bit(bad)), "transitivity")
    return Verdict.ok()


def _mask(row: Iterable[bool]) -> int:
    m = 0
    for j, v in enumerate(row):
        if v:
            m |= 1 << j
    return m


def _lowest_bit(m: int) -> int:
    return (m & -m).bit_length() - 1


def _bits(m: int) -> list[int]:
    out = []
    while m:
        low = m & -m
        out.append(low.bit_length() - 1)
        m ^= low
    return out


@dataclass(frozen=True)
class Poset:
    """A validated finite partial order stored as a dense boolean matrix.

    Build one through :meth:`from_relation` (or the helpers below); the plain
    constructor trusts its input.
    """

    size: int
    leq: tuple[tuple[bool, ...], ...]

    @classmethod
    def from_relation(cls, relation) -> "Poset":
        verdict = validate_poset(relation)
        if not verdict:
            raise InputError(f"not a partial order ({verdict.reason} fails at {verdict.witness})")
        leq = _as_matrix(relation)
        return cls(len(leq), leq)

    @cached_property
    def up_masks(self) -> tuple[int, ...]:
        return tuple(_mask(row) for row in self.leq)

    @cached_property
    def down_masks(self) -> tuple[int, ...]:
        return tuple(_mask(self.leq[i][j] for i in range(self.size)) for j in range(self.size))

    def le(self, x: int, y: int) -> bool:
        return self.leq[x][y]

    def lt(self, x: int, y: int) -> bool:
        return x != y and self.leq[x][y]

    def strict_pairs(self) -> list[tuple[int, int]]:
        return [(i, j) for i in range(self.size) for j in range(self.size) if i != j and self.leq[i][j]]

    def is_antichain(self) -> bool:
        return not self.strict_pairs()

    def _check(self, x: int) -> None:
        if not isinstance(x, int) or not 0 <= x < self.size:
            raise InputError(f"element {x!r} not in carrier 0..{self.size - 1}")


@dataclass(frozen=True)
class HasseDiagram:
    size: int
    edges: tuple[tuple[int, int], ...]


def antichain(k: int) -> Poset:
    return Poset.from_relation([[i == j for j in range(k)] for i in range(k)])


def chain(k: int) -> Poset:
    return Poset.from_relation([[i <= j for j in range(k)] for i in range(k)])


def poset_from_pairs(size: int, pairs: Iterable[Sequence[int]]) -> Poset:
    """Reflexive-transitive closure of ``pairs``; rejects cycles."""
    if not isinstance(size, int) or size < 1:
        raise InputError(f"size must be a positive integer, got {size!r}")
    up = [1 << i for i in range(size)]
    for pair in pairs:
        if len(pair) != 2:
            raise InputError(f"expected a pair, got {pair!r}")
        i, j = pair
        for v in (i, j):
            if not isinstance(v, int) or not 0 <= v < size:
                raise InputError(f"element {v!r} not in carrier 0..{size - 1}")
        up[i] |= 1 << j
    # Warshall closure on bit rows
    for k in range(size):
        bit = 1 << k
        for i in range(size):
            if up[i] & bit:
                up[i] |= up[k]
    relation = [[bool(up[i] >> j & 1) for j in range(size)] for i in range(size)]
    return Poset.from_relation(relation)


def load_poset(path) -> Poset:
    """Read ``{"size": k, "leq": [[i, j], ...]}`` from a JSON file."""
    try:
        with open(path) as fh:
            data = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise InputError(f"cannot read poset file {path}: {exc}") from exc
    if not isinstance(data, dict) or "size" not in data:
        raise InputError(f"{path}: expected an object with 'size' and 'leq'")
    return poset_from_pairs(data["size"], data.get("leq", []))


def down_set(P: Poset, x: int) -> frozenset[int]:
    """U_x = {y : y <= x}, the smallest open set containing x."""
    P._check(x)
    return frozenset(_bits(P.down_masks[x]))


def up_set(P: Poset, x: int) -> frozenset[int]:
    """F_x = {y : y >= x}, the smallest closed set containing x."""
    P._check(x)
    return frozenset(_bits(P.up_masks[x]))


def _set_mask(P: Poset, S: Iterable[int]) -> int:
    m = 0
    for x in S:
        P._check(x)
        m |= 1 << x
    return m


def is_open(P: Poset, S: Iterable[int]) -> bool:
    m = _set_mask(P, S)
    return all(P.down_masks[x] & ~m == 0 for x in _bits(m))


def is_closed(P: Poset, S: Iterable[int]) -> bool:
    m = _set_mask(P, S)
    return all(P.up_masks[x] & ~m == 0 for x in _bits(m))


def covers(P: Poset) -> HasseDiagram:
    """Covering pairs x < y with nothing strictly between, sorted."""
    edges = []
    for x in range(P.size):
        above = P.up_masks[x] & ~(1 << x)
        for y in _bits(above):
            between = above & P.down_masks[y] & ~(1 << y)
            if not between:
                edges.append((x, y))
    return HasseDiagram(P.size, tuple(edges))


def is_monotone(P: Poset, Q: Poset, f) -> Verdict:
    """Order-preservation (equivalently continuity) of ``f: P -> Q``.

    ``f`` is a sequence or mapping indexed by P's elements.
    """
    try:
        image = [f[x] for x in range(P.size)]
    except (KeyError, IndexError) as exc:
        raise InputError(f"map is not total on 0..{P.size - 1}") from exc
    if isinstance(f, Sequence) and len(f) != P.size:
        raise InputError(f"map has {len(f)} entries for a carrier of size {P.size}")
    for v in image:
        Q._check(v)
    for x in range(P.size):
        for y in range(P.size):
            if P.leq[x][y] and not Q.leq[image[x]][image[y]]:
                return Verdict.fail((x, y), "order not preserved")
    return Verdict.ok()


def product_order(P: Poset, Q: Poset) -> Poset:
    """Componentwise order on P x Q; the pair (p, q) has index p * Q.size + q."""
    k = Q.size
    relation = [
        [P.leq[i // k][j // k] and Q.leq[i % k][j % k] for j in range(P.size * k)]
        for i in range(P.size * k)
    ]
    return Poset(P.size * k, tuple(tuple(r) for r in relation))


def comparability_components(P: Poset) -> list[list[int]]:
    """Connected components of the comparability graph, each sorted, in order of least element."""
    seen = [False] * P.size
    components = []
    for start in range(P.size):
        if seen[start]:
            continue
        seen[start] = True
        comp = [start]
        queue = deque([start])
        while queue:
            x = queue.popleft()
            for y in _bits(P.up_masks[x] | P.down_masks[x]):
                if not seen[y]:
                    seen[y] = True
                    comp.append(y)
                    queue.append(y)
        components.append(sorted(comp))
    return components
