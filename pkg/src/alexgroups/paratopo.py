"""Group axioms for orders: paratopological (monotone multiplication) and
topological (monotone inversion too), plus an exhaustive classifier of every
labeled order on a small finite group.
"""
from __future__ import annotations

import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterator

import numpy as np

from .groups import FiniteGroup, XnGroup, xn_inv
from .poset import Poset, is_monotone
from .verdict import InputError, ResourceError, Verdict
from .xn import window, window_poset

__all__ = [
    "ClassificationReport",
    "check_paratopological",
    "check_topological",
    "check_window_paratopological",
    "check_window_inversion",
    "enumerate_posets",
    "enumerate_preorders",
    "classify",
    "MAX_ENUM_SIZE",
    "PROOF_CASES",
]

log = logging.getLogger(__name__)

MAX_ENUM_SIZE = 6
WITNESS_LIMIT = 10
PROOF_CASES = ("both_strict", "both_equal", "first_strict", "second_strict")


def _multiplication_violation(table, leq):
    """First quadruple (x, y, u, v) with x<=y, u<=v and not xu <= yv.

    Only translations are scanned: multiplication is monotone iff every left
    and every right translation is, since xu <= yu <= yv.
    """
    k = len(table)
    for x in range(k):
        row = leq[x]
        for y in range(k):
            if x == y or not row[y]:
                continue
            for g in range(k):
                if not leq[table[x][g]][table[y][g]]:
                    return (x, y, g, g)
                if not leq[table[g][x]][table[g][y]]:
                    return (g, g, x, y)
    return None


def _inversion_violation(inv, leq):
    k = len(inv)
    for x in range(k):
        for y in range(k):
            if leq[x][y] and not leq[inv[x]][inv[y]]:
                return (x, y)
    return None


def _check_sizes(G: FiniteGroup, P: Poset) -> None:
    if P.size != G.order:
        raise InputError(f"order on {P.size} elements does not fit group {G.name} of order {G.order}")


def check_paratopological(G: FiniteGroup, P: Poset) -> Verdict:
    _check_sizes(G, P)
    bad = _multiplication_violation(G.table, P.leq)
    if bad:
        return Verdict.fail(bad, "multiplication not monotone")
    return Verdict.ok()


def check_topological(G: FiniteGroup, P: Poset) -> Verdict:
    verdict = check_paratopological(G, P)
    if not verdict:
        return verdict
    bad = _inversion_violation(G.inv, P.leq)
    if bad:
        return Verdict.fail(bad, "inversion not monotone")
    return Verdict.ok()


def check_window_paratopological(X: XnGroup, m: int) -> Verdict:
    """Monotonicity of multiplication over all comparable pairs of H_m.

    Every (p<=q, u<=v) is tested by comparing p*u with q*v directly; the
    products may leave the window. ``details["cases"]`` counts the tested
    quadruples by which of the two pairs is strict.
    """
    if not isinstance(m, int) or m < 1:
        raise InputError(f"window radius must be at least 1, got {m!r}")
    w = window(X, m)
    P = window_poset(X, m)
    a = np.array([p.a for p in w.elements], dtype=np.int64)
    b = np.array([p.b for p in w.elements], dtype=np.int64)
    table = np.array(X.fn.table, dtype=np.int64)
    pairs = np.array([(i, j) for i in range(P.size) for j in range(P.size) if P.leq[i][j]], dtype=np.int64)
    lo, hi = pairs[:, 0], pairs[:, 1]
    strict = lo != hi
    lo_a, lo_b, hi_a, hi_b = a[lo], b[lo], a[hi], b[hi]
    n_strict = int(strict.sum())
    n_equal = len(pairs) - n_strict
    cases = dict.fromkeys(PROOF_CASES, 0)
    for r, (i, j) in enumerate(pairs):
        left_a = a[i] + lo_a
        left_b = table[b[i], lo_b]
        right_a = a[j] + hi_a
        right_b = table[b[j], hi_b]
        ok = (left_a < right_a) | ((left_a == right_a) & (left_b == right_b))
        if not ok.all():
            c = int(np.argmin(ok))
            witness = (w.elements[i], w.elements[j], w.elements[lo[c]], w.elements[hi[c]])
            return Verdict.fail(witness, "multiplication not monotone on window")
        if strict[r]:
            cases["both_strict"] += n_strict
            cases["first_strict"] += n_equal
        else:
            cases["second_strict"] += n_strict
            cases["both_equal"] += n_equal
    return Verdict.ok(cases=cases, pairs=len(pairs))


def check_window_inversion(X: XnGroup, m: int) -> Verdict:
    """Monotonicity of inversion on H_m; fails (with a pair) for every m >= 1."""
    w = window(X, m)
    P = window_poset(X, m)
    image = [w.index[xn_inv(X, p)] for p in w.elements]
    verdict = is_monotone(P, P, image)
    if verdict:
        return verdict
    i, j = verdict.witness
    return Verdict.fail((w.elements[i], w.elements[j]), "inversion not monotone")


def _masks_to_leq(up: list[int], k: int) -> tuple[tuple[bool, ...], ...]:
    return tuple(tuple(bool(up[i] >> j & 1) for j in range(k)) for i in range(k))


def _extensions(k: int, antisymmetric: bool) -> Iterator[list[int]]:
    """Up-set bit masks of every labeled order (or preorder) on k points.

    Point j is added to an order on 0..j-1 by choosing its strict down-set D
    (a down-closed set) and up-set U (an up-closed set) with every member of
    D below every member of U; for partial orders D and U must be disjoint.
    Each labeled relation arises exactly once, from its restriction to
    0..j-1 and the pair (D, U).
    """

    def grow(up: list[int], down: list[int]) -> Iterator[list[int]]:
        j = len(up)
        if j == k:
            yield up
            return
        downsets, upsets = [], []
        for s in range(1 << j):
            members = [x for x in range(j) if s >> x & 1]
            if all(down[x] & ~s == 0 for x in members):
                downsets.append((s, members))
            if all(up[x] & ~s == 0 for x in members):
                upsets.append((s, members))
        full = (1 << j) - 1
        bit = 1 << j
        for d, d_members in downsets:
            allowed = full
            for x in d_members:
                allowed &= up[x]
            for u, u_members in upsets:
                if u & ~allowed:
                    continue
                if antisymmetric and d & u:
                    continue
                new_up = up[:]
                new_down = down[:]
                for x in d_members:
                    new_up[x] |= bit
                for x in u_members:
                    new_down[x] |= bit
                new_up.append(u | bit)
                new_down.append(d | bit)
                yield from grow(new_up, new_down)

    yield from grow([], [])


def _check_enum_size(k: int) -> None:
    if not isinstance(k, int) or not 1 <= k <= MAX_ENUM_SIZE:
        raise InputError(f"carrier size must be in 1..{MAX_ENUM_SIZE}, got {k!r}")


def enumerate_posets(k: int) -> Iterator[Poset]:
    """Every labeled partial order on k elements, once each, in a fixed order."""
    _check_enum_size(k)
    for up in _extensions(k, antisymmetric=True):
        yield Poset(k, _masks_to_leq(up, k))


def enumerate_preorders(k: int) -> Iterator[tuple[tuple[bool, ...], ...]]:
    """Every labeled preorder on k elements as a raw relation matrix."""
    _check_enum_size(k)
    for up in _extensions(k, antisymmetric=False):
        yield _masks_to_leq(up, k)


@dataclass(frozen=True)
class ClassificationReport:
    group_name: str
    order: int
    kind: str
    total_orders: int
    paratopological: int
    topological: int
    witnesses: list = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "group_name": self.group_name,
            "order": self.order,
            "kind": self.kind,
            "total_orders": self.total_orders,
            "paratopological": self.paratopological,
            "topological": self.topological,
            "witnesses": self.witnesses,
        }


def _strict_pairs(leq) -> list[list[int]]:
    k = len(leq)
    return [[i, j] for i in range(k) for j in range(k) if i != j and leq[i][j]]


def _classify_chunk(args):
    table, inv, relations = args
    para = topo = 0
    passing = []
    for leq in relations:
        if _multiplication_violation(table, leq) is None:
            para += 1
            passing.append(leq)
            if _inversion_violation(inv, leq) is None:
                topo += 1
    return len(relations), para, topo, passing


def classify(G: FiniteGroup, workers: int = 1, preorders: bool = False, chunk_size: int = 4096) -> ClassificationReport:
    """Count the orders on G making it paratopological / topological.

    With ``preorders=True`` every preorder (not only T0 orders) is tested;
    that mode is exploratory and its counts carry no expectation.
    """
    if G.order > MAX_ENUM_SIZE:
        raise ResourceError(
            f"classifying group {G.name} needs all orders on {G.order} points; only orders up to {MAX_ENUM_SIZE} are supported"
        )
    if preorders:
        relations = list(enumerate_preorders(G.order))
    else:
        relations = [P.leq for P in enumerate_posets(G.order)]
    chunks = [(G.table, G.inv, relations[i:i + chunk_size]) for i in range(0, len(relations), chunk_size)]
    log.debug("classifying %s: %d relations in %d chunks, %d workers", G.name, len(relations), len(chunks), workers)
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_classify_chunk, chunks))
    else:
        results = [_classify_chunk(c) for c in chunks]
    total = sum(r[0] for r in results)
    para = sum(r[1] for r in results)
    topo = sum(r[2] for r in results)
    passing = [leq for r in results for leq in r[3]]
    witnesses = [_strict_pairs(leq) for leq in passing] if len(passing) <= WITNESS_LIMIT else []
    return ClassificationReport(
        G.name, G.order, "preorders" if preorders else "partial orders", total, para, topo, witnesses
    )
