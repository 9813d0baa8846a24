"""The order on X_n = Z x F_n and its finite windows.

``(a, b) <= (c, d)`` iff ``a < c`` or ``(a, b) == (c, d)``: every element of a
level ``a`` lies below every element of every higher level, and elements of
the same level are incomparable. All sets are computed inside the window
``H_m = {(a, b) : -m <= a <= m}``; since the order only compares levels,
a window sees the same local picture as the whole group.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

from .groups import XnElement, XnGroup, xn_inv
from .poset import Poset
from .verdict import InputError, Verdict

__all__ = [
    "Window",
    "CoverageResult",
    "xn_leq",
    "window",
    "level",
    "xn_u_set",
    "xn_f_set",
    "inverse_identity_check",
    "covering_check",
    "covering_a0_complement",
    "window_poset",
    "saturate",
]


def xn_leq(X: XnGroup, p, q) -> bool:
    return p[0] < q[0] or (p[0] == q[0] and p[1] == q[1])


@dataclass(frozen=True)
class Window:
    """H_m with its elements in lexicographic (a, b) order."""

    m: int
    n: int
    elements: tuple[XnElement, ...]
    index: dict = field(compare=False, repr=False)

    def __len__(self) -> int:
        return len(self.elements)

    def __contains__(self, p) -> bool:
        return p in self.index

    def __iter__(self):
        return iter(self.elements)


def window(X: XnGroup, m: int) -> Window:
    if not isinstance(m, int) or m < 0:
        raise InputError(f"window radius must be a nonnegative integer, got {m!r}")
    elements = tuple(XnElement(a, b) for a in range(-m, m + 1) for b in range(X.n))
    return Window(m, X.n, elements, {p: i for i, p in enumerate(elements)})


def level(X: XnGroup, a: int) -> frozenset[XnElement]:
    return frozenset(XnElement(a, b) for b in range(X.n))


def _in_window(X: XnGroup, p, m: int) -> XnElement:
    if not isinstance(m, int) or m < 0:
        raise InputError(f"window radius must be a nonnegative integer, got {m!r}")
    p = X.check(p)
    if not -m <= p.a <= m:
        raise InputError(f"{p} lies outside the window H_{m}")
    return p


def xn_u_set(X: XnGroup, p, m: int) -> frozenset[XnElement]:
    """U_p within H_m: all levels strictly below p's, plus p."""
    p = _in_window(X, p, m)
    return frozenset(XnElement(x, y) for x in range(-m, p.a) for y in range(X.n)) | {p}


def xn_f_set(X: XnGroup, p, m: int) -> frozenset[XnElement]:
    """F_p within H_m: all levels strictly above p's, plus p."""
    p = _in_window(X, p, m)
    return frozenset(XnElement(x, y) for x in range(p.a + 1, m + 1) for y in range(X.n)) | {p}


def inverse_identity_check(X: XnGroup, p, m: int) -> Verdict:
    """Pointwise inverse of U_p equals F_{p^-1}; witness is the symmetric difference."""
    p = _in_window(X, p, m)
    image = frozenset(xn_inv(X, q) for q in xn_u_set(X, p, m))
    target = xn_f_set(X, xn_inv(X, p), m)
    if image == target:
        return Verdict.ok()
    return Verdict.fail(tuple(sorted(image ^ target)), "inverse of U_p differs from F_(p^-1)")


@dataclass(frozen=True)
class CoverageResult:
    full: bool
    missing: tuple[XnElement, ...]


def covering_check(X: XnGroup, p, m: int, swapped: bool = False) -> CoverageResult:
    """Which window elements ``U_p u F_(p^-1)`` misses.

    With ``swapped=True`` the union ``U_(p^-1) u F_p`` is used instead, which is
    the form that covers everything off level 0 when p's level is negative.
    """
    p = _in_window(X, p, m)
    if m < 1:
        raise InputError("covering checks need a window radius of at least 1")
    q = xn_inv(X, p)
    union = xn_u_set(X, q, m) | xn_f_set(X, p, m) if swapped else xn_u_set(X, p, m) | xn_f_set(X, q, m)
    missing = tuple(e for e in window(X, m) if e not in union)
    return CoverageResult(not missing, missing)


def covering_a0_complement(X: XnGroup, b: int) -> tuple[XnElement, ...]:
    """{(0, y) : y != b, y != b^-1}, the part of level 0 left out when a = 0."""
    X.fn.check(b)
    binv = X.fn.inv[b]
    return tuple(XnElement(0, y) for y in range(X.n) if y != b and y != binv)


def window_poset(X: XnGroup, m: int) -> Poset:
    """H_m under the X_n order, indexed by position in ``window(X, m)``."""
    w = window(X, m)
    relation = tuple(tuple(xn_leq(X, p, q) for q in w.elements) for p in w.elements)
    return Poset(len(w), relation)


def saturate(X: XnGroup, S: Iterable, m: int) -> frozenset[XnElement]:
    """Least superset of S closed under p -> U_p and p -> F_p inside H_m.

    Any open set V of a topology on the target of a continuous isomorphism
    from X_n (with continuous inversion) must be closed under both rules:
    continuity of the map forces U_p into V, continuity of inversion forces
    F_p into V.
    """
    result = set()
    todo = [_in_window(X, p, m) for p in S]
    while todo:
        p = todo.pop()
        if p in result:
            continue
        result.add(p)
        for q in xn_u_set(X, p, m) | xn_f_set(X, p, m):
            if q not in result:
                todo.append(q)
    return frozenset(result)
