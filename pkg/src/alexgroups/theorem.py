"""End-to-end window verification of X_n's properties, collected into reports.

Each check in a :class:`Report` is tied to the statement it establishes via
an ``anchor`` string.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field

from .groups import FiniteGroup, XnGroup, xn_inv
from .paratopo import check_window_inversion, check_window_paratopological, classify
from .poset import validate_poset
from .verdict import InputError, Verdict
from .xn import (
    covering_a0_complement,
    covering_check,
    inverse_identity_check,
    saturate,
    window,
    window_poset,
)

__all__ = [
    "Check",
    "Report",
    "verify_proposition",
    "verify_theorem",
    "verify_finite_discreteness",
    "DEFAULT_MAX_WINDOW",
    "DEFAULT_GROUPS",
]

DEFAULT_MAX_WINDOW = 5
# one group per order in the default sweep n in {1, 2, 3, 4, 6}
DEFAULT_GROUPS = ("trivial", "c2", "c3", "c4", "s3")

ANCHORS = {
    "partial_order": "(a,b) <= (c,d) iff a < c or (a,b) = (c,d) is a partial order on X_n",
    "multiplication_monotone": "m((a,b),(c,d)) = (a+c, bd) is order-preserving: X_n is an Alexandroff paratopological group",
    "window_cardinality": "|H_m| = (2m+1)n",
    "inversion_not_monotone": "inversion on X_n is not order-preserving: X_n is not a topological group",
    "window_nesting": "H_m is contained in H_(m+1); X_n is the union of the H_m (sigma-compact)",
    "inverse_of_open": "U_(a,b)^-1 = F_(-a,b^-1): the inverse of an open set is closed",
    "covering_nonzero": "U_(a,b) u F_(-a,b^-1) = X_n for a != 0 (a > 0 literally; a < 0 via U_(-a,b^-1) u F_(a,b))",
    "covering_zero": "U_(0,b) u F_(0,b^-1) = X_n minus {(0,y) : y != b, y != b^-1}",
    "trivial_topology": "every nonempty set closed under U and F is all of X_n: the target group carries the trivial topology",
    "finite_discreteness": "a finite group with a T0 Alexandroff topology is paratopological only for the discrete topology",
}


@dataclass(frozen=True)
class Check:
    name: str
    anchor: str
    verdict: Verdict

    def to_dict(self) -> dict:
        return {"name": self.name, "anchor": self.anchor, "verdict": self.verdict.to_dict()}


@dataclass(frozen=True)
class Report:
    subject: str
    parameters: dict
    checks: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.verdict.passed for c in self.checks)

    def to_dict(self) -> dict:
        return {
            "subject": self.subject,
            "parameters": self.parameters,
            "checks": [c.to_dict() for c in self.checks],
            "pass": self.passed,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    def to_text(self) -> str:
        head = f"{self.subject} {' '.join(f'{k}={v}' for k, v in self.parameters.items())}"
        lines = [head]
        for c in self.checks:
            status = "PASS" if c.verdict.passed else "FAIL"
            line = f"  {status}  {c.name}"
            if not c.verdict.passed:
                line += f"  witness={c.verdict.witness} ({c.verdict.reason})"
            lines.append(line)
        lines.append(f"  {'PASS' if self.passed else 'FAIL'}  overall")
        return "\n".join(lines)


def _check_radius(m) -> None:
    if not isinstance(m, int) or m < 1:
        raise InputError(f"window radius must be at least 1, got {m!r}")


def _params(G: FiniteGroup, m: int) -> dict:
    return {"n": G.order, "group": G.name, "window": m}


def verify_proposition(G: FiniteGroup, m: int) -> Report:
    _check_radius(m)
    X = XnGroup(G)
    w = window(X, m)
    checks = [
        Check("partial_order", ANCHORS["partial_order"], validate_poset(window_poset(X, m).leq)),
        Check("multiplication_monotone", ANCHORS["multiplication_monotone"], _proof_cases(X, m)),
    ]

    expected = (2 * m + 1) * G.order
    if len(w) == expected:
        size = Verdict.ok(size=len(w))
    else:
        size = Verdict.fail(len(w), f"expected {expected} elements")
    checks.append(Check("window_cardinality", ANCHORS["window_cardinality"], size))

    inversion = check_window_inversion(X, m)
    if inversion:
        found = Verdict.fail(m, "inversion is monotone on the window")
    else:
        found = Verdict.ok(example=inversion.witness, images=[xn_inv(X, p) for p in inversion.witness])
    checks.append(Check("inversion_not_monotone", ANCHORS["inversion_not_monotone"], found))

    bigger = window(X, m + 1)
    outside = [p for p in w if p not in bigger]
    nesting = Verdict.fail(outside[0], "element of H_m missing from H_(m+1)") if outside else Verdict.ok()
    checks.append(Check("window_nesting", ANCHORS["window_nesting"], nesting))
    return Report("proposition", _params(G, m), checks)


def _proof_cases(X: XnGroup, m: int) -> Verdict:
    verdict = check_window_paratopological(X, m)
    if not verdict:
        return verdict
    empty = [name for name, count in verdict.details["cases"].items() if count == 0]
    if empty:
        return Verdict.fail(tuple(empty), "proof case never exercised")
    return verdict


def verify_theorem(G: FiniteGroup, m: int) -> Report:
    _check_radius(m)
    X = XnGroup(G)
    w = window(X, m)
    full = frozenset(w)

    inverse_bad = next((p for p in w if not inverse_identity_check(X, p, m)), None)
    inverse = Verdict.fail(inverse_bad, "inverse of U_p is not F_(p^-1)") if inverse_bad else Verdict.ok(checked=len(w))

    nonzero, literal_failures = Verdict.ok(), 0
    zero = Verdict.ok()
    for p in w:
        if p.a > 0:
            if not covering_check(X, p, m).full:
                nonzero = Verdict.fail(p, "union not full for a > 0")
                break
        elif p.a < 0:
            literal = covering_check(X, p, m)
            if literal.full:
                nonzero = Verdict.fail(p, "literal union unexpectedly full for a < 0")
                break
            literal_failures += 1
            if not covering_check(X, p, m, swapped=True).full:
                nonzero = Verdict.fail(p, "swapped union not full for a < 0")
                break
    if nonzero:
        nonzero = Verdict.ok(literal_union_short_for_negative_a=literal_failures)
    for p in w:
        if p.a == 0 and covering_check(X, p, m).missing != covering_a0_complement(X, p.b):
            zero = Verdict.fail(p, "missing set differs from {(0,y) : y != b, y != b^-1}")
            break

    sat_bad = next((p for p in w if saturate(X, {p}, m) != full), None)
    trivial = Verdict.fail(sat_bad, "saturation of a point is not the whole window") if sat_bad else Verdict.ok(points=len(w))

    checks = [
        Check("inverse_of_open", ANCHORS["inverse_of_open"], inverse),
        Check("covering_nonzero", ANCHORS["covering_nonzero"], nonzero),
        Check("covering_zero", ANCHORS["covering_zero"], zero),
        Check("trivial_topology", ANCHORS["trivial_topology"], trivial),
    ]
    return Report("theorem", _params(G, m), checks)


def verify_finite_discreteness(G: FiniteGroup, workers: int = 1) -> Report:
    report = classify(G, workers=workers)
    details = report.to_dict()
    if report.paratopological == report.topological == 1:
        verdict = Verdict.ok(**details)
    else:
        verdict = Verdict.fail(report.witnesses or report.paratopological, "non-discrete compatible order", **details)
    params = {"n": G.order, "group": G.name}
    return Report("discreteness", params, [Check("finite_discreteness", ANCHORS["finite_discreteness"], verdict)])
