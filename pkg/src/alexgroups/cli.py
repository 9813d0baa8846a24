"""Command-line front end.

Exit status: 0 when every emitted check passes, 1 when some check failed
(the report is still written), 2 on usage or input errors.
"""
from __future__ import annotations

import argparse
import json
import re
import sys

from .groups import XnElement, XnGroup, resolve_group, xn_inv
from .paratopo import classify
from .poset import covers, load_poset
from .theorem import (
    DEFAULT_GROUPS,
    DEFAULT_MAX_WINDOW,
    verify_finite_discreteness,
    verify_proposition,
    verify_theorem,
)
from .verdict import InputError, ResourceError
from .xn import saturate, window, window_poset, xn_f_set, xn_u_set

_PAIR = re.compile(r"^\s*\(?\s*(-?\d+)\s*,\s*(\d+)\s*\)?\s*$")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def parse_element(text: str) -> XnElement:
    match = _PAIR.match(text)
    if not match:
        raise InputError(f"cannot parse element {text!r}; expected \"(a,b)\"")
    return XnElement(int(match.group(1)), int(match.group(2)))


def _label(p) -> str:
    return f"({p[0]},{p[1]})"


def hasse_dot(X: XnGroup, m: int, mark=None) -> str:
    """Hasse diagram of H_m as DOT, nodes and edges in lexicographic order.

    With ``mark`` set to an element p, U_p is filled red and its pointwise
    inverse F_(p^-1) blue.
    """
    w = window(X, m)
    diagram = covers(window_poset(X, m))
    colors = {}
    if mark is not None:
        u = xn_u_set(X, mark, m)
        for q in xn_f_set(X, xn_inv(X, mark), m):
            colors[q] = "blue"
        for q in u:
            colors[q] = "red" if q not in colors else "purple"
    lines = ["digraph hasse { rankdir=BT;"]
    for p in w.elements:
        attrs = f' [style=filled, fillcolor={colors[p]}]' if p in colors else ""
        lines.append(f'  "{_label(p)}"{attrs};')
    edges = sorted((w.elements[i], w.elements[j]) for i, j in diagram.edges)
    for p, q in edges:
        lines.append(f'  "{_label(p)}" -> "{_label(q)}";')
    lines.append("}")
    return "\n".join(lines) + "\n"


def hasse_json(X: XnGroup, m: int, mark=None) -> str:
    w = window(X, m)
    diagram = covers(window_poset(X, m))
    payload = {
        "group": X.fn.name,
        "window": m,
        "nodes": [_label(p) for p in w.elements],
        "edges": [[_label(p), _label(q)] for p, q in sorted((w.elements[i], w.elements[j]) for i, j in diagram.edges)],
    }
    if mark is not None:
        payload["marked_u"] = [_label(p) for p in sorted(xn_u_set(X, mark, m))]
        payload["marked_inverse"] = [_label(p) for p in sorted(xn_f_set(X, xn_inv(X, mark), m))]
    return json.dumps(payload, indent=2) + "\n"


def _poset_hasse(path, fmt: str) -> str:
    P = load_poset(path)
    edges = covers(P).edges
    if fmt == "json":
        return json.dumps({"nodes": list(range(P.size)), "edges": [list(e) for e in edges]}, indent=2) + "\n"
    lines = ["digraph hasse { rankdir=BT;"]
    lines += [f'  "{i}";' for i in range(P.size)]
    lines += [f'  "{i}" -> "{j}";' for i, j in edges]
    lines.append("}")
    return "\n".join(lines) + "\n"


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="alexgroups", description="Window-scale verification of Alexandroff orders on Z x F_n.")
    sub = parser.add_subparsers(dest="subcommand", required=True, parser_class=_Parser)

    def common(p, formats, default):
        p.add_argument("--format", choices=formats, default=default)
        p.add_argument("--out", help="write output here instead of stdout")

    p = sub.add_parser("verify", help="check the window properties of X_n")
    p.add_argument("--group", action="append", help="builtin name or Cayley JSON file (repeatable)")
    p.add_argument("--window", type=int, help="window radius m (>= 1)")
    p.add_argument("--max-window", type=int, help="sweep m = 1..MAX instead of a single window")
    p.add_argument("--discreteness", action="store_true", help="also classify the orders on F_n itself")
    common(p, ["json", "text"], "json")

    p = sub.add_parser("hasse", help="Hasse diagram of a window H_m or of a poset file")
    p.add_argument("--group", default="c4")
    p.add_argument("--window", type=int, default=1)
    p.add_argument("--poset", help="Poset JSON file; overrides --group/--window")
    p.add_argument("--mark-u", help='highlight U_p and its inverse set, e.g. "(0,1)"')
    common(p, ["dot", "json"], "dot")

    p = sub.add_parser("classify", help="count group-compatible orders on a finite group")
    p.add_argument("--group", required=True)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--preorders", action="store_true", help="exploratory: include non-T0 preorders")
    common(p, ["json", "text"], "json")

    p = sub.add_parser("saturate", help="closure of a seed set under U and F inside H_m")
    p.add_argument("--group", required=True)
    p.add_argument("--window", type=int, required=True)
    p.add_argument("--seed", action="append", default=[], help='element "(a,b)" (repeatable)')
    common(p, ["json", "text"], "json")

    p = sub.add_parser("info", help="describe a finite group")
    p.add_argument("--group", required=True)
    common(p, ["json", "text"], "json")
    return parser


def _verify(args) -> tuple[str, bool]:
    if args.window is not None and args.max_window is not None:
        raise InputError("use either --window or --max-window")
    if args.max_window is not None:
        windows = list(range(1, args.max_window + 1))
        if not windows:
            raise InputError("--max-window must be at least 1")
    else:
        m = DEFAULT_MAX_WINDOW if args.window is None else args.window
        if m < 1:
            raise InputError(f"theorem checks need --window >= 1, got {m}")
        windows = [m]
    groups = [resolve_group(g) for g in (args.group or DEFAULT_GROUPS)]
    reports = []
    for G in groups:
        for m in windows:
            reports.append(verify_proposition(G, m))
            reports.append(verify_theorem(G, m))
        if args.discreteness:
            reports.append(verify_finite_discreteness(G))
    passed = all(r.passed for r in reports)
    if args.format == "text":
        return "\n".join(r.to_text() for r in reports) + "\n", passed
    payload = {"reports": [r.to_dict() for r in reports], "pass": passed}
    return json.dumps(payload, indent=2) + "\n", passed


def _hasse(args) -> tuple[str, bool]:
    if args.poset:
        return _poset_hasse(args.poset, args.format), True
    X = XnGroup(resolve_group(args.group))
    if args.window < 0:
        raise InputError(f"--window must be >= 0, got {args.window}")
    mark = X.check(parse_element(args.mark_u)) if args.mark_u else None
    render = hasse_dot if args.format == "dot" else hasse_json
    return render(X, args.window, mark), True


def _classify(args) -> tuple[str, bool]:
    G = resolve_group(args.group)
    if args.workers < 1:
        raise InputError("--workers must be at least 1")
    if args.preorders:
        report = classify(G, workers=args.workers, preorders=True)
        if args.format == "text":
            d = report.to_dict()
            return "".join(f"{k}: {d[k]}\n" for k in d), True
        return json.dumps(report.to_dict(), indent=2) + "\n", True
    report = verify_finite_discreteness(G, workers=args.workers)
    if args.format == "text":
        return report.to_text() + "\n", report.passed
    return report.to_json() + "\n", report.passed


def _saturate(args) -> tuple[str, bool]:
    X = XnGroup(resolve_group(args.group))
    seeds = [X.check(parse_element(s)) for s in args.seed]
    result = saturate(X, seeds, args.window)
    w = window(X, args.window)
    payload = {
        "group": X.fn.name,
        "window": args.window,
        "seed": [_label(p) for p in sorted(seeds)],
        "result": [_label(p) for p in w.elements if p in result],
        "size": len(result),
        "window_size": len(w),
        "full": len(result) == len(w),
    }
    if args.format == "text":
        return "".join(f"{k}: {v}\n" for k, v in payload.items()), True
    return json.dumps(payload, indent=2) + "\n", True


def _info(args) -> tuple[str, bool]:
    G = resolve_group(args.group)
    payload = {
        "name": G.name,
        "order": G.order,
        "abelian": G.is_abelian(),
        "inverses": list(G.inv),
        "table": [list(r) for r in G.table],
    }
    if args.format == "text":
        rows = "\n".join("  " + " ".join(str(v) for v in r) for r in G.table)
        return (
            f"name: {G.name}\norder: {G.order}\nabelian: {payload['abelian']}\n"
            f"inverses: {payload['inverses']}\ntable:\n{rows}\n"
        ), True
    return json.dumps(payload, indent=2) + "\n", True


HANDLERS = {
    "verify": _verify,
    "hasse": _hasse,
    "classify": _classify,
    "saturate": _saturate,
    "info": _info,
}


def run(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
        text, passed = HANDLERS[args.subcommand](args)
    except (UsageError, InputError, ResourceError) as exc:
        print(f"alexgroups: error: {exc}", file=sys.stderr)
        return 2
    if args.out:
        try:
            with open(args.out, "w") as fh:
                fh.write(text)
        except OSError as exc:
            print(f"alexgroups: error: cannot write {args.out}: {exc}", file=sys.stderr)
            return 2
    else:
        sys.stdout.write(text)
    return 0 if passed else 1


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
