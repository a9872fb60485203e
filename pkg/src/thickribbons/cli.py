"""Command-line interface.

Diagrams use the text grammar `3|3|3,1`: comma-separated row sizes bottom
row first, `|` for a box-dot; the block width m is a flag.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import verify as verify_mod
from .expand import expand, expand_determinant
from .factor import compose, equivalence_orbit, factorize, ribbon_type
from .shapes import parse_one_dot, parse_ribbon, to_skew_shape
from .structure import classify, element_type, is_canonical, period, sign_table
from .tableaux import DEFAULT_MAX_CELLS, equivalent_by_kostka, kostka_vector


def _partition_arg(text: str) -> tuple[int, ...]:
    compact = "".join(text.split())
    if not compact:
        return ()
    return tuple(int(tok) for tok in compact.split(","))


def _comp_str(parts) -> str:
    return ",".join(str(p) for p in parts)


def _emit(obj) -> None:
    print(json.dumps(obj, indent=2))


def _cmd_expand(args) -> int:
    diagram = parse_ribbon(args.diagram, args.m)
    result = expand(diagram, args.method)
    if args.json:
        _emit(result.to_json_obj())
    else:
        print(result)
    return 0


def _cmd_coeff(args) -> int:
    diagram = parse_ribbon(args.diagram, args.m)
    lam = _partition_arg(args.partition)
    print(expand(diagram, args.method).coeff(lam))
    return 0


def _cmd_equiv(args) -> int:
    first = parse_ribbon(args.first, args.m)
    second = parse_ribbon(args.second, args.m)
    if args.method == "kostka":
        answer = equivalent_by_kostka(
            first.one_dot(), second.one_dot(), args.max_n or DEFAULT_MAX_CELLS
        )
    else:
        answer = expand(first, args.method) == expand(second, args.method)
    print(f"equivalent: {'true' if answer else 'false'}")
    return 0


def _cmd_sign_table(args) -> int:
    diagram = parse_one_dot(args.diagram, args.m)
    table = sign_table(diagram)
    rows = [
        {"x": x, "type": element_type(table, x), "sign": table.sign(x)}
        for x in table.domain
    ]
    if args.json:
        _emit(rows)
        return 0
    width = max(len(str(r["x"])) for r in rows)
    print("x:    " + " ".join(str(r["x"]).rjust(width) for r in rows))
    print("type: " + " ".join(str(r["type"]).rjust(width) for r in rows))
    print("sign: " + " ".join(r["sign"].rjust(width) for r in rows))
    return 0


def _cmd_classify(args) -> int:
    diagram = parse_one_dot(args.diagram, args.m)
    tax = classify(diagram)
    canonical = is_canonical(diagram)
    if args.json:
        _emit(
            {
                "case": tax.case,
                "r": tax.r,
                "canonical": canonical,
                "classes": [
                    {"min": block[0], "members": list(block), "label": label}
                    for block, label in zip(tax.blocks, tax.labels)
                ],
            }
        )
        return 0
    print(f"case: {tax.case}")
    print(f"r: {tax.r}")
    print(f"canonical: {'true' if canonical else 'false'}")
    for block, label in zip(tax.blocks, tax.labels):
        members = ",".join(str(x) for x in block)
        print(f"[{block[0]}] = {{{members}}}: {label}")
    return 0


def _cmd_factorize(args) -> int:
    diagram = parse_one_dot(args.diagram, args.m)
    fact = factorize(diagram)
    if args.json:
        _emit(
            None
            if fact is None
            else {"s": list(fact.s), "t": list(fact.t), "m": fact.m}
        )
        return 0
    if fact is None:
        print("trivial")
    else:
        print(f"s: {fact.s[0]},{fact.s[1]}")
        print(f"t: {_comp_str(fact.t)}")
    return 0


def _cmd_compose(args) -> int:
    t = _partition_arg(args.t)
    ribbon_type(t, args.m)
    print(compose(args.p, args.q, t, args.m))
    return 0


def _cmd_orbit(args) -> int:
    diagram = parse_one_dot(args.diagram, args.m)
    orbit, kappa = equivalence_orbit(diagram)
    members = sorted(str(d) for d in orbit)
    if args.json:
        _emit({"members": members, "kappa": kappa})
        return 0
    for member in members:
        print(member)
    print(f"kappa: {kappa}")
    return 0


def _cmd_kostka(args) -> int:
    diagram = parse_ribbon(args.diagram, args.m)
    guard = args.max_n or DEFAULT_MAX_CELLS
    vector = kostka_vector(to_skew_shape(diagram), guard)
    if args.json:
        _emit(vector.to_json_obj())
        return 0
    for nu, count in vector.entries:
        print(f"{_comp_str(nu)}: {count}")
    return 0


def _cmd_enumerate(args) -> int:
    for diagram in verify_mod.all_diagrams(args.n, args.m):
        print(diagram)
    return 0


def _cmd_verify(args) -> int:
    if args.n is not None:
        sizes = [args.n]
    else:
        cap = args.max_n or verify_mod.default_max_size(args.m)
        sizes = list(range(2 * args.m, cap + 1))
    reports = [verify_mod.check_theorem(n, args.m) for n in sizes]
    ok = all(r.ok for r in reports)
    if args.json:
        _emit([r.to_json_obj() for r in reports])
    else:
        for report in reports:
            print(report.summary())
        print("result: " + ("PASS" if ok else "FAIL"))
    return 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="thickribbons",
        description="h-expansions and equivalence classes of thickened ribbons",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, handler, **kwargs):
        p = sub.add_parser(name, **kwargs)
        p.set_defaults(handler=handler)
        return p

    p = add("expand", _cmd_expand, help="h-expansion of a diagram")
    p.add_argument("diagram")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--method", choices=["recursive", "poset", "det"], default="recursive")
    p.add_argument("--json", action="store_true")

    p = add("coeff", _cmd_coeff, help="one coefficient of the h-expansion")
    p.add_argument("diagram")
    p.add_argument("partition", help="e.g. 5,3,1,1")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--method", choices=["recursive", "poset", "det"], default="recursive")

    p = add("equiv", _cmd_equiv, help="are two diagrams equivalent?")
    p.add_argument("first")
    p.add_argument("second")
    p.add_argument("--m", type=int, required=True)
    p.add_argument(
        "--method",
        choices=["recursive", "poset", "det", "kostka"],
        default="recursive",
    )
    p.add_argument("--max-n", type=int, default=None, help="kostka size guard")

    p = add("sign-table", _cmd_sign_table, help="sign and type of every position")
    p.add_argument("diagram")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--json", action="store_true")

    p = add("classify", _cmd_classify, help="position classes and their labels")
    p.add_argument("diagram")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--json", action="store_true")

    p = add("factorize", _cmd_factorize, help="gcd-period factorization")
    p.add_argument("diagram")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--json", action="store_true")

    p = add("compose", _cmd_compose, help="glue p+q copies of a ribbon")
    p.add_argument("p", type=int)
    p.add_argument("q", type=int)
    p.add_argument("t", help="ribbon, e.g. 3,1,2")
    p.add_argument("--m", type=int, required=True)

    p = add("orbit", _cmd_orbit, help="predicted equivalence class")
    p.add_argument("diagram")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--json", action="store_true")

    p = add("kostka", _cmd_kostka, help="Kostka numbers of the diagram's shape")
    p.add_argument("diagram")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--max-n", type=int, default=None, help="size guard override")
    p.add_argument("--json", action="store_true")

    p = add("enumerate", _cmd_enumerate, help="all diagrams of a given size")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, required=True)

    p = add("verify", _cmd_verify, help="exhaustive classification check")
    p.add_argument("--n", type=int, default=None, help="single size (default: sweep)")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--max-n", type=int, default=None, help="sweep budget override")
    p.add_argument("--json", action="store_true")

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
