"""Command line interface.

Exit codes: 0 success (or equality for ``consum --method both``), 1 validation
or comparison failure with a report on stderr, 2 usage error.

Complex arguments are document paths or fixture names: ``POINT``, ``EDGE``,
``PATH:k`` and ``RANDOM:n:seed``.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from .complex import UNREACHABLE, euler_characteristic, f_vector, is_flag, skeleton_distance
from .errors import DocumentError, OrdplexError, ValidationFailed
from .kakimizu import BOTH, DIRECT_RULE, PRODUCT_PIPELINE, connected_sum_window, realize_triple
from .ordering import find_violations
from .product import Window, ordered_product
from .toolkit import (
    export_dot,
    fixture,
    gen_random_ordered_flag,
    parse_point,
    point_to_triples,
    read_document,
    serialize_complex,
)

METHODS = {"product": PRODUCT_PIPELINE, "direct": DIRECT_RULE, "both": BOTH}


class UsageError(Exception):
    pass


def _read_text(spec):
    if os.path.exists(spec):
        with open(spec, encoding="utf-8") as fh:
            return fh.read()
    return None


def load(spec):
    text = _read_text(spec)
    if text is not None:
        return read_document(text).oc
    try:
        return fixture(spec)
    except (KeyError, TypeError, ValueError):
        raise UsageError(f"no such file or fixture: {spec}") from None


def _window(text):
    try:
        return Window.parse(text)
    except OrdplexError as exc:
        raise UsageError(str(exc)) from None


def _emit(text, out):
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _describe(c):
    return (
        f"vertices={len(c.vertices)} edges={len(c.edge_set())} "
        f"f-vector={f_vector(c)} euler={euler_characteristic(c)}"
    )


def cmd_validate(args):
    text = _read_text(args.file)
    if text is None:
        raise UsageError(f"no such file: {args.file}")
    try:
        oc = read_document(text).oc
    except ValidationFailed as exc:
        for v in exc.report:
            print(v, file=sys.stderr)
        print("axioms: FAIL", file=sys.stderr)
        return 1
    assert not find_violations(oc.complex, oc.order)
    print("axioms: P1 ok, P2 ok, P3 ok")
    print(f"flag: {'yes' if is_flag(oc.complex) else 'no'}")
    print(_describe(oc.complex))
    return 0


def cmd_product(args):
    p = ordered_product(load(args.file1), load(args.file2))
    _emit(serialize_complex(p, name=f"{args.file1} x {args.file2}"), args.output)
    print(_describe(p.complex), file=sys.stderr)
    return 0


def cmd_consum(args):
    k1, k2 = load(args.k1), load(args.k2)
    w = _window(args.window)
    result = connected_sum_window(k1, k2, w, METHODS[args.method])
    name = f"{args.k1} # {args.k2} on {w}"
    if args.method == "both":
        print(f"pipeline: {_describe(result.pipeline.complex)}")
        print(f"direct:   {_describe(result.direct.complex)}")
        print(f"product simplices already flag: {result.pipeline.product_was_flag}")
        if args.output:
            _emit(serialize_complex(result.pipeline.oc, name=name), args.output)
        if not result.equal:
            print(result.summary(), file=sys.stderr)
            return 1
        print(result.summary())
        return 0
    if args.output:
        _emit(serialize_complex(result.oc, name=name), args.output)
    print(_describe(result.complex))
    return 0


def cmd_dist(args):
    c = load(args.file).complex
    for v in (args.u, args.v):
        if v not in c.vertices:
            raise UsageError(f"unknown vertex {v!r}")
    d = skeleton_distance(c, args.u, args.v)
    print("unreachable" if d == UNREACHABLE else d)
    return 0


def cmd_realize(args):
    k1, k2 = load(args.k1), load(args.k2)
    try:
        r = Fraction(args.r)
    except (ValueError, ZeroDivisionError):
        raise UsageError(f"bad rational {args.r!r}") from None
    p = realize_triple(k1, k2, parse_point(args.p1), parse_point(args.p2), r, _window(args.window))
    print(json.dumps(point_to_triples(p)))
    return 0


def cmd_export(args):
    oc = load(args.file)
    _emit(export_dot(oc.complex), args.output)
    return 0


def cmd_gen(args):
    if args.vertices < 1:
        raise UsageError("--vertices must be at least 1")
    oc = gen_random_ordered_flag(args.vertices, args.seed)
    _emit(serialize_complex(oc, name=f"random n={args.vertices} seed={args.seed}"), args.output)
    return 0


def build_parser():
    parser = argparse.ArgumentParser(prog="ordplex", description=__doc__.split("\n")[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="check the ordering axioms and flagness")
    p.add_argument("file")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("product", help="ordered product of two complexes")
    p.add_argument("file1")
    p.add_argument("file2")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_product)

    p = sub.add_parser("consum", help="connected-sum complex on a window of levels")
    p.add_argument("k1")
    p.add_argument("k2")
    p.add_argument("--window", required=True, metavar="LO:HI")
    p.add_argument("--method", choices=sorted(METHODS), default="both")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_consum)

    p = sub.add_parser("dist", help="1-skeleton distance between two vertices")
    p.add_argument("file")
    p.add_argument("u")
    p.add_argument("v")
    p.set_defaults(func=cmd_dist)

    p = sub.add_parser("realize", help="point of the connected-sum window over (p1, p2, r)")
    p.add_argument("k1")
    p.add_argument("k2")
    p.add_argument("--p1", required=True)
    p.add_argument("--p2", required=True)
    p.add_argument("--r", required=True)
    p.add_argument("--window", required=True, metavar="LO:HI")
    p.set_defaults(func=cmd_realize)

    p = sub.add_parser("export", help="Graphviz export of the 1-skeleton")
    p.add_argument("file")
    p.add_argument("--dot", action="store_true", required=True)
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_export)

    p = sub.add_parser("gen", help="random ordered flag complex")
    p.add_argument("--vertices", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_gen)
    return parser


def _join_negative_values(argv):
    # "--window -10:10" would otherwise be read as an option
    out = []
    it = iter(argv)
    for a in it:
        if a in ("--window", "--r"):
            nxt = next(it, None)
            out.append(a if nxt is None else f"{a}={nxt}")
        else:
            out.append(a)
    return out


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(_join_negative_values(sys.argv[1:] if argv is None else argv))
    try:
        return args.func(args)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"ordplex: error: {exc}", file=sys.stderr)
        return 2
    except ValidationFailed as exc:
        print(exc, file=sys.stderr)
        return 1
    except (DocumentError, OrdplexError) as exc:
        print(f"ordplex: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
