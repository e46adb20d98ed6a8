"""Command-line front end.

Exit codes: 0 success (or skipped checks), 1 a relation or theorem check
failed, 2 invalid input.
"""
from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .errors import InputError, RelationError, TheoremViolation
from .graph import build_graph, to_dot, to_json
from .idempotents import central_flags, enumerate_idempotents, in_class, out_class
from .inner import connect_pair, induced_graph_map
from .rings import verify_ring_axioms
from .ringspec import build_ring, load_spec
from .theorems import CHECK_NAMES, run_all

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2


def _ring(args, check=True):
    spec = load_spec(args.spec)
    return build_ring(spec, bound=args.bound, check=check)


def _show(R, x, indices_only=False):
    x = int(x)
    if indices_only:
        return str(x)
    coords = "(" + ",".join(map(str, R.coords(x))) + ")"
    shown = R.format(x)
    return f"{x:>6}  {coords}" + (f"  {shown}" if shown != coords else "")


def cmd_validate(args, out):
    R = _ring(args, check=False)
    report = verify_ring_axioms(R)
    out.write(report.format() + "\n")
    return EXIT_OK if report.passed else EXIT_FAIL


def cmd_idempotents(args, out):
    R = _ring(args)
    idem = enumerate_idempotents(R, workers=args.jobs)
    central = central_flags(R, idem)
    out.write(f"ring: {R.descriptor}  |R| = {R.size}  idempotents: {len(idem)}\n")
    out.write(f"{'central':>7}  {'|O_e|':>5}  {'|I_e|':>5}  element\n")
    for e, c in zip(idem, central):
        o, i = len(out_class(R, int(e))), len(in_class(R, int(e)))
        out.write(f"{'yes' if c else 'no':>7}  {o:>5}  {i:>5}  {_show(R, e, args.indices)}\n")
    return EXIT_OK


def cmd_graph(args, out):
    R = _ring(args)
    g = build_graph(R, workers=args.jobs)
    text = to_dot(g) if args.format == "dot" else to_json(g)
    if args.out:
        try:
            Path(args.out).write_text(text)
        except OSError as exc:
            raise InputError(f"cannot write {args.out}: {exc.strerror}") from None
    else:
        out.write(text)
    return EXIT_OK


def cmd_verify(args, out):
    R = _ring(args)
    names = CHECK_NAMES if args.theorem == "all" else (args.theorem,)
    report = run_all(R, names, workers=args.jobs, exhaustive=True if args.exhaustive else None)
    out.write(report.to_json(args.timing) if args.json else report.format(args.timing))
    return EXIT_OK if report.passed else EXIT_FAIL


def cmd_automorphism(args, out):
    R = _ring(args)
    for x in (args.source, args.target):
        if not 0 <= x < R.size:
            raise InputError(f"index {x} out of range [0, {R.size})")
    sigma = connect_pair(R, args.source, args.target, args.kind)
    g = build_graph(R, workers=args.jobs)
    perm = induced_graph_map(sigma, g)
    form = "x -> (1+u) x (1-u)" if sigma.direction.value == "forward" else "x -> (1-u) x (1+u)"
    out.write(f"ring: {R.descriptor}\n")
    out.write(f"e1: {_show(R, args.source).strip()}\n")
    out.write(f"e2: {_show(R, args.target).strip()}\n")
    out.write(f"kind: {args.kind}\n")
    out.write(f"u = e2 - e1: {_show(R, sigma.u.value).strip()}\n")
    out.write(f"direction: {sigma.direction.value}  {form}\n")
    out.write(f"sigma(e1) = {sigma(args.source)} = e2: ok\n")
    out.write("induced permutation of idempotents (ring index -> ring index):\n")
    for v, w in enumerate(perm):
        out.write(f"  {int(g.vertices[v]):>6} -> {int(g.vertices[w])}\n")
    return EXIT_OK


def build_parser():
    parser = argparse.ArgumentParser(prog="idemring", description="Idempotents and their digraph in finite rings.")
    parser.add_argument("--bound", type=int, default=None, help="override the enumeration bound (default 2^20)")
    parser.add_argument("--jobs", type=int, default=1, help="worker threads for scans and checks")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="check the ring axioms")
    p.add_argument("spec")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("idempotents", help="list idempotents with class sizes")
    p.add_argument("spec")
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--coords", dest="indices", action="store_false", help="show coordinates (default)")
    mode.add_argument("--indices", dest="indices", action="store_true", help="show canonical indices only")
    p.set_defaults(func=cmd_idempotents, indices=False)

    p = sub.add_parser("graph", help="export the idempotent digraph")
    p.add_argument("spec")
    p.add_argument("--format", choices=["dot", "json"], default="dot")
    p.add_argument("--out", help="output path (default stdout)")
    p.set_defaults(func=cmd_graph)

    p = sub.add_parser("verify", help="run the theorem checks")
    p.add_argument("spec")
    p.add_argument("--theorem", choices=["all", *CHECK_NAMES], default="all")
    p.add_argument("--json", action="store_true", help="emit the JSON report")
    p.add_argument("--timing", action="store_true", help="include timings (output no longer byte-stable)")
    p.add_argument("--exhaustive", action="store_true", help="element-level checks instead of basis-level")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("automorphism", help="inner automorphism joining two equivalent idempotents")
    p.add_argument("spec")
    p.add_argument("--from", dest="source", type=int, required=True)
    p.add_argument("--to", dest="target", type=int, required=True)
    p.add_argument("--kind", choices=["out", "in"], default="out")
    p.set_defaults(func=cmd_automorphism)
    return parser


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.bound is not None:
        print(f"warning: enumeration bound overridden to {args.bound}", file=sys.stderr)
    try:
        return args.func(args, out)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (RelationError, TheoremViolation) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
