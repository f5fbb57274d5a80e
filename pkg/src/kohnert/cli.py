"""Command-line interface: enumeration, polynomials, crystals, the unlock
map with traces, and verification sweeps.

Exit codes: 0 success, 1 verification failure, 2 usage or input error,
3 internal theorem-violation fault.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from .core import TheoremViolation, key_diagram, kohnert_closure
from .crystal import crystal_graph
from .poly import key_polynomial, lock_polynomial, render_text
from .tableaux import (
    LabeledDiagram,
    enumerate_kkt,
    enumerate_lkt,
    lock_source_tableau,
    validate_lkt,
)
from .unlock import apply_unlock
from .verify import ALL_CHECKS, SPOT_COMPOSITIONS, SweepRange, run_checks


def parse_composition(text: str) -> tuple[int, ...]:
    """Parse '1,0,2,1' (trailing zeros significant; empty string allowed)."""
    text = text.strip()
    if not text:
        return ()
    try:
        parts = tuple(int(chunk) for chunk in text.split(","))
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"invalid composition {text!r}") from exc
    if any(p < 0 for p in parts):
        raise argparse.ArgumentTypeError("composition parts must be nonnegative")
    return parts


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="kohnert",
        description="Exact enumeration of Kohnert diagrams, key/lock tableaux, "
        "their polynomials and crystals, and the unlock map.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    enum = sub.add_parser("enum", help="enumerate tableaux or diagrams")
    enum.add_argument("--kind", choices=("kkt", "lkt", "kd"), required=True)
    enum.add_argument("--comp", type=parse_composition, required=True)
    enum.add_argument("--format", choices=("ascii", "json"), default="ascii")

    poly = sub.add_parser("poly", help="print a key or lock polynomial")
    poly.add_argument("--kind", choices=("key", "lock"), required=True)
    poly.add_argument("--comp", type=parse_composition, required=True)
    poly.add_argument("--format", choices=("text", "json"), default="text")

    crystal = sub.add_parser("crystal", help="build a crystal graph")
    crystal.add_argument("--kind", choices=("key", "lock"), required=True)
    crystal.add_argument("--comp", type=parse_composition, required=True)
    crystal.add_argument("--dot", metavar="PATH", help="write DOT to PATH")
    crystal.add_argument("--json", metavar="PATH", help="write graph JSON to PATH")

    mp = sub.add_parser("map", help="apply the unlock map to lock tableaux")
    mp.add_argument("--comp", type=parse_composition, required=True)
    group = mp.add_mutually_exclusive_group()
    group.add_argument("--all", action="store_true", help="map every lock tableau")
    group.add_argument("--input", metavar="FILE", help="read one tableau as JSON")
    mp.add_argument("--trace", action="store_true", help="also print the step trace")
    mp.add_argument("--format", choices=("ascii", "json"), default="ascii")

    ver = sub.add_parser("verify", help="run verification sweeps")
    ver.add_argument(
        "--check",
        choices=tuple(ALL_CHECKS) + ("all",),
        default="all",
    )
    ver.add_argument("--max-len", type=int, default=4)
    ver.add_argument("--max-part", type=int, default=3)
    return parser


def _print_tableaux(items, fmt: str) -> None:
    if fmt == "json":
        print(json.dumps([t.to_json() for t in items]))
    else:
        for t in items:
            print(t.ascii())
            print()


def _cmd_enum(args) -> int:
    if args.kind == "kkt":
        _print_tableaux(enumerate_kkt(args.comp), args.format)
    elif args.kind == "lkt":
        _print_tableaux(enumerate_lkt(args.comp), args.format)
    else:
        diagrams = kohnert_closure(key_diagram(args.comp))
        if args.format == "json":
            print(json.dumps([d.to_json() for d in diagrams]))
        else:
            for d in diagrams:
                print(d.ascii())
                print()
    return 0


def _cmd_poly(args) -> int:
    p = key_polynomial(args.comp) if args.kind == "key" else lock_polynomial(args.comp)
    print(json.dumps(p.to_json()) if args.format == "json" else render_text(p))
    return 0


def _cmd_crystal(args) -> int:
    g = crystal_graph(args.comp, args.kind)
    if args.dot:
        with open(args.dot, "w") as fh:
            fh.write(g.to_dot() + "\n")
    if args.json:
        with open(args.json, "w") as fh:
            json.dump(g.to_json(), fh)
            fh.write("\n")
    print(f"vertices: {len(g.vertices)}")
    print(f"edges: {len(g.edges)}")
    return 0


def _read_tableau(path: str) -> LabeledDiagram:
    with open(path) as fh:
        text = fh.read()
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValueError(
            f"malformed JSON in {path} at line {exc.lineno} column {exc.colno}: {exc.msg}"
        ) from exc
    return LabeledDiagram.from_json(data)


def _cmd_map(args) -> int:
    if args.all:
        sources = enumerate_lkt(args.comp)
    elif args.input:
        t = _read_tableau(args.input)
        if not validate_lkt(t, args.comp):
            raise ValueError(f"input is not a lock Kohnert tableau of content {args.comp}")
        sources = (t,)
    else:
        sources = (lock_source_tableau(args.comp),)
    results = [(t, *apply_unlock(t, args.comp)) for t in sources]
    if args.format == "json":
        payload = []
        for t, image, trace in results:
            item: dict = {"input": t.to_json(), "output": image.to_json()}
            if args.trace:
                item["trace"] = trace.to_json()
            payload.append(item)
        print(json.dumps(payload))
    else:
        for t, image, trace in results:
            print(t.ascii())
            print("  |")
            print("  v")
            print(image.ascii())
            if args.trace:
                print(json.dumps(trace.to_json()))
            print()
    return 0


def _cmd_verify(args) -> int:
    names = list(ALL_CHECKS) if args.check == "all" else [args.check]
    rng = SweepRange(max_length=args.max_len, max_part=args.max_part)
    reports = run_checks(names, rng, SPOT_COMPOSITIONS)
    width = max(len(r.check) for r in reports)
    failed = False
    for r in reports:
        status = "pass" if r.passed else "FAIL"
        print(f"{r.check.ljust(width)}  compositions={r.compositions_tested}  "
              f"failures={len(r.failures)}  {status}")
        for a, witness in r.failures:
            print(f"  {a}: {witness}")
        print(f"{r.check}: {r.elapsed_s:.2f}s", file=sys.stderr)
        failed = failed or not r.passed
    return 1 if failed else 0


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    handlers = {
        "enum": _cmd_enum,
        "poly": _cmd_poly,
        "crystal": _cmd_crystal,
        "map": _cmd_map,
        "verify": _cmd_verify,
    }
    try:
        return handlers[args.command](args)
    except TheoremViolation as exc:
        print(f"internal fault: {exc}", file=sys.stderr)
        return 3
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
