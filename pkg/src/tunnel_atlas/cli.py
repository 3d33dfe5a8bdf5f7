"""``tunnel-atlas`` command-line front end.

Every invocation produces one document with ``command``, ``inputs``,
``results`` and ``warnings``.  ``--format json`` prints it as JSON with
integers as decimal strings; the default text format prints the same
values line by line, preceded for ``fib``/``bridge-set`` by a short
transcript-style summary.

Exit codes: 0 success, 2 invalid input, 3 internal invariant violation.
"""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from functools import lru_cache

from . import bridge, oracle, torus, words
from .errors import TunnelAtlasError

EXIT_OK, EXIT_INPUT, EXIT_INVARIANT = 0, 2, 3


class InvariantViolation(RuntimeError):
    pass


class Document:
    def __init__(self, command):
        self.command = command
        self.inputs = {}
        self.results = {}
        self.warnings = []
        self.summary = []

    def as_dict(self):
        return {
            "command": self.command,
            "inputs": _serialize(self.inputs),
            "results": _serialize(self.results),
            "warnings": list(self.warnings),
        }


def _serialize(value):
    if isinstance(value, bool) or value is None:
        return value
    if isinstance(value, (int, Fraction)):
        return str(value)
    if isinstance(value, dict):
        return {k: _serialize(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_serialize(v) for v in value]
    return str(value)


def render(value) -> str:
    """Text form of a serialized value."""
    if value is None:
        return "none"
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, dict):
        return "{" + ", ".join(f"{k}={render(v)}" for k, v in value.items()) + "}"
    if isinstance(value, list):
        return "[" + ", ".join(render(v) for v in value) + "]"
    return value


def format_text(doc: Document) -> str:
    data = doc.as_dict()
    lines = list(doc.summary)
    lines.append(f"command: {data['command']}")
    for section in ("inputs", "results"):
        lines.append(f"{section}:")
        for key, value in data[section].items():
            if isinstance(value, list) and value and isinstance(value[0], dict):
                lines.append(f"  {key}:")
                lines.extend(f"    - {render(item)}" for item in value)
            else:
                lines.append(f"  {key}: {render(value)}")
    lines.append("warnings:")
    lines.extend(f"  - {w}" for w in data["warnings"])
    return "\n".join(lines) + "\n"


def _read_path(args):
    text = args.path
    if not text:
        if not args.empty:
            raise TunnelAtlasError("empty input requires the explicit --empty flag")
        return words.BinaryWord("")
    if args.binary:
        return words.parse_binary(text)
    if args.steps:
        return words.steps_to_binary(words.parse_steps(text))
    return words.parse_path(text)


def _path_results(w):
    prof = words.profile(w)
    return {
        "word": w.bits,
        "steps": words.binary_to_steps(w).steps,
        "depth": prof.depth,
        "n": prof.cabling_count,
        "m": prof.semisimple_count,
        "regular": prof.regular,
    }


def cmd_depth(args, doc):
    w = _read_path(args)
    doc.inputs["path"] = args.path or ""
    doc.results.update(_path_results(w))


def cmd_convert(args, doc):
    w = _read_path(args)
    doc.inputs["path"] = args.path or ""
    doc.results["word"] = w.bits
    doc.results["steps"] = words.binary_to_steps(w).steps


def cmd_fib(args, doc):
    w = _read_path(args)
    doc.inputs.update(word=w.bits, a=args.a, b=args.b)
    seq = bridge.fibonacci_trace(w, args.a, args.b)
    doc.results["value"] = seq[-1]
    doc.summary.append(f"F_tau( {args.a}, {args.b} ) = {seq[-1]}")
    if args.trace:
        doc.results["trace"] = seq
        doc.summary.append("The iteration sequence is:")
        doc.summary.append("   " + ", ".join(map(str, seq)))


def cmd_bridge_set(args, doc):
    w = _read_path(args)
    doc.inputs["word"] = w.bits
    if not w.is_regular:
        raise TunnelAtlasError(
            f"word {w.bits!r} is not regular; use `bounds --semisimple {w.cabling_count}`")
    pairs = bridge.bridge_set_pairs(w)
    values = [v for _, v in pairs]
    doc.results["m"] = words.semisimple_count(w)
    doc.results["values"] = values
    doc.results["seeds"] = [[s.a, s.b] for s, _ in pairs]
    doc.summary.append("[" + ", ".join(map(str, values)) + "]")


def cmd_bounds(args, doc):
    if args.min_depth is not None:
        doc.inputs["min_depth"] = args.min_depth
        doc.results["min_bridge"] = bridge.min_bridge(args.min_depth)
    elif args.torus_min_depth is not None:
        doc.inputs["torus_min_depth"] = args.torus_min_depth
        doc.results["torus_min_bridge"] = bridge.torus_min_bridge(args.torus_min_depth)
    elif args.max is not None:
        if len(args.max) == 1:
            (n,) = args.max
            doc.inputs["n"] = n
            doc.results["max_bridge_overall"] = bridge.max_bridge_overall(n)
        elif len(args.max) == 2:
            n, m = args.max
            doc.inputs.update(n=n, m=m)
            doc.results["max_bridge"] = bridge.max_bridge(n, m)
        else:
            raise TunnelAtlasError("--max takes n or n m")
    else:
        doc.inputs["semisimple"] = args.semisimple
        lo, hi = bridge.semisimple_range(args.semisimple)
        doc.results["semisimple_range"] = [lo, hi]


def cmd_torus(args, doc):
    doc.inputs.update(p=args.p, q=args.q)
    table = torus.invariant_table(args.p, args.q)
    shortcut = torus.torus_depth_shortcut(table.cf, args.shortcut_convention)

    if table.rows[-1].knot != (table.p, table.q):
        raise InvariantViolation(f"final knot {table.rows[-1].knot} != {(table.p, table.q)}")
    bridge_check = None
    if table.word.is_regular:
        bridge_check = bridge.fibonacci_value(table.word, *torus.bridge_seeds(table))
        if bridge_check != table.q:
            raise InvariantViolation(
                f"Fibonacci function gives {bridge_check}, bridge number is {table.q}")

    doc.results.update(
        p=table.p, q=table.q, mirrored=table.mirrored, cf=list(table.cf),
        cabling_count=table.cabling_count, word=table.word.bits,
        depth=table.depth, bridge_number=table.q,
        shortcut_convention=args.shortcut_convention, shortcut_depth=shortcut,
    )
    if bridge_check is not None:
        doc.results["fibonacci_bridge_number"] = bridge_check
    if args.table:
        doc.results["rows"] = [
            {"t": r.t, "matrix": [[r.matrix[0], r.matrix[1]], [r.matrix[2], r.matrix[3]]],
             "slope": r.slope, "knot": list(r.knot)}
            for r in table.rows]
    if shortcut != table.depth:
        doc.warnings.append(
            f"{args.shortcut_convention} shortcut depth ({shortcut}) differs from "
            f"authoritative depth ({table.depth})")


def cmd_search(args, doc):
    if args.min_depth is not None:
        if args.max_length is None:
            raise TunnelAtlasError("--min-depth needs --max-length")
        doc.inputs.update(min_depth=args.min_depth, max_length=args.max_length)
        report = oracle.min_bridge_search(args.max_length, args.min_depth, workers=args.workers)
        witnesses = report.witnesses
        if report.value != bridge.min_bridge(args.min_depth):
            doc.warnings.append(
                f"search minimum {report.value} differs from min_bridge = "
                f"{bridge.min_bridge(args.min_depth)} within this horizon")
    else:
        n, m = args.max
        doc.inputs.update(n=n, m=m)
        report = oracle.max_bridge_search(n, m, workers=args.workers)
        witnesses = [{"word": w, "seed": list(s) if s else None} for w, s in report.witnesses]
    doc.results.update(kind=report.kind, value=report.value, witnesses=witnesses,
                       examined=report.examined, horizon=report.horizon)


@lru_cache(maxsize=None)
def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")

    path = argparse.ArgumentParser(add_help=False)
    path.add_argument("path", nargs="?", help="binary word or D/L/R step sequence")
    path.add_argument("--empty", action="store_true", help="use the empty word")
    enc = path.add_mutually_exclusive_group()
    enc.add_argument("--binary", action="store_true", help="force binary-word parsing")
    enc.add_argument("--steps", action="store_true", help="force step-sequence parsing")

    parser = argparse.ArgumentParser(
        prog="tunnel-atlas", description="Invariants of tunnel number one knot tunnels.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("depth", parents=[common, path], help="depth, n and m of a principal path")
    p.set_defaults(func=cmd_depth)
    p = sub.add_parser("convert", parents=[common, path], help="translate word <-> steps")
    p.set_defaults(func=cmd_convert)

    p = sub.add_parser("fib", parents=[common, path], help="evaluate F_tau(a, b)")
    p.add_argument("a", type=int)
    p.add_argument("b", type=int)
    p.add_argument("--trace", action="store_true", help="print the iteration sequence")
    p.set_defaults(func=cmd_fib)

    p = sub.add_parser("bridge-set", parents=[common, path], help="the 2m-2 candidate bridge numbers")
    p.set_defaults(func=cmd_bridge_set)

    p = sub.add_parser("bounds", parents=[common], help="extremal bridge numbers")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--min-depth", type=int, metavar="D")
    g.add_argument("--torus-min-depth", type=int, metavar="D")
    g.add_argument("--max", type=int, nargs="+", metavar="N", help="n [m]")
    g.add_argument("--semisimple", type=int, metavar="N")
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("torus", parents=[common], help="middle tunnel of the (p, q) torus knot")
    p.add_argument("p", type=int)
    p.add_argument("q", type=int)
    p.add_argument("--table", action="store_true", help="include per-cabling rows")
    p.add_argument("--shortcut-convention", choices=torus.SHORTCUT_CONVENTIONS, default="offset")
    p.set_defaults(func=cmd_torus)

    p = sub.add_parser("search", parents=[common], help="exhaustive extremal searches")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--min-depth", type=int, metavar="D")
    g.add_argument("--max", type=int, nargs=2, metavar=("N", "M"))
    p.add_argument("--max-length", type=int, metavar="L")
    p.add_argument("--workers", type=int, default=1)
    p.set_defaults(func=cmd_search)
    return parser


def main(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    args = build_parser().parse_args(argv)
    doc = Document(args.command)
    try:
        args.func(args, doc)
    except TunnelAtlasError as exc:
        print(f"tunnel-atlas {args.command}: error: {exc}", file=stderr)
        return EXIT_INPUT
    except InvariantViolation as exc:
        print(f"tunnel-atlas {args.command}: invariant violation: {exc}", file=stderr)
        return EXIT_INVARIANT
    if args.format == "json":
        stdout.write(json.dumps(doc.as_dict()) + "\n")
    else:
        stdout.write(format_text(doc))
    stdout.flush()
    return EXIT_OK


def main_entry():
    sys.exit(main())


if __name__ == "__main__":
    main_entry()
