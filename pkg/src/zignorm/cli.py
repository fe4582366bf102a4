"""Command line interface.

Exit codes: 0 success, 1 invalid input, 2 type check rejected,
3 oracle budget exceeded, 64 usage error, 65 unreadable or malformed file.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import core, fixtures, serialization as ser
from .corpus import random_sink
from .errors import BudgetExceeded, GlobularityError, ParseError, SignatureError, ValidationError, ZigzagError
from .normalisation import normalise_relative
from .oracle import Budget, oracle_normalise
from .typechecker import extract_piece, singular_content, typecheck

EXIT_OK, EXIT_INVALID, EXIT_REJECT, EXIT_BUDGET = 0, 1, 2, 3
EXIT_USAGE, EXIT_DATA = 64, 65


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    return Path(path).read_text(encoding="utf-8")


def _write(text: str, out: str | None):
    if out:
        Path(out).write_text(text + "\n", encoding="utf-8")
    else:
        sys.stdout.write(text + "\n")


def _load_sink(args):
    target = ser.read_diagram(_read(args.diagram))
    legs = [ser.read_map(_read(p), target=target) for p in args.sink or ()]
    return target, legs


def cmd_validate(args) -> int:
    text = _read(args.file)
    obj = ser.loads(text)
    try:
        if "map" in obj:
            ser.read_map(text)
        elif "legs" in obj:
            ser.read_sink(text)
        elif "generators" in obj:
            ser.read_signature(text)
        else:
            ser.read_diagram(text)
    except ValidationError as e:
        print(f"invalid: {e}", file=sys.stderr)
        return EXIT_INVALID
    except (SignatureError, GlobularityError) as e:
        print(f"invalid: {e}", file=sys.stderr)
        return EXIT_INVALID
    print("valid", file=sys.stderr)
    return EXIT_OK


def cmd_normalise(args) -> int:
    target, legs = _load_sink(args)
    result = normalise_relative(target, legs)
    _write(ser.dumps(ser.result_document(result)), args.output)
    return EXIT_OK


def cmd_oracle(args) -> int:
    target, legs = _load_sink(args)
    budget = Budget(max_candidates=args.max_candidates)
    try:
        result = oracle_normalise(target, legs, budget)
    except BudgetExceeded as e:
        print(f"budget exceeded: {e}", file=sys.stderr)
        return EXIT_BUDGET
    doc = {"format": ser.FORMAT, "normal_form": ser.encode_diagram(result.normal_form),
           "normaliser": ser.encode_map(result.normaliser),
           "factorisations": [ser.encode_map(f) for f in result.factorisations]}
    _write(ser.dumps(doc), args.output)
    return EXIT_OK


def cmd_typecheck(args) -> int:
    d = ser.read_diagram(_read(args.diagram))
    sig = ser.read_signature(_read(args.signature))
    verdict = typecheck(d, sig)
    doc = {"accepted": verdict.accepted}
    if not verdict.accepted:
        doc.update(address=list(verdict.address), generator=verdict.generator.name, reason=verdict.reason)
    print(ser.dumps(doc))
    return EXIT_OK if verdict.accepted else EXIT_REJECT


def cmd_content(args) -> int:
    d = ser.read_diagram(_read(args.diagram))
    for address, g in singular_content(d):
        print(f"{','.join(map(str, address))}\t{g.name}\t{g.dimension}")
    return EXIT_OK


def _address(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.split(",")) if text else ()
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a comma-separated list of heights: {text!r}") from None


def cmd_piece(args) -> int:
    d = ser.read_diagram(_read(args.diagram))
    _write(ser.dumps(ser.diagram_document(extract_piece(d, args.address))), args.output)
    return EXIT_OK


FIXTURES = {
    "unit-removal": lambda: {"diagram": fixtures.unit_removal().diagram},
    "essential-identity": lambda: (lambda fx: {"diagram": fx.M, "legs": [fx.p, fx.q]})(fixtures.essential_identity()),
    "collapse": lambda: (lambda fx: {"diagram": fx.T, "legs": [fx.leg]})(fixtures.collapse_walkthrough()),
    "planar": lambda: (lambda fx: {"diagram": fx.diagram, "signature": fx.signature})(fixtures.planar_diagram()),
    "eckmann-hilton": lambda: (lambda fx: {"diagram": fx.diagram, "signature": fx.signature})(fixtures.eckmann_hilton()),
    "syllepsis": lambda: (lambda fx: {"diagram": fx.diagram, "signature": fx.signature})(fixtures.syllepsis()),
}


def cmd_fixture(args) -> int:
    """Write a built-in example as ``<dir>/<name>.json`` plus legs and signature."""
    parts = FIXTURES[args.name]()
    out = Path(args.directory)
    out.mkdir(parents=True, exist_ok=True)
    written = [out / f"{args.name}.json"]
    written[0].write_text(ser.dumps(ser.diagram_document(parts["diagram"])) + "\n", encoding="utf-8")
    for i, leg in enumerate(parts.get("legs", ())):
        path = out / f"{args.name}-leg{i}.json"
        path.write_text(ser.dumps(ser.map_document(leg)) + "\n", encoding="utf-8")
        written.append(path)
    if "signature" in parts:
        path = out / f"{args.name}-sig.json"
        path.write_text(ser.dumps(ser.signature_document(parts["signature"])) + "\n", encoding="utf-8")
        written.append(path)
    for path in written:
        print(path)
    return EXIT_OK


def cmd_sample(args) -> int:
    """Write a random sink drawn from ``--seed`` as a target file plus leg files."""
    sink = random_sink(args.seed)
    out = Path(args.directory)
    out.mkdir(parents=True, exist_ok=True)
    stem = f"sample-{args.seed}"
    paths = [out / f"{stem}.json"]
    paths[0].write_text(ser.dumps(ser.diagram_document(sink.target)) + "\n", encoding="utf-8")
    for i, leg in enumerate(sink.legs):
        paths.append(out / f"{stem}-leg{i}.json")
        paths[-1].write_text(ser.dumps(ser.map_document(leg)) + "\n", encoding="utf-8")
    for p in paths:
        print(p)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="zignorm", description="Normal forms and type checking for zigzag diagrams.")
    p.add_argument("--strict-validate", action="store_true", help="check commutation on every construction")
    p.add_argument("--seed", type=int, default=0, help="seed for the sample command")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("validate", help="check a diagram, map, sink or signature file")
    s.add_argument("file")
    s.set_defaults(run=cmd_validate)

    for name, run, helptext in (("normalise", cmd_normalise, "normal form relative to a sink"),
                                ("oracle-normalise", cmd_oracle, "the same by brute force")):
        s = sub.add_parser(name, help=helptext)
        s.add_argument("diagram")
        s.add_argument("--sink", nargs="+", metavar="LEG", help="map files into the diagram")
        s.add_argument("-o", "--output")
        if run is cmd_oracle:
            s.add_argument("--max-candidates", type=int, default=Budget().max_candidates)
        s.set_defaults(run=run)

    s = sub.add_parser("typecheck", help="check a diagram against a signature")
    s.add_argument("diagram")
    s.add_argument("--signature", required=True)
    s.set_defaults(run=cmd_typecheck)

    s = sub.add_parser("content", help="list singular content with addresses")
    s.add_argument("diagram")
    s.set_defaults(run=cmd_content)

    s = sub.add_parser("piece", help="extract the piece at an address")
    s.add_argument("diagram")
    s.add_argument("--address", required=True, type=_address)
    s.add_argument("-o", "--output")
    s.set_defaults(run=cmd_piece)

    s = sub.add_parser("fixture", help="write a built-in example to files")
    s.add_argument("name", choices=sorted(FIXTURES))
    s.add_argument("-d", "--directory", default=".")
    s.set_defaults(run=cmd_fixture)

    s = sub.add_parser("sample", help="write a random sink chosen by --seed")
    s.add_argument("-d", "--directory", default=".")
    s.set_defaults(run=cmd_sample)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if args.strict_validate:
        core.set_strict(True)
    try:
        return args.run(args)
    except ParseError as e:
        print(f"parse error: {e}", file=sys.stderr)
        return EXIT_DATA
    except ValidationError as e:
        print(f"invalid: {e}", file=sys.stderr)
        return EXIT_INVALID
    except (SignatureError, GlobularityError, ZigzagError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INVALID
    except OSError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_DATA


if __name__ == "__main__":
    sys.exit(main())
