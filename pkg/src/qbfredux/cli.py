"""Command line front end: ``qbf-redux [preprocess|gen|solve] ...``.

Exit status is 0 on success, 1 for usage and parse errors and 2 when the
oracle cap is exceeded or a file cannot be read or written.
"""

from __future__ import annotations

import argparse
import logging
import sys
from typing import Optional, Sequence

from . import generators
from .oracle import ResourceLimitError, evaluate
from .propagation import Mode
from .qdimacs import ParseError, parse_qdimacs, write_qdimacs, write_trace
from .redundancy import PreprocessConfig, preprocess

SUBCOMMANDS = ("preprocess", "gen", "solve")
FAMILIES = {
    "phi-c": generators.gen_phi_c,
    "phi-l": generators.gen_phi_l,
    "quparity": generators.gen_quparity,
    "lqparity": generators.gen_lqparity,
}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _width(text: str) -> tuple[int, int]:
    lo, _, hi = text.partition("-")
    try:
        return (int(lo), int(hi)) if hi else (1, int(lo))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected W or LO-HI, got {text!r}") from None


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="qbf-redux", description=__doc__.splitlines()[0])
    parser.add_argument("-v", "--verbose", action="count", default=0)
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)

    pre = sub.add_parser("preprocess", help="remove QRAT/QRAT+ redundancies (default)")
    pre.add_argument("input", nargs="?", default="-")
    pre.add_argument("--mode", choices=[m.value for m in Mode], default=Mode.QRATPLUS.value)
    pre.add_argument("--no-qrate", action="store_true", help="do not delete clauses")
    pre.add_argument("--no-qratu", action="store_true", help="do not delete universal literals")
    pre.add_argument("--ur", action="store_true", help="apply universal reduction each round")
    pre.add_argument("--timeout-soft", type=float, default=0.0, metavar="SECONDS")
    pre.add_argument("--max-rounds", type=int, default=0, metavar="N")
    pre.add_argument("--trace", metavar="PATH")
    pre.add_argument("--stats", action="store_true", help="print statistics to stderr")
    pre.add_argument("--out", default="-", metavar="PATH")

    gen = sub.add_parser("gen", help="emit a formula family or a random PCNF")
    gen.add_argument("family", choices=[*FAMILIES, "random"])
    gen.add_argument("n", type=int, nargs="?")
    gen.add_argument("--vars", type=int, default=10)
    gen.add_argument("--blocks", type=int, default=3)
    gen.add_argument("--clauses", type=int, default=20)
    gen.add_argument("--width", type=_width, default=(1, 3), metavar="W|LO-HI")
    gen.add_argument("--seed", type=int, default=0)
    gen.add_argument("--out", default="-", metavar="PATH")

    solve = sub.add_parser("solve", help="decide a small formula by brute force")
    solve.add_argument("input", nargs="?", default="-")
    solve.add_argument("--max-vars", type=int, default=24)
    solve.add_argument("--out", default="-", metavar="PATH")
    return parser


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path) as fh:
        return fh.read()


def _write(path: str, text: str) -> None:
    if path == "-":
        sys.stdout.write(text)
        sys.stdout.flush()
    else:
        with open(path, "w") as fh:
            fh.write(text)


def _preprocess(args) -> None:
    f, _ = parse_qdimacs(_read(args.input))
    cfg = PreprocessConfig(
        mode=Mode(args.mode),
        enable_qrate=not args.no_qrate,
        enable_qratu=not args.no_qratu,
        enable_ur_pass=args.ur,
        soft_timeout=args.timeout_soft,
        max_rounds=args.max_rounds,
    )
    g, trace, stats = preprocess(f, cfg)
    _write(args.out, write_qdimacs(g))
    if args.trace:
        _write(args.trace, write_trace(trace))
    if args.stats:
        for line in stats.lines():
            print(line, file=sys.stderr)


def _gen(args) -> None:
    if args.family == "random":
        cfg = generators.RandomQbfConfig(
            num_vars=args.vars,
            num_blocks=args.blocks,
            num_clauses=args.clauses,
            clause_width=args.width,
            seed=args.seed,
        )
        f = generators.gen_random_qbf(cfg)
    else:
        if args.n is None:
            raise UsageError(f"gen {args.family} needs a size argument")
        f = FAMILIES[args.family](args.n)
    _write(args.out, write_qdimacs(f))


def _solve(args) -> None:
    f, _ = parse_qdimacs(_read(args.input))
    _write(args.out, f"{evaluate(f, args.max_vars)}\n")


def main(argv: Optional[Sequence[str]] = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    first = next((a for a in argv if a not in ("-v", "--verbose", "-vv")), None)
    if first not in (*SUBCOMMANDS, "-h", "--help"):
        position = argv.index(first) if first is not None else len(argv)
        argv.insert(position, "preprocess")
    try:
        args = build_parser().parse_args(argv)
        logging.basicConfig(
            level=logging.WARNING - 10 * args.verbose, format="c %(levelname)s %(message)s"
        )
        {"preprocess": _preprocess, "gen": _gen, "solve": _solve}[args.command](args)
    except (UsageError, ParseError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (ResourceLimitError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())
