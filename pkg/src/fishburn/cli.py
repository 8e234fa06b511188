"""Command-line surface: triangles, distributions, bijections and verification."""

import argparse
import logging
import sys
from collections.abc import Sequence

from .config import Settings, load_settings
from .core import parse_permutation
from .errors import ConfigError, FishburnError
from .genfun import (
    FORMATS,
    fishburn_triangle,
    mahonian_triangle,
    render_distribution,
    render_triangle,
    unsieved_triangle,
)
from .matchings import classification_csv, classification_rows, parse_matching
from .meshpat import distribution, occurrences, resolve_pattern
from .structures import STRUCTURES
from .verify import SUITES, Verifier, print_report

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2
EXIT_INPUT = 3

TRIANGLES = {
    "mahonian": mahonian_triangle,
    "unsieved": unsieved_triangle,
    "fishburn": fishburn_triangle,
}

# Plural spellings accepted by `stat --structure`
STRUCTURE_ALIASES = {
    "perm": "perm",
    "perms": "perm",
    "matching": "matching",
    "matchings": "matching",
    "poset": "poset",
    "posets": "poset",
}


def cmd_triangle(args: argparse.Namespace, settings: Settings) -> int:
    if args.rows < 0:
        raise ValueError("--rows must be non-negative")
    last = args.start + args.rows - 1
    triangle = TRIANGLES[args.kind](max(last, 0))
    text = render_triangle(triangle, args.format, args.start, args.rows)
    if text:
        print(text)
    return EXIT_OK


def cmd_distribution(args: argparse.Namespace, settings: Settings) -> int:
    if args.n < 0:
        raise ValueError("--n must be non-negative")
    pattern = resolve_pattern(args.pattern)
    print(render_distribution(distribution(pattern, args.n), args.format))
    return EXIT_OK


def cmd_stat(args: argparse.Namespace, settings: Settings) -> int:
    if args.n < 0:
        raise ValueError("--n must be non-negative")
    structure = STRUCTURES[STRUCTURE_ALIASES[args.structure]]
    if args.statistic == structure.mahonian_statistic:
        dist = structure.mahonian_distribution(args.n)
    elif args.statistic == structure.fishburn_statistic:
        dist = structure.fishburn_distribution(args.n)
    else:
        raise ValueError(
            f"{structure.name} has statistics {structure.mahonian_statistic} "
            f"and {structure.fishburn_statistic}, not {args.statistic}"
        )
    print(render_distribution(dist, args.format))
    return EXIT_OK


def cmd_occurrences(args: argparse.Namespace, settings: Settings) -> int:
    pattern = resolve_pattern(args.pattern)
    p = parse_permutation(args.perm)
    for occurrence in occurrences(pattern, p):
        positions = ",".join(str(i) for i in occurrence)
        values = ",".join(str(p.value_at(i)) for i in occurrence)
        print(f"({positions}) {values}")
    return EXIT_OK


def cmd_bijection(args: argparse.Namespace, settings: Settings) -> int:
    structure = STRUCTURES[args.kind]
    s = structure.parse(args.input)
    if args.reverse:
        result = structure.remove(s, structure.parse_fishburn_marks(s, args.marks))
    else:
        result = structure.insert(s, structure.parse_mahonian_marks(args.marks))
    print(structure.format(result.structure))
    print(structure.format_marks(result, fishburn=not args.reverse))
    return EXIT_OK


def cmd_classify(args: argparse.Namespace, settings: Settings) -> int:
    M = parse_matching(args.matching)
    if args.format == "csv":
        print(classification_csv(M), end="")
        return EXIT_OK
    header, *body = classification_rows(M)
    for arc, *flags in body:
        named = [name for name, flag in zip(header[1:], flags) if flag]
        print(f"{arc} {' '.join(named) if named else '-'}")
    return EXIT_OK


def cmd_verify(args: argparse.Namespace, settings: Settings) -> int:
    jobs = args.jobs if args.jobs is not None else settings.jobs
    if jobs < 1:
        raise ValueError("--jobs must be at least 1")
    verifier = Verifier(max_n=args.max_n, jobs=jobs, residual_limit=settings.residual_limit)
    report = verifier.run(args.suite)
    if args.format == "json":
        print(report.to_json())
    else:
        print_report(report)
    return EXIT_OK if report.passed else EXIT_FAILED


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fishburn",
        description="Mahonian and Fishburn distributions: triangles, patterns, bijections",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
Examples:
  # Triangles
  uv run main.py triangle --kind fishburn --rows 5 --from 1
  uv run main.py triangle --kind unsieved --rows 10 --format bfile

  # Mesh patterns
  uv run main.py distribution --pattern sigma --n 6
  uv run main.py occurrences --pattern sigma-132 --perm 4671253

  # Bijections
  uv run main.py bijection --kind perm --input 246531 --marks "(4,1)(6,1)(6,5)"
  uv run main.py bijection --kind poset --input 0,1,0,3,0,0 --marks "(2,3)(1,3)(4,6)(3,6)"

  # Verification
  uv run main.py verify --suite all --jobs 4
  uv run main.py verify --suite identities --max-n 10 --format json
        """,
    )
    parser.add_argument(
        "-v",
        "--verbose",
        action="store_true",
        help="Log progress to stderr (INFO level)",
    )
    commands = parser.add_subparsers(dest="command", required=True)

    triangle = commands.add_parser("triangle", help="Print rows of a triangle")
    triangle.add_argument("--kind", choices=sorted(TRIANGLES), required=True)
    triangle.add_argument("--rows", type=int, required=True, metavar="N", help="Number of rows")
    triangle.add_argument(
        "--from",
        dest="start",
        type=int,
        choices=(0, 1),
        default=0,
        help="Index of the first row (default: 0)",
    )
    triangle.add_argument("--format", choices=FORMATS, default="table")
    triangle.set_defaults(handler=cmd_triangle)

    dist = commands.add_parser("distribution", help="Occurrence-count distribution of a pattern over S_n")
    dist.add_argument("--pattern", required=True, help="Builtin name or pattern text such as 231|1,0;1,1")
    dist.add_argument("--n", type=int, required=True)
    dist.add_argument("--format", choices=FORMATS, default="table")
    dist.set_defaults(handler=cmd_distribution)

    stat = commands.add_parser("stat", help="Distribution of a structure statistic")
    stat.add_argument("--structure", choices=sorted(STRUCTURE_ALIASES), required=True)
    stat.add_argument(
        "--statistic",
        choices=sorted(
            {s.mahonian_statistic for s in STRUCTURES.values()}
            | {s.fishburn_statistic for s in STRUCTURES.values()}
        ),
        required=True,
    )
    stat.add_argument("--n", type=int, required=True)
    stat.add_argument("--format", choices=FORMATS, default="table")
    stat.set_defaults(handler=cmd_stat)

    occ = commands.add_parser("occurrences", help="List the occurrences of a pattern in a permutation")
    occ.add_argument("--pattern", required=True)
    occ.add_argument("--perm", required=True)
    occ.set_defaults(handler=cmd_occurrences)

    bij = commands.add_parser("bijection", help="Apply an insertion bijection or its inverse")
    bij.add_argument("--kind", choices=sorted(STRUCTURES), required=True)
    bij.add_argument("--input", required=True)
    bij.add_argument("--marks", default="", help="Marked features of the input")
    bij.add_argument(
        "--reverse",
        action="store_true",
        help="Remove marked Fishburn features instead of inserting them",
    )
    bij.set_defaults(handler=cmd_bijection)

    classify = commands.add_parser("classify", help="Nesting and crossing flags of every arc")
    classify.add_argument("--matching", required=True)
    classify.add_argument("--format", choices=("table", "csv"), default="table")
    classify.set_defaults(handler=cmd_classify)

    verify = commands.add_parser("verify", help="Run verification suites")
    verify.add_argument("--suite", choices=("all", *SUITES), default="all")
    verify.add_argument("--max-n", type=int, default=None, metavar="N", help="Replace every default size bound")
    verify.add_argument(
        "--jobs",
        type=int,
        default=None,
        metavar="K",
        help="Worker processes (default: FISHBURN_JOBS or 1)",
    )
    verify.add_argument("--format", choices=("table", "json"), default="table")
    verify.set_defaults(handler=cmd_verify)

    return parser


def run(argv: Sequence[str]) -> int:
    """
    Parse argv and dispatch to a subcommand.

    Returns:
        0 on success, 1 when verification fails, 2 on usage or configuration
        errors, 3 on malformed input
    """
    parser = build_parser()
    try:
        args = parser.parse_args(list(argv))
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else EXIT_USAGE

    try:
        settings = load_settings()
    except ConfigError as e:
        print(f"Error: {e}", file=sys.stderr)
        return EXIT_USAGE

    logging.basicConfig(
        level=logging.INFO if args.verbose else settings.log_level,
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
        stream=sys.stderr,
    )

    try:
        return args.handler(args, settings)
    except FishburnError as e:
        print(f"Error: {e}", file=sys.stderr)
        return EXIT_INPUT
    except ValueError as e:
        print(f"Error: {e}", file=sys.stderr)
        return EXIT_USAGE
