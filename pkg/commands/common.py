# commands/common.py
"""
Argument helpers and output plumbing shared by the subcommands
"""

import sys
from pathlib import Path

from algebra.finite_field import build_field
from config import MAX_FIELD_ORDER
from errors import UsageError
from utils.serialization import ArtifactIO, RunManifest
from utils.tables import SummaryTables

EXIT_OK, EXIT_FALSE, EXIT_ERROR = 0, 1, 2

# argparse bookkeeping that never goes into a manifest
_INTERNAL = {"handler", "verbose", "quiet", "command", "validate"}


def add_field_arguments(parser):
    parser.add_argument("--p", type=int, required=True, help="odd prime characteristic")
    parser.add_argument("--m", type=int, default=1, help="q = p^m (default 1)")
    parser.add_argument("--n", type=int, required=True, help="extension degree of GF(q^n) over GF(q)")
    parser.add_argument("--modulus", type=str, help="comma-separated coefficients, low degree first")
    parser.add_argument("--max-order", type=int, default=MAX_FIELD_ORDER, help="field size guard")


def add_output_arguments(parser, formats=True):
    parser.add_argument("-o", "--output", type=Path, help="write the JSON report here instead of stdout")
    if formats:
        parser.add_argument("--format", choices=["json", "table"], default="json")


def field_from_args(args):
    modulus = None
    if args.modulus is not None:
        try:
            modulus = [int(c) for c in args.modulus.split(",")]
        except ValueError as e:
            raise UsageError(f"--modulus must be comma-separated integers: {e}") from e
    return build_field(args.p, args.m, args.n, modulus=modulus, max_order=args.max_order)


def csv_list(text, allowed):
    items = [item.strip() for item in text.split(",") if item.strip()]
    unknown = [item for item in items if item not in allowed]
    if unknown:
        raise UsageError(f"unknown choices {unknown}; allowed: {', '.join(allowed)}")
    return items


def manifest_for(args, spec=None, inputs=()):
    flags = {}
    for key, value in sorted(vars(args).items()):
        if key in _INTERNAL:
            continue
        flags[key] = str(value) if isinstance(value, Path) else value
    output = getattr(args, "output", None)
    return RunManifest(args.command, flags, list(inputs), output, spec)


def emit(args, artifact, reports=None):
    """JSON to -o or stdout; with --format table the summary goes to stdout instead."""
    if getattr(args, "format", "json") == "table" and reports is not None:
        sys.stdout.write(SummaryTables.render(SummaryTables.reports_frame(reports)) + "\n")
        if args.output:
            ArtifactIO.write(artifact, args.output)
        return
    ArtifactIO.write(artifact, args.output)


def verdict_code(reports):
    return EXIT_OK if all(r["verdict"] for r in reports) else EXIT_FALSE
