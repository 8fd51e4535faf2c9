# commands/autocorr.py
"""
autocorr: periodic autocorrelation of the sequence f(theta^i)
"""

import sys
from pathlib import Path

from commands.common import EXIT_FALSE, EXIT_OK, manifest_for
from checks.sequences import autocorrelation, autocorrelation_all, is_ideal_two_level, to_sequence
from errors import UsageError
from utils.serialization import ArtifactIO
from utils.tables import SummaryTables


def format_value(entry):
    """Exact integer when the counts make C(tau) rational, else a rounded complex."""
    exact = entry.exact_value
    if exact is not None:
        return str(exact)
    return f"{entry.value.real:.6f}{entry.value.imag:+.6f}i"


class AutocorrCommand:

    @staticmethod
    def register(subparsers):
        parser = subparsers.add_parser("autocorr", help="autocorrelation of the p-ary sequence (q = p)")
        parser.add_argument("--in", dest="input", required=True, help="function table JSON")
        shifts = parser.add_mutually_exclusive_group()
        shifts.add_argument("--tau", type=int, help="a single shift")
        shifts.add_argument("--all", action="store_true", help="every shift, plus the ideal two-level verdict")
        parser.add_argument("-o", "--output", type=Path, help="write a JSON report instead of text lines")
        parser.add_argument("--export", type=Path, help="write the sequence as one digit per symbol")
        parser.add_argument("--format", choices=["lines", "table"], default="lines",
                            help="stdout layout: tau: value lines, or a table with the difference counts")
        parser.set_defaults(handler=AutocorrCommand.run)

    @staticmethod
    def run(args):
        if args.tau is None and not args.all:
            raise UsageError("give --tau T or --all")
        f = ArtifactIO.load_function(args.input)
        s = to_sequence(f)
        if args.export:
            Path(args.export).write_text(s.to_digits() + "\n")
        if args.all:
            entries = autocorrelation_all(s)
            # shift 0 goes last so the nontrivial shifts lead the listing
            entries = entries[1:] + entries[:1]
            report = is_ideal_two_level(s)
        else:
            entries = [autocorrelation(s, args.tau)]
            report = None
        rows = [{"tau": e.tau, "counts": list(e.counts), "value": format_value(e)} for e in entries]
        if args.format == "table":
            sys.stdout.write(SummaryTables.render(SummaryTables.autocorrelation_frame(rows)) + "\n")
        if args.output:
            payload = {"field": f.spec.to_dict(), "sequence": s.to_dict(), "values": rows}
            if report is not None:
                payload["report"] = report.to_dict()
            ArtifactIO.write(ArtifactIO.envelope("autocorrelation", manifest_for(args, f.spec, [args.input]),
                                                 payload), args.output)
        elif args.format == "lines":
            sys.stdout.write("".join(f"{e.tau}: {format_value(e)}\n" for e in entries))
        return EXIT_OK if report is None or report.verdict else EXIT_FALSE
