# dbf.py
"""
Difference balanced functions toolkit - command-line entry point
Construct, check and search functions GF(q^n)* -> GF(q) and the designs they carry
"""

import argparse
import logging
import sys

from commands.autocorr import AutocorrCommand
from commands.check import CheckCommand
from commands.common import EXIT_ERROR, EXIT_OK
from commands.construct import ConstructCommand
from commands.design import DesignCommand
from commands.report import ReportCommand
from commands.search import SearchCommand
from config import LOG_FORMAT, TOOL_VERSION
from errors import DbfError
from utils.serialization import ArtifactIO

logger = logging.getLogger("dbf")

COMMANDS = [ConstructCommand, CheckCommand, DesignCommand, AutocorrCommand, SearchCommand, ReportCommand]


class DbfApplication:
    """Parses arguments, configures logging and dispatches to a subcommand."""

    def __init__(self):
        self.parser = self.build_parser()

    @staticmethod
    def build_parser():
        parser = argparse.ArgumentParser(prog="dbf", description="Difference balanced functions toolkit")
        parser.add_argument("--version", action="version", version=f"%(prog)s {TOOL_VERSION}")
        parser.add_argument("--validate", metavar="FILE", help="check a JSON report and exit")
        verbosity = parser.add_mutually_exclusive_group()
        verbosity.add_argument("-v", "--verbose", action="store_true", help="debug logging")
        verbosity.add_argument("-q", "--quiet", action="store_true", help="warnings only")
        subparsers = parser.add_subparsers(dest="command")
        for command in COMMANDS:
            command.register(subparsers)
        return parser

    @staticmethod
    def setup_logging(args):
        level = logging.DEBUG if args.verbose else logging.WARNING if args.quiet else logging.INFO
        logging.basicConfig(level=level, format=LOG_FORMAT, stream=sys.stderr, force=True)

    @staticmethod
    def validate(path):
        problems = ArtifactIO.validate(ArtifactIO.load(path))
        for problem in problems:
            logger.error("%s: %s", path, problem)
        if not problems:
            logger.info("%s is a valid report", path)
        return EXIT_ERROR if problems else EXIT_OK

    def run(self, argv=None):
        args = self.parser.parse_args(argv)
        self.setup_logging(args)
        try:
            if args.validate:
                return self.validate(args.validate)
            if args.command is None:
                self.parser.print_usage(sys.stderr)
                return EXIT_ERROR
            return args.handler(args)
        except (DbfError, OSError) as e:
            logger.error("%s", e)
            return EXIT_ERROR


def main(argv=None):
    """argparse exits with status 2 on unknown flags; everything else returns a code."""
    try:
        return DbfApplication().run(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
