# commands/check.py
"""
check: run function-level property checkers on a table
"""

from commands.common import add_output_arguments, csv_list, emit, manifest_for, verdict_code
from config import PROPERTY_NAMES
from checks.properties import check_properties
from utils.serialization import ArtifactIO


class CheckCommand:

    @staticmethod
    def register(subparsers):
        parser = subparsers.add_parser("check", help="check balance, difference balance, homogeneity, ...")
        parser.add_argument("--in", dest="input", required=True, help="function table JSON")
        parser.add_argument("--props", default="balance,db,hom,ttb",
                            help=f"comma-separated subset of {','.join(PROPERTY_NAMES)}")
        add_output_arguments(parser)
        parser.set_defaults(handler=CheckCommand.run)

    @staticmethod
    def run(args):
        names = csv_list(args.props, list(PROPERTY_NAMES))
        f = ArtifactIO.load_function(args.input)
        reports = [r.to_dict() for r in check_properties(f, names)]
        payload = {"field": f.spec.to_dict(), "label": f.label, "reports": reports}
        artifact = ArtifactIO.envelope("property_reports", manifest_for(args, f.spec, [args.input]), payload)
        emit(args, artifact, reports)
        return verdict_code(reports)
