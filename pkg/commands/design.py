# commands/design.py
"""
design: group-ring and cyclic difference set verification for a table
"""

import logging

from commands.common import add_output_arguments, csv_list, emit, manifest_for, verdict_code
from config import DESIGN_CHECKS
from algebra.group_ring import DesignParams
from checks.characters import character_spectrum
from checks.designs import (graph_set, preimage_rds, prime_subfield_indices, project, singer_complement,
                            singer_projection, verify_graph_set)
from checks.multipliers import function_multiplier_theorem, multiplier_check
from utils.serialization import ArtifactIO

logger = logging.getLogger(__name__)


class DesignCommand:
    """Each --verify item contributes one or more reports."""

    @staticmethod
    def register(subparsers):
        parser = subparsers.add_parser("design", help="verify the difference sets a function carries")
        parser.add_argument("--in", dest="input", required=True, help="function table JSON")
        parser.add_argument("--verify", default="gds,rds,dds,singer,chars,multipliers",
                            help=f"comma-separated subset of {','.join(DESIGN_CHECKS)}")
        add_output_arguments(parser)
        parser.set_defaults(handler=DesignCommand.run)

    @staticmethod
    def run(args):
        checks = csv_list(args.verify, DESIGN_CHECKS)
        f = ArtifactIO.load_function(args.input)
        reports = []
        for check in checks:
            reports.extend(getattr(DesignCommand, f"_{check}")(f))
        reports = [r.to_dict() for r in reports]
        payload = {"field": f.spec.to_dict(), "label": f.label, "reports": reports}
        artifact = ArtifactIO.envelope("design_reports", manifest_for(args, f.spec, [args.input]), payload)
        emit(args, artifact, reports)
        return verdict_code(reports)

    @staticmethod
    def _gds(f):
        return [verify_graph_set(f)]

    @staticmethod
    def _with_set(report, elements, **extra):
        report.details["set"] = sorted(int(e) for e in elements)
        report.details.update(extra)
        return report

    @staticmethod
    def _rds(f):
        reports = []
        for b in f.spec.subfield_elements()[1:]:
            C, report = preimage_rds(f, b)
            reports.append(DesignCommand._with_set(report, C, b=b.log))
        return reports

    @staticmethod
    def _dds(f):
        C, report = preimage_rds(f, f.spec.zero())
        return [DesignCommand._with_set(report, C, b=None)]

    @staticmethod
    def _singer(f):
        spec = f.spec
        C1, _ = preimage_rds(f, spec.one())
        C0, _ = preimage_rds(f, spec.zero())
        image, report = singer_projection(spec, C1)
        zero_image, zero_report = singer_projection(spec, C0, zero_fiber=True)
        return [DesignCommand._with_set(report, image), DesignCommand._with_set(zero_report, zero_image),
                singer_complement(f)]

    @staticmethod
    def _chars(f):
        return [character_spectrum(f.spec, graph_set(f)).report()]

    @staticmethod
    def _multipliers(f):
        spec = f.spec
        D = graph_set(f)
        reports = [multiplier_check(spec, D, 1, t) for t in range(1, spec.q)]
        if spec.m == 1:
            reports.append(function_multiplier_theorem(spec, D))
        return reports

    @staticmethod
    def _project(f):
        spec = f.spec
        params = DesignParams.difference_balanced(spec.q, spec.n)
        image, predicted, report = project(spec, graph_set(f), params, prime_subfield_indices(spec))
        report.details["predicted"] = str(predicted)
        return [report]
