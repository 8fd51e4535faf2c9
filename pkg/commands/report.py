# commands/report.py
"""
report: collect JSON artifacts into a PDF
"""

import logging
from pathlib import Path

from commands.common import EXIT_OK
from errors import ArtifactError
from utils.pdf_generator import PDFReportGenerator
from utils.serialization import ArtifactIO

logger = logging.getLogger(__name__)


class ReportCommand:

    @staticmethod
    def register(subparsers):
        parser = subparsers.add_parser("report", help="render JSON reports into a PDF")
        parser.add_argument("--in", dest="inputs", nargs="+", required=True, help="artifacts to include")
        parser.add_argument("-o", "--output", type=Path, required=True, help="PDF path")
        parser.set_defaults(handler=ReportCommand.run)

    @staticmethod
    def run(args):
        artifacts = []
        for path in args.inputs:
            data = ArtifactIO.load(path)
            problems = ArtifactIO.validate(data)
            if problems:
                raise ArtifactError(f"{path}: {'; '.join(problems)}")
            artifacts.append((Path(path).name, data))
        buffer = PDFReportGenerator().generate_report(artifacts)
        Path(args.output).write_bytes(buffer.getvalue())
        logger.info("wrote %d artifacts to %s", len(artifacts), args.output)
        return EXIT_OK
