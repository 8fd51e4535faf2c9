# commands/construct.py
"""
construct: build a function table and write it as JSON
"""

import logging

from commands.common import (EXIT_OK, add_field_arguments, add_output_arguments, field_from_args,
                             manifest_for)
from config import FAMILIES
from constructions.functions import construct
from utils.serialization import ArtifactIO

logger = logging.getLogger(__name__)


class ConstructCommand:
    """Builds trace, Helleseth-Gong, Lin and product functions."""

    @staticmethod
    def register(subparsers):
        parser = subparsers.add_parser("construct", help="build a difference balanced function")
        parser.add_argument("--family", choices=FAMILIES, required=True)
        add_field_arguments(parser)
        parser.add_argument("--k", type=int, help="Helleseth-Gong k (n = (2 ell + 1) k)")
        parser.add_argument("--ell", type=int, help="Helleseth-Gong ell, or the intermediate degree for product")
        parser.add_argument("--d", type=int, default=1, help="homogeneity degree for product (default 1)")
        add_output_arguments(parser, formats=False)
        parser.set_defaults(handler=ConstructCommand.run)

    @staticmethod
    def run(args):
        spec = field_from_args(args)
        table = construct(args.family, spec, k=args.k, ell=args.ell, d=args.d)
        artifact = ArtifactIO.envelope("function_table", manifest_for(args, spec), table.to_dict())
        ArtifactIO.write(artifact, args.output)
        logger.info("constructed %s over %s", table.label, spec)
        return EXIT_OK
