# commands/search.py
"""
search: enumerate difference balanced functions at small parameters
"""

from pathlib import Path

from commands.common import EXIT_FALSE, EXIT_OK, add_field_arguments, field_from_args, manifest_for
from config import CHECKPOINT_INTERVAL, DEFAULT_WORKERS, SEARCH_CANDIDATE_BUDGET, SEARCH_MODES
from search.enumerator import SearchConfig, enumerate_db
from utils.serialization import ArtifactIO


class SearchCommand:

    @staticmethod
    def register(subparsers):
        parser = subparsers.add_parser("search", help="enumerate difference balanced functions")
        add_field_arguments(parser)
        parser.add_argument("--mode", choices=SEARCH_MODES, default="full")
        parser.add_argument("--workers", type=int, default=DEFAULT_WORKERS)
        parser.add_argument("--budget", type=int, default=SEARCH_CANDIDATE_BUDGET, help="maximum candidate count")
        parser.add_argument("--chunk-size", type=int,
                            help="candidates per task; defaults to a size that spreads work across the workers")
        parser.add_argument("--checkpoint", type=Path, help="checkpoint file written during the run")
        parser.add_argument("--checkpoint-interval", type=int, default=CHECKPOINT_INTERVAL)
        parser.add_argument("--resume", type=Path, help="checkpoint to resume from")
        parser.add_argument("--seed", type=int, help="required for --mode random")
        parser.add_argument("--samples", type=int, help="required for --mode random")
        parser.add_argument("--progress", action="store_true", help="show a progress bar on stderr")
        parser.add_argument("-o", "--output", type=Path, help="write the JSON report here instead of stdout")
        parser.set_defaults(handler=SearchCommand.run)

    @staticmethod
    def run(args):
        spec = field_from_args(args)
        config = SearchConfig(spec, mode=args.mode, worker_count=args.workers, report_path=args.output,
                              budget=args.budget, checkpoint_path=args.checkpoint or args.resume,
                              checkpoint_interval=args.checkpoint_interval, chunk_size=args.chunk_size,
                              seed=args.seed, samples=args.samples, progress=args.progress)
        report = enumerate_db(config, resume=args.resume)
        payload = report.to_dict()
        payload["report"] = report.report().to_dict()
        # worker count and progress do not change the result
        manifest = manifest_for(args, spec)
        manifest.flags.pop("workers", None)
        manifest.flags.pop("progress", None)
        ArtifactIO.write(ArtifactIO.envelope("search_report", manifest, payload), config.report_path)
        return EXIT_OK if report.flags == 0 and not report.disagreements else EXIT_FALSE
