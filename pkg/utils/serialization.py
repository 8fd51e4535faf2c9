# utils/serialization.py
"""
JSON artifact loading, writing and validation
"""

import hashlib
import json
import logging
import sys
from dataclasses import dataclass, field
from pathlib import Path

from algebra.function_table import FunctionTable
from checks.report import to_jsonable
from config import JSON_INDENT, TOOL_VERSION
from errors import ArtifactError

logger = logging.getLogger(__name__)

KINDS = ["function_table", "property_reports", "design_reports", "autocorrelation", "search_report"]


def modulus_hash(modulus):
    return hashlib.sha256(json.dumps(list(modulus)).encode()).hexdigest()[:16]


@dataclass
class RunManifest:
    """Who produced an artifact and from what; embedded in every JSON output."""
    subcommand: str
    flags: dict = field(default_factory=dict)
    inputs: list = field(default_factory=list)
    output: str = None
    field_spec: object = None
    tool_version: str = TOOL_VERSION

    def fingerprint(self):
        if self.field_spec is None:
            return None
        spec = self.field_spec
        return {"p": spec.p, "m": spec.m, "n": spec.n, "modulus_sha256": modulus_hash(spec.modulus)}

    def to_dict(self):
        return {
            "subcommand": self.subcommand,
            "flags": {k: v for k, v in sorted(self.flags.items()) if v is not None},
            "inputs": [str(p) for p in self.inputs],
            "output": None if self.output is None else str(self.output),
            "tool_version": self.tool_version,
            "field": self.fingerprint(),
        }


class ArtifactIO:
    """Reads and writes the JSON documents the CLI exchanges."""

    @staticmethod
    def dumps(data):
        return json.dumps(to_jsonable(data), indent=JSON_INDENT, sort_keys=True) + "\n"

    @staticmethod
    def envelope(kind, manifest, payload):
        if kind not in KINDS:
            raise ArtifactError(f"unknown artifact kind {kind!r}")
        return {"kind": kind, "manifest": manifest.to_dict(), **payload}

    @staticmethod
    def write(data, path=None):
        """Write to path, or stdout when path is None."""
        text = ArtifactIO.dumps(data)
        if path is None:
            sys.stdout.write(text)
            return
        Path(path).write_text(text)
        logger.info("wrote %s", path)

    @staticmethod
    def load(path):
        try:
            return json.loads(Path(path).read_text())
        except json.JSONDecodeError as e:
            raise ArtifactError(f"{path} is not valid JSON: {e}") from e

    @staticmethod
    def load_function(path):
        data = ArtifactIO.load(path)
        if data.get("kind", "function_table") != "function_table":
            raise ArtifactError(f"{path} holds a {data['kind']}, not a function table")
        try:
            return FunctionTable.from_dict(data)
        except (KeyError, TypeError) as e:
            raise ArtifactError(f"{path} is not a function table: missing {e}") from e

    @staticmethod
    def validate(data):
        """Problems with an artifact as a list of messages; empty when it is well formed."""
        problems = []
        if not isinstance(data, dict):
            return ["top level is not an object"]
        if data.get("kind") not in KINDS:
            problems.append(f"unknown kind {data.get('kind')!r}")
        manifest = data.get("manifest")
        if not isinstance(manifest, dict):
            return problems + ["missing manifest"]
        for key in ("subcommand", "flags", "tool_version", "field"):
            if key not in manifest:
                problems.append(f"manifest lacks {key!r}")
        fingerprint = manifest.get("field")
        described = data.get("field")
        if isinstance(fingerprint, dict) and isinstance(described, dict):
            if any(fingerprint.get(k) != described.get(k) for k in ("p", "m", "n")):
                problems.append("manifest field does not match the artifact's field")
            elif fingerprint.get("modulus_sha256") != modulus_hash(described.get("modulus", [])):
                problems.append("modulus hash mismatch")
        if data.get("kind") in ("property_reports", "design_reports"):
            for report in data.get("reports", []):
                if not {"property", "verdict", "witness"} <= set(report):
                    problems.append(f"malformed report {report!r}")
        return problems
