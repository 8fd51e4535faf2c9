# checks/report.py
"""
Structured verdicts returned by every checker
"""

from dataclasses import dataclass, field
from typing import Any, Optional

import numpy as np


def to_jsonable(value):
    """Convert numpy scalars/arrays and tuples into plain JSON values."""
    if isinstance(value, dict):
        return {str(k): to_jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [to_jsonable(v) for v in value]
    if isinstance(value, np.ndarray):
        return to_jsonable(value.tolist())
    if isinstance(value, np.bool_):
        return bool(value)
    if isinstance(value, np.integer):
        return int(value)
    if isinstance(value, np.floating):
        return float(value)
    return value


@dataclass
class PropertyReport:
    """verdict=False always carries a witness that can be re-checked alone."""
    property_name: str
    verdict: bool
    witness: Optional[Any] = None
    details: dict = field(default_factory=dict)

    def __bool__(self):
        return bool(self.verdict)

    def to_dict(self):
        data = {
            "property": self.property_name,
            "verdict": bool(self.verdict),
            "witness": to_jsonable(self.witness),
        }
        if self.details:
            data["details"] = to_jsonable(self.details)
        return data

    @staticmethod
    def from_dict(data):
        return PropertyReport(data["property"], bool(data["verdict"]),
                              data.get("witness"), data.get("details", {}))
