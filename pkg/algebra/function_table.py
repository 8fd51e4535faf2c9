# algebra/function_table.py
"""
Functions GF(q^n)* -> GF(q) stored as value tables indexed by discrete log
"""

from dataclasses import dataclass, field

import numpy as np

from algebra.finite_field import FieldSpec
from config import ZERO_LOG
from errors import ConstructionError


@dataclass(frozen=True, eq=False)
class FunctionTable:
    """values[i] is the subfield index of f(theta^i).

    Subfield indices follow FieldSpec.subfield_logs: 0 is zero and j + 1 is
    theta^(j * stride).
    """
    spec: FieldSpec
    values: np.ndarray = field(repr=False)
    label: str = ""

    def __post_init__(self):
        values = np.asarray(self.values, dtype=np.int64)
        if values.shape != (self.spec.group_order,):
            raise ConstructionError(
                f"table needs {self.spec.group_order} entries, got {values.shape[0] if values.ndim else 0}")
        if values.size and (values.min() < 0 or values.max() >= self.spec.q):
            raise ConstructionError(f"table entries must be subfield indices in [0, {self.spec.q})")
        values = values.copy()
        values.setflags(write=False)
        object.__setattr__(self, "values", values)

    @staticmethod
    def from_logs(spec, logs, label=""):
        return FunctionTable(spec, spec.to_subfield_index(logs), label)

    @property
    def logs(self):
        """Exponents of f(theta^i), ZERO_LOG for zero."""
        return self.spec.from_subfield_index(self.values)

    def value_at(self, i):
        return self.spec.element(int(self.logs[i % self.spec.group_order]))

    def elements(self):
        return [self.spec.element(int(log)) for log in self.logs]

    def __eq__(self, other):
        if not isinstance(other, FunctionTable):
            return NotImplemented
        return self.spec == other.spec and np.array_equal(self.values, other.values)

    def __hash__(self):
        return hash((self.spec, self.values.tobytes()))

    def __len__(self):
        return self.spec.group_order

    def with_label(self, label):
        return FunctionTable(self.spec, self.values, label)

    def to_dict(self):
        logs = self.logs
        data = {
            "field": self.spec.to_dict(),
            "values": [None if log < 0 else int(log) for log in logs],
        }
        if self.label:
            data["label"] = self.label
        return data

    @staticmethod
    def from_dict(data):
        spec = FieldSpec.from_dict(data["field"])
        values = data["values"]
        logs = np.array([ZERO_LOG if v is None else int(v) for v in values], dtype=np.int64)
        if logs.shape != (spec.group_order,):
            raise ConstructionError(f"table needs {spec.group_order} values, got {len(logs)}")
        present = logs[[v is not None for v in values]]
        if present.size and (present.min() < 0 or present.max() >= spec.group_order):
            raise ConstructionError(f"exponents must lie in [0, {spec.group_order}) or be null")
        return FunctionTable.from_logs(spec, logs, data.get("label", ""))
