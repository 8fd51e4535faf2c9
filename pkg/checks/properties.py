# checks/properties.py
"""
Exact checkers for balance, difference balance, homogeneity and two-tuple balance
"""

import logging
from dataclasses import dataclass, field
from math import gcd

import numpy as np

from algebra.finite_field import FieldElement
from algebra.function_table import FunctionTable
from checks.report import PropertyReport
from config import PROPERTY_NAMES
from errors import DesignError

logger = logging.getLogger(__name__)

# rows * (q^n - 1) entries per vectorised block
BLOCK_ENTRIES = 1 << 20


def _value_json(spec, index):
    """Subfield index -> exponent of the element, None for zero."""
    log = int(spec.subfield_logs[index])
    return None if log < 0 else log


def _shift_exponent(spec, a):
    if isinstance(a, FieldElement):
        if a.is_zero:
            raise DesignError("shift by zero is undefined")
        return a.log
    return int(a) % spec.group_order


def balanced_counts(spec):
    """(q^(n-1) - 1, q^(n-1), ..., q^(n-1)) in subfield index order."""
    expected = np.full(spec.q, spec.q ** (spec.n - 1), dtype=np.int64)
    expected[0] -= 1
    return expected


def value_counts(f):
    """counts[b] = |{x : f(x) = b}| with b in subfield index order."""
    return np.bincount(f.values, minlength=f.spec.q).astype(np.int64)


def is_balanced(f):
    counts = value_counts(f)
    verdict = bool(np.array_equal(counts, balanced_counts(f.spec)))
    return PropertyReport(PROPERTY_NAMES["balance"], verdict, None if verdict else {"counts": counts})


def derivative(f, a):
    """x -> f(a x) - f(x)."""
    shift = _shift_exponent(f.spec, a)
    values = f.spec.sub_sub[np.roll(f.values, -shift), f.values]
    return FunctionTable(f.spec, values, f"derivative of {f.label}" if f.label else "")


def _blocks(shifts, width):
    rows = max(1, BLOCK_ENTRIES // max(width, 1))
    for start in range(0, len(shifts), rows):
        yield shifts[start:start + rows]


def derivative_counts(f, shifts):
    """Value counts of every derivative f(theta^j x) - f(x), one row per shift j."""
    spec, values = f.spec, f.values
    M, q = spec.group_order, spec.q
    shifts = np.asarray(shifts, dtype=np.int64)
    positions = (np.arange(M)[None, :] + shifts[:, None]) % M
    diffs = spec.sub_sub[values[positions], values[None, :]]
    offsets = (np.arange(len(shifts)) * q)[:, None]
    return np.bincount((diffs + offsets).ravel(), minlength=len(shifts) * q).reshape(len(shifts), q)


def is_difference_balanced(f, schedule=None):
    """Every derivative f(ax) - f(x), a != 1, is balanced.

    Shifts are tried in schedule order (increasing exponent by default) and
    the first failing shift is the witness.
    """
    spec = f.spec
    shifts = np.arange(1, spec.group_order) if schedule is None else np.asarray(schedule, dtype=np.int64)
    expected = balanced_counts(spec)
    checked = 0
    for block in _blocks(shifts, spec.group_order):
        counts = derivative_counts(f, block)
        bad = np.nonzero(np.any(counts != expected[None, :], axis=1))[0]
        if bad.size:
            row = int(bad[0])
            checked += row + 1
            witness = {"shift": int(block[row]), "counts": counts[row]}
            logger.debug("%s not difference balanced: %s", f.label or "table", witness)
            return PropertyReport(PROPERTY_NAMES["db"], False, witness, {"checked": checked})
        checked += len(block)
    return PropertyReport(PROPERTY_NAMES["db"], True, None, {"checked": checked})


def admissible_degrees(q):
    return [d for d in range(1, q) if gcd(d, q - 1) == 1]


def homogeneity_degree(f):
    """The d with f(ax) = a^d f(x) for all a in GF(q)*, gcd(d, q-1) = 1.

    Checking the generator theta^stride of GF(q)* is enough; two working
    degrees agree mod q-1 so the first one found is the only one.
    """
    spec, values = f.spec, f.values
    shifted = np.roll(values, -spec.stride)
    failures = {}
    for d in admissible_degrees(spec.q):
        expected = spec.sub_mul[spec.sub_power_index(d), values]
        bad = np.nonzero(shifted != expected)[0]
        if bad.size == 0:
            return PropertyReport(PROPERTY_NAMES["hom"], True, d)
        failures[d] = {"x": int(bad[0]), "a": spec.stride}
    return PropertyReport(PROPERTY_NAMES["hom"], False, {"failures": failures})


@dataclass
class TwoTupleProfile:
    """mu_map[j] is the exponent of mu_a for a = theta^j in GF(q)*.

    count_tables hold the q x q pair counts N_{b1,b2}(a), keyed by the
    exponent of a, for every a in GF(q)* and the first a outside it.
    """
    mult_order: int
    mu_map: dict = field(default_factory=dict)
    count_tables: dict = field(default_factory=dict)

    def is_multiplicative(self):
        M = self.mult_order
        for j, mu in self.mu_map.items():
            for k, nu in self.mu_map.items():
                product = self.mu_map.get((j + k) % M)
                if product is None or product != (mu + nu) % M:
                    return False
        return True

    def to_dict(self):
        return {
            "mu_map": {str(j): mu for j, mu in sorted(self.mu_map.items())},
            "count_tables": {str(j): t.tolist() for j, t in sorted(self.count_tables.items())},
        }


def _pair_counts(f, shifts):
    spec, values = f.spec, f.values
    M, q = spec.group_order, spec.q
    shifts = np.asarray(shifts, dtype=np.int64)
    positions = (np.arange(M)[None, :] + shifts[:, None]) % M
    pairs = values[None, :] * q + values[positions]
    offsets = (np.arange(len(shifts)) * q * q)[:, None]
    return np.bincount((pairs + offsets).ravel(), minlength=len(shifts) * q * q).reshape(len(shifts), q, q)


def _inside_expected(spec, mu_index):
    q, n = spec.q, spec.n
    table = np.zeros((q, q), dtype=np.int64)
    table[0, 0] = q ** (n - 1) - 1
    b = np.arange(1, q)
    table[b, spec.sub_mul[mu_index, b]] = q ** (n - 1)
    return table


def is_two_tuple_balanced(f):
    """Pair counts of (f(x), f(ax)) for every a != 1.

    a outside GF(q): q^(n-2) - 1 at (0,0) and q^(n-2) elsewhere. a inside
    GF(q)*: pairs confined to (b, mu_a b). Returns (report, profile).
    """
    spec = f.spec
    q, n, M = spec.q, spec.n, spec.group_order
    if n < 2:
        raise DesignError("two-tuple balance needs n >= 2")
    outside = np.full((q, q), q ** (n - 2), dtype=np.int64)
    outside[0, 0] -= 1
    profile = TwoTupleProfile(M, {0: 0})
    name = PROPERTY_NAMES["ttb"]
    shifts = np.arange(1, M)
    for block in _blocks(shifts, M):
        tables = _pair_counts(f, block)
        for j, table in zip(block.tolist(), tables):
            if j % spec.stride == 0:
                candidates = np.nonzero(table[1] == q ** (n - 1))[0]
                mu_index = int(candidates[0]) if candidates.size == 1 else None
                expected = _inside_expected(spec, mu_index) if mu_index else None
                profile.count_tables[j] = table
                if expected is None or not np.array_equal(table, expected):
                    witness = {"shift": j, "inside_subfield": True, "counts": table}
                    return PropertyReport(name, False, witness), profile
                profile.mu_map[j] = int(spec.subfield_logs[mu_index])
            else:
                if not profile.count_tables or all(k % spec.stride == 0 for k in profile.count_tables):
                    profile.count_tables[j] = table
                bad = np.argwhere(table != outside)
                if bad.size:
                    b1, b2 = (int(v) for v in bad[0])
                    witness = {"shift": j, "inside_subfield": False,
                               "pair": [_value_json(spec, b1), _value_json(spec, b2)],
                               "expected": int(outside[b1, b2]), "actual": int(table[b1, b2])}
                    return PropertyReport(name, False, witness), profile
    details = {"mu_multiplicative": profile.is_multiplicative()}
    return PropertyReport(name, True, None, details), profile


def balanced_shift(f):
    """Smallest b (subfield order) with f - b balanced; witness carries b."""
    spec = f.spec
    counts = value_counts(f)
    expected = balanced_counts(spec)
    for b in range(spec.q):
        # (f - b)(x) = c  <=>  f(x) = c + b
        shifted = counts[spec.sub_add[np.arange(spec.q), b]]
        if np.array_equal(shifted, expected):
            return PropertyReport(PROPERTY_NAMES["shift"], True,
                                  {"shift": _value_json(spec, b), "index": b})
    return PropertyReport(PROPERTY_NAMES["shift"], False, {"counts": counts})


def fiber_square_identity(f):
    """sum over unordered b1 != b2 of (d_b1 - d_b2)^2 equals q - 1."""
    counts = value_counts(f)
    diffs = counts[:, None] - counts[None, :]
    total = int((diffs ** 2).sum()) // 2
    verdict = total == f.spec.q - 1
    return PropertyReport(PROPERTY_NAMES["fibers"], verdict, None if verdict else {"counts": counts, "total": total})


def check_properties(f, names):
    """Run the named checkers (keys of PROPERTY_NAMES) in order."""
    checkers = {
        "balance": is_balanced,
        "db": is_difference_balanced,
        "hom": homogeneity_degree,
        "ttb": lambda table: is_two_tuple_balanced(table)[0],
        "shift": balanced_shift,
        "fibers": fiber_square_identity,
    }
    reports = []
    for name in names:
        if name not in checkers:
            raise DesignError(f"unknown property {name!r}; choose from {', '.join(checkers)}")
        reports.append(checkers[name](f))
    return reports
