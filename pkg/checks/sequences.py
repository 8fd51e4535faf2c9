# checks/sequences.py
"""
p-ary sequences s_i = f(theta^i) and their periodic autocorrelation
"""

from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from checks.properties import BLOCK_ENTRIES
from checks.report import PropertyReport
from errors import SequenceError


@dataclass(frozen=True, eq=False)
class PSequence:
    p: int
    symbols: np.ndarray = field(repr=False)

    def __post_init__(self):
        symbols = np.asarray(self.symbols, dtype=np.int64).copy()
        if symbols.size and (symbols.min() < 0 or symbols.max() >= self.p):
            raise SequenceError(f"symbols must be residues mod {self.p}")
        symbols.setflags(write=False)
        object.__setattr__(self, "symbols", symbols)

    @property
    def period(self):
        return len(self.symbols)

    def __eq__(self, other):
        if not isinstance(other, PSequence):
            return NotImplemented
        return self.p == other.p and np.array_equal(self.symbols, other.symbols)

    __hash__ = None

    def to_digits(self):
        """One digit per symbol."""
        return "".join(str(int(s)) for s in self.symbols)

    def to_dict(self):
        return {"p": self.p, "period": self.period, "symbols": self.symbols.tolist()}


@dataclass(frozen=True)
class Autocorrelation:
    """counts[c] = |{i : s_(i+tau) - s_i = c}| and the complex sum they determine."""
    tau: int
    counts: tuple
    value: complex

    @property
    def exact_value(self) -> Optional[int]:
        """N_0 - N_1 when N_1 = ... = N_(p-1), otherwise None."""
        if len(set(self.counts[1:])) <= 1:
            return self.counts[0] - (self.counts[1] if len(self.counts) > 1 else 0)
        return None


def to_sequence(f):
    """Symbols are residues of f(theta^i) in GF(p) = Z_p."""
    spec = f.spec
    if spec.m != 1:
        raise SequenceError(f"sequences need q = p; got q = {spec.p}^{spec.m}")
    return PSequence(spec.p, spec.residue_logs(f.logs))


def _count_block(s, taus):
    p, M = s.p, s.period
    taus = np.asarray(taus, dtype=np.int64)
    positions = (np.arange(M)[None, :] + taus[:, None]) % M
    diffs = (s.symbols[positions] - s.symbols[None, :]) % p
    offsets = (np.arange(len(taus)) * p)[:, None]
    return np.bincount((diffs + offsets).ravel(), minlength=len(taus) * p).reshape(len(taus), p)


def _complex_value(counts, p):
    zeta = np.exp(2j * np.pi * np.arange(p) / p)
    return complex(np.dot(counts, zeta))


def autocorrelation(s, tau):
    if not 0 <= tau < s.period:
        raise SequenceError(f"tau={tau} outside [0, {s.period})")
    counts = _count_block(s, [tau])[0]
    return Autocorrelation(tau, tuple(int(c) for c in counts), _complex_value(counts, s.p))


def autocorrelation_all(s):
    counts = np.concatenate([_count_block(s, block) for block in _tau_blocks(s)])
    return [Autocorrelation(tau, tuple(int(c) for c in row), _complex_value(row, s.p))
            for tau, row in enumerate(counts)]


def _tau_blocks(s, start=0):
    rows = max(1, BLOCK_ENTRIES // max(s.period, 1))
    for begin in range(start, s.period, rows):
        yield np.arange(begin, min(begin + rows, s.period))


def ideal_counts(p, period):
    """(p^(n-1) - 1, p^(n-1), ...) for period p^n - 1."""
    level = (period + 1) // p
    expected = np.full(p, level, dtype=np.int64)
    expected[0] -= 1
    return expected


def is_ideal_two_level(s):
    """C(tau) = -1 for every tau != 0, decided on the difference counts."""
    expected = ideal_counts(s.p, s.period)
    for taus in _tau_blocks(s, start=1):
        counts = _count_block(s, taus)
        bad = np.nonzero(np.any(counts != expected[None, :], axis=1))[0]
        if bad.size:
            row = int(bad[0])
            return PropertyReport("ideal_two_level", False, {"tau": int(taus[row]), "counts": counts[row]})
    return PropertyReport("ideal_two_level", True)


def autocorrelation_sum(s):
    """sum over tau of N_c(tau) equals the pair-difference counts of the symbol distribution.

    That is sum_tau C(tau) = |sum_i zeta^(s_i)|^2; the witness carries the
    integer total when it is rational (1 for ideal sequences).
    """
    p = s.p
    totals = np.zeros(p, dtype=np.int64)
    for taus in _tau_blocks(s):
        totals += _count_block(s, taus).sum(axis=0)
    dist = np.bincount(s.symbols, minlength=p).astype(np.int64)
    # pairs (i, k) with s_k - s_i = c
    expected = np.array([int(np.dot(dist, np.roll(dist, -c))) for c in range(p)], dtype=np.int64)
    verdict = bool(np.array_equal(totals, expected))
    exact = Autocorrelation(0, tuple(int(c) for c in totals), _complex_value(totals, p)).exact_value
    return PropertyReport("autocorrelation_sum", verdict,
                          {"total": exact, "counts": totals} if verdict else {"counts": totals, "expected": expected})
