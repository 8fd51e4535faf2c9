# checks/characters.py
"""
|chi(D)|^2 for every character of G = GF(q^n)* x GF(q)
"""

from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from algebra.group_ring import ProductGroup
from checks.report import PropertyReport
from config import FLOAT_TOLERANCE

PRINCIPAL, TRIVIAL_ON_N1, TRIVIAL_ON_N2, GENERIC = "principal", "trivial_on_N1", "trivial_on_N2", "generic"


def expected_values(q, n):
    """The four-case table for a difference balanced graph set."""
    M = q ** n - 1
    return {PRINCIPAL: M * M, TRIVIAL_ON_N1: 0, TRIVIAL_ON_N2: 1, GENERIC: q ** n}


def character_tags(M, q):
    """tags[u, c]: u indexes chi(theta^j) = e^(2 pi i u j / M), c the additive functional."""
    tags = np.full((M, q), GENERIC, dtype=object)
    tags[0, :] = TRIVIAL_ON_N2
    tags[:, 0] = TRIVIAL_ON_N1
    tags[0, 0] = PRINCIPAL
    return tags


def structure_constants(group, coeffs):
    """(a0, A, B, C) with D D^(-1) = a0 1 + A G + B N1 + C N2, or None when not of that form."""
    s = group.add_order
    table = coeffs.reshape(group.mult_order, s)
    identity = int(table[0, 0])
    on_n1 = np.unique(table[0, 1:])
    on_n2 = np.unique(table[1:, 0])
    rest = np.unique(table[1:, 1:])
    if max(len(on_n1), len(on_n2), len(rest)) > 1:
        return None
    e1 = int(on_n1[0]) if on_n1.size else 0
    e2 = int(on_n2[0]) if on_n2.size else 0
    e3 = int(rest[0]) if rest.size else 0
    return identity - e1 - e2 + e3, e3, e1 - e3, e2 - e3


@dataclass
class CharacterSpectrum:
    """exact[u, c] is |chi(D)|^2 from the structure constants; approx from the FFT route."""
    q: int
    n: int
    approx: np.ndarray = field(repr=False)
    exact: Optional[np.ndarray] = field(default=None, repr=False)
    constants: Optional[tuple] = None

    @property
    def tags(self):
        return character_tags(self.approx.shape[0], self.q)

    def value(self, u, c):
        return int(self.exact[u, c]) if self.exact is not None else float(self.approx[u, c])

    def case_counts(self):
        tags, counts = np.unique(self.tags, return_counts=True)
        return {str(t): int(k) for t, k in zip(tags, counts)}

    def max_float_error(self):
        if self.exact is None:
            return None
        return float(np.abs(self.approx - self.exact).max())

    def report(self):
        """Exact values against the four-case table plus the floating cross-check."""
        details = {"case_counts": self.case_counts(), "structure_constants": self.constants,
                   "max_float_error": self.max_float_error()}
        if self.exact is None:
            return PropertyReport("character_spectrum", False, {"reason": "difference counts are not flat"}, details)
        expected = expected_values(self.q, self.n)
        tags = self.tags
        for (u, c), tag in np.ndenumerate(tags):
            exact = int(self.exact[u, c])
            if exact != expected[tag] or abs(self.approx[u, c] - exact) >= FLOAT_TOLERANCE:
                witness = {"u": u, "c": c, "case": tag, "expected": expected[tag],
                           "exact": exact, "approx": float(self.approx[u, c])}
                return PropertyReport("character_spectrum", False, witness, details)
        return PropertyReport("character_spectrum", True, None, details)


def character_spectrum(spec, D):
    """Evaluate sum_g coeff(g) chi(g) over D D^(-1) for every (u, c)."""
    group = ProductGroup.for_field(spec)
    q, M, p = spec.q, spec.group_order, spec.p
    coeffs = group.difference_counts(D)
    table = coeffs.reshape(M, q).astype(np.float64)
    # psi_c(y) = zeta_p^Tr(c y)
    traces = spec.sub_abs_trace[spec.sub_mul]
    phases = np.exp(2j * np.pi * traces / p)
    additive = table @ phases.T
    values = np.fft.ifft(additive, axis=0) * M
    constants = structure_constants(group, coeffs)
    exact = None
    if constants is not None:
        a0, A, B, C = constants
        u_zero = (np.arange(M) == 0)[:, None]
        c_zero = (np.arange(q) == 0)[None, :]
        exact = (a0 + A * group.size * (u_zero & c_zero) + B * q * c_zero + C * M * u_zero).astype(np.int64)
    return CharacterSpectrum(q, spec.n, values.real, exact, constants)
