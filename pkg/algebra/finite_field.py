# algebra/finite_field.py
"""
Exact arithmetic in GF(p^(mn)) with the distinguished subfield GF(q), q = p^m.

Nonzero elements are stored as discrete logarithms to the primitive root
theta of the modulus; zero is the ZERO_LOG sentinel. Addition goes through a
Zech logarithm table, so every operation is a table lookup.
"""

import logging
from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from typing import Optional, Sequence

import numpy as np
from sympy import factorint, isprime
from sympy.polys.domains import ZZ
from sympy.polys.galoistools import gf_irreducible_p, gf_pow_mod

from config import MAX_FIELD_ORDER, ZERO_LOG
from errors import FieldError

logger = logging.getLogger(__name__)


def format_polynomial(modulus):
    """Render a low-degree-first coefficient list as 'x^2 + x + 2'."""
    terms = []
    for degree in range(len(modulus) - 1, -1, -1):
        coeff = modulus[degree]
        if coeff == 0:
            continue
        if degree == 0:
            terms.append(str(coeff))
        else:
            power = "x" if degree == 1 else f"x^{degree}"
            terms.append(power if coeff == 1 else f"{coeff}{power}")
    return " + ".join(terms) if terms else "0"


def is_irreducible(modulus, p):
    """Irreducibility of a low-degree-first polynomial over GF(p)."""
    high_first = [ZZ(int(c)) for c in reversed(modulus)]
    return bool(gf_irreducible_p(high_first, p, ZZ))


def is_primitive(modulus, p):
    """True when the modulus is irreducible and x has order p^N - 1 modulo it."""
    if not is_irreducible(modulus, p):
        return False
    high_first = [ZZ(int(c)) for c in reversed(modulus)]
    order = p ** (len(modulus) - 1) - 1
    x = [ZZ(1), ZZ(0)]
    for prime in factorint(order):
        if [int(c) for c in gf_pow_mod(x, order // prime, high_first, p, ZZ)] == [1]:
            return False
    return True


def smallest_primitive_polynomial(p, degree):
    """Lexicographically smallest monic primitive polynomial of the given degree.

    Candidates are ordered by their non-leading coefficients read from the
    x^(degree-1) term down to the constant term.
    """
    for code in range(1, p ** degree):
        if code % p == 0:
            continue
        modulus = [(code // p ** i) % p for i in range(degree)] + [1]
        if is_primitive(modulus, p):
            return tuple(modulus)
    raise FieldError(f"no primitive polynomial of degree {degree} over GF({p})")


@dataclass(frozen=True)
class FieldSpec:
    """The tower GF(p) < GF(q) < GF(q^n) with log/antilog/Zech tables."""
    p: int
    m: int
    n: int
    modulus: tuple
    exp_table: np.ndarray = field(compare=False, repr=False)
    log_table: np.ndarray = field(compare=False, repr=False)
    zech_table: np.ndarray = field(compare=False, repr=False)

    @property
    def q(self):
        return self.p ** self.m

    @property
    def degree(self):
        return self.m * self.n

    @property
    def order(self):
        return self.q ** self.n

    @property
    def group_order(self):
        """|GF(q^n)*| = q^n - 1."""
        return self.order - 1

    @property
    def subfield_exponent_stride(self):
        """(q^n - 1)/(q - 1): GF(q)* is {theta^(j*stride)}."""
        return self.group_order // (self.q - 1)

    stride = subfield_exponent_stride

    @property
    def theta_log_table(self):
        return self.log_table

    def __str__(self):
        return f"GF({self.p}^{self.degree}) over GF({self.q}) mod {format_polynomial(self.modulus)}"

    # -- scalar elements -------------------------------------------------

    def element(self, log):
        if log is None or log == ZERO_LOG:
            return FieldElement(None, self)
        return FieldElement(int(log) % self.group_order, self)

    def zero(self):
        return FieldElement(None, self)

    def one(self):
        return FieldElement(0, self)

    def theta(self, k=1):
        return self.element(k % self.group_order)

    def from_residue(self, residue):
        """The prime-field element with the given residue mod p."""
        return self.element(int(self.log_table[int(residue) % self.p]))

    def residue(self, element):
        """Residue mod p of a prime-field element (its constant coefficient)."""
        self._check(element)
        if element.is_zero:
            return 0
        code = int(self.exp_table[element.log])
        if code >= self.p:
            raise FieldError(f"{element} does not lie in GF({self.p})")
        return code

    def _check(self, *elements):
        for element in elements:
            if element.spec != self:
                raise FieldError("elements belong to different fields")

    def add(self, a, b):
        self._check(a, b)
        return self.element(int(self.add_logs(_log(a), _log(b))))

    def neg(self, a):
        self._check(a)
        return self.element(int(self.neg_logs(_log(a))))

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def mul(self, a, b):
        self._check(a, b)
        return self.element(int(self.mul_logs(_log(a), _log(b))))

    def inv(self, a):
        self._check(a)
        if a.is_zero:
            raise FieldError("zero has no multiplicative inverse")
        return self.element((-a.log) % self.group_order)

    def pow(self, a, e):
        self._check(a)
        if a.is_zero:
            if e < 0:
                raise FieldError("zero has no multiplicative inverse")
            return self.one() if e == 0 else self.zero()
        return self.element((a.log * e) % self.group_order)

    def frobenius(self, a):
        return self.pow(a, self.q)

    def rel_trace(self, x):
        """tr_{q^n/q}(x) = sum of x^(q^i), i < n; lies in GF(q)."""
        self._check(x)
        return self.element(int(self.rel_trace_logs(_log(x))))

    def in_subfield(self, x):
        self._check(x)
        return x.is_zero or x.log % self.stride == 0

    def subfield_elements(self):
        """GF(q) in deterministic order: zero, then increasing exponent."""
        return [self.element(int(log)) for log in self.subfield_logs]

    # -- vectorised exponent arithmetic ---------------------------------

    def add_logs(self, a, b):
        a, b = np.broadcast_arrays(np.asarray(a, dtype=np.int64), np.asarray(b, dtype=np.int64))
        M = self.group_order
        zech = self.zech_table[(b - a) % M]
        out = np.where(zech == ZERO_LOG, ZERO_LOG, (a + zech) % M)
        out = np.where(a == ZERO_LOG, b, out)
        out = np.where(b == ZERO_LOG, a, out)
        return out

    def neg_logs(self, a):
        a = np.asarray(a, dtype=np.int64)
        # -1 = theta^((q^n - 1)/2) for odd p
        return np.where(a == ZERO_LOG, ZERO_LOG, (a + self.group_order // 2) % self.group_order)

    def mul_logs(self, a, b):
        a, b = np.broadcast_arrays(np.asarray(a, dtype=np.int64), np.asarray(b, dtype=np.int64))
        zero = (a == ZERO_LOG) | (b == ZERO_LOG)
        return np.where(zero, ZERO_LOG, (a + b) % self.group_order)

    def pow_logs(self, a, e):
        a = np.asarray(a, dtype=np.int64)
        return np.where(a == ZERO_LOG, ZERO_LOG, (a * (e % self.group_order)) % self.group_order)

    def partial_trace_logs(self, logs, base_power, terms):
        """Sum of x^(base_power^i) for i < terms, over an exponent array."""
        logs = np.asarray(logs, dtype=np.int64)
        M = self.group_order
        total = np.full(logs.shape, ZERO_LOG, dtype=np.int64)
        for i in range(terms):
            factor = pow(base_power, i, M)
            term = np.where(logs == ZERO_LOG, ZERO_LOG, (logs * factor) % M)
            total = self.add_logs(total, term)
        return total

    def rel_trace_logs(self, logs):
        return self.partial_trace_logs(logs, self.q, self.n)

    def residue_logs(self, logs):
        """Residues mod p for an array of prime-field exponents."""
        logs = np.asarray(logs, dtype=np.int64)
        codes = np.where(logs == ZERO_LOG, 0, self.exp_table[np.where(logs == ZERO_LOG, 0, logs)])
        if np.any(codes >= self.p):
            raise FieldError(f"values outside GF({self.p})")
        return codes

    # -- subfield index space -------------------------------------------

    @cached_property
    def subfield_logs(self):
        logs = [ZERO_LOG] + [j * self.stride for j in range(self.q - 1)]
        return np.array(logs, dtype=np.int64)

    def to_subfield_index(self, logs):
        """0 for zero, j + 1 for theta^(j*stride); FieldError outside GF(q)."""
        logs = np.asarray(logs, dtype=np.int64)
        nonzero = logs != ZERO_LOG
        if np.any(nonzero & (logs % self.stride != 0)):
            raise FieldError(f"value outside the subfield GF({self.q})")
        return np.where(nonzero, logs // self.stride + 1, 0)

    def from_subfield_index(self, indices):
        return self.subfield_logs[np.asarray(indices, dtype=np.int64)]

    def subfield_index(self, element):
        self._check(element)
        return int(self.to_subfield_index(_log(element)))

    @cached_property
    def sub_add(self):
        logs = self.subfield_logs
        return self.to_subfield_index(self.add_logs(logs[:, None], logs[None, :]))

    @cached_property
    def sub_neg(self):
        return self.to_subfield_index(self.neg_logs(self.subfield_logs))

    @cached_property
    def sub_mul(self):
        logs = self.subfield_logs
        return self.to_subfield_index(self.mul_logs(logs[:, None], logs[None, :]))

    @cached_property
    def sub_sub(self):
        """sub_sub[a, b] = a - b in index space."""
        return self.sub_add[:, self.sub_neg]

    @cached_property
    def sub_abs_trace(self):
        """Tr_{q/p}(y) as a residue mod p for every subfield index y."""
        return self.residue_logs(self.partial_trace_logs(self.subfield_logs, self.p, self.m))

    def sub_power_index(self, exponent):
        """Index of a^exponent for a = theta^stride (the generator of GF(q)*)."""
        return (exponent % (self.q - 1)) + 1

    # -- serialisation ---------------------------------------------------

    def to_dict(self):
        return {"p": self.p, "m": self.m, "n": self.n, "modulus": list(self.modulus)}

    @staticmethod
    def from_dict(data, max_order=MAX_FIELD_ORDER):
        try:
            return build_field(int(data["p"]), int(data["m"]), int(data["n"]),
                               modulus=list(data["modulus"]), max_order=max_order)
        except (KeyError, TypeError) as e:
            raise FieldError(f"malformed field description: {e}") from e


@dataclass(frozen=True)
class FieldElement:
    """theta^log, or zero when log is None."""
    log: Optional[int]
    spec: FieldSpec = field(repr=False)

    @property
    def is_zero(self):
        return self.log is None

    def __add__(self, other):
        return self.spec.add(self, other)

    def __sub__(self, other):
        return self.spec.sub(self, other)

    def __mul__(self, other):
        return self.spec.mul(self, other)

    def __truediv__(self, other):
        return self.spec.mul(self, self.spec.inv(other))

    def __neg__(self):
        return self.spec.neg(self)

    def __pow__(self, e):
        return self.spec.pow(self, e)

    def inverse(self):
        return self.spec.inv(self)

    def to_json(self):
        return self.log

    def __str__(self):
        return "0" if self.is_zero else f"theta^{self.log}"


def _log(element):
    return ZERO_LOG if element.is_zero else element.log


def _validate_parameters(p, m, n, max_order):
    if not isprime(p):
        raise FieldError(f"p={p} is not prime")
    if p == 2:
        raise FieldError("characteristic 2 is not supported; p must be odd")
    if m < 1:
        raise FieldError(f"m={m} must be at least 1")
    if n < 2:
        raise FieldError(f"n={n} must be at least 2")
    if p ** (m * n) > max_order:
        raise FieldError(f"GF({p}^{m * n}) exceeds the size guard {max_order}")


def _validate_modulus(modulus, p, degree):
    if len(modulus) != degree + 1:
        raise FieldError(f"modulus must have {degree + 1} coefficients, got {len(modulus)}")
    if any(not 0 <= c < p for c in modulus):
        raise FieldError(f"modulus coefficients must lie in [0, {p})")
    if modulus[-1] != 1:
        raise FieldError("modulus must be monic")
    if not is_irreducible(modulus, p):
        raise FieldError(f"modulus {format_polynomial(modulus)} is not irreducible over GF({p})")
    if not is_primitive(modulus, p):
        raise FieldError(f"modulus {format_polynomial(modulus)} is not primitive over GF({p})")


def _power_tables(p, modulus):
    """Antilog table: codes (base-p packed coefficient vectors) of theta^i."""
    degree = len(modulus) - 1
    M = p ** degree - 1
    exp_table = np.empty(M, dtype=np.int64)
    weights = [p ** i for i in range(degree)]
    state = [1] + [0] * (degree - 1)
    for i in range(M):
        exp_table[i] = sum(d * w for d, w in zip(state, weights))
        lead = state[-1]
        state = [0] + state[:-1]
        if lead:
            state = [(s - lead * c) % p for s, c in zip(state, modulus)]
    log_table = np.full(p ** degree, ZERO_LOG, dtype=np.int64)
    log_table[exp_table] = np.arange(M, dtype=np.int64)
    if np.count_nonzero(log_table != ZERO_LOG) != M:
        raise FieldError("antilog table is not a bijection; modulus is not primitive")
    # 1 + theta^i only changes the constant coefficient
    constant = exp_table % p
    shifted = exp_table - constant + (constant + 1) % p
    zech_table = log_table[shifted]
    return exp_table, log_table, zech_table


@lru_cache(maxsize=None)
def _build_cached(p, m, n, modulus):
    exp_table, log_table, zech_table = _power_tables(p, modulus)
    for table in (exp_table, log_table, zech_table):
        table.setflags(write=False)
    spec = FieldSpec(p, m, n, modulus, exp_table, log_table, zech_table)
    logger.info("built %s", spec)
    return spec


def build_field(p: int, m: int, n: int, modulus: Optional[Sequence[int]] = None,
                max_order: int = MAX_FIELD_ORDER) -> FieldSpec:
    """Build GF(p^(mn)) with subfield GF(p^m).

    Without a modulus the lexicographically smallest monic primitive
    polynomial of degree mn is used, so fields are reproducible.
    """
    _validate_parameters(p, m, n, max_order)
    degree = m * n
    if modulus is None:
        modulus = smallest_primitive_polynomial(p, degree)
    else:
        modulus = tuple(int(c) for c in modulus)
        _validate_modulus(modulus, p, degree)
    return _build_cached(p, m, n, tuple(modulus))
