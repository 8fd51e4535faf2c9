# constructions/functions.py
"""
Explicit difference balanced functions and the transforms that preserve them
"""

import logging
from math import gcd

import numpy as np

from algebra.finite_field import FieldElement
from algebra.function_table import FunctionTable
from algebra.group_ring import verify_cyclic_design
from checks.properties import is_difference_balanced
from constructions.products import rds_product, trace_preimages
from errors import ConstructionError, FieldError

logger = logging.getLogger(__name__)


def _subfield_index(spec, b):
    if not isinstance(b, FieldElement):
        raise ConstructionError(f"expected a field element, got {b!r}")
    try:
        return spec.subfield_index(b)
    except FieldError as e:
        raise ConstructionError(f"{b} is not in GF({spec.q})") from e


def _exponent(spec, c):
    """Exponent of a nonzero element given as FieldElement or int."""
    if isinstance(c, FieldElement):
        if c.spec != spec:
            raise ConstructionError("element belongs to a different field")
        if c.is_zero:
            raise ConstructionError("a multiplicative translate needs a nonzero element")
        return c.log
    return int(c) % spec.group_order


def trace_function(spec):
    """f(x) = tr_{q^n/q}(x)."""
    logs = spec.rel_trace_logs(np.arange(spec.group_order))
    return FunctionTable.from_logs(spec, logs, "trace")


def constant_function(spec, b=None):
    b = spec.zero() if b is None else b
    index = _subfield_index(spec, b)
    return FunctionTable(spec, np.full(spec.group_order, index), f"constant {b}")


def _polynomial_trace(spec, coefficient_logs, exponents):
    """values[i] = tr(sum_k c_k * theta^(i * e_k)) for exponent-form coefficients."""
    M = spec.group_order
    x = np.arange(M, dtype=np.int64)
    total = np.full(M, -1, dtype=np.int64)
    for coeff, e in zip(coefficient_logs, exponents):
        total = spec.add_logs(total, spec.mul_logs(coeff, (x * e) % M))
    return spec.rel_trace_logs(total)


def hg_exponents(spec, k, ell):
    """(q^(2ki) + 1)/2 for i = 0..ell."""
    return [(spec.q ** (2 * k * i) + 1) // 2 for i in range(ell + 1)]


def hg_b_sequence(ell, j, flipped=False):
    """b_0 = 1, b_(i*j mod 2ell+1) = (-1)^i for 1 <= i <= ell, b_t = b_(2ell+1-t)."""
    N = 2 * ell + 1
    if not 1 <= j < N or gcd(j, N) != 1:
        raise ConstructionError(f"j={j} is not admissible for ell={ell}")
    b = [0] * N
    b[0] = 1
    sign = -1 if flipped else 1
    for i in range(1, ell + 1):
        t = (i * j) % N
        b[t] = b[N - t] = sign * (-1) ** i
    return b


def _hg_readings(ell):
    """Reading names in preference order: admissible j up to sign, then the flipped variants."""
    N = 2 * ell + 1
    primary = [j for j in range(1, ell + 1) if gcd(j, N) == 1]
    return [(j, False) for j in primary] + [(j, True) for j in primary]


def _hg_table(spec, k, ell, j, flipped):
    b = hg_b_sequence(ell, j, flipped)
    half = (spec.p + 1) // 2
    signs = [b[(2 * i) % (2 * ell + 1)] for i in range(1, ell + 1)]
    minus_one = spec.group_order // 2
    coefficient_logs = [int(spec.log_table[half])] + [0 if s == 1 else minus_one for s in signs]
    logs = _polynomial_trace(spec, coefficient_logs, hg_exponents(spec, k, ell))
    name = f"j={j}" + (",flipped" if flipped else "")
    return name, FunctionTable.from_logs(spec, logs, f"helleseth-gong k={k} ell={ell} {name}")


def _check_hg_parameters(spec, k, ell):
    if k < 1 or ell < 1:
        raise ConstructionError(f"k={k} and ell={ell} must be positive")
    if spec.n != (2 * ell + 1) * k:
        raise ConstructionError(f"n={spec.n} does not equal (2*ell+1)*k = {(2 * ell + 1) * k}")


def helleseth_gong_readings(spec, k, ell):
    """{reading name: difference-balance report} for every admissible b-sequence reading."""
    _check_hg_parameters(spec, k, ell)
    results = {}
    for j, flipped in _hg_readings(ell):
        name, table = _hg_table(spec, k, ell, j, flipped)
        results[name] = is_difference_balanced(table)
    return results


def helleseth_gong(spec, k, ell):
    """f(x) = tr(sum_i u_i x^((q^(2ki)+1)/2)), n = (2ell+1)k.

    u_0 = (p+1)/2 and u_i = b_(2i). The first reading whose table passes the
    difference balance check is used.
    """
    _check_hg_parameters(spec, k, ell)
    readings = _hg_readings(ell)
    for position, (j, flipped) in enumerate(readings):
        name, table = _hg_table(spec, k, ell, j, flipped)
        report = is_difference_balanced(table)
        if report.verdict:
            if position:
                logger.warning("helleseth-gong: primary reading failed; using %s", name)
            logger.info("helleseth-gong k=%d ell=%d validated with reading %s", k, ell, name)
            return table
        logger.debug("helleseth-gong reading %s fails at shift %s", name, report.witness)
    raise ConstructionError(f"no b-sequence reading for k={k}, ell={ell} gives a difference balanced table")


def lin_exponent(n):
    return 2 * 3 ** ((n - 1) // 2) + 1


def lin_function(spec):
    """f(x) = tr_{3^n/3}(x + x^e), e = 2*3^((n-1)/2) + 1."""
    if spec.p != 3 or spec.m != 1:
        raise ConstructionError("the Lin function is defined over GF(3) only")
    if spec.n < 3 or spec.n % 2 == 0:
        raise ConstructionError(f"the Lin function needs odd n >= 3, got n={spec.n}")
    e = lin_exponent(spec.n)
    logs = _polynomial_trace(spec, [0, 0], [1, e])
    return FunctionTable.from_logs(spec, logs, f"lin e={e}")


def affine_shift(f, b):
    """f + b for b in GF(q)."""
    index = _subfield_index(f.spec, b)
    return FunctionTable(f.spec, f.spec.sub_add[f.values, index], f.label)


def multiplicative_translate(f, c):
    """x -> f(c x)."""
    shift = _exponent(f.spec, c)
    return FunctionTable(f.spec, np.roll(f.values, -shift), f.label)


def decimate(f, d):
    """x -> f(x^d), gcd(d, q^n - 1) = 1."""
    M = f.spec.group_order
    if gcd(d, M) != 1:
        raise ConstructionError(f"decimation by {d} is not a bijection of GF({f.spec.order})*")
    return FunctionTable(f.spec, f.values[(np.arange(M) * d) % M], f.label)


def scale(f, c):
    """c * f for c in GF(q)*."""
    index = _subfield_index(f.spec, c)
    if index == 0:
        raise ConstructionError("scaling by zero does not preserve difference balance")
    return FunctionTable(f.spec, f.spec.sub_mul[index, f.values], f.label)


def from_rds(spec, C, d):
    """f = b^d on bC for b in GF(q)*, 0 on the complement of GF(q)* C."""
    q, n, M = spec.q, spec.n, spec.group_order
    if gcd(d, q - 1) != 1:
        raise ConstructionError(f"gcd(d={d}, q-1={q - 1}) must be 1")
    C = np.unique(np.asarray(C, dtype=np.int64) % M)
    report = verify_cyclic_design(C, M, q - 1, q ** (n - 1), 0, q ** (n - 2), "relative_difference_set")
    if not report.verdict:
        raise ConstructionError(f"input set is not a relative difference set: {report.witness}")
    values = np.zeros(M, dtype=np.int64)
    assigned = np.zeros(M, dtype=bool)
    for j in range(q - 1):
        translate = (C + j * spec.stride) % M
        if assigned[translate].any():
            raise ConstructionError(f"translate by theta^{j * spec.stride} overlaps an earlier one")
        assigned[translate] = True
        values[translate] = spec.sub_power_index(j * d)
    logger.debug("from_rds: %d points on C_0", int((~assigned).sum()))
    return FunctionTable(spec, values, f"from_rds d={d}")


def product_function(spec, ell, d=1):
    """from_rds over the product of trace-preimage relative difference sets."""
    D1, D2 = trace_preimages(spec, ell)
    return from_rds(spec, rds_product(spec, D1, D2, ell), d).with_label(f"product ell={ell} d={d}")


def construct(family, spec, k=None, ell=None, d=1):
    """Dispatch by family name."""
    if family == "trace":
        return trace_function(spec)
    if family == "lin":
        return lin_function(spec)
    if family == "hg":
        if k is None or ell is None:
            raise ConstructionError("the hg family needs k and ell")
        return helleseth_gong(spec, k, ell)
    if family == "product":
        if ell is None:
            raise ConstructionError("the product family needs ell")
        return product_function(spec, ell, d)
    raise ConstructionError(f"unknown family {family!r}")
