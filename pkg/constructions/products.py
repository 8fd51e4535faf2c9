# constructions/products.py
"""
Product of relative difference sets through an intermediate field GF(q^ell)
"""

import logging

import numpy as np

from algebra.group_ring import verify_cyclic_design
from errors import ConstructionError

logger = logging.getLogger(__name__)


def embed_exponents(spec, logs, ell):
    """GF(q^ell)* into GF(q^n)*: j -> j * (q^n - 1)/(q^ell - 1)."""
    return (np.asarray(logs, dtype=np.int64) * (spec.group_order // (spec.q ** ell - 1))) % spec.group_order


def _check_ell(spec, ell):
    if ell < 1 or spec.n % ell:
        raise ConstructionError(f"ell={ell} must divide n={spec.n}")


def trace_preimages(spec, ell):
    """(tr_{q^n/q^ell}^-1(1), tr_{q^ell/q}^-1(1)) as exponent arrays in GF(q^n)*."""
    _check_ell(spec, ell)
    x = np.arange(spec.group_order, dtype=np.int64)
    outer = spec.partial_trace_logs(x, spec.q ** ell, spec.n // ell)
    inner_logs = embed_exponents(spec, np.arange(spec.q ** ell - 1), ell)
    inner = spec.partial_trace_logs(inner_logs, spec.q, ell)
    return x[outer == 0], np.sort(inner_logs[inner == 0])


def _verify_relative(logs, order, subgroup_order, k, lam, name):
    if order == subgroup_order:
        # the whole group is the forbidden subgroup: only singletons qualify
        if len(np.unique(logs)) != 1 or len(logs) != k:
            raise ConstructionError(f"{name} must be a single element, got {len(logs)}")
        return
    report = verify_cyclic_design(logs, order, subgroup_order, k, 0, lam, name)
    if not report.verdict:
        raise ConstructionError(f"{name} fails its relative difference set check: {report.witness}")


def rds_product(spec, D1, D2, ell):
    """{d1 * d2}: a ((q^n-1)/(q-1), q-1, q^(n-1), q^(n-2)) set relative to GF(q)*."""
    _check_ell(spec, ell)
    q, n, M = spec.q, spec.n, spec.group_order
    D1 = np.asarray(D1, dtype=np.int64) % M
    D2 = np.asarray(D2, dtype=np.int64) % M
    inner_order = q ** ell - 1
    step = M // inner_order
    if np.any(D2 % step):
        raise ConstructionError(f"D2 does not lie in GF({q}^{ell})*")
    if ell == n:
        _verify_relative(D1, M, M, 1, 0, "D1")
    else:
        _verify_relative(D1, M, inner_order, q ** (n - ell), q ** (n - 2 * ell), "D1")
    if ell == 1:
        _verify_relative(D2 // step, inner_order, q - 1, 1, 0, "D2")
    else:
        _verify_relative(D2 // step, inner_order, q - 1, q ** (ell - 1), q ** (ell - 2), "D2")
    products = ((D1[:, None] + D2[None, :]) % M).ravel()
    unique = np.unique(products)
    if unique.size != products.size:
        raise ConstructionError("the product set has repeated elements")
    logger.info("rds_product: %d x %d -> %d elements in GF(%d^%d)*", len(D1), len(D2), unique.size, q, n)
    return unique
