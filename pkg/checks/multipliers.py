# checks/multipliers.py
"""
Numerical multipliers D -> D^(t1,t2) = {(x^t1, t2 y)} and their translates
"""

import logging
from math import gcd

import numpy as np
from sympy.ntheory.modular import crt

from algebra.finite_field import FieldElement
from algebra.group_ring import ProductGroup
from checks.report import PropertyReport
from errors import DesignError

logger = logging.getLogger(__name__)


def apply_multiplier(spec, D, t1, t2_index):
    group = ProductGroup.for_field(spec)
    mult, add = group.split(D)
    return np.sort(group.index((mult * t1) % spec.group_order, spec.sub_mul[t2_index, add]))


def find_translates(group, D, image):
    """Every g in G with g D = image, as sorted indices."""
    D = np.asarray(D, dtype=np.int64)
    image = np.asarray(image, dtype=np.int64)
    if D.size != image.size or D.size == 0:
        return np.array([], dtype=np.int64)
    mask = np.zeros(group.size, dtype=bool)
    mask[image] = True
    # g must send D[0] into the image
    candidates = group.difference(image, D[0])
    hits = mask[group.compose(candidates[:, None], D[None, :])].all(axis=1)
    return np.sort(candidates[hits])


def multiplier_check(spec, D, t1, t2):
    """Is D^(t1,t2) a translate (a, h) D? Reports the smallest translate and one with h = 0."""
    M = spec.group_order
    if gcd(t1, M) != 1:
        raise DesignError(f"gcd(t1={t1}, {M}) must be 1")
    t2_index = spec.subfield_index(t2) if isinstance(t2, FieldElement) else int(t2)
    if t2_index == 0:
        raise DesignError("t2 must be nonzero")
    group = ProductGroup.for_field(spec)
    translates = find_translates(group, D, apply_multiplier(spec, D, t1, t2_index))
    details = {"t1": t1, "t2": t2_index}
    if translates.size == 0:
        return PropertyReport("multiplier", False, {"t1": t1, "t2": t2_index, "translates": 0}, details)
    _, adds = group.split(translates)
    zero_additive = translates[adds == 0]
    witness = {
        "translate": group.element(translates[0]).to_json(),
        "additive_zero": bool(adds[0] == 0),
        "zero_additive_translate": group.element(zero_additive[0]).to_json() if zero_additive.size else None,
        "translates": int(translates.size),
    }
    details["additive_part_zero"] = bool(zero_additive.size)
    return PropertyReport("multiplier", True, witness, details)


def pair_form(spec, t):
    """(t mod q^n - 1, t mod p): the action (x^t, t y) on GF(p^n)* x GF(p)."""
    return t % spec.group_order, t % spec.p


def _crt_form(spec, pair):
    value, modulus = crt([spec.group_order, spec.p], list(pair))
    return int(value) % int(modulus)


def find_function_multipliers(spec, D):
    """[(t, report)] for every t in [1, p(p^n - 1)) coprime to p(p^n - 1) that is a multiplier."""
    if spec.m != 1:
        raise DesignError("integer multipliers act diagonally only when q = p")
    modulus = spec.p * spec.group_order
    found = []
    for t in range(1, modulus):
        if gcd(t, modulus) != 1:
            continue
        t1, residue = pair_form(spec, t)
        if _crt_form(spec, (t1, residue)) != t:
            raise DesignError(f"pair form of t={t} does not reconstruct it")
        report = multiplier_check(spec, D, t1, spec.subfield_index(spec.from_residue(residue)))
        if report.verdict:
            found.append((t, report))
    logger.debug("multipliers: %s", [t for t, _ in found])
    return found


def theorem_multipliers(p, n):
    """t_i = p + i(p^n - 1), i = 1..p-1."""
    return [p + i * (p ** n - 1) for i in range(1, p)]


def function_multiplier_theorem(spec, D):
    """Every t_i is a multiplier of D with pair form (p, -i mod p)."""
    found = {t: report for t, report in find_function_multipliers(spec, D)}
    for i, t in enumerate(theorem_multipliers(spec.p, spec.n), start=1):
        if pair_form(spec, t) != (spec.p % spec.group_order, (-i) % spec.p):
            raise DesignError(f"t_{i}={t} has an unexpected pair form {pair_form(spec, t)}")
        if t not in found:
            return PropertyReport("function_multipliers", False, {"missing": t, "i": i},
                                  {"multipliers": sorted(found)})
    translates = {t: found[t].witness["translate"] for t in theorem_multipliers(spec.p, spec.n)}
    return PropertyReport("function_multipliers", True, {"translates": translates},
                          {"multipliers": sorted(found)})
