# search/schedule.py
"""
Shift order for difference balance checks during enumeration
"""

from math import gcd

import numpy as np


def prune_order(spec):
    """Nontrivial shifts j sorted by the multiplicative order of theta^j, then by j.

    Shifts inside small subgroups reject most candidates first; the verdict
    does not depend on the order.
    """
    M = spec.group_order
    shifts = np.arange(1, M, dtype=np.int64)
    orders = np.array([M // gcd(int(j), M) for j in shifts], dtype=np.int64)
    return shifts[np.lexsort((shifts, orders))]
