# algebra/group_ring.py
"""
Integer group rings over Z_M x (A,+) and cyclic difference-count helpers.

G = (GF(q^n)*, .) x (GF(q), +) is the case A = GF(q) in subfield-index
space; quotients G/H for additive subgroups H reuse the same class with the
coset addition table.
"""

from dataclasses import dataclass, field

import numpy as np

from checks.report import PropertyReport
from errors import DesignError


@dataclass(frozen=True)
class GroupElement:
    """(theta^mult_part, add_part) with add_part an additive-factor index."""
    mult_part: int
    add_part: int

    def to_json(self):
        return [int(self.mult_part), int(self.add_part)]


@dataclass(frozen=True, eq=False)
class ProductGroup:
    """Z_M x (A,+) with element index mult * |A| + add."""
    mult_order: int
    add_table: np.ndarray = field(repr=False)
    neg_table: np.ndarray = field(repr=False)
    name: str = ""

    @staticmethod
    def for_field(spec):
        return ProductGroup(spec.group_order, spec.sub_add, spec.sub_neg,
                            f"GF({spec.q}^{spec.n})* x GF({spec.q})")

    @property
    def add_order(self):
        return len(self.neg_table)

    @property
    def size(self):
        return self.mult_order * self.add_order

    def __eq__(self, other):
        if not isinstance(other, ProductGroup):
            return NotImplemented
        return (self.mult_order == other.mult_order
                and np.array_equal(self.add_table, other.add_table))

    def __hash__(self):
        return hash((self.mult_order, self.add_table.tobytes()))

    def index(self, mult, add):
        return (np.asarray(mult, dtype=np.int64) % self.mult_order) * self.add_order + np.asarray(add, dtype=np.int64)

    def split(self, indices):
        indices = np.asarray(indices, dtype=np.int64)
        return indices // self.add_order, indices % self.add_order

    def element(self, index):
        mult, add = self.split(index)
        return GroupElement(int(mult), int(add))

    def compose(self, x, y):
        xm, xa = self.split(x)
        ym, ya = self.split(y)
        return self.index((xm + ym) % self.mult_order, self.add_table[xa, ya])

    def inverse(self, x):
        xm, xa = self.split(x)
        return self.index((-xm) % self.mult_order, self.neg_table[xa])

    def difference(self, x, y):
        """x * y^-1."""
        return self.compose(x, self.inverse(y))

    def mult_subgroup(self):
        """N2 = {(a, 0)}."""
        return self.index(np.arange(self.mult_order), 0)

    def add_subgroup(self, adds=None):
        """N1 = {(1, b)}, or the given additive indices."""
        adds = np.arange(self.add_order) if adds is None else np.asarray(adds, dtype=np.int64)
        return np.sort(self.index(0, adds))

    def whole(self):
        return np.arange(self.size, dtype=np.int64)

    def difference_counts(self, indices):
        """Coefficients of D D^(-1), diagonal included."""
        indices = np.asarray(indices, dtype=np.int64)
        m, a = self.split(indices)
        dm = (m[:, None] - m[None, :]) % self.mult_order
        da = self.add_table[a[:, None], self.neg_table[a][None, :]]
        return np.bincount((dm * self.add_order + da).ravel(), minlength=self.size).astype(np.int64)


@dataclass(frozen=True, eq=False)
class GroupRingElement:
    """Dense integer coefficient vector over a ProductGroup."""
    group: ProductGroup
    coeffs: np.ndarray = field(repr=False)

    @staticmethod
    def zero(group):
        return GroupRingElement(group, np.zeros(group.size, dtype=np.int64))

    @staticmethod
    def from_set(group, indices, weight=1):
        coeffs = np.zeros(group.size, dtype=np.int64)
        np.add.at(coeffs, np.asarray(indices, dtype=np.int64), weight)
        return GroupRingElement(group, coeffs)

    @staticmethod
    def identity(group, weight=1):
        return GroupRingElement.from_set(group, [0], weight)

    def coefficient(self, index):
        return int(self.coeffs[index])

    @property
    def mass(self):
        return int(self.coeffs.sum())

    def _same(self, other):
        if self.group != other.group:
            raise DesignError("group ring elements over different groups")

    def __add__(self, other):
        self._same(other)
        return GroupRingElement(self.group, self.coeffs + other.coeffs)

    def __sub__(self, other):
        self._same(other)
        return GroupRingElement(self.group, self.coeffs - other.coeffs)

    def __neg__(self):
        return GroupRingElement(self.group, -self.coeffs)

    def __mul__(self, other):
        if isinstance(other, (int, np.integer)):
            return GroupRingElement(self.group, self.coeffs * int(other))
        self._same(other)
        left = np.nonzero(self.coeffs)[0]
        right = np.nonzero(other.coeffs)[0]
        out = np.zeros(self.group.size, dtype=np.int64)
        if left.size and right.size:
            products = self.group.compose(left[:, None], right[None, :])
            weights = self.coeffs[left][:, None] * other.coeffs[right][None, :]
            np.add.at(out, products.ravel(), weights.ravel())
        return GroupRingElement(self.group, out)

    __rmul__ = __mul__

    def inverse_image(self):
        """A^(-1): the coefficient of g moves to g^-1."""
        out = np.zeros(self.group.size, dtype=np.int64)
        out[self.group.inverse(np.arange(self.group.size))] = self.coeffs
        return GroupRingElement(self.group, out)

    def __eq__(self, other):
        if not isinstance(other, GroupRingElement):
            return NotImplemented
        return self.group == other.group and np.array_equal(self.coeffs, other.coeffs)

    __hash__ = None

    def first_difference(self, other):
        """(index, self coefficient, other coefficient) of the first mismatch, or None."""
        self._same(other)
        mismatch = np.nonzero(self.coeffs != other.coeffs)[0]
        if mismatch.size == 0:
            return None
        g = int(mismatch[0])
        return g, int(self.coeffs[g]), int(other.coeffs[g])


@dataclass(frozen=True)
class DesignParams:
    """(v; n1, n2; k, lambda; lambda1, lambda2) of a generalized difference set."""
    v: int
    n1: int
    n2: int
    k: int
    lam: int
    lam1: int
    lam2: int

    @staticmethod
    def difference_balanced(q, n):
        """(q(q^n-1); q, q^n-1; q^n-1, q^(n-1); 0, q^(n-1)-1)."""
        return DesignParams(q * (q ** n - 1), q, q ** n - 1, q ** n - 1, q ** (n - 1), 0, q ** (n - 1) - 1)

    def counting_identity_holds(self):
        total = (self.lam * (self.v - self.n1 - self.n2 + 1)
                 + self.lam1 * (self.n1 - 1) + self.lam2 * (self.n2 - 1))
        return total == self.k * (self.k - 1)

    def constant_term(self):
        """k - (lambda(1 - r) + lambda1 + lambda2) with r = 2."""
        return self.k - (self.lam * (1 - 2) + self.lam1 + self.lam2)

    def as_tuple(self):
        return (self.v, self.n1, self.n2, self.k, self.lam, self.lam1, self.lam2)

    def to_dict(self):
        return {"v": self.v, "n1": self.n1, "n2": self.n2, "k": self.k,
                "lambda": self.lam, "lambda1": self.lam1, "lambda2": self.lam2}

    def __str__(self):
        return f"({self.v}; {self.n1}, {self.n2}; {self.k}, {self.lam}; {self.lam1}, {self.lam2})"


def cyclic_difference_counts(logs, order):
    """Coefficients of D D^(-1) in Z_order, diagonal included."""
    logs = np.asarray(logs, dtype=np.int64)
    diffs = (logs[:, None] - logs[None, :]) % order
    return np.bincount(diffs.ravel(), minlength=order).astype(np.int64)


def verify_cyclic_design(logs, order, subgroup_order, k, lam_in, lam_out, name):
    """Divisible difference set check in Z_order relative to its subgroup of the given order.

    lam_in counts non-identity subgroup elements, lam_out everything else;
    relative difference sets have lam_in = 0 and ordinary difference sets
    use subgroup_order = 1.
    """
    logs = np.asarray(logs, dtype=np.int64) % order
    params = {"order": order, "subgroup_order": subgroup_order, "k": k,
              "lambda_in": lam_in, "lambda_out": lam_out}
    if np.unique(logs).size != logs.size:
        return PropertyReport(name, False, {"reason": "repeated elements"}, params)
    if logs.size != k:
        return PropertyReport(name, False, {"reason": "size", "size": int(logs.size), "expected": k}, params)
    if order % subgroup_order:
        raise DesignError(f"no subgroup of order {subgroup_order} in Z_{order}")
    expected = np.full(order, lam_out, dtype=np.int64)
    expected[:: order // subgroup_order] = lam_in
    expected[0] = k
    actual = cyclic_difference_counts(logs, order)
    mismatch = np.nonzero(actual != expected)[0]
    if mismatch.size:
        g = int(mismatch[0])
        return PropertyReport(name, False, {"element": g, "expected": int(expected[g]),
                                            "actual": int(actual[g])}, params)
    return PropertyReport(name, True, None, params)
