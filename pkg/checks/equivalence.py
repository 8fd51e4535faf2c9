# checks/equivalence.py
"""
The four equivalent characterisations of homogeneous difference balanced functions
"""

import logging

import pandas as pd

from checks.designs import all_preimages, graph_set, verify_graph_set
from checks.multipliers import multiplier_check
from checks.properties import homogeneity_degree, is_difference_balanced, is_two_tuple_balanced

logger = logging.getLogger(__name__)

CONDITIONS = ["i", "ii", "iii", "iv"]


def condition_i(f):
    """Difference balanced and d-homogeneous."""
    return bool(is_difference_balanced(f).verdict and homogeneity_degree(f).verdict)


def condition_ii(f):
    """Two-tuple balanced."""
    return bool(is_two_tuple_balanced(f)[0].verdict)


def condition_iii(f):
    """The graph set is a generalized difference set and every (1, t) is a multiplier with a translate (a, 0)."""
    if not verify_graph_set(f).verdict:
        return False
    D = graph_set(f)
    for t in range(1, f.spec.q):
        report = multiplier_check(f.spec, D, 1, t)
        if not (report.verdict and report.details["additive_part_zero"]):
            return False
    return True


def condition_iv(f):
    """Every fiber passes its relative (b != 0) or divisible (b = 0) difference set check."""
    return all(report.verdict for report in all_preimages(f))


def evaluate(f):
    return {name: check(f) for name, check in zip(CONDITIONS, (condition_i, condition_ii, condition_iii, condition_iv))}


def equivalence_battery(corpus):
    """One row per labelled table; 'agree' is False when the four conditions disagree."""
    rows = []
    for label, f in corpus.items():
        verdicts = evaluate(f)
        agree = len(set(verdicts.values())) == 1
        if not agree:
            logger.warning("conditions disagree on %s: %s", label, verdicts)
        rows.append({"label": label, "q": f.spec.q, "n": f.spec.n, **verdicts, "agree": agree})
    return pd.DataFrame(rows, columns=["label", "q", "n", *CONDITIONS, "agree"])


def count_disagreements(battery):
    return int((~battery["agree"]).sum())
