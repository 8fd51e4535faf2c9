import numpy as np
import pytest

from algebra.group_ring import ProductGroup
from checks.designs import graph_set
from checks.multipliers import (apply_multiplier, find_function_multipliers, find_translates,
                                function_multiplier_theorem, multiplier_check, pair_form, theorem_multipliers)
from constructions.functions import affine_shift, trace_function
from errors import DesignError


def test_theorem_multipliers():
    assert theorem_multipliers(3, 2) == [11, 19]
    assert theorem_multipliers(5, 2) == [29, 53, 77, 101]


def test_pair_form(gf9):
    assert pair_form(gf9, 11) == (3, 2)
    assert pair_form(gf9, 19) == (3, 1)


def test_trace_multipliers(gf9, trace9):
    found = [t for t, _ in find_function_multipliers(gf9, graph_set(trace9))]
    assert found == [1, 11, 17, 19]
    assert {11, 19} <= set(found)


def test_multiplier_theorem_for_trace_and_lin(trace9, gf27, trace27, lin27):
    assert function_multiplier_theorem(trace9.spec, graph_set(trace9)).verdict
    for f in (trace27, lin27):
        report = function_multiplier_theorem(gf27, graph_set(f))
        assert report.verdict
        assert set(report.witness["translates"]) == {29, 55}


def test_subfield_multipliers_have_zero_additive_translate(gf9, trace9):
    D = graph_set(trace9)
    for t in (1, 2):
        report = multiplier_check(gf9, D, 1, t)
        assert report.verdict
        assert report.details["additive_part_zero"]
        assert report.witness["zero_additive_translate"][1] == 0


def test_shifted_graph_needs_additive_translate(gf9, trace9):
    D = graph_set(affine_shift(trace9, gf9.one()))
    report = multiplier_check(gf9, D, 1, gf9.element(4))
    assert report.verdict
    assert not report.details["additive_part_zero"]
    assert report.witness["translate"] == [4, 1]


def test_multiplier_preconditions(gf9, trace9, gf81_over_9):
    D = graph_set(trace9)
    with pytest.raises(DesignError):
        multiplier_check(gf9, D, 2, 1)
    with pytest.raises(DesignError):
        multiplier_check(gf9, D, 1, 0)
    with pytest.raises(DesignError):
        find_function_multipliers(gf81_over_9, graph_set(trace_function(gf81_over_9)))


def test_find_translates_recovers_translation(gf9, trace9):
    group = ProductGroup.for_field(gf9)
    D = graph_set(trace9)
    g = int(group.index(5, 2))
    image = np.sort(group.compose(g, D))
    assert g in find_translates(group, D, image).tolist()
    assert find_translates(group, D, image[:-1]).size == 0


def test_identity_multiplier_is_trivial(gf9, trace9):
    D = graph_set(trace9)
    assert np.array_equal(apply_multiplier(gf9, D, 1, 1), D)
