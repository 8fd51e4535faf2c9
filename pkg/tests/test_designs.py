import numpy as np
import pytest

from algebra.finite_field import build_field
from algebra.function_table import FunctionTable
from algebra.group_ring import DesignParams, ProductGroup
from checks.designs import (all_preimages, graph_set, oracle_precheck, preimage_rds, prime_subfield_indices,
                            project, quotient_group, singer_complement, singer_projection, verify_gds,
                            verify_graph_set)
from checks.properties import homogeneity_degree, is_difference_balanced
from constructions.functions import affine_shift, constant_function, trace_function
from errors import DesignError
from search.enumerator import decode_full


def test_oracle_matches_recorded_fixture(gds_oracle, gf9):
    result = oracle_precheck()
    assert result["coefficients"] == gds_oracle["coefficients"]
    assert result["constant_term"] == gds_oracle["constant_term"]
    assert result["params"] == gds_oracle["params"]
    assert gf9.to_dict() == gds_oracle["field"]


def test_graph_set_has_one_point_per_exponent(trace9):
    D = graph_set(trace9)
    assert len(D) == 8
    assert (np.diff(D) > 0).all()
    assert (D // 3).tolist() == list(range(8))


def test_trace_graph_is_generalized_difference_set(trace9, trace27):
    for f in (trace9, trace27):
        report = verify_graph_set(f)
        assert report.verdict
    assert verify_graph_set(trace9).details["params"]["lambda"] == 3


def test_constant_graph_fails_with_witness(gf9):
    report = verify_graph_set(constant_function(gf9))
    assert not report.verdict
    # every (a, 0) difference occurs 8 times instead of lambda2 = 2
    assert report.witness == {"element": [1, 0], "expected": 2, "actual": 8}


def test_gds_parameter_guards(gf9, trace9):
    group = ProductGroup.for_field(gf9)
    D = graph_set(trace9)
    N1, N2 = group.add_subgroup(), group.mult_subgroup()
    with pytest.raises(DesignError):
        verify_gds(group, D, DesignParams(24, 3, 8, 8, 4, 0, 2), N1, N2)
    with pytest.raises(DesignError):
        verify_gds(group, D, DesignParams.difference_balanced(3, 3), N1, N2)
    with pytest.raises(DesignError):
        verify_gds(group, D, DesignParams.difference_balanced(3, 2), N1, np.concatenate([N2, [1]]))


def test_gds_size_mismatch(gf9, trace9):
    group = ProductGroup.for_field(gf9)
    report = verify_gds(group, graph_set(trace9)[:-1], DesignParams.difference_balanced(3, 2),
                        group.add_subgroup(), group.mult_subgroup())
    assert report.witness["reason"] == "size"


def test_projection_onto_prime_field(gf81_over_9):
    spec = gf81_over_9
    H = prime_subfield_indices(spec)
    assert len(H) == 3
    image, predicted, report = project(spec, graph_set(trace_function(spec)), DesignParams.difference_balanced(9, 2), H)
    assert predicted.as_tuple() == (240, 3, 80, 80, 27, 0, 26)
    assert len(image) == 80
    assert report.verdict
    assert report.details["subgroup_order"] == 3


def test_projection_guards(gf81_over_9):
    spec = gf81_over_9
    with pytest.raises(DesignError):
        quotient_group(spec, [0, 1])
    with pytest.raises(DesignError):
        project(spec, [], DesignParams(240, 3, 80, 80, 27, 1, 26), prime_subfield_indices(spec))


def test_quotient_by_whole_field_is_cyclic(gf9):
    group, labels = quotient_group(gf9, [0, 1, 2])
    assert group.size == 8
    assert labels.tolist() == [0, 0, 0]


def test_lin_preimages(lin27, gf27):
    C, report = preimage_rds(lin27, gf27.one())
    assert report.verdict
    assert report.details["params"] == [13, 2, 9, 3]
    assert len(C) == 9
    C0, report0 = preimage_rds(lin27, gf27.zero())
    assert report0.verdict
    assert report0.details["params"] == [13, 2, 8, 8, 2]


def test_preimage_needs_field_element(lin27):
    with pytest.raises(DesignError):
        preimage_rds(lin27, 1)


def test_singer_projection(lin27, gf27):
    C1, _ = preimage_rds(lin27, gf27.one())
    image, report = singer_projection(gf27, C1)
    assert report.verdict
    assert report.details["params"] == [13, 9, 6]
    assert len(image) == 9
    C0, _ = preimage_rds(lin27, gf27.zero())
    zero_image, zero_report = singer_projection(gf27, C0, zero_fiber=True)
    assert zero_report.verdict
    assert zero_report.details["params"] == [13, 4, 1]
    assert sorted(np.concatenate([image, zero_image]).tolist()) == list(range(13))


def test_singer_complement(lin27, gf27):
    assert singer_complement(lin27).verdict
    values = np.zeros(gf27.group_order, dtype=np.int64)
    values[0] = 1
    report = singer_complement(FunctionTable(gf27, values))
    assert not report.verdict
    assert report.witness == {"element": 0, "in_zero_image": True}


def test_all_preimages_of_trace(trace27):
    reports = all_preimages(trace27)
    assert len(reports) == 3
    assert [r.property_name for r in reports] == ["divisible_difference_set", "relative_difference_set",
                                                  "relative_difference_set"]
    assert all(reports)


@pytest.mark.slow
def test_lin_n5_designs():
    from constructions.functions import lin_function
    spec = build_field(3, 1, 5)
    f = lin_function(spec)
    C, report = preimage_rds(f, spec.one())
    assert report.details["params"] == [121, 2, 81, 27]
    assert report.verdict
    image, singer = singer_projection(spec, C)
    assert singer.details["params"] == [121, 81, 54]
    assert singer.verdict


def test_graph_of_shifted_trace_is_still_a_design(gf9, trace9):
    f = affine_shift(trace9, gf9.one())
    assert is_difference_balanced(f).verdict
    assert not homogeneity_degree(f).verdict
    assert verify_graph_set(f).verdict


@pytest.mark.slow
def test_graph_design_iff_difference_balanced_q3_n2(gf9):
    tables = decode_full(gf9, np.arange(3 ** gf9.group_order))
    balanced = 0
    for values in tables:
        f = FunctionTable(gf9, values)
        db = is_difference_balanced(f).verdict
        assert verify_graph_set(f).verdict == db, values.tolist()
        balanced += db
    assert balanced == 48
