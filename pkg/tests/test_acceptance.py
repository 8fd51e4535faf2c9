"""End-to-end runs over the trace, Lin, Helleseth-Gong and product families."""

import pytest

from algebra.finite_field import build_field
from algebra.group_ring import verify_cyclic_design
from checks.characters import character_spectrum, expected_values
from checks.designs import graph_set, oracle_precheck, preimage_rds, singer_projection, verify_graph_set
from checks.multipliers import find_function_multipliers, function_multiplier_theorem, theorem_multipliers
from checks.properties import check_properties, is_difference_balanced
from checks.sequences import autocorrelation_all, ideal_counts, is_ideal_two_level, to_sequence
from constructions.functions import helleseth_gong, helleseth_gong_readings, lin_function, trace_function
from constructions.products import rds_product, trace_preimages
from dbf import main
from search.enumerator import SearchConfig, enumerate_db
from utils.serialization import ArtifactIO

TRACE_FIELDS = [(3, 1, 2), (3, 1, 3), (5, 1, 2), (3, 2, 2)]


def _gds_params(q, n):
    return {"v": q * (q ** n - 1), "n1": q, "n2": q ** n - 1, "k": q ** n - 1,
            "lambda": q ** (n - 1), "lambda1": 0, "lambda2": q ** (n - 1) - 1}


@pytest.mark.parametrize("p, m, n", TRACE_FIELDS)
def test_trace_suite(p, m, n):
    spec = build_field(p, m, n)
    f = trace_function(spec)
    reports = check_properties(f, ["balance", "db", "hom", "ttb"])
    assert all(reports), [r.to_dict() for r in reports if not r]
    assert reports[2].witness == 1
    gds = verify_graph_set(f)
    assert gds.verdict
    assert gds.details["params"] == _gds_params(spec.q, n)


@pytest.mark.parametrize("p, m, n", TRACE_FIELDS)
def test_trace_character_table(p, m, n):
    spec = build_field(p, m, n)
    spectrum = character_spectrum(spec, graph_set(trace_function(spec)))
    assert spectrum.report().verdict
    assert spectrum.max_float_error() < 1e-6
    assert sorted(set(expected_values(spec.q, n).values())) == sorted({(spec.q ** n - 1) ** 2, 0, 1, spec.q ** n})


def _lin_suite(n, rds_params, singer_params):
    spec = build_field(3, 1, n)
    f = lin_function(spec)
    assert is_difference_balanced(f).verdict
    s = to_sequence(f)
    assert is_ideal_two_level(s).verdict
    expected = ideal_counts(3, s.period).tolist()
    entries = autocorrelation_all(s)
    assert entries[0].counts[0] == s.period
    assert all(list(e.counts) == expected for e in entries[1:])
    assert all(e.exact_value == -1 for e in entries[1:])
    for b in spec.subfield_elements()[1:]:
        C, report = preimage_rds(f, b)
        assert report.verdict
        assert report.details["params"] == rds_params
    C, _ = preimage_rds(f, spec.one())
    _, singer = singer_projection(spec, C)
    assert singer.verdict
    assert singer.details["params"] == singer_params
    spectrum = character_spectrum(spec, graph_set(f))
    assert spectrum.report().verdict
    assert spectrum.max_float_error() < 1e-6


def test_lin_suite_n3():
    _lin_suite(3, [13, 2, 9, 3], [13, 9, 6])


@pytest.mark.slow
def test_lin_suite_n5():
    _lin_suite(5, [121, 2, 81, 27], [121, 81, 54])


@pytest.mark.parametrize("p", [3, 5])
def test_helleseth_gong_validates(p):
    spec = build_field(p, 1, 3)
    readings = helleseth_gong_readings(spec, 1, 1)
    assert any(report.verdict for report in readings.values())
    assert is_difference_balanced(helleseth_gong(spec, 1, 1)).verdict


def test_multiplier_theorem(gf9, trace9, gf27, trace27, lin27):
    found = {t for t, _ in find_function_multipliers(gf9, graph_set(trace9))}
    assert {11, 19} <= found
    for spec, f in ((gf9, trace9), (gf27, trace27), (gf27, lin27)):
        report = function_multiplier_theorem(spec, graph_set(f))
        assert report.verdict
        assert sorted(report.witness["translates"]) == theorem_multipliers(3, spec.n)


def test_full_search_has_no_counterexamples(gf9):
    report = enumerate_db(SearchConfig(gf9, chunk_size=2048))
    assert report.visited == report.total_candidates == 6561
    assert report.flags == 0
    assert report.report().verdict


def test_product_construction():
    spec = build_field(3, 1, 4)
    D1, D2 = trace_preimages(spec, 2)
    product = rds_product(spec, D1, D2, 2)
    report = verify_cyclic_design(product, 80, 2, 27, 0, 9, "relative_difference_set")
    assert report.verdict


def test_oracle_precheck_runs_before_formulas(gds_oracle):
    assert oracle_precheck()["constant_term"] == gds_oracle["constant_term"] == 9


def test_reports_are_byte_identical_on_repeat(tmp_path):
    outputs = []
    for _ in range(2):
        table = tmp_path / "trace.json"
        checks = tmp_path / "checks.json"
        design = tmp_path / "design.json"
        assert main(["construct", "--family", "trace", "--p", "3", "--n", "3", "-o", str(table)]) == 0
        first_table = table.read_bytes()
        assert main(["check", "--in", str(table), "-o", str(checks)]) == 0
        assert main(["design", "--in", str(table), "-o", str(design)]) == 0
        outputs.append((first_table, checks.read_bytes(), design.read_bytes()))
    assert outputs[0] == outputs[1]
    assert ArtifactIO.validate(ArtifactIO.load(design)) == []


def test_search_report_is_byte_identical_on_repeat(tmp_path):
    out = tmp_path / "search.json"
    texts = []
    for _ in range(2):
        assert main(["-q", "search", "--p", "3", "--n", "2", "--mode", "homogeneous", "-o", str(out)]) == 0
        texts.append(out.read_bytes())
    assert texts[0] == texts[1]
    assert texts[0].endswith(b"\n")
