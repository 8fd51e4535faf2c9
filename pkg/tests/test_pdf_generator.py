from checks.properties import check_properties
from search.enumerator import SearchConfig, enumerate_db
from utils.pdf_generator import PDFReportGenerator
from utils.serialization import ArtifactIO, RunManifest


def test_report_renders_property_and_search_artifacts(trace9, gf9):
    reports = [r.to_dict() for r in check_properties(trace9, ["balance", "db", "hom"])]
    checks = ArtifactIO.envelope("property_reports", RunManifest("check", {}, [], None, gf9),
                                 {"field": gf9.to_dict(), "label": trace9.label, "reports": reports})
    search = enumerate_db(SearchConfig(gf9, mode="homogeneous"))
    payload = search.to_dict()
    payload["report"] = search.report().to_dict()
    search_artifact = ArtifactIO.envelope("search_report", RunManifest("search", {}, [], None, gf9), payload)

    buffer = PDFReportGenerator().generate_report([("checks.json", checks), ("search.json", search_artifact)])
    data = buffer.getvalue()
    assert data.startswith(b"%PDF")
    assert len(data) > 1000


def test_field_label_and_truncation():
    assert PDFReportGenerator._field_label({"field": {"p": 3, "m": 2, "n": 2}}) == "GF(3^4) / GF(3^2)"
    assert PDFReportGenerator._field_label({}) == "-"
    assert PDFReportGenerator._truncate("x" * 70, 60) == "x" * 60 + "..."
