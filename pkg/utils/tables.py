# utils/tables.py
"""
Tabular summaries of reports for text output and the PDF report
"""

import json

import pandas as pd

from checks.properties import balanced_counts, value_counts
from checks.report import to_jsonable


class SummaryTables:
    """Builds pandas frames from reports and artifacts."""

    @staticmethod
    def reports_frame(reports):
        """One row per report dict: property, verdict, compact witness."""
        rows = []
        for report in reports:
            witness = report.get("witness")
            rows.append({
                "property": report["property"],
                "verdict": "pass" if report["verdict"] else "FAIL",
                "witness": "" if witness is None else json.dumps(to_jsonable(witness), sort_keys=True),
            })
        return pd.DataFrame(rows, columns=["property", "verdict", "witness"])

    @staticmethod
    def value_counts_frame(f):
        spec = f.spec
        return pd.DataFrame({
            "value": [str(e) for e in spec.subfield_elements()],
            "count": value_counts(f),
            "balanced": balanced_counts(spec),
        })

    @staticmethod
    def autocorrelation_frame(rows):
        return pd.DataFrame(rows, columns=["tau", "value", "counts"])

    @staticmethod
    def search_frame(search):
        """Survivors of a search report dict with the degree distribution."""
        survivors = pd.DataFrame(search.get("survivors", []), columns=["candidate", "shift", "degree"])
        labels = survivors["degree"].map(lambda d: "NONE" if pd.isna(d) else str(int(d)))
        degrees = (labels.value_counts()
                   .rename_axis("degree").reset_index(name="survivors"))
        return survivors, degrees

    @staticmethod
    def pass_rate(reports):
        if not reports:
            return 0.0
        return sum(1 for r in reports if r["verdict"]) / len(reports) * 100

    @staticmethod
    def render(df, limit=None):
        shown = df if limit is None else df.head(limit)
        return shown.to_string(index=False)
