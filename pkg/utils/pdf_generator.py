# utils/pdf_generator.py
"""
PDF verification report generation
"""

import io
from datetime import datetime

from reportlab.lib import colors
from reportlab.lib.enums import TA_CENTER
from reportlab.lib.pagesizes import A4
from reportlab.lib.styles import ParagraphStyle, getSampleStyleSheet
from reportlab.lib.units import inch
from reportlab.platypus import PageBreak, Paragraph, SimpleDocTemplate, Spacer, Table, TableStyle

from config import REPORT_ROW_LIMIT, REPORT_STYLES
from utils.tables import SummaryTables


class PDFReportGenerator:
    """Renders property, design and search artifacts into one PDF"""

    def __init__(self):
        self.styles = getSampleStyleSheet()
        self._setup_custom_styles()

    def _setup_custom_styles(self):
        self.styles.add(ParagraphStyle(
            name='CustomTitle',
            parent=self.styles['Title'],
            fontSize=22,
            spaceAfter=24,
            alignment=TA_CENTER,
            textColor=colors.HexColor(REPORT_STYLES['title'])
        ))
        self.styles.add(ParagraphStyle(
            name='SectionHeader',
            parent=self.styles['Heading1'],
            fontSize=16,
            spaceAfter=12,
            spaceBefore=20,
            textColor=colors.HexColor(REPORT_STYLES['section'])
        ))
        self.styles.add(ParagraphStyle(
            name='SubsectionHeader',
            parent=self.styles['Heading2'],
            fontSize=13,
            spaceAfter=8,
            spaceBefore=12,
            textColor=colors.HexColor(REPORT_STYLES['subsection'])
        ))

    def generate_report(self, artifacts):
        """artifacts: list of (name, artifact dict). Returns a BytesIO holding the PDF."""
        buffer = io.BytesIO()
        doc = SimpleDocTemplate(buffer, pagesize=A4, topMargin=1 * inch)
        story = []
        story.extend(self._create_header())
        story.extend(self._create_summary(artifacts))
        for position, (name, artifact) in enumerate(artifacts):
            if position:
                story.append(PageBreak())
            story.extend(self._create_artifact_section(name, artifact))
        doc.build(story)
        buffer.seek(0)
        return buffer

    def _create_header(self):
        elements = [Paragraph("Difference Balanced Functions: Verification Report", self.styles['CustomTitle'])]
        date_str = datetime.now().strftime("%B %d, %Y at %I:%M %p")
        elements.append(Paragraph(f"Generated on: {date_str}", self.styles['Normal']))
        elements.append(Spacer(1, 20))
        return elements

    def _create_summary(self, artifacts):
        elements = [Paragraph("Summary", self.styles['SectionHeader'])]
        rows = [['Artifact', 'Kind', 'Field', 'Checks passed']]
        for name, artifact in artifacts:
            reports = self._reports_of(artifact)
            passed = sum(1 for r in reports if r["verdict"])
            rows.append([name[:30], artifact.get("kind", "?"), self._field_label(artifact),
                         f"{passed}/{len(reports)}" if reports else "-"])
        elements.append(self._styled_table(rows, REPORT_STYLES['header_table'], [2.2 * inch, 1.6 * inch, 1.6 * inch, 1.2 * inch]))
        elements.append(Spacer(1, 20))
        return elements

    def _create_artifact_section(self, name, artifact):
        elements = [Paragraph(name, self.styles['SectionHeader'])]
        manifest = artifact.get("manifest", {})
        elements.append(Paragraph(
            f"<b>Field:</b> {self._field_label(artifact)}<br/>"
            f"<b>Command:</b> {manifest.get('subcommand', '?')}<br/>"
            f"<b>Tool version:</b> {manifest.get('tool_version', '?')}", self.styles['Normal']))
        elements.append(Spacer(1, 10))
        reports = self._reports_of(artifact)
        if reports:
            elements.append(Paragraph("Checks", self.styles['SubsectionHeader']))
            frame = SummaryTables.reports_frame(reports)
            all_pass = all(r["verdict"] for r in reports)
            header = REPORT_STYLES['header_pass'] if all_pass else REPORT_STYLES['header_fail']
            rows = [list(frame.columns)] + [[row.property, row.verdict, self._truncate(row.witness, 60)]
                                            for row in frame.head(REPORT_ROW_LIMIT).itertuples()]
            elements.append(self._styled_table(rows, header, [2.2 * inch, 0.8 * inch, 3.6 * inch]))
        if artifact.get("kind") == "search_report":
            elements.extend(self._create_search_section(artifact))
        return elements

    def _create_search_section(self, search):
        elements = [Paragraph("Search", self.styles['SubsectionHeader'])]
        elements.append(Paragraph(
            f"Mode: {search['mode']} ({search['restriction']})<br/>"
            f"Visited {search['visited']:,} of {search['total_candidates']:,} candidates; "
            f"{search['db_count']:,} difference balanced; "
            f"{search['equivalence_classes']['count']} classes under f(cx) + b; "
            f"<b>{search['counterexample_flags']} counterexample flags</b>", self.styles['Normal']))
        elements.append(Spacer(1, 10))
        survivors, degrees = SummaryTables.search_frame(search)
        rows = [list(degrees.columns)] + degrees.astype(str).values.tolist()
        elements.append(self._styled_table(rows, REPORT_STYLES['header_table'], [2 * inch, 2 * inch]))
        if len(survivors) > REPORT_ROW_LIMIT:
            elements.append(Paragraph(
                f"<i>Note: showing first {REPORT_ROW_LIMIT} survivors of {len(survivors)}</i>", self.styles['Normal']))
        rows = [list(survivors.columns)] + survivors.head(REPORT_ROW_LIMIT).astype(str).values.tolist()
        elements.append(Spacer(1, 10))
        elements.append(self._styled_table(rows, REPORT_STYLES['header_table'], [2 * inch, 2 * inch, 2 * inch]))
        return elements

    def _styled_table(self, rows, header_color, widths):
        table = Table(rows, colWidths=widths)
        table.setStyle(TableStyle([
            ('BACKGROUND', (0, 0), (-1, 0), colors.HexColor(header_color)),
            ('TEXTCOLOR', (0, 0), (-1, 0), colors.whitesmoke),
            ('ALIGN', (0, 0), (-1, -1), 'LEFT'),
            ('FONTNAME', (0, 0), (-1, 0), 'Helvetica-Bold'),
            ('FONTSIZE', (0, 0), (-1, 0), 10),
            ('BOTTOMPADDING', (0, 0), (-1, 0), 8),
            ('GRID', (0, 0), (-1, -1), 0.5, colors.black),
            ('FONTSIZE', (0, 1), (-1, -1), 8),
            ('ROWBACKGROUNDS', (0, 1), (-1, -1), [colors.white, colors.lightgrey]),
            ('VALIGN', (0, 0), (-1, -1), 'TOP'),
        ]))
        return table

    @staticmethod
    def _reports_of(artifact):
        if "reports" in artifact:
            return artifact["reports"]
        if "report" in artifact:
            return [artifact["report"]]
        return []

    @staticmethod
    def _field_label(artifact):
        field = artifact.get("field") or artifact.get("manifest", {}).get("field")
        if not field:
            return "-"
        return f"GF({field['p']}^{field['m'] * field['n']}) / GF({field['p']}^{field['m']})"

    @staticmethod
    def _truncate(text, width):
        return text if len(text) <= width else text[:width] + '...'
