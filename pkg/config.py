# config.py
"""
Configuration settings for the difference balanced functions toolkit
"""

TOOL_VERSION = "1.0.0"

# Finite fields
MAX_FIELD_ORDER = 2 ** 24
ZERO_LOG = -1

# Search
SEARCH_CANDIDATE_BUDGET = 10 ** 9
CHECKPOINT_INTERVAL = 10 ** 6
SEARCH_CHUNK_SIZE = 4096
# without --chunk-size, full and homogeneous runs split into this many chunks per worker
CHUNKS_PER_WORKER = 8
DEFAULT_WORKERS = 1
SEARCH_MODES = ["full", "homogeneous", "random"]

# Character sums are exact integers; complex evaluation is a cross-check only
FLOAT_TOLERANCE = 1e-6

PROPERTY_NAMES = {
    "balance": "balanced",
    "db": "difference_balanced",
    "hom": "homogeneity_degree",
    "ttb": "two_tuple_balanced",
    "shift": "balanced_shift",
    "fibers": "fiber_square_identity",
}

DESIGN_CHECKS = ["gds", "rds", "dds", "singer", "chars", "multipliers", "project"]

FAMILIES = ["trace", "hg", "lin", "product"]

LOG_FORMAT = "%(asctime)s %(levelname)s %(name)s: %(message)s"

JSON_INDENT = 2

REPORT_STYLES = {
    "title": "#1f77b4",
    "section": "#2c3e50",
    "subsection": "#34495e",
    "header_pass": "#27ae60",
    "header_fail": "#c0392b",
    "header_table": "#3498db",
}
REPORT_ROW_LIMIT = 50
