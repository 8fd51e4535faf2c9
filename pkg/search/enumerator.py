# search/enumerator.py
"""
Enumeration of difference balanced functions GF(q^n)* -> GF(q)
"""

import json
import logging
import math
import time
from dataclasses import dataclass, field
from multiprocessing import Pool
from pathlib import Path
from typing import Optional

import numpy as np
from tqdm import tqdm

from algebra.finite_field import FieldSpec
from algebra.function_table import FunctionTable
from checks.equivalence import evaluate
from checks.properties import admissible_degrees, balanced_counts, balanced_shift, homogeneity_degree
from checks.report import PropertyReport
from config import (CHECKPOINT_INTERVAL, CHUNKS_PER_WORKER, DEFAULT_WORKERS, JSON_INDENT,
                    SEARCH_CANDIDATE_BUDGET, SEARCH_CHUNK_SIZE, SEARCH_MODES)
from errors import ArtifactError, SearchBudgetError
from search.schedule import prune_order

logger = logging.getLogger(__name__)

COUNTEREXAMPLE_FLAG = "CONJECTURE-COUNTEREXAMPLE"

RESTRICTIONS = {
    "full": "every function, as base-q counters over the q^n - 1 positions",
    "homogeneous": ("d-homogeneous functions only: d ranges over degrees coprime to q - 1, each coset "
                    "x GF(q)* has a representative r with tr(r) in {0, 1}, f(r) ranges over GF(p) and "
                    "f(a r) = a^d f(r); candidate count #d * p^((q^n-1)/(q-1))"),
    "random": "uniformly random tables drawn from a seeded generator; not exhaustive",
}


@dataclass
class SearchConfig:
    spec: FieldSpec
    mode: str = "full"
    worker_count: int = DEFAULT_WORKERS
    report_path: Optional[Path] = None
    budget: int = SEARCH_CANDIDATE_BUDGET
    checkpoint_path: Optional[Path] = None
    checkpoint_interval: int = CHECKPOINT_INTERVAL
    chunk_size: Optional[int] = None
    seed: Optional[int] = None
    samples: Optional[int] = None
    progress: bool = False

    def __post_init__(self):
        if self.mode not in SEARCH_MODES:
            raise SearchBudgetError(f"unknown mode {self.mode!r}; choose from {', '.join(SEARCH_MODES)}")
        if self.mode == "random" and (self.seed is None or self.samples is None):
            raise SearchBudgetError("random mode needs both a seed and a sample count")
        if self.worker_count < 1:
            raise SearchBudgetError("worker_count must be at least 1")
        if self.chunk_size is not None and self.chunk_size < 1:
            raise SearchBudgetError("chunk_size must be at least 1")

    def effective_chunk_size(self, total):
        """Candidates per task: the given chunk size, else enough chunks to keep every worker busy."""
        if self.chunk_size is not None:
            return self.chunk_size
        return min(SEARCH_CHUNK_SIZE, max(1, math.ceil(total / (self.worker_count * CHUNKS_PER_WORKER))))

    def candidate_count(self):
        spec = self.spec
        if self.mode == "full":
            return spec.q ** spec.group_order
        if self.mode == "homogeneous":
            return len(admissible_degrees(spec.q)) * spec.p ** spec.stride
        return int(self.samples)

    def check_budget(self):
        total = self.candidate_count()
        if total > self.budget:
            raise SearchBudgetError(f"{self.mode} mode needs {total} candidates, over the budget {self.budget}")
        return total


@dataclass
class SearchReport:
    """Tallies and per-survivor verdicts; wall_time is logged, never serialised."""
    spec: FieldSpec
    mode: str
    total_candidates: int
    visited: int = 0
    db_count: int = 0
    survivors: list = field(default_factory=list)
    counterexamples: list = field(default_factory=list)
    classes: list = field(default_factory=list)
    seed: Optional[int] = None
    disagreements: Optional[int] = None
    wall_time: float = 0.0

    @property
    def complete(self):
        return self.visited == self.total_candidates

    @property
    def flags(self):
        return len(self.counterexamples)

    def to_dict(self):
        return {
            "field": self.spec.to_dict(),
            "mode": self.mode,
            "restriction": RESTRICTIONS[self.mode],
            "exhaustive": self.mode == "full" and self.complete,
            "seed": self.seed,
            "total_candidates": self.total_candidates,
            "visited": self.visited,
            "db_count": self.db_count,
            "counterexample_flags": self.flags,
            "equivalence_disagreements": self.disagreements,
            "survivors": self.survivors,
            "counterexamples": self.counterexamples,
            "equivalence_classes": {
                "count": len(self.classes),
                "representatives": [c["representative"] for c in self.classes],
                "sizes": [c["size"] for c in self.classes],
            },
        }

    def report(self):
        """Conjecture verdict: no DB survivor lacks a homogeneous balanced shift."""
        return PropertyReport("gong_song", self.flags == 0,
                              None if self.flags == 0 else {"counterexamples": self.counterexamples[:1]},
                              {"db_count": self.db_count, "visited": self.visited})


# -- candidate decoding ----------------------------------------------------

def coset_representatives(spec):
    """Exponent of the trace-normalised representative of each coset theta^j GF(q)*, j < stride."""
    M, V = spec.group_order, spec.stride
    j = np.arange(V, dtype=np.int64)
    traces = spec.to_subfield_index(spec.rel_trace_logs(j))
    # divide by tr(theta^j) so the representative has trace 1
    trace_logs = spec.subfield_logs[traces]
    return np.where(traces == 0, j, (j - trace_logs) % M)


def decode_full(spec, indices):
    indices = np.asarray(indices, dtype=np.int64)
    powers = spec.q ** np.arange(spec.group_order, dtype=np.int64)
    return (indices[:, None] // powers[None, :]) % spec.q


def decode_homogeneous(spec, indices):
    indices = np.asarray(indices, dtype=np.int64)
    M, V, p, q = spec.group_order, spec.stride, spec.p, spec.q
    degrees = np.array(admissible_degrees(q), dtype=np.int64)
    per_degree = p ** V
    d = degrees[indices // per_degree]
    digits = ((indices % per_degree)[:, None] // (p ** np.arange(V, dtype=np.int64))[None, :]) % p
    # residue -> subfield index
    residue_index = spec.to_subfield_index(spec.log_table[np.arange(p)])
    rep_values = residue_index[digits]
    reps = coset_representatives(spec)
    tables = np.empty((len(indices), M), dtype=np.int64)
    for t in range(q - 1):
        positions = (reps + t * spec.stride) % M
        scale = (t * d) % (q - 1) + 1
        tables[:, positions] = spec.sub_mul[scale[:, None], rep_values]
    return tables


def decode_random(spec, start, stop, seed):
    # tables come from fixed blocks seeded by (seed, block), so chunking never changes a draw
    block = SEARCH_CHUNK_SIZE
    parts = []
    for b in range(start // block, (stop - 1) // block + 1):
        rng = np.random.default_rng([seed, b])
        rows = rng.integers(0, spec.q, size=(block, spec.group_order), dtype=np.int64)
        lo, hi = max(start, b * block) - b * block, min(stop, (b + 1) * block) - b * block
        parts.append(rows[lo:hi])
    return np.concatenate(parts) if parts else np.empty((0, spec.group_order), dtype=np.int64)


def decode(spec, mode, start, stop, seed=None):
    if mode == "full":
        return decode_full(spec, np.arange(start, stop))
    if mode == "homogeneous":
        return decode_homogeneous(spec, np.arange(start, stop))
    return decode_random(spec, start, stop, seed)


def decode_candidate(config, index):
    """The FunctionTable visited at a candidate index."""
    values = decode(config.spec, config.mode, index, index + 1, config.seed)[0]
    return FunctionTable(config.spec, values, f"{config.mode} candidate {index}")


# -- batch checks -----------------------------------------------------------

def db_mask(spec, tables, schedule=None):
    """Difference balance of many tables at once, pruning rows at each shift."""
    tables = np.asarray(tables, dtype=np.int64)
    schedule = prune_order(spec) if schedule is None else schedule
    M, q = spec.group_order, spec.q
    expected = balanced_counts(spec)
    alive = np.arange(len(tables))
    positions = np.arange(M)
    for j in schedule:
        rows = tables[alive]
        diffs = spec.sub_sub[rows[:, (positions + j) % M], rows]
        offsets = (np.arange(len(alive)) * q)[:, None]
        counts = np.bincount((diffs + offsets).ravel(), minlength=len(alive) * q).reshape(len(alive), q)
        alive = alive[np.all(counts == expected[None, :], axis=1)]
        if alive.size == 0:
            break
    mask = np.zeros(len(tables), dtype=bool)
    mask[alive] = True
    return mask


def _scan_range(task):
    """Worker entry point: (field dict, mode, start, stop, seed, chunk id) -> survivor records."""
    field_dict, mode, start, stop, seed, chunk = task
    spec = FieldSpec.from_dict(field_dict)
    tables = decode(spec, mode, start, stop, seed)
    mask = db_mask(spec, tables)
    survivors, counterexamples = [], []
    for offset in np.nonzero(mask)[0]:
        f = FunctionTable(spec, tables[offset])
        shift = balanced_shift(f)
        record = {"candidate": start + int(offset), "shift": None, "degree": None}
        if shift.verdict:
            b = shift.witness["index"]
            record["shift"] = shift.witness["shift"]
            g = FunctionTable(spec, spec.sub_sub[f.values, b])
            degree = homogeneity_degree(g)
            record["degree"] = degree.witness if degree.verdict else None
        survivors.append(record)
        if record["degree"] is None:
            counterexamples.append({"flag": COUNTEREXAMPLE_FLAG, "chunk": chunk, **record,
                                    "values": f.to_dict()["values"]})
    return start, stop, survivors, counterexamples


# -- equivalence classes ----------------------------------------------------

def orbit_keys(spec, values):
    """Byte keys of every f(cx) + b."""
    M = spec.group_order
    rotations = values[(np.arange(M)[:, None] + np.arange(M)[None, :]) % M]
    shifted = spec.sub_add[rotations[None, :, :], np.arange(spec.q)[:, None, None]]
    return {row.tobytes() for row in shifted.reshape(-1, M)}


def classify(config, survivors):
    """Group survivors under f -> f(cx) + b; representatives are the smallest candidate indices."""
    seen = {}
    classes = []
    for record in survivors:
        values = decode_candidate(config, record["candidate"]).values.astype(np.int64)
        key = values.tobytes()
        if key in seen:
            classes[seen[key]]["size"] += 1
            continue
        for variant in orbit_keys(config.spec, values):
            seen[variant] = len(classes)
        classes.append({"representative": record["candidate"], "size": 1})
    return classes


# -- checkpoints ------------------------------------------------------------

def write_checkpoint(path, config, report, next_candidate):
    state = {
        "kind": "search_checkpoint",
        "field": config.spec.to_dict(),
        "mode": config.mode,
        "seed": config.seed,
        "next_candidate": next_candidate,
        "visited": report.visited,
        "db_count": report.db_count,
        "survivors": report.survivors,
        "counterexamples": report.counterexamples,
    }
    path = Path(path)
    tmp = path.with_suffix(path.suffix + ".tmp")
    tmp.write_text(json.dumps(state, indent=JSON_INDENT, sort_keys=True))
    tmp.replace(path)
    logger.info("checkpoint at candidate %d written to %s", next_candidate, path)


def read_checkpoint(path, config):
    try:
        state = json.loads(Path(path).read_text())
    except json.JSONDecodeError as e:
        raise ArtifactError(f"{path} is not valid JSON: {e}") from e
    if state.get("kind") != "search_checkpoint":
        raise ArtifactError(f"{path} is not a search checkpoint")
    if state["field"] != config.spec.to_dict() or state["mode"] != config.mode or state["seed"] != config.seed:
        raise ArtifactError(f"{path} was written for a different field, mode or seed")
    return state


# -- driver -----------------------------------------------------------------

def _ranges(config, start, total):
    size = config.effective_chunk_size(total)
    for begin in range(start, total, size):
        yield (config.spec.to_dict(), config.mode, begin, min(begin + size, total), config.seed, begin // size)


def check_conditions(config, report):
    """Run the four characterisations on every survivor and count the ones where they disagree."""
    report.disagreements = 0
    for record in report.survivors:
        verdicts = evaluate(decode_candidate(config, record["candidate"]))
        record["conditions"] = verdicts
        if len(set(verdicts.values())) != 1:
            report.disagreements += 1
            logger.error("conditions disagree at candidate %d: %s", record["candidate"], verdicts)
    return report.disagreements


def enumerate_db(config, resume=None):
    """Visit every candidate of the configured mode and record difference balanced survivors.

    Each survivor gets its balanced shift b and the homogeneity degree of
    f - b; a survivor without a degree is a counterexample to the
    homogeneity conjecture and is dumped verbatim. Homogeneous runs also
    record the four equivalent characterisations of each survivor.
    """
    total = config.check_budget()
    spec = config.spec
    if config.mode == "random" or spec.m > 1:
        logger.warning("%s search over GF(%d^%d) is best-effort: %s", config.mode, spec.q, spec.n,
                       RESTRICTIONS[config.mode])
    report = SearchReport(spec, config.mode, total, seed=config.seed)
    start = 0
    if resume is not None:
        state = read_checkpoint(resume, config)
        start = state["next_candidate"]
        report.visited, report.db_count = state["visited"], state["db_count"]
        report.survivors, report.counterexamples = state["survivors"], state["counterexamples"]
        logger.info("resuming at candidate %d of %d", start, total)

    began = time.perf_counter()
    since_checkpoint = 0
    tasks = list(_ranges(config, start, total))
    pool = Pool(config.worker_count) if config.worker_count > 1 else None
    try:
        results = pool.imap(_scan_range, tasks) if pool else map(_scan_range, tasks)
        for begin, end, survivors, counterexamples in tqdm(results, total=len(tasks), unit="chunk",
                                                           disable=not config.progress):
            report.visited += end - begin
            report.db_count += len(survivors)
            report.survivors.extend(survivors)
            report.counterexamples.extend(counterexamples)
            for record in counterexamples:
                logger.error("%s at candidate %d", COUNTEREXAMPLE_FLAG, record["candidate"])
            since_checkpoint += end - begin
            if config.checkpoint_path and since_checkpoint >= config.checkpoint_interval:
                write_checkpoint(config.checkpoint_path, config, report, end)
                since_checkpoint = 0
    finally:
        if pool:
            pool.close()
            pool.join()

    report.classes = classify(config, report.survivors)
    if config.mode == "homogeneous":
        check_conditions(config, report)
    report.wall_time = time.perf_counter() - began
    logger.info("visited %d candidates, %d difference balanced, %d classes, %d flags in %.2fs",
                report.visited, report.db_count, len(report.classes), report.flags, report.wall_time)
    if config.checkpoint_path:
        write_checkpoint(config.checkpoint_path, config, report, total)
    return report


def recheck_closure(config, report, samples=4, seed=0):
    """f(cx) + b of sampled survivors are difference balanced again."""
    spec = config.spec
    rng = np.random.default_rng(seed)
    if not report.survivors:
        return PropertyReport("survivor_closure", True, None, {"sampled": 0})
    picks = rng.choice(len(report.survivors), size=min(samples, len(report.survivors)), replace=False)
    for pick in sorted(picks.tolist()):
        record = report.survivors[pick]
        values = decode_candidate(config, record["candidate"]).values
        c = int(rng.integers(spec.group_order))
        b = int(rng.integers(spec.q))
        variant = spec.sub_add[np.roll(values, -c), b]
        if not db_mask(spec, variant[None, :])[0]:
            return PropertyReport("survivor_closure", False, {"candidate": record["candidate"], "c": c, "b": b})
    return PropertyReport("survivor_closure", True, None, {"sampled": len(picks)})
