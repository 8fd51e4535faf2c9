import json
import os
import time

import numpy as np
import pytest

from algebra.finite_field import build_field
from algebra.function_table import FunctionTable
from checks.properties import homogeneity_degree
from constructions.functions import constant_function
from config import CHUNKS_PER_WORKER, SEARCH_CHUNK_SIZE
from errors import ArtifactError, SearchBudgetError
from search.enumerator import (COUNTEREXAMPLE_FLAG, SearchConfig, SearchReport, _ranges, classify,
                               coset_representatives, db_mask, decode_candidate, decode_full, decode_homogeneous,
                               decode_random, enumerate_db, orbit_keys, read_checkpoint, recheck_closure,
                               write_checkpoint)


def _candidate_index(f):
    return int(sum(int(v) * f.spec.q ** i for i, v in enumerate(f.values)))


@pytest.fixture(scope="module")
def full_search():
    config = SearchConfig(build_field(3, 1, 2), chunk_size=512)
    return config, enumerate_db(config)


def test_full_search_at_q3_n2(full_search, trace9):
    config, report = full_search
    assert report.total_candidates == 6561
    assert report.complete
    assert report.flags == 0
    assert report.db_count > 0
    assert report.db_count % 24 == 0
    assert _candidate_index(trace9) in {s["candidate"] for s in report.survivors}
    assert all(s["degree"] == 1 for s in report.survivors)
    assert report.report().verdict


def test_survivor_classes(full_search, trace9):
    config, report = full_search
    assert sum(c["size"] for c in report.classes) == report.db_count
    assert all(c["size"] == 24 for c in report.classes)
    data = report.to_dict()
    assert data["equivalence_classes"]["count"] == len(report.classes)
    assert data["exhaustive"]
    assert "wall_time" not in data


def test_survivors_are_closed_under_translation_and_shift(full_search):
    config, report = full_search
    assert recheck_closure(config, report, samples=6, seed=3).verdict


def test_worker_count_does_not_change_the_report(full_search):
    config, report = full_search
    parallel = enumerate_db(SearchConfig(config.spec, worker_count=2, chunk_size=512))
    assert parallel.to_dict() == report.to_dict()


def test_resume_from_checkpoint(full_search, tmp_path):
    config, report = full_search
    path = tmp_path / "search.ckpt.json"
    halfway = 3072
    partial = SearchReport(config.spec, "full", report.total_candidates, visited=halfway)
    partial.survivors = [s for s in report.survivors if s["candidate"] < halfway]
    partial.db_count = len(partial.survivors)
    write_checkpoint(path, config, partial, halfway)
    resumed = enumerate_db(config, resume=path)
    assert resumed.to_dict() == report.to_dict()


def test_checkpoint_is_written_during_run(tmp_path):
    path = tmp_path / "run.json"
    config = SearchConfig(build_field(3, 1, 2), mode="homogeneous", checkpoint_path=path,
                          checkpoint_interval=16, chunk_size=16)
    enumerate_db(config)
    state = json.loads(path.read_text())
    assert state["kind"] == "search_checkpoint"
    assert state["next_candidate"] == 81


def test_checkpoint_must_match_run(full_search, tmp_path):
    config, report = full_search
    path = tmp_path / "ckpt.json"
    write_checkpoint(path, config, report, 10)
    other = SearchConfig(config.spec, mode="homogeneous")
    with pytest.raises(ArtifactError):
        read_checkpoint(path, other)
    path.write_text("{not json")
    with pytest.raises(ArtifactError):
        read_checkpoint(path, config)


def test_homogeneous_mode_at_q3_n2():
    config = SearchConfig(build_field(3, 1, 2), mode="homogeneous")
    report = enumerate_db(config)
    assert report.total_candidates == 81
    assert report.flags == 0
    assert report.db_count > 0
    assert report.to_dict()["restriction"].startswith("d-homogeneous")
    assert report.disagreements == 0
    assert all(s["conditions"] == {"i": True, "ii": True, "iii": True, "iv": True} for s in report.survivors)


def test_full_mode_skips_the_condition_pass(full_search):
    config, report = full_search
    assert report.disagreements is None
    assert report.to_dict()["equivalence_disagreements"] is None


def test_homogeneous_candidate_count_q9():
    assert SearchConfig(build_field(3, 2, 2), mode="homogeneous").candidate_count() == 236196


@pytest.mark.slow
def test_homogeneous_search_q9(gf81_over_9):
    report = enumerate_db(SearchConfig(gf81_over_9, mode="homogeneous"))
    assert report.visited == 236196
    assert report.flags == 0
    assert report.db_count > 0
    assert report.disagreements == 0
    assert report.to_dict()["equivalence_disagreements"] == 0
    assert all(all(s["conditions"].values()) for s in report.survivors)
    assert report.report().verdict


def test_default_chunks_spread_over_workers(gf9):
    tasks = list(_ranges(SearchConfig(gf9, worker_count=4), 0, 6561))
    assert len(tasks) == 4 * CHUNKS_PER_WORKER
    assert tasks[0][2:4] == (0, 206)
    assert tasks[-1][3] == 6561
    assert len(list(_ranges(SearchConfig(gf9, worker_count=4, chunk_size=4096), 0, 6561))) == 2
    assert SearchConfig(gf9).effective_chunk_size(10 ** 8) == SEARCH_CHUNK_SIZE


def test_default_chunking_gives_the_same_report(full_search):
    config, report = full_search
    assert enumerate_db(SearchConfig(config.spec, worker_count=2)).to_dict() == report.to_dict()


def test_random_draws_do_not_depend_on_chunking(gf9):
    whole = decode_random(gf9, 0, 9000, 5)
    pieces = np.concatenate([decode_random(gf9, a, min(a + 700, 9000), 5) for a in range(0, 9000, 700)])
    assert np.array_equal(whole, pieces)
    small = SearchConfig(gf9, mode="random", seed=5, samples=9000, chunk_size=100)
    large = SearchConfig(gf9, mode="random", seed=5, samples=9000, chunk_size=5000)
    assert enumerate_db(small).survivors == enumerate_db(large).survivors
    assert np.array_equal(decode_candidate(small, 4500).values, whole[4500])


@pytest.mark.slow
@pytest.mark.skipif((os.cpu_count() or 1) < 4, reason="needs at least 4 CPUs")
def test_four_workers_speed_up_random_search(gf25):
    timings, reports = {}, {}
    for workers in (1, 4):
        config = SearchConfig(gf25, mode="random", seed=7, samples=4_000_000, worker_count=workers,
                              chunk_size=SEARCH_CHUNK_SIZE)
        began = time.perf_counter()
        reports[workers] = enumerate_db(config).to_dict()
        timings[workers] = time.perf_counter() - began
    print(f"random search, 4e6 tables over GF(25): 1 worker {timings[1]:.2f}s, 4 workers {timings[4]:.2f}s")
    assert reports[1] == reports[4]
    assert timings[1] / timings[4] >= 3


def test_decoded_homogeneous_tables_have_their_degree(gf25):
    per_degree = 5 ** gf25.stride
    tables = decode_homogeneous(gf25, [0, 17, per_degree + 17, 2 * per_degree - 1])
    degrees = [homogeneity_degree(FunctionTable(gf25, t)) for t in tables]
    # index 0 is the zero function, homogeneous for every degree
    assert [d.witness for d in degrees[1:]] == [1, 3, 3]


def test_coset_representatives_have_trace_zero_or_one(gf27):
    reps = coset_representatives(gf27)
    assert len(reps) == gf27.stride
    traces = {gf27.rel_trace(gf27.element(int(r))) for r in reps}
    assert traces <= {gf27.zero(), gf27.one()}
    assert len({int(r) % gf27.stride for r in reps}) == gf27.stride


def test_decode_full_digits(gf9):
    assert decode_full(gf9, [1, 3 ** 7])[0].tolist() == [1, 0, 0, 0, 0, 0, 0, 0]
    assert decode_full(gf9, [3 ** 7])[0].tolist() == [0, 0, 0, 0, 0, 0, 0, 1]


def test_random_mode_is_reproducible(gf9):
    config = SearchConfig(gf9, mode="random", seed=11, samples=300, chunk_size=64)
    first, second = enumerate_db(config), enumerate_db(config)
    assert first.to_dict() == second.to_dict()
    assert first.to_dict()["seed"] == 11
    assert decode_candidate(config, 100) == decode_candidate(config, 100)


def test_configuration_guards(gf9):
    with pytest.raises(SearchBudgetError):
        SearchConfig(gf9, mode="random")
    with pytest.raises(SearchBudgetError):
        SearchConfig(gf9, mode="exhaustive")
    with pytest.raises(SearchBudgetError):
        SearchConfig(gf9, worker_count=0)
    with pytest.raises(SearchBudgetError):
        SearchConfig(gf9, chunk_size=0)
    with pytest.raises(SearchBudgetError):
        enumerate_db(SearchConfig(gf9, budget=1000))


def test_db_mask(gf9, trace9):
    tables = np.stack([trace9.values, constant_function(gf9).values])
    assert db_mask(gf9, tables).tolist() == [True, False]


def test_orbit_of_trace(gf9, trace9):
    assert len(orbit_keys(gf9, trace9.values.astype(np.int64))) == 24


def test_classify_groups_orbit_members(gf9, trace9):
    config = SearchConfig(gf9)
    shifted = gf9.sub_add[np.roll(trace9.values, -3), 2]
    records = [{"candidate": _candidate_index(trace9)},
               {"candidate": _candidate_index(FunctionTable(gf9, shifted))}]
    records.sort(key=lambda r: r["candidate"])
    classes = classify(config, records)
    assert classes == [{"representative": records[0]["candidate"], "size": 2}]


def test_counterexample_flag_name():
    assert COUNTEREXAMPLE_FLAG == "CONJECTURE-COUNTEREXAMPLE"
