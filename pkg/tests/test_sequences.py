import numpy as np
import pytest

from checks.sequences import (PSequence, autocorrelation, autocorrelation_all, autocorrelation_sum, ideal_counts,
                              is_ideal_two_level, to_sequence)
from constructions.functions import constant_function, trace_function
from errors import SequenceError


def test_lin_sequence_is_ideal(lin27):
    s = to_sequence(lin27)
    assert s.period == 26
    assert is_ideal_two_level(s).verdict
    values = autocorrelation_all(s)
    assert len(values) == 26
    assert values[0].exact_value == 26
    assert all(v.exact_value == -1 for v in values[1:])
    assert all(v.counts == (8, 9, 9) for v in values[1:])


def test_m_sequence_is_ideal(trace27):
    s = to_sequence(trace27)
    assert is_ideal_two_level(s).verdict
    entry = autocorrelation(s, 5)
    assert entry.exact_value == -1
    assert entry.value.real == pytest.approx(-1)
    assert entry.value.imag == pytest.approx(0, abs=1e-9)


def test_constant_sequence(gf27):
    s = to_sequence(constant_function(gf27))
    report = is_ideal_two_level(s)
    assert not report.verdict
    assert report.witness["tau"] == 1
    assert autocorrelation(s, 1).exact_value == 26


def test_non_rational_value():
    s = PSequence(3, [0, 1, 1, 2])
    entry = autocorrelation(s, 1)
    assert entry.counts == (1, 3, 0)
    assert entry.exact_value is None


def test_ideal_counts():
    assert ideal_counts(3, 26).tolist() == [8, 9, 9]
    assert ideal_counts(5, 24).tolist() == [4, 5, 5, 5, 5]


def test_autocorrelation_sum(lin27, gf27):
    report = autocorrelation_sum(to_sequence(lin27))
    assert report.verdict
    assert report.witness["total"] == 1
    assert autocorrelation_sum(to_sequence(constant_function(gf27))).witness["total"] == 26 * 26


def test_export_forms():
    s = PSequence(3, [0, 1, 2, 2])
    assert s.to_digits() == "0122"
    assert s.to_dict() == {"p": 3, "period": 4, "symbols": [0, 1, 2, 2]}
    with pytest.raises(SequenceError):
        PSequence(3, [3])


def test_sequences_need_prime_field(gf81_over_9):
    with pytest.raises(SequenceError):
        to_sequence(trace_function(gf81_over_9))


def test_shift_out_of_range(lin27):
    with pytest.raises(SequenceError):
        autocorrelation(to_sequence(lin27), 26)


@pytest.mark.parametrize("p, period", [(3, 26), (5, 24)])
def test_counts_mirror_under_reversed_shift(p, period):
    s = PSequence(p, np.random.default_rng(p).integers(0, p, period))
    entries = autocorrelation_all(s)
    for tau in range(1, period):
        mirrored = entries[period - tau]
        assert entries[tau].counts == tuple(mirrored.counts[(-c) % p] for c in range(p))
        assert entries[tau].value == pytest.approx(mirrored.value.conjugate())
