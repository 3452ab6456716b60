import json

import pytest

from olog import complexity
from olog.complexity import (
    STEP_BOUND,
    CalcStep,
    LogWitness,
    canonical_chain,
    check_calc_chain,
    derive_log_witness,
    is_log2_from,
    is_o_log2n,
    search_log_witness,
)
from olog.errors import PreconditionError, VacuousRangeError
from olog.intmath import ilog2


def test_step_bound_values():
    # 2*ilog2(n+1) + 1, total on all of nat
    assert STEP_BOUND(0) == 1
    assert STEP_BOUND(1) == 3
    assert STEP_BOUND(8) == 7
    assert STEP_BOUND(1024) == 21


def test_witness_requires_positive_parts():
    with pytest.raises(PreconditionError):
        LogWitness(0, 2)
    with pytest.raises(PreconditionError):
        LogWitness(6, 0)


def test_is_log2_from_examples():
    assert is_log2_from(LogWitness(6, 2), STEP_BOUND, 1024) is True
    # at n=1: bound(1)=3 but 6*ilog2(1)=0
    assert is_log2_from(LogWitness(6, 1), STEP_BOUND, 1024) is False
    # at n=2: bound(2)=3 but 1*ilog2(2)=1
    assert is_log2_from(LogWitness(1, 2), STEP_BOUND, 16) is False


def test_is_log2_from_refuses_vacuous_range():
    with pytest.raises(VacuousRangeError):
        is_log2_from(LogWitness(6, 100), STEP_BOUND, 99)


def test_is_o_log2n_examples():
    w = LogWitness(6, 2)
    assert is_o_log2n(8, 4, STEP_BOUND, w, 1024) is True
    assert is_o_log2n(1, 10, STEP_BOUND, w, 1024) is False
    assert is_o_log2n(1, 3, STEP_BOUND, w, 1024) is True  # t equals the bound exactly


def test_is_o_log2n_preconditions():
    w = LogWitness(6, 2)
    with pytest.raises(PreconditionError):
        is_o_log2n(0, 0, STEP_BOUND, w, 1024)
    with pytest.raises(PreconditionError):
        is_o_log2n(64, 3, STEP_BOUND, w, 32)  # grid does not cover n


def test_derive_log_witness_full_grid():
    witness, trace = derive_log_witness(2**20)
    assert (witness.c, witness.n0) == (6, 2)
    assert len(trace.steps) == 5
    assert trace.ok
    assert all(s.checked_to == 2**20 for s in trace.steps)


def test_derive_log_witness_smallest_grid():
    witness, trace = derive_log_witness(2)
    assert (witness.c, witness.n0) == (6, 2)
    assert trace.ok


def test_derive_log_witness_rejects_grid_below_threshold():
    with pytest.raises(PreconditionError):
        derive_log_witness(1)


def test_witness_round_trips_through_checker():
    for grid in (2, 64, 4096):
        witness, _ = derive_log_witness(grid)
        assert is_log2_from(witness, STEP_BOUND, grid)


def test_chain_steps_check_in_isolation():
    # every canonical step alone holds on a small grid
    for result in check_calc_chain(canonical_chain(), 4096):
        assert result.ok, result.step.lhs_label


def test_reversed_monotonic_step_is_caught():
    # flip step 3 (the monotonicity link); 3*ilog2(2n) <= 3*ilog2(n+1)
    # first breaks at n=2 where ilog2(4)=2 but ilog2(3)=1
    steps = list(canonical_chain())
    s3 = steps[2]
    steps[2] = CalcStep(
        s3.rhs_label, s3.rhs, "<=", s3.lhs_label, s3.lhs, s3.n_min, "deliberately reversed"
    )
    results = check_calc_chain(steps, 1024)
    assert results[2].ok is False
    assert results[2].first_failure_n == 2
    assert all(r.ok for i, r in enumerate(results) if i != 2)


def test_broken_chain_trace_reports_first_failure():
    steps = list(canonical_chain())
    s3 = steps[2]
    steps[2] = CalcStep(
        s3.rhs_label, s3.rhs, "<=", s3.lhs_label, s3.lhs, s3.n_min, "reversed"
    )
    trace = complexity.CalcTrace(LogWitness(6, 2), check_calc_chain(steps, 1024), 1024)
    assert not trace.ok
    assert trace.first_failure() == (3, 2)


def test_generic_and_kernel_chain_scans_agree():
    kernel_results = check_calc_chain(canonical_chain(), 512, use_kernel=True)
    python_results = check_calc_chain(canonical_chain(), 512, use_kernel=False)
    assert [r.ok for r in kernel_results] == [r.ok for r in python_results]
    assert [r.first_failure_n for r in kernel_results] == [
        r.first_failure_n for r in python_results
    ]


def test_calc_trace_serialization_shape():
    _, trace = derive_log_witness(1024)
    payload = trace.to_dict()
    assert payload["witness"] == {"c": 6, "n0": 2}
    assert len(payload["steps"]) == 5
    first = payload["steps"][0]
    assert set(first) == {"from", "rel", "to", "checked_to", "ok"}
    assert first["from"] == "f(n)"
    assert payload["steps"][-1]["to"] == "6*ilog2(n)"
    json.dumps(payload)  # must be plain-JSON serializable


def test_tightness_floor_probe():
    # the 6*ilog2(n) bound is not vacuously loose: at n=2 the two sides
    # are within a factor of two (3 vs 6)
    assert STEP_BOUND(2) == 3
    assert 6 * ilog2(2) == 6
    assert all(STEP_BOUND(n) <= 6 * ilog2(n) for n in range(2, 4096))


def test_search_log_witness_finds_one_for_step_bound():
    witness = search_log_witness(STEP_BOUND, 4096)
    assert witness is not None
    assert is_log2_from(witness, STEP_BOUND, 4096)
    # ordered by c then n0: nothing with smaller c may work
    for c in range(1, witness.c):
        for n0 in range(1, 65):
            assert not is_log2_from(LogWitness(c, n0), STEP_BOUND, 4096)


def test_search_log_witness_none_for_linear_growth():
    linear = complexity.BoundFn("n", lambda n: n)
    assert search_log_witness(linear, 4096) is None
