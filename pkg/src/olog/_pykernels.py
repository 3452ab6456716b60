"""Pure-Python kernel implementations (numpy-vectorized where it pays).

This module is the reference twin of the compiled ``_ckernel``: same
functions, same argument conventions, same results. ``olog.kernels``
picks whichever is available at import time. Grid scans return 0 for
"no failure" or the first failing grid point otherwise.
"""

from __future__ import annotations

import numpy as np

from olog import costmodel
from olog.algorithms import (
    SortedSeq,
    binary_search,
    check_binary_posts,
    linear_search_oracle,
)
from olog.errors import InvariantViolation
from olog.intmath import ilog2

_CHUNK = 1 << 20

# 2**k for k in 0..34 covers every value the scans feed through ilog2
# (arguments never exceed 2*(2**32) = 2**33).
_POWS = np.array([1 << k for k in range(35)], dtype=np.int64)


def _ilog2_vec(a: np.ndarray) -> np.ndarray:
    """Vectorized halving recurrence; elementwise floor-log2."""
    m = a.astype(np.int64, copy=True)
    k = np.zeros_like(m)
    while True:
        mask = m > 1
        if not mask.any():
            return k
        m[mask] >>= 1
        k[mask] += 1


def _oracle_vec(a: np.ndarray) -> np.ndarray:
    """Independent floor-log2: position among the powers of two."""
    return np.searchsorted(_POWS, a, side="right").astype(np.int64) - 1


def _first_true(values: np.ndarray, bad: np.ndarray) -> int:
    idx = np.flatnonzero(bad)
    return int(values[idx[0]]) if idx.size else 0


def _chunks(lo: int, hi: int):
    start = lo
    while start <= hi:
        stop = min(start + _CHUNK - 1, hi)
        yield np.arange(start, stop + 1, dtype=np.int64)
        start = stop + 1


def ilog2_scan_monotonic(n_max: int) -> int:
    for x in _chunks(1, n_max):
        if (first := _first_true(x, _ilog2_vec(x) > _ilog2_vec(x + 1))) != 0:
            return first
    return 0


def ilog2_scan_doubling(n_max: int) -> int:
    for n in _chunks(1, n_max):
        if (first := _first_true(n, _ilog2_vec(2 * n) != 1 + _ilog2_vec(n))) != 0:
            return first
    return 0


def ilog2_scan_oracle(n_max: int) -> int:
    for n in _chunks(1, n_max):
        if (first := _first_true(n, _ilog2_vec(n) != _oracle_vec(n))) != 0:
            return first
    return 0


def calc_step_scan(step: int, n_lo: int, n_hi: int) -> int:
    for n in _chunks(n_lo, n_hi):
        if step == 1:
            lhs, rhs, eq = 2 * _ilog2_vec(n + 1) + 1, 3 * _ilog2_vec(n + 1), False
        elif step == 2:
            ln1 = _ilog2_vec(n + 1)
            lhs, rhs, eq = 2 * ln1 + ln1, 3 * ln1, True
        elif step == 3:
            lhs, rhs, eq = 3 * _ilog2_vec(n + 1), 3 * _ilog2_vec(2 * n), False
        elif step == 4:
            lhs, rhs, eq = 3 * _ilog2_vec(2 * n), 3 * (1 + _ilog2_vec(n)), True
        elif step == 5:
            lhs, rhs, eq = 3 * (1 + _ilog2_vec(n)), 6 * _ilog2_vec(n), False
        else:
            raise ValueError(f"unknown chain step {step}")
        bad = lhs != rhs if eq else lhs > rhs
        if (first := _first_true(n, bad)) != 0:
            return first
    return 0


def bound_scan(c: int, n0: int, n_max: int) -> int:
    for n in _chunks(n0, n_max):
        bad = 2 * _ilog2_vec(n + 1) + 1 > c * _ilog2_vec(n)
        if (first := _first_true(n, bad)) != 0:
            return first
    return 0


def search_steps(seq, key: int) -> tuple[int, int]:
    """(r, t) of the plain search; scalar helper for parity tests."""
    outcome = binary_search(SortedSeq(seq), key)
    return outcome.r, outcome.t


def binary_max_steps(n: int) -> int:
    """Worst iteration count over the adversarial key family on [0, n).

    Runs the real comparison schedule for every key in [-1, n]
    simultaneously: on the identity sequence q[i] = i the probe
    ``key < q[mid]`` is exactly ``key < mid``.
    """
    if n == 0:
        return 0
    worst = 0
    for keys in _chunks(-1, n):
        lo = np.zeros_like(keys)
        hi = np.full_like(keys, n)
        t = np.zeros_like(keys)
        while True:
            active = lo < hi
            if not active.any():
                break
            mid = (lo + hi) >> 1
            below = active & (keys < mid)
            above = active & (keys > mid)
            found = active & ~below & ~above
            hi = np.where(below, mid, hi)
            lo = np.where(above, mid + 1, lo)
            hi = np.where(found, lo, hi)
            t += active
        worst = max(worst, int(t.max()))
    return worst


def linear_max_steps(n: int) -> int:
    """Worst comparison count of the linear scan over the same key family.

    Executes the scan for all keys at once: every key still alive at
    position i pays one comparison there.
    """
    if n == 0:
        return 0
    worst = 0
    for keys in _chunks(-1, n):
        counts = np.zeros_like(keys)
        alive = np.ones(keys.shape, dtype=bool)
        for i in range(n):
            counts += alive
            alive &= keys != i
            if not alive.any():
                break
        worst = max(worst, int(counts.max()))
    return worst


_VIOLATION_PROP = {
    "sorted": "P1",
    "binary_loop": "P1",
    "termination": "P3",
    "tbs_difference": "P4",
}


def verify_sweep(seqs, key_lo: int, key_hi: int, search_fn=None) -> dict:
    """Run the per-instance property battery over seqs x [key_lo, key_hi].

    Returns violation counts and the first counterexample per property
    (P1..P7), in enumeration order, plus the largest observed gap
    between the transition cost and the actual counter.
    """
    if search_fn is None:
        search_fn = binary_search
    counts = {p: 0 for p in ("P1", "P2", "P3", "P4", "P5", "P6", "P7")}
    first: dict = {p: None for p in counts}
    instances = 0
    max_gap = 0

    def record(prop, q, key, detail):
        counts[prop] += 1
        if first[prop] is None:
            first[prop] = {"q": list(q), "key": int(key), "detail": detail}

    for items in seqs:
        q = SortedSeq(items)
        n = len(q)
        budget = 2 * ilog2(n + 1) + 1
        log_n = ilog2(n) if n >= 1 else 0
        for key in range(key_lo, key_hi + 1):
            instances += 1
            table = costmodel.tbs_table(items, key)
            tbs_total = table[0][n]

            # P5 needs only the cost table, so it runs even when the
            # instrumented run aborts.
            p5_bad = None
            for lo in range(n):
                for hi in range(lo + 1, n + 1):
                    if table[lo][hi] > 2 * ilog2(hi - lo) + 1:
                        p5_bad = (lo, hi, table[lo][hi])
                        break
                if p5_bad:
                    break
            if p5_bad:
                record("P5", items, key,
                       f"tbs{p5_bad[:2]}={p5_bad[2]} exceeds its log bound")

            try:
                out = search_fn(q, key, "full_trace")
            except InvariantViolation as violation:
                prop = _VIOLATION_PROP.get(violation.predicate, "P1")
                record(prop, items, key, str(violation))
                continue

            if not check_binary_posts(q, out.r, key):
                record("P1", items, key, f"postconditions fail for r={out.r}")
            oracle_r = linear_search_oracle(q, key)
            agree = (out.r >= 0) == (oracle_r >= 0) and (out.r < 0 or q[out.r] == key)
            if not agree:
                record("P2", items, key, f"r={out.r} disagrees with oracle index {oracle_r}")
            if out.trace is None or out.t != len(out.trace):
                record("P3", items, key, f"t={out.t} but trace has {len(out.trace or ())} records")
            if out.t > tbs_total:
                record("P4", items, key, f"t={out.t} exceeds tbs={tbs_total}")
            else:
                max_gap = max(max_gap, tbs_total - out.t)
            if out.t > budget:
                record("P6", items, key, f"t={out.t} exceeds budget {budget}")
            if n >= 2 and out.t > 6 * log_n:
                record("P7", items, key, f"t={out.t} exceeds 6*ilog2({n})={6 * log_n}")

    return {
        "instances": instances,
        "violations": counts,
        "first": first,
        "max_tbs_gap": max_gap,
    }
