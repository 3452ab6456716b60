"""Exact integer floor-log2 and its order-theoretic grid checks.

Everything here is integer arithmetic: no floats, no rounding. The
central function is ``ilog2``, defined by the recurrence

    ilog2(1) = 0
    ilog2(n) = 1 + ilog2(n // 2)    for n > 1

which equals floor(log2(n)). A repeated-doubling oracle provides an
independent route to the same value, and the grid scans check the
properties the rest of the package leans on (monotonicity, the doubling
identity) pointwise over explicit, reported ranges.
"""

from __future__ import annotations

from olog.errors import PreconditionError

# All compiled arithmetic is 64-bit; capping inputs at 2**32 guarantees
# every intermediate (2*n, lo+hi, c*ilog2(n)) fits with a wide margin.
MAX_GRID = 2**32


def ilog2(n: int) -> int:
    """Floor of log base 2 of ``n``.

    Implemented as an iterative halving loop; the defining recurrence
    divides by two until reaching 1, so the argument strictly decreases
    and stays bounded below by 1.

    Args:
        n: a positive integer.

    Returns:
        The largest k such that 2**k <= n.

    Raises:
        PreconditionError: if ``n < 1``.
    """
    if n < 1:
        raise PreconditionError(f"ilog2 requires n >= 1, got {n}")
    k = 0
    while n > 1:
        n //= 2
        k += 1
    return k


def ilog2_oracle(n: int) -> int:
    """Independent floor-log2: largest k with 2**k <= n, by doubling.

    Uses only multiplication by two and comparison, never division, so
    it shares no code path with ``ilog2``.
    """
    if n < 1:
        raise PreconditionError(f"ilog2_oracle requires n >= 1, got {n}")
    power = 1
    k = 0
    while power * 2 <= n:
        power *= 2
        k += 1
    return k


def ilog2_checked_against_oracle(n: int) -> bool:
    """True iff the halving recurrence and the doubling oracle agree at ``n``."""
    return ilog2(n) == ilog2_oracle(n)


def _check_grid(n_max: int) -> None:
    if n_max < 1:
        raise PreconditionError(f"grid bound must be >= 1, got {n_max}")
    if n_max > MAX_GRID:
        raise PreconditionError(f"grid bound {n_max} exceeds the 2**32 cap")


def scan_monotonic(n_max: int) -> int:
    """First x in [1, n_max] with ilog2(x) > ilog2(x+1), or 0 if none.

    Pairwise monotonicity over adjacent grid points implies ilog2(x) <=
    ilog2(y) for all 1 <= x <= y <= n_max + 1 by transitivity.
    """
    _check_grid(n_max)
    from olog import kernels

    return kernels.ilog2_scan_monotonic(n_max)


def scan_doubling(n_max: int) -> int:
    """First n in [1, n_max] with ilog2(2n) != 1 + ilog2(n), or 0 if none."""
    _check_grid(n_max)
    from olog import kernels

    return kernels.ilog2_scan_doubling(n_max)


def scan_oracle_equivalence(n_max: int) -> int:
    """First n in [1, n_max] where recurrence and doubling oracle differ, or 0."""
    _check_grid(n_max)
    from olog import kernels

    return kernels.ilog2_scan_oracle(n_max)
