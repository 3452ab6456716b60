"""Bounded-domain membership checks for the O(log2 n) class.

The classical definition quantifies over all n beyond a threshold; here
every universal quantifier becomes a pointwise scan over an explicit
grid whose bound travels with the verdict, and every existential becomes
a concrete witness. The canonical bound function is

    step_bound(n) = 2*ilog2(n+1) + 1

and the inequality chain in ``canonical_chain`` derives the witness pair
(c=6, n0=2) for it, each chain step re-checked at every grid point.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Optional

from olog.errors import CalcChainError, PreconditionError, VacuousRangeError
from olog.intmath import MAX_GRID, ilog2


@dataclass(frozen=True)
class LogWitness:
    """The pair (c, n0) witnessing a logarithmic upper bound; both strictly positive."""

    c: int
    n0: int

    def __post_init__(self):
        if self.c < 1 or self.n0 < 1:
            raise PreconditionError(f"witness needs c >= 1 and n0 >= 1, got {self!r}")


@dataclass(frozen=True)
class BoundFn:
    """A named total function nat -> nat used as an upper bound."""

    name: str
    fn: Callable[[int], int]

    def __call__(self, n: int) -> int:
        return self.fn(n)


def _step_bound_value(n: int) -> int:
    return 2 * ilog2(n + 1) + 1


#: Canonical bound on the search's iteration count; total on all of nat
#: (at n=0 it is 2*ilog2(1)+1 = 1).
STEP_BOUND = BoundFn("2*ilog2(n+1)+1", _step_bound_value)


@dataclass(frozen=True)
class CalcStep:
    """One link of an inequality chain, checkable in isolation.

    The relation ``lhs rel rhs`` must hold pointwise for every n >=
    ``n_min`` on the checked grid; ``why`` records the justification.
    """

    lhs_label: str
    lhs: Callable[[int], int]
    rel: str  # "==" or "<="
    rhs_label: str
    rhs: Callable[[int], int]
    n_min: int
    why: str

    def holds_at(self, n: int) -> bool:
        if self.rel == "==":
            return self.lhs(n) == self.rhs(n)
        return self.lhs(n) <= self.rhs(n)


@dataclass(frozen=True)
class CalcStepResult:
    step: CalcStep
    checked_to: int
    ok: bool
    first_failure_n: Optional[int] = None

    def to_dict(self) -> dict:
        return {
            "from": self.step.lhs_label,
            "rel": "<=" if self.step.rel == "<=" else "=",
            "to": self.step.rhs_label,
            "checked_to": self.checked_to,
            "ok": self.ok,
        }


@dataclass(frozen=True)
class CalcTrace:
    """A fully re-checked inequality chain plus the witness it justifies."""

    witness: LogWitness
    steps: tuple[CalcStepResult, ...]
    grid: int

    @property
    def ok(self) -> bool:
        return all(s.ok for s in self.steps)

    def first_failure(self) -> Optional[tuple[int, int]]:
        """(1-based step index, n) of the earliest failing point, or None."""
        for i, s in enumerate(self.steps, start=1):
            if not s.ok:
                return i, s.first_failure_n
        return None

    def to_dict(self) -> dict:
        return {
            "witness": {"c": self.witness.c, "n0": self.witness.n0},
            "steps": [s.to_dict() for s in self.steps],
        }


def _l(n: int) -> int:
    return ilog2(n)


def canonical_chain() -> tuple[CalcStep, ...]:
    """The five-step chain from the canonical bound down to 6*ilog2(n)."""
    return (
        CalcStep(
            "f(n)",
            lambda n: 2 * _l(n + 1) + 1,
            "<=",
            "2*ilog2(n+1) + ilog2(n+1)",
            lambda n: 2 * _l(n + 1) + _l(n + 1),
            1,
            "ilog2(n+1) >= 1 for n >= 1",
        ),
        CalcStep(
            "2*ilog2(n+1) + ilog2(n+1)",
            lambda n: 2 * _l(n + 1) + _l(n + 1),
            "==",
            "3*ilog2(n+1)",
            lambda n: 3 * _l(n + 1),
            1,
            "collect terms",
        ),
        CalcStep(
            "3*ilog2(n+1)",
            lambda n: 3 * _l(n + 1),
            "<=",
            "3*ilog2(2*n)",
            lambda n: 3 * _l(2 * n),
            1,
            "ilog2 monotonic and n+1 <= 2*n for n >= 1",
        ),
        CalcStep(
            "3*ilog2(2*n)",
            lambda n: 3 * _l(2 * n),
            "==",
            "3*(1 + ilog2(n))",
            lambda n: 3 * (1 + _l(n)),
            1,
            "ilog2(2*n) = 1 + ilog2(n)",
        ),
        CalcStep(
            "3*(1 + ilog2(n))",
            lambda n: 3 * (1 + _l(n)),
            "<=",
            "6*ilog2(n)",
            lambda n: 6 * _l(n),
            2,
            "ilog2(n) >= 1 for n >= 2",
        ),
    )


#: The witness the canonical chain establishes: the end label's
#: coefficient, valid from the largest per-step threshold onward.
CANONICAL_WITNESS = LogWitness(c=6, n0=2)


def _scan_step_python(step: CalcStep, n_lo: int, n_hi: int) -> int:
    for n in range(n_lo, n_hi + 1):
        if not step.holds_at(n):
            return n
    return 0


def check_calc_chain(steps, n_max: int, use_kernel: bool = True) -> tuple[CalcStepResult, ...]:
    """Check every chain step pointwise on [step.n_min, n_max].

    The canonical chain runs on the fast kernel; any other step list is
    evaluated through its Python callables (that is what lets tests
    splice in a broken step and watch it get caught).
    """
    if n_max < 1 or n_max > MAX_GRID:
        raise PreconditionError(f"chain grid must be in [1, 2**32], got {n_max}")
    steps = tuple(steps)
    kernel_ok = use_kernel and _is_canonical(steps)
    if kernel_ok:
        from olog import kernels

    results = []
    for i, step in enumerate(steps, start=1):
        lo = max(step.n_min, 1)
        if lo > n_max:
            raise VacuousRangeError(
                f"step {i} needs n >= {step.n_min} but the grid only reaches {n_max}"
            )
        if kernel_ok:
            bad = kernels.calc_step_scan(i, lo, n_max)
        else:
            bad = _scan_step_python(step, lo, n_max)
        results.append(
            CalcStepResult(step, n_max, bad == 0, None if bad == 0 else bad)
        )
    return tuple(results)


def _is_canonical(steps) -> bool:
    canon = canonical_chain()
    if len(steps) != len(canon):
        return False
    return all(
        s.lhs_label == c.lhs_label and s.rhs_label == c.rhs_label and s.rel == c.rel
        and s.n_min == c.n_min
        for s, c in zip(steps, canon)
    )


def derive_log_witness(n_max: int) -> tuple[LogWitness, CalcTrace]:
    """Re-derive the witness (6, 2) by machine-checking the canonical chain.

    Every step is verified pointwise over [its threshold, n_max]; a
    failing point raises :class:`CalcChainError` naming the step and n.
    """
    if n_max < 2:
        raise PreconditionError(f"witness derivation needs n_max >= 2, got {n_max}")
    results = check_calc_chain(canonical_chain(), n_max)
    trace = CalcTrace(CANONICAL_WITNESS, results, n_max)
    if not trace.ok:
        step_index, n = trace.first_failure()
        raise CalcChainError(step_index, n, trace)
    return CANONICAL_WITNESS, trace


def is_log2_from(witness: LogWitness, bound: BoundFn, n_max: int) -> bool:
    """True iff bound(n) <= c*ilog2(n) for every n in [n0, n_max].

    Refuses empty ranges (n_max < n0) outright: a vacuously true verdict
    would be indistinguishable from a real one.
    """
    if n_max < witness.n0:
        raise VacuousRangeError(
            f"check range empty: n_max={n_max} is below the threshold n0={witness.n0}"
        )
    if n_max > MAX_GRID:
        raise PreconditionError(f"grid bound {n_max} exceeds the 2**32 cap")
    if bound is STEP_BOUND:
        from olog import kernels

        return kernels.bound_scan(witness.c, witness.n0, n_max) == 0
    c = witness.c
    return all(bound(n) <= c * ilog2(n) for n in range(witness.n0, n_max + 1))


def is_o_log2n(n: int, t: int, bound: BoundFn, witness: LogWitness, n_max: int) -> bool:
    """True iff t <= bound(n) and the bound is logarithmic on the checked grid.

    The classical form quantifies existentially over bound functions;
    here the caller supplies the explicit witness function instead.
    """
    if n < 1:
        raise PreconditionError(f"membership check requires n >= 1, got {n}")
    if n_max < max(n, witness.n0):
        raise PreconditionError(
            f"n_max={n_max} must cover both n={n} and the threshold n0={witness.n0}"
        )
    return t <= bound(n) and is_log2_from(witness, bound, n_max)


def search_log_witness(
    bound: BoundFn,
    n_max: int,
    c_max: int = 16,
    n0_max: int = 64,
) -> Optional[LogWitness]:
    """Scan small (c, n0) pairs for one that makes ``bound`` logarithmic.

    Fallback for user-supplied bound functions with no hand-derived
    witness; returns the first hit ordered by c then n0, or None.
    """
    if n_max < 1:
        raise PreconditionError(f"witness search needs n_max >= 1, got {n_max}")
    for c in range(1, c_max + 1):
        for n0 in range(1, min(n0_max, n_max) + 1):
            if is_log2_from(LogWitness(c, n0), bound, n_max):
                return LogWitness(c, n0)
    return None
