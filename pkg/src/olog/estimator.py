"""Empirical growth-class identification from exact step counts.

Step counts are machine-independent, so the samples are exact integers;
only the final residuals are floating point. Each candidate class gets
a two-parameter fit t ~ a*g(n) + b (a clamped at 0) by closed-form
least squares; no iterative optimizer, so results are deterministic.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional, Sequence

from olog import kernels
from olog.errors import PreconditionError
from olog.intmath import ilog2

ALGORITHMS = ("binary_search", "linear_oracle")

# Candidates ordered slowest-growing first; ties break toward this order.
GROWTH_CLASSES = (
    ("Constant", lambda n: 1),
    ("Logarithmic", lambda n: ilog2(n)),
    ("Linear", lambda n: n),
    ("Linearithmic", lambda n: n * ilog2(n)),
    ("Quadratic", lambda n: n * n),
)

#: Ratio of runner-up error to best error below which the verdict is
#: reported as inconclusive rather than guessed.
CONFIDENCE_MARGIN = 2.0


@dataclass(frozen=True)
class StepSample:
    n: int
    t_max: int

    def __post_init__(self):
        if self.n < 1:
            raise PreconditionError(f"sample size must be >= 1, got {self.n}")


@dataclass(frozen=True)
class ClassFit:
    a: float
    b: float
    rel_rmse: float


@dataclass(frozen=True)
class ClassificationReport:
    best_class: str
    fits: dict[str, ClassFit]
    margin: Optional[float]  # None means infinite (best fit is exact)
    confident: bool

    @property
    def verdict(self) -> str:
        return self.best_class if self.confident else "inconclusive"

    def to_dict(self) -> dict:
        return {
            "best_class": self.best_class,
            "verdict": self.verdict,
            "confident": self.confident,
            "margin": self.margin,
            "fits": {
                name: {"a": fit.a, "b": fit.b, "rel_rmse": fit.rel_rmse}
                for name, fit in self.fits.items()
            },
        }


def bench_steps(algorithm: str, sizes: Sequence[int]) -> list[StepSample]:
    """Worst step count per size over the adversarial key family.

    The searched sequence is always [0, 1, ..., n-1]; the key family is
    every element plus one value below and one above. The linear scan is
    the non-logarithmic control and counts equality comparisons.
    """
    if algorithm not in ALGORITHMS:
        raise PreconditionError(f"algorithm must be one of {ALGORITHMS}, got {algorithm!r}")
    if not sizes:
        raise PreconditionError("sizes must be nonempty")
    if any(b <= a for a, b in zip(sizes, sizes[1:])):
        raise PreconditionError(f"sizes must be strictly increasing, got {list(sizes)}")
    profile = (
        kernels.binary_max_steps if algorithm == "binary_search" else kernels.linear_max_steps
    )
    return [StepSample(n, profile(n)) for n in sizes]


def _fit_one(ns, ts, g) -> ClassFit:
    xs = [g(n) for n in ns]
    mean_x = sum(xs) / len(xs)
    mean_t = sum(ts) / len(ts)
    var_x = sum((x - mean_x) ** 2 for x in xs)
    if var_x > 0:
        a = sum((x - mean_x) * (t - mean_t) for x, t in zip(xs, ts)) / var_x
        a = max(a, 0.0)
    else:
        a = 0.0
    b = mean_t - a * mean_x
    rmse = math.sqrt(sum((t - (a * x + b)) ** 2 for x, t in zip(xs, ts)) / len(xs))
    return ClassFit(a=a, b=b, rel_rmse=rmse / mean_t)


def fit_class(samples: Sequence[StepSample]) -> ClassificationReport:
    """Pick the growth class with the smallest relative RMSE.

    Needs at least 4 samples spanning at least two decimal orders of
    magnitude in n; anything narrower cannot separate the candidates.
    """
    if len(samples) < 4:
        raise PreconditionError(f"need >= 4 samples, got {len(samples)}")
    ns = [s.n for s in samples]
    ts = [s.t_max for s in samples]
    if max(ns) < 100 * min(ns):
        raise PreconditionError(
            f"sizes must span >= 2 orders of magnitude; got [{min(ns)}, {max(ns)}]"
        )

    fits = {name: _fit_one(ns, ts, g) for name, g in GROWTH_CLASSES}
    order = [name for name, _ in GROWTH_CLASSES]
    ranked = sorted(order, key=lambda name: (fits[name].rel_rmse, order.index(name)))
    best, runner_up = ranked[0], ranked[1]

    best_err = fits[best].rel_rmse
    runner_err = fits[runner_up].rel_rmse
    if best_err == 0.0:
        margin = None if runner_err > 0.0 else 1.0
        confident = runner_err > 0.0
    else:
        margin = runner_err / best_err
        confident = margin >= CONFIDENCE_MARGIN
    return ClassificationReport(best_class=best, fits=fits, margin=margin, confident=confident)


def samples_to_csv(samples: Sequence[StepSample]) -> str:
    lines = ["n,t_max"]
    lines.extend(f"{s.n},{s.t_max}" for s in samples)
    return "\n".join(lines) + "\n"
