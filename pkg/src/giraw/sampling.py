"""Uniform sampling from the walk space of a tree and Monte Carlo estimates.

Because a tree imposes no global constraint, a uniform walk is just an
independent uniform step on every edge, assigned along a root-to-leaf
orientation. Sampling is therefore exact, no rejection or MCMC.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .counting import (
    WalkModel,
    endpoint_difference_distribution,
    range_distribution,
)
from .trees import RootedTree, Tree, reroot


@dataclass(frozen=True)
class WalkSample:
    labels: tuple[int, ...]
    model: WalkModel
    seed: int
    index: int  # draw index within the seeded stream

    @property
    def range(self) -> int:
        return max(self.labels) - min(self.labels)


class WalkSampler:
    """Seeded stream of uniform walk samples on a rooted tree."""

    def __init__(self, t: RootedTree, m: WalkModel, seed: int):
        self.tree = t
        self.model = m
        self.seed = seed
        self._rng = np.random.default_rng(seed)
        self._order = t.preorder_with_parent()
        self._index = 0

    def sample(self) -> WalkSample:
        labels = self.sample_labels(1)[0]
        self._index += 1
        return WalkSample(
            labels=tuple(int(x) for x in labels),
            model=self.model,
            seed=self.seed,
            index=self._index - 1,
        )

    def sample_labels(self, count: int) -> np.ndarray:
        """(count, n) matrix of labels; each row is one uniform walk, root label 0."""
        n = self.tree.n
        steps = np.asarray(self.model.steps)
        draws = self._rng.integers(0, len(steps), size=(count, n - 1))
        labels = np.zeros((count, n), dtype=np.int64)
        for e, (v, parent) in enumerate(self._order[1:]):
            labels[:, v] = labels[:, parent] + steps[draws[:, e]]
        return labels


def sample_walk(t: RootedTree, m: WalkModel, sampler: WalkSampler) -> WalkSample:
    """Draw one uniform walk from a caller-supplied seeded sampler stream."""
    if sampler.tree is not t or sampler.model is not m:
        raise ValueError("sampler was built for a different tree or model")
    return sampler.sample()


@dataclass(frozen=True)
class EstimateReport:
    statistic: str
    samples: int
    estimate: float
    std_error: float
    exact: Fraction | None
    seed: int

    @property
    def deviation(self) -> float | None:
        if self.exact is None:
            return None
        return abs(self.estimate - float(self.exact))

    def to_json_dict(self) -> dict:
        d = {
            "statistic": self.statistic,
            "samples": self.samples,
            "estimate": self.estimate,
            "std_error": self.std_error,
            "seed": self.seed,
        }
        if self.exact is not None:
            d["exact"] = f"{self.exact.numerator}/{self.exact.denominator}"
            d["deviation"] = self.deviation
        return d


def _mean_report(name: str, values: np.ndarray, exact: Fraction | None, seed: int) -> EstimateReport:
    count = len(values)
    mean = float(values.mean())
    se = float(values.std(ddof=1) / math.sqrt(count)) if count > 1 else 0.0
    return EstimateReport(
        statistic=name, samples=count, estimate=mean, std_error=se, exact=exact, seed=seed
    )


def estimate_expected_range(
    t: Tree, m: WalkModel, samples: int, seed: int
) -> EstimateReport:
    """Monte Carlo E[Range] with the exact value attached for cross-check."""
    if samples < 1:
        raise ValueError("need at least one sample")
    sampler = WalkSampler(reroot(t, 0), m, seed)
    labels = sampler.sample_labels(samples)
    ranges = labels.max(axis=1) - labels.min(axis=1)
    exact = range_distribution(t, m).expected_range()
    return _mean_report("expected_range", ranges, exact, seed)


def estimate_pair_distance(
    t: Tree, u: int, v: int, m: WalkModel, samples: int, seed: int
) -> EstimateReport:
    """Monte Carlo E|f(u) - f(v)| with the exact value attached."""
    if samples < 1:
        raise ValueError("need at least one sample")
    sampler = WalkSampler(reroot(t, 0), m, seed)
    labels = sampler.sample_labels(samples)
    diffs = np.abs(labels[:, u] - labels[:, v])
    dist = endpoint_difference_distribution(t, u, v, m)
    exact = sum((abs(x) * p for x, p in dist.items()), Fraction(0))
    return _mean_report("pair_distance", diffs, exact, seed)
