"""Exact big-integer counting of bounded walks on trees.

All counts are Python ints (arbitrary precision); probabilities are
fractions.Fraction. Nothing here touches floating point.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction

from .trees import RootedTree, Tree, reroot


class WalkModel(enum.Enum):
    STANDARD = "standard"
    LAZY = "lazy"

    @property
    def steps(self) -> tuple[int, ...]:
        return (-1, 1) if self is WalkModel.STANDARD else (-1, 0, 1)

    @property
    def steps_per_edge(self) -> int:
        return len(self.steps)


def profile(t: RootedTree, k: int, m: WalkModel) -> list[int]:
    """F_i^k profile of a rooted tree: entry i counts labelings with root label i.

    Bottom-up DP: a leaf's profile is all ones; an internal vertex multiplies,
    over its children, the sums of the child's profile at reachable labels.
    """
    if k < 0:
        raise ValueError(f"label bound must be >= 0, got {k}")
    lazy = m is WalkModel.LAZY
    profiles: dict[int, list[int]] = {}
    for v in t.postorder():
        prof = [1] * (k + 1)
        for c in t.children[v]:
            cp = profiles.pop(c)
            for i in range(k + 1):
                s = cp[i] if lazy else 0
                if i > 0:
                    s += cp[i - 1]
                if i < k:
                    s += cp[i + 1]
                prof[i] *= s
        profiles[v] = prof
    return profiles[t.root]


def count_bounded(t: Tree, k: int, m: WalkModel) -> int:
    """F^k: number of labelings with all labels in [0, k]."""
    return sum(profile(reroot(t, 0), k, m))


def range_classes(t: Tree, k: int, m: WalkModel) -> int:
    """f^k = F^k - F^(k-1): translation classes of walks with range <= k."""
    if k < 0:
        raise ValueError(f"label bound must be >= 0, got {k}")
    below = count_bounded(t, k - 1, m) if k >= 1 else 0
    return count_bounded(t, k, m) - below


@dataclass(frozen=True)
class RangeDistribution:
    """Exact distribution of the walk range over a tree's walk space."""

    n: int
    model: WalkModel
    class_counts: dict[int, int]  # range r -> number of translation classes
    denominator: int

    def probability(self, r: int) -> Fraction:
        return Fraction(self.class_counts.get(r, 0), self.denominator)

    def tail(self, k: int) -> Fraction:
        """P(Range >= k)."""
        below = sum(c for r, c in self.class_counts.items() if r < k)
        return Fraction(self.denominator - below, self.denominator)

    def expected_range(self) -> Fraction:
        total = sum(r * c for r, c in self.class_counts.items())
        return Fraction(total, self.denominator)

    def variance(self) -> Fraction:
        mu = self.expected_range()
        second = Fraction(
            sum(r * r * c for r, c in self.class_counts.items()), self.denominator
        )
        return second - mu * mu

    def max_range(self) -> int:
        return max((r for r, c in self.class_counts.items() if c), default=0)

    def to_json_dict(self) -> dict:
        diam = max(self.class_counts, default=0)
        return {
            "n": self.n,
            "model": self.model.value,
            "denominator": str(self.denominator),
            "class_counts": {str(r): str(c) for r, c in sorted(self.class_counts.items())},
            "tail": {
                str(k): f"{self.tail(k).numerator}/{self.tail(k).denominator}"
                for k in range(diam + 2)
            },
        }


def range_distribution(t: Tree, m: WalkModel) -> RangeDistribution:
    diam = t.diameter()
    f_prev = 0
    counts: dict[int, int] = {}
    for r in range(diam + 1):
        f_r = range_classes(t, r, m)
        counts[r] = f_r - f_prev
        f_prev = f_r
    return RangeDistribution(
        n=t.n,
        model=m,
        class_counts=counts,
        denominator=m.steps_per_edge ** (t.n - 1),
    )


def transfer(a: int, k: int, m: WalkModel) -> list[list[int]]:
    """Endpoint transfer table for the path with a edges.

    Entry [i][j] counts bounded labelings of P_a with endpoint labels i and j;
    computed by iterating the one-step band matrix.
    """
    if a < 0:
        raise ValueError(f"path length must be >= 0, got {a}")
    if k < 0:
        raise ValueError(f"label bound must be >= 0, got {k}")
    table = [[int(i == j) for j in range(k + 1)] for i in range(k + 1)]
    steps = m.steps
    for _ in range(a):
        table = [
            [
                sum(row[j + d] for d in steps if 0 <= j + d <= k)
                for j in range(k + 1)
            ]
            for row in table
        ]
    return table


def path_profile(a: int, k: int, m: WalkModel) -> list[int]:
    """F_i^k(P_a) for i = 0..k, path rooted at an endpoint."""
    prof = [1] * (k + 1)
    steps = m.steps
    for _ in range(a):
        prof = [
            sum(prof[i + d] for d in steps if 0 <= i + d <= k) for i in range(k + 1)
        ]
    return prof


def f_start_count(a: int, k: int, i: int, m: WalkModel) -> int:
    """Bounded walks on P_a starting at label i that attain the ceiling k."""
    if not (0 <= i <= k):
        raise ValueError(f"start label {i} outside [0, {k}]")
    at_k = path_profile(a, k, m)[i]
    below = path_profile(a, k - 1, m)[i] if i <= k - 1 else 0
    return at_k - below


def endpoint_difference_distribution(
    t: Tree, u: int, v: int, m: WalkModel
) -> dict[int, Fraction]:
    """Exact distribution of f(u) - f(v) over uniform walks on t.

    On a tree the labels along the unique u-v path are d independent uniform
    steps, so this is a d-fold convolution of the step distribution.
    """
    if u == v:
        return {0: Fraction(1)}
    d = t.distance(u, v)
    steps = m.steps
    per = Fraction(1, len(steps))
    dist: dict[int, Fraction] = {0: Fraction(1)}
    for _ in range(d):
        new: dict[int, Fraction] = {}
        for x, p in dist.items():
            for s in steps:
                new[x + s] = new.get(x + s, Fraction(0)) + p * per
        dist = new
    return dict(sorted(dist.items()))
