"""Brute-force oracles the DP implementations are checked against.

These enumerate walk spaces or label assignments directly and never call the
dynamic-programming code paths they verify.
"""

from __future__ import annotations

import itertools
from collections import Counter

from giraw.counting import WalkModel
from giraw.trees import Tree, reroot


def enumerate_walk_labels(t: Tree, m: WalkModel):
    """All label vectors with label 0 at vertex 0, one per translation class."""
    order = reroot(t, 0).preorder_with_parent()
    for combo in itertools.product(m.steps, repeat=t.n - 1):
        labels = [0] * t.n
        for (v, parent), step in zip(order[1:], combo):
            labels[v] = labels[parent] + step
        yield tuple(labels)


def oracle_range_counts(t: Tree, m: WalkModel) -> Counter:
    """Range -> number of translation classes, by exhaustive walk enumeration."""
    return Counter(max(l) - min(l) for l in enumerate_walk_labels(t, m))


def oracle_f(t: Tree, k: int, m: WalkModel) -> int:
    """Classes with range <= k, by enumeration."""
    return sum(1 for l in enumerate_walk_labels(t, m) if max(l) - min(l) <= k)


def oracle_F(t: Tree, k: int, m: WalkModel) -> int:
    """Labelings with labels in [0, k]: each class of range r admits k-r+1 shifts."""
    total = 0
    for l in enumerate_walk_labels(t, m):
        r = max(l) - min(l)
        if r <= k:
            total += k - r + 1
    return total


def oracle_F_direct(t: Tree, k: int, m: WalkModel) -> int:
    """Labelings counted by raw assignment enumeration over [0, k]^n.

    Exponential in n*k; only for tiny inputs, to validate oracle_F itself.
    """
    limit = 1 if m is WalkModel.STANDARD else 0
    count = 0
    for labels in itertools.product(range(k + 1), repeat=t.n):
        if all(limit <= abs(labels[u] - labels[v]) <= 1 for u, v in t.edges):
            count += 1
    return count


def tree_from_prufer(seq: list[int]) -> Tree:
    """Decode a Prufer sequence into the labeled tree on len(seq)+2 vertices."""
    n = len(seq) + 2
    degree = [1] * n
    for x in seq:
        degree[x] += 1
    edges = []
    seq = list(seq)
    for x in seq:
        leaf = min(v for v in range(n) if degree[v] == 1)
        edges.append((min(leaf, x), max(leaf, x)))
        degree[leaf] -= 1
        degree[x] -= 1
    u, v = [x for x in range(n) if degree[x] == 1]
    edges.append((u, v))
    return Tree(n=n, edges=tuple(edges))


def free_tree_classes_by_prufer(n: int) -> set:
    """Canonical forms of all isomorphism classes of trees on n vertices.

    Enumerates every labeled tree via Prufer sequences; independent of the
    level-sequence generator it checks.
    """
    if n == 1:
        return {Tree(1, ()).canonical_form()}
    if n == 2:
        return {Tree(2, ((0, 1),)).canonical_form()}
    return {
        tree_from_prufer(list(seq)).canonical_form()
        for seq in itertools.product(range(n), repeat=n - 2)
    }
