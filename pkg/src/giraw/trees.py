"""Tree representation, parsing, constructors, and free-tree generation.

Trees use dense 0-based vertex ids so downstream dynamic programming can be
array-indexed. All structures are immutable after construction.
"""

from __future__ import annotations

import os
from collections import deque
from dataclasses import dataclass, field
from typing import Iterator

import networkx as nx

# Known counts of non-isomorphic free trees, n = 1, 2, 3, ... (OEIS A000055).
FREE_TREE_COUNTS = (1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235, 551, 1301, 3159)

DEFAULT_MAX_N = 16


class TreeError(ValueError):
    """Raised for structurally invalid tree inputs."""


class TreeParseError(TreeError):
    """Raised when edge-list text cannot be parsed; carries line context."""


@dataclass(frozen=True)
class Tree:
    """Undirected tree on vertices 0..n-1, stored as an edge list."""

    n: int
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        if self.n < 1:
            raise TreeError(f"vertex count must be >= 1, got {self.n}")
        if len(self.edges) != self.n - 1:
            raise TreeError(
                f"a tree on {self.n} vertices needs {self.n - 1} edges, got {len(self.edges)}"
            )
        seen = set()
        for u, v in self.edges:
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise TreeError(f"edge ({u}, {v}) out of range for n={self.n}")
            if u == v:
                raise TreeError(f"self-loop at vertex {u}")
            key = (min(u, v), max(u, v))
            if key in seen:
                raise TreeError(f"duplicate edge ({u}, {v})")
            seen.add(key)
        # n-1 distinct edges on n vertices form a tree iff the graph is connected
        if len(self._component_of(0)) != self.n:
            raise TreeError("graph is not connected")

    def _component_of(self, start: int) -> set[int]:
        adj = self.adjacency()
        seen = {start}
        stack = [start]
        while stack:
            u = stack.pop()
            for w in adj[u]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return seen

    def adjacency(self) -> list[list[int]]:
        adj: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        return adj

    def degrees(self) -> list[int]:
        deg = [0] * self.n
        for u, v in self.edges:
            deg[u] += 1
            deg[v] += 1
        return deg

    def distance(self, u: int, v: int) -> int:
        """Edge distance between u and v."""
        if not (0 <= u < self.n and 0 <= v < self.n):
            raise TreeError(f"vertex out of range: ({u}, {v})")
        adj = self.adjacency()
        dist = {u: 0}
        queue = deque([u])
        while queue:
            x = queue.popleft()
            if x == v:
                return dist[x]
            for w in adj[x]:
                if w not in dist:
                    dist[w] = dist[x] + 1
                    queue.append(w)
        raise TreeError("unreachable vertex")  # cannot happen on a tree

    def eccentricity(self, v: int) -> tuple[int, int]:
        """Return (farthest vertex, its distance) from v."""
        adj = self.adjacency()
        dist = {v: 0}
        queue = deque([v])
        far, far_d = v, 0
        while queue:
            x = queue.popleft()
            if dist[x] > far_d:
                far, far_d = x, dist[x]
            for w in adj[x]:
                if w not in dist:
                    dist[w] = dist[x] + 1
                    queue.append(w)
        return far, far_d

    def diameter(self) -> int:
        u, _ = self.eccentricity(0)
        _, d = self.eccentricity(u)
        return d

    def is_spider(self) -> bool:
        """At most one vertex of degree greater than 2. Paths count."""
        return sum(1 for d in self.degrees() if d > 2) <= 1

    def spider_legs(self) -> list[int]:
        """Leg lengths of a spider, measured from its branch vertex.

        For a path the "legs" are measured from vertex 0's farthest-path
        midpoint convention: we return the legs from an endpoint, i.e. [diameter].
        """
        if not self.is_spider():
            raise TreeError("tree is not a spider")
        deg = self.degrees()
        centers = [v for v in range(self.n) if deg[v] > 2]
        if not centers:
            return [self.diameter()] if self.n > 1 else []
        c = centers[0]
        adj = self.adjacency()
        legs = []
        for start in adj[c]:
            length = 1
            prev, cur = c, start
            while deg[cur] == 2:
                nxt = adj[cur][0] if adj[cur][0] != prev else adj[cur][1]
                prev, cur = cur, nxt
                length += 1
            legs.append(length)
        return sorted(legs, reverse=True)

    def canonical_form(self) -> tuple:
        """Isomorphism-invariant canonical encoding (AHU on a center root)."""
        if self.n == 1:
            return ()
        adj = self.adjacency()
        # find center(s) by leaf stripping
        deg = self.degrees()
        leaves = deque(v for v in range(self.n) if deg[v] == 1)
        removed = 0
        alive = [True] * self.n
        while self.n - removed > 2:
            for _ in range(len(leaves)):
                v = leaves.popleft()
                alive[v] = False
                removed += 1
                for w in adj[v]:
                    if alive[w]:
                        deg[w] -= 1
                        if deg[w] == 1:
                            leaves.append(w)
        centers = [v for v in range(self.n) if alive[v]]

        def encode(root: int, parent: int) -> tuple:
            return tuple(sorted(encode(w, root) for w in adj[root] if w != parent))

        return min(encode(c, -1) for c in centers)

    def serialize(self) -> str:
        return "".join(f"{u} {v}\n" for u, v in self.edges)


@dataclass(frozen=True)
class RootedTree:
    """Tree with an orientation away from a chosen root."""

    tree: Tree
    root: int
    children: tuple[tuple[int, ...], ...] = field(compare=False)

    @property
    def n(self) -> int:
        return self.tree.n

    def postorder(self) -> list[int]:
        """Vertices ordered so every child precedes its parent."""
        order: list[int] = []
        stack = [self.root]
        while stack:
            v = stack.pop()
            order.append(v)
            stack.extend(self.children[v])
        order.reverse()
        return order

    def preorder_with_parent(self) -> list[tuple[int, int]]:
        """(vertex, parent) pairs, root first with parent -1."""
        out = [(self.root, -1)]
        stack = [self.root]
        while stack:
            v = stack.pop()
            for c in self.children[v]:
                out.append((c, v))
                stack.append(c)
        return out


def reroot(t: Tree, root: int) -> RootedTree:
    if not (0 <= root < t.n):
        raise TreeError(f"root {root} out of range for n={t.n}")
    adj = t.adjacency()
    children: list[tuple[int, ...]] = [()] * t.n
    seen = [False] * t.n
    seen[root] = True
    stack = [root]
    while stack:
        v = stack.pop()
        kids = []
        for w in adj[v]:
            if not seen[w]:
                seen[w] = True
                kids.append(w)
                stack.append(w)
        children[v] = tuple(kids)
    return RootedTree(tree=t, root=root, children=tuple(children))


def make_path(a: int) -> RootedTree:
    """Path with a edges, rooted at endpoint vertex 0."""
    if a < 0:
        raise TreeError(f"path length must be >= 0, got {a}")
    edges = tuple((i, i + 1) for i in range(a))
    return reroot(Tree(n=a + 1, edges=edges), 0)


def make_spider(legs: list[int]) -> RootedTree:
    """Spider with the given leg lengths, rooted at the branch vertex 0."""
    if not legs:
        raise TreeError("spider needs at least one leg")
    if any(a < 1 for a in legs):
        raise TreeError(f"leg lengths must be >= 1, got {legs}")
    edges = []
    nxt = 1
    for a in legs:
        prev = 0
        for _ in range(a):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
    return reroot(Tree(n=nxt, edges=tuple(edges)), 0)


def make_star(leaves: int) -> RootedTree:
    return make_spider([1] * leaves)


def parse_tree(text: str) -> Tree:
    """Parse edge-list text: one `u v` pair per line, `#` comments allowed.

    Empty input parses as the single-vertex tree.
    """
    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    max_id = -1
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2:
            raise TreeParseError(f"line {lineno}: expected two vertex ids, got {raw!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise TreeParseError(f"line {lineno}: non-integer vertex id in {raw!r}") from None
        if u < 0 or v < 0:
            raise TreeParseError(f"line {lineno}: negative vertex id in {raw!r}")
        if u == v:
            raise TreeParseError(f"line {lineno}: self-loop at vertex {u}")
        key = (min(u, v), max(u, v))
        if key in seen:
            raise TreeParseError(f"line {lineno}: duplicate edge ({u}, {v})")
        seen.add(key)
        edges.append((u, v))
        max_id = max(max_id, u, v)
    if not edges:
        return Tree(n=1, edges=())
    n = max_id + 1
    try:
        return Tree(n=n, edges=tuple(edges))
    except TreeError as exc:
        raise TreeParseError(str(exc)) from None


def max_generation_n() -> int:
    """Generation size cap; overridable via the GIRAW_MAX_N environment variable."""
    raw = os.environ.get("GIRAW_MAX_N")
    if raw is None:
        return DEFAULT_MAX_N
    try:
        return int(raw)
    except ValueError:
        raise TreeError(f"GIRAW_MAX_N must be an integer, got {raw!r}") from None


def generate_free_trees(n: int) -> Iterator[Tree]:
    """Yield one representative per isomorphism class of free trees on n vertices.

    Backed by the level-sequence (WROM) generator; supports n up to
    max_generation_n() (default 16).
    """
    limit = max_generation_n()
    if not (1 <= n <= limit):
        raise TreeError(f"n must be in [1, {limit}], got {n}")
    if n == 1:
        yield Tree(n=1, edges=())
        return
    for g in nx.nonisomorphic_trees(n):
        yield Tree(n=n, edges=tuple(sorted((min(u, v), max(u, v)) for u, v in g.edges())))
