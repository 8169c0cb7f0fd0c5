"""Simple undirected graphs on 1-indexed vertex sets.

Provides the graph value type plus the operations the rest of the toolkit
needs: degrees, exact per-vertex independence numbers, seeded random
instances, greedy coloring, and JSON round-tripping.
"""

from __future__ import annotations

import json
import random
from itertools import combinations

from .errors import ParseError, RangeError, SizeLimitExceeded

DEFAULT_EXACT_LIMIT = 40


class Graph:
    """Simple undirected graph on vertices 1..n, adjacency as neighbor sets."""

    __slots__ = ("n", "_adj", "_masks")

    def __init__(self, n, edges=()):
        if not isinstance(n, int) or isinstance(n, bool) or n < 1:
            raise ValueError(f"vertex count must be a positive integer, got {n!r}")
        adj = [set() for _ in range(n + 1)]
        for u, v in edges:
            _check_vertex(u, n)
            _check_vertex(v, n)
            if u == v:
                raise RangeError(f"self-loop at vertex {u}")
            adj[u].add(v)
            adj[v].add(u)
        self.n = n
        self._adj = tuple(frozenset(s) for s in adj)
        self._masks = None

    def neighbors(self, v):
        _check_vertex(v, self.n)
        return self._adj[v]

    def degree(self, v):
        return len(self.neighbors(v))

    def has_edge(self, u, v):
        return v in self.neighbors(u)

    def edges(self):
        """All edges as (u, v) with u < v, lexicographically sorted."""
        return [(u, v) for u in range(1, self.n + 1)
                for v in sorted(self._adj[u]) if u < v]

    def edge_count(self):
        return sum(len(s) for s in self._adj) // 2

    def adjacency_masks(self):
        """Per-vertex neighbor bitmasks, bit i set iff vertex i+1 is a neighbor."""
        if self._masks is None:
            masks = []
            for v in range(1, self.n + 1):
                m = 0
                for w in self._adj[v]:
                    m |= 1 << (w - 1)
                masks.append(m)
            self._masks = tuple(masks)
        return self._masks

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self._adj == other._adj

    def __hash__(self):
        return hash((self.n, self._adj))

    def __repr__(self):
        return f"Graph(n={self.n}, edges={self.edges()!r})"


def _check_vertex(v, n):
    if not isinstance(v, int) or isinstance(v, bool):
        raise RangeError(f"vertex label must be an integer, got {v!r}")
    if not 1 <= v <= n:
        raise RangeError(f"vertex label {v} outside 1..{n}")


def complete_graph(n):
    return Graph(n, combinations(range(1, n + 1), 2))


def empty_graph(n):
    return Graph(n)


def degrees(g):
    """Degree of each vertex; entry i-1 belongs to vertex i."""
    return [g.degree(v) for v in range(1, g.n + 1)]


def random_graph(n, p, seed):
    """Binomial random graph: each pair independently an edge with probability p.

    Pairs (u, v), u < v, are visited in lexicographic order and decided by one
    draw each from a Mersenne Twister (``random.Random``) seeded with ``seed``,
    so a given (n, p, seed) reproduces the same graph on any platform.
    """
    if not 0 <= p <= 1:
        raise ValueError(f"edge probability must lie in [0, 1], got {p!r}")
    rng = random.Random(seed)
    edges = [(u, v) for u in range(1, n + 1) for v in range(u + 1, n + 1)
             if rng.random() < p]
    return Graph(n, edges)


def greedy_coloring(g):
    """Proper coloring: vertices in label order, each taking the smallest free color."""
    colors = [0] * g.n
    for v in range(1, g.n + 1):
        taken = {colors[w - 1] for w in g.neighbors(v) if w < v}
        c = 0
        while c in taken:
            c += 1
        colors[v - 1] = c
    return colors


class _MisSolver:
    """Branch-and-bound maximum independent set over bitmask vertex sets.

    The bound at each node comes from a greedy partition of the candidate
    set into cliques: an independent set takes at most one vertex per
    clique.  Candidates are expanded in decreasing clique-class order so a
    single comparison prunes the whole remaining tail.
    """

    def __init__(self, masks):
        self.n = len(masks)
        self.adj = list(masks)
        self.best = 0

    def greedy_lower(self, mask, seed=0, tries=6):
        """Deterministic seeded greedy restarts; returns a feasible set size."""
        rng = random.Random(seed)
        verts = [v for v in range(self.n) if (mask >> v) & 1]
        best = 0
        for t in range(tries):
            if t == 0:
                order = sorted(verts, key=lambda v: (self.adj[v] & mask).bit_count())
            else:
                order = verts[:]
                rng.shuffle(order)
            avail = mask
            size = 0
            for v in order:
                if (avail >> v) & 1:
                    size += 1
                    avail &= ~(self.adj[v] | (1 << v))
            best = max(best, size)
        return best

    def max_independent(self, mask, lower=0):
        self.best = lower
        if mask:
            self._expand(mask, 0)
        return self.best

    def _expand(self, cand, size):
        adj = self.adj
        order = []
        numbers = []
        allowed = []  # per clique class: common neighborhood of its members
        queue = cand
        while queue:
            bit = queue & -queue
            v = bit.bit_length() - 1
            queue ^= bit
            for k, common in enumerate(allowed):
                if common & bit:
                    allowed[k] = common & adj[v]
                    order.append(v)
                    numbers.append(k + 1)
                    break
            else:
                allowed.append(adj[v])
                order.append(v)
                numbers.append(len(allowed))
        idx = sorted(range(len(order)), key=numbers.__getitem__)
        cur = cand
        for i in reversed(idx):
            if size + numbers[i] <= self.best:
                return
            v = order[i]
            if size + 1 > self.best:
                self.best = size + 1
            rest = cur & ~(adj[v] | (1 << v))
            if rest:
                self._expand(rest, size + 1)
            cur &= ~(1 << v)


def alpha_per_vertex(g, limit=DEFAULT_EXACT_LIMIT):
    """Exact maximum independent-set size through each vertex.

    Entry i-1 is the largest independent set of g containing vertex i,
    computed as 1 + the maximum independent set of the subgraph induced on
    the non-neighbors of i.  One branch-and-bound solver instance is shared
    across all n subproblems.  Raises SizeLimitExceeded when g.n > limit.
    """
    if g.n > limit:
        raise SizeLimitExceeded(
            f"exact independence numbers limited to n <= {limit}, got n = {g.n}")
    masks = g.adjacency_masks()
    solver = _MisSolver(masks)
    full = (1 << g.n) - 1
    out = []
    for i in range(g.n):
        sub = full & ~(masks[i] | (1 << i))
        lb = solver.greedy_lower(sub, seed=i)
        out.append(1 + solver.max_independent(sub, lb))
    return out


def parse_graph(text):
    """Parse the graph JSON format {"n": int, "edges": [[u, v], ...]}.

    Edges must satisfy 1 <= u < v <= n; duplicates are rejected.
    """
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(f"invalid JSON: {e.msg}", e.lineno, e.colno) from e
    if not isinstance(obj, dict):
        raise ParseError("graph document must be a JSON object")
    if set(obj) != {"n", "edges"}:
        raise ParseError('graph document must have exactly the keys "n" and "edges"')
    n = obj["n"]
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise ParseError(f'"n" must be a positive integer, got {n!r}')
    raw = obj["edges"]
    if not isinstance(raw, list):
        raise ParseError('"edges" must be a list of [u, v] pairs')
    edges = []
    seen = set()
    for item in raw:
        if (not isinstance(item, list)) or len(item) != 2:
            raise ParseError(f"edge entry must be a pair, got {item!r}")
        u, v = item
        _check_vertex(u, n)
        _check_vertex(v, n)
        if not u < v:
            raise ParseError(f"edge [{u}, {v}] must satisfy u < v")
        if (u, v) in seen:
            raise ParseError(f"duplicate edge [{u}, {v}]")
        seen.add((u, v))
        edges.append((u, v))
    return Graph(n, edges)


def serialize_graph(g):
    """Inverse of parse_graph; edges sorted, so the output is canonical."""
    return json.dumps({"n": g.n, "edges": [[u, v] for u, v in g.edges()]})
