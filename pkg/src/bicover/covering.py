"""Bipartite coverings of complete multigraphs and general graphs.

A covering is an ordered list of complete bipartite blocks on a common
ground set 1..n.  A block separates a vertex pair when the two vertices
land on opposite sides; the covering is valid for a target (all pairs of
K_n, or the edges of a graph) at level lam when every required pair is
separated by at least lam blocks.  Capacity is the total number of block
vertices, the quantity all bounds in this toolkit speak about.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import combinations
from math import comb

from .codes import sylvester_matrix
from .errors import (DomainError, GroundSetMismatch, ImproperColoring,
                     NotEnoughCodewords, OverlapError, ParseError, RangeError,
                     SizeLimitExceeded)
from .graphs import Graph


class BipartiteBlock:
    """One complete bipartite graph, given by its two disjoint vertex classes."""

    __slots__ = ("left", "right")

    def __init__(self, left, right):
        left = frozenset(left)
        right = frozenset(right)
        if not left or not right:
            raise DomainError("block sides must both be nonempty")
        if left & right:
            raise OverlapError(f"block sides intersect in {sorted(left & right)}")
        self.left = left
        self.right = right

    @property
    def size(self):
        return len(self.left) + len(self.right)

    @property
    def vertices(self):
        return self.left | self.right

    def separates(self, u, v):
        return ((u in self.left and v in self.right)
                or (v in self.left and u in self.right))

    def __eq__(self, other):
        if not isinstance(other, BipartiteBlock):
            return NotImplemented
        return self.left == other.left and self.right == other.right

    def __hash__(self):
        return hash((self.left, self.right))

    def __repr__(self):
        return f"BipartiteBlock({sorted(self.left)}, {sorted(self.right)})"


class Covering:
    """Ground-set size plus an ordered list of bipartite blocks."""

    __slots__ = ("n", "blocks")

    def __init__(self, n, blocks=()):
        if not isinstance(n, int) or isinstance(n, bool) or n < 1:
            raise ValueError(f"ground-set size must be a positive integer, got {n!r}")
        blocks = tuple(blocks)
        for b in blocks:
            for v in b.vertices:
                if not isinstance(v, int) or not 1 <= v <= n:
                    raise RangeError(f"block vertex {v!r} outside 1..{n}")
        self.n = n
        self.blocks = blocks

    def __eq__(self, other):
        if not isinstance(other, Covering):
            return NotImplemented
        return self.n == other.n and self.blocks == other.blocks

    def __hash__(self):
        return hash((self.n, self.blocks))

    def __len__(self):
        return len(self.blocks)

    def __repr__(self):
        return f"Covering(n={self.n}, blocks={len(self.blocks)})"


@dataclass
class CoverageReport:
    """Outcome of checking a covering against a target at level lam."""

    n: int
    lam: int
    target_kind: str              # "complete" or "graph"
    pair_count: int
    min_multiplicity: int | None  # None when the target has no required pairs
    violating_pairs: tuple        # pairs separated fewer than lam times, sorted
    histogram: dict               # multiplicity -> number of required pairs

    @property
    def ok(self):
        return not self.violating_pairs

    def to_json(self):
        return json.dumps({
            "n": self.n,
            "lambda": self.lam,
            "target_kind": self.target_kind,
            "pair_count": self.pair_count,
            "min_multiplicity": self.min_multiplicity,
            "ok": self.ok,
            "violating_pairs": [list(p) for p in self.violating_pairs],
            "histogram": {str(k): v for k, v in sorted(self.histogram.items())},
        })


def capacity(cov):
    """Total number of block vertices; equals the sum of incidence counts."""
    return sum(b.size for b in cov.blocks)


def incidence_counts(cov):
    """Number of blocks containing each vertex; entry j-1 belongs to vertex j."""
    x = [0] * cov.n
    for b in cov.blocks:
        for v in b.vertices:
            x[v - 1] += 1
    return x


def membership_masks(cov):
    """Per-vertex bitmasks over block indices: (left-side masks, right-side masks)."""
    a = [0] * (cov.n + 1)
    b = [0] * (cov.n + 1)
    for i, blk in enumerate(cov.blocks):
        bit = 1 << i
        for v in blk.left:
            a[v] |= bit
        for v in blk.right:
            b[v] |= bit
    return a, b


def verify(cov, target, lam):
    """Count separating blocks for every required pair of the target.

    ``target`` is an integer n (all pairs of the complete graph on 1..n,
    i.e. K_n^lam) or a Graph (its edges).  Violations are reported as data,
    not raised.
    """
    if lam < 1:
        raise DomainError(f"coverage level must be >= 1, got {lam}")
    if isinstance(target, Graph):
        if cov.n != target.n:
            raise GroundSetMismatch(
                f"covering on {cov.n} vertices vs graph on {target.n}")
        pairs = target.edges()
        kind = "graph"
    else:
        if cov.n != target:
            raise GroundSetMismatch(
                f"covering on {cov.n} vertices vs complete target on {target}")
        pairs = combinations(range(1, target + 1), 2)
        kind = "complete"
    a, b = membership_masks(cov)
    hist = [0] * (len(cov.blocks) + 1)
    violating = []
    count = 0
    for u, v in pairs:
        mult = ((a[u] & b[v]) | (b[u] & a[v])).bit_count()
        hist[mult] += 1
        count += 1
        if mult < lam:
            violating.append((u, v))
    mn = None
    for mult, c in enumerate(hist):
        if c:
            mn = mult
            break
    return CoverageReport(
        n=cov.n, lam=lam, target_kind=kind, pair_count=count,
        min_multiplicity=mn, violating_pairs=tuple(violating),
        histogram={m: c for m, c in enumerate(hist) if c})


def code_to_covering(code, n):
    """Blocks from the bit rows of a code matrix whose columns are codewords.

    The first n codewords become the columns of a (length x n) 0/1 matrix;
    row i yields the block splitting the zero columns from the one columns.
    Rows constant across the first n codewords separate nothing and are
    dropped; ``degenerate_rows`` lists them.  Capacity is therefore at most
    n * code.length, and any two vertices are separated by exactly the
    Hamming distance of their codewords.
    """
    if n < 2:
        raise DomainError(f"need a ground set of at least 2 vertices, got {n}")
    if len(code.words) < n:
        raise NotEnoughCodewords(
            f"code has {len(code.words)} words, ground set needs {n}")
    cols = code.words[:n]
    k = code.length
    blocks = []
    for row in range(k):
        bit = k - 1 - row  # row 0 reads the leftmost (most significant) bit
        right = frozenset(j + 1 for j, w in enumerate(cols) if (w >> bit) & 1)
        if not right or len(right) == n:
            continue
        left = frozenset(range(1, n + 1)) - right
        blocks.append(BipartiteBlock(left, right))
    return Covering(n, blocks)


def degenerate_rows(code, n):
    """Row indices (0-based) that code_to_covering drops for this ground set."""
    cols = code.words[:n]
    k = code.length
    out = []
    for row in range(k):
        bit = k - 1 - row
        ones = sum((w >> bit) & 1 for w in cols)
        if ones == 0 or ones == n:
            out.append(row)
    return out


def hadamard_covering(m):
    """Covering of K_n^(n/2) for n = 2^m from the rows of a Sylvester matrix.

    Each row except the all-ones first one splits the columns by sign.  Any
    two distinct columns disagree in exactly n/2 rows, none of them the
    first, so every pair is separated exactly n/2 times and the capacity is
    n(n-1), meeting the edge-count lower bound with equality.
    """
    h = sylvester_matrix(m)
    n = 1 << m
    blocks = []
    for row in range(1, n):
        left = frozenset(j + 1 for j in range(n) if h[row, j] == 1)
        right = frozenset(j + 1 for j in range(n) if h[row, j] == -1)
        blocks.append(BipartiteBlock(left, right))
    return Covering(n, blocks)


def balanced_bipartitions_covering(n, max_blocks=1 << 20):
    """One block per unordered bipartition of 1..n into two halves of size n/2.

    Separates every pair exactly C(n-2, n/2-1) times; capacity n*C(n, n/2)/2,
    again matching the edge-count lower bound with equality.
    """
    if n < 2 or n % 2:
        raise DomainError(f"ground-set size must be even and >= 2, got {n}")
    half = n // 2
    count = comb(n, half) // 2
    if count > max_blocks:
        raise SizeLimitExceeded(f"{count} blocks exceed the cap of {max_blocks}")
    ground = frozenset(range(1, n + 1))
    blocks = []
    for rest in combinations(range(2, n + 1), half - 1):
        left = frozenset((1,) + rest)
        blocks.append(BipartiteBlock(left, ground - left))
    return Covering(n, blocks)


def covering_sum(a, b):
    """Concatenate block lists; capacities and per-pair multiplicities add."""
    if a.n != b.n:
        raise GroundSetMismatch(f"ground sets differ: {a.n} vs {b.n}")
    return Covering(a.n, a.blocks + b.blocks)


def coloring_to_covering(g, coloring):
    """Covering of a graph's edges from the bits of a proper coloring.

    Block t splits the vertices by bit t of their color index (zeros left,
    ones right); adjacent vertices have distinct colors, hence differ in
    some bit, so every edge is covered at least once.  Blocks whose sides
    would be empty are dropped.
    """
    if len(coloring) != g.n:
        raise DomainError(
            f"coloring has {len(coloring)} entries for {g.n} vertices")
    for c in coloring:
        if not isinstance(c, int) or isinstance(c, bool) or c < 0:
            raise DomainError(f"color indices must be nonnegative integers, got {c!r}")
    for u, v in g.edges():
        if coloring[u - 1] == coloring[v - 1]:
            raise ImproperColoring(
                f"adjacent vertices {u} and {v} share color {coloring[u - 1]}")
    classes = max(coloring) + 1 if coloring else 1
    bits = (classes - 1).bit_length()
    blocks = []
    for t in range(bits):
        right = frozenset(v for v in range(1, g.n + 1)
                          if (coloring[v - 1] >> t) & 1)
        if not right or len(right) == g.n:
            continue
        left = frozenset(range(1, g.n + 1)) - right
        blocks.append(BipartiteBlock(left, right))
    return Covering(g.n, blocks)


def parse_covering(text):
    """Parse the covering JSON format {"n": int, "blocks": [{"left": [...], "right": [...]}]}."""
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(f"invalid JSON: {e.msg}", e.lineno, e.colno) from e
    if not isinstance(obj, dict) or set(obj) != {"n", "blocks"}:
        raise ParseError('covering document must have exactly the keys "n" and "blocks"')
    n = obj["n"]
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise ParseError(f'"n" must be a positive integer, got {n!r}')
    if not isinstance(obj["blocks"], list):
        raise ParseError('"blocks" must be a list')
    blocks = []
    for item in obj["blocks"]:
        if not isinstance(item, dict) or set(item) != {"left", "right"}:
            raise ParseError(f"block entry must map left and right, got {item!r}")
        sides = []
        for key in ("left", "right"):
            side = item[key]
            if not isinstance(side, list) or not side:
                raise ParseError(f'block side "{key}" must be a nonempty list')
            for v in side:
                if not isinstance(v, int) or isinstance(v, bool):
                    raise ParseError(f"vertex label must be an integer, got {v!r}")
                if not 1 <= v <= n:
                    raise RangeError(f"vertex label {v} outside 1..{n}")
            if len(set(side)) != len(side):
                raise ParseError(f'duplicate vertex in block side "{key}"')
            sides.append(side)
        blocks.append(BipartiteBlock(sides[0], sides[1]))
    return Covering(n, blocks)


def serialize_covering(cov):
    """Inverse of parse_covering; sides sorted, block order preserved."""
    return json.dumps({
        "n": cov.n,
        "blocks": [{"left": sorted(b.left), "right": sorted(b.right)}
                   for b in cov.blocks],
    })
