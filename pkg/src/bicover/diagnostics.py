"""Executable diagnostics for the probabilistic devices behind the bounds.

Each check replays one step of the randomized argument that yields a
capacity bound: binomial tail sums staying below one, near-match events
being pairwise disjoint, the convex surrogate of the tail, occupancy-capped
event families, and occurring-event sets being independent in the target
graph.  Probability computations are exact rationals; exhaustive modes
sweep all 2^m block-selection vectors, sampled modes draw seeded vectors.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .bounds import binom_tail_p
from .covering import incidence_counts, membership_masks, verify
from .errors import DomainError, InvalidCovering, SizeLimitExceeded
from .graphs import alpha_per_vertex

EXHAUSTIVE_BLOCK_LIMIT = 20


@dataclass(frozen=True)
class EventProfile:
    """Per-vertex block incidence split by side, plus the tail threshold r."""

    n: int
    m: int
    r: int
    a_masks: tuple   # bit i set iff the vertex is in the left side of block i+1
    b_masks: tuple
    x: tuple         # total blocks containing each vertex


def event_profile(cov, lam):
    a, b = membership_masks(cov)
    return EventProfile(
        n=cov.n, m=len(cov.blocks), r=(lam - 1) // 2,
        a_masks=tuple(a[1:]), b_masks=tuple(b[1:]),
        x=tuple(incidence_counts(cov)))


@dataclass
class DiagnosticReport:
    check: str
    mode: str
    ok: bool
    sum: Fraction | None = None
    violations: tuple = ()
    trials: int | None = None
    details: dict = field(default_factory=dict)

    def to_json(self):
        s = None
        if self.sum is not None:
            s = f"{self.sum.numerator}/{self.sum.denominator}"
        return json.dumps({
            "check": self.check,
            "mode": self.mode,
            "ok": self.ok,
            "sum": s,
            "violations": [list(v) if isinstance(v, tuple) else v
                           for v in self.violations],
            "trials": self.trials,
            **({"details": self.details} if self.details else {}),
        })


def _require_valid(cov, target, lam, label):
    report = verify(cov, target, lam)
    if not report.ok:
        raise InvalidCovering(
            f"{label} needs a valid covering; {len(report.violating_pairs)} "
            f"pairs fall below {lam}")
    return report


def check_tail_sum(cov, lam):
    """Sum of exact binomial tail probabilities p(x_j, r); at most 1 when valid.

    With r = floor((lam-1)/2), the events 'at most r of vertex j's block
    sides disagree with a uniform selection vector' are pairwise disjoint
    for a valid covering, so their probabilities sum to at most 1.
    """
    _require_valid(cov, cov.n, lam, "tail sum")
    prof = event_profile(cov, lam)
    total = sum((binom_tail_p(xj, prof.r) for xj in prof.x), Fraction(0))
    return DiagnosticReport("tail-sum", "exact", ok=total <= 1, sum=total)


def check_event_disjointness(cov, lam, mode="exhaustive", seed=0,
                             trials=100_000,
                             exhaustive_limit=EXHAUSTIVE_BLOCK_LIMIT):
    """No selection vector may trigger the near-match event of two vertices.

    Vertex j's event occurs when at most r of its block memberships
    disagree with the vector (left sides read the vector bit as 0, right
    sides as 1).  Exhaustive mode sweeps all 2^m vectors and additionally
    recounts each event's probability against the exact binomial tail;
    sampled mode draws seeded vectors and reports observed violations only.
    """
    _require_valid(cov, cov.n, lam, "event disjointness")
    prof = event_profile(cov, lam)
    if mode == "exhaustive":
        if prof.m > exhaustive_limit:
            raise SizeLimitExceeded(
                f"{prof.m} blocks exceed the exhaustive sweep limit "
                f"{exhaustive_limit}")
        return _disjointness_exhaustive(prof)
    if mode == "sampled":
        return _disjointness_sampled(prof, seed, trials)
    raise DomainError(f"unknown mode {mode!r}")


def _disjointness_exhaustive(prof):
    m, r = prof.m, prof.r
    vecs = np.arange(1 << m, dtype=np.uint32)
    occ = np.zeros(1 << m, dtype=np.uint32)
    violations = []
    for j in range(prof.n):
        a = np.uint32(prof.a_masks[j])
        b = np.uint32(prof.b_masks[j])
        hits = np.bitwise_count(vecs & a) + np.bitwise_count(~vecs & b)
        ev = hits <= r
        occ += ev
        count = int(np.count_nonzero(ev))
        if Fraction(count, 1 << m) != binom_tail_p(prof.x[j], r):
            violations.append(("probability-mismatch", j + 1, count))
    doubles = np.nonzero(occ >= 2)[0]
    for v in doubles[:10]:
        events = [j + 1 for j in range(prof.n)
                  if _event_occurs(prof, j, int(v), r)]
        violations.append(("double-occurrence", int(v), events))
    return DiagnosticReport(
        "event-disjointness", "exhaustive", ok=not violations,
        violations=tuple(violations),
        details={"vectors": 1 << m, "double_occurrences": int(len(doubles))})


def _disjointness_sampled(prof, seed, trials):
    rng = random.Random(seed)
    violations = []
    for _ in range(trials):
        v = rng.getrandbits(prof.m) if prof.m else 0
        occurring = [j + 1 for j in range(prof.n)
                     if _event_occurs(prof, j, v, prof.r)]
        if len(occurring) > 1 and len(violations) < 10:
            violations.append(("double-occurrence", v, occurring))
    return DiagnosticReport(
        "event-disjointness", "sampled", ok=not violations,
        violations=tuple(violations), trials=trials)


def _event_occurs(prof, j, v, r):
    hits = (v & prof.a_masks[j]).bit_count() + (~v & prof.b_masks[j]).bit_count()
    return hits <= r


def check_convex_tail_bound(cov, lam):
    """Sum of (x_j/r)^r * 2^(-x_j) stays at most 1; needs lam >= 3 (r >= 1).

    The summand is a pointwise lower bound on the exact tail p(x_j, r);
    both facts are checked, each in exact rational arithmetic.
    """
    r = (lam - 1) // 2
    if r < 1:
        raise DomainError(f"convex tail bound needs lam >= 3, got lam = {lam}")
    _require_valid(cov, cov.n, lam, "convex tail bound")
    prof = event_profile(cov, lam)
    total = Fraction(0)
    violations = []
    for j, xj in enumerate(prof.x):
        surrogate = Fraction(xj, r) ** r / (1 << xj)
        total += surrogate
        if binom_tail_p(xj, r) < surrogate:
            violations.append(("pointwise", j + 1, xj))
    return DiagnosticReport(
        "convex-tail-bound", "exact", ok=total <= 1 and not violations,
        sum=total, violations=tuple(violations))


def check_convexity(r, x_lo, x_hi, steps=1000, tol=1e-12):
    """Nonnegative second central differences of (x/r)^r * 2^(-x) on a grid.

    The function is convex for x >= 2r + 1, the regime the tail argument
    uses; the grid sweep certifies it numerically on [x_lo, x_hi].
    """
    if r < 1:
        raise DomainError(f"need r >= 1, got {r}")
    if x_lo < 2 * r + 1:
        raise DomainError(f"need x_lo >= 2r + 1 = {2 * r + 1}, got {x_lo}")
    if x_hi <= x_lo or steps < 2:
        raise DomainError("need x_hi > x_lo and steps >= 2")
    h = (x_hi - x_lo) / steps
    values = [(((x_lo + i * h) / r) ** r) * 2 ** (-(x_lo + i * h))
              for i in range(steps + 1)]
    worst = min(values[i - 1] - 2 * values[i] + values[i + 1]
                for i in range(1, steps))
    violations = tuple(
        ("second-difference", x_lo + i * h)
        for i in range(1, steps)
        if values[i - 1] - 2 * values[i] + values[i + 1] < -tol)
    return DiagnosticReport(
        "convexity", "grid", ok=not violations, violations=violations,
        details={"r": r, "x_lo": x_lo, "x_hi": x_hi, "steps": steps,
                 "min_second_difference": worst})


def check_event_overlap(cov, g, alphas=None, mode="exhaustive", seed=0,
                        trials=100_000, limit=None,
                        exhaustive_limit=EXHAUSTIVE_BLOCK_LIMIT):
    """Occupancy-weighted event sum: sum of 2^(-x_j) / alpha_j is at most 1.

    Vertex j's event is an exact side match of the selection vector.  Any
    vector in j's event triggers at most alpha_j events in total (the
    occurring set is independent), which caps the weighted sum by 1.
    Exhaustive mode verifies that occupancy hypothesis vector by vector.
    """
    _require_valid(cov, g, 1, "event overlap")
    if alphas is None:
        kwargs = {} if limit is None else {"limit": limit}
        alphas = alpha_per_vertex(g, **kwargs)
    prof = event_profile(cov, 1)
    total = sum((Fraction(1, (1 << xj) * alphas[j]) for j, xj in enumerate(prof.x)),
                Fraction(0))
    violations = []
    trials_out = None
    if mode == "exhaustive":
        if prof.m > exhaustive_limit:
            raise SizeLimitExceeded(
                f"{prof.m} blocks exceed the exhaustive sweep limit "
                f"{exhaustive_limit}")
        sweep = range(1 << prof.m)
    elif mode == "sampled":
        rng = random.Random(seed)
        sweep = (rng.getrandbits(prof.m) if prof.m else 0
                 for _ in range(trials))
        trials_out = trials
    else:
        raise DomainError(f"unknown mode {mode!r}")
    for v in sweep:
        occurring = _matching_vertices(prof, v)
        for j in occurring:
            if len(occurring) > alphas[j - 1]:
                violations.append(("occupancy", v, j, len(occurring)))
                break
        if len(violations) >= 10:
            break
    return DiagnosticReport(
        "event-overlap", mode, ok=total <= 1 and not violations,
        sum=total, violations=tuple(violations), trials=trials_out)


def check_independent_event_sets(cov, g, mode="exhaustive", seed=0,
                                 trials=100_000,
                                 exhaustive_limit=EXHAUSTIVE_BLOCK_LIMIT):
    """The vertices whose exact-match events occur form an independent set of g."""
    _require_valid(cov, g, 1, "independent event sets")
    prof = event_profile(cov, 1)
    if mode == "exhaustive":
        if prof.m > exhaustive_limit:
            raise SizeLimitExceeded(
                f"{prof.m} blocks exceed the exhaustive sweep limit "
                f"{exhaustive_limit}")
        sweep = range(1 << prof.m)
        trials_out = None
    elif mode == "sampled":
        rng = random.Random(seed)
        sweep = (rng.getrandbits(prof.m) if prof.m else 0
                 for _ in range(trials))
        trials_out = trials
    else:
        raise DomainError(f"unknown mode {mode!r}")
    violations = []
    for v in sweep:
        occurring = _matching_vertices(prof, v)
        edge = _first_adjacent_pair(g, occurring)
        if edge is not None:
            violations.append(("adjacent-pair", v) + edge)
            if len(violations) >= 10:
                break
    return DiagnosticReport(
        "independent-event-sets", mode, ok=not violations,
        violations=tuple(violations), trials=trials_out)


def _first_adjacent_pair(g, vertices):
    for i, u in enumerate(vertices):
        for w in vertices[i + 1:]:
            if g.has_edge(u, w):
                return (u, w)
    return None


def _matching_vertices(prof, v):
    """Vertices whose blocks all read their side's bit from v (exact match)."""
    out = []
    for j in range(prof.n):
        if (v & prof.a_masks[j]) == 0 and (v & prof.b_masks[j]) == prof.b_masks[j]:
            out.append(j + 1)
    return out
