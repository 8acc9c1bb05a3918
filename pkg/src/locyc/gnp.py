"""Seeded G(n,p) sampling and local edge-density audits.

The generator identity is recorded in every report: sampling is a pure
function of (n, p, seed, GENERATOR_ID), using geometric skipping over the
lexicographic pair sequence so sparse graphs cost O(m) draws.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass

from .errors import (
    HypothesisFailure,
    InputError,
    SizeLimitError,
)
from .extract import DensityParams, extract_cycle_density
from .graph import Graph

GENERATOR_ID = "python-random-mt19937/v1"

_SEED_MASK = (1 << 63) - 1


def derive_seed(seed: int, salt: int) -> int:
    """Stable integer-only sub-seed derivation (no string hashing)."""
    return (seed * 1_000_003 + 0x9E3779B9 * (salt + 1)) & _SEED_MASK


@dataclass(frozen=True)
class GnpSpec:
    n: int
    p: float
    seed: int

    def __post_init__(self):
        if self.n < 0:
            raise InputError(f"n must be >= 0, got {self.n}")
        if not 0.0 <= self.p <= 1.0:
            raise InputError(f"p must lie in [0,1], got {self.p}")


def sample_gnp(spec: GnpSpec) -> Graph:
    """Each vertex pair appears independently with probability p."""
    n, p = spec.n, spec.p
    if n < 2 or p == 0.0:
        return Graph(n, [])
    total = n * (n - 1) // 2
    edges = []
    if p == 1.0:
        u, v = 0, 0
        for u in range(n - 1):
            for v in range(u + 1, n):
                edges.append((u, v))
        return Graph(n, edges)
    rng = random.Random(spec.seed)
    log_q = math.log1p(-p)
    t = -1
    u = 0
    block_end = n - 1  # pairs with first vertex u occupy [block_start, block_end)
    block_start = 0
    while True:
        t += 1 + int(math.log1p(-rng.random()) / log_q)
        if t >= total:
            break
        while t >= block_end:
            u += 1
            block_start = block_end
            block_end += n - 1 - u
        edges.append((u, u + 1 + (t - block_start)))
    return Graph(n, edges)


def delta_of(c1: float, c2: float) -> float:
    """Relative size of the locally sparse window: (c2/(5 c1))^(c2/(c2-1))."""
    if not c1 > c2 > 1:
        raise InputError(f"need c1 > c2 > 1, got c1={c1}, c2={c2}")
    return (c2 / (5 * c1)) ** (c2 / (c2 - 1))


# ---------------------------------------------------------------------------
# local density audit
# ---------------------------------------------------------------------------

AUDIT_EXHAUSTIVE_CAP = 22


@dataclass(frozen=True)
class DensityReport:
    """Worst excess of induced_edge_count(R) - c2|R| over the examined R."""

    mode: str
    c2: float
    k_max: int
    min_size: int
    worst_set: tuple[int, ...]
    worst_excess: float
    passed: bool
    exact: bool

    def to_dict(self) -> dict:
        return {
            "mode": self.mode,
            "c2": self.c2,
            "k_max": self.k_max,
            "min_size": self.min_size,
            "worst_set": list(self.worst_set),
            "worst_excess": self.worst_excess,
            "passed": self.passed,
            "exact": self.exact,
        }


def audit_local_density(
    g: Graph,
    c2: float,
    k_max: int,
    mode: str = "exhaustive",
    samples: int = 50,
    seed: int = 0,
    min_size: int = 1,
) -> DensityReport:
    """Audit every (or a sampled set of) R with min_size <= |R| <= k_max.

    Exhaustive mode enumerates all subsets in the size window (n <= 22).
    Sampled mode draws `samples` random subsets per size and additionally
    runs a greedy densification pass; its verdict is heuristic only.
    """
    if c2 <= 0:
        raise InputError(f"c2 must be positive, got {c2}")
    if k_max < 1:
        raise InputError(f"k_max must be positive, got {k_max}")
    if not 1 <= min_size <= k_max:
        raise InputError(f"need 1 <= min_size <= k_max, got min_size={min_size}")
    k_cap = min(k_max, g.n)
    worst_excess = -math.inf
    worst_set: tuple[int, ...] = ()

    def consider(size: int, count: int, members) -> None:
        nonlocal worst_excess, worst_set
        excess = count - c2 * size
        if excess > worst_excess:
            worst_excess = excess
            worst_set = tuple(sorted(members))

    if mode == "exhaustive":
        if g.n > AUDIT_EXHAUSTIVE_CAP:
            raise SizeLimitError(
                f"exhaustive density audit capped at n <= {AUDIT_EXHAUSTIVE_CAP}, got {g.n}"
            )
        masks = g.neighbor_masks()
        chosen: list[int] = []

        def rec(start: int, mask: int, count: int):
            size = len(chosen)
            if size >= min_size:
                consider(size, count, chosen)
            if size == k_cap:
                return
            for v in range(start, g.n):
                chosen.append(v)
                rec(v + 1, mask | (1 << v), count + (masks[v] & mask).bit_count())
                chosen.pop()

        rec(0, 0, 0)
        if worst_excess == -math.inf:
            # empty graph corner: no subset examined can only happen if n = 0
            worst_excess = -c2 * min_size
        return DensityReport(
            mode="exhaustive",
            c2=c2,
            k_max=k_max,
            min_size=min_size,
            worst_set=worst_set,
            worst_excess=worst_excess,
            passed=worst_excess < 0,
            exact=True,
        )

    if mode == "sampled":
        if samples < 1:
            raise InputError("sampled mode needs at least one sample per size")
        rng = random.Random(seed)
        universe = list(range(g.n))
        adj = g._adj_sets
        for size in range(min_size, k_cap + 1):
            for _ in range(samples):
                members = rng.sample(universe, size)
                picked: set[int] = set()
                count = 0
                for v in members:
                    count += len(adj[v] & picked)
                    picked.add(v)
                consider(size, count, members)
        # greedy densification: grow around the highest-gain vertex
        if g.n:
            degree = [g.degree(v) for v in range(g.n)]
            seed_v = max(range(g.n), key=lambda v: (degree[v], -v))
            picked = {seed_v}
            count = 0
            gain = [len(adj[v] & picked) for v in range(g.n)]
            if 1 >= min_size:
                consider(1, 0, picked)
            while len(picked) < k_cap:
                candidates = [v for v in range(g.n) if v not in picked]
                v = max(candidates, key=lambda u: (gain[u], degree[u], -u))
                count += gain[v]
                picked.add(v)
                for u in adj[v]:
                    gain[u] += 1
                if len(picked) >= min_size:
                    consider(len(picked), count, picked)
        return DensityReport(
            mode="sampled",
            c2=c2,
            k_max=k_max,
            min_size=min_size,
            worst_set=worst_set,
            worst_excess=worst_excess,
            passed=worst_excess < 0,
            exact=False,
        )

    raise InputError(f"unknown audit mode {mode!r}")


# ---------------------------------------------------------------------------
# monochromatic cycle experiment
# ---------------------------------------------------------------------------

def uniform_random_coloring(edges, r: int, rng: random.Random) -> list[int]:
    return [rng.randint(1, r) for _ in edges]


def balanced_greedy_coloring(edges, r: int, rng: random.Random) -> list[int]:
    """Deterministically keep color class sizes within one of each other."""
    counts = [0] * (r + 1)
    colors = []
    for _ in edges:
        c = min(range(1, r + 1), key=lambda i: (counts[i], i))
        counts[c] += 1
        colors.append(c)
    return colors


COLORING_STRATEGIES = {
    "uniform-random": uniform_random_coloring,
    "balanced-greedy": balanced_greedy_coloring,
}


@dataclass(frozen=True)
class MonoCycleReport:
    spec: GnpSpec
    r: int
    coloring: str
    generator: str
    edge_count: int
    color_counts: tuple[int, ...]
    majority_color: int
    majority_size: int
    certificate: object  # CycleCertificate | None
    failure: str | None
    validated: bool

    def to_dict(self) -> dict:
        return {
            "n": self.spec.n,
            "p": self.spec.p,
            "seed": self.spec.seed,
            "r": self.r,
            "coloring": self.coloring,
            "generator": self.generator,
            "edge_count": self.edge_count,
            "color_counts": list(self.color_counts),
            "majority_color": self.majority_color,
            "majority_size": self.majority_size,
            "certificate": self.certificate.to_dict() if self.certificate else None,
            "failure": self.failure,
            "validated": self.validated,
        }


def monochromatic_cycle_experiment(
    spec: GnpSpec,
    r: int,
    coloring,
    density_params: DensityParams,
) -> MonoCycleReport:
    """Sample, color, take a majority color class, and extract from it.

    `coloring` is a name from COLORING_STRATEGIES or a callable
    (edges, r, rng) -> color list (the adversarial plug-in mechanism).
    Extraction failures are reported, not raised.
    """
    if r < 1:
        raise InputError(f"need r >= 1, got {r}")
    g = sample_gnp(spec)
    edges = sorted(g.edges)
    rng = random.Random(derive_seed(spec.seed, 1))
    if callable(coloring):
        strategy, name = coloring, getattr(coloring, "__name__", "adversarial-plugin")
    else:
        try:
            strategy, name = COLORING_STRATEGIES[coloring], coloring
        except KeyError:
            raise InputError(f"unknown coloring strategy {coloring!r}") from None
    colors = list(strategy(edges, r, rng))
    if len(colors) != len(edges) or any(not 1 <= c <= r for c in colors):
        raise InputError("coloring strategy returned an invalid color vector")
    counts = [0] * (r + 1)
    for c in colors:
        counts[c] += 1
    majority = max(range(1, r + 1), key=lambda i: (counts[i], -i))
    e0 = [e for e, c in zip(edges, colors) if c == majority]
    sub = Graph(g.n, e0)
    certificate = None
    failure = None
    validated = False
    try:
        certificate = extract_cycle_density(sub, density_params)
        validated = certificate.validate(sub) and certificate.validate(g)
    except (HypothesisFailure, InputError) as exc:
        failure = f"{type(exc).__name__}: {exc}"
    return MonoCycleReport(
        spec=spec,
        r=r,
        coloring=name,
        generator=GENERATOR_ID,
        edge_count=len(edges),
        color_counts=tuple(counts[1:]),
        majority_color=majority,
        majority_size=len(e0),
        certificate=certificate,
        failure=failure,
        validated=validated,
    )
