"""Size-Ramsey experiment pipelines for paths.

Lower-bound side: color a graph's edges through an affine plane of order
q = r-2 so that every color class of a random vertex partition is confined
to one line's worth of parts, then verify the per-line edge counts.
Upper-bound side: sample G(n, Cr/n), take a majority color class, and
extract a long cycle from its dense core.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .errors import HypothesisFailure, InputError, UnsupportedOrderError
from .extract import DensityParams, extract_cycle_density
from .gnp import COLORING_STRATEGIES, GENERATOR_ID, GnpSpec, derive_seed, sample_gnp
from .graph import Graph, connected_components


def is_prime(q: int) -> bool:
    if q < 2:
        return False
    f = 2
    while f * f <= q:
        if q % f == 0:
            return False
        f += 1
    return True


@dataclass(frozen=True)
class AffinePlane:
    """AG(2,q): q^2 points (ids 1..q^2), q^2+q lines in q+1 parallel classes."""

    q: int
    points: tuple[int, ...]
    lines: tuple[frozenset[int], ...]
    parallel_classes: tuple[tuple[int, ...], ...]  # class -> line indices

    def line_through(self, x: int, y: int) -> int:
        """Index of the unique line containing points x != y."""
        return self._pair_to_line[(min(x, y), max(x, y))]

    def class_of_line(self, line_idx: int) -> int:
        return self._line_to_class[line_idx]

    def __post_init__(self):
        pair_to_line: dict[tuple[int, int], int] = {}
        line_to_class: dict[int, int] = {}
        for ci, members in enumerate(self.parallel_classes):
            for li in members:
                line_to_class[li] = ci
        for li, line in enumerate(self.lines):
            pts = sorted(line)
            for i in range(len(pts)):
                for j in range(i + 1, len(pts)):
                    pair_to_line[(pts[i], pts[j])] = li
        object.__setattr__(self, "_pair_to_line", pair_to_line)
        object.__setattr__(self, "_line_to_class", line_to_class)

    def check_axioms(self) -> None:
        q = self.q
        if len(self.points) != q * q:
            raise AssertionError(f"expected {q * q} points, got {len(self.points)}")
        if len(self.lines) != q * q + q:
            raise AssertionError(f"expected {q * q + q} lines, got {len(self.lines)}")
        if len(self.parallel_classes) != q + 1:
            raise AssertionError(
                f"expected {q + 1} parallel classes, got {len(self.parallel_classes)}"
            )
        for line in self.lines:
            if len(line) != q:
                raise AssertionError("every line must contain exactly q points")
        # each unordered pair of points on exactly one line
        seen: dict[tuple[int, int], int] = {}
        for li, line in enumerate(self.lines):
            pts = sorted(line)
            for i in range(len(pts)):
                for j in range(i + 1, len(pts)):
                    pair = (pts[i], pts[j])
                    if pair in seen:
                        raise AssertionError(f"pair {pair} on two lines")
                    seen[pair] = li
        expect = q * q * (q * q - 1) // 2
        if len(seen) != expect:
            raise AssertionError(f"covered {len(seen)} pairs, expected {expect}")
        # each class partitions the point set
        point_set = set(self.points)
        for members in self.parallel_classes:
            if len(members) != q:
                raise AssertionError("every class must hold exactly q lines")
            covered: set[int] = set()
            for li in members:
                if covered & self.lines[li]:
                    raise AssertionError("lines within a class intersect")
                covered |= self.lines[li]
            if covered != point_set:
                raise AssertionError("a class fails to cover the points")


def build_affine_plane(q: int) -> AffinePlane:
    """AG(2,q) over the integers mod q; prime q only."""
    if not is_prime(q):
        raise UnsupportedOrderError(
            f"order {q} unsupported: only prime orders are built "
            "(prime powers would need field arithmetic beyond mod-q)"
        )

    def pid(a: int, b: int) -> int:
        return a * q + b + 1

    lines: list[frozenset[int]] = []
    classes: list[tuple[int, ...]] = []
    for s in range(q):  # slope classes
        members = []
        for t in range(q):
            members.append(len(lines))
            lines.append(frozenset(pid(x, (s * x + t) % q) for x in range(q)))
        classes.append(tuple(members))
    members = []
    for c in range(q):  # vertical class
        members.append(len(lines))
        lines.append(frozenset(pid(c, y) for y in range(q)))
    classes.append(tuple(members))
    return AffinePlane(
        q=q,
        points=tuple(range(1, q * q + 1)),
        lines=tuple(lines),
        parallel_classes=tuple(classes),
    )


# ---------------------------------------------------------------------------
# lower-bound coloring
# ---------------------------------------------------------------------------

DEGREE_THRESHOLD_FACTOR = 6  # high-degree cutoff is 6 r^2


@dataclass(frozen=True)
class RamseyColoring:
    """Edge coloring driven by a random part assignment and an affine plane.

    partition[v] = 0 puts v in the high-degree pool (all incident edges get
    color r); otherwise partition[v] names a plane point, and an edge
    between different parts takes the color of the parallel class of the
    line through its two parts.  Edges inside one part take color 1.
    """

    r: int
    q: int
    seed: int
    threshold: int
    partition: tuple[int, ...]
    edges: tuple[tuple[int, int], ...]
    colors: tuple[int, ...]

    def color_of(self, u: int, v: int) -> int:
        return self._color_map[(min(u, v), max(u, v))]

    def __post_init__(self):
        object.__setattr__(
            self, "_color_map", dict(zip(self.edges, self.colors))
        )

    def to_dict(self) -> dict:
        return {
            "r": self.r,
            "q": self.q,
            "seed": self.seed,
            "threshold": self.threshold,
            "partition": list(self.partition),
            "colors": list(self.colors),
        }


def lower_bound_coloring(
    g: Graph, r: int, seed: int, threshold: int | None = None
) -> RamseyColoring:
    """The affine-plane r-coloring of E(G) (requires r-2 prime)."""
    q = r - 2
    if not is_prime(q):
        raise UnsupportedOrderError(
            f"r = {r} unsupported: r-2 = {q} must be prime for the plane"
        )
    if any(g.degree(v) == 0 for v in range(g.n)):
        raise InputError("isolated vertices are not allowed")
    plane = build_affine_plane(q)
    if threshold is None:
        threshold = DEGREE_THRESHOLD_FACTOR * r * r
    rng = random.Random(seed)
    partition = tuple(
        0 if g.degree(v) >= threshold else rng.randint(1, q * q) for v in range(g.n)
    )
    edges = tuple(sorted(g.edges))
    colors = []
    for u, v in edges:
        x, y = partition[u], partition[v]
        if x == 0 or y == 0:
            colors.append(r)
        elif x == y:
            colors.append(1)
        else:
            colors.append(plane.class_of_line(plane.line_through(x, y)) + 1)
    return RamseyColoring(
        r=r,
        q=q,
        seed=seed,
        threshold=threshold,
        partition=partition,
        edges=edges,
        colors=tuple(colors),
    )


def check_coloring_structure(g: Graph, coloring: RamseyColoring) -> None:
    """Re-derive every edge color from the partition; raise on mismatch."""
    plane = build_affine_plane(coloring.q)
    part = coloring.partition
    for (u, v), c in zip(coloring.edges, coloring.colors):
        x, y = part[u], part[v]
        if x == 0 or y == 0:
            expect = coloring.r
        elif x == y:
            expect = 1
        else:
            expect = plane.class_of_line(plane.line_through(x, y)) + 1
        if c != expect:
            raise AssertionError(f"edge ({u},{v}) colored {c}, expected {expect}")


def monochromatic_confinement_holds(g: Graph, coloring: RamseyColoring) -> bool:
    """Every component of color class i <= q+1 stays in one class-i line."""
    plane = build_affine_plane(coloring.q)
    part = coloring.partition
    for color in range(1, coloring.q + 2):
        class_lines = plane.parallel_classes[color - 1]
        line_of_part = {}
        for li in class_lines:
            for x in plane.lines[li]:
                line_of_part[x] = li
        mono = [e for e, c in zip(coloring.edges, coloring.colors) if c == color]
        sub = Graph(g.n, mono)
        for comp in connected_components(sub):
            touched = {
                line_of_part[part[v]] for v in comp if sub.degree(v) > 0
            }
            if len(touched) > 1:
                return False
    return True


@dataclass(frozen=True)
class LowerBoundReport:
    n_target: int
    r: int
    q: int
    pool_size: int  # |V_0|
    covering_ok: bool  # |V_0| < n_target / 2
    line_counts: tuple[int, ...]  # A_L per line
    max_line_count: int
    lines_ok: bool  # every A_L < n_target - 1
    verdict: bool

    def to_dict(self) -> dict:
        return {
            "n_target": self.n_target,
            "r": self.r,
            "q": self.q,
            "pool_size": self.pool_size,
            "covering_ok": self.covering_ok,
            "line_counts": list(self.line_counts),
            "max_line_count": self.max_line_count,
            "lines_ok": self.lines_ok,
            "verdict": self.verdict,
        }


def verify_lower_bound_coloring(
    g: Graph, coloring: RamseyColoring, n_target: int
) -> LowerBoundReport:
    """Check the sufficient conditions for the coloring to kill P_{n_target}.

    For every line L, A_L counts the edges inside the union of the parts
    on L; the coloring kills the path when each A_L < n_target - 1 and the
    high-degree pool is smaller than n_target / 2.
    """
    plane = build_affine_plane(coloring.q)
    part = coloring.partition
    counts = []
    for line in plane.lines:
        inside = 0
        for u, v in coloring.edges:
            if part[u] in line and part[v] in line:
                inside += 1
        counts.append(inside)
    pool = sum(1 for x in part if x == 0)
    covering_ok = pool < n_target / 2
    max_count = max(counts) if counts else 0
    lines_ok = all(c < n_target - 1 for c in counts)
    return LowerBoundReport(
        n_target=n_target,
        r=coloring.r,
        q=coloring.q,
        pool_size=pool,
        covering_ok=covering_ok,
        line_counts=tuple(counts),
        max_line_count=max_count,
        lines_ok=lines_ok,
        verdict=covering_ok and lines_ok,
    )


# ---------------------------------------------------------------------------
# upper-bound pipeline
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class UpperBoundParameters:
    n: int
    r: int
    C: float
    p: float
    delta: float
    k: int  # floor(delta * n)
    c1: float
    c2: float
    n0: float  # the target path length the analysis promises
    vacuous: bool

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "r": self.r,
            "C": self.C,
            "p": self.p,
            "delta": self.delta,
            "k": self.k,
            "c1": self.c1,
            "c2": self.c2,
            "n0": self.n0,
            "vacuous": self.vacuous,
        }


def upper_bound_parameters(n: int, r: int, C: float) -> UpperBoundParameters:
    if not C > 5:
        raise InputError(f"need C > 5, got {C}")
    if r < 2:
        raise InputError(f"need r >= 2, got {r}")
    exponent = C / (C - 4)
    delta = (20 * r) ** -exponent
    k = int(delta * n)
    n0 = (400 * r) ** -exponent * n
    vacuous = k < 4
    if k >= 4:
        vacuous = not DensityParams(C / 3, C / 4, k).meets_guarantee_precondition
    return UpperBoundParameters(
        n=n,
        r=r,
        C=C,
        p=min(1.0, C * r / n),
        delta=delta,
        k=k,
        c1=C / 3,
        c2=C / 4,
        n0=n0,
        vacuous=vacuous,
    )


@dataclass(frozen=True)
class UpperBoundRun:
    coloring: str
    majority_color: int
    majority_size: int
    failure: str | None
    certificate: object
    cycle_length: int
    validated: bool
    k_used: int

    def to_dict(self) -> dict:
        return {
            "coloring": self.coloring,
            "majority_color": self.majority_color,
            "majority_size": self.majority_size,
            "failure": self.failure,
            "certificate": self.certificate.to_dict() if self.certificate else None,
            "cycle_length": self.cycle_length,
            "validated": self.validated,
            "k_used": self.k_used,
        }


@dataclass(frozen=True)
class UpperBoundReport:
    params: UpperBoundParameters
    seed: int
    generator: str
    edge_count: int
    runs: tuple[UpperBoundRun, ...]

    def to_dict(self) -> dict:
        return {
            "params": self.params.to_dict(),
            "seed": self.seed,
            "generator": self.generator,
            "edge_count": self.edge_count,
            "runs": [run.to_dict() for run in self.runs],
        }


def upper_bound_pipeline(
    n: int,
    r: int,
    C: float,
    seed: int,
    colorings=("uniform-random",),
    k_floor: int | None = None,
) -> UpperBoundReport:
    """Sample G(n, Cr/n) and hunt a long monochromatic cycle per coloring.

    A majority class below C n / 3 edges is recorded as a failed sample
    (the likely event did not occur), never raised.  k_floor substitutes a
    desk-scale window when the analysis value floor(delta n) is vacuous.
    """
    params = upper_bound_parameters(n, r, C)
    g = sample_gnp(GnpSpec(n, params.p, seed))
    edges = sorted(g.edges)
    runs = []
    for idx, strategy in enumerate(colorings):
        if callable(strategy):
            fn, name = strategy, getattr(strategy, "__name__", "adversarial-plugin")
        else:
            try:
                fn, name = COLORING_STRATEGIES[strategy], strategy
            except KeyError:
                raise InputError(f"unknown coloring strategy {strategy!r}") from None
        rng = random.Random(derive_seed(seed, 100 + idx))
        colors = list(fn(edges, r, rng))
        counts = [0] * (r + 1)
        for c in colors:
            counts[c] += 1
        majority = max(range(1, r + 1), key=lambda i: (counts[i], -i))
        e0 = [e for e, c in zip(edges, colors) if c == majority]
        failure = None
        certificate = None
        validated = False
        k_used = params.k if k_floor is None else max(params.k, k_floor)
        if len(e0) < C * n / 3:
            failure = f"majority class has {len(e0)} < C n/3 = {C * n / 3:.1f} edges"
        elif k_used < 1:
            failure = f"window k = {params.k} < 1: nothing to extract at this scale"
        else:
            try:
                certificate = extract_cycle_density(
                    Graph(n, e0), DensityParams(params.c1, params.c2, k_used)
                )
                validated = certificate.validate(g)
            except (HypothesisFailure, InputError) as exc:
                failure = f"{type(exc).__name__}: {exc}"
        runs.append(
            UpperBoundRun(
                coloring=name,
                majority_color=majority,
                majority_size=len(e0),
                failure=failure,
                certificate=certificate,
                cycle_length=certificate.length if certificate else 0,
                validated=validated,
                k_used=k_used,
            )
        )
    return UpperBoundReport(
        params=params,
        seed=seed,
        generator=GENERATOR_ID,
        edge_count=len(edges),
        runs=tuple(runs),
    )


# ---------------------------------------------------------------------------
# longest-path helper
# ---------------------------------------------------------------------------

PATH_EXACT_CAP = 14


@dataclass(frozen=True)
class PathCheck:
    vertices: int  # number of vertices of the longest path found/bounded
    exact: bool


def mono_path_check(g: Graph, n_target: int | None = None) -> PathCheck:
    """Exact longest path (vertices) for n <= 14, else a lower bound.

    The lower bound is the better of the deepest DFS root-leaf path and a
    cycle extracted from the graph's dense core when one exists.
    """
    if g.n == 0:
        return PathCheck(0, True)
    if g.n <= PATH_EXACT_CAP:
        masks = g.neighbor_masks()
        dp: dict[int, int] = {1 << v: 1 << v for v in range(g.n)}
        order = sorted(dp)
        best = 1
        for mask in order:
            ends = dp[mask]
            size = mask.bit_count()
            if size > best:
                best = size
            while ends:
                low = ends & -ends
                ends ^= low
                v = low.bit_length() - 1
                free = masks[v] & ~mask
                while free:
                    ub = free & -free
                    free ^= ub
                    nmask = mask | ub
                    cur = dp.get(nmask)
                    if cur is None:
                        dp[nmask] = ub
                        order.append(nmask)
                    elif not cur & ub:
                        dp[nmask] = cur | ub
        return PathCheck(best, True)
    # lower bound route: DFS depth
    from .dfs import dfs_forest, identity_order, tree_path_to_root

    forest = dfs_forest(g, identity_order(g.n))
    best = max(len(tree_path_to_root(forest, v)) for v in range(g.n))
    # a cycle of length L contains a path on L vertices
    ratio = g.m / g.n if g.n else 0
    if ratio > 1.1:
        c1 = 1.05 + (ratio - 1.05) * 0.8
        c2 = 1.0 + (c1 - 1.0) / 2
        k = max(4, g.n // 20)
        try:
            cert = extract_cycle_density(g, DensityParams(c1, c2, k))
            best = max(best, cert.length)
        except (HypothesisFailure, InputError):
            pass
    return PathCheck(best, False)
