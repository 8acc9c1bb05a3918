"""Constructive long-cycle extraction with self-validating certificates.

Two entry points share one mechanism: pick a child group W of prescribed
total size in a DFS tree, observe that all external neighbors of W lie on
the root path, and close a cycle through the neighbor farthest up that
path.  `extract_cycle_expander` runs this on a large component of the
input; `extract_cycle_density` first carves out a dense core in which
every vertex subset is incident to at least c1 times its size in edges
(certified by an exact max-flow feasibility test).
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .dfs import DfsForest, dfs_forest, identity_order, split_under_vertex, subtree_vertices, tree_path_to_root
from .errors import (
    DensityHypothesisError,
    ExpansionViolated,
    HypothesisFailure,
    InputError,
    ScalingError,
    SizeLimitError,
)
from .flow import MaxFlow
from .graph import Graph, connected_components, external_neighborhood, incident_edge_count, induced_edge_count

MAX_DENOMINATOR = 10**6
AUDIT_EXHAUSTIVE_CAP = 22
DENSE_SUBSET_CAP = 18


def to_fraction(value, max_denominator: int = MAX_DENOMINATOR) -> Fraction:
    """Normalize a density parameter to an exact Fraction.

    Floats are snapped to the nearest fraction with denominator within the
    cap (so 1.2 means 6/5, not its binary expansion); exact inputs with a
    larger denominator are rejected rather than silently rounded.
    """
    if isinstance(value, float):
        frac = Fraction(value).limit_denominator(max_denominator)
    else:
        frac = Fraction(value)
    if frac.denominator > max_denominator:
        raise ScalingError(
            f"denominator {frac.denominator} exceeds the {max_denominator} scaling cap"
        )
    return frac


@dataclass(frozen=True)
class CycleCertificate:
    """An explicit cycle plus the witness objects that produced it.

    The cycle is a vertex sequence closed by an edge from its last vertex
    back to its first; `witness_w` is the union of the split subtrees,
    `witness_path` the root-to-v tree path, and `closing_edge` the edge
    (w, v_star) that closes the cycle.  All ids refer to the original graph.
    """

    cycle: tuple[int, ...]
    witness_w: tuple[int, ...]
    witness_path: tuple[int, ...]
    v_star: int
    closing_edge: tuple[int, int]
    claimed_bound: int

    @property
    def length(self) -> int:
        return len(self.cycle)

    def violations(self, g: Graph) -> list[str]:
        """All invariant violations against g (empty list = valid)."""
        problems = []
        cyc = self.cycle
        if len(cyc) < 3:
            problems.append(f"cycle has {len(cyc)} < 3 vertices")
        if len(set(cyc)) != len(cyc):
            problems.append("cycle repeats a vertex")
        for a, b in zip(cyc, cyc[1:]):
            if not g.has_edge(a, b):
                problems.append(f"cycle step ({a},{b}) is not an edge")
        if len(cyc) >= 2 and not g.has_edge(cyc[-1], cyc[0]):
            problems.append(f"closing pair ({cyc[-1]},{cyc[0]}) is not an edge")
        if len(cyc) < self.claimed_bound:
            problems.append(f"length {len(cyc)} below claimed bound {self.claimed_bound}")
        if self.v_star not in self.witness_path:
            problems.append("v_star not on the witness path")
        w, v_star = self.closing_edge
        if v_star != self.v_star:
            problems.append("closing edge does not end at v_star")
        if w not in set(self.witness_w):
            problems.append("closing edge does not start inside W")
        if not g.has_edge(w, v_star):
            problems.append(f"closing edge ({w},{v_star}) is not an edge")
        for a, b in zip(self.witness_path, self.witness_path[1:]):
            if not g.has_edge(a, b):
                problems.append(f"witness path step ({a},{b}) is not an edge")
        return problems

    def validate(self, g: Graph) -> bool:
        return not self.violations(g)

    def assert_valid(self, g: Graph) -> None:
        problems = self.violations(g)
        if problems:
            raise AssertionError("; ".join(problems))

    def to_dict(self) -> dict:
        return {
            "cycle": list(self.cycle),
            "length": self.length,
            "witness_w": list(self.witness_w),
            "witness_path": list(self.witness_path),
            "v_star": self.v_star,
            "closing_edge": list(self.closing_edge),
            "claimed_bound": self.claimed_bound,
        }


@dataclass(frozen=True)
class DensityParams:
    """Extraction parameters: global density c1, local cap c2, window k."""

    c1: float | Fraction
    c2: float | Fraction
    k: int

    def __post_init__(self):
        if not (self.c1 > self.c2 > 1):
            raise InputError(f"need c1 > c2 > 1, got c1={self.c1}, c2={self.c2}")
        if self.k < 1:
            raise InputError(f"k must be positive, got {self.k}")

    @property
    def ratio(self) -> float:
        return float(self.c1) / float(self.c2)

    @property
    def guarantee_bound(self) -> float:
        """Cycle length promised when the local-sparsity hypothesis holds."""
        return (self.k / 2 - 1) * (math.sqrt(self.ratio) - 1) + 1

    @property
    def meets_guarantee_precondition(self) -> bool:
        return (self.k / 2 - 1) * (math.sqrt(self.ratio) - 1) >= 2


@dataclass(frozen=True)
class DenseCore:
    """A connected induced subgraph where every subset W is incident to
    at least c1|W| edges (hence edge/vertex ratio at least c1)."""

    vertices: tuple[int, ...]
    edge_count: int
    ratio: Fraction

    def check(self, g: Graph, c1) -> None:
        frac = to_fraction(c1)
        vs = list(self.vertices)
        sub, _ = g.induced_subgraph(vs)
        if sub.m != self.edge_count:
            raise AssertionError(f"edge count {self.edge_count} != recount {sub.m}")
        if Fraction(sub.m, sub.n) != self.ratio:
            raise AssertionError("stored ratio differs from recount")
        if self.ratio < frac:
            raise AssertionError(f"ratio {self.ratio} below c1 = {frac}")
        if len(connected_components(sub)) != 1:
            raise AssertionError("core is not connected")
        if find_violating_set(sub, frac) is not None:
            raise AssertionError("core still has a violating subset")


# ---------------------------------------------------------------------------
# violating sets and dense cores
# ---------------------------------------------------------------------------

def find_violating_set(g: Graph, c1) -> list[int] | None:
    """Some nonempty W with incident_edge_count(G,W) < c1|W|, else None.

    Feasibility max-flow: source->vertex at capacity c1, vertex->incident
    edge unbounded, edge->sink at capacity 1 (all scaled to integers).  The
    flow saturates the source iff no violating set exists; otherwise the
    vertices cut off from the sink side form one.
    """
    frac = to_fraction(c1)
    if frac <= 0:
        raise InputError(f"c1 must be positive, got {c1}")
    if g.n == 0:
        return None
    p, q = frac.numerator, frac.denominator
    edges = sorted(g.edges)
    n, m = g.n, len(edges)
    source = 0
    sink = n + m + 1
    net = MaxFlow(n + m + 2)
    big = p * n + q * m + 1
    for v in range(n):
        net.add_edge(source, 1 + v, p)
    for j, (u, v) in enumerate(edges):
        net.add_edge(1 + u, 1 + n + j, big)
        net.add_edge(1 + v, 1 + n + j, big)
        net.add_edge(1 + n + j, sink, q)
    flow = net.max_flow(source, sink)
    full = p * n
    if flow >= full:
        return None
    reaches_sink = net.sink_side_cut(sink)
    witness = [v for v in range(n) if (1 + v) not in reaches_sink]
    if not witness:
        raise AssertionError("flow below saturation but empty cut side")
    if q * incident_edge_count(g, witness) >= p * len(witness):
        raise AssertionError("recovered cut is not a violating set")
    return witness


def find_dense_core(g: Graph, c1) -> DenseCore:
    """Peel violating subsets (and low-ratio components) down to a stable core.

    Once no violating subset remains, the full vertex set itself certifies
    edge/vertex ratio >= c1, so the survivors are a valid core.  If peeling
    consumes everything, no induced subgraph reaches density c1.
    """
    frac = to_fraction(c1)
    if frac <= 0:
        raise InputError(f"c1 must be positive, got {c1}")
    p, q = frac.numerator, frac.denominator
    alive = set(range(g.n))
    degree = [g.degree(v) for v in range(g.n)]

    def degree_peel():
        queue = [v for v in alive if q * degree[v] < p]
        while queue:
            v = queue.pop()
            if v not in alive:
                continue
            if q * degree[v] >= p:
                continue
            alive.discard(v)
            for u in g.adjacency[v]:
                if u in alive:
                    degree[u] -= 1
                    if q * degree[u] < p:
                        queue.append(u)

    while True:
        degree_peel()
        if not alive:
            raise DensityHypothesisError(
                f"no induced subgraph reaches edge/vertex ratio {frac}"
            )
        order = sorted(alive)
        sub, mapping = g.induced_subgraph(order)
        violating = find_violating_set(sub, frac)
        if violating is not None:
            for v_local in violating:
                v = mapping[v_local]
                alive.discard(v)
                for u in g.adjacency[v]:
                    if u in alive:
                        degree[u] -= 1
            continue
        comps = connected_components(sub)
        best = None
        best_ratio = None
        for comp in comps:
            e = induced_edge_count(sub, comp)
            ratio = Fraction(e, len(comp))
            if best_ratio is None or ratio > best_ratio:
                best, best_ratio = comp, ratio
        assert best is not None
        if len(best) == len(order):
            core_vertices = tuple(mapping[v] for v in best)
            return DenseCore(
                vertices=core_vertices,
                edge_count=induced_edge_count(sub, best),
                ratio=best_ratio,  # type: ignore[arg-type]
            )
        keep = {mapping[v] for v in best}
        for v in sorted(alive - keep):
            alive.discard(v)
            for u in g.adjacency[v]:
                if u in alive:
                    degree[u] -= 1


# ---------------------------------------------------------------------------
# expansion audit
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ExpansionAudit:
    """Minimum external-neighborhood size over the audited set sizes."""

    mode: str
    minimum: int
    witness: tuple[int, ...]
    exact: bool


def audit_expansion(g: Graph, k: int, mode: str = "exhaustive", samples: int = 2000, seed: int = 0) -> ExpansionAudit:
    """Minimum of |N_G(W)| over floor(k/2) <= |W| <= k.

    Exhaustive mode enumerates every subset in the size range (n <= 22);
    sampled mode only produces an upper bound on the minimum and is
    reported as such.
    """
    if k < 1:
        raise InputError(f"k must be positive, got {k}")
    if k >= g.n:
        raise InputError(f"audit needs k < n (got k={k}, n={g.n})")
    lo = max(1, k // 2)
    masks = g.neighbor_masks()
    best = None
    best_set: tuple[int, ...] = ()

    def consider(ws: tuple[int, ...]) -> int:
        nonlocal best, best_set
        wmask = 0
        nmask = 0
        for v in ws:
            wmask |= 1 << v
            nmask |= masks[v]
        count = (nmask & ~wmask).bit_count()
        if best is None or count < best:
            best, best_set = count, ws
        return count

    if mode == "exhaustive":
        if g.n > AUDIT_EXHAUSTIVE_CAP:
            raise SizeLimitError(
                f"exhaustive expansion audit capped at n <= {AUDIT_EXHAUSTIVE_CAP}, got {g.n}"
            )
        for size in range(lo, k + 1):
            for ws in combinations(range(g.n), size):
                if consider(ws) == 0:
                    return ExpansionAudit("exhaustive", 0, best_set, True)
        assert best is not None
        return ExpansionAudit("exhaustive", best, best_set, True)
    if mode == "sampled":
        if samples < 1:
            raise InputError("sampled mode needs at least one sample")
        rng = random.Random(seed)
        universe = list(range(g.n))
        for _ in range(samples):
            size = rng.randint(lo, k)
            ws = tuple(sorted(rng.sample(universe, size)))
            if consider(ws) == 0:
                break
        assert best is not None
        return ExpansionAudit("sampled", best, best_set, False)
    raise InputError(f"unknown audit mode {mode!r}")


# ---------------------------------------------------------------------------
# cycle extraction
# ---------------------------------------------------------------------------

def _cycle_through_witness(g: Graph, forest: DfsForest, root: int, k: int):
    """Shared certificate construction: split, witness set, closing edge."""
    witness = split_under_vertex(forest, root, k)
    w_set: list[int] = []
    for child in witness.children:
        w_set.extend(subtree_vertices(forest, child))
    w_set = sorted(w_set)
    path = tree_path_to_root(forest, witness.v)[::-1]  # root .. v
    neighborhood = external_neighborhood(g, w_set)
    on_path = set(path)
    stray = [u for u in neighborhood if u not in on_path]
    if stray:
        raise AssertionError(
            f"neighbors {stray} of W fall outside the root path; DFS invariant broken"
        )
    pos = {u: i for i, u in enumerate(path)}
    v_star = min(neighborhood, key=pos.__getitem__)

    # the deepest W-neighbor of v_star closes the longest available cycle
    def tree_depth(u: int) -> int:
        d = 0
        x = u
        while forest.parent[x] is not None:
            x = forest.parent[x]  # type: ignore[assignment]
            d += 1
        return d

    w_members = set(w_set)
    candidates = [u for u in g.adjacency[v_star] if u in w_members]
    rank = {u: i for i, u in enumerate(forest.sigma)}
    w = max(candidates, key=lambda u: (tree_depth(u), -rank[u]))
    cycle_path = []
    x = w
    while x != v_star:
        cycle_path.append(x)
        x = forest.parent[x]  # type: ignore[assignment]
    cycle_path.append(v_star)
    cycle = tuple(cycle_path[::-1])  # v_star down to w; edge (w, v_star) closes
    if len(cycle) < 3:
        raise HypothesisFailure(
            "no simple cycle through the witness: the only external neighbor of W "
            "is the split vertex and all its W-neighbors are direct children "
            "(expansion value is at most 1 here)"
        )
    return CycleCertificate(
        cycle=cycle,
        witness_w=tuple(w_set),
        witness_path=tuple(path),
        v_star=v_star,
        closing_edge=(w, v_star),
        claimed_bound=len(neighborhood) + 1,
    )


def extract_cycle_expander(g: Graph, k: int, sigma=None) -> CycleCertificate:
    """Certificate cycle of length >= |N_G(W)|+1 for a split witness W.

    Under the expansion hypothesis (every W with k/2 <= |W| <= k has
    |N_G(W)| >= t), the returned cycle has length at least t+1.
    """
    if k < 1:
        raise InputError(f"k must be positive, got {k}")
    if g.n <= k:
        raise InputError(f"need more than k = {k} vertices, got {g.n}")
    comps = connected_components(g)
    if all(len(c) <= k for c in comps):
        # no component exceeds k: assemble a witness with empty neighborhood
        lo = max(1, k // 2)
        for comp in comps:
            if lo <= len(comp) <= k:
                raise ExpansionViolated(
                    f"no component exceeds {k} vertices; component of size "
                    f"{len(comp)} has empty external neighborhood",
                    comp,
                )
        acc: list[int] = []
        for comp in comps:
            if len(acc) + len(comp) <= k:
                acc.extend(comp)
        raise ExpansionViolated(
            f"no component exceeds {k} vertices; a union of components of size "
            f"{len(acc)} has empty external neighborhood",
            sorted(acc),
        )
    order = tuple(sigma) if sigma is not None else identity_order(g.n)
    forest = dfs_forest(g, order)
    root = next(r for r in forest.roots if forest.subtree_size[r] > k)
    return _cycle_through_witness(g, forest, root, k)


def extract_cycle_density(g: Graph, params: DensityParams, sigma=None) -> CycleCertificate:
    """Extract a cycle from the dense core of a globally dense graph.

    When additionally every subset of at most k vertices spans at most
    c2 times its size in edges (the caller audits this), the certificate
    length is at least (k/2 - 1)(sqrt(c1/c2) - 1) + 1.
    """
    k = params.k
    if g.n <= k:
        raise InputError(f"need more than k = {k} vertices, got {g.n}")
    c1 = to_fraction(params.c1)
    if Fraction(g.m) < c1 * g.n:
        raise InputError(f"need |E| >= c1|V|: {g.m} < {c1} * {g.n}")
    core = find_dense_core(g, c1)
    if len(core.vertices) <= k:
        raise DensityHypothesisError(
            f"dense core has {len(core.vertices)} <= k = {k} vertices; "
            "the density hypothesis is insufficient for this graph"
        )
    sub, mapping = g.induced_subgraph(core.vertices)
    order = tuple(sigma) if sigma is not None else identity_order(sub.n)
    forest = dfs_forest(sub, order)
    root = next(r for r in forest.roots if forest.subtree_size[r] > k)
    local = _cycle_through_witness(sub, forest, root, k)
    remap = mapping.__getitem__
    return CycleCertificate(
        cycle=tuple(map(remap, local.cycle)),
        witness_w=tuple(map(remap, local.witness_w)),
        witness_path=tuple(map(remap, local.witness_path)),
        v_star=remap(local.v_star),
        closing_edge=(remap(local.closing_edge[0]), remap(local.closing_edge[1])),
        claimed_bound=local.claimed_bound,
    )


# ---------------------------------------------------------------------------
# dense subset oracle
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class DenseSubset:
    vertices: tuple[int, ...]
    edge_count: int
    bound: float  # m * ((k1-1)/(k1+k2-1))^2
    exceeds: bool


def dense_subset_oracle(g: Graph, k1: int) -> DenseSubset:
    """Maximum-edge subset of size exactly k1, versus the averaging bound.

    The bound m((k1-1)/(n-1))^2 is strictly exceeded whenever k1 >= 2 and
    the graph has at least one edge; the k1 = 1 / edgeless cases are
    degenerate (both sides are then zero).
    """
    if g.n > DENSE_SUBSET_CAP:
        raise SizeLimitError(
            f"dense-subset oracle capped at n <= {DENSE_SUBSET_CAP}, got {g.n}"
        )
    if not (1 <= k1 < g.n):
        raise InputError(f"need 1 <= k1 < n, got k1={k1}, n={g.n}")
    masks = g.neighbor_masks()
    best_count = -1
    best_mask = 0

    # depth-first enumeration of k1-subsets with incremental edge counts
    def rec(next_v: int, left: int, mask: int, count: int):
        nonlocal best_count, best_mask
        if left == 0:
            if count > best_count:
                best_count, best_mask = count, mask
            return
        for v in range(next_v, g.n - left + 1):
            rec(v + 1, left - 1, mask | (1 << v), count + (masks[v] & mask).bit_count())

    rec(0, k1, 0, 0)
    vertices = tuple(v for v in range(g.n) if best_mask >> v & 1)
    bound = g.m * ((k1 - 1) / (g.n - 1)) ** 2
    return DenseSubset(
        vertices=vertices,
        edge_count=best_count,
        bound=bound,
        exceeds=best_count > bound,
    )
