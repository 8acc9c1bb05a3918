"""Simple undirected graphs and the set-level primitives everything else uses.

Vertices are dense integers 0..n-1.  Graphs are immutable after
construction; subgraph extraction returns a new graph together with the
mapping back to the parent's vertex ids, so certificates can always be
expressed in original ids.
"""

from __future__ import annotations

from itertools import combinations
from typing import Iterable, Sequence

from .errors import InputError, SizeLimitError

BRUTEFORCE_CAP = 18  # hard cap for the exponential circumference oracle


class Graph:
    """Immutable simple undirected graph on vertices 0..n-1."""

    __slots__ = ("n", "edges", "adjacency", "_adj_sets", "_masks")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]]):
        if n < 0:
            raise InputError(f"vertex count must be >= 0, got {n}")
        self.n = n
        seen = set()
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise InputError(f"edge ({u},{v}) out of range 0..{n - 1}")
            if u == v:
                raise InputError(f"self-loop at vertex {u}")
            e = (u, v) if u < v else (v, u)
            if e in seen:
                raise InputError(f"duplicate edge ({e[0]},{e[1]})")
            seen.add(e)
        self.edges = frozenset(seen)
        adj: list[list[int]] = [[] for _ in range(n)]
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        self.adjacency = tuple(tuple(sorted(a)) for a in adj)
        self._adj_sets = tuple(frozenset(a) for a in adj)
        self._masks: tuple[int, ...] | None = None

    @property
    def m(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._adj_sets[u]

    def neighbor_masks(self) -> tuple[int, ...]:
        """Per-vertex adjacency bitmasks (built lazily, small graphs only)."""
        if self._masks is None:
            masks = [0] * self.n
            for u, v in self.edges:
                masks[u] |= 1 << v
                masks[v] |= 1 << u
            self._masks = tuple(masks)
        return self._masks

    def induced_subgraph(self, vertices: Sequence[int]) -> tuple["Graph", list[int]]:
        """Subgraph on `vertices`, plus the new-id -> parent-id mapping."""
        vs = check_vertex_set(self, vertices)
        index = {v: i for i, v in enumerate(vs)}
        sub_edges = [
            (index[u], index[v]) for u, v in self.edges if u in index and v in index
        ]
        return Graph(len(vs), sub_edges), vs

    def __eq__(self, other):
        return (
            isinstance(other, Graph) and self.n == other.n and self.edges == other.edges
        )

    def __hash__(self):
        return hash((self.n, self.edges))

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m})"


def check_vertex_set(g: Graph, vertices: Iterable[int]) -> list[int]:
    """Normalize to a sorted duplicate-free id list, validating the range."""
    vs = sorted(set(vertices))
    if vs and not (0 <= vs[0] and vs[-1] < g.n):
        bad = vs[0] if vs[0] < 0 else vs[-1]
        raise InputError(f"vertex id {bad} out of range 0..{g.n - 1}")
    return vs


def external_neighborhood(g: Graph, w: Iterable[int]) -> list[int]:
    """All vertices outside `w` adjacent to at least one vertex of `w`."""
    ws = set(check_vertex_set(g, w))
    out = set()
    for u in ws:
        out.update(g.adjacency[u])
    return sorted(out - ws)


def induced_edge_count(g: Graph, r: Iterable[int]) -> int:
    """Number of edges with both endpoints in `r`."""
    rs = set(check_vertex_set(g, r))
    return sum(1 for v in rs for u in g.adjacency[v] if u > v and u in rs)


def incident_edge_count(g: Graph, w: Iterable[int]) -> int:
    """Number of edges with at least one endpoint in `w`."""
    ws = set(check_vertex_set(g, w))
    count = 0
    for u, v in g.edges:
        if u in ws or v in ws:
            count += 1
    return count


def connected_components(g: Graph) -> list[list[int]]:
    """Partition of the vertex set into maximal connected sets (sorted)."""
    seen = [False] * g.n
    comps = []
    for s in range(g.n):
        if seen[s]:
            continue
        seen[s] = True
        stack = [s]
        comp = []
        while stack:
            v = stack.pop()
            comp.append(v)
            for u in g.adjacency[v]:
                if not seen[u]:
                    seen[u] = True
                    stack.append(u)
        comps.append(sorted(comp))
    return comps


def longest_cycle_bruteforce(g: Graph) -> int:
    """Exact circumference (0 if acyclic) by exhaustive search, n <= 18.

    Enumerates simple paths as a bitmask DP: for each anchor s (the
    smallest vertex of the cycle), dp[mask] is the bitset of endpoints
    reachable from s by a simple path visiting exactly `mask`.  A mask
    whose endpoint set meets N(s) closes a cycle of length popcount(mask).
    """
    if g.n > BRUTEFORCE_CAP:
        raise SizeLimitError(
            f"circumference oracle capped at n <= {BRUTEFORCE_CAP}, got n = {g.n}"
        )
    masks = g.neighbor_masks()
    best = 0
    for s in range(g.n):
        if g.degree(s) < 2:
            continue
        high = ~((1 << (s + 1)) - 1)  # only vertices > s may join the cycle
        adj_s = masks[s] & high
        if adj_s.bit_count() < 2:
            continue
        start = 1 << s
        dp = {start: start}
        order = [start]
        for mask in order:
            ends = dp[mask]
            size = mask.bit_count()
            if size >= 3 and best < size and ends & adj_s:
                best = size
            while ends:
                low = ends & -ends
                ends ^= low
                v = low.bit_length() - 1
                free = masks[v] & high & ~mask
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
        if best == g.n:
            break
    return best


def parse_edge_list(text: str) -> Graph:
    """Parse the `n m` / `u v` edge-list format, with line numbers on errors."""
    lines = text.splitlines()
    header_at = None
    for i, line in enumerate(lines):
        if line.strip() and not line.lstrip().startswith("#"):
            header_at = i
            break
    if header_at is None:
        raise InputError("empty edge-list input")
    parts = lines[header_at].split()
    if len(parts) != 2:
        raise InputError(f"line {header_at + 1}: expected 'n m' header")
    try:
        n, m = int(parts[0]), int(parts[1])
    except ValueError:
        raise InputError(f"line {header_at + 1}: non-integer header") from None
    edges = []
    for i in range(header_at + 1, len(lines)):
        line = lines[i].strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise InputError(f"line {i + 1}: expected 'u v'")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise InputError(f"line {i + 1}: non-integer vertex id") from None
        if not (0 <= u < v < n):
            raise InputError(f"line {i + 1}: edge ({u},{v}) must satisfy 0 <= u < v < n")
        edges.append((u, v))
        if len(edges) > m:
            raise InputError(f"line {i + 1}: more than the declared {m} edges")
    if len(edges) != m:
        raise InputError(f"declared {m} edges but found {len(edges)}")
    try:
        return Graph(n, edges)
    except InputError as exc:
        raise InputError(f"invalid edge list: {exc}") from None


def format_edge_list(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in sorted(g.edges))
    return "\n".join(lines) + "\n"


def complete_graph(n: int) -> Graph:
    return Graph(n, combinations(range(n), 2))


def complete_bipartite(a: int, b: int) -> Graph:
    """K_{a,b}: side A = 0..a-1, side B = a..a+b-1."""
    return Graph(a + b, ((i, a + j) for i in range(a) for j in range(b)))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise InputError("cycle needs at least 3 vertices")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(n - 1)])
