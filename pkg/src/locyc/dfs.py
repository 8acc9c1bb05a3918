"""Deterministic depth-first search under an explicit vertex order.

The search keeps three vertex pools: finished, undiscovered, and a stack
of vertices under exploration.  Neighbors are scanned in sigma-order and
new roots are the sigma-first undiscovered vertices, so the forest is a
pure function of (graph, sigma).  Subtree sizes are recorded because the
cycle extraction needs to carve out child groups of prescribed total size.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InputError
from .graph import Graph


@dataclass(frozen=True)
class DfsForest:
    """Rooted spanning forest: order, parents, discovery ranks, subtree sizes."""

    n: int
    sigma: tuple[int, ...]
    parent: tuple[int | None, ...]
    roots: tuple[int, ...]
    discovery: tuple[int, ...]  # rank of each vertex in visit order
    subtree_size: tuple[int, ...]

    def children(self, v: int) -> list[int]:
        return [u for u in range(self.n) if self.parent[u] == v]

    def tree_edges(self) -> set[tuple[int, int]]:
        return {
            (min(u, p), max(u, p))
            for u, p in enumerate(self.parent)
            if p is not None
        }


def _check_permutation(n: int, sigma) -> tuple[int, ...]:
    sig = tuple(sigma)
    if sorted(sig) != list(range(n)):
        raise InputError(f"sigma is not a permutation of 0..{n - 1}")
    return sig


def dfs_forest(g: Graph, sigma) -> DfsForest:
    """Run the stack-based DFS on g, prioritizing vertices by sigma."""
    n = g.n
    sig = _check_permutation(n, sigma)
    rank = [0] * n
    for pos, v in enumerate(sig):
        rank[v] = pos
    # neighbors pre-sorted by sigma-rank; a cursor per vertex skips visited ones
    nbrs = [sorted(g.adjacency[v], key=rank.__getitem__) for v in range(n)]
    cursor = [0] * n
    parent: list[int | None] = [None] * n
    discovery = [-1] * n
    subtree = [1] * n
    roots = []
    stack: list[int] = []
    clock = 0
    for r in sig:
        if discovery[r] >= 0:
            continue
        roots.append(r)
        discovery[r] = clock
        clock += 1
        stack.append(r)
        while stack:
            v = stack[-1]
            lst = nbrs[v]
            i = cursor[v]
            while i < len(lst) and discovery[lst[i]] >= 0:
                i += 1
            cursor[v] = i
            if i < len(lst):
                u = lst[i]
                cursor[v] = i + 1
                parent[u] = v
                discovery[u] = clock
                clock += 1
                stack.append(u)
            else:
                stack.pop()
                p = parent[v]
                if p is not None:
                    subtree[p] += subtree[v]
    return DfsForest(
        n=n,
        sigma=sig,
        parent=tuple(parent),
        roots=tuple(roots),
        discovery=tuple(discovery),
        subtree_size=tuple(subtree),
    )


def identity_order(n: int) -> tuple[int, ...]:
    return tuple(range(n))


def _check_forest_matches(g: Graph, forest: DfsForest) -> None:
    if forest.n != g.n:
        raise InputError(
            f"forest has {forest.n} vertices but graph has {g.n}"
        )
    for v, p in enumerate(forest.parent):
        if p is not None and not g.has_edge(v, p):
            raise InputError(f"forest edge ({p},{v}) is not an edge of the graph")


def check_back_edge_property(g: Graph, forest: DfsForest) -> bool:
    """True iff every non-forest edge joins a vertex to a forest ancestor."""
    _check_forest_matches(g, forest)
    tree = forest.tree_edges()
    # ancestor test via depth + parent walk; depths first
    depth = [0] * g.n
    order = sorted(range(g.n), key=forest.discovery.__getitem__)
    for v in order:
        p = forest.parent[v]
        depth[v] = 0 if p is None else depth[p] + 1
    for u, v in g.edges:
        if (u, v) in tree:
            continue
        a, b = (u, v) if depth[u] >= depth[v] else (v, u)
        # walk a up to b's depth, then compare
        x = a
        for _ in range(depth[a] - depth[b]):
            x = forest.parent[x]  # type: ignore[assignment]
        if x != b:
            return False
    return True


@dataclass(frozen=True)
class SplitWitness:
    """A vertex v and child group X with floor(k/2) <= sum of subtrees <= k."""

    v: int
    children: tuple[int, ...]
    total: int
    k: int

    def check(self, forest: DfsForest) -> None:
        for u in self.children:
            if forest.parent[u] != self.v:
                raise AssertionError(f"{u} is not a child of {self.v}")
        total = sum(forest.subtree_size[u] for u in self.children)
        if total != self.total:
            raise AssertionError(f"stored total {self.total} != recomputed {total}")
        if not (self.k // 2 <= total <= self.k):
            raise AssertionError(
                f"total {total} outside [{self.k // 2}, {self.k}]"
            )


def split_under_vertex(forest: DfsForest, tree_root: int, k: int) -> SplitWitness:
    """Find v and a subset X of its children with k/2 <= sum s(u) <= k.

    Descends from the root to the sigma-first vertex whose subtree exceeds
    k while all child subtrees are at most k.  A single child of size
    >= ceil(k/2) is returned alone; otherwise children are packed greedily
    in sigma-order while the running total stays at most k.
    """
    if k <= 0:
        raise InputError(f"k must be positive, got {k}")
    if forest.parent[tree_root] is not None:
        raise InputError(f"{tree_root} is not a root of the forest")
    if forest.subtree_size[tree_root] <= k:
        raise InputError(
            f"tree at {tree_root} has {forest.subtree_size[tree_root]} <= k = {k} vertices"
        )
    rank = {v: i for i, v in enumerate(forest.sigma)}
    size = forest.subtree_size
    children_of: dict[int, list[int]] = {}
    for u, p in enumerate(forest.parent):
        if p is not None:
            children_of.setdefault(p, []).append(u)
    v = tree_root
    while True:
        kids = sorted(children_of.get(v, ()), key=rank.__getitem__)
        big = [u for u in kids if size[u] > k]
        if not big:
            break
        v = big[0]
    half_up = (k + 1) // 2
    for u in kids:
        if size[u] >= half_up:
            return SplitWitness(v=v, children=(u,), total=size[u], k=k)
    chosen = []
    total = 0
    for u in kids:
        if total + size[u] <= k:
            chosen.append(u)
            total += size[u]
    return SplitWitness(v=v, children=tuple(chosen), total=total, k=k)


def tree_path_to_root(forest: DfsForest, v: int) -> list[int]:
    """The unique forest path v, parent(v), ..., root."""
    if not (0 <= v < forest.n):
        raise InputError(f"vertex {v} out of range")
    path = [v]
    while forest.parent[path[-1]] is not None:
        path.append(forest.parent[path[-1]])  # type: ignore[arg-type]
    return path


def subtree_vertices(forest: DfsForest, root: int) -> list[int]:
    """All vertices whose root-path passes through `root` (including it)."""
    children_of: dict[int, list[int]] = {}
    for u, p in enumerate(forest.parent):
        if p is not None:
            children_of.setdefault(p, []).append(u)
    out = []
    stack = [root]
    while stack:
        v = stack.pop()
        out.append(v)
        stack.extend(children_of.get(v, ()))
    return sorted(out)
