"""Exact max-flow on integer capacities (Dinic), with min-cut recovery.

Used as a feasibility test: the density checks need exact integral flow
values and a cut side recovered from the residual graph, so capacities
are plain Python ints (no floats anywhere).
"""

from __future__ import annotations

INF = float("inf")


class MaxFlow:
    """Dinic's algorithm on an adjacency-array residual graph."""

    def __init__(self, n_nodes: int):
        self.n = n_nodes
        self.head: list[list[int]] = [[] for _ in range(n_nodes)]
        self.to: list[int] = []
        self.cap: list[int] = []

    def add_edge(self, u: int, v: int, capacity: int) -> int:
        """Add directed edge u->v; returns its arc index."""
        idx = len(self.to)
        self.head[u].append(idx)
        self.to.append(v)
        self.cap.append(capacity)
        self.head[v].append(idx + 1)
        self.to.append(u)
        self.cap.append(0)
        return idx

    def _bfs(self, s: int, t: int) -> bool:
        self.level = [-1] * self.n
        self.level[s] = 0
        queue = [s]
        for v in queue:
            for idx in self.head[v]:
                if self.cap[idx] > 0 and self.level[self.to[idx]] < 0:
                    self.level[self.to[idx]] = self.level[v] + 1
                    queue.append(self.to[idx])
        return self.level[t] >= 0

    def _dfs(self, s: int, t: int) -> int:
        # iterative blocking-flow DFS with per-node arc cursors
        total = 0
        while True:
            path: list[int] = []
            v = s
            while v != t:
                advanced = False
                while self.cursor[v] < len(self.head[v]):
                    idx = self.head[v][self.cursor[v]]
                    u = self.to[idx]
                    if self.cap[idx] > 0 and self.level[u] == self.level[v] + 1:
                        path.append(idx)
                        v = u
                        advanced = True
                        break
                    self.cursor[v] += 1
                if advanced:
                    continue
                if v == s:
                    return total
                self.level[v] = -1  # dead end; prune from the level graph
                dead = path.pop()
                v = self.to[dead ^ 1]  # tail of the popped arc
                self.cursor[v] += 1
            bottleneck = min(self.cap[idx] for idx in path)
            for idx in path:
                self.cap[idx] -= bottleneck
                self.cap[idx ^ 1] += bottleneck
            total += bottleneck

    def max_flow(self, s: int, t: int) -> int:
        flow = 0
        while self._bfs(s, t):
            self.cursor = [0] * self.n
            flow += self._dfs(s, t)
        return flow

    def source_side_cut(self, s: int) -> set[int]:
        """Nodes reachable from s in the residual graph (minimal cut side)."""
        seen = {s}
        stack = [s]
        while stack:
            v = stack.pop()
            for idx in self.head[v]:
                u = self.to[idx]
                if self.cap[idx] > 0 and u not in seen:
                    seen.add(u)
                    stack.append(u)
        return seen

    def sink_side_cut(self, t: int) -> set[int]:
        """Nodes that reach t in the residual graph (complement = maximal cut)."""
        seen = {t}
        stack = [t]
        while stack:
            v = stack.pop()
            for idx in self.head[v]:
                # arc into v with residual capacity: cap of reverse arc
                if self.cap[idx ^ 1] > 0 and self.to[idx] not in seen:
                    seen.add(self.to[idx])
                    stack.append(self.to[idx])
        return seen
