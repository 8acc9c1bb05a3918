import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from locyc.dfs import (
    DfsForest,
    check_back_edge_property,
    dfs_forest,
    identity_order,
    split_under_vertex,
    subtree_vertices,
    tree_path_to_root,
)
from locyc.errors import InputError
from locyc.graph import Graph, complete_graph, path_graph

from test_graph import random_graph


def random_tree(n, seed):
    """Random tree by attaching each vertex to an earlier one."""
    rng = random.Random(seed)
    return Graph(n, [(rng.randrange(v), v) for v in range(1, n)])


class TestDfsForest:
    def test_path_identity_order(self):
        f = dfs_forest(path_graph(4), identity_order(4))
        assert f.roots == (0,)
        assert f.parent == (None, 0, 1, 2)

    def test_complete_graph_gives_hamilton_path_tree(self):
        f = dfs_forest(complete_graph(4), identity_order(4))
        assert f.parent == (None, 0, 1, 2)
        assert f.subtree_size == (4, 3, 2, 1)

    def test_two_disjoint_edges(self):
        f = dfs_forest(Graph(4, [(0, 1), (2, 3)]), identity_order(4))
        assert f.roots == (0, 2)
        assert f.parent == (None, 0, None, 2)

    def test_sigma_changes_result(self):
        g = complete_graph(4)
        f = dfs_forest(g, (3, 2, 1, 0))
        assert f.roots == (3,)
        assert f.parent == (1, 2, 3, None)

    def test_rejects_non_permutation(self):
        with pytest.raises(InputError):
            dfs_forest(path_graph(3), (0, 0, 2))

    def test_deterministic(self):
        g = random_graph(30, 0.2, 11)
        sigma = tuple(random.Random(5).sample(range(30), 30))
        assert dfs_forest(g, sigma) == dfs_forest(g, sigma)

    @settings(max_examples=50, deadline=None)
    @given(st.integers(0, 1000), st.integers(0, 1000))
    def test_forest_structure(self, seed, sig_seed):
        g = random_graph(14, 0.2, seed)
        sigma = tuple(random.Random(sig_seed).sample(range(14), 14))
        f = dfs_forest(g, sigma)
        # parent edges are graph edges and sizes recompute bottom-up
        for v, p in enumerate(f.parent):
            if p is not None:
                assert g.has_edge(v, p)
        sizes = [1] * g.n
        for v in sorted(range(g.n), key=f.discovery.__getitem__, reverse=True):
            p = f.parent[v]
            if p is not None:
                sizes[p] += sizes[v]
        assert tuple(sizes) == f.subtree_size


class TestBackEdgeProperty:
    def test_k4_identity(self):
        g = complete_graph(4)
        assert check_back_edge_property(g, dfs_forest(g, identity_order(4)))

    def test_hand_built_violation(self):
        # star-shaped forest on a triangle: edge (1,2) joins two siblings
        g = Graph(3, [(0, 1), (0, 2), (1, 2)])
        fake = DfsForest(
            n=3,
            sigma=(0, 1, 2),
            parent=(None, 0, 0),
            roots=(0,),
            discovery=(0, 1, 2),
            subtree_size=(3, 1, 1),
        )
        assert check_back_edge_property(g, fake) is False

    def test_mismatched_forest_rejected(self):
        g = Graph(3, [(0, 1)])
        fake = DfsForest(
            n=3,
            sigma=(0, 1, 2),
            parent=(None, 0, 1),
            roots=(0,),
            discovery=(0, 1, 2),
            subtree_size=(3, 2, 1),
        )
        with pytest.raises(InputError):
            check_back_edge_property(g, fake)

    @settings(max_examples=80, deadline=None)
    @given(st.integers(0, 10_000), st.integers(0, 10_000))
    def test_holds_universally(self, seed, sig_seed):
        n = 5 + seed % 30
        g = random_graph(n, 2.5 / n + 0.05, seed)
        sigma = tuple(random.Random(sig_seed).sample(range(n), n))
        assert check_back_edge_property(g, dfs_forest(g, sigma))


class TestSplitUnderVertex:
    def test_path_tree_takes_single_child(self):
        k = 6
        f = dfs_forest(path_graph(k + 1), identity_order(k + 1))
        w = split_under_vertex(f, 0, k)
        assert w.v == 0 and w.children == (1,) and w.total == 6

    def test_star_greedy_fill(self):
        # star center 0 with 9 leaves: no child reaches ceil(k/2), greedy
        # packing in sigma-order takes leaves while the total stays <= k
        g = Graph(10, [(0, v) for v in range(1, 10)])
        f = dfs_forest(g, identity_order(10))
        w = split_under_vertex(f, 0, 6)
        assert w.v == 0
        assert w.children == (1, 2, 3, 4, 5, 6)
        assert w.total == 6

    def test_complete_binary_tree_singleton_branch(self):
        # nodes 0..14, children of i are 2i+1, 2i+2; at the depth-1 vertex
        # each child subtree has 3 >= ceil(6/2) vertices, so one suffices
        g = Graph(15, [(i, 2 * i + 1) for i in range(7)] + [(i, 2 * i + 2) for i in range(7)])
        f = dfs_forest(g, identity_order(15))
        w = split_under_vertex(f, 0, 6)
        assert f.subtree_size[w.v] == 7
        assert w.total == 3 and len(w.children) == 1

    def test_rejects_small_tree(self):
        f = dfs_forest(path_graph(5), identity_order(5))
        with pytest.raises(InputError):
            split_under_vertex(f, 0, 7)

    def test_rejects_non_root(self):
        f = dfs_forest(path_graph(5), identity_order(5))
        with pytest.raises(InputError):
            split_under_vertex(f, 2, 3)

    @settings(max_examples=100, deadline=None)
    @given(st.integers(0, 10_000), st.sampled_from([3, 5, 8, 13, 20]))
    def test_invariants_on_random_trees(self, seed, k):
        n = k + 2 + seed % 60
        t = random_tree(n, seed)
        sigma = tuple(random.Random(seed + 1).sample(range(n), n))
        f = dfs_forest(t, sigma)
        root = f.roots[0]
        w = split_under_vertex(f, root, k)
        w.check(f)
        assert k // 2 <= w.total <= k


class TestTreePaths:
    def test_root_path_is_singleton(self):
        f = dfs_forest(path_graph(4), identity_order(4))
        assert tree_path_to_root(f, 0) == [0]

    def test_path_tree_full_walk(self):
        f = dfs_forest(path_graph(4), identity_order(4))
        assert tree_path_to_root(f, 3) == [3, 2, 1, 0]

    def test_depth_matches_length(self):
        t = random_tree(40, 9)
        f = dfs_forest(t, identity_order(40))
        for v in range(40):
            path = tree_path_to_root(f, v)
            assert path[-1] == f.roots[0]
            for a, b in zip(path, path[1:]):
                assert f.parent[a] == b

    def test_subtree_vertices(self):
        f = dfs_forest(path_graph(5), identity_order(5))
        assert subtree_vertices(f, 2) == [2, 3, 4]
