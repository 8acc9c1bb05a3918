import math
import random
from fractions import Fraction
from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from locyc.errors import (
    DensityHypothesisError,
    ExpansionViolated,
    HypothesisFailure,
    InputError,
    ScalingError,
    SizeLimitError,
)
from locyc.extract import (
    DensityParams,
    audit_expansion,
    dense_subset_oracle,
    extract_cycle_density,
    extract_cycle_expander,
    find_dense_core,
    find_violating_set,
    to_fraction,
)
from locyc.graph import (
    Graph,
    complete_bipartite,
    complete_graph,
    cycle_graph,
    external_neighborhood,
    incident_edge_count,
    induced_edge_count,
    longest_cycle_bruteforce,
    path_graph,
)

from test_graph import random_graph

TWO_TRIANGLES = Graph(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)])


def exhaustive_violating_exists(g, c1):
    """Oracle: scan every nonempty subset for incident count < c1|W|."""
    frac = to_fraction(c1)
    p, q = frac.numerator, frac.denominator
    for size in range(1, g.n + 1):
        for ws in combinations(range(g.n), size):
            if q * incident_edge_count(g, ws) < p * size:
                return True
    return False


def exhaustive_expansion_minimum(g, k):
    """Oracle: direct minimum of |N(W)| over the audited size range."""
    lo = max(1, k // 2)
    return min(
        len(external_neighborhood(g, ws))
        for size in range(lo, k + 1)
        for ws in combinations(range(g.n), size)
    )


def local_density_holds(g, c2, k):
    """Oracle: every subset of size <= k spans fewer than c2|R| edges."""
    for size in range(1, min(k, g.n) + 1):
        for rs in combinations(range(g.n), size):
            if induced_edge_count(g, rs) >= c2 * size:
                return False
    return True


class TestToFraction:
    def test_snaps_float_literals(self):
        assert to_fraction(1.2) == Fraction(6, 5)
        assert to_fraction(1.5) == Fraction(3, 2)

    def test_accepts_strings_and_fractions(self):
        assert to_fraction("7/5") == Fraction(7, 5)
        assert to_fraction(Fraction(3, 2)) == Fraction(3, 2)

    def test_rejects_huge_denominator(self):
        with pytest.raises(ScalingError):
            to_fraction(Fraction(1, 10**6 + 3))


class TestFindViolatingSet:
    def test_k4_has_none_at_1_5(self):
        assert find_violating_set(complete_graph(4), 1.5) is None

    def test_path3_endpoint_violates(self):
        w = find_violating_set(path_graph(3), 1.5)
        assert w is not None
        assert incident_edge_count(path_graph(3), w) < 1.5 * len(w)

    def test_triangle_none_at_1(self):
        assert find_violating_set(cycle_graph(3), 1.0) is None

    def test_rejects_nonpositive(self):
        with pytest.raises(InputError):
            find_violating_set(cycle_graph(3), 0)

    @settings(max_examples=80, deadline=None)
    @given(st.integers(0, 2000), st.sampled_from([1.2, 1.5, 2.0]))
    def test_agrees_with_exhaustive_search(self, seed, c1):
        g = random_graph(4 + seed % 6, 0.45, seed)
        found = find_violating_set(g, c1)
        assert (found is not None) == exhaustive_violating_exists(g, c1)
        if found is not None:
            frac = to_fraction(c1)
            assert frac.denominator * incident_edge_count(g, found) < frac.numerator * len(found)


class TestFindDenseCore:
    def check_core(self, g, c1):
        core = find_dense_core(g, c1)
        core.check(g, c1)
        return core

    def test_k5(self):
        core = self.check_core(complete_graph(5), 1.5)
        assert core.ratio >= Fraction(3, 2)

    def test_k4_plus_path_drops_the_path(self):
        g = Graph(7, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3), (4, 5), (5, 6)])
        core = self.check_core(g, 1.4)
        assert set(core.vertices) <= {0, 1, 2, 3}

    def test_triangle_at_1(self):
        core = self.check_core(cycle_graph(3), 1.0)
        assert core.vertices == (0, 1, 2)

    def test_no_core_in_sparse_input(self):
        with pytest.raises(DensityHypothesisError):
            find_dense_core(path_graph(5), 1.5)

    def test_no_core_in_plain_cycle_above_1(self):
        with pytest.raises(DensityHypothesisError):
            find_dense_core(cycle_graph(5), 1.2)

    @settings(max_examples=40, deadline=None)
    @given(st.integers(0, 1000))
    def test_core_properties_on_random_inputs(self, seed):
        g = random_graph(10, 0.5, seed)
        if g.m < 1.3 * g.n:
            return
        core = find_dense_core(g, 1.3)
        core.check(g, 1.3)


class TestAuditExpansion:
    def test_c8_arcs(self):
        audit = audit_expansion(cycle_graph(8), 4)
        assert audit.minimum == 2 and audit.exact

    def test_k5_sees_everything(self):
        assert audit_expansion(complete_graph(5), 2).minimum == 3

    def test_disconnected_drops_to_zero(self):
        audit = audit_expansion(TWO_TRIANGLES, 4)
        assert audit.minimum == 0
        assert external_neighborhood(TWO_TRIANGLES, audit.witness) == []

    def test_sampled_is_upper_bound(self):
        g = cycle_graph(12)
        exact = audit_expansion(g, 4).minimum
        sampled = audit_expansion(g, 4, mode="sampled", samples=200, seed=1)
        assert not sampled.exact
        assert sampled.minimum >= exact

    def test_cap_enforced(self):
        with pytest.raises(SizeLimitError):
            audit_expansion(Graph(23, []), 4)

    @settings(max_examples=50, deadline=None)
    @given(st.integers(0, 1000), st.sampled_from([2, 3, 4, 5]))
    def test_matches_direct_enumeration(self, seed, k):
        g = random_graph(k + 3 + seed % 4, 0.4, seed)
        assert audit_expansion(g, k).minimum == exhaustive_expansion_minimum(g, k)


class TestExtractCycleExpander:
    def test_k4_minimum_degree_case(self):
        # k = 1 recovers the classic bound: min degree t >= 2 forces t+1
        cert = extract_cycle_expander(complete_graph(4), 1)
        cert.assert_valid(complete_graph(4))
        assert cert.length >= 4

    def test_k63_tightness_is_exact(self):
        g = complete_bipartite(6, 3)
        cert = extract_cycle_expander(g, 6)
        cert.assert_valid(g)
        assert cert.length == 6 == longest_cycle_bruteforce(g)

    def test_disconnected_raises_with_witness(self):
        with pytest.raises(ExpansionViolated) as exc:
            extract_cycle_expander(TWO_TRIANGLES, 4)
        witness = exc.value.witness
        assert 2 <= len(witness) <= 4
        assert external_neighborhood(TWO_TRIANGLES, witness) == []

    def test_rejects_small_graph(self):
        with pytest.raises(InputError):
            extract_cycle_expander(complete_graph(4), 4)

    def test_acyclic_witness_region_fails_cleanly(self):
        # star: the split leaves are only adjacent to the split vertex itself
        star = Graph(10, [(0, v) for v in range(1, 10)])
        with pytest.raises(HypothesisFailure):
            extract_cycle_expander(star, 6)

    @settings(max_examples=60, deadline=None)
    @given(st.integers(0, 3000), st.sampled_from([2, 3, 4, 6]))
    def test_theorem_guarantee_and_oracle_cap(self, seed, k):
        n = k + 4 + seed % 8
        g = random_graph(n, 3.2 / n + 0.18, seed)
        t = audit_expansion(g, k).minimum
        if t < 2:
            return
        cert = extract_cycle_expander(g, k)
        cert.assert_valid(g)
        assert cert.length >= t + 1
        assert cert.length <= longest_cycle_bruteforce(g)
        assert cert.claimed_bound >= t + 1


class TestExtractCycleDensity:
    def test_k5_certificate(self):
        g = complete_graph(5)
        cert = extract_cycle_density(g, DensityParams(1.5, 1.2, 4))
        cert.assert_valid(g)
        assert 3 <= cert.length <= longest_cycle_bruteforce(g)

    def test_plain_cycle_density_too_low(self):
        # m = n exactly, so no c1 > 1 satisfies the global density bar
        with pytest.raises(InputError):
            extract_cycle_density(cycle_graph(12), DensityParams(1.1, 1.05, 4))

    def test_small_core_reported_as_hypothesis_failure(self):
        # K5 plus a long pendant path: the core is the K5, smaller than k+1
        edges = list(combinations(range(5), 2))
        edges += [(4 + i, 5 + i) for i in range(20)]
        g = Graph(25, edges)
        with pytest.raises(DensityHypothesisError):
            extract_cycle_density(g, DensityParams(1.15, 1.05, 8))

    def test_sparse_random_graph_end_to_end(self):
        rng = random.Random(42)
        g = Graph(
            200, [e for e in combinations(range(200), 2) if rng.random() < 6 / 200]
        )
        params = DensityParams(1.4, 1.2, 12)
        assert g.m >= 1.4 * g.n
        cert = extract_cycle_density(g, params)
        cert.assert_valid(g)
        assert cert.length >= 3

    @settings(max_examples=30, deadline=None)
    @given(st.integers(0, 500))
    def test_real_valued_bound_when_audit_passes(self, seed):
        # circulant-flavored sparse graphs; whenever the exhaustive local
        # audit passes the certificate must reach the analytic bound
        n = 14 + seed % 5
        g = random_graph(n, 3.4 / n, seed)
        for c1, c2, k in [(1.3, 1.1, 5), (1.5, 1.2, 6), (1.25, 1.1, 4)]:
            if g.m < c1 * g.n:
                continue
            if not local_density_holds(g, c2, k):
                continue
            try:
                cert = extract_cycle_density(g, DensityParams(c1, c2, k))
            except DensityHypothesisError:
                continue
            cert.assert_valid(g)
            bound = (k / 2 - 1) * (math.sqrt(c1 / c2) - 1) + 1
            assert cert.length >= bound - 1e-9


class TestDenseSubsetOracle:
    def test_k4_pairs(self):
        found = dense_subset_oracle(complete_graph(4), 2)
        assert found.edge_count == 1
        assert found.exceeds and found.bound == pytest.approx(6 * (1 / 3) ** 2)

    def test_k33_triples(self):
        found = dense_subset_oracle(complete_bipartite(3, 3), 3)
        assert found.edge_count == 2
        assert found.exceeds and found.bound == pytest.approx(9 * (2 / 5) ** 2)

    def test_star_pair(self):
        found = dense_subset_oracle(Graph(6, [(0, v) for v in range(1, 6)]), 2)
        assert found.edge_count == 1
        assert found.exceeds and found.bound == pytest.approx(0.2)

    def test_cap(self):
        with pytest.raises(SizeLimitError):
            dense_subset_oracle(Graph(19, []), 3)

    @settings(max_examples=60, deadline=None)
    @given(st.integers(0, 2000))
    def test_strict_inequality_over_valid_sizes(self, seed):
        g = random_graph(5 + seed % 6, 0.5, seed)
        if g.m == 0:
            return
        for k1 in range(2, g.n):
            found = dense_subset_oracle(g, k1)
            # cross-check the maximum against plain enumeration
            best = max(
                induced_edge_count(g, rs) for rs in combinations(range(g.n), k1)
            )
            assert found.edge_count == best
            assert found.exceeds, (g.n, g.m, k1, found)
