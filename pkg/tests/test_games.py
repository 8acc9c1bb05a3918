import math
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from locyc.errors import InputError, StrategyFault
from locyc.games import (
    PROTAGONIST,
    GameState,
    RandomMaker,
    SingletonWaiter,
    StrategyHandle,
    client_cycle_pipeline,
    cw_avoidance_delta_search,
    cw_criterion_sum,
    cw_density_avoidance_sum,
    make_strategy,
    maker_cycle_pipeline,
    mb_union_bound_exact_terms,
    mb_union_bound_sum,
    play_client_waiter,
    play_maker_breaker,
    strategy_names,
)


class TestEdgeCodec:
    @settings(max_examples=30, deadline=None)
    @given(st.integers(2, 60))
    def test_round_trip(self, n):
        state = GameState(n, 1, "maker-breaker")
        t = 0
        for u in range(n - 1):
            for v in range(u + 1, n):
                assert state.encode(u, v) == t
                assert state.decode(t) == (u, v)
                t += 1
        assert t == state.total


class TestMakerBreakerEngine:
    def test_bookkeeping_small(self):
        maker = make_strategy("maker", "random", seed=1)
        breaker = make_strategy("breaker", "greedy-degree")
        state = play_maker_breaker(4, 1, maker, breaker, rounds=3, seed=5)
        counts = state.counts()
        assert counts == {"maker": 3, "breaker": 3}
        claimed = [t for t, own in enumerate(state.owner) if own]
        assert len(claimed) == 6
        state.check_invariants()

    def test_huge_bias_ends_in_one_round(self):
        maker = make_strategy("maker", "random", seed=2)
        breaker = make_strategy("breaker", "random", seed=3)
        state = play_maker_breaker(5, 100, maker, breaker, rounds=10, seed=0)
        counts = state.counts()
        assert counts["maker"] == 1
        assert counts["breaker"] == state.total - 1
        state.check_invariants()

    def test_transcripts_bit_identical(self):
        def run():
            maker = make_strategy("maker", "random")
            breaker = make_strategy("breaker", "random")
            return play_maker_breaker(30, 3, maker, breaker, rounds=40, seed=99)

        a, b = run(), run()
        assert list(a.tr_edges) == list(b.tr_edges)
        assert list(a.tr_actors) == list(b.tr_actors)
        assert list(a.tr_rounds) == list(b.tr_rounds)

    def test_seed_matters(self):
        def run(seed):
            return play_maker_breaker(
                20, 2, make_strategy("maker", "random"),
                make_strategy("breaker", "random"), rounds=20, seed=seed,
            )

        assert list(run(1).tr_edges) != list(run(2).tr_edges)

    def test_strategy_fault_names_actor_and_round(self):
        class BadMaker(StrategyHandle):
            role, name = "maker", "bad"

            def maker_move(self, state):
                return -1

        with pytest.raises(StrategyFault) as exc:
            play_maker_breaker(5, 1, BadMaker(), make_strategy("breaker", "random"), 3, seed=0)
        assert exc.value.actor == "maker" and exc.value.round_no == 1

    def test_cheating_breaker_rejected(self):
        class Cheat(StrategyHandle):
            role, name = "breaker", "cheat"

            def breaker_moves(self, state, quota):
                return [state.tr_edges[0]] * quota  # re-claims maker's edge

        with pytest.raises(StrategyFault) as exc:
            play_maker_breaker(5, 2, make_strategy("maker", "random"), Cheat(), 3, seed=1)
        assert exc.value.actor == "breaker"

    def test_random_maker_uniform_first_move(self):
        # frequency of each K_4 edge as the opening move: 1/6 within 3 sigma
        hits = [0] * 6
        for seed in range(6000):
            maker = RandomMaker(seed)
            state = GameState(4, 1, "maker-breaker")
            state.round = 1
            hits[maker.maker_move(state)] += 1
        expected = 1000.0
        sigma = math.sqrt(6000 * (1 / 6) * (5 / 6))
        for h in hits:
            assert abs(h - expected) <= 3 * sigma

    def test_forced_single_edge(self):
        maker = RandomMaker(7)
        state = GameState(2, 1, "maker-breaker")
        state.round = 1
        assert maker.maker_move(state) == 0

    @settings(max_examples=20, deadline=None)
    @given(st.integers(0, 500), st.sampled_from([1, 3, 10]), st.sampled_from(["random", "greedy-degree", "tail"]))
    def test_legality_random_games(self, seed, b, breaker_name):
        maker = make_strategy("maker", "random")
        breaker = make_strategy("breaker", breaker_name)
        state = play_maker_breaker(12, b, maker, breaker, rounds=30, seed=seed)
        state.check_invariants()
        # random maker holds exactly one edge per round played
        rounds = max(state.tr_rounds)
        assert state.counts()["maker"] == rounds


class TestClientWaiterEngine:
    def test_full_offer_round_one(self):
        waiter = make_strategy("waiter", "random")
        client = make_strategy("client", "random")
        state = play_client_waiter(4, 5, waiter, client, seed=2)
        counts = state.counts()
        assert counts == {"client": 1, "waiter": 5}
        state.check_invariants()

    def test_singleton_offers_feed_client_everything(self):
        waiter = SingletonWaiter()
        client = make_strategy("client", "random")
        state = play_client_waiter(4, 3, waiter, client, seed=0)
        counts = state.counts()
        assert counts["client"] == state.total == 6
        assert counts["waiter"] == 0
        assert max(state.tr_rounds) == 6
        state.check_invariants()

    def test_client_share_with_full_offers(self):
        for n, b in [(10, 2), (12, 5), (9, 4)]:
            waiter = make_strategy("waiter", "random")
            client = make_strategy("client", "greedy-sparse")
            state = play_client_waiter(n, b, waiter, client, seed=n * b)
            total = n * (n - 1) // 2
            assert state.counts()["client"] >= total // (b + 1)
            state.check_invariants()

    def test_bad_offer_faulted(self):
        class HugeOffer(StrategyHandle):
            role, name = "waiter", "huge"

            def waiter_offer(self, state):
                return list(range(min(state.b + 2, state.total)))

        with pytest.raises(StrategyFault) as exc:
            play_client_waiter(6, 2, HugeOffer(), make_strategy("client", "random"), seed=0)
        assert exc.value.actor == "waiter"

    def test_client_outside_offer_faulted(self):
        class Grabby(StrategyHandle):
            role, name = "client", "grabby"

            def client_choice(self, state, offer):
                return (max(offer) + 1) % state.total

        with pytest.raises(StrategyFault) as exc:
            play_client_waiter(6, 4, make_strategy("waiter", "random"), Grabby(), seed=0)
        assert exc.value.actor == "client"

    @settings(max_examples=15, deadline=None)
    @given(st.integers(0, 300), st.sampled_from([1, 4, 9]))
    def test_legality_random_games(self, seed, b):
        waiter = make_strategy("waiter", "random")
        client = make_strategy("client", "random")
        state = play_client_waiter(11, b, waiter, client, seed=seed)
        state.check_invariants()
        assert len(state.freelist) == 0


class TestStrategyRegistry:
    def test_known_names(self):
        assert "greedy-degree" in strategy_names("breaker")
        assert "greedy-sparse" in strategy_names("client")

    def test_unknown_rejected(self):
        with pytest.raises(InputError):
            make_strategy("breaker", "psychic")


class TestCwCriterionSum:
    def test_single_triangle(self):
        report = cw_criterion_sum(2, [3])
        assert report.value == pytest.approx(1 / 27)
        assert report.verdict

    def test_empty_family(self):
        report = cw_criterion_sum(5, [])
        assert report.value == 0.0 and report.verdict

    def test_hundred_triangles(self):
        report = cw_criterion_sum(2, [3] * 100)
        assert report.value == pytest.approx(100 / 27)
        assert not report.verdict

    @settings(max_examples=60, deadline=None)
    @given(
        st.integers(1, 50),
        st.lists(st.integers(1, 60), min_size=0, max_size=20),
    )
    def test_matches_exact_rationals_to_12_digits(self, b, family):
        report = cw_criterion_sum(b, family)
        exact = sum(Fraction(1, (b + 1) ** e) for e in family)
        if exact == 0:
            assert report.value == 0.0
        else:
            rel = abs(Fraction(report.value) - exact) / exact
            assert rel < Fraction(1, 10**12)
        assert report.verdict == (exact < Fraction(1, 2))


class TestMbUnionBound:
    def test_empty_sum(self):
        assert mb_union_bound_sum(1000, 0.2, 25.0**-20).value == 0.0

    def test_tiny_delta_any_n(self):
        report = mb_union_bound_sum(10**9, 0.2, 25.0**-20)
        assert report.value == 0.0 and report.verdict

    def test_finite_and_decreasing_in_n(self):
        # the decreasing trend needs the contracting regime 20 delta^(eps/4) < 1;
        # outside it the last summand (20 delta^(eps/4))^(delta n) blows up
        values = [mb_union_bound_sum(n, 4.0, 0.04).value for n in (100, 200, 400, 800)]
        assert all(math.isfinite(v) for v in values)
        assert values == sorted(values, reverse=True)

    def test_growing_outside_contracting_regime(self):
        values = [mb_union_bound_sum(n, 4.0, 0.1).value for n in (100, 400)]
        assert values[1] > values[0]

    def test_exact_terms_below_chained_bound(self):
        rows = mb_union_bound_exact_terms(500, 0.5, 0.05)
        assert rows, "expected at least one cross-check row"
        for row in rows:
            assert row["exact_log"] <= row["chained_log"] + 1e-9


class TestCwDensityAvoidance:
    def test_empty_sum_verdict_true(self):
        report = cw_density_avoidance_sum(100, 24, 0.5, 0.001)
        assert report.value == 0.0 and report.verdict

    def test_moderate_parameters_finite(self):
        report = cw_density_avoidance_sum(10_000, 2500, 0.5, 0.001)
        assert math.isfinite(report.log_value) or report.value == 0.0

    def test_nonincreasing_in_delta(self):
        n, b, eps = 500, 124, 0.5
        grid = [i / 50 for i in range(1, 21)]
        values = [cw_density_avoidance_sum(n, b, eps, d).value for d in grid]
        for lo, hi in zip(values, values[1:]):
            assert hi >= lo - 1e-15

    def test_delta_search_consistent(self):
        n, eps = 400, 0.5
        best = cw_avoidance_delta_search(n, eps, grid=[0.01, 0.02, 0.05, 0.1])
        b = max(1, int((1 - eps) * n / 2))
        if best > 0:
            assert cw_density_avoidance_sum(n, b, eps, best).verdict


class TestMakerPipeline:
    def test_paper_window_is_vacuous_at_desk_scale(self):
        breaker = make_strategy("breaker", "random")
        report = maker_cycle_pipeline(300, 0.2, breaker, seed=3)
        assert report.paper_delta == pytest.approx(25.0**-20)
        assert report.paper_k == 0 and report.paper_vacuous
        assert report.k_used >= 10

    def test_exact_edge_count_against_greedy(self):
        breaker = make_strategy("breaker", "greedy-degree")
        report = maker_cycle_pipeline(400, 0.5, breaker, seed=8)
        assert report.protagonist_edges == int(1.25 * 400) == report.rounds_played
        assert report.b == 100
        assert report.min_free_seen > 0.5 / 3 * 400**2 * 0.5

    def test_tail_breaker_leaves_maker_alone(self):
        breaker = make_strategy("breaker", "tail")
        report = maker_cycle_pipeline(500, 0.5, breaker, seed=21)
        assert report.validated and report.cycle_length >= 3
        assert report.failure is None

    def test_reports_reproducible(self):
        a = maker_cycle_pipeline(200, 0.4, make_strategy("breaker", "random"), seed=5)
        b = maker_cycle_pipeline(200, 0.4, make_strategy("breaker", "random"), seed=5)
        assert a.to_dict() == b.to_dict()


class TestClientPipeline:
    def test_singleton_waiter_gives_dense_client_graph(self):
        report = client_cycle_pipeline(
            40, 0.5, SingletonWaiter(), make_strategy("client", "random"), seed=4
        )
        assert report.protagonist_edges == 40 * 39 // 2
        assert report.validated and report.cycle_length >= 3

    def test_random_waiter_greedy_client(self):
        report = client_cycle_pipeline(
            120, 0.5, make_strategy("waiter", "random"),
            make_strategy("client", "greedy-sparse"), seed=6,
        )
        total = 120 * 119 // 2
        assert report.protagonist_edges >= total // (report.b + 1)
        assert report.validated or report.failure is not None

    def test_huge_bias_engine_level(self):
        # waiter may offer the whole board in one round; client ends with 1 edge
        state = play_client_waiter(
            8, 100, make_strategy("waiter", "random"), make_strategy("client", "random"), seed=9
        )
        assert state.counts()["client"] == 1


class TestTranscriptExport:
    def test_jsonl_rows_match_state(self, tmp_path):
        import json

        state = play_maker_breaker(
            10, 2, make_strategy("maker", "random"),
            make_strategy("breaker", "random"), rounds=8, seed=3,
        )
        path = tmp_path / "t.jsonl"
        state.write_transcript(str(path))
        rows = [json.loads(line) for line in path.read_text().splitlines()]
        assert rows == [[r, a, u, v] for r, a, u, v in state.transcript_rows()]
        # replaying the exported rows rebuilds the ownership exactly
        rebuilt = {}
        for rnd, actor, u, v in rows:
            assert (u, v) not in rebuilt
            rebuilt[(u, v)] = actor
        makers = sorted(e for e, a in rebuilt.items() if a == "maker")
        assert makers == sorted(state.edges_of(PROTAGONIST))
