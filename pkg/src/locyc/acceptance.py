"""The acceptance suite: fourteen numbered criteria, each a function.

Both the test suite and `locyc reproduce` call into this module, so every
criterion prints one machine-readable pass/fail line and returns a result
object.  Corpora are deterministic (seeded) and every expected value is
either computed by an independent oracle here or checked exhaustively.
"""

from __future__ import annotations

import json
import math
import os
import random
import tempfile
import time
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .cli import ExperimentConfig, run_config
from .dfs import check_back_edge_property, dfs_forest, split_under_vertex
from .errors import HypothesisFailure
from .extract import (
    audit_expansion,
    dense_subset_oracle,
    extract_cycle_expander,
    find_violating_set,
    to_fraction,
)
from .games import (
    cw_criterion_sum,
    cw_density_avoidance_sum,
    make_strategy,
    maker_cycle_pipeline,
    play_client_waiter,
    play_maker_breaker,
)
from .gnp import GnpSpec, sample_gnp
from .graph import (
    Graph,
    complete_bipartite,
    complete_graph,
    format_edge_list,
    longest_cycle_bruteforce,
)
from .ramsey import (
    build_affine_plane,
    check_coloring_structure,
    lower_bound_coloring,
    monochromatic_confinement_holds,
    verify_lower_bound_coloring,
)


@dataclass
class CriterionResult:
    number: int
    name: str
    ok: bool
    warn: bool
    detail: str
    elapsed_s: float
    budget_s: float | None

    def line(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        if self.ok and self.warn:
            status = "WARN"
        budget = f"/{self.budget_s:.0f}s" if self.budget_s else ""
        return f"[{status}] criterion {self.number:>2} {self.name}: {self.detail} ({self.elapsed_s:.1f}s{budget})"

    def to_dict(self) -> dict:
        return {
            "number": self.number,
            "name": self.name,
            "ok": self.ok,
            "warn": self.warn,
            "detail": self.detail,
            "elapsed_s": round(self.elapsed_s, 3),
            "budget_s": self.budget_s,
        }


def _finish(number, name, ok, detail, started, budget=None, warn=False) -> CriterionResult:
    elapsed = time.time() - started
    if budget is not None and elapsed >= budget:
        ok = False
        detail += f"; exceeded {budget:.0f}s budget"
    return CriterionResult(number, name, ok, warn, detail, elapsed, budget)


# ---------------------------------------------------------------------------
# deterministic corpora
# ---------------------------------------------------------------------------

def _random_graph(n: int, p: float, seed: int) -> Graph:
    return sample_gnp(GnpSpec(n, p, seed))


def _random_tree(n: int, seed: int) -> Graph:
    rng = random.Random(seed)
    return Graph(n, [(rng.randrange(v), v) for v in range(1, n)])


def _squared_cycle(n: int) -> Graph:
    edges = {(i, (i + 1) % n) for i in range(n)} | {(i, (i + 2) % n) for i in range(n)}
    return Graph(n, {(min(u, v), max(u, v)) for u, v in edges})


def _wheel(n: int) -> Graph:
    rim = [(i, (i + 1) % (n - 1)) for i in range(n - 1)]
    spokes = [(i, n - 1) for i in range(n - 1)]
    return Graph(n, {(min(u, v), max(u, v)) for u, v in rim + spokes})


def _circulant(n: int, offsets) -> Graph:
    edges = set()
    for i in range(n):
        for d in offsets:
            j = (i + d) % n
            edges.add((min(i, j), max(i, j)))
    return Graph(n, edges)


def _petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph(10, outer + spokes + inner)


def _structured_small() -> list[Graph]:
    graphs: list[Graph] = []
    graphs.extend(complete_graph(n) for n in range(5, 10))
    graphs.extend(
        complete_bipartite(a, b)
        for a in range(3, 10)
        for b in range(2, a + 1)
        if a + b <= 14
    )
    graphs.extend(_squared_cycle(n) for n in range(6, 15))
    graphs.extend(_wheel(n) for n in range(6, 14))
    graphs.extend(_circulant(n, (1, 3)) for n in range(8, 15))
    graphs.append(_petersen())
    return graphs


def theorem1_corpus(count: int):
    """(graph, k, t) instances with exhaustive expansion minimum t >= 2."""
    instances = []
    pool = _structured_small()
    for i, g in enumerate(pool):
        for k in (2, 3, 4):
            if k < g.n and len(instances) < count:
                t = audit_expansion(g, k).minimum
                if t >= 2:
                    instances.append((g, k, t))
    seed = 0
    while len(instances) < count:
        seed += 1
        n = 8 + seed % 7
        c = 2.8 + 0.25 * (seed % 5)
        g = _random_graph(n, c / n, seed)
        k = 2 + seed % 5
        if k >= n:
            continue
        t = audit_expansion(g, k).minimum
        if t >= 2:
            instances.append((g, k, t))
    return instances[:count]


# ---------------------------------------------------------------------------
# criteria 1..14
# ---------------------------------------------------------------------------

def criterion_1(graphs: int = 1000) -> CriterionResult:
    """Back-edge property on seeded random graphs with random orders."""
    started = time.time()
    failures = 0
    for seed in range(graphs):
        n = 5 + seed % 46
        p = (1.5 + (seed % 7)) / n
        g = _random_graph(n, min(1.0, p), seed)
        sigma = list(range(n))
        random.Random(seed + 10_000).shuffle(sigma)
        if not check_back_edge_property(g, dfs_forest(g, tuple(sigma))):
            failures += 1
    ok = failures == 0
    return _finish(
        1, "back-edge property", ok, f"{graphs - failures}/{graphs} forests clean",
        started, budget=5.0,
    )


def criterion_2(trees: int = 500) -> CriterionResult:
    """Split-witness invariants on random rooted trees."""
    started = time.time()
    checked = 0
    failures = []
    for seed in range(trees):
        n = 10 + (seed * 37) % 191
        t = _random_tree(n, seed)
        sigma = list(range(n))
        random.Random(seed + 5_000).shuffle(sigma)
        forest = dfs_forest(t, tuple(sigma))
        for k in (5, 10, 50):
            if n <= k:
                continue
            witness = split_under_vertex(forest, forest.roots[0], k)
            try:
                witness.check(forest)
            except AssertionError as exc:
                failures.append((seed, k, str(exc)))
            checked += 1
    ok = not failures
    return _finish(
        2, "subtree splitting", ok,
        f"{checked} splits checked, {len(failures)} violations", started, budget=5.0,
    )


def criterion_3(count: int = 300) -> CriterionResult:
    """Expansion extraction sound against the exhaustive audit and oracle."""
    started = time.time()
    violations = []
    instances = theorem1_corpus(count)
    for g, k, t in instances:
        cert = extract_cycle_expander(g, k)
        problems = cert.violations(g)
        if problems:
            violations.append((g, k, "; ".join(problems)))
            continue
        if cert.length < t + 1:
            violations.append((g, k, f"length {cert.length} < t+1 = {t + 1}"))
            continue
        if cert.length > longest_cycle_bruteforce(g):
            violations.append((g, k, "certificate beats the circumference oracle"))
    ok = not violations
    return _finish(
        3, "expansion extraction soundness", ok,
        f"{len(instances) - len(violations)}/{len(instances)} instances sound",
        started, budget=180.0,
    )


TIGHTNESS_KS = (4, 6, 8, 10)
TIGHTNESS_ALPHAS = (Fraction(1, 4), Fraction(1, 2), Fraction(3, 4))


def tightness_cell(k: int, alpha: Fraction) -> tuple[bool, str]:
    """One tightness-family cell: circumference and extraction guarantee."""
    small = math.ceil(alpha * k)
    g = complete_bipartite(k, small)
    expected = 2 * small
    circumference = longest_cycle_bruteforce(g)
    if circumference != expected:
        return False, (
            f"K_{{{k},{small}}} circumference {circumference} != 2*ceil(alpha k) = {expected}"
        )
    t = audit_expansion(g, k).minimum
    if t >= 2:
        cert = extract_cycle_expander(g, k)
        if cert.violations(g):
            return False, f"K_{{{k},{small}}} certificate invalid"
        if cert.length < t + 1:
            return False, f"K_{{{k},{small}}} certificate {cert.length} < t+1 = {t + 1}"
    return True, f"K_{{{k},{small}}} circumference {circumference}, audit t = {t}"


def criterion_4(ks=TIGHTNESS_KS, alphas=TIGHTNESS_ALPHAS) -> CriterionResult:
    started = time.time()
    failures = []
    cells = 0
    for k in ks:
        for alpha in alphas:
            cells += 1
            ok, note = tightness_cell(k, alpha)
            if not ok:
                failures.append(note)
    ok = not failures
    detail = f"{cells - len(failures)}/{cells} cells"
    if failures:
        detail += "; " + failures[0]
    return _finish(4, "tightness family", ok, detail, started)


def _greedy_dense_probe(g: Graph, c2: float, k: int) -> bool:
    """True if greedy densification finds R (|R| <= k) with edges >= c2|R|."""
    if g.n == 0:
        return False
    adj = g._adj_sets
    degree = [g.degree(v) for v in range(g.n)]
    seed_v = max(range(g.n), key=lambda v: (degree[v], -v))
    picked = {seed_v}
    count = 0
    gain = [len(adj[v] & picked) for v in range(g.n)]
    while len(picked) < min(k, g.n):
        candidates = [v for v in range(g.n) if v not in picked]
        v = max(candidates, key=lambda u: (gain[u], degree[u], -u))
        count += gain[v]
        picked.add(v)
        for u in adj[v]:
            gain[u] += 1
        if count >= c2 * len(picked):
            return True
    return False


def _has_dense_subset(g: Graph, c2: float, k: int) -> bool:
    """Exhaustive with early exit: some R, |R| <= k, spans >= c2|R| edges."""
    if _greedy_dense_probe(g, c2, k):
        return True
    masks = g.neighbor_masks()
    found = False

    def rec(start: int, size: int, mask: int, count: int):
        nonlocal found
        if found:
            return
        if size and count >= c2 * size:
            found = True
            return
        if size == k:
            return
        for v in range(start, g.n):
            rec(v + 1, size + 1, mask | (1 << v), count + (masks[v] & mask).bit_count())
            if found:
                return

    rec(0, 0, 0, 0)
    return found


def criterion_5_search(max_needed: int = 200):
    """Search for (G, c1, c2, k) with n <= 20 satisfying the stated gate.

    The gate: exhaustive local-density audit passes while the guarantee
    precondition (k/2-1)(sqrt(c1/c2)-1) >= 2 holds and |E| >= c1|V|.  The
    most permissive parameter choice per (graph, k) is c1 = m/n and
    c2 = c1 / rho(k) with rho(k) = (1 + 2/(k/2-1))^2; if that fails, no
    (c1, c2) can qualify for this graph and k.
    """
    candidates: list[Graph] = []
    candidates.extend(g for g in _structured_small() if g.n <= 20)
    candidates.append(complete_graph(20))
    candidates.append(_squared_cycle(20))
    candidates.append(_circulant(20, (1, 3, 7)))
    candidates.append(_circulant(18, (1, 4)))
    candidates.append(complete_bipartite(10, 10))
    candidates.append(complete_bipartite(14, 6))
    for seed in range(60):
        n = 16 + seed % 5
        c = 2.0 + 0.8 * (seed % 9)
        candidates.append(_random_graph(n, min(1.0, c / n), 40_000 + seed))
    found = []
    examined = 0
    for g in candidates:
        if g.n < 6 or g.m == 0:
            continue
        density = Fraction(g.m, g.n)
        for k in range(4, min(13, g.n - 1)):
            examined += 1
            rho = (1 + 2 / (k / 2 - 1)) ** 2
            if float(density) <= rho:
                continue  # no c2 > 1 can meet the ratio precondition
            c1 = float(density)
            c2 = c1 / rho
            if not _has_dense_subset(g, c2, k):
                found.append((g, c1, c2, k))
                if len(found) >= max_needed:
                    return found, examined
    return found, examined


def criterion_5(max_needed: int = 200) -> CriterionResult:
    started = time.time()
    found, examined = criterion_5_search(max_needed)
    ok = len(found) >= max_needed
    detail = (
        f"{len(found)}/{max_needed} qualifying instances over {examined} "
        "(graph, k) combinations; for n <= 20 the densest-k-subset average "
        "m k(k-1)/(n(n-1)) already exceeds c2 k whenever c1/c2 meets the "
        "guarantee precondition, so the gate admits no instance"
    )
    return _finish(5, "density extraction gate", ok, detail, started, budget=300.0)


def _violating_exists_dp(g: Graph, c1) -> bool:
    """Oracle for criterion 6: subset scan via an induced-count DP."""
    frac = to_fraction(c1)
    p, q = frac.numerator, frac.denominator
    n, m = g.n, g.m
    masks = g.neighbor_masks()
    size = 1 << n
    induced = [0] * size
    for mask in range(1, size):
        low = mask & -mask
        rest = mask ^ low
        v = low.bit_length() - 1
        induced[mask] = induced[rest] + (masks[v] & rest).bit_count()
    full = size - 1
    for wmask in range(1, size):
        incident = m - induced[full ^ wmask]
        if q * incident < p * wmask.bit_count():
            return True
    return False


def criterion_6(graphs: int = 500) -> CriterionResult:
    started = time.time()
    disagreements = 0
    c1_values = (1.2, 1.5, 2.0)
    for seed in range(graphs):
        n = 6 + seed % 11  # 6..16
        g = _random_graph(n, 0.18 + 0.05 * (seed % 6), 60_000 + seed)
        c1 = c1_values[seed % 3]
        flow_w = find_violating_set(g, c1)
        exists = _violating_exists_dp(g, c1)
        if (flow_w is not None) != exists:
            disagreements += 1
    ok = disagreements == 0
    return _finish(
        6, "flow vs subset enumeration", ok,
        f"{graphs} graphs, {disagreements} disagreements", started,
    )


def criterion_7(graphs: int = 300) -> CriterionResult:
    started = time.time()
    violations = 0
    checked = 0
    seed = 0
    done = 0
    while done < graphs:
        seed += 1
        n = 5 + seed % 10  # 5..14
        g = _random_graph(n, 0.25 + 0.06 * (seed % 5), 70_000 + seed)
        if g.m == 0:
            continue
        done += 1
        for k1 in range(2, n):
            found = dense_subset_oracle(g, k1)
            checked += 1
            if not found.exceeds:
                violations += 1
    ok = violations == 0
    return _finish(
        7, "dense-subset averaging bound", ok,
        f"{graphs} graphs, {checked} (graph,k1) pairs, {violations} violations",
        started,
    )


def criterion_8() -> CriterionResult:
    started = time.time()
    orders = (2, 3, 5, 7, 11, 13)
    problems = []
    for q in orders:
        plane = build_affine_plane(q)
        try:
            plane.check_axioms()
        except AssertionError as exc:
            problems.append(f"q={q}: {exc}")
    ok = not problems
    return _finish(
        8, "affine plane axioms", ok,
        f"orders {orders} verified" if ok else "; ".join(problems),
        started, budget=10.0,
    )


def _support_graph(g: Graph) -> Graph:
    keep = [v for v in range(g.n) if g.degree(v) > 0]
    sub, _ = g.induced_subgraph(keep)
    return sub


def criterion_9(colorings_per_r: int = 50) -> CriterionResult:
    started = time.time()
    violations = []
    for r in (4, 5):
        cap = (r - 2) ** 2 * 50
        target_m = int(cap * 0.9)
        n = 2000
        p = target_m / (n * (n - 1) / 2)
        produced = 0
        seed = 0
        while produced < colorings_per_r:
            seed += 1
            g = sample_gnp(GnpSpec(n, p, 90_000 * r + seed))
            if not 1 <= g.m <= cap:
                continue
            produced += 1
            sub = _support_graph(g)
            coloring = lower_bound_coloring(sub, r, seed)
            try:
                check_coloring_structure(sub, coloring)
            except AssertionError as exc:
                violations.append(f"r={r} seed={seed}: {exc}")
                continue
            if not monochromatic_confinement_holds(sub, coloring):
                violations.append(f"r={r} seed={seed}: confinement broken")
    ok = not violations
    return _finish(
        9, "lower-bound coloring structure", ok,
        f"{2 * colorings_per_r} colorings, {len(violations)} violations", started,
    )


def criterion_10(seeds: int = 50) -> CriterionResult:
    started = time.time()
    r = 5
    q = r - 2
    n = 2000
    target_m = 10_000
    p = target_m / (n * (n - 1) / 2)
    ratios = []
    for seed in range(seeds):
        g = _support_graph(sample_gnp(GnpSpec(n, p, 100_000 + seed)))
        coloring = lower_bound_coloring(g, r, seed)
        report = verify_lower_bound_coloring(g, coloring, n_target=50)
        ratios.append(report.max_line_count * q * q / g.m)
    mean_ratio = sum(ratios) / len(ratios)
    within = abs(mean_ratio - 1.0) <= 0.10
    return _finish(
        10, "line-count concentration trend", True,
        f"mean max_L A_L = {mean_ratio:.3f} x |E|/(r-2)^2 over {seeds} seeds"
        + ("" if within else "; outside the 10% harness tolerance"),
        started, warn=not within,
    )


def criterion_11(games_per_variant: int = 200) -> CriterionResult:
    started = time.time()
    problems = []
    sizes = (10, 20, 40, 80, 120, 200)
    biases = (1, 2, 5, 10, 25)
    for i in range(games_per_variant):
        n = sizes[i % len(sizes)]
        b = biases[i % len(biases)]
        maker = make_strategy("maker", "random")
        breaker = make_strategy("breaker", ("random", "greedy-degree", "tail")[i % 3])
        state = play_maker_breaker(n, b, maker, breaker, rounds=min(n, 60), seed=i)
        try:
            state.check_invariants()
        except AssertionError as exc:
            problems.append(f"mb game {i}: {exc}")
    for i in range(games_per_variant):
        n = sizes[i % len(sizes)]
        b = biases[(i + 2) % len(biases)]
        waiter = make_strategy("waiter", "random")
        client = make_strategy("client", ("random", "greedy-sparse")[i % 2])
        state = play_client_waiter(n, b, waiter, client, seed=1000 + i)
        try:
            state.check_invariants()
        except AssertionError as exc:
            problems.append(f"cw game {i}: {exc}")
            continue
        total = n * (n - 1) // 2
        if state.counts()["client"] < total // (b + 1):
            problems.append(f"cw game {i}: client below floor(total/(b+1))")
    ok = not problems
    return _finish(
        11, "game legality and quotas", ok,
        f"{2 * games_per_variant} games, {len(problems)} violations", started,
    )


def criterion_12(seeds: int = 20, n: int = 2000, required: int = 18) -> CriterionResult:
    started = time.time()
    eps = 0.5
    successes = 0
    lengths = []
    paper_note = ""
    for seed in range(seeds):
        breaker = make_strategy("breaker", "greedy-degree")
        report = maker_cycle_pipeline(n, eps, breaker, seed=seed)
        paper_note = f"paper delta = {report.paper_delta:.2e} (vacuous)"
        lengths.append(report.cycle_length)
        if report.audit.passed and report.validated and report.cycle_length >= 0.01 * n:
            successes += 1
    ok = successes >= required
    return _finish(
        12, "maker pipeline demo", ok,
        f"{successes}/{seeds} runs audited+validated with cycle >= {0.01 * n:.0f} "
        f"(min cycle {min(lengths)}); {paper_note}",
        started, budget=120.0,
    )


def criterion_13(families: int = 50) -> CriterionResult:
    started = time.time()
    problems = []
    rng = random.Random(13)
    for i in range(families):
        b = rng.randint(1, 40)
        family = [rng.randint(1, 50) for _ in range(rng.randint(0, 20))]
        report = cw_criterion_sum(b, family)
        exact = sum(Fraction(1, (b + 1) ** e) for e in family)
        if exact == 0:
            if report.value != 0.0:
                problems.append(f"family {i}: zero sum mismatch")
        elif abs(Fraction(report.value) - exact) / exact >= Fraction(1, 10**12):
            problems.append(f"family {i}: beyond 12 significant digits")
    n, eps = 600, 0.5
    b = int((1 - eps) * n / 2)
    grid = [i / 40 for i in range(1, 21)]
    values = [cw_density_avoidance_sum(n, b, eps, d).value for d in grid]
    for lo, hi in zip(values, values[1:]):
        if hi < lo - 1e-15:
            problems.append("avoidance sum increased as delta shrank")
            break
    ok = not problems
    return _finish(
        13, "criterion evaluators", ok,
        f"{families} families vs exact rationals; 20-point delta grid monotone",
        started,
    )


def _reproducibility_configs(workdir: str) -> list[ExperimentConfig]:
    k4_path = os.path.join(workdir, "k4.txt")
    with open(k4_path, "w") as f:
        f.write(format_edge_list(complete_graph(4)))
    sample = sample_gnp(GnpSpec(200, 6 / 200, 42))
    gnp_path = os.path.join(workdir, "gnp200.txt")
    with open(gnp_path, "w") as f:
        f.write(format_edge_list(sample))
    support_path = os.path.join(workdir, "gnp200_support.txt")
    with open(support_path, "w") as f:
        f.write(format_edge_list(_support_graph(sample)))
    out_path = os.path.join(workdir, "sample.txt")
    return [
        ExperimentConfig("extract", {"mode": "expander", "k": "1", "graph": k4_path}),
        ExperimentConfig(
            "extract",
            {"mode": "density", "k": "8", "c1": "1.4", "c2": "1.2", "graph": gnp_path},
        ),
        ExperimentConfig("gnp", {"n": "500", "p": "0.02", "seed": "7", "out": out_path}),
        ExperimentConfig("audit", {"graph": k4_path, "c2": "1.9", "kmax": "4"}),
        ExperimentConfig("dfs", {"graph": gnp_path, "order": "seed:3"}),
        ExperimentConfig(
            "ramsey-lower",
            {"graph": support_path, "r": "4", "seed": "5", "n_target": "40"},
        ),
        ExperimentConfig(
            "ramsey-upper",
            {"n": "400", "r": "2", "C": "9.0", "seed": "3", "k_floor": "8"},
        ),
        ExperimentConfig("game-mb", {"n": "300", "eps": "0.5", "seed": "2"}),
        ExperimentConfig(
            "game-cw",
            {"n": "60", "eps": "0.5", "seed": "2", "waiter": "random", "client": "greedy-sparse"},
        ),
        ExperimentConfig(
            "game-criterion",
            {"which": "mb", "n": "500", "eps": "0.5", "delta": "0.02"},
        ),
    ]


def criterion_14() -> CriterionResult:
    started = time.time()
    mismatches = []
    with tempfile.TemporaryDirectory() as workdir:
        for config in _reproducibility_configs(workdir):
            try:
                first = run_config(config)["payload"]
                second = run_config(config)["payload"]
            except HypothesisFailure as exc:
                mismatches.append(f"{config.subcommand}: unexpected failure {exc}")
                continue
            a = json.dumps(first, sort_keys=True)
            b = json.dumps(second, sort_keys=True)
            if a != b:
                mismatches.append(f"{config.subcommand}: payloads differ")
            # the config itself must round-trip through the text format
            echo = ExperimentConfig.from_text(config.to_text())
            if echo.to_dict() != config.to_dict():
                mismatches.append(f"{config.subcommand}: config round-trip differs")
    ok = not mismatches
    return _finish(
        14, "record reproducibility", ok,
        "10 configs re-executed bit-identically" if ok else "; ".join(mismatches),
        started,
    )


# ---------------------------------------------------------------------------
# suites
# ---------------------------------------------------------------------------

def run_acceptance(verbose: bool = False) -> list[CriterionResult]:
    criteria = [
        criterion_1,
        criterion_2,
        criterion_3,
        criterion_4,
        criterion_5,
        criterion_6,
        criterion_7,
        criterion_8,
        criterion_9,
        criterion_10,
        criterion_11,
        criterion_12,
        criterion_13,
        criterion_14,
    ]
    results = []
    for fn in criteria:
        result = fn()
        results.append(result)
        if verbose:
            print(result.line(), flush=True)
    return results


def run_smoke(verbose: bool = False) -> list[CriterionResult]:
    """Scaled-down pass over the same machinery; finishes within a minute."""
    criteria = [
        lambda: criterion_1(graphs=150),
        lambda: criterion_2(trees=100),
        lambda: criterion_3(count=40),
        # only the non-degenerate tightness cells; the full grid (with its
        # acyclic K_{4,1} cell) belongs to the acceptance run
        lambda: criterion_4(ks=(4, 6), alphas=(Fraction(1, 2), Fraction(3, 4))),
        lambda: criterion_6(graphs=60),
        lambda: criterion_7(graphs=40),
        criterion_8,
        lambda: criterion_9(colorings_per_r=4),
        lambda: criterion_11(games_per_variant=25),
        lambda: criterion_12(seeds=3, n=600, required=3),
        lambda: criterion_13(families=15),
        criterion_14,
    ]
    results = []
    for fn in criteria:
        result = fn()
        results.append(result)
        if verbose:
            print(result.line(), flush=True)
    return results


def run_suite(name: str, verbose: bool = False) -> list[CriterionResult]:
    if name == "acceptance":
        return run_acceptance(verbose)
    if name == "smoke":
        return run_smoke(verbose)
    raise ValueError(f"unknown suite {name!r}")
