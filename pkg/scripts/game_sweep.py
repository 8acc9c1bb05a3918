#!/usr/bin/env python3
"""Seed sweep of the game pipelines: cycle lengths and audit outcomes.

Runs the Maker-Breaker pipeline (random Maker) or the Client-Waiter
pipeline over a seed range and prints one JSON line per run, so results
can be piped into further analysis.

Usage:
  python scripts/game_sweep.py mb --n 2000 --eps 0.5 --seeds 20 --breaker greedy-degree
  python scripts/game_sweep.py cw --n 600 --eps 0.5 --seeds 5 --waiter random --client greedy-sparse
"""

import argparse
import json

from locyc.games import (
    client_cycle_pipeline,
    make_strategy,
    maker_cycle_pipeline,
)


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="variant", required=True)
    mb = sub.add_parser("mb")
    mb.add_argument("--n", type=int, default=2000)
    mb.add_argument("--eps", type=float, default=0.5)
    mb.add_argument("--seeds", type=int, default=20)
    mb.add_argument("--breaker", default="greedy-degree")
    mb.add_argument("--k-floor", type=int, default=None)
    cw = sub.add_parser("cw")
    cw.add_argument("--n", type=int, default=600)
    cw.add_argument("--eps", type=float, default=0.5)
    cw.add_argument("--seeds", type=int, default=5)
    cw.add_argument("--waiter", default="random")
    cw.add_argument("--client", default="greedy-sparse")
    cw.add_argument("--k-floor", type=int, default=None)
    args = parser.parse_args()

    successes = 0
    for seed in range(args.seeds):
        if args.variant == "mb":
            report = maker_cycle_pipeline(
                args.n, args.eps, make_strategy("breaker", args.breaker),
                seed=seed, k_floor=args.k_floor,
            )
        else:
            report = client_cycle_pipeline(
                args.n, args.eps, make_strategy("waiter", args.waiter),
                make_strategy("client", args.client), seed=seed, k_floor=args.k_floor,
            )
        row = {
            "seed": seed,
            "variant": report.variant,
            "edges": report.protagonist_edges,
            "audit_passed": report.audit.passed,
            "cycle_length": report.cycle_length,
            "validated": report.validated,
            "failure": report.failure,
            "paper_delta": report.paper_delta,
            "k_used": report.k_used,
        }
        if report.validated and report.audit.passed:
            successes += 1
        print(json.dumps(row))
    print(json.dumps({"summary": f"{successes}/{args.seeds} runs audited and validated"}))


if __name__ == "__main__":
    main()
