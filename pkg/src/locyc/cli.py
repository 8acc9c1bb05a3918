"""Command-line front end: seeded, reproducible runs emitting JSON lines.

Every run writes one ResultRecord embedding its full configuration; the
payload regenerates bit-identically from that configuration.  Exit codes:
0 success, 1 the mathematical hypothesis failed for the input, 2 bad input.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import os
import sys
import time
from dataclasses import dataclass, field

from . import __version__
from .errors import HypothesisFailure, InputError
from .extract import (
    DensityParams,
    extract_cycle_density,
    extract_cycle_expander,
)
from .dfs import dfs_forest, identity_order
from .games import (
    client_cycle_pipeline,
    cw_criterion_sum,
    cw_density_avoidance_sum,
    make_strategy,
    maker_cycle_pipeline,
    mb_union_bound_sum,
    strategy_names,
)
from .gnp import GENERATOR_ID, GnpSpec, audit_local_density, sample_gnp
from .graph import Graph, format_edge_list, parse_edge_list
from .ramsey import (
    lower_bound_coloring,
    upper_bound_pipeline,
    verify_lower_bound_coloring,
)

EXIT_OK = 0
EXIT_HYPOTHESIS = 1
EXIT_INPUT = 2


@dataclass
class ExperimentConfig:
    """Flat, text-serializable description of one run."""

    subcommand: str
    options: dict = field(default_factory=dict)

    def to_text(self) -> str:
        lines = [f"subcommand={self.subcommand}"]
        for key in sorted(self.options):
            lines.append(f"{key}={self.options[key]}")
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> "ExperimentConfig":
        sub = None
        options = {}
        for i, line in enumerate(text.splitlines()):
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            if "=" not in line:
                raise InputError(f"config line {i + 1}: expected key=value")
            key, value = line.split("=", 1)
            if key == "subcommand":
                sub = value
            else:
                options[key] = value
        if sub is None:
            raise InputError("config missing subcommand=")
        return cls(subcommand=sub, options=options)

    def to_dict(self) -> dict:
        return {"subcommand": self.subcommand, **self.options}


def result_record(config: ExperimentConfig, payload: dict, started: float) -> dict:
    return {
        "config": config.to_dict(),
        "generator": GENERATOR_ID,
        "version": __version__,
        "elapsed_s": round(time.time() - started, 6),
        "payload": payload,
    }


def _digest(path: str) -> str:
    h = hashlib.sha256()
    with open(path, "rb") as f:
        for chunk in iter(lambda: f.read(1 << 16), b""):
            h.update(chunk)
    return h.hexdigest()


def _load_graph(path: str) -> Graph:
    try:
        with open(path) as f:
            return parse_edge_list(f.read())
    except OSError as exc:
        raise InputError(f"cannot read graph file {path}: {exc}") from None


def _emit(record: dict, out_path: str | None) -> None:
    line = json.dumps(record, sort_keys=True)
    if out_path:
        with open(out_path, "a") as f:
            f.write(line + "\n")
    print(line)


def _default_seed(value: int | None) -> int:
    if value is not None:
        return value
    env = os.environ.get("LOCYC_SEED")
    return int(env) if env else 0


# ---------------------------------------------------------------------------
# subcommand payloads (pure: config -> payload dict)
# ---------------------------------------------------------------------------

def _require(opts: dict, *keys: str) -> None:
    missing = [k for k in keys if k not in opts]
    if missing:
        raise InputError(f"missing required option(s): {', '.join(missing)}")


def payload_extract(cfg: ExperimentConfig) -> dict:
    opts = cfg.options
    _require(opts, "graph", "mode", "k")
    g = _load_graph(opts["graph"])
    mode = opts["mode"]
    k = int(opts["k"])
    if mode == "expander":
        cert = extract_cycle_expander(g, k)
    elif mode == "density":
        _require(opts, "c1", "c2")
        cert = extract_cycle_density(
            g, DensityParams(float(opts["c1"]), float(opts["c2"]), k)
        )
    else:
        raise InputError(f"unknown extract mode {mode!r}")
    return {
        "mode": mode,
        "k": k,
        "certificate": cert.to_dict(),
        "validated": cert.validate(g),
    }


def payload_audit(cfg: ExperimentConfig) -> dict:
    opts = cfg.options
    _require(opts, "graph", "c2", "kmax")
    g = _load_graph(opts["graph"])
    report = audit_local_density(
        g,
        float(opts["c2"]),
        int(opts["kmax"]),
        mode=opts.get("mode", "exhaustive"),
        samples=int(opts.get("samples", 50)),
        seed=int(opts.get("seed", 0)),
        min_size=int(opts.get("min_size", 1)),
    )
    payload = report.to_dict()
    if not report.passed:
        raise HypothesisFailureWithPayload("local density audit failed", payload)
    return payload


def payload_gnp(cfg: ExperimentConfig) -> dict:
    opts = cfg.options
    _require(opts, "n", "p", "seed")
    spec = GnpSpec(int(opts["n"]), float(opts["p"]), int(opts["seed"]))
    g = sample_gnp(spec)
    payload = {"n": g.n, "m": g.m, "seed": spec.seed, "p": spec.p}
    out = opts.get("out")
    if out:
        with open(out, "w") as f:
            f.write(format_edge_list(g))
        payload["path"] = out
        payload["sha256"] = _digest(out)
    return payload


def payload_dfs(cfg: ExperimentConfig) -> dict:
    opts = cfg.options
    _require(opts, "graph")
    g = _load_graph(opts["graph"])
    order_spec = opts.get("order", "identity")
    if order_spec == "identity":
        sigma = identity_order(g.n)
    elif order_spec.startswith("seed:"):
        import random as _random

        sigma = list(range(g.n))
        _random.Random(int(order_spec[5:])).shuffle(sigma)
        sigma = tuple(sigma)
    else:
        with open(order_spec) as f:
            sigma = tuple(int(tok) for tok in f.read().split())
    forest = dfs_forest(g, sigma)
    return {
        "order": order_spec,
        "roots": list(forest.roots),
        "parents": [[v, p] for v, p in enumerate(forest.parent) if p is not None],
    }


def payload_ramsey_lower(cfg: ExperimentConfig) -> dict:
    opts = cfg.options
    _require(opts, "graph", "r", "seed", "n_target")
    g = _load_graph(opts["graph"])
    r = int(opts["r"])
    seed = int(opts["seed"])
    n_target = int(opts["n_target"])
    coloring = lower_bound_coloring(g, r, seed)
    report = verify_lower_bound_coloring(g, coloring, n_target)
    histogram: dict[str, int] = {}
    for count in report.line_counts:
        histogram[str(count)] = histogram.get(str(count), 0) + 1
    return {
        "r": r,
        "seed": seed,
        "n_target": n_target,
        "report": report.to_dict(),
        "line_count_histogram": histogram,
    }


def payload_ramsey_upper(cfg: ExperimentConfig) -> dict:
    opts = cfg.options
    _require(opts, "n", "r", "C", "seed")
    colorings = tuple(opts.get("colorings", "uniform-random").split(","))
    report = upper_bound_pipeline(
        int(opts["n"]),
        int(opts["r"]),
        float(opts["C"]),
        int(opts["seed"]),
        colorings=colorings,
        k_floor=int(opts["k_floor"]) if "k_floor" in opts else None,
    )
    return report.to_dict()


def payload_game_mb(cfg: ExperimentConfig) -> dict:
    opts = cfg.options
    _require(opts, "n", "eps", "seed")
    breaker = make_strategy("breaker", opts.get("breaker", "greedy-degree"))
    transcript = opts.get("transcript_out")
    report = maker_cycle_pipeline(
        int(opts["n"]),
        float(opts["eps"]),
        breaker,
        int(opts["seed"]),
        k_floor=int(opts["k_floor"]) if "k_floor" in opts else None,
        transcript_path=transcript,
    )
    payload = report.to_dict()
    if transcript:
        payload["transcript"] = {"path": transcript, "sha256": _digest(transcript)}
    return payload


def payload_game_cw(cfg: ExperimentConfig) -> dict:
    opts = cfg.options
    _require(opts, "n", "eps", "seed")
    waiter = make_strategy("waiter", opts.get("waiter", "random"))
    client = make_strategy("client", opts.get("client", "greedy-sparse"))
    transcript = opts.get("transcript_out")
    report = client_cycle_pipeline(
        int(opts["n"]),
        float(opts["eps"]),
        waiter,
        client,
        int(opts["seed"]),
        k_floor=int(opts["k_floor"]) if "k_floor" in opts else None,
        transcript_path=transcript,
    )
    payload = report.to_dict()
    if transcript:
        payload["transcript"] = {"path": transcript, "sha256": _digest(transcript)}
    return payload


def payload_game_criterion(cfg: ExperimentConfig) -> dict:
    opts = cfg.options
    _require(opts, "which")
    which = opts["which"]
    if which == "cw":
        if "family" in opts:
            _require(opts, "b")
            family = [int(tok) for tok in opts["family"].split(",") if tok]
            report = cw_criterion_sum(int(opts["b"]), family)
        else:
            _require(opts, "n", "b", "eps", "delta")
            report = cw_density_avoidance_sum(
                int(opts["n"]), int(opts["b"]), float(opts["eps"]), float(opts["delta"])
            )
    elif which == "mb":
        _require(opts, "n", "eps", "delta")
        report = mb_union_bound_sum(
            int(opts["n"]), float(opts["eps"]), float(opts["delta"])
        )
    else:
        raise InputError(f"unknown criterion {which!r} (use cw or mb)")
    return {"which": which, **report.to_dict()}


def payload_reproduce(cfg: ExperimentConfig) -> dict:
    from .acceptance import run_suite

    suite = cfg.options.get("suite", "smoke")
    if suite not in ("acceptance", "smoke"):
        raise InputError(f"unknown suite {suite!r} (use acceptance or smoke)")
    results = run_suite(suite, verbose=True)
    payload = {
        "suite": suite,
        "results": [r.to_dict() for r in results],
        "passed": sum(1 for r in results if r.ok),
        "failed": sum(1 for r in results if not r.ok),
    }
    if payload["failed"]:
        raise HypothesisFailureWithPayload(f"{payload['failed']} criteria failed", payload)
    return payload


class HypothesisFailureWithPayload(HypothesisFailure):
    def __init__(self, message: str, payload: dict):
        super().__init__(message)
        self.payload = payload


PAYLOAD_BUILDERS = {
    "extract": payload_extract,
    "audit": payload_audit,
    "gnp": payload_gnp,
    "dfs": payload_dfs,
    "ramsey-lower": payload_ramsey_lower,
    "ramsey-upper": payload_ramsey_upper,
    "game-mb": payload_game_mb,
    "game-cw": payload_game_cw,
    "game-criterion": payload_game_criterion,
    "reproduce": payload_reproduce,
}


def run_config(config: ExperimentConfig, started: float | None = None) -> dict:
    """Execute a config and return the full ResultRecord (raises on errors)."""
    builder = PAYLOAD_BUILDERS.get(config.subcommand)
    if builder is None:
        raise InputError(f"unknown subcommand {config.subcommand!r}")
    started = time.time() if started is None else started
    payload = builder(config)
    return result_record(config, payload, started)


# ---------------------------------------------------------------------------
# argument parsing
# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="locyc",
        description="long-cycle extraction and experiment pipelines",
    )
    parser.add_argument("--config", help="key=value config file (flags override)")
    sub = parser.add_subparsers(dest="subcommand")

    p = sub.add_parser("extract", help="extract a certified cycle from a graph file")
    p.add_argument("--mode", choices=["expander", "density"], required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--c1", type=str)
    p.add_argument("--c2", type=str)
    p.add_argument("--graph", required=True)
    p.add_argument("--out", help="append the certificate record JSON here")

    p = sub.add_parser("audit", help="local edge-density audit of a graph file")
    p.add_argument("--c2", type=float, required=True)
    p.add_argument("--kmax", type=int, required=True)
    p.add_argument("--mode", choices=["exhaustive", "sampled"], default="exhaustive")
    p.add_argument("--samples", type=int, default=50)
    p.add_argument("--min-size", dest="min_size", type=int, default=1)
    p.add_argument("--seed", type=int)
    p.add_argument("--graph", required=True)
    p.add_argument("--out", help="append the report record JSON here")

    p = sub.add_parser("gnp", help="sample a seeded G(n,p) edge list")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--p", type=float, required=True)
    p.add_argument("--seed", type=int)
    p.add_argument("--out", help="write the sampled edge list to this path")

    p = sub.add_parser("dfs", help="emit the DFS forest of a graph file")
    p.add_argument("--graph", required=True)
    p.add_argument("--order", default="identity", help="identity | seed:N | <file>")
    p.add_argument("--out", help="append the forest record JSON here")

    ramsey = sub.add_parser("ramsey", help="size-Ramsey pipelines").add_subparsers(
        dest="ramsey_sub"
    )
    p = ramsey.add_parser("lower", help="affine-plane lower-bound coloring")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--n-target", dest="n_target", type=int, required=True)
    p.add_argument("--graph", required=True)
    p.add_argument("--seed", type=int)
    p.add_argument("--out", help="append the report record JSON here")
    p = ramsey.add_parser("upper", help="majority-color cycle pipeline on G(n, Cr/n)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--C", type=float, required=True)
    p.add_argument("--seed", type=int)
    p.add_argument("--colorings", default="uniform-random")
    p.add_argument("--k-floor", dest="k_floor", type=int)
    p.add_argument("--out", help="append the report record JSON here")

    game = sub.add_parser("game", help="biased positional games").add_subparsers(
        dest="game_sub"
    )
    p = game.add_parser("mb", help="random Maker vs pluggable Breaker")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--eps", type=float, required=True)
    p.add_argument("--breaker", default="greedy-degree", choices=strategy_names("breaker"))
    p.add_argument("--seed", type=int)
    p.add_argument("--k-floor", dest="k_floor", type=int)
    p.add_argument("--transcript-out", dest="transcript_out", help="write the claim transcript as JSON lines")
    p.add_argument("--out", help="append the report record JSON here")
    p = game.add_parser("cw", help="pluggable Waiter vs pluggable Client")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--eps", type=float, required=True)
    p.add_argument("--waiter", default="random", choices=strategy_names("waiter"))
    p.add_argument("--client", default="greedy-sparse", choices=strategy_names("client"))
    p.add_argument("--seed", type=int)
    p.add_argument("--k-floor", dest="k_floor", type=int)
    p.add_argument("--transcript-out", dest="transcript_out", help="write the claim transcript as JSON lines")
    p.add_argument("--out", help="append the report record JSON here")
    p = game.add_parser("criterion", help="numeric criterion sums")
    p.add_argument("--which", choices=["cw", "mb"], required=True)
    p.add_argument("--b", type=int)
    p.add_argument("--family", help="comma-separated edge counts")
    p.add_argument("--n", type=int)
    p.add_argument("--eps", type=float)
    p.add_argument("--delta", type=float)
    p.add_argument("--out", help="append the report record JSON here")

    p = sub.add_parser("reproduce", help="run the acceptance or smoke suite")
    p.add_argument("suite", choices=["acceptance", "smoke"])
    p.add_argument("--out", help="append the summary record JSON here")

    return parser


def config_from_args(args: argparse.Namespace) -> ExperimentConfig:
    sub = args.subcommand
    if sub == "ramsey":
        if not getattr(args, "ramsey_sub", None):
            raise InputError("ramsey needs a subcommand: lower | upper")
        sub = f"ramsey-{args.ramsey_sub}"
    elif sub == "game":
        if not getattr(args, "game_sub", None):
            raise InputError("game needs a subcommand: mb | cw | criterion")
        sub = f"game-{args.game_sub}"
    skip = {"subcommand", "ramsey_sub", "game_sub", "config"}
    options = {}
    for key, value in vars(args).items():
        if key in skip or value is None:
            continue
        options[key] = str(value)
    if "seed" not in options and sub in {
        "gnp", "ramsey-lower", "ramsey-upper", "game-mb", "game-cw",
    }:
        options["seed"] = str(_default_seed(None))
    return ExperimentConfig(subcommand=sub, options=options)


def _record_path(config: ExperimentConfig) -> str | None:
    # gnp's --out is the edge-list destination, not a record file
    if config.subcommand == "gnp":
        return None
    return config.options.get("out")


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code not in (0, None) else EXIT_OK
    started = time.time()
    try:
        if args.config:
            config = ExperimentConfig.from_text(open(args.config).read())
            if args.subcommand:
                override = config_from_args(args)
                config = ExperimentConfig(
                    subcommand=override.subcommand,
                    options={**config.options, **override.options},
                )
        elif args.subcommand:
            config = config_from_args(args)
        else:
            parser.print_usage(sys.stderr)
            return EXIT_INPUT
        record = run_config(config, started)
        _emit(record, _record_path(config))
        return EXIT_OK
    except HypothesisFailureWithPayload as exc:
        record = result_record(config, {**exc.payload, "hypothesis_failure": str(exc)}, started)
        _emit(record, _record_path(config))
        return EXIT_HYPOTHESIS
    except HypothesisFailure as exc:
        record = result_record(
            config, {"hypothesis_failure": f"{type(exc).__name__}: {exc}"}, started
        )
        _emit(record, _record_path(config))
        return EXIT_HYPOTHESIS
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
