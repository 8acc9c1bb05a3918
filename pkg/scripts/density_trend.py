#!/usr/bin/env python3
"""Local-density failure frequency in sparse G(n, c1/n) across small n.

For each n, samples `--seeds` graphs at p = c1/n and runs the exhaustive
local audit with window n: the reported frequency is how often some vertex
set spans at least c2 times its size in edges.  The asymptotic claim (the
frequency vanishes as n grows, for windows up to delta n with
delta = (c2/(5 c1))^(c2/(c2-1))) is not assertable at these sizes; this
script just prints the trend.

Usage: python scripts/density_trend.py [--c1 3] [--c2 2] [--seeds 100]
"""

import argparse

from locyc.gnp import GnpSpec, audit_local_density, delta_of, sample_gnp


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--c1", type=float, default=3.0)
    parser.add_argument("--c2", type=float, default=2.0)
    parser.add_argument("--seeds", type=int, default=100)
    parser.add_argument("--sizes", type=int, nargs="+", default=[12, 16, 20, 22])
    args = parser.parse_args()

    delta = delta_of(args.c1, args.c2)
    print(f"c1={args.c1} c2={args.c2} delta={delta:.6g} (window delta*n is "
          f"{'vacuous' if delta * max(args.sizes) < 1 else 'active'} at these sizes)")
    print(f"{'n':>4} {'failures':>9} {'frequency':>10}")
    for n in args.sizes:
        failures = 0
        for seed in range(args.seeds):
            g = sample_gnp(GnpSpec(n, min(1.0, args.c1 / n), seed))
            report = audit_local_density(g, args.c2, n)
            if not report.passed:
                failures += 1
        print(f"{n:>4} {failures:>9} {failures / args.seeds:>10.3f}")


if __name__ == "__main__":
    main()
