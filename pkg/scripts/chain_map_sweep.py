#!/usr/bin/env python3
"""Randomized sweep of the resolution identities.

Generates trimmed (delta = 0) and differential (sigma = id) Ore contexts
with bounded random coefficients and runs the full chain-map verification
on each: boundary squares, the lifting square, the mapping cone, and the
closed form of the top boundary matrix.  Any failure is reported with the
offending instance and the exit code is 1.
"""

from __future__ import annotations

import argparse
import random
import sys
import time
from dataclasses import dataclass
from fractions import Fraction

from orenak import (
    Automorphism,
    OreContext,
    Polynomial,
    SkewDerivation,
    format_poly,
    verify_chain_map,
)


@dataclass
class SweepConfig:
    seed: int = 0
    instances: int = 25
    min_vars: int = 1
    max_vars: int = 3
    max_degree: int = 2


def _random_poly(rng: random.Random, nvars: int, max_degree: int) -> Polynomial:
    result = Polynomial.zero(nvars)
    for _ in range(rng.randint(1, 4)):
        exps = [0] * nvars
        for _ in range(rng.randint(0, max_degree)):
            exps[rng.randrange(nvars)] += 1
        result = result + Polynomial.monomial(
            nvars, tuple(exps), Fraction(rng.choice((-3, -2, -1, 1, 2, 3)))
        )
    return result


def _tail_poly(rng: random.Random, nvars: int, first: int, max_degree: int) -> Polynomial:
    result = Polynomial.zero(nvars)
    for _ in range(rng.randint(0, 2)):
        exps = [0] * nvars
        for _ in range(rng.randint(0, max_degree)):
            exps[first + rng.randrange(nvars - first)] += 1
        result = result + Polynomial.monomial(
            nvars, tuple(exps), Fraction(rng.choice((-2, -1, 1, 2)))
        )
    return result


def random_trimmed(rng: random.Random, nvars: int, max_degree: int) -> OreContext:
    images = []
    for i in range(nvars):
        image = Fraction(rng.choice((-3, -2, -1, 1, 2, 3))) * Polynomial.variable(nvars, i)
        if i + 1 < nvars:
            image = image + _tail_poly(rng, nvars, i + 1, max_degree)
        images.append(image)
    sigma = Automorphism.from_images(images)
    return OreContext(sigma, SkewDerivation.zero(sigma))


def random_differential(rng: random.Random, nvars: int, max_degree: int) -> OreContext:
    sigma = Automorphism.identity(nvars)
    images = [_random_poly(rng, nvars, max_degree) for _ in range(nvars)]
    return OreContext(sigma, SkewDerivation(sigma, images))


def describe(ctx: OreContext) -> str:
    sigma = [format_poly(f) for f in ctx.sigma.forward.images]
    delta = [format_poly(f) for f in ctx.delta.images]
    return f"sigma={sigma} delta={delta}"


def sweep(config: SweepConfig) -> int:
    rng = random.Random(config.seed)
    failures = 0
    checked = 0
    start = time.time()
    for index in range(config.instances):
        nvars = rng.randint(config.min_vars, config.max_vars)
        for case, make in (
            ("trimmed", random_trimmed),
            ("differential", random_differential),
        ):
            ctx = make(rng, nvars, config.max_degree)
            report = verify_chain_map(ctx, case)
            checked += 1
            if report.ok:
                continue
            failures += 1
            print(f"FAIL [{index}] {case} n={nvars}: {describe(ctx)}")
            for entry in report.failures():
                print(f"      {entry.name}: {entry.detail}")
    elapsed = time.time() - start
    print(
        f"checked {checked} instances "
        f"(seed {config.seed}, n in [{config.min_vars}, {config.max_vars}], "
        f"degree <= {config.max_degree}) in {elapsed:.1f}s: "
        f"{'all identities hold' if not failures else f'{failures} FAILURES'}"
    )
    return 1 if failures else 0


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--instances", type=int, default=25, help="instances per case")
    parser.add_argument("--min-vars", type=int, default=1)
    parser.add_argument("--max-vars", type=int, default=3)
    parser.add_argument("--max-degree", type=int, default=2)
    args = parser.parse_args(argv)
    config = SweepConfig(
        seed=args.seed,
        instances=args.instances,
        min_vars=args.min_vars,
        max_vars=args.max_vars,
        max_degree=args.max_degree,
    )
    return sweep(config)


if __name__ == "__main__":
    sys.exit(main())
