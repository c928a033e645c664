#!/usr/bin/env python3
"""Walk the bundled example problems end to end and print a report.

For each problem file this computes kappa, the Jacobian, the Nakayama
automorphism (with its verification), the Calabi-Yau verdict, and a small
truncation of the invariant algebra.  Exits nonzero if any verification
fails, so the script doubles as a coarse smoke test.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass
from pathlib import Path

from orenak import (
    compute_nakayama,
    find_invariants,
    format_ore,
    format_poly,
    format_ratfunc,
    is_calabi_yau,
    verify_automorphism,
)
from orenak.cli import load_problem

DEFAULT_DIR = Path(__file__).resolve().parent.parent / "problems"


@dataclass
class ReportConfig:
    problems_dir: Path = DEFAULT_DIR
    max_xdeg: int = 2
    max_degree: int = 2
    show_invariants: bool = True


def report_one(path: Path, config: ReportConfig) -> bool:
    problem = load_problem(str(path))
    names = problem.names
    ctx = problem.context()
    print(f"== {path.name} ==")
    print(f"   sigma: {[format_poly(f, names) for f in problem.sigma.forward.images]}")
    print(f"   delta: {[format_poly(f, names) for f in problem.delta.images]}")

    if ctx.is_differential:
        print("   kappa: (differential case, undefined)")
    else:
        print(f"   kappa: {format_ratfunc(ctx.kappa, names)}")
    print(f"   J = {problem.sigma.jacobian}")

    nu = compute_nakayama(problem.sigma, problem.delta)
    verified = verify_automorphism(nu)
    print(f"   nu(x) = {format_ore(nu.nu_x(), names)}   [case: {nu.case_tag}]")
    for name, image in zip(names, nu.on_r.forward.images):
        print(f"   nu({name}) = {format_poly(image, names)}")
    print(f"   relation check: {'ok' if verified.ok else 'FAILED'}")

    cy = is_calabi_yau(problem.sigma, problem.delta)
    print(f"   Calabi-Yau: {'yes' if cy.is_cy else 'no'} ({cy.reason})")

    if config.show_invariants:
        found = find_invariants(nu, config.max_xdeg, config.max_degree)
        print(f"   invariants (x-deg <= {config.max_xdeg}, deg <= {config.max_degree}):")
        for invariant in found:
            print(f"      level {invariant.level}: {format_ore(invariant.element, names)}")
    print()
    return verified.ok


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument(
        "--problems-dir", type=Path, default=DEFAULT_DIR, help="directory of JSON problems"
    )
    parser.add_argument("--max-xdeg", type=int, default=2)
    parser.add_argument("--max-degree", type=int, default=2)
    parser.add_argument(
        "--skip-invariants", action="store_true", help="omit the invariant truncations"
    )
    args = parser.parse_args(argv)

    config = ReportConfig(
        problems_dir=args.problems_dir,
        max_xdeg=args.max_xdeg,
        max_degree=args.max_degree,
        show_invariants=not args.skip_invariants,
    )
    paths = sorted(config.problems_dir.glob("*.json"))
    if not paths:
        print(f"no problem files in {config.problems_dir}", file=sys.stderr)
        return 2
    all_ok = True
    for path in paths:
        all_ok &= report_one(path, config)
    return 0 if all_ok else 1


if __name__ == "__main__":
    sys.exit(main())
