"""Command-line interface: problem files in, verified reports out.

A problem file is JSON with ``vars`` (variable names), ``sigma`` and
``delta`` (generator images as polynomial expressions), optional
``sigma_inverse`` and optional integer ``bounds``.  Every subcommand loads
one problem, runs the corresponding exact computation and prints either a
text or a JSON report.  Exit codes: 0 for a completed computation (negative
mathematical findings included), 1 for a failed verification, 2 for an
input problem.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field

from .endo import Automorphism, NonConstantJacobian
from .homology import verify_chain_map
from .invariants import check_j_surjectivity, eigenspace, find_invariants
from .nakayama import (
    KappaDriftViolation,
    compute_nakayama,
    is_calabi_yau,
    kappa_drift,
    nakayama_order,
    verify_automorphism,
)
from .ore import OreContext
from .parser import ParseError, format_ore, format_poly, format_ratfunc, parse_poly
from .skew import DifferentialCaseError, InconsistentDerivation, SkewDerivation

__all__ = ["InputError", "Problem", "load_problem", "main"]

_BOUND_KEYS = {
    "max_degree",
    "max_xdeg",
    "order_bound",
    "inverse_degree_bound",
    "witness_degree",
}


class InputError(Exception):
    """Anything wrong with the problem file or the requested parameters."""


@dataclass
class Problem:
    names: list[str]
    sigma: Automorphism
    delta: SkewDerivation
    bounds: dict = field(default_factory=dict)

    @property
    def nvars(self) -> int:
        return len(self.names)

    def context(self) -> OreContext:
        return OreContext(self.sigma, self.delta)

    def bound(self, key: str, fallback: int) -> int:
        return self.bounds.get(key, fallback)


def _parse_images(raw, names, label):
    if not isinstance(raw, list) or len(raw) != len(names):
        raise InputError(f"{label!r} must list one expression per variable")
    images = []
    for position, text in enumerate(raw):
        if not isinstance(text, str):
            raise InputError(f"{label}[{position}] must be a string expression")
        try:
            images.append(parse_poly(text, names))
        except ParseError as error:
            raise InputError(f"{label}[{position}]: {error}") from error
    return images


def load_problem(path: str) -> Problem:
    try:
        with open(path, "r", encoding="utf-8") as handle:
            data = json.load(handle)
    except OSError as error:
        raise InputError(f"cannot read problem file: {error}") from error
    except json.JSONDecodeError as error:
        raise InputError(f"problem file is not valid JSON: {error}") from error
    if not isinstance(data, dict):
        raise InputError("problem file must contain a JSON object")
    unknown = set(data) - {"vars", "sigma", "sigma_inverse", "delta", "bounds"}
    if unknown:
        raise InputError(f"unknown problem keys: {sorted(unknown)}")

    names = data.get("vars")
    if (
        not isinstance(names, list)
        or not names
        or not all(isinstance(v, str) and v for v in names)
        or len(set(names)) != len(names)
    ):
        raise InputError("'vars' must be a nonempty list of distinct variable names")

    bounds = data.get("bounds", {})
    if not isinstance(bounds, dict):
        raise InputError("'bounds' must be an object")
    unknown_bounds = set(bounds) - _BOUND_KEYS
    if unknown_bounds:
        raise InputError(f"unknown bounds keys: {sorted(unknown_bounds)}")
    for key, value in bounds.items():
        if not isinstance(value, int) or value < 0:
            raise InputError(f"bound {key!r} must be a nonnegative integer")

    sigma_images = _parse_images(data.get("sigma"), names, "sigma")
    inverse_images = None
    if "sigma_inverse" in data:
        inverse_images = _parse_images(data["sigma_inverse"], names, "sigma_inverse")
    try:
        sigma = Automorphism.from_images(
            sigma_images,
            inverse_images,
            degree_bound=bounds.get("inverse_degree_bound"),
        )
    except (NonConstantJacobian, ValueError) as error:
        raise InputError(f"sigma is not a usable automorphism: {error}") from error

    delta_images = _parse_images(data.get("delta"), names, "delta")
    try:
        delta = SkewDerivation(sigma, delta_images)
    except InconsistentDerivation as error:
        raise InputError(str(error)) from error

    return Problem(names, sigma, delta, bounds)


# ---------------------------------------------------------------------- commands


def _cmd_kappa(problem: Problem, args) -> tuple[dict, list[str], int]:
    if problem.sigma.is_identity:
        doc = {"case": "differential", "kappa": None}
        return doc, ["differential case: sigma = id, kappa is undefined"], 0
    kappa = problem.context().kappa
    text = format_ratfunc(kappa, problem.names)
    doc = {
        "case": problem.context().case_tag,
        "kappa": text,
        "in_base_ring": kappa.is_polynomial,
    }
    lines = [
        f"kappa = {text}",
        f"kappa lies in the polynomial ring: {'yes' if kappa.is_polynomial else 'no'}",
    ]
    return doc, lines, 0


def _cmd_jacobian(problem: Problem, args) -> tuple[dict, list[str], int]:
    jacobian = problem.sigma.jacobian
    doc = {"jacobian": str(jacobian)}
    return doc, [f"jacobian determinant J = {jacobian}"], 0


def _cmd_nakayama(problem: Problem, args) -> tuple[dict, list[str], int]:
    nu = compute_nakayama(problem.sigma, problem.delta)
    report = verify_automorphism(nu)
    on_r = [format_poly(image, problem.names) for image in nu.on_r.forward.images]
    nu_x_text = format_ore(nu.nu_x(), problem.names)
    doc = {
        "case": nu.case_tag,
        "nu_on_generators": on_r,
        "lambda": str(nu.lam),
        "b": format_poly(nu.b, problem.names),
        "nu_x": nu_x_text,
        "verified": report.ok,
    }
    lines = [f"case: {nu.case_tag}"]
    lines += [
        f"nu({name}) = {image}" for name, image in zip(problem.names, on_r)
    ]
    lines.append(f"nu(x) = {nu_x_text}")
    lines.append(f"defining relation verified: {'yes' if report.ok else 'NO'}")
    return doc, lines, 0 if report.ok else 1


def _cmd_check_cy(problem: Problem, args) -> tuple[dict, list[str], int]:
    result = is_calabi_yau(problem.sigma, problem.delta)
    doc = {"calabi_yau": result.is_cy, "reason": result.reason}
    answer = "yes" if result.is_cy else "no"
    return doc, [f"Calabi-Yau: {answer}", f"reason: {result.reason}"], 0


def _cmd_order(problem: Problem, args) -> tuple[dict, list[str], int]:
    max_iter = problem.bound("order_bound", 64)
    sigma_order = problem.sigma.order(max_iter)
    nu = compute_nakayama(problem.sigma, problem.delta)
    nu_order = nakayama_order(nu, max_iter)
    doc = {"sigma_order": sigma_order, "nu_order": nu_order, "max_iter": max_iter}
    lines = []
    for label, value in (("sigma", sigma_order), ("nu", nu_order)):
        if value is None:
            lines.append(f"order of {label}: not reached within {max_iter} iterations")
        else:
            lines.append(f"order of {label}: {value}")
    code = 0
    if sigma_order is not None and nu_order is not None and sigma_order != nu_order:
        lines.append("MISMATCH: finite orders of sigma and nu differ")
        doc["mismatch"] = True
        code = 1
    return doc, lines, code


def _cmd_kappa_drift(problem: Problem, args) -> tuple[dict, list[str], int]:
    if problem.sigma.is_identity:
        raise InputError("kappa-drift needs sigma != id (kappa is undefined)")
    kappa = problem.context().kappa
    try:
        drift = kappa_drift(problem.sigma, kappa, args.r)
    except KappaDriftViolation as error:
        doc = {"r": args.r, "violation": str(error)}
        return doc, [f"VIOLATION: {error}"], 1
    text = format_poly(drift, problem.names)
    doc = {"r": args.r, "drift": text}
    return doc, [f"sigma_q^{args.r}(kappa) - J^({-args.r})*kappa = {text}"], 0


def _cmd_verify_resolution(problem: Problem, args) -> tuple[dict, list[str], int]:
    ctx = problem.context()
    case = args.case or ctx.case_tag
    if case == "general":
        raise InputError(
            "verify-resolution requires the trimmed (delta = 0) or "
            "differential (sigma = id) case"
        )
    try:
        report = verify_chain_map(ctx, case)
    except ValueError as error:
        raise InputError(str(error)) from error
    doc = {
        "case": case,
        "checks": [{"name": e.name, "ok": e.ok} for e in report.entries],
        "ok": report.ok,
    }
    lines = [f"{'PASS' if e.ok else 'FAIL'}  {e.name}" for e in report.entries]
    lines.append(f"overall: {'all identities hold' if report.ok else 'FAILED'}")
    return doc, lines, 0 if report.ok else 1


def _cmd_eigenspaces(problem: Problem, args) -> tuple[dict, list[str], int]:
    max_degree = args.max_degree
    if max_degree is None:
        max_degree = problem.bound("max_degree", 4)
    eigenvalue = problem.sigma.jacobian ** args.power
    basis = eigenspace(problem.sigma, eigenvalue, max_degree)
    texts = [format_poly(f, problem.names) for f in basis.basis]
    doc = {
        "power": args.power,
        "eigenvalue": str(eigenvalue),
        "max_degree": max_degree,
        "basis": texts,
        "dimension": len(texts),
    }
    lines = [
        f"eigenvalue J^{args.power} = {eigenvalue}, degree <= {max_degree}",
        f"dimension {len(texts)}",
    ] + [f"  {t}" for t in texts]
    return doc, lines, 0


def _cmd_invariants(problem: Problem, args) -> tuple[dict, list[str], int]:
    max_xdeg = args.max_xdeg
    if max_xdeg is None:
        max_xdeg = problem.bound("max_xdeg", 3)
    max_degree = args.max_degree
    if max_degree is None:
        max_degree = problem.bound("max_degree", 4)
    nu = compute_nakayama(problem.sigma, problem.delta)
    invariants = find_invariants(nu, max_xdeg, max_degree)
    entries = []
    lines = [
        f"invariants with x-degree <= {max_xdeg}, coefficient degree <= {max_degree}:"
    ]
    for invariant in invariants:
        entry = {
            "element": format_ore(invariant.element, problem.names),
            "level": invariant.level,
            "shifted": None
            if invariant.shifted is None
            else [format_ratfunc(c, problem.names) for c in invariant.shifted],
        }
        entries.append(entry)
        lines.append(f"  level {invariant.level}: {entry['element']}")
        if entry["shifted"] is not None:
            lines.append(f"    shifted coefficients: {entry['shifted']}")
    doc = {
        "max_xdeg": max_xdeg,
        "max_degree": max_degree,
        "count": len(entries),
        "invariants": entries,
    }
    return doc, lines, 0


def _cmd_check_gr(problem: Problem, args) -> tuple[dict, list[str], int]:
    max_degree = args.max_degree
    if max_degree is None:
        max_degree = problem.bound("max_degree", 4)
    witness_degree = args.witness_degree
    if witness_degree is None:
        witness_degree = problem.bounds.get("witness_degree")
    nu = compute_nakayama(problem.sigma, problem.delta)
    report = check_j_surjectivity(nu, args.level, max_degree, witness_degree)
    outcomes = []
    lines = [
        f"level {report.level}, target degree <= {report.max_degree}, "
        f"witness coefficient degree <= {report.witness_degree}"
    ]
    for outcome in report.outcomes:
        target_text = format_poly(outcome.target, problem.names)
        if outcome.witnessed:
            witness_text = format_ore(outcome.witness, problem.names)
            outcomes.append({"target": target_text, "witness": witness_text})
            lines.append(f"  target {target_text}: witness {witness_text}")
        else:
            outcomes.append({"target": target_text, "witness": None})
            lines.append(
                f"  target {target_text}: no solution within bounds "
                "(certified NoSolution; not in the image at these bounds)"
            )
    doc = {
        "level": report.level,
        "max_degree": report.max_degree,
        "witness_degree": report.witness_degree,
        "all_witnessed": report.all_witnessed,
        "outcomes": outcomes,
    }
    lines.append(
        "every target witnessed"
        if report.all_witnessed
        else "some targets have no bounded witness"
    )
    return doc, lines, 0


_COMMANDS = {
    "kappa": _cmd_kappa,
    "jacobian": _cmd_jacobian,
    "nakayama": _cmd_nakayama,
    "check-cy": _cmd_check_cy,
    "order": _cmd_order,
    "kappa-drift": _cmd_kappa_drift,
    "verify-resolution": _cmd_verify_resolution,
    "eigenspaces": _cmd_eigenspaces,
    "invariants": _cmd_invariants,
    "check-gr": _cmd_check_gr,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="orenak",
        description=(
            "Exact calculator for Ore extensions of polynomial rings: "
            "Nakayama automorphisms, resolution identities, invariants."
        ),
    )
    subparsers = parser.add_subparsers(dest="command", required=True)

    def add(name, help_text):
        sub = subparsers.add_parser(name, help=help_text)
        sub.add_argument("--input", required=True, help="problem file (JSON)")
        sub.add_argument(
            "--format",
            choices=("text", "json"),
            default="text",
            help="output format (default text)",
        )
        return sub

    add("kappa", "the twisting quotient kappa of delta, if sigma != id")
    add("jacobian", "the constant Jacobian determinant of sigma")
    add("nakayama", "the Nakayama automorphism in closed form, verified")
    add("check-cy", "is E Calabi-Yau (nu = id)?")
    add("order", "orders of sigma and nu (must agree when both finite)")

    drift = add("kappa-drift", "sigma_q^r(kappa) - J^(-r)*kappa, always in R")
    drift.add_argument("--r", type=int, required=True, help="iteration count (can be negative)")

    resolution = add("verify-resolution", "verify all complex and lifting identities")
    resolution.add_argument(
        "--case",
        choices=("trimmed", "differential"),
        help="which closed lifting to use (default: inferred)",
    )

    eigen = add("eigenspaces", "basis of the sigma-eigenspace of eigenvalue J^power")
    eigen.add_argument("--power", type=int, required=True)
    eigen.add_argument("--max-degree", type=int, default=None)

    invariants_cmd = add("invariants", "basis of the truncated nu-invariant algebra")
    invariants_cmd.add_argument("--max-xdeg", type=int, default=None)
    invariants_cmd.add_argument("--max-degree", type=int, default=None)

    gr = add("check-gr", "leading-map surjectivity at one filtration level")
    gr.add_argument("--level", type=int, required=True)
    gr.add_argument("--max-degree", type=int, default=None)
    gr.add_argument("--witness-degree", type=int, default=None)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        problem = load_problem(args.input)
        doc, lines, code = _COMMANDS[args.command](problem, args)
    except InputError as error:
        print(f"input error: {error}", file=sys.stderr)
        return 2
    except DifferentialCaseError as error:
        print(f"input error: {error}", file=sys.stderr)
        return 2
    if args.format == "json":
        print(json.dumps(doc, indent=2, sort_keys=True))
    else:
        for line in lines:
            print(line)
    return code


if __name__ == "__main__":
    sys.exit(main())
