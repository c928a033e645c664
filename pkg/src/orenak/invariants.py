"""Eigenspaces, twisted graded products, and truncated invariant algebras.

For the cyclic group generated by the Nakayama automorphism nu, invariants
of E are found by exact linear algebra on the span of monomials ``z^a x^i``
within stated degree bounds; nu's image of that span can overflow the
bounds, and the overflow coefficients simply join the constraint rows, so
"invariant up to the bounds" genuinely means invariant.

The associated graded structure is a twisted product on eigenspace
slices: a degree-i slice holds eigenvectors of sigma with eigenvalue J^i (J
the Jacobian constant of sigma), and slices multiply by
``(i, g) * (j, h) = (i + j, g * sigma^i(h))``.  The leading-coefficient map
from filtered invariants into those slices is checked for surjectivity one
target eigenvector at a time: either a filtered invariant with that leading
coefficient is produced as a witness, or the bounded linear system is
certified unsolvable.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .endo import Automorphism
from .linalg import kernel, solve_affine
from .nakayama import NakayamaData
from .ore import OrePoly, to_shifted_basis
from .poly import Polynomial, RationalFunction, grlex_key, monomials_up_to

__all__ = [
    "EigenBasis",
    "InvariantElement",
    "SurjectivityReport",
    "TargetOutcome",
    "TwistedElement",
    "check_j_surjectivity",
    "eigenspace",
    "find_invariants",
    "leading_map_j",
    "zhang_twist_mul",
]


@dataclass
class EigenBasis:
    """Basis of {f : sigma(f) = eigenvalue * f} within a total-degree bound."""

    sigma: Automorphism
    eigenvalue: Fraction
    max_degree: int
    basis: list[Polynomial]

    def contains(self, f: Polynomial) -> bool:
        """Membership test; complete because the basis spans all bounded
        solutions, so the defining equation plus the degree bound decide."""
        return (
            f.total_degree() <= self.max_degree
            and self.sigma.apply(f) == f * self.eigenvalue
        )


def eigenspace(sigma: Automorphism, eigenvalue, max_degree: int) -> EigenBasis:
    """All solutions of sigma(f) = eigenvalue*f with total degree <= bound.

    sigma can raise degrees, so the linear system includes a vanishing
    constraint for every overflow monomial of sigma(f).
    """
    eigenvalue = Fraction(eigenvalue)
    n = sigma.nvars
    columns = monomials_up_to(n, max_degree)
    images = []
    row_keys = set()
    for alpha in columns:
        moved = sigma.apply(Polynomial.monomial(n, alpha)) - eigenvalue * Polynomial.monomial(n, alpha)
        images.append(moved)
        row_keys.update(moved.terms)
    row_order = sorted(row_keys, key=grlex_key, reverse=True)
    row_index = {key: r for r, key in enumerate(row_order)}
    rows = [[Fraction(0)] * len(columns) for _ in row_order]
    for col, moved in enumerate(images):
        for key, coefficient in moved.terms.items():
            rows[row_index[key]][col] = coefficient
    vectors = kernel(rows, ncols=len(columns))
    basis = [
        Polynomial(n, {columns[c]: value for c, value in enumerate(vec) if value})
        for vec in vectors
    ]
    return EigenBasis(sigma, eigenvalue, max_degree, basis)


@dataclass
class TwistedElement:
    """A homogeneous slice element of the twisted graded algebra.

    The coefficient must be a sigma-eigenvector with eigenvalue J^degree;
    this is verified at construction, so products are guaranteed to stay
    inside the graded structure.
    """

    degree: int
    coeff: Polynomial
    sigma: Automorphism

    def __post_init__(self):
        if self.degree < 0:
            raise ValueError("twisted degrees are nonnegative")
        expected = self.coeff * self.sigma.jacobian ** self.degree
        if self.sigma.apply(self.coeff) != expected:
            raise ValueError(
                f"coefficient {self.coeff} is not a sigma-eigenvector of "
                f"eigenvalue J^{self.degree}"
            )


def zhang_twist_mul(a: TwistedElement, b: TwistedElement) -> TwistedElement:
    """(i, g)*(j, h) = (i+j, g * sigma^i(h)); the result is re-verified."""
    if a.sigma != b.sigma:
        raise ValueError("twisted elements over different automorphisms")
    moved = b.coeff
    for _ in range(a.degree):
        moved = a.sigma.apply(moved)
    return TwistedElement(a.degree + b.degree, a.coeff * moved, a.sigma)


@dataclass
class InvariantElement:
    """A nu-invariant of E with its shifted-basis expansion when sigma != id.

    ``level`` is the filtration level (the x-degree, which for sigma != id
    is also the top shifted index because the change of basis is
    unitriangular).
    """

    element: OrePoly
    shifted: Optional[list[RationalFunction]]
    level: int

    @property
    def shifted_all_polynomial(self) -> bool:
        if self.shifted is None:
            return True
        return all(c.is_polynomial for c in self.shifted)


def _nu_images(nu: NakayamaData, pairs, ctx):
    """nu(z^alpha x^i) for every (alpha, i) pair, with nu(x)^i cached."""
    n = nu.nvars
    max_x = max((i for _, i in pairs), default=0)
    image_x = nu.nu_x(ctx)
    powers = [ctx.one()]
    for _ in range(max_x):
        powers.append(powers[-1] * image_x)
    images = {}
    for alpha, i in pairs:
        base = ctx.from_base(nu.apply_poly(Polynomial.monomial(n, alpha)))
        images[(alpha, i)] = base * powers[i]
    return images


def _row_order(keys):
    return sorted(keys, key=lambda k: (k[1], grlex_key(k[0])))


def find_invariants(
    nu: NakayamaData, max_xdeg: int, max_coeff_degree: int
) -> list[InvariantElement]:
    """Basis of the nu-fixed subspace of span{z^a x^i} within the bounds.

    Every returned element is exactly invariant (the overflow of nu past
    the bounds is constrained to vanish, not ignored).  When sigma != id
    each element also carries its shifted-basis expansion, whose
    coefficients are verified to lie in the matching twisted eigenspaces.
    """
    ctx = nu.context()
    n = nu.nvars
    pairs = [
        (alpha, i)
        for i in range(max_xdeg + 1)
        for alpha in monomials_up_to(n, max_coeff_degree)
    ]
    images = _nu_images(nu, pairs, ctx)
    row_keys = set(pairs)
    for image in images.values():
        for j, coefficient in enumerate(image.coeffs):
            row_keys.update((beta, j) for beta in coefficient.terms)
    row_order = _row_order(row_keys)
    row_index = {key: r for r, key in enumerate(row_order)}
    rows = [[Fraction(0)] * len(pairs) for _ in row_order]
    for col, pair in enumerate(pairs):
        image = images[pair]
        for j, coefficient in enumerate(image.coeffs):
            for beta, value in coefficient.terms.items():
                rows[row_index[(beta, j)]][col] += value
        rows[row_index[pair]][col] -= 1
    vectors = kernel(rows, ncols=len(pairs))

    sigma_is_id = nu.sigma.is_identity
    jacobian = nu.sigma.jacobian
    results = []
    for vec in vectors:
        coeff_layers: dict[int, dict] = {}
        for c, value in enumerate(vec):
            if not value:
                continue
            alpha, i = pairs[c]
            coeff_layers.setdefault(i, {})[alpha] = value
        top = max(coeff_layers)
        coefficients = [
            Polynomial(n, coeff_layers.get(i, {})) for i in range(top + 1)
        ]
        element = OrePoly(ctx, coefficients)
        assert nu.apply_ore(element) == element, "kernel vector is not invariant"
        if sigma_is_id:
            results.append(InvariantElement(element, None, element.xdeg))
            continue
        shifted = to_shifted_basis(element)
        for i, g in enumerate(shifted):
            scale = RationalFunction.constant(n, jacobian ** i)
            assert nu.sigma.apply_ratfunc(g) == g * scale, (
                "shifted coefficient escaped its twisted eigenspace"
            )
        results.append(InvariantElement(element, shifted, element.xdeg))
    results.sort(key=lambda inv: (inv.level, len(inv.element.coeffs)))
    return results


def leading_map_j(invariant: InvariantElement) -> TwistedElement:
    """Top coefficient of a filtered invariant, as a twisted slice element.

    For sigma != id the top x-coefficient equals the top shifted
    coefficient (the change of basis is unitriangular), and invariance
    forces it into the eigenvalue-J^level eigenspace; the twisted element
    constructor re-verifies that.
    """
    element = invariant.element
    if element.is_zero:
        raise ValueError("the zero invariant has no leading slice")
    top = element.coeffs[invariant.level]
    return TwistedElement(invariant.level, top, element.ctx.sigma)


@dataclass
class TargetOutcome:
    target: Polynomial
    witness: Optional[OrePoly]

    @property
    def witnessed(self) -> bool:
        return self.witness is not None


@dataclass
class SurjectivityReport:
    level: int
    max_degree: int
    witness_degree: int
    outcomes: list[TargetOutcome]

    @property
    def all_witnessed(self) -> bool:
        return all(outcome.witnessed for outcome in self.outcomes)

    def missing(self) -> list[Polynomial]:
        return [o.target for o in self.outcomes if not o.witnessed]


def check_j_surjectivity(
    nu: NakayamaData,
    level: int,
    max_degree: int,
    witness_degree: Optional[int] = None,
) -> SurjectivityReport:
    """Leading-map surjectivity onto the level's eigenspace, target by target.

    For each basis eigenvector g of eigenvalue J^level (degree <= bound):
    look for a filtered invariant of x-degree <= level whose top coefficient
    is exactly g, with coefficient degrees up to ``witness_degree``
    (default: max_degree + level).  An unsolvable system is a certified
    NoSolution at these bounds -- a bounded statement, not a global one.
    """
    if level < 0:
        raise ValueError("filtration level must be nonnegative")
    if witness_degree is None:
        witness_degree = max_degree + level
    if witness_degree < max_degree:
        raise ValueError("witness degree bound must cover the target degree bound")
    ctx = nu.context()
    n = nu.nvars
    jacobian = nu.sigma.jacobian
    targets = eigenspace(nu.sigma, jacobian ** level, max_degree).basis

    pairs = [
        (alpha, k)
        for k in range(level + 1)
        for alpha in monomials_up_to(n, witness_degree)
    ]
    column = {pair: c for c, pair in enumerate(pairs)}
    images = _nu_images(nu, pairs, ctx)
    row_keys = set(pairs)
    for image in images.values():
        for j, coefficient in enumerate(image.coeffs):
            row_keys.update((beta, j) for beta in coefficient.terms)
    row_order = _row_order(row_keys)
    row_index = {key: r for r, key in enumerate(row_order)}
    fixed_rows = [[Fraction(0)] * len(pairs) for _ in row_order]
    for col, pair in enumerate(pairs):
        image = images[pair]
        for j, coefficient in enumerate(image.coeffs):
            for beta, value in coefficient.terms.items():
                fixed_rows[row_index[(beta, j)]][col] += value
        fixed_rows[row_index[pair]][col] -= 1
    # Pin the whole top layer: coefficient of x^level must equal the target.
    top_layer = [alpha for alpha in monomials_up_to(n, witness_degree)]
    pin_rows = []
    for alpha in top_layer:
        row = [Fraction(0)] * len(pairs)
        row[column[(alpha, level)]] = Fraction(1)
        pin_rows.append(row)

    rows = fixed_rows + pin_rows
    outcomes = []
    for target in targets:
        rhs = [Fraction(0)] * len(fixed_rows)
        rhs += [target.coefficient(alpha) for alpha in top_layer]
        solution = solve_affine(rows, rhs)
        if solution is None:
            outcomes.append(TargetOutcome(target, None))
            continue
        layers: dict[int, dict] = {}
        for c, value in enumerate(solution.particular):
            if value:
                alpha, k = pairs[c]
                layers.setdefault(k, {})[alpha] = value
        coefficients = [Polynomial(n, layers.get(k, {})) for k in range(level + 1)]
        witness = OrePoly(ctx, coefficients)
        assert nu.apply_ore(witness) == witness, "claimed witness is not invariant"
        assert witness.coefficient(level) == target, "witness has the wrong leading slice"
        outcomes.append(TargetOutcome(target, witness))
    return SurjectivityReport(level, max_degree, witness_degree, outcomes)
