"""Polynomial ring endomorphisms and verified automorphisms of Q[z1..zn].

An endomorphism is determined by the images of the generators.  An
:class:`Automorphism` additionally carries a verified polynomial inverse and
the (constant) determinant of its Jacobian matrix; construction fails loudly
when either is missing, so downstream code never has to re-check
invertibility.

Inverses are found by a linear ansatz: writing each inverse generator image
as an unknown polynomial of bounded degree turns ``tau_i(sigma_1, ...,
sigma_n) = z_i`` into an exact linear system.  The default degree bound
``(max deg sigma_i)**(n-1)`` is sufficient for the triangular and affine
automorphisms this package works with; a tighter or larger bound can always
be supplied.
"""

from __future__ import annotations

from fractions import Fraction

from .linalg import det_over_ring, solve_affine
from .poly import Polynomial, grlex_key, monomials_up_to

__all__ = [
    "Automorphism",
    "NonConstantJacobian",
    "PolyEndo",
    "compose",
    "invert",
    "jacobian_det",
    "order_of",
]


class NonConstantJacobian(ValueError):
    """Raised when a claimed automorphism has a non-constant or zero Jacobian."""


class PolyEndo:
    """Endomorphism of Q[z1..zn] given by generator images."""

    __slots__ = ("nvars", "images")

    def __init__(self, images):
        images = list(images)
        if not images:
            raise ValueError("an endomorphism needs at least one generator image")
        nvars = len(images)
        for image in images:
            if not isinstance(image, Polynomial):
                raise TypeError("generator images must be polynomials")
            if image.nvars != nvars:
                raise ValueError(
                    "generator images must live in the ring they map from"
                )
        self.nvars = nvars
        self.images = tuple(images)

    @classmethod
    def identity(cls, nvars: int) -> "PolyEndo":
        return cls(Polynomial.variables(nvars))

    @property
    def is_identity(self) -> bool:
        return all(
            image == Polynomial.variable(self.nvars, i)
            for i, image in enumerate(self.images)
        )

    def apply(self, f: Polynomial) -> Polynomial:
        """Image of ``f``: substitute the generator images and expand."""
        if f.nvars != self.nvars:
            raise ValueError("polynomial lives in a different ambient ring")
        return f.substituted(list(self.images))

    def __eq__(self, other):
        if not isinstance(other, PolyEndo):
            return NotImplemented
        return self.images == other.images

    def __hash__(self):
        return hash(self.images)

    def __repr__(self):
        inner = ", ".join(str(image) for image in self.images)
        return f"PolyEndo({inner})"


def compose(sigma: PolyEndo, tau: PolyEndo) -> PolyEndo:
    """The composite sigma after tau: (sigma . tau)(f) = sigma(tau(f))."""
    if sigma.nvars != tau.nvars:
        raise ValueError("endomorphisms act on different rings")
    return PolyEndo([sigma.apply(image) for image in tau.images])


def invert(sigma: PolyEndo, degree_bound: int | None = None):
    """Polynomial inverse of ``sigma`` by linear ansatz, or None if not found.

    Solves tau_i(sigma_1, ..., sigma_n) = z_i for unknown coefficients of
    each tau_i up to ``degree_bound``, then verifies both composites equal
    the identity.  ``None`` means "no inverse within the bound", which
    callers should report as indeterminate rather than as proof of
    non-invertibility.
    """
    n = sigma.nvars
    if degree_bound is None:
        max_deg = max(max(image.total_degree(), 1) for image in sigma.images)
        degree_bound = max_deg ** (n - 1) if n > 1 else 1
        degree_bound = max(degree_bound, 1)
    monomials = monomials_up_to(n, degree_bound)
    # Precompute sigma^alpha = prod sigma_j^alpha_j for every ansatz monomial.
    powers: dict = {(0,) * n: Polynomial.one(n)}
    for alpha in sorted(monomials, key=grlex_key):
        if sum(alpha) == 0:
            continue
        j = next(i for i, e in enumerate(alpha) if e)
        previous = alpha[:j] + (alpha[j] - 1,) + alpha[j + 1:]
        powers[alpha] = powers[previous] * sigma.images[j]

    images = []
    for i in range(n):
        target = Polynomial.variable(n, i)
        row_index: dict = {}
        for alpha in monomials:
            for exps in powers[alpha].terms:
                row_index.setdefault(exps, len(row_index))
        for exps in target.terms:
            row_index.setdefault(exps, len(row_index))
        rows = [[Fraction(0)] * len(monomials) for _ in row_index]
        for col, alpha in enumerate(monomials):
            for exps, coefficient in powers[alpha].terms.items():
                rows[row_index[exps]][col] = coefficient
        rhs = [Fraction(0)] * len(row_index)
        for exps, coefficient in target.terms.items():
            rhs[row_index[exps]] = coefficient
        solution = solve_affine(rows, rhs)
        if solution is None:
            return None
        coeffs = {
            alpha: solution.particular[col]
            for col, alpha in enumerate(monomials)
            if solution.particular[col]
        }
        images.append(Polynomial(n, coeffs))

    tau = PolyEndo(images)
    identity = PolyEndo.identity(n)
    if compose(sigma, tau) != identity or compose(tau, sigma) != identity:
        return None
    return tau


def order_of(endo: PolyEndo, max_iter: int = 64):
    """Smallest r >= 1 with endo^r = id, or None if not reached by max_iter."""
    identity = PolyEndo.identity(endo.nvars)
    current = endo
    for r in range(1, max_iter + 1):
        if current == identity:
            return r
        current = compose(endo, current)
    return None


def jacobian_det(endo: PolyEndo) -> Fraction:
    """Determinant of (d sigma_i / d z_j); raises unless a nonzero constant."""
    n = endo.nvars
    matrix = [
        [endo.images[i].partial(j) for j in range(n)]
        for i in range(n)
    ]
    determinant = det_over_ring(matrix)
    if determinant.is_zero or not determinant.is_constant:
        raise NonConstantJacobian(
            f"Jacobian determinant {determinant} is not a nonzero constant; "
            "the map is not an automorphism of the polynomial ring"
        )
    return determinant.constant_value()


class Automorphism:
    """A polynomial automorphism bundled with its verified inverse.

    ``forward`` and ``inverse`` are plain endomorphisms whose composites in
    both orders equal the identity; ``jacobian`` is the constant Jacobian
    determinant of the forward map.  These facts are established at
    construction, never assumed.
    """

    __slots__ = ("forward", "inverse", "jacobian")

    def __init__(self, forward: PolyEndo, inverse: PolyEndo):
        if forward.nvars != inverse.nvars:
            raise ValueError("forward and inverse act on different rings")
        identity = PolyEndo.identity(forward.nvars)
        if compose(forward, inverse) != identity or compose(inverse, forward) != identity:
            raise ValueError("claimed inverse does not invert the map")
        self.forward = forward
        self.inverse = inverse
        self.jacobian = jacobian_det(forward)

    @classmethod
    def from_images(cls, images, inverse_images=None, degree_bound: int | None = None):
        """Build from generator images, finding the inverse when not supplied."""
        forward = PolyEndo(images)
        jacobian_det(forward)  # fail fast with the clearer error
        if inverse_images is not None:
            inverse = PolyEndo(inverse_images)
        else:
            inverse = invert(forward, degree_bound)
            if inverse is None:
                raise ValueError(
                    "no polynomial inverse found within the degree bound; "
                    "invertibility is indeterminate at this bound"
                )
        return cls(forward, inverse)

    @classmethod
    def identity(cls, nvars: int) -> "Automorphism":
        endo = PolyEndo.identity(nvars)
        return cls(endo, endo)

    @property
    def nvars(self) -> int:
        return self.forward.nvars

    @property
    def is_identity(self) -> bool:
        return self.forward.is_identity

    def apply(self, f: Polynomial) -> Polynomial:
        return self.forward.apply(f)

    def apply_inverse(self, f: Polynomial) -> Polynomial:
        return self.inverse.apply(f)

    def inverted(self) -> "Automorphism":
        return Automorphism(self.inverse, self.forward)

    def apply_ratfunc(self, value):
        """Extend the forward map to the quotient field."""
        from .poly import RationalFunction

        if not isinstance(value, RationalFunction):
            raise TypeError("apply_ratfunc expects a rational function")
        return RationalFunction(self.apply(value.num), self.apply(value.den))

    def apply_ratfunc_inverse(self, value):
        from .poly import RationalFunction

        if not isinstance(value, RationalFunction):
            raise TypeError("apply_ratfunc_inverse expects a rational function")
        return RationalFunction(self.apply_inverse(value.num), self.apply_inverse(value.den))

    def ratfunc_power(self, value, r: int):
        """Apply the map r times on the quotient field; negative r inverts."""
        step = self.apply_ratfunc if r >= 0 else self.apply_ratfunc_inverse
        for _ in range(abs(r)):
            value = step(value)
        return value

    def order(self, max_iter: int = 64):
        return order_of(self.forward, max_iter)

    def __eq__(self, other):
        if not isinstance(other, Automorphism):
            return NotImplemented
        return self.forward == other.forward

    def __hash__(self):
        return hash(self.forward)

    def __repr__(self):
        inner = ", ".join(str(image) for image in self.forward.images)
        return f"Automorphism({inner})"
