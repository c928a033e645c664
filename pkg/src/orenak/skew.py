"""Skew derivations on Q[z1..zn] and their quotient-field quotients.

A sigma-derivation delta satisfies the twisted Leibniz rule
``delta(fg) = delta(f) g + sigma(f) delta(g)``.  On a commutative
polynomial ring it is determined by the generator images, but an arbitrary
choice of images need not extend consistently: the pairwise compatibility
``delta_i (sigma_j - z_j) = delta_j (sigma_i - z_i)`` is required, and is
checked eagerly at construction.

When sigma is not the identity, every consistent delta is an inner
quotient: there is a unique rational function kappa with
``delta(h) = kappa (sigma(h) - h)`` for every h.  :func:`compute_kappa`
returns it, realized from the first generator moved by sigma.
"""

from __future__ import annotations

from .endo import Automorphism
from .poly import Polynomial, RationalFunction

__all__ = [
    "DifferentialCaseError",
    "InconsistentDerivation",
    "SkewDerivation",
    "compute_kappa",
]


class InconsistentDerivation(ValueError):
    """Generator images that do not extend to a sigma-derivation."""

    def __init__(self, i: int, j: int):
        self.pair = (i, j)
        super().__init__(
            f"images for z{i} and z{j} violate the compatibility identity "
            f"delta_{i}*(sigma_{j} - z{j}) = delta_{j}*(sigma_{i} - z{i})"
        )


class DifferentialCaseError(ValueError):
    """kappa requested although sigma is the identity (no twisting to divide by)."""


class SkewDerivation:
    """A sigma-derivation given by generator images, validated eagerly."""

    __slots__ = ("sigma", "images")

    def __init__(self, sigma: Automorphism, images):
        images = tuple(images)
        n = sigma.nvars
        if len(images) != n:
            raise ValueError(f"expected {n} generator images, got {len(images)}")
        for image in images:
            if not isinstance(image, Polynomial) or image.nvars != n:
                raise TypeError("derivation images must be polynomials in the same ring")
        variables = Polynomial.variables(n)
        twists = [sigma.forward.images[i] - variables[i] for i in range(n)]
        for i in range(n):
            for j in range(i + 1, n):
                if images[i] * twists[j] != images[j] * twists[i]:
                    raise InconsistentDerivation(i + 1, j + 1)
        self.sigma = sigma
        self.images = images

    @classmethod
    def zero(cls, sigma: Automorphism) -> "SkewDerivation":
        n = sigma.nvars
        return cls(sigma, [Polynomial.zero(n)] * n)

    @property
    def nvars(self) -> int:
        return self.sigma.nvars

    @property
    def is_zero(self) -> bool:
        return all(image.is_zero for image in self.images)

    def apply(self, f: Polynomial) -> Polynomial:
        """delta(f) via linearity and the twisted Leibniz rule on monomials."""
        n = self.nvars
        if f.nvars != n:
            raise ValueError("polynomial lives in a different ambient ring")
        cache: dict = {(0,) * n: Polynomial.zero(n)}
        sigma_images = self.sigma.forward.images

        def on_monomial(exponents):
            if exponents in cache:
                return cache[exponents]
            i = next(k for k, e in enumerate(exponents) if e)
            rest = exponents[:i] + (exponents[i] - 1,) + exponents[i + 1:]
            rest_poly = Polynomial.monomial(n, rest)
            value = self.images[i] * rest_poly + sigma_images[i] * on_monomial(rest)
            cache[exponents] = value
            return value

        result = Polynomial.zero(n)
        for exponents, coefficient in f.terms.items():
            result = result + coefficient * on_monomial(exponents)
        return result

    def __eq__(self, other):
        if not isinstance(other, SkewDerivation):
            return NotImplemented
        return self.sigma == other.sigma and self.images == other.images

    def __repr__(self):
        inner = ", ".join(str(image) for image in self.images)
        return f"SkewDerivation({inner})"


def compute_kappa(sigma: Automorphism, delta: SkewDerivation) -> RationalFunction:
    """The unique kappa with delta(h) = kappa*(sigma(h) - h) for all h.

    Raises :class:`DifferentialCaseError` when sigma is the identity, where
    no such quotient exists.  A zero delta gives kappa = 0.  The result is
    realized from the first generator moved by sigma and then verified
    against every other generator.
    """
    if sigma.is_identity:
        raise DifferentialCaseError(
            "sigma is the identity; delta is an ordinary derivation and"
            " has no twisting quotient"
        )
    if delta.sigma != sigma:
        raise ValueError("delta was built over a different sigma")
    n = sigma.nvars
    variables = Polynomial.variables(n)
    witness = next(
        i for i in range(n) if sigma.forward.images[i] != variables[i]
    )
    kappa = RationalFunction(
        delta.images[witness], sigma.forward.images[witness] - variables[witness]
    )
    for j in range(n):
        twist = sigma.forward.images[j] - variables[j]
        if kappa * twist != RationalFunction.from_poly(delta.images[j]):
            # The eager pairwise validation makes this unreachable, but a
            # derivation constructed by other means deserves a loud failure.
            raise InconsistentDerivation(witness + 1, j + 1)
    return kappa
