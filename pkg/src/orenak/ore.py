"""The Ore extension E = R[x; sigma, delta] and its quotient-field cousin.

Elements are kept in left-normal form ``f_0 + f_1 x + ... + f_m x^m`` with
coefficients on the left; the commutation rule ``x f = sigma(f) x +
delta(f)`` is the single source of noncommutativity and is applied one x at
a time during multiplication.

When sigma is not the identity the same construction over the quotient
field uses ``delta_q(c) = kappa (sigma_q(c) - c)``, never a quotient rule;
there the shifted generator ``x + kappa`` has the closed power formula
built from elementary symmetric functions of kappa's sigma-orbit, and every
element has a unique expansion in powers of ``x + kappa`` (the shifted
basis) obtained by back-substitution.
"""

from __future__ import annotations

from fractions import Fraction

from .endo import Automorphism
from .poly import Polynomial, RationalFunction
from .skew import SkewDerivation, compute_kappa

__all__ = [
    "OreContext",
    "OrePoly",
    "OrePolyQ",
    "elementary_symmetric",
    "from_shifted_basis",
    "shifted_power",
    "to_shifted_basis",
]


class OreContext:
    """The pair (sigma, delta) defining E = R[x; sigma, delta]."""

    __slots__ = ("sigma", "delta", "_kappa")

    def __init__(self, sigma: Automorphism, delta: SkewDerivation):
        if delta.sigma != sigma:
            raise ValueError("delta was built over a different sigma")
        self.sigma = sigma
        self.delta = delta
        self._kappa = None

    @property
    def nvars(self) -> int:
        return self.sigma.nvars

    @property
    def is_differential(self) -> bool:
        """sigma = id: delta is an ordinary derivation."""
        return self.sigma.is_identity

    @property
    def is_trimmed(self) -> bool:
        """delta = 0: pure twist."""
        return self.delta.is_zero

    @property
    def case_tag(self) -> str:
        if self.is_differential:
            return "differential"
        if self.is_trimmed:
            return "trimmed"
        return "general"

    @property
    def kappa(self) -> RationalFunction:
        """The twisting quotient of delta (requires sigma != id)."""
        if self._kappa is None:
            self._kappa = compute_kappa(self.sigma, self.delta)
        return self._kappa

    # ------------------------------------------------------------ coefficient actions

    def twist_poly(self, f: Polynomial) -> Polynomial:
        return self.sigma.apply(f)

    def derive_poly(self, f: Polynomial) -> Polynomial:
        return self.delta.apply(f)

    def twist_rat(self, c: RationalFunction) -> RationalFunction:
        return self.sigma.apply_ratfunc(c)

    def derive_rat(self, c: RationalFunction) -> RationalFunction:
        return self.kappa * (self.twist_rat(c) - c)

    # ------------------------------------------------------------ element constructors

    def poly(self, coefficients) -> "OrePoly":
        return OrePoly(self, coefficients)

    def zero(self) -> "OrePoly":
        return OrePoly(self, [])

    def one(self) -> "OrePoly":
        return OrePoly(self, [Polynomial.one(self.nvars)])

    def x(self) -> "OrePoly":
        n = self.nvars
        return OrePoly(self, [Polynomial.zero(n), Polynomial.one(n)])

    def from_base(self, f: Polynomial) -> "OrePoly":
        return OrePoly(self, [f])

    def poly_q(self, coefficients) -> "OrePolyQ":
        return OrePolyQ(self, coefficients)

    def x_q(self) -> "OrePolyQ":
        n = self.nvars
        return OrePolyQ(self, [RationalFunction.zero(n), RationalFunction.one(n)])

    def one_q(self) -> "OrePolyQ":
        return OrePolyQ(self, [RationalFunction.one(self.nvars)])

    def shifted_generator(self) -> "OrePolyQ":
        """x + kappa, the recentred generator over the quotient field."""
        n = self.nvars
        return OrePolyQ(self, [self.kappa, RationalFunction.one(n)])

    def __eq__(self, other):
        if not isinstance(other, OreContext):
            return NotImplemented
        return (
            self.sigma.forward.images == other.sigma.forward.images
            and self.delta.images == other.delta.images
        )

    def __repr__(self):
        return f"OreContext(sigma={self.sigma!r}, delta={self.delta!r})"


def _skew_product(a, b, twist, derive, zero):
    """Coefficient lists of the product, given the coefficient actions.

    Multiplies ``(sum a_i x^i)(sum b_j x^j)`` by pushing x through the right
    factor one power at a time: x * (c x^k) = twist(c) x^(k+1) + derive(c) x^k.
    """
    if not a or not b:
        return []
    result = [zero] * (len(a) + len(b) - 1)
    shifted = list(b)  # x^i * b, starting at i = 0
    for i, coeff in enumerate(a):
        if i:
            advanced = [zero] * (len(shifted) + 1)
            for k, c in enumerate(shifted):
                advanced[k + 1] = advanced[k + 1] + twist(c)
                advanced[k] = advanced[k] + derive(c)
            shifted = advanced
        if coeff == zero:
            continue
        for k, c in enumerate(shifted):
            result[k] = result[k] + coeff * c
    return result


def _trimmed(coefficients, is_zero):
    coefficients = list(coefficients)
    while coefficients and is_zero(coefficients[-1]):
        coefficients.pop()
    return coefficients


class OrePoly:
    """Element of E in left-normal form with polynomial coefficients."""

    __slots__ = ("ctx", "coeffs")

    def __init__(self, ctx: OreContext, coefficients):
        n = ctx.nvars
        clean = []
        for c in coefficients:
            if isinstance(c, (int, Fraction)):
                c = Polynomial.constant(n, c)
            if not isinstance(c, Polynomial) or c.nvars != n:
                raise TypeError("coefficients must be polynomials of the context ring")
            clean.append(c)
        self.ctx = ctx
        self.coeffs = tuple(_trimmed(clean, lambda f: f.is_zero))

    @property
    def xdeg(self) -> int:
        """Degree in x; -1 for the zero element."""
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def coefficient(self, k: int) -> Polynomial:
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return Polynomial.zero(self.ctx.nvars)

    def _coerce(self, other):
        if isinstance(other, OrePoly):
            if other.ctx != self.ctx:
                raise ValueError("elements belong to different Ore extensions")
            return other
        if isinstance(other, (int, Fraction, Polynomial)):
            return OrePoly(self.ctx, [other])
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        size = max(len(self.coeffs), len(other.coeffs))
        return OrePoly(
            self.ctx,
            [self.coefficient(k) + other.coefficient(k) for k in range(size)],
        )

    __radd__ = __add__

    def __neg__(self):
        return OrePoly(self.ctx, [-c for c in self.coeffs])

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        zero = Polynomial.zero(self.ctx.nvars)
        product = _skew_product(
            list(self.coeffs),
            list(other.coeffs),
            self.ctx.twist_poly,
            self.ctx.derive_poly,
            zero,
        )
        return OrePoly(self.ctx, product)

    def __rmul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other * self

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("Ore powers take a nonnegative integer exponent")
        result = self.ctx.one()
        for _ in range(exponent):
            result = result * self
        return result

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, Polynomial)):
            other = self._coerce(other)
        if not isinstance(other, OrePoly):
            return NotImplemented
        return self.ctx == other.ctx and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def to_q(self) -> "OrePolyQ":
        """The same element viewed over the quotient field (sigma != id)."""
        return OrePolyQ(self.ctx, [RationalFunction.from_poly(c) for c in self.coeffs])

    def __repr__(self):
        from .parser import format_ore

        return f"OrePoly({format_ore(self)!r})"

    def __str__(self):
        from .parser import format_ore

        return format_ore(self)


class OrePolyQ:
    """Element of the quotient-field Ore extension E_q (sigma != id only)."""

    __slots__ = ("ctx", "coeffs")

    def __init__(self, ctx: OreContext, coefficients):
        if ctx.is_differential:
            raise ValueError(
                "the quotient-field Ore extension is defined only for sigma != id"
            )
        n = ctx.nvars
        clean = []
        for c in coefficients:
            if isinstance(c, (int, Fraction)):
                c = RationalFunction.constant(n, c)
            elif isinstance(c, Polynomial):
                c = RationalFunction.from_poly(c)
            if not isinstance(c, RationalFunction) or c.nvars != n:
                raise TypeError("coefficients must be rational functions of the context ring")
            clean.append(c)
        self.ctx = ctx
        self.coeffs = tuple(_trimmed(clean, lambda f: f.is_zero))

    @property
    def xdeg(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def coefficient(self, k: int) -> RationalFunction:
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return RationalFunction.zero(self.ctx.nvars)

    def _coerce(self, other):
        if isinstance(other, OrePolyQ):
            if other.ctx != self.ctx:
                raise ValueError("elements belong to different Ore extensions")
            return other
        if isinstance(other, OrePoly):
            if other.ctx != self.ctx:
                raise ValueError("elements belong to different Ore extensions")
            return other.to_q()
        if isinstance(other, (int, Fraction, Polynomial, RationalFunction)):
            return OrePolyQ(self.ctx, [other])
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        size = max(len(self.coeffs), len(other.coeffs))
        return OrePolyQ(
            self.ctx,
            [self.coefficient(k) + other.coefficient(k) for k in range(size)],
        )

    __radd__ = __add__

    def __neg__(self):
        return OrePolyQ(self.ctx, [-c for c in self.coeffs])

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        zero = RationalFunction.zero(self.ctx.nvars)
        product = _skew_product(
            list(self.coeffs),
            list(other.coeffs),
            self.ctx.twist_rat,
            self.ctx.derive_rat,
            zero,
        )
        return OrePolyQ(self.ctx, product)

    def __rmul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other * self

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("Ore powers take a nonnegative integer exponent")
        result = self.ctx.one_q()
        for _ in range(exponent):
            result = result * self
        return result

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, Polynomial, RationalFunction, OrePoly)):
            other = self._coerce(other)
        if not isinstance(other, OrePolyQ):
            return NotImplemented
        return self.ctx == other.ctx and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def is_polynomial(self) -> bool:
        return all(c.is_polynomial for c in self.coeffs)

    def as_ore_poly(self) -> OrePoly:
        return OrePoly(self.ctx, [c.as_polynomial() for c in self.coeffs])

    def __repr__(self):
        from .parser import format_ore

        return f"OrePolyQ({format_ore(self)!r})"

    def __str__(self):
        from .parser import format_ore

        return format_ore(self)


# -------------------------------------------------------------------- symmetric sums


def elementary_symmetric(r: int, k: int, values):
    """Sum of all k-fold products of ``values`` (which must have length r).

    The empty product convention gives 1 for k = 0.  Works over any
    commutative coefficient type supporting + and *.
    """
    values = list(values)
    if len(values) != r:
        raise ValueError(f"expected {r} values, got {len(values)}")
    if not 0 <= k <= r:
        raise ValueError(f"symmetric function index {k} out of range 0..{r}")
    # table[j] = e_j of the prefix processed so far
    table = [1] + [None] * k
    for index, value in enumerate(values, start=1):
        top = min(index, k)
        for j in range(top, 0, -1):
            contribution = table[j - 1] * value
            table[j] = contribution if table[j] is None else table[j] + contribution
    return table[k] if table[k] is not None else 0


def shifted_power(ctx: OreContext, r: int) -> OrePolyQ:
    """(x + kappa)^r by the closed symmetric-function formula.

    The x^i coefficient is the (r-i)-th elementary symmetric function of
    kappa, sigma_q(kappa), ..., sigma_q^(r-1)(kappa).
    """
    if r < 0:
        raise ValueError("shifted powers take a nonnegative exponent")
    orbit = []
    value = ctx.kappa
    for _ in range(r):
        orbit.append(value)
        value = ctx.twist_rat(value)
    coefficients = [elementary_symmetric(r, r - i, orbit) for i in range(r + 1)]
    return OrePolyQ(ctx, coefficients)


def to_shifted_basis(element) -> list[RationalFunction]:
    """Coefficients g_i with element = sum g_i (x + kappa)^i.

    The change of basis is unitriangular (each (x + kappa)^i is x^i plus
    lower order), so back-substitution from the top degree terminates and
    the expansion is unique.  The reconstruction is re-checked before
    returning.
    """
    if isinstance(element, OrePoly):
        element = element.to_q()
    if not isinstance(element, OrePolyQ):
        raise TypeError("shifted-basis expansion expects an Ore element")
    ctx = element.ctx
    if element.is_zero:
        return []
    coefficients: list[RationalFunction] = []
    remainder = element
    for i in range(element.xdeg, -1, -1):
        g = remainder.coefficient(i)
        coefficients.append(g)
        if not g.is_zero:
            remainder = remainder - OrePolyQ(ctx, [g]) * shifted_power(ctx, i)
        if remainder.xdeg >= i:
            raise AssertionError("shifted-basis back-substitution failed to lower degree")
    coefficients.reverse()
    assert from_shifted_basis(ctx, coefficients) == element, (
        "shifted-basis round trip failed"
    )
    return coefficients


def from_shifted_basis(ctx: OreContext, coefficients) -> OrePolyQ:
    """Assemble sum g_i (x + kappa)^i from its shifted coefficients."""
    result = OrePolyQ(ctx, [])
    for i, g in enumerate(coefficients):
        term = OrePolyQ(ctx, [g])
        if term.is_zero:
            continue
        result = result + term * shifted_power(ctx, i)
    return result
