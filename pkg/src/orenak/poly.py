"""Exact sparse multivariate polynomials and rational functions over Q.

Coefficients are `fractions.Fraction`; monomials are exponent tuples of a
fixed length (the ambient variable count ``nvars``).  The canonical monomial
order everywhere is graded lexicographic with the first variable heaviest;
it fixes leading terms, monic denominators and printing.  All values are
immutable after construction and every operation is pure, so objects can be
shared freely.

The multivariate GCD is the classical content / primitive-part recursion
with a subresultant pseudo-remainder sequence in the leading variable.  It
is exact and dependency-free, which is all that is needed at the problem
sizes this package targets.
"""

from __future__ import annotations

from fractions import Fraction

__all__ = [
    "Polynomial",
    "RationalFunction",
    "grlex_key",
    "monomials_up_to",
    "partial_derivative",
    "poly_gcd",
    "ratfunc_reduce",
    "substitute",
]


def _coeff(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    raise TypeError(
        f"expected an int or Fraction coefficient, got {type(value).__name__}"
    )


def grlex_key(exponents):
    """Graded-lex sort key: total degree first, ties broken z1-heavy."""
    return (sum(exponents), exponents)


def monomials_up_to(nvars: int, degree: int):
    """All exponent tuples of total degree <= degree, graded-lex descending."""

    def compositions(total, slots):
        if slots == 1:
            yield (total,)
            return
        for e in range(total, -1, -1):
            for rest in compositions(total - e, slots - 1):
                yield (e,) + rest

    result = []
    for total in range(degree + 1):
        result.extend(compositions(total, nvars))
    result.sort(key=grlex_key, reverse=True)
    return result


class Polynomial:
    """Sparse polynomial in ``nvars`` variables with rational coefficients.

    ``terms`` maps exponent tuples to nonzero Fractions; the zero polynomial
    has an empty map.  Instances must be treated as immutable.
    """

    __slots__ = ("nvars", "terms", "_hash")

    def __init__(self, nvars: int, terms=None):
        if nvars < 1:
            raise ValueError("ambient variable count must be at least 1")
        clean = {}
        for exponents, coefficient in (terms or {}).items():
            exponents = tuple(exponents)
            if len(exponents) != nvars:
                raise ValueError(
                    f"monomial {exponents} does not match ambient variable count {nvars}"
                )
            if any(e < 0 for e in exponents):
                raise ValueError(f"negative exponent in monomial {exponents}")
            coefficient = _coeff(coefficient)
            if coefficient:
                clean[exponents] = coefficient
        self.nvars = nvars
        self.terms = clean
        self._hash = None

    # ---------------------------------------------------------------- construction

    @classmethod
    def zero(cls, nvars: int) -> "Polynomial":
        return cls(nvars, {})

    @classmethod
    def one(cls, nvars: int) -> "Polynomial":
        return cls.constant(nvars, 1)

    @classmethod
    def constant(cls, nvars: int, value) -> "Polynomial":
        return cls(nvars, {(0,) * nvars: _coeff(value)})

    @classmethod
    def variable(cls, nvars: int, index: int) -> "Polynomial":
        """The generator with 0-based ``index``."""
        if not 0 <= index < nvars:
            raise IndexError(f"variable index {index} out of range for {nvars} variables")
        exponents = tuple(1 if i == index else 0 for i in range(nvars))
        return cls(nvars, {exponents: 1})

    @classmethod
    def monomial(cls, nvars: int, exponents, coefficient=1) -> "Polynomial":
        return cls(nvars, {tuple(exponents): coefficient})

    @classmethod
    def variables(cls, nvars: int) -> list["Polynomial"]:
        return [cls.variable(nvars, i) for i in range(nvars)]

    # ---------------------------------------------------------------- queries

    @property
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def is_constant(self) -> bool:
        return all(sum(e) == 0 for e in self.terms)

    def constant_value(self) -> Fraction:
        """The value of a constant polynomial (raises otherwise)."""
        if self.is_zero:
            return Fraction(0)
        if not self.is_constant:
            raise ValueError("polynomial is not constant")
        return self.terms[(0,) * self.nvars]

    def total_degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        if self.is_zero:
            return -1
        return max(sum(e) for e in self.terms)

    def degree_in(self, index: int) -> int:
        """Degree in the 0-based variable ``index``; -1 for zero."""
        if self.is_zero:
            return -1
        return max(e[index] for e in self.terms)

    def coefficient(self, exponents) -> Fraction:
        return self.terms.get(tuple(exponents), Fraction(0))

    def leading_term(self):
        """(exponents, coefficient) of the graded-lex leading term."""
        if self.is_zero:
            raise ValueError("the zero polynomial has no leading term")
        exponents = max(self.terms, key=grlex_key)
        return exponents, self.terms[exponents]

    def leading_coefficient(self) -> Fraction:
        return self.leading_term()[1]

    def sorted_terms(self):
        """Terms in descending graded-lex order."""
        return sorted(self.terms.items(), key=lambda kv: grlex_key(kv[0]), reverse=True)

    def monic(self) -> "Polynomial":
        """Divide by the leading coefficient (zero stays zero)."""
        if self.is_zero:
            return self
        return self * (1 / self.leading_coefficient())

    # ---------------------------------------------------------------- arithmetic

    def _check_ambient(self, other: "Polynomial"):
        if self.nvars != other.nvars:
            raise ValueError(
                f"ambient variable counts differ: {self.nvars} vs {other.nvars}"
            )

    def _coerce(self, other):
        if isinstance(other, Polynomial):
            self._check_ambient(other)
            return other
        if isinstance(other, (int, Fraction)):
            return Polynomial.constant(self.nvars, other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        acc = dict(self.terms)
        for exponents, coefficient in other.terms.items():
            total = acc.get(exponents, Fraction(0)) + coefficient
            if total:
                acc[exponents] = total
            else:
                acc.pop(exponents, None)
        return Polynomial(self.nvars, acc)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(self.nvars, {e: -c for e, c in self.terms.items()})

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
        if isinstance(other, (int, Fraction)):
            other = _coeff(other)
            if not other:
                return Polynomial.zero(self.nvars)
            return Polynomial(self.nvars, {e: c * other for e, c in self.terms.items()})
        if not isinstance(other, Polynomial):
            return NotImplemented
        self._check_ambient(other)
        acc: dict = {}
        for ea, ca in self.terms.items():
            for eb, cb in other.terms.items():
                key = tuple(x + y for x, y in zip(ea, eb))
                total = acc.get(key, Fraction(0)) + ca * cb
                if total:
                    acc[key] = total
                else:
                    del acc[key]
        return Polynomial(self.nvars, acc)

    __rmul__ = __mul__

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("polynomial powers take a nonnegative integer exponent")
        result = Polynomial.one(self.nvars)
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            other = _coeff(other)
            if not other:
                raise ZeroDivisionError("division by zero scalar")
            return self * (1 / other)
        if isinstance(other, Polynomial):
            return RationalFunction(self, other)
        return NotImplemented

    def __rtruediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return RationalFunction(Polynomial.constant(self.nvars, other), self)
        return NotImplemented

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.nvars == other.nvars and self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self == Polynomial.constant(self.nvars, other)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.nvars, tuple(sorted(self.terms.items()))))
        return self._hash

    def __bool__(self):
        return bool(self.terms)

    def __repr__(self):
        from .parser import format_poly

        return f"Polynomial({self.nvars}, {format_poly(self)!r})"

    def __str__(self):
        from .parser import format_poly

        return format_poly(self)

    # ---------------------------------------------------------------- calculus & maps

    def partial(self, index: int) -> "Polynomial":
        """Formal partial derivative in the 0-based variable ``index``."""
        if not 0 <= index < self.nvars:
            raise IndexError(f"variable index {index} out of range")
        acc: dict = {}
        for exponents, coefficient in self.terms.items():
            e = exponents[index]
            if e == 0:
                continue
            lowered = exponents[:index] + (e - 1,) + exponents[index + 1:]
            acc[lowered] = acc.get(lowered, Fraction(0)) + coefficient * e
        return Polynomial(self.nvars, acc)

    def substituted(self, images: list["Polynomial"]) -> "Polynomial":
        """Replace the i-th variable by ``images[i]`` and expand.

        The images may live in a different ambient ring; the result lives in
        the images' ring.
        """
        if len(images) != self.nvars:
            raise ValueError(
                f"expected {self.nvars} substitution images, got {len(images)}"
            )
        target = images[0].nvars if images else self.nvars
        for g in images:
            if g.nvars != target:
                raise ValueError("substitution images must share an ambient ring")
        # Cache variable powers; polynomials here are small.
        powers: list[dict[int, Polynomial]] = [
            {0: Polynomial.one(target)} for _ in range(self.nvars)
        ]

        def power(i: int, e: int) -> Polynomial:
            cache = powers[i]
            if e not in cache:
                cache[e] = power(i, e - 1) * images[i]
            return cache[e]

        result = Polynomial.zero(target)
        for exponents, coefficient in self.terms.items():
            term = Polynomial.constant(target, coefficient)
            for i, e in enumerate(exponents):
                if e:
                    term = term * power(i, e)
            result = result + term
        return result

    # ---------------------------------------------------------------- division

    def divexact(self, divisor: "Polynomial") -> "Polynomial":
        """Exact quotient self / divisor; raises ValueError if not divisible."""
        divisor = self._coerce(divisor)
        if divisor is None or not isinstance(divisor, Polynomial):
            raise TypeError("divexact expects a polynomial divisor")
        if divisor.is_zero:
            raise ZeroDivisionError("exact division by the zero polynomial")
        if self.is_zero:
            return self
        d_exps, d_coeff = divisor.leading_term()
        quotient: dict = {}
        remainder = self
        while not remainder.is_zero:
            r_exps, r_coeff = remainder.leading_term()
            diff = tuple(a - b for a, b in zip(r_exps, d_exps))
            if any(e < 0 for e in diff):
                raise ValueError("polynomials do not divide exactly")
            c = r_coeff / d_coeff
            quotient[diff] = quotient.get(diff, Fraction(0)) + c
            remainder = remainder - Polynomial.monomial(self.nvars, diff, c) * divisor
        return Polynomial(self.nvars, quotient)


# ----------------------------------------------------------- 1-based convenience maps


def substitute(f: Polynomial, images: list[Polynomial]) -> Polynomial:
    """f with each variable replaced by the corresponding image, expanded."""
    return f.substituted(images)


def partial_derivative(f: Polynomial, p: int) -> Polynomial:
    """Formal partial derivative with respect to the p-th variable (1-based)."""
    if not 1 <= p <= f.nvars:
        raise IndexError(f"variable position {p} out of range 1..{f.nvars}")
    return f.partial(p - 1)


# -------------------------------------------------------------------- multivariate GCD


def _smallest_variable(f: Polynomial, g: Polynomial):
    """Smallest 0-based variable index occurring in f or g, or None."""
    for i in range(f.nvars):
        if any(e[i] for e in f.terms) or any(e[i] for e in g.terms):
            return i
    return None


def _to_univar(f: Polynomial, v: int) -> list[Polynomial]:
    """Dense coefficient list of f viewed as univariate in variable v."""
    degree = f.degree_in(v)
    coeffs = [Polynomial.zero(f.nvars) for _ in range(degree + 1)]
    for exponents, coefficient in f.terms.items():
        k = exponents[v]
        rest = exponents[:v] + (0,) + exponents[v + 1:]
        coeffs[k] = coeffs[k] + Polynomial.monomial(f.nvars, rest, coefficient)
    return coeffs


def _from_univar(coeffs: list[Polynomial], v: int, nvars: int) -> Polynomial:
    acc: dict = {}
    for k, c in enumerate(coeffs):
        for exponents, coefficient in c.terms.items():
            lifted = exponents[:v] + (k,) + exponents[v + 1:]
            acc[lifted] = acc.get(lifted, Fraction(0)) + coefficient
    return Polynomial(nvars, acc)


def _strip(coeffs: list[Polynomial]) -> list[Polynomial]:
    while coeffs and coeffs[-1].is_zero:
        coeffs.pop()
    return coeffs


def _content(coeffs: list[Polynomial]) -> Polynomial:
    content = Polynomial.zero(coeffs[0].nvars)
    for c in coeffs:
        content = poly_gcd(content, c)
    return content


def _pseudo_rem(a: list[Polynomial], b: list[Polynomial]) -> list[Polynomial]:
    """Pseudo-remainder of dense univariate lists with polynomial coefficients.

    Returns lc(b)^(deg a - deg b + 1) * a mod b, the standard scaling that
    keeps every intermediate division exact.
    """
    lead = b[-1]
    db = len(b) - 1
    r = list(a)
    e = len(a) - db  # delta + 1
    while _strip(r) and len(r) - 1 >= db:
        dr = len(r) - 1
        top = r[-1]
        scaled = [lead * c for c in r]
        shift = dr - db
        for k, bc in enumerate(b):
            scaled[k + shift] = scaled[k + shift] - top * bc
        r = _strip(scaled)
        e -= 1
    scale = lead ** e
    return [scale * c for c in r]


def poly_gcd(f: Polynomial, g: Polynomial) -> Polynomial:
    """Monic multivariate GCD (graded-lex leading coefficient 1).

    Content/primitive-part recursion over the smallest occurring variable,
    with a subresultant pseudo-remainder sequence for the primitive parts.
    """
    if f.nvars != g.nvars:
        raise ValueError("GCD operands must share an ambient ring")
    if f.is_zero and g.is_zero:
        return f
    if f.is_zero:
        return g.monic()
    if g.is_zero:
        return f.monic()
    if f.is_constant or g.is_constant:
        return Polynomial.one(f.nvars)

    v = _smallest_variable(f, g)
    fu, gu = _to_univar(f, v), _to_univar(g, v)
    cont_f, cont_g = _content(fu), _content(gu)
    cont_gcd = poly_gcd(cont_f, cont_g)
    a = _strip([c.divexact(cont_f) for c in fu])
    b = _strip([c.divexact(cont_g) for c in gu])
    if len(a) < len(b):
        a, b = b, a
    if len(b) - 1 == 0:
        # A primitive polynomial of degree 0 in v is a unit times content 1.
        return cont_gcd.monic()

    one = Polynomial.one(f.nvars)
    gg, hh = one, one
    while True:
        delta = (len(a) - 1) - (len(b) - 1)
        r = _pseudo_rem(a, b)
        if not r:
            prim = b
            break
        if len(r) - 1 == 0:
            return cont_gcd.monic()
        scale = gg * hh ** delta
        a, b = b, [c.divexact(scale) for c in r]
        gg = a[-1]
        if delta == 1:
            hh = gg
        elif delta > 1:
            hh = (gg ** delta).divexact(hh ** (delta - 1))
        # delta == 0 leaves hh unchanged.

    prim_content = _content(prim)
    prim = [c.divexact(prim_content) for c in prim]
    result = cont_gcd * _from_univar(prim, v, f.nvars)
    return result.monic()


# -------------------------------------------------------------------- rational functions


class RationalFunction:
    """Reduced fraction of polynomials with a graded-lex monic denominator.

    The canonical form is unique: numerator and denominator are coprime and
    the denominator's leading coefficient is 1, so structural equality
    coincides with cross-multiplication equality.
    """

    __slots__ = ("num", "den")

    def __init__(self, num: Polynomial, den: Polynomial):
        if not isinstance(num, Polynomial) or not isinstance(den, Polynomial):
            raise TypeError("RationalFunction takes polynomial numerator and denominator")
        if num.nvars != den.nvars:
            raise ValueError("numerator and denominator must share an ambient ring")
        if den.is_zero:
            raise ZeroDivisionError("rational function with zero denominator")
        if num.is_zero:
            num = Polynomial.zero(num.nvars)
            den = Polynomial.one(num.nvars)
        else:
            common = poly_gcd(num, den)
            num = num.divexact(common)
            den = den.divexact(common)
            lead = den.leading_coefficient()
            if lead != 1:
                num = num * (1 / lead)
                den = den * (1 / lead)
        self.num = num
        self.den = den

    # ---------------------------------------------------------------- construction

    @classmethod
    def from_poly(cls, f: Polynomial) -> "RationalFunction":
        return cls(f, Polynomial.one(f.nvars))

    @classmethod
    def constant(cls, nvars: int, value) -> "RationalFunction":
        return cls.from_poly(Polynomial.constant(nvars, value))

    @classmethod
    def zero(cls, nvars: int) -> "RationalFunction":
        return cls.from_poly(Polynomial.zero(nvars))

    @classmethod
    def one(cls, nvars: int) -> "RationalFunction":
        return cls.from_poly(Polynomial.one(nvars))

    # ---------------------------------------------------------------- queries

    @property
    def nvars(self) -> int:
        return self.num.nvars

    @property
    def is_zero(self) -> bool:
        return self.num.is_zero

    @property
    def is_polynomial(self) -> bool:
        """True when the reduced denominator is the constant 1."""
        return self.den == Polynomial.one(self.nvars)

    def as_polynomial(self) -> Polynomial:
        if not self.is_polynomial:
            raise ValueError("rational function is not a polynomial")
        return self.num

    # ---------------------------------------------------------------- arithmetic

    def _coerce(self, other):
        if isinstance(other, RationalFunction):
            if other.nvars != self.nvars:
                raise ValueError("ambient variable counts differ")
            return other
        if isinstance(other, Polynomial):
            if other.nvars != self.nvars:
                raise ValueError("ambient variable counts differ")
            return RationalFunction.from_poly(other)
        if isinstance(other, (int, Fraction)):
            return RationalFunction.constant(self.nvars, other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return RationalFunction(
            self.num * other.den + other.num * self.den, self.den * other.den
        )

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction(-self.num, self.den)

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
        return RationalFunction(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if other.is_zero:
            raise ZeroDivisionError("division by the zero rational function")
        return RationalFunction(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other / self

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int):
            raise TypeError("rational function powers take an integer exponent")
        if exponent < 0:
            if self.is_zero:
                raise ZeroDivisionError("negative power of zero")
            return RationalFunction(self.den, self.num) ** (-exponent)
        return RationalFunction(self.num ** exponent, self.den ** exponent)

    def __eq__(self, other):
        if isinstance(other, (Polynomial, int, Fraction)):
            other = self._coerce(other)
        if not isinstance(other, RationalFunction):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __bool__(self):
        return not self.is_zero

    def __repr__(self):
        from .parser import format_ratfunc

        return f"RationalFunction({format_ratfunc(self)!r})"

    def __str__(self):
        from .parser import format_ratfunc

        return format_ratfunc(self)


def ratfunc_reduce(num: Polynomial, den: Polynomial) -> RationalFunction:
    """Canonical reduced form of num/den (GCD removed, denominator monic)."""
    return RationalFunction(num, den)
