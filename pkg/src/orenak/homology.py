"""Noncommutative calculus on R (x) R and Koszul-type complex checks.

The tensor square R (x) R is realised as a polynomial ring in 2n variables
(left factor first).  On it live the noncommutative partial difference
operators Delta_p, characterised by the exact tensor split

    Delta_p(z1^i1 ... zn^in) =
        sum_{s=1}^{i_p}  z_p^(i_p - s) z_{p+1}^{i_{p+1}} ... z_n^{i_n}
                         (x)  z_1^{i_1} ... z_{p-1}^{i_{p-1}} z_p^(s-1),

which multiply back to the usual partial derivative and assemble the
noncommutative one-form d(f) = 1 (x) f - f (x) 1 via
d(f) = sum_p Delta_p(f) dz_p.  The noncommutative Jacobian minors are
determinants of matrices with (u, v) entry Delta_{j_v}(sigma_{i_u}).

Free bimodule complexes over the enveloping algebra E (x) E^op are handled
with explicit bases: chain elements are maps from strictly increasing index
tuples to enveloping-algebra coefficients, the plain and twisted Koszul
differentials multiply one-forms in from the left, and the degree-wise
liftings of ``1 (x) 1 -> x (x) 1 - 1 (x) x`` are given in closed form for
the pure-twist (trimmed) and pure-derivation (differential) cases.  All the
defining identities -- d o d = 0 for both complexes, the chain-map
condition, the mapping-cone differential squaring to zero and the closed
form of the top boundary matrix -- are verified symbolically on every basis
element.
"""

from __future__ import annotations

import itertools
from fractions import Fraction

from .checks import CheckReport
from .endo import PolyEndo
from .linalg import det_over_ring
from .ore import OreContext
from .poly import Polynomial

__all__ = [
    "ChainElem",
    "EnvElem",
    "TensorRR",
    "cone_d",
    "delta_p",
    "koszul_d",
    "lift_rho",
    "mu",
    "nc_jacobian",
    "nc_jacobian_minor",
    "nc_one_form",
    "twisted_one_form",
    "verify_chain_map",
]


class TensorRR:
    """An element of R (x) R, stored as a polynomial in 2n variables.

    The first n slots are the left tensor factor, the last n the right.
    The ring is commutative, so determinants and exact division work the
    same as for ordinary polynomials.
    """

    __slots__ = ("n", "poly")

    def __init__(self, n: int, poly: Polynomial):
        if poly.nvars != 2 * n:
            raise ValueError("tensor-square element must live in 2n variables")
        self.n = n
        self.poly = poly

    # ------------------------------------------------------------ construction

    @classmethod
    def zero(cls, n: int) -> "TensorRR":
        return cls(n, Polynomial.zero(2 * n))

    @classmethod
    def one(cls, n: int) -> "TensorRR":
        return cls(n, Polynomial.one(2 * n))

    @classmethod
    def from_pair(cls, left: Polynomial, right: Polynomial) -> "TensorRR":
        """left (x) right."""
        if left.nvars != right.nvars:
            raise ValueError("tensor factors must share an ambient ring")
        n = left.nvars
        acc: dict = {}
        for el, cl in left.terms.items():
            for er, cr in right.terms.items():
                key = el + er
                acc[key] = acc.get(key, Fraction(0)) + cl * cr
        return cls(n, Polynomial(2 * n, acc))

    @classmethod
    def left(cls, f: Polynomial) -> "TensorRR":
        return cls.from_pair(f, Polynomial.one(f.nvars))

    @classmethod
    def right(cls, f: Polynomial) -> "TensorRR":
        return cls.from_pair(Polynomial.one(f.nvars), f)

    # ------------------------------------------------------------ arithmetic

    def _coerce(self, other):
        if isinstance(other, TensorRR):
            if other.n != self.n:
                raise ValueError("tensor-square elements of different rings")
            return other
        if isinstance(other, (int, Fraction)):
            return TensorRR(self.n, Polynomial.constant(2 * self.n, other))
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return TensorRR(self.n, self.poly + other.poly)

    __radd__ = __add__

    def __neg__(self):
        return TensorRR(self.n, -self.poly)

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
            return TensorRR(self.n, self.poly * other)
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return TensorRR(self.n, self.poly * other.poly)

    __rmul__ = __mul__

    def __pow__(self, exponent: int):
        return TensorRR(self.n, self.poly ** exponent)

    def divexact(self, other) -> "TensorRR":
        other = self._coerce(other)
        if other is None:
            raise TypeError("divexact expects a tensor-square element")
        return TensorRR(self.n, self.poly.divexact(other.poly))

    @property
    def is_zero(self) -> bool:
        return self.poly.is_zero

    @property
    def is_constant(self) -> bool:
        return self.poly.is_constant

    def constant_value(self) -> Fraction:
        return self.poly.constant_value()

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self._coerce(other)
        if not isinstance(other, TensorRR):
            return NotImplemented
        return self.n == other.n and self.poly == other.poly

    def __hash__(self):
        return hash((self.n, self.poly))

    def __repr__(self):
        return f"TensorRR({self.n}, {self.poly!r})"


def mu(t: TensorRR) -> Polynomial:
    """The multiplication map R (x) R -> R (identify both factors)."""
    n = t.n
    acc: dict = {}
    for exponents, coefficient in t.poly.terms.items():
        folded = tuple(exponents[i] + exponents[n + i] for i in range(n))
        acc[folded] = acc.get(folded, Fraction(0)) + coefficient
    return Polynomial(n, acc)


def delta_p(f: Polynomial, p: int) -> TensorRR:
    """The p-th noncommutative partial difference of f (p is 1-based).

    On a monomial the left factor keeps the variables from position p on
    (with z_p lowered), the right factor keeps those before p (with the
    complementary power of z_p); summing over the split position s makes
    mu(delta_p(f)) the ordinary partial derivative.
    """
    n = f.nvars
    if not 1 <= p <= n:
        raise IndexError(f"variable position {p} out of range 1..{n}")
    q = p - 1
    acc: dict = {}
    for exponents, coefficient in f.terms.items():
        e_p = exponents[q]
        for s in range(1, e_p + 1):
            left = [0] * n
            right = [0] * n
            left[q] = e_p - s
            right[q] = s - 1
            for i in range(q + 1, n):
                left[i] = exponents[i]
            for i in range(q):
                right[i] = exponents[i]
            key = tuple(left) + tuple(right)
            acc[key] = acc.get(key, Fraction(0)) + coefficient
    return TensorRR(n, Polynomial(2 * n, acc))


def nc_one_form(f: Polynomial) -> TensorRR:
    """d(f) = 1 (x) f - f (x) 1."""
    return TensorRR.right(f) - TensorRR.left(f)


def _as_endo(sigma) -> PolyEndo:
    """Accept either a bare endomorphism or a full automorphism."""
    return sigma.forward if hasattr(sigma, "forward") else sigma


def twisted_one_form(sigma, i: int) -> TensorRR:
    """The sigma-twisted generator one-form 1 (x) z_i - sigma_i (x) 1 (1-based i)."""
    endo = _as_endo(sigma)
    n = endo.nvars
    if not 1 <= i <= n:
        raise IndexError(f"variable position {i} out of range 1..{n}")
    z_i = Polynomial.variable(n, i - 1)
    return TensorRR.right(z_i) - TensorRR.left(endo.images[i - 1])


def nc_jacobian_minor(sigma, rows, cols) -> TensorRR:
    """Determinant of the matrix with (u, v) entry Delta_{cols[v]}(sigma_{rows[u]}).

    Rows and columns are 1-based index sequences of equal length; repeated
    columns give equal matrix columns, hence a zero determinant.  The empty
    minor is 1.
    """
    endo = _as_endo(sigma)
    rows = tuple(rows)
    cols = tuple(cols)
    if len(rows) != len(cols):
        raise ValueError("minor needs as many rows as columns")
    n = endo.nvars
    if not rows:
        return TensorRR.one(n)
    matrix = [
        [delta_p(endo.images[i - 1], j) for j in cols]
        for i in rows
    ]
    return det_over_ring(matrix)


def nc_jacobian(sigma) -> TensorRR:
    """The full noncommutative Jacobian determinant |Delta_j(sigma_i)|."""
    endo = _as_endo(sigma)
    full = tuple(range(1, endo.nvars + 1))
    return nc_jacobian_minor(endo, full, full)


# -------------------------------------------------------------------- enveloping algebra


def _ore_monomial_mul(ctx: OreContext, exp1, xdeg1, exp2, xdeg2):
    """(z^exp1 x^xdeg1) * (z^exp2 x^xdeg2) in E, as (exps, xdeg, coeff) triples."""
    n = ctx.nvars
    layers = {0: Polynomial.monomial(n, exp2)}
    for _ in range(xdeg1):
        advanced: dict = {}
        for d, f in layers.items():
            twisted = ctx.twist_poly(f)
            if not twisted.is_zero:
                advanced[d + 1] = advanced.get(d + 1, Polynomial.zero(n)) + twisted
            derived = ctx.derive_poly(f)
            if not derived.is_zero:
                advanced[d] = advanced.get(d, Polynomial.zero(n)) + derived
        layers = advanced
    out = []
    for d, f in layers.items():
        for mono, coefficient in f.terms.items():
            key = tuple(a + b for a, b in zip(exp1, mono))
            out.append((key, d + xdeg2, coefficient))
    return out


class EnvElem:
    """An element of the enveloping algebra E (x) E^op.

    Terms are keyed by pairs of Ore monomials ((left exps, left xdeg),
    (right exps, right xdeg)) with Fraction coefficients.  Multiplication is
    (a (x) b)(c (x) d) = ac (x) db: the left factors multiply in E, the
    right factors multiply in E in the opposite order.
    """

    __slots__ = ("ctx", "terms")

    def __init__(self, ctx: OreContext, terms=None):
        clean: dict = {}
        for key, coefficient in (terms or {}).items():
            coefficient = Fraction(coefficient)
            if coefficient:
                clean[key] = coefficient
        self.ctx = ctx
        self.terms = clean

    # ------------------------------------------------------------ construction

    @classmethod
    def zero(cls, ctx: OreContext) -> "EnvElem":
        return cls(ctx, {})

    @classmethod
    def one(cls, ctx: OreContext) -> "EnvElem":
        n = ctx.nvars
        unit = ((0,) * n, 0)
        return cls(ctx, {(unit, unit): Fraction(1)})

    @classmethod
    def x_left(cls, ctx: OreContext) -> "EnvElem":
        """x (x) 1."""
        n = ctx.nvars
        return cls(ctx, {(((0,) * n, 1), ((0,) * n, 0)): Fraction(1)})

    @classmethod
    def x_right(cls, ctx: OreContext) -> "EnvElem":
        """1 (x) x."""
        n = ctx.nvars
        return cls(ctx, {(((0,) * n, 0), ((0,) * n, 1)): Fraction(1)})

    @classmethod
    def from_tensor(cls, ctx: OreContext, t: TensorRR) -> "EnvElem":
        """Embed an element of R (x) R (no x on either side)."""
        if t.n != ctx.nvars:
            raise ValueError("tensor-square element of a different ring")
        n = ctx.nvars
        acc = {}
        for exponents, coefficient in t.poly.terms.items():
            key = ((exponents[:n], 0), (exponents[n:], 0))
            acc[key] = coefficient
        return cls(ctx, acc)

    @classmethod
    def from_ore_pair(cls, left, right) -> "EnvElem":
        """left (x) right for normal-form Ore elements over one context."""
        if left.ctx != right.ctx:
            raise ValueError("tensor factors over different Ore extensions")
        ctx = left.ctx
        acc: dict = {}
        for i, cl in enumerate(left.coeffs):
            for el, al in cl.terms.items():
                for j, cr in enumerate(right.coeffs):
                    for er, ar in cr.terms.items():
                        key = ((el, i), (er, j))
                        acc[key] = acc.get(key, Fraction(0)) + al * ar
        return cls(ctx, acc)

    # ------------------------------------------------------------ arithmetic

    def _check(self, other: "EnvElem"):
        if self.ctx != other.ctx:
            raise ValueError("enveloping-algebra elements over different contexts")

    def __add__(self, other):
        if not isinstance(other, EnvElem):
            return NotImplemented
        self._check(other)
        acc = dict(self.terms)
        for key, coefficient in other.terms.items():
            total = acc.get(key, Fraction(0)) + coefficient
            if total:
                acc[key] = total
            else:
                acc.pop(key, None)
        return EnvElem(self.ctx, acc)

    def __neg__(self):
        return EnvElem(self.ctx, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        if not isinstance(other, EnvElem):
            return NotImplemented
        return self + (-other)

    def scaled(self, scalar) -> "EnvElem":
        scalar = Fraction(scalar)
        return EnvElem(self.ctx, {k: c * scalar for k, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scaled(other)
        if not isinstance(other, EnvElem):
            return NotImplemented
        self._check(other)
        ctx = self.ctx
        left_cache: dict = {}
        right_cache: dict = {}
        acc: dict = {}
        for (lkey1, rkey1), c1 in self.terms.items():
            for (lkey2, rkey2), c2 in other.terms.items():
                lpair = (lkey1, lkey2)
                if lpair not in left_cache:
                    left_cache[lpair] = _ore_monomial_mul(ctx, *lkey1, *lkey2)
                rpair = (rkey2, rkey1)  # opposite multiplication on the right
                if rpair not in right_cache:
                    right_cache[rpair] = _ore_monomial_mul(ctx, *rkey2, *rkey1)
                weight = c1 * c2
                for le, ld, lc in left_cache[lpair]:
                    for re, rd, rc in right_cache[rpair]:
                        key = ((le, ld), (re, rd))
                        total = acc.get(key, Fraction(0)) + weight * lc * rc
                        if total:
                            acc[key] = total
                        else:
                            del acc[key]
        return EnvElem(ctx, acc)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scaled(other)
        return NotImplemented

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other):
        if not isinstance(other, EnvElem):
            return NotImplemented
        return self.ctx == other.ctx and self.terms == other.terms

    def __repr__(self):
        return f"EnvElem({len(self.terms)} terms)"


# -------------------------------------------------------------------- chain elements


class ChainElem:
    """A degree-p element of the free enveloping-module complex.

    Maps strictly increasing 1-based index tuples of length p to
    enveloping-algebra coefficients (multiplying the basis from the left).
    """

    __slots__ = ("ctx", "degree", "terms")

    def __init__(self, ctx: OreContext, degree: int, terms=None):
        n = ctx.nvars
        if degree < 0:
            raise ValueError("chain degree must be nonnegative")
        clean: dict = {}
        for key, coefficient in (terms or {}).items():
            key = tuple(key)
            if len(key) != degree:
                raise ValueError(f"index tuple {key} has wrong length for degree {degree}")
            if any(not 1 <= i <= n for i in key):
                raise ValueError(f"index tuple {key} out of range 1..{n}")
            if any(a >= b for a, b in zip(key, key[1:])):
                raise ValueError(f"index tuple {key} is not strictly increasing")
            if not isinstance(coefficient, EnvElem):
                raise TypeError("chain coefficients must be enveloping-algebra elements")
            if not coefficient.is_zero:
                clean[key] = coefficient
        self.ctx = ctx
        self.degree = degree
        self.terms = clean

    @classmethod
    def zero(cls, ctx: OreContext, degree: int) -> "ChainElem":
        return cls(ctx, degree, {})

    @classmethod
    def basis(cls, ctx: OreContext, indices) -> "ChainElem":
        indices = tuple(indices)
        return cls(ctx, len(indices), {indices: EnvElem.one(ctx)})

    def __add__(self, other):
        if not isinstance(other, ChainElem):
            return NotImplemented
        if self.ctx != other.ctx or self.degree != other.degree:
            raise ValueError("chain elements of different type")
        acc = dict(self.terms)
        for key, coefficient in other.terms.items():
            if key in acc:
                acc[key] = acc[key] + coefficient
            else:
                acc[key] = coefficient
        return ChainElem(self.ctx, self.degree, acc)

    def __neg__(self):
        return ChainElem(
            self.ctx, self.degree, {k: -c for k, c in self.terms.items()}
        )

    def __sub__(self, other):
        if not isinstance(other, ChainElem):
            return NotImplemented
        return self + (-other)

    def left_mul(self, env: EnvElem) -> "ChainElem":
        """Multiply every coefficient by ``env`` from the left."""
        return ChainElem(
            self.ctx, self.degree, {k: env * c for k, c in self.terms.items()}
        )

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other):
        if not isinstance(other, ChainElem):
            return NotImplemented
        return (
            self.ctx == other.ctx
            and self.degree == other.degree
            and self.terms == other.terms
        )

    def __repr__(self):
        support = sorted(self.terms)
        return f"ChainElem(degree={self.degree}, support={support})"


def _one_form_env(ctx: OreContext, i: int, twisted: bool) -> EnvElem:
    if twisted:
        form = twisted_one_form(ctx.sigma.forward, i)
    else:
        form = nc_one_form(Polynomial.variable(ctx.nvars, i - 1))
    return EnvElem.from_tensor(ctx, form)


def koszul_d(element: ChainElem, twisted: bool = False) -> ChainElem:
    """The Koszul boundary: alternating one-form left-multiplications.

    On a basis tuple (i_1 < ... < i_p) the image is
    sum_v (-1)^v dz_{i_v} e_{i_1 .. without i_v .. i_p}, with the plain
    one-forms, or the sigma-twisted ones when ``twisted`` is set.
    """
    ctx = element.ctx
    if element.degree == 0:
        raise ValueError("degree-0 elements have no boundary")
    out: dict = {}
    for key, coefficient in element.terms.items():
        for position, index in enumerate(key, start=1):
            rest = key[:position - 1] + key[position:]
            form = _one_form_env(ctx, index, twisted)
            term = coefficient * form
            if position % 2:
                term = -term
            if rest in out:
                out[rest] = out[rest] + term
            else:
                out[rest] = term
    return ChainElem(ctx, element.degree - 1, out)


def _sorted_with_sign(prefix: int, rest):
    """Sort (prefix, *rest) with rest already increasing; None if repeated."""
    if prefix in rest:
        return None, 0
    smaller = sum(1 for r in rest if r < prefix)
    sign = -1 if smaller % 2 else 1
    merged = tuple(sorted((prefix,) + tuple(rest)))
    return merged, sign


def lift_rho(case: str, element: ChainElem) -> ChainElem:
    """Degree-p lifting of 1 (x) 1 -> x (x) 1 - 1 (x) x between the complexes.

    ``case`` selects the closed formula: "trimmed" (delta = 0) uses the
    noncommutative Jacobian minors, "differential" (sigma = id) uses the
    partial differences of the delta images.  The mixed case has no closed
    lifting here and is rejected.
    """
    ctx = element.ctx
    n = ctx.nvars
    p = element.degree
    if case == "trimmed":
        if not ctx.is_trimmed:
            raise ValueError("trimmed lifting requires delta = 0")
    elif case == "differential":
        if not ctx.is_differential:
            raise ValueError("differential lifting requires sigma = id")
    else:
        raise ValueError(f"unknown lifting case {case!r}")

    x_l = EnvElem.x_left(ctx)
    x_r = EnvElem.x_right(ctx)
    out: dict = {}

    def accumulate(key, value: EnvElem):
        if key in out:
            out[key] = out[key] + value
        else:
            out[key] = value

    if case == "trimmed":
        sigma_endo = ctx.sigma.forward
        column_tuples = list(itertools.combinations(range(1, n + 1), p))
        for key, coefficient in element.terms.items():
            accumulate(key, coefficient * x_l)
            for cols in column_tuples:
                minor = nc_jacobian_minor(sigma_endo, key, cols)
                if minor.is_zero:
                    continue
                term = coefficient * (x_r * EnvElem.from_tensor(ctx, minor))
                accumulate(cols, -term)
    else:
        for key, coefficient in element.terms.items():
            accumulate(key, coefficient * (x_l - x_r))
            for position, index in enumerate(key, start=1):
                rest = key[:position - 1] + key[position:]
                image = ctx.delta.images[index - 1]
                for s in range(1, n + 1):
                    part = delta_p(image, s)
                    if part.is_zero:
                        continue
                    merged, sort_sign = _sorted_with_sign(s, rest)
                    if merged is None:
                        continue
                    sign = sort_sign * (-1 if position % 2 else 1)
                    term = (coefficient * EnvElem.from_tensor(ctx, part)).scaled(sign)
                    accumulate(merged, term)
    return ChainElem(ctx, p, out)


def cone_d(case: str, pair):
    """Mapping-cone boundary: (u', v) -> (-d'(u'), rho(u') + d(v)).

    ``pair`` is (twisted-side element of degree p-1, plain-side element of
    degree p).  The sign on d' is what makes the composite vanish given the
    chain-map identity; below the bottom the twisted side is represented by
    a degree-0 zero.
    """
    twisted_part, plain_part = pair
    ctx = plain_part.ctx
    p = plain_part.degree
    if twisted_part.degree != max(p - 1, 0) or (p == 0 and not twisted_part.is_zero):
        raise ValueError("cone components must have degrees (p-1, p)")
    if twisted_part.degree >= 1:
        new_twisted = -koszul_d(twisted_part, twisted=True)
    else:
        new_twisted = ChainElem.zero(ctx, 0)
    new_plain = lift_rho(case, twisted_part)
    if p >= 1:
        new_plain = new_plain + koszul_d(plain_part, twisted=False)
    return (new_twisted, new_plain)


def verify_chain_map(
    ctx: OreContext,
    case: str | None = None,
    *,
    max_vars: int = 3,
    max_image_degree: int = 3,
) -> CheckReport:
    """Symbolically verify every complex identity on every basis element.

    Checks, in order: d o d = 0 for the plain Koszul complex, the twisted
    complex, the chain-map condition rho d' = d rho in every degree, the
    mapping-cone boundary squaring to zero, and the closed form of the top
    boundary matrix.  Limits exist because the basis count grows as 2^n;
    raise them explicitly for larger experiments.
    """
    n = ctx.nvars
    if case is None:
        case = ctx.case_tag
    if case == "general":
        raise ValueError("no closed lifting for the mixed case; pick trimmed or differential")
    if n > max_vars:
        raise ValueError(f"verification capped at {max_vars} variables (got {n})")
    degree_cap = max(
        [image.total_degree() for image in ctx.sigma.forward.images]
        + [image.total_degree() for image in ctx.delta.images]
    )
    if degree_cap > max_image_degree:
        raise ValueError(
            f"verification capped at image degree {max_image_degree} (got {degree_cap})"
        )

    report = CheckReport()

    def tuples(p):
        return list(itertools.combinations(range(1, n + 1), p))

    for twisted in (False, True):
        label = "twisted" if twisted else "plain"
        for p in range(2, n + 1):
            ok = True
            for key in tuples(p):
                basis = ChainElem.basis(ctx, key)
                composite = koszul_d(koszul_d(basis, twisted), twisted)
                if not composite.is_zero:
                    ok = False
            report.add(f"{label} d o d = 0 in degree {p}", ok)

    for p in range(1, n + 1):
        ok = True
        for key in tuples(p):
            basis = ChainElem.basis(ctx, key)
            left = lift_rho(case, koszul_d(basis, twisted=True))
            right = koszul_d(lift_rho(case, basis), twisted=False)
            if left != right:
                ok = False
        report.add(f"chain map rho d' = d rho in degree {p}", ok)

    for p in range(2, n + 2):
        ok = True
        cone_basis = [
            (ChainElem.basis(ctx, key), ChainElem.zero(ctx, p))
            for key in tuples(p - 1)
        ] + [
            (ChainElem.zero(ctx, p - 1), ChainElem.basis(ctx, key))
            for key in tuples(p)
        ]
        for pair in cone_basis:
            once = cone_d(case, pair)
            twice = cone_d(case, once)
            if not (twice[0].is_zero and twice[1].is_zero):
                ok = False
        report.add(f"cone boundary squares to zero in degree {p}", ok)

    report.add("top boundary matrix matches closed form", _check_top_matrix(ctx, case))
    return report


def _check_top_matrix(ctx: OreContext, case: str) -> bool:
    """Compare the top cone differential with its stated matrix entries.

    In the assembled presentation the image of the top twisted basis element
    has plain-side coefficient ``x (x) 1 - (1 (x) x) * (nc Jacobian)`` (or
    ``x (x) 1 - 1 (x) x - sum Delta_u(delta_u)`` in the differential case)
    and twisted-side coefficients ``(-1)^i`` times the (twisted) generator
    one-forms.
    """
    n = ctx.nvars
    full = tuple(range(1, n + 1))
    top = ChainElem.basis(ctx, full)

    mapped = lift_rho(case, top)
    if set(mapped.terms) - {full}:
        return False
    actual_plain = mapped.terms.get(full, EnvElem.zero(ctx))

    x_l = EnvElem.x_left(ctx)
    x_r = EnvElem.x_right(ctx)
    if case == "trimmed":
        expected_plain = x_l - x_r * EnvElem.from_tensor(ctx, nc_jacobian(ctx.sigma.forward))
    else:
        trace = EnvElem.zero(ctx)
        for u in range(1, n + 1):
            trace = trace + EnvElem.from_tensor(ctx, delta_p(ctx.delta.images[u - 1], u))
        expected_plain = x_l - x_r - trace
    if actual_plain != expected_plain:
        return False

    boundary = koszul_d(top, twisted=True)
    for position in range(1, n + 1):
        rest = full[:position - 1] + full[position:]
        expected = _one_form_env(ctx, position, twisted=True)
        if position % 2:
            expected = -expected
        if boundary.terms.get(rest, EnvElem.zero(ctx)) != expected:
            return False
    return True
