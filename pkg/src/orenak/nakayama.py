"""The Nakayama automorphism of E = R[x; sigma, delta] by closed formula.

For a polynomial base ring the Nakayama automorphism nu restricts to
sigma^(-1) on R and sends x to ``J x + b`` where J is the constant Jacobian
determinant of sigma and b depends on the case:

* sigma = id (differential case): J = 1 and b is the divergence of delta.
* delta = 0 (trimmed case): b = 0.
* otherwise: b = J kappa - sigma_q^(-1)(kappa), which is always a
  polynomial even though both summands usually are not.

E is Calabi-Yau exactly when nu is the identity, i.e. sigma = id and the
divergence of delta vanishes.  Everything here is verified symbolically:
:func:`verify_automorphism` re-derives the defining relation generator by
generator, and :func:`kappa_drift` checks that iterating sigma_q on kappa
moves it by J-power scalings only modulo R.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .checks import CheckReport
from .endo import Automorphism, PolyEndo, compose
from .ore import OreContext, OrePoly
from .poly import Polynomial, RationalFunction, partial_derivative
from .skew import SkewDerivation, compute_kappa

__all__ = [
    "KappaDriftViolation",
    "NakayamaData",
    "NotDifferentialError",
    "compute_nakayama",
    "divergence",
    "is_calabi_yau",
    "kappa_drift",
    "nakayama_order",
    "verify_automorphism",
]


class NotDifferentialError(ValueError):
    """Divergence requested for a derivation that is not an ordinary one."""


class KappaDriftViolation(AssertionError):
    """sigma_q^r(kappa) - J^(-r) kappa failed to be a polynomial."""


def divergence(delta: SkewDerivation) -> Polynomial:
    """Sum of d(delta_u)/d(z_u); only defined when sigma is the identity."""
    if not delta.sigma.is_identity:
        raise NotDifferentialError(
            "divergence is defined for ordinary derivations (sigma = id) only"
        )
    n = delta.nvars
    total = Polynomial.zero(n)
    for u in range(n):
        total = total + partial_derivative(delta.images[u], u + 1)
    return total


@dataclass
class NakayamaData:
    """The Nakayama automorphism nu of E, in closed form.

    ``on_r`` is nu restricted to the base ring (sigma^(-1));
    ``nu(x) = lam * x + b``.  ``kappa`` is carried along when sigma != id
    so iteration formulas can reuse it.
    """

    sigma: Automorphism
    delta: SkewDerivation
    on_r: Automorphism
    lam: Fraction
    b: Polynomial
    case_tag: str
    kappa: Optional[RationalFunction]

    @property
    def nvars(self) -> int:
        return self.sigma.nvars

    def context(self) -> OreContext:
        return OreContext(self.sigma, self.delta)

    def nu_x(self, ctx: Optional[OreContext] = None) -> OrePoly:
        """nu(x) = lam*x + b as an element of E."""
        if ctx is None:
            ctx = self.context()
        n = self.nvars
        return OrePoly(ctx, [self.b, Polynomial.constant(n, self.lam)])

    def apply_poly(self, f: Polynomial) -> Polynomial:
        return self.on_r.apply(f)

    def apply_ore(self, element: OrePoly) -> OrePoly:
        """nu applied to a normal-form element: sum nu(f_i) nu(x)^i."""
        ctx = element.ctx
        image_x = self.nu_x(ctx)
        result = ctx.zero()
        power = ctx.one()
        for i, coefficient in enumerate(element.coeffs):
            if i:
                power = power * image_x
            if not coefficient.is_zero:
                result = result + ctx.from_base(self.apply_poly(coefficient)) * power
        return result

    @property
    def is_identity(self) -> bool:
        return self.on_r.is_identity and self.lam == 1 and self.b.is_zero


def compute_nakayama(sigma: Automorphism, delta: SkewDerivation) -> NakayamaData:
    """nu by the case-split closed formula; the general-case b must clear
    its denominators, and a failure there is raised rather than patched."""
    if delta.sigma != sigma:
        raise ValueError("delta was built over a different sigma")
    n = sigma.nvars
    on_r = sigma.inverted()
    if sigma.is_identity:
        return NakayamaData(
            sigma=sigma,
            delta=delta,
            on_r=on_r,
            lam=Fraction(1),
            b=divergence(delta),
            case_tag="differential",
            kappa=None,
        )
    jacobian = sigma.jacobian
    kappa = compute_kappa(sigma, delta)
    if delta.is_zero:
        return NakayamaData(
            sigma=sigma,
            delta=delta,
            on_r=on_r,
            lam=jacobian,
            b=Polynomial.zero(n),
            case_tag="trimmed",
            kappa=kappa,
        )
    drift = jacobian * kappa - sigma.apply_ratfunc_inverse(kappa)
    if not drift.is_polynomial:
        raise AssertionError(
            "J*kappa - sigma_q^(-1)(kappa) failed to be a polynomial; "
            "this contradicts the closed formula's integrality"
        )
    return NakayamaData(
        sigma=sigma,
        delta=delta,
        on_r=on_r,
        lam=jacobian,
        b=drift.as_polynomial(),
        case_tag="general",
        kappa=kappa,
    )


@dataclass
class CalabiYauResult:
    is_cy: bool
    reason: str


def is_calabi_yau(sigma: Automorphism, delta: SkewDerivation) -> CalabiYauResult:
    """E is Calabi-Yau iff nu = id iff sigma = id and div(delta) = 0."""
    if not sigma.is_identity:
        return CalabiYauResult(False, "sigma is not the identity, so nu moves the base ring")
    div = divergence(delta)
    if not div.is_zero:
        return CalabiYauResult(False, f"divergence of delta is {div}, so nu(x) = x + {div} != x")
    return CalabiYauResult(True, "sigma = id and delta is divergence-free, so nu = id")


def verify_automorphism(nu: NakayamaData) -> CheckReport:
    """Re-derive nu's defining relation symbolically, generator by generator.

    For each generator the identity nu(x) nu(z_i) - nu(sigma_i) nu(x) -
    nu(delta_i) must vanish in E; this is exactly compatibility of nu with
    the commutation rule x z_i = sigma_i x + delta_i.
    """
    report = CheckReport()
    ctx = nu.context()
    image_x = nu.nu_x(ctx)
    n = nu.nvars
    for i in range(n):
        z_i = Polynomial.variable(n, i)
        sigma_i = nu.sigma.forward.images[i]
        delta_i = nu.delta.images[i]
        lhs = (
            image_x * ctx.from_base(nu.apply_poly(z_i))
            - ctx.from_base(nu.apply_poly(sigma_i)) * image_x
            - ctx.from_base(nu.apply_poly(delta_i))
        )
        report.add(
            f"relation for z{i + 1}",
            lhs.is_zero,
            "" if lhs.is_zero else f"residual {lhs}",
        )
    return report


def nakayama_order(nu: NakayamaData, max_iter: int = 64):
    """Smallest r >= 1 with nu^r = id on R and on x, or None past max_iter."""
    ctx = nu.context()
    x = ctx.x()
    identity = PolyEndo.identity(nu.nvars)
    current_r = nu.on_r.forward
    current_x = nu.apply_ore(x)
    for r in range(1, max_iter + 1):
        if current_r == identity and current_x == x:
            return r
        current_r = compose(nu.on_r.forward, current_r)
        current_x = nu.apply_ore(current_x)
    return None


def kappa_drift(sigma: Automorphism, kappa: RationalFunction, r: int) -> Polynomial:
    """sigma_q^r(kappa) - J^(-r) * kappa, which must land in R for every r.

    Raises :class:`KappaDriftViolation` if the difference is not a
    polynomial; that would contradict the drift identity, so it is
    surfaced loudly rather than returned as data.
    """
    jacobian = sigma.jacobian
    moved = sigma.ratfunc_power(kappa, r)
    scale = jacobian ** (-r)
    difference = moved - kappa * scale
    if not difference.is_polynomial:
        raise KappaDriftViolation(
            f"sigma_q^{r}(kappa) - J^({-r})*kappa = {difference} is not a polynomial"
        )
    return difference.as_polynomial()
