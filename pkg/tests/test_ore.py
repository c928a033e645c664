import random
from fractions import Fraction

import pytest

from orenak import (
    Automorphism,
    OreContext,
    Polynomial,
    RationalFunction,
    SkewDerivation,
    elementary_symmetric,
    from_shifted_basis,
    shifted_power,
    to_shifted_basis,
)

from instances import (
    q_scaling,
    random_differential,
    random_general,
    random_poly,
    random_trimmed,
    shear_example,
    weyl_example,
)

z1 = Polynomial.variable(2, 0)
z2 = Polynomial.variable(2, 1)


def random_ore(rng, ctx, max_xdeg=2, max_degree=2):
    coeffs = [
        random_poly(rng, ctx.nvars, max_degree)
        for _ in range(rng.randint(1, max_xdeg + 1))
    ]
    return ctx.poly(coeffs)


def random_ctx(rng):
    roll = rng.random()
    if roll < 0.4:
        return random_general(rng, 2)
    if roll < 0.7:
        return random_trimmed(rng, 2)
    return random_differential(rng, 2)


# ------------------------------------------------------------------ structure


def test_case_tags():
    assert weyl_example().case_tag == "differential"
    assert q_scaling(2).case_tag == "general"
    trimmed = OreContext(
        Automorphism.from_images([2 * z1, z2]),
        SkewDerivation.zero(Automorphism.from_images([2 * z1, z2])),
    )
    assert trimmed.case_tag == "trimmed"
    assert trimmed.is_trimmed and not trimmed.is_differential


def test_defining_relation_weyl():
    # x z = z x + 1 in the Weyl algebra
    ctx = weyl_example()
    z = ctx.from_base(Polynomial.variable(1, 0))
    x = ctx.x()
    assert x * z == z * x + ctx.one()


def test_defining_relation_general():
    # x f = sigma(f) x + delta(f)
    rng = random.Random(501)
    for _ in range(30):
        ctx = random_ctx(rng)
        f = random_poly(rng, 2, 3)
        lhs = ctx.x() * ctx.from_base(f)
        rhs = ctx.from_base(ctx.sigma.apply(f)) * ctx.x() + ctx.from_base(
            ctx.delta.apply(f)
        )
        assert lhs == rhs


def test_xdeg_and_coefficients():
    ctx = q_scaling(2)
    e = ctx.poly([z1, Polynomial.zero(2), Polynomial.one(2)])
    assert e.xdeg == 2
    assert e.coefficient(0) == z1
    assert e.coefficient(1).is_zero
    assert e.coefficient(2) == 1
    assert e.coefficient(5).is_zero
    assert ctx.zero().xdeg == -1


def test_trailing_zeros_trimmed():
    ctx = q_scaling(2)
    e = ctx.poly([z1, Polynomial.zero(2)])
    assert e.xdeg == 0
    assert e == ctx.from_base(z1)


def test_left_coefficient_convention():
    # q-plane relation: x z1 = 2 z1 x + 1, so (z1 x) * (z1 x) expands with
    # coefficients collected on the left
    ctx = q_scaling(2)
    e = ctx.from_base(z1) * ctx.x()
    square = e * e
    # z1 x z1 x = z1 (2 z1 x + 1) x = 2 z1^2 x^2 + z1 x
    assert square == ctx.poly(
        [Polynomial.zero(2), z1, 2 * z1 * z1]
    )


def test_associativity_and_distributivity_seeded():
    rng = random.Random(321)
    for _ in range(25):
        ctx = random_ctx(rng)
        a = random_ore(rng, ctx)
        b = random_ore(rng, ctx)
        c = random_ore(rng, ctx)
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert (a + b) * c == a * c + b * c


def test_power_matches_repeated_product():
    ctx = shear_example()
    e = ctx.x() + ctx.from_base(z1)
    assert e ** 3 == e * e * e
    assert e ** 0 == ctx.one()


def test_scalar_and_poly_coercion():
    ctx = q_scaling(2)
    assert ctx.x() * 2 == ctx.x() + ctx.x()
    assert ctx.x() + z1 == ctx.x() + ctx.from_base(z1)
    assert 3 + ctx.x() == ctx.x() + 3
    assert (ctx.x() - ctx.x()).is_zero


def test_quotient_field_version_requires_moving_sigma():
    ctx = weyl_example()
    with pytest.raises(ValueError, match="sigma != id"):
        ctx.x_q()


def test_to_q_embedding():
    ctx = q_scaling(2)
    e = ctx.poly([z1, z2])
    q = e.to_q()
    assert q.coefficient(0) == RationalFunction.from_poly(z1)
    assert q.is_polynomial()
    assert q.as_ore_poly() == e


def test_delta_q_restricts_to_delta():
    rng = random.Random(88)
    for _ in range(20):
        ctx = random_general(rng, 2)
        f = random_poly(rng, 2, 3)
        extended = ctx.derive_rat(RationalFunction.from_poly(f))
        assert extended == RationalFunction.from_poly(ctx.delta.apply(f))


# ------------------------------------------------------------- shifted powers


def test_elementary_symmetric_known():
    vals = [Fraction(1), Fraction(2), Fraction(3)]
    assert elementary_symmetric(3, 0, vals) == 1
    assert elementary_symmetric(3, 1, vals) == 6
    assert elementary_symmetric(3, 2, vals) == 11
    assert elementary_symmetric(3, 3, vals) == 6
    with pytest.raises(ValueError):
        elementary_symmetric(2, 1, vals)


def test_shifted_power_small_cases():
    ctx = q_scaling(2)
    xk = ctx.shifted_generator()
    assert shifted_power(ctx, 0) == ctx.one_q()
    assert shifted_power(ctx, 1) == xk
    assert shifted_power(ctx, 2) == xk * xk


def test_shifted_power_equals_direct_expansion_seeded():
    rng = random.Random(1234)
    for _ in range(8):
        ctx = random_general(rng, 2)
        xk = ctx.shifted_generator()
        acc = ctx.one_q()
        for r in range(0, 5):
            assert shifted_power(ctx, r) == acc
            acc = acc * xk


def test_x_squared_in_shifted_basis_qminus1():
    # sigma = (-z1, z2), kappa = 1/z1: x^2 = (x+kappa)^2 + 1/z1^2
    ctx = q_scaling(-1)
    coeffs = to_shifted_basis(ctx.x() * ctx.x())
    assert coeffs == [
        RationalFunction(Polynomial.one(2), z1 * z1),
        RationalFunction.zero(2),
        RationalFunction.one(2),
    ]


def test_shifted_basis_round_trip_seeded():
    rng = random.Random(55)
    for _ in range(15):
        ctx = random_general(rng, 2)
        e = random_ore(rng, ctx, max_xdeg=4)
        coeffs = to_shifted_basis(e)
        assert from_shifted_basis(ctx, coeffs) == e.to_q()
        assert len(coeffs) == e.xdeg + 1


def test_shifted_basis_unique():
    # two different elements cannot share a shifted expansion
    ctx = q_scaling(2)
    a = ctx.x() + ctx.from_base(z1)
    b = ctx.x() + ctx.from_base(z2)
    assert to_shifted_basis(a) != to_shifted_basis(b)
