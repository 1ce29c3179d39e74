import random
from fractions import Fraction

import pytest

from qshuffle.scalars import (
    DEFAULT_CTX, GeneratorContext, Point, Poly, Scalar, ScalarDivisionError,
    ZRational, point_shift, poly_gcd, q_power, scalar_arith, taylor_at,
)

q = Scalar.gen("q")
a = Scalar.gen("a")
one = Scalar.one()


def rand_scalar(rng, ctx=DEFAULT_CTX, terms=3, deg=3):
    def rand_poly():
        t = {}
        for _ in range(rng.randint(1, terms)):
            e = tuple(rng.randint(0, deg) for _ in range(ctx.nvars))
            t[e] = Fraction(rng.randint(-5, 5), rng.randint(1, 4))
        p = Poly(ctx, {k: v for k, v in t.items() if v})
        return p

    num = rand_poly()
    den = Poly.zero(ctx)
    while den.is_zero():
        den = rand_poly()
    return Scalar(num, den)


def test_self_division_is_one():
    s = (q * q - one) / q
    assert scalar_arith(s, s, "/") == one


def test_partial_fraction_identity():
    s = (one / (one - q)) + (one / (one + q))
    assert s == Scalar.from_fraction(2) / (one - q * q)


def test_unit_inverse():
    assert q_power(2) * q_power(-2) == one


def test_division_by_zero_is_distinct_error():
    with pytest.raises(ScalarDivisionError):
        scalar_arith(one, Scalar.zero(), "/")


def test_field_axioms_on_random_scalars():
    rng = random.Random(7)
    for _ in range(25):
        x, y, z = (rand_scalar(rng) for _ in range(3))
        assert (x + y) + z == x + (y + z)
        assert (x * y) * z == x * (y * z)
        assert x * (y + z) == x * y + x * z
        assert x + y == y + x
        assert x * y == y * x
        if not x.is_zero():
            assert x * x.inverse() == one


def test_canonicalization_idempotent():
    rng = random.Random(11)
    for _ in range(20):
        s = rand_scalar(rng)
        t = Scalar(s.num, s.den)
        assert t.num == s.num and t.den == s.den


def test_gcd_normalized_and_correct():
    ctx = DEFAULT_CTX
    qp = Poly.gen(ctx, 0)
    ap = Poly.gen(ctx, 1)
    onep = Poly.const(ctx, 1)
    f = (qp * qp - onep) * ap
    g = (qp - onep) * ap * ap
    gg = poly_gcd(f, g)
    assert gg == (qp - onep) * ap


def test_point_arithmetic():
    ap = Point.gen("a")
    assert point_shift(ap, 2) == Point(1, (2, 1))
    assert point_shift(ap.q_shift(-1), 1) == ap
    p = Point(3, (0, 2))
    assert point_shift(p, 0) == p
    assert (ap * ap.inverse()) == Point.unit()
    assert ap.to_scalar() == a


def test_evaluate_oracle():
    rng = random.Random(3)
    vals = {"q": Fraction(3, 7), "a": Fraction(5, 2)}
    for _ in range(10):
        x, y = rand_scalar(rng), rand_scalar(rng)
        try:
            lhs = (x * y + x).evaluate(vals)
            rhs = x.evaluate(vals) * y.evaluate(vals) + x.evaluate(vals)
        except ScalarDivisionError:
            continue
        assert lhs == rhs


# -- taylor_at -------------------------------------------------------------

def test_taylor_simple_pole():
    ap = Point.gen("a")
    f = ZRational.linear(ap).inverse()  # 1/(z-a)
    pole, coeffs = taylor_at(f, ap, 0)
    assert pole == 1 and coeffs == []


def test_taylor_value_at_shifted_point():
    ap = Point.gen("a")
    z_over = ZRational({1: one}, {1: one})  # z/z = 1 placeholder
    f = ZRational({1: one}, {0: one}) * ZRational.linear(ap).inverse()  # z/(z-a)
    pole, coeffs = taylor_at(f, ap.q_shift(1), 1)
    assert pole == 0
    assert coeffs[0] == q / (q - one)
    del z_over


def test_taylor_geometric():
    ap = Point.gen("a")
    f = ZRational({-1: one}, {0: one})  # 1/z
    pole, coeffs = taylor_at(f, ap, 2)
    assert pole == 0
    assert coeffs[0] == a.inverse()
    assert coeffs[1] == -(a * a).inverse()


def test_taylor_matches_derivatives():
    # coefficient k equals the k-th derivative / k! of the regular part
    rng = random.Random(19)
    ap = Point.gen("a")
    for _ in range(5):
        c1 = Scalar.from_fraction(rng.randint(1, 4))
        c2 = Scalar.from_fraction(rng.randint(1, 5))
        # f = (c1*z^2 + c2) / (z - a q)
        f = ZRational({2: c1, 0: c2}, {0: one}) * ZRational.linear(ap.q_shift(1)).inverse()
        pole, coeffs = taylor_at(f, ap, 3)
        assert pole == 0
        # symbolic derivative oracle via difference quotients on the series:
        # evaluate f at a*(1+h) for h a fresh rational and compare expansions
        vals = {"q": Fraction(2, 3), "a": Fraction(7, 5)}
        h = Fraction(1, 997)
        x0 = Fraction(7, 5)
        fx = lambda x: ((c1.evaluate(vals) * x * x + c2.evaluate(vals))
                        / (x - vals["a"] * vals["q"]))
        approx = fx(x0 + h)
        series = sum(c.evaluate(vals) * h ** k for k, c in enumerate(coeffs))
        # cubic remainder bound: difference is O(h^3)
        assert abs(approx - series) < Fraction(1, 997 ** 3) * 10 ** 6


def test_multi_generator_context():
    ctx = GeneratorContext(2)
    a1 = Scalar.gen("a1", ctx)
    a2 = Scalar.gen("a2", ctx)
    s = (a1 + a2) * (a1 - a2)
    assert s == a1 * a1 - a2 * a2
