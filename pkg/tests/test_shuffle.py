import itertools
import random

import pytest

from qshuffle.cartan import preset
from qshuffle.scalars import Scalar, q_power
from qshuffle.shuffle import (
    ShuffleElement, generator, orbit_to_element, shift, shuffle_mul,
    slope_negative_membership, symmetric_monomial_orbits, wheel_membership,
    _wheel_divisibility_violations, _wheel_vanishing_violations,
)

one = Scalar.one()
A1 = preset("A1")
A2 = preset("A2")


def test_generator_shapes():
    e = generator(A1, 0, 0)
    assert e.degree == (1,) and e.num == {(0,): one}
    e2 = generator(A2, 1, -3)
    assert e2.degree == (0, 1) and e2.num == {(-3,): one}


def test_unit_is_identity():
    e = generator(A2, 0, 2)
    u = ShuffleElement.unit(A2)
    assert shuffle_mul(e, u) == e
    assert shuffle_mul(u, e) == e


def test_ee_classic_value():
    e = generator(A1, 0, 0)
    prod = shuffle_mul(e, e)
    assert prod.degree == (2,)
    assert prod.num == {(0, 0): one + q_power(-2)}


def test_degree_additivity():
    e1 = generator(A1, 0, 2)
    e2 = generator(A1, 0, 3)
    prod = shuffle_mul(e1, e2)
    lo, hi = prod.homdeg_range()
    assert lo == hi == 5
    assert prod.degree == (2,)


def test_color_symmetry_of_products():
    rng = random.Random(1)
    for cartan in (A1, A2):
        for _ in range(5):
            gens = [generator(cartan, rng.randrange(cartan.rank), rng.randint(-2, 2))
                    for _ in range(3)]
            p = shuffle_mul(shuffle_mul(gens[0], gens[1]), gens[2])
            assert p.is_color_symmetric()


def test_associativity_random():
    rng = random.Random(42)
    for cartan in (A1, A2):
        for _ in range(25):
            g1, g2, g3 = (generator(cartan, rng.randrange(cartan.rank),
                                    rng.randint(-3, 3)) for _ in range(3))
            left = shuffle_mul(shuffle_mul(g1, g2), g3)
            right = shuffle_mul(g1, shuffle_mul(g2, g3))
            assert left == right


def test_shift_examples_and_homomorphism():
    e = generator(A1, 0, 0)
    assert shift(e, (1,), "plus") == generator(A1, 0, 1)
    assert shift(e, (0,), "plus") == e
    f = generator(A1, 0, 5)
    assert shift(f, (1,), "minus") == generator(A1, 0, 4)
    rng = random.Random(9)
    for _ in range(5):
        g1 = generator(A2, rng.randrange(2), rng.randint(-2, 2))
        g2 = generator(A2, rng.randrange(2), rng.randint(-2, 2))
        r = (rng.randint(-2, 2), rng.randint(-2, 2))
        assert shift(shuffle_mul(g1, g2), r) == shuffle_mul(shift(g1, r), shift(g2, r))


def test_wheel_rank1_trivial():
    F = ShuffleElement(A1, (2,), {(3, -1): one, (-1, 3): one})
    assert wheel_membership(F)


def test_wheel_constant_fails_in_a2():
    bad = ShuffleElement(A2, (2, 1), {(0, 0, 0): one})
    assert not wheel_membership(bad)


def test_wheel_generator_products_pass():
    rng = random.Random(3)
    for _ in range(8):
        gens = [generator(A2, rng.randrange(2), rng.randint(-1, 1)) for _ in range(3)]
        p = gens[0]
        for g in gens[1:]:
            p = shuffle_mul(p, g)
        assert wheel_membership(p)


def test_wheel_e1e1e2_passes():
    p = shuffle_mul(shuffle_mul(generator(A2, 0, 0), generator(A2, 0, 0)),
                    generator(A2, 1, 0))
    assert p.degree == (2, 1)
    assert wheel_membership(p)


def test_wheel_vanishing_and_divisibility_agree_on_a2():
    # A2 is both finite type and simply laced: the two characterizations
    # must agree on windowed orbit sums in degree (2, 1)
    rng = random.Random(7)
    orbits = symmetric_monomial_orbits((2, 1), 1)
    sample = rng.sample(orbits, 12)
    prods = [shuffle_mul(shuffle_mul(generator(A2, 0, d1), generator(A2, 0, d2)),
                         generator(A2, 1, d3))
             for d1, d2, d3 in [(0, 0, 0), (1, 0, -1)]]
    for el in [orbit_to_element(A2, (2, 1), o) for o in sample] + prods:
        v1 = not any(_wheel_vanishing_violations(el))
        v2 = not any(_wheel_divisibility_violations(el))
        assert v1 == v2


def test_wheel_affine_a1_divisibility_only():
    # d_12 = -2: no window bites at degree (1,1) (the two zeta-numerator
    # loci are comaximal there), first conditions appear at degree (2,2)
    a1h = preset("A1~")
    e = generator(a1h, 0, 0)
    f = generator(a1h, 1, 0)
    p = shuffle_mul(e, f)
    assert wheel_membership(p)
    const11 = ShuffleElement(a1h, (1, 1), {(0, 0): one})
    assert wheel_membership(const11)
    const22 = ShuffleElement(a1h, (2, 2), {(0, 0, 0, 0): one})
    assert not wheel_membership(const22)
    p4 = shuffle_mul(shuffle_mul(p, e), f)
    assert p4.degree == (2, 2)
    assert wheel_membership(p4)


def test_slope_membership_examples():
    F1 = ShuffleElement(A1, (1,), {(-1,): one})
    assert not slope_negative_membership(F1)
    F2 = ShuffleElement(A1, (1,), {(1,): one})
    assert slope_negative_membership(F2)
    F3 = ShuffleElement(A1, (2,), {(1, 1): one})
    assert slope_negative_membership(F3)


def test_slope_cross_color_denominator_counting():
    # in degree (1,1) the constant numerator has valuation 0 - 1 = -1 < 1
    F = ShuffleElement(A2, (1, 1), {(0, 0): one})
    assert not slope_negative_membership(F)
    # z_{1,1} z_{2,1}: every block valuation is >= 1 once the single
    # cross-color denominator factor is discounted
    G = ShuffleElement(A2, (1, 1), {(1, 1): one})
    assert slope_negative_membership(G)


def test_orbit_elements_are_symmetric():
    for orbit in symmetric_monomial_orbits((2, 1), 1)[:10]:
        el = orbit_to_element(A2, (2, 1), orbit)
        assert el.is_color_symmetric()
