import random

from qshuffle.cartan import preset
from qshuffle.lweights import (
    LWeight, LWeightComponent, LWeightMonomial, aweight_inverse, check_a_ratio,
    kr_weight, negative_prefundamental, ord_coweight, prefundamental, psi_tilde,
    weight_constant,
)
from qshuffle.scalars import Point, Scalar, q_power, taylor_at

one = Scalar.one()
A1 = preset("A1")
A2 = preset("A2")
B2 = preset("B2")
a = Point.gen("a")


def test_ord_examples():
    assert tuple(ord_coweight(prefundamental(A1, 0, a))) == (1,)
    assert tuple(ord_coweight(negative_prefundamental(A1, 0, a))) == (-1,)
    assert tuple(ord_coweight(kr_weight(A1, 0, a))) == (0,)


def test_prefundamental_values():
    psi = prefundamental(A1, 0, a)
    f = psi.components[0].value()
    # (z-a)/z
    assert f.eval_at(a.q_shift(3)).is_zero() is False
    pole, coeffs = taylor_at(f, a, 1)
    assert pole == -1 and coeffs[0] == a.to_scalar().inverse()  # simple zero at a
    inv = psi.inverse().components[0].value()
    pole, _ = taylor_at(inv, a, 0)
    assert pole == 1
    psi2 = prefundamental(A2, 1, a.q_shift(1))
    assert psi2.components[0].is_one()
    assert not psi2.components[1].is_one()


def test_psi_tilde_components():
    t1 = psi_tilde(A1, 0, a)
    assert len(t1.components[0].poles) == 1  # z/(z-a)
    t2 = psi_tilde(A2, 0, a)
    # j=2 component: s in {1}: single zero at a q
    comp = t2.components[1]
    assert comp.zeros == (a.q_shift(1),) and not comp.poles
    # B2, i = long node (d_11 = 4, c_12 = -1): s in {1}: zero at a q_1 = a q^2
    tb = psi_tilde(B2, 0, a)
    assert tb.components[1].zeros == (a.q_shift(2),)
    # B2, i = short node (c_21 = -2): s in {0, 2}: zeros at a, a q^2
    tb2 = psi_tilde(B2, 1, a)
    assert tb2.components[0].zeros == (a, a.q_shift(2))


def test_aweight_inverse():
    w = aweight_inverse(A1, 0, a)
    comp = w.components[0]
    # (z - a q^2)/(z q^2 - a): constant q^-2, zero aq^2, pole aq^-2
    assert comp.const == q_power(-2)
    assert comp.zeros == (a.q_shift(2),)
    assert comp.poles == (a.q_shift(-2),)
    assert comp.value().value_at_infinity() == q_power(-2)
    # d_ij = 0 gives the trivial component
    a3 = preset("A3")
    w3 = aweight_inverse(a3, 0, a)
    assert w3.components[2].is_one()
    # ord of any A-weight inverse vanishes
    assert tuple(ord_coweight(w)) == (0,)
    assert tuple(ord_coweight(aweight_inverse(A2, 0, a))) == (0, 0)


def test_ord_homomorphism():
    rng = random.Random(4)
    for _ in range(6):
        ws = [prefundamental(A2, rng.randrange(2), a.q_shift(rng.randint(-2, 2))),
              negative_prefundamental(A2, rng.randrange(2), a.q_shift(1)),
              psi_tilde(A2, rng.randrange(2), a)]
        w1, w2 = rng.sample(ws, 2)
        assert (tuple(ord_coweight(w1.mul(w2)))
                == tuple(x + y for x, y in zip(ord_coweight(w1), ord_coweight(w2))))


def test_lweight_mul_commutative_associative_inverse():
    w1 = prefundamental(A2, 0, a)
    w2 = psi_tilde(A2, 1, a.q_shift(1))
    w3 = kr_weight(A2, 0, a.q_shift(-1))
    assert w1.mul(w2) == w2.mul(w1)
    assert w1.mul(w2.mul(w3)) == (w1.mul(w2)).mul(w3)
    assert w1.mul(w1.inverse()).is_one()
    assert w2.mul(w2.inverse()).is_one()


def test_check_a_ratio_constant_and_translation_invariant():
    for cartan in (A1, A2, B2):
        for i in cartan.index_set:
            holds, disc = check_a_ratio(cartan, i, a)
            # the quotient is a constant tuple; with these normalizations it
            # is (q^{d_ij})_j, not the identity
            assert not holds
            expected = tuple(q_power(cartan.d[i][j]) for j in cartan.index_set)
            assert disc == expected
            for k in (-1, 1):
                _, disc2 = check_a_ratio(cartan, i, a.q_shift(k))
                assert disc2 == disc


def test_a_ratio_zero_dij_component_trivial():
    a3 = preset("A3")
    _, disc = check_a_ratio(a3, 0, a)
    assert disc[2].is_one()  # d_13 = 0


def test_monomial_value_and_weight_drop():
    base = negative_prefundamental(A1, 0, a)
    m = LWeightMonomial(A1, base, afactors=[(0, a), (0, a.q_shift(-2))])
    assert m.weight_drop() == (2,)
    v = m.value()
    assert tuple(ord_coweight(v)) == (-1,)
    m2 = LWeightMonomial(A1, None, afactors=[(0, a)])
    assert m.mul(m2).weight_drop() == (3,)


def test_weight_constant():
    w = weight_constant(A1, (1,))
    assert w.constant_tuple() == (q_power(-2),)
    w2 = weight_constant(A2, (1, 0))
    assert w2.constant_tuple() == (q_power(-2), q_power(1))
