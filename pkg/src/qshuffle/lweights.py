"""Rational l-weights, A-weights, prefundamental and tilde weights.

An l-weight is an I-tuple of rational functions in z that are regular and
invertible at infinity.  Each component is stored in the factored form
c * z^v * prod(z - zero) / prod(z - pole) with zeros and poles at nonzero
monomial points and v = #poles - #zeros (so the value at infinity is c).
Zeros/poles at z = 0 are carried by the z^v factor and encode ord.
"""
from __future__ import annotations

from .cartan import CartanDatum, Coweight
from .scalars import Point, Scalar, ZRational, q_power


class LWeightComponent:
    __slots__ = ("const", "zeros", "poles")

    def __init__(self, const: Scalar, zeros=(), poles=()):
        if const.is_zero():
            raise ValueError("l-weight components are invertible")
        zeros = list(zeros)
        poles = list(poles)
        # cancel common zero/pole points exactly
        for p in list(poles):
            if p in zeros:
                zeros.remove(p)
                poles.remove(p)
        self.const = const
        self.zeros = tuple(sorted(zeros, key=lambda p: p.sort_key()))
        self.poles = tuple(sorted(poles, key=lambda p: p.sort_key()))

    @property
    def valuation_at_zero(self) -> int:
        # z^v with v = #poles - #zeros keeps the component invertible at oo;
        # its valuation at z=0 is exactly v
        return len(self.poles) - len(self.zeros)

    def is_one(self):
        return self.const.is_one() and not self.zeros and not self.poles

    def is_constant(self):
        return not self.zeros and not self.poles

    def mul(self, other: "LWeightComponent") -> "LWeightComponent":
        return LWeightComponent(self.const * other.const,
                                self.zeros + other.zeros,
                                self.poles + other.poles)

    def inverse(self) -> "LWeightComponent":
        return LWeightComponent(self.const.inverse(), self.poles, self.zeros)

    def value(self) -> ZRational:
        ctx = self.const.ctx
        num = {self.valuation_at_zero: self.const}
        for p in self.zeros:
            num = _z1_mul_linear(num, p)
        den = {0: Scalar.one(ctx)}
        for p in self.poles:
            den = _z1_mul_linear(den, p)
        return ZRational(num, den, ctx)

    def key(self):
        return (self.const, self.zeros, self.poles)

    def __eq__(self, other):
        return isinstance(other, LWeightComponent) and self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def __repr__(self):
        bits = [repr(self.const)]
        v = self.valuation_at_zero
        if v:
            bits.append(f"z^{v}")
        for p in self.zeros:
            bits.append(f"(z - {p})")
        if self.poles:
            bits.append("/ " + " ".join(f"(z - {p})" for p in self.poles))
        return " ".join(bits)


def _z1_mul_linear(poly: dict, p: Point) -> dict:
    """Multiply a univariate Laurent coefficient map by (z - p)."""
    pv = p.to_scalar()
    out: dict = {}
    for k, c in poly.items():
        s = out.get(k + 1)
        out[k + 1] = c if s is None else s + c
        s = out.get(k)
        out[k] = -c * pv if s is None else s - c * pv
    return {k: v for k, v in out.items() if not v.is_zero()}


class LWeight:
    """I-tuple of invertible-at-infinity rational functions."""

    __slots__ = ("cartan", "components")

    def __init__(self, cartan: CartanDatum, components):
        components = tuple(components)
        if len(components) != cartan.rank:
            raise ValueError("one component per Dynkin node expected")
        self.cartan = cartan
        self.components = components

    @staticmethod
    def one(cartan) -> "LWeight":
        one = Scalar.one(cartan.ctx)
        return LWeight(cartan, [LWeightComponent(one) for _ in cartan.index_set])

    @staticmethod
    def constant(cartan, consts) -> "LWeight":
        return LWeight(cartan, [LWeightComponent(c) for c in consts])

    def mul(self, other: "LWeight") -> "LWeight":
        return LWeight(self.cartan, [a.mul(b) for a, b in
                                     zip(self.components, other.components)])

    def inverse(self) -> "LWeight":
        return LWeight(self.cartan, [c.inverse() for c in self.components])

    def is_one(self):
        return all(c.is_one() for c in self.components)

    def is_constant_tuple(self):
        return all(c.is_constant() for c in self.components)

    def constant_tuple(self):
        if not self.is_constant_tuple():
            raise ValueError("not a constant l-weight")
        return tuple(c.const for c in self.components)

    def pole_points(self):
        out = []
        for c in self.components:
            out.extend(c.poles)
        return out

    def key(self):
        return tuple(c.key() for c in self.components)

    def __eq__(self, other):
        return isinstance(other, LWeight) and self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def __repr__(self):
        return "LWeight(" + "; ".join(repr(c) for c in self.components) + ")"


def ord_coweight(psi: LWeight) -> Coweight:
    """Pole orders at z = 0: r_i = -val_0(psi_i)."""
    return Coweight(-c.valuation_at_zero for c in psi.components)


def prefundamental(cartan, i: int, a: Point) -> LWeight:
    """psi_{i,a}: the i-th component is 1 - a/z = (z - a)/z."""
    one = Scalar.one(cartan.ctx)
    comps = []
    for j in cartan.index_set:
        if j == i:
            comps.append(LWeightComponent(one, zeros=(a,)))
        else:
            comps.append(LWeightComponent(one))
    return LWeight(cartan, comps)


def negative_prefundamental(cartan, i: int, a: Point) -> LWeight:
    return prefundamental(cartan, i, a).inverse()


def kr_weight(cartan, i: int, b: Point) -> LWeight:
    """q_i (z - b q_i^-1)/(z - b q_i): highest l-weight of the i-th
    fundamental module with spectral anchor b."""
    di = cartan.d_i[i]
    comps = []
    for j in cartan.index_set:
        if j == i:
            comps.append(LWeightComponent(q_power(di, cartan.ctx),
                                          zeros=(b.q_shift(-di),),
                                          poles=(b.q_shift(di),)))
        else:
            comps.append(LWeightComponent(Scalar.one(cartan.ctx)))
    return LWeight(cartan, comps)


def psi_tilde(cartan, i: int, a: Point) -> LWeight:
    """The reflected prefundamental weight: j-component
    prod_{s in {c_ij+2, c_ij+4, ..., -c_ij}} (1 - a q_i^s / z) for j != i and
    (1 - a/z)^(-1) for j = i."""
    one = Scalar.one(cartan.ctx)
    di = cartan.d_i[i]
    comps = []
    for j in cartan.index_set:
        if j == i:
            comps.append(LWeightComponent(one, poles=(a,)))
        else:
            cij = cartan.c[i][j]
            zeros = [a.q_shift(di * s) for s in range(cij + 2, -cij + 1, 2)]
            comps.append(LWeightComponent(one, zeros=zeros))
    return LWeight(cartan, comps)


def aweight_inverse(cartan, i: int, x: Point) -> LWeight:
    """A_{i,x}^(-1): j-component (z - x q^{d_ij})/(z q^{d_ij} - x)."""
    comps = []
    for j in cartan.index_set:
        d = cartan.d[i][j]
        if d == 0:
            comps.append(LWeightComponent(Scalar.one(cartan.ctx)))
        else:
            comps.append(LWeightComponent(q_power(-d, cartan.ctx),
                                          zeros=(x.q_shift(d),),
                                          poles=(x.q_shift(-d),)))
    return LWeight(cartan, comps)


def weight_constant(cartan, alpha) -> LWeight:
    """The constant l-weight [-alpha] = (q^{-(alpha, varsigma^j)})_j for a
    root-lattice vector alpha >= 0."""
    consts = []
    for j in cartan.index_set:
        pairing = sum(alpha[i] * cartan.d[i][j] for i in cartan.index_set)
        consts.append(q_power(-pairing, cartan.ctx))
    return LWeight.constant(cartan, consts)


def check_a_ratio(cartan, i: int, a: Point):
    """Compare [psi~_{i,a q_i^-2} psi_{i,a}^-1] / [psi~_{i,a} psi_{i,a q_i^2}^-1]
    against A_{i,a}^(-1); returns (holds_exactly, constant discrepancy tuple).

    The quotient is constant by exact cancellation; a ValueError from the
    constant extraction would mean it is not.
    """
    di = cartan.d_i[i]
    num = psi_tilde(cartan, i, a.q_shift(-2 * di)).mul(
        prefundamental(cartan, i, a).inverse())
    den = psi_tilde(cartan, i, a).mul(
        prefundamental(cartan, i, a.q_shift(2 * di)).inverse())
    ratio = num.mul(den.inverse())
    quotient = ratio.mul(aweight_inverse(cartan, i, x=a).inverse())
    discrepancy = quotient.constant_tuple()
    holds = all(c.is_one() for c in discrepancy)
    return holds, discrepancy


class LWeightMonomial:
    """A q-character term: an opaque highest-weight tag, a multiset of
    inverse A-weight factors, a constant tuple, and a root-lattice weight
    offset carried by constant [-beta] factors."""

    __slots__ = ("cartan", "base", "afactors", "consts", "offset")

    def __init__(self, cartan, base: LWeight | None, afactors=(), consts=None,
                 offset=None):
        self.cartan = cartan
        self.base = base
        self.afactors = tuple(sorted(afactors,
                                     key=lambda f: (f[0], f[1].sort_key())))
        if consts is None:
            consts = tuple(Scalar.one(cartan.ctx) for _ in cartan.index_set)
        self.consts = tuple(consts)
        self.offset = tuple(offset) if offset is not None else (0,) * cartan.rank

    @staticmethod
    def constant_weight(cartan, beta) -> "LWeightMonomial":
        """The term [-beta] for beta in N^I."""
        return LWeightMonomial(cartan, None,
                               consts=weight_constant(cartan, beta).constant_tuple(),
                               offset=beta)

    def mul(self, other: "LWeightMonomial") -> "LWeightMonomial":
        if self.base is not None and other.base is not None:
            base = self.base.mul(other.base)
        else:
            base = self.base if self.base is not None else other.base
        return LWeightMonomial(self.cartan, base,
                               self.afactors + other.afactors,
                               tuple(a * b for a, b in
                                     zip(self.consts, other.consts)),
                               tuple(a + b for a, b in
                                     zip(self.offset, other.offset)))

    def value(self) -> LWeight:
        out = self.base if self.base is not None else LWeight.one(self.cartan)
        out = out.mul(LWeight.constant(self.cartan, self.consts))
        for i, x in self.afactors:
            out = out.mul(aweight_inverse(self.cartan, i, x))
        return out

    def weight_drop(self):
        """Root-lattice weight offset: each A-factor of color i contributes
        -alpha_i, on top of any constant [-beta] factors."""
        drop = list(self.offset)
        for i, _ in self.afactors:
            drop[i] += 1
        return tuple(drop)

    def key(self):
        return (self.base.key() if self.base is not None else None,
                self.afactors, self.consts)

    def __eq__(self, other):
        return isinstance(other, LWeightMonomial) and self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def __repr__(self):
        bits = []
        if self.base is not None:
            bits.append("[psi]")
        if any(not c.is_one() for c in self.consts):
            bits.append("c" + repr(tuple(self.consts)))
        for i, x in self.afactors:
            bits.append(f"A^-1({i + 1},{x})")
        return "*".join(bits) if bits else "1"
