"""Truncated character arithmetic: the ring of ordinary characters, the
normalization characters chi^mu, truncated q-characters, and the QQ-system
verifier.
"""
from __future__ import annotations

import itertools
from fractions import Fraction

from .cartan import (CartanClassError, CartanDatum, Coweight,
                     coweight_pairing, fundamental_coweight, positive_roots,
                     reflect_coweight)
from .lweights import (LWeight, LWeightMonomial, aweight_inverse,
                       prefundamental, psi_tilde, weight_constant)
from .scalars import Point, Scalar


class WeightSeries:
    """Formal sum of constant weights [-beta], beta in N^I (stored as the
    nonnegative coefficient tuple of beta in the simple roots), truncated at
    a total depth."""

    __slots__ = ("rank", "depth", "terms")

    def __init__(self, rank: int, depth: int, terms: dict | None = None):
        self.rank = rank
        self.depth = depth
        self.terms = {k: v for k, v in (terms or {}).items()
                      if v and sum(k) <= depth}

    @staticmethod
    def one(rank, depth):
        return WeightSeries(rank, depth, {(0,) * rank: 1})

    def mul(self, other: "WeightSeries") -> "WeightSeries":
        depth = min(self.depth, other.depth)
        out: dict = {}
        for b1, c1 in self.terms.items():
            for b2, c2 in other.terms.items():
                b = tuple(x + y for x, y in zip(b1, b2))
                if sum(b) > depth:
                    continue
                out[b] = out.get(b, 0) + c1 * c2
        return WeightSeries(self.rank, depth, out)

    def add(self, other: "WeightSeries") -> "WeightSeries":
        depth = min(self.depth, other.depth)
        out = dict(self.terms)
        for b, c in other.terms.items():
            out[b] = out.get(b, 0) + c
        return WeightSeries(self.rank, depth, out)

    def truncate(self, depth: int) -> "WeightSeries":
        return WeightSeries(self.rank, depth, self.terms)

    def coefficient(self, beta) -> int:
        return self.terms.get(tuple(beta), 0)

    def inverse(self) -> "WeightSeries":
        """Inverse of a series with constant term 1 (or -1)."""
        c0 = self.terms.get((0,) * self.rank, 0)
        if c0 not in (1, -1):
            raise ValueError("series inverse needs unit constant term")
        out = WeightSeries.one(self.rank, self.depth)
        if c0 == -1:
            raise ValueError("normalize the sign before inverting")
        rest = WeightSeries(self.rank, self.depth,
                            {b: -c for b, c in self.terms.items() if any(b)})
        power = WeightSeries.one(self.rank, self.depth)
        acc = WeightSeries.one(self.rank, self.depth)
        for _ in range(self.depth):
            power = power.mul(rest)
            if not power.terms:
                break
            acc = acc.add(power)
        return acc

    def __eq__(self, other):
        return (isinstance(other, WeightSeries) and self.terms == other.terms
                and self.depth == other.depth)

    def __repr__(self):
        if not self.terms:
            return "0"
        bits = []
        for b in sorted(self.terms, key=lambda t: (sum(t), t)):
            c = self.terms[b]
            label = "1" if not any(b) else "[-(" + ",".join(map(str, b)) + ")]"
            bits.append(f"{c}*{label}" if c != 1 or label == "1" else label)
        return " + ".join(bits)


def geometric_series(rank, depth, beta, power: int) -> WeightSeries:
    """(1 - [-beta])^(-power) truncated, power >= 0."""
    from math import comb
    if power == 0 or not any(beta):
        return WeightSeries.one(rank, depth)
    step = sum(beta)
    terms = {(0,) * rank: 1}
    k = 1
    while k * step <= depth:
        terms[tuple(k * b for b in beta)] = comb(k + power - 1, power - 1)
        k += 1
    return WeightSeries(rank, depth, terms)


def chi_mu(cartan: CartanDatum, mu, depth: int) -> WeightSeries:
    """prod over positive roots alpha of (1 - [-alpha])^(-max(0, <mu, alpha>))."""
    if not cartan.is_finite_type:
        raise CartanClassError("chi^mu requires a finite-type datum")
    out = WeightSeries.one(cartan.rank, depth)
    for alpha in positive_roots(cartan):
        e = max(0, coweight_pairing(mu, alpha))
        if e:
            out = out.mul(geometric_series(cartan.rank, depth, tuple(alpha), e))
    return out


class QCharacter:
    """Finite formal sum of l-weight monomials with integer multiplicities,
    truncated by the total number of inverse-A factors."""

    __slots__ = ("cartan", "n_max", "terms")

    def __init__(self, cartan, n_max: int, terms=None):
        self.cartan = cartan
        self.n_max = n_max
        self.terms = {}
        for mon, mult in (terms or {}).items():
            if mult and len(mon.afactors) <= n_max:
                self.terms[mon] = self.terms.get(mon, 0) + mult

    @staticmethod
    def single(cartan, base: LWeight, n_max: int) -> "QCharacter":
        return QCharacter(cartan, n_max,
                          {LWeightMonomial(cartan, base): 1})

    def add_term(self, mon: LWeightMonomial, mult: int):
        if len(mon.afactors) <= self.n_max and mult:
            self.terms[mon] = self.terms.get(mon, 0) + mult
            if not self.terms[mon]:
                del self.terms[mon]

    def mul(self, other: "QCharacter") -> "QCharacter":
        n_max = min(self.n_max, other.n_max)
        out = QCharacter(self.cartan, n_max)
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                if len(m1.afactors) + len(m2.afactors) > n_max:
                    continue
                out.add_term(m1.mul(m2), c1 * c2)
        return out

    def scale_term(self, unit: LWeightMonomial) -> "QCharacter":
        """Multiply every term by a fixed monomial (e.g. a constant
        [-beta])."""
        out = QCharacter(self.cartan, self.n_max)
        for m, c in self.terms.items():
            out.add_term(m.mul(unit), c)
        return out

    def value_map(self, *, depth=None):
        """Collect terms by the exact l-weight value of each monomial; this
        is the honest normal form, since q-character symbols are determined
        by their l-weight."""
        out: dict = {}
        for m, c in self.terms.items():
            if depth is not None and sum(m.weight_drop()) > depth:
                continue
            key = m.value().key()
            out[key] = out.get(key, 0) + c
        return {k: v for k, v in out.items() if v}

    def __eq__(self, other):
        return (isinstance(other, QCharacter)
                and self.value_map() == other.value_map())

    def __repr__(self):
        bits = [f"{c}*{m!r}" for m, c in self.terms.items()]
        return " + ".join(bits) if bits else "0"


def weight_image(qc: QCharacter, depth: int) -> WeightSeries:
    """Forget spectral parameters: each inverse-A factor of color i maps to
    [-alpha_i]."""
    rank = qc.cartan.rank
    out: dict = {}
    for m, c in qc.terms.items():
        b = m.weight_drop()
        if sum(b) <= depth:
            out[b] = out.get(b, 0) + c
    return WeightSeries(rank, depth, out)


def qq_constant(cartan: CartanDatum, i: int, depth: int) -> WeightSeries:
    """chi^{omega_i} chi^{s_i(omega_i)} (chi^{s_i(omega_i) + omega_i})^(-1),
    all truncated at the given depth."""
    w = fundamental_coweight(cartan, i)
    sw = reflect_coweight(cartan, i, w)
    num = chi_mu(cartan, w, depth).mul(chi_mu(cartan, sw, depth))
    den = chi_mu(cartan, Coweight(w) + Coweight(sw), depth)
    return num.mul(den.inverse())


# ---------------------------------------------------------------------------
# K_0-level classes through truncated q-characters
# ---------------------------------------------------------------------------

def class_qcharacter(cartan, psi: LWeight, depth: int, n_max: int,
                     K: int) -> QCharacter:
    """Truncated q-character of the full simple class [L(psi)]: the ordinary
    normalization character chi^{ord psi} times the non-constant part."""
    from .lweights import ord_coweight
    from .simples import qcharacter  # function-level: simples builds on us
    if not cartan.is_finite_type:
        raise CartanClassError("class characters require finite type")
    qc = qcharacter(cartan, psi, n_max=n_max, K=K)
    chi = chi_mu(cartan, ord_coweight(psi), depth)
    out = QCharacter(cartan, n_max)
    for beta, c in chi.terms.items():
        unit = LWeightMonomial.constant_weight(cartan, beta)
        for m, mult in qc.terms.items():
            if sum(m.weight_drop()) + sum(beta) > depth:
                continue
            out.add_term(m.mul(unit), c * mult)
    return out


def verify_qq(cartan: CartanDatum, i: int, a: Point, depth: int = 4,
              n_max: int = 3, K: int = 4):
    """Checks the QQ-system relation among the four simple classes attached
    to node i and spectral anchor a.  Characters are compared after
    collecting terms by exact l-weight value, on the region where both
    sides are complete: weight depth <= depth and A-degree <= n_max.

    Returns (holds, lhs QCharacter, rhs QCharacter)."""
    if not cartan.is_finite_type:
        raise CartanClassError("the QQ verifier requires finite type")
    di = cartan.d_i[i]

    def Q(b: Point) -> QCharacter:
        return class_qcharacter(cartan, prefundamental(cartan, i, b),
                                depth, n_max, K)

    def Qt(b: Point) -> QCharacter:
        return class_qcharacter(cartan, psi_tilde(cartan, i, b.q_shift(-2 * di)),
                                depth, n_max, K)

    lhs1 = Qt(a.q_shift(di)).mul(Q(a.q_shift(-di)))
    lhs2 = Qt(a.q_shift(-di)).mul(Q(a.q_shift(di)))
    alpha = tuple(1 if k == i else 0 for k in cartan.index_set)
    lhs2 = lhs2.scale_term(LWeightMonomial.constant_weight(cartan, alpha))
    lhs = QCharacter(cartan, min(lhs1.n_max, lhs2.n_max))
    for m, c in lhs1.terms.items():
        lhs.add_term(m, c)
    for m, c in lhs2.terms.items():
        lhs.add_term(m, -c)

    chi = qq_constant(cartan, i, depth)
    rhs = QCharacter(cartan, n_max)
    for beta, c in chi.terms.items():
        rhs.add_term(LWeightMonomial.constant_weight(cartan, beta), c)
    for j in cartan.index_set:
        if j == i:
            continue
        cij = cartan.c[i][j]
        for s in range(cij + 1, -cij, 2):
            rhs = rhs.mul(class_qcharacter(
                cartan, prefundamental(cartan, j, a.q_shift(di * s)),
                depth, n_max, K))

    lv = lhs.value_map(depth=depth)
    rv = rhs.value_map(depth=depth)
    return lv == rv, lhs, rhs
