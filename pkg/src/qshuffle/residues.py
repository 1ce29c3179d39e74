"""Exact residue engine on factored rational integrands.

An integrand is a Laurent numerator in the word variables z_0..z_{n-1}
divided by a multiset of linear binomial factors, each of the shape
(z_u - P z_v) or (z_u - P) with P a monomial Point.  This class of
functions is closed under the two contour operations we need:

* residue at a fixed monomial point (Taylor jets in t = z_u - x), and
* the z_u^0 coefficient along a circle that separates a prescribed set of
  fixed poles (inside) from the rest (outside), with every remaining
  variable on a larger circle.

Both are computed exactly; no series is ever truncated heuristically --
termination bounds come from the finite Laurent support of the numerator.
"""
from __future__ import annotations

from collections import Counter

from .scalars import Point, Scalar, binomial_fraction
from . import zpoly as zp


class Factor(tuple):
    """(u, v, P) meaning z_u - P*z_v, or (u, None, P) meaning z_u - P."""

    __slots__ = ()

    def __new__(cls, u, v, P):
        return super().__new__(cls, (u, v, P))

    @property
    def u(self):
        return self[0]

    @property
    def v(self):
        return self[1]

    @property
    def point(self):
        return self[2]

    def involves(self, w):
        return self[0] == w or self[1] == w

    def to_zp(self, nvars, one):
        eu = [0] * nvars
        eu[self[0]] = 1
        p = {tuple(eu): one}
        P = self[2]
        if self[1] is None:
            p[(0,) * nvars] = -P.to_scalar()
        else:
            ev = [0] * nvars
            ev[self[1]] = 1
            p[tuple(ev)] = -P.to_scalar()
        return p


class FR:
    """num / prod(den factors); immutable by convention."""

    __slots__ = ("nvars", "num", "den", "ctx")

    def __init__(self, nvars, num, den, ctx):
        self.nvars = nvars
        self.num = num
        self.den = tuple(sorted(den, key=_factor_key))
        self.ctx = ctx

    @staticmethod
    def constant(nvars, s: Scalar):
        return FR(nvars, zp.zp_const(nvars, s), (), s.ctx)

    def is_zero(self):
        return not self.num

    def scale(self, s: Scalar) -> "FR":
        return FR(self.nvars, zp.zp_scale(self.num, s), self.den, self.ctx)

    def mul_num_poly(self, p: dict) -> "FR":
        return FR(self.nvars, zp.zp_mul(self.num, p), self.den, self.ctx)

    def mul(self, other: "FR") -> "FR":
        return FR(self.nvars, zp.zp_mul(self.num, other.num),
                  self.den + other.den, self.ctx)

    def with_factor(self, f: Factor, power: int = 1) -> "FR":
        return FR(self.nvars, self.num, self.den + (f,) * power, self.ctx)

    def to_scalar(self) -> Scalar:
        if self.den:
            raise ValueError("integrand still carries denominator factors")
        if not self.num:
            return Scalar.zero(self.ctx)
        [(e, c)] = self.num.items()
        if any(e):
            raise ValueError("integrand still depends on a variable")
        return c

    def __repr__(self):
        return f"FR({len(self.num)} num terms / {len(self.den)} factors)"


def _factor_key(f):
    u, v, P = f
    return (u, -1 if v is None else v, P.sort_key())


def fr_zero(nvars, ctx):
    return FR(nvars, {}, (), ctx)


def fr_sum(terms) -> FR:
    """Sum of FRs over a common denominator (factor-multiset maximum)."""
    terms = [t for t in terms if not t.is_zero()]
    if not terms:
        raise ValueError("fr_sum needs the variable count; use fr_sum_n")
    return fr_sum_n(terms, terms[0].nvars, terms[0].ctx)


def fr_sum_n(terms, nvars, ctx) -> FR:
    terms = [t for t in terms if not t.is_zero()]
    if not terms:
        return fr_zero(nvars, ctx)
    common = Counter()
    for t in terms:
        c = Counter(t.den)
        for f, k in c.items():
            if common[f] < k:
                common[f] = k
    one = Scalar.one(ctx)
    total = {}
    for t in terms:
        missing = common - Counter(t.den)
        num = t.num
        for f, k in missing.items():
            fz = f.to_zp(nvars, one)
            for _ in range(k):
                num = zp.zp_mul(num, fz)
        total = zp.zp_add(total, num)
    den = tuple(common.elements())
    if not total:
        return fr_zero(nvars, ctx)
    return FR(nvars, total, den, ctx)


# ---------------------------------------------------------------------------
# residue at a fixed point: Taylor jets in t = z_u - x
# ---------------------------------------------------------------------------

def pole_order_at(fr: FR, u: int, x: Point) -> int:
    return sum(1 for f in fr.den if f.u == u and f.v is None and f.point == x)


def jets_at_point(fr: FR, u: int, x: Point):
    """Laurent coefficients of fr at z_u = x: returns (k, jets) with k the
    pole order and jets[j] the coefficient of (z_u - x)^(-1-j), j < k, as an
    FR in the remaining variables.  jets[0] is the residue."""
    k = pole_order_at(fr, u, x)
    if k == 0:
        return 0, []
    order = k  # need t^0..t^(k-1) of the regular part
    ctx = fr.ctx
    nvars = fr.nvars
    one = Scalar.one(ctx)
    xs = x.to_scalar()

    rest: list = []
    series_parts = []  # each: list of FR coefficients of t^0..t^(order-1)
    for f in fr.den:
        fu, fv, P = f
        if fu == u and fv is None and P == x:
            continue  # the exact t factor
        if not f.involves(u):
            rest.append(f)
            continue
        coeffs = []
        if fu == u and fv is None:
            # 1/((x - P) + t) = sum_m (-1)^m t^m / (x - P)^(m+1)
            base = (xs - P.to_scalar()).inverse()
            coeffs = [FR.constant(nvars, Scalar.from_fraction((-1) ** m, ctx)
                                  * (base ** (m + 1))) for m in range(order)]
        elif fu == u:
            # z_u - P z_v = -P (z_v - x/P) + t
            g = Factor(fv, None, x / P)
            pinv = P.inverse()
            for m in range(order):
                s = -((pinv ** (m + 1)).to_scalar())
                coeffs.append(FR(nvars, zp.zp_const(nvars, s), (g,) * (m + 1), ctx))
        else:
            # z_w - P z_u = (z_w - P x) - P t  (w = f.u survives, f.v = u)
            g = Factor(fu, None, P * x)
            for m in range(order):
                s = (P ** m).to_scalar()
                coeffs.append(FR(nvars, zp.zp_const(nvars, s), (g,) * (m + 1), ctx))
        series_parts.append(coeffs)

    # numerator as a t-series: (x+t)^e per z_u power
    num_series = [dict() for _ in range(order)]
    for e, c in fr.num.items():
        eu = e[u]
        base = list(e)
        base[u] = 0
        base = tuple(base)
        for m in range(order):
            b = binomial_fraction(eu, m)
            if b:
                coeff = c * (x ** (eu - m)).to_scalar() * Scalar.from_fraction(b, ctx)
                zp._zp_acc(num_series[m], base, coeff)
    series = [FR(nvars, num_series[m], tuple(rest), ctx) for m in range(order)]

    for part in series_parts:
        new = [fr_zero(nvars, ctx) for _ in range(order)]
        for i in range(order):
            if series[i].is_zero():
                continue
            for j in range(order - i):
                term = series[i].mul(part[j])
                new[i + j] = fr_sum_n([new[i + j], term], nvars, ctx)
        series = new

    # coefficient of t^(-1-j) in fr equals coefficient of t^(k-1-j) in the
    # regular part
    jets = [series[k - 1 - j] for j in range(k)]
    return k, jets


def residue_at_point(fr: FR, u: int, x: Point) -> FR:
    k, jets = jets_at_point(fr, u, x)
    if k == 0:
        return fr_zero(fr.nvars, fr.ctx)
    return jets[0]


# ---------------------------------------------------------------------------
# circle integrals: z_u^0 coefficient with a prescribed inside set
# ---------------------------------------------------------------------------

def fixed_poles(fr: FR, u: int):
    """Fixed points P carried by denominator factors (z_u - P)."""
    seen = []
    for f in fr.den:
        if f.u == u and f.v is None and f.point not in seen:
            seen.append(f.point)
    return seen


def circle_coefficient(fr: FR, u: int, inside=None) -> FR:
    """Integral over |z_u| = r of fr dz_u/(2 pi i z_u), where the circle
    encloses 0 and exactly the fixed poles selected by `inside`
    (a predicate on Points; None encloses nothing besides 0), while every
    remaining variable sits on a much larger circle.

    Computed as the z_u^0 coefficient of the expansion at z_u = 0 plus the
    residues of fr/z_u at the enclosed fixed poles."""
    parts = [_coeff_at_zero(fr, u)]
    if inside is not None:
        shift = [0] * fr.nvars
        shift[u] = -1
        shifted = FR(fr.nvars, zp.zp_shift(fr.num, tuple(shift)), fr.den, fr.ctx)
        for P in fixed_poles(fr, u):
            if inside(P):
                parts.append(residue_at_point(shifted, u, P))
    return fr_sum_n(parts, fr.nvars, fr.ctx)


def _coeff_at_zero(fr: FR, u: int) -> FR:
    """z_u^0 coefficient of the expansion around z_u = 0 with every
    denominator pole treated as outside (ascending series)."""
    ctx = fr.ctx
    nvars = fr.nvars
    rest = []
    expanders = []  # (series coefficient factory) per factor involving u
    for f in fr.den:
        if not f.involves(u):
            rest.append(f)
            continue
        fu, fv, P = f
        if fu == u and fv is None:
            # 1/(z_u - P) = -sum_m z_u^m P^(-1-m)
            expanders.append(("const", P))
        elif fu == u:
            # 1/(z_u - P z_v) = -sum_m z_u^m P^(-1-m) z_v^(-1-m)
            expanders.append(("var_right", P, fv))
        else:
            # 1/(z_w - P z_u) = sum_m z_u^m P^m z_w^(-1-m), w = f.u
            expanders.append(("var_left", P, fu))

    # enumerate z_u exponents: numerator exponent e plus sum of m_i must be 0
    out_terms = []
    by_exp: dict = {}
    for e, c in fr.num.items():
        by_exp.setdefault(e[u], []).append((e, c))

    def rec(idx, remaining, acc_coeff: Scalar, acc_shift):
        # remaining: the z_u budget still to be absorbed by factors idx..
        if idx == len(expanders):
            if remaining == 0:
                out_terms.append((acc_coeff, tuple(acc_shift)))
            return
        kind = expanders[idx]
        # each factor absorbs m >= 0 with z_u weight +m
        m = 0
        while m <= -remaining:
            if kind[0] == "const":
                coeff = -((kind[1] ** (-1 - m)).to_scalar())
                shift = None
            elif kind[0] == "var_right":
                coeff = -((kind[1] ** (-1 - m)).to_scalar())
                shift = (kind[2], -1 - m)
            else:
                coeff = (kind[1] ** m).to_scalar()
                shift = (kind[2], -1 - m)
            ns = list(acc_shift)
            if shift is not None:
                ns[shift[0]] += shift[1]
            rec(idx + 1, remaining + m, acc_coeff * coeff, ns)
            m += 1

    total = {}
    one = Scalar.one(ctx)
    for start_exp, terms in by_exp.items():
        if start_exp > 0:
            continue  # factors only raise the z_u exponent
        out_terms.clear()
        rec(0, start_exp, one, [0] * nvars)
        for coeff, shift in out_terms:
            for e, c in terms:
                ne = list(e)
                ne[u] = 0
                ne = [a + b for a, b in zip(ne, shift)]
                zp._zp_acc(total, tuple(ne), c * coeff)
    if not total:
        return fr_zero(nvars, ctx)
    return FR(nvars, total, tuple(rest), ctx)
