"""Exact arithmetic in the coefficient field Q(q, a_1, ..., a_m).

Everything downstream (shuffle products, residues, ranks) runs over this
field, so no floating point appears anywhere.  Polynomials are sparse
exponent maps with Fraction coefficients; rational functions are kept in
canonical form (numerator and denominator coprime, denominator monic with
respect to a fixed graded-lexicographic order).  Spectral parameters live
in the multiplicative lattice of "points": nonzero rational multiples of
monomials in the generators.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Iterable


class GeneratorContext:
    """Fixed list of field generators: q plus m spectral generators."""

    __slots__ = ("m", "names")

    def __init__(self, m: int = 1):
        if m < 0:
            raise ValueError("number of spectral generators must be >= 0")
        self.m = m
        if m == 1:
            self.names = ("q", "a")
        else:
            self.names = ("q",) + tuple(f"a{k}" for k in range(1, m + 1))

    @property
    def nvars(self) -> int:
        return 1 + self.m

    def index_of(self, name: str) -> int:
        if name in self.names:
            return self.names.index(name)
        if self.m == 1 and name == "a1":
            return 1
        raise KeyError(f"unknown generator {name!r}")

    def __eq__(self, other):
        return isinstance(other, GeneratorContext) and self.m == other.m

    def __hash__(self):
        return hash(("GeneratorContext", self.m))

    def __repr__(self):
        return f"GeneratorContext(m={self.m})"


DEFAULT_CTX = GeneratorContext(1)

_F0 = Fraction(0)
_F1 = Fraction(1)


class ScalarDivisionError(ZeroDivisionError):
    """Division of Scalars by zero."""


# ---------------------------------------------------------------------------
# sparse polynomials over Q
# ---------------------------------------------------------------------------

def _grlex_key(exps):
    return (sum(exps), exps)


class Poly:
    """Sparse multivariate polynomial over Q in the context generators."""

    __slots__ = ("ctx", "terms")

    def __init__(self, ctx: GeneratorContext, terms: dict):
        self.ctx = ctx
        self.terms = terms  # {exponent tuple: Fraction}, no zero values

    # -- constructors -------------------------------------------------------
    @staticmethod
    def zero(ctx):
        return Poly(ctx, {})

    @staticmethod
    def const(ctx, c) -> "Poly":
        c = Fraction(c)
        if c == 0:
            return Poly(ctx, {})
        return Poly(ctx, {(0,) * ctx.nvars: c})

    @staticmethod
    def monomial(ctx, exps, c=_F1) -> "Poly":
        c = Fraction(c)
        if c == 0:
            return Poly(ctx, {})
        return Poly(ctx, {tuple(exps): c})

    @staticmethod
    def gen(ctx, i: int) -> "Poly":
        e = [0] * ctx.nvars
        e[i] = 1
        return Poly(ctx, {tuple(e): _F1})

    # -- basic structure ----------------------------------------------------
    def is_zero(self):
        return not self.terms

    def is_const(self):
        if not self.terms:
            return True
        if len(self.terms) > 1:
            return False
        return next(iter(self.terms)) == (0,) * self.ctx.nvars

    def const_value(self) -> Fraction:
        if not self.terms:
            return _F0
        return self.terms[(0,) * self.ctx.nvars]

    def lead(self):
        """Leading (exponents, coefficient) in graded-lex order."""
        e = max(self.terms, key=_grlex_key)
        return e, self.terms[e]

    def degree_in(self, i: int) -> int:
        if not self.terms:
            return -1
        return max(e[i] for e in self.terms)

    def vars_present(self):
        out = set()
        for e in self.terms:
            for i, k in enumerate(e):
                if k:
                    out.add(i)
        return out

    # -- arithmetic ---------------------------------------------------------
    def __add__(self, other: "Poly") -> "Poly":
        if not self.terms:
            return other
        if not other.terms:
            return self
        t = dict(self.terms)
        for e, c in other.terms.items():
            s = t.get(e)
            if s is None:
                t[e] = c
            else:
                s = s + c
                if s:
                    t[e] = s
                else:
                    del t[e]
        return Poly(self.ctx, t)

    def __neg__(self):
        return Poly(self.ctx, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other: "Poly") -> "Poly":
        if not self.terms or not other.terms:
            return Poly(self.ctx, {})
        a, b = self.terms, other.terms
        if len(a) > len(b):
            a, b = b, a
        t: dict = {}
        for e1, c1 in a.items():
            for e2, c2 in b.items():
                e = tuple(x + y for x, y in zip(e1, e2))
                s = t.get(e)
                if s is None:
                    t[e] = c1 * c2
                else:
                    s = s + c1 * c2
                    if s:
                        t[e] = s
                    else:
                        del t[e]
        return Poly(self.ctx, t)

    def scale(self, c) -> "Poly":
        c = Fraction(c)
        if c == 0:
            return Poly(self.ctx, {})
        return Poly(self.ctx, {e: v * c for e, v in self.terms.items()})

    def shift(self, exps) -> "Poly":
        """Multiply by the monomial with the given exponents (may be negative
        provided the result stays polynomial)."""
        t = {}
        for e, c in self.terms.items():
            ne = tuple(x + y for x, y in zip(e, exps))
            if any(x < 0 for x in ne):
                raise ValueError("monomial shift left the polynomial ring")
            t[ne] = c
        return Poly(self.ctx, t)

    def monomial_content(self):
        """Componentwise minimum exponent vector over all terms."""
        it = iter(self.terms)
        first = next(it)
        mins = list(first)
        for e in it:
            for i, x in enumerate(e):
                if x < mins[i]:
                    mins[i] = x
        return tuple(mins)

    def evaluate(self, values: dict) -> Fraction:
        """Evaluate at rational generator values (used by cross-check oracles)."""
        vals = [values[name] for name in self.ctx.names]
        total = _F0
        for e, c in self.terms.items():
            term = c
            for v, k in zip(vals, e):
                if k:
                    term *= v ** k
            total += term
        return total

    def __eq__(self, other):
        return isinstance(other, Poly) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __repr__(self):
        return "Poly(" + format_poly(self) + ")"


def format_poly(p: Poly) -> str:
    if p.is_zero():
        return "0"
    bits = []
    for e in sorted(p.terms, key=_grlex_key, reverse=True):
        c = p.terms[e]
        factors = []
        for name, k in zip(p.ctx.names, e):
            if k:
                factors.append(name if k == 1 else f"{name}^{k}")
        if factors and abs(c) == 1:
            body = "*".join(factors)
            bits.append(("-" if c < 0 else "") + body)
        else:
            body = "*".join([str(c)] + factors)
            bits.append(body)
    out = " + ".join(bits)
    return out.replace("+ -", "- ")


# -- gcd machinery ----------------------------------------------------------

def _to_recursive(p: Poly, x: int) -> dict:
    """View p as a polynomial in generator x with Poly coefficients
    (coefficients keep exponent 0 at position x)."""
    out: dict = {}
    for e, c in p.terms.items():
        k = e[x]
        re = list(e)
        re[x] = 0
        sub = out.setdefault(k, {})
        sub[tuple(re)] = c
    return {k: Poly(p.ctx, t) for k, t in out.items()}


def _from_recursive(ctx, rec: dict, x: int) -> Poly:
    t = {}
    for k, coef in rec.items():
        for e, c in coef.terms.items():
            ne = list(e)
            ne[x] = ne[x] + k
            t[tuple(ne)] = c
    return Poly(ctx, t)


def _rec_degree(rec):
    return max(rec) if rec else -1


def _rec_scale(rec, poly):
    return {k: v * poly for k, v in rec.items() if not (v * poly).is_zero()}


def _rec_sub(r1, r2):
    out = dict(r1)
    for k, v in r2.items():
        w = out.get(k)
        nv = (w - v) if w is not None else -v
        if nv.is_zero():
            out.pop(k, None)
        else:
            out[k] = nv
    return out


def _pseudo_rem(f_rec, g_rec, ctx):
    """Pseudo-remainder of f by g (both recursive views in the same var)."""
    df, dg = _rec_degree(f_rec), _rec_degree(g_rec)
    lg = g_rec[dg]
    r = dict(f_rec)
    while r and _rec_degree(r) >= dg:
        dr = _rec_degree(r)
        lr = r[dr]
        # lg * r - lr * x^(dr-dg) * g
        r = _rec_scale(r, lg)
        sub = {k + dr - dg: v * lr for k, v in g_rec.items()}
        r = _rec_sub(r, sub)
        if _rec_degree(r) == dr:  # cancellation guard; cannot happen
            raise ArithmeticError("pseudo-remainder failed to reduce degree")
    return r


def _univariate_gcd(f: Poly, g: Poly, x: int) -> Poly:
    """Monic Euclid over Q for polynomials in the single generator x."""
    fa = {e[x]: c for e, c in f.terms.items()}
    fb = {e[x]: c for e, c in g.terms.items()}

    def norm(d):
        if not d:
            return d
        lc = d[max(d)]
        return {k: v / lc for k, v in d.items()}

    def rem(a, b):
        db = max(b)
        lb = b[db]
        a = dict(a)
        while a and max(a) >= db:
            da = max(a)
            la = a[da]
            for k, v in b.items():
                kk = k + da - db
                w = a.get(kk, _F0) - v * la / lb
                if w:
                    a[kk] = w
                else:
                    a.pop(kk, None)
        return a

    fa, fb = norm(fa), norm(fb)
    while fb:
        fa, fb = fb, norm(rem(fa, fb))
    e0 = [0] * f.ctx.nvars
    t = {}
    for k, c in fa.items():
        e = list(e0)
        e[x] = k
        t[tuple(e)] = c
    return Poly(f.ctx, t)


def poly_gcd(f: Poly, g: Poly) -> Poly:
    """GCD up to a unit, normalized monic in graded-lex order."""
    if f.is_zero():
        return _monic(g)
    if g.is_zero():
        return _monic(f)
    mf = f.monomial_content()
    mg = g.monomial_content()
    mono = tuple(min(a, b) for a, b in zip(mf, mg))
    if len(f.terms) == 1 or len(g.terms) == 1:
        return Poly.monomial(f.ctx, mono)
    f1 = Poly(f.ctx, {tuple(a - b for a, b in zip(e, mf)): c
                      for e, c in f.terms.items()})
    g1 = Poly(g.ctx, {tuple(a - b for a, b in zip(e, mg)): c
                      for e, c in g.terms.items()})
    core = _gcd_core(f1, g1)
    if any(mono):
        core = Poly(f.ctx, {tuple(a + b for a, b in zip(e, mono)): c
                            for e, c in core.terms.items()})
    return _monic(core)


def _monic(p: Poly) -> Poly:
    if p.is_zero():
        return p
    _, lc = p.lead()
    if lc == 1:
        return p
    return p.scale(1 / lc)


def _gcd_core(f: Poly, g: Poly) -> Poly:
    ctx = f.ctx
    if f.is_const() or g.is_const():
        return Poly.const(ctx, 1)
    vf, vg = f.vars_present(), g.vars_present()
    common = vf & vg
    if not common:
        return Poly.const(ctx, 1)
    if len(vf | vg) == 1:
        return _univariate_gcd(f, g, next(iter(vf | vg)))
    # main variable: smallest maximum degree keeps the PRS short
    x = min(common, key=lambda i: max(f.degree_in(i), g.degree_in(i)))
    fr, gr = _to_recursive(f, x), _to_recursive(g, x)

    def content(rec):
        c = Poly.zero(ctx)
        for coef in rec.values():
            c = poly_gcd(c, coef)
            if c.is_const() and not c.is_zero():
                return Poly.const(ctx, 1)
        return c

    def primitive(rec):
        c = content(rec)
        if c.is_const():
            return rec, c
        return {k: exact_div(v, c) for k, v in rec.items()}, c

    fr, cf = primitive(fr)
    gr, cg = primitive(gr)
    cont = poly_gcd(cf, cg)
    if _rec_degree(fr) < _rec_degree(gr):
        fr, gr = gr, fr
    while gr:
        r = _pseudo_rem(fr, gr, ctx)
        if r:
            r, _ = primitive(r)
        fr, gr = gr, r
    base = _from_recursive(ctx, fr, x)
    return cont * base


def exact_div(f: Poly, g: Poly) -> Poly:
    """Exact polynomial division; raises if the division leaves a remainder."""
    q = try_div(f, g)
    if q is None:
        raise ArithmeticError("polynomial division left a remainder")
    return q


def try_div(f: Poly, g: Poly):
    """f / g if g divides f exactly, else None."""
    if g.is_zero():
        raise ScalarDivisionError("polynomial division by zero")
    if f.is_zero():
        return f
    if g.is_const():
        return f.scale(1 / g.const_value())
    ge, gc = g.lead()
    rem = f
    quot: dict = {}
    while not rem.is_zero():
        re, rc = rem.lead()
        qe = tuple(a - b for a, b in zip(re, ge))
        if any(x < 0 for x in qe):
            return None
        qc = rc / gc
        quot[qe] = quot.get(qe, _F0) + qc
        rem = rem - g * Poly.monomial(f.ctx, qe, qc)
    return Poly(f.ctx, {e: c for e, c in quot.items() if c})


# ---------------------------------------------------------------------------
# the field of fractions
# ---------------------------------------------------------------------------

class Scalar:
    """Canonical element of Q(q, a_1, ..., a_m).

    Immutable; numerator and denominator coprime, denominator monic in the
    graded-lex order, so equality is plain structural equality.
    """

    __slots__ = ("num", "den", "_hash")

    def __init__(self, num: Poly, den: Poly, _canonical=False):
        if den.is_zero():
            raise ScalarDivisionError("scalar with zero denominator")
        if not _canonical:
            num, den = _cancel(num, den)
        self.num = num
        self.den = den
        self._hash = None

    # -- constructors -------------------------------------------------------
    @staticmethod
    def from_fraction(c, ctx=DEFAULT_CTX) -> "Scalar":
        return Scalar(Poly.const(ctx, c), Poly.const(ctx, 1), _canonical=True)

    @staticmethod
    def zero(ctx=DEFAULT_CTX):
        return Scalar(Poly.zero(ctx), Poly.const(ctx, 1), _canonical=True)

    @staticmethod
    def one(ctx=DEFAULT_CTX):
        return Scalar.from_fraction(1, ctx)

    @staticmethod
    def gen(name: str, ctx=DEFAULT_CTX) -> "Scalar":
        return Scalar(Poly.gen(ctx, ctx.index_of(name)), Poly.const(ctx, 1),
                      _canonical=True)

    @property
    def ctx(self):
        return self.num.ctx

    def is_zero(self):
        return self.num.is_zero()

    def is_one(self):
        return self.num == self.den

    def _den_is_one(self):
        d = self.den.terms
        if len(d) != 1:
            return False
        ((e, c),) = d.items()
        return c == 1 and not any(e)

    # -- arithmetic ---------------------------------------------------------
    def __add__(self, other):
        other = _coerce(other, self.ctx)
        if other is NotImplemented:
            return NotImplemented
        if other.is_zero():
            return self
        if self.is_zero():
            return other
        if self.den == other.den:
            num = self.num + other.num
            if self._den_is_one():
                return Scalar(num, self.den, _canonical=True)
            return Scalar(num, self.den)
        return Scalar(self.num * other.den + other.num * self.den,
                      self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return Scalar(-self.num, self.den, _canonical=True)

    def __sub__(self, other):
        other = _coerce(other, self.ctx)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _coerce(other, self.ctx)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = _coerce(other, self.ctx)
        if other is NotImplemented:
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return Scalar.zero(self.ctx)
        if self._den_is_one():
            if other._den_is_one():
                return Scalar(self.num * other.num, self.den, _canonical=True)
            n1, d2 = _cancel(self.num, other.den)
            return Scalar(n1 * other.num, d2, _canonical=True)
        if other._den_is_one():
            n2, d1 = _cancel(other.num, self.den)
            return Scalar(self.num * n2, d1, _canonical=True)
        # cross-cancel first: keeps intermediate products small
        n1, d2 = _cancel(self.num, other.den)
        n2, d1 = _cancel(other.num, self.den)
        return Scalar(n1 * n2, d1 * d2)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _coerce(other, self.ctx)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = _coerce(other, self.ctx)
        if other is NotImplemented:
            return NotImplemented
        return other * self.inverse()

    def inverse(self) -> "Scalar":
        if self.is_zero():
            raise ScalarDivisionError("division by zero scalar")
        return Scalar(self.den, self.num)

    def __pow__(self, k: int) -> "Scalar":
        if k < 0:
            return self.inverse() ** (-k)
        out = Scalar.one(self.ctx)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def evaluate(self, values: dict) -> Fraction:
        d = self.den.evaluate(values)
        if d == 0:
            raise ScalarDivisionError("denominator vanishes at evaluation point")
        return self.num.evaluate(values) / d

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Scalar.from_fraction(other, self.ctx)
        if not isinstance(other, Scalar):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((frozenset(self.num.terms.items()),
                               frozenset(self.den.terms.items())))
        return self._hash

    def __repr__(self):
        if self.den.is_const() and self.den.const_value() == 1:
            return format_poly(self.num)
        return f"({format_poly(self.num)}) / ({format_poly(self.den)})"


def _coerce(x, ctx):
    if isinstance(x, Scalar):
        return x
    if isinstance(x, Point):
        return x.to_scalar()
    if isinstance(x, (int, Fraction)):
        return Scalar.from_fraction(x, ctx)
    return NotImplemented


def _cancel(num: Poly, den: Poly):
    if num.is_zero():
        return num, Poly.const(num.ctx, 1)
    g = poly_gcd(num, den)
    if not (g.is_const() and g.const_value() == 1):
        num = exact_div(num, g)
        den = exact_div(den, g)
    _, lc = den.lead()
    if lc != 1:
        num = num.scale(1 / lc)
        den = den.scale(1 / lc)
    return num, den


def scalar_arith(a: Scalar, b: Scalar, op: str) -> Scalar:
    """Dispatch-style entry point for the four field operations."""
    if op == "+":
        return a + b
    if op == "-":
        return a - b
    if op == "*":
        return a * b
    if op == "/":
        return a / b
    raise ValueError(f"unknown operation {op!r}")


# ---------------------------------------------------------------------------
# monomial points
# ---------------------------------------------------------------------------

class Point:
    """Invertible monomial scalar: nonzero rational times a product of
    generator powers.  All spectral parameters (poles, zeros, supports) are
    Points, which keeps every residue location exact."""

    __slots__ = ("coeff", "exps", "ctx", "_scalar")

    def __init__(self, coeff, exps, ctx=DEFAULT_CTX):
        coeff = Fraction(coeff)
        if coeff == 0:
            raise ValueError("points are invertible; zero is not allowed")
        exps = tuple(exps)
        if len(exps) != ctx.nvars:
            raise ValueError("exponent tuple does not match generator context")
        self.coeff = coeff
        self.exps = exps
        self.ctx = ctx
        self._scalar = None

    @staticmethod
    def unit(ctx=DEFAULT_CTX, coeff=1) -> "Point":
        return Point(coeff, (0,) * ctx.nvars, ctx)

    @staticmethod
    def gen(name: str, ctx=DEFAULT_CTX) -> "Point":
        e = [0] * ctx.nvars
        e[ctx.index_of(name)] = 1
        return Point(1, e, ctx)

    @property
    def qexp(self) -> int:
        return self.exps[0]

    def q_shift(self, k: int) -> "Point":
        e = list(self.exps)
        e[0] += k
        return Point(self.coeff, e, self.ctx)

    def __mul__(self, other: "Point") -> "Point":
        return Point(self.coeff * other.coeff,
                     tuple(a + b for a, b in zip(self.exps, other.exps)),
                     self.ctx)

    def __truediv__(self, other: "Point") -> "Point":
        return Point(self.coeff / other.coeff,
                     tuple(a - b for a, b in zip(self.exps, other.exps)),
                     self.ctx)

    def inverse(self) -> "Point":
        return Point(1 / self.coeff, tuple(-x for x in self.exps), self.ctx)

    def __pow__(self, k: int) -> "Point":
        return Point(self.coeff ** k, tuple(x * k for x in self.exps), self.ctx)

    def scale(self, c) -> "Point":
        return Point(self.coeff * Fraction(c), self.exps, self.ctx)

    def to_scalar(self) -> Scalar:
        if self._scalar is None:
            pos = tuple(max(x, 0) for x in self.exps)
            neg = tuple(max(-x, 0) for x in self.exps)
            self._scalar = Scalar(Poly.monomial(self.ctx, pos, self.coeff),
                                  Poly.monomial(self.ctx, neg), _canonical=True)
        return self._scalar

    def sort_key(self):
        return (self.exps, self.coeff)

    def __eq__(self, other):
        return (isinstance(other, Point) and self.coeff == other.coeff
                and self.exps == other.exps)

    def __hash__(self):
        return hash((self.coeff, self.exps))

    def __repr__(self):
        bits = [str(self.coeff)]
        for name, k in zip(self.ctx.names, self.exps):
            if k:
                bits.append(f"{name}^{k}")
        return "*".join(bits)


def point_shift(x: Point, k: int) -> Point:
    """x -> x * q^k on the spectral lattice."""
    return x.q_shift(k)


_qpow_cache: dict = {}


def q_power(k: int, ctx=DEFAULT_CTX) -> Scalar:
    key = (k, ctx.m)
    if key not in _qpow_cache:
        e = [0] * ctx.nvars
        e[0] = k
        _qpow_cache[key] = Point(1, e, ctx).to_scalar()
    return _qpow_cache[key]


def binomial_fraction(d: int, j: int) -> Fraction:
    """Generalized binomial coefficient C(d, j) for integer d (d may be
    negative), j >= 0."""
    out = _F1
    for t in range(j):
        out *= Fraction(d - t, t + 1)
    return out


# ---------------------------------------------------------------------------
# univariate rational functions in z over the Scalar field
# ---------------------------------------------------------------------------

class ZRational:
    """Rational function of one formal variable z with Scalar coefficients,
    stored as Laurent numerator/denominator coefficient maps."""

    __slots__ = ("num", "den", "ctx")

    def __init__(self, num: dict, den: dict, ctx=DEFAULT_CTX):
        if not den:
            raise ScalarDivisionError("zero denominator")
        self.num = {k: v for k, v in num.items() if not v.is_zero()}
        self.den = {k: v for k, v in den.items() if not v.is_zero()}
        if not self.den:
            raise ScalarDivisionError("zero denominator")
        self.ctx = ctx

    @staticmethod
    def from_scalar(s: Scalar) -> "ZRational":
        return ZRational({0: s}, {0: Scalar.one(s.ctx)}, s.ctx)

    @staticmethod
    def linear(p: Point) -> "ZRational":
        """The polynomial z - p."""
        one = Scalar.one(p.ctx)
        return ZRational({1: one, 0: -p.to_scalar()}, {0: one}, p.ctx)

    def __mul__(self, other: "ZRational") -> "ZRational":
        return ZRational(_zp_mul(self.num, other.num),
                         _zp_mul(self.den, other.den), self.ctx)

    def __add__(self, other: "ZRational") -> "ZRational":
        n = _zp_add(_zp_mul(self.num, other.den), _zp_mul(other.num, self.den))
        return ZRational(n, _zp_mul(self.den, other.den), self.ctx)

    def inverse(self) -> "ZRational":
        if not self.num:
            raise ScalarDivisionError("inverting the zero function")
        return ZRational(self.den, self.num, self.ctx)

    def eval_at(self, s) -> Scalar:
        sv = s.to_scalar() if isinstance(s, Point) else s
        n = _zp_eval(self.num, sv)
        d = _zp_eval(self.den, sv)
        if d.is_zero():
            raise ScalarDivisionError("evaluation at a pole")
        return n / d

    def value_at_infinity(self) -> Scalar:
        """Leading-coefficient ratio when degrees match; the limit at z=oo."""
        dn = max(self.num) if self.num else None
        dd = max(self.den)
        if dn is None:
            return Scalar.zero(self.ctx)
        if dn > dd:
            raise ScalarDivisionError("pole at infinity")
        if dn < dd:
            return Scalar.zero(self.ctx)
        return self.num[dn] / self.den[dd]

    def __eq__(self, other):
        if not isinstance(other, ZRational):
            return NotImplemented
        return _zp_eqcross(self.num, self.den, other.num, other.den)

    def __repr__(self):
        return f"({_zp_fmt(self.num)}) / ({_zp_fmt(self.den)})"


def _zp_mul(p1: dict, p2: dict) -> dict:
    out: dict = {}
    for k1, c1 in p1.items():
        for k2, c2 in p2.items():
            k = k1 + k2
            s = out.get(k)
            out[k] = c1 * c2 if s is None else s + c1 * c2
    return {k: v for k, v in out.items() if not v.is_zero()}


def _zp_add(p1: dict, p2: dict) -> dict:
    out = dict(p1)
    for k, v in p2.items():
        s = out.get(k)
        out[k] = v if s is None else s + v
    return {k: v for k, v in out.items() if not v.is_zero()}


def _zp_eval(p: dict, s: Scalar) -> Scalar:
    total = Scalar.zero(s.ctx)
    for k, c in p.items():
        total = total + c * (s ** k)
    return total


def _zp_eqcross(n1, d1, n2, d2):
    return _zp_add(_zp_mul(n1, d2), {k: -v for k, v in _zp_mul(n2, d1).items()}) == {}


def _zp_fmt(p: dict) -> str:
    if not p:
        return "0"
    return " + ".join(f"({v})*z^{k}" if k else f"({v})"
                      for k, v in sorted(p.items(), reverse=True))


def _zp_divide_linear(p: dict, root: Scalar):
    """Divide the z-polynomial p by (z - root); returns (quotient, remainder)."""
    if not p:
        return {}, Scalar.zero(root.ctx)
    lo = min(p)
    if lo < 0:  # clear Laurent tail first
        raise ValueError("polynomial expected")
    deg = max(p)
    quot: dict = {}
    carry = Scalar.zero(root.ctx)
    for k in range(deg, -1, -1):
        c = p.get(k, Scalar.zero(root.ctx)) + carry * root
        if k == 0:
            return {kk: vv for kk, vv in quot.items() if not vv.is_zero()}, c
        quot[k - 1] = c
        carry = c
    raise AssertionError


def taylor_at(f: ZRational, p: Point, order: int):
    """Pole order of f at z = p and the first `order` Taylor coefficients of
    the unit part g, where f = (z-p)^(-pole_order) * g and g(p) != 0."""
    ctx = f.ctx
    pv = p.to_scalar()
    zero = Scalar.zero(ctx)

    def strip(poly: dict):
        # factor out z^min to make an honest polynomial, then strip (z-p)^k
        if not poly:
            raise ScalarDivisionError("zero numerator or denominator")
        shift = min(min(poly), 0)
        poly = {k - shift: v for k, v in poly.items()}
        k = 0
        while True:
            q, r = _zp_divide_linear(poly, pv)
            if r.is_zero() and q:
                poly = q
                k += 1
            else:
                return k, poly, shift

    kn, num, sn = strip(f.num)
    kd, den, sd = strip(f.den)
    pole = kd - kn
    # z^shift factors are units at p (p != 0)
    zshift = sn - sd

    def taylor_poly(poly: dict, n: int):
        out = []
        cur = poly
        for _ in range(n):
            q, r = _zp_divide_linear(cur, pv)
            out.append(r)
            cur = q
            if not cur:
                out.extend([zero] * (n - len(out)))
                break
        while len(out) < n:
            out.append(zero)
        return out

    if order <= 0:
        return pole, []
    tn = taylor_poly(num, order)
    td = taylor_poly(den, order)
    # invert the denominator series: td[0] != 0 by construction
    inv = [td[0].inverse()]
    for n in range(1, order):
        acc = Scalar.zero(ctx)
        for k in range(1, n + 1):
            acc = acc + td[k] * inv[n - k]
        inv.append(-(inv[0]) * acc)
    # multiply: g0 = num-series * inv-series * (p + t)^zshift
    prod = [zero] * order
    for i in range(order):
        for j in range(order - i):
            prod[i + j] = prod[i + j] + tn[i] * inv[j]
    if zshift:
        # (p+t)^zshift as a series in t
        pow_series = [binomial_fraction(zshift, j) * (p ** (zshift - j)).to_scalar()
                      for j in range(order)]
        out = [zero] * order
        for i in range(order):
            for j in range(order - i):
                out[i + j] = out[i + j] + prod[i] * pow_series[j]
        prod = out
    return pole, prod
