"""The big shuffle algebra: elements, the shuffle product, wheel-condition
membership and slope membership.

An element of multidegree n is stored as its color-symmetric Laurent
numerator over the canonical cross-color denominator
prod_{i<j} prod_{a,b} (z_{ia} - z_{jb}), with variables ordered color-major:
(color 0, slot 0), (color 0, slot 1), ..., (color 1, slot 0), ...
The sign convention is exactly this ordering of the denominator factors.
"""
from __future__ import annotations

import itertools
from fractions import Fraction

from .cartan import CartanClassError, CartanDatum
from .scalars import Point, Scalar, binomial_fraction, q_power
from . import zpoly as zp


class SameColorDivisionError(ArithmeticError):
    """The symmetrized shuffle numerator failed to cancel a same-color
    denominator factor; indicates an arithmetic bug, never expected."""


def var_list(degree):
    return [(i, s) for i, n_i in enumerate(degree) for s in range(n_i)]


def var_index(degree, i, s):
    return sum(degree[:i]) + s


class ShuffleElement:
    __slots__ = ("cartan", "degree", "num")

    def __init__(self, cartan: CartanDatum, degree, num: dict):
        self.cartan = cartan
        self.degree = tuple(degree)
        self.num = {e: c for e, c in num.items() if not c.is_zero()}

    # -- constructors --------------------------------------------------
    @staticmethod
    def unit(cartan) -> "ShuffleElement":
        one = Scalar.one(cartan.ctx)
        return ShuffleElement(cartan, (0,) * cartan.rank, {(): one})

    @staticmethod
    def from_scalar(cartan, s: Scalar) -> "ShuffleElement":
        return ShuffleElement(cartan, (0,) * cartan.rank, {(): s} if not s.is_zero() else {})

    # -- structure -----------------------------------------------------
    @property
    def nvars(self):
        return sum(self.degree)

    def is_zero(self):
        return not self.num

    def homdeg_range(self):
        return zp.zp_total_degrees(self.num)

    def is_color_symmetric(self) -> bool:
        groups = []
        pos = 0
        for n_i in self.degree:
            groups.append(list(range(pos, pos + n_i)))
            pos += n_i
        return zp.zp_is_symmetric(self.num, groups) if self.num else True

    def scale(self, s: Scalar) -> "ShuffleElement":
        return ShuffleElement(self.cartan, self.degree, zp.zp_scale(self.num, s))

    def __add__(self, other: "ShuffleElement") -> "ShuffleElement":
        if self.degree != other.degree:
            raise ValueError("can only add elements of equal multidegree")
        return ShuffleElement(self.cartan, self.degree, zp.zp_add(self.num, other.num))

    def __neg__(self):
        return ShuffleElement(self.cartan, self.degree, zp.zp_neg(self.num))

    def __sub__(self, other):
        return self + (-other)

    def __eq__(self, other):
        return (isinstance(other, ShuffleElement) and self.degree == other.degree
                and self.num == other.num)

    def __repr__(self):
        return f"ShuffleElement(deg={self.degree}, {len(self.num)} terms)"


def generator(cartan: CartanDatum, i: int, d: int) -> ShuffleElement:
    """e_{i,d} (or f_{i,d}): the one-variable element z_{i,1}^d."""
    degree = tuple(1 if k == i else 0 for k in range(cartan.rank))
    return ShuffleElement(cartan, degree, {(d,): Scalar.one(cartan.ctx)})


def shift(E: ShuffleElement, r, side: str = "plus") -> ShuffleElement:
    """Shift automorphism: multiply by prod z_{ia}^{r_i} (plus) or
    prod z_{ia}^{-r_i} (minus)."""
    sgn = 1 if side == "plus" else -1
    shift_vec = tuple(sgn * r[i] for i, _ in var_list(E.degree))
    return ShuffleElement(E.cartan, E.degree, zp.zp_shift(E.num, shift_vec))


# -- the shuffle product ----------------------------------------------------

def shuffle_mul(E: ShuffleElement, Ep: ShuffleElement) -> ShuffleElement:
    if E.cartan is not Ep.cartan and E.cartan.d != Ep.cartan.d:
        raise ValueError("mismatched Cartan data")
    cartan = E.cartan
    n1, n2 = E.degree, Ep.degree
    if E.is_zero() or Ep.is_zero():
        return ShuffleElement(cartan, tuple(a + b for a, b in zip(n1, n2)), {})
    if E.nvars == 0:
        return Ep.scale(E.num.get((), Scalar.zero(cartan.ctx)))
    if Ep.nvars == 0:
        return E.scale(Ep.num.get((), Scalar.zero(cartan.ctx)))
    degree = tuple(a + b for a, b in zip(n1, n2))
    nv = sum(degree)
    vlist = var_list(degree)
    one = Scalar.one(cartan.ctx)

    total = zp.zp_zero()
    for choice in _slot_choices(degree, n1):
        left_slots = [var_index(degree, i, s) for i, s in choice]
        left_set = set(left_slots)
        right_slots = [k for k in range(nv) if k not in left_set]
        # numerators of E and E' re-indexed into the product variables
        term = _reindex(E.num, left_slots, nv)
        term = zp.zp_mul(term, _reindex(Ep.num, right_slots, nv))
        sign = 1
        for u in left_slots:
            iu = vlist[u][0]
            for v in right_slots:
                jv = vlist[v][0]
                # zeta_{iu,jv}(z_u / z_v) = (z_u - q^{-d} z_v)/(z_u - z_v);
                # the denominator factor is re-oriented to slot order, which
                # flips the term sign when u > v
                term = zp.zp_mul_linear(term, u, one,
                                        v, -q_power(-cartan.d[iu][jv], cartan.ctx))
                if u > v:
                    sign = -sign
        # same-color pairs with both variables on one side are missing from
        # this term's denominator relative to the full Vandermonde
        for side in (left_slots, right_slots):
            for u, v in itertools.combinations(sorted(side), 2):
                if vlist[u][0] == vlist[v][0]:
                    term = zp.zp_mul_linear(term, u, one, v, -one)
        if sign < 0:
            term = zp.zp_neg(term)
        total = zp.zp_add(total, term)

    # divide out the same-color Vandermonde (z_u - z_v), u < v; exactness is
    # the symmetrization theorem and is asserted, not assumed
    for u, v in itertools.combinations(range(nv), 2):
        if vlist[u][0] == vlist[v][0]:
            total = _divide_linear(total, u, v)
    return ShuffleElement(cartan, degree, total)


def _slot_choices(degree, n1):
    per_color = []
    for i, n_i in enumerate(degree):
        per_color.append([tuple((i, s) for s in combo)
                          for combo in itertools.combinations(range(n_i), n1[i])])
    for parts in itertools.product(*per_color):
        yield tuple(x for part in parts for x in part)


def _reindex(num: dict, slots, nv: int) -> dict:
    out = {}
    for e, c in num.items():
        ne = [0] * nv
        for k, x in enumerate(e):
            ne[slots[k]] = x
        out[tuple(ne)] = c
    return out


def _divide_linear(p: dict, u: int, v: int) -> dict:
    """Exact division by (z_u - z_v); raises SameColorDivisionError on
    failure."""
    if not p:
        return p
    # group by z_u-exponent: p = sum_k z_u^k A_k(other vars)
    layers: dict = {}
    for e, c in p.items():
        k = e[u]
        base = list(e)
        base[u] = 0
        layers.setdefault(k, {})[tuple(base)] = c
    kmax, kmin = max(layers), min(layers)
    # (z_u - z_v) * sum B_k z_u^k has z_u^k coefficient B_{k-1} - z_v B_k,
    # so B_{k-1} = A_k + z_v * B_k descending from the top
    quot: dict = {}
    b = {}
    for k in range(kmax, kmin - 1, -1):
        a_k = layers.get(k, {})
        shifted = {}
        for e, c in b.items():
            ev = list(e)
            ev[v] += 1
            shifted[tuple(ev)] = c
        b_next = zp.zp_add(a_k, shifted)
        if k == kmin:
            if b_next:
                raise SameColorDivisionError(
                    "(z_u - z_v) does not divide the symmetrized shuffle "
                    "numerator")
            break
        for e, c in b_next.items():
            ne = list(e)
            ne[u] = k - 1
            quot[tuple(ne)] = c
        b = b_next
    return {e: c for e, c in quot.items() if not c.is_zero()}


# -- wheel conditions -------------------------------------------------------

def wheel_membership(E: ShuffleElement) -> bool:
    """Numerator membership test for the small shuffle algebra.

    Finite and strongly symmetrizable types use the vanishing form of the
    wheel conditions; simply-laced types use the divisibility form.  Other
    Cartan classes have no known characterization."""
    cartan = E.cartan
    if cartan.rank == 1:
        return True  # conditions quantify over i != j only
    if cartan.is_finite_type or cartan.is_strongly_symmetrizable:
        return not any(_wheel_vanishing_violations(E))
    if cartan.is_simply_laced:
        return not any(_wheel_divisibility_violations(E))
    raise CartanClassError("membership undecidable for this Cartan class")


def _wheel_vanishing_violations(E: ShuffleElement):
    """Specializations z_{i,1..1-c_ij} -> z_{j,1} q^{d_ij + k d_ii} that do
    not annihilate the numerator."""
    cartan, degree = E.cartan, E.degree
    for i in cartan.index_set:
        for j in cartan.index_set:
            if i == j:
                continue
            count = 1 - cartan.c[i][j]
            if degree[i] < count or degree[j] < 1:
                continue
            target = var_index(degree, j, 0)
            spec = E.num
            for k in range(count):
                u = var_index(degree, i, k)
                factor = Point.unit(cartan.ctx).q_shift(
                    cartan.d[i][j] + k * cartan.d[i][i])
                spec = zp.zp_substitute_monomial(spec, u, target, factor)
            if spec:
                yield (i, j, spec)


def wheel_windows(cartan: CartanDatum, degree):
    """Admissible (i, j, L, L', divisor exponent) tuples for the
    divisibility-form conditions: blocks z_{i,.} = X q^{0,2,..,2(L-1)} and
    z_{j,.} = Y q^{0,2,..,2(L'-1)}, divisor (X - q^(L'-L) Y)^e with
    e = (L + L' + d_ij)/2."""
    out = []
    for i in cartan.index_set:
        for j in cartan.index_set:
            if i == j:
                continue
            dij = cartan.d[i][j]
            for L in range(1, degree[i] + 1):
                for Lp in range(1, degree[j] + 1):
                    if (L + Lp + dij) % 2:
                        continue
                    e = (L + Lp + dij) // 2
                    if e >= 1:
                        out.append((i, j, L, Lp, e))
    return out


def _wheel_divisibility_violations(E: ShuffleElement):
    cartan, degree = E.cartan, E.degree
    for (i, j, L, Lp, e) in wheel_windows(cartan, degree):
        buckets = _divisibility_defect(E, i, j, L, Lp, e)
        if any(buckets):
            yield (i, j, L, Lp, buckets)


def _divisibility_defect(E: ShuffleElement, i, j, L, Lp, e):
    """Coefficients of u^0..u^(e-1) after substituting the two q-strings and
    Y = q^(L-L') X (1+u); all must vanish iff (X - q^(L'-L) Y)^e divides."""
    cartan, degree = E.cartan, E.degree
    ctx = cartan.ctx
    delta = Lp - L
    spec = E.num
    # substitute the color-i block onto X := fresh slot (i, 0)
    target_x = var_index(degree, i, 0)
    for k in range(1, L):
        u = var_index(degree, i, k)
        spec = zp.zp_substitute_monomial(spec, u, target_x,
                                         Point.unit(ctx).q_shift(2 * k))
    # color-j block onto Y := slot (j, 0)
    target_y = var_index(degree, j, 0)
    for k in range(1, Lp):
        u = var_index(degree, j, k)
        spec = zp.zp_substitute_monomial(spec, u, target_y,
                                         Point.unit(ctx).q_shift(2 * k))
    # now expand around Y = q^{-delta} X (1 + u): bucket by u-order < e
    buckets = [dict() for _ in range(e)]
    qfac = Point.unit(ctx).q_shift(-delta)
    for exps, c in spec.items():
        k = exps[target_y]
        base = list(exps)
        base[target_y] = 0
        base[target_x] += k
        coeff = c * (qfac ** k).to_scalar()
        for m in range(e):
            b = binomial_fraction(k, m)
            if b:
                zp._zp_acc(buckets[m], tuple(base), coeff * Scalar.from_fraction(b, ctx))
    return buckets


# -- slope membership -------------------------------------------------------

def slope_negative_membership(F: ShuffleElement) -> bool:
    """True iff scaling any leading block of variables by xi sends the full
    rational function to 0 as xi -> 0 (valuation >= 1 for every 0 < m <= n)."""
    degree = F.degree
    if F.is_zero():
        return True
    ranges = [range(n_i + 1) for n_i in degree]
    for m in itertools.product(*ranges):
        if not any(m):
            continue
        scaled = [var_index(degree, i, s)
                  for i, m_i in enumerate(m) for s in range(m_i)]
        num_val = min(sum(e[u] for u in scaled) for e in F.num)
        den_count = sum(m[i] * m[j]
                        for i in range(len(m)) for j in range(i + 1, len(m)))
        if num_val - den_count < 1:
            return False
    return True


# -- windowed symmetric bases (used by the dimension engine) ---------------

def symmetric_monomial_orbits(degree, window: int):
    """Exponent-multiset basis of color-symmetric Laurent monomials with all
    exponents in [-window, window]: one representative per orbit, as the
    sorted exponent tuple per color."""
    per_color = []
    for n_i in degree:
        combos = list(itertools.combinations_with_replacement(
            range(-window, window + 1), n_i))
        per_color.append(combos)
    return [tuple(parts) for parts in itertools.product(*per_color)]


def orbit_to_element(cartan, degree, orbit) -> ShuffleElement:
    """Orbit sum of a monomial exponent multiset, one term per distinct
    permutation per color."""
    one = Scalar.one(cartan.ctx)
    per_color_perms = []
    for exps in orbit:
        perms = sorted(set(itertools.permutations(exps)))
        per_color_perms.append(perms)
    num = {}
    for parts in itertools.product(*per_color_perms):
        key = tuple(x for part in parts for x in part)
        num[key] = one
    return ShuffleElement(cartan, degree, num)
