"""Cartan data, root systems, zeta factors and the quantum Cartan matrix.

A CartanDatum is built from the symmetrized matrix (d_ij); the Cartan
matrix entries c_ij = 2 d_ij / d_ii are derived.  Classification flags
decide which shuffle-membership criteria apply downstream.
"""
from __future__ import annotations

from fractions import Fraction

from .scalars import DEFAULT_CTX, Point, Scalar, ZRational, q_power


class CartanClassError(ValueError):
    """Operation not available for this Cartan class."""


class CartanDatum:
    __slots__ = ("ctx", "d", "rank", "d_i", "c", "is_finite_type",
                 "is_strongly_symmetrizable", "is_simply_laced", "name")

    def __init__(self, d_matrix, ctx=DEFAULT_CTX, name=None):
        d = [tuple(int(x) for x in row) for row in d_matrix]
        n = len(d)
        if any(len(row) != n for row in d):
            raise ValueError("symmetrized matrix must be square")
        for i in range(n):
            if d[i][i] <= 0 or d[i][i] % 2:
                raise ValueError("diagonal entries must be even positive")
            for j in range(n):
                if d[i][j] != d[j][i]:
                    raise ValueError("matrix must be symmetric")
                if i != j and d[i][j] > 0:
                    raise ValueError("off-diagonal entries must be <= 0")
        self.ctx = ctx
        self.d = tuple(d)
        self.rank = n
        self.d_i = tuple(d[i][i] // 2 for i in range(n))
        c = []
        for i in range(n):
            row = []
            for j in range(n):
                num = 2 * d[i][j]
                if num % d[i][i]:
                    raise ValueError("c_ij = 2 d_ij / d_ii must be integral")
                row.append(num // d[i][i])
            c.append(tuple(row))
        self.c = tuple(c)
        self.is_simply_laced = all(d[i][i] == 2 for i in range(n))
        self.is_strongly_symmetrizable = all(
            d[i][j] in (0, -max(self.d_i[i], self.d_i[j]))
            for i in range(n) for j in range(n) if i != j)
        self.is_finite_type = _positive_definite(self.d)
        self.name = name

    @property
    def index_set(self):
        return range(self.rank)

    def q_i(self, i: int) -> Scalar:
        return q_power(self.d_i[i], self.ctx)

    def bilinear(self, m1, m2) -> int:
        """(sum m1_i varsigma^i, sum m2_j varsigma^j) = sum m1_i d_ij m2_j."""
        return sum(m1[i] * self.d[i][j] * m2[j]
                   for i in range(self.rank) for j in range(self.rank))

    def __repr__(self):
        return f"CartanDatum({self.name or self.d})"


def _positive_definite(d) -> bool:
    n = len(d)
    rows = [[Fraction(x) for x in row] for row in d]
    for k in range(n):
        if rows[k][k] <= 0:
            return False
        for i in range(k + 1, n):
            f = rows[i][k] / rows[k][k]
            for j in range(k, n):
                rows[i][j] -= f * rows[k][j]
    return True


_PRESETS = {
    "A1": [[2]],
    "A2": [[2, -1], [-1, 2]],
    "A3": [[2, -1, 0], [-1, 2, -1], [0, -1, 2]],
    "B2": [[4, -2], [-2, 2]],
    "G2": [[6, -3], [-3, 2]],
    # affine examples: strongly symmetrizable / simply laced but not finite
    "A2~": [[2, -1, -1], [-1, 2, -1], [-1, -1, 2]],
    "A1~": [[2, -2], [-2, 2]],
}


def preset(name: str, ctx=DEFAULT_CTX) -> CartanDatum:
    key = name.upper().replace("HAT", "~")
    if key not in _PRESETS:
        raise KeyError(f"unknown Cartan preset {name!r}; "
                       f"have {sorted(_PRESETS)}")
    return CartanDatum(_PRESETS[key], ctx, name=key)


def zeta(c: CartanDatum, i: int, j: int) -> ZRational:
    """zeta_ij(x) = (x - q^(-d_ij)) / (x - 1) as an exact rational function."""
    one = Scalar.one(c.ctx)
    return ZRational({1: one, 0: -q_power(-c.d[i][j], c.ctx)},
                     {1: one, 0: -one}, c.ctx)


def quantum_cartan(c: CartanDatum, i: int, j: int) -> ZRational:
    """C_ij(x) = (x^d_ij - x^(-d_ij)) / (x^d_i - x^(-d_i)); diagnostics only."""
    one = Scalar.one(c.ctx)
    dij, di = c.d[i][j], c.d_i[i]
    num = {dij: one, -dij: -one} if dij else {}
    if not num:
        return ZRational({}, {0: one}, c.ctx)
    return ZRational(num, {di: one, -di: -one}, c.ctx)


# -- root systems -----------------------------------------------------------

class RootVector(tuple):
    """Root-lattice vector in simple-root coordinates."""

    def __add__(self, other):
        return RootVector(a + b for a, b in zip(self, other))

    def __sub__(self, other):
        return RootVector(a - b for a, b in zip(self, other))

    @property
    def height(self):
        return sum(self)


def simple_root(c: CartanDatum, i: int) -> RootVector:
    return RootVector(1 if k == i else 0 for k in range(c.rank))


def positive_roots(c: CartanDatum) -> list:
    """All positive roots, by closure under simple-root addition with
    root-string verification; finite type only."""
    if not c.is_finite_type:
        raise CartanClassError("positive roots require a finite-type datum")
    roots = {simple_root(c, i) for i in c.index_set}
    changed = True
    while changed:
        changed = False
        for alpha in list(roots):
            for i in c.index_set:
                ai = simple_root(c, i)
                # root string through alpha in direction alpha_i:
                # p - q = <alpha, alpha_i^vee>;  alpha + alpha_i is a root
                # iff q > 0, i.e. p > pairing.
                pairing = 2 * c.bilinear(alpha, ai) // c.d[i][i]
                p = 0
                beta = alpha - ai
                while all(x >= 0 for x in beta) and (beta in roots or not any(beta)):
                    if not any(beta):
                        p += 1
                        break
                    p += 1
                    beta = beta - ai
                if p - pairing > 0:
                    new = alpha + ai
                    if new not in roots:
                        roots.add(new)
                        changed = True
    return sorted(roots, key=lambda r: (r.height, tuple(r)))


class Coweight(tuple):
    """mu = sum r_i omega_i^vee in fundamental-coweight coordinates."""

    def __add__(self, other):
        return Coweight(a + b for a, b in zip(self, other))

    def __sub__(self, other):
        return Coweight(a - b for a, b in zip(self, other))

    def __neg__(self):
        return Coweight(-a for a in self)


def fundamental_coweight(c: CartanDatum, i: int) -> Coweight:
    return Coweight(1 if k == i else 0 for k in range(c.rank))


def simple_coroot(c: CartanDatum, i: int) -> Coweight:
    """alpha_i^vee = sum_j c_ij omega_j^vee."""
    return Coweight(c.c[i][j] for j in range(c.rank))


def reflect_coweight(c: CartanDatum, i: int, mu: Coweight) -> Coweight:
    """s_i(mu) = mu - <mu, alpha_i> alpha_i^vee."""
    return Coweight(mu) - Coweight(tuple(mu[i] * x for x in simple_coroot(c, i)))


def coweight_pairing(mu, alpha) -> int:
    """Natural pairing <omega_i^vee, alpha_j> = delta_ij extended bilinearly."""
    return sum(r * m for r, m in zip(mu, alpha))
