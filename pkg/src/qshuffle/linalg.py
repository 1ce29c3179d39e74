"""Exact rank and nullspace computations over Q(q, a) and over Q.

Ranks are computed fraction-free: each row is scaled by its denominators
(rank-preserving), then Bareiss elimination runs over the polynomial ring
with exact divisions.  A field-arithmetic fallback guards the (never
observed) case of a failed exact division under column skips.
"""
from __future__ import annotations

from fractions import Fraction

from .scalars import Poly, Scalar, try_div


class VectorScalar:
    """A finitely supported linear combination of basis tags with Scalar
    coefficients.  Substituting these for the numerator coefficients of an
    integrand evaluates a whole family of linear functionals in one pass."""

    __slots__ = ("entries",)

    def __init__(self, entries: dict):
        self.entries = entries

    @staticmethod
    def tag(key, s: Scalar) -> "VectorScalar":
        return VectorScalar({} if s.is_zero() else {key: s})

    def is_zero(self):
        return not self.entries

    def __add__(self, other):
        if not isinstance(other, VectorScalar):
            return NotImplemented
        out = dict(self.entries)
        for k, v in other.entries.items():
            s = out.get(k)
            if s is None:
                out[k] = v
            else:
                s = s + v
                if s.is_zero():
                    del out[k]
                else:
                    out[k] = s
        return VectorScalar(out)

    def __neg__(self):
        return VectorScalar({k: -v for k, v in self.entries.items()})

    def __mul__(self, other):
        if isinstance(other, VectorScalar):
            raise TypeError("vector coefficients only scale by Scalars")
        if other.is_zero():
            return VectorScalar({})
        return VectorScalar({k: v * other for k, v in self.entries.items()})

    __rmul__ = __mul__


def _clear_row(row):
    """Scale a Scalar row to polynomials (multiplies by a nonzero scalar)."""
    den = None
    for s in row:
        if s.is_zero():
            continue
        den = s.den if den is None else den * s.den
    if den is None:
        return None  # zero row
    out = []
    for s in row:
        if s.is_zero():
            out.append(Poly.zero(s.ctx))
        else:
            out.append(s.num * try_div(den, s.den))
    return out


def rank_scalars(rows) -> int:
    mat = []
    for row in rows:
        cleared = _clear_row(row)
        if cleared is not None:
            mat.append(cleared)
    if not mat:
        return 0
    try:
        return _rank_bareiss(mat)
    except ArithmeticError:
        return _rank_field([list(r) for r in rows])


def _rank_bareiss(mat) -> int:
    nrows, ncols = len(mat), len(mat[0])
    ctx = mat[0][0].ctx
    prev = Poly.const(ctx, 1)
    r = 0
    for c in range(ncols):
        pivot = None
        for i in range(r, nrows):
            if not mat[i][c].is_zero():
                pivot = i
                break
        if pivot is None:
            continue
        mat[r], mat[pivot] = mat[pivot], mat[r]
        for i in range(r + 1, nrows):
            if all(mat[i][k].is_zero() for k in range(c, ncols)):
                continue
            for k in range(c + 1, ncols):
                num = mat[r][c] * mat[i][k] - mat[i][c] * mat[r][k]
                q = try_div(num, prev)
                if q is None:
                    raise ArithmeticError("non-exact Bareiss division")
                mat[i][k] = q
            mat[i][c] = Poly.zero(ctx)
        prev = mat[r][c]
        r += 1
        if r == nrows:
            break
    return r


def _rank_field(mat) -> int:
    if not mat:
        return 0
    nrows, ncols = len(mat), len(mat[0])
    r = 0
    for c in range(ncols):
        pivot = None
        for i in range(r, nrows):
            if not mat[i][c].is_zero():
                pivot = i
                break
        if pivot is None:
            continue
        mat[r], mat[pivot] = mat[pivot], mat[r]
        inv = mat[r][c].inverse()
        for i in range(r + 1, nrows):
            if mat[i][c].is_zero():
                continue
            f = mat[i][c] * inv
            for k in range(c, ncols):
                mat[i][k] = mat[i][k] - f * mat[r][k]
        r += 1
        if r == nrows:
            break
    return r


def nullspace_scalars(rows, ncols, ctx):
    """Basis of the right kernel of the given Scalar matrix."""
    mat = [list(r) for r in rows if any(not s.is_zero() for s in r)]
    # field RREF
    pivots = []
    r = 0
    for c in range(ncols):
        pivot = None
        for i in range(r, len(mat)):
            if not mat[i][c].is_zero():
                pivot = i
                break
        if pivot is None:
            continue
        mat[r], mat[pivot] = mat[pivot], mat[r]
        inv = mat[r][c].inverse()
        mat[r] = [x * inv for x in mat[r]]
        for i in range(len(mat)):
            if i != r and not mat[i][c].is_zero():
                f = mat[i][c]
                mat[i] = [x - f * y for x, y in zip(mat[i], mat[r])]
        pivots.append(c)
        r += 1
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    zero, one = Scalar.zero(ctx), Scalar.one(ctx)
    for fc in free:
        vec = [zero] * ncols
        vec[fc] = one
        for ri, pc in enumerate(pivots):
            vec[pc] = -mat[ri][fc]
        basis.append(vec)
    return basis


def solve_exact(rows, rhs, ctx):
    """Any exact solution x of (rows) x = rhs over Scalars, or None if the
    system is inconsistent.  Free coordinates are set to zero."""
    zero, one = Scalar.zero(ctx), Scalar.one(ctx)
    mat = [list(r) + [b] for r, b in zip(rows, rhs)]
    if not mat:
        return []
    ncols = len(mat[0]) - 1
    pivots = []
    r = 0
    for c in range(ncols):
        pivot = None
        for i in range(r, len(mat)):
            if not mat[i][c].is_zero():
                pivot = i
                break
        if pivot is None:
            continue
        mat[r], mat[pivot] = mat[pivot], mat[r]
        inv = mat[r][c].inverse()
        mat[r] = [x * inv for x in mat[r]]
        for i in range(len(mat)):
            if i != r and not mat[i][c].is_zero():
                f = mat[i][c]
                mat[i] = [x - f * y for x, y in zip(mat[i], mat[r])]
        pivots.append(c)
        r += 1
        if r == len(mat):
            break
    for i in range(r, len(mat)):
        if not mat[i][ncols].is_zero():
            return None
    sol = [zero] * ncols
    for ri, pc in enumerate(pivots):
        sol[pc] = mat[ri][ncols]
    return sol


def rank_fractions(rows) -> int:
    """Plain Gaussian rank over Q (numeric specialization oracle)."""
    mat = [list(map(Fraction, r)) for r in rows]
    if not mat:
        return 0
    nrows, ncols = len(mat), len(mat[0])
    r = 0
    for c in range(ncols):
        pivot = None
        for i in range(r, nrows):
            if mat[i][c] != 0:
                pivot = i
                break
        if pivot is None:
            continue
        mat[r], mat[pivot] = mat[pivot], mat[r]
        for i in range(r + 1, nrows):
            if mat[i][c] == 0:
                continue
            f = mat[i][c] / mat[r][c]
            for k in range(c, ncols):
                mat[i][k] -= f * mat[r][k]
        r += 1
        if r == nrows:
            break
    return r
