"""Sparse Laurent polynomials in the spectral variables z_1..z_n over Scalar.

Keys are fixed-length exponent tuples; values are Scalars.  Used for
shuffle-element numerators and for the numerators of residue integrands.
"""
from __future__ import annotations

from .scalars import Point, Scalar


def zp_zero():
    return {}


def zp_const(n: int, s: Scalar):
    if s.is_zero():
        return {}
    return {(0,) * n: s}


def zp_monomial(exps, s: Scalar):
    if s.is_zero():
        return {}
    return {tuple(exps): s}


def zp_add(p1: dict, p2: dict) -> dict:
    if not p1:
        return dict(p2)
    out = dict(p1)
    for e, c in p2.items():
        s = out.get(e)
        if s is None:
            out[e] = c
        else:
            s = s + c
            if s.is_zero():
                del out[e]
            else:
                out[e] = s
    return out


def zp_neg(p: dict) -> dict:
    return {e: -c for e, c in p.items()}


def zp_scale(p: dict, s: Scalar) -> dict:
    if s.is_zero():
        return {}
    return {e: c * s for e, c in p.items()}


def zp_mul(p1: dict, p2: dict) -> dict:
    if not p1 or not p2:
        return {}
    if len(p1) > len(p2):
        p1, p2 = p2, p1
    out: dict = {}
    for e1, c1 in p1.items():
        for e2, c2 in p2.items():
            e = tuple(x + y for x, y in zip(e1, e2))
            c = c1 * c2
            s = out.get(e)
            if s is None:
                out[e] = c
            else:
                s = s + c
                if s.is_zero():
                    del out[e]
                else:
                    out[e] = s
    return out


def zp_shift(p: dict, exps) -> dict:
    return {tuple(x + y for x, y in zip(e, exps)): c for e, c in p.items()}


def zp_mul_linear(p: dict, u: int, pu, v, pv) -> dict:
    """Multiply by (pu * z_u  +  pv * z_v); pv/v may describe a constant
    (v is None).  pu, pv are Scalars."""
    out: dict = {}
    for e, c in p.items():
        eu = list(e)
        eu[u] += 1
        _zp_acc(out, tuple(eu), c * pu)
        if v is None:
            _zp_acc(out, e, c * pv)
        else:
            ev = list(e)
            ev[v] += 1
            _zp_acc(out, tuple(ev), c * pv)
    return out


def _zp_acc(out: dict, e, c):
    if c.is_zero():
        return
    s = out.get(e)
    if s is None:
        out[e] = c
    else:
        s = s + c
        if s.is_zero():
            del out[e]
        else:
            out[e] = s


def zp_total_degrees(p: dict):
    """(min, max) total z-degree; None for the zero polynomial."""
    if not p:
        return None
    degs = [sum(e) for e in p]
    return min(degs), max(degs)


def zp_permute(p: dict, perm) -> dict:
    """Apply the variable permutation new[k] = old[perm[k]]."""
    return {tuple(e[perm[k]] for k in range(len(perm))): c for e, c in p.items()}


def zp_is_symmetric(p: dict, groups) -> bool:
    """Symmetric under swapping adjacent variables within each index group."""
    n = len(next(iter(p))) if p else 0
    for group in groups:
        for a, b in zip(group, group[1:]):
            perm = list(range(n))
            perm[a], perm[b] = perm[b], perm[a]
            if zp_permute(p, perm) != p:
                return False
    return True


def zp_substitute_monomial(p: dict, u: int, target, factor: Point) -> dict:
    """Substitute z_u -> factor * z_target (target None: z_u -> factor)."""
    out: dict = {}
    for e, c in p.items():
        k = e[u]
        ne = list(e)
        ne[u] = 0
        if target is not None:
            ne[target] += k
        coeff = c * (factor ** k).to_scalar()
        _zp_acc(out, tuple(ne), coeff)
    return out
