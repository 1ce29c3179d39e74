"""Candidate support lattices, residue-condition ideals and l-weight-space
dimensions of simple modules, and q-character assembly.

A weight space at a support point x is the quotient of the windowed small
shuffle algebra by the kernel of the residue functionals at x; its
dimension is the exact rank of the jet-coefficient matrix.  The span of
the jets equals the span of the d-windowed residue functionals whenever
the d-window is at least as long as every pole order encountered (the
generalized-binomial change of basis is then invertible), which the engine
checks and records.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .cartan import CartanClassError, CartanDatum, coweight_pairing
from .characters import QCharacter, WeightSeries, chi_mu, weight_image
from .linalg import nullspace_scalars, rank_fractions, rank_scalars
from .lweights import LWeight, LWeightMonomial, ord_coweight
from .pairing import antipode_lhs, antipode_rhs, jet_rows
from .scalars import Point, Scalar
from .shuffle import (ShuffleElement, orbit_to_element,
                      symmetric_monomial_orbits, wheel_membership,
                      _wheel_vanishing_violations,
                      _wheel_divisibility_violations)


class NotStabilizedError(ArithmeticError):
    def __init__(self, trace):
        super().__init__(f"rank did not stabilize: trace {trace}")
        self.trace = trace


@dataclass(frozen=True)
class DimensionReport:
    psi: LWeight
    degree: tuple
    x: tuple
    dimension: int
    window_w: int
    window_d: int
    stabilized: bool
    rank_trace: tuple


def support_key(x):
    return tuple(tuple(sorted(points, key=lambda p: p.sort_key()))
                 for points in x)


def candidate_support(cartan, psi: LWeight, n, K: int):
    """Per-color multisets drawn from the lattice
    {p q^k : p a pole of some psi_j, |k| <= K}, filtered by the reachability
    of an ordering whose residues can all be nonzero."""
    poles = psi.pole_points()
    lattice = []
    seen = set()
    for p in poles:
        for k in range(-K, K + 1):
            pt = p.q_shift(k)
            if pt not in seen:
                seen.add(pt)
                lattice.append(pt)
    lattice.sort(key=lambda p: p.sort_key())
    per_color = []
    for n_i in n:
        per_color.append(list(itertools.combinations_with_replacement(lattice, n_i)))
    out = []
    for parts in itertools.product(*per_color):
        x = support_key(parts)
        if _reachable(cartan, psi, x):
            out.append(x)
    return out


def _reachable(cartan, psi, x) -> bool:
    """Necessary condition for a nonzero functional: some ordering of the
    colored points can be consumed with every step sitting on a current
    pole (psi poles plus zeta-induced images of consumed points)."""
    items = [(i, p) for i, points in enumerate(x) for p in points]

    def step(remaining, consumed):
        if not remaining:
            return True
        for t, (i, p) in enumerate(remaining):
            ok = p in psi.components[i].poles
            if not ok:
                for (j, xp) in consumed:
                    if p == xp.q_shift(-cartan.d[i][j]):
                        ok = True
                        break
            if ok and step(remaining[:t] + remaining[t + 1:],
                           consumed + [(i, p)]):
                return True
        return False

    return step(items, [])


def orderings_of_support(x):
    """Distinct colored-point sequences realizing the per-color multisets."""
    items = [(i, p) for i, points in enumerate(x) for p in points]
    seen = set()
    out = []
    for perm in itertools.permutations(items):
        if perm not in seen:
            seen.add(perm)
            out.append(perm)
    return out


# -- window bases ------------------------------------------------------------

_basis_cache: dict = {}


def wheel_basis(cartan, degree, W: int):
    """Basis of the wheel-compliant color-symmetric Laurent numerators with
    per-variable exponents in [-W, W]."""
    key = (id(cartan), tuple(degree), W)
    if key in _basis_cache:
        return _basis_cache[key]
    orbits = symmetric_monomial_orbits(degree, W)
    elements = [orbit_to_element(cartan, degree, o) for o in orbits]
    if cartan.rank == 1:
        _basis_cache[key] = elements
        return elements
    if not (cartan.is_finite_type or cartan.is_strongly_symmetrizable
            or cartan.is_simply_laced):
        raise CartanClassError("membership undecidable for this Cartan class")
    # linear wheel constraints on orbit coordinates
    zero = Scalar.zero(cartan.ctx)
    rows: dict = {}
    for col, el in enumerate(elements):
        if cartan.is_finite_type or cartan.is_strongly_symmetrizable:
            for i, j, spec in _wheel_vanishing_violations(el):
                for mono, coeff in spec.items():
                    rows.setdefault((("v", i, j), mono), {})[col] = coeff
        else:
            for i, j, L, Lp, buckets in _wheel_divisibility_violations(el):
                for b, bucket in enumerate(buckets):
                    for mono, coeff in bucket.items():
                        rows.setdefault((("d", i, j, L, Lp, b), mono), {})[col] = coeff
    matrix = [[row.get(c, zero) for c in range(len(elements))]
              for row in rows.values()]
    if not matrix:
        _basis_cache[key] = elements
        return elements
    kernel = nullspace_scalars(matrix, len(elements), cartan.ctx)
    basis = []
    for vec in kernel:
        el = ShuffleElement(cartan, tuple(degree), {})
        for c, coeff in enumerate(vec):
            if not coeff.is_zero():
                el = el + elements[c].scale(coeff)
        basis.append(el)
    _basis_cache[key] = basis
    return basis


def default_windows(psi: LWeight):
    maxpole = max((len(c.poles) for c in psi.components), default=0)
    W = 3 + maxpole
    return W, W + maxpole


# -- the dimension engine ----------------------------------------------------

def _jet_matrix(cartan, psi, x, basis, *, reverse_order=False):
    """Rows indexed by (ordering, jet path), one column per basis element;
    also returns the maximum jet depth seen (for the d-window certificate)."""
    rows: dict = {}
    max_depth = 0
    for seq in orderings_of_support(x):
        leaves = jet_rows_multi(cartan, seq, psi, basis,
                                reverse_order=reverse_order)
        for path, vec in leaves.items():
            rows[(seq, path)] = vec
            max_depth = max(max_depth, max(path) + 1 if path else 0)
    zero = Scalar.zero(cartan.ctx)
    mat = [[row.get(c, zero) for c in range(len(basis))]
           for _, row in sorted(rows.items(), key=lambda kv: repr(kv[0]))]
    return mat, max_depth


def dim_weight_space(cartan, psi: LWeight, n, x, W=None, D=None,
                     extra_rounds: int = 2) -> DimensionReport:
    """Exact dimension of the l-weight space at x, with the windowed-rank
    stabilization protocol: the reported rank must agree between (W, D) and
    (W+1, D+1)."""
    W0, D0 = default_windows(psi)
    W = W0 if W is None else W
    D = D0 if D is None else D
    trace = []
    prev = None
    for round_ in range(extra_rounds + 2):
        Wc, Dc = W + round_, D + round_
        basis = wheel_basis(cartan, n, Wc)
        mat, max_depth = _jet_matrix(cartan, psi, x, basis)
        if 2 * Dc + 1 < max_depth:
            # the d-window must dominate every pole order for the jet span
            # to equal the windowed-functional span
            Dc = (max_depth + 1) // 2
        rank = rank_scalars(mat) if mat else 0
        trace.append((Wc, Dc, rank))
        if prev is not None and rank == prev:
            return DimensionReport(psi, tuple(n), x, rank, Wc, Dc, True,
                                   tuple(trace))
        prev = rank
    raise NotStabilizedError(tuple(trace))


def dim_weight_space_numeric(cartan, psi, n, x, W, values) -> int:
    """Rank of the same jet matrix after specializing the generators at
    exact rational values: the numeric cross-check oracle."""
    basis = wheel_basis(cartan, n, W)
    mat, _ = _jet_matrix(cartan, psi, x, basis)
    rows = []
    for row in mat:
        rows.append([s.evaluate(values) for s in row])
    return rank_fractions(rows) if rows else 0


def qcharacter(cartan, psi: LWeight, n_max: int = 3, K: int = 4,
               W=None, D=None) -> QCharacter:
    """chi_q of the simple module attached to psi, summed over degrees
    |n| <= n_max and all candidate support points; the same condition set
    serves the Borel and the shifted quotient."""
    out = QCharacter(cartan, n_max)
    out.add_term(LWeightMonomial(cartan, psi), 1)
    for n in _degrees_up_to(cartan.rank, n_max):
        for x in candidate_support(cartan, psi, n, K):
            report = dim_weight_space(cartan, psi, n, x, W=W, D=D)
            if report.dimension:
                afactors = [(i, p) for i, points in enumerate(x)
                            for p in points]
                out.add_term(LWeightMonomial(cartan, psi, afactors=afactors),
                             report.dimension)
    return out


def _degrees_up_to(rank, n_max):
    for total in range(1, n_max + 1):
        for cuts in itertools.combinations(range(total + rank - 1), rank - 1):
            parts = []
            prev = -1
            for c in cuts + (total + rank - 1,):
                parts.append(c - prev - 1)
                prev = c
            yield tuple(parts)


def full_character(cartan, psi: LWeight, depth: int = 3, n_max: int = 3,
                   K: int = 4):
    """(q-character part, ordinary character of the full simple module):
    the latter is chi^{ord psi} times the weight image of the former."""
    if not cartan.is_finite_type:
        raise CartanClassError("the full character requires finite type")
    qc = qcharacter(cartan, psi, n_max=n_max, K=K)
    chi = chi_mu(cartan, ord_coweight(psi), depth)
    return qc, chi.mul(weight_image(qc, depth))


# -- Borel-side vs shifted-side pipelines ------------------------------------

def degree_dimension_reports(cartan, psi, n, K=4, W=None, D=None):
    """Per-point dimensions at a fixed degree, computed in both residue
    orders (the literal order of the point condition and the reversed one);
    the shifted and Borel descriptions give the same ideal, so the reports
    must agree."""
    out = []
    for x in candidate_support(cartan, psi, n, K):
        rep = dim_weight_space(cartan, psi, n, x, W=W, D=D)
        rep_rev = _dim_reversed(cartan, psi, n, x, rep.window_w)
        out.append((x, rep, rep_rev))
    return out


def _dim_reversed(cartan, psi, n, x, W):
    basis = wheel_basis(cartan, n, W)
    rows: dict = {}
    for seq in orderings_of_support(x):
        for col, el in enumerate(basis):
            leaves = jet_rows(cartan, seq, psi, el, reverse_order=True)
            for path, val in leaves.items():
                rows.setdefault((seq, path), {})[col] = val
    zero = Scalar.zero(cartan.ctx)
    mat = [[row.get(c, zero) for c in range(len(basis))]
           for _, row in sorted(rows.items(), key=lambda kv: repr(kv[0]))]
    return rank_scalars(mat) if mat else 0


def degree_rank_routes(cartan, psi, n, D: int, W: int, T: int = 10,
                       inside_pred=None):
    """Global rank of the degree-n functional family computed through the
    two independent routes: the Hopf-side assembly (coproduct + antipode +
    pairing factorization) and the contour-splitting sum.  Also returns the
    sum of the per-point dimensions for comparison."""
    basis = wheel_basis(cartan, n, W)
    colors = [i for i in cartan.index_set for _ in range(n[i])]
    dtuples = list(itertools.product(range(-D, D + 1), repeat=len(colors)))
    lhs_rows = []
    rhs_rows = []
    for ds in dtuples:
        word = list(zip(colors, ds))
        lhs_rows.append([antipode_lhs(cartan, word, psi, el, T,
                                      inside_pred) for el in basis])
        rhs_rows.append([antipode_rhs(cartan, word, psi, el, inside_pred)
                         for el in basis])
    lhs_rank = rank_scalars(lhs_rows) if lhs_rows else 0
    rhs_rank = rank_scalars(rhs_rows) if rhs_rows else 0
    point_total = 0
    for x in candidate_support(cartan, psi, n, K=4):
        point_total += dim_weight_space(cartan, psi, n, x, W=W).dimension
    return lhs_rank, rhs_rank, point_total
