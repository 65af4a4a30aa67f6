"""Symbolic side of the Frobenius search: one projective chart of the unit space.

On a chart the unit is ``u(t) = u_c + sum t_j u_{c+1+j}`` and the candidate
multiplication is ``adj(W(t))``-based, i.e. ``det W(t) * m(t)``.  Every law then
becomes a polynomial equation in ``t`` that sympy can solve exactly.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Optional, Sequence

import sympy

from .exact import RationalMatrix

_GRID = [sympy.Rational(v) for v in (0, 1, -1, 2, -2, 3, -3, "1/2", "-1/2", 5, 7, -5, "1/3")]


def _q(v) -> sympy.Rational:
    if isinstance(v, Fraction):
        return sympy.Rational(v.numerator, v.denominator)
    return sympy.Integer(v)


def _apply(mat: RationalMatrix, vec: Sequence) -> list:
    out = []
    for i in range(mat.rows):
        row = mat.row_dict(i)
        out.append(sum((_q(v) * vec[j] for j, v in row.items()), sympy.Integer(0)))
    return out


def _to_fraction(value) -> Optional[Fraction]:
    if not value.is_Rational:
        return None
    return Fraction(int(value.p), int(value.q))


def solve_chart(cat, com, directions, chart: int, lin_m, left_unit, right_unit) -> Optional[list[tuple]]:
    """Rational parameter points of one chart that may carry a Frobenius structure.

    Returns ``[]`` when the chart provably has no solution with invertible
    copairing, a list of candidate points otherwise, and None when the
    symbolic analysis could not close the chart.
    """
    k = len(directions)
    n = cat.dim(com.carrier)
    p = k - 1 - chart
    syms = sympy.symbols(f"t0:{p}") if p else ()
    coeffs = [sympy.Integer(0)] * chart + [sympy.Integer(1)] + list(syms)

    w = sympy.zeros(n, n)
    for c, u in zip(coeffs, directions):
        if c == 0:
            continue
        du = cat.compose(com.d, u).mat
        for a in range(n):
            for b in range(n):
                v = du[a * n + b, 0]
                if v:
                    w[a, b] += c * _q(v)
    det = sympy.expand(w.det())
    if det == 0:
        return []
    adj = w.adjugate()
    dm = com.d.mat
    mt = [sympy.Integer(0)] * (n ** 3)
    for e in range(n):
        for a in range(n):
            for b in range(n):
                mt[e * n * n + a * n + b] = sympy.expand(
                    sum((adj[a, c] * _q(dm[c * n + e, b]) for c in range(n) if dm[c * n + e, b]), sympy.Integer(0)))

    eqs = []
    for mat in lin_m:
        eqs.extend(_apply(mat, mt))
    ident = [sympy.Integer(1) if i == j else sympy.Integer(0) for i in range(n) for j in range(n)]
    for family in (left_unit, right_unit):
        total = [-det * x for x in ident]
        for c, mat in zip(coeffs, family):
            if c == 0:
                continue
            for i, val in enumerate(_apply(mat, mt)):
                total[i] += c * val
        eqs.extend(total)
    polys = []
    for eq in eqs:
        eq = sympy.expand(eq)
        if eq == 0:
            continue
        if not eq.free_symbols:
            return []
        polys.append(eq)
    if p == 0:
        return [()]
    if not polys:
        sols = [{}]
    else:
        try:
            sols = sympy.solve(polys, list(syms), dict=True)
        except NotImplementedError:
            return None
    points: list[tuple] = []
    closed = True
    for sol in sols:
        free = [s for s in syms if s not in sol]
        det_on = sympy.simplify(det.subs(sol))
        if det_on == 0:
            continue
        found = False
        for values in _grid(len(free)):
            sub = dict(zip(free, values))
            if det_on.subs(sub) == 0:
                continue
            point = []
            for s in syms:
                val = sympy.simplify(sol[s].subs(sub)) if s in sol else sub[s]
                frac = _to_fraction(val) if val.is_number else None
                if frac is None:
                    point = None
                    break
                point.append(frac)
            if point is None:
                # an irrational isolated point has no rational relative; a free
                # component might still have one elsewhere
                if free:
                    continue
                break
            points.append(tuple(point))
            found = True
            break
        if not found and free:
            closed = False
    if not points and not closed:
        return None
    return points


def _grid(m: int):
    if m == 0:
        yield ()
        return
    from itertools import product

    yield from product(_GRID, repeat=m)
