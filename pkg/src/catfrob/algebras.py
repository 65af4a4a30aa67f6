"""(Co)monoids, Hopf algebras, dual pairs and Frobenius monoids as structure constants.

Every structure lives in one of the concrete categories and is stored against
a declared ordered basis; all law checks are exact entry-wise comparisons.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from typing import Any, Callable, Optional, Sequence

from .categories import FINSET, FINVECT, GRVECT, Category, ContractViolation, GradedSpace, LinMor
from .exact import RationalMatrix, kernel_basis, try_inverse
from .reports import LawReport


@dataclass(frozen=True)
class MonoidData:
    cat: Category
    carrier: Any
    m: Any
    u: Any


@dataclass(frozen=True)
class ComonoidData:
    cat: Category
    carrier: Any
    d: Any
    e: Any


@dataclass(frozen=True)
class HopfAlgebraData:
    """Structure constants of a Hopf algebra object ``(A, m, u, d, e, s)``."""

    cat: Category
    carrier: Any
    m: Any
    u: Any
    d: Any
    e: Any
    s: Any
    name: str = "hopf"
    basis: tuple[str, ...] = ()

    @property
    def monoid(self) -> MonoidData:
        return MonoidData(self.cat, self.carrier, self.m, self.u)

    @property
    def comonoid(self) -> ComonoidData:
        return ComonoidData(self.cat, self.carrier, self.d, self.e)

    def replace(self, **changes) -> "HopfAlgebraData":
        fields = dict(cat=self.cat, carrier=self.carrier, m=self.m, u=self.u, d=self.d,
                      e=self.e, s=self.s, name=self.name, basis=self.basis)
        fields.update(changes)
        return HopfAlgebraData(**fields)


@dataclass(frozen=True)
class FrobeniusData:
    comonoid: ComonoidData
    u: Any
    m: Any

    @property
    def cat(self) -> Category:
        return self.comonoid.cat

    @property
    def carrier(self):
        return self.comonoid.carrier


@dataclass(frozen=True)
class DualPairData:
    """``left`` is a left dual of ``right``: ``ev: X(x)Y -> 1`` and ``coev: 1 -> Y(x)X``."""

    cat: Category
    left: Any
    right: Any
    ev: Any
    coev: Any


# -- shape checks ---------------------------------------------------------------


def _expect_type(f, dom, cod, label: str) -> None:
    if f.dom != dom or f.cod != cod:
        raise ContractViolation(f"{label} has type {f.dom!r} -> {f.cod!r}, expected {dom!r} -> {cod!r}")


def _check_monoid_shapes(cat, a, m, u) -> None:
    _expect_type(m, cat.tensor_obj(a, a), a, "multiplication")
    _expect_type(u, cat.unit(), a, "unit")


def _check_comonoid_shapes(cat, a, d, e) -> None:
    _expect_type(d, a, cat.tensor_obj(a, a), "comultiplication")
    _expect_type(e, a, cat.unit(), "counit")


# -- law checkers ---------------------------------------------------------------


def _monoid_laws(report: LawReport, cat, a, m, u) -> None:
    one = cat.id(a)
    report.expect_equal(cat, "assoc", cat.compose(m, cat.tensor(m, one)), cat.compose(m, cat.tensor(one, m)))
    report.expect_equal(cat, "unit.left", cat.compose(m, cat.tensor(u, one)), one)
    report.expect_equal(cat, "unit.right", cat.compose(m, cat.tensor(one, u)), one)


def _comonoid_laws(report: LawReport, cat, a, d, e) -> None:
    one = cat.id(a)
    report.expect_equal(cat, "coassoc", cat.compose(cat.tensor(d, one), d), cat.compose(cat.tensor(one, d), d))
    report.expect_equal(cat, "counit.left", cat.compose(cat.tensor(e, one), d), one)
    report.expect_equal(cat, "counit.right", cat.compose(cat.tensor(one, e), d), one)


def check_monoid(mon: MonoidData) -> LawReport:
    _check_monoid_shapes(mon.cat, mon.carrier, mon.m, mon.u)
    report = LawReport()
    _monoid_laws(report, mon.cat, mon.carrier, mon.m, mon.u)
    return report


def check_comonoid(com: ComonoidData) -> LawReport:
    _check_comonoid_shapes(com.cat, com.carrier, com.d, com.e)
    report = LawReport()
    _comonoid_laws(report, com.cat, com.carrier, com.d, com.e)
    return report


def check_hopf(h: HopfAlgebraData) -> LawReport:
    """Check every Hopf algebra axiom; failures carry the first differing basis index."""
    cat, a = h.cat, h.carrier
    _check_monoid_shapes(cat, a, h.m, h.u)
    _check_comonoid_shapes(cat, a, h.d, h.e)
    _expect_type(h.s, a, a, "antipode")
    report = LawReport()
    if cat is GRVECT:
        for label, f in (("m", h.m), ("u", h.u), ("d", h.d), ("e", h.e), ("s", h.s)):
            bad = GRVECT.degree_violation(f)
            report.add(f"degree.{label}", bad is None, None if bad is None else {"entry": list(bad)})
    _monoid_laws(report, cat, a, h.m, h.u)
    _comonoid_laws(report, cat, a, h.d, h.e)
    one = cat.id(a)
    sym = cat.symmetry(a, a)
    # d and e are monoid morphisms, using the ambient braiding on A(x)A
    twisted = cat.compose(cat.tensor(h.m, h.m), cat.tensor(one, sym, one), cat.tensor(h.d, h.d))
    report.expect_equal(cat, "bialgebra.comult", cat.compose(h.d, h.m), twisted)
    report.expect_equal(cat, "bialgebra.counit", cat.compose(h.e, h.m), cat.tensor(h.e, h.e))
    report.expect_equal(cat, "bialgebra.unit", cat.compose(h.d, h.u), cat.tensor(h.u, h.u))
    report.expect_equal(cat, "bialgebra.unit_counit", cat.compose(h.e, h.u), cat.id(cat.unit()))
    ue = cat.compose(h.u, h.e)
    report.expect_equal(cat, "antipode.left", cat.compose(h.m, cat.tensor(h.s, one), h.d), ue)
    report.expect_equal(cat, "antipode.right", cat.compose(h.m, cat.tensor(one, h.s), h.d), ue)
    return report


def dual_pair_report(p: DualPairData) -> LawReport:
    cat = p.cat
    _expect_type(p.ev, cat.tensor_obj(p.left, p.right), cat.unit(), "evaluation")
    _expect_type(p.coev, cat.unit(), cat.tensor_obj(p.right, p.left), "coevaluation")
    report = LawReport()
    x, y = cat.id(p.left), cat.id(p.right)
    report.expect_equal(cat, "snake.left", cat.compose(cat.tensor(p.ev, x), cat.tensor(x, p.coev)), x)
    report.expect_equal(cat, "snake.right", cat.compose(cat.tensor(y, p.ev), cat.tensor(p.coev, y)), y)
    return report


def check_dual_pair(p: DualPairData) -> bool:
    """True iff both triangle identities hold exactly."""
    try:
        return dual_pair_report(p).ok
    except ContractViolation:
        return False


def dual_pair_adjunction_report(p: DualPairData, probes: Sequence) -> LawReport:
    """Triangle identities of the induced adjunction ``X(x)- -| Y(x)-`` on probes."""
    cat = p.cat
    report = LawReport()
    x, y = cat.id(p.left), cat.id(p.right)
    for obj in probes:
        o = cat.id(obj)
        unit_m = cat.tensor(p.coev, o)                          # M -> Y X M
        counit_xm = cat.tensor(p.ev, cat.id(p.left), o)         # X Y X M -> X M
        report.expect_equal(cat, "adjunction.left_triangle", cat.compose(counit_xm, cat.tensor(x, unit_m)), cat.tensor(x, o), obj)
        unit_ym = cat.tensor(p.coev, y, o)                      # Y M -> Y X Y M
        counit_n = cat.tensor(y, p.ev, o)                       # Y X Y M -> Y M
        report.expect_equal(cat, "adjunction.right_triangle", cat.compose(counit_n, unit_ym), cat.tensor(y, o), obj)
    return report


def check_frobenius_monoid(f: FrobeniusData) -> LawReport:
    """Comonoid laws, both Frobenius squares and both unit triangles."""
    cat, a = f.cat, f.carrier
    com = f.comonoid
    _check_comonoid_shapes(cat, a, com.d, com.e)
    _check_monoid_shapes(cat, a, f.m, f.u)
    report = LawReport()
    if cat is GRVECT:
        bad = [label for label, g in (("u", f.u), ("m", f.m), ("d", com.d), ("e", com.e))
               if GRVECT.degree_violation(g) is not None]
        if bad:
            report.add("degree", False, {"maps": bad})
            return report
        report.add("degree", True)
    _comonoid_laws(report, cat, a, com.d, com.e)
    one = cat.id(a)
    dm = cat.compose(com.d, f.m)
    report.expect_equal(cat, "frobenius.left", cat.compose(cat.tensor(f.m, one), cat.tensor(one, com.d)), dm)
    report.expect_equal(cat, "frobenius.right", cat.compose(cat.tensor(one, f.m), cat.tensor(com.d, one)), dm)
    report.expect_equal(cat, "unit.right", cat.compose(f.m, cat.tensor(one, f.u)), one)
    report.expect_equal(cat, "unit.left", cat.compose(f.m, cat.tensor(f.u, one)), one)
    return report


def frobenius_dual_pair(f: FrobeniusData) -> DualPairData:
    """The self-duality ``(e o m, d o u)`` of a Frobenius monoid."""
    cat = f.cat
    return DualPairData(cat, f.carrier, f.carrier, cat.compose(f.comonoid.e, f.m), cat.compose(f.comonoid.d, f.u))


# -- structure-constant builders ------------------------------------------------


def _linear(cat, dom, cod, images: dict[int, dict[int, Any]]) -> LinMor:
    # images[j] = {i: coeff}: column j is the image of basis vector j
    data: dict[int, dict[int, Any]] = {}
    for j, col in images.items():
        for i, v in col.items():
            data.setdefault(i, {})[j] = v
    return cat.mor(dom, cod, RationalMatrix(cat.dim(cod), cat.dim(dom), data))


def _from_tables(cat, carrier, mult: Callable[[int, int], dict[int, Any]], unit_index: int,
                 comult: Callable[[int], dict[tuple[int, int], Any]], counit: Sequence,
                 antipode: Callable[[int], dict[int, Any]], name: str, basis: Sequence[str]) -> HopfAlgebraData:
    n = cat.dim(carrier)
    aa = cat.tensor_obj(carrier, carrier)
    one = cat.unit()
    m = _linear(cat, aa, carrier, {a * n + b: mult(a, b) for a in range(n) for b in range(n)})
    u = _linear(cat, one, carrier, {0: {unit_index: 1}})
    d = _linear(cat, carrier, aa, {a: {i * n + j: v for (i, j), v in comult(a).items()} for a in range(n)})
    e = _linear(cat, carrier, one, {a: {0: counit[a]} for a in range(n)})
    s = _linear(cat, carrier, carrier, {a: antipode(a) for a in range(n)})
    return HopfAlgebraData(cat, carrier, m, u, d, e, s, name, tuple(basis))


def group_algebra(n: int, cat: Category = FINVECT) -> HopfAlgebraData:
    """The group algebra of the cyclic group of order ``n`` on the basis ``g^0..g^(n-1)``."""
    if n < 1:
        raise ContractViolation("group order must be at least 1")
    if cat is FINSET:
        return cyclic_group_object(n)
    carrier = n if cat is FINVECT else GradedSpace.of(n, 0)
    return _from_tables(
        cat, carrier,
        mult=lambda a, b: {(a + b) % n: 1},
        unit_index=0,
        comult=lambda a: {(a, a): 1},
        counit=[1] * n,
        antipode=lambda a: {(-a) % n: 1},
        name=f"kZ{n}",
        basis=[f"g^{i}" for i in range(n)],
    )


def cyclic_group_object(n: int) -> HopfAlgebraData:
    """The cyclic group of order ``n`` as a Hopf monoid in finite sets (diagonal, inverse)."""
    c = FINSET
    return HopfAlgebraData(
        c, n,
        m=c.mor(n * n, n, [(a + b) % n for a in range(n) for b in range(n)]),
        u=c.mor(1, n, [0]),
        d=c.mor(n, n * n, [a * n + a for a in range(n)]),
        e=c.mor(n, 1, [0] * n),
        s=c.mor(n, n, [(-a) % n for a in range(n)]),
        name=f"Z{n}",
        basis=tuple(f"g^{i}" for i in range(n)),
    )


# Sweedler's algebra on the basis 1, g, x, gx: g^2 = 1, x^2 = 0, xg = -gx
_SWEEDLER_MULT = {
    (0, 0): {0: 1}, (0, 1): {1: 1}, (0, 2): {2: 1}, (0, 3): {3: 1},
    (1, 0): {1: 1}, (1, 1): {0: 1}, (1, 2): {3: 1}, (1, 3): {2: 1},
    (2, 0): {2: 1}, (2, 1): {3: -1}, (2, 2): {}, (2, 3): {},
    (3, 0): {3: 1}, (3, 1): {2: -1}, (3, 2): {}, (3, 3): {},
}
_SWEEDLER_COMULT = {
    0: {(0, 0): 1},
    1: {(1, 1): 1},
    2: {(2, 0): 1, (1, 2): 1},
    3: {(3, 1): 1, (0, 3): 1},
}
_SWEEDLER_ANTIPODE = {0: {0: 1}, 1: {1: 1}, 2: {3: -1}, 3: {2: 1}}


def sweedler_algebra() -> HopfAlgebraData:
    """Sweedler's four-dimensional Hopf algebra with ``d(x) = x(x)1 + g(x)x``."""
    return _from_tables(
        FINVECT, 4,
        mult=lambda a, b: _SWEEDLER_MULT[(a, b)],
        unit_index=0,
        comult=lambda a: _SWEEDLER_COMULT[a],
        counit=[1, 1, 0, 0],
        antipode=lambda a: _SWEEDLER_ANTIPODE[a],
        name="sweedler",
        basis=["1", "g", "x", "gx"],
    )


def graded_nilpotent_algebra() -> HopfAlgebraData:
    """``k[x]/(x^2)`` in graded spaces: ``1`` even and group-like, ``x`` odd and primitive."""
    return _from_tables(
        GRVECT, GradedSpace.of(1, 1),
        mult=lambda a, b: {a + b: 1} if a + b < 2 else {},
        unit_index=0,
        comult=lambda a: {(0, 0): 1} if a == 0 else {(1, 0): 1, (0, 1): 1},
        counit=[1, 0],
        antipode=lambda a: {0: 1} if a == 0 else {1: -1},
        name="graded-nilpotent",
        basis=["1", "x"],
    )


def nilpotent_frobenius_ungraded() -> FrobeniusData:
    """``k[x]/(x^2)`` in ungraded spaces with its standard Frobenius structure.

    Polynomial multiplication and unit ``1``; ``d(1) = 1(x)x + x(x)1``,
    ``d(x) = x(x)x`` and the counit reads off the coefficient of ``x``.
    """
    c = FINVECT
    m = _linear(c, 4, 2, {0: {0: 1}, 1: {1: 1}, 2: {1: 1}, 3: {}})
    u = _linear(c, 1, 2, {0: {0: 1}})
    d = _linear(c, 2, 4, {0: {1: 1, 2: 1}, 1: {3: 1}})
    e = _linear(c, 2, 1, {0: {}, 1: {0: 1}})
    return FrobeniusData(ComonoidData(c, 2, d, e), u, m)


def trivial_frobenius(cat: Category = FINVECT) -> FrobeniusData:
    one = cat.unit()
    i = cat.id(one)
    return FrobeniusData(ComonoidData(cat, one, i, i), i, i)


# -- Frobenius structure search -------------------------------------------------

FOUND = "found"
REFUTED = "refuted"
UNDECIDED = "undecided"


@dataclass(frozen=True)
class FrobeniusConstraints:
    """Extra linear side-conditions on a Frobenius structure ``(u, m)``.

    Each callable maps a candidate morphism to a morphism that must vanish and
    must be linear in the candidate (e.g. "``u`` is a T-algebra morphism").
    """

    u_residual: Optional[Callable[[Any], Any]] = None
    m_residual: Optional[Callable[[Any], Any]] = None
    label: str = "constraints"
    # predicates used where residuals make no sense (FinSet)
    u_holds: Optional[Callable[[Any], bool]] = None
    m_holds: Optional[Callable[[Any], bool]] = None


@dataclass
class FrobeniusSearchResult:
    outcome: str
    u: Any = None
    m: Any = None
    reason: str = ""
    unit_space_dim: int = 0
    candidates: int = 0
    report: Optional[LawReport] = None

    @property
    def frobenius(self) -> Optional[FrobeniusData]:
        return self._data

    _data: Optional[FrobeniusData] = field(default=None, repr=False)


def _vec(f) -> list:
    return list(f.mat.entries)


def _linear_map_matrix(fn: Callable[[LinMor], LinMor], basis: Sequence[LinMor]) -> RationalMatrix:
    """Matrix of a linear ``fn`` whose columns are ``vec(fn(b))``."""
    cols = {}
    out_len = None
    for j, b in enumerate(basis):
        v = _vec(fn(b))
        out_len = len(v)
        cols[j] = {i: x for i, x in enumerate(v) if x}
    if out_len is None:
        out_len = 0
    data: dict[int, dict[int, Any]] = {}
    for j, col in cols.items():
        for i, x in col.items():
            data.setdefault(i, {})[j] = x
    return RationalMatrix(out_len, len(basis), data)


def _elementary(dom, cod, rows: int, cols: int) -> list[LinMor]:
    return [LinMor(dom, cod, RationalMatrix(rows, cols, {i: {j: 1}})) for i in range(rows) for j in range(cols)]


def _assemble(cat, com: ComonoidData, u: LinMor) -> Optional[LinMor]:
    """Rebuild ``m = (beta (x) 1) o (1 (x) d)`` with ``beta`` inverse to ``d o u``."""
    n = cat.dim(com.carrier)
    w_vec = cat.compose(com.d, u).mat
    w = RationalMatrix(n, n, {a: {b: w_vec[a * n + b, 0] for b in range(n)} for a in range(n)})
    beta = try_inverse(w)
    if beta is None:
        return None
    data: dict[int, dict[int, Any]] = {}
    dm = com.d.mat
    for a in range(n):
        for c in range(n):
            bac = beta[a, c]
            if not bac:
                continue
            for b in range(n):
                for e in range(n):
                    v = dm[c * n + e, b]
                    if v:
                        row = data.setdefault(e, {})
                        row[a * n + b] = row.get(a * n + b, 0) + bac * v
    return LinMor(cat.tensor_obj(com.carrier, com.carrier), com.carrier, RationalMatrix(n, n * n, data))


def _verify(cat, com, u, m, constraints) -> LawReport:
    report = check_frobenius_monoid(FrobeniusData(com, u, m))
    if constraints is not None:
        if constraints.u_residual is not None:
            r = constraints.u_residual(u)
            report.add(f"{constraints.label}.u", r.mat.is_zero())
        if constraints.m_residual is not None:
            r = constraints.m_residual(m)
            report.add(f"{constraints.label}.m", r.mat.is_zero())
    return report


_GRID = [Fraction(v) for v in (1, -1, 2, -2, 3, -3)] + [Fraction(1, 2), Fraction(-1, 2), Fraction(1, 3), Fraction(-1, 3), Fraction(3, 2), Fraction(-3, 2)]


def frobenius_structure_search(com: ComonoidData, constraints: Optional[FrobeniusConstraints] = None,
                               max_dim: int = 6, grid_budget: int = 2000) -> FrobeniusSearchResult:
    """Decide whether a comonoid extends to a Frobenius monoid.

    Any Frobenius structure has ``e o m`` inverse to the copairing ``d o u``
    and ``m = (e o m (x) 1) o (1 (x) d)``, so ``m`` is determined by ``u`` and
    ``(lu, m/l)`` is a solution whenever ``(u, m)`` is.  The unit therefore
    ranges over the projectivised space of admissible units.  Up to three
    unit directions (two projective parameters) the remaining polynomial
    conditions are solved symbolically, which lets the search refute; beyond
    that it samples a rational grid and can only find or give up.
    """
    cat = com.cat
    if not cat.linear:
        return _finite_set_search(com, constraints)
    _check_comonoid_shapes(cat, com.carrier, com.d, com.e)
    a = com.carrier
    n = cat.dim(a)
    if n > max_dim:
        return FrobeniusSearchResult(UNDECIDED, reason=f"carrier dimension {n} exceeds search budget {max_dim}")
    unit = cat.unit()
    u_basis = cat.hom_basis(unit, a)
    if constraints is not None and constraints.u_residual is not None and u_basis:
        k_u = _linear_map_matrix(constraints.u_residual, u_basis)
        ker = kernel_basis(k_u)
        directions = []
        for j in range(ker.cols):
            coeffs = [ker[i, j] for i in range(ker.rows)]
            directions.append(_combine(cat, u_basis, coeffs))
    else:
        directions = list(u_basis)
    k = len(directions)
    if k == 0:
        return FrobeniusSearchResult(REFUTED, reason="no admissible unit morphism", unit_space_dim=0)

    # linear conditions on m: both Frobenius squares, degree, side constraints
    aa = cat.tensor_obj(a, a)
    m_basis = _elementary(aa, a, n, n * n)
    one = cat.id(a)
    d = com.d
    blocks = [
        lambda m: cat.sub(cat.compose(d, m), cat.compose(cat._tensor2(m, one), cat.tensor(one, d))),
        lambda m: cat.sub(cat.compose(d, m), cat.compose(cat._tensor2(one, m), cat.tensor(d, one))),
    ]
    if constraints is not None and constraints.m_residual is not None:
        blocks.append(constraints.m_residual)
    lin_m = [_linear_map_matrix(fn, m_basis) for fn in blocks]
    if cat is GRVECT:
        off = [idx for idx in range(n * n * n)
               if a.degrees[idx // (n * n)] != aa.degrees[idx % (n * n)]]
        lin_m.append(RationalMatrix(len(off), n ** 3, {r: {idx: 1} for r, idx in enumerate(off)}))
    left_unit = [_linear_map_matrix(lambda m, uj=uj: cat.compose(m, cat.tensor(uj, one)), m_basis) for uj in directions]
    right_unit = [_linear_map_matrix(lambda m, uj=uj: cat.compose(m, cat.tensor(one, uj)), m_basis) for uj in directions]

    from . import _frobenius_symbolic as sym

    tried = 0
    undecided = False
    for chart in range(k):
        nparams = k - 1 - chart
        if nparams <= 2:
            points = sym.solve_chart(cat, com, directions, chart, lin_m, left_unit, right_unit)
            if points is None:
                undecided = True
                points = []
        else:
            undecided = True
            points = _grid_points(nparams, grid_budget)
        for params in points:
            coeffs = [Fraction(0)] * chart + [Fraction(1)] + list(params)
            u = _combine(cat, directions, coeffs)
            m = _assemble(cat, com, u)
            tried += 1
            if m is None:
                continue
            report = _verify(cat, com, u, m, constraints)
            if report.ok:
                u, m = _normalise(cat, com, u, m)
                result = FrobeniusSearchResult(FOUND, u, m, reason=f"unit space of dimension {k}",
                                               unit_space_dim=k, candidates=tried, report=_verify(cat, com, u, m, constraints))
                result._data = FrobeniusData(com, u, m)
                return result
    if undecided:
        return FrobeniusSearchResult(UNDECIDED, reason=f"no solution on the sampled grid (unit space of dimension {k})",
                                     unit_space_dim=k, candidates=tried)
    reason = "every admissible unit gives a degenerate copairing or violates the Frobenius laws"
    return FrobeniusSearchResult(REFUTED, reason=reason, unit_space_dim=k, candidates=tried)


_SET_SEARCH_CAP = 10 ** 6


def _finite_set_search(com: ComonoidData, constraints: Optional[FrobeniusConstraints]) -> FrobeniusSearchResult:
    """Exhaustive search over all unit and multiplication tables of a finite set."""
    cat = com.cat
    _check_comonoid_shapes(cat, com.carrier, com.d, com.e)
    n = cat.size(com.carrier)
    nn = cat.tensor_obj(com.carrier, com.carrier)
    total = n * n ** (n * n)
    if total > _SET_SEARCH_CAP:
        return FrobeniusSearchResult(UNDECIDED, reason=f"{total} candidate tables exceed the enumeration cap")
    units = cat.all_morphisms(cat.unit(), com.carrier)
    if constraints is not None and constraints.u_holds is not None:
        units = [u for u in units if constraints.u_holds(u)]
    if not units:
        return FrobeniusSearchResult(REFUTED, reason="no admissible unit morphism")
    tried = 0
    for u in units:
        for m in cat.all_morphisms(nn, com.carrier):
            tried += 1
            report = check_frobenius_monoid(FrobeniusData(com, u, m))
            if not report.ok:
                continue
            if constraints is not None and constraints.m_holds is not None:
                ok = constraints.m_holds(m)
                report.add(f"{constraints.label}.m", ok)
                if not ok:
                    continue
            result = FrobeniusSearchResult(FOUND, u, m, reason="exhaustive table search",
                                           unit_space_dim=len(units), candidates=tried, report=report)
            result._data = FrobeniusData(com, u, m)
            return result
    return FrobeniusSearchResult(REFUTED, reason=f"none of {tried} candidate tables is a Frobenius structure",
                                 unit_space_dim=len(units), candidates=tried)


def _combine(cat, basis: Sequence[LinMor], coeffs: Sequence) -> LinMor:
    total = cat.scale(basis[0], coeffs[0])
    for b, c in zip(basis[1:], coeffs[1:]):
        if c:
            total = cat.add(total, cat.scale(b, c))
    return total


def _normalise(cat, com, u, m):
    eu = cat.compose(com.e, u).mat[0, 0]
    if eu and eu != 1:
        return cat.scale(u, Fraction(1) / Fraction(eu)), cat.scale(m, eu)
    return u, m


def _grid_points(nparams: int, budget: int):
    count = 0
    values = [Fraction(0)] + _GRID
    for point in product(values, repeat=nparams):
        yield point
        count += 1
        if count >= budget:
            return
