"""Right adjoints of the forgetful functor, Frobenius monoidal functors, ambidexterity.

Given a left Hopf comonoidal monad ``T`` with free/forgetful adjunction
``L -| U``, an object ``C`` and morphisms ``u: 1 -> LC``,
``m: L1 (x) LC -> L1`` making ``LC`` a right dual of ``L1``, the functor
``R = L(C (x) -)`` is right adjoint to ``U``.  The unit is
``H^l^-1 o (u (x) 1)`` and the counit is the unique factorisation through the
unit of ``L -| U``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Optional, Sequence

from .algebras import (ComonoidData, DualPairData, FrobeniusConstraints, dual_pair_report,
                       frobenius_structure_search)
from .categories import Category, ContractViolation
from .exact import RationalMatrix, kernel_basis, try_inverse
from .eilenberg_moore import (AdjunctionData, AlgMor, Functor, em_adjunction, em_tensor, em_unit, free_algebra,
                              hopf_inverse_left, hopf_inverse_right, hopf_operator_left, hopf_operator_right,
                              is_algebra_morphism)
from .monads import ComonoidalMonad, _memo, descent_type_check, is_right_hopf, monic_check
from .reports import HOLDS, REFUTED, UNDECIDED, LawReport, Verdict


class ConstructionRefused(ContractViolation):
    """A precondition of a construction does not hold; ``stage`` names it."""

    def __init__(self, stage: str, detail: str, witness: Any = None):
        super().__init__(f"{stage}: {detail}")
        self.stage = stage
        self.detail = detail
        self.witness = witness


@dataclass(eq=False)
class WirthmullerInput:
    """``u: 1 -> TC`` and ``m: T1 (x) TC -> T1`` as morphisms of the ambient category."""

    t: ComonoidalMonad
    c: Any
    u: Any
    m: Any
    require_algebra_maps: bool = True


def _lc_objects(w: WirthmullerInput):
    t = w.t
    return free_algebra(t, t.cat.unit()), free_algebra(t, w.c)


def lc_dual_pair(w: WirthmullerInput) -> DualPairData:
    """``e = L0 o m`` and ``d = L2 o u`` exhibiting ``LC`` as a right dual of ``L1``."""
    t, c = w.t, w.t.cat
    one = c.unit()
    ev = c.compose(t.t0, w.m)
    coev = c.compose(t.t2(w.c, one), w.u)
    return DualPairData(c, t.obj(one), t.obj(w.c), ev, coev)


def check_LC(w: WirthmullerInput) -> LawReport:
    """The four (LC) diagrams, both snake identities and the algebra-map conditions."""
    t, c = w.t, w.t.cat
    one = c.unit()
    l1, lc = t.obj(one), t.obj(w.c)
    if w.u.dom != one or w.u.cod != lc:
        raise ContractViolation("u must be a morphism 1 -> TC")
    if w.m.dom != c.tensor_obj(l1, lc) or w.m.cod != l1:
        raise ContractViolation("m must be a morphism T1 (x) TC -> T1")
    r = LawReport()
    u, m = w.u, w.m
    i1, ic = c.id(l1), c.id(lc)
    l2_11 = t.t2(one, one)
    l2_c1 = t.t2(w.c, one)
    r.expect_equal(c, "LC.i", c.compose(l2_11, m), c.compose(c.tensor(i1, m), c.tensor(l2_11, ic)))
    r.expect_equal(c, "LC.ii", c.compose(l2_11, m), c.compose(c.tensor(m, i1), c.tensor(i1, l2_c1)))
    r.expect_equal(c, "LC.iii", c.compose(m, c.tensor(i1, u)), i1)
    r.expect_equal(c, "LC.iv", c.compose(c.tensor(ic, m), c.tensor(l2_c1, ic), c.tensor(u, ic)), l2_c1)
    r.extend(dual_pair_report(lc_dual_pair(w)))
    if w.require_algebra_maps:
        L1, LC = _lc_objects(w)
        r.add("algebra_map.u", is_algebra_morphism(t, em_unit(t), LC, u))
        r.add("algebra_map.m", is_algebra_morphism(t, em_tensor(t, L1, LC), L1, m))
    # the unit is recovered as the transpose of T0 under the duality
    pair = lc_dual_pair(w)
    ubar = c.compose(c.tensor(ic, t.t0), pair.coev)
    r.expect_equal(c, "transpose.unit", ubar, u)
    r.add("transpose.algebra_map", is_algebra_morphism(t, em_unit(t), free_algebra(t, w.c), ubar))
    return r


def input_from_unit(t: ComonoidalMonad, cobj, u) -> Optional[WirthmullerInput]:
    """Complete ``u`` to an (LC) datum: ``e`` inverts the copairing and ``m = (e (x) 1) o (1 (x) L2)``.

    Returns None when the copairing ``L2 o u`` is degenerate.
    """
    c = t.cat
    one = c.unit()
    l1, lc = t.obj(one), t.obj(cobj)
    n1, nc = c.dim(l1), c.dim(lc)
    if n1 != nc:
        return None
    dvec = c.compose(t.t2(cobj, one), u).mat
    dmat = RationalMatrix(nc, n1, {a: {b: dvec[a * n1 + b, 0] for b in range(n1)} for a in range(nc)})
    inv = try_inverse(dmat)
    if inv is None:
        return None
    ev = c.from_vector(c.tensor_obj(l1, lc), one, [inv[i, a] for i in range(n1) for a in range(nc)])
    m = c.compose(c.tensor(ev, c.id(l1)), c.tensor(c.id(l1), t.t2(cobj, one)))
    return WirthmullerInput(t, cobj, u, m)


def wirthmuller_input_search(t: ComonoidalMonad, cobj) -> Optional[WirthmullerInput]:
    """An (LC) datum whose unit is a basis vector of the admissible unit space, if one exists."""
    c = t.cat
    if not c.linear:
        raise ContractViolation("the unit search needs a linear category")
    I, LC = em_unit(t), free_algebra(t, cobj)
    basis = c.hom_basis(I.carrier, LC.carrier)
    if not basis:
        return None
    cols = []
    for b in basis:
        res = c.sub(c.compose(b, I.action), c.compose(LC.action, t.mor(b)))
        cols.append(list(res.mat.entries))
    mat = RationalMatrix(len(cols[0]), len(basis), {i: {j: col[i] for j, col in enumerate(cols) if col[i]}
                                                   for i in range(len(cols[0]))})
    ker = kernel_basis(mat)
    for j in range(ker.cols):
        u = None
        for i, b in enumerate(basis):
            if ker[i, j]:
                term = c.scale(b, ker[i, j])
                u = term if u is None else c.add(u, term)
        w = input_from_unit(t, cobj, u)
        if w is not None and check_LC(w).ok:
            return w
    return None


@dataclass(eq=False)
class RightAdjointData:
    """A right adjoint ``R`` of the forgetful functor, with unit, counit and lax structure."""

    w: WirthmullerInput
    adj: AdjunctionData
    variant: str
    R: Functor
    eta_fn: Any
    eps_fn: Any
    r2_fn: Any
    r0: AlgMor
    _cache: dict = field(default_factory=dict, repr=False)

    def eta(self, a):
        return _memo(self._cache, ("eta", a), lambda: self.eta_fn(a))

    def eps(self, x):
        return _memo(self._cache, ("eps", x), lambda: self.eps_fn(x))

    def r2(self, x, y):
        return _memo(self._cache, ("r2", x, y), lambda: self.r2_fn(x, y))

    @property
    def t(self) -> ComonoidalMonad:
        return self.w.t


def _require(verdict: Verdict, stage: str) -> None:
    if verdict.status != HOLDS:
        raise ConstructionRefused(stage, verdict.detail or verdict.status, verdict.witness)


def theta(w: WirthmullerInput, a):
    """``UL(C (x) UA) -> UA``, the mate used to pin down the counit."""
    t = w.t
    adj = em_adjunction(t)
    c, d = t.cat, adj.upper
    one = c.unit()
    rc = free_algebra(t, c.tensor_obj(w.c, a.carrier))
    pair = lc_dual_pair(w)
    L1, LC = _lc_objects(w)
    e_alg = AlgMor(em_tensor(t, L1, LC), em_unit(t), pair.ev)
    body = d.compose(d.tensor(e_alg, d.id(a)),
                     d.tensor(d.id(L1), hopf_operator_left(adj, w.c, a)),
                     hopf_operator_left(adj, one, rc))
    return c.compose(body.underlying, t.eta(rc.carrier))


def theta_bar(w: WirthmullerInput, a):
    """``ULUA -> UA``, the mate for the right-handed variant (requires ``C = 1``)."""
    t = w.t
    adj = em_adjunction(t)
    c, d = t.cat, adj.upper
    one = c.unit()
    lua = free_algebra(t, a.carrier)
    L1 = free_algebra(t, one)
    e_alg = AlgMor(em_tensor(t, L1, L1), em_unit(t), lc_dual_pair(w).ev)
    body = d.compose(d.tensor(d.id(a), e_alg),
                     d.tensor(hopf_operator_right(adj, a, one), d.id(L1)),
                     hopf_operator_right(adj, lua, one))
    return c.compose(body.underlying, t.eta(lua.carrier))


def right_adjoint_construct(w: WirthmullerInput, probes: Sequence) -> RightAdjointData:
    """``R = L(C (x) -)`` with unit ``H^l^-1 o (u (x) 1)`` and counit through the equaliser."""
    t = w.t
    lc_report = check_LC(w)
    bad = lc_report.first_failure()
    if bad is not None:
        raise ConstructionRefused("LC", f"{bad.law} fails", bad.witness)
    _require(descent_type_check(t, probes), "descent")
    _require(monic_check(t, w.c, probes), "monic")
    adj = em_adjunction(t)
    c, d = t.cat, adj.upper
    cobj = w.c
    L1, LC = _lc_objects(w)
    u_alg = AlgMor(em_unit(t), LC, w.u)

    R = Functor(c, d, lambda x: free_algebra(t, c.tensor_obj(cobj, x)),
                lambda f: adj.L.mor(c.tensor(c.id(cobj), f)), "R")

    def eta(a):
        return d.compose(hopf_inverse_left(adj, cobj, a), d.tensor(u_alg, d.id(a)))

    def eps(x):
        target = c.compose(theta(w, free_algebra(t, x)), t.mor(c.tensor(c.id(cobj), t.eta(x))))
        k = c.factor(t.eta(x), target)
        if k is None:
            raise ConstructionRefused("counit", f"no factorisation through the unit at {x!r}")
        return k

    def r2(x, y):
        ry = R.obj(y)
        h_inv = hopf_inverse_left(adj, c.tensor_obj(cobj, x), ry)
        return d.compose(adj.L.mor(c.tensor(c.id(cobj), c.id(x), eps(y))), h_inv)

    return RightAdjointData(w, adj, "left", R, eta, eps, r2, u_alg)


def right_adjoint_right_variant(w: WirthmullerInput, probes: Sequence) -> RightAdjointData:
    """The right-coHopf right adjoint ``L`` with unit ``H^r^-1 o (1 (x) u)`` (``C = 1`` only)."""
    t = w.t
    c = t.cat
    if w.c != c.unit():
        raise ContractViolation("the right-handed variant is defined for C = 1")
    lc_report = check_LC(w)
    bad = lc_report.first_failure()
    if bad is not None:
        raise ConstructionRefused("LC", f"{bad.law} fails", bad.witness)
    _require(is_right_hopf(t, probes), "right-hopf")
    _require(descent_type_check(t, probes), "descent")
    adj = em_adjunction(t)
    d = adj.upper
    one = c.unit()
    L1 = free_algebra(t, one)
    u_alg = AlgMor(em_unit(t), L1, w.u)
    R = Functor(c, d, adj.L.obj, adj.L.mor, "Rbar")

    def eta(a):
        return d.compose(hopf_inverse_right(adj, a, one), d.tensor(d.id(a), u_alg))

    def eps(x):
        target = c.compose(theta_bar(w, free_algebra(t, x)), t.mor(t.eta(x)))
        k = c.factor(t.eta(x), target)
        if k is None:
            raise ConstructionRefused("counit", f"no factorisation through the unit at {x!r}")
        return k

    def r2(x, y):
        h_inv = hopf_inverse_right(adj, free_algebra(t, x), y)
        return d.compose(adj.L.mor(c.tensor(eps(x), c.id(y))), h_inv)

    return RightAdjointData(w, adj, "right", R, eta, eps, r2, u_alg)


def check_right_adjoint(r: RightAdjointData, xs: Sequence, algebras: Sequence) -> LawReport:
    """Triangle identities of ``U -| R`` and the monoidal-functor laws of ``(R, r2, r0)``."""
    adj = r.adj
    c, d = adj.lower, adj.upper
    R, U = r.R, adj.U
    rep = LawReport()
    for a in algebras:
        rep.expect_equal(c, "triangle.unit", c.compose(r.eps(U.obj(a)), U.mor(r.eta(a))), c.id(U.obj(a)), repr(a))
    for x in xs:
        rx = R.obj(x)
        rep.expect_equal(d, "triangle.counit", d.compose(R.mor(r.eps(x)), r.eta(rx)), d.id(rx), repr(x))
        rep.expect_equal(d, "monoidal.unit_left", d.compose(r.r2(c.unit(), x), d.tensor(r.r0, d.id(rx))), d.id(rx), repr(x))
        rep.expect_equal(d, "monoidal.unit_right", d.compose(r.r2(x, c.unit()), d.tensor(d.id(rx), r.r0)), d.id(rx), repr(x))
        for y in xs:
            for z in xs:
                xy, yz = c.tensor_obj(x, y), c.tensor_obj(y, z)
                lhs = d.compose(r.r2(xy, z), d.tensor(r.r2(x, y), d.id(R.obj(z))))
                rhs = d.compose(r.r2(x, yz), d.tensor(d.id(rx), r.r2(y, z)))
                rep.expect_equal(d, "monoidal.assoc", lhs, rhs, [repr(x), repr(y), repr(z)])
    return rep


def lax_structure(r: RightAdjointData):
    """``(r0, r2)`` with ``r0 = u`` and ``r2 = L(1 (x) 1 (x) eps^r) o H^l^-1``."""
    return r.r0, r.r2


def cohopf_left(r: RightAdjointData, x, a):
    """``RX (x) A -> RX (x) RUA -> R(X (x) UA)``."""
    d = r.adj.upper
    return d.compose(r.r2(x, a.carrier), d.tensor(d.id(r.R.obj(x)), r.eta(a)))


def cohopf_right(r: RightAdjointData, a, x):
    """``A (x) RX -> RUA (x) RX -> R(UA (x) X)``."""
    d = r.adj.upper
    return d.compose(r.r2(a.carrier, x), d.tensor(r.eta(a), d.id(r.R.obj(x))))


def cohopf_report(r: RightAdjointData, xs: Sequence, algebras: Sequence) -> LawReport:
    """The left coHopf operator against the left Hopf operator at ``(C (x) X, A)``."""
    adj = r.adj
    c, d = adj.lower, adj.upper
    rep = LawReport()
    for x in xs:
        for a in algebras:
            chi = cohopf_left(r, x, a)
            h = hopf_operator_left(adj, c.tensor_obj(r.w.c, x), a)
            w = [repr(x), repr(a)]
            rep.expect_equal(d, "cohopf.chi_after_h", d.compose(chi, h), d.id(h.dom), w)
            rep.expect_equal(d, "cohopf.h_after_chi", d.compose(h, chi), d.id(chi.dom), w)
    return rep


def cohopf_identity(r: RightAdjointData, probes: Sequence, algebras: Sequence) -> Verdict:
    rep = cohopf_report(r, probes, algebras)
    bad = rep.first_failure()
    if bad is None:
        return Verdict(HOLDS)
    return Verdict(REFUTED, bad.witness, bad.law)


def compare_right_adjoints(left: RightAdjointData, right: RightAdjointData, xs: Sequence) -> dict:
    """The composite ``L(epsbar^r) o eta^r_L`` at each probe, its invertibility and monoidality."""
    adj = left.adj
    c, d = adj.lower, adj.upper
    comps, invertible, counits_equal = {}, True, True
    monoidal = LawReport()
    phi = {}
    for x in xs:
        lx = adj.L.obj(x)
        f = d.compose(adj.L.mor(right.eps(x)), left.eta(lx))
        phi[x] = f
        comps[repr(x)] = f.underlying
        if d.try_inverse(f) is None:
            invertible = False
        if not c.equal(left.eps(x), right.eps(x)):
            counits_equal = False
    for x in xs:
        for y in xs:
            lhs = d.compose(phi[c.tensor_obj(x, y)] if c.tensor_obj(x, y) in phi else _phi(left, right, c.tensor_obj(x, y)),
                            right.r2(x, y))
            rhs = d.compose(left.r2(x, y), d.tensor(phi[x], phi[y]))
            monoidal.expect_equal(d, "comparison.monoidal", lhs, rhs, [repr(x), repr(y)])
    monoidal.expect_equal(d, "comparison.monoidal_unit", d.compose(_phi(left, right, c.unit()), right.r0), left.r0)
    differing = [repr(x) for x in xs if not c.equal(left.eps(x), right.eps(x))]
    return {
        "composites": comps,
        "invertible": invertible,
        "monoidal": monoidal,
        "counits_equal": counits_equal,
        "counits_differ_at": differing,
    }


def _phi(left: RightAdjointData, right: RightAdjointData, x):
    d = left.adj.upper
    return d.compose(left.adj.L.mor(right.eps(x)), left.eta(left.adj.L.obj(x)))


# -- Frobenius monoidal functors --------------------------------------------------


@dataclass(eq=False)
class FrobeniusMonoidalFunctor:
    """A functor with monoidal ``(f2, f0)`` and comonoidal ``(F2, F0)`` structure."""

    src: Category
    tgt: Category
    F: Functor
    f2: Any
    f0: Any
    F2: Any
    F0: Any


def check_frobenius_monoidal_functor(fm: FrobeniusMonoidalFunctor, probes: Sequence) -> LawReport:
    """Both compatibility squares on all probe triples, plus (co)monoidal functor laws."""
    c, d = fm.src, fm.tgt
    F = fm.F
    r = LawReport()
    one = c.unit()
    for x in probes:
        fx = F.obj(x)
        r.expect_equal(d, "monoidal.unit_left", d.compose(fm.f2(one, x), d.tensor(fm.f0, d.id(fx))), d.id(fx), repr(x))
        r.expect_equal(d, "monoidal.unit_right", d.compose(fm.f2(x, one), d.tensor(d.id(fx), fm.f0)), d.id(fx), repr(x))
        r.expect_equal(d, "comonoidal.counit_left", d.compose(d.tensor(fm.F0, d.id(fx)), fm.F2(one, x)), d.id(fx), repr(x))
        r.expect_equal(d, "comonoidal.counit_right", d.compose(d.tensor(d.id(fx), fm.F0), fm.F2(x, one)), d.id(fx), repr(x))
        for y in probes:
            for z in probes:
                w = [repr(x), repr(y), repr(z)]
                fy, fz = F.obj(y), F.obj(z)
                xy, yz = c.tensor_obj(x, y), c.tensor_obj(y, z)
                lhs = d.compose(fm.f2(xy, z), d.tensor(fm.f2(x, y), d.id(fz)))
                rhs = d.compose(fm.f2(x, yz), d.tensor(d.id(fx), fm.f2(y, z)))
                r.expect_equal(d, "monoidal.assoc", lhs, rhs, w)
                lhs = d.compose(d.tensor(fm.F2(x, y), d.id(fz)), fm.F2(xy, z))
                rhs = d.compose(d.tensor(d.id(fx), fm.F2(y, z)), fm.F2(x, yz))
                r.expect_equal(d, "comonoidal.coassoc", lhs, rhs, w)
                lhs = d.compose(fm.F2(xy, z), fm.f2(x, yz))
                rhs = d.compose(d.tensor(fm.f2(x, y), d.id(fz)), d.tensor(d.id(fx), fm.F2(y, z)))
                r.expect_equal(d, "frobenius.eq1", lhs, rhs, w)
                lhs = d.compose(fm.F2(x, yz), fm.f2(xy, z))
                rhs = d.compose(d.tensor(d.id(fx), fm.f2(y, z)), d.tensor(fm.F2(x, y), d.id(fz)))
                r.expect_equal(d, "frobenius.eq2", lhs, rhs, w)
    return r


def transport_dual_pair(fm: FrobeniusMonoidalFunctor, p: DualPairData) -> DualPairData:
    """The image of a dual pair under a Frobenius monoidal functor."""
    d = fm.tgt
    F = fm.F
    ev = d.compose(fm.F0, F.mor(p.ev), fm.f2(p.left, p.right))
    coev = d.compose(fm.F2(p.right, p.left), F.mor(p.coev), fm.f0)
    return DualPairData(d, F.obj(p.left), F.obj(p.right), ev, coev)


def strong_monoidal_as_frobenius(cat: Category) -> FrobeniusMonoidalFunctor:
    """The identity functor with identity structure, the simplest Frobenius monoidal functor."""
    F = Functor(cat, cat, lambda x: x, lambda f: f, "Id")
    ident = lambda x, y: cat.id(cat.tensor_obj(x, y))  # noqa: E731
    return FrobeniusMonoidalFunctor(cat, cat, F, ident, cat.id(cat.unit()), ident, cat.id(cat.unit()))


def monad_as_frobenius_functor(r: RightAdjointData) -> FrobeniusMonoidalFunctor:
    """``T`` on the ambient category with ``(U r2, u)`` and ``(T2, T0)``."""
    t = r.t
    c = t.cat
    F = Functor(c, c, t.obj, t.mor, "T")
    return FrobeniusMonoidalFunctor(c, c, F, lambda x, y: r.r2(x, y).underlying, r.r0.underlying, t.t2, t.t0)


# -- the ambidextrous pipeline ----------------------------------------------------

PASS = "pass"
FAIL = "fail"
SKIPPED = "skipped"


@dataclass
class StageResult:
    stage: str
    status: str
    detail: str = ""
    report: Optional[LawReport] = None
    witness: Any = None


@dataclass
class PipelineReport:
    stages: list = field(default_factory=list)
    frobenius: Any = None
    right_adjoint: Optional[RightAdjointData] = None
    right_variant: Optional[StageResult] = None

    @property
    def ok(self) -> bool:
        return bool(self.stages) and all(s.status == PASS for s in self.stages)

    def stage(self, name: str) -> Optional[StageResult]:
        for s in self.stages:
            if s.stage == name:
                return s
        return None

    @property
    def halted_at(self) -> Optional[str]:
        for s in self.stages:
            if s.status != PASS:
                return s.stage
        return None


STAGES = ("frobenius-monoid", "descent", "right-adjoint", "self-adjunction", "frobenius-functor", "frobenius-monad")


def frobenius_constraints(t: ComonoidalMonad) -> FrobeniusConstraints:
    """``u`` and ``m`` must be morphisms of algebras ``I -> L1`` and ``L1 (x) L1 -> L1``."""
    c = t.cat
    one = c.unit()
    L1 = free_algebra(t, one)
    L11 = em_tensor(t, L1, L1)
    I = em_unit(t)

    def u_res(u):
        return c.sub(c.compose(u, I.action), c.compose(L1.action, t.mor(u)))

    def m_res(m):
        return c.sub(c.compose(m, L11.action), c.compose(L1.action, t.mor(m)))

    if not c.linear:
        return FrobeniusConstraints(label="algebra_map",
                                    u_holds=lambda u: c.equal(c.compose(u, I.action), c.compose(L1.action, t.mor(u))),
                                    m_holds=lambda m: c.equal(c.compose(m, L11.action), c.compose(L1.action, t.mor(m))))
    return FrobeniusConstraints(u_res, m_res, "algebra_map")


def unit_comonoid(t: ComonoidalMonad) -> ComonoidData:
    one = t.cat.unit()
    return ComonoidData(t.cat, t.obj(one), t.t2(one, one), t.t0)


def frobenius_monad_report(r: RightAdjointData, xs: Sequence) -> LawReport:
    """The comonad part ``(delta, eps)`` induced by ``T -| T`` and the Frobenius law."""
    t = r.t
    c = t.cat
    adj = r.adj
    rep = LawReport()

    def iota(x):
        return c.compose(adj.U.mor(r.eta(free_algebra(t, x))), t.eta(x))

    def kappa(y):
        return c.compose(r.eps(y), adj.U.mor(adj.counit(r.R.obj(y))))

    def eps_f(x):
        return c.compose(kappa(x), t.mor(t.eta(x)))

    def delta(x):
        return c.compose(t.mu(t.obj(x)), t.mor(iota(x)))

    for x in xs:
        tx = t.obj(x)
        w = repr(x)
        rep.expect_equal(c, "frobenius_monad.law_left", c.compose(t.mor(t.mu(x)), delta(tx)), c.compose(delta(x), t.mu(x)), w)
        rep.expect_equal(c, "frobenius_monad.law_right", c.compose(t.mu(tx), t.mor(delta(x))), c.compose(delta(x), t.mu(x)), w)
        rep.expect_equal(c, "comonad.counit_left", c.compose(eps_f(tx), delta(x)), c.id(tx), w)
        rep.expect_equal(c, "comonad.counit_right", c.compose(t.mor(eps_f(x)), delta(x)), c.id(tx), w)
        rep.expect_equal(c, "comonad.coassoc", c.compose(t.mor(delta(x)), delta(x)), c.compose(delta(tx), delta(x)), w)
        rep.expect_equal(c, "counit_through_mu", kappa(x), c.compose(eps_f(x), t.mu(x)), w)
    return rep


def self_adjunction_report(r: RightAdjointData, xs: Sequence) -> LawReport:
    """Triangle identities of ``T -| T`` with unit ``U eta^r_L o eta`` and counit ``eps^r o U eps^l_R``."""
    t = r.t
    c = t.cat
    adj = r.adj
    rep = LawReport()
    for x in xs:
        iota = c.compose(adj.U.mor(r.eta(free_algebra(t, x))), t.eta(x))
        tx = t.obj(x)
        kappa_tx = c.compose(r.eps(tx), adj.U.mor(adj.counit(r.R.obj(tx))))
        rep.expect_equal(c, "self_adjunction.left", c.compose(kappa_tx, t.mor(iota)), c.id(tx), repr(x))
        iota_tx = c.compose(adj.U.mor(r.eta(free_algebra(t, tx))), t.eta(tx))
        kappa_x = c.compose(r.eps(x), adj.U.mor(adj.counit(r.R.obj(x))))
        rep.expect_equal(c, "self_adjunction.right", c.compose(t.mor(kappa_x), iota_tx), c.id(tx), repr(x))
    return rep


def ambidextrous_frobenius(t: ComonoidalMonad, probes: Sequence, algebras: Optional[Sequence] = None) -> PipelineReport:
    """Run the six stages in order and halt at the first one that does not pass."""
    from .eilenberg_moore import em_probe_algebras

    c = t.cat
    algebras = list(algebras) if algebras is not None else em_probe_algebras(t, budget=min(3, len(probes)))
    out = PipelineReport()

    search = frobenius_structure_search(unit_comonoid(t), frobenius_constraints(t))
    if search.outcome != "found":
        status = REFUTED if search.outcome == REFUTED else UNDECIDED
        detail = search.reason
        if c.name == "grvect" and status == REFUTED:
            detail = "not graded Frobenius: " + detail
        out.stages.append(StageResult(STAGES[0], status, detail))
        return out
    out.frobenius = search.frobenius
    out.stages.append(StageResult(STAGES[0], PASS, search.reason, search.report))

    v = descent_type_check(t, probes)
    if v.status != HOLDS:
        out.stages.append(StageResult(STAGES[1], v.status, v.detail, witness=v.witness))
        return out
    out.stages.append(StageResult(STAGES[1], PASS, "holds on probes"))

    w = WirthmullerInput(t, c.unit(), search.u, search.m)
    try:
        r = right_adjoint_construct(w, probes)
        rep = check_right_adjoint(r, probes, algebras)
        rep.extend(cohopf_report(r, probes, algebras))
    except ConstructionRefused as exc:
        out.stages.append(StageResult(STAGES[2], FAIL, str(exc), witness=exc.witness))
        return out
    out.right_adjoint = r
    if not _record(out, STAGES[2], rep):
        return out

    if not _record(out, STAGES[3], self_adjunction_report(r, probes)):
        return out

    fm = monad_as_frobenius_functor(r)
    if not _record(out, STAGES[4], check_frobenius_monoidal_functor(fm, probes)):
        return out

    _record(out, STAGES[5], frobenius_monad_report(r, probes))

    # the right-handed variant is recorded alongside, never halting the pipeline
    try:
        rv = right_adjoint_right_variant(w, probes)
        rrep = check_right_adjoint(rv, probes, algebras)
        out.right_variant = StageResult("right-variant", PASS if rrep.ok else FAIL, "", rrep)
    except ConstructionRefused as exc:
        out.right_variant = StageResult("right-variant", FAIL, str(exc), witness=exc.witness)
    return out


def _record(out: PipelineReport, name: str, rep: LawReport) -> bool:
    bad = rep.first_failure()
    if bad is None:
        out.stages.append(StageResult(name, PASS, "holds on probes", rep))
        return True
    out.stages.append(StageResult(name, FAIL, bad.law, rep, bad.witness))
    return False
