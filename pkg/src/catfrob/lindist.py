"""Linearly distributive functors: a monoidal ``R`` and a comonoidal ``L`` with
two strengths and two costrengths.

The strengths of a functor from a biHopf triple ``L -| U -| R`` are built from
the inverses of the Hopf and coHopf operators.  All component relations are
enumerated explicitly and checked on probe objects.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Callable, Optional, Sequence

from .algebras import DualPairData, dual_pair_report
from .categories import Category, ContractViolation
from .eilenberg_moore import AlgMor, Functor, hopf_inverse_left, hopf_inverse_right, hopf_operator_left, hopf_operator_right
from .monads import _memo
from .reports import LawReport
from .wirthmuller import FrobeniusMonoidalFunctor, RightAdjointData, cohopf_left, cohopf_right

Component = Callable[[Any, Any], Any]


@dataclass(eq=False)
class LinDistFunctor:
    """``(R, r2, r0)`` monoidal, ``(L, L2, L0)`` comonoidal, with

    ``nu_R_r: R(XY) -> LX RY``, ``nu_R_l: R(XY) -> RX LY``,
    ``nu_L_r: RX LY -> L(XY)``, ``nu_L_l: LX RY -> L(XY)``.
    """

    src: Category
    tgt: Category
    R: Functor
    L: Functor
    r2_fn: Component
    r0: Any
    l2_fn: Component
    l0: Any
    nu_R_r_fn: Component
    nu_R_l_fn: Component
    nu_L_r_fn: Component
    nu_L_l_fn: Component
    name: str = ""
    _cache: dict = field(default_factory=dict, repr=False)

    def _get(self, key, fn, x, y):
        return _memo(self._cache, (key, x, y), lambda: fn(x, y))

    def r2(self, x, y):
        return self._get("r2", self.r2_fn, x, y)

    def l2(self, x, y):
        return self._get("l2", self.l2_fn, x, y)

    def nu_R_r(self, x, y):
        return self._get("nRr", self.nu_R_r_fn, x, y)

    def nu_R_l(self, x, y):
        return self._get("nRl", self.nu_R_l_fn, x, y)

    def nu_L_r(self, x, y):
        return self._get("nLr", self.nu_L_r_fn, x, y)

    def nu_L_l(self, x, y):
        return self._get("nLl", self.nu_L_l_fn, x, y)

    def replace(self, **changes) -> "LinDistFunctor":
        fields = {k: getattr(self, k) for k in ("src", "tgt", "R", "L", "r2_fn", "r0", "l2_fn", "l0", "nu_R_r_fn",
                                              "nu_R_l_fn", "nu_L_r_fn", "nu_L_l_fn", "name")}
        fields.update(changes)
        return LinDistFunctor(**fields)


@dataclass(eq=False)
class LinDistNatTrans:
    """``rho: R -> R'`` monoidal and ``lam: L' -> L`` comonoidal, between ``source`` and ``target``."""

    source: LinDistFunctor
    target: LinDistFunctor
    rho: Callable[[Any], Any]
    lam: Callable[[Any], Any]


# -- constructions ---------------------------------------------------------------


def strengths_from_bihopf(r: RightAdjointData, probes: Sequence = ()) -> LinDistFunctor:
    """The linearly distributive functor ``(R, L)`` of a triple ``L -| U -| R``.

    The coHopf operators are inverted on demand; a non-invertible component
    raises with the offending objects as witness.
    """
    adj = r.adj
    c, d = adj.lower, adj.upper
    L, R = adj.L, r.R

    def chi_l_inv(x, a):
        def make():
            inv = d.try_inverse(cohopf_left(r, x, a))
            if inv is None:
                raise ContractViolation(f"left coHopf operator not invertible at ({x!r}, {a!r})")
            return inv
        return _memo(r._cache, ("chi_l_inv", x, a), make)

    def chi_r_inv(a, x):
        def make():
            inv = d.try_inverse(cohopf_right(r, a, x))
            if inv is None:
                raise ContractViolation(f"right coHopf operator not invertible at ({a!r}, {x!r})")
            return inv
        return _memo(r._cache, ("chi_r_inv", a, x), make)

    def nu_R_r(x, y):
        return d.compose(chi_r_inv(L.obj(x), y), R.mor(c.tensor(adj.unit(x), c.id(y))))

    def nu_R_l(x, y):
        return d.compose(chi_l_inv(x, L.obj(y)), R.mor(c.tensor(c.id(x), adj.unit(y))))

    def nu_L_r(x, y):
        return d.compose(L.mor(c.tensor(r.eps(x), c.id(y))), hopf_inverse_right(adj, R.obj(x), y))

    def nu_L_l(x, y):
        return d.compose(L.mor(c.tensor(c.id(x), r.eps(y))), hopf_inverse_left(adj, x, R.obj(y)))

    f = LinDistFunctor(c, d, R, L, r.r2, r.r0, adj.l2, adj.l0, nu_R_r, nu_R_l, nu_L_r, nu_L_l, name="bihopf")
    for x in probes:
        for y in probes:
            for comp in (f.nu_R_r, f.nu_R_l, f.nu_L_r, f.nu_L_l):
                comp(x, y)
    return f


def identity_lindist(cat: Category) -> LinDistFunctor:
    ident = Functor(cat, cat, lambda x: x, lambda f: f, "Id")

    def one(x, y):
        return cat.id(cat.tensor_obj(x, y))

    e = cat.id(cat.unit())
    return LinDistFunctor(cat, cat, ident, ident, one, e, one, e, one, one, one, one, name="id")


def strong_monoidal_lindist(F: Functor, u2: Component, u0, u2_inv: Component, u0_inv) -> LinDistFunctor:
    """``R = L = F`` with strengths ``u2^-1`` and costrengths ``u2``."""
    return LinDistFunctor(F.src, F.tgt, F, F, u2, u0, u2_inv, u0_inv, u2_inv, u2_inv, u2, u2, name=F.name)


def forgetful_lindist(adj) -> LinDistFunctor:
    """The strict monoidal forgetful functor as a linearly distributive functor."""
    c = adj.lower
    inv = lambda a, b: c.id(c.tensor_obj(a.carrier, b.carrier))  # noqa: E731
    return strong_monoidal_lindist(adj.U, adj.u2, adj.u0, inv, c.id(c.unit()))


def frobenius_lindist(fm: FrobeniusMonoidalFunctor) -> LinDistFunctor:
    """``R = L = F``; both strengths are ``F2`` and both costrengths are ``f2``."""
    return LinDistFunctor(fm.src, fm.tgt, fm.F, fm.F, fm.f2, fm.f0, fm.F2, fm.F0, fm.F2, fm.F2, fm.f2, fm.f2,
                          name=f"frobenius({fm.F.name})")


def day_pastro_functor(frob) -> FrobeniusMonoidalFunctor:
    """``A (x) -`` for a Frobenius monoid ``A`` in a symmetric category."""
    c = frob.cat
    a = frob.carrier
    d, e = frob.comonoid.d, frob.comonoid.e
    F = Functor(c, c, lambda x: c.tensor_obj(a, x), lambda f: c.tensor(c.id(a), f), f"{a!r}(x)-")

    def f2(x, y):
        return c.compose(c.tensor(frob.m, c.id(x), c.id(y)), c.tensor(c.id(a), c.symmetry(x, a), c.id(y)))

    def F2(x, y):
        return c.compose(c.tensor(c.id(a), c.symmetry(a, x), c.id(y)), c.tensor(d, c.id(x), c.id(y)))

    return FrobeniusMonoidalFunctor(c, c, F, f2, frob.u, F2, e)


def compose_lindist(f: LinDistFunctor, g: LinDistFunctor) -> LinDistFunctor:
    """``(R'R, L'L)`` for ``f`` followed by ``g``."""
    d, e = f.tgt, g.tgt
    R = Functor(f.src, e, lambda x: g.R.obj(f.R.obj(x)), lambda h: g.R.mor(f.R.mor(h)), f"{g.R.name}{f.R.name}")
    L = Functor(f.src, e, lambda x: g.L.obj(f.L.obj(x)), lambda h: g.L.mor(f.L.mor(h)), f"{g.L.name}{f.L.name}")

    def r2(x, y):
        return e.compose(g.R.mor(f.r2(x, y)), g.r2(f.R.obj(x), f.R.obj(y)))

    def l2(x, y):
        return e.compose(g.l2(f.L.obj(x), f.L.obj(y)), g.L.mor(f.l2(x, y)))

    def nu_R_r(x, y):
        return e.compose(g.nu_R_r(f.L.obj(x), f.R.obj(y)), g.R.mor(f.nu_R_r(x, y)))

    def nu_R_l(x, y):
        return e.compose(g.nu_R_l(f.R.obj(x), f.L.obj(y)), g.R.mor(f.nu_R_l(x, y)))

    def nu_L_r(x, y):
        return e.compose(g.L.mor(f.nu_L_r(x, y)), g.nu_L_r(f.R.obj(x), f.L.obj(y)))

    def nu_L_l(x, y):
        return e.compose(g.L.mor(f.nu_L_l(x, y)), g.nu_L_l(f.L.obj(x), f.R.obj(y)))

    return LinDistFunctor(f.src, e, R, L, r2, e.compose(g.R.mor(f.r0), g.r0), l2, e.compose(g.l0, g.L.mor(f.l0)),
                          nu_R_r, nu_R_l, nu_L_r, nu_L_l, name=f"{g.name}.{f.name}")


def bihopf_unit(r: RightAdjointData, f: LinDistFunctor) -> LinDistNatTrans:
    """``(eta^r, eps^l)`` from the identity on algebras to ``(RU, LU)``."""
    adj = r.adj
    source = identity_lindist(adj.upper)
    target = compose_lindist(forgetful_lindist(adj), f)
    return LinDistNatTrans(source, target, r.eta, adj.counit)


def bihopf_counit(r: RightAdjointData, f: LinDistFunctor) -> LinDistNatTrans:
    """``(eps^r, eta^l)`` from ``(UR, UL)`` to the identity on the ambient category."""
    adj = r.adj
    source = compose_lindist(f, forgetful_lindist(adj))
    target = identity_lindist(adj.lower)
    return LinDistNatTrans(source, target, r.eps, adj.unit)


# -- checks ----------------------------------------------------------------------


def check_lf_axioms(f: LinDistFunctor, probes: Sequence) -> LawReport:
    """The monoidal/comonoidal functor laws and the eighteen LF component relations."""
    c, d = f.src, f.tgt
    R, L = f.R, f.L
    one = c.unit()
    rep = LawReport()
    idR = lambda x: d.id(R.obj(x))  # noqa: E731
    idL = lambda x: d.id(L.obj(x))  # noqa: E731
    T = c.tensor_obj
    for x in probes:
        w = repr(x)
        rep.expect_equal(d, "R.unit_left", d.compose(f.r2(one, x), d.tensor(f.r0, idR(x))), idR(x), w)
        rep.expect_equal(d, "R.unit_right", d.compose(f.r2(x, one), d.tensor(idR(x), f.r0)), idR(x), w)
        rep.expect_equal(d, "L.counit_left", d.compose(d.tensor(f.l0, idL(x)), f.l2(one, x)), idL(x), w)
        rep.expect_equal(d, "L.counit_right", d.compose(d.tensor(idL(x), f.l0), f.l2(x, one)), idL(x), w)
        rep.expect_equal(d, "LF1a", d.compose(f.nu_L_l(x, one), d.tensor(idL(x), f.r0)), idL(x), w)
        rep.expect_equal(d, "LF1b", d.compose(f.nu_L_r(one, x), d.tensor(f.r0, idL(x))), idL(x), w)
        rep.expect_equal(d, "LF1c", d.compose(d.tensor(idR(x), f.l0), f.nu_R_l(x, one)), idR(x), w)
        rep.expect_equal(d, "LF1d", d.compose(d.tensor(f.l0, idR(x)), f.nu_R_r(one, x)), idR(x), w)
    for x in probes:
        for y in probes:
            for z in probes:
                w = [repr(x), repr(y), repr(z)]
                xy, yz = T(x, y), T(y, z)

                def eq(law, lhs, rhs):
                    rep.expect_equal(d, law, d.compose(*lhs), d.compose(*rhs), w)

                eq("R.assoc", [f.r2(xy, z), d.tensor(f.r2(x, y), idR(z))], [f.r2(x, yz), d.tensor(idR(x), f.r2(y, z))])
                eq("L.coassoc", [d.tensor(f.l2(x, y), idL(z)), f.l2(xy, z)], [d.tensor(idL(x), f.l2(y, z)), f.l2(x, yz)])
                eq("LF2a", [f.nu_L_l(xy, z), d.tensor(f.nu_L_l(x, y), idR(z))],
                   [f.nu_L_l(x, yz), d.tensor(idL(x), f.r2(y, z))])
                eq("LF2b", [f.nu_L_r(x, yz), d.tensor(idR(x), f.nu_L_r(y, z))],
                   [f.nu_L_r(xy, z), d.tensor(f.r2(x, y), idL(z))])
                eq("LF2c", [d.tensor(f.nu_R_l(x, y), idL(z)), f.nu_R_l(xy, z)],
                   [d.tensor(idR(x), f.l2(y, z)), f.nu_R_l(x, yz)])
                eq("LF2d", [d.tensor(idL(x), f.nu_R_r(y, z)), f.nu_R_r(x, yz)],
                   [d.tensor(f.l2(x, y), idR(z)), f.nu_R_r(xy, z)])
                eq("LF3a", [f.nu_L_r(x, yz), d.tensor(idR(x), f.nu_L_l(y, z))],
                   [f.nu_L_l(xy, z), d.tensor(f.nu_L_r(x, y), idR(z))])
                eq("LF3b", [d.tensor(idL(x), f.nu_R_l(y, z)), f.nu_R_r(x, yz)],
                   [d.tensor(f.nu_R_r(x, y), idL(z)), f.nu_R_l(xy, z)])
                eq("LF4a", [d.tensor(f.nu_L_l(x, y), idL(z)), d.tensor(idL(x), f.nu_R_l(y, z))],
                   [f.l2(xy, z), f.nu_L_l(x, yz)])
                eq("LF4b", [d.tensor(idL(x), f.nu_L_r(y, z)), d.tensor(f.nu_R_r(x, y), idL(z))],
                   [f.l2(x, yz), f.nu_L_r(xy, z)])
                eq("LF4c", [d.tensor(idR(x), f.nu_L_l(y, z)), d.tensor(f.nu_R_l(x, y), idR(z))],
                   [f.nu_R_l(x, yz), f.r2(xy, z)])
                eq("LF4d", [d.tensor(f.nu_L_r(x, y), idR(z)), d.tensor(idR(x), f.nu_R_r(y, z))],
                   [f.nu_R_r(xy, z), f.r2(x, yz)])
                eq("LF5a", [d.tensor(idL(x), f.nu_L_l(y, z)), d.tensor(f.l2(x, y), idR(z))],
                   [f.l2(x, yz), f.nu_L_l(xy, z)])
                eq("LF5b", [d.tensor(f.nu_L_r(x, y), idL(z)), d.tensor(idR(x), f.l2(y, z))],
                   [f.l2(xy, z), f.nu_L_r(x, yz)])
                eq("LF5c", [d.tensor(f.r2(x, y), idL(z)), d.tensor(idR(x), f.nu_R_l(y, z))],
                   [f.nu_R_l(xy, z), f.r2(x, yz)])
                eq("LF5d", [d.tensor(idL(x), f.r2(y, z)), d.tensor(f.nu_R_r(x, y), idR(z))],
                   [f.nu_R_r(x, yz), f.r2(xy, z)])
    return rep


LF_LAWS = tuple(f"LF{g}{v}" for g, vs in ((1, "abcd"), (2, "abcd"), (3, "ab"), (4, "abcd"), (5, "abcd")) for v in vs)


def check_lindist_nat(n: LinDistNatTrans, probes: Sequence, morphisms: Sequence = ()) -> LawReport:
    """Monoidality of ``rho``, comonoidality of ``lam`` and the four LN squares."""
    s, t = n.source, n.target
    c, d = s.src, s.tgt
    one = c.unit()
    rep = LawReport()
    rho, lam = n.rho, n.lam
    rep.expect_equal(d, "rho.monoidal_unit", d.compose(rho(one), s.r0), t.r0)
    rep.expect_equal(d, "lam.comonoidal_unit", d.compose(s.l0, lam(one)), t.l0)
    for f in morphisms:
        rep.expect_equal(d, "rho.natural", d.compose(t.R.mor(f), rho(f.dom)), d.compose(rho(f.cod), s.R.mor(f)), repr(f))
        rep.expect_equal(d, "lam.natural", d.compose(s.L.mor(f), lam(f.dom)), d.compose(lam(f.cod), t.L.mor(f)), repr(f))
    for x in probes:
        for y in probes:
            w = [repr(x), repr(y)]
            xy = c.tensor_obj(x, y)
            rep.expect_equal(d, "rho.monoidal", d.compose(rho(xy), s.r2(x, y)), d.compose(t.r2(x, y), d.tensor(rho(x), rho(y))), w)
            rep.expect_equal(d, "lam.comonoidal", d.compose(s.l2(x, y), lam(xy)), d.compose(d.tensor(lam(x), lam(y)), t.l2(x, y)), w)
            idLt_x, idRs_y = d.id(t.L.obj(x)), d.id(s.R.obj(y))
            rep.expect_equal(d, "LN1", d.compose(lam(xy), t.nu_L_l(x, y), d.tensor(idLt_x, rho(y))),
                             d.compose(s.nu_L_l(x, y), d.tensor(lam(x), idRs_y)), w)
            rep.expect_equal(d, "LN2", d.compose(lam(xy), t.nu_L_r(x, y), d.tensor(rho(x), d.id(t.L.obj(y)))),
                             d.compose(s.nu_L_r(x, y), d.tensor(d.id(s.R.obj(x)), lam(y))), w)
            rep.expect_equal(d, "LN3", d.compose(d.tensor(d.id(t.R.obj(x)), lam(y)), t.nu_R_l(x, y), rho(xy)),
                             d.compose(d.tensor(rho(x), d.id(s.L.obj(y))), s.nu_R_l(x, y)), w)
            rep.expect_equal(d, "LN4", d.compose(d.tensor(lam(x), d.id(t.R.obj(y))), t.nu_R_r(x, y), rho(xy)),
                             d.compose(d.tensor(d.id(s.L.obj(x)), rho(y)), s.nu_R_r(x, y)), w)
    return rep


def identity_nat(f: LinDistFunctor) -> LinDistNatTrans:
    d = f.tgt
    return LinDistNatTrans(f, f, lambda x: d.id(f.R.obj(x)), lambda x: d.id(f.L.obj(x)))


def hopf_inverses_from_lindist(f: LinDistFunctor, r: RightAdjointData) -> dict:
    """Inverses of the four operators assembled from (co)strengths and adjunction data."""
    adj = r.adj
    d = adj.upper
    U = adj.U
    return {
        "hopf_left": lambda x, a: d.compose(f.nu_L_l(x, U.obj(a)), d.tensor(d.id(f.L.obj(x)), r.eta(a))),
        "hopf_right": lambda a, x: d.compose(f.nu_L_r(U.obj(a), x), d.tensor(r.eta(a), d.id(f.L.obj(x)))),
        "cohopf_left": lambda x, a: d.compose(d.tensor(d.id(f.R.obj(x)), adj.counit(a)), f.nu_R_l(x, U.obj(a))),
        "cohopf_right": lambda a, x: d.compose(d.tensor(adj.counit(a), d.id(f.R.obj(x))), f.nu_R_r(U.obj(a), x)),
    }


def inverse_recovery_report(f: LinDistFunctor, r: RightAdjointData, xs: Sequence, algebras: Sequence) -> LawReport:
    """Each recovered inverse composes with its operator to identities on both sides."""
    adj = r.adj
    d = adj.upper
    inv = hopf_inverses_from_lindist(f, r)
    ops = {
        "hopf_left": lambda x, a: hopf_operator_left(adj, x, a),
        "hopf_right": lambda a, x: hopf_operator_right(adj, a, x),
        "cohopf_left": lambda x, a: cohopf_left(r, x, a),
        "cohopf_right": lambda a, x: cohopf_right(r, a, x),
    }
    rep = LawReport()
    for name, op in ops.items():
        for x in xs:
            for a in algebras:
                args = (x, a) if name.endswith("left") else (a, x)
                o, i = op(*args), inv[name](*args)
                w = [repr(x), repr(a)]
                rep.expect_equal(d, f"{name}.inverse_after", d.compose(i, o), d.id(o.dom), w)
                rep.expect_equal(d, f"{name}.inverse_before", d.compose(o, i), d.id(o.cod), w)
    return rep


def unit_object_pairs(f: LinDistFunctor) -> tuple[DualPairData, DualPairData]:
    """``L1`` as a left and as a right dual of ``R1``."""
    c, d = f.src, f.tgt
    one = c.unit()
    r1, l1 = f.R.obj(one), f.L.obj(one)
    left = DualPairData(d, l1, r1, d.compose(f.l0, f.nu_L_l(one, one)), d.compose(f.nu_R_l(one, one), f.r0))
    right = DualPairData(d, r1, l1, d.compose(f.l0, f.nu_L_r(one, one)), d.compose(f.nu_R_r(one, one), f.r0))
    return left, right


def unit_object_report(f: LinDistFunctor) -> LawReport:
    """Both dualities, the monoid ``R1``, the comonoid ``L1`` and the coactions of ``L1`` on ``R1``."""
    c, d = f.src, f.tgt
    one = c.unit()
    r1, l1 = f.R.obj(one), f.L.obj(one)
    i_r, i_l = d.id(r1), d.id(l1)
    rep = LawReport()
    left, right = unit_object_pairs(f)
    rep.extend(dual_pair_report(left), "dual.left")
    rep.extend(dual_pair_report(right), "dual.right")
    m, u = f.r2(one, one), f.r0
    rep.expect_equal(d, "monoid.assoc", d.compose(m, d.tensor(m, i_r)), d.compose(m, d.tensor(i_r, m)))
    rep.expect_equal(d, "monoid.unit_left", d.compose(m, d.tensor(u, i_r)), i_r)
    rep.expect_equal(d, "monoid.unit_right", d.compose(m, d.tensor(i_r, u)), i_r)
    dl, el = f.l2(one, one), f.l0
    rep.expect_equal(d, "comonoid.coassoc", d.compose(d.tensor(dl, i_l), dl), d.compose(d.tensor(i_l, dl), dl))
    rep.expect_equal(d, "comonoid.counit_left", d.compose(d.tensor(el, i_l), dl), i_l)
    rep.expect_equal(d, "comonoid.counit_right", d.compose(d.tensor(i_l, el), dl), i_l)
    lc = f.nu_R_r(one, one)
    rep.expect_equal(d, "coaction.left.coassoc", d.compose(d.tensor(i_l, lc), lc), d.compose(d.tensor(dl, i_r), lc))
    rep.expect_equal(d, "coaction.left.counit", d.compose(d.tensor(el, i_r), lc), i_r)
    rc = f.nu_R_l(one, one)
    rep.expect_equal(d, "coaction.right.coassoc", d.compose(d.tensor(rc, i_l), rc), d.compose(d.tensor(i_r, dl), rc))
    rep.expect_equal(d, "coaction.right.counit", d.compose(d.tensor(i_r, el), rc), i_r)
    return rep


def perturb(f: LinDistFunctor, component: str, scalar) -> LinDistFunctor:
    """A copy with one (co)strength scaled, for negative tests."""
    d = f.tgt
    fn = getattr(f, component + "_fn")
    return f.replace(**{component + "_fn": lambda x, y: scale_morphism(d, fn(x, y), scalar)})


def scale_morphism(d: Category, g, scalar):
    """``scalar * g``; algebra morphisms are scaled through their carrier."""
    if isinstance(g, AlgMor):
        return AlgMor(g.dom, g.cod, d.t.cat.scale(g.underlying, scalar))
    return d.scale(g, scalar)


__all__ = [
    "LF_LAWS", "LinDistFunctor", "LinDistNatTrans", "bihopf_counit", "bihopf_unit", "check_lf_axioms",
    "check_lindist_nat", "compose_lindist", "day_pastro_functor", "forgetful_lindist", "frobenius_lindist",
    "hopf_inverses_from_lindist", "identity_lindist", "identity_nat", "inverse_recovery_report", "perturb", "scale_morphism",
    "strengths_from_bihopf", "strong_monoidal_lindist", "unit_object_pairs", "unit_object_report",
]
