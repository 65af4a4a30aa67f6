"""T-algebras, their monoidal category, and the free/forgetful adjunction.

For a comonoidal monad ``T`` the algebras ``(X, x: TX -> X)`` form a monoidal
category with ``(X, x) (x) (Y, y) = (X (x) Y, (x (x) y) o T2)`` and unit
``(1, T0)``; the forgetful functor is strict monoidal.  The adjunction-level
Hopf operators and their relations are checked here on probe objects.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Any, Callable, Optional, Sequence

from .categories import FINSET, Category, ContractViolation, probe_morphisms, probe_objects
from .exact import RationalMatrix, kernel_basis
from .monads import ComonoidalMonad, _memo, fusion_left, fusion_right
from .reports import HOLDS, REFUTED, LawReport, Verdict


@dataclass(frozen=True)
class TAlgebra:
    carrier: Any
    action: Any
    label: str = field(default="", compare=False)

    def __repr__(self) -> str:
        return self.label or f"Alg({self.carrier!r})"


@dataclass(frozen=True)
class AlgMor:
    dom: TAlgebra
    cod: TAlgebra
    underlying: Any

    def __repr__(self) -> str:
        return f"AlgMor({self.dom!r} -> {self.cod!r})"


class AlgebraLawError(ContractViolation):
    """A proposed action or algebra morphism violates its laws."""


# -- algebras -------------------------------------------------------------------


def algebra_report(t: ComonoidalMonad, a: TAlgebra) -> LawReport:
    c = t.cat
    r = LawReport()
    x = a.action
    if x.dom != t.obj(a.carrier) or x.cod != a.carrier:
        r.add("action.shape", False, {"dom": repr(x.dom), "cod": repr(x.cod)})
        return r
    r.expect_equal(c, "action.unit", c.compose(x, t.eta(a.carrier)), c.id(a.carrier), repr(a))
    r.expect_equal(c, "action.assoc", c.compose(x, t.mu(a.carrier)), c.compose(x, t.mor(x)), repr(a))
    return r


def make_algebra(t: ComonoidalMonad, carrier, action, label: str = "") -> TAlgebra:
    a = TAlgebra(carrier, action, label)
    bad = algebra_report(t, a).first_failure()
    if bad is not None:
        raise AlgebraLawError(f"not a T-algebra: {bad.law} fails at {bad.witness}")
    return a


def is_algebra_morphism(t: ComonoidalMonad, a: TAlgebra, b: TAlgebra, f) -> bool:
    c = t.cat
    return c.equal(c.compose(f, a.action), c.compose(b.action, t.mor(f)))


def free_algebra(t: ComonoidalMonad, x) -> TAlgebra:
    """The free algebra ``(TX, mu_X)``."""
    return _memo(t._cache, ("free", x), lambda: TAlgebra(t.obj(x), t.mu(x), f"L({x!r})"))


def em_unit(t: ComonoidalMonad) -> TAlgebra:
    return TAlgebra(t.cat.unit(), t.t0, "I")


def em_tensor(t: ComonoidalMonad, a: TAlgebra, b: TAlgebra, validate: bool = False) -> TAlgebra:
    """``(A (x) B, (x_A (x) x_B) o T2)``."""
    c = t.cat

    def make():
        action = c.compose(c.tensor(a.action, b.action), t.t2(a.carrier, b.carrier))
        label = f"{a!r}(x){b!r}"
        if validate:
            return make_algebra(t, c.tensor_obj(a.carrier, b.carrier), action, label)
        return TAlgebra(c.tensor_obj(a.carrier, b.carrier), action, label)

    return _memo(t._cache, ("em_tensor", a, b), make)


def character_module(t: ComonoidalMonad, values: Sequence, label: str) -> Optional[TAlgebra]:
    """The one-dimensional module on ``1`` given by a character of ``A``, if valid."""
    c = t.cat
    if not c.linear or t.hopf is None:
        return None
    one = c.unit()
    action = c.from_vector(t.obj(one), one, values)
    if hasattr(c, "degree_violation") and c.degree_violation(action) is not None:
        return None
    a = TAlgebra(one, action, label)
    return a if algebra_report(t, a).ok else None


def sign_module(t: ComonoidalMonad) -> Optional[TAlgebra]:
    """The counit with alternating signs along the basis, when that is a character."""
    if t.hopf is None or not t.cat.linear:
        return None
    e = t.hopf.e.mat
    values = [e[0, j] * (-1) ** j for j in range(e.cols)]
    if values == list(e.entries):
        return None
    return character_module(t, values, "sign")


def em_probe_algebras(t: ComonoidalMonad, budget: int = 4, extras: bool = True) -> list[TAlgebra]:
    """The unit algebra, free algebras on ambient probes, and a sign module when one exists."""
    out = [em_unit(t)]
    for x in probe_objects(t.cat, budget=budget):
        out.append(free_algebra(t, x))
    if extras:
        s = sign_module(t)
        if s is not None:
            out.append(s)
    seen, uniq = set(), []
    for a in out:
        if a not in seen:
            seen.add(a)
            uniq.append(a)
    return uniq


# -- the category of algebras -----------------------------------------------------


class EMCategory(Category):
    """Algebras over a comonoidal monad as a category handle (not braided)."""

    braided = False

    def __init__(self, t: ComonoidalMonad):
        self.t = t
        self.ambient = t.cat
        self.linear = t.cat.linear
        self.name = f"EM[{t.name}]"
        self.probe_budget = 4

    def unit(self) -> TAlgebra:
        return em_unit(self.t)

    def id(self, a: TAlgebra) -> AlgMor:
        return AlgMor(a, a, self.ambient.id(a.carrier))

    def mor(self, dom: TAlgebra, cod: TAlgebra, underlying) -> AlgMor:
        if underlying.dom != dom.carrier or underlying.cod != cod.carrier:
            raise ContractViolation("underlying morphism does not match the carriers")
        if not is_algebra_morphism(self.t, dom, cod, underlying):
            raise AlgebraLawError(f"not an algebra morphism {dom!r} -> {cod!r}")
        return AlgMor(dom, cod, underlying)

    def _compose2(self, g: AlgMor, f: AlgMor) -> AlgMor:
        if f.cod != g.dom:
            raise ContractViolation(f"cannot compose {g.dom!r}->{g.cod!r} after {f.dom!r}->{f.cod!r}")
        return AlgMor(f.dom, g.cod, self.ambient.compose(g.underlying, f.underlying))

    def _tensor_obj2(self, a: TAlgebra, b: TAlgebra) -> TAlgebra:
        return em_tensor(self.t, a, b)

    def _tensor2(self, f: AlgMor, g: AlgMor) -> AlgMor:
        return AlgMor(em_tensor(self.t, f.dom, g.dom), em_tensor(self.t, f.cod, g.cod),
                      self.ambient.tensor(f.underlying, g.underlying))

    def equal(self, f: AlgMor, g: AlgMor) -> bool:
        return f.dom == g.dom and f.cod == g.cod and self.ambient.equal(f.underlying, g.underlying)

    def witness(self, f: AlgMor, g: AlgMor):
        return self.ambient.witness(f.underlying, g.underlying)

    def symmetry(self, a, b):
        raise ContractViolation("the category of algebras carries no braiding here")

    def equalizer(self, f: AlgMor, g: AlgMor):
        """Equaliser of carriers with the induced action (the forgetful functor creates it)."""
        self.check_parallel(f, g)
        c = self.ambient
        e_obj, e = c.equalizer(f.underlying, g.underlying)
        action = c.factor(e, c.compose(f.dom.action, self.t.mor(e)))
        if action is None:
            raise AlgebraLawError("the action does not restrict to the equaliser")
        alg = make_algebra(self.t, e_obj, action, f"Eq({f.dom!r})")
        return alg, AlgMor(alg, f.dom, e)

    def factor(self, e: AlgMor, h: AlgMor) -> Optional[AlgMor]:
        k = self.ambient.factor(e.underlying, h.underlying)
        if k is None:
            return None
        return AlgMor(h.dom, e.dom, k)

    def try_inverse(self, f: AlgMor) -> Optional[AlgMor]:
        inv = self.ambient.try_inverse(f.underlying)
        return None if inv is None else AlgMor(f.cod, f.dom, inv)

    def is_mono(self, f: AlgMor) -> bool:
        return self.ambient.is_mono(f.underlying)

    def size(self, a: TAlgebra) -> int:
        return self.ambient.size(a.carrier)

    def enumerate_objects(self) -> list[TAlgebra]:
        return em_probe_algebras(self.t, self.probe_budget)

    def hom_basis(self, a: TAlgebra, b: TAlgebra) -> list[AlgMor]:
        """A basis of algebra morphisms, as the kernel of ``f |-> f o x_A - x_B o Tf``."""
        c = self.ambient
        basis = c.hom_basis(a.carrier, b.carrier)
        if not basis:
            return []
        cols: dict[int, dict[int, Any]] = {}
        rows = 0
        for j, f in enumerate(basis):
            v = c.sub(c.compose(f, a.action), c.compose(b.action, self.t.mor(f))).mat.entries
            rows = len(v)
            for i, x in enumerate(v):
                if x:
                    cols.setdefault(i, {})[j] = x
        ker = kernel_basis(RationalMatrix(rows, len(basis), cols))
        out = []
        for k in range(ker.cols):
            total = c.zero(a.carrier, b.carrier)
            for i in range(ker.rows):
                if ker[i, k]:
                    total = c.add(total, c.scale(basis[i], ker[i, k]))
            out.append(AlgMor(a, b, total))
        return out

    def random_morphism(self, a: TAlgebra, b: TAlgebra, rng: random.Random) -> Optional[AlgMor]:
        c = self.ambient
        if c.linear:
            basis = self.hom_basis(a, b)
            total = c.zero(a.carrier, b.carrier)
            for f in basis:
                total = c.add(total, c.scale(f.underlying, rng.randint(-2, 2)))
            return AlgMor(a, b, total)
        if c is FINSET:
            if c.size(b.carrier) ** c.size(a.carrier) > 4096:
                return None
            cands = [f for f in c.all_morphisms(a.carrier, b.carrier) if is_algebra_morphism(self.t, a, b, f)]
            return AlgMor(a, b, rng.choice(cands)) if cands else None
        return None


def em_category_handle(t: ComonoidalMonad) -> EMCategory:
    return _memo(t._cache, ("em_handle",), lambda: EMCategory(t))


# -- adjunctions ----------------------------------------------------------------


@dataclass(eq=False)
class Functor:
    src: Category
    tgt: Category
    obj: Callable[[Any], Any]
    mor: Callable[[Any], Any]
    name: str = "F"


@dataclass(eq=False)
class AdjunctionData:
    """A comonoidal adjunction ``L -| U`` with ``U: D -> C`` strong monoidal.

    ``lower`` is C, ``upper`` is D.  ``unit(X): X -> ULX`` lives in C and
    ``counit(A): LUA -> A`` in D.
    """

    lower: Category
    upper: Category
    L: Functor
    U: Functor
    unit_fn: Callable[[Any], Any]
    counit_fn: Callable[[Any], Any]
    l2_fn: Callable[[Any, Any], Any]
    l0: Any
    u2_fn: Callable[[Any, Any], Any]
    u0: Any
    monad: Optional[ComonoidalMonad] = None
    _cache: dict = field(default_factory=dict, repr=False)

    def unit(self, x):
        return _memo(self._cache, ("unit", x), lambda: self.unit_fn(x))

    def counit(self, a):
        return _memo(self._cache, ("counit", a), lambda: self.counit_fn(a))

    def l2(self, x, y):
        return _memo(self._cache, ("l2", x, y), lambda: self.l2_fn(x, y))

    def u2(self, a, b):
        return self.u2_fn(a, b)


def em_adjunction(t: ComonoidalMonad) -> AdjunctionData:
    """The free/forgetful adjunction ``L^T -| U^T``; ``U^T`` is strict monoidal."""

    def make():
        c = t.cat
        d = em_category_handle(t)
        L = Functor(c, d, lambda x: free_algebra(t, x),
                    lambda f: AlgMor(free_algebra(t, f.dom), free_algebra(t, f.cod), t.mor(f)), "L")
        U = Functor(d, c, lambda a: a.carrier, lambda f: f.underlying, "U")
        return AdjunctionData(
            lower=c, upper=d, L=L, U=U,
            unit_fn=t.eta,
            counit_fn=lambda a: AlgMor(free_algebra(t, a.carrier), a, a.action),
            l2_fn=lambda x, y: AlgMor(free_algebra(t, c.tensor_obj(x, y)),
                                      em_tensor(t, free_algebra(t, x), free_algebra(t, y)), t.t2(x, y)),
            l0=AlgMor(free_algebra(t, c.unit()), em_unit(t), t.t0),
            u2_fn=lambda a, b: c.id(c.tensor_obj(a.carrier, b.carrier)),
            u0=c.id(c.unit()),
            monad=t,
        )

    return _memo(t._cache, ("em_adjunction",), make)


def hopf_operator_left(adj: AdjunctionData, x, a):
    """``L(X (x) UA) -> LX (x) LUA -> LX (x) A``."""
    d = adj.upper

    def make():
        return d.compose(d.tensor(d.id(adj.L.obj(x)), adj.counit(a)), adj.l2(x, adj.U.obj(a)))

    return _memo(adj._cache, ("hl", x, a), make)


def hopf_operator_right(adj: AdjunctionData, a, x):
    """``L(UA (x) X) -> LUA (x) LX -> A (x) LX``."""
    d = adj.upper

    def make():
        return d.compose(d.tensor(adj.counit(a), d.id(adj.L.obj(x))), adj.l2(adj.U.obj(a), x))

    return _memo(adj._cache, ("hr", a, x), make)


def hopf_inverse_left(adj: AdjunctionData, x, a):
    def make():
        inv = adj.upper.try_inverse(hopf_operator_left(adj, x, a))
        if inv is None:
            raise ContractViolation(f"left Hopf operator not invertible at ({x!r}, {a!r})")
        return inv

    return _memo(adj._cache, ("hl_inv", x, a), make)


def hopf_inverse_right(adj: AdjunctionData, a, x):
    def make():
        inv = adj.upper.try_inverse(hopf_operator_right(adj, a, x))
        if inv is None:
            raise ContractViolation(f"right Hopf operator not invertible at ({a!r}, {x!r})")
        return inv

    return _memo(adj._cache, ("hr_inv", a, x), make)


def hopf_verdict(adj: AdjunctionData, xs: Sequence, algebras: Sequence, side: str = "left") -> Verdict:
    d = adj.upper
    for x in xs:
        for a in algebras:
            op = hopf_operator_left(adj, x, a) if side == "left" else hopf_operator_right(adj, a, x)
            if d.try_inverse(op) is None:
                return Verdict(REFUTED, {"pair": [repr(x), repr(a)]}, f"{side} Hopf operator not invertible")
    return Verdict(HOLDS)


# -- law checks -----------------------------------------------------------------


def check_adjunction(adj: AdjunctionData, xs: Sequence, algebras: Sequence) -> LawReport:
    """Triangle identities, comonoidality of ``L`` and (co)monoidality of unit and counit."""
    c, d = adj.lower, adj.upper
    L, U = adj.L, adj.U
    r = LawReport()
    one = c.unit()
    for x in xs:
        r.expect_equal(d, "triangle.left", d.compose(adj.counit(L.obj(x)), L.mor(adj.unit(x))), d.id(L.obj(x)), repr(x))
        lx = L.obj(x)
        r.expect_equal(d, "comonoidal.counit_left", d.compose(d.tensor(adj.l0, d.id(lx)), adj.l2(one, x)), d.id(lx), repr(x))
        r.expect_equal(d, "comonoidal.counit_right", d.compose(d.tensor(d.id(lx), adj.l0), adj.l2(x, one)), d.id(lx), repr(x))
        for y in xs:
            lhs = c.compose(U.mor(adj.l2(x, y)), adj.unit(c.tensor_obj(x, y)))
            rhs = c.compose(adj.u2(L.obj(x), L.obj(y)), c.tensor(adj.unit(x), adj.unit(y)))
            r.expect_equal(c, "unit.monoidal", lhs, rhs, [repr(x), repr(y)])
            for z in xs[:3]:
                lhs = d.compose(d.tensor(adj.l2(x, y), d.id(L.obj(z))), adj.l2(c.tensor_obj(x, y), z))
                rhs = d.compose(d.tensor(d.id(L.obj(x)), adj.l2(y, z)), adj.l2(x, c.tensor_obj(y, z)))
                r.expect_equal(d, "comonoidal.coassoc", lhs, rhs, [repr(x), repr(y), repr(z)])
    r.expect_equal(c, "unit.monoidal_unit", c.compose(U.mor(adj.l0), adj.unit(one)), adj.u0)
    for a in algebras:
        ua = U.obj(a)
        r.expect_equal(c, "triangle.right", c.compose(U.mor(adj.counit(a)), adj.unit(ua)), c.id(ua), repr(a))
        for b in algebras:
            lhs = d.compose(d.tensor(adj.counit(a), adj.counit(b)), adj.l2(ua, U.obj(b)))
            rhs = d.compose(adj.counit(d.tensor_obj(a, b)), L.mor(adj.u2(a, b)))
            r.expect_equal(d, "counit.comonoidal", lhs, rhs, [repr(a), repr(b)])
    r.expect_equal(d, "counit.comonoidal_unit", adj.l0, d.compose(adj.counit(d.unit()), L.mor(adj.u0)))
    return r


def check_hopf_lemma(adj: AdjunctionData, xs: Sequence, algebras: Sequence, seed: int = 0) -> LawReport:
    """The Hopf-operator relations, both handednesses, plus naturality of the operators.

    Law ids are ``h1l``..``h8l`` (and ``r`` mirrors) for the listed relations and
    ``natural.hl``/``natural.hr`` for naturality.
    """
    c, d = adj.lower, adj.upper
    L, U = adj.L, adj.U
    Hl = lambda x, a: hopf_operator_left(adj, x, a)      # noqa: E731
    Hr = lambda a, x: hopf_operator_right(adj, a, x)     # noqa: E731
    r = LawReport()
    one_c, one_d = c.unit(), d.unit()
    did = d.id
    for x in xs:
        lx = L.obj(x)
        r.expect_equal(d, "h1l", d.compose(Hl(x, one_d), L.mor(c.tensor(c.id(x), adj.u0))), did(lx), repr(x))
        r.expect_equal(d, "h1r", d.compose(Hr(one_d, x), L.mor(c.tensor(adj.u0, c.id(x)))), did(lx), repr(x))
        for y in xs:
            w = [repr(x), repr(y)]
            ly = L.obj(y)
            r.expect_equal(d, "h4l", d.compose(Hl(x, ly), L.mor(c.tensor(c.id(x), adj.unit(y)))), adj.l2(x, y), w)
            r.expect_equal(d, "h4r", d.compose(Hr(lx, y), L.mor(c.tensor(adj.unit(x), c.id(y)))), adj.l2(x, y), w)
        for a in algebras:
            w = [repr(x), repr(a)]
            ua = U.obj(a)
            lhs = c.compose(U.mor(Hl(x, a)), adj.unit(c.tensor_obj(x, ua)))
            rhs = c.compose(adj.u2(lx, a), c.tensor(adj.unit(x), c.id(ua)))
            r.expect_equal(c, "h5l", lhs, rhs, w)
            lhs = c.compose(U.mor(Hr(a, x)), adj.unit(c.tensor_obj(ua, x)))
            rhs = c.compose(adj.u2(a, lx), c.tensor(c.id(ua), adj.unit(x)))
            r.expect_equal(c, "h5r", lhs, rhs, w)
            for b in algebras:
                w3 = [repr(x), repr(a), repr(b)]
                ub = U.obj(b)
                lhs = d.compose(d.tensor(Hl(x, a), did(b)), Hl(c.tensor_obj(x, ua), b))
                rhs = d.compose(Hl(x, d.tensor_obj(a, b)), L.mor(c.tensor(c.id(x), adj.u2(a, b))))
                r.expect_equal(d, "h2l", lhs, rhs, w3)
                lhs = d.compose(d.tensor(did(b), Hr(a, x)), Hr(b, c.tensor_obj(ua, x)))
                rhs = d.compose(Hr(d.tensor_obj(b, a), x), L.mor(c.tensor(adj.u2(b, a), c.id(x))))
                r.expect_equal(d, "h2r", lhs, rhs, w3)
                lhs = d.compose(d.tensor(Hr(a, x), did(b)), Hl(c.tensor_obj(ua, x), b))
                rhs = d.compose(d.tensor(did(a), Hl(x, b)), Hr(a, c.tensor_obj(x, ub)))
                r.expect_equal(d, "h3l", lhs, rhs, w3)
            for y in xs:
                w3 = [repr(x), repr(y), repr(a)]
                lhs = d.compose(d.tensor(adj.l2(x, y), did(a)), Hl(c.tensor_obj(x, y), a))
                rhs = d.compose(d.tensor(did(lx), Hl(y, a)), adj.l2(x, c.tensor_obj(y, ua)))
                r.expect_equal(d, "h6l", lhs, rhs, w3)
                lhs = d.compose(d.tensor(did(a), adj.l2(x, y)), Hr(a, c.tensor_obj(x, y)))
                rhs = d.compose(d.tensor(Hr(a, x), did(L.obj(y))), adj.l2(c.tensor_obj(ua, x), y))
                r.expect_equal(d, "h6r", lhs, rhs, w3)
    for a in algebras:
        r.expect_equal(d, "h8l", d.compose(d.tensor(adj.l0, did(a)), Hl(one_c, a)), adj.counit(a), repr(a))
        r.expect_equal(d, "h8r", d.compose(d.tensor(did(a), adj.l0), Hr(a, one_c)), adj.counit(a), repr(a))
    # naturality in both arguments on seeded probe morphisms
    for x, x2 in zip(xs, xs[1:] + xs[:1]):
        for f in probe_morphisms(c, x, x2, seed, 1):
            for a, a2 in zip(algebras, algebras[1:] + algebras[:1]):
                for g in probe_morphisms(d, a, a2, seed, 1):
                    w = [repr(x), repr(x2), repr(a), repr(a2)]
                    lhs = d.compose(Hl(x2, a2), L.mor(c.tensor(f, U.mor(g))))
                    rhs = d.compose(d.tensor(L.mor(f), g), Hl(x, a))
                    r.expect_equal(d, "natural.hl", lhs, rhs, w)
                    lhs = d.compose(Hr(a2, x2), L.mor(c.tensor(U.mor(g), f)))
                    rhs = d.compose(d.tensor(g, L.mor(f)), Hr(a, x))
                    r.expect_equal(d, "natural.hr", lhs, rhs, w)
    return r


def check_fusion_agreement(adj: AdjunctionData, xs: Sequence) -> LawReport:
    """``U(H^l_{X, LY})`` is the left fusion operator, and likewise on the right."""
    t = adj.monad
    c = adj.lower
    r = LawReport()
    for x in xs:
        for y in xs:
            w = [repr(x), repr(y)]
            r.expect_equal(c, "fusion.left", adj.U.mor(hopf_operator_left(adj, x, adj.L.obj(y))), fusion_left(t, x, y), w)
            r.expect_equal(c, "fusion.right", adj.U.mor(hopf_operator_right(adj, adj.L.obj(x), y)), fusion_right(t, x, y), w)
    return r
