"""Comonoidal monads, monoidal comonads, fusion and cofusion operators.

Monads are evaluators: components are computed per object on demand and
memoised by object descriptor.  The shipped monads are all of the form
``T = - (x) A`` for a Hopf monoid ``A`` (a Hopf algebra in vector spaces or a
finite group in finite sets); the shipped comonad is ``G = Set(g, -)``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Callable, Optional, Sequence

from .algebras import HopfAlgebraData, check_hopf, cyclic_group_object, group_algebra
from .categories import FINSET, FINVECT, Category, ContractViolation, FnMor, probe_morphisms, probe_objects
from .reports import HOLDS, REFUTED, UNDECIDED, LawReport, Verdict

TABLE_CAP = 10 ** 6


def _memo(cache: dict, key, make):
    # idempotent insert: a racing duplicate computes the same value
    try:
        return cache[key]
    except KeyError:
        value = make()
        return cache.setdefault(key, value)


@dataclass(eq=False)
class ComonoidalMonad:
    """A monad ``(T, mu, eta)`` with comonoidal structure ``T2``, ``T0``."""

    cat: Category
    on_obj: Callable[[Any], Any]
    on_mor: Callable[[Any], Any]
    mu_fn: Callable[[Any], Any]
    eta_fn: Callable[[Any], Any]
    t2_fn: Callable[[Any, Any], Any]
    t0: Any
    name: str = "T"
    hopf: Optional[HopfAlgebraData] = None
    _cache: dict = field(default_factory=dict, repr=False)

    def obj(self, x):
        return _memo(self._cache, ("obj", x), lambda: self.on_obj(x))

    def mor(self, f):
        return self.on_mor(f)

    def mu(self, x):
        return _memo(self._cache, ("mu", x), lambda: self.mu_fn(x))

    def eta(self, x):
        return _memo(self._cache, ("eta", x), lambda: self.eta_fn(x))

    def t2(self, x, y):
        return _memo(self._cache, ("t2", x, y), lambda: self.t2_fn(x, y))


@dataclass(eq=False)
class MonoidalComonad:
    """A comonad ``(G, delta, eps)`` with monoidal structure ``g2``, ``g0``."""

    cat: Category
    on_obj: Callable[[Any], Any]
    on_mor: Callable[[Any], Any]
    delta_fn: Callable[[Any], Any]
    eps_fn: Callable[[Any], Any]
    g2_fn: Callable[[Any, Any], Any]
    g0: Any
    name: str = "G"
    _cache: dict = field(default_factory=dict, repr=False)

    def obj(self, x):
        return _memo(self._cache, ("obj", x), lambda: self.on_obj(x))

    def mor(self, f):
        return self.on_mor(f)

    def delta(self, x):
        return _memo(self._cache, ("delta", x), lambda: self.delta_fn(x))

    def eps(self, x):
        return _memo(self._cache, ("eps", x), lambda: self.eps_fn(x))

    def g2(self, x, y):
        return _memo(self._cache, ("g2", x, y), lambda: self.g2_fn(x, y))


# -- law checks -----------------------------------------------------------------


def default_probes(cat: Category, budget: int = 4) -> list:
    return probe_objects(cat, budget=budget)


def check_comonoidal_monad(t: ComonoidalMonad, probes: Optional[Sequence] = None, seed: int = 0,
                           morphisms: int = 2) -> LawReport:
    """Monad laws, functoriality, naturality and comonoidality of ``mu`` and ``eta``."""
    c = t.cat
    probes = list(probes) if probes is not None else default_probes(c)
    r = LawReport()
    one = c.unit()
    T = t.obj
    for x in probes:
        tx = T(x)
        r.expect_equal(c, "monad.assoc", c.compose(t.mu(x), t.mor(t.mu(x))), c.compose(t.mu(x), t.mu(tx)), repr(x))
        r.expect_equal(c, "monad.unit_left", c.compose(t.mu(x), t.eta(tx)), c.id(tx), repr(x))
        r.expect_equal(c, "monad.unit_right", c.compose(t.mu(x), t.mor(t.eta(x))), c.id(tx), repr(x))
        r.expect_equal(c, "functor.identity", t.mor(c.id(x)), c.id(tx), repr(x))
        r.expect_equal(c, "comonoidal.counit_left", c.compose(c.tensor(t.t0, c.id(tx)), t.t2(one, x)), c.id(tx), repr(x))
        r.expect_equal(c, "comonoidal.counit_right", c.compose(c.tensor(c.id(tx), t.t0), t.t2(x, one)), c.id(tx), repr(x))
        for y in probes:
            where = [repr(x), repr(y)]
            xy = c.tensor_obj(x, y)
            lhs = c.compose(t.t2(x, y), t.mu(xy))
            rhs = c.compose(c.tensor(t.mu(x), t.mu(y)), t.t2(T(x), T(y)), t.mor(t.t2(x, y)))
            r.expect_equal(c, "mu_comonoidal.tensor", lhs, rhs, where)
            r.expect_equal(c, "eta_comonoidal.tensor", c.compose(t.t2(x, y), t.eta(xy)), c.tensor(t.eta(x), t.eta(y)), where)
            for f in probe_morphisms(c, x, y, seed, morphisms):
                tf = t.mor(f)
                r.expect_equal(c, "natural.mu", c.compose(tf, t.mu(x)), c.compose(t.mu(y), t.mor(tf)), where)
                r.expect_equal(c, "natural.eta", c.compose(tf, t.eta(x)), c.compose(t.eta(y), f), where)
                for z in probes[:2]:
                    for g in probe_morphisms(c, y, z, seed, 1):
                        r.expect_equal(c, "functor.compose", t.mor(c.compose(g, f)), c.compose(t.mor(g), tf), where + [repr(z)])
                        r.expect_equal(c, "natural.t2", c.compose(c.tensor(tf, t.mor(g)), t.t2(x, y)),
                                       c.compose(t.t2(y, z), t.mor(c.tensor(f, g))), where + [repr(z)])
            for z in probes:
                lhs = c.compose(c.tensor(t.t2(x, y), c.id(T(z))), t.t2(xy, z))
                rhs = c.compose(c.tensor(c.id(T(x)), t.t2(y, z)), t.t2(x, c.tensor_obj(y, z)))
                r.expect_equal(c, "comonoidal.coassoc", lhs, rhs, where + [repr(z)])
    r.expect_equal(c, "mu_comonoidal.unit", c.compose(t.t0, t.mu(one)), c.compose(t.t0, t.mor(t.t0)))
    r.expect_equal(c, "eta_comonoidal.unit", c.compose(t.t0, t.eta(one)), c.id(one))
    return r


def check_monoidal_comonad(g: MonoidalComonad, probes: Sequence) -> LawReport:
    """Comonad laws and monoidality of ``delta`` and ``eps`` on probes."""
    c = g.cat
    r = LawReport()
    one = c.unit()
    G = g.obj
    for x in probes:
        gx = G(x)
        r.expect_equal(c, "comonad.coassoc", c.compose(g.mor(g.delta(x)), g.delta(x)), c.compose(g.delta(gx), g.delta(x)), repr(x))
        r.expect_equal(c, "comonad.counit_left", c.compose(g.eps(gx), g.delta(x)), c.id(gx), repr(x))
        r.expect_equal(c, "comonad.counit_right", c.compose(g.mor(g.eps(x)), g.delta(x)), c.id(gx), repr(x))
        for y in probes:
            where = [repr(x), repr(y)]
            xy = c.tensor_obj(x, y)
            r.expect_equal(c, "eps_monoidal.tensor", c.compose(g.eps(xy), g.g2(x, y)), c.tensor(g.eps(x), g.eps(y)), where)
            lhs = c.compose(g.delta(xy), g.g2(x, y))
            rhs = c.compose(g.mor(g.g2(x, y)), g.g2(G(x), G(y)), c.tensor(g.delta(x), g.delta(y)))
            r.expect_equal(c, "delta_monoidal.tensor", lhs, rhs, where)
    r.expect_equal(c, "eps_monoidal.unit", c.compose(g.eps(one), g.g0), c.id(one))
    r.expect_equal(c, "delta_monoidal.unit", c.compose(g.delta(one), g.g0), c.compose(g.mor(g.g0), g.g0))
    return r


# -- the induced monad - (x) A ----------------------------------------------------


def induced_module_monad(h: HopfAlgebraData, probes: Optional[Sequence] = None, validate: bool = True) -> ComonoidalMonad:
    """The comonoidal monad ``X |-> X (x) A`` whose algebras are right ``A``-modules."""
    c, a = h.cat, h.carrier
    if validate:
        bad = check_hopf(h).first_failure()
        if bad is not None:
            raise ContractViolation(f"{h.name} is not a Hopf algebra: {bad.law} fails at {bad.witness}")
    ida = c.id(a)
    t = ComonoidalMonad(
        cat=c,
        on_obj=lambda x: c.tensor_obj(x, a),
        on_mor=lambda f: c.tensor(f, ida),
        mu_fn=lambda x: c.tensor(c.id(x), h.m),
        eta_fn=lambda x: c.tensor(c.id(x), h.u),
        t2_fn=lambda x, y: c.compose(c.tensor(c.id(x), c.symmetry(y, a), ida), c.tensor(c.id(x), c.id(y), h.d)),
        t0=h.e,
        name=f"-(x){h.name}",
        hopf=h,
    )
    if validate:
        report = check_comonoidal_monad(t, probes)
        bad = report.first_failure()
        if bad is not None:
            raise ContractViolation(f"{t.name} is not a comonoidal monad: {bad.law} fails at {bad.witness}")
    return t


def identity_monad(cat: Category = FINVECT) -> ComonoidalMonad:
    """The identity monad, realised as ``- (x) 1``."""
    triv = cyclic_group_object(1) if cat is FINSET else group_algebra(1, cat)
    return induced_module_monad(triv.replace(name="1"), validate=False)


def set_product_monad(g: int) -> ComonoidalMonad:
    """``X |-> X x Z_g`` on finite sets, comonoidal through the diagonal."""
    return induced_module_monad(cyclic_group_object(g))


# -- fusion ---------------------------------------------------------------------


def fusion_left(t: ComonoidalMonad, x, y):
    """``T(X (x) TY) -> TX (x) T^2 Y -> TX (x) TY``."""
    c = t.cat
    return _memo(t._cache, ("fusion_l", x, y),
                 lambda: c.compose(c.tensor(c.id(t.obj(x)), t.mu(y)), t.t2(x, t.obj(y))))


def fusion_right(t: ComonoidalMonad, x, y):
    """``T(TX (x) Y) -> T^2 X (x) TY -> TX (x) TY``."""
    c = t.cat
    return _memo(t._cache, ("fusion_r", x, y),
                 lambda: c.compose(c.tensor(t.mu(x), c.id(t.obj(y))), t.t2(t.obj(x), y)))


def _invertible_on_probes(t: ComonoidalMonad, op, probes) -> Verdict:
    for x in probes:
        for y in probes:
            if t.cat.try_inverse(op(t, x, y)) is None:
                return Verdict(REFUTED, {"pair": [repr(x), repr(y)]}, "fusion operator not invertible")
    return Verdict(HOLDS)


def is_left_hopf(t: ComonoidalMonad, probes: Sequence) -> Verdict:
    return _invertible_on_probes(t, fusion_left, probes)


def is_right_hopf(t: ComonoidalMonad, probes: Sequence) -> Verdict:
    return _invertible_on_probes(t, fusion_right, probes)


def descent_type_check(t: ComonoidalMonad, probes: Sequence) -> Verdict:
    """Probe-level check that ``eta_X`` is the equaliser of ``T eta_X`` and ``eta_TX``."""
    c = t.cat
    for x in probes:
        eq_obj, e = c.equalizer(t.mor(t.eta(x)), t.eta(t.obj(x)))
        k = c.factor(e, t.eta(x))
        if k is None:
            return Verdict(REFUTED, {"object": repr(x)}, "unit does not factor through the equaliser")
        if c.try_inverse(k) is None:
            return Verdict(REFUTED, {"object": repr(x), "equalizer": repr(eq_obj)}, "comparison map is not invertible")
    return Verdict(HOLDS)


def monic_check(t: ComonoidalMonad, c_obj, probes: Sequence) -> Verdict:
    """``T(1_C (x) eta_X)`` is a monomorphism at every probe."""
    c = t.cat
    for x in probes:
        if not c.is_mono(t.mor(c.tensor(c.id(c_obj), t.eta(x)))):
            return Verdict(REFUTED, {"object": repr(x)}, "T(1 (x) eta) is not monic")
    return Verdict(HOLDS)


# -- the hom comonad on finite sets ---------------------------------------------


class TableTooLarge(Exception):
    """A function table would exceed the exhaustive-enumeration cap."""


def _fn(dom: int, cod: int, table_fn: Callable[[int], int]) -> FnMor:
    if dom > TABLE_CAP:
        raise TableTooLarge(f"table of {dom} entries exceeds cap {TABLE_CAP}")
    return FnMor(dom, cod, tuple(table_fn(i) for i in range(dom)))


def _decode(idx: int, base: int, g: int) -> tuple[int, ...]:
    # first coordinate most significant
    digits = []
    for _ in range(g):
        idx, r = divmod(idx, base)
        digits.append(r)
    return tuple(reversed(digits))


def _encode(values: Sequence[int], base: int) -> int:
    out = 0
    for v in values:
        out = out * base + v
    return out


def hom_comonad(g: int) -> MonoidalComonad:
    """``G X = X^g`` with ``delta(f)(a)(b) = f(a+b)``, ``eps(f) = f(0)`` and pointwise ``g2``."""
    if g < 1:
        raise ContractViolation("group order must be at least 1")
    c = FINSET

    def size(x: int) -> int:
        return x ** g

    def on_mor(f: FnMor) -> FnMor:
        return _fn(size(f.dom), size(f.cod),
                   lambda i: _encode([f.table[v] for v in _decode(i, f.dom, g)], f.cod))

    def delta(x: int) -> FnMor:
        gx = size(x)

        def image(i):
            vals = _decode(i, x, g)
            return _encode([_encode([vals[(a + b) % g] for b in range(g)], x) for a in range(g)], gx)

        return _fn(gx, size(gx), image)

    def eps(x: int) -> FnMor:
        return _fn(size(x), x, lambda i: _decode(i, x, g)[0])

    def g2(x: int, y: int) -> FnMor:
        def image(i):
            p, q = divmod(i, size(y))
            fx, fy = _decode(p, x, g), _decode(q, y, g)
            return _encode([fx[a] * y + fy[a] for a in range(g)], x * y)

        return _fn(size(x) * size(y), size(x * y), image)

    return MonoidalComonad(c, size, on_mor, delta, eps, g2, FnMor(1, 1, (0,)), name=f"Set(Z{g},-)")


def cofusion_left(G: MonoidalComonad, x, y):
    """``GX (x) GY -> G^2 X (x) GY -> G(GX (x) Y)``."""
    c = G.cat
    _guard(G, G.obj(x), y)
    return c.compose(G.g2(G.obj(x), y), c.tensor(G.delta(x), c.id(G.obj(y))))


def cofusion_right(G: MonoidalComonad, x, y):
    """``GX (x) GY -> GX (x) G^2 Y -> G(X (x) GY)``."""
    c = G.cat
    _guard(G, x, G.obj(y))
    return c.compose(G.g2(x, G.obj(y)), c.tensor(c.id(G.obj(x)), G.delta(y)))


def _guard(G: MonoidalComonad, x, y) -> None:
    c = G.cat
    if c is FINSET and G.obj(c.tensor_obj(x, y)) > TABLE_CAP:
        raise TableTooLarge(f"codomain of {G.obj(c.tensor_obj(x, y))} elements exceeds cap {TABLE_CAP}")


def cofusion_verdict(G: MonoidalComonad, probes: Sequence, side: str = "left") -> Verdict:
    """Invertibility of the cofusion operator on probes, with cardinality witnesses."""
    op = cofusion_left if side == "left" else cofusion_right
    for x in probes:
        for y in probes:
            try:
                f = op(G, x, y)
            except TableTooLarge as exc:
                return Verdict(UNDECIDED, {"pair": [x, y]}, str(exc))
            if G.cat.try_inverse(f) is None:
                witness = {"pair": [x, y], "dom": G.cat.size(f.dom), "cod": G.cat.size(f.cod)}
                reason = "cardinalities differ" if f.dom != f.cod else "not bijective"
                return Verdict(REFUTED, witness, reason)
    return Verdict(HOLDS)


def is_injective_fn(f: FnMor) -> bool:
    return len(set(f.table)) == len(f.table)


__all__ = [
    "ComonoidalMonad", "MonoidalComonad", "TableTooLarge", "check_comonoidal_monad", "check_monoidal_comonad",
    "cofusion_left", "cofusion_right", "cofusion_verdict", "descent_type_check", "fusion_left", "fusion_right",
    "hom_comonad", "identity_monad", "induced_module_monad", "is_left_hopf", "is_right_hopf", "monic_check",
    "set_product_monad", "default_probes", "is_injective_fn", "TABLE_CAP",
]
