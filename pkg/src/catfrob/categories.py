"""Concrete strict symmetric monoidal categories.

Three handles ship: finite-dimensional rational vector spaces (``FINVECT``),
finite sets with the cartesian product (``FINSET``) and Z/2-graded vector
spaces with the Koszul sign braiding (``GRVECT``).  All of them are strict: the
unit object is literally the 1-dimensional space / one-point set, tensor
products of objects are associative on the nose and every associator or unitor
is an identity.

Universally quantified laws are only ever checked on the finite probe sets
produced by :func:`probe_objects` and :func:`probe_morphisms`.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import reduce
from itertools import product
from typing import Any, Optional, Sequence

from .exact import RationalMatrix, is_injective, kernel_basis, kron, solve_linear, try_inverse


class ContractViolation(ValueError):
    """An operation was called outside its precondition."""


# -- morphisms ------------------------------------------------------------------


@dataclass(frozen=True)
class LinMor:
    """A linear map given by its ``dim cod x dim dom`` matrix."""

    dom: Any
    cod: Any
    mat: RationalMatrix

    def __repr__(self) -> str:
        return f"LinMor({self.dom!r} -> {self.cod!r}, {self.mat!r})"


@dataclass(frozen=True)
class FnMor:
    """A total function ``range(dom) -> range(cod)`` given by its table."""

    dom: int
    cod: int
    table: tuple[int, ...]

    def __repr__(self) -> str:
        return f"FnMor({self.dom} -> {self.cod}, {list(self.table)})"


@dataclass(frozen=True)
class GradedSpace:
    """A Z/2-graded space, given by the degree (0 or 1) of each basis vector.

    The basis order is part of the object: tensor products interleave degrees
    in row-major order, which keeps the monoidal structure strict.
    """

    degrees: tuple[int, ...]

    @classmethod
    def of(cls, even: int, odd: int) -> "GradedSpace":
        return cls((0,) * even + (1,) * odd)

    @property
    def dim(self) -> int:
        return len(self.degrees)

    @property
    def dims(self) -> tuple[int, int]:
        odd = sum(self.degrees)
        return (self.dim - odd, odd)

    def __repr__(self) -> str:
        even, odd = self.dims
        if self.degrees == (0,) * even + (1,) * odd:
            return f"({even}|{odd})"
        return "G" + "".join(map(str, self.degrees))


# -- the handle -----------------------------------------------------------------


class Category:
    """Capability record for one concrete strict monoidal category.

    ``compose(g, f)`` is ``g o f``; more arguments compose right to left.
    ``tensor`` takes morphisms, ``tensor_obj`` takes objects.
    """

    name = "category"
    linear = False
    braided = True

    # subclasses implement these
    def unit(self):
        raise NotImplementedError

    def id(self, x):
        raise NotImplementedError

    def _compose2(self, g, f):
        raise NotImplementedError

    def _tensor2(self, f, g):
        raise NotImplementedError

    def _tensor_obj2(self, x, y):
        raise NotImplementedError

    def equal(self, f, g) -> bool:
        raise NotImplementedError

    def symmetry(self, x, y):
        raise NotImplementedError

    def equalizer(self, f, g):
        raise NotImplementedError

    def factor(self, e, h):
        """The unique ``k`` with ``e o k = h`` for a mono ``e``, or None."""
        raise NotImplementedError

    def try_inverse(self, f):
        raise NotImplementedError

    def is_mono(self, f) -> bool:
        raise NotImplementedError

    def size(self, x) -> int:
        raise NotImplementedError

    def enumerate_objects(self) -> list:
        raise NotImplementedError

    def random_morphism(self, x, y, rng: random.Random):
        raise NotImplementedError

    def witness(self, f, g):
        """A small description of where ``f`` and ``g`` differ."""
        return None

    # shared conveniences
    def compose(self, *fs):
        if not fs:
            raise ContractViolation("compose needs at least one morphism")
        return reduce(self._compose2, fs)

    def tensor(self, *fs):
        if not fs:
            return self.id(self.unit())
        return reduce(self._tensor2, fs)

    def tensor_obj(self, *xs):
        if not xs:
            return self.unit()
        return reduce(self._tensor_obj2, xs)

    def dom(self, f):
        return f.dom

    def cod(self, f):
        return f.cod

    def check_parallel(self, f, g):
        if f.dom != g.dom or f.cod != g.cod:
            raise ContractViolation(f"not parallel: {f.dom!r}->{f.cod!r} vs {g.dom!r}->{g.cod!r}")

    def __repr__(self) -> str:
        return f"<{self.name}>"


class _LinearCategory(Category):
    linear = True

    def dim(self, x) -> int:
        raise NotImplementedError

    def size(self, x) -> int:
        return self.dim(x)

    def mor(self, dom, cod, mat) -> LinMor:
        if not isinstance(mat, RationalMatrix):
            mat = RationalMatrix.from_rows(mat, cols=self.dim(dom))
        if mat.shape != (self.dim(cod), self.dim(dom)):
            raise ContractViolation(f"matrix shape {mat.shape} does not fit {dom!r} -> {cod!r}")
        return LinMor(dom, cod, mat)

    def id(self, x) -> LinMor:
        return LinMor(x, x, RationalMatrix.identity(self.dim(x)))

    def zero(self, dom, cod) -> LinMor:
        return LinMor(dom, cod, RationalMatrix.zeros(self.dim(cod), self.dim(dom)))

    def _compose2(self, g: LinMor, f: LinMor) -> LinMor:
        if f.cod != g.dom:
            raise ContractViolation(f"cannot compose {g.dom!r}->{g.cod!r} after {f.dom!r}->{f.cod!r}")
        return LinMor(f.dom, g.cod, g.mat @ f.mat)

    def _tensor2(self, f: LinMor, g: LinMor) -> LinMor:
        return LinMor(self._tensor_obj2(f.dom, g.dom), self._tensor_obj2(f.cod, g.cod), kron(f.mat, g.mat))

    def equal(self, f: LinMor, g: LinMor) -> bool:
        return f.dom == g.dom and f.cod == g.cod and f.mat == g.mat

    def add(self, f: LinMor, g: LinMor) -> LinMor:
        self.check_parallel(f, g)
        return LinMor(f.dom, f.cod, f.mat + g.mat)

    def sub(self, f: LinMor, g: LinMor) -> LinMor:
        self.check_parallel(f, g)
        return LinMor(f.dom, f.cod, f.mat - g.mat)

    def scale(self, f: LinMor, c) -> LinMor:
        return LinMor(f.dom, f.cod, f.mat.scale(c))

    def witness(self, f, g):
        if f.dom != g.dom or f.cod != g.cod:
            return {"reason": "shape", "lhs": [repr(f.dom), repr(f.cod)], "rhs": [repr(g.dom), repr(g.cod)]}
        idx = f.mat.first_difference(g.mat)
        if idx is None:
            return None
        i, j = idx
        return {"row": i, "col": j, "lhs": f.mat[i, j], "rhs": g.mat[i, j]}

    def factor(self, e: LinMor, h: LinMor) -> Optional[LinMor]:
        if e.cod != h.cod:
            raise ContractViolation("factor: codomains differ")
        k = solve_linear(e.mat, h.mat)
        if k is None or e.mat @ k != h.mat:
            return None
        return LinMor(h.dom, e.dom, k)

    def try_inverse(self, f: LinMor) -> Optional[LinMor]:
        inv = try_inverse(f.mat)
        if inv is None:
            return None
        return LinMor(f.cod, f.dom, inv)

    def is_mono(self, f: LinMor) -> bool:
        return is_injective(f.mat)

    def hom_basis(self, x, y) -> list[LinMor]:
        """Elementary matrices spanning ``Hom(x, y)``."""
        rows, cols = self.dim(y), self.dim(x)
        return [self.mor(x, y, RationalMatrix(rows, cols, {i: {j: 1}})) for i in range(rows) for j in range(cols)]

    def from_vector(self, x, y, values: Sequence) -> LinMor:
        return LinMor(x, y, RationalMatrix.from_entries(self.dim(y), self.dim(x), values))

    def random_morphism(self, x, y, rng: random.Random) -> LinMor:
        rows, cols = self.dim(y), self.dim(x)
        values = [rng.randint(-2, 2) for _ in range(rows * cols)]
        return self._mask(LinMor(x, y, RationalMatrix.from_entries(rows, cols, values)))

    def _mask(self, f: LinMor) -> LinMor:
        return f


class FinVect(_LinearCategory):
    """Finite-dimensional rational vector spaces; objects are dimensions."""

    name = "finvect"

    def dim(self, x: int) -> int:
        return x

    def unit(self) -> int:
        return 1

    def _tensor_obj2(self, x: int, y: int) -> int:
        return x * y

    def symmetry(self, x: int, y: int) -> LinMor:
        data = {k * x + i: {i * y + k: 1} for i in range(x) for k in range(y)}
        return LinMor(x * y, y * x, RationalMatrix(y * x, x * y, data))

    def equalizer(self, f: LinMor, g: LinMor):
        self.check_parallel(f, g)
        basis = kernel_basis((f.mat - g.mat))
        return basis.cols, LinMor(basis.cols, f.dom, basis)

    def enumerate_objects(self) -> list[int]:
        return [1, 0, 2, 3]


class GrVect(_LinearCategory):
    """Z/2-graded spaces; morphisms preserve degree, the braiding carries Koszul signs."""

    name = "grvect"

    def dim(self, x: GradedSpace) -> int:
        return x.dim

    def unit(self) -> GradedSpace:
        return GradedSpace((0,))

    def _tensor_obj2(self, x: GradedSpace, y: GradedSpace) -> GradedSpace:
        return GradedSpace(tuple((a + b) % 2 for a in x.degrees for b in y.degrees))

    def mor(self, dom, cod, mat) -> LinMor:
        f = super().mor(dom, cod, mat)
        bad = self.degree_violation(f)
        if bad is not None:
            raise ContractViolation(f"entry {bad} does not preserve degree")
        return f

    @staticmethod
    def degree_violation(f: LinMor) -> Optional[tuple[int, int]]:
        for i, j, _ in f.mat.items():
            if f.cod.degrees[i] != f.dom.degrees[j]:
                return (i, j)
        return None

    def is_morphism(self, f: LinMor) -> bool:
        return self.degree_violation(f) is None

    def symmetry(self, x: GradedSpace, y: GradedSpace) -> LinMor:
        m, n = x.dim, y.dim
        data = {}
        for i in range(m):
            for k in range(n):
                sign = -1 if x.degrees[i] and y.degrees[k] else 1
                data[k * m + i] = {i * n + k: sign}
        return LinMor(self._tensor_obj2(x, y), self._tensor_obj2(y, x), RationalMatrix(n * m, m * n, data))

    def equalizer(self, f: LinMor, g: LinMor):
        self.check_parallel(f, g)
        basis = kernel_basis(f.mat - g.mat)
        # kernel vectors of a degree-preserving map are homogeneous
        degrees = []
        for c in range(basis.cols):
            degs = {f.dom.degrees[i] for i in range(basis.rows) if basis[i, c]}
            degrees.append(degs.pop())
        e_obj = GradedSpace(tuple(degrees))
        return e_obj, LinMor(e_obj, f.dom, basis)

    def hom_basis(self, x, y) -> list[LinMor]:
        return [LinMor(x, y, RationalMatrix(y.dim, x.dim, {i: {j: 1}}))
                for i in range(y.dim) for j in range(x.dim) if y.degrees[i] == x.degrees[j]]

    def _mask(self, f: LinMor) -> LinMor:
        data: dict[int, dict] = {}
        for i, j, v in f.mat.items():
            if f.cod.degrees[i] == f.dom.degrees[j]:
                data.setdefault(i, {})[j] = v
        return LinMor(f.dom, f.cod, RationalMatrix(f.mat.rows, f.mat.cols, data))

    def enumerate_objects(self) -> list[GradedSpace]:
        rest = [(p, q) for p in range(4) for q in range(4) if p + q <= 3 and (p, q) != (1, 0)]
        rest.sort(key=lambda pq: (pq[0] + pq[1], abs(pq[0] - pq[1]), pq[0]))
        return [GradedSpace.of(1, 0)] + [GradedSpace.of(p, q) for p, q in rest]


class FinSet(Category):
    """Finite sets ``{0..n-1}`` with the cartesian product as tensor."""

    name = "finset"

    def unit(self) -> int:
        return 1

    def size(self, x: int) -> int:
        return x

    def mor(self, dom: int, cod: int, table: Sequence[int]) -> FnMor:
        table = tuple(int(t) for t in table)
        if len(table) != dom or any(not 0 <= t < cod for t in table):
            raise ContractViolation(f"table {table} is not a function {dom} -> {cod}")
        return FnMor(dom, cod, table)

    def id(self, x: int) -> FnMor:
        return FnMor(x, x, tuple(range(x)))

    def _compose2(self, g: FnMor, f: FnMor) -> FnMor:
        if f.cod != g.dom:
            raise ContractViolation(f"cannot compose {g.dom}->{g.cod} after {f.dom}->{f.cod}")
        gt = g.table
        return FnMor(f.dom, g.cod, tuple(gt[t] for t in f.table))

    def _tensor_obj2(self, x: int, y: int) -> int:
        return x * y

    def _tensor2(self, f: FnMor, g: FnMor) -> FnMor:
        gc = g.cod
        table = tuple(a * gc + b for a in f.table for b in g.table)
        return FnMor(f.dom * g.dom, f.cod * g.cod, table)

    def equal(self, f: FnMor, g: FnMor) -> bool:
        return f.dom == g.dom and f.cod == g.cod and f.table == g.table

    def witness(self, f, g):
        if f.dom != g.dom or f.cod != g.cod:
            return {"reason": "shape", "lhs": [f.dom, f.cod], "rhs": [g.dom, g.cod]}
        for i, (a, b) in enumerate(zip(f.table, g.table)):
            if a != b:
                return {"element": i, "lhs": a, "rhs": b}
        return None

    def symmetry(self, x: int, y: int) -> FnMor:
        return FnMor(x * y, y * x, tuple(k * x + i for i in range(x) for k in range(y)))

    def equalizer(self, f: FnMor, g: FnMor):
        self.check_parallel(f, g)
        keep = tuple(i for i in range(f.dom) if f.table[i] == g.table[i])
        return len(keep), FnMor(len(keep), f.dom, keep)

    def factor(self, e: FnMor, h: FnMor) -> Optional[FnMor]:
        if e.cod != h.cod:
            raise ContractViolation("factor: codomains differ")
        pre = {}
        for i, t in enumerate(e.table):
            pre.setdefault(t, i)
        try:
            return FnMor(h.dom, e.dom, tuple(pre[t] for t in h.table))
        except KeyError:
            return None

    def try_inverse(self, f: FnMor) -> Optional[FnMor]:
        if f.dom != f.cod or len(set(f.table)) != f.dom:
            return None
        inv = [0] * f.dom
        for i, t in enumerate(f.table):
            inv[t] = i
        return FnMor(f.cod, f.dom, tuple(inv))

    def is_mono(self, f: FnMor) -> bool:
        return len(set(f.table)) == len(f.table)

    def enumerate_objects(self) -> list[int]:
        return [1, 0, 2, 3]

    def random_morphism(self, x: int, y: int, rng: random.Random) -> Optional[FnMor]:
        if x and not y:
            return None
        return FnMor(x, y, tuple(rng.randrange(y) for _ in range(x)))

    def all_morphisms(self, x: int, y: int) -> list[FnMor]:
        return [FnMor(x, y, t) for t in product(range(y), repeat=x)]


FINVECT = FinVect()
FINSET = FinSet()
GRVECT = GrVect()

CATEGORIES = {c.name: c for c in (FINVECT, FINSET, GRVECT)}


def probe_objects(c: Category, seed: int = 0, budget: int = 4) -> list:
    """The first ``budget`` objects of the deterministic enumeration.

    The enumeration starts with the unit object and then lists every object of
    size at most 3; ``seed`` only influences :func:`probe_morphisms`.
    """
    if budget < 1:
        raise ContractViolation("probe budget must be at least 1")
    return list(c.enumerate_objects()[:budget])


def probe_morphisms(c: Category, x, y, seed: int = 0, count: int = 3) -> list:
    """``count`` seeded pseudo-random morphisms ``x -> y`` (fewer if none exist)."""
    rng = random.Random(f"{c.name}:{seed}:{x!r}:{y!r}")
    out = []
    for _ in range(count):
        f = c.random_morphism(x, y, rng)
        if f is not None:
            out.append(f)
    return out
