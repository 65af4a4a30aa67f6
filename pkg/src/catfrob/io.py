"""Structure-constant files and JSON encoding of exact data.

A file holds ``name``, ``category`` (``finvect``, ``finset`` or ``grvect``),
``dim`` (or ``dims = [even, odd]`` for graded spaces) and the matrices
``m`` (n x n^2), ``u`` (length n), ``d`` (n^2 x n), ``e`` (length n) and
``s`` (n x n).  Entries are ``"p/q"`` strings or integers; matrices are
row-major with the codomain indexing rows.  For ``finset`` the matrices must
be 0/1 function matrices.
"""

from __future__ import annotations

import json
from fractions import Fraction
from importlib import resources
from pathlib import Path
from typing import Any

from .algebras import HopfAlgebraData, check_hopf
from .categories import CATEGORIES, FINSET, FINVECT, GRVECT, ContractViolation, FnMor, GradedSpace, LinMor
from .exact import RationalMatrix, as_rational, format_rational

AXIOM_NAMES = {
    "assoc": "associativity",
    "unit.left": "left unit",
    "unit.right": "right unit",
    "coassoc": "coassociativity",
    "counit.left": "left counit",
    "counit.right": "right counit",
    "bialgebra.comult": "comultiplicativity",
    "bialgebra.counit": "counit multiplicativity",
    "bialgebra.unit": "unit comultiplicativity",
    "bialgebra.unit_counit": "unit-counit compatibility",
    "antipode.left": "left antipode",
    "antipode.right": "right antipode",
    "degree": "degree consistency",
}


class StructureFileError(ContractViolation):
    """A structure-constant file could not be parsed or violates an axiom."""

    def __init__(self, message: str, axiom: str = "", witness: Any = None):
        super().__init__(message)
        self.axiom = axiom
        self.witness = witness


def _matrix(raw, rows: int, cols: int, key: str) -> RationalMatrix:
    if not isinstance(raw, list) or len(raw) != rows or any(not isinstance(r, list) or len(r) != cols for r in raw):
        raise StructureFileError(f"'{key}' must be a {rows}x{cols} array")
    try:
        return RationalMatrix.from_rows([[as_rational(v) for v in row] for row in raw], cols)
    except (ValueError, ZeroDivisionError, TypeError) as exc:
        raise StructureFileError(f"'{key}': {exc}") from exc


def _vector(raw, n: int, key: str, as_row: bool) -> RationalMatrix:
    if not isinstance(raw, list) or len(raw) != n:
        raise StructureFileError(f"'{key}' must be an array of length {n}")
    rows = [raw] if as_row else [[v] for v in raw]
    return _matrix(rows, len(rows), len(rows[0]) if rows else 0, key)


def _function(mat: RationalMatrix, key: str) -> tuple[int, ...]:
    table = []
    for j in range(mat.cols):
        hits = [(i, mat[i, j]) for i in range(mat.rows) if mat[i, j]]
        if len(hits) != 1 or hits[0][1] != 1:
            raise StructureFileError(f"'{key}' column {j} is not a function column")
        table.append(hits[0][0])
    return tuple(table)


def parse_structure_constants(doc: dict) -> HopfAlgebraData:
    """Build Hopf data from a parsed document without checking axioms."""
    if not isinstance(doc, dict):
        raise StructureFileError("top level must be an object")
    cat = CATEGORIES.get(doc.get("category"))
    if cat is None:
        raise StructureFileError(f"unknown category {doc.get('category')!r}")
    if cat is GRVECT:
        dims = doc.get("dims")
        if not (isinstance(dims, list) and len(dims) == 2 and all(isinstance(k, int) and k >= 0 for k in dims)):
            raise StructureFileError("graded files need 'dims': [even, odd]")
        carrier = GradedSpace.of(*dims)
        n = carrier.dim
    else:
        n = doc.get("dim")
        if not isinstance(n, int) or n < 0:
            raise StructureFileError("'dim' must be a non-negative integer")
        carrier = n
    for key in ("m", "u", "d", "e", "s"):
        if key not in doc:
            raise StructureFileError(f"missing '{key}'")
    m = _matrix(doc["m"], n, n * n, "m")
    u = _vector(doc["u"], n, "u", as_row=False)
    d = _matrix(doc["d"], n * n, n, "d")
    e = _vector(doc["e"], n, "e", as_row=True)
    s = _matrix(doc["s"], n, n, "s")
    name = str(doc.get("name", "unnamed"))
    basis = tuple(doc.get("basis", ()))
    one = cat.unit()
    aa = cat.tensor_obj(carrier, carrier)
    if cat is FINSET:
        mk = lambda dom, cod, mat, key: FnMor(dom, cod, _function(mat, key))  # noqa: E731
    else:
        mk = lambda dom, cod, mat, key: LinMor(dom, cod, mat)  # noqa: E731
    return HopfAlgebraData(cat, carrier, mk(aa, carrier, m, "m"), mk(one, carrier, u, "u"), mk(carrier, aa, d, "d"),
                           mk(carrier, one, e, "e"), mk(carrier, carrier, s, "s"), name, basis)


def load_structure_constants(path) -> HopfAlgebraData:
    """Read, build and validate; the first violated axiom is named in the error."""
    try:
        doc = json.loads(Path(path).read_text(encoding="utf-8"))
    except (OSError, json.JSONDecodeError) as exc:
        raise StructureFileError(f"cannot read {path}: {exc}") from exc
    h = parse_structure_constants(doc)
    try:
        report = check_hopf(h)
    except ContractViolation as exc:
        raise StructureFileError(f"{h.name}: {exc}", axiom="shape") from exc
    bad = report.first_failure()
    if bad is not None:
        axiom = AXIOM_NAMES.get(bad.law, bad.law)
        raise StructureFileError(f"{h.name}: {axiom} fails", axiom=axiom, witness=bad.witness)
    return h


def _as_matrix(h: HopfAlgebraData, f) -> RationalMatrix:
    if isinstance(f, FnMor):
        return RationalMatrix(f.cod, f.dom, {i: {j: 1 for j, t in enumerate(f.table) if t == i} for i in set(f.table)})
    return f.mat


def structure_constants_document(h: HopfAlgebraData) -> dict:
    cat = h.cat
    out: dict[str, Any] = {"name": h.name, "category": cat.name}
    if cat is GRVECT:
        if tuple(sorted(h.carrier.degrees)) != h.carrier.degrees:
            raise ContractViolation("only even-then-odd graded bases can be written")
        out["dims"] = list(h.carrier.dims)
    else:
        out["dim"] = h.carrier
    if h.basis:
        out["basis"] = list(h.basis)
    for key in ("m", "d", "s"):
        out[key] = encode(_as_matrix(h, getattr(h, key)))
    out["u"] = [row[0] for row in encode(_as_matrix(h, h.u))]  # column vector
    out["e"] = encode(_as_matrix(h, h.e))[0]
    return out


def dump_structure_constants(h: HopfAlgebraData, path) -> None:
    Path(path).write_text(dumps(structure_constants_document(h)), encoding="utf-8")


def shipped_file(name: str) -> Path:
    return Path(str(resources.files("catfrob") / "data" / name))


def encode(value: Any) -> Any:
    """JSON-ready form: fractions become ``"p/q"``, matrices nested string arrays.

    Bare integers (indices, cardinalities) stay JSON integers.
    """
    if isinstance(value, (bool, int, str)) or value is None:
        return value
    if isinstance(value, Fraction):
        return format_rational(value)
    if isinstance(value, RationalMatrix):
        return [[format_rational(v) for v in row] for row in value.to_lists()]
    if isinstance(value, LinMor):
        return encode(value.mat)
    if isinstance(value, FnMor):
        return list(value.table)
    if isinstance(value, dict):
        return {str(k): encode(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [encode(v) for v in value]
    if hasattr(value, "underlying"):
        return encode(value.underlying)
    return repr(value)


def dumps(doc: Any) -> str:
    """Deterministic serialisation: sorted keys, fixed separators, trailing newline."""
    return json.dumps(doc, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


__all__ = [
    "AXIOM_NAMES", "StructureFileError", "dump_structure_constants", "dumps", "encode", "load_structure_constants",
    "parse_structure_constants", "shipped_file", "structure_constants_document",
]
