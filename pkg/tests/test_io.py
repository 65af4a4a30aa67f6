import json
from fractions import Fraction

import pytest

from catfrob.algebras import graded_nilpotent_algebra, group_algebra, sweedler_algebra
from catfrob.categories import FINSET
from catfrob.exact import RationalMatrix
from catfrob.io import (StructureFileError, dump_structure_constants, dumps, encode, load_structure_constants,
                        parse_structure_constants, shipped_file, structure_constants_document)


def same(h, g):
    c = h.cat
    return h.carrier == g.carrier and all(c.equal(getattr(h, k), getattr(g, k)) for k in "mudes")


@pytest.mark.parametrize("name,make", [("kz2.json", lambda: group_algebra(2)), ("sweedler.json", sweedler_algebra)])
def test_shipped_files_match_generators(name, make):
    assert same(load_structure_constants(shipped_file(name)), make())


@pytest.mark.parametrize("h", [group_algebra(3), sweedler_algebra(), graded_nilpotent_algebra(),
                               group_algebra(2, FINSET)], ids=lambda h: f"{h.name}-{h.cat.name}")
def test_round_trip(tmp_path, h):
    p = tmp_path / "h.json"
    dump_structure_constants(h, p)
    back = load_structure_constants(p)
    assert same(back, h) and back.name == h.name


def test_entries_are_rational_strings():
    doc = structure_constants_document(sweedler_algebra())
    assert all(isinstance(v, str) and "/" in v for row in doc["m"] for v in row)
    assert doc["dim"] == 4


def test_graded_files_declare_dims():
    doc = structure_constants_document(graded_nilpotent_algebra())
    assert doc["dims"] == [1, 1] and "dim" not in doc


def write(tmp_path, doc):
    p = tmp_path / "bad.json"
    p.write_text(json.dumps(doc))
    return p


def test_non_coassociative_comultiplication_is_named(tmp_path):
    doc = structure_constants_document(group_algebra(3))
    # add (1 - g) (x) (1 - g^2) to d(g): the counit survives, coassociativity does not
    for row, sign in ((0, 1), (2, -1), (3, -1), (5, 1)):
        doc["d"][row][1] = str(Fraction(doc["d"][row][1]) + sign)
    with pytest.raises(StructureFileError) as exc:
        load_structure_constants(write(tmp_path, doc))
    assert exc.value.axiom == "coassociativity"
    assert "coassociativity" in str(exc.value)
    assert exc.value.witness is not None


def test_broken_counit_is_named(tmp_path):
    doc = structure_constants_document(group_algebra(2))
    doc["d"][0][0] = "0"
    doc["d"][1][0] = "1"
    with pytest.raises(StructureFileError, match="left counit"):
        load_structure_constants(write(tmp_path, doc))


@pytest.mark.parametrize("mutate,message", [
    (lambda d: d.pop("m"), "missing 'm'"),
    (lambda d: d.update(category="sets"), "unknown category"),
    (lambda d: d.update(dim=-1), "'dim'"),
    (lambda d: d.update(u=["1"]), "'u'"),
    (lambda d: d["s"].__setitem__(0, ["1/0", "0"]), "'s'"),
    (lambda d: d["s"].__setitem__(0, ["x", "0"]), "'s'"),
])
def test_parse_errors(mutate, message):
    doc = structure_constants_document(group_algebra(2))
    mutate(doc)
    with pytest.raises(StructureFileError, match=message):
        parse_structure_constants(doc)


def test_graded_file_without_dims(tmp_path):
    doc = structure_constants_document(graded_nilpotent_algebra())
    del doc["dims"]
    with pytest.raises(StructureFileError, match="dims"):
        load_structure_constants(write(tmp_path, doc))


def test_finset_file_needs_function_columns():
    doc = structure_constants_document(group_algebra(2, FINSET))
    doc["s"] = [["1", "1"], ["0", "0"]]
    parse_structure_constants(doc)
    doc["s"] = [["1", "1"], ["0", "1"]]
    with pytest.raises(StructureFileError, match="function column"):
        parse_structure_constants(doc)


def test_unreadable_file(tmp_path):
    p = tmp_path / "x.json"
    p.write_text("{not json")
    with pytest.raises(StructureFileError, match="cannot read"):
        load_structure_constants(p)


def test_encode_and_dumps():
    assert encode(Fraction(-1, 2)) == "-1/2"
    assert encode(3) == 3 and encode(True) is True
    assert encode(RationalMatrix.from_rows([[1, Fraction(1, 3)]])) == [["1/1", "1/3"]]
    assert dumps({"b": 1, "a": [2]}) == '{\n  "a": [\n    2\n  ],\n  "b": 1\n}\n'
