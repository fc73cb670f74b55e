from decimal import Decimal
from fractions import Fraction

import pytest

from services.circle import TaxicabCircle
from services.circumcircle import circumcircles
from services.documents import (
    dump_document,
    classification_to_doc,
    incircle_to_doc,
    load_document,
    parse_circle,
    parse_classification,
    parse_construction,
    parse_incircle,
    parse_or_raise,
    parse_point,
    parse_solution,
    parse_triangle,
    solution_to_doc,
    construction_to_doc,
    triangle_to_doc,
)
from services.errors import DegenerateInputError, DocumentError
from services.exact import Point
from services.incircle import incircle, paper_construction
from services.triangle import Triangle, classify_triangle


def tri(*pts):
    return Triangle(*(Point(*p) for p in pts))


def test_decimal_literals_are_exact():
    doc = load_document('{"vertices": [[0.5, 0], [2, 2.25], ["1/3", "-1"]]}')
    assert doc["vertices"][0][0] == Decimal("0.5")
    t = parse_triangle(doc)
    assert t.vertices == (Point(Fraction(1, 2), 0), Point(2, Fraction(9, 4)), Point(Fraction(1, 3), -1))


def test_triangle_doc_uses_rational_strings():
    t = tri((Fraction(1, 2), 0), (2, 2), (3, -2))
    assert triangle_to_doc(t) == {"vertices": [["1/2", "0"], ["2", "2"], ["3", "-2"]]}
    assert parse_triangle(triangle_to_doc(t)) == t


def test_dump_document_is_stable():
    text = dump_document({"b": 1, "a": ["x"]})
    assert text == '{\n  "a": [\n    "x"\n  ],\n  "b": 1\n}\n'


def test_invalid_json():
    with pytest.raises(DocumentError, match="invalid JSON"):
        load_document("{not json")


@pytest.mark.parametrize("doc, message", [
    ({"vertices": [[0, 0], [1, 1]]}, "three vertices"),
    ({}, "missing field 'vertices'"),
    ({"vertices": [[0, 0], [1, 0], [0]]}, "coordinate pair"),
    ({"vertices": [[0, 0], [1, 0], [0, "abc"]]}, "not a rational"),
    ({"vertices": [[0, 0], [1, 0], [0, True]]}, "exact number"),
    ([1, 2, 3], "expected an object"),
])
def test_bad_triangle_documents(doc, message):
    with pytest.raises(DocumentError, match=message):
        parse_or_raise(parse_triangle, doc)


def test_domain_errors_pass_through():
    with pytest.raises(DegenerateInputError):
        parse_or_raise(parse_triangle, {"vertices": [[0, 0], [1, 1], [2, 2]]})


def test_key_errors_become_document_errors():
    def parse(doc):
        return parse_point(doc["at"])
    with pytest.raises(DocumentError, match="missing field"):
        parse_or_raise(parse, {})


def test_circle_requires_positive_radius():
    with pytest.raises(DegenerateInputError):
        parse_or_raise(parse_circle, {"center": [0, 0], "radius": "0"})


def test_classification_round_trip():
    for t in (tri((5, 1), (4, -3), (0, 0)), tri((0, 0), (6, 0), (3, 2))):
        c = classify_triangle(t)
        assert parse_classification(load_document(dump_document(classification_to_doc(c)))) == c


def test_unknown_angle_class():
    doc = classification_to_doc(classify_triangle(tri((5, 1), (4, -3), (0, 0))))
    doc["classes"][0] = "sideways"
    with pytest.raises(DocumentError, match="unknown InscribedClass"):
        parse_classification(doc)


def test_solution_round_trip():
    for t in (tri((5, 1), (4, -3), (0, 0)), tri((0, 0), (2, 2), (3, -2)), tri((0, 0), (2, 2), (2, -2))):
        s = circumcircles(t)
        assert parse_solution(load_document(dump_document(solution_to_doc(s)))) == s


def test_solution_document_shape():
    doc = solution_to_doc(circumcircles(tri((0, 0), (2, 2), (2, -2))))
    assert doc == {
        "multiplicity": "unbounded_family",
        "components": [{
            "kind": "ray",
            "base": {"center": ["2", "0"], "radius": "2"},
            "center_velocity": ["1", "0"],
            "radius_rate": "1",
            "t_max": None,
        }],
    }


def test_incircle_documents():
    inscribed = incircle(tri((5, 1), (4, -3), (0, 0)))
    doc = incircle_to_doc(inscribed)
    assert doc["variant"] == "incircle"
    assert doc["circle"] == {"center": ["40/13", "-11/13"], "radius": "19/13"}
    assert parse_incircle(doc) == inscribed

    flat = incircle(tri((0, 0), (6, 0), (3, 2)))
    doc = incircle_to_doc(flat)
    assert doc["variant"] == "no_incircle"
    assert doc["witness"] == {"center": ["3", "1"], "radius": "1"}
    assert parse_incircle(doc) == flat


def test_unknown_incircle_variant():
    with pytest.raises(DocumentError, match="variant"):
        parse_incircle({"variant": "maybe", "touches": [], "distinct_corner_count": 0})


def test_construction_round_trip():
    pc = paper_construction(tri((4, 2), (4, -2), (0, 0)))
    doc = construction_to_doc(pc)
    assert doc["rho"] == "4/3"
    assert parse_construction(doc) == pc


def test_circle_document():
    assert parse_circle({"center": ["1/2", Decimal("0.25")], "radius": 3}) == TaxicabCircle(
        Point(Fraction(1, 2), Fraction(1, 4)), 3)
