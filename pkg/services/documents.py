"""
JSON documents for every value the commands read or emit.

Rationals are written as "p/q" strings. Parsers accept integers, decimal
literals (read as Decimal, never float), decimal strings and "p/q" strings.
"""

import json
from decimal import Decimal
from fractions import Fraction
from typing import Any, Dict, List

from services.angle import Angle, InscribedClass
from services.circle import CornerId, TaxicabCircle
from services.circumcircle import CircleFamily, CircumcircleSolutionSet, FamilyKind, Multiplicity
from services.errors import DocumentError, TaxicabError
from services.exact import Direction, Point, format_rational, parse_rational
from services.incircle import (
    ContactKind,
    Incircle,
    IncircleResult,
    NoIncircle,
    PaperConstruction,
    TouchDescriptor,
)
from services.triangle import Triangle, TriangleClassification


def load_document(text: str) -> Any:
    try:
        return json.loads(text, parse_float=Decimal)
    except json.JSONDecodeError as e:
        raise DocumentError(f"invalid JSON: {e}")


def dump_document(doc: Any) -> str:
    return json.dumps(doc, indent=2, sort_keys=True, ensure_ascii=False) + "\n"


def _field(doc: Dict, name: str) -> Any:
    if not isinstance(doc, dict):
        raise DocumentError(f"expected an object, got {type(doc).__name__}")
    if name not in doc:
        raise DocumentError(f"missing field {name!r}")
    return doc[name]


def _pair(value) -> List[Fraction]:
    if not isinstance(value, (list, tuple)) or len(value) != 2:
        raise DocumentError(f"expected a coordinate pair, got {value!r}")
    return [parse_rational(v) for v in value]


def _enum(cls, value):
    try:
        return cls(value)
    except ValueError:
        raise DocumentError(f"unknown {cls.__name__} {value!r}")


def _optional(value, parse):
    return None if value is None else parse(value)


# Points, directions, circles

def point_to_doc(p: Point) -> List[str]:
    return [format_rational(p.x), format_rational(p.y)]


def parse_point(value) -> Point:
    return Point(*_pair(value))


def direction_to_doc(d: Direction) -> List[str]:
    return [format_rational(d.dx), format_rational(d.dy)]


def parse_direction(value) -> Direction:
    return Direction(*_pair(value))


def circle_to_doc(c: TaxicabCircle) -> Dict:
    return {"center": point_to_doc(c.center), "radius": format_rational(c.radius)}


def parse_circle(doc) -> TaxicabCircle:
    return TaxicabCircle(parse_point(_field(doc, "center")), parse_rational(_field(doc, "radius")))


# Angles and triangles

def angle_to_doc(a: Angle) -> Dict:
    return {"vertex": point_to_doc(a.vertex), "ray1": direction_to_doc(a.d1), "ray2": direction_to_doc(a.d2)}


def parse_angle(doc) -> Angle:
    return Angle(parse_point(_field(doc, "vertex")),
                 parse_direction(_field(doc, "ray1")),
                 parse_direction(_field(doc, "ray2")))


def triangle_to_doc(t: Triangle) -> Dict:
    return {"vertices": [point_to_doc(v) for v in t.vertices]}


def parse_triangle(doc) -> Triangle:
    vertices = _field(doc, "vertices")
    if not isinstance(vertices, list) or len(vertices) != 3:
        raise DocumentError("a triangle needs exactly three vertices")
    return Triangle(*(parse_point(v) for v in vertices))


def classification_to_doc(c: TriangleClassification) -> Dict:
    return {
        "classes": [cls.value for cls in c.classes],
        "is_inscribed": c.is_inscribed,
        "completely_count": c.completely_count,
        "angle_measures": [format_rational(m) for m in c.angle_measures],
    }


def parse_classification(doc) -> TriangleClassification:
    return TriangleClassification(
        classes=tuple(_enum(InscribedClass, v) for v in _field(doc, "classes")),
        is_inscribed=bool(_field(doc, "is_inscribed")),
        completely_count=int(_field(doc, "completely_count")),
        angle_measures=tuple(parse_rational(v) for v in _field(doc, "angle_measures")),
    )


# Circumcircles

def family_to_doc(f: CircleFamily) -> Dict:
    return {
        "kind": f.kind.value,
        "base": circle_to_doc(f.base),
        "center_velocity": None if f.center_velocity is None else direction_to_doc(f.center_velocity),
        "radius_rate": format_rational(f.radius_rate),
        "t_max": None if f.t_max is None else format_rational(f.t_max),
    }


def parse_family(doc) -> CircleFamily:
    return CircleFamily(
        kind=_enum(FamilyKind, _field(doc, "kind")),
        base=parse_circle(_field(doc, "base")),
        center_velocity=_optional(_field(doc, "center_velocity"), parse_direction),
        radius_rate=parse_rational(_field(doc, "radius_rate")),
        t_max=_optional(_field(doc, "t_max"), parse_rational),
    )


def solution_to_doc(s: CircumcircleSolutionSet) -> Dict:
    return {"multiplicity": s.multiplicity.value, "components": [family_to_doc(f) for f in s.components]}


def parse_solution(doc) -> CircumcircleSolutionSet:
    return CircumcircleSolutionSet(
        components=tuple(parse_family(f) for f in _field(doc, "components")),
        multiplicity=_enum(Multiplicity, _field(doc, "multiplicity")),
    )


# Incircles

def touch_to_doc(t: TouchDescriptor) -> Dict:
    return {"side": t.side, "contact": t.contact.value, "corners": [c.value for c in t.corners]}


def parse_touch(doc) -> TouchDescriptor:
    return TouchDescriptor(
        side=int(_field(doc, "side")),
        contact=_enum(ContactKind, _field(doc, "contact")),
        corners=tuple(_enum(CornerId, c) for c in _field(doc, "corners")),
    )


def incircle_to_doc(result: IncircleResult) -> Dict:
    if isinstance(result, Incircle):
        return {
            "variant": "incircle",
            "circle": circle_to_doc(result.circle),
            "touches": [touch_to_doc(t) for t in result.touches],
            "distinct_corner_count": result.distinct_corner_count,
            "unique": result.unique,
            "candidates": [circle_to_doc(c) for c in result.candidates],
        }
    return {
        "variant": "no_incircle",
        "witness": circle_to_doc(result.witness),
        "touches": [touch_to_doc(t) for t in result.touches],
        "distinct_corner_count": result.distinct_corner_count,
    }


def parse_incircle(doc) -> IncircleResult:
    variant = _field(doc, "variant")
    touches = tuple(parse_touch(t) for t in _field(doc, "touches"))
    count = int(_field(doc, "distinct_corner_count"))
    if variant == "incircle":
        return Incircle(
            circle=parse_circle(_field(doc, "circle")),
            touches=touches,
            distinct_corner_count=count,
            unique=bool(_field(doc, "unique")),
            candidates=tuple(parse_circle(c) for c in doc.get("candidates", [])),
        )
    if variant == "no_incircle":
        return NoIncircle(parse_circle(_field(doc, "witness")), touches, count)
    raise DocumentError(f"unknown incircle variant {variant!r}")


_CONSTRUCTION_RATIONALS = ("alpha", "beta", "side_ab", "r_alpha", "r_beta", "arc_length_l", "rho")
_CONSTRUCTION_POINTS = ("p", "q_alpha", "q_beta")


def construction_to_doc(pc: PaperConstruction) -> Dict:
    doc = {
        "gamma_vertex": pc.gamma_vertex,
        "frame": pc.frame,
        "applicable": pc.applicable,
        "containment_ok": pc.containment_ok,
        "circle": None if pc.circle is None else circle_to_doc(pc.circle),
    }
    doc.update({name: format_rational(getattr(pc, name)) for name in _CONSTRUCTION_RATIONALS})
    doc.update({name: point_to_doc(getattr(pc, name)) for name in _CONSTRUCTION_POINTS})
    return doc


def parse_construction(doc) -> PaperConstruction:
    fields = {name: parse_rational(_field(doc, name)) for name in _CONSTRUCTION_RATIONALS}
    fields.update({name: parse_point(_field(doc, name)) for name in _CONSTRUCTION_POINTS})
    return PaperConstruction(
        gamma_vertex=int(_field(doc, "gamma_vertex")),
        frame=str(_field(doc, "frame")),
        applicable=bool(_field(doc, "applicable")),
        containment_ok=bool(_field(doc, "containment_ok")),
        circle=_optional(_field(doc, "circle"), parse_circle),
        **fields,
    )


def parse_or_raise(parse, doc):
    """Run a parser, reporting any domain error in the input as a DocumentError."""
    try:
        return parse(doc)
    except TaxicabError:
        raise
    except KeyError as e:
        raise DocumentError(f"missing field {e}")
    except (TypeError, AttributeError, ValueError) as e:
        raise DocumentError(f"malformed document: {e}")
