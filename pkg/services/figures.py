"""
Scenes of computed taxicab objects and their deterministic SVG rendering.

World coordinates are exact rationals with y pointing up. They are mapped
to the y-down canvas and converted to fixed-precision decimals only when
the SVG text is written, so equal scenes always give byte-identical files.
"""

from dataclasses import dataclass, field
from decimal import Decimal
from fractions import Fraction
from typing import Callable, Dict, List, Optional, Tuple

from services.angle import Angle, classify, measure
from services.circle import CornerId, TaxicabCircle, corners, perimeter_param, point_at_param
from services.circumcircle import CircleFamily, circumcircles
from services.config import get_settings
from services.documents import (
    angle_to_doc,
    circle_to_doc,
    family_to_doc,
    load_document,
    parse_angle,
    parse_circle,
    parse_family,
    parse_or_raise,
    parse_point,
    point_to_doc,
)
from services.errors import ConfigError, DocumentError
from services.exact import Direction, Point, format_rational, unit_point
from services.incircle import Incircle, incircle, paper_construction
from services.triangle import Triangle, angles
from services.verify import find_inscribed_angle_witness, inscribed_angle_demo

ITEM_KINDS = ("point", "segment", "path", "angle", "triangle", "circle", "family")

COLORS = {
    "point": "#0f172a",
    "segment": "#64748b",
    "path": "#0d9488",
    "angle": "#b45309",
    "triangle": "#0f172a",
    "circle": "#2563eb",
    "family": "#7c3aed",
    "text": "#334155",
}


@dataclass(frozen=True)
class SceneItem:
    """One drawable object. `points` holds the geometry for point, segment, path and triangle items."""
    kind: str
    label: str
    points: Tuple[Point, ...] = ()
    circle: Optional[TaxicabCircle] = None
    angle: Optional[Angle] = None
    family: Optional[CircleFamily] = None


@dataclass(frozen=True)
class SceneDescription:
    name: str
    title: str
    items: Tuple[SceneItem, ...] = field(default_factory=tuple)

    def __post_init__(self):
        seen = set()
        for item in self.items:
            if item.kind not in ITEM_KINDS:
                raise ConfigError(f"unknown scene item kind {item.kind!r}")
            if item.label in seen:
                raise ConfigError(f"duplicate scene label {item.label!r}")
            seen.add(item.label)


# ---------------------------------------------------------------------------
# Scene files
# ---------------------------------------------------------------------------

def item_to_doc(item: SceneItem) -> Dict:
    doc = {"kind": item.kind, "label": item.label}
    if item.kind == "point":
        doc["at"] = point_to_doc(item.points[0])
    elif item.kind == "segment":
        doc["start"], doc["end"] = (point_to_doc(p) for p in item.points)
    elif item.kind == "path":
        doc["points"] = [point_to_doc(p) for p in item.points]
    elif item.kind == "triangle":
        doc["vertices"] = [point_to_doc(p) for p in item.points]
    elif item.kind == "circle":
        doc.update(circle_to_doc(item.circle))
    elif item.kind == "angle":
        doc.update(angle_to_doc(item.angle))
    else:
        doc["family"] = family_to_doc(item.family)
    return doc


def parse_item(doc: Dict) -> SceneItem:
    kind = doc.get("kind")
    label = str(doc.get("label", ""))
    if kind == "point":
        return SceneItem(kind, label, (parse_point(doc["at"]),))
    if kind == "segment":
        return SceneItem(kind, label, (parse_point(doc["start"]), parse_point(doc["end"])))
    if kind == "path":
        points = tuple(parse_point(p) for p in doc["points"])
        if len(points) < 2:
            raise DocumentError(f"path {label!r} needs at least two points")
        return SceneItem(kind, label, points)
    if kind == "triangle":
        vertices = tuple(parse_point(v) for v in doc["vertices"])
        Triangle(*vertices)
        return SceneItem(kind, label, vertices)
    if kind == "circle":
        return SceneItem(kind, label, circle=parse_circle(doc))
    if kind == "angle":
        return SceneItem(kind, label, angle=parse_angle(doc))
    if kind == "family":
        return SceneItem(kind, label, family=parse_family(doc["family"]))
    raise DocumentError(f"unknown scene item kind {kind!r}")


def scene_to_doc(scene: SceneDescription) -> Dict:
    return {"name": scene.name, "title": scene.title, "items": [item_to_doc(i) for i in scene.items]}


def parse_scene(doc: Dict) -> SceneDescription:
    def parse(d):
        return SceneDescription(
            name=str(d.get("name", "scene")),
            title=str(d.get("title", "")),
            items=tuple(parse_item(i) for i in d["items"]),
        )
    return parse_or_raise(parse, doc)


def load_scene(path: str) -> SceneDescription:
    with open(path, 'r', encoding='utf-8') as f:
        return parse_scene(load_document(f.read()))


# ---------------------------------------------------------------------------
# Built-in scenes
# ---------------------------------------------------------------------------

def _shift(dx, dy=0) -> Callable[[Point], Point]:
    return lambda p: p.offset(Fraction(dx), Fraction(dy))


def _triangle_item(label: str, t: Triangle) -> SceneItem:
    return SceneItem("triangle", label, t.vertices)


def _angle_items(prefix: str, t: Triangle) -> List[SceneItem]:
    items = []
    for i, a in enumerate(angles(t)):
        items.append(SceneItem("angle", f"{prefix}{i} {classify(a).value} {format_rational(measure(a))}", angle=a))
    return items


def _scene_inscribed_angles() -> SceneDescription:
    samples = [
        Angle(Point(0, 0), Direction(1, 0), Direction(0, 1)),
        Angle(Point(4, 0), Direction(1, 0), Direction(0, -1)),
        Angle(Point(8, 0), Direction(5, 1), Direction(4, -3)),
        Angle(Point(14, 0), Direction(-3, -2), Direction(3, -2)),
    ]
    items = [SceneItem("angle", f"{classify(a).value} {format_rational(measure(a))}", angle=a) for a in samples]
    return SceneDescription("inscribed-angles", "Positively, negatively, completely and not inscribed angles",
                            tuple(items))


def _demo_items(suffix: str, circle: TaxicabCircle, start: Point, end: Point, vertex: Point) -> List[SceneItem]:
    alpha, theta = inscribed_angle_demo(circle, start, end, vertex)
    return [
        SceneItem("circle", f"circle{suffix}", circle=circle),
        SceneItem("point", f"A{suffix}", (start,)),
        SceneItem("point", f"B{suffix}", (end,)),
        SceneItem("angle", f"α{suffix} = {format_rational(alpha)}", angle=Angle.from_points(vertex, start, end)),
        SceneItem("angle", f"θ{suffix} = {format_rational(theta)}",
                  angle=Angle.from_points(circle.center, start, end)),
        SceneItem("segment", f"VA{suffix}", (vertex, start)),
        SceneItem("segment", f"VB{suffix}", (vertex, end)),
    ]


def _scene_inscribed_angle_failure() -> SceneDescription:
    left = TaxicabCircle(Point(0, 0), 2)
    items = _demo_items("", left, Point(2, 0), Point(0, 2), Point(-2, 0))

    witness = find_inscribed_angle_witness(Fraction(5, 2), Fraction(1))
    if witness is not None:
        move = _shift(6)
        right = TaxicabCircle(move(witness.circle.center), witness.circle.radius)
        items += _demo_items("'", right, move(witness.arc_start), move(witness.arc_end), move(witness.vertex))
    return SceneDescription("inscribed-angle-failure", "Inscribed angle is not half the central angle",
                            tuple(items))


def _scene_neighboring_angles() -> SceneDescription:
    first = Triangle(Point(5, 1), Point(4, -3), Point(0, 0))
    second = Triangle(Point(0, 0), Point(2, 2), Point(2, -2)).mapped(_shift(8))
    items = [_triangle_item("T1", first)] + _angle_items("T1.", first)
    items += [_triangle_item("T2", second)] + _angle_items("T2.", second)
    return SceneDescription("neighboring-angles", "Classes of neighboring angles in a triangle", tuple(items))


def _circumcircle_items(label: str, t: Triangle) -> List[SceneItem]:
    items = [_triangle_item(label, t)]
    for k, f in enumerate(circumcircles(t).components):
        if f.center_velocity is None:
            items.append(SceneItem("circle", f"{label} circumcircle {k}", circle=f.base))
        else:
            items.append(SceneItem("family", f"{label} {f.kind.value} family {k}", family=f))
    return items


def _scene_circumcircle() -> SceneDescription:
    t = Triangle(Point(5, 1), Point(4, -3), Point(0, 0))
    return SceneDescription("circumcircle", "Circumcircle of an inscribed triangle",
                            tuple(_circumcircle_items("T", t)))


def _scene_circumcircle_families() -> SceneDescription:
    cases = [
        Triangle(Point(0, 0), Point(2, 2), Point(3, -2)),
        Triangle(Point(0, 0), Point(2, 2), Point(2, -2)).mapped(_shift(10)),
        Triangle(Point(0, 0), Point(4, 4), Point(8, 0)).mapped(_shift(24)),
    ]
    items = []
    for k, t in enumerate(cases, 1):
        items += _circumcircle_items(f"T{k}", t)
    return SceneDescription("circumcircle-families", "Triangles with infinitely many circumcircles", tuple(items))


def _scene_incircle() -> SceneDescription:
    t = Triangle(Point(5, 1), Point(4, -3), Point(0, 0))
    items = [_triangle_item("T", t)]
    result = incircle(t)
    if isinstance(result, Incircle):
        items.append(SceneItem("circle", "incircle", circle=result.circle))
    pc = paper_construction(t)
    ia, ib = [j for j in range(3) if j != pc.gamma_vertex]
    around_a = TaxicabCircle(t.vertices[ia], pc.r_alpha)
    around_b = TaxicabCircle(t.vertices[ib], pc.r_beta)
    items += [
        SceneItem("point", "P", (pc.p,)),
        SceneItem("point", "Qα", (pc.q_alpha,)),
        SceneItem("point", "Qβ", (pc.q_beta,)),
        SceneItem("path", "arc α", tuple(short_arc(around_a, pc.p, pc.q_alpha))),
        SceneItem("path", "arc β", tuple(short_arc(around_b, pc.p, pc.q_beta))),
    ]
    return SceneDescription("incircle", "Incircle and the arc-length construction", tuple(items))


def _scene_not_inscribed() -> SceneDescription:
    t = Triangle(Point(0, 0), Point(6, 0), Point(3, 2))
    result = incircle(t)
    circle = result.circle if isinstance(result, Incircle) else result.witness
    items = [_triangle_item("T", t), SceneItem("circle", "largest contained circle", circle=circle)]
    return SceneDescription("not-inscribed", "A triangle without an incircle", tuple(items))


BUILTIN_SCENES: Dict[str, Callable[[], SceneDescription]] = {
    "inscribed-angles": _scene_inscribed_angles,
    "inscribed-angle-failure": _scene_inscribed_angle_failure,
    "neighboring-angles": _scene_neighboring_angles,
    "circumcircle": _scene_circumcircle,
    "circumcircle-families": _scene_circumcircle_families,
    "incircle": _scene_incircle,
    "not-inscribed": _scene_not_inscribed,
}


def builtin_scene(name: str) -> SceneDescription:
    if name not in BUILTIN_SCENES:
        raise ConfigError(f"unknown figure {name!r}; known: {', '.join(sorted(BUILTIN_SCENES))}")
    return BUILTIN_SCENES[name]()


# ---------------------------------------------------------------------------
# SVG
# ---------------------------------------------------------------------------

ANGLE_MARK = Fraction(1, 2)
RAY_LENGTH = Fraction(3, 2)


def escape_xml(text: str) -> str:
    return (
        text.replace("&", "&amp;")
        .replace("<", "&lt;")
        .replace(">", "&gt;")
        .replace('"', "&quot;")
    )


def _circle_outline(c: TaxicabCircle) -> List[Point]:
    pts = corners(c)
    return [pts[CornerId.E], pts[CornerId.N], pts[CornerId.W], pts[CornerId.S]]


def short_arc(c: TaxicabCircle, p1: Point, p2: Point) -> List[Point]:
    """Polyline along the circle between two boundary points, the short way round."""
    t1, t2 = perimeter_param(c, p1), perimeter_param(c, p2)
    if (t2 - t1) % c.perimeter > c.perimeter / 2:
        t1, t2 = t2, t1
    length = (t2 - t1) % c.perimeter
    path = [point_at_param(c, t1)]
    # corners sit at multiples of 2r; two laps cover any arc starting in [0, 8r)
    for k in range(8):
        corner_t = 2 * c.radius * k
        if t1 < corner_t < t1 + length:
            path.append(point_at_param(c, corner_t))
    path.append(point_at_param(c, t2))
    return path


def _angle_arc(a: Angle, radius: Fraction) -> List[Point]:
    """Polyline of the short taxicab arc between the rays, around the vertex."""
    u1, u2 = unit_point(a.d1).scaled(radius), unit_point(a.d2).scaled(radius)
    return short_arc(TaxicabCircle(a.vertex, radius), a.vertex + u1, a.vertex + u2)


def _item_geometry(item: SceneItem) -> List[List[Point]]:
    """Outlines (each a point list) making up an item, in world coordinates."""
    if item.kind in ("point", "segment", "path", "triangle"):
        return [list(item.points)]
    if item.kind == "circle":
        return [_circle_outline(item.circle)]
    if item.kind == "family":
        return [_circle_outline(item.family.circle_at(t)) for t in item.family.sample_parameters()]
    a = item.angle
    ray1 = a.vertex + unit_point(a.d1).scaled(RAY_LENGTH)
    ray2 = a.vertex + unit_point(a.d2).scaled(RAY_LENGTH)
    return [[a.vertex, ray1], [a.vertex, ray2], _angle_arc(a, ANGLE_MARK)]


class SvgCanvas:
    """Maps exact world coordinates onto a fixed-width canvas."""

    def __init__(self, scene: SceneDescription, width: int, decimal_places: int):
        pts = [p for item in scene.items for outline in _item_geometry(item) for p in outline]
        if not pts:
            pts = [Point(0, 0), Point(1, 1)]
        self.min_x = min(p.x for p in pts)
        self.max_y = max(p.y for p in pts)
        span_x = max(p.x for p in pts) - self.min_x
        span_y = self.max_y - min(p.y for p in pts)
        self.pad = max(max(span_x, span_y) / 10, Fraction(1))
        self.width = Fraction(width)
        self.scale = self.width / (span_x + 2 * self.pad)
        self.height = (span_y + 2 * self.pad) * self.scale
        self.quantum = Decimal(1).scaleb(-decimal_places)

    def num(self, v: Fraction) -> str:
        value = Decimal(v.numerator) / Decimal(v.denominator)
        return str(value.quantize(self.quantum))

    def x(self, p: Point) -> str:
        return self.num((p.x - self.min_x + self.pad) * self.scale)

    def y(self, p: Point) -> str:
        return self.num((self.max_y + self.pad - p.y) * self.scale)

    def coords(self, points: List[Point]) -> str:
        return " ".join(f"{self.x(p)},{self.y(p)}" for p in points)


def render_svg(scene: SceneDescription, width: Optional[int] = None,
               decimal_places: Optional[int] = None) -> str:
    settings = get_settings()
    width = width or settings.svg_width
    places = settings.decimal_places if decimal_places is None else decimal_places
    canvas = SvgCanvas(scene, width, places)

    parts = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f"<!-- taxicab scene {escape_xml(scene.name)}: world (x, y) with y up maps to canvas "
        f"(X, Y) = ((x - {format_rational(canvas.min_x - canvas.pad)})·k, "
        f"({format_rational(canvas.max_y + canvas.pad)} - y)·k), k = {format_rational(canvas.scale)}; "
        f"coordinates rounded to {places} decimal places -->",
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{canvas.num(canvas.width)}" '
        f'height="{canvas.num(canvas.height)}" viewBox="0 0 {canvas.num(canvas.width)} {canvas.num(canvas.height)}">',
        f'<rect x="0" y="0" width="{canvas.num(canvas.width)}" height="{canvas.num(canvas.height)}" fill="#ffffff"/>',
        f'<text x="8" y="18" fill="{COLORS["text"]}" font-size="14" font-family="monospace">'
        f'{escape_xml(scene.title)}</text>',
    ]

    for item in scene.items:
        color = COLORS[item.kind]
        outlines = _item_geometry(item)
        parts.append(f'<g class="{item.kind}">')
        if item.kind == "point":
            p = item.points[0]
            parts.append(f'<circle cx="{canvas.x(p)}" cy="{canvas.y(p)}" r="3" fill="{color}"/>')
        elif item.kind in ("triangle", "circle"):
            parts.append(f'<polygon points="{canvas.coords(outlines[0])}" '
                         f'style="fill:none;stroke:{color};stroke-width:1.5"/>')
        elif item.kind == "family":
            for outline in outlines:
                parts.append(f'<polygon points="{canvas.coords(outline)}" '
                             f'style="fill:none;stroke:{color};stroke-width:1;stroke-dasharray:4 3"/>')
        else:
            for outline in outlines:
                parts.append(f'<polyline points="{canvas.coords(outline)}" '
                             f'style="fill:none;stroke:{color};stroke-width:1"/>')
        anchor = outlines[0][0]
        parts.append(f'<text x="{canvas.x(anchor)}" y="{canvas.y(anchor)}" dx="4" dy="-4" '
                     f'fill="{COLORS["text"]}" font-size="11" font-family="monospace">'
                     f'{escape_xml(item.label)}</text>')
        parts.append('</g>')

    parts.append('</svg>')
    return "\n".join(parts) + "\n"
