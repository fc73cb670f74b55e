"""
Triangles, their angles, and the structural predicates on inscribed angles.
"""

import itertools
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Callable, List, Tuple

from services.angle import Angle, InscribedClass, classify, is_inscribed, measure
from services.errors import DegenerateInputError
from services.exact import Direction, Point, cross_neg, cross_pos, orientation


@dataclass(frozen=True)
class Triangle:
    a: Point
    b: Point
    c: Point

    def __post_init__(self):
        if orientation(self.a, self.b, self.c) == 0:
            raise DegenerateInputError("degenerate triangle")

    @property
    def vertices(self) -> Tuple[Point, Point, Point]:
        return (self.a, self.b, self.c)

    def mapped(self, point_map: Callable[[Point], Point]) -> "Triangle":
        return Triangle(*(point_map(v) for v in self.vertices))

    def sides(self) -> List[Tuple[int, int]]:
        """Side k joins the two vertices other than k (it is opposite vertex k)."""
        return [(1, 2), (0, 2), (0, 1)]


class SlopeKind(Enum):
    SHALLOW = "shallow"      # |slope| < 1
    DIAGONAL_POS = "diagonal+"
    DIAGONAL_NEG = "diagonal-"
    STEEP = "steep"          # |slope| > 1, vertical included


def side_slope_kind(d: Direction) -> SlopeKind:
    if cross_pos(d) == 0:
        return SlopeKind.DIAGONAL_POS
    if cross_neg(d) == 0:
        return SlopeKind.DIAGONAL_NEG
    if abs(d.dy) < abs(d.dx):
        return SlopeKind.SHALLOW
    return SlopeKind.STEEP


@dataclass(frozen=True)
class TriangleClassification:
    classes: Tuple[InscribedClass, InscribedClass, InscribedClass]
    is_inscribed: bool
    completely_count: int
    angle_measures: Tuple[Fraction, Fraction, Fraction]


def angles(t: Triangle) -> Tuple[Angle, Angle, Angle]:
    """Angle at each vertex, rays toward the other two vertices in input order."""
    v = t.vertices
    result = []
    for i in range(3):
        others = [v[j] for j in range(3) if j != i]
        result.append(Angle.from_points(v[i], others[0], others[1]))
    return tuple(result)


def classify_triangle(t: Triangle) -> TriangleClassification:
    triangle_angles = angles(t)
    classes = tuple(classify(a) for a in triangle_angles)
    measures = tuple(measure(a) for a in triangle_angles)
    return TriangleClassification(
        classes=classes,
        is_inscribed=all(is_inscribed(c) for c in classes),
        completely_count=sum(1 for c in classes if c is InscribedClass.COMPLETELY),
        angle_measures=measures,
    )


def side_directions(t: Triangle) -> List[Direction]:
    v = t.vertices
    return [v[j] - v[i] for i, j in t.sides()]


def has_diagonal_side_pair(t: Triangle) -> bool:
    kinds = [side_slope_kind(d) for d in side_directions(t)]
    return SlopeKind.DIAGONAL_POS in kinds and SlopeKind.DIAGONAL_NEG in kinds


def neighbors_negatively_inscribed(classes) -> bool:
    """A strictly positive vertex forces both others to be negatively inscribed."""
    for i, c in enumerate(classes):
        if c is InscribedClass.STRICTLY_POSITIVE:
            if not all(o.negatively for j, o in enumerate(classes) if j != i):
                return False
    return True


def neighbors_positively_inscribed(classes) -> bool:
    for i, c in enumerate(classes):
        if c is InscribedClass.STRICTLY_NEGATIVE:
            if not all(o.positively for j, o in enumerate(classes) if j != i):
                return False
    return True


_LABEL_CHOICES = {
    InscribedClass.STRICTLY_POSITIVE: ("P",),
    InscribedClass.STRICTLY_NEGATIVE: ("N",),
    InscribedClass.COMPLETELY: ("P", "N"),
    InscribedClass.NOT_INSCRIBED: (),
}


def has_alternating_labels(classes) -> bool:
    """
    True when each vertex can be labelled P or N consistently with its class
    so that the three labels are not all equal.
    """
    options = [_LABEL_CHOICES[c] for c in classes]
    return any(len(set(labels)) > 1 for labels in itertools.product(*options))
