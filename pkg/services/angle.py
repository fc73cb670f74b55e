"""
Taxicab angles: t-radian measure and inscribed classification.
"""

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from services.circle import CornerId, TaxicabCircle, arc_length_ccw
from services.errors import DegenerateInputError
from services.exact import (
    Direction,
    Point,
    cross,
    cross_neg,
    cross_pos,
    unit_point,
)

UNIT_CIRCLE = TaxicabCircle(Point(0, 0), 1)
FULL_TURN = Fraction(8)


class InscribedClass(Enum):
    NOT_INSCRIBED = "not_inscribed"
    STRICTLY_POSITIVE = "strictly_positive"
    STRICTLY_NEGATIVE = "strictly_negative"
    COMPLETELY = "completely"

    @property
    def positively(self) -> bool:
        return self in (InscribedClass.STRICTLY_POSITIVE, InscribedClass.COMPLETELY)

    @property
    def negatively(self) -> bool:
        return self in (InscribedClass.STRICTLY_NEGATIVE, InscribedClass.COMPLETELY)

    @property
    def mirrored(self) -> "InscribedClass":
        """Class of the reflected angle: strict classes trade places."""
        return _MIRRORED.get(self, self)


_MIRRORED = {
    InscribedClass.STRICTLY_POSITIVE: InscribedClass.STRICTLY_NEGATIVE,
    InscribedClass.STRICTLY_NEGATIVE: InscribedClass.STRICTLY_POSITIVE,
}


def is_inscribed(cls: InscribedClass) -> bool:
    return cls is not InscribedClass.NOT_INSCRIBED


@dataclass(frozen=True)
class Angle:
    """Convex sector at `vertex` spanned by rays d1 and d2, boundary rays included."""
    vertex: Point
    d1: Direction
    d2: Direction

    def __post_init__(self):
        if cross(self.d1, self.d2) == 0:
            raise DegenerateInputError("angle rays are collinear")

    @classmethod
    def from_points(cls, vertex: Point, p1: Point, p2: Point) -> "Angle":
        return cls(vertex, p1 - vertex, p2 - vertex)


def _on_unit_circle(d: Direction) -> Point:
    u = unit_point(d)
    return Point(u.dx, u.dy)


def measure(a: Angle) -> Fraction:
    """t-radian measure, in the open interval (0, 4)."""
    arc = arc_length_ccw(UNIT_CIRCLE, _on_unit_circle(a.d1), _on_unit_circle(a.d2))
    return min(arc, FULL_TURN - arc)


def classify(a: Angle) -> InscribedClass:
    # A line lying along one of the rays still counts as outside the angle.
    positive = cross_pos(a.d1) * cross_pos(a.d2) >= 0
    negative = cross_neg(a.d1) * cross_neg(a.d2) >= 0
    if positive and negative:
        return InscribedClass.COMPLETELY
    if positive:
        return InscribedClass.STRICTLY_POSITIVE
    if negative:
        return InscribedClass.STRICTLY_NEGATIVE
    return InscribedClass.NOT_INSCRIBED


def corner_sector(d: Direction) -> frozenset:
    """
    Closed sectors (bounded by the slope +1 and -1 lines) containing d,
    named by the corner direction they surround. Diagonal directions belong
    to two sectors.
    """
    sectors = set()
    if d.dx >= abs(d.dy):
        sectors.add(CornerId.E)
    if -d.dx >= abs(d.dy):
        sectors.add(CornerId.W)
    if d.dy >= abs(d.dx):
        sectors.add(CornerId.N)
    if -d.dy >= abs(d.dx):
        sectors.add(CornerId.S)
    return frozenset(sectors)
