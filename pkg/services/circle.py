"""
The taxicab circle: a square rotated 45 degrees with corners E, N, W, S.

Boundary points are charted by a counterclockwise arc-length parameter
starting at corner E; the full perimeter is 8r.
"""

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Dict, List, Tuple

from services.errors import DegenerateInputError, OffBoundaryError
from services.exact import Point, taxicab_distance


class CornerId(Enum):
    E = "E"
    N = "N"
    W = "W"
    S = "S"


class EdgeId(Enum):
    """Circle edges. NE/SW have slope -1, NW/SE have slope +1."""
    NE = "NE"
    NW = "NW"
    SW = "SW"
    SE = "SE"

    @property
    def corners(self) -> Tuple[CornerId, CornerId]:
        return _EDGE_CORNERS[self]


_EDGE_CORNERS = {
    EdgeId.NE: (CornerId.N, CornerId.E),
    EdgeId.NW: (CornerId.N, CornerId.W),
    EdgeId.SW: (CornerId.S, CornerId.W),
    EdgeId.SE: (CornerId.S, CornerId.E),
}


class Location(Enum):
    INSIDE = "inside"
    BOUNDARY = "boundary"
    OUTSIDE = "outside"


@dataclass(frozen=True)
class TaxicabCircle:
    center: Point
    radius: Fraction

    def __post_init__(self):
        object.__setattr__(self, "radius", Fraction(self.radius))
        if self.radius <= 0:
            raise DegenerateInputError(f"circle radius must be positive, got {self.radius}")

    @property
    def perimeter(self) -> Fraction:
        return 8 * self.radius

    def __repr__(self) -> str:
        return f"TaxicabCircle(({self.center.x}, {self.center.y}), {self.radius})"


def corners(c: TaxicabCircle) -> Dict[CornerId, Point]:
    r = c.radius
    return {
        CornerId.E: c.center.offset(r, 0),
        CornerId.N: c.center.offset(0, r),
        CornerId.W: c.center.offset(-r, 0),
        CornerId.S: c.center.offset(0, -r),
    }


def locate(c: TaxicabCircle, p: Point) -> Location:
    d = taxicab_distance(p, c.center)
    if d < c.radius:
        return Location.INSIDE
    if d == c.radius:
        return Location.BOUNDARY
    return Location.OUTSIDE


def _require_boundary(c: TaxicabCircle, p: Point) -> None:
    if locate(c, p) is not Location.BOUNDARY:
        raise OffBoundaryError(f"{p} is not on the boundary of {c}")


def perimeter_param(c: TaxicabCircle, p: Point) -> Fraction:
    """Counterclockwise arc length from corner E to p, in [0, 8r)."""
    _require_boundary(c, p)
    r = c.radius
    dx = p.x - c.center.x
    dy = p.y - c.center.y
    if dx >= 0 and dy >= 0:
        return 2 * dy
    if dx <= 0 and dy >= 0:
        return 2 * r - 2 * dx
    if dx <= 0 and dy <= 0:
        return 4 * r - 2 * dy
    return (6 * r + 2 * dx) % (8 * r)


def point_at_param(c: TaxicabCircle, t: Fraction) -> Point:
    r = c.radius
    t = Fraction(t) % (8 * r)
    half = t / 2
    if t <= 2 * r:
        dx, dy = r - half, half
    elif t <= 4 * r:
        dx, dy = r - half, 2 * r - half
    elif t <= 6 * r:
        dx, dy = half - 3 * r, 2 * r - half
    else:
        dx, dy = half - 3 * r, half - 4 * r
    return c.center.offset(dx, dy)


def arc_length_ccw(c: TaxicabCircle, p1: Point, p2: Point) -> Fraction:
    return (perimeter_param(c, p2) - perimeter_param(c, p1)) % c.perimeter


def is_contained_in(c: TaxicabCircle, constraints) -> bool:
    """Whether the disc lies in every half-plane a·x + b·y <= c of `constraints`."""
    return all(
        k.c - k.a * c.center.x - k.b * c.center.y >= c.radius * max(abs(k.a), abs(k.b))
        for k in constraints
    )


def edges_at(c: TaxicabCircle, p: Point) -> List[EdgeId]:
    """Edges containing a boundary point; corners lie on two edges."""
    _require_boundary(c, p)
    dx = p.x - c.center.x
    dy = p.y - c.center.y
    found = []
    if dx >= 0 and dy >= 0:
        found.append(EdgeId.NE)
    if dx <= 0 and dy >= 0:
        found.append(EdgeId.NW)
    if dx <= 0 and dy <= 0:
        found.append(EdgeId.SW)
    if dx >= 0 and dy <= 0:
        found.append(EdgeId.SE)
    return found
