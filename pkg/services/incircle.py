"""
Incircle solver and the arc-length construction of the incircle.

The largest taxicab disc inside a triangle is a three-variable linear
program: a disc of center I and radius ρ lies in the half-plane
a·x + b·y <= c exactly when a·I.x + b·I.y + ρ·max(|a|, |b|) <= c.
The program is solved by enumerating the vertices of its feasible region.
"""

import itertools
import logging
import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import List, NamedTuple, Optional, Tuple, Union

from services.angle import InscribedClass, corner_sector
from services.circle import CornerId, EdgeId, TaxicabCircle, corners, is_contained_in
from services.errors import PreconditionError
from services.exact import (
    Point,
    point_on_segment,
    solve_linear,
    swap_xy,
    taxicab_distance,
    unit_point,
)
from services.triangle import (
    SlopeKind,
    Triangle,
    classify_triangle,
    side_slope_kind,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SideConstraint:
    """Half-plane a·x + b·y <= c containing the triangle."""
    a: Fraction
    b: Fraction
    c: Fraction

    @property
    def support(self) -> Fraction:
        return max(abs(self.a), abs(self.b))

    def slack(self, p: Point) -> Fraction:
        return self.c - self.a * p.x - self.b * p.y

    def disc_slack(self, circle: TaxicabCircle) -> Fraction:
        return self.slack(circle.center) - circle.radius * self.support


class ContactKind(Enum):
    CORNER = "corner"
    EDGE = "edge"
    NONE = "none"


@dataclass(frozen=True)
class TouchDescriptor:
    side: int
    contact: ContactKind
    corners: Tuple[CornerId, ...] = ()


@dataclass(frozen=True)
class Incircle:
    circle: TaxicabCircle
    touches: Tuple[TouchDescriptor, ...]
    distinct_corner_count: int
    unique: bool
    candidates: Tuple[TaxicabCircle, ...] = ()


@dataclass(frozen=True)
class NoIncircle:
    witness: TaxicabCircle
    touches: Tuple[TouchDescriptor, ...]
    distinct_corner_count: int


IncircleResult = Union[Incircle, NoIncircle]


class MaximalCircle(NamedTuple):
    circle: TaxicabCircle
    touches: Tuple[TouchDescriptor, ...]
    unique: bool
    candidates: Tuple[TaxicabCircle, ...]


@dataclass(frozen=True)
class PaperConstruction:
    gamma_vertex: int
    frame: str
    alpha: Fraction
    beta: Fraction
    side_ab: Fraction
    r_alpha: Fraction
    r_beta: Fraction
    p: Point
    q_alpha: Point
    q_beta: Point
    arc_length_l: Fraction
    rho: Fraction
    applicable: bool
    containment_ok: bool
    circle: Optional[TaxicabCircle]


def side_constraints(t: Triangle) -> Tuple[SideConstraint, SideConstraint, SideConstraint]:
    """Constraint k belongs to the side opposite vertex k."""
    v = t.vertices
    result = []
    for k, (i, j) in enumerate(t.sides()):
        p, q, opposite = v[i], v[j], v[k]
        a = q.y - p.y
        b = p.x - q.x
        c = a * p.x + b * p.y
        if a * opposite.x + b * opposite.y >= c:
            a, b, c = -a, -b, -c
        scale = math.lcm(a.denominator, b.denominator, c.denominator)
        ints = [int(x * scale) for x in (a, b, c)]
        g = math.gcd(*ints)
        result.append(SideConstraint(*(Fraction(x, g) for x in ints)))
    return tuple(result)


def _lp_rows(constraints):
    rows = [(s.a, s.b, s.support) for s in constraints]
    rhs = [s.c for s in constraints]
    rows.append((Fraction(0), Fraction(0), Fraction(-1)))
    rhs.append(Fraction(0))
    return rows, rhs


def _feasible(rows, rhs, x) -> bool:
    return all(sum(g * xi for g, xi in zip(row, x)) <= h for row, h in zip(rows, rhs))


def _has_flat_optimal_line(rows, rhs, x0, v, best) -> bool:
    """Whether x0 + λv keeps ρ = best over a feasible interval of positive length."""
    if v[2] != 0 or x0[2] != best:
        return False
    lo, hi = None, None
    for row, h in zip(rows, rhs):
        gx = sum(g * xi for g, xi in zip(row, x0))
        gv = sum(g * vi for g, vi in zip(row, v))
        if gv == 0:
            if gx > h:
                return False
            continue
        bound = (h - gx) / gv
        if gv > 0:
            hi = bound if hi is None else min(hi, bound)
        else:
            lo = bound if lo is None else max(lo, bound)
    return lo is None or hi is None or lo < hi


def contact_for(constraint: SideConstraint, side: int) -> TouchDescriptor:
    a, b = constraint.a, constraint.b
    if abs(a) > abs(b):
        return TouchDescriptor(side, ContactKind.CORNER, (CornerId.E if a > 0 else CornerId.W,))
    if abs(b) > abs(a):
        return TouchDescriptor(side, ContactKind.CORNER, (CornerId.N if b > 0 else CornerId.S,))
    if a > 0:
        edge = EdgeId.NE if b > 0 else EdgeId.SE
    else:
        edge = EdgeId.NW if b > 0 else EdgeId.SW
    return TouchDescriptor(side, ContactKind.EDGE, edge.corners)


def touches_for(t: Triangle, circle: TaxicabCircle) -> Tuple[TouchDescriptor, ...]:
    result = []
    for k, constraint in enumerate(side_constraints(t)):
        if constraint.disc_slack(circle) == 0:
            result.append(contact_for(constraint, k))
        else:
            result.append(TouchDescriptor(k, ContactKind.NONE))
    return tuple(result)


def max_inscribed_circle(t: Triangle) -> MaximalCircle:
    rows, rhs = _lp_rows(side_constraints(t))
    candidates = []
    flat_line = False
    for subset in itertools.combinations(range(4), 3):
        solved = solve_linear([rows[i] for i in subset], [rhs[i] for i in subset])
        if solved is None:
            continue
        x, null = solved
        if null:
            candidates.append(("line", subset, x, null[0]))
            continue
        if _feasible(rows, rhs, x):
            candidates.append(("point", subset, x, None))

    points = [x for kind, _, x, _ in candidates if kind == "point"]
    best = max(x[2] for x in points)
    if best <= 0:
        raise PreconditionError("triangle admits no disc of positive radius")

    optimal: List[Tuple[Fraction, ...]] = []
    for x in points:
        if x[2] == best and tuple(x) not in optimal:
            optimal.append(tuple(x))
    for kind, subset, x, v in candidates:
        if kind == "line" and _has_flat_optimal_line(rows, rhs, x, v, best):
            logger.debug("active system %s is singular with a flat optimal line", subset)
            flat_line = True

    optimal_circles = tuple(TaxicabCircle(Point(x[0], x[1]), x[2]) for x in optimal)
    circle = optimal_circles[0]
    return MaximalCircle(
        circle=circle,
        touches=touches_for(t, circle),
        unique=len(optimal_circles) == 1 and not flat_line,
        candidates=optimal_circles,
    )


def distinct_corner_count(t: Triangle, circle: TaxicabCircle) -> int:
    """Corners lying on the union of the three sides, counted as points."""
    v = t.vertices
    on_sides = set()
    for corner in corners(circle).values():
        if any(point_on_segment(corner, v[i], v[j]) for i, j in t.sides()):
            on_sides.add(corner)
    return len(on_sides)


def is_contained(t: Triangle, circle: TaxicabCircle) -> bool:
    return is_contained_in(circle, side_constraints(t))


def incircle(t: Triangle) -> IncircleResult:
    best = max_inscribed_circle(t)
    count = distinct_corner_count(t, best.circle)
    if count >= 3:
        return Incircle(best.circle, best.touches, count, best.unique,
                        best.candidates if not best.unique else ())
    return NoIncircle(best.circle, best.touches, count)


def _gamma_vertex(t: Triangle, classes) -> int:
    if all(c is InscribedClass.COMPLETELY for c in classes):
        v = t.vertices
        for i in range(3):
            kinds = {side_slope_kind(v[j] - v[i]) for j in range(3) if j != i}
            if kinds == {SlopeKind.DIAGONAL_POS, SlopeKind.DIAGONAL_NEG}:
                return i
    return next(i for i, c in enumerate(classes) if c is InscribedClass.COMPLETELY)


def _same_quadrant(d1, d2) -> bool:
    return d1.dx * d2.dx >= 0 and d1.dy * d2.dy >= 0


def paper_construction(t: Triangle) -> PaperConstruction:
    """
    Arc-length construction: with γ a completely inscribed vertex whose sides
    are shallow, place P on AB at distance r_β = α·AB/(α+β) from B; the arcs
    of radii r_α, r_β about A and B across the triangle have equal length
    l, and when each arc is a single circle edge they are two edges of the
    incircle meeting at corner P.
    """
    classification = classify_triangle(t)
    if not classification.is_inscribed:
        raise PreconditionError("the arc-length construction needs an inscribed triangle")

    gamma = _gamma_vertex(t, classification.classes)
    v = t.vertices
    rays = [v[j] - v[gamma] for j in range(3) if j != gamma]
    shallow = any(all(s in corner_sector(d) for d in rays) for s in (CornerId.E, CornerId.W))
    frame = "identity" if shallow else "swap_xy"
    to_frame = (lambda p: p) if shallow else swap_xy
    w = [to_frame(p) for p in v]

    ia, ib = [j for j in range(3) if j != gamma]
    A, B, C = w[ia], w[ib], w[gamma]
    alpha = classification.angle_measures[ia]
    beta = classification.angle_measures[ib]
    side_ab = taxicab_distance(A, B)
    r_beta = alpha * side_ab / (alpha + beta)
    r_alpha = side_ab - r_beta
    p = B + (A - B).scaled(r_beta / side_ab)
    q_alpha = A + unit_point(C - A).scaled(r_alpha)
    q_beta = B + unit_point(C - B).scaled(r_beta)
    arc_length_l = r_alpha * alpha
    rho = arc_length_l / 2

    applicable = (_same_quadrant(B - A, C - A) and _same_quadrant(A - B, C - B))

    # back to input coordinates (both frames are involutions)
    p, q_alpha, q_beta = to_frame(p), to_frame(q_alpha), to_frame(q_beta)

    circle = None
    containment_ok = False
    if applicable:
        center = Point((q_alpha.x + q_beta.x) / 2, (q_alpha.y + q_beta.y) / 2)
        if rho > 0:
            circle = TaxicabCircle(center, rho)
            containment_ok = (
                all(taxicab_distance(x, center) == rho for x in (p, q_alpha, q_beta))
                and is_contained(t, circle)
                and distinct_corner_count(t, circle) >= 3
            )

    return PaperConstruction(
        gamma_vertex=gamma,
        frame=frame,
        alpha=alpha,
        beta=beta,
        side_ab=side_ab,
        r_alpha=r_alpha,
        r_beta=r_beta,
        p=p,
        q_alpha=q_alpha,
        q_beta=q_beta,
        arc_length_l=arc_length_l,
        rho=rho,
        applicable=applicable,
        containment_ok=containment_ok,
        circle=circle,
    )
