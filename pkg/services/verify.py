"""
Brute-force oracles and the property suite.

The oracles share no code path with the solvers beyond the exact number
types: arc lengths are walked corner by corner, circumcircles are found by
scanning a quarter-integer grid of centers, and the maximal inscribed
radius is bounded from below by scanning a grid of candidate centers.
"""

import itertools
import logging
import math
import os
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field, asdict
from fractions import Fraction
from functools import cached_property
from typing import Callable, Dict, List, Optional, Sequence, Tuple

import numpy as np
import pandas as pd

from services.angle import Angle, InscribedClass, measure
from services.circle import (
    CornerId,
    TaxicabCircle,
    arc_length_ccw,
    corners,
    edges_at,
    perimeter_param,
    point_at_param,
)
from services.circumcircle import (
    CircumcircleSolutionSet,
    FamilyKind,
    Multiplicity,
    circumcircles,
    contains_circle,
    family_circles,
    solve_assignment,
    transform_solution,
    verify_circumcircle,
)
from services.errors import ConfigError, DegenerateInputError, PreconditionError
from services.exact import (
    Direction,
    Point,
    format_rational,
    point_on_segment,
    reflect_x,
    reflect_y,
    swap_xy,
    taxicab_distance,
    translate,
    unit_point,
)
from services.incircle import (
    ContactKind,
    Incircle,
    NoIncircle,
    distinct_corner_count,
    incircle,
    is_contained,
    max_inscribed_circle,
    paper_construction,
    side_constraints,
)
from services.triangle import (
    SlopeKind,
    Triangle,
    angles,
    classify_triangle,
    has_alternating_labels,
    has_diagonal_side_pair,
    neighbors_negatively_inscribed,
    neighbors_positively_inscribed,
    side_directions,
    side_slope_kind,
)

logger = logging.getLogger(__name__)

NOT_APPLICABLE = object()

_CCW_CORNERS = [CornerId.E, CornerId.N, CornerId.W, CornerId.S]


# ---------------------------------------------------------------------------
# Oracles
# ---------------------------------------------------------------------------

def walk_arc_length(c: TaxicabCircle, p1: Point, p2: Point) -> Fraction:
    """Counterclockwise arc length found by walking the boundary polyline."""
    if p1 == p2:
        return Fraction(0)
    pts = corners(c)
    ring = [pts[k] for k in _CCW_CORNERS]

    def edge_of(p: Point) -> int:
        for e in range(4):
            start, end = ring[e], ring[(e + 1) % 4]
            if p != end and point_on_segment(p, start, end):
                return e
        raise DegenerateInputError(f"{p} is not on the boundary of {c}")

    e1, e2 = edge_of(p1), edge_of(p2)
    if e1 == e2 and taxicab_distance(ring[e1], p2) >= taxicab_distance(ring[e1], p1):
        return taxicab_distance(p1, p2)
    total = taxicab_distance(p1, ring[(e1 + 1) % 4])
    e = (e1 + 1) % 4
    while e != e2:
        total += taxicab_distance(ring[e], ring[(e + 1) % 4])
        e = (e + 1) % 4
    return total + taxicab_distance(ring[e2], p2)


def oracle_measure(a: Angle) -> Fraction:
    unit = TaxicabCircle(Point(0, 0), 1)
    u1, u2 = unit_point(a.d1), unit_point(a.d2)
    arc = walk_arc_length(unit, Point(u1.dx, u1.dy), Point(u2.dx, u2.dy))
    return min(arc, 8 - arc)


def _is_integer_triangle(t: Triangle) -> bool:
    return all(v.x.denominator == 1 and v.y.denominator == 1 for v in t.vertices)


def _array(values, magnitude: int) -> np.ndarray:
    """Integer array; Python ints once magnitudes could leave 64-bit range."""
    dtype = np.int64 if magnitude < 2 ** 60 else object
    return np.array(values, dtype=dtype)


def oracle_grid_bounds(t: Triangle) -> Tuple[Fraction, Fraction, Fraction, Fraction]:
    """Bounding box of the triangle inflated by twice its taxicab diameter."""
    v = t.vertices
    diameter = max(taxicab_distance(p, q) for p, q in itertools.combinations(v, 2))
    pad = 2 * diameter
    return (min(p.x for p in v) - pad, max(p.x for p in v) + pad,
            min(p.y for p in v) - pad, max(p.y for p in v) + pad)


def oracle_circumcircle(t: Triangle) -> List[TaxicabCircle]:
    """Every circumcircle whose center lies on the quarter-integer grid of the scan box."""
    if not _is_integer_triangle(t):
        raise PreconditionError("the circumcircle oracle needs integer vertices")
    x_lo, x_hi, y_lo, y_hi = oracle_grid_bounds(t)
    magnitude = 8 * int(max(abs(x_lo), abs(x_hi), abs(y_lo), abs(y_hi)))
    xs = _array(range(int(4 * x_lo), int(4 * x_hi) + 1), magnitude)
    ys = _array(range(int(4 * y_lo), int(4 * y_hi) + 1), magnitude)
    cx, cy = np.meshgrid(xs, ys, indexing="ij")

    dist = [abs(cx - 4 * int(v.x)) + abs(cy - 4 * int(v.y)) for v in t.vertices]
    mask = (dist[0] > 0) & (dist[1] == dist[0]) & (dist[2] == dist[0])

    found = []
    for i, j in zip(*np.nonzero(mask)):
        found.append(TaxicabCircle(Point(Fraction(int(cx[i, j]), 4), Fraction(int(cy[i, j]), 4)),
                                   Fraction(int(dist[0][i, j]), 4)))
    return sorted(found, key=lambda c: (c.radius, c.center.x, c.center.y))


def oracle_incircle_bound(t: Triangle, resolution: Fraction) -> Fraction:
    """
    Best exact inscribed radius over centers on the resolution grid inside the
    bounding box. A lower bound on the optimum.
    """
    resolution = Fraction(resolution)
    if resolution <= 0:
        raise ConfigError("resolution must be positive")
    p, q = resolution.numerator, resolution.denominator
    v = t.vertices
    i_lo = math.ceil(min(u.x for u in v) / resolution)
    i_hi = math.floor(max(u.x for u in v) / resolution)
    j_lo = math.ceil(min(u.y for u in v) / resolution)
    j_hi = math.floor(max(u.y for u in v) / resolution)
    if i_lo > i_hi or j_lo > j_hi:
        return Fraction(0)

    sides = side_constraints(t)
    coeffs = [(int(s.a), int(s.b), int(s.c), int(s.support)) for s in sides]
    lcm = math.lcm(*(s for _, _, _, s in coeffs))
    span = max(abs(i_lo), abs(i_hi), abs(j_lo), abs(j_hi)) + 1
    magnitude = max(abs(a) + abs(b) + abs(c) for a, b, c, _ in coeffs) * span * p * q * lcm
    ii, jj = np.meshgrid(_array(range(i_lo, i_hi + 1), magnitude),
                         _array(range(j_lo, j_hi + 1), magnitude), indexing="ij")

    # (c - a·x - b·y) / support scaled by q·lcm, with x = i·p/q
    values = [(c * q - (a * ii + b * jj) * p) * (lcm // s) for a, b, c, s in coeffs]
    best = np.minimum(np.minimum(values[0], values[1]), values[2]).max()
    return max(Fraction(int(best), q * lcm), Fraction(0))


# ---------------------------------------------------------------------------
# Inscribed-angle failure demo
# ---------------------------------------------------------------------------

def inscribed_angle_demo(c: TaxicabCircle, arc_start: Point, arc_end: Point,
                         vertex: Point) -> Tuple[Fraction, Fraction]:
    """(alpha, theta): inscribed angle at vertex and central angle of the ccw arc."""
    arc = arc_length_ccw(c, arc_start, arc_end)
    offset = (perimeter_param(c, vertex) - perimeter_param(c, arc_start)) % c.perimeter
    if offset <= arc:
        raise PreconditionError("the vertex lies on the arc")
    theta = arc / c.radius
    alpha = measure(Angle.from_points(vertex, arc_start, arc_end))
    return alpha, theta


@dataclass(frozen=True)
class InscribedAngleWitness:
    circle: TaxicabCircle
    arc_start: Point
    arc_end: Point
    vertex: Point
    alpha: Fraction
    theta: Fraction


def find_inscribed_angle_witness(
    theta: Fraction,
    alpha: Fraction,
    circle: TaxicabCircle = TaxicabCircle(Point(0, 0), 2),
    step: Fraction = Fraction(1, 2),
) -> Optional[InscribedAngleWitness]:
    """First boundary configuration (by parameter order) with the given measures."""
    theta, alpha = Fraction(theta), Fraction(alpha)
    arc = theta * circle.radius
    count = int(circle.perimeter / step)
    for s in range(count):
        start = point_at_param(circle, s * step)
        end = point_at_param(circle, s * step + arc)
        for k in range(count):
            vertex = point_at_param(circle, k * step)
            try:
                found_alpha, found_theta = inscribed_angle_demo(circle, start, end, vertex)
            except (PreconditionError, DegenerateInputError):
                continue
            if found_alpha == alpha and found_theta == theta:
                return InscribedAngleWitness(circle, start, end, vertex, found_alpha, found_theta)
    return None


# ---------------------------------------------------------------------------
# Sweep configuration and enumeration
# ---------------------------------------------------------------------------

FIXTURE_TRIANGLES = [
    ((5, 1), (4, -3), (0, 0)),
    ((0, 0), (2, 2), (3, -2)),
    ((0, 0), (2, 2), (2, -2)),
    ((0, 0), (6, 0), (3, 2)),
    ((4, 2), (4, -2), (0, 0)),
]


@dataclass(frozen=True)
class SweepConfig:
    box_min: int = 0
    box_max: int = 4
    denominator_limit: int = 4
    trials: int = 0
    seed: int = 0
    oracle_box: int = 6
    incircle_resolution: Fraction = Fraction(1, 2)
    include_fixtures: bool = True
    timings: bool = False
    workers: int = 1   # 0 means one per CPU

    def validate(self) -> None:
        if self.box_max - self.box_min < 1:
            raise ConfigError(f"box [{self.box_min}, {self.box_max}] holds no triangle")
        if self.trials < 0:
            raise ConfigError("trials must be >= 0")
        if self.denominator_limit < 1:
            raise ConfigError("denominator limit must be >= 1")
        if self.incircle_resolution <= 0:
            raise ConfigError("incircle resolution must be positive")
        if self.workers < 0:
            raise ConfigError("workers must be >= 0")


def _triangle_key(t: Triangle):
    return tuple(sorted((v.x, v.y) for v in t.vertices))


def _random_triangle(rng: random.Random, cfg: SweepConfig) -> Triangle:
    while True:
        pts = []
        for _ in range(3):
            q = rng.randint(1, cfg.denominator_limit)
            pts.append(Point(Fraction(rng.randint(cfg.box_min * q, cfg.box_max * q), q),
                             Fraction(rng.randint(cfg.box_min * q, cfg.box_max * q), q)))
        try:
            return Triangle(*pts)
        except DegenerateInputError:
            continue


def enumerate_triangles(cfg: SweepConfig) -> List[Tuple[str, Triangle]]:
    """Grid triangles (one per vertex set), then seeded random ones, then fixtures."""
    cfg.validate()
    seen = set()
    cases = []

    def add(origin: str, t: Triangle):
        key = _triangle_key(t)
        if key not in seen:
            seen.add(key)
            cases.append((origin, t))

    lattice = [Point(x, y) for x in range(cfg.box_min, cfg.box_max + 1)
               for y in range(cfg.box_min, cfg.box_max + 1)]
    for a, b, c in itertools.combinations(lattice, 3):
        try:
            add("grid", Triangle(a, b, c))
        except DegenerateInputError:
            continue

    # Mersenne Twister (random.Random) seeded from the config
    rng = random.Random(cfg.seed)
    for _ in range(cfg.trials):
        add("random", _random_triangle(rng, cfg))

    if cfg.include_fixtures:
        for verts in FIXTURE_TRIANGLES:
            add("fixture", Triangle(*(Point(*v) for v in verts)))
    return cases


class TriangleCase:
    """One triangle under test with its solver results computed on demand."""

    def __init__(self, triangle: Triangle, origin: str, cfg: SweepConfig):
        self.triangle = triangle
        self.origin = origin
        self.cfg = cfg
        self._images: Dict[str, "TriangleCase"] = {}

    @cached_property
    def classification(self):
        return classify_triangle(self.triangle)

    @cached_property
    def circumcircles(self) -> CircumcircleSolutionSet:
        return circumcircles(self.triangle)

    @cached_property
    def incircle(self):
        return incircle(self.triangle)

    @cached_property
    def maximal(self):
        return max_inscribed_circle(self.triangle)

    @cached_property
    def construction(self):
        if not self.classification.is_inscribed:
            return None
        return paper_construction(self.triangle)


def triangle_echo(t: Triangle) -> List[List[str]]:
    return [[format_rational(v.x), format_rational(v.y)] for v in t.vertices]


# ---------------------------------------------------------------------------
# Symmetries of the taxicab plane
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Symmetry:
    name: str
    point_map: Callable[[Point], Point]
    vector_map: Callable[[Direction], Direction]
    mirrors_classes: bool


def _vector(point_map):
    def mapped(d: Direction) -> Direction:
        p = point_map(Point(d.dx, d.dy))
        return Direction(p.x, p.y)
    return mapped


SYMMETRIES = [
    Symmetry("translate", lambda p: translate(p, Fraction(3), Fraction(-7, 2)), lambda d: d, False),
    Symmetry("swap_xy", swap_xy, _vector(swap_xy), False),
    Symmetry("reflect_x", reflect_x, _vector(reflect_x), True),
    Symmetry("reflect_y", reflect_y, _vector(reflect_y), True),
]


# ---------------------------------------------------------------------------
# Properties. Each returns None (pass), a violation message, or NOT_APPLICABLE.
# ---------------------------------------------------------------------------

def check_angle_sum(case: TriangleCase):
    total = sum(case.classification.angle_measures)
    return None if total == 4 else f"angle measures sum to {total}"


def check_angle_measure_oracle(case: TriangleCase):
    for i, a in enumerate(angles(case.triangle)):
        walked = oracle_measure(a)
        if walked != case.classification.angle_measures[i]:
            return f"vertex {i}: measure {case.classification.angle_measures[i]} vs walked {walked}"
    return None


def check_positive_vertex_neighbors(case: TriangleCase):
    ok = neighbors_negatively_inscribed(case.classification.classes)
    return None if ok else "strictly positive vertex with a neighbor not negatively inscribed"


def check_negative_vertex_neighbors(case: TriangleCase):
    ok = neighbors_positively_inscribed(case.classification.classes)
    return None if ok else "strictly negative vertex with a neighbor not positively inscribed"


def check_strict_classes_not_repeated(case: TriangleCase):
    classes = case.classification.classes
    for strict in (InscribedClass.STRICTLY_POSITIVE, InscribedClass.STRICTLY_NEGATIVE):
        if classes.count(strict) > 1:
            return f"two {strict.value} vertices"
    return None


def check_three_completely_iff_diagonal_pair(case: TriangleCase):
    three = case.classification.completely_count == 3
    diagonal = has_diagonal_side_pair(case.triangle)
    return None if three == diagonal else f"completely_count={case.classification.completely_count}, diagonal pair={diagonal}"


def check_inscribed_has_completely_angle(case: TriangleCase):
    c = case.classification
    if not c.is_inscribed:
        return NOT_APPLICABLE
    return None if c.completely_count >= 1 else "inscribed triangle without a completely inscribed angle"


def check_inscribed_has_alternating_labels(case: TriangleCase):
    c = case.classification
    if not c.is_inscribed:
        return NOT_APPLICABLE
    return None if has_alternating_labels(c.classes) else "no alternating P/N labelling"


def check_circumcircle_existence(case: TriangleCase):
    exists = case.circumcircles.multiplicity is not Multiplicity.NONE
    inscribed = case.classification.is_inscribed
    return None if exists == inscribed else f"circumcircle exists={exists}, inscribed={inscribed}"


def check_circumcircle_members(case: TriangleCase):
    t = case.triangle
    for circle in family_circles(case.circumcircles):
        if not verify_circumcircle(t, circle):
            return f"reported circle {circle} misses a vertex"
        # corners sit on two edges, so a circle may match several assignments
        assignments = itertools.product(*(edges_at(circle, v) for v in t.vertices))
        families = (solve_assignment(t, a) for a in assignments)
        if not any(f is not None and f.contains(circle) for f in families):
            return f"reported circle {circle} is not recovered from its edge assignment"
    return None


def check_circumcircle_nonunique_slope(case: TriangleCase):
    if case.circumcircles.multiplicity in (Multiplicity.NONE, Multiplicity.UNIQUE):
        return NOT_APPLICABLE
    kinds = {side_slope_kind(d) for d in side_directions(case.triangle)}
    if kinds & {SlopeKind.DIAGONAL_POS, SlopeKind.DIAGONAL_NEG}:
        return None
    return f"{case.circumcircles.multiplicity.value} without a slope ±1 side"


def check_circumcircle_family_shape(case: TriangleCase):
    for f in case.circumcircles.components:
        if f.kind is FamilyKind.SEGMENT:
            v = f.center_velocity
            if f.radius_rate != 0 or abs(v.dx) != abs(v.dy):
                return f"segment family {f} is not a constant-radius diagonal shift"
        if f.kind is FamilyKind.RAY and f.radius_rate <= 0:
            return f"ray family {f} does not grow"
    return None


def _grid_members(solution: CircumcircleSolutionSet, bounds) -> set:
    x_lo, x_hi, y_lo, y_hi = bounds
    quarter = Fraction(1, 4)

    def on_grid(c: TaxicabCircle) -> bool:
        return ((4 * c.center.x).denominator == 1 and (4 * c.center.y).denominator == 1
                and x_lo <= c.center.x <= x_hi and y_lo <= c.center.y <= y_hi)

    members = set()
    reach = (x_hi - x_lo) + (y_hi - y_lo)
    for f in solution.components:
        if f.kind is FamilyKind.POINT:
            if on_grid(f.base):
                members.add(f.base)
            continue
        start = f.base.center
        far = reach + abs(start.x - x_lo) + abs(start.y - y_lo)
        lo, hi = Fraction(0), far if f.t_max is None else min(f.t_max, far)
        # only parameters whose center stays inside the bounds can hit the grid
        v = f.center_velocity
        for p0, dp, b_lo, b_hi in ((start.x, v.dx, x_lo, x_hi), (start.y, v.dy, y_lo, y_hi)):
            if dp != 0:
                a, b = sorted(((b_lo - p0) / dp, (b_hi - p0) / dp))
                lo, hi = max(lo, a), min(hi, b)
        for k in range(math.ceil(lo / quarter), math.floor(hi / quarter) + 1):
            c = f.circle_at(k * quarter)
            if on_grid(c):
                members.add(c)
    return members


def check_circumcircle_oracle(case: TriangleCase):
    t = case.triangle
    if not _is_integer_triangle(t):
        return NOT_APPLICABLE
    if max(max(abs(v.x), abs(v.y)) for v in t.vertices) > case.cfg.oracle_box:
        return NOT_APPLICABLE
    found = set(oracle_circumcircle(t))
    for circle in sorted(found, key=lambda c: (c.radius, c.center.x, c.center.y)):
        if not contains_circle(case.circumcircles, circle):
            return f"oracle circle {circle} missing from solver output"
    expected = _grid_members(case.circumcircles, oracle_grid_bounds(t))
    if expected != found:
        extra = sorted(expected - found, key=lambda c: (c.radius, c.center.x, c.center.y))
        return f"solver grid circles not found by the oracle: {extra[:3]}"
    return None


def check_incircle_existence(case: TriangleCase):
    exists = isinstance(case.incircle, Incircle)
    inscribed = case.classification.is_inscribed
    return None if exists == inscribed else f"incircle exists={exists}, inscribed={inscribed}"


def check_incircle_containment(case: TriangleCase):
    result = case.incircle
    if not isinstance(result, Incircle):
        return NOT_APPLICABLE
    if not is_contained(case.triangle, result.circle):
        return f"incircle {result.circle} leaves the triangle"
    for touch in result.touches:
        if touch.contact is ContactKind.NONE:
            return f"side {touch.side} is not active"
    if distinct_corner_count(case.triangle, result.circle) < 3:
        return "fewer than three corners touch the sides"
    return None


def check_touch_trichotomy(case: TriangleCase):
    directions = side_directions(case.triangle)
    allowed = {
        SlopeKind.SHALLOW: (ContactKind.CORNER, {CornerId.N, CornerId.S}),
        SlopeKind.STEEP: (ContactKind.CORNER, {CornerId.E, CornerId.W}),
        SlopeKind.DIAGONAL_POS: (ContactKind.EDGE, set(CornerId)),
        SlopeKind.DIAGONAL_NEG: (ContactKind.EDGE, set(CornerId)),
    }
    for touch in case.maximal.touches:
        if touch.contact is ContactKind.NONE:
            continue
        kind, corner_set = allowed[side_slope_kind(directions[touch.side])]
        if touch.contact is not kind or not set(touch.corners) <= corner_set:
            return f"side {touch.side} ({side_slope_kind(directions[touch.side]).value}) touched by {touch.contact.value} {[c.value for c in touch.corners]}"
    return None


def check_incircle_oracle_bound(case: TriangleCase):
    resolution = case.cfg.incircle_resolution
    rho = case.maximal.circle.radius
    bound = oracle_incircle_bound(case.triangle, resolution)
    if bound > rho:
        return f"oracle radius {bound} exceeds solver radius {rho}"
    center = case.maximal.circle.center
    on_grid = (center.x / resolution).denominator == 1 and (center.y / resolution).denominator == 1
    if on_grid and bound != rho:
        return f"optimal center on the oracle grid but oracle found {bound} < {rho}"
    return None


def check_noincircle_witness(case: TriangleCase):
    result = case.incircle
    if not isinstance(result, NoIncircle):
        return NOT_APPLICABLE
    if result.distinct_corner_count > 2:
        return f"witness touches {result.distinct_corner_count} corners"
    if not is_contained(case.triangle, result.witness):
        return "witness leaves the triangle"
    return None


def check_construction_identities(case: TriangleCase):
    pc = case.construction
    if pc is None:
        return NOT_APPLICABLE
    if pc.r_alpha + pc.r_beta != pc.side_ab:
        return "r_alpha + r_beta != AB"
    if pc.r_alpha * pc.alpha != pc.r_beta * pc.beta:
        return "r_alpha·alpha != r_beta·beta"
    if pc.rho * 2 != pc.arc_length_l:
        return "rho != l/2"
    return None


def check_construction_agreement(case: TriangleCase):
    pc = case.construction
    if pc is None or not pc.applicable:
        return NOT_APPLICABLE
    if not pc.containment_ok:
        return f"construction circle {pc.circle} fails containment or tangency"
    if not isinstance(case.incircle, Incircle) or pc.circle != case.incircle.circle:
        return f"construction circle {pc.circle} differs from solver incircle"
    if taxicab_distance(pc.p, pc.q_alpha) != pc.arc_length_l or taxicab_distance(pc.p, pc.q_beta) != pc.arc_length_l:
        return "constructed arcs are not full circle edges"
    return None


def _mapped_case(case: TriangleCase, sym: Symmetry) -> TriangleCase:
    # shared by the symmetry checks so each image is solved once
    if sym.name not in case._images:
        case._images[sym.name] = TriangleCase(case.triangle.mapped(sym.point_map), case.origin, case.cfg)
    return case._images[sym.name]


def check_symmetry_classification(case: TriangleCase):
    for sym in SYMMETRIES:
        other = _mapped_case(case, sym).classification
        expected = tuple(c.mirrored if sym.mirrors_classes else c for c in case.classification.classes)
        if other.classes != expected or other.angle_measures != case.classification.angle_measures:
            return f"classification changes under {sym.name}"
    return None


def check_symmetry_circumcircle(case: TriangleCase):
    for sym in SYMMETRIES:
        other = _mapped_case(case, sym).circumcircles
        expected = transform_solution(case.circumcircles, sym.point_map, sym.vector_map)
        if other != expected:
            return f"circumcircle set does not map under {sym.name}"
    return None


def check_symmetry_incircle(case: TriangleCase):
    for sym in SYMMETRIES:
        other = _mapped_case(case, sym).incircle
        mine = case.incircle
        if type(other) is not type(mine):
            return f"incircle verdict changes under {sym.name}"
        a = mine.circle if isinstance(mine, Incircle) else mine.witness
        b = other.circle if isinstance(other, Incircle) else other.witness
        if TaxicabCircle(sym.point_map(a.center), a.radius) != b:
            return f"incircle does not map under {sym.name}"
    return None


PROPERTY_CHECKS: Dict[str, Callable[[TriangleCase], object]] = {
    "angle_sum": check_angle_sum,
    "angle_measure_oracle": check_angle_measure_oracle,
    "positive_vertex_neighbors_negative": check_positive_vertex_neighbors,
    "negative_vertex_neighbors_positive": check_negative_vertex_neighbors,
    "strict_classes_not_repeated": check_strict_classes_not_repeated,
    "three_completely_iff_diagonal_pair": check_three_completely_iff_diagonal_pair,
    "inscribed_has_completely_angle": check_inscribed_has_completely_angle,
    "inscribed_has_alternating_labels": check_inscribed_has_alternating_labels,
    "circumcircle_existence": check_circumcircle_existence,
    "circumcircle_members_verified": check_circumcircle_members,
    "circumcircle_nonunique_has_diagonal_side": check_circumcircle_nonunique_slope,
    "circumcircle_family_shape": check_circumcircle_family_shape,
    "circumcircle_oracle_agreement": check_circumcircle_oracle,
    "incircle_existence": check_incircle_existence,
    "incircle_containment": check_incircle_containment,
    "incircle_touch_trichotomy": check_touch_trichotomy,
    "incircle_oracle_bound": check_incircle_oracle_bound,
    "noincircle_witness_corners": check_noincircle_witness,
    "construction_identities": check_construction_identities,
    "construction_agreement": check_construction_agreement,
    "symmetry_classification": check_symmetry_classification,
    "symmetry_circumcircle": check_symmetry_circumcircle,
    "symmetry_incircle": check_symmetry_incircle,
}


# Findings are reported but never fail the suite.

def finding_incircle_not_unique(case: TriangleCase):
    result = case.incircle
    if isinstance(result, Incircle) and not result.unique:
        return f"{len(result.candidates)} optimal candidates"
    return None


def finding_incircle_readings_disagree(case: TriangleCase):
    all_sides = all(t.contact is not ContactKind.NONE for t in case.maximal.touches)
    corner_reading = isinstance(case.incircle, Incircle)
    if all_sides != corner_reading:
        return f"all sides touched={all_sides}, three corners touch={corner_reading}"
    return None


def finding_diagonal_axis_without_ray(case: TriangleCase):
    directions = side_directions(case.triangle)
    kinds = {side_slope_kind(d) for d in directions}
    axis_side = any(d.dx == 0 or d.dy == 0 for d in directions)
    diagonal = bool(kinds & {SlopeKind.DIAGONAL_POS, SlopeKind.DIAGONAL_NEG})
    if not (diagonal and axis_side and case.classification.is_inscribed):
        return None
    if not any(f.kind is FamilyKind.RAY for f in case.circumcircles.components):
        return f"diagonal and axis-parallel sides but multiplicity {case.circumcircles.multiplicity.value}"
    return None


FINDING_CHECKS: Dict[str, Callable[[TriangleCase], object]] = {
    "diagonal_axis_sides_without_ray": finding_diagonal_axis_without_ray,
    "incircle_not_unique": finding_incircle_not_unique,
    "incircle_readings_disagree": finding_incircle_readings_disagree,
}


# ---------------------------------------------------------------------------
# Report
# ---------------------------------------------------------------------------

@dataclass
class PropertyResult:
    name: str
    checked: int = 0
    violations: List[Dict] = field(default_factory=list)


@dataclass
class SuiteReport:
    config: Dict
    triangles_checked: int
    properties: List[PropertyResult]
    discrepancies: List[Dict]
    findings: List[Dict]
    elapsed_seconds: Optional[Dict[str, float]] = None

    @property
    def violation_count(self) -> int:
        return sum(len(p.violations) for p in self.properties)

    @property
    def ok(self) -> bool:
        return self.violation_count == 0

    def summary_frame(self) -> pd.DataFrame:
        return pd.DataFrame(
            [{"property": p.name, "checked": p.checked, "violations": len(p.violations)}
             for p in self.properties],
            columns=["property", "checked", "violations"],
        )

    def to_document(self) -> Dict:
        doc = {
            "config": self.config,
            "triangles_checked": self.triangles_checked,
            "ok": self.ok,
            "summary": [
                {"property": row.property, "checked": int(row.checked), "violations": int(row.violations)}
                for row in self.summary_frame().itertuples(index=False)
            ],
            "properties": [asdict(p) for p in self.properties],
            "discrepancies": self.discrepancies,
            "findings": self.findings,
        }
        if self.elapsed_seconds is not None:
            doc["elapsed_seconds"] = self.elapsed_seconds
        return doc

    def to_text(self) -> str:
        lines = [
            "TAXICAB PROPERTY SUITE",
            "=" * 60,
            f"triangles checked: {self.triangles_checked}",
            f"violations: {self.violation_count}",
            "",
            self.summary_frame().to_string(index=False),
            "",
        ]
        for p in self.properties:
            for v in p.violations:
                lines.append(f"✗ {p.name}: {v['triangle']} {v['detail']}")
        lines.append(f"construction discrepancies (not applicable): {len(self.discrepancies)}")
        for d in self.discrepancies:
            lines.append(f"  {d['triangle']} construction rho={d['construction_rho']} "
                         f"solver rho={d['solver_rho']} agrees={d['agrees']}")
        lines.append(f"findings: {len(self.findings)}")
        for f in self.findings:
            lines.append(f"  {f['finding']}: {f['triangle']} {f['detail']}")
        if self.elapsed_seconds is not None:
            lines.append("elapsed: " + ", ".join(f"{k}={v:.3f}s" for k, v in sorted(self.elapsed_seconds.items())))
        return "\n".join(lines) + "\n"


def _config_echo(cfg: SweepConfig) -> Dict:
    echo = asdict(cfg)
    # the report must not depend on how the work was split
    del echo["workers"]
    echo["incircle_resolution"] = format_rational(cfg.incircle_resolution)
    return echo


def _discrepancy(case: TriangleCase) -> Optional[Dict]:
    pc = case.construction
    if pc is None or pc.applicable:
        return None
    solver = case.incircle
    solver_rho = solver.circle.radius if isinstance(solver, Incircle) else solver.witness.radius
    return {
        "triangle": triangle_echo(case.triangle),
        "gamma_vertex": pc.gamma_vertex,
        "construction_rho": format_rational(pc.rho),
        "solver_rho": format_rational(solver_rho),
        "agrees": pc.rho == solver_rho,
    }


def _evaluate(check: Callable[[TriangleCase], object], case: TriangleCase):
    try:
        return check(case)
    except Exception as e:
        return f"error: {type(e).__name__}: {e}"


def check_cases(
    cases: Sequence[Tuple[str, Triangle]],
    cfg: SweepConfig,
    checks: Dict[str, Callable],
    findings: Dict[str, Callable],
) -> List[Dict]:
    """
    Outcomes for a batch of triangles, in input order. Runs inside worker
    processes, so everything it returns is plain data.
    """
    outcomes = []
    for origin, t in cases:
        case = TriangleCase(t, origin, cfg)
        checked = []
        for name in sorted(checks):
            outcome = _evaluate(checks[name], case)
            if outcome is not NOT_APPLICABLE:
                checked.append((name, outcome))
        found = []
        for name in sorted(findings):
            detail = _evaluate(findings[name], case)
            if detail is not None and detail is not NOT_APPLICABLE:
                found.append((name, detail))
        outcomes.append({
            "triangle": triangle_echo(t),
            "checked": checked,
            "findings": found,
            "discrepancy": _discrepancy(case),
        })
    return outcomes


def worker_count(cfg: SweepConfig) -> int:
    return cfg.workers or os.cpu_count() or 1


def _batches(cases: List, workers: int) -> List[List]:
    if workers <= 1:
        size = 500
    else:
        # about eight batches per worker
        size = max(1, min(500, math.ceil(len(cases) / (workers * 8))))
    return [cases[i:i + size] for i in range(0, len(cases), size)]


def run_suite(
    cfg: SweepConfig,
    checks: Optional[Dict[str, Callable]] = None,
    findings: Optional[Dict[str, Callable]] = None,
) -> SuiteReport:
    """
    Evaluate every property over the configured triangles.

    With more than one worker the batches go to a process pool, so the
    check functions must be picklable (module-level). The report is sorted
    and never depends on the worker count.
    """
    cfg.validate()
    checks = PROPERTY_CHECKS if checks is None else checks
    findings = FINDING_CHECKS if findings is None else findings
    started = time.perf_counter()

    logger.info("→ Enumerating triangles in [%d, %d]² (+%d random)...", cfg.box_min, cfg.box_max, cfg.trials)
    cases = enumerate_triangles(cfg)
    logger.info("  ✓ %d triangles", len(cases))
    enumerated = time.perf_counter()

    workers = worker_count(cfg)
    batches = _batches(cases, workers)
    results = {name: PropertyResult(name) for name in sorted(checks)}
    discrepancies, found = [], []
    done = 0

    def collect(outcomes: List[Dict]) -> None:
        nonlocal done
        for outcome in outcomes:
            echo = outcome["triangle"]
            for name, detail in outcome["checked"]:
                results[name].checked += 1
                if detail is not None:
                    logger.warning("  ✗ %s violated by %s: %s", name, echo, detail)
                    results[name].violations.append({"triangle": echo, "detail": detail})
            for name, detail in outcome["findings"]:
                found.append({"finding": name, "triangle": echo, "detail": detail})
            if outcome["discrepancy"] is not None:
                discrepancies.append(outcome["discrepancy"])
        done += len(outcomes)
        logger.info("  [%d/%d] triangles checked", done, len(cases))

    if workers > 1 and len(batches) > 1:
        logger.info("→ Checking with %d worker processes...", workers)
        with ProcessPoolExecutor(max_workers=workers) as pool:
            for outcomes in pool.map(check_cases, batches, itertools.repeat(cfg),
                                     itertools.repeat(checks), itertools.repeat(findings)):
                collect(outcomes)
    else:
        for batch in batches:
            collect(check_cases(batch, cfg, checks, findings))

    finished = time.perf_counter()
    logger.info("→ Suite finished in %.1fs", finished - started)

    for r in results.values():
        r.violations.sort(key=lambda v: (str(v["triangle"]), v["detail"]))
    return SuiteReport(
        config=_config_echo(cfg),
        triangles_checked=len(cases),
        properties=list(results.values()),
        discrepancies=sorted(discrepancies, key=lambda d: str(d["triangle"])),
        findings=sorted(found, key=lambda f: (f["finding"], str(f["triangle"]), f["detail"])),
        elapsed_seconds=({"enumerate": enumerated - started, "check": finished - enumerated}
                         if cfg.timings else None),
    )
