"""
Circumcircle solver: every taxicab circle through the three vertices of a
triangle.

Each vertex is assigned to one of the four circle edges. In the unknowns
S = cx + cy, D = cx - cy and r, an edge assignment is one linear equality
per vertex plus two on-edge inequalities, so every assignment solves
exactly to an empty set, a point, a segment or a ray. The 64 assignments
are then merged into maximal families.
"""

import itertools
import logging
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from typing import Callable, List, Optional, Sequence, Tuple

from services.circle import EdgeId, TaxicabCircle
from services.exact import Direction, LinearPlan, Point, plan_linear, taxicab_distance
from services.triangle import Triangle

logger = logging.getLogger(__name__)

Vec3 = Tuple[Fraction, Fraction, Fraction]   # (cx, cy, r)
EdgeAssignment = Tuple[EdgeId, EdgeId, EdgeId]

# Equality row over (S, D, r) and whether the right-hand side is s_i or d_i.
_EQUATIONS = {
    EdgeId.NE: ((1, 0, 1), "s"),
    EdgeId.SW: ((1, 0, -1), "s"),
    EdgeId.NW: ((0, 1, -1), "d"),
    EdgeId.SE: ((0, 1, 1), "d"),
}


class FamilyKind(Enum):
    POINT = "point"
    SEGMENT = "segment"
    RAY = "ray"


class Multiplicity(Enum):
    NONE = "none"
    UNIQUE = "unique"
    BOUNDED_FAMILY = "bounded_family"
    UNBOUNDED_FAMILY = "unbounded_family"
    MIXED = "mixed"


@dataclass(frozen=True)
class CircleFamily:
    """
    Circles center(τ) = base.center + τ·center_velocity,
    radius(τ) = base.radius + τ·radius_rate for τ in [0, t_max]
    (t_max None means [0, ∞)). Velocities are scaled to unit max-norm.
    """
    kind: FamilyKind
    base: TaxicabCircle
    center_velocity: Optional[Direction]
    radius_rate: Fraction
    t_max: Optional[Fraction]

    def circle_at(self, tau: Fraction) -> TaxicabCircle:
        if tau < 0 or (self.t_max is not None and tau > self.t_max):
            raise ValueError(f"parameter {tau} outside the family range")
        if self.center_velocity is None:
            return self.base
        v = self.center_velocity
        return TaxicabCircle(
            self.base.center.offset(tau * v.dx, tau * v.dy),
            self.base.radius + tau * self.radius_rate,
        )

    def sample_parameters(self) -> List[Fraction]:
        """Range endpoints and one interior sample."""
        if self.kind is FamilyKind.POINT:
            return [Fraction(0)]
        if self.kind is FamilyKind.SEGMENT:
            return [Fraction(0), self.t_max / 2, self.t_max]
        return [Fraction(0), Fraction(1), Fraction(7, 2)]

    def line_parameter(self, circle: TaxicabCircle) -> Optional[Fraction]:
        """τ (unrestricted) such that the circle lies on this family's line."""
        return _line_parameter(_vec(self.base), _velocity(self), _vec(circle))

    def contains(self, circle: TaxicabCircle) -> bool:
        if self.center_velocity is None:
            return circle == self.base
        tau = self.line_parameter(circle)
        if tau is None or tau < 0:
            return False
        return self.t_max is None or tau <= self.t_max

    def transformed(
        self,
        point_map: Callable[[Point], Point],
        vector_map: Callable[[Direction], Direction],
    ) -> "CircleFamily":
        """Image under an isometry of the taxicab plane, re-canonicalized."""
        center = point_map(self.base.center)
        base = (center.x, center.y, self.base.radius)
        if self.center_velocity is None:
            return _make_family(base, None, Fraction(0), Fraction(0))
        v = vector_map(self.center_velocity)
        return _make_family(base, (v.dx, v.dy, self.radius_rate), Fraction(0), self.t_max)


@dataclass(frozen=True)
class CircumcircleSolutionSet:
    components: Tuple[CircleFamily, ...]
    multiplicity: Multiplicity


def _vec(c: TaxicabCircle) -> Vec3:
    return (c.center.x, c.center.y, c.radius)


def _velocity(f: CircleFamily) -> Optional[Vec3]:
    if f.center_velocity is None:
        return None
    return (f.center_velocity.dx, f.center_velocity.dy, f.radius_rate)


def _add(a: Vec3, b: Vec3, k: Fraction = Fraction(1)) -> Vec3:
    return tuple(x + k * y for x, y in zip(a, b))


def _line_parameter(base: Vec3, v: Optional[Vec3], target: Vec3) -> Optional[Fraction]:
    if v is None:
        return Fraction(0) if base == target else None
    pivot = next(i for i in range(3) if v[i] != 0)
    tau = (target[pivot] - base[pivot]) / v[pivot]
    return tau if _add(base, v, tau) == target else None


def _sort_key(v: Vec3) -> Tuple[Fraction, Fraction, Fraction]:
    return (v[2], v[0], v[1])


def _make_family(
    base: Vec3,
    v: Optional[Vec3],
    lo: Optional[Fraction],
    hi: Optional[Fraction],
) -> Optional[CircleFamily]:
    """Canonical family for the points base + λ·v, λ in [lo, hi]."""
    if v is None or (lo is not None and lo == hi):
        point = base if v is None else _add(base, v, lo)
        if point[2] <= 0:
            return None
        return CircleFamily(FamilyKind.POINT, TaxicabCircle(Point(point[0], point[1]), point[2]),
                            None, Fraction(0), Fraction(0))
    if lo is None and hi is None:
        logger.warning("  ✗ circle family unbounded in both directions, dropped")
        return None
    if lo is None:
        v = tuple(-x for x in v)
        lo, hi = -hi, None

    start = _add(base, v, lo)
    m = max(abs(v[0]), abs(v[1]))
    v = tuple(x / m for x in v)
    if hi is None:
        kind, t_max = FamilyKind.RAY, None
    else:
        kind, t_max = FamilyKind.SEGMENT, (hi - lo) * m
        end = _add(start, v, t_max)
        if _sort_key(end) < _sort_key(start):
            start, v = end, tuple(-x for x in v)
    if start[2] <= 0:
        return None
    return CircleFamily(
        kind,
        TaxicabCircle(Point(start[0], start[1]), start[2]),
        Direction(v[0], v[1]),
        v[2],
        t_max,
    )


def _assignment_system(t: Triangle, assignment: Sequence[EdgeId]):
    rows, rhs, inequalities = [], [], []
    for vertex, edge in zip(t.vertices, assignment):
        s = vertex.x + vertex.y
        d = vertex.x - vertex.y
        row, which = _EQUATIONS[edge]
        rows.append(row)
        rhs.append(s if which == "s" else d)
        if which == "s":
            # on NE/SW the vertex must satisfy |d - D| <= r
            inequalities.append(((0, -1, -1), -d))
            inequalities.append(((0, 1, -1), d))
        else:
            inequalities.append(((-1, 0, -1), -s))
            inequalities.append(((1, 0, -1), s))
    inequalities.append(((0, 0, -1), Fraction(0)))
    return rows, rhs, inequalities


def _dot(g, x) -> Fraction:
    return sum(Fraction(a) * b for a, b in zip(g, x))


def _to_center_space(x: Sequence[Fraction]) -> Vec3:
    s, d, r = x
    return ((s + d) / 2, (s - d) / 2, r)


@lru_cache(maxsize=None)
def _assignment_plan(assignment: EdgeAssignment) -> LinearPlan:
    # the coefficient rows depend only on the assignment, never on the triangle
    return plan_linear([_EQUATIONS[edge][0] for edge in assignment])


def solve_assignment(t: Triangle, assignment: Sequence[EdgeId]) -> Optional[CircleFamily]:
    """Circles with vertex i on edge assignment[i]; None when infeasible."""
    _, rhs, inequalities = _assignment_system(t, assignment)
    solved = _assignment_plan(tuple(assignment)).solve(rhs)
    if solved is None:
        return None
    x0, null = solved
    if len(null) > 1:
        logger.debug("assignment %s has a %d-dimensional solution space", assignment, len(null))
        return None
    v = null[0] if null else None

    lo: Optional[Fraction] = None
    hi: Optional[Fraction] = None
    for g, h in inequalities:
        gx = _dot(g, x0)
        gv = _dot(g, v) if v is not None else Fraction(0)
        if gv == 0:
            if gx > h:
                return None
            continue
        bound = (h - gx) / gv
        if gv > 0:
            hi = bound if hi is None else min(hi, bound)
        else:
            lo = bound if lo is None else max(lo, bound)
    if lo is not None and hi is not None and lo > hi:
        return None

    base = _to_center_space(x0)
    if v is None:
        return _make_family(base, None, Fraction(0), Fraction(0))
    return _make_family(base, _to_center_space(v), lo, hi)


def _merge(f: CircleFamily, g: CircleFamily) -> Optional[CircleFamily]:
    """Union of two families when their circle sets meet on a common line."""
    if f.kind is FamilyKind.POINT and g.kind is FamilyKind.POINT:
        return f if f.base == g.base else None
    if g.kind is FamilyKind.POINT:
        return f if f.contains(g.base) else None
    if f.kind is FamilyKind.POINT:
        return g if g.contains(f.base) else None

    fv, gv = _velocity(f), _velocity(g)
    if gv == fv:
        sign = 1
    elif gv == tuple(-x for x in fv):
        sign = -1
    else:
        return None
    tau = f.line_parameter(g.base)
    if tau is None:
        return None

    f_lo, f_hi = Fraction(0), f.t_max
    if g.t_max is None:
        g_lo, g_hi = (tau, None) if sign > 0 else (None, tau)
    else:
        g_lo, g_hi = sorted((tau, tau + sign * g.t_max))

    lo = max(x for x in (f_lo, g_lo) if x is not None)
    highs = [x for x in (f_hi, g_hi) if x is not None]
    overlap_hi = min(highs) if highs else None
    if overlap_hi is not None and lo > overlap_hi:
        return None

    union_lo = None if g_lo is None else min(f_lo, g_lo)
    union_hi = None if f_hi is None or g_hi is None else max(f_hi, g_hi)
    return _make_family(_vec(f.base), fv, union_lo, union_hi)


def _component_key(f: CircleFamily):
    v = _velocity(f) or (0, 0, 0)
    return (f.base.radius, f.base.center.x, f.base.center.y, f.kind.value, v,
            f.t_max if f.t_max is not None else -1)


def merge_families(families: Sequence[CircleFamily]) -> List[CircleFamily]:
    components = list(families)
    changed = True
    while changed:
        changed = False
        for i, j in itertools.combinations(range(len(components)), 2):
            merged = _merge(components[i], components[j])
            if merged is not None:
                components = [c for k, c in enumerate(components) if k not in (i, j)]
                components.append(merged)
                changed = True
                break
    return sorted(components, key=_component_key)


def _multiplicity(components: Sequence[CircleFamily]) -> Multiplicity:
    kinds = [c.kind for c in components]
    if not kinds:
        return Multiplicity.NONE
    if kinds == [FamilyKind.POINT]:
        return Multiplicity.UNIQUE
    has_ray = FamilyKind.RAY in kinds
    has_segment = FamilyKind.SEGMENT in kinds
    if has_ray and has_segment:
        return Multiplicity.MIXED
    if has_ray:
        return Multiplicity.UNBOUNDED_FAMILY
    return Multiplicity.BOUNDED_FAMILY


def all_assignments() -> List[EdgeAssignment]:
    return list(itertools.product(list(EdgeId), repeat=3))


def circumcircles(t: Triangle) -> CircumcircleSolutionSet:
    found = []
    for assignment in all_assignments():
        family = solve_assignment(t, assignment)
        if family is not None:
            found.append(family)
    components = merge_families(found)
    return CircumcircleSolutionSet(tuple(components), _multiplicity(components))


def verify_circumcircle(t: Triangle, c: TaxicabCircle) -> bool:
    return all(taxicab_distance(v, c.center) == c.radius for v in t.vertices)


def family_circles(solution: CircumcircleSolutionSet) -> List[TaxicabCircle]:
    """Endpoint and interior-sample circles of every component."""
    circles = []
    for f in solution.components:
        circles.extend(f.circle_at(tau) for tau in f.sample_parameters())
    return circles


def contains_circle(solution: CircumcircleSolutionSet, circle: TaxicabCircle) -> bool:
    return any(f.contains(circle) for f in solution.components)


def transform_solution(
    solution: CircumcircleSolutionSet,
    point_map: Callable[[Point], Point],
    vector_map: Callable[[Direction], Direction],
) -> CircumcircleSolutionSet:
    components = sorted((f.transformed(point_map, vector_map) for f in solution.components),
                        key=_component_key)
    return CircumcircleSolutionSet(tuple(components), solution.multiplicity)
