from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from services.circle import (
    CornerId,
    EdgeId,
    Location,
    TaxicabCircle,
    arc_length_ccw,
    corners,
    edges_at,
    is_contained_in,
    locate,
    perimeter_param,
    point_at_param,
)
from services.errors import DegenerateInputError, OffBoundaryError
from services.exact import Point, taxicab_distance
from services.incircle import side_constraints
from services.triangle import Triangle

from . import strategies

C2 = TaxicabCircle(Point(0, 0), 2)


def test_corners():
    c = TaxicabCircle(Point(3, Fraction(-1, 2)), Fraction(7, 2))
    pts = corners(c)
    assert pts[CornerId.E] == Point(Fraction(13, 2), Fraction(-1, 2))
    assert pts[CornerId.N] == Point(3, 3)
    assert pts[CornerId.W] == Point(Fraction(-1, 2), Fraction(-1, 2))
    assert pts[CornerId.S] == Point(3, -4)


def test_locate():
    assert locate(C2, Point(1, 1)) is Location.BOUNDARY
    assert locate(C2, Point(0, 0)) is Location.INSIDE
    assert locate(C2, Point(3, 0)) is Location.OUTSIDE
    assert locate(TaxicabCircle(Point(3, Fraction(-1, 2)), Fraction(7, 2)), Point(0, 0)) is Location.BOUNDARY


def test_radius_must_be_positive():
    with pytest.raises(DegenerateInputError):
        TaxicabCircle(Point(0, 0), 0)


@pytest.mark.parametrize("p, t", [
    ((2, 0), 0),
    ((0, 2), 4),
    ((Fraction(-1, 2), Fraction(3, 2)), 5),
    ((-2, 0), 8),
    ((1, -1), 14),
])
def test_perimeter_param(p, t):
    assert perimeter_param(C2, Point(*p)) == t


def test_perimeter_param_off_boundary():
    with pytest.raises(OffBoundaryError):
        perimeter_param(C2, Point(0, 0))


@pytest.mark.parametrize("t, p", [(0, (2, 0)), (4, (0, 2)), (16, (2, 0)), (-2, (1, -1))])
def test_point_at_param(t, p):
    assert point_at_param(C2, t) == Point(*p)


def test_arc_length_ccw():
    assert arc_length_ccw(C2, Point(2, 0), Point(0, 2)) == 4
    assert arc_length_ccw(C2, Point(0, 2), Point(2, 0)) == 12
    assert arc_length_ccw(C2, Point(1, 1), Point(1, 1)) == 0


def test_edges_at_corner_and_edge():
    assert edges_at(C2, Point(0, 2)) == [EdgeId.NE, EdgeId.NW]
    assert edges_at(C2, Point(1, -1)) == [EdgeId.SE]
    assert EdgeId.NE.corners == (CornerId.N, CornerId.E)


def test_is_contained_in():
    t = Triangle(Point(5, 1), Point(4, -3), Point(0, 0))
    sides = side_constraints(t)
    assert is_contained_in(TaxicabCircle(Point(Fraction(40, 13), Fraction(-11, 13)), Fraction(19, 13)), sides)
    assert not is_contained_in(TaxicabCircle(Point(Fraction(40, 13), Fraction(-11, 13)), Fraction(20, 13)), sides)


@given(strategies.points, strategies.positive_rationals, st.fractions(min_value=0, max_value=1, max_denominator=24))
def test_param_round_trip(center, r, share):
    c = TaxicabCircle(center, r)
    t = share * c.perimeter % c.perimeter
    p = point_at_param(c, t)
    assert taxicab_distance(p, center) == r
    assert perimeter_param(c, p) == t
    assert point_at_param(c, perimeter_param(c, p)) == p


@given(strategies.positive_rationals,
       st.fractions(min_value=0, max_value=8, max_denominator=12),
       st.fractions(min_value=0, max_value=8, max_denominator=12))
def test_arc_lengths_sum_to_perimeter(r, s1, s2):
    c = TaxicabCircle(Point(0, 0), r)
    p1, p2 = point_at_param(c, s1 * r), point_at_param(c, s2 * r)
    assert arc_length_ccw(c, p1, p2) + arc_length_ccw(c, p2, p1) in (0, c.perimeter)
