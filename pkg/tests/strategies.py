from fractions import Fraction

from hypothesis import assume, strategies as st

from services.exact import Direction, Point, orientation
from services.triangle import Triangle

rationals = st.fractions(min_value=-20, max_value=20, max_denominator=6)
positive_rationals = st.fractions(min_value=Fraction(1, 6), max_value=10, max_denominator=6)
small_ints = st.integers(min_value=-6, max_value=6)

points = st.builds(Point, rationals, rationals)
integer_points = st.builds(Point, small_ints, small_ints)


@st.composite
def directions(draw):
    dx, dy = draw(rationals), draw(rationals)
    assume(dx != 0 or dy != 0)
    return Direction(dx, dy)


def _triangle(draw, pts):
    a, b, c = draw(pts), draw(pts), draw(pts)
    assume(orientation(a, b, c) != 0)
    return Triangle(a, b, c)


@st.composite
def triangles(draw):
    return _triangle(draw, points)


@st.composite
def integer_triangles(draw):
    return _triangle(draw, integer_points)
