from fractions import Fraction

import pytest
from hypothesis import given

from services.angle import InscribedClass
from services.errors import DegenerateInputError
from services.exact import Direction, Point
from services.triangle import (
    SlopeKind,
    Triangle,
    angles,
    classify_triangle,
    has_alternating_labels,
    has_diagonal_side_pair,
    neighbors_negatively_inscribed,
    neighbors_positively_inscribed,
    side_slope_kind,
)

from . import strategies

SP = InscribedClass.STRICTLY_POSITIVE
SN = InscribedClass.STRICTLY_NEGATIVE
CI = InscribedClass.COMPLETELY
NI = InscribedClass.NOT_INSCRIBED


def tri(*pts):
    return Triangle(*(Point(*p) for p in pts))


def test_angles_point_toward_other_vertices():
    a = angles(tri((0, 0), (1, 0), (0, 1)))[0]
    assert (a.d1, a.d2) == (Direction(1, 0), Direction(0, 1))
    b = angles(tri((5, 1), (4, -3), (0, 0)))[1]
    assert (b.d1, b.d2) == (Direction(1, 4), Direction(-4, 3))


def test_degenerate_triangle():
    with pytest.raises(DegenerateInputError, match="degenerate triangle"):
        tri((0, 0), (1, 1), (2, 2))


def test_classify_inscribed_triangle():
    c = classify_triangle(tri((5, 1), (4, -3), (0, 0)))
    assert c.classes == (SN, SP, CI)
    assert c.angle_measures == (Fraction(19, 15), Fraction(54, 35), Fraction(25, 21))
    assert c.is_inscribed
    assert c.completely_count == 1


def test_classify_not_inscribed_triangle():
    c = classify_triangle(tri((0, 0), (6, 0), (3, 2)))
    assert c.classes[2] is NI
    assert not c.is_inscribed


def test_classify_three_completely():
    c = classify_triangle(tri((0, 0), (2, 2), (2, -2)))
    assert c.classes == (CI, CI, CI)
    assert c.completely_count == 3
    assert c.angle_measures == (2, 1, 1)


@pytest.mark.parametrize("pts, expected", [
    (((0, 0), (2, 2), (2, -2)), True),
    (((5, 1), (4, -3), (0, 0)), False),
    (((0, 0), (4, 4), (8, 0)), True),
])
def test_has_diagonal_side_pair(pts, expected):
    assert has_diagonal_side_pair(tri(*pts)) is expected


@pytest.mark.parametrize("d, kind", [
    ((1, 0), SlopeKind.SHALLOW),
    ((0, 1), SlopeKind.STEEP),
    ((2, 2), SlopeKind.DIAGONAL_POS),
    ((-3, 3), SlopeKind.DIAGONAL_NEG),
    ((4, -3), SlopeKind.SHALLOW),
])
def test_side_slope_kind(d, kind):
    assert side_slope_kind(Direction(*d)) is kind


def test_label_predicates():
    assert has_alternating_labels((CI, CI, CI))
    assert has_alternating_labels((SN, SP, CI))
    assert has_alternating_labels((SP, SP, CI))
    assert not has_alternating_labels((SP, SP, SP))
    assert not has_alternating_labels((NI, CI, CI))
    assert neighbors_negatively_inscribed((SP, SN, CI))
    assert not neighbors_negatively_inscribed((SP, SP, CI))
    assert neighbors_positively_inscribed((SN, SP, CI))
    assert not neighbors_positively_inscribed((SN, NI, CI))


@given(strategies.triangles())
def test_angle_sum_is_four(t):
    assert sum(classify_triangle(t).angle_measures) == 4


@given(strategies.triangles())
def test_class_structure_holds(t):
    c = classify_triangle(t)
    assert neighbors_negatively_inscribed(c.classes)
    assert neighbors_positively_inscribed(c.classes)
    assert c.classes.count(SP) <= 1 and c.classes.count(SN) <= 1
    assert (c.completely_count == 3) == has_diagonal_side_pair(t)
    if c.is_inscribed:
        assert c.completely_count >= 1
        assert has_alternating_labels(c.classes)


@given(strategies.triangles())
def test_vertex_order_does_not_change_verdict(t):
    a, b, c = t.vertices
    assert classify_triangle(Triangle(c, a, b)).is_inscribed == classify_triangle(t).is_inscribed
