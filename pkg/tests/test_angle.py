from fractions import Fraction

import pytest
from hypothesis import given

from services.angle import Angle, InscribedClass, classify, corner_sector, is_inscribed, measure
from services.circle import CornerId
from services.errors import DegenerateInputError
from services.exact import Direction, Point, reflect_x, swap_xy

from . import strategies


def _angle(vertex, d1, d2):
    return Angle(Point(*vertex), Direction(*d1), Direction(*d2))


@pytest.mark.parametrize("angle, expected", [
    (_angle((0, 0), (1, 0), (0, 1)), 2),
    (Angle.from_points(Point(-2, 0), Point(2, 0), Point(0, 2)), 1),
    (_angle((4, -3), (1, 4), (-4, 3)), Fraction(54, 35)),
])
def test_measure(angle, expected):
    assert measure(angle) == expected


@pytest.mark.parametrize("angle, expected", [
    (_angle((0, 0), (1, 0), (0, 1)), InscribedClass.STRICTLY_NEGATIVE),
    (_angle((5, 1), (-5, -1), (-1, -4)), InscribedClass.STRICTLY_NEGATIVE),
    (_angle((0, 0), (5, 1), (4, -3)), InscribedClass.COMPLETELY),
    (_angle((0, 0), (1, 0), (0, -1)), InscribedClass.STRICTLY_POSITIVE),
    (_angle((3, 2), (-3, -2), (3, -2)), InscribedClass.NOT_INSCRIBED),
])
def test_classify(angle, expected):
    assert classify(angle) is expected
    assert is_inscribed(classify(angle)) == (expected is not InscribedClass.NOT_INSCRIBED)


def test_ray_on_diagonal_counts_as_outside():
    # the ray (1, 1) lies on the slope +1 line through the vertex
    assert classify(_angle((0, 0), (1, 1), (1, -1))) is InscribedClass.COMPLETELY


@pytest.mark.parametrize("d1, d2", [((1, 0), (2, 0)), ((1, 1), (-1, -1))])
def test_collinear_rays_rejected(d1, d2):
    with pytest.raises(DegenerateInputError):
        _angle((0, 0), d1, d2)


def test_mirrored_classes():
    assert InscribedClass.STRICTLY_POSITIVE.mirrored is InscribedClass.STRICTLY_NEGATIVE
    assert InscribedClass.COMPLETELY.mirrored is InscribedClass.COMPLETELY
    assert InscribedClass.NOT_INSCRIBED.mirrored is InscribedClass.NOT_INSCRIBED


def test_corner_sector():
    assert corner_sector(Direction(5, 1)) == {CornerId.E}
    assert corner_sector(Direction(1, 1)) == {CornerId.E, CornerId.N}
    assert corner_sector(Direction(-1, -4)) == {CornerId.S}


def _valid_angle(vertex, d1, d2):
    try:
        return Angle(vertex, d1, d2)
    except DegenerateInputError:
        return None


@given(strategies.points, strategies.directions(), strategies.directions())
def test_measure_range_and_symmetries(vertex, d1, d2):
    a = _valid_angle(vertex, d1, d2)
    if a is None:
        return
    m = measure(a)
    assert 0 < m < 4

    swapped = Angle(swap_xy(vertex), Direction(d1.dy, d1.dx), Direction(d2.dy, d2.dx))
    reflected = Angle(reflect_x(vertex), Direction(d1.dx, -d1.dy), Direction(d2.dx, -d2.dy))
    moved = Angle(vertex.offset(3, -7), d1, d2)
    scaled = Angle(vertex, d1.scaled(Fraction(5, 2)), d2.scaled(Fraction(1, 3)))
    assert measure(swapped) == m
    assert measure(reflected) == m
    assert measure(moved) == m
    assert measure(scaled) == m

    cls = classify(a)
    assert classify(swapped) is cls
    assert classify(moved) is cls
    assert classify(scaled) is cls
    assert classify(reflected) is cls.mirrored


@given(strategies.points, strategies.directions(), strategies.directions())
def test_common_corner_sector_is_completely_inscribed(vertex, d1, d2):
    a = _valid_angle(vertex, d1, d2)
    if a is None or not (corner_sector(d1) & corner_sector(d2)):
        return
    assert classify(a) is InscribedClass.COMPLETELY
