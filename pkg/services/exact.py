"""
Exact rational arithmetic and primitive planar operations.

Every scalar in the geometry core is a fractions.Fraction; binary floating
point is never constructed here.
"""

from dataclasses import dataclass
from decimal import Decimal
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple, Union

from services.errors import DegenerateInputError, DocumentError, PreconditionError

# the exact scalar type; always in lowest terms with a positive denominator
Rational = Fraction
RationalLike = Union[int, str, Decimal, Fraction]


def parse_rational(value: RationalLike) -> Fraction:
    """
    Convert an int, "p/q" string, decimal string or Decimal to a Fraction.

    Decimal input converts exactly ("0.5" -> 1/2). Floats and booleans are
    refused because their value is already rounded.
    """
    if isinstance(value, bool) or isinstance(value, float):
        raise DocumentError(f"expected an exact number, got {value!r}")
    if isinstance(value, (int, Fraction, Decimal)):
        return Fraction(value)
    if isinstance(value, str):
        text = value.strip()
        try:
            return Fraction(text)
        except (ValueError, ZeroDivisionError):
            raise DocumentError(f"not a rational number: {value!r}")
    raise DocumentError(f"expected a number or string, got {type(value).__name__}")


def format_rational(value: Fraction) -> str:
    """Canonical "p/q" text (integers without the denominator)."""
    return str(Fraction(value))


@dataclass(frozen=True)
class Point:
    x: Fraction
    y: Fraction

    def __post_init__(self):
        object.__setattr__(self, "x", Fraction(self.x))
        object.__setattr__(self, "y", Fraction(self.y))

    def __add__(self, d: "Direction") -> "Point":
        return Point(self.x + d.dx, self.y + d.dy)

    def __sub__(self, other: "Point") -> "Direction":
        return Direction(self.x - other.x, self.y - other.y)

    def offset(self, dx: Fraction, dy: Fraction) -> "Point":
        return Point(self.x + dx, self.y + dy)

    def __repr__(self) -> str:
        return f"Point({self.x}, {self.y})"


@dataclass(frozen=True)
class Direction:
    dx: Fraction
    dy: Fraction

    def __post_init__(self):
        object.__setattr__(self, "dx", Fraction(self.dx))
        object.__setattr__(self, "dy", Fraction(self.dy))
        if self.dx == 0 and self.dy == 0:
            raise DegenerateInputError("zero direction")

    def scaled(self, k: Fraction) -> "Direction":
        return Direction(self.dx * k, self.dy * k)

    def __neg__(self) -> "Direction":
        return Direction(-self.dx, -self.dy)

    def __repr__(self) -> str:
        return f"Direction({self.dx}, {self.dy})"


def taxicab_norm(d: Direction) -> Fraction:
    return abs(d.dx) + abs(d.dy)


def taxicab_distance(p: Point, q: Point) -> Fraction:
    return abs(p.x - q.x) + abs(p.y - q.y)


def unit_point(d: Direction) -> Direction:
    """The direction scaled onto the unit taxicab circle."""
    return d.scaled(1 / taxicab_norm(d))


def cross_pos(d: Direction) -> Fraction:
    """Side of the slope +1 line: zero on it, sign picks the side."""
    return d.dy - d.dx


def cross_neg(d: Direction) -> Fraction:
    """Side of the slope -1 line."""
    return d.dx + d.dy


def cross(d1: Direction, d2: Direction) -> Fraction:
    return d1.dx * d2.dy - d1.dy * d2.dx


def orientation(a: Point, b: Point, c: Point) -> Fraction:
    """Twice the signed area of abc; zero iff collinear."""
    return (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x)


def point_on_segment(p: Point, a: Point, b: Point) -> bool:
    if orientation(a, b, p) != 0:
        return False
    return (min(a.x, b.x) <= p.x <= max(a.x, b.x)
            and min(a.y, b.y) <= p.y <= max(a.y, b.y))


# Symmetry maps. Points and directions are mapped by the same linear part.

def translate(p: Point, dx: Fraction, dy: Fraction) -> Point:
    return Point(p.x + dx, p.y + dy)


def scale(p: Point, k: Fraction) -> Point:
    if k <= 0:
        raise DegenerateInputError("scale factor must be positive")
    return Point(p.x * k, p.y * k)


def swap_xy(p: Point) -> Point:
    return Point(p.y, p.x)


def reflect_x(p: Point) -> Point:
    """(x, y) -> (x, -y)"""
    return Point(p.x, -p.y)


def reflect_y(p: Point) -> Point:
    """(x, y) -> (-x, y)"""
    return Point(-p.x, p.y)


@dataclass(frozen=True)
class LinearPlan:
    """
    Gauss-Jordan reduction of a coefficient matrix, reusable for any
    right-hand side: transform·rows is in reduced row echelon form.
    """
    transform: Tuple[Tuple[Fraction, ...], ...]
    pivot_cols: Tuple[int, ...]
    null_basis: Tuple[Tuple[Fraction, ...], ...]
    n_cols: int

    def solve(self, rhs: Sequence[Fraction]) -> Optional[Tuple[List[Fraction], List[List[Fraction]]]]:
        reduced = [sum((e * b for e, b in zip(row, rhs) if e), Fraction(0)) for row in self.transform]
        rank = len(self.pivot_cols)
        if any(v != 0 for v in reduced[rank:]):
            return None
        solution = [Fraction(0)] * self.n_cols
        for k, col in enumerate(self.pivot_cols):
            solution[col] = reduced[k]
        return solution, [list(v) for v in self.null_basis]


def plan_linear(rows: Sequence[Sequence[Fraction]]) -> LinearPlan:
    """Reduce `rows` once; raises PreconditionError on an empty system."""
    if not rows or not rows[0]:
        raise PreconditionError("empty linear system")
    n_rows, n_cols = len(rows), len(rows[0])
    m = [[Fraction(v) for v in row] + [Fraction(int(i == k)) for k in range(n_rows)]
         for i, row in enumerate(rows)]
    pivot_cols: List[int] = []
    r = 0
    for col in range(n_cols):
        pivot = next((i for i in range(r, n_rows) if m[i][col] != 0), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        lead = m[r][col]
        m[r] = [v / lead for v in m[r]]
        for i in range(n_rows):
            if i != r and m[i][col] != 0:
                factor = m[i][col]
                m[i] = [vi - factor * vr for vi, vr in zip(m[i], m[r])]
        pivot_cols.append(col)
        r += 1
        if r == n_rows:
            break

    basis = []
    for free in range(n_cols):
        if free in pivot_cols:
            continue
        v = [Fraction(0)] * n_cols
        v[free] = Fraction(1)
        for k, col in enumerate(pivot_cols):
            v[col] = -m[k][free]
        basis.append(tuple(v))
    return LinearPlan(
        transform=tuple(tuple(row[n_cols:]) for row in m),
        pivot_cols=tuple(pivot_cols),
        null_basis=tuple(basis),
        n_cols=n_cols,
    )


def solve_linear(
    rows: Sequence[Sequence[Fraction]],
    rhs: Sequence[Fraction],
) -> Optional[Tuple[List[Fraction], List[List[Fraction]]]]:
    """
    Exact Gauss-Jordan elimination.

    Returns (particular_solution, null_space_basis) or None when the system
    is inconsistent. The null-space basis is empty when the solution is
    unique. `rows` must hold at least one non-empty row.
    """
    return plan_linear(rows).solve(rhs)
