"""Line discovery over Q, line-membership tests, and singular-point verification.

Lines are stored via a canonical 2x(n+1) integer basis matrix: the reduced row
echelon form over Q of any spanning pair, with each row scaled to a primitive
integer vector whose leading entry is positive.  Row reduction over a field
yields a unique matrix per row space, so two Lines are equal iff their
matrices are identical.

Rank computations are exact (fraction arithmetic), so the geometric
predicates here carry no floating-point error.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, TYPE_CHECKING

from delpezzo.forms import ProjectivePoint, evaluate, normalize, restrict_to_line, vec_gcd

if TYPE_CHECKING:  # pragma: no cover - import cycle guard for type checkers only
    from delpezzo.catalog import SurfaceRecord

__all__ = [
    "Line",
    "find_rational_lines",
    "point_on_some_line",
    "jacobian_rank_at",
]


@dataclass(frozen=True)
class Line:
    """A projective line given by a canonical 2x(n+1) integer basis matrix."""

    basis: tuple[tuple[int, ...], tuple[int, ...]]

    def __post_init__(self) -> None:
        r1, r2 = self.basis
        if len(r1) != len(r2):
            raise ValueError("basis rows must have equal length")
        canonical = _canonical_basis(r1, r2)
        if canonical != self.basis:
            raise ValueError(f"basis {self.basis} is not in canonical echelon form; use Line.from_points")

    @classmethod
    def from_points(cls, p: Sequence[int], q: Sequence[int]) -> "Line":
        """Canonicalize the span of two independent integer vectors."""
        return cls(_canonical_basis(tuple(int(c) for c in p), tuple(int(c) for c in q)))

    @property
    def ambient_len(self) -> int:
        return len(self.basis[0])

    def __str__(self) -> str:
        return ";".join(",".join(str(c) for c in row) for row in self.basis)


def _canonical_basis(r1: Sequence[int], r2: Sequence[int]) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Unique representation of a rank-2 row space: RREF over Q, rows primitive, leads positive."""
    rows = [[Fraction(c) for c in r1], [Fraction(c) for c in r2]]
    n = len(rows[0])
    pivot_row = 0
    for col in range(n):
        pivot = next((r for r in range(pivot_row, 2) if rows[r][col] != 0), None)
        if pivot is None:
            continue
        rows[pivot_row], rows[pivot] = rows[pivot], rows[pivot_row]
        lead = rows[pivot_row][col]
        rows[pivot_row] = [v / lead for v in rows[pivot_row]]
        for r in range(2):
            if r != pivot_row and rows[r][col] != 0:
                factor = rows[r][col]
                rows[r] = [v - factor * w for v, w in zip(rows[r], rows[pivot_row])]
        pivot_row += 1
        if pivot_row == 2:
            break
    if pivot_row < 2:
        raise ValueError("spanning vectors are linearly dependent")
    out = []
    for row in rows:
        denominator_lcm = 1
        for v in row:
            denominator_lcm = denominator_lcm * v.denominator // _gcd_int(denominator_lcm, v.denominator)
        ints = [int(v * denominator_lcm) for v in row]
        g = vec_gcd(ints)
        ints = [c // g for c in ints]
        lead = next(c for c in ints if c != 0)
        if lead < 0:
            ints = [-c for c in ints]
        out.append(tuple(ints))
    return (out[0], out[1])


def _gcd_int(a: int, b: int) -> int:
    import math

    return math.gcd(a, b)


def _rank(matrix: Iterable[Sequence[int]]) -> int:
    """Exact rank of an integer matrix via Gauss elimination over Q."""
    rows = [[Fraction(c) for c in row] for row in matrix]
    if not rows:
        return 0
    n = len(rows[0])
    rank = 0
    for col in range(n):
        pivot = next((r for r in range(rank, len(rows)) if rows[r][col] != 0), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        lead = rows[rank][col]
        for r in range(rank + 1, len(rows)):
            if rows[r][col] != 0:
                factor = rows[r][col] / lead
                rows[r] = [v - factor * w for v, w in zip(rows[r], rows[rank])]
        rank += 1
        if rank == len(rows):
            break
    return rank


def find_rational_lines(surface: "SurfaceRecord", coord_bound: int) -> set[Line]:
    """All lines on the surface spanned by two points with coordinates in [-coord_bound, coord_bound].

    A line contained in the surface consists entirely of surface points, so it
    suffices to enumerate unordered pairs of *on-surface* normalized points in
    the search box, certify full containment through ``restrict_to_line``
    (exact: all binary-form coefficients vanish), and deduplicate through the
    canonical echelon form.  The result is a superset-of-truth guarantee only
    up to the search bound, and is monotone non-decreasing in ``coord_bound``.
    """
    if coord_bound < 1:
        raise ValueError("coord_bound must be >= 1")
    n_coords = surface.ambient_dim + 1
    points: list[ProjectivePoint] = []
    seen: set[tuple[int, ...]] = set()
    for raw in itertools.product(range(-coord_bound, coord_bound + 1), repeat=n_coords):
        if all(c == 0 for c in raw):
            continue
        point = normalize(raw)
        if point.coords in seen:
            continue
        seen.add(point.coords)
        if all(evaluate(eq, point.coords) == 0 for eq in surface.equations):
            points.append(point)
    lines: set[Line] = set()
    for i, p in enumerate(points):
        for q in points[i + 1 :]:
            try:
                line = Line.from_points(p.coords, q.coords)
            except ValueError:  # dependent pair spans no line
                continue
            if line in lines:
                continue
            if all(
                all(c == 0 for c in restrict_to_line(eq, p.coords, q.coords))
                for eq in surface.equations
            ):
                lines.add(line)
    return lines


def point_on_some_line(p: ProjectivePoint, lines: Iterable[Line]) -> bool:
    """True iff ``p`` lies in the row span of some line's basis.

    Membership is the exact rank test: stacking ``p`` under the 2x(n+1) basis
    leaves the rank at 2.  Stable under replacing ``p`` by ``normalize(c*p)``
    since scaling does not change the span.
    """
    for line in lines:
        if line.ambient_len != len(p.coords):
            raise ValueError(
                f"dimension mismatch: line in {line.ambient_len} coordinates, point in {len(p.coords)}"
            )
        if _rank([line.basis[0], line.basis[1], p.coords]) == 2:
            return True
    return False


def jacobian_rank_at(surface: "SurfaceRecord", p: ProjectivePoint) -> int:
    """Exact rank of the Jacobian matrix of the defining forms at ``p``.

    The point must lie on the surface (all equations vanish); singular points
    are exactly where this rank drops below the codimension of the surface.
    """
    if len(p.coords) != surface.ambient_dim + 1:
        raise ValueError("dimension mismatch between surface and point")
    for eq in surface.equations:
        if evaluate(eq, p.coords) != 0:
            raise ValueError(f"point {p.coords} does not lie on surface {surface.id}")
    jacobian: list[list[int]] = []
    for eq in surface.equations:
        row = []
        for var in range(eq.num_vars):
            derivative = eq.partial_derivative(var)
            row.append(0 if derivative is None else evaluate(derivative, p.coords))
        jacobian.append(row)
    return _rank(jacobian)
