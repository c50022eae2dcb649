"""Lines, line discovery, and Jacobian ranks at singular points."""

from __future__ import annotations

import pytest

from delpezzo.catalog import get
from delpezzo.forms import ProjectivePoint
from delpezzo.geometry import Line, find_rational_lines, jacobian_rank_at, point_on_some_line


def test_line_canonical_under_basis_change():
    a = Line.from_points((1, 1, 1, 0, 0), (0, 0, 0, 1, 0))
    b = Line.from_points((0, 0, 0, -2, 0), (3, 3, 3, 0, 0))
    c = Line.from_points((1, 1, 1, 5, 0), (1, 1, 1, -1, 0))
    assert a == b == c
    assert str(a).count(";") == 1


def test_line_rejects_dependent_points():
    with pytest.raises(ValueError):
        Line.from_points((1, 2, 3, 0, 0), (2, 4, 6, 0, 0))


def test_point_on_some_line():
    lines = get("q-v-work").known_lines
    assert point_on_some_line(ProjectivePoint((1, 1, 1, 0, 0)), lines)
    assert point_on_some_line(ProjectivePoint((0, 0, 0, 1, 0)), lines)
    assert not point_on_some_line(ProjectivePoint((1, 4, 2, 2, 2)), lines)


@pytest.mark.parametrize(
    "surface_id, expected",
    [("q-v", 6), ("q-v-work", 6), ("c-cayley", 9), ("c-e6", 1), ("c-3a2", 3), ("c-d4", 6)],
)
def test_find_rational_lines_counts(surface_id, expected):
    record = get(surface_id)
    lines = find_rational_lines(record, 2)
    assert len(lines) == expected
    if record.known_lines:
        assert lines == set(record.known_lines)


def test_jacobian_rank_drops_at_singular_points():
    s3 = get("q-v")
    for coords in ((1, 0, 0, 0, 0), (0, 0, 0, 1, 0), (0, 0, 0, 0, 1)):
        # rank < number of defining equations means a singular point of the
        # 2-dimensional complete intersection
        assert jacobian_rank_at(s3, ProjectivePoint(coords)) < len(s3.equations)
    # a smooth point of the table model (the sigma-image of (1,4,2,2,2)) has full rank
    assert jacobian_rank_at(s3, ProjectivePoint((1, -4, 2, -2, -2))) == 2


def test_jacobian_rank_on_cubics():
    s7 = get("c-e6")
    (sing,) = s7.known_singular_points
    assert jacobian_rank_at(s7, sing) == 0
    cayley = get("c-cayley")
    for sing in cayley.known_singular_points:
        assert jacobian_rank_at(cayley, sing) == 0
