"""Universal-torsor parametrization: bijection, round-trips, counting."""

from __future__ import annotations

import pytest

from delpezzo import counting
from delpezzo.forms import ProjectivePoint
from delpezzo.torsor_s3 import (
    TorsorVector,
    count_torsor,
    enumerate_torsor,
    is_canonical,
    lift_to_torsor,
    psi,
    torsor_to_point,
)

ONES = dict(y1=1, y03=1, y04=1, y13=1, y14=1, y23=1, y24=1, y33=1, y34=1)


def vec(**overrides) -> TorsorVector:
    fields = dict(ONES)
    fields.update(overrides)
    return TorsorVector(**fields)


def test_torsor_equation_enforced():
    # y03*y04 - y1*y13*y14 + y33*y34 = 0 is a type invariant
    with pytest.raises(ValueError):
        vec(y33=2)  # 1 - 1 + 2 != 0
    assert vec(y1=2).as_tuple() == (2, 1, 1, 1, 1, 1, 1, 1, 1)  # 1 - 2 + 1 = 0


def test_positivity_and_nonzero_enforced():
    # y33*y34 = -2 keeps the torsor equation satisfied, so only the
    # positivity of y1 is at fault here
    with pytest.raises(ValueError):
        vec(y1=-1, y33=2, y34=-1)
    with pytest.raises(ValueError):
        vec(y1=2, y23=0)  # 1 - 2 + 1 = 0, so only the zero is at fault


def test_literal_coprimality_enforced():
    # 2 - 4 + 2 = 0 satisfies the torsor equation, but
    # hcf(y03*y04, y13*y14) = hcf(2, 4) = 2 violates the literal conditions
    with pytest.raises(ValueError):
        vec(y03=2, y13=2, y14=2, y33=2)


def test_psi_examples():
    # note there is no all-ones torsor vector: 1 - 1 + 1 != 0
    assert psi(vec(y1=2)) == 4
    assert psi(vec(y03=2, y34=-1)) == 4


def test_torsor_to_point_examples():
    assert torsor_to_point(vec(y1=2)).coords == (1, 4, 2, 2, 2)
    # the spec displays (4, 1, 2, 2, -2) for y03 = 2, but the torsor equation
    # forces y33*y34 = y1*y13*y14 - y03*y04 = -1, hence x4 = y34 = -1 and the
    # image is (4, 1, 2, 2, -1); recorded in the decision ledger.
    assert torsor_to_point(vec(y03=2, y34=-1)).coords == (4, 1, 2, 2, -1)


def test_lift_example():
    y = lift_to_torsor(ProjectivePoint((1, 4, 2, 2, 2)))
    assert y == vec(y1=2)
    assert y.as_tuple() == (2, 1, 1, 1, 1, 1, 1, 1, 1)


def test_lift_rejects_off_surface_and_line_points():
    with pytest.raises(ValueError):
        lift_to_torsor(ProjectivePoint((1, 1, 1, 1, 1)))  # not on the surface
    with pytest.raises(ValueError):
        lift_to_torsor(ProjectivePoint((1, 1, 1, 0, 0)))  # on a line (x3 = x4 = 0)


def test_literal_conditions_overcount():
    # This vector satisfies every literal side condition of the survey's
    # parametrization display yet is NOT canonical: its monomial image
    # (8, 2, 4, 4, -2) has content 2, so the literal set over-counts and the
    # canonical set adds pairwise coprimality.  (Decision ledger.)
    y = TorsorVector(y1=1, y03=1, y04=2, y13=1, y14=1, y23=2, y24=1, y33=1, y34=-1)
    assert not is_canonical(y)
    assert torsor_to_point(y).coords == (4, 1, 2, 2, -1)  # content stripped
    assert lift_to_torsor(torsor_to_point(y)) == vec(y03=2, y34=-1) != y


def test_enumeration_is_canonical_and_bounded():
    vectors = list(enumerate_torsor(25))
    assert len(vectors) == 494
    assert all(is_canonical(y) and psi(y) <= 25 for y in vectors)
    assert len(set(vectors)) == len(vectors)


def test_round_trip_torsor_to_point_to_torsor():
    for y in enumerate_torsor(40):
        assert lift_to_torsor(torsor_to_point(y)) == y


def test_round_trip_point_to_torsor_to_point(s3_work):
    points = counting.brute_points(s3_work, 40)
    assert len(points) == 796
    for p in points:
        y = lift_to_torsor(p)
        assert psi(y) <= 40
        assert torsor_to_point(y).coords == p.coords


@pytest.mark.parametrize("B", [1, 2, 3, 4, 8, 10, 16, 25, 40, 60])
def test_count_torsor_matches_brute(s3_work, B):
    assert count_torsor(B, backend="pure").N == counting.count_brute(s3_work, B).N


@pytest.mark.parametrize("B", [100, 200])
def test_count_torsor_matches_divisor_oracle(B):
    assert count_torsor(B).N == counting.count_divisor_oracle_s3(B).N


def test_kernel_and_pure_backends_agree():
    for B in (40, 100, 1000):
        assert count_torsor(B, backend="kernel").N == count_torsor(B, backend="pure").N


def test_thread_counts_agree():
    expected = count_torsor(1000, threads=1).N
    assert expected == 96238
    for threads in (4, 8):
        assert count_torsor(1000, threads=threads).N == expected
    assert count_torsor(200, threads=4, backend="pure").N == 10472


def test_count_result_metadata():
    result = count_torsor(100)
    assert result.N == 3992
    assert result.surface_id == "q-v-work"
    assert result.method is counting.Method.TORSOR
    row = result.csv_row()
    assert row.startswith("q-v-work,torsor,100,3992,")
