"""Dyadic boxes, the ternary-equation lemma counter, covers, and bounds."""

from __future__ import annotations

import math
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from delpezzo import dyadic
from delpezzo.dyadic import (
    BudgetExceededError,
    DyadicBox,
    TernaryBox,
    box_grid,
    check_box_bound,
    check_ternary_bound,
    count_dyadic_box,
    count_ternary,
    dyadic_cover,
    partition_total,
    ternary_grid,
)
from delpezzo.torsor_s3 import count_torsor, enumerate_torsor


def test_box_validation():
    with pytest.raises(ValueError):
        TernaryBox(1, 1, 0, 1, 1, 1, 1)
    with pytest.raises(ValueError):
        DyadicBox(1, 1, 1, -2, 1, 1, 1, 1, 1)


def test_box_labels_and_denominators():
    t = TernaryBox(1, 2, 1, 1, 1, 1, 3)
    assert t.label() == "1x2x1x1x1x1x3"
    assert t.bound_denominator() == 2  # K1*K2*K3*K4*K5
    d = DyadicBox(1, 2, 3, 4, 5, 6, 7, 8, 9)
    assert d.label() == "1x2x3x4x5x6x7x8x9"
    # Y1*Y13*Y14*Y23*Y24 * min(Y03*Y04, Y33*Y34)
    assert d.bound_denominator() == 1 * 4 * 5 * 6 * 7 * min(2 * 3, 8 * 9)


def _literal_ternary(K: tuple[int, ...]) -> int:
    """Seven nested loops over the literal shells K < |m| <= 2K."""

    def shell(k: int) -> list[int]:
        return [s * a for a in range(k + 1, 2 * k + 1) for s in (1, -1)]

    total = 0
    for m1 in shell(K[0]):
        for m2 in shell(K[1]):
            for m3 in shell(K[2]):
                for m4 in shell(K[3]):
                    for m5 in shell(K[4]):
                        for m6 in shell(K[5]):
                            for m7 in shell(K[6]):
                                if m1 * m2 - m3 * m4 * m5 + m6 * m7 != 0:
                                    continue
                                if math.gcd(m1 * m2, m3 * m4 * m5) != 1:
                                    continue
                                total += 1
    return total


@pytest.mark.parametrize(
    "K, expected",
    [
        ((1, 1, 1, 1, 1, 1, 1), 0),
        ((1, 1, 1, 1, 1, 1, 4), 0),
        ((1, 2, 1, 1, 1, 1, 3), 0),  # frozen
        ((3, 3, 1, 1, 2, 2, 2), 32),  # 5*5 - 2*2*4 - 3*3 = 0 with both sign orbits
        ((2, 2, 1, 1, 2, 3, 3), 32),
    ],
)
def test_count_ternary_frozen_values(K, expected):
    box = TernaryBox(*K)
    assert count_ternary(box, backend="pure") == expected
    assert count_ternary(box, backend="kernel") == expected
    assert _literal_ternary(K) == expected


@settings(max_examples=15, deadline=None)
@given(st.tuples(*[st.integers(1, 3)] * 7))
def test_count_ternary_matches_literal_loops(K):
    box = TernaryBox(*K)
    assert count_ternary(box) == _literal_ternary(K)


def test_coprimality_only_restricts():
    box = TernaryBox(3, 3, 1, 1, 2, 2, 2)
    assert count_ternary(box, require_coprime=False) >= count_ternary(box)


def test_ternary_budget_enforced():
    with pytest.raises(BudgetExceededError):
        count_ternary(TernaryBox(64, 64, 64, 64, 64, 64, 64))
    # explicit budget overrides
    assert count_ternary(TernaryBox(1, 1, 1, 1, 1, 1, 8192), budget=8192) == 0


def test_all_ones_dyadic_box_is_empty():
    # forced by the torsor equation: with every |y| in [1,2) the three
    # monomials cannot cancel within the shells
    assert count_dyadic_box(DyadicBox(1, 1, 1, 1, 1, 1, 1, 1, 1), 4) == 0


def test_shell_minimum_emptiness():
    # (r1)/(r2) in literal form: if the minimal monomial already exceeds B,
    # the box is empty
    box = DyadicBox(4, 4, 4, 4, 4, 4, 4, 4, 4)
    assert count_dyadic_box(box, 10**4) == 0


def _boxed_by_filter(box: DyadicBox, B: int) -> int:
    mins = box.as_tuple()
    total = 0
    for y in enumerate_torsor(B):
        values = y.as_tuple()
        if all(lo <= abs(v) < 2 * lo for v, lo in zip(values, mins)):
            total += 1
    return total


@pytest.mark.parametrize(
    "box",
    [
        DyadicBox(1, 1, 1, 1, 1, 1, 1, 1, 2),
        DyadicBox(1, 2, 1, 1, 1, 2, 1, 1, 1),
        DyadicBox(2, 1, 1, 1, 1, 1, 1, 1, 1),
        DyadicBox(1, 1, 2, 1, 1, 1, 2, 2, 1),
        DyadicBox(1, 4, 1, 1, 1, 1, 4, 1, 1),
    ],
)
def test_count_dyadic_box_matches_filtered_enumeration(box):
    for B in (50, 100):
        assert count_dyadic_box(box, B) == _boxed_by_filter(box, B)


def test_dyadic_cover_is_a_partition():
    # every canonical vector lands in exactly one cover box
    B = 60
    boxes = list(dyadic_cover(B))
    assert len(boxes) == len(set(boxes))
    total = sum(count_dyadic_box(box, B) for box in boxes)
    assert total == count_torsor(B, backend="pure").N


def test_partition_identity_at_100():
    assert partition_total(100) == 3992


def test_dyadic_budget_enforced():
    with pytest.raises(BudgetExceededError):
        count_dyadic_box(DyadicBox(1, 1, 1, 1, 1, 1, 1, 1, 1), 10**5)
    with pytest.raises(BudgetExceededError):
        partition_total(10**5)


def test_box_grid_shape():
    boxes = box_grid()
    assert len(boxes) == 3**9
    assert len(set(boxes)) == 3**9


def test_check_box_bound_frozen_maximum():
    report = check_box_bound(box_grid(), 10**4)
    assert report.max_ratio == Fraction(3)
    assert report.argmax_box.label() == "1x1x1x1x4x1x1x1x4"
    lines = report.to_csv().splitlines()
    assert lines[0] == "box,count,bound_denominator,ratio"
    assert len(lines) == 3**9 + 1


def test_check_ternary_bound_frozen_maximum():
    report = check_ternary_bound(ternary_grid(2**10), budget=2**10)
    assert report.max_ratio == Fraction(6)
    assert report.argmax_box.label() == "2x8x1x1x1x4x4"


def test_trivial_bound_sanity():
    # M with the coprimality condition never exceeds the unconditioned count
    rng = random.Random(5)
    for _ in range(10):
        K = tuple(2 ** rng.randint(0, 2) for _ in range(7))
        box = TernaryBox(*K)
        assert count_ternary(box) <= count_ternary(box, require_coprime=False)


def test_report_rows_are_exact():
    report = check_ternary_bound([TernaryBox(3, 3, 1, 1, 2, 2, 2)], budget=2**10)
    ((box, count, denominator),) = report.rows
    assert count == 32 and denominator == 3 * 3 * 1 * 1 * 2
    assert report.max_ratio == Fraction(32, 18)
