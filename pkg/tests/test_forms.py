"""Exact integer forms and normalized projective points."""

from __future__ import annotations

import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from delpezzo.forms import (
    IntForm,
    ProjectivePoint,
    evaluate,
    height,
    normalize,
    restrict_to_line,
    vec_gcd,
)

# Q1 of the working model: x0*x1 - x2^2 on P^4.
Q1 = IntForm.from_terms(5, 2, {(1, 1, 0, 0, 0): 1, (0, 0, 2, 0, 0): -1})


def test_vec_gcd():
    assert vec_gcd([6, -10, 15]) == 1
    assert vec_gcd([4, -8, 12]) == 4
    assert vec_gcd([0, 0, 7]) == 7


def test_form_validates_homogeneity():
    with pytest.raises(ValueError):
        IntForm.from_terms(3, 2, {(1, 0, 0): 1})  # degree-1 monomial in a quadric
    with pytest.raises(ValueError):
        IntForm.from_terms(3, 2, {(2, 0): 1})  # wrong arity


def test_evaluate_working_quadric():
    assert evaluate(Q1, (1, 4, 2, 2, 2)) == 0
    assert evaluate(Q1, (1, 4, -2, 2, 1)) == 0
    assert evaluate(Q1, (1, 1, 1, 0, 0)) == 0
    assert evaluate(Q1, (2, 3, 1, 0, 0)) == 5


@given(st.lists(st.integers(-9, 9), min_size=5, max_size=5), st.integers(1, 5))
def test_evaluate_is_homogeneous(vec, scale):
    assert evaluate(Q1, [scale * v for v in vec]) == scale**2 * evaluate(Q1, vec)


def test_partial_derivative():
    d0 = Q1.partial_derivative(0)
    assert d0 is not None and evaluate(d0, (3, 5, 7, 0, 0)) == 5  # d/dx0 = x1
    d2 = Q1.partial_derivative(2)
    assert d2 is not None and evaluate(d2, (3, 5, 7, 0, 0)) == -14  # d/dx2 = -2*x2
    assert Q1.partial_derivative(3) is None  # x3 absent


def test_projective_point_invariants():
    p = ProjectivePoint((1, 4, 2, 2, 2))
    assert height(p) == 4
    with pytest.raises(ValueError):
        ProjectivePoint((2, 4, 6, 0, 0))  # not primitive
    with pytest.raises(ValueError):
        ProjectivePoint((-1, 4, 2, 2, 2))  # first nonzero must be positive
    with pytest.raises(ValueError):
        ProjectivePoint((0, 0, 0, 0, 0))


def test_normalize_examples():
    assert normalize((2, 8, 4, 4, 4)).coords == (1, 4, 2, 2, 2)
    assert normalize((0, -3, 6)).coords == (0, 1, -2)


@given(st.lists(st.integers(-40, 40), min_size=3, max_size=5).filter(lambda v: any(v)))
def test_normalize_idempotent_and_primitive(vec):
    p = normalize(vec)
    assert math.gcd(*p.coords) == 1
    assert next(c for c in p.coords if c != 0) > 0
    assert normalize(p.coords).coords == p.coords


@given(
    st.lists(st.integers(-40, 40), min_size=4, max_size=4).filter(lambda v: any(v)),
    st.integers(1, 7),
)
def test_normalize_scale_invariant(vec, scale):
    assert normalize(vec).coords == normalize([scale * v for v in vec]).coords


def test_restrict_to_line_full_containment_vs_not():
    # x3-axis direction: parametrize (s, s, s, t, 0); Q1 = s^2 - s^2 = 0 identically
    assert restrict_to_line(Q1, (1, 1, 1, 0, 0), (0, 0, 0, 1, 0)) == [0, 0, 0]
    # generic chord is not contained
    assert restrict_to_line(Q1, (1, 1, 1, 0, 0), (1, 0, 0, 0, 0)) != [0, 0, 0]
