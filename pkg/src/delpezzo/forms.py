"""Exact arithmetic on homogeneous integer forms and normalized projective points.

This module houses the quadrics Q1, Q2 defining the degree-4 surfaces and the
cubic forms C of the degree-3 surfaces, together with the primitive
sign-normalized integer vectors that represent rational projective points.

All arithmetic is exact: Python integers never overflow, so any intermediate
width is handled without rounding or wrapping.  Every type here is immutable
after construction and every operation is pure, so values can be shared freely
across threads.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

__all__ = [
    "IntForm",
    "ProjectivePoint",
    "evaluate",
    "normalize",
    "height",
    "restrict_to_line",
]


def vec_gcd(values: Iterable[int]) -> int:
    """Non-negative gcd of an integer iterable (0 for an empty/zero input)."""
    g = 0
    for v in values:
        g = math.gcd(g, v)
        if g == 1:
            return 1
    return g


@dataclass(frozen=True)
class IntForm:
    """A homogeneous integer polynomial, stored sparsely.

    ``terms`` maps exponent vectors (tuples of length ``num_vars`` whose
    entries sum to ``degree``) to nonzero integer coefficients.  The catalog's
    forms have at most seven terms, so sparse storage matches the data.
    """

    num_vars: int
    degree: int
    terms: tuple[tuple[tuple[int, ...], int], ...]

    def __post_init__(self) -> None:
        if self.num_vars <= 0:
            raise ValueError(f"num_vars must be positive, got {self.num_vars}")
        if self.degree <= 0:
            raise ValueError(f"degree must be positive, got {self.degree}")
        seen: set[tuple[int, ...]] = set()
        for exponents, coefficient in self.terms:
            if len(exponents) != self.num_vars:
                raise ValueError(f"exponent vector {exponents} has length != {self.num_vars}")
            if any(e < 0 for e in exponents):
                raise ValueError(f"negative exponent in {exponents}")
            if sum(exponents) != self.degree:
                raise ValueError(f"exponent vector {exponents} does not sum to degree {self.degree}")
            if coefficient == 0:
                raise ValueError(f"zero coefficient stored for {exponents}")
            if exponents in seen:
                raise ValueError(f"duplicate exponent vector {exponents}")
            seen.add(exponents)

    @classmethod
    def from_terms(cls, num_vars: int, degree: int, terms: Mapping[Sequence[int], int]) -> "IntForm":
        """Build a form from a mapping, dropping zero coefficients and fixing term order."""
        cleaned = tuple(
            sorted(
                ((tuple(exponents), coefficient) for exponents, coefficient in terms.items() if coefficient != 0),
                key=lambda item: item[0],
                reverse=True,
            )
        )
        return cls(num_vars=num_vars, degree=degree, terms=cleaned)

    def partial_derivative(self, var: int) -> "IntForm | None":
        """Formal partial derivative with respect to variable ``var``.

        Returns ``None`` when the derivative is identically zero (the zero
        polynomial is not representable as an :class:`IntForm`).
        """
        if not 0 <= var < self.num_vars:
            raise ValueError(f"variable index {var} out of range")
        derived: dict[tuple[int, ...], int] = {}
        for exponents, coefficient in self.terms:
            e = exponents[var]
            if e == 0:
                continue
            lowered = exponents[:var] + (e - 1,) + exponents[var + 1 :]
            derived[lowered] = derived.get(lowered, 0) + coefficient * e
        derived = {k: v for k, v in derived.items() if v != 0}
        if not derived:
            return None
        return IntForm.from_terms(self.num_vars, self.degree - 1, derived)

    def __str__(self) -> str:
        parts = []
        for exponents, coefficient in self.terms:
            monomial = "*".join(
                (f"x{i}" if e == 1 else f"x{i}^{e}") for i, e in enumerate(exponents) if e > 0
            )
            parts.append(f"{coefficient:+d}*{monomial}" if monomial else f"{coefficient:+d}")
        return " ".join(parts) if parts else "0"


@dataclass(frozen=True)
class ProjectivePoint:
    """A primitive, sign-normalized integer vector representing a point of P^n(Q).

    Invariants: coordinates not all zero, gcd of the coordinates equal to 1,
    and the first nonzero coordinate positive (the surveys quotient only by
    +-1: x and -x represent the same point, so one sign is fixed for a
    canonical hashing/dedup key).
    """

    coords: tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.coords or all(c == 0 for c in self.coords):
            raise ValueError("projective point must have a nonzero coordinate")
        if vec_gcd(self.coords) != 1:
            raise ValueError(f"coordinates {self.coords} are not primitive")
        first = next(c for c in self.coords if c != 0)
        if first < 0:
            raise ValueError(f"coordinates {self.coords} are not sign-normalized")

    def __len__(self) -> int:
        return len(self.coords)


def evaluate(form: IntForm, point: Sequence[int]) -> int:
    """Exact value of ``form`` at an integer vector (no rounding, no overflow)."""
    if len(point) != form.num_vars:
        raise ValueError(f"dimension mismatch: form has {form.num_vars} variables, point has {len(point)}")
    total = 0
    for exponents, coefficient in form.terms:
        term = coefficient
        for value, e in zip(point, exponents):
            if e:
                if value == 0:
                    term = 0
                    break
                term *= value**e
        total += term
    return total


def normalize(v: Sequence[int]) -> ProjectivePoint:
    """Divide by the gcd and flip sign so the first nonzero coordinate is positive.

    Idempotent: ``normalize(normalize(v).coords)`` equals ``normalize(v)``.
    Raises ``ValueError`` on the zero vector.
    """
    coords = tuple(int(c) for c in v)
    if not coords or all(c == 0 for c in coords):
        raise ValueError("cannot normalize the zero vector")
    g = vec_gcd(coords)
    coords = tuple(c // g for c in coords)
    first = next(c for c in coords if c != 0)
    if first < 0:
        coords = tuple(-c for c in coords)
    return ProjectivePoint(coords)


def height(p: ProjectivePoint) -> int:
    """The anticanonical height: maximum absolute coordinate of the primitive representative."""
    return max(abs(c) for c in p.coords)


def restrict_to_line(form: IntForm, p: Sequence[int], q: Sequence[int]) -> list[int]:
    """Coefficients of ``form(s*p + t*q)`` as a binary form in (s, t).

    The returned list has length ``degree + 1``; entry ``i`` is the exact
    integer coefficient of ``s**(degree-i) * t**i``.  The form vanishes on the
    whole line through ``p`` and ``q`` iff every returned coefficient is zero.

    Raises ``ValueError`` when the inputs have the wrong length or are
    linearly dependent.
    """
    if len(p) != form.num_vars or len(q) != form.num_vars:
        raise ValueError("dimension mismatch between form and spanning points")
    if _dependent(p, q):
        raise ValueError("spanning points are linearly dependent")
    degree = form.degree
    # result[k] accumulates the coefficient of s^k t^(degree-k).
    result = [0] * (degree + 1)
    for exponents, coefficient in form.terms:
        # Expand prod_i (p_i s + q_i t)^{e_i} as a binary form, by convolution.
        factor = [coefficient]  # binary form of degree 0
        for pi, qi, e in zip(p, q, exponents):
            if e == 0:
                continue
            base = [math.comb(e, k) * pi**k * qi ** (e - k) for k in range(e + 1)]
            factor = _convolve(factor, base)
        for k, c in enumerate(factor):
            result[k] += c
    result.reverse()  # descending powers of s
    return result


def _convolve(a: list[int], b: list[int]) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai == 0:
            continue
        for j, bj in enumerate(b):
            out[i + j] += ai * bj
    return out


def _dependent(p: Sequence[int], q: Sequence[int]) -> bool:
    """True iff integer vectors p, q are linearly dependent (all 2x2 minors vanish)."""
    if all(c == 0 for c in p) or all(c == 0 for c in q):
        return True
    n = len(p)
    for i in range(n):
        for j in range(i + 1, n):
            if p[i] * q[j] - p[j] * q[i] != 0:
                return False
    return True
