"""The survey's universal-torsor parametrization of S3 (working model ``q-v-work``).

The torsor sits in A^9 with coordinates (in field order)
``y1, y03, y04, y13, y14, y23, y24, y33, y34`` subject to the torsor equation

    (ut)      y03·y04 − y1·y13·y14 + y33·y34 = 0

and coprimality side conditions.  The monomial map to the surface is

    x0 = y03²·y04²·y23·y24          x1 = y1²·y13²·y14²·y23·y24
    x2 = y1·y03·y04·y13·y14·y23·y24
    x3 = y1·y03·y13²·y23²·y33       x4 = y1·y04·y14²·y24²·y34

and Ψ(y) = max(|x0|, |x1|, |x3|, |x4|) is the height pulled back to the
torsor, so that N_{U3,H}(B) = #{y ∈ T : Ψ(y) ≤ B} (Lemma base).

The canonical set T.  The survey states the conditions

    (polo-3)  hcf(y13·y14·y23·y24, y13·y23·y33, y14·y24·y34) = 1
    (polo-4)  hcf(y03·y04, y13·y14) = hcf(y1, y03·y04·y23·y24) = 1

with y1, y13, y14, y23, y24 > 0.  Read literally these do NOT cut out a
fundamental domain for the bijection: the vector
y = (1, 1, 2, 1, 1, 2, 1, 1, −1) satisfies every literal condition yet maps to
the non-primitive vector (8, 2, 4, 4, −2), and the sign involution
(y03, y04, y33, y34) → (−y03, −y04, −y33, −y34) preserves the literal
conditions while fixing the image point (at B = 8 the literal set has 100
elements versus the true count 42).  The canonical set used here sharpens the
conditions to the pairwise system

    gcd(y13·y23, y14·y24) = gcd(y13·y23, y34) = gcd(y14·y24, y33) = 1
    gcd(y03·y04, y13·y14) = 1 pairwise, gcd(y1, y03·y04·y23·y24) = 1 pairwise
    gcd(y03, y24) = gcd(y04, y23) = 1,  and  y03 > 0,

which implies the literal conditions, and under which the monomial map is an
exact bijection onto the counted points (verified exhaustively in tests:
torsor = brute force for all B ≤ 60 and 796/796 round-trips at B = 40).  This
matches the survey's own derivation, where y03 arises as a gcd (hence > 0)
and the variable pairs split coprime factorizations.  The residual sign
freedom lands on y04 (sign of z0 = y03·y04, i.e. of x2) and on y33 (divisor
sign in y33·y34 = y1·y13·y14 − y03·y04).
"""

from __future__ import annotations

import math
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Iterator, Sequence

from delpezzo.counting import CountResult, Method
from delpezzo.forms import ProjectivePoint

__all__ = [
    "TorsorVector",
    "count_torsor",
    "enumerate_torsor",
    "is_canonical",
    "lift_to_torsor",
    "psi",
    "torsor_to_point",
]

_KERNEL_B_MAX = 10**9  # int64 intermediates validated safe up to this height


@dataclass(frozen=True)
class TorsorVector:
    """A point of the torsor: nonzero integers satisfying (ut), (polo-3), (polo-4)."""

    y1: int
    y03: int
    y04: int
    y13: int
    y14: int
    y23: int
    y24: int
    y33: int
    y34: int

    def __post_init__(self) -> None:
        if any(value == 0 for value in self.as_tuple()):
            raise ValueError("torsor coordinates must be nonzero")
        if min(self.y1, self.y13, self.y14, self.y23, self.y24) < 1:
            raise ValueError("y1, y13, y14, y23, y24 must be positive")
        if self.y03 * self.y04 - self.y1 * self.y13 * self.y14 + self.y33 * self.y34 != 0:
            raise ValueError("torsor equation (ut) violated")
        if math.gcd(self.y13 * self.y14 * self.y23 * self.y24,
                    self.y13 * self.y23 * self.y33,
                    self.y14 * self.y24 * self.y34) != 1:
            raise ValueError("coprimality (polo-3) violated")
        if math.gcd(self.y03 * self.y04, self.y13 * self.y14) != 1:
            raise ValueError("coprimality (polo-4) violated")
        if math.gcd(self.y1, self.y03 * self.y04 * self.y23 * self.y24) != 1:
            raise ValueError("coprimality (polo-4) violated")

    def as_tuple(self) -> tuple[int, int, int, int, int, int, int, int, int]:
        return (self.y1, self.y03, self.y04, self.y13, self.y14,
                self.y23, self.y24, self.y33, self.y34)


def _monomials(y: TorsorVector) -> tuple[int, int, int, int, int]:
    y1, y03, y04, y13, y14, y23, y24, y33, y34 = y.as_tuple()
    z = y23 * y24
    x0 = y03 * y03 * y04 * y04 * z
    x1 = y1 * y1 * y13 * y13 * y14 * y14 * z
    x2 = y1 * y03 * y04 * y13 * y14 * z
    x3 = y1 * y03 * y13 * y13 * y23 * y23 * y33
    x4 = y1 * y04 * y14 * y14 * y24 * y24 * y34
    return x0, x1, x2, x3, x4


def psi(y: TorsorVector) -> int:
    """Ψ(y): max of the four monomial magnitudes |x0|, |x1|, |x3|, |x4|.

    Arbitrary-precision integers — no silent overflow is possible.
    """
    x0, x1, _, x3, x4 = _monomials(y)
    return max(abs(x0), abs(x1), abs(x3), abs(x4))


def is_canonical(y: TorsorVector) -> bool:
    """Membership in the canonical set T (the sharpened conditions, see module docstring)."""
    y1, y03, y04, y13, y14, y23, y24, y33, y34 = y.as_tuple()
    if y03 < 1:
        return False
    gcd = math.gcd
    pairs = (
        (y13, y14), (y13, y24), (y14, y23), (y23, y24),
        (y13, y34), (y23, y34), (y14, y33), (y24, y33),
        (y03, y13), (y03, y14), (y04, y13), (y04, y14),
        (y1, y03), (y1, y04), (y1, y23), (y1, y24),
        (y03, y24), (y04, y23),
    )
    return all(gcd(a, b) == 1 for a, b in pairs)


def torsor_to_point(y: TorsorVector) -> ProjectivePoint:
    """The surface point (x0 : x1 : x2 : x3 : x4) on q-v-work via the five monomials.

    For canonical y the raw vector is already primitive with x0 > 0; the
    result is normalized defensively either way.
    """
    vec = _monomials(y)
    g = math.gcd(*vec)
    first = next(c for c in vec if c != 0)
    if first < 0:
        g = -g
    return ProjectivePoint(tuple(c // g for c in vec))


def _shared_part(n: int, m: int) -> int:
    """The largest divisor of |n| supported on the primes of |m| (1 if coprime)."""
    n, m = abs(n), abs(m)
    out = 1
    g = math.gcd(n, m)
    while g > 1:
        n //= g
        out *= g
        g = math.gcd(n, g)
    return out


def _exact_div(numerator: int, denominator: int, what: str) -> int:
    quotient, remainder = divmod(numerator, denominator)
    if remainder != 0:
        raise ValueError(f"lift_to_torsor: {what} is not an exact division; point not liftable")
    return quotient


def lift_to_torsor(p: ProjectivePoint) -> TorsorVector:
    """The unique canonical y with torsor_to_point(y) = p, by the survey's gcd chain.

    Preconditions: p lies on S3's working model, x0, x1 > 0, x2·x3·x4 ≠ 0
    (equivalently: p is off the six lines).  The chain follows §3.1 of the
    survey: z2 = hcf(x0, x1); x0 = z0²·z2, x1 = z1²·z2 with z1, z2 > 0 and
    sign(z0) = sign(x2); y1 = hcf(z1, x3, x4); z1 = y1·y1', x3 = y1·y3',
    x4 = y1·y4'; z0 = y03·y04 with y03 = hcf(z0, y3') > 0; y3' = y03·y3,
    y4' = y04·y4; y1' = y13·y14 and z2 = y23·y24 split by shared prime
    support with y3; finally y3 = y13²·y23²·y33 and y4 = y14²·y24²·y34.
    """
    x0, x1, x2, x3, x4 = p.coords
    if x0 <= 0 or x1 <= 0:
        raise ValueError("lift_to_torsor requires x0, x1 > 0 (point off the lines, normalized)")
    if x2 == 0 or x3 == 0 or x4 == 0:
        raise ValueError("lift_to_torsor: point lies on a line of S3 (some of x2, x3, x4 vanish)")
    if x0 * x1 != x2 * x2 or x2 * x2 - x1 * x2 + x3 * x4 != 0:
        raise ValueError("lift_to_torsor: point is not on S3's working model")

    z2 = math.gcd(x0, x1)
    z0_abs = math.isqrt(x0 // z2)
    z1 = math.isqrt(x1 // z2)
    if z0_abs * z0_abs * z2 != x0 or z1 * z1 * z2 != x1:
        raise ValueError("lift_to_torsor: x0/hcf, x1/hcf are not perfect squares; not liftable")
    z0 = z0_abs if x2 > 0 else -z0_abs

    y1 = math.gcd(z1, math.gcd(abs(x3), abs(x4)))
    y1p = z1 // y1
    y3p = _exact_div(x3, y1, "x3 = y1*y3'")
    y4p = _exact_div(x4, y1, "x4 = y1*y4'")

    y03 = math.gcd(abs(z0), abs(y3p))
    y04 = _exact_div(z0, y03, "z0 = y03*y04")
    y3 = _exact_div(y3p, y03, "y3' = y03*y3")
    y4 = _exact_div(y4p, y04, "y4' = y04*y4")

    y13 = _shared_part(y1p, y3)
    y14 = y1p // y13
    y23 = _shared_part(z2, y3)
    y24 = z2 // y23

    y33 = _exact_div(y3, y13 * y13 * y23 * y23, "y3 = y13²*y23²*y33")
    y34 = _exact_div(y4, y14 * y14 * y24 * y24, "y4 = y14²*y24²*y34")

    y = TorsorVector(y1, y03, y04, y13, y14, y23, y24, y33, y34)
    if not is_canonical(y):
        raise ValueError(f"lift_to_torsor: lifted vector {y.as_tuple()} is not canonical")
    if torsor_to_point(y) != p:
        raise ValueError("lift_to_torsor: round-trip failed; point not in the parametrized set")
    return y


# --------------------------------------------------------------------------
# Enumeration of {y ∈ T : Ψ(y) ≤ B}.
#
# Loop order (a design decision; the survey specifies the set, not an order):
# y1, y13, y14 bound by y1·y13·y14 ≤ √B (second monomial with y23 = y24 = 1);
# y03 and |y04| bound by |y03·y04| ≤ √B (first monomial) and by the third and
# fourth monomials with unit minima; D = y1·y13·y14 − y03·y04 ≠ 0 eliminates
# the torsor equation; |y33| runs over divisors of |D| (both signs, cofactor
# |y34| = |D|/|y33|); finally y23, y24 within the remaining monomial bounds,
# coprimality checked via the pairwise system.
# --------------------------------------------------------------------------


def _iter_canonical(B: int) -> Iterator[tuple[int, int, int, int, int, int, int, int, int]]:
    gcd = math.gcd
    isqrt = math.isqrt
    isq = isqrt(B)
    for y1 in range(1, isq + 1):
        for y13 in range(1, isq // y1 + 1):
            y13sq = y13 * y13
            for y14 in range(1, isq // (y1 * y13) + 1):
                if gcd(y13, y14) != 1:
                    continue
                P = y1 * y13 * y14
                P2 = P * P
                y14sq = y14 * y14
                y1314 = y13 * y14
                for y03 in range(1, min(B // (y1 * y13sq), isq) + 1):
                    if gcd(y03, y1314) != 1 or gcd(y1, y03) != 1:
                        continue
                    c3base = y1 * y03 * y13sq
                    dmax3 = B // c3base
                    for a04 in range(1, min(isq // y03, B // (y1 * y14sq)) + 1):
                        if gcd(a04, y1314) != 1 or gcd(y1, a04) != 1:
                            continue
                        c4base = y1 * a04 * y14sq
                        dmax4 = B // c4base
                        q_abs = y03 * a04
                        R = B // max(P2, q_abs * q_abs)
                        for s04 in (1, -1):
                            D = P - s04 * q_abs
                            if D == 0:
                                continue
                            aD = abs(D)
                            for d in _divisor_list(aD):
                                if d > dmax3:
                                    continue
                                a34 = aD // d
                                if a34 > dmax4:
                                    continue
                                if gcd(y14, d) != 1 or gcd(y13, a34) != 1:
                                    continue
                                k23 = y1 * y14 * a34 * a04
                                k24 = y1 * y13 * d * y03
                                y23max = min(isqrt(B // (c3base * d)), R)
                                y24cap = isqrt(B // (c4base * a34))
                                for y23 in range(1, y23max + 1):
                                    if gcd(y23, k23) != 1:
                                        continue
                                    for y24 in range(1, min(R // y23, y24cap) + 1):
                                        if gcd(y24, k24) != 1 or gcd(y24, y23) != 1:
                                            continue
                                        for y33 in (d, -d):
                                            yield (y1, y03, s04 * a04, y13, y14,
                                                   y23, y24, y33, D // y33)


def _divisor_list(n: int) -> list[int]:
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    small.extend(reversed(large))
    return small


def enumerate_torsor(B: int) -> Iterator[TorsorVector]:
    """All y ∈ T with Ψ(y) ≤ B, each exactly once, in deterministic order.

    Every yielded vector is constructed through :class:`TorsorVector` (which
    asserts (ut), (polo-3), (polo-4) and positivity) and additionally asserted
    canonical with Ψ ≤ B.  Intended for tests and small B; counting at scale
    goes through :func:`count_torsor`.
    """
    if B < 1:
        raise ValueError("B must be positive")
    for raw in _iter_canonical(B):
        y = TorsorVector(*raw)
        if not is_canonical(y):
            raise AssertionError(f"enumeration produced a non-canonical vector {raw}")
        if psi(y) > B:
            raise AssertionError(f"enumeration produced Ψ > B at {raw}")
        yield y


def _count_pure(B: int, pairs: Sequence[tuple[int, int]] | None = None) -> int:
    """Exact pure-Python count; ``pairs`` restricts the outer (y1, y13) grid."""
    gcd = math.gcd
    isqrt = math.isqrt
    isq = isqrt(B)
    if pairs is None:
        pairs = [(y1, y13) for y1 in range(1, isq + 1) for y13 in range(1, isq // y1 + 1)]
    total = 0
    for y1, y13 in pairs:
        y13sq = y13 * y13
        for y14 in range(1, isq // (y1 * y13) + 1):
            if gcd(y13, y14) != 1:
                continue
            P = y1 * y13 * y14
            P2 = P * P
            y14sq = y14 * y14
            y1314 = y13 * y14
            for y03 in range(1, min(B // (y1 * y13sq), isq) + 1):
                if gcd(y03, y1314) != 1 or gcd(y1, y03) != 1:
                    continue
                c3base = y1 * y03 * y13sq
                dmax3 = B // c3base
                for a04 in range(1, min(isq // y03, B // (y1 * y14sq)) + 1):
                    if gcd(a04, y1314) != 1 or gcd(y1, a04) != 1:
                        continue
                    c4base = y1 * a04 * y14sq
                    dmax4 = B // c4base
                    q_abs = y03 * a04
                    R = B // max(P2, q_abs * q_abs)
                    for s04 in (1, -1):
                        D = P - s04 * q_abs
                        if D == 0:
                            continue
                        aD = abs(D)
                        for d in _divisor_list(aD):
                            if d > dmax3:
                                continue
                            a34 = aD // d
                            if a34 > dmax4:
                                continue
                            if gcd(y14, d) != 1 or gcd(y13, a34) != 1:
                                continue
                            k23 = y1 * y14 * a34 * a04
                            k24 = y1 * y13 * d * y03
                            y23max = min(isqrt(B // (c3base * d)), R)
                            y24cap = isqrt(B // (c4base * a34))
                            sub = 0
                            for y23 in range(1, y23max + 1):
                                if gcd(y23, k23) != 1:
                                    continue
                                for y24 in range(1, min(R // y23, y24cap) + 1):
                                    if gcd(y24, k24) != 1 or gcd(y24, y23) != 1:
                                        continue
                                    sub += 1
                            total += 2 * sub  # y33 = ±d
    return total


def _outer_pairs(B: int) -> list[tuple[int, int]]:
    isq = math.isqrt(B)
    return [(y1, y13) for y1 in range(1, isq + 1) for y13 in range(1, isq // y1 + 1)]


def count_torsor(B: int, *, threads: int | None = None, backend: str = "auto") -> CountResult:
    """Exact #{y ∈ T : Ψ(y) ≤ B} = N_{U3,H}(B) (Lemma base).

    ``backend``: "auto" uses the compiled integer kernel when available and
    B ≤ 10⁹ (the validated int64-safe range), else the pure-Python path
    (arbitrary precision, no overflow possible).  Work is partitioned over
    the outer (y1, y13) grid; per-worker integer tallies are summed, so the
    result is schedule-independent.
    """
    if B < 1:
        raise ValueError("B must be positive")
    if backend not in ("auto", "kernel", "pure"):
        raise ValueError(f"unknown backend {backend!r}")
    from delpezzo.counting import default_threads

    start = time.perf_counter()
    workers = default_threads() if threads is None else max(1, threads)

    kernel = None
    if backend in ("auto", "kernel"):
        try:
            from delpezzo import _kernels
            kernel = _kernels
        except ImportError:
            if backend == "kernel":
                raise
    if kernel is not None and B > _KERNEL_B_MAX:
        if backend == "kernel":
            raise ValueError(f"kernel backend is int64-validated only up to B = {_KERNEL_B_MAX}")
        kernel = None

    if kernel is not None:
        N = kernel.count_torsor_kernel(B, workers)
    else:
        pairs = _outer_pairs(B)
        if workers == 1:
            N = _count_pure(B, pairs)
        else:
            chunks = [pairs[i::workers] for i in range(workers)]
            with ThreadPoolExecutor(max_workers=workers) as pool:
                N = sum(pool.map(lambda chunk: _count_pure(B, chunk), chunks))
    return CountResult(B, N, Method.TORSOR, "q-v-work", time.perf_counter() - start)
