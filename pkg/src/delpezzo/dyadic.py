"""Empirical verification of the survey's §3.2–§3.3 counting apparatus.

Two box notions, with deliberately different shell conventions (both from the
survey):

* :class:`DyadicBox` — ranges (range1): ``Y ≤ |y| < 2Y`` (closed low, open
  high) on the nine torsor coordinates.  ``count_dyadic_box`` counts the
  canonical torsor vectors with Ψ ≤ B inside a box; summed over the complete
  power-of-2 grid this reproduces ``count_torsor`` exactly (partition
  identity), and per box it is tested against the (N1) bound
  N ≪ Y1·Y13·Y14·Y23·Y24·min{Y03·Y04, Y33·Y34}.
* :class:`TernaryBox` — Lemma cayley-teq ranges ``K < |m| ≤ 2K`` (open low,
  closed high) on seven variables with m1·m2 − m3·m4·m5 + m6·m7 = 0 and
  hcf(m1·m2, m3·m4·m5) = 1 (eq. 4.1); ``count_ternary`` computes the exact M,
  tested against the lemma's bound M ≪ K1·K2·K3·K4·K5.

The survey's "≪" carries no explicit constant, so the bound operations report
grid maxima of the ratios and tests check their stability under grid
extension rather than asserting any specific constant.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Sequence

__all__ = [
    "BoxBoundReport",
    "BudgetExceededError",
    "DYADIC_B_BUDGET",
    "DyadicBox",
    "TERNARY_BUDGET",
    "TernaryBox",
    "TernaryBoundReport",
    "box_grid",
    "check_box_bound",
    "check_ternary_bound",
    "count_dyadic_box",
    "count_ternary",
    "dyadic_cover",
    "ternary_grid",
]

#: Default budgets (a design decision: minutes, not hours, on a desktop).
TERNARY_BUDGET = 2**12
DYADIC_B_BUDGET = 10**4

REPORT_CSV_HEADER = "box,count,bound_denominator,ratio"


class BudgetExceededError(ValueError):
    """The requested box or B exceeds the configured enumeration budget."""


@dataclass(frozen=True)
class DyadicBox:
    """Lower endpoints of the nine dyadic shells Y ≤ |y| < 2Y (eq. (range1))."""

    Y1: int
    Y03: int
    Y04: int
    Y13: int
    Y14: int
    Y23: int
    Y24: int
    Y33: int
    Y34: int

    def __post_init__(self) -> None:
        if min(self.as_tuple()) < 1:
            raise ValueError("dyadic endpoints must be positive")

    def as_tuple(self) -> tuple[int, ...]:
        return (self.Y1, self.Y03, self.Y04, self.Y13, self.Y14,
                self.Y23, self.Y24, self.Y33, self.Y34)

    def label(self) -> str:
        return "x".join(str(v) for v in self.as_tuple())

    def bound_denominator(self) -> int:
        """The (N1) comparison quantity Y1·Y13·Y14·Y23·Y24·min{Y03·Y04, Y33·Y34}."""
        return (self.Y1 * self.Y13 * self.Y14 * self.Y23 * self.Y24
                * min(self.Y03 * self.Y04, self.Y33 * self.Y34))


@dataclass(frozen=True)
class TernaryBox:
    """Shell bounds K_k < |m_k| ≤ 2K_k of Lemma cayley-teq."""

    K1: int
    K2: int
    K3: int
    K4: int
    K5: int
    K6: int
    K7: int

    def __post_init__(self) -> None:
        if min(self.as_tuple()) < 1:
            raise ValueError("ternary endpoints must be positive")

    def as_tuple(self) -> tuple[int, ...]:
        return (self.K1, self.K2, self.K3, self.K4, self.K5, self.K6, self.K7)

    def label(self) -> str:
        return "x".join(str(v) for v in self.as_tuple())

    def product(self) -> int:
        return math.prod(self.as_tuple())

    def bound_denominator(self) -> int:
        """The lemma's comparison quantity K1·K2·K3·K4·K5."""
        return self.K1 * self.K2 * self.K3 * self.K4 * self.K5


# --------------------------------------------------------------------------
# Ternary lemma: m1·m2 − m3·m4·m5 + m6·m7 = 0, hcf(m1·m2, m3·m4·m5) = 1.
# --------------------------------------------------------------------------


def _ternary_count_pure(K: tuple[int, ...], require_coprime: bool) -> int:
    """Exact M by enumerating magnitudes of m3..m7 and solving m1·m2 by divisors.

    Signs are collapsed exactly: each |m1·m2| target value |±A0 ∓ C0| arises
    from 2 of the 4 (sign(m3m4m5), sign(m6m7)) combinations, each combination
    from 4·2 sign assignments, and each divisor pair admits 2 sign assignments
    of (m1, m2) — weight 32 per (magnitudes, target) pair.
    """
    K1, K2, K3, K4, K5, K6, K7 = K
    gcd = math.gcd
    total = 0
    for a3 in range(K3 + 1, 2 * K3 + 1):
        for a4 in range(K4 + 1, 2 * K4 + 1):
            for a5 in range(K5 + 1, 2 * K5 + 1):
                A0 = a3 * a4 * a5
                for a6 in range(K6 + 1, 2 * K6 + 1):
                    for a7 in range(K7 + 1, 2 * K7 + 1):
                        C0 = a6 * a7
                        for t in (abs(A0 - C0), A0 + C0):
                            if t == 0:
                                continue
                            if require_coprime and gcd(t, A0) != 1:
                                continue
                            pairs = 0
                            for a1 in range(K1 + 1, 2 * K1 + 1):
                                if t % a1 == 0 and K2 < t // a1 <= 2 * K2:
                                    pairs += 1
                            total += 32 * pairs
    return total


def count_ternary(
    box: TernaryBox,
    *,
    budget: int | None = None,
    require_coprime: bool = True,
    backend: str = "auto",
) -> int:
    """Exact number M of 7-tuples in the shells solving the ternary equation.

    ``require_coprime=False`` drops condition (4.1) (the trivial-bound
    comparison count).  ``backend`` as in count_torsor: "auto" prefers the
    compiled kernel, falling back to pure Python; both are exact and
    cross-checked in tests.
    """
    limit = TERNARY_BUDGET if budget is None else budget
    if box.product() > limit:
        raise BudgetExceededError(
            f"K1···K7 = {box.product()} exceeds the budget {limit}; raise `budget` to override"
        )
    if backend not in ("auto", "kernel", "pure"):
        raise ValueError(f"unknown backend {backend!r}")
    if backend in ("auto", "kernel"):
        try:
            from delpezzo import _kernels

            return _kernels.ternary_count_kernel(box.as_tuple(), require_coprime)
        except ImportError:
            if backend == "kernel":
                raise
    return _ternary_count_pure(box.as_tuple(), require_coprime)


@dataclass(frozen=True)
class TernaryBoundReport:
    """Grid maximum of M/(K1K2K3K4K5) with the attaining box and all rows."""

    max_ratio: Fraction
    argmax_box: TernaryBox | None
    rows: tuple[tuple[TernaryBox, int, int], ...]  # (box, M, denominator)

    def to_csv(self) -> str:
        lines = [REPORT_CSV_HEADER]
        for box, count, denominator in self.rows:
            ratio = repr(count / denominator)
            lines.append(f"{box.label()},{count},{denominator},{ratio}")
        return "\n".join(lines) + "\n"


def check_ternary_bound(
    boxes: Iterable[TernaryBox],
    *,
    budget: int | None = None,
    backend: str = "auto",
) -> TernaryBoundReport:
    """Max over boxes of M/(K1·K2·K3·K4·K5) — the testable form of Lemma cayley-teq."""
    max_ratio = Fraction(0)
    argmax: TernaryBox | None = None
    rows = []
    for box in boxes:
        M = count_ternary(box, budget=budget, backend=backend)
        denominator = box.bound_denominator()
        rows.append((box, M, denominator))
        ratio = Fraction(M, denominator)
        if ratio > max_ratio:
            max_ratio = ratio
            argmax = box
    return TernaryBoundReport(max_ratio, argmax, tuple(rows))


def ternary_grid(max_product: int) -> list[TernaryBox]:
    """All power-of-2 boxes with K1···K7 ≤ max_product, in lexicographic order."""
    boxes: list[TernaryBox] = []

    def extend(prefix: tuple[int, ...], product: int) -> None:
        if len(prefix) == 7:
            boxes.append(TernaryBox(*prefix))
            return
        k = 1
        while product * k <= max_product:
            extend(prefix + (k,), product * k)
            k *= 2

    extend((), 1)
    return boxes


# --------------------------------------------------------------------------
# Dyadic boxes on the torsor.
# --------------------------------------------------------------------------


def _shell_range(lo_extra: int, hi_extra: int, Y: int) -> range:
    """Integers v with max(lo_extra, Y) ≤ v ≤ min(hi_extra, 2Y−1)."""
    return range(max(lo_extra, Y), min(hi_extra, 2 * Y - 1) + 1)


def _count_boxed(B: int, box: DyadicBox) -> int:
    """Canonical torsor vectors with Ψ ≤ B and every |y·| in its shell.

    Mirrors torsor_s3's enumeration with every loop clamped to its shell.
    The four shell-minimum monomial checks up front are the literal testable
    form of the survey's emptiness conditions (r1)/(r2); the |D|-interval
    check is an additional exactness-preserving prune from (ut).
    """
    Y1, Y03, Y04, Y13, Y14, Y23, Y24, Y33, Y34 = box.as_tuple()
    if Y03 * Y03 * Y04 * Y04 * Y23 * Y24 > B:  # (r1), first monomial
        return 0
    if Y1 * Y1 * Y13 * Y13 * Y14 * Y14 * Y23 * Y24 > B:  # (r1), second monomial
        return 0
    if Y1 * Y03 * Y13 * Y13 * Y23 * Y23 * Y33 > B:  # (r2), third monomial
        return 0
    if Y1 * Y04 * Y14 * Y14 * Y24 * Y24 * Y34 > B:  # (r2), fourth monomial
        return 0
    # (ut): |y33·y34| = |y1·y13·y14 − y03·y04| < 8·Y1·Y13·Y14 + 4·Y03·Y04.
    if Y33 * Y34 >= 8 * Y1 * Y13 * Y14 + 4 * Y03 * Y04:
        return 0

    gcd = math.gcd
    isqrt = math.isqrt
    isq = isqrt(B)
    total = 0
    for y1 in _shell_range(1, isq, Y1):
        for y13 in _shell_range(1, isq // y1, Y13):
            y13sq = y13 * y13
            for y14 in _shell_range(1, isq // (y1 * y13), Y14):
                if gcd(y13, y14) != 1:
                    continue
                P = y1 * y13 * y14
                P2 = P * P
                y14sq = y14 * y14
                y1314 = y13 * y14
                for y03 in _shell_range(1, min(B // (y1 * y13sq), isq), Y03):
                    if gcd(y03, y1314) != 1 or gcd(y1, y03) != 1:
                        continue
                    c3base = y1 * y03 * y13sq
                    dmax3 = min(B // c3base, 2 * Y33 - 1)
                    for a04 in _shell_range(1, min(isq // y03, B // (y1 * y14sq)), Y04):
                        if gcd(a04, y1314) != 1 or gcd(y1, a04) != 1:
                            continue
                        c4base = y1 * a04 * y14sq
                        dmax4 = min(B // c4base, 2 * Y34 - 1)
                        q_abs = y03 * a04
                        R = B // max(P2, q_abs * q_abs)
                        for s04 in (1, -1):
                            D = P - s04 * q_abs
                            if D == 0:
                                continue
                            aD = abs(D)
                            for d in _divisor_list(aD):
                                if d < Y33 or d > dmax3:
                                    continue
                                a34 = aD // d
                                if a34 < Y34 or a34 > dmax4:
                                    continue
                                if gcd(y14, d) != 1 or gcd(y13, a34) != 1:
                                    continue
                                k23 = y1 * y14 * a34 * a04
                                k24 = y1 * y13 * d * y03
                                y23max = min(isqrt(B // (c3base * d)), R)
                                y24cap = isqrt(B // (c4base * a34))
                                for y23 in _shell_range(1, y23max, Y23):
                                    if gcd(y23, k23) != 1:
                                        continue
                                    for y24 in _shell_range(1, min(R // y23, y24cap), Y24):
                                        if gcd(y24, k24) != 1 or gcd(y24, y23) != 1:
                                            continue
                                        total += 2  # y33 = ±d
    return total


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


def count_dyadic_box(box: DyadicBox, B: int, *, budget: int | None = None) -> int:
    """Exact #{y ∈ T : Ψ(y) ≤ B, every |y·| in its dyadic shell}."""
    if B < 1:
        raise ValueError("B must be positive")
    limit = DYADIC_B_BUDGET if budget is None else budget
    if B > limit:
        raise BudgetExceededError(
            f"B = {B} exceeds the dyadic-grid budget {limit}; raise `budget` to override"
        )
    return _count_boxed(B, box)


def dyadic_cover(B: int) -> Iterator[DyadicBox]:
    """The complete power-of-2 grid of admissible boxes for Ψ ≤ B.

    A box is admissible iff all four shell-minimum monomials are ≤ B; every
    y with Ψ(y) ≤ B lies in exactly one admissible box, so the counts over
    this cover sum to count_torsor(B) (the partition identity).
    """
    def powers(limit: int) -> Iterator[int]:
        Y = 1
        while Y <= limit:
            yield Y
            Y *= 2

    for Y1 in powers(math.isqrt(B)):
        for Y13 in powers(math.isqrt(B // (Y1 * Y1))):
            for Y14 in powers(math.isqrt(B // (Y1 * Y1 * Y13 * Y13))):
                m2_partial = Y1 * Y1 * Y13 * Y13 * Y14 * Y14
                for Y23 in powers(B // m2_partial):
                    if Y1 * Y13 * Y13 * Y23 * Y23 > B:  # third monomial partial
                        break
                    for Y24 in powers(B // (m2_partial * Y23)):
                        if Y1 * Y14 * Y14 * Y24 * Y24 > B:  # fourth monomial partial
                            break
                        for Y03 in powers(math.isqrt(B // (Y23 * Y24))):
                            if Y1 * Y03 * Y13 * Y13 * Y23 * Y23 > B:
                                break
                            for Y04 in powers(math.isqrt(B // (Y03 * Y03 * Y23 * Y24))):
                                if Y1 * Y04 * Y14 * Y14 * Y24 * Y24 > B:
                                    break
                                m3_partial = Y1 * Y03 * Y13 * Y13 * Y23 * Y23
                                m4_partial = Y1 * Y04 * Y14 * Y14 * Y24 * Y24
                                for Y33 in powers(B // m3_partial):
                                    for Y34 in powers(B // m4_partial):
                                        yield DyadicBox(Y1, Y03, Y04, Y13, Y14,
                                                        Y23, Y24, Y33, Y34)


def box_grid(endpoints: Sequence[int] = (1, 2, 4)) -> list[DyadicBox]:
    """All boxes with every endpoint drawn from ``endpoints`` (default {1,2,4}⁹)."""
    boxes: list[DyadicBox] = []

    def extend(prefix: tuple[int, ...]) -> None:
        if len(prefix) == 9:
            boxes.append(DyadicBox(*prefix))
            return
        for value in endpoints:
            extend(prefix + (value,))

    extend(())
    return boxes


@dataclass(frozen=True)
class BoxBoundReport:
    """Grid maximum of N/(Y1Y13Y14Y23Y24·min{Y03Y04, Y33Y34}) — eq. (N1)."""

    B: int
    max_ratio: Fraction
    argmax_box: DyadicBox | None
    rows: tuple[tuple[DyadicBox, int, int], ...]  # (box, N, denominator)

    def to_csv(self) -> str:
        lines = [REPORT_CSV_HEADER]
        for box, count, denominator in self.rows:
            ratio = repr(count / denominator)
            lines.append(f"{box.label()},{count},{denominator},{ratio}")
        return "\n".join(lines) + "\n"


def check_box_bound(
    boxes: Iterable[DyadicBox],
    B: int,
    *,
    budget: int | None = None,
) -> BoxBoundReport:
    max_ratio = Fraction(0)
    argmax: DyadicBox | None = None
    rows = []
    for box in boxes:
        N = count_dyadic_box(box, B, budget=budget)
        denominator = box.bound_denominator()
        rows.append((box, N, denominator))
        ratio = Fraction(N, denominator)
        if ratio > max_ratio:
            max_ratio = ratio
            argmax = box
    return BoxBoundReport(B, max_ratio, argmax, tuple(rows))


def partition_total(B: int, *, budget: int | None = None) -> int:
    """Σ count_dyadic_box over the complete power-of-2 cover (= count_torsor(B))."""
    return sum(count_dyadic_box(box, B, budget=budget) for box in dyadic_cover(B))
