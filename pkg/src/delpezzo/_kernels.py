"""Compiled integer kernels (numba) for the hot counting loops.

All arithmetic is int64.  The torsor kernel is safe for B ≤ 10⁹: with
P = y1·y13·y14 ≤ √B, |y03·y04| ≤ √B, |D| ≤ 2√B and every c·d product capped
by B inside the loops, the largest intermediate is k23 ≤ 2·B^{3/2} ≈ 6.3·10¹³,
far inside int64.  The ternary kernel's products are capped by the 2¹²-budget.
Callers fall back to the pure-Python paths when numba is unavailable; the two
implementations are cross-checked exactly in tests.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor

import numpy as np
from numba import njit

__all__ = ["count_torsor_kernel", "ternary_count_kernel"]


@njit(cache=True, nogil=True)
def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a


@njit(cache=True, nogil=True)
def _isqrt(n: int) -> int:
    if n < 2:
        return n
    x = int(math.sqrt(n))
    while x * x > n:
        x -= 1
    while (x + 1) * (x + 1) <= n:
        x += 1
    return x


@njit(cache=True)
def _divisor_csr(limit: int):
    """Divisors of every 1 ≤ m ≤ limit as a CSR table: flat[start[m]:start[m+1]]."""
    counts = np.zeros(limit + 1, dtype=np.int64)
    for d in range(1, limit + 1):
        for m in range(d, limit + 1, d):
            counts[m] += 1
    start = np.zeros(limit + 2, dtype=np.int64)
    for m in range(1, limit + 1):
        start[m + 1] = start[m] + counts[m]
    flat = np.zeros(start[limit + 1], dtype=np.int64)
    cursor = start[: limit + 1].copy()
    for d in range(1, limit + 1):
        for m in range(d, limit + 1, d):
            flat[cursor[m]] = d
            cursor[m] += 1
    return start, flat


@njit(cache=True, nogil=True)
def _torsor_count_range(B, pair_y1, pair_y13, div_start, div_flat):
    """Canonical-set tally over the given (y1, y13) pairs — mirrors torsor_s3._count_pure."""
    isq = _isqrt(B)
    total = 0
    for idx in range(pair_y1.shape[0]):
        y1 = pair_y1[idx]
        y13 = pair_y13[idx]
        y13sq = y13 * y13
        y14max = isq // (y1 * y13)
        for y14 in range(1, y14max + 1):
            if _gcd(y13, y14) != 1:
                continue
            P = y1 * y13 * y14
            P2 = P * P
            y14sq = y14 * y14
            y1314 = y13 * y14
            y03max = min(B // (y1 * y13sq), isq)
            for y03 in range(1, y03max + 1):
                if _gcd(y03, y1314) != 1:
                    continue
                if _gcd(y1, y03) != 1:
                    continue
                c3base = y1 * y03 * y13sq
                dmax3 = B // c3base
                a04max = min(isq // y03, B // (y1 * y14sq))
                for a04 in range(1, a04max + 1):
                    if _gcd(a04, y1314) != 1:
                        continue
                    if _gcd(y1, a04) != 1:
                        continue
                    c4base = y1 * a04 * y14sq
                    dmax4 = B // c4base
                    q_abs = y03 * a04
                    q2 = q_abs * q_abs
                    R = B // (P2 if P2 > q2 else q2)
                    for s04 in (1, -1):
                        D = P - s04 * q_abs
                        if D == 0:
                            continue
                        aD = -D if D < 0 else D
                        for j in range(div_start[aD], div_start[aD + 1]):
                            d = div_flat[j]
                            if d > dmax3:
                                continue
                            a34 = aD // d
                            if a34 > dmax4:
                                continue
                            if _gcd(y14, d) != 1:
                                continue
                            if _gcd(y13, a34) != 1:
                                continue
                            k23 = y1 * y14 * a34 * a04
                            k24 = y1 * y13 * d * y03
                            y23max = _isqrt(B // (c3base * d))
                            if y23max > R:
                                y23max = R
                            y24cap = _isqrt(B // (c4base * a34))
                            sub = 0
                            for y23 in range(1, y23max + 1):
                                if _gcd(y23, k23) != 1:
                                    continue
                                y24max = R // y23
                                if y24max > y24cap:
                                    y24max = y24cap
                                for y24 in range(1, y24max + 1):
                                    if _gcd(y24, k24) != 1:
                                        continue
                                    if _gcd(y24, y23) != 1:
                                        continue
                                    sub += 1
                            total += 2 * sub  # y33 = ±d
    return total


def count_torsor_kernel(B: int, workers: int = 1) -> int:
    """Exact #{y ∈ T : Ψ(y) ≤ B} via the compiled kernel, int64-safe for B ≤ 10⁹.

    Work is partitioned round-robin over the (y1, y13) grid; the kernel
    releases the GIL, so worker threads run concurrently; integer tallies make
    the reduction schedule-independent.
    """
    if B > 10**9:
        raise ValueError("kernel validated for B ≤ 10^9 only; use the pure backend")
    isq = math.isqrt(B)
    div_start, div_flat = _divisor_csr(2 * isq)
    pairs = [(y1, y13) for y1 in range(1, isq + 1) for y13 in range(1, isq // y1 + 1)]
    pair_y1 = np.array([p[0] for p in pairs], dtype=np.int64)
    pair_y13 = np.array([p[1] for p in pairs], dtype=np.int64)
    if workers <= 1:
        return int(_torsor_count_range(B, pair_y1, pair_y13, div_start, div_flat))
    chunks = [(pair_y1[w::workers].copy(), pair_y13[w::workers].copy()) for w in range(workers)]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        futures = [
            pool.submit(_torsor_count_range, B, c1, c13, div_start, div_flat)
            for c1, c13 in chunks
        ]
        return sum(int(f.result()) for f in futures)


@njit(cache=True, nogil=True)
def _ternary_count(K1, K2, K3, K4, K5, K6, K7, require_coprime):
    """Exact M for shells K < |m| ≤ 2K — mirrors dyadic._ternary_count_pure."""
    total = 0
    for a3 in range(K3 + 1, 2 * K3 + 1):
        for a4 in range(K4 + 1, 2 * K4 + 1):
            for a5 in range(K5 + 1, 2 * K5 + 1):
                A0 = a3 * a4 * a5
                for a6 in range(K6 + 1, 2 * K6 + 1):
                    for a7 in range(K7 + 1, 2 * K7 + 1):
                        C0 = a6 * a7
                        # m1·m2 = ±A0 − (±C0); |m1·m2| ∈ {|A0−C0|, A0+C0}, each
                        # from two of the four sign combinations of (sA, sC).
                        diff = A0 - C0
                        if diff < 0:
                            diff = -diff
                        for t in (diff, A0 + C0):
                            if t == 0:
                                continue
                            if require_coprime and _gcd(t, A0) != 1:
                                continue
                            pairs = 0
                            for a1 in range(K1 + 1, 2 * K1 + 1):
                                if t % a1 != 0:
                                    continue
                                a2 = t // a1
                                if K2 < a2 <= 2 * K2:
                                    pairs += 1
                            # ×2 sign combos of (sA, sC) giving this |t|, ×4 sign
                            # assignments of (m3,m4,m5) per sA, ×2 of (m6,m7) per
                            # sC, ×2 of (m1,m2) per divisor pair: 2·4·2·2 = 32.
                            total += 32 * pairs
    return total


def ternary_count_kernel(K: tuple[int, ...], require_coprime: bool = True) -> int:
    return int(_ternary_count(K[0], K[1], K[2], K[3], K[4], K[5], K[6], require_coprime))
