"""Asymptotic model fitting for CountResult series.

Estimates the shape parameters of the survey's predictions — eq. (c1)'s power
B^e, and eq. (c2)'s c·B·(log B)^(ρ−1) with ρ taken from the catalog — from
exact (B, N) samples.  Natural logarithms throughout (the survey's log base
is irrelevant to exponents but rescales leading constants; reported constants
follow the ln convention).  This is the only module that touches
floating-point; everything upstream is exact integer counting.
"""

from __future__ import annotations

import csv
import enum
import json
import math
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Sequence

__all__ = [
    "FitModel",
    "FitReport",
    "fit_exponent",
    "fit_leading_constant",
    "fit_log_exponent",
    "samples_from_csv",
]

# Exact counts carry int N; synthetic calibration series may carry float N.
Sample = tuple[int, "int | float"]


class FitModel(enum.Enum):
    B_POW = "B_pow"
    B_LOGPOW = "B_logpow"


@dataclass(frozen=True)
class FitReport:
    """A fitted asymptotic model c·B^e·(ln B)^k over exact samples."""

    model: FitModel
    fixed_log_exponent: int | None
    fitted_c: float
    fitted_exponent: float
    residual_rms: float
    samples: tuple[Sample, ...]

    def __post_init__(self) -> None:
        if self.residual_rms < 0:
            raise ValueError("residual_rms must be non-negative")
        for (b1, _), (b2, _) in zip(self.samples, self.samples[1:]):
            if b2 <= b1:
                raise ValueError("samples must be strictly increasing in B")
        if any(n < 0 for _, n in self.samples):
            raise ValueError("counts must be non-negative")

    def to_json_dict(self) -> dict:
        return {
            "model": self.model.value,
            "fixed_log_exponent": self.fixed_log_exponent,
            "fitted_c": self.fitted_c,
            "fitted_exponent": self.fitted_exponent,
            "residual_rms": self.residual_rms,
            "samples": [[b, n] for b, n in self.samples],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), sort_keys=True, indent=2) + "\n"


def _validated(samples: Iterable[Sample], minimum: int = 4) -> tuple[Sample, ...]:
    out = tuple((int(b), n if isinstance(n, float) else int(n)) for b, n in samples)
    if len(out) < minimum:
        raise ValueError(f"need at least {minimum} samples, got {len(out)}")
    for (b1, _), (b2, _) in zip(out, out[1:]):
        if b2 <= b1:
            raise ValueError("samples must be strictly increasing in B")
    if any(n <= 0 for _, n in out):
        raise ValueError("all counts must be positive for log fitting")
    return out


def _linear_lsq(xs: Sequence[float], ys: Sequence[float]) -> tuple[float, float, float]:
    """Least-squares y ≈ a + e·x; returns (a, e, residual_rms)."""
    n = len(xs)
    mean_x = math.fsum(xs) / n
    mean_y = math.fsum(ys) / n
    sxx = math.fsum((x - mean_x) ** 2 for x in xs)
    sxy = math.fsum((x - mean_x) * (y - mean_y) for x, y in zip(xs, ys))
    if sxx == 0:
        raise ValueError("degenerate samples: all B equal")
    e = sxy / sxx
    a = mean_y - e * mean_x
    rms = math.sqrt(math.fsum((y - a - e * x) ** 2 for x, y in zip(xs, ys)) / n)
    return a, e, rms


def fit_exponent(samples: Iterable[Sample]) -> FitReport:
    """Least-squares fit of log N = a + e·log B; fitted_exponent = e.

    The survey's eq. (c1) predicts e = 2 for P¹ and e = 1 (with a (log B)^(ρ−1)
    correction inflating the raw slope) for the del Pezzo counts.
    """
    data = _validated(samples)
    xs = [math.log(b) for b, _ in data]
    ys = [math.log(n) for _, n in data]
    a, e, rms = _linear_lsq(xs, ys)
    return FitReport(
        model=FitModel.B_POW,
        fixed_log_exponent=None,
        fitted_c=math.exp(a),
        fitted_exponent=e,
        residual_rms=rms,
        samples=data,
    )


def fit_leading_constant(
    samples: Iterable[Sample],
    rho: int,
    *,
    b_power: int = 1,
) -> FitReport:
    """Least-squares c minimizing Σ (N − c·B^b_power·(ln B)^(ρ−1))² over B ≥ 3.

    ρ comes from the catalog (eq. (c2): the predicted log-exponent is ρ−1);
    ``b_power`` selects the power of B (1 for the del Pezzo counts, 2 for the
    P¹ calibration).  Samples with B < 3 are ignored: the log-power weight is
    degenerate there.  Closed form: c = Σ N·w / Σ w² with w = B^b_power(ln B)^(ρ−1).
    """
    if rho < 1:
        raise ValueError("rho must be a positive integer")
    data = _validated(samples)
    used = tuple((b, n) for b, n in data if b >= 3)
    if not used:
        raise ValueError("no samples with B >= 3")
    weights = [b**b_power * math.log(b) ** (rho - 1) for b, _ in used]
    c = math.fsum(n * w for (_, n), w in zip(used, weights)) / math.fsum(w * w for w in weights)
    rms = math.sqrt(math.fsum((n - c * w) ** 2 for (_, n), w in zip(used, weights)) / len(used))
    return FitReport(
        model=FitModel.B_LOGPOW,
        fixed_log_exponent=rho - 1,
        fitted_c=c,
        fitted_exponent=float(b_power),
        residual_rms=rms,
        samples=data,
    )


def fit_log_exponent(samples: Iterable[Sample], *, b_power: int = 1) -> FitReport:
    """Estimate k in N ≈ c·B^b_power·(ln B)^k by regressing log(N/B^b_power) on log ln B.

    Slow-converging; indicative only — log-log-power fits are notoriously
    poor at desk scale (the survey's ρ−1 should be preferred as a fixed
    exponent via fit_leading_constant).  Uses samples with B ≥ 3.
    """
    data = _validated(samples)
    used = tuple((b, n) for b, n in data if b >= 3)
    if len(used) < 4:
        raise ValueError("need at least 4 samples with B >= 3")
    xs = [math.log(math.log(b)) for b, _ in used]
    ys = [math.log(n) - b_power * math.log(b) for b, n in used]
    a, k, rms = _linear_lsq(xs, ys)
    return FitReport(
        model=FitModel.B_LOGPOW,
        fixed_log_exponent=None,
        fitted_c=math.exp(a),
        fitted_exponent=k,
        residual_rms=rms,
        samples=data,
    )


def samples_from_csv(
    path: str | Path,
    *,
    surface_id: str | None = None,
    method: str | None = None,
) -> list[Sample]:
    """(B, N) pairs from a counting-module CSV, filtered, sorted by B.

    The schema is ``surface_id,method,B,N,elapsed_ms``; for repeated B the
    last row wins.
    """
    by_B: dict[int, int] = {}
    with open(path, newline="", encoding="utf-8") as handle:
        for row in csv.DictReader(handle):
            if surface_id is not None and row["surface_id"] != surface_id:
                continue
            if method is not None and row["method"] != method:
                continue
            by_B[int(row["B"])] = int(row["N"])
    return sorted(by_B.items())
