"""Codeword lengths, Kraft sums and the coding-theorem checks.

Optimal real lengths are ``l_i = -glog_D(p_i)`` for the logarithm of the
chosen entropy kind, so the average real length equals the entropy. Integer
lengths are their ceilings and land within one D-ary digit of it.
"""
from __future__ import annotations

import math
from dataclasses import asdict, dataclass
from typing import Optional

import numpy as np

from ._backend import kernels
from .entropy import Distribution, EntropyKind, as_distribution, entropy, log_measure
from .errors import DomainError, InvalidDistributionError
from .genfun import COEFFICIENTS, N_COEFFS, Convention, gen_exp_series

# Snap tolerance for lengths that are integers up to round-off (e.g. 2.0000000000000004).
_INT_SNAP = 1e-12
THEOREM_TOL = 1e-9


def _log_base(base) -> float:
    if not base > 1:
        raise DomainError(f"base must exceed 1, got {base!r}")
    return math.log(base)


def optimal_lengths(kind, dist, base=2, convention=Convention.RESCALE) -> np.ndarray:
    """Real-valued optimal lengths ``-glog_D(p_i)``; every ``p_i`` must be positive."""
    d = as_distribution(dist)
    if np.any(d.probs <= 0):
        raise InvalidDistributionError("zero-probability symbol has undefined length")
    lengths = -np.asarray(log_measure(kind, d.probs, base, convention), dtype=float)
    # -glog(1) is exactly 0; keep tiny negative round-off out of the lengths
    return np.maximum(lengths, 0.0)


def integer_lengths(real_lengths) -> np.ndarray:
    """Elementwise ceiling; values within round-off of an integer keep that integer."""
    arr = np.asarray(real_lengths, dtype=float)
    if np.any(arr < 0):
        raise DomainError("lengths must be nonnegative")
    nearest = np.rint(arr)
    snapped = np.abs(arr - nearest) <= _INT_SNAP * np.maximum(1.0, arr)
    return np.where(snapped, nearest, np.ceil(arr)).astype(np.int64)


def average_length(dist, lengths) -> float:
    d = as_distribution(dist)
    lengths = np.asarray(lengths, dtype=float)
    if lengths.shape != d.probs.shape:
        raise DomainError(
            f"size mismatch: {d.probs.size} probabilities, {lengths.size} lengths"
        )
    return float(np.dot(d.probs, lengths))


def kraft_sum_classical(lengths, base=2) -> float:
    lengths = np.asarray(lengths, dtype=float)
    return float(np.sum(np.power(float(base), -lengths)))


def kraft_sum_generalized(sign, lengths, base=2, j_max: int = N_COEFFS - 1) -> float:
    """``sum_i sum_{j<=j_max} a(j) * Gamma(j+1, l_i ln D)``.

    With ``j_max=0`` this is the classical Kraft sum.
    """
    if int(j_max) != j_max or not 0 <= j_max < N_COEFFS:
        raise DomainError(f"j_max must be an integer in [0, {N_COEFFS - 1}], got {j_max!r}")
    lengths = np.asarray(lengths, dtype=float)
    if np.any(lengths <= 0):
        raise DomainError("generalized Kraft sum needs positive lengths")
    coeffs = COEFFICIENTS.for_sign(sign)[: int(j_max) + 1]
    return kernels.kraft_generalized(coeffs, lengths, _log_base(base))


def kraft_gradient(sign, lengths, base=2, j_max: int = N_COEFFS - 1) -> np.ndarray:
    """Closed-form ``dK/dl_i = -ln D * exp(-x) * sum_j a(j) x**j`` at ``x = l_i ln D``."""
    lnb = _log_base(base)
    x = np.asarray(lengths, dtype=float) * lnb
    coeffs = COEFFICIENTS.for_sign(sign)[: int(j_max) + 1]
    return -lnb * np.exp(-x) * np.polynomial.polynomial.polyval(x, coeffs)


def stationarity_residual(sign, dist, lengths, base=math.e) -> float:
    """``max_i |exp_series(l_i ln D) - p_i|``; near zero at stationary lengths."""
    d = as_distribution(dist)
    lengths = np.asarray(lengths, dtype=float)
    if lengths.shape != d.probs.shape:
        raise DomainError(
            f"size mismatch: {d.probs.size} probabilities, {lengths.size} lengths"
        )
    approx = gen_exp_series(sign, lengths * _log_base(base))
    return float(np.max(np.abs(approx - d.probs)))


@dataclass
class CodeLengthReport:
    kind: str
    base: float
    convention: str
    real_lengths: np.ndarray
    int_lengths: np.ndarray
    avg_real: float
    avg_int: float
    entropy_value: float
    kraft_classical: float
    kraft_generalized: Optional[float]
    prefix_feasible: bool
    sandwich_ok: bool

    def to_dict(self) -> dict:
        out = asdict(self)
        out["real_lengths"] = [float(v) for v in self.real_lengths]
        out["int_lengths"] = [int(v) for v in self.int_lengths]
        return out


def theorem_report(kind, dist, base=2, convention=Convention.RESCALE) -> CodeLengthReport:
    """Lengths, averages and Kraft sums for one measure, with the bound checks.

    ``sandwich_ok`` requires ``avg_real == H`` and ``H <= avg_int < H + 1``
    (both to ``THEOREM_TOL``). ``kraft_generalized`` is evaluated at the real
    optimal lengths (the reference constant) and is ``None`` for Shannon and
    zero kinds or when some length is zero. A classical Kraft sum above 1 is
    reported through ``prefix_feasible``, not raised.
    """
    kind = EntropyKind(kind)
    convention = Convention(convention)
    d = as_distribution(dist)
    real = optimal_lengths(kind, d, base, convention)
    ints = integer_lengths(real)
    h = entropy(kind, d, base, convention)
    avg_real = average_length(d, real)
    avg_int = average_length(d, ints)
    k_classical = kraft_sum_classical(ints, base)
    k_gen = None
    if kind in (EntropyKind.PLUS, EntropyKind.MINUS) and np.all(real > 0):
        k_gen = kraft_sum_generalized(kind.value, real, base)
    sandwich = (
        abs(avg_real - h) <= THEOREM_TOL
        and h - THEOREM_TOL <= avg_int < h + 1
    )
    return CodeLengthReport(
        kind=kind.value,
        base=base,
        convention=convention.value,
        real_lengths=real,
        int_lengths=ints,
        avg_real=avg_real,
        avg_int=avg_int,
        entropy_value=h,
        kraft_classical=k_classical,
        kraft_generalized=k_gen,
        prefix_feasible=k_classical <= 1 + THEOREM_TOL,
        sandwich_ok=bool(sandwich),
    )


@dataclass(frozen=True)
class SourceSample:
    symbols: np.ndarray
    seed: int
    source_dist: Distribution


def simulate_source(seed: int, dist, n_draws: int) -> SourceSample:
    """I.i.d. draws by inverse-CDF sampling from a PCG64 stream seeded with ``seed``."""
    d = as_distribution(dist)
    if n_draws < 1:
        raise DomainError("n_draws must be >= 1")
    rng = np.random.default_rng(seed)
    cdf = np.cumsum(d.probs)
    u = rng.random(int(n_draws))
    idx = np.searchsorted(cdf, u, side="right")
    symbols = np.minimum(idx, d.probs.size - 1)
    # never land on a zero-mass trailing symbol through cdf round-off
    support = np.flatnonzero(d.probs > 0)
    symbols = np.minimum(symbols, support[-1])
    return SourceSample(symbols=symbols, seed=seed, source_dist=d)


def empirical_distribution(sample: SourceSample) -> Distribution:
    counts = np.bincount(sample.symbols, minlength=len(sample.source_dist))
    return Distribution.from_counts(counts)

