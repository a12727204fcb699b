"""Shannon and generalized entropies of discrete distributions.

Natural units are the internal canon; ``base`` and ``convention`` only matter
at the boundary. ``0 * log(0)`` is taken as 0 for every measure.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

from ._backend import kernels
from .errors import DomainError, InvalidDistributionError
from .genfun import Convention, gen_log_base

MASS_TOL = 1e-9


class EntropyKind(str, Enum):
    SHANNON = "shannon"
    PLUS = "plus"
    MINUS = "minus"
    ZERO = "zero"

    @property
    def code(self) -> int:
        return {"shannon": 0, "plus": 1, "minus": -1}[self.value]


ALL_KINDS = (EntropyKind.SHANNON, EntropyKind.PLUS, EntropyKind.MINUS, EntropyKind.ZERO)


@dataclass(frozen=True)
class Distribution:
    """Validated probability vector.

    ``mass_mode="subnormalized"`` admits total mass below one, as needed for
    scaled arguments such as ``alpha * P``.
    """

    probs: np.ndarray
    mass_mode: str = "normalized"

    def __post_init__(self):
        probs = np.array(self.probs, dtype=float).reshape(-1)
        if self.mass_mode not in ("normalized", "subnormalized"):
            raise InvalidDistributionError(f"unknown mass_mode {self.mass_mode!r}")
        if probs.size == 0:
            raise InvalidDistributionError("empty distribution")
        if not np.all(np.isfinite(probs)):
            raise InvalidDistributionError("non-finite entry")
        if np.any(probs < 0):
            raise InvalidDistributionError("negative entry")
        if np.any(probs > 1 + MASS_TOL):
            raise InvalidDistributionError("entry exceeds 1")
        total = probs.sum()
        if total > 1 + MASS_TOL:
            raise InvalidDistributionError(f"mass exceeds 1 (sum={total:.12g})")
        if self.mass_mode == "normalized" and total < 1 - MASS_TOL:
            raise InvalidDistributionError(f"mass below 1 (sum={total:.12g})")
        probs.flags.writeable = False
        object.__setattr__(self, "probs", probs)

    def __len__(self):
        return self.probs.size

    @classmethod
    def uniform(cls, n: int) -> "Distribution":
        if n < 1:
            raise InvalidDistributionError("uniform distribution needs n >= 1")
        return cls(np.full(n, 1.0 / n))

    @classmethod
    def from_counts(cls, counts) -> "Distribution":
        counts = np.asarray(counts, dtype=float)
        if counts.size == 0:
            raise InvalidDistributionError("empty distribution")
        if np.any(counts < 0):
            raise InvalidDistributionError("negative count")
        total = counts.sum()
        if total <= 0:
            raise InvalidDistributionError("counts sum to zero")
        return cls(counts / total)

    def scaled(self, factor: float) -> "Distribution":
        """``factor * P`` as a subnormalized distribution."""
        return Distribution(self.probs * factor, mass_mode="subnormalized")


@dataclass(frozen=True)
class JointDistribution:
    """Joint probabilities; rows index inputs, columns index outputs."""

    matrix: np.ndarray

    def __post_init__(self):
        m = np.array(self.matrix, dtype=float)
        if m.ndim != 2 or m.size == 0:
            raise InvalidDistributionError("joint distribution must be a non-empty matrix")
        if not np.all(np.isfinite(m)):
            raise InvalidDistributionError("non-finite entry")
        if np.any(m < 0):
            raise InvalidDistributionError("negative entry")
        if np.any(m > 1 + MASS_TOL):
            raise InvalidDistributionError("entry exceeds 1")
        if abs(m.sum() - 1) > MASS_TOL:
            raise InvalidDistributionError(f"joint mass is {m.sum():.12g}, not 1")
        m.flags.writeable = False
        object.__setattr__(self, "matrix", m)

    @property
    def input_marginal(self) -> np.ndarray:
        return self.matrix.sum(axis=1)

    @property
    def output_marginal(self) -> np.ndarray:
        return self.matrix.sum(axis=0)


def as_distribution(dist) -> Distribution:
    if isinstance(dist, Distribution):
        return dist
    return Distribution(dist)


def _kernel_scale(base, convention: Convention) -> tuple[float, float]:
    # (exponent scale k, overall divisor)
    if convention is Convention.NATURAL:
        return 1.0, 1.0
    if not base > 1:
        raise DomainError(f"base must exceed 1, got {base!r}")
    lnb = math.log(base)
    if convention is Convention.RESCALE:
        return 1.0, lnb
    return 1.0 / lnb, 1.0


def _entropy_probs(kind: EntropyKind, probs: np.ndarray, base, convention: Convention) -> float:
    if kind is EntropyKind.ZERO:
        return 0.5 * (
            _entropy_probs(EntropyKind.PLUS, probs, base, convention)
            + _entropy_probs(EntropyKind.MINUS, probs, base, convention)
        )
    k, div = _kernel_scale(base, convention)
    return kernels.entropy_sum(kind.code, probs, k) / div


def entropy(kind, dist, base=2, convention=Convention.NATURAL) -> float:
    """``-sum_i p_i * glog(p_i)`` for the logarithm selected by ``kind``.

    ``kind="zero"`` is the mean of the plus and minus entropies.
    """
    d = as_distribution(dist)
    return _entropy_probs(EntropyKind(kind), d.probs, base, Convention(convention))


def log_measure(kind, x, base=2, convention=Convention.NATURAL):
    """The logarithm that ``entropy`` uses for ``kind``, evaluated at ``x > 0``."""
    kind = EntropyKind(kind)
    convention = Convention(convention)
    if kind is EntropyKind.ZERO:
        return 0.5 * (
            log_measure(EntropyKind.PLUS, x, base, convention)
            + log_measure(EntropyKind.MINUS, x, base, convention)
        )
    if kind is EntropyKind.SHANNON:
        arr = np.asarray(x, dtype=float)
        if not np.all(arr > 0):
            raise DomainError("logarithm is undefined for x <= 0")
        if convention is Convention.NATURAL:
            out = np.log(arr)
        elif base == 2:
            out = np.log2(arr)
        else:
            out = np.log(arr) / math.log(base)
        return float(out) if np.ndim(x) == 0 else out
    return gen_log_base(kind.value, x, base, convention)


def uniform_entropy_closed(kind, n: int) -> float:
    """Closed form for the uniform distribution on ``n`` symbols, natural units.

    ``H+ = N - N**(1 - 1/N)`` and ``H- = N**(1 + 1/N) - N``.
    """
    kind = EntropyKind(kind)
    if n < 1:
        raise DomainError("n must be >= 1")
    if kind is EntropyKind.SHANNON:
        return math.log(n)
    if kind is EntropyKind.ZERO:
        return 0.5 * (uniform_entropy_closed("plus", n) + uniform_entropy_closed("minus", n))
    # N - N**(1-1/N) = -N * expm1(-ln N / N), accurate for large N
    t = math.log(n) / n
    if kind is EntropyKind.PLUS:
        return -n * math.expm1(-t)
    return n * math.expm1(t)


def entropy_series_truncated(kind, dist, order: int) -> float:
    """Truncated power series of ``H+/-`` in ``v = -p ln p`` (natural units).

    ``H+ = sum_i sum_k (-1)**(k+1) v_i**k / k!`` and
    ``H- = sum_i sum_k v_i**k / k!``; ``order=1`` gives Shannon entropy.
    """
    kind = EntropyKind(kind)
    if kind not in (EntropyKind.PLUS, EntropyKind.MINUS):
        raise DomainError("series is defined for the plus and minus kinds only")
    if int(order) != order or order < 1:
        raise DomainError(f"order must be a positive integer, got {order!r}")
    d = as_distribution(dist)
    p = d.probs[d.probs > 0]
    v = -p * np.log(p)
    total = 0.0
    term = np.ones_like(v)
    for k in range(1, int(order) + 1):
        term = term * v / k
        sign = 1.0 if (kind is EntropyKind.MINUS or k % 2 == 1) else -1.0
        total += sign * term.sum()
    return float(total)


def joint_entropy(kind, joint, base=2, convention=Convention.NATURAL) -> float:
    """Entropy of the flattened joint probability matrix."""
    if not isinstance(joint, JointDistribution):
        joint = JointDistribution(joint)
    return _entropy_probs(
        EntropyKind(kind), joint.matrix.reshape(-1), base, Convention(convention)
    )
