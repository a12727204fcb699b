"""Generalized logarithms, their inverses, and the integer upper incomplete gamma.

The two branches are

    log+(x) = (x**x - 1) / x
    log-(x) = -(x**(-x) - 1) / x

defined for ``x > 0``. Both lie below zero on ``(0, 1)``, vanish at 1, and
bracket the natural log: ``log+(x) >= ln(x) >= log-(x)``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

from ._backend import kernels
from .errors import DomainError


class Sign(str, Enum):
    PLUS = "plus"
    MINUS = "minus"

    @property
    def code(self) -> int:
        return 1 if self is Sign.PLUS else -1


class Convention(str, Enum):
    """How a base-D generalized logarithm is formed from the natural one.

    ``RESCALE`` divides by ``ln D``; ``SUBSTITUTION`` replaces the exponent
    ``x`` by ``x / ln D`` inside ``x**x``; ``NATURAL`` ignores the base.
    """

    RESCALE = "rescale"
    SUBSTITUTION = "substitution"
    NATURAL = "natural"


@dataclass(frozen=True)
class CoefficientTable:
    """Coefficients of the nine-term series for the inverse of ``-log+/-``."""

    a_plus: tuple[float, ...]
    a_minus: tuple[float, ...]

    def for_sign(self, sign) -> np.ndarray:
        coeffs = self.a_plus if Sign(sign) is Sign.PLUS else self.a_minus
        arr = np.array(coeffs)
        arr.flags.writeable = False
        return arr


COEFFICIENTS = CoefficientTable(
    a_plus=(
        1.0,
        0.0228963,
        -0.709322,
        0.905157,
        -0.546751,
        0.186358,
        -0.0362676,
        0.00373467,
        -0.000157095,
    ),
    a_minus=(
        1.0,
        0.0147449,
        0.3725,
        -0.317048,
        0.16867,
        -0.0675544,
        0.0166679,
        -0.00211934,
        0.000105402,
    ),
)

N_COEFFS = 9


def _scalar_or_array(values: np.ndarray, like):
    return float(np.asarray(values).reshape(-1)[0]) if np.ndim(like) == 0 else values


def _check_positive(x) -> np.ndarray:
    arr = np.asarray(x, dtype=float)
    if not np.all(arr > 0):  # also rejects NaN
        raise DomainError("generalized logarithm is undefined for x <= 0")
    return arr


def _check_nonneg(y, what: str) -> np.ndarray:
    arr = np.asarray(y, dtype=float)
    if not np.all(arr >= 0):
        raise DomainError(f"{what} requires a nonnegative argument")
    return arr


def gen_log(sign, x):
    """Natural generalized logarithm ``log+(x)`` or ``log-(x)``.

    Accepts a scalar or an array; ``x`` must be strictly positive.
    """
    s = Sign(sign)
    arr = _check_positive(x)
    return _scalar_or_array(kernels.gen_log(s.code, arr, 1.0), x)


def gen_log_base(sign, x, base=2, convention=Convention.RESCALE):
    """Base-D generalized logarithm under the chosen convention."""
    s = Sign(sign)
    conv = Convention(convention)
    arr = _check_positive(x)
    if conv is not Convention.NATURAL and not base > 1:
        raise DomainError(f"base must exceed 1, got {base!r}")
    if conv is Convention.NATURAL:
        out = kernels.gen_log(s.code, arr, 1.0)
    elif conv is Convention.RESCALE:
        out = kernels.gen_log(s.code, arr, 1.0) / math.log(base)
    else:
        out = kernels.gen_log(s.code, arr, 1.0 / math.log(base))
    return _scalar_or_array(out, x)


def gen_exp_series(sign, y):
    """Nine-term series ``exp(-y) * sum_j a(j) y**j``.

    Approximate inverse of ``y = -gen_log(sign, p)``; only the nonnegative
    half-line is meaningful.
    """
    arr = _check_nonneg(y, "generalized exponential series")
    coeffs = COEFFICIENTS.for_sign(sign)
    poly = np.polynomial.polynomial.polyval(arr, coeffs)
    return _scalar_or_array(np.exp(-arr) * poly, y)


def gen_exp_exact(sign, y):
    """Exact inverse: the unique ``p`` in ``(0, 1]`` with ``-gen_log(sign, p) = y``.

    Raises ConvergenceError when ``y`` is so large that ``p`` underflows.
    """
    s = Sign(sign)
    arr = _check_nonneg(y, "generalized exponential")
    if not np.all(np.isfinite(arr)):
        raise DomainError("generalized exponential requires a finite argument")
    return _scalar_or_array(kernels.invert(s.code, arr), y)


def upper_incomplete_gamma(n: int, x: float) -> float:
    """``Gamma(n, x)`` for integer ``n >= 1`` via the finite exponential sum."""
    if int(n) != n or n < 1:
        raise DomainError(f"first argument must be a positive integer, got {n!r}")
    if not x >= 0:
        raise DomainError(f"second argument must be nonnegative, got {x!r}")
    n = int(n)
    term = 1.0
    partial = 1.0
    for k in range(1, n):
        term *= x / k
        partial += term
    return math.factorial(n - 1) * math.exp(-x) * partial
