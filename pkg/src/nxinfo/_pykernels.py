"""Pure-Python kernels.

Same call signatures as the compiled ``_ckernels`` module. Used when the
extension is not built or when ``NXINFO_PURE_PYTHON`` is set.

Sign codes: ``+1`` plus branch, ``-1`` minus branch, ``0`` ordinary log.
"""
import math

import numpy as np
from scipy.optimize import brentq

from .errors import ConvergenceError

_XTOL = 1e-300
_RTOL = 4.0 * np.finfo(float).eps
_MAXITER = 200
_EPS_MIN = 1e-300


def gen_log(sign, x, k=1.0):
    """Elementwise ``sign * expm1(sign*k*x*ln x) / x`` (``k*ln x`` for sign 0)."""
    x = np.asarray(x, dtype=float)
    lx = np.log(x)
    if sign == 0:
        return k * lx
    return sign * np.expm1(sign * k * x * lx) / x


def entropy_sum(sign, p, k=1.0):
    """``-sum(p * gen_log(sign, p, k))`` with zero-mass terms dropped."""
    total = 0.0
    for q in p:
        if q <= 0.0:
            continue
        u = k * q * math.log(q)
        if sign == 0:
            total -= u
        else:
            total -= sign * math.expm1(sign * u)
    return total


def _neg_log(sign, p):
    return -sign * math.expm1(sign * p * math.log(p)) / p


def _invert_one(sign, y):
    if y == 0.0:
        return 1.0
    lo = 1e-3
    while _neg_log(sign, lo) < y:
        lo *= 1e-3
        if lo < _EPS_MIN:
            raise ConvergenceError(f"cannot bracket inverse for y={y!r}")
    try:
        return brentq(
            lambda p: _neg_log(sign, p) - y,
            lo,
            1.0,
            xtol=_XTOL,
            rtol=_RTOL,
            maxiter=_MAXITER,
        )
    except RuntimeError as exc:
        raise ConvergenceError(str(exc)) from exc


def invert(sign, y):
    """Solve ``-gen_log(sign, p) = y`` for ``p`` in ``(0, 1]``, elementwise."""
    y = np.asarray(y, dtype=float)
    out = np.empty(y.shape)
    flat = out.reshape(-1)
    for i, yi in enumerate(y.reshape(-1)):
        flat[i] = _invert_one(sign, float(yi))
    return out


def kraft_generalized(coeffs, lengths, log_base):
    """``sum_i sum_j coeffs[j] * Gamma(j+1, lengths[i]*log_base)``."""
    total = 0.0
    for length in lengths:
        x = length * log_base
        ex = math.exp(-x)
        term = 1.0  # x**j / j!
        partial = 0.0  # sum_{m<=j} x**m / m!
        fact = 1.0  # j!
        for j, a in enumerate(coeffs):
            if j > 0:
                term *= x / j
                fact *= j
            partial += term
            total += a * fact * ex * partial
    return total
