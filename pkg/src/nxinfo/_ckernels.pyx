# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels; mirror of ``_pykernels`` with identical signatures."""
from libc.math cimport exp, expm1, fabs, log, signbit

import numpy as np

from .errors import ConvergenceError

cdef double _XTOL = 1e-300
cdef double _RTOL = 4.0 * 2.220446049250313e-16
cdef int _MAXITER = 200
cdef double _EPS_MIN = 1e-300


cdef inline double _gen_log(int sign, double x, double k) nogil:
    if sign == 0:
        return k * log(x)
    return sign * expm1(sign * k * x * log(x)) / x


cdef inline double _neg_log(int sign, double p) nogil:
    return -sign * expm1(sign * p * log(p)) / p


def gen_log(int sign, x, double k=1.0):
    """Elementwise ``sign * expm1(sign*k*x*ln x) / x`` (``k*ln x`` for sign 0)."""
    arr = np.ascontiguousarray(x, dtype=np.float64)
    out = np.empty_like(arr)
    cdef const double[::1] xv = arr.reshape(-1)
    cdef double[::1] ov = out.reshape(-1)
    cdef Py_ssize_t i, n = xv.shape[0]
    with nogil:
        for i in range(n):
            ov[i] = _gen_log(sign, xv[i], k)
    return out


def entropy_sum(int sign, p, double k=1.0):
    """``-sum(p * gen_log(sign, p, k))`` with zero-mass terms dropped."""
    cdef const double[::1] pv = np.ascontiguousarray(p, dtype=np.float64).reshape(-1)
    cdef Py_ssize_t i, n = pv.shape[0]
    cdef double q, u, total = 0.0
    with nogil:
        for i in range(n):
            q = pv[i]
            if q <= 0.0:
                continue
            u = k * q * log(q)
            if sign == 0:
                total -= u
            else:
                total -= sign * expm1(sign * u)
    return total


cdef int _brent(int sign, double y, double xa, double xb, double* root) nogil:
    # Brent's method on f(p) = -gen_log(sign, p) - y; returns 0 on success.
    cdef double xpre = xa, xcur = xb, xblk = 0.0
    cdef double fpre = _neg_log(sign, xpre) - y
    cdef double fcur = _neg_log(sign, xcur) - y
    cdef double fblk = 0.0, spre = 0.0, scur = 0.0
    cdef double delta, sbis, stry, dpre, dblk, lim
    cdef int it
    if fpre * fcur > 0.0:
        return 1
    if fpre == 0.0:
        root[0] = xpre
        return 0
    if fcur == 0.0:
        root[0] = xcur
        return 0
    for it in range(_MAXITER):
        if fpre != 0.0 and fcur != 0.0 and signbit(fpre) != signbit(fcur):
            xblk = xpre
            fblk = fpre
            spre = xcur - xpre
            scur = spre
        if fabs(fblk) < fabs(fcur):
            xpre = xcur
            xcur = xblk
            xblk = xpre
            fpre = fcur
            fcur = fblk
            fblk = fpre
        delta = (_XTOL + _RTOL * fabs(xcur)) / 2.0
        sbis = (xblk - xcur) / 2.0
        if fcur == 0.0 or fabs(sbis) < delta:
            root[0] = xcur
            return 0
        if fabs(spre) > delta and fabs(fcur) < fabs(fpre):
            if xpre == xblk:
                stry = -fcur * (xcur - xpre) / (fcur - fpre)
            else:
                dpre = (fpre - fcur) / (xpre - xcur)
                dblk = (fblk - fcur) / (xblk - xcur)
                stry = -fcur * (fblk * dblk - fpre * dpre) / (dblk * dpre * (fblk - fpre))
            lim = 3.0 * fabs(sbis) - delta
            if fabs(spre) < lim:
                lim = fabs(spre)
            if 2.0 * fabs(stry) < lim:
                spre = scur
                scur = stry
            else:
                spre = sbis
                scur = sbis
        else:
            spre = sbis
            scur = sbis
        xpre = xcur
        fpre = fcur
        if fabs(scur) > delta:
            xcur += scur
        elif sbis > 0.0:
            xcur += delta
        else:
            xcur -= delta
        fcur = _neg_log(sign, xcur) - y
    return 2


def invert(int sign, y):
    """Solve ``-gen_log(sign, p) = y`` for ``p`` in ``(0, 1]``, elementwise."""
    arr = np.ascontiguousarray(y, dtype=np.float64)
    out = np.empty_like(arr)
    cdef const double[::1] yv = arr.reshape(-1)
    cdef double[::1] ov = out.reshape(-1)
    cdef Py_ssize_t i, n = yv.shape[0]
    cdef double yi, lo
    cdef int status = 0
    with nogil:
        for i in range(n):
            yi = yv[i]
            if yi == 0.0:
                ov[i] = 1.0
                continue
            lo = 1e-3
            while _neg_log(sign, lo) < yi:
                lo *= 1e-3
                if lo < _EPS_MIN:
                    status = 1
                    break
            if status == 0:
                status = _brent(sign, yi, lo, 1.0, &ov[i])
            if status != 0:
                break
    if status == 1:
        raise ConvergenceError(f"cannot bracket inverse for y={yv[i]!r}")
    if status == 2:
        raise ConvergenceError(f"inverse did not converge for y={yv[i]!r}")
    return out


def kraft_generalized(coeffs, lengths, double log_base):
    """``sum_i sum_j coeffs[j] * Gamma(j+1, lengths[i]*log_base)``."""
    cdef const double[::1] cv = np.ascontiguousarray(coeffs, dtype=np.float64)
    cdef const double[::1] lv = np.ascontiguousarray(lengths, dtype=np.float64).reshape(-1)
    cdef Py_ssize_t i, j, m = cv.shape[0], n = lv.shape[0]
    cdef double x, ex, term, partial, fact, total = 0.0
    with nogil:
        for i in range(n):
            x = lv[i] * log_base
            ex = exp(-x)
            term = 1.0
            partial = 0.0
            fact = 1.0
            for j in range(m):
                if j > 0:
                    term *= x / j
                    fact *= j
                partial += term
                total += cv[j] * fact * ex * partial
    return total
