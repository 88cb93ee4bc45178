# cython: boundscheck=False, wraparound=False, cdivision=True, language_level=3
"""Compiled summation kernels (hot loops of the series evaluators).

Same four-function surface as `cosasym._kernels_py`; see that module for
the shared conventions. Sine/cosine sequences over the shell index are
advanced by rotation recurrences, re-seeded from libm every 512 steps to
keep drift at the last-bit level.
"""

from libc.math cimport cos, fabs, pow, sin
from libc.stdint cimport int64_t, uint64_t

import math

import numpy as np

cimport numpy as cnp

cnp.import_array()

DEF REFRESH = 512


def h_partial_sum(double theta, double s, long n):
    """Sum_{k=1..n} k^(-s) * 2 sin^2(k theta / 2), Kahan-compensated."""
    cdef double half = 0.5 * theta
    cdef double ch = cos(half), sh = sin(half)
    cdef double sv = 0.0, cv = 1.0, t
    cdef double acc = 0.0, comp = 0.0, term, y, tt
    cdef long k
    for k in range(1, n + 1):
        if k % REFRESH == 0:
            sv = sin(k * half)
            cv = cos(k * half)
        else:
            t = sv * ch + cv * sh
            cv = cv * ch - sv * sh
            sv = t
        term = 2.0 * sv * sv * pow(<double>k, -s)
        y = term - comp
        tt = acc + y
        comp = (tt - acc) - y
        acc = tt
    return acc


def kernel_partial_sum(theta, double p, long n, double c=0.0, double beta=1.0):
    """Sum_{k=1..n} w(k) * f_{d,k}(theta), w(k) = k^(-p) (1 + c k^(-beta))."""
    cdef cnp.ndarray[cnp.float64_t, ndim=1] th = np.ascontiguousarray(
        theta, dtype=np.float64
    )
    cdef int d = th.shape[0]
    cdef double acc = 0.0, comp = 0.0, term, y, tt
    cdef long k
    cdef int j, e

    cdef double half, ch, sh, sv, cv, t
    if d == 1:
        half = 0.5 * th[0]
        ch = cos(half)
        sh = sin(half)
        sv = 0.0
        cv = 1.0
        for k in range(1, n + 1):
            if k % REFRESH == 0:
                sv = sin(k * half)
                cv = cos(k * half)
            else:
                t = sv * ch + cv * sh
                cv = cv * ch - sv * sh
                sv = t
            term = 4.0 * sv * sv * pow(<double>k, -p)
            if c != 0.0:
                term *= 1.0 + c * pow(<double>k, -beta)
            y = term - comp
            tt = acc + y
            comp = (tt - acc) - y
            acc = tt
        return acc

    # Per-axis state for sin/cos((k + 1/2) theta_j).
    cdef cnp.ndarray[cnp.float64_t, ndim=1] sp = np.empty(d)
    cdef cnp.ndarray[cnp.float64_t, ndim=1] cp = np.empty(d)
    cdef cnp.ndarray[cnp.float64_t, ndim=1] st = np.empty(d)
    cdef cnp.ndarray[cnp.float64_t, ndim=1] ct = np.empty(d)
    cdef cnp.ndarray[cnp.float64_t, ndim=1] inv_sh = np.empty(d)
    cdef cnp.ndarray[cnp.int32_t, ndim=1] degenerate = np.zeros(d, dtype=np.int32)
    for j in range(d):
        st[j] = sin(th[j])
        ct[j] = cos(th[j])
        sp[j] = sin(0.5 * th[j])
        cp[j] = cos(0.5 * th[j])
        if sp[j] == 0.0:
            degenerate[j] = 1
            inv_sh[j] = 0.0
        else:
            inv_sh[j] = 1.0 / sp[j]

    # (2k+1)^d - (2k-1)^d = sum over odd m of 2 C(d,m) (2k)^(d-m)
    cdef int ncoef = (d + 1) // 2
    cdef cnp.ndarray[cnp.float64_t, ndim=1] sc_coef = np.empty(ncoef)
    cdef cnp.ndarray[cnp.int32_t, ndim=1] sc_exp = np.empty(ncoef, dtype=np.int32)
    cdef int i = 0
    for j in range(1, d + 1, 2):
        sc_coef[i] = 2.0 * math.comb(d, j) * 2.0 ** (d - j)
        sc_exp[i] = d - j
        i += 1

    cdef double p_prev = 1.0, p_plus, shellcount, w, kd, f, pw
    for k in range(1, n + 1):
        kd = <double>k
        p_plus = 1.0
        for j in range(d):
            if k % REFRESH == 0:
                sp[j] = sin((kd + 0.5) * th[j])
                cp[j] = cos((kd + 0.5) * th[j])
            else:
                t = sp[j] * ct[j] + cp[j] * st[j]
                cp[j] = cp[j] * ct[j] - sp[j] * st[j]
                sp[j] = t
            if degenerate[j]:
                p_plus *= 2.0 * kd + 1.0
            else:
                p_plus *= sp[j] * inv_sh[j]
        shellcount = 0.0
        for j in range(ncoef):
            e = sc_exp[j]
            pw = 1.0
            for i in range(e):
                pw *= kd
            shellcount += sc_coef[j] * pw
        f = shellcount - (p_plus - p_prev)
        p_prev = p_plus
        w = pow(kd, -p)
        if c != 0.0:
            w *= 1.0 + c * pow(kd, -beta)
        term = w * f
        y = term - comp
        tt = acc + y
        comp = (tt - acc) - y
        acc = tt
    return acc


cdef inline uint64_t _mix(uint64_t x) nogil:
    x = x + <uint64_t>0x9E3779B97F4A7C15
    x = (x ^ (x >> 30)) * <uint64_t>0xBF58476D1CE4E5B9
    x = (x ^ (x >> 27)) * <uint64_t>0x94D049BB133111EB
    return x ^ (x >> 31)


def _shell_sums_impl(theta, long n, bint noise, double a_star, double a_sup,
                     uint64_t seed):
    cdef cnp.ndarray[cnp.float64_t, ndim=1] th = np.ascontiguousarray(
        theta, dtype=np.float64
    )
    cdef int d = th.shape[0]
    cdef cnp.ndarray[cnp.float64_t, ndim=1] acc = np.zeros(n + 1)
    cdef cnp.ndarray[cnp.float64_t, ndim=1] comp = np.zeros(n + 1)

    cdef double half, ch, sh, sv, cv, t, val, y, tt, wgt
    cdef long k, m
    cdef int j
    cdef uint64_t h

    if d == 1:
        half = 0.5 * th[0]
        ch = cos(half)
        sh = sin(half)
        sv = 0.0
        cv = 1.0
        for k in range(1, n + 1):
            if k % REFRESH == 0:
                sv = sin(k * half)
                cv = cos(k * half)
            else:
                t = sv * ch + cv * sh
                cv = cv * ch - sv * sh
                sv = t
            val = 2.0 * sv * sv
            if noise:
                wgt = 0.0
                h = _mix(_mix(seed) ^ (<uint64_t>(<int64_t>k)))
                wgt += a_star + (a_sup - a_star) * (
                    (h >> 11) * (2.0 ** -53)
                )
                h = _mix(_mix(seed) ^ (<uint64_t>(<int64_t>(-k))))
                wgt += a_star + (a_sup - a_star) * (
                    (h >> 11) * (2.0 ** -53)
                )
                acc[k] = val * wgt
            else:
                acc[k] = 2.0 * val
        return acc

    # Tables for the innermost axis.
    cdef cnp.ndarray[cnp.float64_t, ndim=1] ctab = np.empty(n + 1)
    cdef cnp.ndarray[cnp.float64_t, ndim=1] stab = np.empty(n + 1)
    for k in range(n + 1):
        ctab[k] = cos(k * th[d - 1])
        stab[k] = sin(k * th[d - 1])

    cdef cnp.ndarray[cnp.int64_t, ndim=1] z = np.full(d - 1, -n, dtype=np.int64)
    cdef double base, cb, sb, cosv
    cdef long mp, ak, zn
    cdef bint done = False
    cdef uint64_t hrow

    while not done:
        base = 0.0
        mp = 0
        for j in range(d - 1):
            base += z[j] * th[j]
            if z[j] >= 0:
                ak = z[j]
            else:
                ak = -z[j]
            if ak > mp:
                mp = ak
        cb = cos(base)
        sb = sin(base)
        if noise:
            hrow = _mix(seed)
            for j in range(d - 1):
                hrow = _mix(hrow ^ (<uint64_t>z[j]))
        for k in range(-n, n + 1):
            if k >= 0:
                ak = k
            else:
                ak = -k
            m = mp if mp > ak else ak
            if m == 0:
                continue
            if k >= 0:
                cosv = cb * ctab[ak] - sb * stab[ak]
            else:
                cosv = cb * ctab[ak] + sb * stab[ak]
            val = 1.0 - cosv
            if noise:
                h = _mix(hrow ^ (<uint64_t>(<int64_t>k)))
                val *= a_star + (a_sup - a_star) * ((h >> 11) * (2.0 ** -53))
            y = val - comp[m]
            tt = acc[m] + y
            comp[m] = (tt - acc[m]) - y
            acc[m] = tt
        # Advance the odometer over the leading d-1 coordinates.
        j = d - 2
        while j >= 0:
            z[j] += 1
            if z[j] <= n:
                break
            z[j] = -n
            j -= 1
        if j < 0:
            done = True

    for k in range(n + 1):
        acc[k] += comp[k]
    acc[0] = 0.0
    return acc


def lattice_shell_sums(theta, long n):
    """shells[m] = Sum_{max-norm(z) = m} (1 - cos<z, theta>), m = 0..n."""
    return _shell_sums_impl(theta, n, False, 0.0, 0.0, 0)


def lattice_noise_shell_sums(theta, long n, double a_star, double a_sup,
                             seed):
    """Per-shell sums with a deterministic hashed factor in [a_star, a_sup]."""
    cdef uint64_t s64 = <uint64_t>(<object>seed & 0xFFFFFFFFFFFFFFFF)
    return _shell_sums_impl(theta, n, True, a_star, a_sup, s64)
