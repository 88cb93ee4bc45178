"""Pure-Python (numpy) implementations of the hot summation kernels.

This is the fallback backend; `cosasym._kernels_cy` implements the same
four functions in Cython. Both backends must agree to rounding noise:
`tests/test_backends.py` checks them against each other.

Conventions shared by both backends:
  * 1 - cos(x) is evaluated as 2 sin^2(x/2) wherever the argument is
    formed directly (one-dimensional paths), avoiding cancellation near 0.
  * per-shell sums are produced separately and combined by the caller in
    increasing shell order, so summation order is deterministic.
"""

from __future__ import annotations

import math

import numpy as np

_CHUNK = 1 << 16


def _shellcount_coeffs(d: int) -> list[tuple[int, float]]:
    """(exponent, coefficient) pairs with (2n+1)^d - (2n-1)^d = sum c_e n^e."""
    return [
        (d - m, 2.0 * math.comb(d, m) * 2.0 ** (d - m))
        for m in range(1, d + 1, 2)
    ]


def h_partial_sum(theta: float, s: float, n: int) -> float:
    """Sum_{k=1..n} k^(-s) * 2 sin^2(k theta / 2)."""
    half = 0.5 * float(theta)
    parts = []
    for lo in range(1, n + 1, _CHUNK):
        k = np.arange(lo, min(lo + _CHUNK, n + 1), dtype=np.float64)
        sn = np.sin(k * half)
        parts.append(float(np.sum(2.0 * sn * sn * k ** (-s))))
    return math.fsum(parts)


def kernel_partial_sum(
    theta, p: float, n: int, c: float = 0.0, beta: float = 1.0
) -> float:
    """Sum_{k=1..n} w(k) * f_{d,k}(theta) with w(k) = k^(-p) (1 + c k^(-beta)).

    f_{d,k} is the shell term of the Dirichlet-kernel representation:
    shellcount(k) minus the difference of the two kernel products.
    """
    theta = np.asarray(theta, dtype=np.float64)
    d = theta.shape[0]
    if d == 1:
        # f_{1,k} = 2 - 2 cos(k theta) = 4 sin^2(k theta / 2)
        half = 0.5 * float(theta[0])
        parts = []
        for lo in range(1, n + 1, _CHUNK):
            k = np.arange(lo, min(lo + _CHUNK, n + 1), dtype=np.float64)
            sn = np.sin(k * half)
            w = k ** (-p)
            if c != 0.0:
                w = w * (1.0 + c * k ** (-beta))
            parts.append(float(np.sum(4.0 * sn * sn * w)))
        return math.fsum(parts)

    sin_half = np.sin(0.5 * theta)
    coeffs = _shellcount_coeffs(d)
    parts = []
    for lo in range(1, n + 1, _CHUNK):
        k = np.arange(lo, min(lo + _CHUNK, n + 1), dtype=np.float64)
        plus = np.ones_like(k)
        minus = np.ones_like(k)
        for j in range(d):
            if sin_half[j] == 0.0:
                plus *= 2.0 * k + 1.0
                minus *= 2.0 * k - 1.0
            else:
                plus *= np.sin((k + 0.5) * theta[j]) / sin_half[j]
                minus *= np.sin((k - 0.5) * theta[j]) / sin_half[j]
        shellcount = np.zeros_like(k)
        for e, ce in coeffs:
            shellcount += ce * k**e
        w = k ** (-p)
        if c != 0.0:
            w = w * (1.0 + c * k ** (-beta))
        parts.append(float(np.sum(w * (shellcount - (plus - minus)))))
    return math.fsum(parts)


def _lattice_accumulate(theta, n: int, point_weight=None) -> np.ndarray:
    """Per-shell sums of weight(z) * (1 - cos<z, theta>) over the box."""
    theta = np.asarray(theta, dtype=np.float64)
    d = theta.shape[0]
    idx = np.arange(-n, n + 1)
    if d == 1:
        sn = np.sin(idx * (0.5 * theta[0]))
        vals = 2.0 * sn * sn
        if point_weight is not None:
            vals = vals * point_weight(idx[None, :])
        shells = np.zeros(n + 1)
        np.add.at(shells, np.abs(idx), vals)
        shells[0] = 0.0
        return shells

    shells = np.zeros(n + 1)
    inner = np.meshgrid(*([idx] * (d - 1)), indexing="ij")
    inner_phase = sum(g * theta[j + 1] for j, g in enumerate(inner))
    inner_max = np.maximum.reduce([np.abs(g) for g in inner])
    for z1 in idx:
        phase = z1 * theta[0] + inner_phase
        mx = np.maximum(abs(z1), inner_max)
        sn = np.sin(0.5 * phase)
        vals = 2.0 * sn * sn
        if point_weight is not None:
            coords = np.broadcast_arrays(
                np.full_like(inner[0], z1), *inner
            )
            vals = vals * point_weight(np.stack(coords))
        np.add.at(shells, mx.ravel(), vals.ravel())
    shells[0] = 0.0
    return shells


def lattice_shell_sums(theta, n: int) -> np.ndarray:
    """shells[m] = Sum_{max-norm(z) = m} (1 - cos<z, theta>), m = 0..n."""
    return _lattice_accumulate(theta, n)


_MASK = np.uint64(0xFFFFFFFFFFFFFFFF)


def _splitmix(x: np.ndarray) -> np.ndarray:
    x = (x + np.uint64(0x9E3779B97F4A7C15)) & _MASK
    x = ((x ^ (x >> np.uint64(30))) * np.uint64(0xBF58476D1CE4E5B9)) & _MASK
    x = ((x ^ (x >> np.uint64(27))) * np.uint64(0x94D049BB133111EB)) & _MASK
    return x ^ (x >> np.uint64(31))


def lattice_noise_shell_sums(
    theta, n: int, a_star: float, a_sup: float, seed: int
) -> np.ndarray:
    """Per-shell sums of a_hat(z) * (1 - cos<z, theta>), with a_hat drawn
    deterministically in [a_star, a_sup] from a counter-based hash of z."""

    seed64 = np.uint64(seed & 0xFFFFFFFFFFFFFFFF)

    def weight(coords: np.ndarray) -> np.ndarray:
        h = _splitmix(np.full(coords.shape[1:], seed64, dtype=np.uint64))
        for j in range(coords.shape[0]):
            zj = coords[j].astype(np.int64).view(np.uint64)
            h = _splitmix(h ^ zj)
        u = (h >> np.uint64(11)).astype(np.float64) * (2.0**-53)
        return a_star + (a_sup - a_star) * u

    with np.errstate(over="ignore"):
        return _lattice_accumulate(theta, n, point_weight=weight)
