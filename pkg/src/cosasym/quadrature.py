"""Quadrature primitives: cached Gauss-Legendre rules, a power-weighted
(Gauss-Jacobi) rule for integrals against t^alpha on [0, 1], and exact
piecewise-polynomial machinery for densities of sums of independent
uniform variables.

The piecewise-polynomial route turns the box integrals of |c + sum eta|^alpha
into one-dimensional integrals of |v|^alpha against a polynomial, which the
Jacobi rule then evaluates exactly (up to rounding): no quadrature error is
left to fight the |.|^alpha kink.
"""

from __future__ import annotations

import bisect
import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np
from numpy.polynomial import Polynomial
from scipy.special import roots_jacobi


@lru_cache(maxsize=None)
def gauss_legendre(n: int) -> tuple[np.ndarray, np.ndarray]:
    """Nodes and weights of the n-point Gauss-Legendre rule on [-1, 1]."""
    x, w = np.polynomial.legendre.leggauss(n)
    x.setflags(write=False)
    w.setflags(write=False)
    return x, w


def integrate_interval(f, a: float, b: float, n: int) -> float:
    """n-point Gauss-Legendre approximation of the integral of f over [a, b]."""
    if a == b:
        return 0.0
    x, w = gauss_legendre(n)
    mid = 0.5 * (a + b)
    rad = 0.5 * (b - a)
    return rad * math.fsum(wi * f(mid + rad * xi) for xi, wi in zip(x, w))


@lru_cache(maxsize=None)
def power_weight_nodes(n: int, alpha: float) -> tuple[np.ndarray, np.ndarray]:
    """Nodes t and weights W with Sum W_i g(t_i) = Int_0^1 t^alpha g(t) dt,
    exact for polynomials g of degree <= 2n - 1."""
    x, w = roots_jacobi(n, 0.0, alpha)
    t = 0.5 * (1.0 + x)
    weights = w * 2.0 ** (-(alpha + 1.0))
    t.setflags(write=False)
    weights.setflags(write=False)
    return t, weights


@dataclass(frozen=True)
class PiecewisePoly:
    """A piecewise polynomial: polys[i] is valid on [breaks[i], breaks[i+1]].
    The function is understood to vanish outside [breaks[0], breaks[-1]]."""

    breaks: tuple[float, ...]
    polys: tuple[Polynomial, ...]

    def __post_init__(self):
        if len(self.breaks) != len(self.polys) + 1:
            raise ValueError("need one more breakpoint than pieces")
        if any(b1 <= b0 for b0, b1 in zip(self.breaks, self.breaks[1:])):
            raise ValueError("breakpoints must be strictly increasing")

    def __call__(self, x: float) -> float:
        if x < self.breaks[0] or x > self.breaks[-1]:
            return 0.0
        i = min(bisect.bisect_right(self.breaks, x) - 1, len(self.polys) - 1)
        return float(self.polys[i](x))

    def mass(self) -> float:
        return math.fsum(
            float(p.integ()(b1) - p.integ()(b0))
            for p, b0, b1 in zip(self.polys, self.breaks, self.breaks[1:])
        )


def indicator_density(w: float) -> PiecewisePoly:
    """The indicator of [-w, w] as a one-piece polynomial, w > 0."""
    if not w > 0:
        raise ValueError("halfwidth must be positive")
    return PiecewisePoly((-w, w), (Polynomial([1.0]),))


def _antiderivative(pp: PiecewisePoly) -> tuple[list[Polynomial], float]:
    """Continuous antiderivative A with A(breaks[0]) = 0; returns the pieces
    and the total mass A(breaks[-1])."""
    pieces = []
    acc = 0.0
    for i, p in enumerate(pp.polys):
        ap = p.integ()
        ap = ap + (acc - float(ap(pp.breaks[i])))
        pieces.append(ap)
        acc = float(ap(pp.breaks[i + 1]))
    return pieces, acc


def convolve_indicator(pp: PiecewisePoly, w: float) -> PiecewisePoly:
    """Convolution of pp with the indicator of [-w, w]:
    (pp * 1_[-w,w])(u) = A(u + w) - A(u - w), piecewise polynomial again."""
    if not w > 0:
        raise ValueError("halfwidth must be positive")
    apieces, mass = _antiderivative(pp)
    lo, hi = pp.breaks[0], pp.breaks[-1]
    new_breaks = sorted({b + s for b in pp.breaks for s in (-w, w)})

    def shifted(x_mid: float, shift: float) -> Polynomial:
        arg = x_mid + shift
        if arg <= lo:
            return Polynomial([0.0])
        if arg >= hi:
            return Polynomial([mass])
        i = min(bisect.bisect_right(pp.breaks, arg) - 1, len(apieces) - 1)
        # A evaluated at (u + shift), as a polynomial in u
        return apieces[i](Polynomial([shift, 1.0]))

    polys = []
    for b0, b1 in zip(new_breaks, new_breaks[1:]):
        mid = 0.5 * (b0 + b1)
        polys.append(shifted(mid, w) - shifted(mid, -w))
    return PiecewisePoly(tuple(new_breaks), tuple(polys))


def uniform_sum_density(widths) -> PiecewisePoly:
    """Unnormalized density of eta_1 + ... + eta_k with eta_j uniform on
    [-w_j, w_j]: the convolution of the interval indicators, total mass
    prod(2 w_j)."""
    ws = [float(w) for w in widths]
    if not ws:
        raise ValueError("need at least one halfwidth")
    pp = indicator_density(ws[0])
    for w in ws[1:]:
        pp = convolve_indicator(pp, w)
    return pp


def integrate_abs_power(pp: PiecewisePoly, c: float, alpha: float, n: int = 24) -> float:
    """Int pp(u) |c + u|^alpha du over the support of pp, via the exact
    power-weighted rule applied piece by piece (n exactness degree 2n-1)."""
    t, wts = power_weight_nodes(n, float(alpha))

    def j0(x: float, r: Polynomial) -> float:
        # Int_0^x v^alpha r(v) dv, x >= 0
        if x == 0.0:
            return 0.0
        return x ** (alpha + 1.0) * float(np.dot(wts, r(x * t)))

    parts = []
    for q, x0, x1 in zip(pp.polys, pp.breaks, pp.breaks[1:]):
        a, b = c + x0, c + x1  # v = c + u
        r = q(Polynomial([-c, 1.0]))  # r(v) = q(v - c)
        rm = q(Polynomial([-c, -1.0]))  # r(-v)
        if a >= 0.0:
            parts.append(j0(b, r) - j0(a, r))
        elif b <= 0.0:
            parts.append(j0(-a, rm) - j0(-b, rm))
        else:
            parts.append(j0(-a, rm) + j0(b, r))
    return math.fsum(parts)
