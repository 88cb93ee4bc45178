"""Closed-form asymptotic objects: the one-dimensional asymptotic
equivalent of H near 0, the homogeneous prefactor A in integral and
signed-power closed forms, the quadratic-regime coefficient series, and
the three-regime asymptotic dispatch for the full lattice series.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .combinatorics import enumerate_signs
from .decomposition import QuadratureSpec
from .errors import DomainError
from .quadrature import integrate_abs_power, uniform_sum_density
from .series import ErrorBudget, _coords
from .special import AlphaParam, Regime, as_alpha, hardy_constant, zeta

#: Maximum dimension of the integral form of A.
MAX_A_DIM = 7


@dataclass(frozen=True)
class AsymptoticValue:
    """A closed-form asymptotic value tagged with its regime and origin."""

    value: float
    regime: Regime
    formula_id: str


def regime(alpha: float) -> AlphaParam:
    """Classify alpha into the sub-quadratic / critical / super-quadratic
    regime (the boundary alpha = 2 is detected by exact comparison)."""
    return AlphaParam.from_value(alpha)


def signed_power(x: float, m: int, alpha: float) -> float:
    """x^(m, alpha) := x^m |x|^alpha, with value 0 at x = 0."""
    if m < 0:
        raise DomainError("m must be a nonnegative integer")
    if x == 0.0:
        return 0.0
    return x**m * abs(x) ** alpha


def hstar(theta: float, alpha) -> AsymptoticValue:
    """Asymptotic equivalent of H(theta) as theta -> 0, in three regimes."""
    ap = as_alpha(alpha)
    a = ap.value
    t = float(theta)
    if ap.regime is Regime.SUB2:
        value = (1.0 / a) * hardy_constant(ap) * abs(t) ** a
    elif ap.regime is Regime.CRIT2:
        if not 0.0 < abs(t) < 1.0:
            raise DomainError("critical regime needs 0 < |theta| < 1")
        value = 0.5 * t * t * math.log(1.0 / abs(t))
    else:
        value = 0.5 * zeta(a - 1.0) * t * t
    return AsymptoticValue(value, ap.regime, "hstar")


def _check_a_point(coords, d_cap: int) -> list[float]:
    d = len(coords)
    if d < 2:
        raise DomainError("A is defined for d >= 2")
    if d > d_cap:
        raise DomainError(f"A capped at d <= {d_cap}")
    if any(c == 0.0 for c in coords):
        raise DomainError("A requires every coordinate nonzero")
    return list(coords)


def A_integral(theta, alpha, quad: QuadratureSpec = QuadratureSpec()) -> float:
    """Integral form of the homogeneous prefactor A:

        Sum over choices of a head coordinate j1 of
        (1 / prod of tail coordinates) * Int over the tail box of
        |theta_j1 + sum eta|^alpha.

    The tail box integral is computed exactly: the density of the sum of
    the tail variables is piecewise polynomial (convolution of interval
    indicators), and the remaining 1-D integral against |.|^alpha uses a
    power-weighted rule that is exact for polynomials. Even in every
    coordinate, so absolute values are taken up front.
    """
    coords = _check_a_point(_coords(theta), MAX_A_DIM)
    a = as_alpha(alpha).value
    ws = [abs(c) for c in coords]
    d = len(ws)
    nodes = max(8, min(quad.nodes_per_axis, 64))
    parts = []
    for j1 in range(d):
        tail = ws[:j1] + ws[j1 + 1:]
        density = uniform_sum_density(tail)
        integral = integrate_abs_power(density, ws[j1], a, nodes)
        parts.append(integral / math.prod(tail))
    return math.fsum(parts)


def _a_closed_unit(u: list[float], a: float) -> float:
    d = len(u)
    pref = 1.0
    for k in range(1, d):
        pref /= a + k
    patterns = enumerate_signs(d - 1)
    parts = []
    for j1 in range(d):
        tail = u[:j1] + u[j1 + 1:]
        inv = 1.0 / math.prod(tail)
        inner = []
        for pat in patterns:
            sgn = math.prod(pat.signs)
            arg = u[j1] + math.fsum(s * t for s, t in zip(pat.signs, tail))
            inner.append(sgn * signed_power(arg, d - 1, a))
        parts.append(inv * math.fsum(inner))
    return pref * math.fsum(parts)


def A_closed(theta, alpha) -> float:
    """Signed-power closed form of A, valid for 0 < alpha < 2:

        [1 / ((alpha+1)...(alpha+d-1))] * Sum_j1 (1 / prod tail) *
        Sum over sign patterns s of prod(s) *
        (theta_j1 + sum s_k theta_jk)^(d-1, alpha).

    The alternating sum loses about d-1 digits of relative accuracy for
    tiny |theta|, so the form is always evaluated on theta/|theta| and
    rescaled by |theta|^alpha (licensed by homogeneity of order alpha);
    this also makes the homogeneity relation hold to rounding.
    """
    coords = _check_a_point(_coords(theta), MAX_A_DIM)
    ap = as_alpha(alpha)
    if ap.regime is not Regime.SUB2:
        raise DomainError("the closed form of A requires 0 < alpha < 2")
    a = ap.value
    norm = math.hypot(*coords)
    u = [c / norm for c in coords]
    return norm**a * _a_closed_unit(u, a)


def _bracket_poly(d: int) -> list[int]:
    """Integer coefficients c_k with
    (2n+1)^d (n+1) - (2n-1)^d (n-1) = Sum c_k n^k; the degree-(d+1) terms
    cancel, so len(result) == d + 1."""
    plus = [math.comb(d, k) * 2**k for k in range(d + 1)]  # (2n+1)^d
    minus = [math.comb(d, k) * 2**k * (-1) ** (d - k) for k in range(d + 1)]
    out = [0] * (d + 2)
    for k in range(d + 1):
        out[k] += plus[k]  # * 1
        out[k + 1] += plus[k]  # * n
        out[k] += minus[k]  # - (2n-1)^d * (-1)
        out[k + 1] -= minus[k]  # - (2n-1)^d * n
    assert out[d + 1] == 0
    return out[: d + 1]


def super2_coefficient(
    d: int, alpha, budget: ErrorBudget | None = None
) -> float:
    """Coefficient of |theta|^2 in the super-quadratic regime:

        (1/6) Sum_n [(2n+1)^d (n+1) - (2n-1)^d (n-1)] / n^(d+alpha-1).

    Evaluated exactly as a finite zeta combination by expanding the
    bracket into powers of n; each zeta argument is
    d + alpha - 1 - k >= alpha - 1 > 1.
    """
    if d < 1:
        raise DomainError("d must be >= 1")
    ap = as_alpha(alpha)
    if ap.regime is not Regime.SUPER2:
        raise DomainError("coefficient series requires alpha > 2")
    a = ap.value
    coeffs = _bracket_poly(d)
    parts = [
        c * zeta(d + a - 1.0 - k) for k, c in enumerate(coeffs) if c != 0
    ]
    value = math.fsum(parts) / 6.0
    if budget is not None:
        # the zeta evaluations are the only error source (<= 1e-12 each)
        budget.achieved_tail = 1e-12 * math.fsum(abs(c) for c in coeffs) / 6.0
    return value


def theorem2_asym(theta, alpha) -> AsymptoticValue:
    """Three-regime asymptotic equivalent of the full lattice series F
    as theta -> 0."""
    coords = _coords(theta)
    d = len(coords)
    if d < 2:
        raise DomainError("the regime dispatch requires d >= 2")
    ap = as_alpha(alpha)
    a = ap.value
    norm = math.hypot(*coords)
    if ap.regime is Regime.SUB2:
        value = (2.0 / a) * hardy_constant(ap) * A_closed(coords, ap)
    elif ap.regime is Regime.CRIT2:
        if not 0.0 < norm < 1.0:
            raise DomainError("critical regime needs 0 < |theta| < 1")
        value = (2.0 ** (d - 1) * (d + 2) / 3.0) * norm**2 * math.log(1.0 / norm)
    else:
        value = super2_coefficient(d, ap) * norm**2
    return AsymptoticValue(value, ap.regime, "theorem2")
