"""Dimension-reduction identity for F: the full lattice series equals a
zeta/cotangent block plus box integrals of shifted one-dimensional series
H of lowered order. This module evaluates that right-hand side so the
identity can be checked numerically against the series evaluators.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from .combinatorics import enumerate_partitions, enumerate_signs, odd_set
from .errors import DomainError, SingularityError
from .quadrature import gauss_legendre
from .series import ErrorBudget, _coords, h_tail_corrected
from .special import as_alpha, zeta

#: Maximum number of integration variables in a box integral.
MAX_BOX_DIM = 6

TWO_PI = 2.0 * math.pi


@dataclass(frozen=True)
class QuadratureSpec:
    """Tensor-product quadrature policy for the box integrals."""

    nodes_per_axis: int = 32
    rule: str = "gauss-legendre"

    def __post_init__(self):
        if self.nodes_per_axis < 2:
            raise DomainError("nodes_per_axis must be >= 2")
        if self.rule != "gauss-legendre":
            raise DomainError(f"unknown quadrature rule {self.rule!r}")


def _x_cot_half(x: float) -> float:
    """x * cot(x/2), with the limit value 2 at x = 0; pole at |x| = 2 pi."""
    if abs(x) >= TWO_PI:
        raise SingularityError(f"|{x}| reaches the cotangent pole at 2*pi")
    if x == 0.0:
        return 2.0
    return x / math.tan(0.5 * x)


def cot_defect(halfwidths: Sequence[float], m: int | None = None) -> float:
    """2^k - prod(x cot(x/2)) over the k given values; 0 for the empty list.

    The optional m is caller bookkeeping (the head-block size the list was
    carved out of) and does not affect the value.
    """
    xs = [float(x) for x in halfwidths]
    prod = 1.0
    for x in xs:
        prod *= _x_cot_half(x)
    return 2.0 ** len(xs) - prod


def _default_budget() -> ErrorBudget:
    return ErrorBudget.tail_tolerance(1e-8)


# Geometric grading fractions toward an interval endpoint; panels shrink by
# a factor 10 so the |x|^s kink of H at a breakpoint never meets a node.
_GRADE = (1e-3, 1e-2, 1e-1)


def _graded_cuts(a: float, b: float) -> list[float]:
    ln = b - a
    cuts = [a]
    cuts += [a + f * ln for f in _GRADE]
    cuts += [b - f * ln for f in reversed(_GRADE)]
    cuts.append(b)
    return cuts


def _kink_points(lo: float, hi: float, offset: float) -> list[float]:
    """Solutions of offset + eta = 2 pi k inside (lo, hi)."""
    out = []
    k = math.ceil((lo + offset) / TWO_PI)
    while TWO_PI * k - offset < hi:
        p = TWO_PI * k - offset
        if p > lo:
            out.append(p)
        k += 1
    return out


def _h_value(c: float, order: float, tol: float) -> float:
    return h_tail_corrected(c, order, tol)[0]


def _box_rec(
    c: float, widths: Sequence[float], order: float, nodes: int, tol: float
) -> float:
    if not widths:
        return _h_value(c, order, tol)
    w = widths[0]
    rest = widths[1:]

    # Reduced-smoothness points of the partially integrated integrand: the
    # kink of H sweeps the facets of the remaining box.
    offsets = {0.0}
    for wr in rest:
        offsets = {o + s * wr for o in offsets for s in (-1.0, 0.0, 1.0)}
    splits = {-w, w}
    for o in offsets:
        splits.update(_kink_points(-w, w, c + o))
    pts = sorted(splits)

    x, wt = gauss_legendre(nodes)
    innermost = not rest
    parts = []
    for a, b in zip(pts, pts[1:]):
        panels = _graded_cuts(a, b) if innermost else [a, b]
        for p0, p1 in zip(panels, panels[1:]):
            mid = 0.5 * (p0 + p1)
            rad = 0.5 * (p1 - p0)
            acc = math.fsum(
                wi * _box_rec(c + mid + rad * xi, rest, order, nodes, tol)
                for xi, wi in zip(x, wt)
            )
            parts.append(rad * acc)
    return math.fsum(parts)


def box_integral_H(
    c: float,
    halfwidths: Sequence[float],
    order: float,
    quad: QuadratureSpec = QuadratureSpec(),
    budget: ErrorBudget | None = None,
) -> float:
    """Iterated integral of H_order(c + eta_1 + ... + eta_k) over the box
    prod [-w_j, w_j]; with no halfwidths, H_order(c) itself.

    Each inner H evaluation carries a tail-corrected series tolerance of
    budget.tolerance / nodes_per_axis so series truncation stays below the
    quadrature error.
    """
    if not order > 0:
        raise DomainError("order must be positive")
    widths = [abs(float(w)) for w in halfwidths]
    if len(widths) > MAX_BOX_DIM:
        raise DomainError(f"box integral capped at {MAX_BOX_DIM} variables")
    if any(w == 0.0 for w in widths):
        return 0.0
    if budget is None:
        budget = _default_budget()
    tol = (budget.tolerance or 1e-8) / quad.nodes_per_axis
    return _box_rec(float(c), widths, float(order), quad.nodes_per_axis, tol)


def theorem1_rhs(
    theta,
    alpha,
    quad: QuadratureSpec = QuadratureSpec(),
    budget: ErrorBudget | None = None,
) -> float:
    """The decomposition of F into a zeta/cotangent-defect block plus box
    integrals of H: evaluates the right-hand side of the identity.

    Every term is even in each coordinate, so coordinates are replaced by
    their absolute values. A zero coordinate in a tail block is handled by
    its analytic limit: cot(t/2) * integral over [-t, t] tends to 4 times
    the integrand at 0, so the variable is dropped and a factor 4 applied.
    """
    coords = [abs(c) for c in _coords(theta)]
    d = len(coords)
    if d < 2:
        raise DomainError("the decomposition requires d >= 2")
    for c in coords:
        if c >= TWO_PI:
            raise SingularityError(f"coordinate {c} reaches the cotangent pole")
    a = as_alpha(alpha).value
    if budget is None:
        budget = _default_budget()
    tol = (budget.tolerance or 1e-8) / quad.nodes_per_axis

    block1_terms = []
    block2_terms = []
    for m in odd_set(d):
        zeta_m = zeta(m + a)
        order = m + a - 1.0
        for part in enumerate_partitions(d, m):
            head = [coords[j - 1] for j in part.head]
            tail = [coords[j - 1] for j in part.tail]
            block1_terms.append(zeta_m * cot_defect(tail, m))

            live = [t for t in tail if t != 0.0]
            prefac = 4.0 ** (len(tail) - len(live))
            for t in live:
                prefac *= 1.0 / math.tan(0.5 * t)
            if len(live) > MAX_BOX_DIM:
                raise DomainError(f"box integral capped at {MAX_BOX_DIM} variables")
            sign_sum = []
            for pat in enumerate_signs(m):
                c0 = math.fsum(s * h for s, h in zip(pat.signs, head))
                if live:
                    sign_sum.append(
                        _box_rec(c0, live, order, quad.nodes_per_axis, tol)
                    )
                else:
                    sign_sum.append(_h_value(c0, order, tol))
            block2_terms.append(prefac * math.fsum(sign_sum))

    block1 = 2.0 * math.fsum(block1_terms)
    block2 = math.fsum(block2_terms) / 2.0 ** (d - 1)
    return block1 + block2
