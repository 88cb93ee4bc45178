import math
import random

import pytest

from cosasym.asymptotics import (
    A_closed,
    A_integral,
    hstar,
    regime,
    signed_power,
    super2_coefficient,
    theorem2_asym,
)
from cosasym.errors import DomainError
from cosasym.series import ErrorBudget, eval_H
from cosasym.special import Regime, zeta

# Brute-force 1e6-term partial sum of the d=2 quadratic-regime coefficient
# series at alpha=3 (bracket reduces to 16n^2 + 2); frozen, with its
# integral-comparison tail bound.
SUPER2_2_3_BRUTE = 4.747262589500317
SUPER2_2_3_BRUTE_TAIL = (16.0 / 6.0) * 1e-6 * 1.01


class TestRegime:
    def test_classification(self):
        assert regime(0.5).regime is Regime.SUB2
        assert regime(2.0).regime is Regime.CRIT2
        assert regime(2.0001).regime is Regime.SUPER2

    def test_domain(self):
        with pytest.raises(DomainError):
            regime(-0.5)


class TestSignedPower:
    def test_values(self):
        assert signed_power(-2.0, 1, 1.0) == -4.0
        assert signed_power(0.0, 3, 0.5) == 0.0
        assert signed_power(-0.5, 2, 0.5) == pytest.approx(0.25 * math.sqrt(0.5))

    def test_derivative_identity(self):
        # d/dx x^(m,alpha) = (alpha + m) x^(m-1,alpha), by central differences
        h = 1e-5
        for x in (0.7, -0.7):
            for m in (1, 2, 3):
                for a in (0.5, 1.5):
                    num = (signed_power(x + h, m, a) - signed_power(x - h, m, a)) / (2 * h)
                    exact = (a + m) * signed_power(x, m - 1, a)
                    assert num == pytest.approx(exact, rel=1e-6)


class TestHStar:
    def test_alpha_one(self):
        assert hstar(0.01, 1.0).value == pytest.approx(math.pi / 2 * 0.01, rel=1e-12)

    def test_super2(self):
        assert hstar(0.01, 3.0).value == pytest.approx(0.5 * zeta(2.0) * 1e-4, rel=1e-12)

    def test_matches_series(self):
        th = 1e-3
        h = eval_H(th, 0.5, ErrorBudget.fixed_shells(10_000_000)).value
        assert abs(h / hstar(th, 0.5).value - 1.0) <= 2e-2

    def test_crit2_domain(self):
        with pytest.raises(DomainError):
            hstar(1.5, 2.0)
        assert hstar(0.1, 2.0).value == pytest.approx(0.5 * 0.01 * math.log(10.0))


class TestAForms:
    def test_exact_point(self):
        # 1-D oracle: 2 * Int_{-1}^{1} |1 + eta| d eta = 4
        assert A_integral((1.0, 1.0), 1.0) == pytest.approx(4.0, abs=1e-12)
        assert A_closed((1.0, 1.0), 1.0) == pytest.approx(4.0, abs=1e-12)

    def test_closed_equals_integral(self):
        rnd = random.Random(3)
        for _ in range(60):
            d = rnd.choice([2, 3, 4])
            a = rnd.choice([0.25, 0.5, 1.0, 1.5, 1.9])
            th = [rnd.uniform(0.1, 1.0) for _ in range(d)]
            ai = A_integral(th, a)
            ac = A_closed(th, a)
            assert abs(ai - ac) <= 1e-8 * (1.0 + abs(ai))

    def test_d2_example_shape(self):
        # closed form for d=2, written out independently
        t1, t2, a = 0.37, 0.81, 0.6
        expected = (
            (1 / t2) * (signed_power(t1 + t2, 1, a) - signed_power(t1 - t2, 1, a))
            + (1 / t1) * (signed_power(t2 + t1, 1, a) - signed_power(t2 - t1, 1, a))
        ) / (a + 1)
        assert A_closed((t1, t2), a) == pytest.approx(expected, rel=1e-12)

    def test_homogeneity_exact(self):
        th, a = (0.3, 0.8, 0.44), 0.7
        base = A_closed(th, a)
        for t in (1e-6, 0.5, 2.0, 10.0):
            scaled = A_closed([t * x for x in th], a)
            assert scaled == pytest.approx(t**a * base, rel=1e-12)

    def test_integral_homogeneity(self):
        th, a = (0.3, 0.8), 0.7
        base = A_integral(th, a)
        for t in (0.5, 2.0):
            assert A_integral([t * x for x in th], a) == pytest.approx(
                t**a * base, rel=1e-8
            )

    def test_sign_flip_invariance(self):
        th, a = (0.3, -0.8, 0.44), 1.2
        flipped = [-x for x in th]
        assert A_integral(th, a) == pytest.approx(A_integral(flipped, a), rel=1e-8)

    def test_permutation_symmetry(self):
        th, a = (0.3, 0.8, 0.44), 0.7
        assert A_closed(th, a) == pytest.approx(A_closed(th[::-1], a), rel=1e-12)

    def test_positivity(self):
        rnd = random.Random(9)
        for _ in range(20):
            th = [rnd.uniform(0.05, 1.5) for _ in range(rnd.choice([2, 3]))]
            assert A_closed(th, 0.9) > 0.0

    def test_domain_errors(self):
        with pytest.raises(DomainError):
            A_integral((0.0, 0.5), 0.5)
        with pytest.raises(DomainError):
            A_closed((0.3, 0.5), 2.5)
        with pytest.raises(DomainError):
            A_integral((0.5,), 0.5)
        with pytest.raises(DomainError):
            A_integral([0.3] * 8, 0.5)


class TestSuper2Coefficient:
    def test_d1_reduces_to_zeta(self):
        for a in (2.5, 3.0, 4.0):
            assert super2_coefficient(1, a) == pytest.approx(zeta(a - 1.0), abs=1e-10)

    def test_d2_against_brute_force(self):
        budget = ErrorBudget.tail_tolerance(1e-10)
        v = super2_coefficient(2, 3.0, budget)
        assert abs(v - SUPER2_2_3_BRUTE) <= SUPER2_2_3_BRUTE_TAIL + budget.achieved_tail

    def test_domain(self):
        with pytest.raises(DomainError):
            super2_coefficient(2, 2.0)


class TestTheorem2:
    def test_quadratic_scaling_super2(self):
        th = (0.02, 0.03)
        base = theorem2_asym(th, 3.0).value
        scaled = theorem2_asym((0.01, 0.015), 3.0).value
        assert scaled == pytest.approx(base / 4.0, rel=1e-12)

    def test_alpha_scaling_sub2(self):
        base = theorem2_asym((0.01, 0.01), 0.5).value
        scaled = theorem2_asym((0.0025, 0.0025), 0.5).value
        assert scaled == pytest.approx(base * 0.25**0.5, rel=1e-12)

    def test_crit2_value(self):
        th = (0.01, 0.01)
        norm = math.hypot(*th)
        expected = (2.0 * 4.0 / 3.0) * norm**2 * math.log(1.0 / norm)
        assert theorem2_asym(th, 2.0).value == pytest.approx(expected, rel=1e-12)

    def test_regime_tags(self):
        assert theorem2_asym((0.1, 0.1), 0.5).regime is Regime.SUB2
        assert theorem2_asym((0.1, 0.1), 2.0).regime is Regime.CRIT2
        assert theorem2_asym((0.1, 0.1), 3.0).regime is Regime.SUPER2

    def test_crit2_domain(self):
        with pytest.raises(DomainError):
            theorem2_asym((1.0, 1.0), 2.0)
