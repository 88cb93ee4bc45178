import numpy as np
import pytest

from cosasym import _kernels_py
from cosasym.backend import BACKEND_NAME, get_backend

try:
    from cosasym import _kernels_cy
except ImportError:  # pragma: no cover - compiled extension always built in CI
    _kernels_cy = None

needs_compiled = pytest.mark.skipif(
    _kernels_cy is None, reason="compiled extension not built"
)


def test_backend_selected():
    assert BACKEND_NAME in ("python", "compiled")
    assert hasattr(get_backend(), "h_partial_sum")


@needs_compiled
class TestParity:
    """The numpy and Cython backends must agree to rounding noise."""

    def test_h_partial_sum(self):
        for theta, s, n in [(0.3, 1.7, 100_000), (2.9, 3.1, 5_000), (-1.2, 1.2, 50_000)]:
            a = _kernels_py.h_partial_sum(theta, s, n)
            b = _kernels_cy.h_partial_sum(theta, s, n)
            assert a == pytest.approx(b, rel=1e-13)

    def test_kernel_partial_sum(self):
        rng = np.random.default_rng(0)
        for d in (1, 2, 3):
            for _ in range(3):
                th = rng.uniform(-3, 3, d)
                p = d + rng.uniform(0.3, 3.0)
                a = _kernels_py.kernel_partial_sum(th, p, 3000)
                b = _kernels_cy.kernel_partial_sum(th, p, 3000)
                assert a == pytest.approx(b, rel=1e-11, abs=1e-11)
                am = _kernels_py.kernel_partial_sum(th, p, 3000, 1.0, 0.5)
                bm = _kernels_cy.kernel_partial_sum(th, p, 3000, 1.0, 0.5)
                assert am == pytest.approx(bm, rel=1e-11, abs=1e-11)

    def test_lattice_shell_sums(self):
        rng = np.random.default_rng(1)
        for d in (1, 2, 3):
            th = rng.uniform(-3, 3, d)
            n = 40 if d == 3 else 120
            a = _kernels_py.lattice_shell_sums(th, n)
            b = _kernels_cy.lattice_shell_sums(th, n)
            np.testing.assert_allclose(a, b, rtol=1e-11, atol=1e-9)

    def test_noise_shell_sums_identical_stream(self):
        # both backends hash (seed, z) with the same splitmix64 chain
        rng = np.random.default_rng(2)
        for d in (1, 2, 3):
            th = rng.uniform(-3, 3, d)
            n = 30 if d == 3 else 100
            a = _kernels_py.lattice_noise_shell_sums(th, n, 0.5, 2.0, 12345)
            b = _kernels_cy.lattice_noise_shell_sums(th, n, 0.5, 2.0, 12345)
            np.testing.assert_allclose(a, b, rtol=1e-11, atol=1e-9)

    def test_shell_zero_empty(self):
        th = np.array([0.5, 0.7])
        for mod in (_kernels_py, _kernels_cy):
            assert mod.lattice_shell_sums(th, 10)[0] == 0.0
