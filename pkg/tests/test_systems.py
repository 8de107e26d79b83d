import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st
from scipy.integrate import quad

from qfisher.systems import (
    BoundState,
    System,
    hydrogen_cutoff,
    hydrogen_energy,
    hydrogen_gamma,
    hydrogen_gamma_derivative,
    hydrogen_phi,
    hydrogen_psi,
    hydrogen_psi_derivative,
    hydrogen_rho,
    schrodinger_residual,
    well_psi,
    well_psi_derivative,
)
from qfisher.verify import count_nodes

SQRT_2_OVER_PI = math.sqrt(2 / math.pi)


@pytest.mark.parametrize("n, energy", [(1, -0.5), (2, -0.125), (10, -0.005)])
def test_energy(n, energy):
    assert hydrogen_energy(n) == energy


def test_bound_state_validation():
    assert BoundState("hydrogen", 3).system is System.HYDROGEN
    with pytest.raises(ValueError):
        BoundState(System.HYDROGEN, 0)
    with pytest.raises(ValueError):
        BoundState(System.WELL, 1, width=0.0)


def test_psi_examples():
    assert hydrogen_psi(1, 1.0) == pytest.approx(2 * math.exp(-1), rel=1e-15)
    assert hydrogen_psi(3, 0.0) == 0.0
    assert hydrogen_psi(2, 2.0) == pytest.approx(0.0, abs=1e-16)
    with pytest.raises(ValueError):
        hydrogen_psi(1, -0.1)


def test_psi_derivative_examples():
    assert hydrogen_psi_derivative(1, 0.0) == pytest.approx(2.0, rel=1e-15)
    assert hydrogen_psi_derivative(1, 1.0) == pytest.approx(0.0, abs=1e-16)
    h = 1e-5
    fd = (hydrogen_psi(2, 1.0 + h) - hydrogen_psi(2, 1.0 - h)) / (2 * h)
    assert hydrogen_psi_derivative(2, 1.0) == pytest.approx(fd, abs=1e-8)


@pytest.mark.parametrize("n", [3, 5, 8])
def test_psi_derivative_finite_difference(n):
    h = 1e-5
    x = np.linspace(0.3, 6 * n, 40)
    fd = (hydrogen_psi(n, x + h) - hydrogen_psi(n, x - h)) / (2 * h)
    assert np.max(np.abs(hydrogen_psi_derivative(n, x) - fd)) <= 1e-8


def test_phi_examples():
    assert hydrogen_phi(1, 0.0) == pytest.approx(complex(SQRT_2_OVER_PI, 0), abs=1e-15)
    val = hydrogen_phi(1, 1.0)
    assert val.real == pytest.approx(0.0, abs=1e-15)
    assert val.imag == pytest.approx(-SQRT_2_OVER_PI / 2, rel=1e-14)
    assert abs(hydrogen_phi(4, 0.5)) ** 2 == pytest.approx(hydrogen_gamma(4, 0.5), abs=1e-12)


def test_rho_examples():
    assert hydrogen_rho(1, 1.0) == pytest.approx(4 * math.exp(-2), rel=1e-15)
    assert hydrogen_rho(2, 2.0) == pytest.approx(0.0, abs=1e-30)
    norm, _ = quad(lambda x: hydrogen_rho(1, x), 0, np.inf)
    assert norm == pytest.approx(1.0, abs=1e-10)


def test_gamma_examples():
    assert hydrogen_gamma(1, 0.0) == pytest.approx(2 / math.pi, rel=1e-15)
    assert hydrogen_gamma(3, 0.0) == pytest.approx(6 / math.pi, rel=1e-15)
    norm, _ = quad(lambda p: hydrogen_gamma(2, p), -np.inf, np.inf, epsabs=1e-13, epsrel=1e-13)
    assert norm == pytest.approx(1.0, abs=1e-10)


def test_gamma_derivative_finite_difference():
    h = 1e-6
    p = np.linspace(-3, 3, 41)
    fd = (hydrogen_gamma(3, p + h) - hydrogen_gamma(3, p - h)) / (2 * h)
    assert np.allclose(hydrogen_gamma_derivative(3, p), fd, atol=1e-7)


@pytest.mark.parametrize("n", range(1, 9))
def test_density_consistency(n):
    x = np.linspace(0.0, hydrogen_cutoff(n), 400)
    rho = hydrogen_rho(n, x)
    psi2 = hydrogen_psi(n, x) ** 2
    assert np.all(np.abs(rho - psi2) <= 1e-12 * np.abs(rho))
    p = np.linspace(-5, 5, 201)
    assert np.allclose(np.abs(hydrogen_phi(n, p)) ** 2, hydrogen_gamma(n, p), rtol=1e-12, atol=0)


@given(n=st.integers(1, 12), p=st.floats(-50, 50))
def test_phi_symmetry(n, p):
    plus, minus = hydrogen_phi(n, p), hydrogen_phi(n, -p)
    assert minus.real == pytest.approx(plus.real, rel=1e-14, abs=1e-300)
    assert minus.imag == pytest.approx(-plus.imag, rel=1e-14, abs=1e-300)


@pytest.mark.parametrize("n", range(1, 9))
def test_phi_is_genuinely_complex(n):
    p = np.linspace(-5, 5, 201)
    assert np.max(np.abs(hydrogen_phi(n, p).imag)) > 0.1


@pytest.mark.parametrize("n", range(1, 7))
def test_node_count(n):
    assert count_nodes(n) == n - 1


@pytest.mark.parametrize("n, x", [(1, 1.0), (3, 5.0), (1, 0.5)])
def test_residual_examples(n, x):
    assert schrodinger_residual(n, x, 1e-4) <= 1e-6


@pytest.mark.parametrize("n", range(1, 7))
def test_residual_log_grid(n):
    worst = max(schrodinger_residual(n, float(x)) for x in np.geomspace(0.05, 40 * n, 50))
    assert worst <= 1e-6


def test_residual_rejects_stencil_outside_domain():
    with pytest.raises(ValueError):
        schrodinger_residual(1, 1.5e-4, 1e-4)


def test_residual_detects_wrong_energy():
    # Sanity: the residual is sensitive, so a wrong wavefunction would show.
    x, h = 3.0, 1e-4
    stencil = x + h * np.array([-2.0, -1.0, 0.0, 1.0, 2.0])
    f = hydrogen_psi(2, stencil)
    d2 = (-f[0] + 16 * f[1] - 30 * f[2] + 16 * f[3] - f[4]) / (12 * h * h)
    assert abs(-0.5 * d2 - f[2] / x - hydrogen_energy(1) * f[2]) > 1e-3


def test_cutoff_captures_density():
    for n in (1, 5, 10, 20, 30):
        assert hydrogen_rho(n, hydrogen_cutoff(n)) < 1e-30
        x = np.linspace(hydrogen_cutoff(n), 2 * hydrogen_cutoff(n), 200)
        assert np.all(hydrogen_rho(n, x) < 1e-30)


def test_well_examples():
    assert well_psi(1, 1.0, 0.0) == pytest.approx(math.sqrt(2), rel=1e-15)
    assert well_psi(2, 1.0, 0.0) == pytest.approx(0.0, abs=1e-15)
    assert well_psi(3, 1.0, 0.5) == pytest.approx(0.0, abs=1e-14)
    norm, _ = quad(lambda x: well_psi(1, 2.0, x) ** 2, -1.0, 1.0)
    assert norm == pytest.approx(1.0, abs=1e-12)
    with pytest.raises(ValueError):
        well_psi(1, 1.0, 0.6)


def test_well_derivative_finite_difference():
    h = 1e-6
    x = np.linspace(-0.4, 0.4, 9)
    fd = (well_psi(3, 1.0, x + h) - well_psi(3, 1.0, x - h)) / (2 * h)
    assert np.allclose(well_psi_derivative(3, 1.0, x), fd, atol=1e-6)
