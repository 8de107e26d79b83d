import math

import numpy as np
import pytest
from scipy.integrate import quad

from qfisher.fisher import (
    Space,
    build_report,
    fisher_closed_hydrogen,
    fisher_momentum,
    fisher_position,
    fisher_position_from_density,
    inner_product,
    orthonormality_check,
    well_fisher_momentum_direct,
    well_fisher_momentum_via_position,
)
from qfisher.systems import BoundState, System, hydrogen_energy, hydrogen_phi, well_psi

WELL_GROUND = 1 / 3 - 2 / math.pi**2


def H(n):
    return BoundState(System.HYDROGEN, n)


def W(n, a=1.0):
    return BoundState(System.WELL, n, a)


@pytest.mark.parametrize("n, expected", [(1, 4.0), (3, 4 / 9)])
def test_position_examples(n, expected):
    res = fisher_position(H(n))
    assert res.converged
    assert res.value == pytest.approx(expected, abs=1e-8)


def test_well_position_fisher():
    # 4 int psi'^2 with psi' = sqrt(2) pi cos(pi x + pi/2) gives 4 pi^2.
    oracle, _ = quad(lambda x: 4 * (math.sqrt(2) * math.pi * math.cos(math.pi * x + math.pi / 2)) ** 2, -0.5, 0.5)
    assert oracle == pytest.approx(4 * math.pi**2, rel=1e-12)
    assert fisher_position(W(1)).value == pytest.approx(4 * math.pi**2, abs=1e-6)


@pytest.mark.parametrize("n, expected", [(1, 2.0), (2, 8.0), (5, 50.0)])
def test_momentum_examples(n, expected):
    res = fisher_momentum(H(n))
    assert res.converged
    assert res.value == pytest.approx(expected, abs=1e-8)


def test_momentum_rejects_well():
    with pytest.raises(ValueError):
        fisher_momentum(W(1))


def test_closed_form_examples():
    assert fisher_closed_hydrogen(1) == (4.0, 2.0)
    assert fisher_closed_hydrogen(2) == (1.0, 8.0)
    for n in range(1, 30):
        rho, gamma = fisher_closed_hydrogen(n)
        assert rho * gamma == pytest.approx(8.0, rel=1e-15)
        e = abs(hydrogen_energy(n))
        assert rho == pytest.approx(8 * e, rel=1e-10)
        assert gamma == pytest.approx(1 / e, rel=1e-10)


@pytest.mark.parametrize("n", range(1, 21))
def test_numeric_matches_closed_form(n):
    rho_closed, gamma_closed = fisher_closed_hydrogen(n)
    rho = fisher_position(H(n)).value
    gamma = fisher_momentum(H(n)).value
    assert abs(rho - rho_closed) <= 1e-8 * rho_closed
    assert abs(gamma - gamma_closed) <= 1e-8 * gamma_closed
    assert abs(rho * gamma - 8.0) <= 1e-6
    e = abs(hydrogen_energy(n))
    assert rho == pytest.approx(8 * e, rel=1e-8)
    assert gamma == pytest.approx(1 / e, rel=1e-8)


def test_product_is_not_quadratic_in_n():
    products = [fisher_position(H(n)).value * fisher_momentum(H(n)).value for n in range(1, 11)]
    second_diff = np.diff(products, 2)
    assert np.max(np.abs(second_diff)) < 1e-10


@pytest.mark.parametrize("state", [H(1), W(1), W(1, 2.5)])
def test_density_form_agrees_with_derivative_form(state):
    direct = fisher_position_from_density(state)
    reformulated = fisher_position(state)
    assert direct.value == pytest.approx(reformulated.value, rel=1e-9)


def test_density_form_refuses_states_with_nodes():
    with pytest.raises(ValueError):
        fisher_position_from_density(H(2))


def test_well_via_position_examples():
    res = well_fisher_momentum_via_position(1, 1.0)
    assert res.value == pytest.approx(WELL_GROUND, abs=1e-8)
    for n in (1, 2, 5):
        assert well_fisher_momentum_via_position(n, 2.0).value == pytest.approx(
            4 * well_fisher_momentum_via_position(n, 1.0).value, rel=1e-12
        )


def test_well_via_position_tends_to_a_squared_over_three():
    x = np.linspace(-0.5, 0.5, 200_001)
    values = []
    for n in range(1, 51):
        value = well_fisher_momentum_via_position(n, 1.0).value
        oracle = float(np.trapezoid(4 * x**2 * well_psi(n, 1.0, x) ** 2, x))
        assert value == pytest.approx(oracle, rel=1e-8)
        values.append(value)
    assert np.all(np.diff(values) > 0)
    assert values[-1] < 1 / 3
    assert 1 / 3 - values[-1] < 1e-3


@pytest.mark.parametrize("n", [1, 3])
def test_well_momentum_space_route(n):
    via_x = well_fisher_momentum_via_position(n, 1.0).value
    direct = well_fisher_momentum_direct(n, 1.0)
    assert direct.converged
    assert direct.value == pytest.approx(via_x, rel=1e-4)


def test_orthonormality_examples():
    assert orthonormality_check(1, 1, Space.POSITION) == pytest.approx(1.0, abs=1e-10)
    assert orthonormality_check(1, 2, Space.POSITION) == pytest.approx(0.0, abs=1e-10)
    assert orthonormality_check(2, 3, Space.MOMENTUM) == pytest.approx(0.0, abs=1e-8)
    assert orthonormality_check(2, 3, "position", System.WELL, 1.7) == pytest.approx(0.0, abs=1e-10)
    assert orthonormality_check(4, 4, "position", System.WELL, 1.7) == pytest.approx(1.0, abs=1e-10)


@pytest.mark.parametrize("space", list(Space))
def test_orthonormality_matrix(space):
    worst = 0.0
    for n in range(1, 9):
        for m in range(1, 9):
            val, ok = inner_product(n, m, space)
            assert ok
            worst = max(worst, abs(val.real - (n == m)), abs(val.imag))
    assert worst <= 1e-8


def test_real_momentum_waveform_breaks_orthogonality():
    val, _ = inner_product(1, 2, Space.MOMENTUM, phi=lambda n, p: np.abs(hydrogen_phi(n, p)))
    assert abs(val) > 0.1


def test_report_hydrogen():
    rep = build_report(H(4))
    assert rep.i_rho_closed == 0.25
    assert rep.i_gamma_closed == 32.0
    assert rep.product == pytest.approx(8.0, abs=1e-6)
    assert rep.product == rep.i_rho_numeric * rep.i_gamma_numeric
    assert rep.converged
    assert build_report(H(1)).max_abs_discrepancy <= 1e-8


def test_report_well():
    rep = build_report(W(2))
    assert rep.i_rho_closed is None and rep.i_gamma_closed is None
    assert rep.product > 0 and math.isfinite(rep.product)
    assert rep.converged
