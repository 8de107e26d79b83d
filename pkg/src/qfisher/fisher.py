"""Position and momentum Fisher information, numeric and closed form."""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np
from scipy.integrate import simpson

from .quadrature import Finite, IntegralResult, QuadratureConfig, WholeLine, fourier_transform_numeric, integrate
from .systems import (
    BoundState,
    System,
    hydrogen_cutoff,
    hydrogen_gamma,
    hydrogen_gamma_derivative,
    hydrogen_phi,
    hydrogen_psi,
    hydrogen_psi_derivative,
    hydrogen_rho,
    well_psi,
    well_psi_derivative,
)

__all__ = [
    "Space",
    "FisherReport",
    "fisher_position",
    "fisher_position_from_density",
    "fisher_momentum",
    "fisher_closed_hydrogen",
    "well_fisher_momentum_via_position",
    "well_fisher_momentum_direct",
    "inner_product",
    "orthonormality_check",
    "build_report",
]


class Space(str, enum.Enum):
    POSITION = "position"
    MOMENTUM = "momentum"


@dataclass(frozen=True)
class FisherReport:
    state: BoundState
    i_rho_numeric: float
    i_rho_closed: float | None
    i_gamma_numeric: float
    i_gamma_closed: float | None
    product: float
    max_abs_discrepancy: float
    converged: bool


def _position_domain(state: BoundState) -> Finite:
    if state.system is System.HYDROGEN:
        return Finite(0.0, hydrogen_cutoff(state.n))
    return Finite(-state.width / 2, state.width / 2)


def _node_breakpoints(state: BoundState) -> np.ndarray:
    # Panels of about one node spacing keep the first level from undersampling.
    dom = _position_domain(state)
    return np.linspace(dom.a, dom.b, 4 * state.n + 1)[1:-1]


def fisher_position(state: BoundState, config: QuadratureConfig | None = None) -> IntegralResult:
    """Position Fisher information as 4 * int psi'(x)^2 dx.

    For a real wavefunction this equals int rho'^2/rho dx and has no 0/0 at
    the nodes of the density.
    """
    if state.system is System.HYDROGEN:
        def f(x):
            return 4.0 * hydrogen_psi_derivative(state.n, x) ** 2
    else:
        def f(x):
            return 4.0 * well_psi_derivative(state.n, state.width, x) ** 2
    return integrate(f, _position_domain(state), config, points=_node_breakpoints(state))


def fisher_position_from_density(state: BoundState, config: QuadratureConfig | None = None) -> IntegralResult:
    """int rho'^2/rho dx in its defining form; only sound for node-free states."""
    if state.n != 1:
        raise ValueError("the density form divides by rho and needs a node-free state (n = 1)")
    if state.system is System.HYDROGEN:
        def f(x):
            psi = hydrogen_psi(1, x)
            drho = 2.0 * psi * hydrogen_psi_derivative(1, x)
            return drho**2 / hydrogen_rho(1, x)
    else:
        def f(x):
            psi = well_psi(1, state.width, x)
            drho = 2.0 * psi * well_psi_derivative(1, state.width, x)
            return drho**2 / psi**2
    return integrate(f, _position_domain(state), config)


def fisher_momentum(state: BoundState, config: QuadratureConfig | None = None) -> IntegralResult:
    """int gamma'^2/gamma dp over the whole line, from the closed-form density."""
    if state.system is not System.HYDROGEN:
        raise ValueError("well momentum Fisher information: use well_fisher_momentum_via_position")
    n = state.n

    def f(p):
        return hydrogen_gamma_derivative(n, p) ** 2 / hydrogen_gamma(n, p)

    points = [s * k / n for k in (0.25, 1.0, 4.0, 16.0) for s in (-1, 1)]
    return integrate(f, WholeLine(), config, points=points)


def fisher_closed_hydrogen(n: int) -> tuple[float, float]:
    if int(n) != n or n < 1:
        raise ValueError("quantum index must be a positive integer")
    return 4.0 / n**2, 2.0 * n**2


def well_fisher_momentum_via_position(n: int, a: float, config: QuadratureConfig | None = None) -> IntegralResult:
    """Momentum Fisher information of the well as 4 * int x^2 psi^2 dx."""
    state = BoundState(System.WELL, n, a)

    def f(x):
        return 4.0 * x**2 * well_psi(n, a, x) ** 2

    return integrate(f, _position_domain(state), config, points=_node_breakpoints(state))


def well_fisher_momentum_direct(
    n: int,
    a: float,
    config: QuadratureConfig | None = None,
    *,
    p_max: float = 200.0,
    step: float = 0.1,
) -> IntegralResult:
    """Momentum Fisher information of the well computed in momentum space.

    Phi is obtained on a uniform grid by numerical Fourier transform, its
    derivative by a five-point difference, and 4|Phi'|^2 is integrated by
    Simpson's rule on [-p_max, p_max]. The tails fall off as p^-4 and are
    added from the large-p asymptotics, which depend only on psi'(+-a/2).

    The error estimate compares Simpson's rule at ``step`` and ``2 * step``;
    it does not cover the asymptotic tail, whose relative error is of order
    1/(a p_max).
    """
    state = BoundState(System.WELL, n, a)
    dom = _position_domain(state)
    k_max = int(round(p_max / step))
    k_max += k_max % 4
    p = step * np.arange(-2, k_max + 3)

    def psi(x):
        return well_psi(n, a, x)

    converged = True
    phi = np.empty(len(p), dtype=complex)
    for i, pk in enumerate(p):
        phi[i], (re, im) = fourier_transform_numeric(psi, pk, dom, config, full_output=True)
        converged = converged and re.converged and im.converged
    dphi = (phi[:-4] - 8.0 * phi[1:-3] + 8.0 * phi[3:-1] - phi[4:]) / (12.0 * step)
    grid = p[2:-2]
    integrand = 4.0 * np.abs(dphi) ** 2
    # |Phi'|^2 is even in p.
    body = 2.0 * simpson(integrand, x=grid)
    body_coarse = 2.0 * simpson(integrand[::2], x=grid[::2])
    edge = well_psi_derivative(n, a, np.array([-a / 2, a / 2]))
    p_end = grid[-1]
    tail = 2.0 * 4.0 * (a / 2) ** 2 * float(np.sum(edge**2)) / (2.0 * math.pi) / (3.0 * p_end**3)
    return IntegralResult(
        value=float(body + tail),
        error_estimate=float(abs(body - body_coarse)),
        converged=converged,
        panels_used=len(grid) - 1,
    )


def inner_product(
    n: int,
    n_prime: int,
    space: Space,
    system: System = System.HYDROGEN,
    width: float = 1.0,
    config: QuadratureConfig | None = None,
    *,
    phi=hydrogen_phi,
) -> tuple[complex, bool]:
    """<n'|n> in the requested representation, with a convergence flag.

    ``phi`` lets callers substitute the momentum waveform; it exists for
    fault-injection checks and defaults to the closed form.
    """
    space = Space(space)
    system = System(system)
    if space is Space.POSITION:
        if system is System.HYDROGEN:
            dom = Finite(0.0, hydrogen_cutoff(max(n, n_prime)))

            def f(x):
                return hydrogen_psi(n_prime, x) * hydrogen_psi(n, x)
        else:
            dom = Finite(-width / 2, width / 2)

            def f(x):
                return well_psi(n_prime, width, x) * well_psi(n, width, x)
        pts = np.linspace(dom.a, dom.b, 4 * max(n, n_prime) + 1)[1:-1]
        res = integrate(f, dom, config, points=pts)
        return complex(res.value), res.converged

    if system is not System.HYDROGEN:
        raise ValueError("momentum overlaps are available for hydrogen only")
    m = max(n, n_prime)
    pts = [s * k / m for k in (0.25, 1.0, 4.0, 16.0) for s in (-1, 1)]
    re = integrate(lambda p: (np.conj(phi(n_prime, p)) * phi(n, p)).real, WholeLine(), config, points=pts)
    im = integrate(lambda p: (np.conj(phi(n_prime, p)) * phi(n, p)).imag, WholeLine(), config, points=pts)
    return complex(re.value, im.value), re.converged and im.converged


def orthonormality_check(
    n: int,
    n_prime: int,
    space: Space,
    system: System = System.HYDROGEN,
    width: float = 1.0,
    config: QuadratureConfig | None = None,
) -> float:
    """Real part of <n'|n>; should equal the Kronecker delta."""
    value, _ = inner_product(n, n_prime, space, system, width, config)
    return value.real


def build_report(state: BoundState, config: QuadratureConfig | None = None) -> FisherReport:
    i_rho = fisher_position(state, config)
    if state.system is System.HYDROGEN:
        i_gamma = fisher_momentum(state, config)
        rho_closed, gamma_closed = fisher_closed_hydrogen(state.n)
        discrepancy = max(abs(i_rho.value - rho_closed), abs(i_gamma.value - gamma_closed))
    else:
        i_gamma = well_fisher_momentum_via_position(state.n, state.width, config)
        rho_closed = gamma_closed = None
        discrepancy = 0.0
    return FisherReport(
        state=state,
        i_rho_numeric=i_rho.value,
        i_rho_closed=rho_closed,
        i_gamma_numeric=i_gamma.value,
        i_gamma_closed=gamma_closed,
        product=i_rho.value * i_gamma.value,
        max_abs_discrepancy=discrepancy,
        converged=i_rho.converged and i_gamma.converged,
    )
