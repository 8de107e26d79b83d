"""Bound states of the half-line hydrogen atom and the infinite well.

Coulomb units throughout: lengths in hbar^2/(m alpha), energies in
m alpha^2/hbar^2, momenta in m alpha/hbar, and hbar = 1 in the Fourier
kernel. Position-space functions accept scalars or arrays.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from .specfun import laguerre, laguerre_derivative

__all__ = [
    "System",
    "BoundState",
    "hydrogen_energy",
    "hydrogen_psi",
    "hydrogen_psi_derivative",
    "hydrogen_phi",
    "hydrogen_rho",
    "hydrogen_gamma",
    "hydrogen_gamma_derivative",
    "hydrogen_cutoff",
    "schrodinger_residual",
    "well_energy",
    "well_psi",
    "well_psi_derivative",
]


class System(str, enum.Enum):
    HYDROGEN = "hydrogen"
    WELL = "well"


@dataclass(frozen=True)
class BoundState:
    """A stationary state: the system, quantum index ``n`` and well width."""

    system: System
    n: int
    width: float = 1.0

    def __post_init__(self):
        object.__setattr__(self, "system", System(self.system))
        if int(self.n) != self.n or self.n < 1:
            raise ValueError(f"quantum index must be a positive integer, got {self.n!r}")
        if self.system is System.WELL and not self.width > 0:
            raise ValueError(f"well width must be positive, got {self.width!r}")


def _check_n(n):
    if int(n) != n or n < 1:
        raise ValueError(f"quantum index must be a positive integer, got {n!r}")
    return int(n)


def _half_line(x):
    x = np.asarray(x, dtype=float)
    if np.any(x < 0):
        raise ValueError("hydrogen states live on x >= 0")
    return x


def _out(arr):
    return arr if np.ndim(arr) else float(arr)


def hydrogen_energy(n: int) -> float:
    n = _check_n(n)
    return -1.0 / (2.0 * n * n)


def hydrogen_cutoff(n: int) -> float:
    """Upper integration limit for position integrals; rho_n < 1e-30 beyond.

    The outermost lobe of psi_n sits near x ~ 2 n^2, so the limit has to grow
    quadratically with n; a bound linear in n truncates states with n > 5.
    """
    n = _check_n(n)
    return float(n * (3 * n + 50))


def hydrogen_psi(n: int, x):
    """Position eigenfunction (2x/n^(5/2)) exp(-x/n) L_{n-1}^(1)(2x/n)."""
    n = _check_n(n)
    x = _half_line(x)
    y = 2.0 * x / n
    return _out(2.0 * x / n**2.5 * np.exp(-x / n) * laguerre(n - 1, 1, y))


def hydrogen_psi_derivative(n: int, x):
    n = _check_n(n)
    x = _half_line(x)
    y = 2.0 * x / n
    lag = laguerre(n - 1, 1, y)
    dlag = laguerre_derivative(n - 1, 1, y)
    return _out(2.0 / n**2.5 * np.exp(-x / n) * ((1.0 - x / n) * lag + 2.0 * x / n * dlag))


def hydrogen_rho(n: int, x):
    n = _check_n(n)
    x = _half_line(x)
    y = 2.0 * x / n
    return _out(y**2 * np.exp(-y) * laguerre(n - 1, 1, y) ** 2 / n**3)


def hydrogen_phi(n: int, p):
    """Momentum eigenfunction; complex, with the global sign (-1)^(n+1) kept."""
    n = _check_n(n)
    p = np.asarray(p, dtype=float)
    minus = 1.0 - 1j * n * p
    plus = 1.0 + 1j * n * p
    sign = 1.0 if n % 2 else -1.0
    val = sign * math.sqrt(2.0 * n / math.pi) * minus ** (n - 1) / plus ** (n + 1)
    return val if val.ndim else complex(val)


def hydrogen_gamma(n: int, p):
    n = _check_n(n)
    p = np.asarray(p, dtype=float)
    return _out(2.0 * n / math.pi / (1.0 + (n * p) ** 2) ** 2)


def hydrogen_gamma_derivative(n: int, p):
    n = _check_n(n)
    p = np.asarray(p, dtype=float)
    return _out(-8.0 * n**3 * p / math.pi / (1.0 + (n * p) ** 2) ** 3)


def schrodinger_residual(n: int, x: float, h: float = 1e-4) -> float:
    """|-psi''/2 - psi/x - E_n psi| with a five-point second difference."""
    n = _check_n(n)
    if not h > 0:
        raise ValueError("step must be positive")
    if not x > 2 * h:
        raise ValueError(f"stencil leaves the half-line: x={x} <= 2h={2 * h}")
    stencil = x + h * np.array([-2.0, -1.0, 0.0, 1.0, 2.0])
    f = hydrogen_psi(n, stencil)
    d2 = (-f[0] + 16.0 * f[1] - 30.0 * f[2] + 16.0 * f[3] - f[4]) / (12.0 * h * h)
    psi = f[2]
    return abs(-0.5 * d2 - psi / x - hydrogen_energy(n) * psi)


def well_energy(n: int, width: float) -> float:
    n = _check_n(n)
    return (n * math.pi / width) ** 2 / 2.0


def _inside_well(width, x):
    if not width > 0:
        raise ValueError("well width must be positive")
    x = np.asarray(x, dtype=float)
    if np.any(np.abs(x) > width / 2):
        raise ValueError(f"well occupies |x| <= {width / 2}")
    return x


def well_psi(n: int, width: float, x):
    """sqrt(2/a) sin(n pi (x/a + 1/2)) on the centred well [-a/2, a/2]."""
    n = _check_n(n)
    x = _inside_well(width, x)
    return _out(math.sqrt(2.0 / width) * np.sin(n * math.pi * (x / width + 0.5)))


def well_psi_derivative(n: int, width: float, x):
    n = _check_n(n)
    x = _inside_well(width, x)
    k = n * math.pi / width
    return _out(math.sqrt(2.0 / width) * k * np.cos(n * math.pi * (x / width + 0.5)))
