"""Invariant suite: every numerical cross-check in one place.

``run_verification`` returns a ``VerificationReport`` listing each check with
its measured value, tolerance and verdict. The ``verify`` command of the CLI
is a thin wrapper around it.
"""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass, field

import numpy as np

from .fisher import (
    Space,
    fisher_momentum,
    fisher_position,
    inner_product,
    well_fisher_momentum_direct,
    well_fisher_momentum_via_position,
)
from .quadrature import Finite, QuadratureConfig, fourier_transform_numeric
from .specfun import kummer_m, laguerre, laguerre_rodrigues_oracle
from .systems import (
    BoundState,
    System,
    hydrogen_cutoff,
    hydrogen_energy,
    hydrogen_gamma,
    hydrogen_phi,
    hydrogen_psi,
    hydrogen_rho,
    schrodinger_residual,
)

__all__ = [
    "FAULTS",
    "Check",
    "VerificationReport",
    "count_nodes",
    "run_verification",
    "real_phi",
]


def real_phi(n, p):
    """Modulus of the momentum waveform: what a real-valued Phi would look like."""
    return np.abs(hydrogen_phi(n, p))


FAULTS = {"real-phi": real_phi}


@dataclass
class Check:
    name: str
    value: float
    tolerance: float
    passed: bool
    # "<=": value must not exceed tolerance; ">": value must exceed it.
    comparison: str = "<="
    detail: str = ""


@dataclass
class VerificationReport:
    checks: list[Check]
    config: QuadratureConfig
    n_max: int
    fault: str | None = None
    unconverged: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def failures(self) -> list[str]:
        return [c.name for c in self.checks if not c.passed]

    def to_dict(self) -> dict:
        return {
            "passed": self.passed,
            "n_max": self.n_max,
            "fault": self.fault,
            "config": asdict(self.config),
            "failures": self.failures,
            "unconverged": self.unconverged,
            "checks": [asdict(c) for c in self.checks],
        }


def _upper(name, value, tol, detail=""):
    return Check(name, float(value), tol, bool(value <= tol), "<=", detail)


def _lower(name, value, bound, detail=""):
    return Check(name, float(value), bound, bool(value > bound), ">", detail)


def count_nodes(n: int, points: int = 10_000, x_max: float | None = None) -> int:
    """Interior sign changes of psi_n on a uniform grid over (0, x_max]."""
    x_max = 40.0 * n if x_max is None else x_max
    x = np.linspace(0.0, x_max, points + 1)[1:]
    s = np.sign(hydrogen_psi(n, x))
    s = s[s != 0]
    return int(np.count_nonzero(s[1:] != s[:-1]))


class _Suite:
    def __init__(self, n_max, fisher_n_max, config, phi):
        self.n_max = n_max
        self.fisher_n_max = fisher_n_max
        self.config = config
        self.phi = phi
        self.unconverged: list[str] = []

    def note(self, converged, label):
        if not converged:
            self.unconverged.append(label)

    def fourier_consistency(self):
        grid = np.linspace(-5.0, 5.0, 201)
        worst = 0.0
        for n in range(1, self.n_max + 1):
            dom = Finite(0.0, hydrogen_cutoff(n))
            closed = self.phi(n, grid)
            for p, ref in zip(grid, closed):
                amp, (re, im) = fourier_transform_numeric(
                    lambda x: hydrogen_psi(n, x), p, dom, self.config, full_output=True
                )
                self.note(re.converged and im.converged, f"fourier n={n} p={p:.3g}")
                worst = max(worst, abs(amp - ref))
        return _upper("fourier_consistency", worst, 1e-6, "max |Phi_numeric - Phi_closed|, p in [-5, 5]")

    def momentum_is_complex(self):
        grid = np.linspace(-5.0, 5.0, 201)
        weakest = min(float(np.max(np.abs(np.imag(self.phi(n, grid))))) for n in range(1, self.n_max + 1))
        return _lower("momentum_is_complex", weakest, 0.1, "min over n of max_p |Im Phi_n(p)|")

    def momentum_symmetry(self):
        grid = np.linspace(0.0, 5.0, 101)
        worst = 0.0
        for n in range(1, self.n_max + 1):
            plus = np.asarray(self.phi(n, grid), dtype=complex)
            minus = np.asarray(self.phi(n, -grid), dtype=complex)
            worst = max(worst, float(np.max(np.abs(minus - np.conj(plus)))))
        return _upper("momentum_symmetry", worst, 1e-12, "max |Phi(-p) - conj Phi(p)|")

    def density_consistency(self):
        worst = 0.0
        x = np.linspace(0.0, 60.0, 301)
        p = np.linspace(-5.0, 5.0, 201)
        for n in range(1, self.n_max + 1):
            rho = hydrogen_rho(n, x)
            psi2 = hydrogen_psi(n, x) ** 2
            worst = max(worst, float(np.max(np.abs(rho - psi2) / np.maximum(np.abs(rho), 1e-300))))
            gamma = hydrogen_gamma(n, p)
            mod2 = np.abs(self.phi(n, p)) ** 2
            worst = max(worst, float(np.max(np.abs(gamma - mod2) / gamma)))
        return _upper("density_consistency", worst, 1e-12, "relative, rho vs psi^2 and gamma vs |Phi|^2")

    def orthonormality(self, space):
        worst = 0.0
        for n in range(1, self.n_max + 1):
            for m in range(1, n + 1):
                if space is Space.MOMENTUM:
                    val, ok = inner_product(n, m, space, config=self.config, phi=self.phi)
                else:
                    val, ok = inner_product(n, m, space, config=self.config)
                self.note(ok, f"overlap {space.value} ({m},{n})")
                worst = max(worst, abs(val.real - (n == m)), abs(val.imag))
        return _upper(f"orthonormality_{space.value}", worst, 1e-8, "max |<n'|n> - delta|")

    def fisher_suite(self):
        rho_dev = gamma_dev = product_dev = energy_dev = 0.0
        for n in range(1, self.fisher_n_max + 1):
            state = BoundState(System.HYDROGEN, n)
            i_rho = fisher_position(state, self.config)
            i_gamma = fisher_momentum(state, self.config)
            self.note(i_rho.converged, f"fisher_position n={n}")
            self.note(i_gamma.converged, f"fisher_momentum n={n}")
            rho_dev = max(rho_dev, abs(i_rho.value - 4.0 / n**2) / (4.0 / n**2))
            gamma_dev = max(gamma_dev, abs(i_gamma.value - 2.0 * n**2) / (2.0 * n**2))
            product_dev = max(product_dev, abs(i_rho.value * i_gamma.value - 8.0))
            e = abs(hydrogen_energy(n))
            energy_dev = max(
                energy_dev,
                abs(i_rho.value - 8.0 * e) / (8.0 * e),
                abs(i_gamma.value - 1.0 / e) * e,
            )
        span = f"n = 1..{self.fisher_n_max}"
        return [
            _upper("fisher_position_closed_form", rho_dev, 1e-8, f"relative to 4/n^2, {span}"),
            _upper("fisher_momentum_closed_form", gamma_dev, 1e-8, f"relative to 2n^2, {span}"),
            _upper("fisher_product", product_dev, 1e-6, f"|I_rho I_gamma - 8|, {span}"),
            _upper("energy_relations", energy_dev, 1e-8, f"I_rho = 8|E|, I_gamma = 1/|E|, {span}"),
        ]

    def schrodinger(self):
        worst = 0.0
        for n in range(1, min(6, self.n_max) + 1):
            for x in np.geomspace(0.05, 40.0 * n, 50):
                worst = max(worst, schrodinger_residual(n, float(x)))
        return _upper("schrodinger_residual", worst, 1e-6, "five-point residual at 50 points per state")

    def nodes(self):
        wrong = sum(count_nodes(n) != n - 1 for n in range(1, min(6, self.n_max) + 1))
        return _upper("node_count", wrong, 0, "states without exactly n-1 sign changes on (0, 40n]")

    def special_functions(self):
        worst = 0.0
        for beta in (1, 2):
            for m in range(13):
                for x in (0.1, 0.5, 1.0, 2.0, 5.0, 10.0):
                    ref = laguerre_rodrigues_oracle(m, beta, x)
                    worst = max(worst, abs(laguerre(m, beta, x) - ref) / max(1.0, abs(ref)))
        kummer = 0.0
        for n in range(1, 11):
            for x in np.linspace(0.25, 20.0, 80):
                lag = laguerre(n - 1, 1, x)
                kummer = max(kummer, abs(n * kummer_m(1 - n, 2, x) - lag) / max(1.0, abs(lag)))
        return [
            _upper("laguerre_rodrigues", worst, 1e-10, "recurrence vs exact Rodrigues expansion, m <= 12"),
            _upper("kummer_laguerre", kummer, 1e-10, "n M(1-n, 2, x) vs L_{n-1}^(1)(x), n <= 10"),
        ]

    def well(self):
        worst = 0.0
        for n in range(1, 5):
            via_x = well_fisher_momentum_via_position(n, 1.0, self.config)
            self.note(via_x.converged, f"well via position n={n}")
            direct = well_fisher_momentum_direct(n, 1.0, self.config)
            self.note(direct.converged, f"well momentum-space route n={n}")
            worst = max(worst, abs(via_x.value - direct.value) / via_x.value)
        ground = well_fisher_momentum_via_position(1, 1.0, self.config).value
        return [
            _upper("well_reciprocity", worst, 1e-4, "position route vs momentum-space route, n <= 4"),
            _upper("well_ground_state", abs(ground - (1.0 / 3.0 - 2.0 / math.pi**2)), 1e-8, "vs 1/3 - 2/pi^2"),
        ]


def run_verification(
    n_max: int = 8,
    config: QuadratureConfig | None = None,
    fault: str | None = None,
    fisher_n_max: int = 20,
) -> VerificationReport:
    """Run every cross-check and collect the verdicts.

    Args:
        n_max: Highest quantum index for the waveform checks.
        config: Quadrature tolerances for all integrals.
        fault: Name of a deliberate fault from ``FAULTS`` (``"real-phi"``
            replaces Phi by its modulus), or None.
        fisher_n_max: Highest index for the Fisher information checks.
    """
    if n_max < 1 or fisher_n_max < 1:
        raise ValueError("n_max and fisher_n_max must be positive")
    if fault is not None and fault not in FAULTS:
        raise ValueError(f"unknown fault {fault!r}; choose from {sorted(FAULTS)}")
    config = config or QuadratureConfig()
    suite = _Suite(n_max, max(fisher_n_max, n_max), config, FAULTS.get(fault, hydrogen_phi))
    checks = [
        suite.fourier_consistency(),
        suite.momentum_is_complex(),
        suite.momentum_symmetry(),
        suite.density_consistency(),
        suite.orthonormality(Space.POSITION),
        suite.orthonormality(Space.MOMENTUM),
        *suite.fisher_suite(),
        suite.schrodinger(),
        suite.nodes(),
        *suite.special_functions(),
        *suite.well(),
    ]
    checks.append(
        _upper(
            "quadrature_convergence",
            len(suite.unconverged),
            0,
            "integrals that missed their tolerance",
        )
    )
    return VerificationReport(checks, config, n_max, fault, suite.unconverged)
