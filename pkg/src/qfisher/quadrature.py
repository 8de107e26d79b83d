"""Adaptive Gauss-Legendre quadrature on finite and infinite intervals.

Every panel is integrated twice: once with an ``N``-point Gauss-Legendre
rule over the whole panel (coarse) and once with the same rule over each
half (fine). The fine value is kept, ``|fine - coarse|`` is the error
estimate, and panels that miss their share of the tolerance are bisected.
Refinement proceeds level by level so that the integrand is always called
on a whole batch of abscissae at once.

Infinite intervals are mapped onto bounded ones before refinement::

    x = a + t / (1 - t),    t in [0, 1)      (semi-infinite)
    p = t / (1 - t**2),     t in (-1, 1)     (whole line)

Integrands must accept and return 1-D ``numpy`` arrays.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Sequence, Union

import numpy as np

__all__ = [
    "QuadratureConfig",
    "Finite",
    "SemiInfinite",
    "WholeLine",
    "IntegrationDomain",
    "IntegralResult",
    "NonFiniteIntegrandError",
    "QuadratureWarning",
    "integrate",
    "fourier_transform_numeric",
]

@dataclass(frozen=True)
class QuadratureConfig:
    """Tolerances and refinement limits shared by every integral.

    ``noise_floor`` is the attainable accuracy of one panel relative to the
    integral of |f| over it. It covers evaluation error in the integrand,
    which for recurrence-built functions is several ulps; panels already at
    that level are not bisected further. ``max_panels`` bounds the number of
    live panels and is a safety net only.
    """

    abs_tol: float = 1e-10
    rel_tol: float = 1e-10
    panel_order: int = 15
    max_depth: int = 30
    max_panels: int = 100_000
    noise_floor: float = 1e-13

    def __post_init__(self):
        if not (self.abs_tol > 0 and self.rel_tol > 0):
            raise ValueError("abs_tol and rel_tol must be positive")
        if self.panel_order < 5:
            raise ValueError("panel_order must be at least 5")
        if self.max_depth < 1 or self.max_panels < 1:
            raise ValueError("max_depth and max_panels must be positive")
        if not 0 <= self.noise_floor < 1:
            raise ValueError("noise_floor must lie in [0, 1)")

    def tolerance(self, value: float) -> float:
        return max(self.abs_tol, self.rel_tol * abs(value))


@dataclass(frozen=True)
class Finite:
    a: float
    b: float

    def __post_init__(self):
        if not (math.isfinite(self.a) and math.isfinite(self.b)):
            raise ValueError("finite domain needs finite endpoints")
        if not self.a < self.b:
            raise ValueError(f"empty domain: a={self.a} >= b={self.b}")


@dataclass(frozen=True)
class SemiInfinite:
    a: float

    def __post_init__(self):
        if not math.isfinite(self.a):
            raise ValueError("lower limit must be finite")


@dataclass(frozen=True)
class WholeLine:
    pass


IntegrationDomain = Union[Finite, SemiInfinite, WholeLine]


@dataclass(frozen=True)
class IntegralResult:
    value: float
    error_estimate: float
    converged: bool
    panels_used: int


class NonFiniteIntegrandError(ArithmeticError):
    """The integrand returned inf or nan at ``abscissa``."""

    def __init__(self, abscissa: float, sample: float):
        super().__init__(f"integrand is not finite at x={abscissa!r} (value {sample!r})")
        self.abscissa = abscissa
        self.sample = sample


class QuadratureWarning(UserWarning):
    pass


@lru_cache(maxsize=None)
def _gauss_legendre(order: int) -> tuple[np.ndarray, np.ndarray]:
    nodes, weights = np.polynomial.legendre.leggauss(order)
    nodes.setflags(write=False)
    weights.setflags(write=False)
    return nodes, weights


def _mapping(domain: IntegrationDomain):
    """Return (lo, hi, to_x, jacobian, to_t) for a domain."""
    if isinstance(domain, Finite):
        return (
            domain.a,
            domain.b,
            lambda t: t,
            lambda t: np.ones_like(t),
            lambda x: x,
        )
    if isinstance(domain, SemiInfinite):
        a = domain.a

        def to_t(x):
            d = x - a
            return d / (1.0 + d)

        return (
            0.0,
            1.0,
            lambda t: a + t / (1.0 - t),
            lambda t: 1.0 / (1.0 - t) ** 2,
            to_t,
        )
    if isinstance(domain, WholeLine):

        def to_t(p):
            return 2.0 * p / (1.0 + math.sqrt(1.0 + 4.0 * p * p))

        return (
            -1.0,
            1.0,
            lambda t: t / (1.0 - t * t),
            lambda t: (1.0 + t * t) / (1.0 - t * t) ** 2,
            to_t,
        )
    raise TypeError(f"unknown integration domain {domain!r}")


def _initial_edges(domain, lo, hi, to_t, points, initial_panels):
    cuts = {lo, hi}
    for x in (() if points is None else points):
        t = to_t(float(x))
        if lo < t < hi:
            cuts.add(t)
    cuts = sorted(cuts)
    if initial_panels is None:
        initial_panels = 1 if isinstance(domain, Finite) else 8
    if len(cuts) == 2 and initial_panels > 1:
        cuts = list(np.linspace(lo, hi, initial_panels + 1))
    return np.asarray(cuts, dtype=float)


def integrate(
    f: Callable[[np.ndarray], np.ndarray],
    domain: IntegrationDomain,
    config: QuadratureConfig | None = None,
    *,
    points: Sequence[float] | None = None,
    initial_panels: int | None = None,
) -> IntegralResult:
    """Integrate a vectorised real function over ``domain``.

    Args:
        f: Vectorised integrand.
        domain: ``Finite``, ``SemiInfinite`` or ``WholeLine``.
        config: Tolerances; defaults to ``QuadratureConfig()``.
        points: Optional interior breakpoints (in the original variable)
            used as initial panel edges.
        initial_panels: Number of equal initial panels when no breakpoints
            are given. Defaults to 1 for finite and 8 for infinite domains.

    Returns:
        An ``IntegralResult``. Failure to meet the tolerance is reported with
        ``converged=False``.

    Raises:
        NonFiniteIntegrandError: if ``f`` produces inf/nan at any abscissa.
    """
    config = config or QuadratureConfig()
    lo, hi, to_x, jac, to_t = _mapping(domain)
    nodes, weights = _gauss_legendre(config.panel_order)
    span = hi - lo

    def panel_values(left, right):
        # GL value of each [left_i, right_i] plus integral of |g| for the floor.
        half = 0.5 * (right - left)
        mid = 0.5 * (right + left)
        t = (mid[:, None] + half[:, None] * nodes[None, :]).ravel()
        x = to_x(t)
        fx = np.asarray(f(x), dtype=float).reshape(t.shape)
        g = fx * jac(t)
        bad = ~np.isfinite(g)
        if bad.any():
            i = int(np.flatnonzero(bad)[0])
            raise NonFiniteIntegrandError(float(x[i]), float(fx[i]))
        g = g.reshape(len(left), -1)
        return half * (g @ weights), half * (np.abs(g) @ weights)

    edges = _initial_edges(domain, lo, hi, to_t, points, initial_panels)
    left, right = edges[:-1], edges[1:]
    coarse, _ = panel_values(left, right)

    done_left: list[np.ndarray] = []
    done_value: list[np.ndarray] = []
    done_error: list[np.ndarray] = []
    done_floor: list[np.ndarray] = []
    converged = True
    panels_used = len(left)

    for depth in range(config.max_depth + 1):
        mid = 0.5 * (left + right)
        ql, al = panel_values(left, mid)
        qr, ar = panel_values(mid, right)
        fine = ql + qr
        floor = config.noise_floor * (al + ar)
        err = np.abs(fine - coarse) + floor

        estimate = math.fsum(np.concatenate(done_value + [fine]))
        # An unattainable tolerance is relaxed to the round-off floor so that
        # refinement still stops; the final check then reports non-convergence.
        floor_total = math.fsum(np.concatenate(done_floor + [floor]))
        tol = max(config.tolerance(estimate), 2.0 * floor_total)
        # Panels whose two estimates already agree to round-off cannot improve
        # by bisection; accept them and let the global check judge the total.
        ok = (err <= tol * (right - left) / span) | (np.abs(fine - coarse) <= floor)

        last = depth == config.max_depth
        if not last:
            n_split = int(np.count_nonzero(~ok))
            if panels_used + n_split > config.max_panels:
                last = True
        if last:
            converged = converged and bool(ok.all())
            ok = np.ones_like(ok)

        done_left.append(left[ok])
        done_value.append(fine[ok])
        done_error.append(err[ok])
        done_floor.append(floor[ok])

        keep = ~ok
        if not keep.any():
            break
        # Children inherit their GL values as the new coarse estimates.
        left, mid_k, right = left[keep], mid[keep], right[keep]
        coarse = np.concatenate([ql[keep], qr[keep]])
        left, right = np.concatenate([left, mid_k]), np.concatenate([mid_k, right])
        panels_used += int(keep.sum())

    order = np.argsort(np.concatenate(done_left), kind="stable")
    values = np.concatenate(done_value)[order]
    errors = np.concatenate(done_error)[order]
    value = math.fsum(values)
    error = math.fsum(errors)
    if error > config.tolerance(value):
        converged = False
    return IntegralResult(value=value, error_estimate=error, converged=converged, panels_used=panels_used)


def fourier_transform_numeric(
    psi: Callable[[np.ndarray], np.ndarray],
    p: float,
    domain: IntegrationDomain,
    config: QuadratureConfig | None = None,
    *,
    full_output: bool = False,
):
    """Momentum amplitude ``(2 pi)^(-1/2) * int exp(-i p x) psi(x) dx``.

    The cosine and sine parts are integrated separately. For ``p != 0`` the
    domain must be finite; it is pre-split into panels no wider than
    ``pi / |p|`` so that no panel holds more than half an oscillation.

    Returns:
        The complex amplitude, or ``(amplitude, (re_result, im_result))``
        when ``full_output`` is true. Without ``full_output`` a
        ``QuadratureWarning`` flags a component that did not converge.
    """
    p = float(p)
    points = None
    if p != 0.0:
        if not isinstance(domain, Finite):
            raise ValueError("oscillatory transform needs a finite (truncated) domain")
        n_panels = max(1, math.ceil(abs(p) * (domain.b - domain.a) / math.pi))
        points = np.linspace(domain.a, domain.b, n_panels + 1)[1:-1]

    re = integrate(lambda x: psi(x) * np.cos(p * x), domain, config, points=points)
    if p == 0.0:
        im = IntegralResult(0.0, 0.0, True, 0)
    else:
        im = integrate(lambda x: -psi(x) * np.sin(p * x), domain, config, points=points)
    scale = 1.0 / math.sqrt(2.0 * math.pi)
    amplitude = complex(scale * re.value, scale * im.value)
    if full_output:
        return amplitude, (re, im)
    if not (re.converged and im.converged):
        warnings.warn(f"Fourier integral at p={p} did not converge", QuadratureWarning, stacklevel=2)
    return amplitude
