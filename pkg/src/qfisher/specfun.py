"""Generalized Laguerre polynomials and the Kummer M series."""

from __future__ import annotations

import math
from fractions import Fraction

import numpy as np

__all__ = [
    "laguerre",
    "laguerre_derivative",
    "laguerre_rodrigues_oracle",
    "kummer_m",
    "KummerConvergenceError",
    "RODRIGUES_MAX_DEGREE",
]

RODRIGUES_MAX_DEGREE = 12


class KummerConvergenceError(ArithmeticError):
    pass


def _check_index(m, beta):
    if int(m) != m or m < 0:
        raise ValueError(f"degree must be a nonnegative integer, got {m!r}")
    if not beta > -1:
        raise ValueError(f"beta must exceed -1, got {beta!r}")


def _as_finite(x):
    arr = np.asarray(x, dtype=float)
    if not np.all(np.isfinite(arr)):
        raise ValueError("argument must be finite")
    return arr


def laguerre(m: int, beta: float, x):
    """Evaluate L_m^(beta)(x) by the upward three-term recurrence.

    ``x`` may be a scalar or an array; the result has the same shape.
    """
    _check_index(m, beta)
    x = _as_finite(x)
    prev = np.ones_like(x)
    if m == 0:
        return prev if prev.ndim else float(prev)
    cur = 1.0 + beta - x
    for k in range(1, int(m)):
        prev, cur = cur, ((2 * k + 1 + beta - x) * cur - (k + beta) * prev) / (k + 1)
    return cur if cur.ndim else float(cur)


def laguerre_derivative(m: int, beta: float, x):
    """d/dx L_m^(beta)(x) = -L_{m-1}^(beta+1)(x)."""
    _check_index(m, beta)
    x = _as_finite(x)
    if m == 0:
        zero = np.zeros_like(x)
        return zero if zero.ndim else 0.0
    return -laguerre(m - 1, beta + 1, x)


def laguerre_rodrigues_oracle(m: int, beta: int, x: float) -> float:
    """Exact L_m^(beta)(x) from the Rodrigues formula, for testing.

    The m-th derivative of exp(-x) x^(m+beta) is expanded with the Leibniz
    rule, the exponential factors cancel and the resulting polynomial is
    summed in rational arithmetic with ``x`` taken exactly. Only integer
    ``beta >= 0`` and ``m <= 12`` are supported.
    """
    if int(beta) != beta or beta < 0:
        raise ValueError("oracle needs a nonnegative integer beta")
    _check_index(m, beta)
    if m > RODRIGUES_MAX_DEGREE:
        raise ValueError(f"oracle degree {m} exceeds {RODRIGUES_MAX_DEGREE}")
    if not math.isfinite(x):
        raise ValueError("argument must be finite")
    m, beta = int(m), int(beta)
    xq = Fraction(x)
    total = Fraction(0)
    # d^k/dx^k x^(m+beta) = (m+beta)!/(m+beta-k)! x^(m+beta-k); the exponential
    # contributes (-1)^(m-k). Dividing by x^beta m! leaves x^(m-k).
    for k in range(m + 1):
        coeff = Fraction(
            math.comb(m, k) * (-1) ** (m - k) * math.factorial(m + beta),
            math.factorial(m + beta - k) * math.factorial(m),
        )
        total += coeff * xq ** (m - k)
    return float(total)


def _two_prod(a: float, b: float) -> tuple[float, float]:
    # Dekker: a*b == p + e exactly.
    p = a * b
    c = 134217729.0 * a
    ah = c - (c - a)
    al = a - ah
    c = 134217729.0 * b
    bh = c - (c - b)
    bl = b - bh
    return p, ((ah * bh - p) + ah * bl + al * bh) + al * bl


def _dd_mul(hi: float, lo: float, b: float) -> tuple[float, float]:
    p, e = _two_prod(hi, b)
    e += lo * b
    s = p + e
    return s, e - (s - p)


def _dd_div(hi: float, lo: float, b: float) -> tuple[float, float]:
    q1 = hi / b
    p, e = _two_prod(q1, b)
    q2 = (((hi - p) - e) + lo) / b
    s = q1 + q2
    return s, q2 - (s - q1)


def kummer_m(a: float, b: float, x: float, max_terms: int = 1000, series_tol: float = 1e-17) -> float:
    """Confluent hypergeometric M(a, b, x) as a truncated power series.

    The series stops when a nonpositive integer ``a`` makes it terminate, or
    when a term drops below ``series_tol`` relative to the partial sum.
    Terms are carried as unevaluated double-double pairs so that the
    alternating polynomial case keeps full double accuracy despite terms
    many orders of magnitude above the sum.

    Raises:
        KummerConvergenceError: if ``max_terms`` terms are summed without
            either stopping condition.
    """
    if b <= 0 and float(b).is_integer():
        raise ValueError(f"b must not be a nonpositive integer, got {b!r}")
    if max_terms < 1 or not series_tol > 0:
        raise ValueError("max_terms must be >= 1 and series_tol > 0")
    if not math.isfinite(x):
        raise ValueError("argument must be finite")
    a, b, x = float(a), float(b), float(x)
    parts = [1.0]
    hi, lo = 1.0, 0.0
    for k in range(max_terms):
        hi, lo = _dd_mul(hi, lo, a + k)
        hi, lo = _dd_mul(hi, lo, x)
        hi, lo = _dd_div(hi, lo, (b + k) * (k + 1))
        if hi == 0.0:
            return math.fsum(parts)
        parts += (hi, lo)
        if abs(hi) <= series_tol * abs(math.fsum(parts)):
            return math.fsum(parts)
    raise KummerConvergenceError(f"M({a}, {b}, {x}) did not converge in {max_terms} terms")
