"""Exact Euler-number and Euler-polynomial machinery.

Everything downstream is built on the numbers E_k(0), the values at zero of
the Euler polynomials E_k(q) generated by 2*exp(q*t)/(exp(t) + 1).  The
table is computed once in exact rational arithmetic from the reflection
identity E_n(q+1) + E_n(q) = 2*q^n specialised to q = 0, which gives

    2*E_n(0) = -sum_{k=0}^{n-1} C(n, k) * E_k(0)      (n >= 1).

Floating point enters only at evaluation time, through a single rounding of
the exact coefficients.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache

from .errors import CapacityError, DomainError
from .summation import CompensatedSum

#: Largest index held by the exact table.  Smallest-term truncation of the
#: large-q expansions never reaches beyond this at double precision.
K_MAX = 256


@lru_cache(maxsize=1)
def _euler_number_table() -> tuple[Fraction, ...]:
    """E_k(0) for k = 0..K_MAX, exact and immutable once built."""
    values = [Fraction(1)]
    for n in range(1, K_MAX + 1):
        acc = Fraction(0)
        for k in range(n):
            if values[k]:
                acc += math.comb(n, k) * values[k]
        values.append(-acc / 2)
    return tuple(values)


def euler_number_at_zero(k: int) -> Fraction:
    """Exact E_k(0): 1, -1/2, 0, 1/4, 0, -1/2, ... (zero for even k >= 2)."""
    if k < 0:
        raise DomainError(f"index must be non-negative, got {k}")
    if k > K_MAX:
        raise CapacityError(f"k={k} exceeds the exact table capacity K_MAX={K_MAX}")
    return _euler_number_table()[k]


@lru_cache(maxsize=None)
def euler_number_over_factorial(k: int) -> float:
    """float(E_k(0) / k!).

    This ratio decays like 4/pi^(k+1), so it stays representable for every
    k <= K_MAX even where E_k(0) itself overflows a double.
    """
    return float(euler_number_at_zero(k) / math.factorial(k))


@lru_cache(maxsize=None)
def euler_polynomial_coefficients(n: int) -> tuple[Fraction, ...]:
    """Exact coefficients of E_n(q), ascending powers of q.

    E_n(q) = sum_{k=0}^{n} C(n, k) * E_k(0) * q^(n-k); the leading
    coefficient is 1 and the constant term is E_n(0).
    """
    if n < 0:
        raise DomainError(f"degree must be non-negative, got {n}")
    if n > K_MAX:
        raise CapacityError(f"n={n} exceeds the exact table capacity K_MAX={K_MAX}")
    coeffs = [Fraction(0)] * (n + 1)
    for k in range(n + 1):
        coeffs[n - k] += math.comb(n, k) * euler_number_at_zero(k)
    return tuple(coeffs)


@lru_cache(maxsize=None)
def _euler_polynomial_float_coefficients(n: int) -> tuple[float, ...]:
    # Exact coefficients are rounded here exactly once; evaluation is then a
    # plain Horner recurrence, keeping results reproducible.
    return tuple(float(c) for c in euler_polynomial_coefficients(n))


def euler_polynomial(n: int, q: float) -> float:
    """E_n(q) by Horner evaluation of the exact coefficients."""
    coeffs = _euler_polynomial_float_coefficients(n)
    acc = 0.0
    for c in reversed(coeffs):
        acc = acc * q + c
    return acc


def quasi_periodic_euler(n: int, x: float) -> float:
    """The sign-flipping periodic extension of E_n from [0, 1) to the line.

    The extension satisfies value(x + 1) = -value(x); on [0, 1) it equals
    E_n(x).
    """
    shift = math.floor(x)
    frac = x - shift
    sign = -1.0 if shift % 2 else 1.0
    return sign * euler_polynomial(n, frac)


def fourier_partial_sum(n: int, x: float, k_max: int) -> float:
    """Truncated sine expansion of the quasi-periodic extension.

    Sums (4*n!/pi^(n+1)) * sin((2k+1)*pi*x - n*pi/2) / (2k+1)^(n+1) over
    k = 0..k_max.  The expansion is valid for 0 <= x < 1 when n >= 1 and for
    0 < x < 1 when n = 0; x = 0 with n = 0 is rejected rather than assigned
    a principal value.
    """
    if k_max < 1:
        raise DomainError(f"k_max must be positive, got {k_max}")
    if n == 0:
        if not 0.0 < x < 1.0:
            raise DomainError(f"x={x} outside (0, 1), the validity range for n=0")
    else:
        if not 0.0 <= x < 1.0:
            raise DomainError(f"x={x} outside [0, 1), the validity range for n>=1")
    if n <= 150:
        prefactor = 4.0 * math.factorial(n) / math.pi ** (n + 1)
    else:
        prefactor = 4.0 * math.exp(math.lgamma(n + 1) - (n + 1) * math.log(math.pi))
    phase = 0.5 * math.pi * n
    acc = CompensatedSum()
    for k in range(k_max + 1):
        odd = 2 * k + 1
        acc.add(math.sin(odd * math.pi * x - phase) / float(odd) ** (n + 1))
    return prefactor * acc.value
