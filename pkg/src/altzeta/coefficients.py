"""Pochhammer symbols and the layered coefficients of the large-q expansions.

The tail of the m-th derivative expansion carries coefficients of the form
E_k(0) * g_m(k) where the layers g are nested harmonic-weighted sums:

    g_0(j) = (z)_j / j!
    g_i(j) = sum_{l=0}^{j-1} g_{i-1}(l) / (j - l)        (i >= 1).

Differentiating g_i in z yields g_{i+1} (the derivative ladder), so the
layer index counts derivative order.  The layer at index 0 extends the
nested family downward so that the plain expansion tail is the m = 0 case
of the same machinery.

Layers are memoized per evaluation point in :class:`CoefficientCache`;
arithmetic is exact (Fraction) when z is an integer or Fraction and complex
floating point otherwise.  Empty inner sums are zero.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .errors import CapacityError, DomainError
from .euler import euler_number_at_zero


def pochhammer(z, k: int):
    """Rising factorial (z)_k = z (z+1) ... (z+k-1), with (z)_0 = 1.

    Exact for int or Fraction inputs, floating otherwise.
    """
    if k < 0:
        raise DomainError(f"order must be non-negative, got {k}")
    result = z * 0 + 1  # one, in the arithmetic of z
    for j in range(k):
        result = result * (z + j)
    return result


def pochhammer_derivative(z, k: int):
    """Derivative in z of (z)_k / k!, as sum_{j=0}^{k-1} (z)_j / (j! (k-j))."""
    if k < 1:
        raise DomainError(f"order must be positive, got {k}")
    exact = isinstance(z, (int, Fraction))
    pj = Fraction(1) if exact else z * 0 + 1.0
    total = pj * 0
    for j in range(k):
        total = total + pj / (math.factorial(j) * (k - j))
        pj = pj * (z + j)
    return total


class CoefficientCache:
    """Memoized layers g_i(j) for one fixed evaluation point z.

    In floating mode a parallel table of magnitude convolutions is kept:
    it bounds the scale against which rounding acts, so callers can tell an
    exact zero evaluated in floats (pure noise) from a genuinely small
    coefficient.  A cache must not be shared across threads; recomputation
    from a fresh cache is always safe.
    """

    def __init__(self, z):
        self.z = z
        self.exact = isinstance(z, (int, Fraction))
        one = Fraction(1) if self.exact else complex(z) * 0 + (1.0 + 0.0j)
        self._zero = one * 0
        self._layers: list[list] = [[one]]
        self._mag_layers: list[list[float]] | None = None if self.exact else [[1.0]]

    def layer(self, m: int, j: int):
        """g_m(j), growing the underlying tables as needed."""
        if m < 0 or j < 0:
            raise DomainError(f"layer indices must be non-negative, got m={m}, j={j}")
        self._ensure(m, j)
        return self._layers[m][j]

    def layer_noise_scale(self, m: int, j: int) -> float:
        """Magnitude scale of the layer entry; rounding noise is eps times
        this.  Zero in exact mode (exact zeros are exact there)."""
        if self.exact:
            return 0.0
        self._ensure(m, j)
        return self._mag_layers[m][j]

    def _ensure(self, m: int, j: int) -> None:
        base = self._layers[0]
        while len(base) <= j:
            t = len(base) - 1
            base.append(base[t] * (self.z + t) / (t + 1))
        while len(self._layers) <= m:
            self._layers.append([self._zero])
        if self._mag_layers is not None:
            mag_base = self._mag_layers[0]
            while len(mag_base) < len(base):
                mag_base.append(abs(base[len(mag_base)]))
            while len(self._mag_layers) <= m:
                self._mag_layers.append([0.0])
        for i in range(1, m + 1):
            prev = self._layers[i - 1]
            cur = self._layers[i]
            while len(cur) <= j:
                idx = len(cur)
                acc = self._zero
                for l in range(idx):
                    acc = acc + prev[l] / (idx - l)
                cur.append(acc)
            if self._mag_layers is not None:
                mag_prev = self._mag_layers[i - 1]
                mag_cur = self._mag_layers[i]
                while len(mag_cur) <= j:
                    idx = len(mag_cur)
                    total = 0.0
                    for l in range(idx):
                        total += mag_prev[l] / (idx - l)
                    mag_cur.append(total)


def expansion_coefficient(cache: CoefficientCache, k: int, m: int):
    """Coefficient of q^(-z-k) in the m-th derivative tail: E_k(0) * g_m(k).

    Zero for every even k because E_k(0) vanishes there.  In floating mode
    the E_k(0) factor overflows a double near k = 220; the evaluators use a
    scaled form internally, so this entry point is intended for moderate k.
    """
    if k < 2:
        raise DomainError(f"tail index starts at k=2, got {k}")
    ek = euler_number_at_zero(k)
    if ek == 0:
        return cache.layer(0, 0) * 0
    if cache.exact:
        return ek * cache.layer(m, k)
    if k > 170:
        raise CapacityError(
            f"E_k(0) overflows double precision near k=220; got k={k} in floating mode"
        )
    return float(ek) * cache.layer(m, k)


def _neg_int_inner_layer(n: int, m: int, k: int) -> Fraction:
    """The braces of the truncated nested sum at z = -n, exact.

    Innermost layer: h_1(j) = sum_{l=0}^{min(n, j-1)} C(n, l) (-1)^l / (j-l);
    outer layers convolve with harmonic weights exactly as in the generic
    nest.  Returns h_m(k).
    """
    h = [Fraction(0)] * (k + 1)
    for j in range(1, k + 1):
        acc = Fraction(0)
        for l in range(min(n, j - 1) + 1):
            acc += Fraction(math.comb(n, l) * (-1) ** l, j - l)
        h[j] = acc
    for _ in range(m - 1):
        nxt = [Fraction(0)] * (k + 1)
        for j in range(1, k + 1):
            acc = Fraction(0)
            for l in range(j):
                acc += h[l] / (j - l)
            nxt[j] = acc
        h = nxt
    return h[k]


def neg_int_inner_layers_float(n: int, m: int, k_hi: int) -> tuple[list[float], list[float]]:
    """Floating h_m(j) for j = 0..k_hi plus the matching magnitude scales.

    Evaluator-side counterpart of :func:`_neg_int_inner_layer`; the second
    list bounds the scale against which rounding acts, so exact zeros
    evaluated in floats (pure noise) can be recognised and snapped to zero.
    """
    if m < 1:
        raise DomainError(f"derivative order must be positive, got {m}")
    if n < 0 or k_hi < 0:
        raise DomainError(f"need n >= 0 and k_hi >= 0, got n={n}, k_hi={k_hi}")
    h = [0.0] * (k_hi + 1)
    mag = [0.0] * (k_hi + 1)
    for j in range(1, k_hi + 1):
        acc = 0.0
        scale = 0.0
        for l in range(min(n, j - 1) + 1):
            term = math.comb(n, l) * (-1) ** l / (j - l)
            acc += term
            scale += abs(term)
        h[j] = acc
        mag[j] = scale
    for _ in range(m - 1):
        nxt = [0.0] * (k_hi + 1)
        nxt_mag = [0.0] * (k_hi + 1)
        for j in range(1, k_hi + 1):
            acc = 0.0
            scale = 0.0
            for l in range(j):
                acc += h[l] / (j - l)
                scale += mag[l] / (j - l)
            nxt[j] = acc
            nxt_mag[j] = scale
        h = nxt
        mag = nxt_mag
    return h, mag


def expansion_coefficient_at_neg_int(k: int, m: int, n: int) -> Fraction:
    """Exact tail coefficient at z = -n with the inner sum truncated at n.

    The truncation removes only terms whose Pochhammer factor vanishes, so
    the result equals :func:`expansion_coefficient` evaluated at z = -n.
    Requires m >= 1.
    """
    if k < 2:
        raise DomainError(f"tail index starts at k=2, got {k}")
    if m < 1:
        raise DomainError(f"derivative order must be positive, got {m}")
    if n < 0:
        raise DomainError(f"n must be non-negative, got {n}")
    ek = euler_number_at_zero(k)
    if ek == 0:
        return Fraction(0)
    return ek * _neg_int_inner_layer(n, m, k)


def alternating_binomial_sum(n: int, k: int) -> Fraction:
    """sum_{j=0}^{n} C(n, j) (-1)^j / (k - j), exact; requires k > n >= 0.

    Equals (-1)^n * n! / (k (k-1) ... (k-n)) in closed form.
    """
    if n < 0:
        raise DomainError(f"n must be non-negative, got {n}")
    if k <= n:
        raise DomainError(f"need k > n to avoid a zero denominator, got k={k}, n={n}")
    total = Fraction(0)
    for j in range(n + 1):
        total += Fraction(math.comb(n, j) * (-1) ** j, k - j)
    return total


def alternating_binomial_partial_sum(n: int, k: int) -> Fraction:
    """sum_{j=0}^{min(n, k-1)} C(n, j) (-1)^j / (k - j), exact.

    For k > n this coincides with :func:`alternating_binomial_sum`; for
    k <= n it is the partial sum that appears in the finite block of the
    negative-integer expansions.
    """
    if n < 0 or k < 1:
        raise DomainError(f"need n >= 0 and k >= 1, got n={n}, k={k}")
    total = Fraction(0)
    for j in range(min(n, k - 1) + 1):
        total += Fraction(math.comb(n, j) * (-1) ** j, k - j)
    return total


def truncated_double_sum(a, b, n: int, k_max: int):
    """sum_{k=2}^{k_max} a(k) * sum_{j=0}^{min(n, k-1)} b(k, j)."""
    if n < 0:
        raise DomainError(f"n must be non-negative, got {n}")
    total = 0
    for k in range(2, k_max + 1):
        inner = 0
        for j in range(min(n, k - 1) + 1):
            inner = inner + b(k, j)
        total = total + a(k) * inner
    return total


def split_double_sum(a, b, n: int, k_max: int):
    """The same double sum with the k <= n block separated from the rest.

    Over k <= n the inner sum runs to k-1; over k > n it runs to n.  The
    split is what turns the truncated expansion into a finite polynomial
    block plus an asymptotic tail.
    """
    if n < 0:
        raise DomainError(f"n must be non-negative, got {n}")
    total = 0
    for k in range(2, min(n, k_max) + 1):
        inner = 0
        for j in range(k):
            inner = inner + b(k, j)
        total = total + a(k) * inner
    for k in range(max(2, n + 1), k_max + 1):
        inner = 0
        for j in range(n + 1):
            inner = inner + b(k, j)
        total = total + a(k) * inner
    return total
