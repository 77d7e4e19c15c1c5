"""Evaluators for the alternating Hurwitz zeta function and its derivatives.

The function is zeta(z, q) = sum_{n>=0} (-1)^n / (n + q)^z for real q > 0,
entire in z by analytic continuation, together with its partial derivatives
in z of order m.  Three independent routes are implemented and cross-checked
against each other:

* ``zeta_series``: the defining series accelerated with the
  Cohen-Rodriguez Villegas-Zagier Chebyshev scheme; convergent for
  Re(z) > 0 and usable (flagged) as an empirical continuation elsewhere.
* ``zeta_asymptotic`` / ``deriv1_asymptotic`` / ``deriv_m_asymptotic``:
  divergent large-q expansions with fixed-length or smallest-term
  truncation.  The m-th derivative is expressed through the lower orders
  times powers of log q plus a tail whose coefficients come from
  :mod:`altzeta.coefficients`.
* ``zeta_special_value`` / ``deriv1_at_neg_int`` / ``deriv2_at_neg_int``:
  closed forms and explicit expansions at z = -n.

``evaluate`` dispatches between the routes, shifting q upward through the
reflection identity zeta(z, q+1) + zeta(z, q) = q^(-z) when q is below the
asymptotic regime, and always reports an error estimate next to the value.
Series are summed ascending with compensated accumulation, so results are
reproducible bit for bit.
"""

from __future__ import annotations

import cmath
import math
import os
from dataclasses import dataclass, replace
from fractions import Fraction

from .coefficients import (
    CoefficientCache,
    alternating_binomial_partial_sum,
    neg_int_inner_layers_float,
)
from .errors import AccuracyError, CapacityError, DomainError
from .euler import (
    K_MAX,
    euler_number_at_zero,
    euler_number_over_factorial,
    euler_polynomial,
    _euler_polynomial_float_coefficients,
)
from .summation import ComplexCompensatedSum

METHOD_ORACLE = "oracle"
METHOD_ASYMPTOTIC = "asymptotic"
METHOD_SHIFTED = "shifted_asymptotic"
METHOD_SPECIAL = "special_value"
METHOD_NEG_INT = "explicit_neg_int"

#: Highest derivative order supported by the recurrence evaluators.
M_MAX = 8

_EPS = 8e-16
_CVZ_RATE = 3.0 + math.sqrt(8.0)
_CVZ_TERM_LIMIT = 400
_ENV_MAX_TERMS = "ZETAE_MAX_TERMS"


# ---------------------------------------------------------------------------
# Result and request types


@dataclass(frozen=True)
class EvalResult:
    """Value plus accuracy metadata returned by every evaluator."""

    value: complex
    error_estimate: float
    terms_used: int
    method: str
    note: str | None = None

    def __post_init__(self):
        if self.error_estimate < 0:
            raise DomainError("error estimate must be non-negative")
        if self.terms_used < 0:
            raise DomainError("terms_used must be non-negative")

    def to_json_dict(self) -> dict:
        out = {
            "value_re": self.value.real,
            "value_im": self.value.imag,
            "error_estimate": self.error_estimate,
            "terms_used": self.terms_used,
            "method": self.method,
        }
        if self.note is not None:
            out["note"] = self.note
        return out


@dataclass(frozen=True)
class TruncationPolicy:
    """How to cut off a divergent expansion.

    ``optimal`` scans ascending term magnitudes and stops just before the
    smallest nonzero term; ``fixed`` sums exactly ``fixed_n`` tail indices.
    ``n_cap`` bounds the scan; by default it is 2*ceil(pi*q) + 10 at
    evaluation time (clamped to the exact-table capacity), which always
    covers the smallest-term index at double precision.
    """

    mode: str = "optimal"
    fixed_n: int | None = None
    n_cap: int | None = None

    def __post_init__(self):
        if self.mode not in ("optimal", "fixed"):
            raise DomainError(f"unknown truncation mode {self.mode!r}")
        if self.mode == "fixed":
            if self.fixed_n is None or self.fixed_n < 0:
                raise DomainError("fixed truncation needs fixed_n >= 0")
        if self.n_cap is not None and self.n_cap < 2:
            raise DomainError("n_cap must be at least 2")

    @classmethod
    def optimal(cls) -> "TruncationPolicy":
        return cls()

    @classmethod
    def fixed(cls, n: int) -> "TruncationPolicy":
        return cls(mode="fixed", fixed_n=n)

    @classmethod
    def parse(cls, text: str) -> "TruncationPolicy":
        """Parse 'optimal' or 'fixed:N'."""
        text = text.strip()
        if text == "optimal":
            return cls.optimal()
        if text.startswith("fixed:"):
            try:
                return cls.fixed(int(text.split(":", 1)[1]))
            except ValueError:
                pass
        raise DomainError(f"cannot parse truncation policy {text!r}")

    def describe(self) -> str:
        return "optimal" if self.mode == "optimal" else f"fixed:{self.fixed_n}"

    def resolve_cap(self, q: float) -> int:
        cap = self.n_cap if self.n_cap is not None else 2 * math.ceil(math.pi * q) + 10
        cap = min(cap, K_MAX)
        limit = _env_max_terms()
        if limit is not None:
            cap = min(cap, 1 + limit)
        return max(cap, 2)

    def scan_limit(self, q: float) -> int:
        """Highest tail index that must be materialised for this policy."""
        if self.mode == "fixed":
            hi = self.fixed_n + 2  # reach past N so the first omitted term is seen
            hi = min(hi, K_MAX)
            limit = _env_max_terms()
            if limit is not None:
                hi = min(hi, 1 + limit)
            return max(hi, 2)
        return self.resolve_cap(q)


@dataclass(frozen=True)
class EvalRequest:
    """One evaluation: point (z, q), derivative order m, target accuracy."""

    z: complex
    q: float
    m: int = 0
    target_accuracy: float = 1e-12

    def __post_init__(self):
        if not self.q > 0:
            raise DomainError(f"q must be positive, got {self.q}")
        if self.m < 0:
            raise DomainError(f"derivative order must be non-negative, got {self.m}")
        if self.m > M_MAX:
            raise CapacityError(f"derivative order {self.m} exceeds the supported maximum {M_MAX}")
        if not self.target_accuracy > 0:
            raise DomainError("target accuracy must be positive")


# ---------------------------------------------------------------------------
# Shared helpers


def _env_max_terms() -> int | None:
    raw = os.environ.get(_ENV_MAX_TERMS)
    if not raw:
        return None
    try:
        value = int(raw)
    except ValueError:
        raise DomainError(f"{_ENV_MAX_TERMS} must be an integer, got {raw!r}") from None
    return value if value > 0 else None


def _check_q(q: float) -> None:
    if not q > 0:
        raise DomainError(f"q must be positive, got {q}")


def _power(base: float, exponent: complex) -> complex:
    """base**exponent for base > 0 through the principal real logarithm."""
    return cmath.exp(exponent * math.log(base))


def _as_nonpos_int(z: complex) -> int | None:
    """n when z == -n for an integer n >= 0, else None (exact test)."""
    if z.imag == 0.0 and z.real <= 0.0 and z.real == round(z.real):
        return int(-z.real)
    return None


def regime_threshold(z: complex) -> float:
    """Smallest q at which the expansions are used directly: max(10, 2|z|)."""
    return max(10.0, 2.0 * abs(complex(z)))


def optimal_truncation_index(terms) -> int:
    """Index of the smallest-magnitude nonzero term, scanning ascending.

    Ties break toward the smaller index; summation keeps everything before
    the returned index.  If every term is zero the full length is returned
    (nothing needs to be dropped).
    """
    terms = list(terms)
    if not terms:
        raise DomainError("term sequence must be non-empty")
    best = None
    best_mag = math.inf
    for i, t in enumerate(terms):
        mag = abs(t)
        if mag != 0.0 and mag < best_mag:
            best = i
            best_mag = mag
    return len(terms) if best is None else best


def _tail_term_list(zc: complex, q: float, layer: int, cache: CoefficientCache, k_hi: int) -> list[complex]:
    """Tail terms -1/2 * E_k(0) * g_layer(k) * q^(-z-k) for k = 2..k_hi.

    E_k(0)/q^k is carried as (E_k(0)/k!) * (k!/q^k); both factors stay
    inside double range for every k <= K_MAX, unlike E_k(0) itself.
    Coefficients whose magnitude sits below the rounding noise of their own
    computation are snapped to exact zero: they are exact zeros of the
    coefficient family (these occur at negative integer z), and a noise
    value must not masquerade as the smallest term of the expansion.
    """
    if k_hi > K_MAX:
        raise CapacityError(f"tail index {k_hi} exceeds the exact table capacity {K_MAX}")
    qmz = _power(q, -zc)
    out: list[complex] = []
    p = 2.0 / (q * q)  # k!/q^k, starting at k = 2
    for k in range(2, k_hi + 1):
        f = euler_number_over_factorial(k)
        if f == 0.0:
            out.append(0j)
        else:
            g = cache.layer(layer, k)
            if abs(g) <= 64.0 * 2.2e-16 * cache.layer_noise_scale(layer, k):
                g = 0.0
            out.append(-0.5 * (f * p) * g * qmz)
        p *= (k + 1) / q
    return out


def _plan_tail(
    terms: list[complex], policy: TruncationPolicy, k_start: int = 2
) -> tuple[list[complex], float]:
    """Apply the truncation policy to a precomputed term list.

    ``terms[i]`` is the tail term at index k = k_start + i.  Returns the
    kept prefix and the magnitude of the first omitted nonzero term (the
    classical error heuristic for a divergent expansion).
    """
    if policy.mode == "fixed":
        keep = min(max(0, policy.fixed_n - k_start + 1), len(terms))
        kept = terms[:keep]
        for t in terms[keep:]:
            if abs(t) != 0.0:
                return kept, abs(t)
        return kept, 0.0
    idx = optimal_truncation_index(terms)
    omitted = abs(terms[idx]) if idx < len(terms) else 0.0
    return terms[:idx], omitted


def _float_floor(zc: complex, q: float, scale: float) -> float:
    """Rounding floor for values assembled from powers q^(-z-k).

    exp amplifies the rounding of its argument, so each power carries a
    relative error of order |z log q| * eps on top of the accumulation
    noise; the floor scales accordingly.
    """
    return _EPS * (1.0 + abs(zc) * abs(math.log(q))) * scale


def _kahan(parts) -> tuple[complex, float]:
    acc = ComplexCompensatedSum()
    scale = 0.0
    for part in parts:
        acc.add(part)
        scale += abs(part)
    return acc.value, scale


# ---------------------------------------------------------------------------
# Accelerated direct series (the oracle route)


def zeta_series(z, q: float, m: int = 0, tol: float = 1e-12) -> EvalResult:
    """Sum (-1)^n (-log(n+q))^m (n+q)^(-z) with Chebyshev acceleration.

    Uses the Cohen-Rodriguez Villegas-Zagier scheme; the a-priori error
    heuristic is (3 + sqrt(8))^(-T) relative to the term scale for T
    acceleration terms.  Certified for Re(z) > 0; outside that half-plane
    the result carries an ``empirical continuation`` note and must be
    cross-validated before use as ground truth.

    Raises :class:`AccuracyError` (best value attached) when the term
    budget cannot reach ``tol``.
    """
    _check_q(q)
    if m < 0:
        raise DomainError(f"derivative order must be non-negative, got {m}")
    if m > M_MAX:
        raise CapacityError(f"derivative order {m} exceeds the supported maximum {M_MAX}")
    if not tol > 0:
        raise DomainError("tol must be positive")

    zc = complex(z)
    digits = min(30.0, max(1.0, -math.log10(tol)))
    t_needed = math.ceil(1.31 * (digits + 2.0))
    budget = _env_max_terms()
    t_used = min(t_needed, _CVZ_TERM_LIMIT if budget is None else min(budget, _CVZ_TERM_LIMIT))

    d = _CVZ_RATE ** t_used
    d = 0.5 * (d + 1.0 / d)
    b = -1.0
    c = -d
    acc = ComplexCompensatedSum()
    a_max = 0.0
    for k in range(t_used):
        c = b - c
        base = k + q
        weight = (-math.log(base)) ** m if m else 1.0
        a_k = weight * _power(base, -zc)
        acc.add(c * a_k)
        a_max = max(a_max, abs(a_k))
        b *= (k + t_used) * (k - t_used) / ((k + 0.5) * (k + 1.0))
    value = acc.value / d

    scale = max(a_max, abs(value))
    estimate = 3.0 * scale * _CVZ_RATE ** (-t_used) + 4e-16 * scale
    note = None
    if zc.real <= 0:
        note = "empirical continuation: Re(z) <= 0; cross-validate before trusting"
    result = EvalResult(value, estimate, t_used, METHOD_ORACLE, note)
    if t_used < t_needed and estimate > tol * max(1.0, scale):
        raise AccuracyError(
            f"term budget {t_used} below the {t_needed} acceleration terms needed for tol={tol:g}",
            best=result,
            achieved=estimate,
        )
    return result


# ---------------------------------------------------------------------------
# Large-q expansions


def zeta_asymptotic(z, q: float, policy: TruncationPolicy | None = None) -> EvalResult:
    """Large-q expansion of zeta(z, q) with the requested truncation.

    The expansion is q^(-z)/2 + z q^(-z-1)/4 minus the E_k(0)-weighted tail.
    At z = -n the tail terminates at k = n and the value is exact up to
    rounding, whatever the policy; otherwise the reported error estimate is
    the first omitted term plus a rounding floor.
    """
    _check_q(q)
    policy = policy or TruncationPolicy()
    zc = complex(z)
    qmz = _power(q, -zc)
    heads = [0.5 * qmz, 0.25 * zc * qmz / q]
    cache = CoefficientCache(zc)

    n = _as_nonpos_int(zc)
    if n is not None:
        if n > K_MAX:
            raise CapacityError(f"terminating expansion needs n <= {K_MAX}, got n={n}")
        terms = _tail_term_list(zc, q, 0, cache, n)
        value, scale = _kahan(heads + terms)
        floor = _float_floor(zc, q, scale + abs(value))
        return EvalResult(value, floor, 2 + len(terms), METHOD_ASYMPTOTIC)

    terms = _tail_term_list(zc, q, 0, cache, policy.scan_limit(q))
    kept, omitted = _plan_tail(terms, policy)
    value, scale = _kahan(heads + kept)
    estimate = omitted + _float_floor(zc, q, scale + abs(value))
    return EvalResult(value, estimate, 2 + len(kept), METHOD_ASYMPTOTIC)


def deriv1_asymptotic(z, q: float, policy: TruncationPolicy | None = None) -> EvalResult:
    """Large-q expansion of the first z-derivative.

    q^(-z-1)/4 - zeta(z, q) log q minus the tail weighted by the
    derivative of the Pochhammer ratio; the zeta factor is evaluated with
    the same policy and its estimate propagates through the log q term.
    """
    _check_q(q)
    policy = policy or TruncationPolicy()
    zc = complex(z)
    base = zeta_asymptotic(zc, q, policy)
    log_q = math.log(q)
    heads = [0.25 * _power(q, -zc - 1), -base.value * log_q]
    cache = CoefficientCache(zc)
    terms = _tail_term_list(zc, q, 1, cache, policy.scan_limit(q))
    kept, omitted = _plan_tail(terms, policy)
    value, scale = _kahan(heads + kept)
    estimate = omitted + abs(log_q) * base.error_estimate + _float_floor(zc, q, scale + abs(value))
    return EvalResult(value, estimate, base.terms_used + len(kept), METHOD_ASYMPTOTIC)


def deriv_m_asymptotic(z, q: float, m: int, policy: TruncationPolicy | None = None) -> EvalResult:
    """Order-m derivative (m >= 2) through the lower-order recurrence.

    value_m = -sum_{j=1}^{m} C(m, j) value_{m-j} log^j q - tail_m, with all
    lower orders evaluated under the same policy.  Error estimates propagate
    linearly through the binomial-log weights.
    """
    _check_q(q)
    if m < 2:
        raise DomainError(f"this route needs m >= 2, got {m}")
    if m > M_MAX:
        raise CapacityError(f"derivative order {m} exceeds the supported maximum {M_MAX}")
    policy = policy or TruncationPolicy()
    zc = complex(z)
    log_q = math.log(q)
    results = [zeta_asymptotic(zc, q, policy), deriv1_asymptotic(zc, q, policy)]
    cache = CoefficientCache(zc)
    cap = policy.scan_limit(q)
    for order in range(2, m + 1):
        heads = [
            -math.comb(order, j) * results[order - j].value * log_q**j
            for j in range(1, order + 1)
        ]
        terms = _tail_term_list(zc, q, order, cache, cap)
        kept, omitted = _plan_tail(terms, policy)
        value, scale = _kahan(heads + kept)
        estimate = omitted + _float_floor(zc, q, scale + abs(value))
        for j in range(1, order + 1):
            estimate += math.comb(order, j) * abs(log_q) ** j * results[order - j].error_estimate
        results.append(
            EvalResult(value, estimate, results[-1].terms_used + len(kept), METHOD_ASYMPTOTIC)
        )
    return results[m]


# ---------------------------------------------------------------------------
# Closed forms and explicit expansions at z = -n


def zeta_special_value(n: int, q: float) -> EvalResult:
    """Exact-to-rounding value at z = -n: half the Euler polynomial at q."""
    _check_q(q)
    if n < 0:
        raise DomainError(f"n must be non-negative, got {n}")
    value = 0.5 * euler_polynomial(n, q)
    mag = 0.0
    for c in _euler_polynomial_float_coefficients(n):
        mag = mag * q + abs(c)
    return EvalResult(complex(value), _EPS * (0.5 * mag + abs(value)), 0, METHOD_SPECIAL)


def deriv1_neg_int_constant_term(n: int) -> Fraction:
    """Exact log-free constant in the explicit expansion of the first
    derivative at z = -n (for n = 3 this is -11/48)."""
    if n < 0:
        raise DomainError(f"n must be non-negative, got {n}")
    if n == 0:
        return Fraction(0)
    if n == 1:
        return Fraction(1, 4)
    return Fraction(-1, 2) * euler_number_at_zero(n) * alternating_binomial_partial_sum(n, n)


def deriv1_at_neg_int(n: int, q: float, policy: TruncationPolicy | None = None) -> EvalResult:
    """Explicit first-derivative expansion at z = -n.

    q^(n-1)/4 - E_n(q) log(q)/2 minus a series whose inner binomial sum
    truncates at n.  For n >= 2 the series splits into an exact polynomial
    block (k <= n) and an asymptotic tail with collapsed inner sums
    (-1)^(n+1) n!/2 * E_k(0) / (k (k-1) ... (k-n)); only the tail is subject
    to the truncation policy.
    """
    _check_q(q)
    if n < 0:
        raise DomainError(f"n must be non-negative, got {n}")
    if n > K_MAX:
        raise CapacityError(f"n={n} exceeds the exact table capacity {K_MAX}")
    policy = policy or TruncationPolicy()
    log_q = math.log(q)
    qn = q**n
    heads = [complex(0.25 * q ** (n - 1)), complex(-0.5 * euler_polynomial(n, q) * log_q)]

    cap = max(policy.scan_limit(q), n + 2)
    finite: list[complex] = []
    tail: list[complex] = []
    p = 2.0 / (q * q)  # k!/q^k from k = 2
    sign_tail = 1.0 if n % 2 else -1.0  # (-1)^(n+1)
    n_fact = float(math.factorial(n))
    for k in range(2, cap + 1):
        f = euler_number_over_factorial(k)
        if f == 0.0:
            if k <= n:
                finite.append(0j)
            else:
                tail.append(0j)
        elif k <= n:
            weight = float(alternating_binomial_partial_sum(n, k))
            finite.append(complex(-0.5 * (f * p) * weight * qn))
        else:
            term = sign_tail * 0.5 * n_fact * (f * p) * qn
            for i in range(k - n, k + 1):
                term /= i
            tail.append(complex(term))
        p *= (k + 1) / q

    kept, omitted = _plan_tail(tail, policy, k_start=max(2, n + 1))
    value, scale = _kahan(heads + finite + kept)
    estimate = omitted + _float_floor(complex(-n), q, scale + abs(value))
    return EvalResult(value, estimate, 2 + len(finite) + len(kept), METHOD_NEG_INT)


def deriv2_at_neg_int(
    n: int,
    q: float,
    policy: TruncationPolicy | None = None,
    *,
    n0_tail_doubled: bool = False,
) -> EvalResult:
    """Explicit second-derivative expansion at z = -n.

    For n >= 1 this assembles -2 * deriv1 * log q - E_n(q) log^2(q) / 2
    minus the doubly nested tail with inner sums truncated at n; the
    k <= n block is summed exactly and the rest follows the policy.

    For n = 0 the closed form log^2(q)/2 - log(q)/(2q) plus an E_k(0)
    series is used.  ``n0_tail_doubled`` scales that series by 2, a variant
    form retained only so the verification suite can adjudicate it against
    the series oracle; the standard form is the one consistent with the
    derivative recurrence.
    """
    _check_q(q)
    if n < 0:
        raise DomainError(f"n must be non-negative, got {n}")
    if n > K_MAX:
        raise CapacityError(f"n={n} exceeds the exact table capacity {K_MAX}")
    if n0_tail_doubled and n != 0:
        raise DomainError("the doubled-tail variant is defined only for n = 0")
    policy = policy or TruncationPolicy()
    log_q = math.log(q)
    cap = max(policy.scan_limit(q), n + 2)

    if n == 0:
        prefactor = 2.0 if n0_tail_doubled else 1.0
        heads = [complex(0.5 * log_q * log_q), complex(-0.5 * log_q / q)]
        # Series sum_k E_k(0) [log(q)/k - harmonic_pair(k)/2] q^(-k) where
        # harmonic_pair(k) = sum_{j=1}^{k-1} 1/(j (k-j)).
        tail: list[complex] = []
        p = 2.0 / (q * q)
        for k in range(2, cap + 1):
            f = euler_number_over_factorial(k)
            if f == 0.0:
                tail.append(0j)
            else:
                pair = math.fsum(1.0 / (j * (k - j)) for j in range(1, k))
                tail.append(complex(prefactor * (f * p) * (log_q / k - 0.5 * pair)))
            p *= (k + 1) / q
        kept, omitted = _plan_tail(tail, policy)
        value, scale = _kahan(heads + kept)
        estimate = omitted + _float_floor(0j, q, scale + abs(value))
        return EvalResult(value, estimate, 2 + len(kept), METHOD_NEG_INT)

    d1 = deriv1_at_neg_int(n, q, policy)
    heads = [
        -2.0 * d1.value * log_q,
        complex(-0.5 * euler_polynomial(n, q) * log_q * log_q),
    ]
    inner, inner_scale = neg_int_inner_layers_float(n, 2, cap)
    qn = q**n
    finite: list[complex] = []
    tail = []
    p = 2.0 / (q * q)
    for k in range(2, cap + 1):
        f = euler_number_over_factorial(k)
        coeff = inner[k]
        if abs(coeff) <= 64.0 * 2.2e-16 * inner_scale[k]:
            coeff = 0.0  # exact zero of the coefficient family, seen through noise
        term = 0j if f == 0.0 else complex(-0.5 * (f * p) * coeff * qn)
        (finite if k <= n else tail).append(term)
        p *= (k + 1) / q
    kept, omitted = _plan_tail(tail, policy, k_start=max(2, n + 1))
    value, scale = _kahan(heads + finite + kept)
    estimate = omitted + 2.0 * abs(log_q) * d1.error_estimate + _float_floor(complex(-n), q, scale + abs(value))
    return EvalResult(value, estimate, d1.terms_used + len(finite) + len(kept), METHOD_NEG_INT)


# ---------------------------------------------------------------------------
# Shift reduction and dispatch


def _shift_terms(zc: complex, q: float, m: int, q_threshold: float):
    """Partial sum, its absolute term scale, step count for the reduction."""
    steps = max(0, math.ceil(q_threshold - q))
    acc = ComplexCompensatedSum()
    scale = 0.0
    for j in range(steps):
        base = q + j
        weight = (-math.log(base)) ** m if m else 1.0
        sign = -1.0 if j % 2 else 1.0
        term = sign * weight * _power(base, -zc)
        acc.add(term)
        scale += abs(term)
    return acc.value, scale, steps


def shift_reduce(z, q: float, m: int = 0, q_threshold: float = 10.0):
    """Push q above a threshold through the reflection identity.

    Returns (partial_sum, shifted_q, sign) with shifted_q = q + M,
    M = ceil(q_threshold - q) (zero when q already meets the threshold), so
    that deriv_m(z, q) = partial_sum + sign * deriv_m(z, shifted_q) with
    sign = (-1)^M.  The partial sum is the explicit alternating block
    sum_{j<M} (-1)^j (-log(q+j))^m (q+j)^(-z).
    """
    _check_q(q)
    if m < 0:
        raise DomainError(f"derivative order must be non-negative, got {m}")
    zc = complex(z)
    value, _, steps = _shift_terms(zc, q, m, q_threshold)
    return value, q + float(steps), (-1 if steps % 2 else 1)


def _asymptotic_family(zc: complex, q: float, m: int, policy: TruncationPolicy | None) -> EvalResult:
    if m == 0:
        return zeta_asymptotic(zc, q, policy)
    if m == 1:
        return deriv1_asymptotic(zc, q, policy)
    return deriv_m_asymptotic(zc, q, m, policy)


def evaluate(request: EvalRequest, policy: TruncationPolicy | None = None) -> EvalResult:
    """Strategy dispatcher.

    Order: exact closed form at z = -n with m = 0; the asymptotic family
    when q is already in the large-q regime; otherwise shift-reduce up to
    the regime threshold and evaluate there.  The accelerated series is
    consulted only when the expansion cannot meet the requested accuracy
    and Re(z) > 0.  A result that still misses the target carries an
    explicit accuracy note; it is never silent.
    """
    policy = policy or TruncationPolicy()
    zc = complex(request.z)
    q = request.q
    m = request.m

    n = _as_nonpos_int(zc)
    if n is not None and m == 0 and n <= K_MAX:
        result = zeta_special_value(n, q)
    else:
        threshold = regime_threshold(zc)
        if q >= threshold:
            result = _asymptotic_family(zc, q, m, policy)
        else:
            partial, partial_scale, steps = _shift_terms(zc, q, m, threshold)
            shifted_q = q + float(steps)
            sign = -1.0 if steps % 2 else 1.0
            base = _asymptotic_family(zc, shifted_q, m, policy)
            value = partial + sign * base.value
            estimate = base.error_estimate + _float_floor(
                zc, shifted_q, partial_scale + abs(value)
            )
            result = EvalResult(value, estimate, base.terms_used + steps, METHOD_SHIFTED)
        if result.error_estimate > request.target_accuracy and zc.real > 0:
            try:
                alt = zeta_series(zc, q, m, request.target_accuracy)
            except AccuracyError as err:
                alt = err.best
            if alt is not None and alt.error_estimate < result.error_estimate:
                result = alt

    if result.error_estimate > request.target_accuracy:
        result = replace(
            result,
            note=(
                f"accuracy warning: target {request.target_accuracy:g} not met; "
                f"estimate {result.error_estimate:.3e}"
            ),
        )
    return result
