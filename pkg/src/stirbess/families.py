"""Polynomial families: occupation-time moment polynomials, Bessel and
Chebyshev polynomials.

The central object is the bivariate sequence P_n(x, z) defined by

    P_1(x, z) = x,
    P_{n+1}(x, z) = x*C(n+z, n) - x * sum_{m=1..n} C(n-m+z, n-m+1) * P_m(x, z),

where the binomials are polynomials in z.  Its coefficients mix Stirling
numbers of both kinds (see ``pn_closed_form``); fixing z yields classical
shapes: P_n(x, 0) = x, P_n(x, -1) = x^n, P_n(x, 1) = 1-(1-x)^n, a central
binomial form at z = -1/2 (the moments of the positive occupation time of
a skew Brownian motion with skewness x), and a rescaled Chebyshev
polynomial at z = -2.
"""

from __future__ import annotations

import threading
from fractions import Fraction

from . import triangles
from .exactnum import binomial_int, binomial_poly_upper, factorial
from .polys import BiPoly, UniPoly
from .triangles import Triangles

_pn_cache: list[BiPoly] = [BiPoly(), BiPoly.x()]  # index n -> P_n; slot 0 unused
_pn_lock = threading.Lock()


def pn_recurrence(n: int) -> BiPoly:
    """P_n(x, z) built from the defining recurrence; prefix-cached."""
    if n < 1:
        raise ValueError("n must be positive")
    if n >= len(_pn_cache):
        with _pn_lock:
            while len(_pn_cache) <= n:
                m_top = len(_pn_cache) - 1  # have P_1..P_{m_top}, build P_{m_top+1}
                acc = BiPoly.from_z_poly(binomial_poly_upper(m_top, m_top))
                for m in range(1, m_top + 1):
                    binom = binomial_poly_upper(m_top - m, m_top - m + 1)
                    acc = acc - BiPoly.from_z_poly(binom) * _pn_cache[m]
                _pn_cache.append(BiPoly.x() * acc)
    return _pn_cache[n]


def pn_closed_form(n: int, tables: Triangles | None = None) -> BiPoly:
    """P_n(x, z) as the explicit Stirling double sum:

        sum_{k=1..n} sum_{j=1..k} (-1)^(j-1) (j-1)!/(n-1)!
                                  * s1(n, k) * s2(k, j) * x^j z^(k-1)

    with s1/s2 the unsigned first-kind and second-kind Stirling numbers.
    Equality with ``pn_recurrence`` is the suite's central cross-check.
    """
    if n < 1:
        raise ValueError("n must be positive")
    t = tables if tables is not None else triangles.DEFAULT
    denom = factorial(n - 1)
    terms: dict[tuple[int, int], Fraction] = {}
    for k in range(1, n + 1):
        s1 = t.stirling1(n, k)
        for j in range(1, k + 1):
            c = Fraction((-1) ** (j - 1) * factorial(j - 1) * s1 * t.stirling2(k, j), denom)
            if c:
                terms[(j, k - 1)] = c
    return BiPoly(terms)


def pn_skew_bm(n: int) -> UniPoly:
    """P_n(x, -1/2) = sum_{k=0..n-1} C(n+k-1, k) x^(n-k) / 2^(n+k-1).

    These are the moments E[A_1^n] of the positive occupation time of a
    skew Brownian motion with skewness x; the coefficients are positive
    and sum to 1.
    """
    if n < 1:
        raise ValueError("n must be positive")
    coeffs = [Fraction(0)] * (n + 1)
    for k in range(n):
        coeffs[n - k] = Fraction(binomial_int(n + k - 1, k), 2 ** (n + k - 1))
    return UniPoly(coeffs)


def pn_z_minus2(n: int) -> UniPoly:
    """P_n(x, -2) in closed form:

        (n/2) * sum_{k=ceil(n/2)..n} (-1)^(n-k) (k-1)! 2^(2k-n)
                                     / ((n-k)! (2k-n)!) * x^k
    """
    if n < 1:
        raise ValueError("n must be positive")
    coeffs = [Fraction(0)] * (n + 1)
    for k in range((n + 1) // 2, n + 1):
        c = Fraction(factorial(k - 1) * 2 ** (2 * k - n), factorial(n - k) * factorial(2 * k - n))
        if (n - k) % 2:
            c = -c
        coeffs[k] = Fraction(n, 2) * c
    return UniPoly(coeffs)


def pn_z_one(n: int) -> UniPoly:
    """P_n(x, 1) = 1 - (1-x)^n = sum_{k=1..n} (-1)^(k+1) C(n, k) x^k."""
    if n < 1:
        raise ValueError("n must be positive")
    coeffs = [Fraction(0)] * (n + 1)
    for k in range(1, n + 1):
        v = binomial_int(n, k)
        coeffs[k] = Fraction(-v if k % 2 == 0 else v)
    return UniPoly(coeffs)


def bessel_poly(n: int) -> UniPoly:
    """Bessel polynomial y_n: y_0 = 1, y_1 = x+1, y_n = (2n-1)x y_{n-1} + y_{n-2}."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    prev = UniPoly((1,))
    if n == 0:
        return prev
    cur = UniPoly((1, 1))
    for m in range(2, n + 1):
        prev, cur = cur, (2 * m - 1) * cur.shifted(1) + prev
    return cur


def reverse_bessel_poly(n: int) -> UniPoly:
    """Reverse Bessel polynomial theta_n = x^n y_n(1/x).

    theta_0 = 1, theta_1 = x+1, theta_n = (2n-1) theta_{n-1} + x^2 theta_{n-2}.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    prev = UniPoly((1,))
    if n == 0:
        return prev
    cur = UniPoly((1, 1))
    for m in range(2, n + 1):
        prev, cur = cur, (2 * m - 1) * cur + prev.shifted(2)
    return cur


def chebyshev_t(n: int) -> UniPoly:
    """Chebyshev polynomial of the first kind T_n."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    prev = UniPoly((1,))
    if n == 0:
        return prev
    cur = UniPoly.x()
    for _ in range(2, n + 1):
        prev, cur = cur, 2 * cur.shifted(1) - prev
    return cur


def pn_via_chebyshev(n: int) -> UniPoly:
    """P_n(x, -2) built from T_n by mapping each monomial t^m to x^((n+m)/2).

    T_n contains only powers with m = n (mod 2), so every exponent (n+m)/2
    is an integer; this realizes (sqrt x)^n T_n(sqrt x) without irrational
    intermediates.
    """
    if n < 1:
        raise ValueError("n must be positive")
    t = chebyshev_t(n)
    coeffs = [Fraction(0)] * (n + 1)
    for m, c in enumerate(t.coeffs):
        if c == 0:
            continue
        assert (n - m) % 2 == 0, f"parity violation in T_{n} at power {m}"
        coeffs[(n + m) // 2] = c
    return UniPoly(coeffs)
