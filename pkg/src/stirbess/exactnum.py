"""Arbitrary-precision combinatorial primitives.

Factorials and binomial coefficients with integer, rational, or polynomial
upper argument, plus rising/falling factorial polynomials.  Everything is
exact: integers are Python ints, rationals are ``fractions.Fraction`` in
canonical reduced form.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .polys import Rational, UniPoly


def factorial(n: int) -> int:
    """n! for n >= 0; raises ValueError for negative n."""
    return math.factorial(n)


def binomial_int(n: int, k: int) -> int:
    """Binomial coefficient C(n, k) for arbitrary integers.

    Zero for k < 0; for negative upper index it follows
    C(n, k) = (-1)^k C(k - n - 1, k).
    """
    if k < 0:
        return 0
    if n >= 0:
        return math.comb(n, k)
    value = math.comb(k - n - 1, k)
    return -value if k % 2 else value


def binomial_rat(a: Rational, k: int) -> Fraction:
    """C(a, k) = a (a-1) ... (a-k+1) / k! for rational a and k >= 0."""
    if k < 0:
        raise ValueError("lower index must be nonnegative")
    a = Fraction(a)
    num = Fraction(1)
    for j in range(k):
        num *= a - j
    return num / factorial(k)


def binomial_poly_upper(c: int, k: int) -> UniPoly:
    """C(c + Z, k) as a degree-k polynomial in the formal variable Z.

    Evaluating the result at any rational z equals ``binomial_rat(c + z, k)``;
    the leading coefficient is 1/k!.
    """
    if k < 0:
        raise ValueError("lower index must be nonnegative")
    prod = UniPoly((1,))
    for j in range(k):
        prod = prod * UniPoly((c - j, 1))
    return prod * Fraction(1, factorial(k))


def rising_factorial_poly(n: int) -> UniPoly:
    """X (X+1) ... (X+n-1), expanded.

    The coefficient of X^k is the unsigned Stirling number of the first
    kind with indices (n, k).
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    prod = UniPoly((1,))
    for j in range(n):
        prod = prod * UniPoly((j, 1))
    return prod


def falling_factorial_poly(n: int) -> UniPoly:
    """X (X-1) ... (X-n+1), expanded."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    prod = UniPoly((1,))
    for j in range(n):
        prod = prod * UniPoly((-j, 1))
    return prod
