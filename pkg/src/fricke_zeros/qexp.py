"""Divisor-sum q-expansion of the classical Eisenstein series E_k.

This is a test oracle: an independent route to E_k values built from exact
Bernoulli numbers and divisor sums, used to cross-check the lattice-sum
evaluators.  Nothing in the runtime path imports it.
"""

from __future__ import annotations

import cmath
import math
from fractions import Fraction
from functools import lru_cache

TWO_PI = 2.0 * math.pi


@lru_cache(maxsize=None)
def bernoulli(m: int) -> Fraction:
    """Exact Bernoulli number B_m (B_1 = -1/2 convention)."""
    if m < 0:
        raise ValueError("m must be nonnegative")
    if m == 0:
        return Fraction(1)
    # sum_{j=0}^{m} C(m+1, j) B_j = 0
    acc = Fraction(0)
    for j in range(m):
        acc += math.comb(m + 1, j) * bernoulli(j)
    return -acc / (m + 1)


def sigma(n: int, power: int) -> int:
    """Divisor power sum sigma_power(n)."""
    if n < 1:
        raise ValueError("n must be positive")
    total = 0
    d = 1
    while d * d <= n:
        if n % d == 0:
            total += d**power
            e = n // d
            if e != d:
                total += e**power
        d += 1
    return total


def eisenstein_coefficient(k: int) -> Fraction:
    """The exact factor -2k/B_k multiplying the divisor sums (240 for k=4)."""
    return Fraction(-2 * k) / bernoulli(k)


def eisenstein_qexp(z: complex, k: int, n_terms: int = 200) -> tuple[complex, float]:
    """E_k(z) from the q-expansion, with a rigorous truncation remainder.

    Returns (value, remainder_bound).  Valid for even k >= 4 and Im z > 0.
    The remainder uses sigma_{k-1}(n) <= n^k and a geometric-ratio tail.
    """
    if k < 4 or k % 2:
        raise ValueError("k must be even and >= 4")
    y = z.imag
    if y <= 0:
        raise ValueError("need Im z > 0")
    q = cmath.exp(2j * math.pi * z)
    coeff = float(eisenstein_coefficient(k))
    acc = 0.0 + 0.0j
    qn = 1.0 + 0.0j
    for n in range(1, n_terms + 1):
        qn *= q
        acc += sigma(n, k - 1) * qn
    value = 1.0 + coeff * acc

    x = abs(q)
    # sum_{n > N} n^k x^n <= (N+1)^k x^(N+1) / (1 - rho), rho = x ((N+2)/(N+1))^k
    rho = x * ((n_terms + 2) / (n_terms + 1)) ** k
    if rho >= 1.0:
        raise ValueError("q too large for the truncation bound; increase n_terms")
    lead = math.exp(k * math.log(n_terms + 1) + (n_terms + 1) * math.log(x)) if x > 0 else 0.0
    remainder = abs(coeff) * lead / (1.0 - rho)
    return value, remainder
