"""Exact sums of roots of unity and certified-sign real evaluation.

A sum S = sum_j c_j * zeta_N^j is stored as a coefficient list indexed by
the exponent mod N.  Identity testing reduces the coefficient polynomial
modulo the N-th cyclotomic polynomial; sign testing of real sums uses
rational interval arithmetic for cos(2*pi*t), so no floating point is
involved anywhere.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

# pi lies strictly between _PI_LO and _PI_LO + 10**-48
_PI_LO = Fraction(314159265358979323846264338327950288419716939937, 10**47)
_PI_EPS = Fraction(1, 10**47)


def _poly_divmod(num, den):
    """Division of integer polynomials; den must be monic."""
    num = list(num)
    d = len(den) - 1
    q = [0] * max(1, len(num) - d)
    for i in range(len(num) - 1, d - 1, -1):
        c = num[i]
        if c:
            q[i - d] = c
            for j, dc in enumerate(den):
                num[i - d + j] -= c * dc
    while len(num) > 1 and num[-1] == 0:
        num.pop()
    return q, num


@lru_cache(maxsize=None)
def cyclotomic_poly(n: int) -> tuple[int, ...]:
    """Coefficients (low degree first) of the n-th cyclotomic polynomial."""
    num = [0] * (n + 1)
    num[0], num[n] = -1, 1
    for d in range(1, n):
        if n % d == 0:
            num, rem = _poly_divmod(num, list(cyclotomic_poly(d)))
            assert rem == [0]
    return tuple(num)


def is_zero_root_sum(coeffs, n: int) -> bool:
    """True iff sum_j coeffs[j] * zeta_n^j = 0."""
    _, rem = _poly_divmod(list(coeffs), list(cyclotomic_poly(n)))
    return all(c == 0 for c in rem)


@lru_cache(maxsize=None)
def cos_2pi_interval(t: Fraction) -> tuple[Fraction, Fraction]:
    """Rational bounds (lo, hi) for cos(2*pi*t)."""
    t %= 1
    sign = 1
    if t > Fraction(1, 2):
        t = 1 - t
    if t > Fraction(1, 4):
        sign, t = -1, Fraction(1, 2) - t
    # now 0 <= t <= 1/4, so x = 2*pi*t lies in [0, pi/2]
    x = (2 * _PI_LO + _PI_EPS) * t  # midpoint of the x interval
    slack = _PI_EPS * t + Fraction(1, 10**40)  # |cos'| <= 1 plus series tail
    x2 = x * x
    term = Fraction(1)
    total = Fraction(1)
    k = 0
    while term > Fraction(1, 10**40):
        k += 1
        term = term * x2 / ((2 * k - 1) * (2 * k))
        total += term if k % 2 == 0 else -term
    val = sign * total
    return val - slack, val + slack


def real_sum_sign(coeffs, n: int) -> int:
    """Sign of the real number sum_j coeffs[j] * cos(2*pi*j/n).

    The caller must guarantee the sum is real and bounded away from zero by
    more than the interval width (~1e-39 times the coefficient mass).
    """
    lo = hi = Fraction(0)
    for j, c in enumerate(coeffs):
        if c:
            clo, chi = cos_2pi_interval(Fraction(j, n))
            if c > 0:
                lo += c * clo
                hi += c * chi
            else:
                lo += c * chi
                hi += c * clo
    if lo > 0:
        return 1
    if hi < 0:
        return -1
    raise ArithmeticError("interval evaluation could not separate the sum from zero")
