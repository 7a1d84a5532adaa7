"""Exact arithmetic kernel.

Rationals are plain :class:`fractions.Fraction` values; valuations of zero
are reported as ``math.inf`` so they compare naturally against integer
bounds.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Sequence, Union

Rational = Union[int, Fraction]

INF = math.inf


def binomial(n: Rational, k: int) -> Rational:
    """Generalized binomial coefficient n(n-1)...(n-k+1)/k!.

    ``n`` may be any integer (or a Fraction, for binomial series); ``k`` must
    be a natural number.  For integer ``n`` the result is an ``int``.
    """
    if k < 0:
        raise ValueError("k must be non-negative")
    if isinstance(n, int):
        if n >= 0:
            return math.comb(n, k)
        # binom(-m, k) = (-1)^k binom(m + k - 1, k)
        return (-1) ** k * math.comb(k - n - 1, k)
    n = Fraction(n)
    if n.denominator == 1:
        return Fraction(binomial(n.numerator, k))
    num = Fraction(1)
    for j in range(k):
        num *= n - j
    return num / math.factorial(k)


def qbinomial(a: int, b: int, q: Rational) -> Fraction:
    """Gaussian binomial [a choose b]_q as the rational function

        prod_{j=1..b} (1 - q^(a-j+1)) / (1 - q^j)

    evaluated exactly; negative ``a`` is allowed.
    """
    if b < 0:
        raise ValueError("b must be non-negative")
    q = Fraction(q)
    num = Fraction(1)
    den = Fraction(1)
    for j in range(1, b + 1):
        dj = 1 - _qpow(q, j)
        if dj == 0:
            raise ZeroDivisionError(f"qbinomial: factor 1 - q^{j} vanishes at q={q}")
        num *= 1 - _qpow(q, a - j + 1)
        den *= dj
    return num / den


def _qpow(q: Fraction, e: int) -> Fraction:
    if e < 0 and q == 0:
        raise ZeroDivisionError("q = 0 raised to a negative power")
    return q**e


def l_valuation(x: Rational, l: int) -> Union[int, float]:
    """Exponent of the prime ``l`` in the rational ``x`` (``INF`` for zero)."""
    x = Fraction(x)
    if x == 0:
        return INF
    return _ival(x.numerator, l) - _ival(x.denominator, l)


def _ival(n: int, l: int) -> int:
    n = abs(n)
    v = 0
    while n % l == 0:
        n //= l
        v += 1
    return v


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def prime_power_log(n: int) -> tuple[int, int] | None:
    """Return (p, a) with n == p**a, a >= 1, or None if n is not a prime power."""
    if n < 2:
        return None
    p = 2
    while p * p <= n:
        if n % p == 0:
            break
        p += 1
    else:
        return n, 1
    a = _ival(n, p)
    return (p, a) if p**a == n else None


def log_p(n: int, p: int) -> int:
    """Exact base-``p`` logarithm of a power of ``p`` (1 gives 0)."""
    a = _ival(n, p)
    if n < 1 or p**a != n:
        raise ValueError(f"{n} is not a power of {p}")
    return a


def inverse_binomial_transform(xs: Iterable[Rational]) -> list[Fraction]:
    """Mahler coefficients xbar(n) = sum_k (-1)^(n-k) C(n,k) x(k).

    Computed as the leading entries of the forward-difference table.
    """
    row = [Fraction(x) for x in xs]
    out = []
    while row:
        out.append(row[0])
        row = [b - a for a, b in zip(row, row[1:])]
    return out


def binomial_transform(xbar: Sequence[Rational]) -> list[Fraction]:
    """x(n) = sum_{k<=n} C(n,k) xbar(k); inverse of :func:`inverse_binomial_transform`."""
    xbar = [Fraction(c) for c in xbar]
    return [
        sum((math.comb(n, k) * xbar[k] for k in range(n + 1)), Fraction(0))
        for n in range(len(xbar))
    ]


def format_rational(x: Rational) -> str:
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def parse_rational(s: Union[str, int, Fraction]) -> Fraction:
    return Fraction(s)
