"""Truncated power series over Q and the symmetric-group generating functions."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .arith import Rational, binomial, qbinomial


@dataclass(frozen=True)
class TruncatedSeries:
    """a_0 + a_1 x + ... + a_M x^M, exact through degree M."""

    coeffs: tuple[Fraction, ...]

    def __post_init__(self):
        if not self.coeffs:
            raise ValueError("a truncated series needs at least the constant term")
        object.__setattr__(self, "coeffs", tuple(Fraction(c) for c in self.coeffs))

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    @classmethod
    def from_terms(cls, terms: dict[int, Rational], M: int) -> "TruncatedSeries":
        c = [Fraction(0)] * (M + 1)
        for k, v in terms.items():
            if k <= M:
                c[k] += Fraction(v)
        return cls(tuple(c))

    @classmethod
    def one(cls, M: int) -> "TruncatedSeries":
        return cls.from_terms({0: 1}, M)

    def __getitem__(self, k: int) -> Fraction:
        return self.coeffs[k]

    def __len__(self):
        return len(self.coeffs)

    def _match(self, other: "TruncatedSeries"):
        if other.order != self.order:
            raise ValueError(f"truncation orders differ: {self.order} vs {other.order}")

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        self._match(other)
        return TruncatedSeries(tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        self._match(other)
        return TruncatedSeries(tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def scale(self, c: Rational) -> "TruncatedSeries":
        return TruncatedSeries(tuple(Fraction(c) * a for a in self.coeffs))

    def __mul__(self, other):
        if not isinstance(other, TruncatedSeries):
            return self.scale(other)
        self._match(other)
        M = self.order
        a, b = self.coeffs, other.coeffs
        return TruncatedSeries(
            tuple(sum((a[i] * b[k - i] for i in range(k + 1)), Fraction(0)) for k in range(M + 1))
        )

    def reciprocal(self) -> "TruncatedSeries":
        if self.coeffs[0] == 0:
            raise ZeroDivisionError("series with zero constant term has no reciprocal")
        a = self.coeffs
        inv = [1 / a[0]]
        for k in range(1, self.order + 1):
            inv.append(-sum((a[i] * inv[k - i] for i in range(1, k + 1)), Fraction(0)) / a[0])
        return TruncatedSeries(tuple(inv))

    def __pow__(self, e: Rational) -> "TruncatedSeries":
        """s^e = sum_k C(e, k) (s - 1)^k for s with constant term 1."""
        if self.coeffs[0] != 1:
            raise ValueError("pow needs constant term 1")
        e = Fraction(e)
        M = self.order
        u = self - TruncatedSeries.one(M)  # u has zero constant term, so u^k = O(x^k)
        out = TruncatedSeries.one(M)
        term = TruncatedSeries.one(M)
        for k in range(1, M + 1):
            term = term * u
            c = binomial(e, k)
            if c:
                out = out + term.scale(c)
        return out

    def to_rows(self) -> list[tuple[int, Fraction]]:
        return list(enumerate(self.coeffs))


def _one_minus_xpow(k: int, M: int) -> TruncatedSeries:
    return TruncatedSeries.from_terms({0: 1, k: -1}, M)


def subgroup_count_zpn(p: int, n: int, r: int) -> int:
    """Number of index-p^r subgroups of Z_p^n, i.e. [r+n-1, r]_p."""
    if n < 0 or r < 0:
        raise ValueError("n and r must be non-negative")
    v = qbinomial(r + n - 1, r, p)
    assert v.denominator == 1
    return int(v)


def chi_symmetric_genfun(p: int, n: int, M: int) -> TruncatedSeries:
    """sum_m chi_n(B Sigma_m) x^m = prod_{r>=0} (1 - x^{p^r})^{-[r+n-1, r]_p}, through x^M.

    Factors with p^r > M are 1 modulo x^{M+1}.  Any integer n is accepted;
    at n = -1 the exponents are the q-binomials at negative arguments.
    """
    out = TruncatedSeries.one(M)
    r = 0
    while p**r <= M:
        e = qbinomial(r + n - 1, r, p)
        if e:
            out = out * (_one_minus_xpow(p**r, M) ** (-e))
        r += 1
    return out


def sym_cardinality_series(p: int, M: int) -> TruncatedSeries:
    """sum_m |B Sigma_m|_p x^m = (1 - x^p)^{1/p} / (1 - x)."""
    lead = _one_minus_xpow(p, M) ** Fraction(1, p)
    return lead * _one_minus_xpow(1, M).reciprocal()


def sym_cardinality_product(p: int, m: int) -> Fraction:
    """prod over 1 <= d <= m with p | d of (1 - 1/d)."""
    return math.prod((1 - Fraction(1, d) for d in range(p, m + 1, p)), start=Fraction(1))


def rows_csv(rows: Sequence[tuple[int, Fraction]]) -> str:
    lines = ["m,coefficient"]
    lines += [f"{m},{c.numerator}/{c.denominator}" for m, c in rows]
    return "\n".join(lines)
