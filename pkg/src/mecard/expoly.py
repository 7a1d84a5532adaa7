"""Expolynomials: finite rational combinations of p^f(n).

Exponents ``f`` are integer-valued polynomials kept in the binomial basis
``f(x) = sum_k a_k C(x, k)``, so integrality at every integer argument is
automatic and evaluation at negative ``n`` is just the generalized binomial.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .arith import Rational, binomial, format_rational, inverse_binomial_transform


def _trim(coeffs: Iterable[int]) -> tuple[int, ...]:
    c = list(coeffs)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


@dataclass(frozen=True, order=True)
class IntValuedPoly:
    coeffs: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "coeffs", _trim(int(a) for a in self.coeffs))

    @classmethod
    def basis(cls, k: int, scale: int = 1) -> "IntValuedPoly":
        """scale * C(x, k)."""
        return cls((0,) * k + (scale,))

    @classmethod
    def constant(cls, c: int) -> "IntValuedPoly":
        return cls((c,))

    @classmethod
    def from_values(cls, values: Sequence[int]) -> "IntValuedPoly":
        """Interpolate through f(0), ..., f(D); the result has degree <= D."""
        coeffs = inverse_binomial_transform(values)
        if any(c.denominator != 1 for c in coeffs):
            raise ValueError("values are not those of an integer-valued polynomial")
        return cls(tuple(int(c) for c in coeffs))

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def __call__(self, n: int) -> int:
        return sum(a * binomial(n, k) for k, a in enumerate(self.coeffs))

    def values(self, count: int) -> list[int]:
        return [self(n) for n in range(count)]

    def __add__(self, other: "IntValuedPoly") -> "IntValuedPoly":
        m = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (0,) * (m - len(self.coeffs))
        b = other.coeffs + (0,) * (m - len(other.coeffs))
        return IntValuedPoly(tuple(x + y for x, y in zip(a, b)))

    def __neg__(self) -> "IntValuedPoly":
        return IntValuedPoly(tuple(-a for a in self.coeffs))

    def __sub__(self, other: "IntValuedPoly") -> "IntValuedPoly":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return IntValuedPoly(tuple(other * a for a in self.coeffs))
        # the product has degree deg f + deg g, so that many + 1 samples determine it
        count = max(self.degree, 0) + max(other.degree, 0) + 1
        return IntValuedPoly.from_values([self(n) * other(n) for n in range(count)])

    __rmul__ = __mul__

    def shift(self, c: int) -> "IntValuedPoly":
        """x -> f(x + c)."""
        return IntValuedPoly.from_values([self(n + c) for n in range(len(self.coeffs) or 1)])

    def partial_sums(self) -> "IntValuedPoly":
        """F(n) = f(0) + ... + f(n-1), via C(x, k) -> C(x, k+1)."""
        return IntValuedPoly((0,) + self.coeffs)

    def __repr__(self):
        if not self.coeffs:
            return "0"
        parts = [f"{a}*C(n,{k})" for k, a in enumerate(self.coeffs) if a]
        return " + ".join(parts)


ZERO_POLY = IntValuedPoly()


@dataclass(frozen=True)
class ExpoPoly:
    """sum_i c_i * p^{f_i(n)} over a single base prime ``p``.

    Canonical form: each exponent has zero constant term (the factor
    p^{f_i(0)} is folded into c_i), equal exponents are merged, zero
    coefficients dropped, and terms sorted by exponent coefficient vector.
    Two canonical expolynomials are equal iff they are equal as functions.
    """

    p: int
    terms: tuple[tuple[Fraction, IntValuedPoly], ...] = ()

    def __post_init__(self):
        merged: dict[IntValuedPoly, Fraction] = {}
        for c, f in self.terms:
            c = Fraction(c)
            if f.coeffs and f.coeffs[0]:
                c *= Fraction(self.p) ** f.coeffs[0]
                f = IntValuedPoly((0,) + f.coeffs[1:])
            merged[f] = merged.get(f, Fraction(0)) + c
        terms = tuple(sorted(((c, f) for f, c in merged.items() if c), key=lambda t: t[1].coeffs))
        object.__setattr__(self, "terms", terms)

    @classmethod
    def constant(cls, p: int, c: Rational) -> "ExpoPoly":
        return cls(p, ((Fraction(c), ZERO_POLY),))

    @classmethod
    def power(cls, p: int, f: IntValuedPoly, c: Rational = 1) -> "ExpoPoly":
        return cls(p, ((Fraction(c), f),))

    def __call__(self, n: int) -> Fraction:
        p = Fraction(self.p)
        return sum((c * p ** f(n) for c, f in self.terms), Fraction(0))

    evaluate = __call__

    def extrapolate_minus_one(self) -> Fraction:
        return self(-1)

    def values(self, count: int) -> list[Fraction]:
        return [self(n) for n in range(count)]

    @property
    def max_degree(self) -> int:
        return max((f.degree for _, f in self.terms), default=-1)

    def _check(self, other: "ExpoPoly"):
        if not isinstance(other, ExpoPoly):
            return NotImplemented
        if other.p != self.p:
            raise ValueError(f"mismatched base primes {self.p} and {other.p}")
        return None

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = ExpoPoly.constant(self.p, other)
        self._check(other)
        return ExpoPoly(self.p, self.terms + other.terms)

    __radd__ = __add__

    def __neg__(self):
        return self.scale(-1)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c: Rational) -> "ExpoPoly":
        c = Fraction(c)
        return ExpoPoly(self.p, tuple((c * a, f) for a, f in self.terms))

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        self._check(other)
        return ExpoPoly(
            self.p,
            tuple((a * b, f + g) for a, f in self.terms for b, g in other.terms),
        )

    __rmul__ = __mul__

    def __bool__(self):
        return bool(self.terms)

    def to_json(self) -> dict:
        return {
            "p": self.p,
            "terms": [{"c": format_rational(c), "f": list(f.coeffs)} for c, f in self.terms],
        }

    @classmethod
    def from_json(cls, data: dict) -> "ExpoPoly":
        return cls(
            int(data["p"]),
            tuple((Fraction(t["c"]), IntValuedPoly(tuple(t["f"]))) for t in data["terms"]),
        )

    def __repr__(self):
        if not self.terms:
            return f"ExpoPoly(p={self.p}, 0)"
        body = " + ".join(f"({c})*{self.p}^[{f!r}]" for c, f in self.terms)
        return f"ExpoPoly(p={self.p}, {body})"
