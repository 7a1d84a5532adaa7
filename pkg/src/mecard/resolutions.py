"""Cardinality sequences of simplicial resolutions and their skeleta.

Only the degreewise cardinalities x_n = |X_n| are modelled.  The n-th
skeleton has cardinality sum_{k<=n} (-1)^k xbar_k; the same number is
also computed from the inclusion-exclusion form
sum_k (-1)^k C(n+1, k+1) x_k and the two are required to agree.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Optional, Sequence

from .arith import (
    INF,
    Rational,
    format_rational,
    inverse_binomial_transform,
    l_valuation,
    log_p,
    prime_power_log,
)
from .expoly import ExpoPoly, IntValuedPoly
from .mahler import required_valuation


class SkeletonMismatch(AssertionError):
    """The two skeleton formulas disagree (an internal consistency failure)."""


@dataclass(frozen=True)
class SimplicialCardinalitySeq:
    x: Callable[[int], Fraction]
    label: str
    target: Fraction
    d: int = 1
    p: Optional[int] = None
    denominator: int = 1
    closed: Optional[ExpoPoly] = None
    _cache: dict = field(default_factory=dict, compare=False, repr=False)

    def __call__(self, n: int) -> Fraction:
        if n not in self._cache:
            self._cache[n] = Fraction(self.x(n))
        return self._cache[n]

    def values(self, count: int) -> list[Fraction]:
        return [self(n) for n in range(count)]


def skeleton_cardinalities(xs: Sequence[Rational]) -> list[Fraction]:
    """|sk^n| for n = 0..len(xs)-1, cross-checked between both formulas."""
    xs = [Fraction(v) for v in xs]
    xbar = inverse_binomial_transform(xs)
    out, s = [], Fraction(0)
    for k, c in enumerate(xbar):
        s += c if k % 2 == 0 else -c
        out.append(s)
    for n in range(len(xs)):
        direct = sum(
            ((-1) ** k * math.comb(n + 1, k + 1) * xs[k] for k in range(n + 1)), Fraction(0)
        )
        if direct != out[n]:
            raise SkeletonMismatch(f"skeleton {n}: {out[n]} (Mahler) != {direct} (direct)")
    return out


def bar_cell_counts(g: int, N: int) -> list[int]:
    """sum_{k<=n} (-1)^k (g-1)^k: alternating count of non-degenerate bar simplices."""
    out, s = [], 0
    for k in range(N + 1):
        s += (-1) ** k * (g - 1) ** k
        out.append(s)
    return out


def _prime_of(g: int) -> Optional[int]:
    pl = prime_power_log(g)
    return pl[0] if pl else None


def bar_sequence(g: int) -> SimplicialCardinalitySeq:
    """Bar construction of a group of order g: x_n = g^n, colimit BG."""
    if g < 1:
        raise ValueError("group order must be >= 1")
    p = _prime_of(g)
    closed = None
    if p:
        closed = ExpoPoly.power(p, IntValuedPoly.basis(1, log_p(g, p)))
    return SimplicialCardinalitySeq(
        lambda n: Fraction(g) ** n, f"bar({g})", Fraction(1, g), 1, p, g, closed
    )


def cech_sequence(card_x: Rational, g: int) -> SimplicialCardinalitySeq:
    """Cech nerve of X -> X//G: x_n = |X| g^n, colimit of cardinality |X|/g."""
    card_x = Fraction(card_x)
    p = _prime_of(g)
    return SimplicialCardinalitySeq(
        lambda n: card_x * Fraction(g) ** n,
        f"cech({card_x}, {g})",
        card_x / g,
        1,
        p,
        g * card_x.denominator,
    )


def iterated_bar_sequence(g: int, d: int) -> SimplicialCardinalitySeq:
    """Diagonal of the d-fold bar construction of an abelian group of order g:
    x_n = g^(n^d), colimit B^d G of cardinality g^((-1)^d)."""
    if d < 1:
        raise ValueError("d must be >= 1")
    p = _prime_of(g)
    closed = None
    if p:
        a = log_p(g, p)
        nd = IntValuedPoly.from_values([n**d for n in range(d + 1)])
        closed = ExpoPoly.power(p, nd * a)
    return SimplicialCardinalitySeq(
        lambda n: Fraction(g) ** (n**d),
        f"iterbar({g}, {d})",
        Fraction(g) ** ((-1) ** d),
        d,
        p,
        1,
        closed,
    )


@dataclass(frozen=True)
class SimplicialGroupResolutions:
    p: int
    moore_logs: tuple[int, ...]
    f: IntValuedPoly  # log_p |G_n|
    bar: SimplicialCardinalitySeq
    wbar: SimplicialCardinalitySeq
    group_cardinality: Fraction  # |G| = prod |N_n G|^((-1)^n)
    target: Fraction  # |BG| = 1/|G|


def simplicial_group_sequences(moore_sizes: Sequence[int]) -> SimplicialGroupResolutions:
    """Bar and W-bar resolutions of BG for a simplicial p-group with
    Moore complex orders ``moore_sizes`` = (|N_0 G|, |N_1 G|, ...).

    log_p |G_n| is the binomial transform of log_p |N_n G|, i.e. the
    polynomial with those numbers as binomial-basis coefficients.
    """
    sizes = [int(s) for s in moore_sizes]
    if not sizes or any(s < 1 for s in sizes):
        raise ValueError("Moore sizes must be positive integers")
    primes = {_prime_of(s) for s in sizes if s > 1}
    if None in primes or len(primes) > 1:
        raise ValueError(f"Moore sizes must all be powers of one prime, got {sizes}")
    p = primes.pop() if primes else 2
    logs = tuple(log_p(s, p) for s in sizes)
    f = IntValuedPoly(logs)
    group_card = Fraction(p) ** f(-1)
    check = math.prod((Fraction(s) ** ((-1) ** k) for k, s in enumerate(sizes)), start=Fraction(1))
    assert check == group_card
    target = 1 / group_card

    bar_exp = IntValuedPoly.basis(1) * f  # n f(n)
    wbar_exp = f.partial_sums()  # f(0) + ... + f(n-1)
    bar_d = max(bar_exp.degree, 1)
    wbar_d = max(wbar_exp.degree, 1)
    bar = SimplicialCardinalitySeq(
        lambda n: Fraction(p) ** bar_exp(n), f"simpgroup-bar{tuple(sizes)}", target, bar_d, p, 1,
        ExpoPoly.power(p, bar_exp),
    )
    wbar = SimplicialCardinalitySeq(
        lambda n: Fraction(p) ** wbar_exp(n), f"simpgroup-wbar{tuple(sizes)}", target, wbar_d, p, 1,
        ExpoPoly.power(p, wbar_exp),
    )
    return SimplicialGroupResolutions(p, logs, f, bar, wbar, group_card, target)


@dataclass
class ConvergenceReport:
    label: str
    l: int
    d: int
    slack: int
    burn_in: int
    rows: list[tuple[int, Fraction, Fraction, Fraction, object]]  # n, x_n, xbar_n, sk_n, v
    bound_ok: bool
    monotone_ok: bool
    target: Fraction

    @property
    def passed(self) -> bool:
        return self.bound_ok

    @property
    def valuations(self):
        return [r[4] for r in self.rows]

    def to_json(self):
        return {
            "label": self.label,
            "l": self.l,
            "d": self.d,
            "slack": self.slack,
            "burn_in": self.burn_in,
            "target": format_rational(self.target),
            "verdict": "pass" if self.passed else "fail",
            "monotone_after_burn_in": self.monotone_ok,
            "skeleta": [format_rational(r[3]) for r in self.rows],
            "valuations": ["inf" if r[4] == INF else r[4] for r in self.rows],
        }

    def to_csv(self) -> str:
        lines = ["n,x_n,xbar_n,sk_n,valuation"]
        for n, x, xb, sk, v in self.rows:
            vs = "inf" if v == INF else str(v)
            lines.append(f"{n},{format_rational(x)},{format_rational(xb)},{format_rational(sk)},{vs}")
        return "\n".join(lines)


def resolution_convergence(
    seq: SimplicialCardinalitySeq, l: int, N: int = 12, burn_in: Optional[int] = None
) -> ConvergenceReport:
    """v_l(|sk^n| - |X|) per n.

    Passes iff every valuation meets floor((n+1)/d) - slack.  Whether the
    valuations are non-decreasing from index ``burn_in`` (default d) on is
    recorded but not required: exact hits (valuation inf) and uneven
    digit growth make it fail for genuine resolutions such as g^(n^3).
    """
    xs = seq.values(N + 1)
    xbar = inverse_binomial_transform(xs)
    sk = skeleton_cardinalities(xs)
    slack = l_valuation(seq.denominator, l)
    vals = [l_valuation(s - seq.target, l) for s in sk]
    bound_ok = all(v >= required_valuation(n + 1, seq.d, slack) for n, v in enumerate(vals))
    b = seq.d if burn_in is None else burn_in
    tail = vals[b:]
    monotone_ok = all(u <= v for u, v in zip(tail, tail[1:]))
    rows = list(zip(range(N + 1), xs, xbar, sk, vals))
    return ConvergenceReport(seq.label, l, seq.d, slack, b, rows, bound_ok, monotone_ok, seq.target)
