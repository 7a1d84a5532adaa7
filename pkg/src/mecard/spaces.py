"""Symbolic pi-finite p-spaces and their Morava-Euler sequences.

A space is described only by the invariants that determine
chi_n(X) = |[T^n, X]|: homotopy group orders for products of
Eilenberg-MacLane spaces, a multiplication table for BG, and the
cup-power fibers X_{2,m}.  Pushout nodes are formal and get their values
from additivity.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache, reduce
from typing import Callable, Optional

from . import groups, kernels
from .arith import binomial, l_valuation, prime_power_log, qbinomial
from .expoly import ExpoPoly, IntValuedPoly
from .groups import FiniteGroup


def _order(factors: tuple[int, ...]) -> int:
    return math.prod(factors)


def _is_p_power(n: int, p: int) -> bool:
    while n % p == 0:
        n //= p
    return n == 1


def _plog(n: int, p: int) -> int:
    if n == 1:
        return 0
    pl = prime_power_log(n)
    if pl is None or pl[0] != p:
        raise ValueError(f"{n} is not a power of {p}")
    return pl[1]


class Space:
    """Base class of the expression tree."""

    def children(self) -> tuple["Space", ...]:
        return ()

    @property
    def degree(self) -> int:
        return max((c.degree for c in self.children()), default=0)

    def __mul__(self, other):
        return Product(self, other)

    def __add__(self, other):
        return Coproduct(self, other)


@dataclass(frozen=True)
class Point(Space):
    def to_json(self):
        return "Point"


@dataclass(frozen=True)
class Empty(Space):
    def to_json(self):
        return "Empty"


@dataclass(frozen=True)
class EM(Space):
    """K(A, d) for A = prod C_{group[i]}, d >= 1."""

    group: tuple[int, ...]
    deg: int

    def __post_init__(self):
        object.__setattr__(self, "group", tuple(int(a) for a in self.group))
        if self.deg < 1:
            raise ValueError("EM degree must be >= 1")
        if any(a < 1 for a in self.group):
            raise ValueError("invariant factors must be positive")

    @property
    def degree(self):
        return self.deg

    def to_json(self):
        return {"EM": {"group": list(self.group), "deg": self.deg}}


@dataclass(frozen=True)
class GEM(Space):
    """Product of K(A_k, k), k >= 0; the chi-data of any pi-finite loop space."""

    factors: tuple[tuple[tuple[int, ...], int], ...]

    def __post_init__(self):
        norm = tuple((tuple(int(a) for a in grp), int(k)) for grp, k in self.factors)
        if any(k < 0 for _, k in norm):
            raise ValueError("GEM degrees must be >= 0")
        object.__setattr__(self, "factors", norm)

    @property
    def degree(self):
        return max((k for g, k in self.factors if _order(g) > 1), default=0)

    def to_json(self):
        return {"GEM": [{"group": list(g), "deg": k} for g, k in self.factors]}


@dataclass(frozen=True)
class Classifying(Space):
    group: FiniteGroup

    @property
    def degree(self):
        return 1

    def to_json(self):
        name = self.group.name
        try:
            if name and groups.parse_group(name) == self.group:
                return {"BG": name}
        except ValueError:
            pass
        return {"BG": self.group.to_json()}


@dataclass(frozen=True)
class Product(Space):
    left: Space
    right: Space

    def children(self):
        return (self.left, self.right)

    def to_json(self):
        return {"Product": [self.left.to_json(), self.right.to_json()]}


@dataclass(frozen=True)
class Coproduct(Space):
    left: Space
    right: Space

    def children(self):
        return (self.left, self.right)

    def to_json(self):
        return {"Coproduct": [self.left.to_json(), self.right.to_json()]}


@dataclass(frozen=True)
class Pushout(Space):
    """Formal homotopy pushout of left <- base -> right."""

    left: Space
    right: Space
    base: Space

    def children(self):
        return (self.left, self.right, self.base)

    def to_json(self):
        return {"Pushout": [self.left.to_json(), self.right.to_json(), self.base.to_json()]}


@dataclass(frozen=True)
class CupFiber2(Space):
    """Fiber X_{2,m} of the cup-power map B^2 C_p -> B^{2m} C_p.

    ``p`` defaults to the working prime of the computation.
    """

    m: int
    p: Optional[int] = None

    def __post_init__(self):
        if self.m < 1:
            raise ValueError("m must be >= 1")

    @property
    def degree(self):
        return 2 * self.m - 1

    def prime(self, p: int) -> int:
        return p if self.p is None else self.p

    def to_json(self):
        body = {"m": self.m}
        if self.p is not None:
            body["p"] = self.p
        return {"CupFiber2": body}


# parsing


def parse_space(obj) -> Space:
    """Build a Space from its JSON form (dict, or a JSON string)."""
    if isinstance(obj, Space):
        return obj
    if isinstance(obj, str):
        s = obj.strip()
        if s in ("Point", "Empty"):
            return Point() if s == "Point" else Empty()
        return parse_space(json.loads(s))
    if not isinstance(obj, dict) or len(obj) != 1:
        raise ValueError(f"malformed space expression: {obj!r}")
    (tag, body), = obj.items()
    if tag == "Point":
        return Point()
    if tag == "Empty":
        return Empty()
    if tag == "EM":
        return EM(tuple(body["group"]), int(body["deg"]))
    if tag == "GEM":
        return GEM(tuple((tuple(f["group"]), int(f["deg"])) for f in body))
    if tag in ("BG", "Classifying"):
        return Classifying(groups.parse_group(body))
    if tag in ("Product", "Coproduct"):
        if len(body) < 2:
            raise ValueError(f"{tag} needs at least two factors")
        parts = [parse_space(b) for b in body]
        cls = Product if tag == "Product" else Coproduct
        return reduce(cls, parts)
    if tag == "Pushout":
        if len(body) != 3:
            raise ValueError("Pushout needs [X, Y, Z]")
        return Pushout(*(parse_space(b) for b in body))
    if tag == "CupFiber2":
        return CupFiber2(int(body["m"]), body.get("p"))
    raise ValueError(f"unknown space constructor {tag!r}")


# the chi sequence


def chi(X: Space, n: int, p: int) -> Fraction:
    """lambda_X(n) = chi_n(X) at the prime p, for n >= 0."""
    if n < 0:
        raise ValueError("chi is defined for n >= 0; use closed_form for extrapolation")
    return _chi(X, n, p)


@lru_cache(maxsize=None)
def _chi(X: Space, n: int, p: int) -> Fraction:
    if isinstance(X, Point):
        return Fraction(1)
    if isinstance(X, Empty):
        return Fraction(0)
    if isinstance(X, EM):
        return Fraction(_order(X.group) ** binomial(n, X.deg))
    if isinstance(X, GEM):
        return Fraction(math.prod(_order(g) ** binomial(n, k) for g, k in X.factors))
    if isinstance(X, Classifying):
        return Fraction(groups.chi_bg(X.group, p, n))
    if isinstance(X, Product):
        return _chi(X.left, n, p) * _chi(X.right, n, p)
    if isinstance(X, Coproduct):
        return _chi(X.left, n, p) + _chi(X.right, n, p)
    if isinstance(X, Pushout):
        return _chi(X.left, n, p) + _chi(X.right, n, p) - _chi(X.base, n, p)
    if isinstance(X, CupFiber2):
        return cup_fiber_chi(X.m, X.prime(p), n)
    raise TypeError(f"not a space: {X!r}")


def homotopy_cardinality(X: Space, p: int) -> Fraction:
    """Generalized homotopy cardinality |X|; additive on formal pushouts."""
    if isinstance(X, Point):
        return Fraction(1)
    if isinstance(X, Empty):
        return Fraction(0)
    if isinstance(X, EM):
        return Fraction(_order(X.group)) ** ((-1) ** X.deg)
    if isinstance(X, GEM):
        return math.prod((Fraction(_order(g)) ** ((-1) ** k) for g, k in X.factors), start=Fraction(1))
    if isinstance(X, Classifying):
        return groups.p_typical_cardinality(X.group, p)
    if isinstance(X, Product):
        return homotopy_cardinality(X.left, p) * homotopy_cardinality(X.right, p)
    if isinstance(X, Coproduct):
        return homotopy_cardinality(X.left, p) + homotopy_cardinality(X.right, p)
    if isinstance(X, Pushout):
        return (
            homotopy_cardinality(X.left, p)
            + homotopy_cardinality(X.right, p)
            - homotopy_cardinality(X.base, p)
        )
    if isinstance(X, CupFiber2):
        # pi_2 = pi_{2m-1} = C_p cancel for m >= 2; X_{2,1} is contractible
        return Fraction(1)
    raise TypeError(f"not a space: {X!r}")


def denominator_bound(X: Space) -> int:
    """An integer D with D * chi(X, n) integral and D * xbar(n) carrying the
    same l-adic bound; only classifying spaces contribute (their |G|)."""
    if isinstance(X, Classifying):
        return X.group.order
    if isinstance(X, Product):
        return denominator_bound(X.left) * denominator_bound(X.right)
    kids = X.children()
    return math.lcm(*(denominator_bound(c) for c in kids)) if kids else 1


def closed_form(X: Space, p: int) -> ExpoPoly:
    """lambda_X as an expolynomial in n with base p.

    Raises ValueError for an EM/GEM factor that is not a p-group."""
    if isinstance(X, Point):
        return ExpoPoly.constant(p, 1)
    if isinstance(X, Empty):
        return ExpoPoly(p)
    if isinstance(X, EM):
        a = _plog(_order(X.group), p)
        return ExpoPoly.power(p, IntValuedPoly.basis(X.deg, a))
    if isinstance(X, GEM):
        f = IntValuedPoly()
        for g, k in X.factors:
            f = f + IntValuedPoly.basis(k, _plog(_order(g), p))
        return ExpoPoly.power(p, f)
    if isinstance(X, Classifying):
        return groups.hkr_chi(X.group, p)
    if isinstance(X, Product):
        return closed_form(X.left, p) * closed_form(X.right, p)
    if isinstance(X, Coproduct):
        return closed_form(X.left, p) + closed_form(X.right, p)
    if isinstance(X, Pushout):
        return closed_form(X.left, p) + closed_form(X.right, p) - closed_form(X.base, p)
    if isinstance(X, CupFiber2):
        if X.prime(p) != p:
            raise ValueError(f"CupFiber2 at prime {X.p} inside a base-{p} expression")
        return cup_fiber_expoly(X.m, p)
    raise TypeError(f"not a space: {X!r}")


@dataclass(frozen=True)
class ChiSequence:
    """A sequence n -> value with its truncation degree and denominator bound.

    ``denominator`` is the global denominator bound D; the continuity check
    allows a slack of v_l(D).
    """

    func: Callable[[int], Fraction]
    d: int
    p: int
    denominator: int = 1
    closed: Optional[ExpoPoly] = None
    label: str = ""
    _cache: dict = field(default_factory=dict, compare=False, repr=False)

    def __call__(self, n: int) -> Fraction:
        if n not in self._cache:
            self._cache[n] = Fraction(self.func(n))
        return self._cache[n]

    def values(self, count: int) -> list[Fraction]:
        return [self(n) for n in range(count)]

    def slack(self, l: int) -> int:
        return l_valuation(self.denominator, l)

    @classmethod
    def from_values(cls, values, d: int, p: int, **kw) -> "ChiSequence":
        vals = [Fraction(v) for v in values]

        def func(n):
            if n >= len(vals):
                raise IndexError(f"sequence prefix has only {len(vals)} terms")
            return vals[n]

        return cls(func, d, p, **kw)


def chi_sequence(X: Space, p: int, with_closed_form: bool = True) -> ChiSequence:
    closed = None
    if with_closed_form:
        try:
            closed = closed_form(X, p)
        except ValueError:
            closed = None
    return ChiSequence(
        lambda n: chi(X, n, p),
        X.degree,
        p,
        denominator=denominator_bound(X),
        closed=closed,
        label=json.dumps(X.to_json(), sort_keys=True),
    )


# cup-power family


def _require_odd(p: int):
    if p == 2:
        raise ValueError("the cup-power closed forms need an odd prime p")


def _skew_coefficient(k: int, p: int) -> int:
    """p^{k(k-1)} prod_{i=1..k} (p^{2i-1} - 1)."""
    return p ** (k * (k - 1)) * math.prod(p ** (2 * i - 1) - 1 for i in range(1, k + 1))


def skew_rank_count(n: int, k: int, p: int) -> int:
    """Number of n x n skew-symmetric matrices over F_p of rank 2k."""
    _require_odd(p)
    val = _skew_coefficient(k, p) * qbinomial(n, 2 * k, p)
    assert val.denominator == 1
    return int(val)


def skew_rank_brute(n: int, k: int, p: int, budget: int | None = None) -> int:
    """Oracle for :func:`skew_rank_count` by Gaussian elimination over all matrices."""
    if budget is None:
        budget = groups.default_budget()
    hist = kernels.skew_rank_histogram(n, p, budget)
    return hist[2 * k] if 2 * k < len(hist) else 0


def s_count_brute(d: int, m: int, n: int, p: int, budget: int | None = None) -> int:
    """#{omega in Lambda^d F_p^n : omega^m = 0}, by explicit wedge powers."""
    if budget is None:
        budget = groups.default_budget()
    return int(kernels.wedge_zero_count(d, m, n, p, budget))


def cup_fiber_chi(m: int, p: int, n: int) -> Fraction:
    """lambda_{X_{2,m}}(n) from the skew-rank closed form; also valid at n = -1."""
    _require_odd(p)
    s = sum(
        (_skew_coefficient(k, p) * qbinomial(n + 1, 2 * k, p) for k in range(m)),
        Fraction(0),
    )
    val = Fraction(p) ** (binomial(n, 2 * m - 1) - n) * s
    if n >= 0 and val.denominator != 1:
        raise ArithmeticError(f"non-integral cup-fiber value {val} at n={n}")
    return val


def cup_fiber_from_brute(m: int, p: int, n: int, budget: int | None = None) -> Fraction:
    """lambda(n) = |L^{n+1} X_{2,m}| = p^{C(n,2m-1) - n} s_{2,m}(n+1), with s by brute force."""
    s = s_count_brute(2, m, n + 1, p, budget)
    return Fraction(p) ** (binomial(n, 2 * m - 1) - n) * s


def cup_fiber_expoly(m: int, p: int) -> ExpoPoly:
    """The cup-fiber sequence as an expolynomial: each q-binomial
    [n+1, 2k]_p is a polynomial in y = p^n."""
    _require_odd(p)
    total = ExpoPoly(p)
    for k in range(m):
        # prod_{j=1..2k} (1 - p^{2-j} y) as coefficients in y
        poly = [Fraction(1)]
        for j in range(1, 2 * k + 1):
            c = -Fraction(p) ** (2 - j)
            new = poly + [Fraction(0)]
            for i, a in enumerate(poly):
                new[i + 1] += c * a
            poly = new
        den = math.prod(1 - p**j for j in range(1, 2 * k + 1))
        scale = Fraction(_skew_coefficient(k, p), den)
        total = total + ExpoPoly(
            p, tuple((scale * a, IntValuedPoly((0, i))) for i, a in enumerate(poly))
        )
    prefactor = ExpoPoly.power(p, IntValuedPoly.basis(2 * m - 1) - IntValuedPoly.basis(1))
    return total * prefactor


def ofun(pi_orders: dict[int, int] | list[tuple[int, int]], n: int) -> Fraction:
    """|L_old^n X| = prod_{m>=1} |pi_m X|^{-C(n-1, m-1)} for connected X.

    ``pi_orders`` maps degree m >= 1 to |pi_m X|.
    """
    items = pi_orders.items() if isinstance(pi_orders, dict) else pi_orders
    out = Fraction(1)
    for m, size in items:
        if m < 1:
            raise ValueError("ofun needs connected data (degrees >= 1)")
        out *= Fraction(size) ** (-binomial(n - 1, m - 1))
    return out


# validation


@dataclass
class ValidationReport:
    accepted: bool
    witnesses: list[str] = field(default_factory=list)
    flags: list[str] = field(default_factory=list)

    def to_json(self):
        return {"accepted": self.accepted, "witnesses": self.witnesses, "flags": self.flags}


def validate_p_small(X: Space, p: int) -> ValidationReport:
    """Accept iff every homotopy group in the tree is a p-group.

    Classifying spaces of non-p-groups are accepted with a flag: their
    chi-sequences are still defined (p-power-order tuples) but lie outside
    the p-space setting.
    """
    report = ValidationReport(True)

    def visit(Y: Space):
        if isinstance(Y, EM):
            factors = [(Y.group, Y.deg)]
        elif isinstance(Y, GEM):
            factors = list(Y.factors)
        else:
            factors = []
        for grp, k in factors:
            for a in grp:
                if not _is_p_power(a, p):
                    report.accepted = False
                    report.witnesses.append(f"C{a} in degree {k}")
        if isinstance(Y, Classifying) and not groups.is_p_group(Y.group, p):
            report.flags.append(
                f"extended scope: B{Y.group.name or '?'} of order {Y.group.order} is not a {p}-group"
            )
        if isinstance(Y, CupFiber2):
            q = Y.prime(p)
            if q != p:
                report.accepted = False
                report.witnesses.append(f"CupFiber2 at prime {q}")
            elif q == 2:
                report.flags.append("CupFiber2 closed form needs an odd prime")
        for c in Y.children():
            visit(c)

    visit(X)
    return report
