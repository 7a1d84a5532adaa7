"""The acceptance suite: nine exact checks with their runtime limits.

Shared by ``mecard verify-all`` and ``tests/test_acceptance.py``.  Every
check is exact; a criterion passes only if all of its checks hold and it
finishes inside its time limit.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Optional

from . import groups
from .arith import binomial, binomial_transform, inverse_binomial_transform, l_valuation
from .mahler import certify_continuity, mahler_extrapolate, required_valuation
from .resolutions import (
    bar_sequence,
    iterated_bar_sequence,
    resolution_convergence,
    simplicial_group_sequences,
    skeleton_cardinalities,
)
from .series import chi_symmetric_genfun, sym_cardinality_product, sym_cardinality_series
from .spaces import (
    EM,
    GEM,
    Classifying,
    Coproduct,
    CupFiber2,
    Point,
    Product,
    Pushout,
    Space,
    chi,
    chi_sequence,
    closed_form,
    cup_fiber_chi,
    cup_fiber_from_brute,
    homotopy_cardinality,
    skew_rank_brute,
    skew_rank_count,
)

DEFAULT_SEED = 20240917

MOORE_EXAMPLES = ((1, 3), (3, 9, 3), (9, 3), (1, 1, 3))


@dataclass
class CriterionResult:
    number: int
    name: str
    limit: Optional[float]
    passed: bool = False
    elapsed: float = 0.0
    failures: list[str] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    @property
    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        limit = f"< {self.limit:g} s" if self.limit else "no limit"
        msg = f"[{status}] {self.number}. {self.name} ({self.elapsed:.2f} s, {limit})"
        if self.failures:
            msg += f": {self.failures[0]}"
        return msg

    def to_json(self, timings: bool = True) -> dict:
        out = {
            "criterion": self.number,
            "name": self.name,
            "verdict": "pass" if self.passed else "fail",
            "failures": self.failures,
            "notes": self.notes,
        }
        if timings:
            out["elapsed_s"] = round(self.elapsed, 3)
            out["limit_s"] = self.limit
        return out


class _Checker:
    def __init__(self, result: CriterionResult):
        self.result = result

    def check(self, ok: bool, msg: str):
        if not ok:
            self.result.failures.append(msg)

    def note(self, msg: str):
        self.result.notes.append(msg)


def library(p: int) -> list[tuple[str, Space]]:
    """The fixed test library of p-spaces at an odd prime p."""
    Cp = (p,)
    bc = Classifying(groups.cyclic(p))
    items = [(f"EM(C{p},{d})", EM(Cp, d)) for d in (1, 2, 3)]
    items += [
        ("GEM(C_p^2 in 1, C_p in 2)", GEM(((Cp + Cp, 1), (Cp, 2)))),
        ("GEM(C_p in 0, C_p^2 in 2, C_p in 3)", GEM(((Cp, 0), (Cp + Cp, 2), (Cp, 3)))),
        (f"EM(C{p * p},2)", EM((p * p,), 2)),
        (f"BC{p}", bc),
        ("CupFiber2(2)", CupFiber2(2)),
        ("CupFiber2(3)", CupFiber2(3)),
        ("BC_p x EM(C_p,2)", Product(bc, EM(Cp, 2))),
        ("EM(C_p,1) + EM(C_p,2)", Coproduct(EM(Cp, 1), EM(Cp, 2))),
        ("pt u_{BC_p} pt", Pushout(Point(), Point(), bc)),
        ("CupFiber2(2) x EM(C_p,1)", Product(CupFiber2(2), EM(Cp, 1))),
    ]
    if p == 3:
        items.append(("BHe3", Classifying(groups.heisenberg(3))))
    return items


def _c1(ck: _Checker):
    for p in (3, 5):
        for d in range(1, 5):
            X = EM((p,), d)
            for n in range(9):
                got = chi(X, n, p)
                want = p ** binomial(n, d)
                ck.check(got == want, f"chi(EM(C{p},{d}),{n}) = {got}, expected {want}")


def _c2(ck: _Checker):
    def formula(n):
        return Fraction(3 * 4 ** (n + 1) - 2 * 2 ** (n + 1), 8)

    for name, G in (("D4", groups.dihedral(4)), ("Q8", groups.quaternion())):
        hkr = groups.hkr_chi(G, 2)
        for n in range(7):
            want = formula(n)
            ck.check(hkr(n) == want, f"{name}: HKR({n}) = {hkr(n)} != {want}")
            brute = groups.brute_force_commuting_tuples(G, 2, n)
            ck.check(brute == want, f"{name}: brute({n}) = {brute} != {want}")
            ck.check(groups.chi_bg(G, 2, n) == want, f"{name}: chi_bg({n}) != {want}")
        ck.check(hkr.extrapolate_minus_one() == Fraction(1, 8), f"{name}: HKR(-1) != 1/8")
        ck.check(groups.p_typical_cardinality(G, 2) == Fraction(1, 8), f"{name}: |BG|_2 != 1/8")


def _c3(ck: _Checker):
    for name, X in library(3):
        cert = certify_continuity(chi_sequence(X, 3, with_closed_form=False), 2, 12)
        ck.check(cert.passed and cert.slack == 0, f"p=3 l=2 {name}: first violation {cert.first_violation}")
    for name, X in library(7):
        seq = chi_sequence(X, 7, with_closed_form=False)
        card = homotopy_cardinality(X, 7)
        for l in (2, 3):
            cert = certify_continuity(seq, l, 12)
            ck.check(cert.passed, f"p=7 l={l} {name}: first violation {cert.first_violation}")
            rep = mahler_extrapolate(seq, l, 12, card)
            ck.check(rep.passed, f"p=7 l={l} {name}: partial sums do not approach {card}")
        ck.check(closed_form(X, 7).extrapolate_minus_one() == card, f"p=7 {name}: closed form at -1 != {card}")


def _c4(ck: _Checker):
    N = 12
    for p, l in ((3, 2), (7, 2), (7, 3)):
        for name, X in library(p):
            seq = chi_sequence(X, p, with_closed_form=False)
            rep = mahler_extrapolate(seq, l, N, homotopy_cardinality(X, p))
            for n, v in enumerate(rep.target_valuations):
                need = required_valuation(n + 1, seq.d)
                ck.check(v >= need, f"p={p} l={l} {name}: v(S_{n} - |X|) = {v} < {need}")


def _c5(ck: _Checker):
    vals = [cup_fiber_chi(2, 3, n) for n in range(7)]
    for n, v in enumerate(vals):
        ck.check(v.denominator == 1 and v >= 0, f"cupFiberChi(2,3,{n}) = {v} is not a non-negative integer")
    for n, want in zip((1, 2, 3), (1, 3, 29)):
        ck.check(vals[n] == want, f"cupFiberChi(2,3,{n}) = {vals[n]} != {want}")
    for n in range(4):
        brute = cup_fiber_from_brute(2, 3, n)
        ck.check(brute == vals[n], f"brute reconstruction at n={n}: {brute} != {vals[n]}")
    ck.check(cup_fiber_chi(2, 3, -1) == 1, "closed form at n=-1 != 1")
    X = CupFiber2(2)
    ck.check(closed_form(X, 3).extrapolate_minus_one() == 1, "expolynomial at n=-1 != 1")
    rep = mahler_extrapolate(chi_sequence(X, 3, with_closed_form=False), 2, 12, 1)
    ck.check(rep.passed, "Mahler partial sums do not approach 1")


def _c6(ck: _Checker):
    for n in range(1, 5):
        for k in range(3):
            f, b = skew_rank_count(n, k, 3), skew_rank_brute(n, k, 3)
            ck.check(f == b, f"r_{k}({n}): formula {f} != enumeration {b}")
    ck.check(skew_rank_count(3, 1, 3) == 26, "r_1(3) != 26")
    ck.check(skew_rank_count(4, 2, 3) == 468, "r_2(4) != 468")


def _c7(ck: _Checker):
    M = 6
    for n in range(3):
        gf = chi_symmetric_genfun(3, n, M)
        for m in range(1, M + 1):
            want = groups.chi_bg(groups.symmetric(m), 3, n, max_order=720)
            ck.check(gf[m] == want, f"genfun n={n} m={m}: {gf[m]} != chi_bg {want}")
    series = sym_cardinality_series(3, 12)
    for m in range(13):
        ck.check(series[m] == sym_cardinality_product(3, m), f"series[{m}] != product formula")
    for m in range(1, M + 1):
        card = groups.p_typical_cardinality(groups.symmetric(m), 3, max_order=720)
        ck.check(series[m] == card, f"series[{m}] = {series[m]} != |B S_{m}|_3 = {card}")
    ck.check(series[4] == Fraction(2, 3), "series[4] != 2/3")


def _c8(ck: _Checker, rng: random.Random):
    rep = resolution_convergence(bar_sequence(3), 2, 10)
    sk = [r[3] for r in rep.rows]
    want = [Fraction(sum((-2) ** k for k in range(n + 1))) for n in range(11)]
    ck.check(sk == want, f"bar(3) skeleta {sk[:5]} != {want[:5]}")
    ck.check(rep.valuations == [n + 1 for n in range(11)], f"bar(3) valuations {rep.valuations}")
    seqs = [iterated_bar_sequence(3, 2)]
    for sizes in MOORE_EXAMPLES:
        res = simplicial_group_sequences(sizes)
        seqs += [res.bar, res.wbar]
    for seq in seqs:
        r = resolution_convergence(seq, 2, 12)
        ck.check(r.passed, f"{seq.label} (d={seq.d}) misses the bound: {r.valuations}")
        if not r.monotone_ok:
            ck.note(f"{seq.label}: valuations not monotone after burn-in {r.valuations}")
    for _ in range(200):
        xs = [Fraction(rng.randint(1, 10**6), rng.randint(1, 50)) for _ in range(rng.randint(1, 12))]
        try:
            skeleton_cardinalities(xs)
        except AssertionError as exc:
            ck.check(False, str(exc))
            break


def _c9(ck: _Checker, rng: random.Random):
    for _ in range(1000):
        xs = [Fraction(rng.randint(-10**6, 10**6), rng.randint(1, 10**3)) for _ in range(rng.randint(1, 15))]
        ck.check(binomial_transform(inverse_binomial_transform(xs)) == xs, f"round trip fails on {xs}")
        ck.check(inverse_binomial_transform(binomial_transform(xs)) == xs, f"reverse round trip fails on {xs}")
        deg = rng.randint(0, 6)
        coeffs = [rng.randint(-50, 50) for _ in range(deg + 1)]
        vals = [sum(c * n**i for i, c in enumerate(coeffs)) for n in range(deg + 6)]
        xbar = inverse_binomial_transform(vals)
        ck.check(all(c == 0 for c in xbar[deg + 1 :]), f"degree-{deg} polynomial {coeffs} has nonzero xbar tail")
        if len(ck.result.failures) > 5:
            break
    for _ in range(200):
        l = rng.choice((2, 3, 5, 7))
        a, b = rng.randint(-10**6, 10**6), rng.randint(1, 10**6)
        x, y = Fraction(a, b), Fraction(rng.randint(1, 1000), rng.randint(1, 1000))
        if x:
            ck.check(l_valuation(x * y, l) == l_valuation(x, l) + l_valuation(y, l), f"v_{l} not additive at {x}, {y}")


CRITERIA: list[tuple[int, str, Optional[float], Callable]] = [
    (1, "EM spaces: chi = p^C(n,d)", 1.0, _c1),
    (2, "D4/Q8: HKR and brute force, |BG|_2 = 1/8", 10.0, _c2),
    (3, "continuity certificates (p=3 l=2, p=7 l=2,3)", 30.0, _c3),
    (4, "extrapolation valuations v(S_N - |X|)", None, _c4),
    (5, "cup-power fiber X_{2,2}", 60.0, _c5),
    (6, "skew-symmetric rank counts", None, _c6),
    (7, "symmetric groups at p=3", 60.0, _c7),
    (8, "resolutions and skeleta", 5.0, _c8),
    (9, "transform round trip and polynomial vanishing", None, _c9),
]


def run_criterion(number: int, seed: int = DEFAULT_SEED) -> CriterionResult:
    num, name, limit, fn = next(c for c in CRITERIA if c[0] == number)
    res = CriterionResult(num, name, limit)
    ck = _Checker(res)
    t0 = time.perf_counter()
    try:
        if num in (8, 9):
            fn(ck, random.Random(seed))
        else:
            fn(ck)
    except Exception as exc:  # a crash is a failure, recorded verbatim
        res.failures.append(f"{type(exc).__name__}: {exc}")
    res.elapsed = time.perf_counter() - t0
    if limit is not None and res.elapsed >= limit:
        res.failures.append(f"runtime {res.elapsed:.2f} s exceeds {limit:g} s")
    res.passed = not res.failures
    return res


def run_all(seed: int = DEFAULT_SEED, only: Optional[list[int]] = None) -> list[CriterionResult]:
    return [run_criterion(c[0], seed) for c in CRITERIA if only is None or c[0] in only]
