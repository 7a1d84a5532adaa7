"""l-adic continuity certificates and extrapolation to n = -1.

Everything is exact: a sequence is certified by computing its Mahler
coefficients xbar(n) as rationals and checking l^floor(n/d) | xbar(n)
through exact valuations.  Extrapolation to -1 uses the Mahler series
sum_k C(-1, k) xbar(k) = sum_k (-1)^k xbar(k), whose tail after index N
has valuation at least floor((N+1)/d).
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence, Union

from .arith import INF, format_rational, inverse_binomial_transform, is_prime, l_valuation
from .spaces import ChiSequence, Space, chi_sequence, homotopy_cardinality

Valuation = Union[int, float]


def _vjson(v: Valuation):
    return "inf" if v == INF else v


def required_valuation(n: int, d: int, slack: int = 0) -> int:
    """floor(n/d) - slack; degree 0 (finite sets) is treated as degree 1."""
    return n // max(d, 1) - slack


@dataclass
class ContinuityCertificate:
    l: int
    d: int
    checked_up_to: int
    valuations: list[tuple[int, Valuation]]
    slack: int = 0
    passed: bool = True
    first_violation: Optional[int] = None
    coefficients: list[Fraction] = field(default_factory=list, repr=False)

    @property
    def verdict(self) -> str:
        return "pass" if self.passed else "fail"

    def to_json(self) -> dict:
        return {
            "l": self.l,
            "d": self.d,
            "N": self.checked_up_to,
            "slack": self.slack,
            "verdict": self.verdict,
            "first_violation": self.first_violation,
            "mahler": [format_rational(c) for c in self.coefficients],
            "valuations": [_vjson(v) for _, v in self.valuations],
        }


def _check_l(p: int, l: int):
    if not is_prime(l):
        raise ValueError(f"l = {l} is not prime")
    if (p - 1) % l:
        warnings.warn(f"l = {l} does not divide p - 1 = {p - 1}; the bound is not guaranteed")


def certify_values(values: Sequence[Fraction], l: int, d: int, slack: int = 0) -> ContinuityCertificate:
    """Check v_l(xbar(n)) >= floor(n/d) - slack for the given prefix."""
    xbar = inverse_binomial_transform(values)
    vals = [(n, l_valuation(c, l)) for n, c in enumerate(xbar)]
    cert = ContinuityCertificate(l, d, len(values) - 1, vals, slack, coefficients=xbar)
    for n, v in vals:
        if v < required_valuation(n, d, slack):
            cert.passed = False
            cert.first_violation = n
            break
    return cert


def certify_continuity(seq: ChiSequence, l: int, N: int = 12) -> ContinuityCertificate:
    _check_l(seq.p, l)
    return certify_values(seq.values(N + 1), l, seq.d, seq.slack(l))


@dataclass
class ExtrapolationReport:
    l: int
    d: int
    partials: list[Fraction]
    guaranteed: list[int]
    target: Optional[Fraction] = None
    target_valuations: list[Valuation] = field(default_factory=list)
    certificate: Optional[ContinuityCertificate] = None

    @property
    def passed(self) -> bool:
        if self.certificate is not None and not self.certificate.passed:
            return False
        return all(v >= g for v, g in zip(self.target_valuations, self.guaranteed))

    @property
    def verdict(self) -> str:
        return "pass" if self.passed else "fail"

    def to_json(self) -> dict:
        out = {
            "l": self.l,
            "d": self.d,
            "verdict": self.verdict,
            "partials": [format_rational(s) for s in self.partials],
            "guaranteed": self.guaranteed,
        }
        if self.target is not None:
            out["target"] = format_rational(self.target)
            out["valuations"] = [_vjson(v) for v in self.target_valuations]
        if self.certificate is not None:
            out["certificate"] = self.certificate.to_json()
        return out


def mahler_partial_sums(xbar: Sequence[Fraction]) -> list[Fraction]:
    """S_N = sum_{k<=N} (-1)^k xbar(k), the Mahler series at a = -1."""
    out, s = [], Fraction(0)
    for k, c in enumerate(xbar):
        s += c if k % 2 == 0 else -c
        out.append(s)
    return out


def extrapolate_values(
    values: Sequence[Fraction], l: int, d: int, target=None, slack: int = 0
) -> ExtrapolationReport:
    cert = certify_values(values, l, d, slack)
    partials = mahler_partial_sums(cert.coefficients)
    guaranteed = [required_valuation(n + 1, d, slack) for n in range(len(partials))]
    report = ExtrapolationReport(l, d, partials, guaranteed, certificate=cert)
    if target is not None:
        report.target = Fraction(target)
        report.target_valuations = [l_valuation(s - report.target, l) for s in partials]
    return report


def mahler_extrapolate(seq: ChiSequence, l: int, N: int = 12, target=None) -> ExtrapolationReport:
    _check_l(seq.p, l)
    return extrapolate_values(seq.values(N + 1), l, seq.d, target, seq.slack(l))


@dataclass
class ShiftReport:
    """Consistency of lambda_X(n) = Lambda_X(n+1) with Lambda_X(0) = |X|."""

    cardinality: Fraction
    lam_certificate: ContinuityCertificate
    big_lambda_certificate: ContinuityCertificate
    extrapolation: ExtrapolationReport
    tail_identity: bool

    @property
    def passed(self) -> bool:
        return (
            self.lam_certificate.passed
            and self.big_lambda_certificate.passed
            and self.extrapolation.passed
            and self.tail_identity
        )

    def to_json(self):
        return {
            "cardinality": format_rational(self.cardinality),
            "verdict": "pass" if self.passed else "fail",
            "lambda": self.lam_certificate.to_json(),
            "Lambda": self.big_lambda_certificate.to_json(),
            "extrapolation": self.extrapolation.to_json(),
            "tail_identity": self.tail_identity,
        }


def lambda_shift_check(X: Space, p: int, l: int, N: int = 12) -> ShiftReport:
    """Extrapolate chi(X, .) to -1 against |X| and certify the shifted
    sequence Lambda = (|X|, chi_0, chi_1, ...) directly.

    Since S_N - |X| = (-1)^N Lambdabar(N+1) exactly, the divisibility of
    Lambdabar is what drives convergence; that identity is checked too.
    """
    seq = chi_sequence(X, p, with_closed_form=False)
    _check_l(p, l)
    card = homotopy_cardinality(X, p)
    lam = seq.values(N + 1)
    slack = seq.slack(l)
    ext = extrapolate_values(lam, l, seq.d, card, slack)
    big = certify_values([card] + lam, l, seq.d, slack)
    tail = all(
        ext.partials[n] - card == (-1) ** n * big.coefficients[n + 1] for n in range(N + 1)
    )
    return ShiftReport(card, ext.certificate, big, ext, tail)


def extrapolate_space(X: Space, p: int, l: int, N: int = 12) -> ExtrapolationReport:
    """Certificate plus extrapolation of chi(X, .) with target |X|."""
    seq = chi_sequence(X, p, with_closed_form=False)
    return mahler_extrapolate(seq, l, N, homotopy_cardinality(X, p))
