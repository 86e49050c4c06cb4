"""Closed-form Hodge integral values and the Bernoulli identities behind them.

Nothing here calls the intersection engines; these formulas are the other
side of every engine comparison.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import List, Sequence

from .arith import bernoulli, double_factorial, multinomial
from .series import Series, series_log, sinc_half_inverse

__all__ = [
    "b_closed",
    "c_closed_series",
    "C_closed",
    "lambda3_closed",
    "lamg_closed",
    "lamgg_closed",
    "ihop_check",
    "IdentityCheck",
    "bernoulli_identity_checks",
]


def _absB(m: int) -> Fraction:
    return abs(bernoulli(m))


def b_closed(g: int) -> Fraction:
    """b_g = (2^{2g-1}-1)/2^{2g-1} * |B_{2g}|/(2g)!, with b_0 = 1."""
    if g < 0:
        raise ValueError("genus must be >= 0")
    if g == 0:
        return Fraction(1)
    w = Fraction(2 ** (2 * g - 1) - 1, 2 ** (2 * g - 1))
    return w * _absB(2 * g) / factorial(2 * g)


def c_closed_series(N: int) -> Series:
    """sum c_g t^{2g} = f0 * log f0 with f0 = (t/2)/sin(t/2), through t^N."""
    if N < 2:
        raise ValueError("order must be >= 2")
    f0 = sinc_half_inverse(N)
    return f0 * series_log(f0)


def C_closed(g: int, d: int) -> Fraction:
    """Degree-d multiple cover contribution in genus g."""
    if d <= 0:
        raise ValueError("degree must be positive")
    if g < 0:
        raise ValueError("genus must be >= 0")
    if g == 0:
        return Fraction(1, d ** 3)
    if g == 1:
        return Fraction(1, 12 * d)
    return _absB(2 * g) * Fraction(d) ** (2 * g - 3) / (2 * g * factorial(2 * g - 2))


def C_closed_euler(g: int, d: int) -> Fraction:
    """Same quantity for g >= 2 written as |chi(M_g)| d^{2g-3}/(2g-3)!."""
    if g < 2:
        raise ValueError("Euler characteristic form needs g >= 2")
    chi = bernoulli(2 * g) / (2 * g * (2 * g - 2))
    return abs(chi) * Fraction(d) ** (2 * g - 3) / factorial(2 * g - 3)


def lambda3_closed(g: int) -> Fraction:
    """int_{M_g} lambda_{g-1}^3 = |B_2g|/2g * |B_{2g-2}|/(2g-2) / (2g-2)!."""
    if g < 2:
        raise ValueError("lambda_{g-1}^3 formula needs g >= 2")
    return _absB(2 * g) / (2 * g) * _absB(2 * g - 2) / (2 * g - 2) / factorial(2 * g - 2)


def lamg_closed(g: int, ks: Sequence[int]) -> Fraction:
    """int psi^{k_1}..psi^{k_n} lambda_g = multinomial(2g-3+n; k) * b_g."""
    n = len(ks)
    if any(k < 0 for k in ks):
        raise ValueError("exponents must be >= 0")
    top = 2 * g - 3 + n
    if sum(ks) != top or top < 0:
        return Fraction(0)
    return multinomial(top, ks) * b_closed(g)


def lamgg_closed(g: int, ks: Sequence[int], base: Fraction) -> Fraction:
    """n-point lambda_g lambda_{g-1} integral scaled from the 1-point ``base``."""
    if g < 2:
        raise ValueError("needs g >= 2")
    if any(k <= 0 for k in ks):
        raise ValueError("all exponents must be positive")
    n = len(ks)
    if sum(ks) != g - 2 + n:
        return Fraction(0)
    num = factorial(2 * g + n - 3) * double_factorial(2 * g - 1)
    den = factorial(2 * g - 1)
    for k in ks:
        den *= double_factorial(2 * k - 1)
    return num / den * base


def _harmonic(m: int) -> Fraction:
    return sum((Fraction(1, k) for k in range(1, m + 1)), Fraction(0))


def ihop_check(g: int):
    """(c_g from the series, the Virasoro-predicted expression in b's)."""
    if g < 1:
        raise ValueError("g must be >= 1")
    lhs = c_closed_series(2 * g)[2 * g]
    rhs = _harmonic(2 * g - 1) * b_closed(g)
    corr = Fraction(0)
    for g1 in range(1, g):
        g2 = g - g1
        corr += Fraction(factorial(2 * g1 - 1) * factorial(2 * g2 - 1), factorial(2 * g - 1)) * b_closed(g1) * b_closed(g2)
    return lhs, rhs - corr / 2


@dataclass(frozen=True)
class IdentityCheck:
    check_id: str
    lhs: Fraction
    rhs: Fraction

    @property
    def passed(self) -> bool:
        return self.lhs == self.rhs


def _beta(g: int) -> Fraction:
    return (2 - 2 ** (2 * g)) * bernoulli(2 * g) / factorial(2 * g)


def bernoulli_identity_checks(g: int) -> List[IdentityCheck]:
    """Exact per-genus checks of the Bernoulli identities behind the closed forms.

    Failures are reported, not raised.
    """
    if g < 1:
        raise ValueError("g must be >= 1")
    out = []
    B2g = bernoulli(2 * g)

    conv = sum((b_closed(h) * b_closed(g - h) for h in range(g + 1)), Fraction(0))
    out.append(IdentityCheck(f"b-convolution/g={g}", conv, _absB(2 * g) / (2 * g) / factorial(2 * g - 2)))

    lhs = 2 * _beta(g) + sum((_beta(h) * _beta(g - h) for h in range(1, g)), Fraction(0))
    rhs = -Fraction(2 ** (2 * g), 2 * g) * B2g / factorial(2 * g - 2)
    out.append(IdentityCheck(f"beta-convolution/g={g}", lhs, rhs))

    f0 = sinc_half_inverse(2 * g)
    out.append(IdentityCheck(f"log-f0/k={g}", series_log(f0)[2 * g], _absB(2 * g) / (2 * g) / factorial(2 * g)))
    # t f'/f
    df = Series(2 * g, tuple([Fraction(0)] + [n * f0[n] for n in range(1, 2 * g + 1)]))
    out.append(IdentityCheck(f"log-derivative-f0/k={g}", (df / f0)[2 * g], _absB(2 * g) / factorial(2 * g)))

    # harmonic identity written in the b_g normalization
    w = lambda h: abs(Fraction(2 ** (2 * h) - 2, 2 ** (2 * h))) if h else Fraction(1)
    lhs = _harmonic(2 * g - 1) * b_closed(g)
    rhs = sum(
        (w(k) * _absB(2 * k) / factorial(2 * k) * _absB(2 * g - 2 * k) / (2 * g - 2 * k) / factorial(2 * g - 2 * k)
         for k in range(g)),
        Fraction(0),
    )
    for g1 in range(1, g):
        g2 = g - g1
        rhs += (Fraction(1, 2) / factorial(2 * g - 1) * w(g1) * w(g2)
                * _absB(2 * g1) / (2 * g1) * _absB(2 * g2) / (2 * g2))
    out.append(IdentityCheck(f"harmonic-b/g={g}", lhs, rhs))

    # the same identity in the beta normalization: a(g) + b(g) = c(g)
    a = _harmonic(2 * g - 1) * _beta(g)
    b = sum((Fraction(2 ** (2 * n)) * bernoulli(2 * n) / (2 * n * factorial(2 * n)) * _beta(g - n)
             for n in range(1, g + 1)), Fraction(0))
    c = sum((Fraction(factorial(2 * g1 - 1) * factorial(2 * (g - g1) - 1), factorial(2 * g - 1))
             * _beta(g1) * _beta(g - g1) for g1 in range(1, g)), Fraction(0)) / 2
    out.append(IdentityCheck(f"harmonic-beta/g={g}", a + b, c))
    return out
