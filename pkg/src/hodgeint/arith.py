"""Exact rational scalars and the small special functions built on them.

All values are :class:`fractions.Fraction`; ``str(x)`` already renders the
``"num/den"`` / ``"n"`` text form used everywhere else in the package.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import comb, factorial
from typing import Iterable, List, Sequence

__all__ = [
    "Rat",
    "M_MAX",
    "CapacityError",
    "IntegrityError",
    "bernoulli",
    "bernoulli_table",
    "multinomial",
    "double_factorial",
    "rat",
    "rat_str",
]

Rat = Fraction

#: largest Bernoulli index served by :func:`bernoulli`
M_MAX = 64


class CapacityError(ValueError):
    """Requested index exceeds a configured table size."""


class IntegrityError(RuntimeError):
    """Two independent computations of the same quantity disagree."""


def rat(x: int | str | Fraction) -> Fraction:
    """Parse ``"7/5760"``, ``"3"`` or an int into a Fraction."""
    return Fraction(x)


def rat_str(x: Fraction | int) -> str:
    return str(Fraction(x))


def _bernoulli_akiyama_tanigawa(n: int) -> List[Fraction]:
    # The plain algorithm yields B_1 = +1/2; the sign is fixed by the caller.
    a = [Fraction(0)] * (n + 1)
    out = []
    for m in range(n + 1):
        a[m] = Fraction(1, m + 1)
        for j in range(m, 0, -1):
            a[j - 1] = j * (a[j - 1] - a[j])
        out.append(a[0])
    if n >= 1:
        out[1] = -out[1]
    return out


def _bernoulli_series_inversion(n: int) -> List[Fraction]:
    # t/(e^t - 1) = 1 / sum_{k>=0} t^k/(k+1)!, inverted term by term,
    # then rescaled by m! to get B_m.
    d = [Fraction(1, factorial(k + 1)) for k in range(n + 1)]
    b = [Fraction(0)] * (n + 1)
    b[0] = Fraction(1)
    for m in range(1, n + 1):
        b[m] = -sum((d[k] * b[m - k] for k in range(1, m + 1)), Fraction(0))
    return [b[m] * factorial(m) for m in range(n + 1)]


@lru_cache(maxsize=None)
def bernoulli_table(m_max: int = M_MAX) -> tuple:
    """B_0..B_{m_max} with ``t/(e^t - 1) = sum B_m t^m/m!`` (so B_1 = -1/2).

    Built twice, by Akiyama-Tanigawa and by inverting the exponential
    series; a disagreement raises :class:`IntegrityError`.
    """
    at = _bernoulli_akiyama_tanigawa(m_max)
    inv = _bernoulli_series_inversion(m_max)
    if at != inv:
        bad = next(m for m in range(m_max + 1) if at[m] != inv[m])
        raise IntegrityError(f"Bernoulli tables disagree at m={bad}: {at[bad]} vs {inv[bad]}")
    return tuple(at)


def bernoulli(m: int, m_max: int = M_MAX) -> Fraction:
    """Return B_m (B_1 = -1/2 convention)."""
    if m < 0:
        raise ValueError(f"Bernoulli index must be >= 0, got {m}")
    if m > m_max:
        raise CapacityError(f"Bernoulli index {m} exceeds M_MAX={m_max}")
    return bernoulli_table(m_max)[m]


def multinomial(n: int, parts: Sequence[int]) -> Fraction:
    """``n! / (prod parts_i! * (n - sum parts)!)``."""
    if n < 0 or any(p < 0 for p in parts):
        raise ValueError("multinomial arguments must be nonnegative")
    rest = n - sum(parts)
    if rest < 0:
        raise ValueError(f"parts {list(parts)} sum to more than {n}")
    out = 1
    for p in parts:
        out *= comb(n, p)
        n -= p
    return Fraction(out)


def double_factorial(m: int) -> Fraction:
    """m!! for odd m >= -1, with (-1)!! = 1."""
    if m < -1 or m % 2 == 0:
        raise ValueError(f"double_factorial needs an odd integer >= -1, got {m}")
    out = 1
    while m > 1:
        out *= m
        m -= 2
    return Fraction(out)


def prod(xs: Iterable[Fraction | int]) -> Fraction:
    out = Fraction(1)
    for x in xs:
        out *= x
    return out
