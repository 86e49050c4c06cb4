"""Truncated power series in ``t`` over Q, and over Q[k].

A :class:`Series` carries its truncation order explicitly; arithmetic between
series of different orders raises instead of silently truncating.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Callable, Iterable, Sequence

from .arith import IntegrityError, bernoulli

__all__ = [
    "SeriesError",
    "Series",
    "KPoly",
    "KSeries",
    "series_mul",
    "series_inverse",
    "series_log",
    "series_exp",
    "series_pow_kplus1",
    "sinc_half_inverse",
    "sinc_half",
]

_ZERO = Fraction(0)
_ONE = Fraction(1)


class SeriesError(ValueError):
    """Order mismatch or a violated precondition (constant term etc.)."""


@dataclass(frozen=True)
class Series:
    """Coefficients of t^0..t^order."""

    order: int
    coeffs: tuple

    def __post_init__(self):
        if self.order < 0:
            raise SeriesError("order must be >= 0")
        c = tuple(Fraction(x) for x in self.coeffs)
        if len(c) != self.order + 1:
            raise SeriesError(f"expected {self.order + 1} coefficients, got {len(c)}")
        object.__setattr__(self, "coeffs", c)

    @classmethod
    def from_list(cls, coeffs: Iterable, order: int | None = None) -> "Series":
        c = [Fraction(x) for x in coeffs]
        if order is None:
            order = len(c) - 1
        c = (c + [_ZERO] * (order + 1))[: order + 1]
        return cls(order, tuple(c))

    @classmethod
    def constant(cls, value, order: int) -> "Series":
        return cls.from_list([value], order)

    @classmethod
    def from_function(cls, f: Callable[[int], Fraction], order: int) -> "Series":
        return cls(order, tuple(f(n) for n in range(order + 1)))

    def __getitem__(self, n: int) -> Fraction:
        return self.coeffs[n]

    def __len__(self) -> int:
        return self.order + 1

    def _check(self, other: "Series"):
        if not isinstance(other, Series):
            return NotImplemented
        if other.order != self.order:
            raise SeriesError(f"order mismatch: {self.order} vs {other.order}")
        return other

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Series.constant(other, self.order)
        self._check(other)
        return Series(self.order, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return Series(self.order, tuple(-a for a in self.coeffs))

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return Series(self.order, tuple(a * other for a in self.coeffs))
        return series_mul(self, other)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * (_ONE / Fraction(other))
        return series_mul(self, series_inverse(other))

    def __pow__(self, e: int):
        if e < 0:
            return series_inverse(self) ** (-e)
        out = Series.constant(1, self.order)
        base = self
        while e:
            if e & 1:
                out = out * base
            e >>= 1
            if e:
                base = base * base
        return out

    def truncate(self, order: int) -> "Series":
        if order > self.order:
            raise SeriesError(f"cannot extend order {self.order} to {order}")
        return Series(order, self.coeffs[: order + 1])

    def derivative(self) -> list:
        """Coefficients of d/dt, one shorter (order drops by one)."""
        return [n * self.coeffs[n] for n in range(1, self.order + 1)]

    def at_it(self) -> "Series":
        """Substitute t -> i t. Only defined for even series."""
        if any(self.coeffs[n] for n in range(1, self.order + 1, 2)):
            raise SeriesError("t -> it keeps coefficients rational only for even series")
        return Series(self.order, tuple(c if n % 4 == 0 else -c for n, c in enumerate(self.coeffs)))

    def to_json(self) -> str:
        return json.dumps({"order": self.order, "coeffs": [str(c) for c in self.coeffs]})

    @classmethod
    def from_json(cls, text: str) -> "Series":
        d = json.loads(text)
        return cls(d["order"], tuple(Fraction(c) for c in d["coeffs"]))

    def __repr__(self):
        terms = [f"{c}*t^{n}" for n, c in enumerate(self.coeffs) if c]
        return f"Series({' + '.join(terms) or '0'} + O(t^{self.order + 1}))"


def series_mul(a: Series, b: Series) -> Series:
    if a.order != b.order:
        raise SeriesError(f"order mismatch: {a.order} vs {b.order}")
    N = a.order
    out = [_ZERO] * (N + 1)
    for i, ai in enumerate(a.coeffs):
        if ai:
            for j in range(N - i + 1):
                out[i + j] += ai * b.coeffs[j]
    return Series(N, tuple(out))


def series_inverse(a: Series) -> Series:
    a0 = a.coeffs[0]
    if a0 == 0:
        raise SeriesError("series with zero constant term is not invertible")
    N = a.order
    b = [_ZERO] * (N + 1)
    b[0] = 1 / a0
    for m in range(1, N + 1):
        s = sum((a.coeffs[k] * b[m - k] for k in range(1, m + 1)), _ZERO)
        b[m] = -s / a0
    return Series(N, tuple(b))


def series_log(a: Series) -> Series:
    """log a for a(0) = 1, via t*L' = t*a'/a."""
    if a.coeffs[0] != 1:
        raise SeriesError("log needs constant term 1")
    N = a.order
    # n a_n = sum_{j=1}^{n} j L_j a_{n-j}
    L = [_ZERO] * (N + 1)
    for n in range(1, N + 1):
        s = n * a.coeffs[n] - sum((j * L[j] * a.coeffs[n - j] for j in range(1, n)), _ZERO)
        L[n] = s / n
    return Series(N, tuple(L))


def series_exp(a: Series) -> Series:
    """exp a for a(0) = 0, via E' = a' E."""
    if a.coeffs[0] != 0:
        raise SeriesError("exp needs constant term 0")
    N = a.order
    E = [_ZERO] * (N + 1)
    E[0] = _ONE
    for n in range(1, N + 1):
        E[n] = sum((j * a.coeffs[j] * E[n - j] for j in range(1, n + 1)), _ZERO) / n
    return Series(N, tuple(E))


class KPoly:
    """Polynomial in k with rational coefficients, stored trimmed."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Sequence = ()):
        c = [Fraction(x) for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.coeffs = tuple(c)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = KPoly([other])
        return isinstance(other, KPoly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = KPoly([other])
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (_ZERO,) * (n - len(self.coeffs))
        b = other.coeffs + (_ZERO,) * (n - len(other.coeffs))
        return KPoly([x + y for x, y in zip(a, b)])

    __radd__ = __add__

    def __neg__(self):
        return KPoly([-x for x in self.coeffs])

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return KPoly([x * other for x in self.coeffs])
        if not self.coeffs or not other.coeffs:
            return KPoly()
        out = [_ZERO] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, x in enumerate(self.coeffs):
            if x:
                for j, y in enumerate(other.coeffs):
                    out[i + j] += x * y
        return KPoly(out)

    __rmul__ = __mul__

    def __call__(self, k) -> Fraction:
        out = _ZERO
        for c in reversed(self.coeffs):
            out = out * k + c
        return out

    def to_json(self) -> list:
        return [str(c) for c in self.coeffs]

    def __repr__(self):
        return f"KPoly({[str(c) for c in self.coeffs]})"


@dataclass(frozen=True)
class KSeries:
    """Truncated series in t whose coefficients are :class:`KPoly`."""

    order: int
    coeffs: tuple

    def __getitem__(self, n: int) -> KPoly:
        return self.coeffs[n]

    def evaluate(self, k) -> Series:
        return Series(self.order, tuple(c(k) for c in self.coeffs))

    def to_json(self) -> str:
        return json.dumps({"order": self.order, "coeffs": [c.to_json() for c in self.coeffs]})


def series_pow_kplus1(a: Series) -> KSeries:
    """a^(k+1) = exp((k+1) log a) as a series in t over Q[k]."""
    if a.coeffs[0] != 1:
        raise SeriesError("series_pow_kplus1 needs constant term 1")
    N = a.order
    log_a = series_log(a)
    k_plus_1 = KPoly([1, 1])
    L = [k_plus_1 * c for c in log_a.coeffs]
    E = [KPoly()] * (N + 1)
    E[0] = KPoly([1])
    for n in range(1, N + 1):
        acc = KPoly()
        for j in range(1, n + 1):
            if L[j].coeffs:
                acc = acc + L[j] * E[n - j] * j
        E[n] = acc * Fraction(1, n)
    return KSeries(N, tuple(E))


def sinc_half(N: int) -> Series:
    """sin(t/2)/(t/2) from the sine Taylor series."""
    return Series.from_function(
        lambda n: Fraction((-1) ** (n // 2), 4 ** (n // 2) * factorial(n + 1)) if n % 2 == 0 else _ZERO,
        N,
    )


def _sinc_half_inverse_bernoulli(N: int) -> Series:
    def coeff(n):
        if n == 0:
            return _ONE
        if n % 2:
            return _ZERO
        g = n // 2
        w = Fraction(2 ** (2 * g - 1) - 1, 2 ** (2 * g - 1))
        return w * abs(bernoulli(2 * g)) / factorial(2 * g)

    return Series.from_function(coeff, N)


def sinc_half_inverse(N: int) -> Series:
    """(t/2)/sin(t/2) through t^N, cross-checked two ways.

    The Bernoulli closed form is compared against inverting the sine series;
    any difference raises :class:`IntegrityError`.
    """
    if N < 0:
        raise SeriesError("order must be >= 0")
    closed = _sinc_half_inverse_bernoulli(N)
    direct = series_inverse(sinc_half(N))
    if closed != direct:
        raise IntegrityError("Bernoulli form of (t/2)/sin(t/2) disagrees with sine inversion")
    return closed
