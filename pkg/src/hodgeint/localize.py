"""Relations among Hodge integrals coming from C*-localization on maps to P^1.

Every quantity here is assembled from engine values; the closed forms they
should match live in :mod:`hodgeint.closed_forms`.
"""
from __future__ import annotations

from collections import Counter, defaultdict
from dataclasses import dataclass
from fractions import Fraction
from itertools import product as iproduct
from math import factorial
from typing import Dict, Iterator, List, Sequence, Tuple

from .engine import HodgeEngine, default_hodge_engine
from .series import Series

__all__ = [
    "Partition",
    "partitions",
    "Linearization",
    "Lambda",
    "lambda_product",
    "one_point_factor",
    "I_g",
    "J_g",
    "I_series",
    "J_series",
    "g_series",
    "C_localized",
    "partition_relation",
    "partition_relation_terms",
]


@dataclass(frozen=True)
class Partition:
    parts: tuple

    def __post_init__(self):
        if any(p <= 0 for p in self.parts):
            raise ValueError("parts must be positive")
        object.__setattr__(self, "parts", tuple(sorted(self.parts, reverse=True)))

    @property
    def length(self) -> int:
        return len(self.parts)

    @property
    def size(self) -> int:
        return sum(self.parts)

    @property
    def aut(self) -> int:
        out = 1
        for m in Counter(self.parts).values():
            out *= factorial(m)
        return out


def partitions(d: int, largest: int | None = None) -> Iterator[Partition]:
    """Partitions of d, parts in descending order."""
    def rec(n, cap):
        if n == 0:
            yield ()
            return
        for p in range(min(n, cap), 0, -1):
            for tail in rec(n - p, p):
                yield (p,) + tail

    for parts in rec(d, d if largest is None else largest):
        yield Partition(parts)


@dataclass(frozen=True)
class Linearization:
    """Torus weights: [alpha, ...] for the first bundle, [beta, beta+1] for O(-1)."""

    alpha: int
    beta: int


# lambda polynomial: tuple of lambda indices (sorted, 0 dropped) -> coefficient
LambdaPoly = Dict[tuple, Fraction]


def Lambda(g: int, k) -> LambdaPoly:
    """Lambda(k) = sum_i k^i lambda_{g-i} on genus g."""
    k = Fraction(k)
    out: LambdaPoly = defaultdict(Fraction)
    for i in range(g + 1):
        j = g - i
        out[(j,) if j else ()] += k ** i
    return {m: c for m, c in out.items() if c}


def lambda_product(*polys: LambdaPoly) -> LambdaPoly:
    out: LambdaPoly = {(): Fraction(1)}
    for p in polys:
        acc: LambdaPoly = defaultdict(Fraction)
        for ma, ca in out.items():
            for mb, cb in p.items():
                acc[tuple(sorted(ma + mb))] += ca * cb
        out = {m: c for m, c in acc.items() if c}
    return out


def one_point_factor(g: int, weights: Sequence, psi_sign: int = 1, engine: HodgeEngine | None = None) -> Fraction:
    """int_{M_{g,1}bar} prod_w Lambda(w) / (1 - psi_sign * psi).

    The genus 0 factor is 1 (M_{0,1} is a point by convention).
    """
    if g == 0:
        return Fraction(1)
    engine = engine or default_hodge_engine()
    dim = 3 * g - 2
    total = Fraction(0)
    for lams, c in lambda_product(*(Lambda(g, w) for w in weights)).items():
        e = dim - sum(lams)
        if e < 0:
            continue
        total += c * psi_sign ** e * engine.integral(g, [e], lams)
    return total


def _split_sum(g: int, first: Sequence, second: Sequence, engine) -> Fraction:
    total = Fraction(0)
    for g1 in range(g + 1):
        a = one_point_factor(g1, first, engine=engine)
        if a:
            total += a * one_point_factor(g - g1, second, engine=engine)
    return total


def I_g(g: int, lin: Linearization, engine: HodgeEngine | None = None) -> Fraction:
    """Fixed-locus sum for int x*y with weights [alpha,alpha], [beta,beta+1]."""
    if g < 1:
        raise ValueError("g must be >= 1")
    a, b = lin.alpha, lin.beta
    return _split_sum(g, (-1, -a, -b), (-1, a, b + 1), engine)


def J_g(g: int, lin: Linearization, engine: HodgeEngine | None = None) -> Fraction:
    """Fixed-locus sum for int y*y with weights [alpha,alpha+1], [beta,beta+1]."""
    if g < 1:
        raise ValueError("g must be >= 1")
    a, b = lin.alpha, lin.beta
    return _split_sum(g, (-1, -a, -b), (-1, a + 1, b + 1), engine)


def _series(fn, lin, G, engine) -> Series:
    c = [Fraction(0)] * (2 * G + 1)
    c[0] = Fraction(1)
    for g in range(1, G + 1):
        c[2 * g] = fn(g, lin, engine)
    return Series(2 * G, tuple(c))


def I_series(lin: Linearization, G: int, engine: HodgeEngine | None = None) -> Series:
    """1 + sum_g t^{2g} I_g."""
    return _series(I_g, lin, G, engine)


def J_series(lin: Linearization, G: int, engine: HodgeEngine | None = None) -> Series:
    return _series(J_g, lin, G, engine)


def g_series(xi, G: int, engine: HodgeEngine | None = None) -> Series:
    """1 + sum_g t^{2g} int Lambda(-1) Lambda(0) Lambda(-xi) / (1 - psi)."""
    c = [Fraction(0)] * (2 * G + 1)
    c[0] = Fraction(1)
    for g in range(1, G + 1):
        c[2 * g] = one_point_factor(g, (-1, 0, -Fraction(xi)), engine=engine)
    return Series(2 * G, tuple(c))


def C_localized(g: int, d: int, engine: HodgeEngine | None = None) -> Fraction:
    """d^{2g-3} sum_{g1+g2=g} b_{g1} b_{g2}, with b's from the engine."""
    if d <= 0:
        raise ValueError("degree must be positive")
    if g < 0:
        raise ValueError("genus must be >= 0")
    engine = engine or default_hodge_engine()
    b = [Fraction(1)] + [engine.one_point(h, 0) for h in range(1, g + 1)]
    return Fraction(d) ** (2 * g - 3) * sum((b[h] * b[g - h] for h in range(g + 1)), Fraction(0))


def _compositions(total: int, parts: int) -> Iterator[tuple]:
    if parts == 0:
        if total == 0:
            yield ()
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def partition_relation_terms(g: int, d: int, engine: HodgeEngine | None = None) -> List[Tuple[Partition, Fraction]]:
    """Per-partition summands of the degree-d relation in genus g."""
    if g < 1 or d < 2:
        raise ValueError("needs g >= 1 and d >= 2")
    engine = engine or default_hodge_engine()
    out = []
    for m in partitions(d):
        l = m.length
        weight = Fraction((-1) ** (d + l))
        for mi in m.parts:
            weight *= Fraction(mi ** mi, mi * factorial(mi))
        weight /= m.aut
        # lambda_g / prod(1 - m_i psi_i) on M_{g,l+1}bar, extra marking bare
        integral = Fraction(0)
        for ks in _compositions(2 * g - 2 + l, l):
            coef = 1
            for mi, k in zip(m.parts, ks):
                coef *= mi ** k
            integral += coef * engine.integral(g, list(ks) + [0], [g])
        out.append((m, weight * integral))
    return out


def partition_relation(g: int, d: int, engine: HodgeEngine | None = None) -> Fraction:
    """Sum over partitions of d; vanishes when the relation holds."""
    return sum((v for _, v in partition_relation_terms(g, d, engine)), Fraction(0))
