"""Hodge integrals via Mumford's Grothendieck-Riemann-Roch formula.

A lambda monomial is rewritten as a polynomial in the odd Chern-character
classes ch_1, ch_3, ...; each ch_{2l-1} is then replaced by

    B_{2l}/(2l)! * ( kappa_{2l-1} - sum_i psi_i^{2l-1}
                     + 1/2 * sum over boundary of sum_j (-1)^j psi_*^j psi_.^{2l-2-j} )

where the boundary sum runs over the irreducible divisor and over ordered
reducible splittings.  The remaining ch classes restrict additively to the
two sides of a reducible node and unchanged to the irreducible one.
"""
from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial
from typing import Dict, Iterable, Sequence

from .arith import bernoulli
from .cache import IntegralCache, Key, make_key
from .intersect import IntersectionEngine, UnstableError, _insert, submultisets
from .series import KPoly, KSeries, Series

__all__ = [
    "LambdaMonomial",
    "ChPoly",
    "lambda_class_to_ch",
    "lambda_to_ch",
    "HodgeEngine",
    "GrrTerm",
    "default_hodge_engine",
    "hodge_integral",
    "capped_lambda_series",
    "F_table",
]

_ZERO = Fraction(0)
_ONE = Fraction(1)
_HALF = Fraction(1, 2)

#: ch monomial (descending tuple of odd degrees) -> coefficient
ChPoly = Dict[tuple, Fraction]


@dataclass(frozen=True)
class LambdaMonomial:
    """psi_1^{k_1}..psi_n^{k_n} lambda_1^{e_1}..lambda_g^{e_g} on M_{g,n}bar."""

    g: int
    psi: tuple = ()
    lam: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "psi", tuple(sorted(self.psi, reverse=True)))
        lam = tuple(self.lam)
        if len(lam) > self.g and any(lam[self.g:]):
            raise ValueError(f"lambda index exceeds genus {self.g}")
        lam = lam[: self.g] + (0,) * (self.g - len(lam[: self.g]))
        if any(e < 0 for e in lam) or any(k < 0 for k in self.psi):
            raise ValueError("exponents must be nonnegative")
        object.__setattr__(self, "lam", lam)

    @classmethod
    def from_lambdas(cls, g: int, psi: Iterable[int] = (), lambdas: Iterable[int] = ()) -> "LambdaMonomial":
        """Build from a list of lambda indices, e.g. ``[1, 1, 1]`` for lambda_1^3."""
        e = [0] * g
        for j in lambdas:
            if j == 0:
                continue
            if not 1 <= j <= g:
                raise ValueError(f"lambda_{j} is not a class on genus {g}")
            e[j - 1] += 1
        return cls(g, tuple(psi), tuple(e))

    @property
    def n(self) -> int:
        return len(self.psi)

    @property
    def degree(self) -> int:
        return sum(self.psi) + sum((j + 1) * e for j, e in enumerate(self.lam))


def _poly_mul(a: ChPoly, b: ChPoly, max_degree: int | None = None) -> ChPoly:
    out: ChPoly = defaultdict(Fraction)
    for ma, ca in a.items():
        for mb, cb in b.items():
            m = tuple(sorted(ma + mb, reverse=True))
            if max_degree is not None and sum(m) > max_degree:
                continue
            out[m] += ca * cb
    return {m: c for m, c in out.items() if c}


_lambda_cache: dict = {}


def lambda_class_to_ch(j: int) -> ChPoly:
    """lambda_j in odd ch's.

    From log c(E) = sum (-1)^{k-1} (k-1)! ch_k t^k with even ch_k = 0:
    j c_j = sum_{k odd <= j} k! ch_k c_{j-k}.
    """
    if j in _lambda_cache:
        return _lambda_cache[j]
    if j == 0:
        out = {(): _ONE}
    else:
        acc: ChPoly = defaultdict(Fraction)
        for k in range(1, j + 1, 2):
            for m, c in lambda_class_to_ch(j - k).items():
                acc[tuple(sorted(m + (k,), reverse=True))] += factorial(k) * c
        out = {m: c / j for m, c in acc.items() if c}
    _lambda_cache[j] = out
    return out


def lambda_to_ch(m: LambdaMonomial) -> ChPoly:
    """The lambda part of ``m`` as a ChPoly (psi exponents untouched)."""
    out: ChPoly = {(): _ONE}
    for j, e in enumerate(m.lam, start=1):
        for _ in range(e):
            out = _poly_mul(out, lambda_class_to_ch(j))
    return out


@dataclass
class GrrTerm:
    """One summand of a GRR rewrite: coef * prod of connected integrals."""

    coef: Fraction
    factors: tuple


class HodgeEngine:
    """Evaluates integrals of psi, kappa and ch(E) classes, memoized."""

    def __init__(self, cache: IntegralCache | None = None, kappa_pick=max):
        self.psi_engine = IntersectionEngine(cache, kappa_pick=kappa_pick)
        self.cache = self.psi_engine.cache
        self._lambda_memo: dict = {}

    # -- the rewrite ------------------------------------------------------
    def grr_step(self, key: Key) -> list:
        """Rewrite the highest ch insertion of ``key``.

        Returns a list of :class:`GrrTerm`; each factor is a :class:`Key`
        and the integral of ``key`` equals sum(coef * prod(values)).
        Unstable boundary factors are omitted.
        """
        if not key.ch:
            raise ValueError("grr_step needs a ch insertion; use the kappa/psi engine")
        c = key.ch[0]
        rest = key.ch[1:]
        if key.kappa:
            # kappas on boundary strata are never needed: eval removes them first
            raise ValueError("grr_step expects kappa-free keys")
        if c % 2 == 0:
            return []
        g, psi = key.g, key.psi
        l2 = c + 1
        coef = bernoulli(l2) / factorial(l2)
        terms = [GrrTerm(coef, (make_key(g, psi, key.kappa + (c,), rest),))]
        for i in range(len(psi)):
            if i and psi[i] == psi[i - 1]:
                continue
            mult = psi.count(psi[i])
            bumped = psi[:i] + (psi[i] + c,) + psi[i + 1:]
            terms.append(GrrTerm(-coef * mult, (make_key(g, bumped, key.kappa, rest),)))
        half = coef * _HALF
        for j in range(c):
            sign = -1 if j % 2 else 1
            a, b = j, c - 1 - j
            if g >= 1:
                terms.append(GrrTerm(sign * half, (make_key(g - 1, psi + (a, b), (), rest),)))
            for g1 in range(g + 1):
                g2 = g - g1
                for I, J, w1 in submultisets(psi):
                    if 2 * g1 - 1 + len(I) <= 0 or 2 * g2 - 1 + len(J) <= 0:
                        continue
                    for Y1, Y2, w2 in submultisets(rest):
                        k1 = make_key(g1, I + (a,), (), Y1)
                        k2 = make_key(g2, J + (b,), (), Y2)
                        terms.append(GrrTerm(sign * half * w1 * w2, (k1, k2)))
        return terms

    # -- evaluation -------------------------------------------------------
    def eval_key(self, key: Key) -> Fraction:
        if not key.is_stable():
            raise UnstableError(f"M_{{{key.g},{key.n}}} is not stable")
        return self._eval(key)

    def _eval(self, key: Key) -> Fraction:
        if key.degree != key.dimension:
            return _ZERO
        if not key.ch:
            return self.psi_engine._kappa_ac(key.g, key.psi, key.kappa)
        if key.g == 0:
            # the Hodge bundle has rank 0 in genus 0
            return _ZERO
        hit = self.cache.get(key)
        if hit is not None:
            return hit
        if key.kappa:
            val = self._eliminate_kappa(key)
        else:
            val = self._grr(key)
        return self.cache.put(key, val)

    def _eliminate_kappa(self, key: Key) -> Fraction:
        # ch(E) is pulled back along the forgetful map, so it rides along
        a = self.psi_engine.kappa_pick(key.kappa)
        others = list(key.kappa)
        others.remove(a)
        val = _ZERO
        for S, rest, w in submultisets(others):
            sign = -1 if len(S) % 2 else 1
            val += sign * w * self._eval(make_key(key.g, key.psi + (a + 1 + sum(S),), rest, key.ch))
        return val

    def _grr(self, key: Key) -> Fraction:
        c = key.ch[0]
        rest = key.ch[1:]
        g, psi = key.g, key.psi
        coef = bernoulli(c + 1) / factorial(c + 1)
        # kappa_c (AC), eliminated immediately
        inner = self._eval(Key(g, _insert(psi, c + 1), (), rest))
        for i in range(len(psi)):
            if i and psi[i] == psi[i - 1]:
                continue
            mult = psi.count(psi[i])
            inner -= mult * self._eval(make_key(g, psi[:i] + psi[i + 1:] + (psi[i] + c,), (), rest))
        boundary = _ZERO
        rest_deg = sum(rest)
        for j in range(c):
            a, b = j, c - 1 - j
            part = _ZERO
            if g >= 1:
                part += self._eval(make_key(g - 1, psi + (a, b), (), rest))
            for g1 in range(g + 1):
                g2 = g - g1
                for I, J, w1 in submultisets(psi):
                    n1, n2 = len(I) + 1, len(J) + 1
                    if 2 * g1 - 2 + n1 <= 0 or 2 * g2 - 2 + n2 <= 0:
                        continue
                    # degree the first factor still needs from ch's
                    need = 3 * g1 - 3 + n1 - sum(I) - a
                    if need < 0 or need > rest_deg:
                        continue
                    for Y1, Y2, w2 in submultisets(rest):
                        if sum(Y1) != need:
                            continue
                        v1 = self._eval(make_key(g1, I + (a,), (), Y1))
                        if v1:
                            part += w1 * w2 * v1 * self._eval(make_key(g2, J + (b,), (), Y2))
            boundary += -part if j % 2 else part
        return coef * (inner + _HALF * boundary)

    def eval_terms(self, terms: Sequence[GrrTerm]) -> Fraction:
        total = _ZERO
        for t in terms:
            v = t.coef
            for f in t.factors:
                if not v:
                    break
                v *= self._eval(f) if f.is_stable() else _ZERO
            total += v
        return total

    # -- public entry points ----------------------------------------------
    def ch_integral(self, g: int, psi: Iterable[int] = (), ch: Iterable[int] = ()) -> Fraction:
        """Integral of psi monomial times ch_{b_1}...ch_{b_m}; even ch's vanish."""
        key = make_key(g, psi, (), ch)
        if not key.is_stable():
            raise UnstableError(f"M_{{{g},{key.n}}} is not stable")
        if any(b % 2 == 0 for b in key.ch if b > 0):
            return _ZERO
        scale = _ONE
        ch0 = key.ch.count(0)
        if ch0:
            scale = Fraction(g) ** ch0
            key = make_key(g, key.psi, (), [b for b in key.ch if b])
        return scale * self._eval(key)

    def hodge(self, m: LambdaMonomial) -> Fraction:
        if 2 * m.g - 2 + m.n <= 0:
            raise UnstableError(f"M_{{{m.g},{m.n}}} is not stable")
        if m.degree != 3 * m.g - 3 + m.n:
            return _ZERO
        hit = self._lambda_memo.get(m)
        if hit is not None:
            return hit
        total = _ZERO
        for mono, c in lambda_to_ch(m).items():
            total += c * self._eval(make_key(m.g, m.psi, (), mono))
        self._lambda_memo[m] = total
        return total

    def integral(self, g: int, psi: Iterable[int] = (), lambdas: Iterable[int] = ()) -> Fraction:
        """Integral of prod psi_i^{psi[i]} * prod lambda_j for j in ``lambdas``."""
        return self.hodge(LambdaMonomial.from_lambdas(g, tuple(psi), lambdas))

    def lambda_poly_integral(self, g: int, psi: Sequence[int], poly: Dict[tuple, Fraction]) -> Fraction:
        """Integrate psi monomial times a polynomial in lambdas.

        ``poly`` maps tuples of lambda indices (0 allowed, meaning 1) to
        coefficients; terms of the wrong degree contribute 0.
        """
        total = _ZERO
        for lams, c in poly.items():
            if c:
                total += c * self.integral(g, psi, [j for j in lams if j])
        return total

    # -- generating series -----------------------------------------------
    def one_point(self, g: int, i: int) -> Fraction:
        """int_{M_{g,1}bar} psi^{2g-2+i} lambda_{g-i}."""
        return self.integral(g, [2 * g - 2 + i], [g - i] if g - i else [])

    def capped_lambda_series(self, xi, G: int) -> Series:
        """f_xi(t) = 1 + sum_g t^{2g} int Lambda(xi)/(1 - psi_1) through t^{2G}."""
        if G < 1:
            raise ValueError("G must be >= 1")
        coeffs = [_ZERO] * (2 * G + 1)
        coeffs[0] = _ONE
        xi = Fraction(xi)
        for g in range(1, G + 1):
            coeffs[2 * g] = sum((xi ** i * self.one_point(g, i) for i in range(g + 1)), _ZERO)
        return Series(2 * G, tuple(coeffs))

    def F_table(self, G: int) -> KSeries:
        """F(t, k) = 1 + sum_g t^{2g} sum_i k^i int psi^{2g-2+i} lambda_{g-i}."""
        if G < 1:
            raise ValueError("G must be >= 1")
        coeffs = [KPoly()] * (2 * G + 1)
        coeffs[0] = KPoly([1])
        for g in range(1, G + 1):
            coeffs[2 * g] = KPoly([self.one_point(g, i) for i in range(g + 1)])
        return KSeries(2 * G, tuple(coeffs))


_default: HodgeEngine | None = None


def default_hodge_engine() -> HodgeEngine:
    global _default
    if _default is None:
        _default = HodgeEngine()
    return _default


def hodge_integral(g: int, psi: Iterable[int] = (), lambdas: Iterable[int] = ()) -> Fraction:
    """Integral over M_{g,n}bar of prod psi_i^{psi[i]} times the product of
    lambda_j over ``lambdas`` (indices, repeats allowed)."""
    return default_hodge_engine().integral(g, psi, lambdas)


def capped_lambda_series(xi, G: int) -> Series:
    return default_hodge_engine().capped_lambda_series(xi, G)


def F_table(G: int) -> KSeries:
    return default_hodge_engine().F_table(G)
