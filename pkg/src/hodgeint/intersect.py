"""Psi intersection numbers and the elimination of kappa classes.

``psi_integral`` realizes the Witten-Kontsevich numbers through the
Dijkgraaf-Verlinde-Verlinde form of the Virasoro recursion.  Kappa classes
are removed by pushing forward from M_{g,n+1}bar.
"""
from __future__ import annotations

import sys
from collections import Counter
from fractions import Fraction
from itertools import product as iproduct
from math import comb
from typing import Callable, Iterable, Iterator, Sequence, Tuple

from .arith import double_factorial
from .cache import IntegralCache, Key, make_key

__all__ = [
    "UnstableError",
    "IntersectionEngine",
    "submultisets",
    "psi_integral",
    "kappa_psi_integral",
    "default_engine",
]

sys.setrecursionlimit(max(sys.getrecursionlimit(), 20000))

_ZERO = Fraction(0)
_ONE = Fraction(1)
_HALF = Fraction(1, 2)


class UnstableError(ValueError):
    """(g, n) with 2g - 2 + n <= 0."""


def submultisets(items: Sequence[int]) -> Iterator[Tuple[tuple, tuple, int]]:
    """Yield ``(chosen, rest, weight)`` for every sub-multiset of ``items``.

    ``weight`` counts the subsets of positions giving that sub-multiset, so
    summing over the output with weights equals summing over all 2^n subsets.
    """
    counts = sorted(Counter(items).items(), reverse=True)
    ranges = [range(m + 1) for _, m in counts]
    for pick in iproduct(*ranges):
        chosen, rest, w = [], [], 1
        for (v, m), c in zip(counts, pick):
            chosen += [v] * c
            rest += [v] * (m - c)
            w *= comb(m, c)
        yield tuple(chosen), tuple(rest), w


def _dfact(m: int) -> int:
    return int(double_factorial(m))


def _check_stable(g: int, n: int) -> None:
    if g < 0 or 2 * g - 2 + n <= 0:
        raise UnstableError(f"M_{{{g},{n}}} is not stable")


class IntersectionEngine:
    """Memoized psi/kappa integrals over a shared :class:`IntegralCache`.

    ``kappa_pick`` selects which kappa is eliminated first (``max`` or
    ``min`` over the indices); results must not depend on it.
    """

    def __init__(self, cache: IntegralCache | None = None, kappa_pick: Callable = max):
        self.cache = cache if cache is not None else IntegralCache()
        self.kappa_pick = kappa_pick

    # -- pure psi ---------------------------------------------------------
    def psi(self, g: int, exps: Iterable[int]) -> Fraction:
        """<tau_{k_1} ... tau_{k_n}>_g; zero off the dimension."""
        exps = tuple(sorted(exps, reverse=True))
        if any(k < 0 for k in exps):
            return _ZERO
        _check_stable(g, len(exps))
        return self._psi(g, exps)

    def _psi(self, g: int, exps: tuple) -> Fraction:
        n = len(exps)
        if g < 0 or 2 * g - 2 + n <= 0 or sum(exps) != 3 * g - 3 + n:
            return _ZERO
        key = Key(g, exps)
        hit = self.cache.get(key)
        if hit is not None:
            return hit
        if g == 0 and n == 3:
            val = _ONE
        elif g == 1 and n == 1:
            val = Fraction(1, 24)
        else:
            val = self._dvv(g, exps)
        return self.cache.put(key, val)

    def _dvv(self, g: int, exps: tuple) -> Fraction:
        # (2k+3)!! <tau_{k+1} tau_S>_g = sum_j (2k+2d_j+1)!!/(2d_j-1)!! <tau_{k+d_j} tau_{S-j}>_g
        #   + 1/2 sum_{r+s=k-1} (2r+1)!!(2s+1)!! [<tau_r tau_s tau_S>_{g-1}
        #                                         + sum <tau_r tau_I>_{g1} <tau_s tau_J>_{g2}]
        k = exps[0] - 1
        rest = exps[1:]
        total = _ZERO
        seen = set()
        for j, d in enumerate(rest):
            if d in seen:
                continue
            seen.add(d)
            mult = rest.count(d)
            others = rest[:j] + rest[j + 1:]
            coef = Fraction(_dfact(2 * k + 2 * d + 1), _dfact(2 * d - 1)) * mult
            total += coef * self._psi(g, _insert(others, k + d))
        if k >= 1:
            loops = _ZERO
            for r in range(k):
                s = k - 1 - r
                w = _dfact(2 * r + 1) * _dfact(2 * s + 1)
                term = self._psi(g - 1, _insert(_insert(rest, r), s))
                for I, J, m in submultisets(rest):
                    # genus of the first factor is forced by its dimension
                    num = r + sum(I) - len(I) + 2
                    if num % 3:
                        continue
                    g1 = num // 3
                    g2 = g - g1
                    if g1 < 0 or g2 < 0:
                        continue
                    a = self._psi(g1, _insert(I, r))
                    if a:
                        term += m * a * self._psi(g2, _insert(J, s))
                loops += w * term
            total += _HALF * loops
        return total / _dfact(2 * k + 3)

    # -- kappa classes ----------------------------------------------------
    def kappa_ac(self, g: int, exps: Iterable[int], kappas: Iterable[int]) -> Fraction:
        """Integral with Arbarello-Cornalba kappas, kappa_a = pi_*(psi_{n+1}^{a+1})."""
        key = make_key(g, exps, kappas)
        if any(k < 0 for k in key.psi) or any(a < 1 for a in key.kappa):
            raise ValueError("psi exponents must be >= 0 and kappa indices >= 1")
        _check_stable(g, key.n)
        return self._kappa_ac(key.g, key.psi, key.kappa)

    def _kappa_ac(self, g: int, exps: tuple, kappas: tuple) -> Fraction:
        if not kappas:
            return self._psi(g, exps)
        n = len(exps)
        if 2 * g - 2 + n <= 0 or sum(exps) + sum(kappas) != 3 * g - 3 + n:
            return _ZERO
        key = Key(g, exps, kappas)
        hit = self.cache.get(key)
        if hit is not None:
            return hit
        a = self.kappa_pick(kappas)
        others = list(kappas)
        others.remove(a)
        # pi^* kappa_b = kappa_b - psi_{n+1}^b on M_{g,n+1}bar
        val = _ZERO
        for S, rest, w in submultisets(others):
            sign = -1 if len(S) % 2 else 1
            new = _insert(exps, a + 1 + sum(S))
            val += sign * w * self._kappa_ac(g, new, rest)
        return self.cache.put(key, val)

    def kappa_mumford(self, g: int, exps: Iterable[int], kappas: Iterable[int]) -> Fraction:
        """Integral with kappa_a = pi_*(c_1(omega_pi)^{a+1}), omega_pi untwisted.

        These differ from the AC classes by kappa_a(AC) - sum_i psi_i^a; for a
        single kappa this is <tau_{a+1} prod tau_k> - sum_i <tau_{k_i+a} ...>.
        """
        exps = tuple(exps)
        kappas = tuple(kappas)
        _check_stable(g, len(exps))
        n = len(exps)
        total = _ZERO
        # each untwisted kappa_a is kappa_a(AC) (choice None) or -psi_i^a (choice i)
        for choice in iproduct([None, *range(n)], repeat=len(kappas)):
            e = list(exps)
            ac = []
            sign = 1
            for a, c in zip(kappas, choice):
                if c is None:
                    ac.append(a)
                else:
                    e[c] += a
                    sign = -sign
            key = make_key(g, e, ac)
            total += sign * self._kappa_ac(key.g, key.psi, key.kappa)
        return total


def _insert(t: tuple, v: int) -> tuple:
    """Insert into a descending tuple."""
    for i, x in enumerate(t):
        if v >= x:
            return t[:i] + (v,) + t[i:]
    return t + (v,)


_default: IntersectionEngine | None = None


def default_engine() -> IntersectionEngine:
    global _default
    if _default is None:
        _default = IntersectionEngine()
    return _default


def psi_integral(g: int, exps: Iterable[int]) -> Fraction:
    return default_engine().psi(g, exps)


def kappa_psi_integral(g: int, exps: Iterable[int], kappas: Iterable[int], convention: str = "mumford") -> Fraction:
    """kappa/psi integral; ``convention`` is ``"mumford"`` (untwisted) or ``"ac"``."""
    eng = default_engine()
    if convention == "mumford":
        return eng.kappa_mumford(g, exps, kappas)
    if convention == "ac":
        return eng.kappa_ac(g, exps, kappas)
    raise ValueError(f"unknown kappa convention {convention!r}")
