"""Named verification suites comparing engine values with closed forms.

Each suite returns a :class:`SuiteReport`; a check passes only on exact
equality.
"""
from __future__ import annotations

import json
import time
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations_with_replacement
from math import factorial
from typing import Callable, Dict, List

from . import closed_forms as cf
from .engine import HodgeEngine, default_hodge_engine
from .localize import (
    C_localized,
    I_g,
    I_series,
    J_g,
    J_series,
    Linearization,
    g_series,
    lambda_product,
    Lambda,
    partition_relation,
)
from .series import series_pow_kplus1, sinc_half, sinc_half_inverse, _sinc_half_inverse_bernoulli, series_inverse

__all__ = ["Check", "SuiteReport", "SUITES", "run_suite", "reports_to_json", "reports_to_csv", "reports_to_text"]


@dataclass(frozen=True)
class Check:
    check_id: str
    lhs: Fraction
    rhs: Fraction

    @property
    def passed(self) -> bool:
        return self.lhs == self.rhs


@dataclass
class SuiteReport:
    suite: str
    checks: List[Check] = field(default_factory=list)
    elapsed: float = 0.0

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def add(self, check_id: str, lhs, rhs) -> None:
        self.checks.append(Check(check_id, Fraction(lhs), Fraction(rhs)))

    def to_dict(self, timing: bool = True) -> dict:
        d = {
            "suite": self.suite,
            "pass": self.passed,
            "checks": [
                {"check_id": c.check_id, "lhs": str(c.lhs), "rhs": str(c.rhs), "pass": c.passed}
                for c in self.checks
            ],
        }
        if timing:
            d["elapsed"] = round(self.elapsed, 3)
        return d


@dataclass(frozen=True)
class Params:
    max_genus: int = 3
    max_degree: int = 4


def _one_point_series(rep: SuiteReport, p: Params, E: HodgeEngine) -> None:
    G = p.max_genus
    engine_F = E.F_table(G)
    closed_F = series_pow_kplus1(sinc_half_inverse(2 * G))
    for g in range(1, G + 1):
        for i in range(g + 1):
            a = engine_F[2 * g].coeffs
            b = closed_F[2 * g].coeffs
            rep.add(f"F/t^{2 * g}/k^{i}", a[i] if i < len(a) else 0, b[i] if i < len(b) else 0)


def _multiple_covers(rep: SuiteReport, p: Params, E: HodgeEngine) -> None:
    for g in range(p.max_genus + 1):
        for d in range(1, p.max_degree + 1):
            rep.add(f"C/g={g}/d={d}", C_localized(g, d, E), cf.C_closed(g, d))
            if g == 0:
                rep.add(f"aspinwall-morrison/d={d}", C_localized(0, d, E), Fraction(1, d ** 3))
            elif g == 1:
                rep.add(f"genus1-cover/d={d}", C_localized(1, d, E), Fraction(1, 12 * d))
            else:
                rep.add(f"euler-char-form/g={g}/d={d}", cf.C_closed(g, d), cf.C_closed_euler(g, d))
    G = p.max_genus
    f1 = E.capped_lambda_series(1, G)
    for g in range(G + 1):
        rep.add(f"sum-C(g,1)=f1/g={g}", C_localized(g, 1, E), f1[2 * g])


def _lambda_cubed(rep: SuiteReport, p: Params, E: HodgeEngine) -> None:
    for g in range(2, max(2, min(p.max_genus, 4)) + 1):
        rep.add(f"lambda_(g-1)^3/g={g}", E.integral(g, [], [g - 1] * 3), cf.lambda3_closed(g))
        # the intermediate identity lambda_{g-1}^3 = 2 lambda_g lambda_{g-1} lambda_{g-2}
        rep.add(f"mumford-rewrite/g={g}", E.integral(g, [], [g - 1] * 3),
                2 * E.integral(g, [], [g, g - 1, g - 2]))


def _lamg(rep: SuiteReport, p: Params, E: HodgeEngine) -> None:
    for g in range(1, p.max_genus + 1):
        for n in range(1, 4):
            top = 2 * g - 3 + n
            if top < 0:
                continue
            for ks in _exponent_vectors(top, n):
                rep.add(f"lamg/g={g}/k={','.join(map(str, ks))}", E.integral(g, ks, [g]), cf.lamg_closed(g, ks))


def _exponent_vectors(total: int, n: int):
    """Descending exponent vectors of length n summing to total."""
    for c in combinations_with_replacement(range(total, -1, -1), n):
        if sum(c) == total:
            yield c


def _lamgg(rep: SuiteReport, p: Params, E: HodgeEngine) -> None:
    for g in range(2, max(2, p.max_genus) + 1):
        base = E.integral(g, [g - 1], [g, g - 1])
        for n in (1, 2):
            for ks in _exponent_vectors(g - 2 + n, n):
                if min(ks) <= 0:
                    continue
                rep.add(f"lamgg/g={g}/k={','.join(map(str, ks))}",
                        E.integral(g, ks, [g, g - 1]), cf.lamgg_closed(g, ks, base))


def _ihop(rep: SuiteReport, p: Params, E: HodgeEngine) -> None:
    for g in range(1, max(8, p.max_genus) + 1):
        lhs, rhs = cf.ihop_check(g)
        rep.add(f"ihop/g={g}", lhs, rhs)
    c = cf.c_closed_series(2 * p.max_genus)
    for g in range(1, p.max_genus + 1):
        rep.add(f"c_g-engine/g={g}", E.integral(g, [2 * g - 1], [g - 1] if g > 1 else []), c[2 * g])


def _localization(rep: SuiteReport, p: Params, E: HodgeEngine) -> None:
    G = p.max_genus
    grid = [Linearization(a, b) for a in range(-2, 3) for b in range(-2, 3)]
    for g in range(1, G + 1):
        i0 = I_g(g, Linearization(0, 0), E)
        j0 = J_g(g, Linearization(0, -1), E)
        for lin in grid:
            rep.add(f"I/g={g}/({lin.alpha},{lin.beta})", I_g(g, lin, E), i0)
            rep.add(f"J/g={g}/({lin.alpha},{lin.beta})", J_g(g, lin, E), j0)
    f0 = E.capped_lambda_series(0, G)
    f0_it = f0.at_it()
    i_ser = I_series(Linearization(0, 0), G, E)
    j_ser = J_series(Linearization(0, -1), G, E)
    sq = (f0 * f0).at_it()
    for n in range(0, 2 * G + 1, 2):
        rep.add(f"I(0,0)=f0(it)/t^{n}", i_ser[n], f0_it[n])
        rep.add(f"J(0,-1)=f0^2(it)/t^{n}", j_ser[n], sq[n])
    for xi in (0, 1):
        gx = g_series(xi, G, E)
        i_xi = I_series(Linearization(xi, 0), G, E)
        j_xi = J_series(Linearization(0, xi), G, E)
        fx = (gx * E.capped_lambda_series(xi, G).at_it())
        fx1 = (gx * E.capped_lambda_series(xi + 1, G).at_it())
        for n in range(0, 2 * G + 1, 2):
            rep.add(f"I(xi,0)=g_xi*f_xi(it)/xi={xi}/t^{n}", i_xi[n], fx[n])
            rep.add(f"J(0,xi)=g_xi*f_xi+1(it)/xi={xi}/t^{n}", j_xi[n], fx1[n])
    # f_xi = f0^(xi+1)
    for xi in (-2, -1, 0, 1, 2):
        fx = E.capped_lambda_series(xi, G)
        power = f0 ** (xi + 1)
        for n in range(0, 2 * G + 1, 2):
            rep.add(f"f_xi=f0^(xi+1)/xi={xi}/t^{n}", fx[n], power[n])
    f_m1 = E.capped_lambda_series(-1, G)
    f_m2 = E.capped_lambda_series(-2, G)
    s = sinc_half(2 * G)
    for n in range(0, 2 * G + 1, 2):
        rep.add(f"f_-1=1/t^{n}", f_m1[n], 1 if n == 0 else 0)
        rep.add(f"f_-2=sin(t/2)/(t/2)/t^{n}", f_m2[n], s[n])


def _partition(rep: SuiteReport, p: Params, E: HodgeEngine) -> None:
    for g in range(1, p.max_genus + 1):
        for d in range(2, max(2, p.max_degree) + 1):
            rep.add(f"partition/g={g}/d={d}", partition_relation(g, d, E), 0)


def _zeroz(rep: SuiteReport, p: Params, E: HodgeEngine) -> None:
    G = p.max_genus
    for g in range(1, G + 1):
        dim = 3 * g - 2
        # int Lambda(1)/(1+psi) = 0
        val = sum(((-1) ** (dim - j) * E.integral(g, [dim - j], [j] if j else []) for j in range(g + 1)), Fraction(0))
        rep.add(f"zeroz/g={g}", val, 0)
        # (c(E)/(1+psi))_j = 0 for j >= 2g-1, paired with psi^a lambda_b of complementary degree
        for j in range(2 * g - 1, dim + 1):
            comp = dim - j
            for b in range(min(g, comp) + 1):
                a = comp - b
                v = Fraction(0)
                for i in range(min(g, j) + 1):
                    v += (-1) ** (j - i) * E.integral(g, [j - i + a], [x for x in (i, b) if x])
                rep.add(f"c(E)/(1+psi)/g={g}/j={j}/psi^{a}lambda_{b}", v, 0)
        # Mumford: Lambda(-1) Lambda(1) = (-1)^g in positive degree
        prod = lambda_product(Lambda(g, -1), Lambda(g, 1))
        for n in (1, 2):
            top = 3 * g - 3 + n
            for deg in range(1, 2 * g + 1):
                part = {m: c for m, c in prod.items() if sum(m) == deg}
                if not part or deg > top:
                    continue
                for ks in _exponent_vectors(top - deg, n):
                    rep.add(f"mumford/g={g}/deg={deg}/psi={','.join(map(str, ks))}",
                            E.lambda_poly_integral(g, ks, part), 0)
    for g in range(1, max(6, G) + 1):
        rep.add(f"wk/g={g}", E.psi_engine.psi(g, [3 * g - 2]), Fraction(1, 24 ** g * factorial(g)))


def _bernoulli_identities(rep: SuiteReport, p: Params, E: HodgeEngine) -> None:
    top = max(10, p.max_genus)
    closed = _sinc_half_inverse_bernoulli(2 * top)
    direct = series_inverse(sinc_half(2 * top))
    for g in range(1, top + 1):
        rep.add(f"f0-bernoulli-form/g={g}", closed[2 * g], direct[2 * g])
        rep.add(f"b_g-closed/g={g}", cf.b_closed(g), closed[2 * g])
        for c in cf.bernoulli_identity_checks(g):
            rep.add(c.check_id, c.lhs, c.rhs)
    for g in range(1, min(p.max_genus, 5) + 1):
        rep.add(f"b_g-engine/g={g}", E.one_point(g, 0), cf.b_closed(g))


SUITES: Dict[str, Callable] = {
    "theorem2": _one_point_series,
    "theorem3": _multiple_covers,
    "theorem4": _lambda_cubed,
    "lamg": _lamg,
    "lamgg": _lamgg,
    "ihop": _ihop,
    "localization": _localization,
    "partition-relation": _partition,
    "zeroz": _zeroz,
    "lemmas": _bernoulli_identities,
}


def run_suite(name: str, max_genus: int = 3, max_degree: int = 4, engine: HodgeEngine | None = None) -> SuiteReport:
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}")
    engine = engine or default_hodge_engine()
    rep = SuiteReport(name)
    t0 = time.perf_counter()
    SUITES[name](rep, Params(max_genus, max_degree), engine)
    rep.elapsed = time.perf_counter() - t0
    return rep


def reports_to_json(reports: List[SuiteReport], timing: bool = True) -> str:
    return json.dumps([r.to_dict(timing) for r in reports], indent=2)


def reports_to_csv(reports: List[SuiteReport]) -> str:
    import csv
    import io

    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["suite", "check_id", "lhs", "rhs", "pass"])
    for r in reports:
        for c in r.checks:
            w.writerow([r.suite, c.check_id, str(c.lhs), str(c.rhs), "true" if c.passed else "false"])
    return buf.getvalue()


def reports_to_text(reports: List[SuiteReport], timing: bool = True) -> str:
    lines = []
    for r in reports:
        n_ok = sum(c.passed for c in r.checks)
        head = f"[{'PASS' if r.passed else 'FAIL'}] {r.suite}: {n_ok}/{len(r.checks)} checks"
        if timing:
            head += f" ({r.elapsed:.2f}s)"
        lines.append(head)
        for c in r.checks:
            if not c.passed:
                lines.append(f"    FAIL {c.check_id}: {c.lhs} != {c.rhs}")
    return "\n".join(lines) + "\n"
