from fractions import Fraction
from math import factorial

import pytest

from hodgeint import closed_forms as cf
from hodgeint.arith import bernoulli
from hodgeint.engine import F_table, hodge_integral
from hodgeint.series import series_pow_kplus1, sinc_half_inverse


def test_b_closed():
    assert cf.b_closed(0) == 1
    assert cf.b_closed(1) == Fraction(1, 24)
    assert cf.b_closed(2) == Fraction(7, 5760)
    assert [cf.b_closed(g) for g in range(1, 6)] == [sinc_half_inverse(10)[2 * g] for g in range(1, 6)]
    with pytest.raises(ValueError):
        cf.b_closed(-1)


def test_b_closed_matches_engine():
    for g in range(1, 5):
        assert hodge_integral(g, [2 * g - 2], [g]) == cf.b_closed(g)


def test_c_closed_series():
    c = cf.c_closed_series(8)
    assert c[0] == 0
    assert c[2] == Fraction(1, 24)
    assert c[4] == Fraction(1, 480)
    # the t^4 coefficient as a harmonic-weighted b_2 minus a product correction
    assert c[4] == Fraction(11, 6) * cf.b_closed(2) - Fraction(1, 2) * Fraction(1, 6) * cf.b_closed(1) ** 2
    with pytest.raises(ValueError):
        cf.c_closed_series(1)


@pytest.mark.parametrize("g", [1, 2, 3])
def test_c_closed_matches_engine(g):
    assert cf.c_closed_series(2 * g)[2 * g] == hodge_integral(g, [2 * g - 1], [g - 1] if g > 1 else [])


def test_C_closed():
    assert cf.C_closed(0, 5) == Fraction(1, 125)
    assert cf.C_closed(1, 3) == Fraction(1, 36)
    assert cf.C_closed(2, 1) == Fraction(1, 240)
    for d in range(1, 6):
        assert cf.C_closed(0, d) == Fraction(1, d ** 3)
        assert cf.C_closed(1, d) == Fraction(1, 12 * d)
    for bad in (0, -1):
        with pytest.raises(ValueError):
            cf.C_closed(2, bad)


@pytest.mark.parametrize("g", range(2, 8))
def test_C_closed_euler_form(g):
    for d in range(1, 5):
        assert cf.C_closed_euler(g, d) == cf.C_closed(g, d)


def test_lambda3_closed():
    assert cf.lambda3_closed(2) == Fraction(1, 2880)
    assert cf.lambda3_closed(3) == Fraction(1, 42) / 6 * Fraction(1, 30) / 4 / 24
    assert cf.lambda3_closed(3) == Fraction(1, 725760)
    with pytest.raises(ValueError):
        cf.lambda3_closed(1)


@pytest.mark.parametrize("g", [2, 3])
def test_lambda3_closed_matches_engine(g):
    assert hodge_integral(g, [], [g - 1] * 3) == cf.lambda3_closed(g)


def test_lamg_closed():
    assert cf.lamg_closed(1, [0]) == Fraction(1, 24)
    assert cf.lamg_closed(1, [1, 0]) == Fraction(1, 24)
    assert cf.lamg_closed(2, [1, 1, 1]) == 0
    with pytest.raises(ValueError):
        cf.lamg_closed(1, [-1, 2])


def test_lamgg_closed():
    base = Fraction(1, 2880)
    assert cf.lamgg_closed(2, [1], base) == base
    assert cf.lamgg_closed(2, [1, 1], base) == 3 * base
    with pytest.raises(ValueError):
        cf.lamgg_closed(2, [2, 0], base)
    with pytest.raises(ValueError):
        cf.lamgg_closed(1, [1], base)


@pytest.mark.parametrize("g", [2, 3])
def test_lamgg_closed_matches_engine(g):
    base = hodge_integral(g, [g - 1], [g, g - 1])
    for k1 in range(1, g):
        ks = [k1, g - k1]
        assert hodge_integral(g, ks, [g, g - 1]) == cf.lamgg_closed(g, ks, base)


def test_ihop_examples():
    assert cf.ihop_check(1) == (Fraction(1, 24), Fraction(1, 24))
    assert cf.ihop_check(2) == (Fraction(1, 480), Fraction(1, 480))
    with pytest.raises(ValueError):
        cf.ihop_check(0)


@pytest.mark.parametrize("g", range(1, 9))
def test_ihop_pairs_equal(g):
    lhs, rhs = cf.ihop_check(g)
    assert lhs == rhs


@pytest.mark.parametrize("g", range(1, 11))
def test_bernoulli_identities(g):
    checks = cf.bernoulli_identity_checks(g)
    assert {c.check_id.split("/")[0] for c in checks} == {
        "b-convolution", "beta-convolution", "log-f0", "log-derivative-f0", "harmonic-b", "harmonic-beta"
    }
    for c in checks:
        assert c.passed, c


def test_bernoulli_identity_examples():
    by_id = {c.check_id: c for c in cf.bernoulli_identity_checks(2)}
    assert by_id["b-convolution/g=2"].lhs == Fraction(1, 240)
    assert by_id["b-convolution/g=2"].rhs == abs(bernoulli(4)) / (4 * factorial(2))
    one = {c.check_id: c for c in cf.bernoulli_identity_checks(1)}
    assert one["harmonic-b/g=1"].lhs == one["harmonic-b/g=1"].rhs == Fraction(1, 24)
    assert one["log-f0/k=1"].lhs == Fraction(1, 24)


def test_F_table_matches_power_series():
    F = F_table(4)
    closed = series_pow_kplus1(sinc_half_inverse(8))
    assert F.order == closed.order == 8
    for n in range(9):
        assert F[n] == closed[n]
