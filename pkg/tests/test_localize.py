from fractions import Fraction
from itertools import product

import pytest

from hodgeint.closed_forms import C_closed
from hodgeint.engine import capped_lambda_series
from hodgeint.localize import (
    C_localized,
    I_g,
    I_series,
    J_g,
    J_series,
    Lambda,
    Linearization,
    Partition,
    g_series,
    lambda_product,
    one_point_factor,
    partition_relation,
    partition_relation_terms,
    partitions,
)

GRID = [Linearization(a, b) for a, b in product(range(-2, 3), repeat=2)]


def test_partitions():
    assert [p.parts for p in partitions(4)] == [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]
    assert [len(list(partitions(d))) for d in range(1, 9)] == [1, 2, 3, 5, 7, 11, 15, 22]
    p = Partition((1, 2, 1, 1))
    assert p.parts == (2, 1, 1, 1) and p.length == 4 and p.size == 5 and p.aut == 6
    with pytest.raises(ValueError):
        Partition((2, 0))


def test_Lambda_and_product():
    assert Lambda(2, 3) == {(2,): 1, (1,): 3, (): 9}
    assert Lambda(1, 0) == {(1,): 1}
    prod = lambda_product(Lambda(1, -1), Lambda(1, 1))
    # (lambda_1 - 1)(lambda_1 + 1)
    assert prod == {(1, 1): 1, (): -1}


def test_one_point_factor_genus_zero_is_one():
    assert one_point_factor(0, (5, 7, -3)) == 1


@pytest.mark.parametrize("g", [1, 2, 3])
def test_I_constant_over_grid(g):
    vals = {I_g(g, lin) for lin in GRID}
    assert len(vals) == 1


@pytest.mark.parametrize("g", [1, 2, 3])
def test_J_constant_over_grid(g):
    vals = {J_g(g, lin) for lin in GRID}
    assert len(vals) == 1


def test_I_J_examples():
    assert I_g(1, Linearization(0, 0)) == Fraction(-1, 24)
    assert J_g(1, Linearization(0, -1)) == Fraction(-1, 12)
    with pytest.raises(ValueError):
        I_g(0, Linearization(0, 0))
    with pytest.raises(ValueError):
        J_g(0, Linearization(0, 0))


def test_series_displays():
    G = 3
    f0 = capped_lambda_series(0, G)
    assert I_series(Linearization(0, 0), G) == f0.at_it()
    assert J_series(Linearization(0, -1), G) == (f0 * f0).at_it()


@pytest.mark.parametrize("xi", [-1, 0, 1, 2])
def test_g_series_factorizations(xi):
    G = 3
    gx = g_series(xi, G)
    f = lambda x: capped_lambda_series(x, G).at_it()
    assert I_series(Linearization(xi, 0), G) == gx * f(xi)
    assert J_series(Linearization(0, xi), G) == gx * f(xi + 1)
    assert gx * f(xi) == f(0)


def test_C_localized_examples():
    for d in range(1, 6):
        assert C_localized(0, d) == Fraction(1, d ** 3)
        assert C_localized(1, d) == Fraction(1, 12 * d)
    assert C_localized(2, 1) == 2 * Fraction(7, 5760) + Fraction(1, 24) ** 2 == Fraction(1, 240)
    with pytest.raises(ValueError):
        C_localized(1, 0)


@pytest.mark.parametrize("g", range(0, 5))
def test_C_localized_matches_closed(g):
    for d in range(1, 6):
        assert C_localized(g, d) == C_closed(g, d)


def test_partition_relation_genus_one_degree_two():
    terms = dict((p.parts, v) for p, v in partition_relation_terms(1, 2))
    assert terms == {(2,): Fraction(-1, 12), (1, 1): Fraction(1, 12)}


@pytest.mark.parametrize("g, d", [(g, d) for g in (1, 2, 3) for d in (2, 3, 4)])
def test_partition_relation_vanishes(g, d):
    assert partition_relation(g, d) == 0


def test_partition_relation_errors():
    with pytest.raises(ValueError):
        partition_relation(0, 2)
    with pytest.raises(ValueError):
        partition_relation(1, 1)
