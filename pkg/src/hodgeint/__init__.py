"""Exact Hodge integrals over moduli spaces of stable curves."""
from .arith import bernoulli, double_factorial, multinomial
from .cache import IntegralCache, Key, make_key
from .closed_forms import (
    C_closed,
    b_closed,
    bernoulli_identity_checks,
    c_closed_series,
    ihop_check,
    lambda3_closed,
    lamg_closed,
    lamgg_closed,
)
from .engine import (
    F_table,
    HodgeEngine,
    LambdaMonomial,
    capped_lambda_series,
    hodge_integral,
    lambda_class_to_ch,
    lambda_to_ch,
)
from .intersect import IntersectionEngine, UnstableError, kappa_psi_integral, psi_integral
from .localize import C_localized, I_g, J_g, Linearization, Partition, partition_relation, partitions
from .series import (
    KPoly,
    KSeries,
    Series,
    series_exp,
    series_inverse,
    series_log,
    series_mul,
    series_pow_kplus1,
    sinc_half,
    sinc_half_inverse,
)

__all__ = [
    "bernoulli",
    "double_factorial",
    "multinomial",
    "IntegralCache",
    "Key",
    "make_key",
    "C_closed",
    "b_closed",
    "bernoulli_identity_checks",
    "c_closed_series",
    "ihop_check",
    "lambda3_closed",
    "lamg_closed",
    "lamgg_closed",
    "F_table",
    "HodgeEngine",
    "LambdaMonomial",
    "capped_lambda_series",
    "hodge_integral",
    "lambda_class_to_ch",
    "lambda_to_ch",
    "IntersectionEngine",
    "UnstableError",
    "kappa_psi_integral",
    "psi_integral",
    "C_localized",
    "I_g",
    "J_g",
    "Linearization",
    "Partition",
    "partition_relation",
    "partitions",
    "KPoly",
    "KSeries",
    "Series",
    "series_exp",
    "series_inverse",
    "series_log",
    "series_mul",
    "series_pow_kplus1",
    "sinc_half",
    "sinc_half_inverse",
]

__version__ = "0.1.0"
