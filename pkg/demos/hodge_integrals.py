"""
Hodge integrals through Grothendieck-Riemann-Roch
=================================================

Lambda classes are first written in odd Chern characters of the Hodge
bundle.  Each ch_{2l-1} is then traded for kappa, psi and boundary terms,
one insertion at a time, until only psi/kappa integrals remain.
"""
from fractions import Fraction

from hodgeint import HodgeEngine, lambda_class_to_ch
from hodgeint.cache import make_key

E = HodgeEngine()

# lambda_j in terms of ch's; even ch's vanish so only odd ones appear
for j in range(1, 5):
    print(f"lambda_{j} =", {k: str(v) for k, v in lambda_class_to_ch(j).items()})

# one rewriting step for ch_1 on M_{1,1}bar
terms = E.grr_step(make_key(1, [0], (), [1]))
for t in terms:
    print(f"  {t.coef} * " + " * ".join(k.text() for k in t.factors))
print("sum of the terms:", E.eval_terms(terms))

# the two calibration values for the boundary convention
print("int_{M_{1,1}} lambda_1     =", E.integral(1, [0], [1]))
print("int_{M_2}     lambda_1^3   =", E.integral(2, [], [1, 1, 1]))

# a few more
print("int_{M_{2,1}} psi^2 lambda_2 =", E.integral(2, [2], [2]))
print("int_{M_3}     lambda_2^3     =", E.integral(3, [], [2, 2, 2]))
print("int_{M_3}     lambda_1^6     =", E.integral(3, [], [1] * 6))

# lambda_g integrals are multinomials times b_g
b2 = E.integral(2, [2], [2])
print("int_{M_{2,3}} psi1^2 psi2 psi3 lambda_2 / b_2 =", E.integral(2, [2, 1, 1], [2]) / b2)
assert E.integral(2, [2, 1, 1], [2]) == 12 * b2 == 12 * Fraction(7, 5760)
print("cached keys:", len(E.cache))
