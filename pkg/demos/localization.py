"""
Localization relations and multiple covers
==========================================

Torus localization on spaces of maps to P^1 expresses one number in many
ways, one per choice of linearization.  The fixed-locus sums below are
built only from engine values, and their independence of the weights is
a strong test of the engine.
"""
from itertools import product

from hodgeint import C_closed, C_localized, I_g, J_g, Linearization, capped_lambda_series
from hodgeint.localize import I_series, J_series, partition_relation_terms

grid = [Linearization(a, b) for a, b in product(range(-2, 3), repeat=2)]
for g in (1, 2, 3):
    I_vals = {I_g(g, lin) for lin in grid}
    J_vals = {J_g(g, lin) for lin in grid}
    print(f"g={g}: I over 25 weights -> {sorted(map(str, I_vals))}, J -> {sorted(map(str, J_vals))}")

f0 = capped_lambda_series(0, 3)
print("1 + sum t^2g I_g(0,0) == f0(it):  ", I_series(Linearization(0, 0), 3) == f0.at_it())
print("1 + sum t^2g J_g(0,-1) == f0(it)^2:", J_series(Linearization(0, -1), 3) == (f0 * f0).at_it())

# multiple cover contributions of a rigid curve
for g in range(4):
    row = [C_localized(g, d) for d in range(1, 5)]
    print(f"C({g}, d) for d=1..4:", [str(c) for c in row], row == [C_closed(g, d) for d in range(1, 5)])

# the partition relation in genus 1, degree 2: two terms that cancel
for part, value in partition_relation_terms(1, 2):
    print("partition", part.parts, "contributes", value)
