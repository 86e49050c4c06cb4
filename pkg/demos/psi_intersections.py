"""
Psi intersection numbers and kappa classes
==========================================

Every Hodge integral eventually lands on numbers of the form
<tau_{k_1} ... tau_{k_n}>_g, integrals of psi classes over M_{g,n}bar.
This script computes a few of them exactly and checks the string and
dilaton equations by hand.
"""
from fractions import Fraction
from math import factorial

from hodgeint import kappa_psi_integral, psi_integral

# the one-point numbers have a closed form 1/(24^g g!)
for g in range(1, 6):
    value = psi_integral(g, [3 * g - 2])
    print(f"<tau_{3 * g - 2}>_{g} = {value}", value == Fraction(1, 24 ** g * factorial(g)))

# a genus 2 two-point number
print("<tau_3 tau_2>_2 =", psi_integral(2, [3, 2]))

# string equation: adding tau_0 lowers one exponent at a time
lhs = psi_integral(2, [4, 2, 0])
rhs = psi_integral(2, [3, 2]) + psi_integral(2, [4, 1])
print("string:", lhs, "=", rhs)

# dilaton equation: adding tau_1 multiplies by 2g - 2 + n
print("dilaton:", psi_integral(2, [3, 2, 1]), "=", 4 * psi_integral(2, [3, 2]))

# off the dimension the answer is simply zero
print("wrong degree:", psi_integral(3, [4, 3]))

# kappa classes: the untwisted convention (default) and Arbarello-Cornalba
print("kappa_1 on M_{1,1}bar, untwisted:", kappa_psi_integral(1, [0], [1]))
print("kappa_1 on M_{1,1}bar, AC:       ", kappa_psi_integral(1, [0], [1], convention="ac"))
print("kappa_1 kappa_2 on M_2bar (AC):  ", kappa_psi_integral(2, [], [1, 2], convention="ac"))
