"""
Generating series of one-point Hodge integrals
==============================================

The series F(t, k) collects the integrals of psi^{2g-2+i} lambda_{g-i}
over M_{g,1}bar.  Computed from the engine it agrees, coefficient by
coefficient, with ((t/2)/sin(t/2))^{k+1}.
"""
from hodgeint import F_table, capped_lambda_series, series_pow_kplus1, sinc_half, sinc_half_inverse

G = 4
F = F_table(G)
closed = series_pow_kplus1(sinc_half_inverse(2 * G))
for g in range(1, G + 1):
    print(f"t^{2 * g}:", F[2 * g].to_json(), "closed:", closed[2 * g].to_json(), F[2 * g] == closed[2 * g])

# specializing k gives f_xi; the cases xi = -1 and xi = -2 are striking
f0 = capped_lambda_series(0, G)
print("f_0  =", f0)
print("f_-1 =", capped_lambda_series(-1, G))
print("f_-2 == sin(t/2)/(t/2):", capped_lambda_series(-2, G) == sinc_half(2 * G))
for xi in range(-2, 3):
    print(f"f_{xi} == f_0^{xi + 1}:", capped_lambda_series(xi, G) == f0 ** (xi + 1))
