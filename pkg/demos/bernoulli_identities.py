"""
Bernoulli number identities
===========================

The closed forms for the Hodge integrals rest on a handful of identities
between Bernoulli numbers.  All of them are exact and can be checked far
beyond the range reachable by the geometric engine.
"""
from hodgeint import bernoulli, bernoulli_identity_checks, ihop_check, lambda3_closed

print("B_0..B_12:", [str(bernoulli(m)) for m in range(13)])

for g in range(1, 11):
    checks = bernoulli_identity_checks(g)
    print(f"g={g:2d}:", "all hold" if all(c.passed for c in checks) else [c.check_id for c in checks if not c.passed])

for g in range(1, 6):
    lhs, rhs = ihop_check(g)
    print(f"c_{g}: series {lhs}, from b's {rhs}")

for g in range(2, 6):
    print(f"int lambda_{g - 1}^3 on M_{g}:", lambda3_closed(g))
