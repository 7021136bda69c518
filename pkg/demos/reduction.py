"""Shrinking the checkerboard operators one dimension at a time.

Folding the last row and column of R back in with weight lam gives a
(2n-1) x (2n-1) operator Z that satisfies the next smaller simplex
equation, and the step can be repeated.  The fold fails only when the
pivot 1 - lam * S[m][m] vanishes, which happens over small fields.

Run with: python3 demos/reduction.py
"""

from fractions import Fraction

from gsf import (RationalField, build_R, build_Z, field_create, random_point,
                 reduce_matrix, verify_reduction)

field = RationalField()
n = 2
point = random_point(n, field, seed=31)

print("=== level one at n = %d ===" % n)
for lam in (Fraction(0), Fraction(1), Fraction(5, 2)):
    closed = build_Z(point, 1, lam)
    eliminated = reduce_matrix(field, build_R(point, 1), lam)
    print("lam = %s: closed form equals elimination: %s" %
          (lam, closed == eliminated))
    for row in closed:
        print("  ", "  ".join("%10s" % field.fmt(v) for v in row))
report = verify_reduction(point, lambdas=[Fraction(5, 2)])
print("the Z operators satisfy the smaller equation:", report.status)
print()

print("=== two levels at n = 3 ===")
point = random_point(3, field, seed=31)
report = verify_reduction(point, lambdas=[Fraction(1)], depth=2)
print("status:", report.status)
for level in report.params["levels"]:
    print("  level %(level)d: operators of size %(size)d, "
          "equation in dimension %(dim)d" % level)
print()

print("=== a singular pivot over gf(11) ===")
small = field_create("gf(11)")
point = random_point(2, small, seed=0)
report = verify_reduction(point, lambdas=[small.parse("5")], depth=2)
print("status:", report.status)
print("witness:", report.witness)
