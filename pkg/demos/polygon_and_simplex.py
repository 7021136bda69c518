"""The pentagon and 4-simplex equations for one rational point at n = 2.

The polygon equation multiplies the A blocks at odd labels ascending on one
side and even labels descending on the other; the simplex equation does the
same with the checkerboard matrices R at labels 1..5.  Both products agree
entry by entry.

Run with: python3 demos/polygon_and_simplex.py
"""

from gsf import (RationalField, gon_factor_labels, gon_slot, random_point,
                 side_product, simplex_factor_labels, simplex_slot,
                 verify_gon, verify_simplex)


def show(field, rows, title):
    print(title)
    for row in rows:
        print("  ", "  ".join("%8s" % field.fmt(v) for v in row))


field = RationalField()
n = 2
point = random_point(n, field, seed=11)
print("point at n = 2, minors:")
for key, value in sorted(point.table.entries.items()):
    print("   p%s = %s" % ("".join(map(str, key)), field.fmt(value)))
print()

dim = n * (n + 1) // 2
lhs_q, rhs_q = gon_factor_labels(n)
print("pentagon: labels %s against %s in dimension %d" % (lhs_q, rhs_q, dim))
lhs = side_product([gon_slot(point, q) for q in lhs_q], dim)
rhs = side_product([gon_slot(point, q) for q in rhs_q], dim)
show(field, lhs, "left product:")
show(field, rhs, "right product:")
print("sides equal:", lhs == rhs)
print("verify_gon report:", verify_gon(point).to_json()["status"])
print()

dim = n * (2 * n + 1)
lhs_q, rhs_q = simplex_factor_labels(2 * n)
print("4-simplex: labels %s against %s in dimension %d" %
      (list(lhs_q), list(rhs_q), dim))
lhs = side_product([simplex_slot(point, q) for q in lhs_q], dim)
rhs = side_product([simplex_slot(point, q) for q in rhs_q], dim)
print("sides equal entrywise:", lhs == rhs)
print("verify_simplex report:", verify_simplex(point).to_json()["status"])
