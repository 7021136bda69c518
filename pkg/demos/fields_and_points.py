"""Sample points whose maximal minors are all nonzero, over three fields.

Run with: python3 demos/fields_and_points.py
"""

from gsf import (assumption_check, field_create, gf4_point, point_to_json,
                 random_point)

for descriptor in ("q", "gf(11)", "gf(2,2;1,1,1)"):
    field = field_create(descriptor)
    print("=== field %s ===" % field.descriptor())
    n = 2
    point = random_point(n, field, seed=7)
    print("a %d x %d matrix with every maximal minor nonzero:" %
          (n + 1, 2 * n + 1))
    for row in point.matrix:
        print("  ", [field.fmt(v) for v in row])
    print("its %d minors, indexed by column triples:" %
          len(point.table.entries))
    for key, value in sorted(point.table.entries.items()):
        print("   p%s = %s" % ("".join(map(str, key)), field.fmt(value)))
    report = assumption_check(point)
    print("assumption check:", report.status)
    print()

print("=== a fixture over the four element field ===")
point = gf4_point()
print("field:", point.field.descriptor())
print("matrix rows (entries are coefficient lists, constant term first):")
for row in point_to_json(point)["matrix"]:
    print("  ", row)
print("all ten minors nonzero:", point.table.all_nonzero())
