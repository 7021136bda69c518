"""The three-coloring of the simplex slots and the green sector.

Coloring the slots blue, red and green splits the simplex product into
blocks: the mixed-parity slots carry two polygon products in the off
diagonal corners, and the green block is an involution whose eigenspace
dimensions are n(n-1)/2 and n(n+1)/2.

Run with: python3 demos/coloring_and_green.py
"""

from gsf import (RationalField, color_classes, color_positions, field_create,
                 gf4_point, green_spectrum, random_point, verify_colors)

n = 2
print("=== how the slots get their colors, n = %d ===" % n)
trace = color_positions(n)
print("pair sequence:", trace.pairs)
for step, row in enumerate(trace.rows):
    print("after %d factors: %s" % (step, "".join(row)))
print("slot histories:", [" ".join(h) for h in trace.histories])
classes = color_classes(n)
for name in ("blue", "red", "green"):
    print("%s slots: %s" % (name, classes[name]))
print()

field = RationalField()
point = random_point(n, field, seed=23)
print("block structure checks:", verify_colors(point).status)
report = green_spectrum(point)
print("green involution and ranks:", report.status)
print("rank(G - I), rank(G + I):", report.params["ranks"])
print()

print("=== the same over gf(11) at n = 3 ===")
point = random_point(3, field_create("gf(11)"), seed=23)
print("block structure checks:", verify_colors(point).status)
report = green_spectrum(point)
print("green ranks:", report.params["ranks"])
print()

print("=== characteristic 2: the involution still holds, ranks do not ===")
report = green_spectrum(gf4_point())
print("status:", report.status)
print("ranks:", report.params["ranks"])
