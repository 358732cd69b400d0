"""
Zero-divisor cup-length zcl_r against the bounds it feeds.

zcl_r is the nilpotency index of ker(H^{(x)r} -> H) minus one. It is a lower
bound for MTC_r; (r - 1) cat is another, and r cat is an upper bound.
"""

from higher_tc import cohomology_ring, cup_length, make_algebra, mtc_bounds, parse_model, zcl_r
from higher_tc.sullivan import tc_mtc_pure_odd

EXAMPLE = "gen x 3\ngen y 3\ngen z 5\nd z = x*y\n"

S2 = make_algebra([("1", 0), ("a", 2)], {})
S3 = make_algebra([("1", 0), ("x", 3)], {})
CP2 = make_algebra([("1", 0), ("a", 2), ("a^2", 4)], {("a", "a"): {"a^2": 1}})

# zcl_r(S^even) = r, zcl_r(S^odd) = r - 1, zcl_2(CP^2) = 4 = 2 cat
for name, H in (("S^2", S2), ("S^3", S3), ("CP^2", CP2)):
    print(name, "zcl_2..4:", [zcl_r(H, r) for r in (2, 3, 4)])

m = parse_model(EXAMPLE)
R = cohomology_ring(m)
cup = cup_length(R)
zcl = {r: zcl_r(R, r) for r in (2, 3)}
print("example: cup", cup, "zcl", zcl)

for r in (2, 3, 4):
    b = mtc_bounds(3, cup, zcl, r, certificate=tc_mtc_pure_odd(m, r))
    print(f"r={r}: MTC in [{b.lower}, {b.upper}], exact {b.exact}")
