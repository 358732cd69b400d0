"""
Cohomology of the model (L(x, y, z), dz = xy) with |x| = |y| = 3, |z| = 5.

The model is pure odd, so cat equals the number of generators and every
higher TC is (r - 1) cat. The script checks the nilpotency of K_2 that
underlies that value.
"""

from pathlib import Path

from higher_tc import cat_pure_odd, cohomology, cohomology_ring, cup_length, kr_power_vanishes, parse_model
from higher_tc.sullivan import kr_ideal_powers

DATA = Path(__file__).parent / "data"

m = parse_model((DATA / "example_odd.model").read_text())
print("d z =", m.algebra.format(m.dgen[2]))

H = cohomology(m)
for d, reps in sorted(H.representatives.items()):
    print(f"H^{d}: " + ", ".join(m.algebra.format(p) for p in reps))
print("euler characteristic", H.euler_characteristic())

R = cohomology_ring(m)
print("cup length", cup_length(R))  # 2, while cat = 3
print("cat", cat_pure_odd(m))

# K_2 = ker(mu_2) on L(V) (x) L(V); its 4th power is zero but the 3rd is not
print("dim K_2^k for k = 1..4:", kr_ideal_powers(m, 2, 4))
print("K_2^4 = 0:", kr_power_vanishes(m, 2, 3))
print("K_2^3 = 0:", kr_power_vanishes(m, 2, 2))
