"""
Clique invariants of a small graph and of the Gamma_n family.

For a right-angled Artin group A_G, cat(BA_G) is the clique number c(G) and
TC_r(BA_G) is z_r(G), the largest total size of r cliques with empty common
intersection. Run from the repository root:

    python demos/01_clique_invariants.py
"""

from pathlib import Path

from higher_tc import clique_number, gamma_n, maximal_cliques, parse_graph, z_gamma_closed_form, z_r

DATA = Path(__file__).parent / "data"

g = parse_graph((DATA / "example_graph.txt").read_text())
print(f"example graph: {g.n} vertices, {len(g.edges)} edges")
for clique in maximal_cliques(g):
    print("  maximal clique", [g.labels[v] for v in clique])

c = clique_number(g)
print(f"c = {c}")
for r in range(2, 7):
    zr, witness = z_r(g, r, witness=True)
    sets = ["{" + ",".join(g.labels[v] for v in D) + "}" for D in witness]
    print(f"z_{r} = {zr:2d}  e.g. {' '.join(sets)}")

# The jump from z_2 to z_3 is 4 > c: TC does not grow by cat at every step.
print()
for n in (2, 3, 4):
    G = gamma_n(n)
    found = [z_r(G, r) for r in range(2, n + 4)]
    closed = [z_gamma_closed_form(n, r) for r in range(2, n + 4)]
    jumps = [b - a for a, b in zip(found, found[1:])]
    print(f"Gamma_{n}: z = {found} (closed form agrees: {found == closed}), jumps {jumps}, c = {n + 1}")
