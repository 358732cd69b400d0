"""
Generating functions sum TC_{r+1} x^r = P(x) / (1 - x)^2.

P(1) is the eventual step of the sequence. For Gamma_n the numerator has
degree n + 1, so no bound on deg P holds in general.
"""

from higher_tc import gamma_degree_check, gamma_n, growth_report, make_sequence, raag_tc_sequence, series_to_P

seq = raag_tc_sequence(gamma_n(2))
P = series_to_P(seq)
print(f"Gamma_2: {seq}")
print(f"  P(x) = {P}, P(1) = {P(1)}")
rep = growth_report(seq, 3, 0)
print("  differences", rep.differences)
for f in rep.findings:
    print(f"  {f.kind} at r={f.r}: {f.detail}")

odd = make_sequence([3], 3, 1)
print(f"pure odd, cat 3: P(x) = {series_to_P(odd)}")

for n in range(2, 7):
    Pn, ok = gamma_degree_check(n)
    print(f"Gamma_{n}: P(x) = {Pn}  (degree {Pn.degree}, P(1) = {Pn(1)}, check {ok})")
