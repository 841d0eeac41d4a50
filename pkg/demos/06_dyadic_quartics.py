# Galois types of Eisenstein quartics over Q_2.
from primex.dyadic import TwoAdicNumber, classify_quartic, eisenstein_scan, newton_slopes

# 2-adic numbers are 2^v * unit with the unit known modulo 2^precision.
third = TwoAdicNumber.from_rational(1, precision=17) / 3
print("1/3 in Z_2 mod 2^17:", third.unit)

# A primitive quartic extension has Galois group A4 or S4.  The resolvent cubic has a
# root in Q_2 exactly when the extension has a quadratic subfield (imprimitive);
# otherwise a square discriminant means A4.
for coeffs in [(0, 0, -2, 2), (0, 0, -4, 2), (0, -4, 4, -2), (0, 0, 0, -2), (2, 2, 0, 2)]:
    r = classify_quartic(*coeffs)
    print(f"{r.to_json()['polynomial']:18} disc={r.discriminant:7d} square={r.disc_square!s:5} verdict={r.verdict}")

# x^4 - 2x^2 + 2x - 2 is often quoted as the A4 example.  Computation says otherwise:
r = classify_quartic(0, -2, 2, -2)
print("x^4-2x^2+2x-2: disc", r.discriminant, "= -2^4 * 163, resolvent", [str(c) for c in r.resolvent])
print("  resolvent Newton polygon (root valuation, count):", newton_slopes(r.resolvent), "-> no root in Q_2")
print("  verdict", r.verdict)

# A scan over coefficient residues finds A4 quartics anyway.
scan = eisenstein_scan(3)
print("scan mod 2^3:", dict(scan.tally), "first A4:", scan.examples["A4"][0])
