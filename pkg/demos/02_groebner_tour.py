# A Groebner basis walkthrough on the smallest interesting ideal.
#
# Take the star K_{1,2} (vertex 1 joined to 2 and 3) and m = 2, so we work
# in GF(p)[x11, x12, x13, x21, x22, x23] with the two minors
#
#     f12 = x11*x22 - x12*x21        (columns 1,2)
#     f13 = x11*x23 - x13*x21        (columns 1,3)
#
# Columns 2 and 3 are NOT adjacent in the star, so the minor f23 is not a
# generator.  Buchberger discovers its shadow anyway.

from gbei.formulas import generalized_bei
from gbei.graphs import PartiteSpec, complete_multipartite
from gbei.groebner import normal_form, spolynomial
from gbei.rings import TermOrder

G = complete_multipartite(PartiteSpec(2, (1, 2)))
J = generalized_bei(2, G)
order = TermOrder.lex_row_major(J.ring)

print("generators:")
for g in J.gens:
    print(f"  {g.text(order)}")

# The S-polynomial of the two generators cancels their shared lead x11*...
f12, f13 = J.gens
s = spolynomial(f12, f13, order)
print()
print(f"S(f12, f13) = {s.text(order)}")

# Up to sign that is x21 * (x12*x23 - x13*x22) = x21 * f23: the missing
# minor shows up multiplied by an entry from the shared column.  It does not
# reduce against the generators, so the reduced basis has three elements.
gb = J.groebner_basis(order)
print()
print("reduced Groebner basis:")
for g in gb:
    print(f"  {g.text(order)}")
print()
print(f"initial ideal: {J.initial_ideal(order)}")

# Membership is a normal-form computation against the basis.  The bare
# minor f23 is NOT in J -- only its multiple is.
R = J.ring
f23 = R.variable(1, 2) * R.variable(2, 3) - R.variable(1, 3) * R.variable(2, 2)
x21 = R.variable(2, 1)

print()
print(f"f23 in J:        {J.contains(f23)}")
print(f"x21 * f23 in J:  {J.contains(x21 * f23)}")
print(f"normal form of f23: {normal_form(f23, gb, order).text(order)}")

# Sanity: every S-pair of the final basis reduces to zero (that is the
# Buchberger criterion the oracle leans on).
from itertools import combinations

ok = all(not normal_form(spolynomial(a, b, order), gb, order)
         for a, b in combinations(gb, 2))
print()
print(f"all S-polynomials of the basis reduce to zero: {ok}")
