# Hilbert series three ways.
#
# 1. by hand, on a staircase small enough to see,
# 2. by the pivot recursion on an initial ideal, and
# 3. by the closed formula -- and the three have to agree.

from gbei.formulas import bipartite_multiplicity, generalized_bei, predicted_hilbert
from gbei.graphs import PartiteSpec, complete_multipartite
from gbei.hilbert import (MonomialIdeal, hilbert_series, krull_dimension,
                          multiplicity)

# --- 1. k[x,y] / (x^2, xy) ------------------------------------------------
# Monomials not in the ideal: 1, y, y^2, y^3, ...  and x.  So the Hilbert
# function is 1, 2, 1, 1, 1, ... for ever.
I = MonomialIdeal(2, [(2, 0), (1, 1)])
series = hilbert_series(I)
print(f"(x^2, xy):  {series.text()}")
print(f"  coefficients: {series.coefficients(6)}")
print(f"  dim = {krull_dimension(series)}, e = {multiplicity(series)}")

# --- 2 & 3. the main event ------------------------------------------------
# For J_{K_m, G} the series of S/J equals the series of S/in(J), and the
# pivot recursion computes the latter from the staircase alone.  The closed
# formula predicts the same rational function: one determinantal summand for
# the ambient complete graph plus a correction pair for every part of size
# at least two.
for spec in (PartiteSpec(2, (2, 2)), PartiteSpec(3, (1, 3))):
    J = generalized_bei(spec.m, complete_multipartite(spec))
    computed = hilbert_series(J.initial_ideal())
    predicted = predicted_hilbert(spec)
    print()
    print(f"spec m={spec.m}, parts={spec.parts}")
    print(f"  oracle:  {computed.text()}")
    print(f"  formula: {predicted.text()}")
    print(f"  equal: {computed == predicted},  "
          f"dim = {krull_dimension(computed)},  e = {multiplicity(computed)}")

# --- the corner the case table does not cover -----------------------------
# For bipartite parts there is a five-case multiplicity table, valid when
# the larger part has size >= 2.  Parts (1, 1) sit outside it: there G is a
# single edge, J is the ideal of 2-minors of a generic m x 2 matrix, and
# the quotient is the Segre coordinate ring, of degree m.  The table would
# answer 2.
print()
for m in range(2, 7):
    e = multiplicity(predicted_hilbert(PartiteSpec(m, (1, 1))))
    print(f"parts (1,1), m={m}:  e = {e}")
try:
    bipartite_multiplicity(PartiteSpec(3, (1, 1)))
except ValueError as exc:
    print(f"table refuses parts (1,1): {exc}")
