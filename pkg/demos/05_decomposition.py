# The primary decomposition, checked by actually intersecting ideals.
#
# For a complete multipartite graph the minimal primes of J_{K_m,G} are
# indexed by the cut sets: the empty set, plus the complement T_k of each
# part of size >= 2.  Each component is generated by the variables over T
# together with the minors of the remaining columns.

from gbei.formulas import (decomposition_components, generalized_bei,
                           predicted_cut_sets)
from gbei.graphs import PartiteSpec, complete_multipartite, cut_sets
from gbei.groebner import ideals_equal, intersect

spec = PartiteSpec(2, (1, 1, 2))    # K_{1,1,2}: parts {1}, {2}, {3,4}
G = complete_multipartite(spec)
J = generalized_bei(spec.m, G)

print(f"spec m={spec.m}, parts={spec.parts}")
brute = [tuple(sorted(T)) for T, _ in cut_sets(G)]
print(f"cut sets, brute-forced from the graph: {brute}")
print(f"cut sets, by formula:                  {list(predicted_cut_sets(spec))}")

components = decomposition_components(spec)
print()
for T, P in components:
    label = "determinantal (T = empty)" if not T else f"variables over T = {T}"
    print(f"component {label}: {len(P.gens)} generators")

# Intersect the components and compare with J itself.  Equality of ideals
# is two-sided Groebner membership; the intersection goes through the
# auxiliary-variable elimination trick.
acc = components[0][1]
for _, P in components[1:]:
    acc = intersect(acc, P)

print()
print(f"intersection of components == J: {ideals_equal(acc, J)}")

# And J sits inside every component, as it must.
inside = all(all(P.contains(g) for g in J.gens) for _, P in components)
print(f"J contained in each component:   {inside}")
