# Predict, then verify.
#
# The library has two halves that never share code paths.  The closed-form
# half (gbei.formulas) answers instantly from arithmetic on (m, parts).  The
# oracle half (gbei.verify) recomputes everything from scratch: Groebner
# basis over GF(p), Hilbert series of the initial ideal, Betti numbers via
# simplicial homology, brute-forced cut sets.  A report row only says
# "match" when the two halves agree.

import json

from gbei.formulas import predict
from gbei.graphs import PartiteSpec
from gbei.verify import verify

spec = PartiteSpec(2, (2, 2))   # J_{K_2, K_{2,2}}, eight variables
pred = predict(spec)

print(f"spec: m = {spec.m}, parts = {spec.parts}  "
      f"(n = {spec.n}, s = {spec.s})")
print()
print("closed-form predictions")
print(f"  dim    = {pred.dim}")
print(f"  depth  = {pred.depth}")
print(f"  reg    = {pred.reg}")
print(f"  mult   = {pred.mult}")
print(f"  height = {pred.height}")
print(f"  Hilb   = {pred.hilbert.text()}")
print(f"  cd     = {pred.cd}")
print(f"  cuts   = {pred.cut_sets}")

# Now make the oracle earn those numbers.  Nothing below looks at the
# formulas except to compare against them at the end.
report = verify(spec)

print()
print("oracle verification")
for row in report.invariants:
    print(f"  {row['name']:<14} {row['status']:<10} "
          f"predicted={row['predicted']!r:<40} computed={row['computed']!r}")
print()
counts = report.counts()
print(f"agreement: {counts['match']} match, {counts['mismatch']} mismatch, "
      f"{counts['skipped']} skipped")
print(f"initial ideal squarefree: {report.squarefree}")

# The same report, as the CLI would emit it (gbei verify --m 2 --parts 2,2).
print()
print(json.dumps(report.to_json(), indent=2))
