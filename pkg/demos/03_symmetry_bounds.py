"""Symmetry-degree bounds from index non-vanishing and Weyl-order divisibility.

A quasitoric manifold over the n-cube carries a twisted Dirac operator with
nonzero index, which caps its symmetry degree at 3n and restricts the simple
groups that can act to those whose Weyl-group order divides chi = 2^n.
"""

import json

from qtoric import alpha, cube_pair, divisibility_candidates, symmetry_report

print("alpha table (max dim/rank over simple groups of rank <= l):")
for l in range(1, 9):
    value, witnesses = alpha(l)
    names = ", ".join(g.name for g in witnesses) or "none new"
    print(f"  l = {l}: alpha = {value}  witnesses of rank {l}: {names}")

print()
for n in (3, 4, 5):
    model = cube_pair(n).to_index_model()
    rep = symmetry_report(model, index_nonvanishing=True)
    names = [g.name for g in rep.simple_candidates]
    print(f"cube:{n}  chi = {rep.chi}  N(M) <= {rep.n_max}  simple candidates: {names}")

print()
print("chi = 46 = 2*6*2^2 - 2 leaves only SU(2):",
      [g.name for g in divisibility_candidates(46, 6)])
print("odd chi leaves nothing:", [g.name for g in divisibility_candidates(45, 6)])

print()
print("full report for the 3-cube manifold:")
print(json.dumps(symmetry_report(cube_pair(3).to_index_model(),
                                 index_nonvanishing=True).as_dict(), indent=2))
