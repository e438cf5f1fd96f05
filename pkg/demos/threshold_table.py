"""
threshold_table.py

Every sharp beta in one table, then a cross-check: the same numbers fall
out of the potential G evaluated at -1 and 1.

Run:  python demos/threshold_table.py
"""

import numpy as np

from nephsub import bounds as bd
from nephsub.dominants import POTENTIAL_CASES, Family

rows = bd.closed_form_bounds()
rows += [bd.janowski_beta(0.5, -0.5, c) for c in POTENTIAL_CASES]
rows += [bd.hg_lemniscate_bound(), bd.hg_linear_bound()]

print(f"{'family':14s}{'case':8s}{'beta1':>12s}{'beta2':>12s}{'beta*':>12s}  endpoint")
for b in rows:
    b1 = "-" if b.beta1 is None else f"{b.beta1:.6f}"
    b2 = "-" if b.beta2 is None else f"{b.beta2:.6f}"
    print(f"{b.family.value:14s}{b.case.value:8s}{b1:>12s}{b2:>12s}{b.value:12.6f}  {b.sharp_endpoint.name}")

# The closed forms are one route; the endpoint equations q(-1)=1/3 and
# q(1)=5/3 are another. They should agree to rounding.
gaps = []
for b in bd.closed_form_bounds():
    pair = bd.potential_components(b.family, b.case)
    gaps.append(max(abs(pair[0] - b.beta1), abs(pair[1] - b.beta2)))
print("\nlargest formula/endpoint gap:", max(gaps))

# sigmoid and sine have odd potentials, so at j=0 both cusps bind at once
for fam in (Family.SIGMOID, Family.SINE):
    b = bd.sharp_beta(fam, POTENTIAL_CASES[0])
    print(fam.value, "j0 components:", np.round(b.components, 12))

# disk radii for the rational and Janowski targets
print("\nrational disk radii:", [round(bd.corollary_disk_threshold(Family.RATIONAL, c), 6) for c in POTENTIAL_CASES])
print("janowski(0.5,-0.5) radii:",
      [round(bd.corollary_disk_threshold(Family.JANOWSKI, c, 0.5, -0.5), 6) for c in POTENTIAL_CASES])
