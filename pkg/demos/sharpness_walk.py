"""
sharpness_walk.py

Slide beta through the sharp value for a few dominants and watch the
largest implicit value on the boundary image cross zero. Below beta* an
image point escapes past a cusp; at beta* it sits on the cusp; above, the
whole image is strictly inside.

Run:  python demos/sharpness_walk.py
"""

import numpy as np

from nephsub.bounds import bound_for
from nephsub.dominants import Case, DominantSpec, Family, eval_dominant
from nephsub.verifier import verify_containment

cases = [
    (Family.LEMB, Case.J0),
    (Family.EXPONENTIAL, Case.J1),
    (Family.CARDIOID, Case.J2),
    (Family.HG_LINEAR, Case.LINEAR),
]
factors = [0.9, 0.99, 0.999, 1.0, 1.01, 1.5]

for fam, case in cases:
    b = bound_for(fam, case)
    spec = DominantSpec(fam, case, b.value)
    print(f"\n{fam.value}/{case.value}  beta* = {b.value:.9f}  ({b.sharp_endpoint.name})")
    for f in factors:
        rep = verify_containment(spec.with_beta(f * b.value))
        print(f"  {f:6.3f} beta*   worst {rep.worst_value:+.3e} at t={rep.worst_angle:+.4f}  {rep.verdict.value}")

# The excess above zero shrinks like the cube of the endpoint overshoot,
# because the implicit function is cubic along the axis near each cusp.
spec = DominantSpec(Family.CARDIOID, Case.J0, 2.5)
for f in (0.9, 0.99, 0.999):
    q1 = eval_dominant(spec.with_beta(f * 2.5), 1.0).real
    rep = verify_containment(spec.with_beta(f * 2.5))
    print(f"overshoot {q1 - 5 / 3:.2e}   worst {rep.worst_value:.2e}   ratio {rep.worst_value / (q1 - 5 / 3) ** 3:.3f}")

# boundary image at beta*, for plotting elsewhere
t = np.linspace(-np.pi, np.pi, 9)
print("\nlemb/j0 image at beta*:", np.round(eval_dominant(DominantSpec(Family.LEMB, Case.J0, bound_for(Family.LEMB, Case.J0).value), np.exp(1j * t)), 4))
