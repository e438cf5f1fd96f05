"""
hypergeometric_dominants.py

The two dominants built from 2F1: the lemniscate one, whose threshold is
the root of tau(beta), and the linear one with beta* = 1/2. Also a look at
the sampled order of starlikeness against Kustner's lower bound.

Run:  python demos/hypergeometric_dominants.py
"""

import numpy as np

from nephsub import bounds as bd
from nephsub.numerics.gamma import gamma
from nephsub.verifier import range_of_tau_delta, starlikeness_order_estimate

# tau and delta over a log grid; tau climbs from -1/3 to 2/3, delta stays positive
for row in range_of_tau_delta(np.geomspace(0.05, 50, 9)):
    print(f"beta {row.beta:8.4f}   tau {row.tau:+.6f}   delta {row.delta:+.6f}")

b = bd.beta_L()
print("\nbeta_L =", b, "  tau(beta_L) =", bd.tau(b))

# At z = 1 the value is a Gamma ratio, which gives an independent check of tau.
bb = 1 / b
a, c = -0.5, bb + 1
print("Gauss summation at beta_L:", gamma(c) * gamma(c - a - bb) / (gamma(c - a) * gamma(c - bb)))

# Sampled infimum of Re(1 + zF'/F) vs the lower bound 1 - ab/(b+c)
for beta in (0.2, 1.0, 5.0):
    est = starlikeness_order_estimate(0.5, 1 / beta + 1, 1 / beta + 2, 0.99, 64)
    lb = bd.kustner_lower_bound(0.5, 1 / beta + 1, 1 / beta + 2)
    print(f"beta {beta:4.1f}: sampled {est.inf_estimate:.5f} >= bound {lb:.5f}")
