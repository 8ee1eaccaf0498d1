"""The finite Hilbert (Tricomi) transform and its antisymmetric pairing.

Run: python3 demos/tricomi_pairing.py
"""

import math

import numpy as np

from lek.catalog import tricomi_pairing, tricomi_pnu_pair, tricomi_transform
from lek.catalog.tricomi import sqrt_weighted_cubic
from lek.legendre import p_nu

# integrands take (xi, 1 + xi, 1 - xi) so endpoint distances stay exact


def one(t, ta, tb):
    return np.ones_like(t)


# T[1](x) = ln((1+x)/(1-x))/pi
for x in (-0.6, 0.0, 0.3):
    print(f"T[1]({x:+.1f}) = {tricomi_transform(one, x):+.15f}"
          f"   closed form {math.log((1 + x) / (1 - x)) / math.pi:+.15f}")

f = sqrt_weighted_cubic((0.4, -0.3, 0.7, 0.0))
g = sqrt_weighted_cubic((0.1, 0.0, 0.0, 0.5))


print(f"int f T[g] + int g T[f] = {tricomi_pairing(f, g):.2e}   (vanishes)")

nu = -0.5
for x in (0.2, 0.5):
    r = tricomi_pnu_pair(nu, x)
    closed = (p_nu(nu, x) ** 2 - p_nu(nu, -x) ** 2) / math.sin(nu * math.pi)
    print(f"PV of P P(-), nu={nu}, x={x}: {r.lhs:.12f}  closed form {complex(closed).real:.12f}")
