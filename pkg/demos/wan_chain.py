"""Six integrals of products of complete elliptic integrals, one number.

Run: python3 demos/wan_chain.py
"""

import math

from lek.catalog import evaluate_case, get_case

target = math.gamma(0.25) ** 8 / (128 * math.pi ** 2)
r = evaluate_case(get_case("eq49_wan_chain"), {})
print(f"target Gamma(1/4)^8/(128 pi^2) = {target:.16g}")
for i, m in enumerate(r.members, 1):
    print(f"  member {i}: {m:.16g}   rel err {abs(m - target) / target:.1e}")
print("all agree:", r.passed)

# the cubic moments behind the chain: int K^3 dk / int K^3 k dk = 3/2
from lek.quadrature import LOG, SMOOTH, integrate  # noqa: E402
from lek.specfun import elliptic_kp  # noqa: E402


def k3(k, ka, kb, weight):
    # K(k) through its complementary modulus sqrt(1-k^2) = sqrt(kb (1+k)), exact near k=1
    return elliptic_kp((kb * (1 + k)) ** 0.5) ** 3 * (k if weight else 1.0)


a = integrate(lambda k, ka, kb: k3(k, ka, kb, False), 0, 1, (SMOOTH, LOG), 1e-12, offsets=True)
b = integrate(lambda k, ka, kb: k3(k, ka, kb, True), 0, 1, (SMOOTH, LOG), 1e-12, offsets=True)
print(f"ratio int K^3 / int k K^3 = {a.value / b.value:.15f}  (expect 1.5)")
