"""From odd integer pairs to drive parameters.

Every coprime pair of odd integers p > q generates a Pythagorean
triple (a, b, c) = ((p^2-q^2)/2, pq, (p^2+q^2)/2), and every triple
generates a one-parameter family of two-level drives (detunings and
Rabi frequencies) that realize a complete population transfer at
tau = pi / sqrt(2c). This script walks the enumeration and the map.
"""

import numpy as np

from pythcpt import (
    OddPair,
    coupling_params,
    enumerate_primitive_pairs,
    lab_couplings,
    triple_from_pair,
)

print("Primitive generating pairs with c <= 65")
print(f"{'p':>4} {'q':>4} {'a':>6} {'b':>6} {'c':>6} {'tau':>10}")
for pair in enumerate_primitive_pairs(65):
    t = triple_from_pair(pair)
    params = coupling_params(t)
    print(f"{pair.p:>4} {pair.q:>4} {t.a:>6.0f} {t.b:>6.0f} {t.c:>6.0f} {params.tau:>10.6f}")

print()
print("The (4, 3, 5) family at a few values of the free parameter k:")
triple = triple_from_pair(OddPair(3, 1))
for k in (0.0, 0.5, -2.0):
    p = coupling_params(triple, k)
    v12, v23, v34, v14 = lab_couplings(p)
    print(
        f"  k={k:+.1f}: (d1, o1, d2, o2) = "
        f"({p.delta1:+.4f}, {p.omega1:+.4f}, {p.delta2:+.4f}, {p.omega2:+.4f})  "
        f"V = ({v12:+.4f}, {v23:+.4f}, {v34:+.4f}, {v14:+.4f})"
    )
    # the defining invariants of the family: both coupling sums give c^2
    assert abs(v12**2 + v14**2 - triple.c**2) < 1e-9
    assert abs(v23**2 + v34**2 - triple.c**2) < 1e-9
print("  invariant V12^2 + V14^2 = V23^2 + V34^2 = c^2 holds for every k")

print()
print("Non-primitive pairs rescale a primitive family:")
base = coupling_params(triple_from_pair(OddPair(3, 1)))
big = coupling_params(triple_from_pair(OddPair(9, 3)))
ratios = np.array(big.as_tuple()) / np.array(base.as_tuple())
print(f"  (9, 3) / (3, 1) parameter ratios: {ratios}  (tau ratio {base.tau / big.tau:.1f})")

print()
print("Sign choices give genuinely different drives:")
flipped = coupling_params(triple_from_pair(OddPair(3, 1), sign_a=-1))
print(f"  (+4, 3, 5): {coupling_params(triple_from_pair(OddPair(3, 1))).as_tuple()}")
print(f"  (-4, 3, 5): {flipped.as_tuple()}")
