"""Cosine <-> sine re-expansion at the coefficient level.

A function on [0, pi] given by a finite cosine series is re-expanded in
the sine basis (and vice versa) without ever leaving coefficient space;
the quadrature oracle then confirms every output against the defining
integrals (2/pi) int f(t) sin(nt) dt computed by Gauss-Legendre panels.

Run:  python3 demos/02_reexpansion.py
"""

import numpy as np

from reexpansion import (
    Coeff1D,
    ParityVector,
    ReexpandSpec,
    WeightExponent,
    cos_to_sin,
    quadrature_oracle,
    quadrature_oracle_box,
    reexpand_nd,
    sin_to_cos,
)

COS = ParityVector((1,))
SIN = ParityVector((0,))
Q0 = WeightExponent((0,))

print("=" * 72)
print("1. f(t) = cos t  as a sine series")
print("=" * 72)

e1 = Coeff1D.impulse(1)
b = cos_to_sin(e1, (1, 8))
print("\n  n    b_n (map)      b_n (oracle)")
for n in range(1, 9):
    oracle = quadrature_oracle(e1, COS, Q0, n)
    print(f"  {n}   {b[n].real:+.8f}   {oracle.real:+.8f}")
print("\nOdd outputs vanish (the parity restriction k - n odd), and the")
print("coefficients decay like 1/n: cos t alone does not satisfy")
print("f(0) = 0, so its sine re-expansion converges only conditionally.")

print()
print("=" * 72)
print("2. A boundary-compatible combination: f = cos t - cos 3t")
print("=" * 72)

a = Coeff1D.from_dict({1: 1, 3: -1})
b = cos_to_sin(a, (1, 12))
print("\nf(0) = f(pi) = 0 for this fixture; now b_n ~ n^-3:")
print("  n    b_n")
for n in range(2, 13, 2):
    print(f"  {n:2d}   {b[n].real:+.8f}")
worst = 0.0
oracle = quadrature_oracle_box(a, COS, Q0, [(1, 12)])
worst = np.max(np.abs(oracle.values - b.values))
print(f"\nmax |map - oracle| over the window: {worst:.2e}")

print()
print("=" * 72)
print("3. Sine to cosine, and the b_0 convention")
print("=" * 72)

c = sin_to_cos(e1, (0, 6))
print("\nsin t re-expanded in cosines:")
for n in range(0, 7):
    print(f"  n = {n}:  {c[n].real:+.8f}")
mean = (2 / np.pi) * 2.0  # (2/pi) int_0^pi sin t dt
print(f"\nb_0 = {c[0].real:.8f} is the raw formula value 4/pi = {mean:.8f}:")
print("twice the mean of sin t, so a reconstruction uses b_0/2 as the")
print("constant term.")

print()
print("=" * 72)
print("4. Removing the cosine-face values first (subtract_mean)")
print("=" * 72)

spec = ReexpandSpec(COS, Q0, ((1, 6),), subtract_mean=True)
b_sub = reexpand_nd(e1, spec)
plain = cos_to_sin(e1, (1, 6))
print("\nre-expanding f - f(0) for f = cos t:")
print("  n    plain          subtract_mean")
for n in range(1, 7):
    print(f"  {n}   {plain[n].real:+.8f}    {b_sub[n].real:+.8f}")
print("\nOnly odd n change: the subtracted constant re-expands to")
print("-(2/pi) * 2/n there, e.g. b_1 shifts by -4/pi.")
