"""
Hankel determinants on extremal functions.

Every rotation of the Koebe function has |H2(2)| = |a2 a4 - a3^2| = 1, which
is the sharp value on the starlike class.  The 3-fold Koebe function has
H3(1) = -4/9.  Each determinant is computed three ways: pivoted elimination,
the closed cofactor formula, and the expression in Grunsky coefficients.
"""

import math

import numpy as np

from grunsky_hankel import (
    grunsky_table,
    h22_direct,
    h22_grunsky,
    h31_direct,
    h31_grunsky,
    hankel_det,
    kfold_koebe,
    koebe_rotation,
)

print("theta     |H2(2)| (elim)   |H2(2)| (direct)   |H2(2)| (Grunsky)")
for theta in np.linspace(0, 2 * math.pi, 6, endpoint=False):
    f = koebe_rotation(theta)
    T = grunsky_table(f, 5)
    print(f"{theta:5.3f}     {abs(hankel_det(f, 2, 2)):.12f}   {abs(h22_direct(f)):.12f}     {abs(h22_grunsky(T)):.12f}")

f = kfold_koebe(3)
T = grunsky_table(f, 5)
print("\n3-fold Koebe H3(1):")
print(f"  elimination  {hankel_det(f, 3, 1).value.real:+.15f}")
print(f"  cofactors    {h31_direct(f).real:+.15f}")
print(f"  Grunsky form {h31_grunsky(T).real:+.15f}")
print(f"  -4/9         {-4 / 9:+.15f}")
