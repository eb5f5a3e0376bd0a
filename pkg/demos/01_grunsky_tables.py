"""
Grunsky tables of a few classical univalent functions.

The Koebe function k(z) = z/(1-z)^2 is extremal for almost every coefficient
problem in class S, and its square-root transform is simply z/(1-z^2).  Its
Grunsky table is therefore sparse: w11 = 1, w33 = 1/3, everything else zero.
The 3-fold Koebe function z/(1-z^3)^(2/3) has w11 = 0 because a2 = 0.

We print both tables and check the five coefficient relations that recover
a2..a5 from the omegas.
"""

import numpy as np

from grunsky_hankel import grunsky_table, kfold_koebe, koebe_rotation, verify_coefficient_relations


def show(name, f, max_index=5):
    T = grunsky_table(f, max_index)
    print(f"\n{name}: a2..a5 = {np.round(f.coeffs.coeffs[2:6].real, 6)}")
    M = T.matrix()
    idx = list(range(1, max_index + 1, 2))
    print("        " + "".join(f"s={s:<10d}" for s in idx))
    for i, r in enumerate(idx):
        print(f"  r={r}   " + "".join(f"{M[i, j].real:<12.6f}" for j in range(len(idx))))
    res = verify_coefficient_relations(f, T)
    printed = verify_coefficient_relations(f, T, printed=True)[3]
    print(f"  max relation residual: {np.max(np.abs(res)):.1e}")
    print(f"  a5 relation with w15^2 in place of w13^2: residual {abs(printed):.4f}")


show("Koebe", koebe_rotation(0.0))
show("3-fold Koebe", kfold_koebe(3))
