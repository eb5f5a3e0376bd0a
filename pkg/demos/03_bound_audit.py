"""
Auditing the bound chains for |H2(2)| and |H3(1)|.

audit_chain evaluates every intermediate inequality of the two estimates on a
concrete function and reports bound - quantity for each step.  Steps that hold
on all of class S must be non-negative; a few informational entries are
expected to go negative on some functions.

The auxiliary maximization of psi(t, s) = sqrt(1 - t^2 - 3 s^2) + sqrt(5) t s
is where the chain is weakest: the maximum is 4/sqrt(15), not 1.
"""

import numpy as np

from grunsky_hankel.audit import SOUND_RESIDUALS, audit_chain, maximize_phi, maximize_psi
from grunsky_hankel.families import convex_from_starlike, random_atoms, starlike_from_herglotz

phi_rep, psi_rep = maximize_phi(), maximize_psi()
print(f"phi: max {phi_rep.value:.12f} at t = {phi_rep.arg[0]:.1e} (claimed {phi_rep.claimed}), decreasing: {phi_rep.monotone_decreasing}")
print(f"psi: max {psi_rep.value:.12f} at {tuple(round(x, 8) for x in psi_rep.arg)} (claimed {psi_rep.claimed})")
print(f"     discrepancy {psi_rep.discrepancy:+.6f}; 4/sqrt(15) = {4 / np.sqrt(15):.12f}")

rng = np.random.default_rng(7)
worst = {}
informational = {}
for _ in range(200):
    g = starlike_from_herglotz(random_atoms(rng, int(rng.integers(1, 5))))
    for f in (g, convex_from_starlike(g)):
        rep = audit_chain(f, psi_max=psi_rep.value)
        for k, v in rep.chain_residuals.items():
            d = worst if k in SOUND_RESIDUALS else informational
            d[k] = min(d.get(k, np.inf), v)

print("\nminimum residual over 400 functions (sound steps):")
for k, v in worst.items():
    print(f"  {k:20s} {v:+.3e}")
print("\ninformational steps:")
for k, v in informational.items():
    print(f"  {k:20s} {v:+.3e}")
