"""
Searching for extremal functions with multi-start Nelder-Mead.

The search space is starlike functions generated by k Herglotz atoms
(weights via softmax, positions on the circle).  With one atom the family is
just the rotated Koebe functions, so the maximum of |H2(2)| is 1.  With four
atoms the search for |H3(1)| finds the 3-fold Koebe value 4/9.  For convex
functions (the Alexander transform) |H2(2)| climbs towards 1/8.
"""

from grunsky_hankel import SearchSpec, multi_start_search

runs = [
    SearchSpec(family="herglotz", atoms=1, objective="abs_h22", restarts=8, seed=0),
    SearchSpec(family="herglotz", atoms=4, objective="abs_h31", restarts=8, seed=0),
    SearchSpec(family="convex", atoms=2, objective="abs_h22", restarts=8, seed=0),
]
for spec in runs:
    res = multi_start_search(spec)
    a = res.best_function.coeffs.coeffs
    print(f"{spec.family:8s} k={spec.atoms} {spec.objective}: best {res.best_value:.10f} "
          f"({res.evals_used} evaluations)")
    print(f"    witness a2..a5 = {[complex(round(x.real, 4), round(x.imag, 4)) for x in a[2:6]]}")
    print(f"    restart values  = {[round(v, 6) for _, v in res.history]}")
