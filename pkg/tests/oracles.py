"""Independent reference computations used by the audit and acceptance tests."""

import math

import numpy as np
from scipy.optimize import minimize

# frozen output of psi_bruteforce(); the same value is 4/sqrt(15) at (1/sqrt(5), 1/sqrt(15))
PSI_ORACLE_VALUE = 1.0327955589886444
PSI_ORACLE_ARG = (0.4472135879223865, 0.2581988887850876)


def _psi_unit_square(t, u):
    # s = u * smax(t) maps [0,1]^2 onto the psi domain
    s = u * np.sqrt(np.clip(1 - t * t, 0, None)) / math.sqrt(3)
    return np.sqrt(np.clip(1 - t * t - 3 * s * s, 0, None)) + math.sqrt(5) * t * s, s


def psi_bruteforce(n=2000):
    """Dense n x n grid on the unit-square parametrization, then bounded L-BFGS-B polish."""
    t = np.linspace(0, 1, n)
    T, U = np.meshgrid(t, t, indexing="ij")
    V, _ = _psi_unit_square(T, U)
    i = np.unravel_index(np.argmax(V), V.shape)

    def neg(x):
        return -float(_psi_unit_square(x[0], x[1])[0])

    r = minimize(
        neg, [T[i], U[i]], method="L-BFGS-B", bounds=[(0, 1), (0, 1)],
        options={"ftol": 1e-15, "gtol": 1e-12},
    )
    value = max(-r.fun, float(V[i]))
    s = float(_psi_unit_square(r.x[0], r.x[1])[1])
    return value, (float(r.x[0]), s)


def phi_bruteforce(n=1_000_001):
    t = np.linspace(0, 1, n)
    v = 2 * (1 - t) + math.sqrt(3) * t * np.sqrt(1 - t)
    i = int(np.argmax(v))
    return float(v[i]), float(t[i])
