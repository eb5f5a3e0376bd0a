"""
Multi-start Nelder-Mead search over certified families.

Parameters are unconstrained reals: for a ``k``-atom family the vector is
``[u_1 .. u_k, theta_1 .. theta_k]`` where the weights are ``softmax(u)``
and the atoms sit at ``exp(i theta_j)``.  Every point therefore decodes to
a valid Herglotz measure, and the optimizer never sees a constraint.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable

import numpy as np
from scipy.optimize import minimize

from .audit import AuditReport, audit_chain
from .errors import BadParametrization
from .families import (
    DEFAULT_ORDER,
    HerglotzAtoms,
    SchlichtFunction,
    convex_from_starlike,
    identity,
    starlike_from_herglotz,
)
from .hankel import h22_direct, h31_direct

SEARCH_FAMILIES = ("herglotz", "convex", "identity")
SIMPLEX_SCALE = 0.25
NM_TOL = 1e-9
TIE_TOL = 1e-12

OBJECTIVES: dict[str, Callable[[SchlichtFunction], float]] = {
    "abs_h22": lambda f: abs(h22_direct(f)),
    "abs_h31": lambda f: abs(h31_direct(f)),
    "abs_a2": lambda f: abs(f.a(2)),
    "abs_fekete_szego": lambda f: abs(f.a(3) - f.a(2) ** 2),
}


def register_objective(name: str, fn: Callable[[SchlichtFunction], float]) -> None:
    """Add a named coefficient functional usable as ``SearchSpec.objective``."""
    OBJECTIVES[name] = fn


@dataclass(frozen=True)
class SearchSpec:
    family: str = "herglotz"
    atoms: int = 4
    objective: str = "abs_h22"
    restarts: int = 8
    seed: int = 0
    max_evals: int = 20000
    truncation: int = DEFAULT_ORDER

    def __post_init__(self):
        if self.family not in SEARCH_FAMILIES:
            raise ValueError(f"unknown search family {self.family!r}")
        if self.objective not in OBJECTIVES:
            raise ValueError(f"unknown objective {self.objective!r}")
        if self.restarts < 1:
            raise ValueError("restarts must be >= 1")
        if self.max_evals < self.restarts:
            raise ValueError("max_evals must be >= restarts")
        if not 1 <= self.atoms <= 16:
            raise ValueError("atoms must be between 1 and 16")
        if not 0 <= self.seed < 2**64:
            raise ValueError("seed must be an unsigned 64-bit integer")

    @property
    def dim(self) -> int:
        return 0 if self.family == "identity" else 2 * self.atoms


@dataclass
class SearchResult:
    best_value: float
    best_params: np.ndarray
    best_function: SchlichtFunction
    evals_used: int
    history: list
    budget_exhausted: bool = False
    audit: AuditReport | None = field(default=None, repr=False)


def simplex_weights(u) -> np.ndarray:
    """Softmax onto the probability simplex, exact sum 1 up to rounding."""
    u = np.asarray(u, dtype=float)
    e = np.exp(u - u.max())
    w = e / e.sum()
    w[-1] = max(1.0 - w[:-1].sum(), 0.0)
    return w / w.sum()


def decode(spec: SearchSpec, params) -> SchlichtFunction:
    params = np.asarray(params, dtype=float)
    if params.shape != (spec.dim,):
        raise BadParametrization(f"{spec.family} with {spec.atoms} atoms takes {spec.dim} parameters")
    if spec.family == "identity":
        return identity(spec.truncation)
    k = spec.atoms
    atoms = HerglotzAtoms.from_angles(simplex_weights(params[:k]), params[k:])
    g = starlike_from_herglotz(atoms, spec.truncation)
    return g if spec.family == "herglotz" else convex_from_starlike(g)


def evaluate_objective(spec: SearchSpec, params) -> float:
    """Objective value of the decoded family member; non-finite values become ``-inf``."""
    if not np.all(np.isfinite(np.asarray(params, dtype=float))):
        return -math.inf
    v = float(OBJECTIVES[spec.objective](decode(spec, params)))
    return v if math.isfinite(v) else -math.inf


class _BudgetExhausted(Exception):
    pass


def _initial_point(spec: SearchSpec, restart: int) -> np.ndarray:
    rng = np.random.default_rng([spec.seed, restart])
    k = spec.atoms
    return np.concatenate([rng.normal(size=k), rng.uniform(0.0, 2 * math.pi, size=k)])


def _run_restart(spec: SearchSpec, restart: int, budget: int) -> tuple:
    """One restart: Nelder-Mead, re-seeded from its own optimum until it stops improving."""
    x0 = _initial_point(spec, restart)
    state = {"n": 0, "best": -math.inf, "x": x0.copy()}

    def neg(x):
        if state["n"] >= budget:
            raise _BudgetExhausted
        state["n"] += 1
        v = evaluate_objective(spec, x)
        if v > state["best"]:
            state["best"], state["x"] = v, np.array(x, dtype=float)
        return -v if v > -math.inf else math.inf

    exhausted = False
    try:
        x = x0
        prev = -math.inf
        while True:
            sim = np.vstack([x, x + SIMPLEX_SCALE * np.eye(x.size)])
            minimize(
                neg,
                x,
                method="Nelder-Mead",
                options={
                    "initial_simplex": sim,
                    "xatol": NM_TOL,
                    "fatol": NM_TOL,
                    "maxfev": budget,
                    "maxiter": 100 * budget,
                },
            )
            if state["best"] <= prev + TIE_TOL:
                break
            prev, x = state["best"], state["x"]
    except _BudgetExhausted:
        exhausted = True
    return state["best"], state["x"], state["n"], exhausted


def multi_start_search(spec: SearchSpec, map_fn=map) -> SearchResult:
    """Seeded multi-start search; ``map_fn`` may be a parallel executor's ``map``.

    The budget ``max_evals`` is split evenly over restarts (remainder to the
    first ones).  Results are merged in restart order, earlier restarts
    winning ties, so the outcome does not depend on execution order.
    """
    if spec.dim == 0:
        f = decode(spec, [])
        v = float(OBJECTIVES[spec.objective](f))
        return SearchResult(v, np.zeros(0), f, 1, [(0, v)], False, audit_chain(f))
    base, extra = divmod(spec.max_evals, spec.restarts)
    budgets = [base + (1 if r < extra else 0) for r in range(spec.restarts)]
    runs = list(map_fn(lambda rb: _run_restart(spec, *rb), enumerate(budgets)))
    history = [(r, run[0]) for r, run in enumerate(runs)]
    top = max(v for _, v in history)
    # earliest restart within TIE_TOL of the top value supplies the witness
    best_r = next(r for r, v in history if v >= top - TIE_TOL)
    best_x = runs[best_r][1]
    f = decode(spec, best_x)
    return SearchResult(
        best_value=top,
        best_params=best_x,
        best_function=f,
        evals_used=sum(r[2] for r in runs),
        history=history,
        budget_exhausted=any(r[3] for r in runs),
        audit=audit_chain(f),
    )
