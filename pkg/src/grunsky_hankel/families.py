"""
Parametric families of univalent functions.

Every constructor except :func:`raw_coefficients` returns a function that
is univalent by construction (starlike via a Herglotz measure, or convex via
the Alexander correspondence), so downstream checks can treat violations of
class-S inequalities as genuine failures rather than bad input.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Sequence

import numpy as np
from scipy.special import binom

from .errors import InvalidAtoms, NotCertified, NotNormalized
from .series import TruncatedSeries

DEFAULT_ORDER = 12
ATOM_TOL = 1e-12


class Family(str, Enum):
    IDENTITY = "identity"
    KOEBE = "koebe"
    KFOLD_KOEBE = "kfold_koebe"
    HERGLOTZ = "herglotz"
    CONVEX = "convex"
    RAW = "raw"


# subclasses each family is known to lie in
_STARLIKE = {Family.IDENTITY, Family.KOEBE, Family.KFOLD_KOEBE, Family.HERGLOTZ, Family.CONVEX}


@dataclass(frozen=True, eq=False)
class SchlichtFunction:
    """Normalized Taylor coefficients ``a_0 = 0, a_1 = 1, a_2, ...`` plus provenance."""

    coeffs: TruncatedSeries
    family: Family
    params: tuple = ()
    certified: bool = False

    def __post_init__(self):
        c = self.coeffs.coeffs
        if c.size < 2 or c[0] != 0 or c[1] != 1:
            raise NotNormalized("SchlichtFunction needs a_0 = 0 and a_1 = 1 exactly")

    @property
    def order(self) -> int:
        return self.coeffs.order

    def a(self, n: int) -> complex:
        return complex(self.coeffs.coeffs[n])

    @property
    def starlike(self) -> bool:
        return self.certified and self.family in _STARLIKE

    @property
    def convex(self) -> bool:
        return self.certified and (
            self.family is Family.CONVEX or self.family is Family.IDENTITY
        )

    @property
    def label(self) -> str:
        if not self.params:
            return self.family.value
        return f"{self.family.value}({', '.join(_fmt(p) for p in self.params)})"

    def conj(self) -> SchlichtFunction:
        return SchlichtFunction(self.coeffs.conj(), self.family, self.params, self.certified)


def _fmt(p) -> str:
    if isinstance(p, complex):
        return f"{p.real:.6g}{p.imag:+.6g}j"
    if isinstance(p, float):
        return f"{p:.6g}"
    return str(p)


def _normalized(c: np.ndarray) -> np.ndarray:
    # pin a_0, a_1 exactly; recurrences can leave 1 - 1e-16
    c = np.array(c, dtype=complex)
    c[0] = 0.0
    c[1] = 1.0
    return c


@dataclass(frozen=True)
class HerglotzAtoms:
    """Atomic probability measure ``sum w_k delta_{x_k}`` on the unit circle."""

    weights: tuple
    points: tuple

    def __post_init__(self):
        w = np.asarray(self.weights, dtype=float)
        x = np.asarray(self.points, dtype=complex)
        if w.ndim != 1 or w.shape != x.shape or w.size == 0:
            raise InvalidAtoms("weights and points must be equal-length non-empty sequences")
        if np.any(w < 0):
            raise InvalidAtoms("weights must be non-negative")
        if abs(w.sum() - 1.0) > ATOM_TOL:
            raise InvalidAtoms(f"weights sum to {w.sum()!r}, not 1")
        if np.any(np.abs(np.abs(x) - 1.0) > ATOM_TOL):
            raise InvalidAtoms("points must lie on the unit circle")
        object.__setattr__(self, "weights", tuple(float(v) for v in w))
        object.__setattr__(self, "points", tuple(complex(v) for v in x))

    @classmethod
    def from_angles(cls, weights: Sequence[float], angles: Sequence[float]) -> HerglotzAtoms:
        return cls(tuple(weights), tuple(np.exp(1j * np.asarray(angles, dtype=float))))

    def moments(self, order: int) -> np.ndarray:
        """Coefficients ``p_0 = 1, p_m = 2 sum w_k x_k**m`` of the Caratheodory function."""
        w = np.asarray(self.weights)
        x = np.asarray(self.points)
        m = np.arange(order + 1)
        p = 2.0 * (w[None, :] * x[None, :] ** m[:, None]).sum(axis=1)
        p[0] = 1.0
        return p


def identity(N: int = DEFAULT_ORDER) -> SchlichtFunction:
    c = np.zeros(N + 1, dtype=complex)
    c[1] = 1.0
    return SchlichtFunction(TruncatedSeries(c), Family.IDENTITY, (), True)


def koebe_rotation(theta: float = 0.0, N: int = DEFAULT_ORDER) -> SchlichtFunction:
    """``e^{-i theta} k(e^{i theta} z)`` with ``a_n = n e^{i(n-1) theta}``."""
    n = np.arange(N + 1)
    c = n * np.exp(1j * (n - 1) * theta)
    return SchlichtFunction(TruncatedSeries(_normalized(c)), Family.KOEBE, (float(theta),), True)


def kfold_koebe(k: int, N: int = DEFAULT_ORDER) -> SchlichtFunction:
    """``z / (1 - z**k)**(2/k)``, the k-fold symmetric Koebe function."""
    if k < 1:
        raise ValueError("k must be a positive integer")
    c = np.zeros(N + 1, dtype=complex)
    # (1 - w)^(-2/k) = sum_m binom(2/k + m - 1, m) w^m
    for m in range((N - 1) // k + 1):
        c[1 + k * m] = binom(2.0 / k + m - 1, m)
    return SchlichtFunction(TruncatedSeries(_normalized(c)), Family.KFOLD_KOEBE, (int(k),), True)


def starlike_from_herglotz(atoms: HerglotzAtoms, N: int = DEFAULT_ORDER) -> SchlichtFunction:
    """Solve ``z f'/f = P`` for the Caratheodory function ``P`` of ``atoms``.

    With ``f = z (1 + a_2 z + ...)`` the relation gives
    ``(n - 1) a_n = sum_{j=1}^{n-1} p_{n-j} a_j``.
    """
    if not isinstance(atoms, HerglotzAtoms):
        raise InvalidAtoms("expected HerglotzAtoms")
    p = atoms.moments(N)
    a = np.zeros(N + 1, dtype=complex)
    a[1] = 1.0
    for n in range(2, N + 1):
        a[n] = np.dot(p[n - 1 : 0 : -1], a[1:n]) / (n - 1)
    params = tuple(atoms.weights) + tuple(atoms.points)
    return SchlichtFunction(TruncatedSeries(_normalized(a)), Family.HERGLOTZ, params, True)


def convex_from_starlike(g: SchlichtFunction, N: int | None = None) -> SchlichtFunction:
    """Alexander transform: the ``f`` with ``z f'(z) = g(z)``, i.e. ``a_n(f) = a_n(g) / n``."""
    if not g.starlike:
        raise NotCertified(f"{g.label} is not a certified starlike function")
    N = g.order if N is None else N
    c = g.coeffs.truncate(N).coeffs.copy()
    n = np.arange(N + 1)
    c[1:] = c[1:] / n[1:]
    fam = Family.IDENTITY if g.family is Family.IDENTITY else Family.CONVEX
    params = () if fam is Family.IDENTITY else (g.label,)
    return SchlichtFunction(TruncatedSeries(_normalized(c)), fam, params, True)


def raw_coefficients(a: Sequence[complex], N: int | None = None) -> SchlichtFunction:
    """Wrap ``a = (a_1, a_2, ...)`` without any membership check; never certified."""
    a = np.asarray(a, dtype=complex)
    if a.size == 0 or abs(a[0] - 1.0) > 0:
        raise NotNormalized("raw coefficients must start with a_1 = 1")
    N = a.size if N is None else N
    c = np.zeros(N + 1, dtype=complex)
    m = min(a.size, N)
    c[1 : m + 1] = a[:m]
    return SchlichtFunction(TruncatedSeries(c), Family.RAW, tuple(complex(v) for v in a), False)


def random_atoms(rng: np.random.Generator, k: int) -> HerglotzAtoms:
    w = rng.dirichlet(np.ones(k))
    w = w / w.sum()
    w[-1] = 1.0 - w[:-1].sum()
    angles = rng.uniform(0.0, 2 * math.pi, size=k)
    return HerglotzAtoms.from_angles(np.clip(w, 0.0, None), angles)


def roots_of_unity_atoms(k: int) -> HerglotzAtoms:
    return HerglotzAtoms.from_angles([1.0 / k] * k, 2 * math.pi * np.arange(k) / k)


def build(name: str, params: Sequence = (), N: int = DEFAULT_ORDER) -> SchlichtFunction:
    """Construct a family member from a name and a flat parameter list.

    ``koebe``: ``[theta]``; ``kfold_koebe``: ``[k]``; ``herglotz`` and
    ``convex``: ``[w_1, theta_1, w_2, theta_2, ...]`` with weights summing
    to 1; ``raw``: ``[a_1, a_2, ...]``; ``identity``: no parameters.
    """
    fam = Family(name)
    params = list(params)
    if fam is Family.IDENTITY:
        return identity(N)
    if fam is Family.KOEBE:
        return koebe_rotation(float(params[0]) if params else 0.0, N)
    if fam is Family.KFOLD_KOEBE:
        if len(params) != 1 or float(params[0]) != int(float(params[0])):
            raise ValueError("kfold_koebe takes a single integer parameter k")
        return kfold_koebe(int(float(params[0])), N)
    if fam in (Family.HERGLOTZ, Family.CONVEX):
        if not params or len(params) % 2:
            raise InvalidAtoms("herglotz parameters are (weight, angle) pairs")
        vals = [float(v) for v in params]
        atoms = HerglotzAtoms.from_angles(vals[0::2], vals[1::2])
        g = starlike_from_herglotz(atoms, N)
        return g if fam is Family.HERGLOTZ else convex_from_starlike(g)
    return raw_coefficients([complex(v) for v in params], N)
