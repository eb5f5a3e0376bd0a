"""
Grunsky coefficients of the odd square-root transform ``f2(z) = sqrt(f(z**2))``.

The table stores ``omega[r, s]`` for odd ``r, s`` only, keyed by the odd
indices themselves (``(1, 1), (1, 3), (3, 3), ...``), which is how they
enter the coefficient relations for ``a_2 .. a_5``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .errors import DimensionMismatch, InsufficientOrder
from .families import SchlichtFunction
from .series import (
    BivariateSeries,
    TruncatedSeries,
    bivariate_log,
    divided_difference_kernel,
    series_pow,
)

DEFAULT_MAX_INDEX = 7
PARITY_TOL = 1e-10
SYMMETRY_TOL = 1e-12


@dataclass(frozen=True, eq=False)
class GrunskyTable:
    entries: dict
    max_index: int
    source: SchlichtFunction | None = None
    log_kernel: BivariateSeries | None = field(default=None, repr=False)

    def __getitem__(self, rs) -> complex:
        r, s = rs
        if r % 2 == 0 or s % 2 == 0:
            raise KeyError(f"only odd index pairs are stored, got {rs}")
        if max(r, s) > self.max_index:
            raise InsufficientOrder(f"omega{rs} beyond max_index {self.max_index}")
        return self.entries[(r, s)]

    def omega(self, r: int, s: int) -> complex:
        return self[r, s]

    def matrix(self) -> np.ndarray:
        """Dense ``P x P`` array with ``[p, q] = omega_{2p+1, 2q+1}`` (0-based)."""
        P = (self.max_index + 1) // 2
        W = np.empty((P, P), dtype=complex)
        for p in range(P):
            for q in range(P):
                W[p, q] = self.entries[(2 * p + 1, 2 * q + 1)]
        return W

    @classmethod
    def from_values(cls, values: dict, max_index: int) -> GrunskyTable:
        """Build a table from a partial ``{(r, s): omega}`` map; missing pairs are zero.

        Only one of ``(r, s)`` and ``(s, r)`` needs to be given.
        """
        entries = {}
        for r in range(1, max_index + 1, 2):
            for s in range(1, max_index + 1, 2):
                entries[(r, s)] = complex(values.get((r, s), values.get((s, r), 0.0)))
        return cls(entries, max_index)

    @classmethod
    def zero(cls, max_index: int = DEFAULT_MAX_INDEX) -> GrunskyTable:
        return cls.from_values({}, max_index)


@dataclass(frozen=True)
class InequalityProbe:
    """Test vector ``(x_1, x_3, x_5, ...)`` for the odd-index Grunsky inequality.

    ``Q`` is the number of outer terms kept; ``None`` means as many as the
    table allows.
    """

    x: tuple
    Q: int | None = None

    def __post_init__(self):
        object.__setattr__(self, "x", tuple(complex(v) for v in self.x))


CANONICAL_PROBES = (
    InequalityProbe((1.0, 0.0, 0.0)),
    InequalityProbe((0.0, 1.0, 0.0)),
)


def sqrt_transform(f: SchlichtFunction) -> TruncatedSeries:
    """Odd series ``z * sqrt(f(z**2) / z**2)`` of order ``2N - 1``."""
    c = f.coeffs.coeffs
    g = TruncatedSeries(c[1:]).dilate(2)  # f(z^2)/z^2
    h = series_pow(g, 0.5).coeffs.copy()
    h[1::2] = 0.0
    out = np.zeros(h.size + 1, dtype=complex)
    out[1:] = h
    return TruncatedSeries(out)


def grunsky_table(f: SchlichtFunction, max_index: int = DEFAULT_MAX_INDEX) -> GrunskyTable:
    """Grunsky coefficients ``omega_{r,s}`` of ``sqrt(f(z**2))`` for odd ``r, s <= max_index``.

    The function must carry coefficients through ``a_{max_index+1}``.
    """
    if max_index < 1 or max_index % 2 == 0:
        raise ValueError("max_index must be a positive odd integer")
    if f.order < max_index + 1:
        raise InsufficientOrder(
            f"omega up to index {max_index} needs a_{max_index + 1}, series order is {f.order}"
        )
    f2 = sqrt_transform(f)
    M = 2 * max_index
    L = bivariate_log(divided_difference_kernel(f2.truncate(M + 1), M))
    # f2 odd => the kernel is even in (t, z) jointly; odd total degrees must vanish
    i, j = np.indices(L.coeffs.shape)
    odd_total = ((i + j) % 2 == 1) & (i + j <= M)
    worst = float(np.max(np.abs(L.coeffs[odd_total]), initial=0.0))
    if worst > PARITY_TOL:
        raise ArithmeticError(f"parity check failed: |omega| = {worst:.3e} at odd total degree")
    entries = {}
    for r in range(1, max_index + 1, 2):
        for s in range(1, max_index + 1, 2):
            entries[(r, s)] = complex(L.coeffs[r, s])
    return GrunskyTable(entries, max_index, f, L)


def a5_square_term(T: GrunskyTable, printed: bool = False) -> complex:
    """The quadratic omega term of the ``a_5`` relation, ``5 w13**2``.

    The relation is sometimes quoted with ``5 w15**2`` instead; that form is
    only right when ``w13**2 = w15**2`` (e.g. for the Koebe function) and is
    available with ``printed=True`` so the discrepancy can be measured.
    """
    w = T[1, 5] if printed else T[1, 3]
    return 5 * w**2


def coefficients_from_omega(T: GrunskyTable, printed: bool = False) -> np.ndarray:
    """``a_2 .. a_5`` predicted by the Grunsky-coefficient relations (index 0 is ``a_2``)."""
    w11, w13, w33, w35 = T[1, 1], T[1, 3], T[3, 3], T[3, 5]
    return np.array(
        [
            2 * w11,
            2 * w13 + 3 * w11**2,
            2 * w33 + 8 * w11 * w13 + (10 / 3) * w11**3,
            2 * w35
            + 8 * w11 * w33
            + a5_square_term(T, printed)
            + 18 * w11**2 * w13
            + (7 / 3) * w11**4,
        ]
    )


def verify_coefficient_relations(
    f: SchlichtFunction, T: GrunskyTable, printed: bool = False
) -> np.ndarray:
    """Residuals ``lhs - rhs`` of the four coefficient relations and the constraint.

    Order: ``a_2, a_3, a_4, a_5`` relations, then
    ``3 w15 - 3 w11 w13 + w11**3 - 3 w33``.  ``printed`` selects the
    ``5 w15**2`` variant of the ``a_5`` relation (see :func:`a5_square_term`).
    """
    if T.max_index < 5:
        raise InsufficientOrder("relations need omega up to index 5")
    if f.order < 5:
        raise InsufficientOrder("relations need a_2 .. a_5")
    a = np.array([f.a(n) for n in range(2, 6)])
    w11, w13, w33, w15 = T[1, 1], T[1, 3], T[3, 3], T[1, 5]
    constraint = 3 * w15 - 3 * w11 * w13 + w11**3 - 3 * w33
    return np.append(a - coefficients_from_omega(T, printed), constraint)


def grunsky_residual(T: GrunskyTable, probe: InequalityProbe) -> float:
    """``sum_p |x_p|**2/(2p-1) - sum_q (2q-1) |sum_p omega_{2p-1,2q-1} x_p|**2``.

    Truncating the outer sum only drops non-negative terms, so a genuine
    class-S table gives a residual ``>= 0`` up to rounding.
    """
    x = np.asarray(probe.x, dtype=complex)
    P_avail = (T.max_index + 1) // 2
    Q = P_avail if probe.Q is None else probe.Q
    if x.size > P_avail or Q > P_avail or Q < 1:
        raise DimensionMismatch(
            f"probe of length {x.size} with Q={Q} needs max_index >= {2 * max(x.size, Q) - 1}"
        )
    W = T.matrix()[: x.size, :Q]
    odd = 2 * np.arange(max(x.size, Q)) + 1
    lhs = float(np.sum(odd[:Q] * np.abs(x @ W) ** 2))
    rhs = float(np.sum(np.abs(x) ** 2 / odd[: x.size]))
    return rhs - lhs


def random_probes(rng: np.random.Generator, n: int, length: int = 3) -> list:
    """Unit-norm random complex probes, preceded by the two canonical ones."""
    out = list(CANONICAL_PROBES) if length == 3 else []
    for _ in range(n):
        v = rng.normal(size=length) + 1j * rng.normal(size=length)
        out.append(InequalityProbe(tuple(v / np.linalg.norm(v))))
    return out


def symmetry_defect(T: GrunskyTable) -> float:
    return max(abs(T.entries[(r, s)] - T.entries[(s, r)]) for r, s in T.entries)
