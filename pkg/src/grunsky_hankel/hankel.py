"""Hankel determinants of Taylor coefficients and their Grunsky-coefficient forms."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import InsufficientOrder
from .families import SchlichtFunction
from .grunsky import GrunskyTable, a5_square_term


@dataclass(frozen=True)
class HankelValue:
    q: int
    n: int
    value: complex
    source: str = ""

    def __post_init__(self):
        if not np.isfinite(self.value):
            raise ArithmeticError(f"non-finite Hankel determinant H_{self.q}({self.n})")

    def __abs__(self):
        return abs(self.value)


def det_partial_pivot(A) -> complex:
    """Determinant by Gaussian elimination with partial pivoting."""
    A = np.array(A, dtype=complex)
    n = A.shape[0]
    det = 1.0 + 0.0j
    for k in range(n):
        p = k + int(np.argmax(np.abs(A[k:, k])))
        if A[p, k] == 0:
            return 0j
        if p != k:
            A[[k, p]] = A[[p, k]]
            det = -det
        det *= A[k, k]
        A[k + 1 :, k:] -= np.outer(A[k + 1 :, k] / A[k, k], A[k, k:])
    return complex(det)


def hankel_matrix(f: SchlichtFunction, q: int, n: int) -> np.ndarray:
    if q < 1 or n < 1:
        raise ValueError("q and n must be positive")
    if f.order < n + 2 * q - 2:
        raise InsufficientOrder(f"H_{q}({n}) needs a_{n + 2 * q - 2}, series order is {f.order}")
    a = f.coeffs.coeffs
    i, j = np.indices((q, q))
    return a[n + i + j]


def hankel_det(f: SchlichtFunction, q: int, n: int) -> HankelValue:
    """``H_q(n)``: determinant of ``[a_{n+i+j}]`` for ``0 <= i, j < q``."""
    return HankelValue(q, n, det_partial_pivot(hankel_matrix(f, q, n)), f.label)


def _need(f: SchlichtFunction, k: int):
    if f.order < k:
        raise InsufficientOrder(f"need a_{k}, series order is {f.order}")


def h22_direct(f: SchlichtFunction) -> complex:
    _need(f, 4)
    a2, a3, a4 = f.a(2), f.a(3), f.a(4)
    return a2 * a4 - a3**2


def h31_direct(f: SchlichtFunction) -> complex:
    """Cofactor expansion along the first row (``a_1 = 1``)."""
    _need(f, 5)
    a2, a3, a4, a5 = f.a(2), f.a(3), f.a(4), f.a(5)
    return a3 * (a2 * a4 - a3**2) - a4 * (a4 - a2 * a3) + a5 * (a3 - a2**2)


def h22_grunsky(T: GrunskyTable) -> complex:
    """``4 w11 w33 - (4/3) w11**4 - (2 w13 - w11**2)**2``."""
    w11, w13, w33 = T[1, 1], T[1, 3], T[3, 3]
    return 4 * w11 * w33 - (4 / 3) * w11**4 - (2 * w13 - w11**2) ** 2


def h31_terms(T: GrunskyTable, printed: bool = False) -> tuple:
    """The three summands of the Grunsky form of ``H_3(1)``.

    ``-2 w13 (4 w13**2 - w11**4)``, ``-(2 w33 - (2/3) w11**3)**2`` and
    ``(2 w35 + 5 w13**2)(2 w13 - w11**2)``; ``printed`` swaps ``w13**2``
    for ``w15**2`` in the last factor.
    """
    w11, w13, w33, w35 = T[1, 1], T[1, 3], T[3, 3], T[3, 5]
    t1 = -2 * w13 * (4 * w13**2 - w11**4)
    t2 = -((2 * w33 - (2 / 3) * w11**3) ** 2)
    t3 = (2 * w35 + a5_square_term(T, printed)) * (2 * w13 - w11**2)
    return t1, t2, t3


def h31_grunsky(T: GrunskyTable, printed: bool = False) -> complex:
    return complex(sum(h31_terms(T, printed)))
