"""
Truncated power series in one and two variables with complex coefficients.

A :class:`TruncatedSeries` of order ``N`` stores ``c_0 .. c_N``; everything
beyond ``z**N`` is unknown rather than zero, so binary operations return a
result whose order is the smaller of the two operand orders.

A :class:`BivariateSeries` of total degree ``M`` stores ``c(i, j)`` for
``i + j <= M`` in a dense square array; the entries with ``i + j > M`` are
kept at zero and never read.

    >>> u = TruncatedSeries([1, -1, 0, 0])
    >>> series_log(u).coeffs.real.round(4)
    array([ 0.    , -1.    , -0.5   , -0.3333])
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import InsufficientOrder, NonUnitConstantTerm, NotNormalized

UNIT_TOL = 1e-12


def _frozen(a) -> np.ndarray:
    arr = np.array(a, dtype=complex)
    arr.setflags(write=False)
    return arr


@dataclass(frozen=True, eq=False)
class TruncatedSeries:
    """Univariate series ``c_0 + c_1 z + ... + c_N z**N``."""

    coeffs: np.ndarray

    def __post_init__(self):
        arr = _frozen(self.coeffs)
        if arr.ndim != 1 or arr.size == 0:
            raise ValueError("coefficients must be a non-empty 1-d sequence")
        object.__setattr__(self, "coeffs", arr)

    @classmethod
    def zeros(cls, order: int) -> TruncatedSeries:
        return cls(np.zeros(order + 1, dtype=complex))

    @classmethod
    def one(cls, order: int) -> TruncatedSeries:
        c = np.zeros(order + 1, dtype=complex)
        c[0] = 1.0
        return cls(c)

    @property
    def order(self) -> int:
        return self.coeffs.size - 1

    def __len__(self):
        return self.coeffs.size

    def __getitem__(self, n):
        return self.coeffs[n]

    def __repr__(self):
        return f"TruncatedSeries(order={self.order}, coeffs={self.coeffs!r})"

    def truncate(self, order: int) -> TruncatedSeries:
        if order > self.order:
            raise InsufficientOrder(f"cannot extend order {self.order} series to {order}")
        return TruncatedSeries(self.coeffs[: order + 1])

    def _common(self, other):
        if not isinstance(other, TruncatedSeries):
            c = np.zeros_like(self.coeffs)
            c[0] = other
            other = TruncatedSeries(c)
        n = min(self.order, other.order)
        return self.coeffs[: n + 1], other.coeffs[: n + 1]

    def __add__(self, other):
        a, b = self._common(other)
        return TruncatedSeries(a + b)

    __radd__ = __add__

    def __sub__(self, other):
        a, b = self._common(other)
        return TruncatedSeries(a - b)

    def __rsub__(self, other):
        a, b = self._common(other)
        return TruncatedSeries(b - a)

    def __neg__(self):
        return TruncatedSeries(-self.coeffs)

    def __mul__(self, other):
        if isinstance(other, TruncatedSeries):
            return series_mul(self, other)
        return TruncatedSeries(self.coeffs * other)

    def __rmul__(self, other):
        return TruncatedSeries(self.coeffs * other)

    def __truediv__(self, other):
        return TruncatedSeries(self.coeffs / other)

    def derivative(self) -> TruncatedSeries:
        """Term-by-term derivative; the order drops by one."""
        if self.order == 0:
            return TruncatedSeries([0.0])
        return TruncatedSeries(self.coeffs[1:] * np.arange(1, self.order + 1))

    def dilate(self, k: int) -> TruncatedSeries:
        """Substitute ``z -> z**k`` (order becomes ``k*N``)."""
        c = np.zeros(k * self.order + 1, dtype=complex)
        c[::k] = self.coeffs
        return TruncatedSeries(c)

    def conj(self) -> TruncatedSeries:
        return TruncatedSeries(np.conj(self.coeffs))


def series_mul(u: TruncatedSeries, v: TruncatedSeries) -> TruncatedSeries:
    """Cauchy product truncated at ``min(u.order, v.order)``."""
    n = min(u.order, v.order)
    return TruncatedSeries(np.convolve(u.coeffs[: n + 1], v.coeffs[: n + 1])[: n + 1])


def _check_unit(c0):
    if abs(c0 - 1.0) > UNIT_TOL:
        raise NonUnitConstantTerm(f"constant term {c0} is not 1")


def series_log(u: TruncatedSeries) -> TruncatedSeries:
    """Principal logarithm of a series with constant term 1.

    Uses ``L' = u'/u`` in recurrence form,
    ``n L_n = n u_n - sum_{k=1}^{n-1} k L_k u_{n-k}``.
    """
    c = u.coeffs
    _check_unit(c[0])
    N = u.order
    L = np.zeros(N + 1, dtype=complex)
    k = np.arange(N + 1)
    for n in range(1, N + 1):
        acc = n * c[n] - np.dot(k[1:n] * L[1:n], c[n - 1 : 0 : -1])
        L[n] = acc / n
    return TruncatedSeries(L)


def series_exp(u: TruncatedSeries) -> TruncatedSeries:
    """``exp(u)`` for a series with zero constant term, scaled by ``exp(u_0)`` otherwise."""
    c = u.coeffs
    N = u.order
    E = np.zeros(N + 1, dtype=complex)
    E[0] = np.exp(c[0])
    k = np.arange(N + 1)
    for n in range(1, N + 1):
        E[n] = np.dot(k[1 : n + 1] * c[1 : n + 1], E[n - 1 :: -1][:n]) / n
    return TruncatedSeries(E)


def series_pow(u: TruncatedSeries, alpha: float) -> TruncatedSeries:
    """``u**alpha`` on the branch equal to 1 at the origin."""
    if alpha == 0:
        _check_unit(u.coeffs[0])
        return TruncatedSeries.one(u.order)
    return series_exp(alpha * series_log(u))


@dataclass(frozen=True, eq=False)
class BivariateSeries:
    """Series ``sum c(i, j) t**i z**j`` truncated to ``i + j <= M``.

    ``coeffs[i, j]`` is the coefficient of ``t**i z**j``.
    """

    coeffs: np.ndarray

    def __post_init__(self):
        arr = np.array(self.coeffs, dtype=complex)
        if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
            raise ValueError("bivariate coefficients must be a square array")
        arr = arr * _triangle(arr.shape[0] - 1)
        arr.setflags(write=False)
        object.__setattr__(self, "coeffs", arr)

    @property
    def total_degree(self) -> int:
        return self.coeffs.shape[0] - 1

    def __getitem__(self, ij):
        i, j = ij
        if i < 0 or j < 0 or i + j > self.total_degree:
            raise IndexError(f"({i}, {j}) outside total degree {self.total_degree}")
        return self.coeffs[i, j]

    def __add__(self, other: BivariateSeries) -> BivariateSeries:
        m = min(self.total_degree, other.total_degree)
        return BivariateSeries(self.coeffs[: m + 1, : m + 1] + other.coeffs[: m + 1, : m + 1])

    def __sub__(self, other: BivariateSeries) -> BivariateSeries:
        m = min(self.total_degree, other.total_degree)
        return BivariateSeries(self.coeffs[: m + 1, : m + 1] - other.coeffs[: m + 1, : m + 1])

    def __mul__(self, other):
        if isinstance(other, BivariateSeries):
            return bivariate_mul(self, other)
        return BivariateSeries(self.coeffs * other)

    __rmul__ = __mul__

    def is_symmetric(self, tol: float = 0.0) -> bool:
        return bool(np.all(np.abs(self.coeffs - self.coeffs.T) <= tol))


def _triangle(M: int) -> np.ndarray:
    i, j = np.indices((M + 1, M + 1))
    return (i + j <= M).astype(float)


def bivariate_mul(u: BivariateSeries, v: BivariateSeries) -> BivariateSeries:
    """Truncated product; total degree is the smaller of the two."""
    M = min(u.total_degree, v.total_degree)
    a = u.coeffs[: M + 1, : M + 1]
    b = v.coeffs[: M + 1, : M + 1]
    out = np.zeros((M + 1, M + 1), dtype=complex)
    for i in range(M + 1):
        for j in range(M + 1 - i):
            if a[i, j] == 0:
                continue
            # shift b by (i, j) and keep the triangle
            out[i:, j:] += a[i, j] * b[: M + 1 - i, : M + 1 - j]
    return BivariateSeries(out)


def bivariate_log(F: BivariateSeries) -> BivariateSeries:
    """Principal logarithm via ``log(1 + u) = sum (-1)**(k+1) u**k / k``.

    ``u = F - 1`` has no constant term, so ``u**k`` starts at total degree
    ``k`` and the sum terminates at ``k = M``.
    """
    _check_unit(F.coeffs[0, 0])
    M = F.total_degree
    uc = F.coeffs.copy()
    uc[0, 0] = 0.0
    u = BivariateSeries(uc)
    acc = np.zeros_like(uc)
    term = u
    for k in range(1, M + 1):
        acc = acc + ((-1) ** (k + 1) / k) * term.coeffs
        term = bivariate_mul(term, u)
    return BivariateSeries(acc)


def bivariate_exp(L: BivariateSeries) -> BivariateSeries:
    """``exp(L)`` for ``L`` with zero constant term (roundtrip check for ``bivariate_log``)."""
    M = L.total_degree
    if L.coeffs[0, 0] != 0:
        raise ValueError("bivariate_exp expects a zero constant term")
    out = np.zeros((M + 1, M + 1), dtype=complex)
    out[0, 0] = 1.0
    term = BivariateSeries(out.copy())
    for k in range(1, M + 1):
        term = bivariate_mul(term, L) * (1.0 / k)
        out = out + term.coeffs
    return BivariateSeries(out)


def divided_difference_kernel(f: TruncatedSeries, M: int | None = None) -> BivariateSeries:
    """Coefficients of ``(f(t) - f(z)) / (t - z)`` up to total degree ``M``.

    ``(t**n - z**n)/(t - z) = sum_{i+j=n-1} t**i z**j``, so the entry at
    ``(i, j)`` is simply ``c_{i+j+1}``.
    """
    c = f.coeffs
    if f.order < 1 or abs(c[0]) > UNIT_TOL or abs(c[1] - 1.0) > UNIT_TOL:
        raise NotNormalized("kernel needs c_0 = 0 and c_1 = 1")
    if M is None:
        M = f.order - 1
    if M + 1 > f.order:
        raise InsufficientOrder(f"total degree {M} needs series order {M + 1}, have {f.order}")
    i, j = np.indices((M + 1, M + 1))
    deg = i + j
    F = np.where(deg <= M, c[np.minimum(deg + 1, f.order)], 0.0)
    return BivariateSeries(F)


def as_series(coeffs: Sequence[complex] | np.ndarray | TruncatedSeries) -> TruncatedSeries:
    if isinstance(coeffs, TruncatedSeries):
        return coeffs
    return TruncatedSeries(coeffs)
