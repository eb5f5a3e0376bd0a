"""Grunsky coefficients, Hankel determinants and bound audits for univalent functions."""

from .audit import (
    AuditReport,
    ExtremumReport,
    audit_chain,
    bound_terms,
    maximize_phi,
    maximize_psi,
    phi,
    psi,
)
from .families import (
    Family,
    HerglotzAtoms,
    SchlichtFunction,
    convex_from_starlike,
    identity,
    kfold_koebe,
    koebe_rotation,
    raw_coefficients,
    starlike_from_herglotz,
)
from .grunsky import (
    GrunskyTable,
    InequalityProbe,
    grunsky_residual,
    grunsky_table,
    sqrt_transform,
    verify_coefficient_relations,
)
from .hankel import HankelValue, h22_direct, h22_grunsky, h31_direct, h31_grunsky, hankel_det
from .search import SearchResult, SearchSpec, evaluate_objective, multi_start_search
from .series import (
    BivariateSeries,
    TruncatedSeries,
    bivariate_log,
    divided_difference_kernel,
    series_log,
    series_mul,
    series_pow,
)

__version__ = "0.1.0"
