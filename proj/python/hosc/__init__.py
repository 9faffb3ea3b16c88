"""Heisenberg oscillator spectral toolkit."""

from ._core import (
    ConvergenceError,
    DomainError,
    HoscError,
    InternalError,
    InvalidParameter,
    NearDeltaError,
    ResamplingError,
    TruncationError,
    UnsupportedDegree,
    classify_orbit,
    diagonalize,
    eigenfunction,
    eigenfunction_grid,
    eigenvalue,
    fd_eigenvalues,
    gauss_nodes,
    heat_apply,
    hermite_function,
    hermite_polynomial,
    kernel_kappa,
    kernel_q_rho,
    mehler_q,
    spectrum,
    spectrum_bottom,
    suites,
    verify,
)

__all__ = [name for name in dir() if not name.startswith("_")]
