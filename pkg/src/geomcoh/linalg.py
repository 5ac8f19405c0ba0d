"""Dense complex Hermitian linear algebra underpinning every measure.

All operators are plain ``numpy`` arrays of complex128. Density matrices are
validated once at the boundary (:func:`validate_density`) and then trusted by
the measure functions, which keeps the hot paths free of repeated checks.
"""

from dataclasses import dataclass

import numpy as np

from .errors import (
    NegativeEigenvalueError,
    NotHermitianError,
    NotPositiveError,
    NotSquareError,
    TraceNotOneError,
)

__all__ = [
    "EIGENVALUE_FLOOR",
    "ValidationConfig",
    "Spectrum",
    "validate_density",
    "is_density",
    "hermitian_sqrt",
    "spectrum",
    "purity",
    "dephase",
    "von_neumann_entropy",
]

# Eigenvalues this far below the norm scale of a PSD matrix are rounding
# noise; taking their square root would inject ~1e-8 errors into quantities
# that are analytically exact (sqrt of a projector, bounds at pure states).
EIGENVALUE_FLOOR = 1e-13


@dataclass(frozen=True)
class ValidationConfig:
    """Tolerances applied by :func:`validate_density`.

    hermitian_tol: max absolute per-entry deviation from the conjugate
        transpose before the matrix is rejected.
    eigenvalue_clamp: eigenvalues in ``[-eigenvalue_clamp, 0)`` are set to 0;
        anything more negative is a real PSD violation.
    trace_tol: max ``|Tr - 1|`` that is silently renormalized away.
    """

    hermitian_tol: float = 1e-10
    eigenvalue_clamp: float = 1e-10
    trace_tol: float = 1e-8


@dataclass(frozen=True)
class Spectrum:
    """Eigendecomposition of a Hermitian matrix, eigenvalues descending."""

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray  # unitary, columns match eigenvalues

    def reconstruct(self) -> np.ndarray:
        v = self.eigenvectors
        return (v * self.eigenvalues) @ v.conj().T


def validate_density(raw, config: ValidationConfig | None = None) -> np.ndarray:
    """Validate and clean a raw matrix into a density matrix.

    The input must be square with d >= 2, Hermitian within tolerance, PSD up
    to the eigenvalue clamp, and have unit trace within tolerance. Sub-clamp
    negative eigenvalues are zeroed and the trace renormalized, so the
    returned array is exactly PSD with trace 1.

    Raises:
        NotSquareError, NotHermitianError, NotPositiveError, TraceNotOneError
    """
    cfg = config or ValidationConfig()
    mat = np.asarray(raw, dtype=complex)
    if mat.ndim != 2 or mat.shape[0] != mat.shape[1] or mat.shape[0] < 2:
        raise NotSquareError(
            f"NotSquare: expected a d x d matrix with d >= 2, got shape {mat.shape}"
        )
    herm_violation = np.abs(mat - mat.conj().T).max()
    if herm_violation > cfg.hermitian_tol:
        raise NotHermitianError(
            f"NotHermitian: max |M - M^dag| entry is {herm_violation:.3e} "
            f"(tolerance {cfg.hermitian_tol:.1e})"
        )
    trace = mat.trace()
    if abs(trace - 1.0) > cfg.trace_tol:
        raise TraceNotOneError(
            f"TraceNotOne: trace is {trace:.12g} (tolerance {cfg.trace_tol:.1e})"
        )
    # Symmetrizing below tolerance stabilizes the eigendecomposition and the
    # downstream matrix square roots.
    mat = 0.5 * (mat + mat.conj().T)
    evals, evecs = np.linalg.eigh(mat)
    if evals[0] < -cfg.eigenvalue_clamp:
        raise NotPositiveError(
            f"NotPositive: eigenvalue {evals[0]:.3e} below -{cfg.eigenvalue_clamp:.1e}"
        )
    evals = np.maximum(evals, 0.0)
    mat = (evecs * evals) @ evecs.conj().T
    mat /= mat.trace().real
    return 0.5 * (mat + mat.conj().T)


def is_density(mat: np.ndarray, config: ValidationConfig | None = None) -> bool:
    """True if ``mat`` passes :func:`validate_density`."""
    try:
        validate_density(mat, config)
    except (NotSquareError, NotHermitianError, NotPositiveError, TraceNotOneError):
        return False
    return True


def spectrum(mat: np.ndarray) -> Spectrum:
    """Hermitian eigendecomposition with eigenvalues sorted descending."""
    evals, evecs = np.linalg.eigh(mat)
    order = np.argsort(evals)[::-1]
    return Spectrum(eigenvalues=evals[order], eigenvectors=evecs[:, order])


def hermitian_sqrt(mat: np.ndarray, clamp: float = 1e-10) -> np.ndarray:
    """Unique PSD square root of a PSD Hermitian matrix.

    Eigenvalues in ``[-clamp, EIGENVALUE_FLOOR)`` are treated as rounding
    noise and zeroed.

    Raises:
        NegativeEigenvalueError: if any eigenvalue is below ``-clamp``.
    """
    evals, evecs = np.linalg.eigh(mat)
    if evals[0] < -clamp:
        raise NegativeEigenvalueError(
            f"NegativeEigenvalue: {evals[0]:.3e} below -{clamp:.1e}"
        )
    evals = np.where(evals < EIGENVALUE_FLOOR, 0.0, evals)
    root = (evecs * np.sqrt(evals)) @ evecs.conj().T
    return 0.5 * (root + root.conj().T)


def purity(rho: np.ndarray) -> float:
    """Tr(rho^2), in [1/d, 1]."""
    return float(np.vdot(rho, rho).real)


def dephase(rho: np.ndarray) -> np.ndarray:
    """Diagonal part of rho in the reference basis (an incoherent state)."""
    return np.diag(np.diag(rho).real).astype(complex)


def von_neumann_entropy(rho: np.ndarray) -> float:
    """S(rho) = -Tr(rho ln rho) in nats, with the 0 ln 0 = 0 convention."""
    evals = np.linalg.eigvalsh(rho)
    evals = evals[evals > 0.0]
    return float(-(evals * np.log(evals)).sum())
