"""Uhlmann fidelity and its computable two-sided companions.

For density matrices rho and sigma:

    F(rho, sigma) = (Tr sqrt(sqrt(sigma) rho sqrt(sigma)))^2
    E(rho, sigma) = Tr(rho sigma) + sqrt(2[(Tr rho sigma)^2 - Tr(rho sigma rho sigma)])
    G(rho, sigma) = Tr(rho sigma) + sqrt(1 - Tr rho^2) sqrt(1 - Tr sigma^2)

with E <= F <= G always, and all three equal for d = 2 or when either
argument is pure.
"""

from dataclasses import dataclass

import numpy as np

from .errors import DimensionMismatchError, OrderingViolationError
from .linalg import EIGENVALUE_FLOOR, hermitian_sqrt, purity

__all__ = [
    "FidelityTriple",
    "fidelity",
    "sub_fidelity",
    "super_fidelity",
    "fidelity_triple",
]

# Positive rounding noise under a square root is amplified to ~1e-8, which
# would break the exact collapse identities (pure argument, d = 2) at their
# documented tolerances. Quantities that are analytically zero in those cases
# are therefore floored to zero below the resolution of float64:
RADICAND_FLOOR = 1e-12  # (Tr rho sigma)^2 - Tr(rho sigma rho sigma)
PURITY_DEFICIT_FLOOR = 1e-13  # 1 - Tr(rho^2)


@dataclass(frozen=True)
class FidelityTriple:
    """Sub-fidelity, fidelity, super-fidelity of one pair, sandwich-ordered."""

    sub: float
    fid: float
    sup: float


def _check_same_dim(rho: np.ndarray, sigma: np.ndarray) -> None:
    if rho.shape != sigma.shape:
        raise DimensionMismatchError(
            f"DimensionMismatch: {rho.shape} vs {sigma.shape}"
        )


def sqrt_overlap_eigenvalues(rho: np.ndarray, sigma: np.ndarray) -> np.ndarray:
    """Eigenvalues of sqrt(sigma) rho sqrt(sigma), noise-floored at zero."""
    root = hermitian_sqrt(sigma)
    evals = np.linalg.eigvalsh(root @ rho @ root)
    evals[evals < EIGENVALUE_FLOOR] = 0.0
    return evals


def fidelity(rho: np.ndarray, sigma: np.ndarray) -> float:
    """Uhlmann fidelity (Tr sqrt(sqrt(sigma) rho sqrt(sigma)))^2 in [0, 1]."""
    _check_same_dim(rho, sigma)
    evals = sqrt_overlap_eigenvalues(rho, sigma)
    return float(min(np.sqrt(evals).sum() ** 2, 1.0))


def sub_fidelity(rho: np.ndarray, sigma: np.ndarray) -> float:
    """Lower companion E of the fidelity; equals it for d = 2 or pure inputs."""
    _check_same_dim(rho, sigma)
    overlap = np.trace(rho @ sigma).real
    cross = rho @ sigma
    radicand = overlap**2 - np.trace(cross @ cross).real
    if abs(radicand) < RADICAND_FLOOR:
        radicand = 0.0
    return float(min(overlap + np.sqrt(2.0 * max(radicand, 0.0)), 1.0))


def _purity_deficit(rho: np.ndarray) -> float:
    deficit = 1.0 - purity(rho)
    return deficit if deficit > PURITY_DEFICIT_FLOOR else 0.0


def super_fidelity(rho: np.ndarray, sigma: np.ndarray) -> float:
    """Upper companion G of the fidelity; never below it."""
    _check_same_dim(rho, sigma)
    overlap = np.trace(rho @ sigma).real
    value = overlap + np.sqrt(_purity_deficit(rho)) * np.sqrt(_purity_deficit(sigma))
    return float(min(value, 1.0))


def fidelity_triple(rho: np.ndarray, sigma: np.ndarray, tol: float = 1e-9) -> FidelityTriple:
    """All three overlaps at once, with the sandwich ordering enforced.

    Raises:
        OrderingViolationError: if E <= F <= G fails beyond ``tol``; that
            signals a numerical defect, not a property of the inputs.
    """
    sub = sub_fidelity(rho, sigma)
    fid = fidelity(rho, sigma)
    sup = super_fidelity(rho, sigma)
    if sub > fid + tol or fid > sup + tol:
        raise OrderingViolationError(
            f"OrderingViolation: E={sub!r}, F={fid!r}, G={sup!r} (tol {tol:g})"
        )
    return FidelityTriple(sub=sub, fid=fid, sup=sup)
