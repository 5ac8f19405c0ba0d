"""Constructors for the named state families and seeded random ensembles.

The mixed family of interest here interpolates between the maximally
coherent pure state and the maximally mixed state,

    rho_m(d, p) = p |psi_d><psi_d| + (1 - p)/d * I,   0 < p <= 1,

with |psi_d> the equal-amplitude superposition. Its square root has a closed
form used both as an oracle for the eigendecomposition square root and to
evaluate the tight upper bound on geometric coherence.
"""

from dataclasses import dataclass

import numpy as np

from .errors import (
    BadDimensionError,
    BadParameterError,
    BadRankError,
    NegativeEntryError,
    NotNormalizedError,
)

__all__ = [
    "McmsSqrtCoefficients",
    "incoherent",
    "max_coherent_state",
    "mcms",
    "mcms_sqrt",
    "mcms_sqrt_coefficients",
    "detect_mcms",
    "random_density",
    "random_pure",
]


def incoherent(probs) -> np.ndarray:
    """Diagonal density matrix from a point of the probability simplex."""
    x = np.asarray(probs, dtype=float)
    if x.ndim != 1 or x.size < 2:
        raise BadDimensionError(
            f"BadDimension: expected a probability vector of length >= 2, got shape {x.shape}"
        )
    if x.min() < 0.0:
        raise NegativeEntryError(f"NegativeEntry: min entry {x.min():.3e} < 0")
    total = x.sum()
    if abs(total - 1.0) > 1e-12:
        raise NotNormalizedError(f"NotNormalized: entries sum to {total:.15g}")
    return np.diag(x / total).astype(complex)


def max_coherent_state(d: int) -> np.ndarray:
    """Projector onto (1/sqrt(d)) sum_i |i>; every entry is 1/d."""
    if d < 2:
        raise BadDimensionError(f"BadDimension: d must be >= 2, got {d}")
    return np.full((d, d), 1.0 / d, dtype=complex)


def _check_mcms_params(d: int, p: float) -> None:
    if d < 2:
        raise BadParameterError(f"BadParameter: d must be >= 2, got {d}")
    if not 0.0 < p <= 1.0:
        raise BadParameterError(f"BadParameter: p must be in (0, 1], got {p}")


def mcms(d: int, p: float) -> np.ndarray:
    """Maximally coherent mixed state rho_m(d, p).

    Diagonal entries are 1/d, off-diagonal entries p/d; the spectrum is
    p + (1-p)/d once and (1-p)/d with multiplicity d-1.
    """
    _check_mcms_params(d, p)
    return p * max_coherent_state(d) + ((1.0 - p) / d) * np.eye(d, dtype=complex)


@dataclass(frozen=True)
class McmsSqrtCoefficients:
    """Coefficients of the sqrt ansatz for rho_m evaluated at uniform weights.

    a multiplies the identity-like diagonal part, b the rank-one part:
    a = sqrt((1-p)/d), b = (sqrt(1-p+dp) - sqrt(1-p))/d.
    """

    a: float
    b: float


def mcms_sqrt_coefficients(d: int, p: float) -> McmsSqrtCoefficients:
    _check_mcms_params(d, p)
    u = np.sqrt(1.0 - p)
    v = np.sqrt(1.0 - p + d * p)
    return McmsSqrtCoefficients(a=float(u / np.sqrt(d)), b=float((v - u) / d))


def mcms_sqrt(d: int, p: float) -> np.ndarray:
    """Closed-form PSD square root of rho_m(d, p).

    sqrt(rho_m) = (sqrt(1-p+dp) - sqrt(1-p))/sqrt(d) * |psi_d><psi_d|
                  + sqrt((1-p)/d) * I
    """
    coeff = mcms_sqrt_coefficients(d, p)
    rank_one_weight = coeff.b * np.sqrt(d)  # = (v - u)/sqrt(d)
    return rank_one_weight * max_coherent_state(d) + coeff.a * np.eye(d, dtype=complex)


def detect_mcms(rho: np.ndarray, tol: float = 1e-9) -> float | None:
    """Best-effort detection of the canonical rho_m form.

    Returns the estimated p if ``rho`` matches rho_m(d, p) entrywise within
    ``tol``, else None. Only the canonical family with real positive
    off-diagonals is recognized; incoherent-unitary rotations of it are not.
    """
    d = rho.shape[0]
    p_hat = float(d * rho[0, 1].real)
    if abs(d * rho[0, 1].imag) > tol or not 0.0 < p_hat <= 1.0:
        return None
    if np.abs(rho - mcms(d, p_hat)).max() > tol:
        return None
    return p_hat


def random_density(d: int, rank: int, seed: int) -> np.ndarray:
    """Seeded random density matrix rho = G G^dag / Tr(G G^dag).

    G is d x rank with i.i.d. standard complex normal entries, so the result
    has rank ``rank`` generically. Identical seeds give identical matrices.
    """
    if not 1 <= rank <= d:
        raise BadRankError(f"BadRank: rank must be in 1..{d}, got {rank}")
    rng = np.random.default_rng(seed)
    g = rng.standard_normal((d, rank)) + 1j * rng.standard_normal((d, rank))
    rho = g @ g.conj().T
    return rho / rho.trace().real


def random_pure(d: int, seed: int) -> np.ndarray:
    """Seeded Haar-like random pure state via a normalized complex normal vector."""
    if d < 2:
        raise BadDimensionError(f"BadDimension: d must be >= 2, got {d}")
    rng = np.random.default_rng(seed)
    psi = rng.standard_normal(d) + 1j * rng.standard_normal(d)
    psi /= np.linalg.norm(psi)
    return np.outer(psi, psi.conj())
