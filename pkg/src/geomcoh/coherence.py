"""Coherence quantifiers and the closed-form bounds on the geometric measure.

The geometric measure of coherence of a state rho is

    C_g(rho) = 1 - max_sigma F(rho, sigma)

maximized over diagonal (incoherent) sigma. It has no general closed form,
but it is bracketed by

    lower:      1 - 1/d - ((d-1)/d) sqrt(1 - d/(d-1) (Tr rho^2 - sum_i rho_ii^2))
    upper l1:   1 - max_i rho_ii
    upper l2:   1 - sum_i b_ii^2,   with b = sqrt(rho)

and the bracket collapses to the exact value for pure states, qubits, and
the maximally coherent mixed family.
"""

import enum
from dataclasses import dataclass

import numpy as np

from .errors import BadParameterError, NotPureError, NotQubitError
from .linalg import dephase, hermitian_sqrt, purity, von_neumann_entropy
from .states import detect_mcms

__all__ = [
    "ExactProvenance",
    "BoundsReport",
    "PURITY_PURE_THRESHOLD",
    "c_l1",
    "c_rel",
    "cg_lower",
    "cg_upper_diag",
    "cg_upper_sqrt",
    "cg_bounds",
    "cg_exact_qubit",
    "cg_exact_pure",
    "cg_exact_mcms",
]

# States with Tr(rho^2) above this are treated as pure for exactness claims.
PURITY_PURE_THRESHOLD = 1.0 - 1e-9


class ExactProvenance(enum.Enum):
    """How an exact C_g value in a report was obtained."""

    PURE = "pure"
    QUBIT = "qubit"
    MCMS = "mcms"
    NONE = "none"


@dataclass(frozen=True)
class BoundsReport:
    """Two-sided bracket on C_g, with an exact value when one is known."""

    lower: float
    upper_diag: float
    upper_sqrt: float
    upper: float
    exact: float | None = None
    exact_provenance: ExactProvenance = ExactProvenance.NONE


def c_l1(rho: np.ndarray) -> float:
    """l1-norm coherence: sum of |rho_ij| over i != j, in [0, d-1]."""
    return float(np.abs(rho).sum() - np.abs(np.diag(rho)).sum())


def c_rel(rho: np.ndarray) -> float:
    """Relative-entropy coherence S(dephased rho) - S(rho), in [0, ln d]."""
    return max(0.0, von_neumann_entropy(dephase(rho)) - von_neumann_entropy(rho))


# Radicands of the closed-form bounds are analytically in [0, 1]; values
# below this are rounding noise whose square root would shift an exact
# endpoint (e.g. the pure maximally coherent state) by ~1e-8.
RADICAND_NOISE_FLOOR = 1e-13


def _floor_radicand(value: float) -> float:
    return value if value > RADICAND_NOISE_FLOOR else 0.0


def _offdiag_weight(rho: np.ndarray) -> float:
    # Tr(rho^2) - sum_i rho_ii^2 == sum_{i != j} |rho_ij|^2, computed the
    # second way so the lower-bound radicand can never leave [0, 1].
    return float(purity(rho) - (np.diag(rho).real ** 2).sum())


def cg_lower(rho: np.ndarray) -> float:
    """Closed-form lower bound on C_g, exact for every qubit state."""
    d = rho.shape[0]
    radicand = _floor_radicand(1.0 - d / (d - 1.0) * _offdiag_weight(rho))
    return max(0.0, float(1.0 - 1.0 / d - (d - 1.0) / d * np.sqrt(radicand)))


def cg_upper_diag(rho: np.ndarray) -> float:
    """Upper bound 1 - max_i rho_ii, exact for pure states."""
    return float(1.0 - np.diag(rho).real.max())


def cg_upper_sqrt(rho: np.ndarray) -> float:
    """Upper bound 1 - sum_i b_ii^2 from the diagonal of sqrt(rho)."""
    b_diag = np.diag(hermitian_sqrt(rho)).real
    return max(0.0, float(1.0 - (b_diag**2).sum()))


def cg_exact_qubit(rho: np.ndarray) -> float:
    """Exact C_g of a qubit: 1/2 - (1/2) sqrt(1 - 4 |rho_01|^2)."""
    if rho.shape != (2, 2):
        raise NotQubitError(f"NotQubit: expected a 2x2 state, got {rho.shape}")
    radicand = _floor_radicand(1.0 - 4.0 * abs(rho[0, 1]) ** 2)
    return 0.5 - 0.5 * float(np.sqrt(radicand))


def cg_exact_pure(rho: np.ndarray) -> float:
    """Exact C_g of a pure state: 1 - max_i rho_ii."""
    if purity(rho) <= PURITY_PURE_THRESHOLD:
        raise NotPureError(
            f"NotPure: purity {purity(rho):.12g} below threshold {PURITY_PURE_THRESHOLD}"
        )
    return cg_upper_diag(rho)


def cg_exact_mcms(d: int, p: float) -> float:
    """Exact C_g of the maximally coherent mixed state rho_m(d, p).

    C_g = 1 - [sqrt(1-p) + (sqrt(1-p+dp) - sqrt(1-p))/d]^2
    """
    if d < 2:
        raise BadParameterError(f"BadParameter: d must be >= 2, got {d}")
    if not 0.0 < p <= 1.0:
        raise BadParameterError(f"BadParameter: p must be in (0, 1], got {p}")
    u = np.sqrt(1.0 - p)
    v = np.sqrt(1.0 - p + d * p)
    return float(1.0 - (u + (v - u) / d) ** 2)


def cg_bounds(rho: np.ndarray, mcms_tol: float = 1e-9) -> BoundsReport:
    """Full bracket on C_g, upgraded with an exact value when recognizable.

    Recognition is checked in the order pure state, qubit, canonical MCMS
    form, exactly incoherent (bounds collapse to zero). Detection only adds
    the exact value; the bounds themselves never change.
    """
    d = rho.shape[0]
    lower = cg_lower(rho)
    upper_diag = cg_upper_diag(rho)
    upper_sqrt = cg_upper_sqrt(rho)
    upper = min(upper_diag, upper_sqrt)
    # The theorems guarantee lower <= upper; sign-level rounding noise on
    # degenerate states (e.g. I/d) must not leak into the report.
    lower = min(lower, upper)

    exact = None
    provenance = ExactProvenance.NONE
    if purity(rho) > PURITY_PURE_THRESHOLD:
        exact = cg_upper_diag(rho)
        provenance = ExactProvenance.PURE
    elif d == 2:
        exact = cg_exact_qubit(rho)
        provenance = ExactProvenance.QUBIT
    else:
        p_hat = detect_mcms(rho, tol=mcms_tol)
        if p_hat is not None:
            exact = cg_exact_mcms(d, p_hat)
            provenance = ExactProvenance.MCMS
        elif upper <= 1e-12:
            exact = 0.0  # incoherent: both bounds pin C_g at zero
    return BoundsReport(
        lower=lower,
        upper_diag=upper_diag,
        upper_sqrt=upper_sqrt,
        upper=upper,
        exact=exact,
        exact_provenance=provenance,
    )
