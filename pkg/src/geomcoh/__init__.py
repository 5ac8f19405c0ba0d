"""Geometric measure of quantum coherence: bounds, oracle, trade-offs.

The package computes the l1, relative-entropy, and geometric coherence of
density matrices, brackets the geometric measure with closed-form lower and
upper bounds, verifies the bracket against an independent maximization over
the probability simplex, and evaluates the coherence-mixedness trade-off
budgets. A CLI (``geomcoh``) exposes per-state reports, a mixing-parameter
sweep, random-ensemble benchmarks, and state-file generation.
"""

from .coherence import (
    BoundsReport,
    ExactProvenance,
    c_l1,
    c_rel,
    cg_bounds,
    cg_exact_mcms,
    cg_exact_pure,
    cg_exact_qubit,
    cg_lower,
    cg_upper_diag,
    cg_upper_sqrt,
)
from .errors import (
    BadDimensionError,
    BadParameterError,
    BadRankError,
    CoherenceError,
    DimensionMismatchError,
    NegativeEigenvalueError,
    NegativeEntryError,
    NonFiniteError,
    NotHermitianError,
    NotNormalizedError,
    NotPositiveError,
    NotPureError,
    NotQubitError,
    NotSquareError,
    OrderingViolationError,
    StateFileParseError,
    StateValidationError,
    TraceNotOneError,
)
from .fidelity import (
    FidelityTriple,
    fidelity,
    fidelity_triple,
    sub_fidelity,
    super_fidelity,
)
from .linalg import (
    Spectrum,
    ValidationConfig,
    dephase,
    hermitian_sqrt,
    is_density,
    purity,
    spectrum,
    validate_density,
    von_neumann_entropy,
)
from .oracle import (
    LagrangeSolution,
    Objective,
    OracleConfig,
    OracleResult,
    cg_reference,
    lagrange_max_g,
    maximize_over_simplex,
    project_to_simplex,
)
from .states import (
    McmsSqrtCoefficients,
    detect_mcms,
    incoherent,
    max_coherent_state,
    mcms,
    mcms_sqrt,
    mcms_sqrt_coefficients,
    random_density,
    random_pure,
)
from .tradeoff import (
    TradeoffReport,
    check_geometric_tradeoff,
    check_l1_tradeoff,
    m_geometric,
    m_linear,
    tradeoff_report,
)

__version__ = "0.1.0"

__all__ = [
    "BadDimensionError",
    "BadParameterError",
    "BadRankError",
    "BoundsReport",
    "CoherenceError",
    "DimensionMismatchError",
    "ExactProvenance",
    "FidelityTriple",
    "LagrangeSolution",
    "McmsSqrtCoefficients",
    "NegativeEigenvalueError",
    "NegativeEntryError",
    "NonFiniteError",
    "NotHermitianError",
    "NotNormalizedError",
    "NotPositiveError",
    "NotPureError",
    "NotQubitError",
    "NotSquareError",
    "Objective",
    "OracleConfig",
    "OracleResult",
    "OrderingViolationError",
    "Spectrum",
    "StateFileParseError",
    "StateValidationError",
    "TraceNotOneError",
    "TradeoffReport",
    "ValidationConfig",
    "c_l1",
    "c_rel",
    "cg_bounds",
    "cg_exact_mcms",
    "cg_exact_pure",
    "cg_exact_qubit",
    "cg_lower",
    "cg_reference",
    "cg_upper_diag",
    "cg_upper_sqrt",
    "check_geometric_tradeoff",
    "check_l1_tradeoff",
    "dephase",
    "detect_mcms",
    "fidelity",
    "fidelity_triple",
    "hermitian_sqrt",
    "incoherent",
    "is_density",
    "lagrange_max_g",
    "m_geometric",
    "m_linear",
    "max_coherent_state",
    "maximize_over_simplex",
    "mcms",
    "mcms_sqrt",
    "mcms_sqrt_coefficients",
    "project_to_simplex",
    "purity",
    "random_density",
    "random_pure",
    "spectrum",
    "sub_fidelity",
    "super_fidelity",
    "tradeoff_report",
    "validate_density",
    "von_neumann_entropy",
]
