"""Mixedness measures and the coherence-mixedness trade-off inequalities.

Two budgets are checked, each at most 1 with equality on the maximally
coherent mixed family:

    C_l1(rho)^2 / (d-1)^2 + M_l(rho) <= 1
    C_g(rho) + M_g(rho) <= 1

where M_l is the normalized linear entropy and M_g the fidelity to the
maximally mixed state. The geometric check takes the C_g value as an
argument: feeding it an upper bound instead of an exact/reference value
would fabricate violations.
"""

from dataclasses import dataclass

import numpy as np

from .coherence import c_l1
from .linalg import EIGENVALUE_FLOOR, purity

__all__ = [
    "TradeoffReport",
    "m_linear",
    "m_geometric",
    "check_l1_tradeoff",
    "check_geometric_tradeoff",
    "tradeoff_report",
]

L1_SATURATION_TOL = 1e-8
GEOMETRIC_SATURATION_TOL = 1e-6


@dataclass(frozen=True)
class TradeoffReport:
    """Both trade-off budgets of one state, with saturation flags."""

    c_l1: float
    m_linear: float
    l1_budget: float
    cg_value: float
    m_geometric: float
    g_budget: float
    saturated_l1: bool
    saturated_g: bool


def m_linear(rho: np.ndarray) -> float:
    """Normalized linear entropy (d/(d-1))(1 - Tr rho^2), in [0, 1]."""
    d = rho.shape[0]
    return float(np.clip(d / (d - 1.0) * (1.0 - purity(rho)), 0.0, 1.0))


def m_geometric(rho: np.ndarray) -> float:
    """Geometric mixedness (Tr sqrt(rho))^2 / d = F(rho, I/d), in [1/d, 1]."""
    evals = np.linalg.eigvalsh(rho)
    evals[evals < EIGENVALUE_FLOOR] = 0.0
    return float(np.sqrt(evals).sum() ** 2 / rho.shape[0])


def check_l1_tradeoff(rho: np.ndarray) -> tuple[float, bool]:
    """Budget C_l1^2/(d-1)^2 + M_l and whether it sits at 1."""
    d = rho.shape[0]
    budget = c_l1(rho) ** 2 / (d - 1.0) ** 2 + m_linear(rho)
    return budget, abs(budget - 1.0) <= L1_SATURATION_TOL


def check_geometric_tradeoff(rho: np.ndarray, cg: float) -> tuple[float, bool]:
    """Budget cg + M_g and whether it sits at 1.

    ``cg`` must be an exact or reference value of the geometric coherence,
    never one of the upper bounds.
    """
    budget = cg + m_geometric(rho)
    return budget, abs(budget - 1.0) <= GEOMETRIC_SATURATION_TOL


def tradeoff_report(rho: np.ndarray, cg: float) -> TradeoffReport:
    """Assemble both budgets for one state and C_g value."""
    l1_budget, saturated_l1 = check_l1_tradeoff(rho)
    g_budget, saturated_g = check_geometric_tradeoff(rho, cg)
    return TradeoffReport(
        c_l1=c_l1(rho),
        m_linear=m_linear(rho),
        l1_budget=l1_budget,
        cg_value=cg,
        m_geometric=m_geometric(rho),
        g_budget=g_budget,
        saturated_l1=saturated_l1,
        saturated_g=saturated_g,
    )
