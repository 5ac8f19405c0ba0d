"""Reference maximization of state overlaps over the incoherent states.

Incoherent states are diagonal, so maximizing F, E, or G against them is a
d-variable problem over the probability simplex. The optimizer is
multi-start projected gradient ascent with central-difference gradients and
a halving line search; the fidelity objective is concave in the simplex
point, so every start agrees at the optimum, while the sub-fidelity
objective peaks on the boundary and relies on the vertex starts.

For the super-fidelity objective the interior stationary point is also
available in closed form from the constrained first-order conditions
(:func:`lagrange_max_g`), which the numeric path is tested against.
"""

import enum
from dataclasses import dataclass, field

import numpy as np

from .coherence import RADICAND_NOISE_FLOOR
from .errors import NonFiniteError
from .fidelity import PURITY_DEFICIT_FLOOR, RADICAND_FLOOR
from .linalg import EIGENVALUE_FLOOR, purity

__all__ = [
    "Objective",
    "OracleConfig",
    "OracleResult",
    "LagrangeSolution",
    "project_to_simplex",
    "maximize_over_simplex",
    "cg_reference",
    "lagrange_max_g",
]

_GRADIENT_STEP = 1e-6
_LINE_SEARCH_HALVINGS = 14  # candidate steps 0.5, 0.25, ... down to ~6e-5


class Objective(enum.Enum):
    """Which overlap functional is maximized over incoherent states."""

    FIDELITY = "fidelity"
    SUB_FIDELITY = "sub_fidelity"
    SUPER_FIDELITY = "super_fidelity"


@dataclass(frozen=True)
class OracleConfig:
    """Knobs of the simplex maximizer.

    grid_seed_resolution only applies for d <= 3, where a coarse simplex
    grid is cheap and its best point is added as one more start. ``seed``
    makes the random starts reproducible.
    """

    n_starts: int = 16
    max_iters: int = 2000
    objective_tol: float = 1e-10
    grid_seed_resolution: float = 0.02
    seed: int = 0


@dataclass(frozen=True)
class OracleResult:
    """Best value found, its simplex point, and convergence diagnostics.

    ``spread`` is the gap between the best and worst refined start values;
    for the concave fidelity objective it should be tiny, for sub-fidelity
    different boundary faces legitimately differ.
    """

    value: float
    argmax: np.ndarray = field(repr=False)
    iterations: int
    converged: bool
    spread: float


@dataclass(frozen=True)
class LagrangeSolution:
    """Closed-form stationary solution for the super-fidelity objective.

    multiplier is the positive-root constraint multiplier; g_max the
    stationary value 1 + (d-1) * multiplier; stationary_x the candidate
    simplex point, flagged infeasible when any coordinate is negative (then
    g_max is still an upper bound on the true maximum).
    """

    multiplier: float
    g_max: float
    stationary_x: np.ndarray = field(repr=False)
    feasible: bool


def project_to_simplex(point: np.ndarray) -> np.ndarray:
    """Euclidean projection onto {x : x_i >= 0, sum x_i = 1}."""
    return project_rows_to_simplex(np.asarray(point, dtype=float)[None])[0]


def project_rows_to_simplex(points: np.ndarray) -> np.ndarray:
    """Row-wise simplex projection via the sorted-threshold construction."""
    n, d = points.shape
    ordered = -np.sort(-points, axis=1)
    cumulative = np.cumsum(ordered, axis=1)
    counts = np.arange(1, d + 1)
    # The threshold condition holds on a prefix of the sorted coordinates.
    support = (ordered + (1.0 - cumulative) / counts > 0.0).sum(axis=1)
    shift = (1.0 - cumulative[np.arange(n), support - 1]) / support
    return np.maximum(points + shift[:, None], 0.0)


def _make_evaluator(rho: np.ndarray, objective: Objective):
    """Batch objective: (n, d) simplex points -> (n,) overlap values.

    The incoherent argument is diagonal, which collapses each overlap to an
    explicit function of the weight vector; only the fidelity objective
    still needs an eigendecomposition (of sqrt(sigma) rho sqrt(sigma), built
    entrywise). Points slightly outside the simplex, as produced by
    finite-difference probes, are handled by each formula's natural smooth
    extension.
    """
    diag = np.diag(rho).real.copy()

    if objective is Objective.FIDELITY:

        def evaluate(points: np.ndarray) -> np.ndarray:
            weights = np.sqrt(np.clip(points, 0.0, None))
            overlap = (weights[:, :, None] * weights[:, None, :]) * rho
            evals = np.linalg.eigvalsh(overlap)
            evals[evals < EIGENVALUE_FLOOR] = 0.0
            return np.sqrt(evals).sum(axis=1) ** 2

    elif objective is Objective.SUB_FIDELITY:
        coupling = np.outer(diag, diag) - np.abs(rho) ** 2

        def evaluate(points: np.ndarray) -> np.ndarray:
            linear = points @ diag
            radicand = np.einsum("ni,ij,nj->n", points, coupling, points)
            radicand[np.abs(radicand) < RADICAND_FLOOR] = 0.0
            return linear + np.sqrt(2.0 * np.clip(radicand, 0.0, None))

    else:
        rho_deficit = 1.0 - purity(rho)
        rho_deficit = rho_deficit if rho_deficit > PURITY_DEFICIT_FLOOR else 0.0
        scale = np.sqrt(rho_deficit)

        def evaluate(points: np.ndarray) -> np.ndarray:
            deficit = np.clip(1.0 - (points**2).sum(axis=1), 0.0, None)
            deficit[deficit < PURITY_DEFICIT_FLOOR] = 0.0
            return points @ diag + scale * np.sqrt(deficit)

    def checked(points: np.ndarray) -> np.ndarray:
        try:
            values = evaluate(points)
        except np.linalg.LinAlgError as err:
            raise NonFiniteError(
                f"NonFinite: {objective.value} objective broke the eigensolver ({err})"
            ) from err
        if not np.isfinite(values).all():
            raise NonFiniteError(
                f"NonFinite: {objective.value} objective returned NaN/Inf"
            )
        return values

    return checked


def _refine(evaluate, start: np.ndarray, max_iters: int, tol: float):
    """Projected gradient ascent from one start; returns (x, value, iters, converged)."""
    d = start.size
    probe = _GRADIENT_STEP * np.eye(d)
    step_sizes = 0.5 ** np.arange(1, _LINE_SEARCH_HALVINGS + 1)

    x = project_to_simplex(start)
    value = evaluate(x[None])[0]
    converged = False
    iters = 0
    for _ in range(max_iters):
        iters += 1
        probes = np.concatenate([x + probe, x - probe], axis=0)
        probe_values = evaluate(probes)
        gradient = (probe_values[:d] - probe_values[d:]) / (2.0 * _GRADIENT_STEP)
        candidates = project_rows_to_simplex(x + step_sizes[:, None] * gradient)
        candidate_values = evaluate(candidates)
        better = np.flatnonzero(candidate_values > value)
        if better.size == 0:
            converged = True  # no halving step improves: stationary
            break
        chosen = better[0]  # longest improving step in the halving sequence
        gain = candidate_values[chosen] - value
        x = candidates[chosen]
        value = candidate_values[chosen]
        if gain < tol:
            converged = True
            break
    return x, float(value), iters, converged


def _simplex_grid(d: int, resolution: float) -> np.ndarray:
    """Regular grid over the simplex, for d <= 3 only."""
    ticks = np.arange(0.0, 1.0 + resolution / 2.0, resolution)
    if d == 2:
        return np.column_stack([ticks, 1.0 - ticks])
    first, second = np.meshgrid(ticks, ticks, indexing="ij")
    keep = first + second <= 1.0 + 1e-12
    first, second = first[keep], second[keep]
    return np.column_stack([first, second, 1.0 - first - second])


def maximize_over_simplex(
    rho: np.ndarray,
    objective: Objective,
    config: OracleConfig | None = None,
) -> OracleResult:
    """Maximize an overlap objective over all incoherent states.

    Starts from every vertex, the uniform point, ``n_starts`` random simplex
    points, and (for d <= 3) the best point of a coarse grid; each start is
    refined by projected gradient ascent until the objective improves by
    less than ``objective_tol``.
    """
    cfg = config or OracleConfig()
    d = rho.shape[0]
    evaluate = _make_evaluator(rho, objective)
    rng = np.random.default_rng(cfg.seed)

    starts = [np.eye(d)[k] for k in range(d)]
    starts.append(np.full(d, 1.0 / d))
    starts.extend(rng.dirichlet(np.ones(d)) for _ in range(cfg.n_starts))
    if d <= 3:
        grid = _simplex_grid(d, cfg.grid_seed_resolution)
        grid_values = evaluate(grid)
        starts.append(grid[int(np.argmax(grid_values))])

    best_x = starts[0]
    best_value = -np.inf
    best_converged = False
    worst_value = np.inf
    total_iters = 0
    for start in starts:
        x, value, iters, converged = _refine(
            evaluate, start, cfg.max_iters, cfg.objective_tol
        )
        total_iters += iters
        worst_value = min(worst_value, value)
        if value > best_value:
            best_x, best_value, best_converged = x, value, converged
    return OracleResult(
        value=min(best_value, 1.0),
        argmax=best_x,
        iterations=total_iters,
        converged=best_converged,
        spread=best_value - worst_value,
    )


def cg_reference(rho: np.ndarray, config: OracleConfig | None = None) -> float:
    """Reference C_g value: one minus the maximal fidelity to an incoherent state."""
    result = maximize_over_simplex(rho, Objective.FIDELITY, config)
    return max(0.0, 1.0 - result.value)


def lagrange_max_g(rho: np.ndarray) -> LagrangeSolution:
    """Closed-form interior maximum of the super-fidelity objective.

    The constrained stationarity conditions give

        multiplier = -1/d + (1/d) sqrt(1 - d/(d-1) (Tr rho^2 - sum_i rho_ii^2))
        g_max      = 1 + (d-1) * multiplier
        x_i        = (rho_ii + multiplier) / (1 + d * multiplier)

    choosing the positive root (the negative one is the minimum). When some
    x_i is negative the point is infeasible and g_max only upper-bounds the
    true maximum over the simplex.
    """
    d = rho.shape[0]
    diag = np.diag(rho).real
    off_weight = purity(rho) - (diag**2).sum()
    radicand = 1.0 - d / (d - 1.0) * off_weight
    if radicand < RADICAND_NOISE_FLOOR:
        radicand = 0.0
    multiplier = (-1.0 + np.sqrt(radicand)) / d
    g_max = 1.0 + (d - 1.0) * multiplier
    denominator = 1.0 + d * multiplier  # = sqrt(radicand)
    if denominator < 1e-12:
        # Degenerate radicand: stationarity forces a uniform diagonal, and
        # the uniform point is the limiting solution.
        stationary = np.full(d, 1.0 / d)
    else:
        stationary = (diag + multiplier) / denominator
    return LagrangeSolution(
        multiplier=float(multiplier),
        g_max=float(g_max),
        stationary_x=stationary,
        feasible=bool(stationary.min() >= -1e-12),
    )
