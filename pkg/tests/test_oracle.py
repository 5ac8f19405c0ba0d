"""The simplex maximizer against closed forms and the module overlaps."""

import numpy as np
import pytest

import geomcoh as gc
from geomcoh.oracle import _make_evaluator, project_rows_to_simplex

FAST = gc.OracleConfig(n_starts=4)


class TestSimplexProjection:
    def test_interior_point_unchanged(self):
        x = np.array([0.2, 0.3, 0.5])
        np.testing.assert_allclose(gc.project_to_simplex(x), x, atol=1e-15)

    def test_projects_outside_points(self):
        rng = np.random.default_rng(0)
        points = rng.standard_normal((200, 5))
        projected = project_rows_to_simplex(points)
        assert projected.min() >= 0.0
        np.testing.assert_allclose(projected.sum(axis=1), 1.0, atol=1e-12)

    def test_projection_is_nearest(self):
        # brute-force check against a fine grid on the 2-simplex
        grid = []
        for i in range(101):
            for j in range(101 - i):
                grid.append([i / 100, j / 100, 1 - i / 100 - j / 100])
        grid = np.array(grid)
        rng = np.random.default_rng(1)
        for _ in range(20):
            v = rng.standard_normal(3)
            best = grid[np.argmin(((grid - v) ** 2).sum(axis=1))]
            got = gc.project_to_simplex(v)
            assert ((got - v) ** 2).sum() <= ((best - v) ** 2).sum() + 1e-4


class TestMaximizeFidelity:
    def test_basis_state_hits_vertex(self):
        rho = gc.incoherent([0.0, 1.0, 0.0])
        result = gc.maximize_over_simplex(rho, gc.Objective.FIDELITY, FAST)
        assert result.value == pytest.approx(1.0, abs=1e-9)
        assert result.argmax[1] == pytest.approx(1.0, abs=1e-6)

    def test_mcms_maximum_at_uniform(self):
        result = gc.maximize_over_simplex(gc.mcms(3, 0.5), gc.Objective.FIDELITY)
        assert result.value == pytest.approx(8 / 9, abs=1e-9)
        assert np.abs(result.argmax - 1 / 3).max() <= 1e-5
        assert result.converged

    def test_concave_starts_agree(self):
        for seed in range(20):
            d = 2 + seed % 3
            rho = gc.random_density(d, d, seed=seed)
            result = gc.maximize_over_simplex(rho, gc.Objective.FIDELITY)
            assert result.spread <= 1e-6

    def test_matches_module_fidelity(self):
        rng = np.random.default_rng(3)
        for d in (2, 3, 5):
            rho = gc.random_density(d, d, seed=d)
            evaluate = _make_evaluator(rho, gc.Objective.FIDELITY)
            for _ in range(10):
                x = rng.dirichlet(np.ones(d))
                assert evaluate(x[None])[0] == pytest.approx(
                    gc.fidelity(rho, gc.incoherent(x)), abs=1e-10
                )

    def test_nan_input_raises(self):
        rho = np.full((3, 3), np.nan, dtype=complex)
        with pytest.raises(gc.NonFiniteError):
            gc.maximize_over_simplex(rho, gc.Objective.FIDELITY, FAST)

    def test_deterministic(self):
        rho = gc.random_density(4, 4, seed=17)
        a = gc.maximize_over_simplex(rho, gc.Objective.FIDELITY, FAST)
        b = gc.maximize_over_simplex(rho, gc.Objective.FIDELITY, FAST)
        assert a.value == b.value
        assert (a.argmax == b.argmax).all()


class TestSubAndSuperObjectives:
    def test_sub_fidelity_vertex_lower_bound(self):
        for seed in range(50):
            d = 2 + seed % 4
            rho = gc.random_density(d, d, seed=seed)
            result = gc.maximize_over_simplex(rho, gc.Objective.SUB_FIDELITY, FAST)
            assert result.value >= np.diag(rho).real.max() - 1e-9

    def test_objective_sandwich_at_optimum(self):
        for seed in range(20):
            d = 2 + seed % 3
            rho = gc.random_density(d, d, seed=seed)
            best_e = gc.maximize_over_simplex(rho, gc.Objective.SUB_FIDELITY, FAST)
            best_f = gc.maximize_over_simplex(rho, gc.Objective.FIDELITY, FAST)
            best_g = gc.maximize_over_simplex(rho, gc.Objective.SUPER_FIDELITY, FAST)
            assert best_e.value <= best_f.value + 1e-8
            assert best_f.value <= best_g.value + 1e-8

    def test_matches_module_overlaps(self):
        rng = np.random.default_rng(5)
        rho = gc.random_density(4, 4, seed=23)
        pairs = [
            (gc.Objective.SUB_FIDELITY, gc.sub_fidelity),
            (gc.Objective.SUPER_FIDELITY, gc.super_fidelity),
        ]
        for objective, reference in pairs:
            evaluate = _make_evaluator(rho, objective)
            for _ in range(10):
                x = rng.dirichlet(np.ones(4))
                assert evaluate(x[None])[0] == pytest.approx(
                    reference(rho, gc.incoherent(x)), abs=1e-10
                )


class TestLagrange:
    def test_maximally_mixed(self):
        solution = gc.lagrange_max_g(np.eye(4, dtype=complex) / 4)
        assert solution.multiplier == pytest.approx(0.0, abs=1e-12)
        assert solution.g_max == pytest.approx(1.0, abs=1e-12)
        np.testing.assert_allclose(solution.stationary_x, np.full(4, 0.25), atol=1e-10)
        assert solution.feasible

    def test_mcms_values(self):
        solution = gc.lagrange_max_g(gc.mcms(3, 0.5))
        assert solution.multiplier == pytest.approx((-1 + np.sqrt(0.75)) / 3, abs=1e-12)
        assert solution.multiplier == pytest.approx(-0.0446582, abs=1e-7)
        assert solution.g_max == pytest.approx(0.9106836, abs=1e-7)
        assert solution.feasible
        assert 1 - solution.g_max == pytest.approx(gc.cg_lower(gc.mcms(3, 0.5)), abs=1e-12)

    @pytest.mark.parametrize("d", [2, 3, 5])
    def test_max_coherent_degenerate_radicand(self, d):
        solution = gc.lagrange_max_g(gc.max_coherent_state(d))
        assert solution.multiplier == pytest.approx(-1 / d, abs=1e-9)
        assert solution.g_max == pytest.approx(1 / d, abs=1e-9)

    @pytest.mark.parametrize("d", [2, 3, 4])
    def test_closed_form_matches_numeric(self, d):
        for seed in range(30):
            rho = gc.random_density(d, d, seed=seed)
            solution = gc.lagrange_max_g(rho)
            numeric = gc.maximize_over_simplex(rho, gc.Objective.SUPER_FIDELITY, FAST)
            if solution.feasible:
                assert abs(numeric.value - solution.g_max) <= 1e-7
            else:
                assert solution.g_max >= numeric.value - 1e-7

    def test_lower_bound_consistency(self):
        # 1 - g_max reproduces the closed-form lower bound on C_g
        for seed in range(50):
            d = 2 + seed % 4
            rho = gc.random_density(d, d, seed=seed)
            assert 1 - gc.lagrange_max_g(rho).g_max == pytest.approx(
                gc.cg_lower(rho), abs=1e-10
            )


class TestCgReference:
    def test_qubit_matches_closed_form(self):
        for seed in range(50):
            rho = gc.random_density(2, 2, seed=seed)
            assert abs(gc.cg_reference(rho, FAST) - gc.cg_exact_qubit(rho)) <= 1e-7

    def test_pure_matches_diagonal_bound(self):
        for seed in range(10):
            rho = gc.random_pure(5, seed=seed)
            expected = 1 - np.diag(rho).real.max()
            assert abs(gc.cg_reference(rho, FAST) - expected) <= 1e-7

    @pytest.mark.parametrize("p", [0.25, 0.5, 0.75, 1.0])
    def test_mcms_matches_closed_form(self, p):
        assert abs(
            gc.cg_reference(gc.mcms(3, p), FAST) - gc.cg_exact_mcms(3, p)
        ) <= 1e-6
