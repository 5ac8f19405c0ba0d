"""Validation, matrix square root, and entropy/purity primitives."""

import math

import numpy as np
import pytest

import geomcoh as gc


class TestValidateDensity:
    def test_maximally_mixed_qubit_accepted(self):
        rho = gc.validate_density(np.eye(2) / 2)
        np.testing.assert_allclose(np.linalg.eigvalsh(rho), [0.5, 0.5], atol=1e-14)

    def test_non_psd_rejected(self):
        # |rho_01| > sqrt(rho_00 rho_11) forces a negative eigenvalue (-0.1)
        with pytest.raises(gc.NotPositiveError, match="NotPositive"):
            gc.validate_density([[0.5, 0.6], [0.6, 0.5]])

    def test_non_hermitian_rejected(self):
        with pytest.raises(gc.NotHermitianError, match="NotHermitian"):
            gc.validate_density([[0.5, 0.5j], [0.5j, 0.5]])

    def test_non_square_rejected(self):
        with pytest.raises(gc.NotSquareError):
            gc.validate_density(np.ones((2, 3)))
        with pytest.raises(gc.NotSquareError):
            gc.validate_density([[1.0]])

    def test_bad_trace_rejected(self):
        with pytest.raises(gc.TraceNotOneError, match="TraceNotOne"):
            gc.validate_density(np.eye(2) * 0.51)

    def test_trace_within_tolerance_renormalized(self):
        rho = gc.validate_density(np.eye(2) * (0.5 + 2e-9))
        assert rho.trace().real == pytest.approx(1.0, abs=1e-14)

    def test_tiny_negative_eigenvalue_clamped(self):
        base = np.diag([1.0 + 5e-11, -5e-11])
        rho = gc.validate_density(base)
        assert np.linalg.eigvalsh(rho).min() >= 0.0

    def test_sub_tolerance_asymmetry_symmetrized(self):
        raw = np.array([[0.5, 0.25 + 3e-11j], [0.25, 0.5]], dtype=complex)
        rho = gc.validate_density(raw)
        np.testing.assert_allclose(rho, rho.conj().T, atol=1e-15)

    def test_is_density(self):
        assert gc.is_density(np.eye(3) / 3)
        assert not gc.is_density(np.eye(3))


class TestHermitianSqrt:
    def test_identity(self):
        np.testing.assert_allclose(gc.hermitian_sqrt(np.eye(4, dtype=complex)),
                                   np.eye(4), atol=1e-12)

    def test_diagonal(self):
        root = gc.hermitian_sqrt(np.diag([0.25, 0.75]).astype(complex))
        np.testing.assert_allclose(np.diag(root).real, [0.5, 0.8660254], atol=1e-7)

    def test_matches_mcms_closed_form(self):
        rho = gc.mcms(3, 0.5)
        assert np.abs(gc.hermitian_sqrt(rho) - gc.mcms_sqrt(3, 0.5)).max() <= 1e-10

    def test_squares_back_random_psd(self):
        # 100 random PSD matrices spread over d = 2..8
        for i in range(100):
            d = 2 + i % 7
            rho = gc.random_density(d, d, seed=i)
            root = gc.hermitian_sqrt(rho)
            assert np.abs(root @ root - rho).max() <= 1e-9

    def test_negative_eigenvalue_raises(self):
        with pytest.raises(gc.NegativeEigenvalueError):
            gc.hermitian_sqrt(np.diag([1.0, -0.2]).astype(complex))


class TestPurity:
    def test_maximally_mixed(self):
        for d in (2, 3, 5):
            assert gc.purity(np.eye(d, dtype=complex) / d) == pytest.approx(1 / d)

    def test_pure_state(self):
        assert gc.purity(gc.random_pure(4, seed=9)) == pytest.approx(1.0, abs=1e-12)

    def test_mcms_half(self):
        # Tr rho_m^2 = p^2 + 2p(1-p)/d + (1-p)^2/d, and the direct product
        p, d = 0.5, 3
        rho = gc.mcms(d, p)
        expected = p**2 + 2 * p * (1 - p) / d + (1 - p) ** 2 / d
        assert expected == pytest.approx(0.5)
        assert gc.purity(rho) == pytest.approx(np.trace(rho @ rho).real, abs=1e-14)
        assert gc.purity(rho) == pytest.approx(0.5, abs=1e-12)

    def test_offdiagonal_identity(self):
        # Tr(rho^2) - sum_i rho_ii^2 == sum_{i!=j} |rho_ij|^2
        for seed in range(50):
            d = 2 + seed % 5
            rho = gc.random_density(d, d, seed=seed)
            off = np.abs(rho) ** 2
            off = off.sum() - np.abs(np.diag(rho)) ** 2 @ np.ones(d)
            lhs = gc.purity(rho) - (np.diag(rho).real ** 2).sum()
            assert abs(lhs - off) <= 1e-10


class TestDephase:
    def test_fixed_point_on_diagonal(self):
        rho = gc.incoherent([0.2, 0.3, 0.5])
        np.testing.assert_allclose(gc.dephase(rho), rho, atol=1e-15)

    def test_max_coherent_dephases_to_mixed(self):
        d = 4
        np.testing.assert_allclose(gc.dephase(gc.max_coherent_state(d)),
                                   np.eye(d) / d, atol=1e-15)

    def test_mcms_dephases_to_mixed(self):
        np.testing.assert_allclose(gc.dephase(gc.mcms(5, 0.7)), np.eye(5) / 5,
                                   atol=1e-15)

    def test_idempotent(self):
        rho = gc.random_density(4, 4, seed=3)
        once = gc.dephase(rho)
        np.testing.assert_allclose(gc.dephase(once), once, atol=1e-15)


class TestVonNeumannEntropy:
    def test_pure_state_zero(self):
        assert gc.von_neumann_entropy(gc.random_pure(5, seed=2)) == pytest.approx(
            0.0, abs=1e-10
        )

    def test_maximally_mixed(self):
        for d in (2, 4, 7):
            assert gc.von_neumann_entropy(np.eye(d, dtype=complex) / d) == pytest.approx(
                math.log(d), abs=1e-12
            )

    def test_two_level_example(self):
        expected = -0.25 * math.log(0.25) - 0.75 * math.log(0.75)
        rho = np.diag([0.25, 0.75]).astype(complex)
        assert gc.von_neumann_entropy(rho) == pytest.approx(expected, abs=1e-12)
        assert gc.von_neumann_entropy(rho) == pytest.approx(0.5623351, abs=1e-7)

    def test_dephasing_never_lowers_entropy(self):
        for seed in range(30):
            rho = gc.random_density(4, 4, seed=seed)
            assert gc.von_neumann_entropy(gc.dephase(rho)) >= gc.von_neumann_entropy(
                rho
            ) - 1e-10


class TestSpectrum:
    def test_reconstruction_and_unitarity(self):
        for seed in range(20):
            d = 2 + seed % 6
            rho = gc.random_density(d, d, seed=seed)
            spec = gc.spectrum(rho)
            assert np.abs(spec.reconstruct() - rho).max() <= 1e-9
            gram = spec.eigenvectors.conj().T @ spec.eigenvectors
            assert np.abs(gram - np.eye(d)).max() <= 1e-9
            assert (np.diff(spec.eigenvalues) <= 1e-14).all()
