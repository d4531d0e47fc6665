"""Unit tests for the brute-force Hermite-Gauss oracle."""

import numpy as np
import pytest

from coherent_imaging.core.api.exceptions import InputError, StepSizeError
from coherent_imaging.core.api.models.domain.oracle import DenseState
from coherent_imaging.core.api.models.domain.params import OpticalConfig, ParamPoint
from coherent_imaging.core.const import KIND_NUMERIC_QFI, PARAMETER_NAMES
from coherent_imaging.core.physics.bounds import qfi_state_matrix
from coherent_imaging.core.physics.oracle import (
    dense_state,
    density_derivative,
    numeric_qfi,
    numeric_sld,
    oracle_slds,
    sld_residual,
)


@pytest.mark.unit
@pytest.mark.oracle
class TestDenseState:
    """Test the truncated mode-space state."""

    def test_state_is_physical(self):
        rho = dense_state(ParamPoint(s=0.8, q=0.3, gamma_r=0.4, gamma_i=-0.2), OpticalConfig(alpha=0.3))

        assert rho.dim == 40
        assert rho.is_physical(tol=1e-10)

    def test_state_has_rank_two(self):
        rho = dense_state(ParamPoint(s=0.8, q=0.3, gamma_r=0.4), OpticalConfig())

        eigenvalues = np.sort(rho.eigenvalues())[::-1]
        assert eigenvalues[1] > 1e-3
        assert np.all(np.abs(eigenvalues[2:]) < 1e-12)

    def test_non_square_state_rejected(self):
        with pytest.raises(InputError):
            DenseState(matrix=np.ones((2, 3)))


@pytest.mark.unit
@pytest.mark.oracle
class TestNumericSld:
    """Test the eigenbasis SLD solver."""

    def test_sld_equation_holds(self):
        p = ParamPoint(s=0.8, q=0.3, gamma_r=0.4, gamma_i=-0.2)
        cfg = OpticalConfig(alpha=0.3)
        rho = dense_state(p, cfg)

        for name in PARAMETER_NAMES:
            drho = density_derivative(p, cfg, name)
            assert sld_residual(rho, drho, numeric_sld(rho, drho)) < 1e-8

    def test_non_hermitian_derivative_rejected(self):
        rho = DenseState(matrix=np.diag([0.5, 0.5, 0.0]))
        drho = np.array([[0.0, 1.0, 0.0], [0.0, 0.0, 0.0], [0.0, 0.0, 0.0]])

        with pytest.raises(InputError):
            numeric_sld(rho, drho)

    def test_shape_mismatch_rejected(self):
        rho = DenseState(matrix=np.diag([0.5, 0.5]))

        with pytest.raises(InputError):
            numeric_sld(rho, np.zeros((3, 3)))

    def test_oracle_slds_cover_every_parameter(self):
        slds = oracle_slds(ParamPoint(s=0.8, q=0.3, gamma_r=0.4), OpticalConfig(), order=20)

        assert list(slds) == list(PARAMETER_NAMES)
        assert all(matrix.shape == (20, 20) for matrix in slds.values())


@pytest.mark.unit
@pytest.mark.oracle
class TestNumericQfi:
    """Test the finite-difference QFI against the closed forms."""

    @pytest.mark.parametrize(
        "point,alpha",
        [
            (ParamPoint(s=0.5, q=0.3, gamma_r=0.4, gamma_i=0.2), 0.3),
            (ParamPoint(s=0.1, q=0.7, gamma_r=-0.4), 0.7),
            (ParamPoint(s=1.5, q=0.5, gamma_i=0.2), 0.5),
        ],
    )
    def test_matches_closed_form(self, point, alpha):
        # Arrange
        cfg = OpticalConfig(alpha=alpha)

        # Act
        oracle = numeric_qfi(point, cfg)
        closed = qfi_state_matrix(point, cfg)

        # Assert
        assert oracle.kind == KIND_NUMERIC_QFI
        scale = np.sqrt(np.outer(np.diag(closed.entries), np.diag(closed.entries)))
        assert np.max(np.abs(oracle.entries - closed.entries) / scale) < 1e-6

    @pytest.mark.parametrize("step", [1e-8, 1e-3])
    def test_step_outside_range_rejected(self, step):
        with pytest.raises(StepSizeError):
            numeric_qfi(ParamPoint(s=0.5, q=0.3), OpticalConfig(), step=step)
