"""Unit tests for the state, SLD, bounds, measurement and oracle use cases."""

import numpy as np
import pytest

from coherent_imaging.core.api.exceptions import DomainError, NonBijectiveError
from coherent_imaging.core.api.models.domain.measurement import BinaryPOVM
from coherent_imaging.core.api.models.domain.params import OpticalConfig, ParamPoint
from coherent_imaging.core.const import (
    BASIS_GEOMETRIC,
    KIND_BMSE,
    KIND_COUNTING,
    KIND_INDIRECT,
    KIND_NUMERIC_QFI,
    KIND_QUBIT_APPROX,
    KIND_VAN_TREES,
    PARAM_GAMMA_R,
    PARAM_Q,
    PARAM_S,
    PARAMETER_NAMES,
    POVM_PROJECTOR_V,
)
from coherent_imaging.core.use_cases.implementations.bounds_use_case_impl import BoundsUseCaseImpl
from coherent_imaging.core.use_cases.implementations.measurement_use_case_impl import (
    MeasurementUseCaseImpl,
)
from coherent_imaging.core.use_cases.implementations.oracle_use_case_impl import OracleUseCaseImpl
from coherent_imaging.core.use_cases.implementations.sld_use_case_impl import SldUseCaseImpl
from coherent_imaging.core.use_cases.implementations.state_use_case_impl import StateUseCaseImpl

POINT = ParamPoint(s=0.6, q=0.3, gamma_r=0.4, gamma_i=0.1)


@pytest.mark.unit
class TestStateUseCase:
    """Test cases for StateUseCaseImpl."""

    @pytest.fixture
    def use_case(self):
        return StateUseCaseImpl()

    @pytest.mark.asyncio
    async def test_state_is_inside_bloch_ball(self, use_case):
        cfg = OpticalConfig()

        state = await use_case.get_state(POINT, cfg)

        assert np.linalg.norm(state.r_vec) <= 1.0
        assert 0.0 < state.n_bar < 2.0 * cfg.delta

    @pytest.mark.asyncio
    async def test_density_matrix_has_unit_trace(self, use_case):
        rho = await use_case.get_density_matrix(POINT, OpticalConfig())

        assert np.trace(rho).real == pytest.approx(1.0)

    @pytest.mark.asyncio
    async def test_purity_curve_columns(self, use_case):
        curve = await use_case.purity_curve(POINT, OpticalConfig(), [0.1, 1.0, 3.0])

        assert list(curve.columns) == ["s", "r", "r_inf", "r_inc"]
        assert curve["s"].tolist() == [0.1, 1.0, 3.0]

    @pytest.mark.asyncio
    async def test_purity_inversion_round_trip(self, use_case):
        cfg = OpticalConfig()
        report = await use_case.get_purity(POINT, cfg)

        s = await use_case.separation_from_purity(report.r, POINT, cfg)

        assert s == pytest.approx(POINT.s, abs=1e-8)

    @pytest.mark.asyncio
    async def test_errors_propagate(self, use_case):
        with pytest.raises(NonBijectiveError):
            await use_case.separation_from_purity(0.5, ParamPoint(s=1.0, q=0.5, gamma_r=-0.5), OpticalConfig())


@pytest.mark.unit
class TestSldUseCase:
    """Test cases for SldUseCaseImpl."""

    @pytest.fixture
    def use_case(self):
        return SldUseCaseImpl()

    @pytest.mark.asyncio
    async def test_slds_agree_with_single_getters(self, use_case):
        cfg = OpticalConfig(alpha=0.3)

        slds = await use_case.get_slds(POINT, cfg)
        separation = await use_case.get_separation_sld(POINT, cfg)
        scalar = await use_case.get_scalar_sld(POINT, cfg, PARAM_Q)

        np.testing.assert_allclose(slds[PARAM_S], separation.matrix())
        np.testing.assert_allclose(slds[PARAM_Q][:2, :2], scalar.matrix())

    @pytest.mark.asyncio
    async def test_qubit_sld_is_hermitian(self, use_case):
        sld = await use_case.get_qubit_sld(POINT, OpticalConfig(), BASIS_GEOMETRIC)

        matrix = sld.matrix()
        np.testing.assert_allclose(matrix, matrix.conj().T)

    @pytest.mark.asyncio
    async def test_commutator_pairs(self, use_case):
        norms = await use_case.get_commutator_norms(POINT, OpticalConfig())

        assert len(norms) == 6

    @pytest.mark.asyncio
    async def test_unknown_parameter(self, use_case):
        with pytest.raises(DomainError):
            await use_case.get_scalar_sld(POINT, OpticalConfig(), "width")


@pytest.mark.unit
class TestBoundsUseCase:
    """Test cases for BoundsUseCaseImpl."""

    @pytest.fixture
    def use_case(self):
        return BoundsUseCaseImpl()

    @pytest.mark.asyncio
    async def test_van_trees_and_inverse(self, use_case):
        cfg = OpticalConfig()

        info = await use_case.get_van_trees(POINT, cfg)
        bound = await use_case.get_bmse_bound(info)

        assert info.kind == KIND_VAN_TREES
        assert bound.kind == KIND_BMSE
        np.testing.assert_allclose(bound.entries @ info.entries, np.eye(len(PARAMETER_NAMES)), atol=1e-6)

    @pytest.mark.asyncio
    async def test_split_matches_total(self, use_case):
        cfg = OpticalConfig()

        split = await use_case.get_information_split(POINT, cfg)
        info = await use_case.get_van_trees(POINT, cfg)

        np.testing.assert_allclose(split.total, info.entries)

    @pytest.mark.asyncio
    async def test_qfi_and_prior_compose_van_trees(self, use_case):
        cfg = OpticalConfig()
        state = await StateUseCaseImpl().get_state(POINT, cfg)

        qfi = await use_case.get_qfi(POINT, cfg)
        prior = await use_case.get_prior_fisher(POINT, cfg)
        info = await use_case.get_van_trees(POINT, cfg)

        np.testing.assert_allclose(state.n_bar * qfi.entries + prior.entries, info.entries, rtol=1e-10)

    @pytest.mark.asyncio
    async def test_qubit_approx_only_changes_separation(self, use_case):
        cfg = OpticalConfig()

        approx = await use_case.get_qubit_approx(POINT, cfg, BASIS_GEOMETRIC)
        info = await use_case.get_van_trees(POINT, cfg)

        assert approx.kind == KIND_QUBIT_APPROX
        np.testing.assert_allclose(approx.entries[1:, 1:], info.entries[1:, 1:], rtol=1e-10)

    @pytest.mark.asyncio
    async def test_indirect_route(self, use_case):
        cfg = OpticalConfig()

        result = await use_case.get_indirect(POINT, cfg)

        assert result.bijective is True
        assert result.bound.kind == KIND_INDIRECT
        with pytest.raises(NonBijectiveError):
            await use_case.get_indirect(POINT.with_value(PARAM_GAMMA_R, -0.5), cfg)

    @pytest.mark.asyncio
    async def test_misalignment_error(self, use_case):
        cfg = OpticalConfig()

        result = await use_case.get_misalignment_error(POINT, cfg, 1e-2)

        assert len(result.epsilons) == len(result.delta_qfi) == 6
        assert np.all(result.delta_qfi >= 0.0)
        with pytest.raises(DomainError):
            await use_case.get_misalignment_error(POINT, cfg, 0.8)


@pytest.mark.unit
class TestMeasurementUseCase:
    """Test cases for MeasurementUseCaseImpl."""

    @pytest.fixture
    def use_case(self):
        return MeasurementUseCaseImpl()

    @pytest.mark.asyncio
    async def test_probabilities_sum_to_one(self, use_case):
        cfg = OpticalConfig(alpha=0.3)
        povm = BinaryPOVM(POVM_PROJECTOR_V).anchored_at(POINT)

        p0, p1 = await use_case.get_outcome_probabilities(POINT, cfg, povm)

        assert p0 + p1 == pytest.approx(1.0)

    @pytest.mark.asyncio
    async def test_spade_fisher_with_prior(self, use_case):
        cfg = OpticalConfig()
        povm = BinaryPOVM(POVM_PROJECTOR_V)
        prior = await BoundsUseCaseImpl().get_prior_fisher(POINT, cfg)

        fisher = await use_case.get_spade_fisher(POINT, cfg, povm)
        with_prior = await use_case.get_spade_fisher(POINT, cfg, povm, include_prior=True)

        assert fisher > 0.0
        assert with_prior - fisher == pytest.approx(prior.entry(PARAM_S))

    @pytest.mark.asyncio
    async def test_projectors_agree_at_equal_intensity(self, use_case):
        point = POINT.with_value(PARAM_Q, 0.5)

        difference = await use_case.get_misalignment_relative_difference(point, OpticalConfig())

        assert difference == pytest.approx(0.0, abs=1e-9)

    @pytest.mark.asyncio
    async def test_counting_fisher_kind(self, use_case):
        info = await use_case.get_counting_fisher(POINT, OpticalConfig())

        assert info.kind == KIND_COUNTING


@pytest.mark.unit
@pytest.mark.oracle
class TestOracleUseCase:
    """Test cases for OracleUseCaseImpl."""

    @pytest.mark.asyncio
    async def test_numeric_qfi(self):
        use_case = OracleUseCaseImpl()

        qfi = await use_case.get_numeric_qfi(POINT, OpticalConfig(alpha=0.3), order=30)

        assert qfi.kind == KIND_NUMERIC_QFI
        assert qfi.entries.shape == (4, 4)

    @pytest.mark.asyncio
    async def test_dense_state_and_slds(self):
        use_case = OracleUseCaseImpl()
        cfg = OpticalConfig(alpha=0.3)

        rho = await use_case.get_dense_state(POINT, cfg, order=20)
        slds = await use_case.get_oracle_slds(POINT, cfg, order=20)

        assert rho.dim == 20
        assert np.trace(rho.matrix).real == pytest.approx(1.0)
        assert set(slds) == set(PARAMETER_NAMES)
        assert slds[PARAM_S].shape == (20, 20)
