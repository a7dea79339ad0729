import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from onticlab.sdk.common.enums import SmearKind
from onticlab.sdk.common.exceptions import (
    DimensionMismatchError,
    DomainError,
    ImpossibleObservationError,
    NormalizationError,
    ProfileMismatchError,
    SpaceMismatchError,
)
from onticlab.sdk.hidden import (
    HiddenSpace,
    Preparation,
    PropensityAmplitude,
    SmearProfile,
    bayesian_update,
    cell_weight,
    check_partition,
    embed,
    prepare,
    project,
    reconstruct,
    sharpen,
    transition_amplitude,
    transition_probability,
)
from onticlab.sdk.quantum import (
    basis_state,
    fidelity_error,
    inner_product,
    make_rng,
    overlap_probability,
    random_state,
)


def prepared(psi, m, kind=SmearKind.UNIFORM, width=1.0):
    space = HiddenSpace(qdim=psi.dim, smear=m)
    return prepare(Preparation("P", psi, SmearProfile.of_kind(kind, m, width)), space)


class TestHiddenSpace:
    def test_cells_partition_the_space(self):
        space = HiddenSpace(qdim=3, smear=4)
        assert space.hdim == 12
        assert space.cell_of(1) == range(4, 8)
        assert space.cell_index(11) == 2
        assert check_partition(space)

    @pytest.mark.parametrize("qdim, smear", [(1, 2), (2, 0)])
    def test_rejects_degenerate_spaces(self, qdim, smear):
        with pytest.raises(DomainError):
            HiddenSpace(qdim=qdim, smear=smear)

    def test_index_bounds(self):
        space = HiddenSpace(qdim=2, smear=2)
        with pytest.raises(DomainError):
            space.cell_of(2)
        with pytest.raises(DomainError):
            space.cell_index(4)


class TestSmearProfile:
    @pytest.mark.parametrize("m", [1, 2, 7, 16])
    def test_profiles_are_normalized(self, m):
        for profile in (SmearProfile.uniform(m), SmearProfile.gaussian(m, width=1.5)):
            assert math.fsum(np.abs(profile.weights) ** 2) == pytest.approx(1.0, abs=1e-12)
            assert profile.m == m

    def test_spread(self):
        assert SmearProfile.uniform(1).spread == 0.0
        assert SmearProfile.uniform(4).spread == pytest.approx(0.75, abs=1e-15)
        assert SmearProfile.gaussian(4, 0.5).spread < SmearProfile.uniform(4).spread

    def test_rejects_bad_profiles(self):
        with pytest.raises(NormalizationError):
            SmearProfile([1.0, 1.0])
        with pytest.raises(DomainError):
            SmearProfile.gaussian(4, width=0.0)
        with pytest.raises(DomainError):
            SmearProfile.uniform(0)


class TestPropensity:
    @given(st.integers(min_value=2, max_value=8), st.integers(min_value=1, max_value=16),
           st.sampled_from(list(SmearKind)), st.integers(min_value=0, max_value=2 ** 32 - 1))
    @settings(max_examples=60, deadline=None)
    def test_hidden_model_reproduces_quantum_amplitudes(self, d, m, kind, seed):
        rng = make_rng(seed)
        psi, phi = random_state(d, rng), random_state(d, rng)
        A_psi, A_phi = prepared(psi, m, kind, 2.0), prepared(phi, m, kind, 2.0)

        assert A_psi.norm_squared() == pytest.approx(1.0, abs=1e-12)
        assert fidelity_error(project(A_psi, SmearProfile.of_kind(kind, m, 2.0)), psi) < 1e-12
        assert transition_amplitude(A_phi, A_psi) == pytest.approx(inner_product(phi, psi), abs=1e-12)
        assert transition_probability(A_phi, A_psi) == pytest.approx(overlap_probability(phi, psi), abs=1e-12)

    def test_prepare_is_a_kronecker_product(self):
        psi = random_state(3, make_rng(3))
        profile = SmearProfile.gaussian(5, 1.0)
        A = prepare(Preparation("P", psi, profile), HiddenSpace(3, 5))
        np.testing.assert_allclose(A.values.reshape(3, 5), np.outer(psi.amplitudes, profile.weights))

    def test_prepare_rejects_mismatches(self):
        psi = random_state(3, make_rng(3))
        with pytest.raises(DimensionMismatchError):
            prepare(Preparation("P", psi, SmearProfile.uniform(2)), HiddenSpace(2, 2))
        with pytest.raises(ProfileMismatchError):
            prepare(Preparation("P", psi, SmearProfile.uniform(2)), HiddenSpace(3, 4))

    def test_amplitudes_must_be_normalized(self):
        with pytest.raises(NormalizationError):
            PropensityAmplitude(np.array([1.0, 1.0, 0.0, 0.0]), HiddenSpace(2, 2))
        with pytest.raises(NormalizationError):
            PropensityAmplitude(np.zeros(4), HiddenSpace(2, 2))

    def test_json_import_rejects_unnormalized_amplitude(self):
        text = '{"qdim": 2, "smear": 2, "values": [[3, 0], [0, 0], [0, 0], [0, 0]]}'
        with pytest.raises(NormalizationError):
            PropensityAmplitude.from_json(text)

    def test_transition_needs_shared_space(self):
        psi = random_state(2, make_rng(5))
        with pytest.raises(SpaceMismatchError):
            transition_amplitude(prepared(psi, 2), prepared(psi, 3))

    def test_orthogonal_states_share_no_support(self):
        A0, A1 = prepared(basis_state(0, 2), 4), prepared(basis_state(1, 2), 4)
        assert np.intersect1d(A0.support(), A1.support()).size == 0
        assert transition_probability(A0, A1) == 0.0

    def test_json_round_trip(self):
        A = prepared(random_state(3, make_rng(9)), 2, SmearKind.GAUSSIAN)
        restored = PropensityAmplitude.from_json(A.to_json())
        assert restored.space == A.space
        np.testing.assert_array_equal(restored.values, A.values)
        assert A.to_dict()["smear"] == 2


class TestSharpen:
    def test_single_sublevel_is_psi_complete(self, rng):
        psi = random_state(4, rng)
        space = HiddenSpace(4, 1)
        result = sharpen(space, Preparation("P", psi, SmearProfile.uniform(1)))
        assert result.trace_distance_to_complete == 0.0
        assert result.embedding_infidelity < 1e-15
        np.testing.assert_allclose(reconstruct(prepared(psi, 1)).amplitudes, embed(psi, space).amplitudes,
                                   atol=1e-15)

    def test_spread_grows_with_smear(self, rng):
        psi = random_state(2, rng)
        spreads = [sharpen(HiddenSpace(2, m), Preparation("P", psi, SmearProfile.uniform(m))).trace_distance_to_complete
                   for m in (1, 2, 4, 8)]
        assert spreads == sorted(spreads)
        assert spreads[-1] == pytest.approx(1 - 1 / 8, abs=1e-15)


class TestBayesianUpdate:
    def test_update_concentrates_on_the_cell(self, rng):
        A = prepared(random_state(3, rng), 4)
        cell = A.space.cell_of(1)
        expected_weight = cell_weight(A, 1)
        posterior = bayesian_update(A, cell)

        assert posterior.is_normalized()
        assert set(posterior.support()) <= set(cell)
        np.testing.assert_allclose(posterior.values[cell.start:cell.stop],
                                   A.values[cell.start:cell.stop] / math.sqrt(expected_weight))

    def test_update_is_idempotent(self, rng):
        A = prepared(random_state(3, rng), 4)
        once = bayesian_update(A, A.space.cell_of(2))
        assert bayesian_update(once, A.space.cell_of(2)) is once

    def test_update_on_zero_weight_cell(self):
        A = prepared(basis_state(0, 2), 3)
        with pytest.raises(ImpossibleObservationError):
            bayesian_update(A, A.space.cell_of(1))
        with pytest.raises(ImpossibleObservationError):
            bayesian_update(A, [])

    def test_update_index_bounds(self):
        A = prepared(basis_state(0, 2), 3)
        with pytest.raises(DomainError):
            bayesian_update(A, [6])
