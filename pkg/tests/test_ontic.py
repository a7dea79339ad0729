import math

import numpy as np
import pytest

from onticlab.sdk.common.exceptions import (
    ConfigParseError,
    DimensionMismatchError,
    DomainError,
    GridMismatchError,
    NormalizationError,
)
from onticlab.sdk.models.modelFactory import ModelFactory
from onticlab.sdk.models.ontic import (
    EpistemicDistribution,
    KochenSpeckerModel,
    OnticGrid,
    ResponseFunction,
    born_integral,
    check_normalization,
    export_table,
    frozen_response_test,
    import_table,
    ks_distribution,
    ks_response,
    measure_of,
    overlap_region,
    response_differential,
    sphere_grid,
    support,
)
from onticlab.sdk.quantum import (
    EvolutionParams,
    HermitianOperator,
    StateVector,
    basis_state,
    bloch_vector,
    make_rng,
    overlap_probability,
    random_state,
    state_from_bloch,
)

PLUS = StateVector([1 / math.sqrt(2), 1 / math.sqrt(2)])
SIGMA_Z = HermitianOperator.diag([1.0, -1.0])


class TestGrid:
    def test_weights_cover_the_sphere(self):
        grid = sphere_grid(3, 5, 2)
        assert grid.count == 6 * 10
        assert math.fsum(grid.weights) == pytest.approx(4 * math.pi, abs=1e-12)
        assert grid.covers_sphere

    def test_directions_are_unit_vectors(self, coarse_grid):
        np.testing.assert_allclose(np.linalg.norm(coarse_grid.directions, axis=1), 1.0, atol=1e-14)

    @pytest.mark.parametrize("args", [(0, 4, 1), (4, 0, 1), (4, 4, 0)])
    def test_rejects_empty_resolution(self, args):
        with pytest.raises(DomainError):
            sphere_grid(*args)

    def test_rejects_bad_weights(self):
        with pytest.raises(DomainError):
            OnticGrid(points=[[0.0, 0.0], [1.0, 1.0]], weights=[1.0, -1.0], total_measure=0.0)
        with pytest.raises(DomainError):
            OnticGrid(points=[[0.0, 0.0]], weights=[1.0], total_measure=2.0)

    def test_same_as(self):
        assert sphere_grid(2, 4, 1).same_as(sphere_grid(2, 4, 1))
        assert not sphere_grid(2, 4, 1).same_as(sphere_grid(2, 4, 2))


class TestTables:
    def test_uniform_distribution_is_normalized(self, coarse_grid):
        mu = EpistemicDistribution.uniform(coarse_grid)
        assert check_normalization(mu) == pytest.approx(1.0, abs=1e-12)
        assert born_integral(ResponseFunction.constant(coarse_grid), mu) == pytest.approx(1.0, abs=1e-12)

    def test_rejects_negative_or_unnormalized_density(self):
        grid = sphere_grid(2, 4, 1)
        with pytest.raises(DomainError):
            EpistemicDistribution(np.full(grid.count, -1.0), grid)
        with pytest.raises(NormalizationError):
            EpistemicDistribution(np.full(grid.count, 1.0), grid)
        EpistemicDistribution(np.full(grid.count, 1.0), grid, enforce_normalization=False)

    def test_response_range_and_length(self):
        grid = sphere_grid(2, 4, 1)
        with pytest.raises(DomainError):
            ResponseFunction(np.full(grid.count, 1.5), grid)
        with pytest.raises(DomainError):
            ResponseFunction(np.ones(grid.count + 1), grid)

    def test_grid_mismatch(self):
        a, b = sphere_grid(2, 4, 1), sphere_grid(3, 4, 1)
        with pytest.raises(GridMismatchError):
            born_integral(ResponseFunction.constant(a), EpistemicDistribution.uniform(b))

    def test_born_integral_is_monotone_in_response(self, coarse_grid, rng):
        mu = ks_distribution(state_from_bloch(0.9, 0.4), coarse_grid)
        lower = rng.uniform(0.0, 1.0, coarse_grid.count)
        upper = np.minimum(lower + rng.uniform(0.0, 1.0, coarse_grid.count) * (1.0 - lower), 1.0)
        low = born_integral(ResponseFunction(lower, coarse_grid), mu)
        assert low <= born_integral(ResponseFunction(upper, coarse_grid), mu)
        assert low <= born_integral(ResponseFunction.constant(coarse_grid), mu)
        assert born_integral(ResponseFunction.constant(coarse_grid, 0.0), mu) <= low

    def test_support_and_overlap(self, coarse_grid):
        up = ks_distribution(basis_state(0, 2), coarse_grid)
        down = ks_distribution(basis_state(1, 2), coarse_grid)
        plus = ks_distribution(PLUS, coarse_grid)
        assert overlap_region(up, down).size == 0
        assert measure_of(coarse_grid, support(up)) == pytest.approx(2 * math.pi, abs=1e-9)
        # quarter sphere between two orthogonal hemispheres
        assert measure_of(coarse_grid, overlap_region(up, plus)) == pytest.approx(math.pi, rel=1e-2)
        with pytest.raises(DomainError):
            support(up, threshold=-1.0)


class TestKochenSpecker:
    def test_distribution_is_normalized(self, coarse_grid):
        mu = ks_distribution(state_from_bloch(0.7, 2.1), coarse_grid)
        assert check_normalization(mu) == pytest.approx(1.0, abs=1e-12)

    def test_raw_density_is_close_to_normalized(self, coarse_grid):
        mu = ks_distribution(state_from_bloch(0.7, 2.1), coarse_grid, renormalize=False)
        assert check_normalization(mu) == pytest.approx(1.0, abs=5e-3)

    def test_response_is_hemisphere_indicator(self, coarse_grid):
        xi = ks_response(PLUS, coarse_grid)
        assert set(np.unique(xi.values)) <= {0.0, 1.0}
        hemisphere = coarse_grid.directions @ bloch_vector(PLUS) > 0
        np.testing.assert_array_equal(xi.values.astype(bool), hemisphere)

    def test_response_is_one_on_own_support(self, coarse_grid):
        for psi in (PLUS, basis_state(1, 2), state_from_bloch(0.7, 2.1)):
            own_support = support(ks_distribution(psi, coarse_grid), 0)
            assert own_support.size > 0
            assert np.all(ks_response(psi, coarse_grid).values[own_support] == 1.0)

    def test_born_rule_on_random_pairs(self, ks_coarse):
        rng = make_rng(7)
        for _ in range(20):
            phi, psi = random_state(2, rng), random_state(2, rng)
            assert abs(ks_coarse.born(phi, psi) - overlap_probability(phi, psi)) < 5e-3

    def test_identical_and_orthogonal_pairs_are_exact(self, ks_coarse, rng):
        psi = random_state(2, rng)
        orthogonal = StateVector([-np.conj(psi.amplitudes[1]), np.conj(psi.amplitudes[0])])
        assert ks_coarse.born(psi, psi) == pytest.approx(1.0, abs=1e-12)
        assert ks_coarse.born(orthogonal, psi) == pytest.approx(0.0, abs=1e-12)

    def test_result_independent_of_workers(self, ks_coarse, small_chunks, rng):
        phi, psi = random_state(2, rng), random_state(2, rng)
        single = ks_coarse.born(phi, psi, workers=1)
        assert ks_coarse.born(phi, psi, workers=4) == single
        assert ks_coarse.born(phi, psi, workers=8) == single

    @pytest.mark.slow
    def test_born_rule_on_the_default_grid(self, ks_full):
        rng = make_rng(20240601)
        for _ in range(10):
            phi, psi = random_state(2, rng), random_state(2, rng)
            assert abs(ks_full.born(phi, psi) - overlap_probability(phi, psi)) < 1e-4

    def test_qubit_only(self, ks_coarse):
        assert not ks_coarse.supports_dim(3)
        with pytest.raises(DimensionMismatchError):
            ks_coarse.mu_of(basis_state(0, 3))

    def test_needs_spherical_grid(self):
        grid = OnticGrid(points=[[0.0, 0.0], [1.0, 1.0]], weights=[0.5, 0.5], total_measure=1.0)
        with pytest.raises(DomainError):
            KochenSpeckerModel(grid)


class TestFrozenResponse:
    def test_frozen_integral_stays_at_one(self, ks_coarse):
        dt = 0.01
        result = frozen_response_test(PLUS, SIGMA_Z, EvolutionParams(dt=dt), ks_coarse)
        assert result.frozen_integral == pytest.approx(1.0, abs=1e-12)
        assert result.born_value == pytest.approx(math.cos(dt) ** 2, abs=1e-14)
        assert result.delta_H_sq == pytest.approx(1.0, abs=1e-14)
        assert result.deficit / result.leading_order == pytest.approx(1.0, abs=0.05)
        assert result.updated_integral == pytest.approx(result.born_value, abs=5e-3)

    def test_deficit_scales_quadratically(self, ks_coarse):
        deficits = [frozen_response_test(PLUS, SIGMA_Z, EvolutionParams(dt=dt), ks_coarse).deficit
                     for dt in (1e-2, 1e-3)]
        assert deficits[1] / deficits[0] == pytest.approx(1e-2, rel=1e-3)

    def test_eigenstate_has_no_deficit(self, ks_coarse):
        result = frozen_response_test(basis_state(0, 2), SIGMA_Z, EvolutionParams(dt=0.1), ks_coarse)
        assert result.deficit == pytest.approx(0.0, abs=1e-12)
        assert result.to_dict()["delta_H_sq"] == 0.0

    def test_response_jumps_on_a_lune(self, ks_coarse):
        dt = 0.1
        change = response_differential(PLUS, SIGMA_Z, EvolutionParams(dt=dt), ks_coarse)
        assert change.max_change == 1.0
        assert change.changed_points > 0
        assert change.changed_measure == pytest.approx(8 * dt, rel=0.1)

    def test_rejects_unsupported_dimension(self, ks_coarse):
        with pytest.raises(DimensionMismatchError):
            frozen_response_test(basis_state(0, 3), HermitianOperator.zeros(3), EvolutionParams(dt=0.1), ks_coarse)


class TestTableIO:
    def test_export_then_import(self, tmp_path):
        grid = sphere_grid(4, 8, 1)
        mu, xi = ks_distribution(PLUS, grid), ks_response(basis_state(0, 2), grid)
        path = export_table(tmp_path / "out" / "table.csv", mu, xi)
        lines = path.read_text(encoding="utf-8").splitlines()
        assert lines[0] == "theta,phi,weight,mu,xi"
        assert len(lines) == grid.count + 1

        grid2, mu2, xi2 = import_table(path)
        np.testing.assert_array_equal(grid2.points, grid.points)
        np.testing.assert_array_equal(grid2.weights, grid.weights)
        np.testing.assert_array_equal(mu2.values, mu.values)
        assert born_integral(xi2, mu2) == born_integral(xi, mu)

    def test_wrong_header(self, tmp_path):
        path = tmp_path / "bad.csv"
        path.write_text("theta,phi,mu\n", encoding="utf-8")
        with pytest.raises(ConfigParseError, match="line 1"):
            import_table(path)

    def test_malformed_row(self, tmp_path):
        path = tmp_path / "bad.csv"
        path.write_text("theta,phi,weight,mu,xi\n0.1,0.2,0.3,0.4,0\n0.1,x,0.3,0.4,1\n", encoding="utf-8")
        with pytest.raises(ConfigParseError, match="line 3"):
            import_table(path)


class TestModelFactory:
    def test_builds_ks(self, coarse_grid):
        model = ModelFactory().get_model("ks", grid=coarse_grid)
        assert isinstance(model, KochenSpeckerModel)
        assert model.grid is coarse_grid
        assert "ks" in ModelFactory.available()

    def test_unknown_model(self):
        with pytest.raises(KeyError):
            ModelFactory().get_model("bell", n_theta=2, n_phi=4, oversample=1)

    def test_register(self, monkeypatch, coarse_grid):
        monkeypatch.setitem(ModelFactory._builders, "ks-raw",
                            lambda grid, **kw: KochenSpeckerModel(grid, renormalize=False))
        model = ModelFactory().get_model("ks-raw", grid=coarse_grid)
        assert model.renormalize is False
