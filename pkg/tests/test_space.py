import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

import oracles
from cogs import (
    FreePhaseParams,
    SamplerConfig,
    complete_phases,
    enumerate_grid,
    extract_phases,
    is_cog_direct,
    manifold_dim,
    nearest_cog,
    sample_cog,
    sample_cogs,
    synthesize,
)
from cogs.core import angle_distance
from cogs.errors import AmbiguousProjectionError, EnumerationTooLargeError, InvalidArgumentError, InvalidDimensionError
from cogs.space import distance
from strategies import free_params

PI = math.pi


@pytest.mark.parametrize("N, dim", [(2, 0), (3, 1), (4, 1), (5, 2), (6, 2), (65, 32)])
def test_manifold_dim(N, dim):
    assert manifold_dim(N) == dim


def test_manifold_dim_rejects_small():
    with pytest.raises(InvalidDimensionError):
        manifold_dim(1)


def test_sampler_config_validation():
    with pytest.raises(InvalidDimensionError):
        SamplerConfig(1)
    with pytest.raises(InvalidArgumentError):
        SamplerConfig(4, seed=-1)
    with pytest.raises(InvalidArgumentError):
        SamplerConfig(4, branch_policy="both")


@pytest.mark.parametrize("N", range(2, 12))
def test_sample_is_cog_and_deterministic(N):
    cfg = SamplerConfig(N, seed=1234)
    cog, params = sample_cog(cfg)
    again, params_again = sample_cog(cfg)
    assert np.array_equal(cog.vector, again.vector)
    assert params == params_again
    assert is_cog_direct(cog.vector).is_cog
    assert len(params.free_angles) == manifold_dim(N)
    assert all(0 <= x < 2 * PI for x in params.free_angles)


def test_sample_stream_differs_from_draw_to_draw():
    draws = [c.vector for c, _ in sample_cogs(SamplerConfig(9, seed=5), 4)]
    assert len({tuple(d) for d in draws}) == 4


def test_sample_n2_fixed_plus():
    cog, params = sample_cog(SamplerConfig(2, seed=99, branch_policy="fixed_plus"))
    np.testing.assert_allclose(cog.vector, [1.0, 0.0], atol=1e-12)
    assert params.half_branch.value == "plus"


def test_sample_fixed_minus_and_independent_half():
    for c, p in sample_cogs(SamplerConfig(6, seed=1, branch_policy="fixed_minus", half_policy="random"), 40):
        assert p.theta0_branch.value == "minus"
        assert float(np.sum(c.vector)) == pytest.approx(-1.0, abs=1e-9)
    halves = {p.half_branch for _, p in sample_cogs(SamplerConfig(6, seed=1, half_policy="random"), 40)}
    assert len(halves) == 2


@pytest.mark.parametrize("N", [2, 3, 6, 11])
def test_sampled_parameters_round_trip(N):
    for cog, p in sample_cogs(SamplerConfig(N, seed=N), 25):
        theta = extract_phases(cog).theta
        assert np.max(angle_distance(theta, complete_phases(p).theta)) <= 1e-9


def test_grid_n3():
    items = list(enumerate_grid(3, 4, "fixed_plus"))
    assert [p.free_angles for _, p in items] == [(0.0,), (PI / 2,), (PI,), (3 * PI / 2,)]
    for cog, _ in items:
        assert oracles.is_cog(list(cog.vector), 1e-9)


def test_grid_order_is_lexicographic():
    items = [p for _, p in enumerate_grid(5, 2, "both")]
    keys = [(p.theta0_branch != "plus", p.free_angles) for p in items]
    assert keys == sorted(keys)
    assert len(items) == 2 * 2**2


@pytest.mark.parametrize("points", [1, 2, 7])
def test_grid_n2_is_the_four_signed_basis_vectors(points):
    got = [c.vector for c, _ in enumerate_grid(2, points, "both")]
    assert len(got) == 4
    expected = [[1, 0], [0, 1], [-1, 0], [0, -1]]
    for e in expected:
        assert sum(np.max(np.abs(g - e)) <= 1e-12 for g in got) == 1


def test_grid_n7_count():
    items = list(enumerate_grid(7, 10, "fixed_plus"))
    assert len(items) == 1000
    assert all(is_cog_direct(c.vector).is_cog for c, _ in items)


def test_grid_cap_and_arguments():
    with pytest.raises(EnumerationTooLargeError):
        enumerate_grid(9, 40, "both")
    with pytest.raises(EnumerationTooLargeError):
        enumerate_grid(5, 10, "fixed_plus", cap=99)
    with pytest.raises(InvalidArgumentError):
        enumerate_grid(5, 0)
    with pytest.raises(InvalidArgumentError):
        enumerate_grid(5, 3, "random")


def test_nearest_examples():
    example = [2 / 3, 2 / 3, -1 / 3]
    np.testing.assert_allclose(nearest_cog(example).vector, example, atol=1e-12)
    np.testing.assert_allclose(nearest_cog(2 * np.eye(4)[0]).vector, np.eye(4)[0], atol=1e-12)
    with pytest.raises(AmbiguousProjectionError) as info:
        nearest_cog([1, 1, 1], "error")
    assert info.value.bin == 1


def test_nearest_unit_phase_tie_break():
    cog = nearest_cog([1, 1, 1], "unit_phase")
    # bin 0 keeps its sign, bins 1 and 2 become 1: (3 + 1 + 1) / 3 at k = 1
    np.testing.assert_allclose(np.fft.fft(cog.vector), [1, 1, 1], atol=1e-12)
    assert is_cog_direct(cog.vector).is_cog


def test_nearest_even_n_real_bins_take_sign():
    v = np.array([0.1, -2.0, 0.3, 0.5])
    out = nearest_cog(v).vector
    spec_in, spec_out = np.fft.fft(v), np.fft.fft(out)
    assert spec_out[0].real == pytest.approx(np.sign(spec_in[0].real))
    assert spec_out[2].real == pytest.approx(np.sign(spec_in[2].real))


def test_nearest_brute_force_n4():
    v = 2 * np.eye(4)[0]
    best = min(
        distance(c, v) for c, _ in enumerate_grid(4, 4000, "both")
    )
    assert distance(nearest_cog(v), v) <= best + 1e-12
    assert distance(nearest_cog(v), v) == pytest.approx(1.0, abs=1e-12)


@settings(max_examples=200)
@given(free_params(max_n=32))
def test_nearest_idempotent_on_cogs(p):
    cog = synthesize(complete_phases(p))
    np.testing.assert_allclose(nearest_cog(cog).vector, cog.vector, atol=1e-12)


@settings(max_examples=100)
@given(st.lists(st.floats(-3, 3), min_size=3, max_size=3), st.integers(0, 2**32))
def test_nearest_beats_random_cogs(v, seed):
    try:
        out = nearest_cog(v)
    except AmbiguousProjectionError:
        return
    assert is_cog_direct(out.vector).is_cog
    d = distance(out, v)
    for cog, _ in sample_cogs(SamplerConfig(3, seed), 20):
        assert d <= distance(cog, v) + 1e-12
