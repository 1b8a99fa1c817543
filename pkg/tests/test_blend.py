import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from alefrank.authors import AuthorScoreTable
from alefrank.blend import (BlendConfig, blend_scores, max_normalize, randomize_unranked,
                            weight_sweep)
from alefrank.errors import ConfigError
from alefrank.evaluate import JudgmentSet, pairwise_performance


def test_weighted_mean():
    out = blend_scores(np.array([0.3]), np.array([0.4]), BlendConfig(0.7, 0.3))
    assert out.values[0] == 0.33


def test_fallbacks():
    alef = np.array([0.3, 0.0, 0.2, 0.0])
    pa = np.array([np.nan, 0.4, 0.1, np.nan])
    out = blend_scores(alef, pa).values
    assert out[0] == 0.3
    assert out[1] == 0.4
    assert out[2] == pytest.approx(0.7 * 0.2 + 0.3 * 0.1, abs=1e-16)
    assert out[3] == 0.0


def test_alef_only_weights_are_identity():
    rng = np.random.default_rng(0)
    alef = np.where(rng.random(100) < 0.3, 0.0, rng.random(100))
    pa = np.where(rng.random(100) < 0.5, np.nan, rng.random(100))
    out = blend_scores(alef, pa, BlendConfig(1.0, 0.0)).values
    assert out.tobytes() == alef.tobytes()


def test_author_only_weights_rank_like_pa():
    rng = np.random.default_rng(1)
    alef = rng.random(50)
    pa = np.where(rng.random(50) < 0.4, np.nan, rng.random(50))
    out = blend_scores(alef, pa, BlendConfig(0.0, 1.0)).values
    defined = ~np.isnan(pa)
    assert np.array_equal(out[defined], pa[defined])


@pytest.mark.parametrize("weights", [(0.7, 0.2), (1.2, -0.2), (0.5, 0.6)])
def test_bad_weights(weights):
    with pytest.raises(ConfigError):
        BlendConfig(*weights)


@settings(max_examples=200, deadline=None)
@given(st.floats(1e-12, 1.0), st.floats(1e-12, 1.0), st.floats(0.0, 1.0))
def test_blend_between_inputs(a, p, w):
    out = blend_scores(np.array([a]), np.array([p]), BlendConfig(1 - w, w)).values[0]
    assert min(a, p) <= out <= max(a, p)


def test_randomize_example():
    scores = np.array([0.5, 0.2, 0.0, 0.0])
    out = randomize_unranked(scores, seed=1).values
    assert out[0] == 0.5 and out[1] == 0.2
    assert np.all(out[2:] > 0) and np.all(out[2:] < 0.1998)
    assert out.tobytes() == randomize_unranked(scores, seed=1).values.tobytes()


def test_randomize_all_zero(caplog):
    out = randomize_unranked(np.zeros(3), seed=0).values
    assert not out.any()
    assert "nothing to randomize" in caplog.text


@settings(max_examples=50, deadline=None)
@given(st.integers(0, 2**63))
def test_randomize_invariants(seed):
    rng = np.random.default_rng(seed % 1000)
    values = np.where(rng.random(200) < 0.5, 0.0, rng.random(200))
    values[0] = 1e-300
    out = randomize_unranked(values, seed).values
    ranked = values > 0
    minval = values[ranked].min()
    assert np.all(out > 0)
    assert np.all(out[~ranked] < 0.999 * minval)
    assert np.array_equal(out[ranked], values[ranked])


def test_randomize_through_blend():
    out = blend_scores(np.array([0.3, 0.0]), np.array([np.nan, np.nan]),
                       BlendConfig(randomize_unranked=True, seed=3))
    assert out.coverage == 1.0 and out.values[1] < 0.3 * 0.999


def test_sweep():
    alef = np.array([0.5, 0.3, 0.2, 0.0])
    pa = np.array([np.nan, 0.6, 0.1, 0.05])
    j = JudgmentSet([1, 0, 3], [2, 3, 2])
    rep = weight_sweep(alef, pa, j, [(1.0, 0.0)])
    assert rep.performance[0] == pairwise_performance(alef, j).performance
    rep = weight_sweep(alef, pa, j, [(0.7, 0.3), (0.5, 0.5), (0.3, 0.7)])
    assert len(rep.performance) == 3 and rep.best in rep.grid
    empty = AuthorScoreTable.empty(4)
    assert (weight_sweep(alef, empty, j, [(0.7, 0.3)]).performance
            == weight_sweep(alef, empty, j, [(1.0, 0.0)]).performance)
    with pytest.raises(ConfigError):
        weight_sweep(alef, pa, j, [])


@given(st.lists(st.floats(0, 1e6), min_size=1, max_size=50))
def test_max_normalize_keeps_order(xs):
    x = np.array(xs)
    y = max_normalize(x).values
    assert y.max() <= 1.0 and y.min() >= 0.0
    if x.max() > 0:
        assert y.max() == 1.0
    # division may merge neighbours but never swaps them
    assert (np.diff(y[np.argsort(x, kind="stable")]) >= 0).all()


def test_max_normalize_all_zero():
    assert (max_normalize(np.zeros(3)).values == 0).all()
