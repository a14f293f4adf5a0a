import pytest

import fractions

import numpy as np

import quasi_shuffle_signature.algebra.scalars as scalars
import quasi_shuffle_signature.signature.features as features
import quasi_shuffle_signature.signature.iterated_sums as iterated_sums
import quasi_shuffle_signature.signature.time_series as time_series


def test_signature_feature_vector():
    x = time_series.TimeSeries([0, 1, 3])
    sig = iterated_sums.iterated_sums_signature(x, max_weight=2)
    vector = features.signature_feature_vector(sig)
    assert vector.dtype == object
    assert vector.tolist() == [1, 3, 2, 5]

    selected = features.signature_feature_vector(sig, words=["[1,1]", "e"])
    assert selected.tolist() == [5, 1]

    x_float = time_series.TimeSeries([0.0, 1.0, 3.0])
    vector = features.signature_feature_vector(
        iterated_sums.iterated_sums_signature(x_float, max_weight=2))
    assert vector.dtype == float
    np.testing.assert_allclose(vector, [1.0, 3.0, 2.0, 5.0])


def test_signature_feature_frame(series_factory):
    series_list = [series_factory(n_steps=5, d=2) for _ in range(3)]
    frame = features.signature_feature_frame(
        series_list, max_weight=2, index=["a", "b", "c"])
    assert frame.shape == (3, 10)
    assert list(frame.columns[:4]) == ["e", "[1]", "[2]", "[1][1]"]
    assert list(frame.index) == ["a", "b", "c"]
    sig = iterated_sums.iterated_sums_signature(series_list[1], max_weight=2)
    assert frame.loc["b", "[1][2]"] == sig["[1][2]"]
    assert (frame["e"] == 1).all()


def test_signature_feature_frame_errors(series_factory):
    with pytest.raises(ValueError, match="empty"):
        features.signature_feature_frame([])
    with pytest.raises(time_series.TimeSeriesError, match="d=1"):
        features.signature_feature_frame(
            [series_factory(n_steps=3, d=2), series_factory(n_steps=3, d=1)])
    with pytest.raises(scalars.ScalarKindError, match="float"):
        features.signature_feature_frame(
            [time_series.TimeSeries([0, 1]),
             time_series.TimeSeries([0.0, 1.0])])
    with pytest.raises(ValueError, match="must be of type"):
        features.signature_feature_frame(
            [time_series.TimeSeries([0, 1]), [0, 1]])


def test_warping_invariant_distance(series_factory):
    x = series_factory(n_steps=6, d=2, denominator=3)
    warped = time_series.time_warp(time_series.time_warp(x, 2), 5)
    assert features.warping_invariant_distance(x, warped) == 0.0
    assert isinstance(features.warping_invariant_distance(x, warped), float)

    y = time_series.TimeSeries([[0, 0], [1, 0], [1, 1]])
    z = time_series.TimeSeries([[0, 0], [0, 1], [1, 1]])
    distance = features.warping_invariant_distance(y, z, max_weight=2)
    # [1][2] and [2][1] swap between 1 and 0
    assert distance == pytest.approx(np.sqrt(2.0))

    with pytest.raises(time_series.TimeSeriesError, match="cannot compare"):
        features.warping_invariant_distance(
            y, time_series.TimeSeries([0, 1]))


def test_exact_feature_values_are_fractions(series_factory):
    x = series_factory(n_steps=4, d=1, denominator=3)
    vector = features.signature_feature_vector(
        iterated_sums.iterated_sums_signature(x, max_weight=2))
    assert all(isinstance(v, fractions.Fraction) for v in vector)
