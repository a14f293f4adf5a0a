import pytest

import fractions

import numpy as np

from quasi_shuffle_signature.utils.file_utils import (
    clean_up)

import quasi_shuffle_signature.signature.time_series as time_series


@pytest.fixture(scope='session')
def tmp_dir_fixture(
        tmp_path_factory):
    result = tmp_path_factory.mktemp('quasi_shuffle_signature_')
    yield result
    clean_up(result)


@pytest.fixture
def rng():
    return np.random.default_rng(2213411)


def random_exact_series(rng, n_steps, d, low=-3, high=4, denominator=1):
    """
    TimeSeries of n_steps+1 points with entries k/denominator for
    random integers low <= k < high
    """
    numerators = rng.integers(low, high, size=(n_steps+1, d))
    return time_series.TimeSeries(
        [[fractions.Fraction(int(v), denominator) for v in row]
         for row in numerators],
        kind='exact'
    )


@pytest.fixture
def exact_series_fixture(rng):
    """
    A 2-dimensional exact series with 7 steps
    """
    return random_exact_series(rng, n_steps=7, d=2, denominator=2)


@pytest.fixture
def float_series_fixture(rng):
    """
    A 3-dimensional float series with 12 steps
    """
    return time_series.TimeSeries(
        rng.normal(0.0, 1.0, size=(13, 3))
    )


@pytest.fixture
def series_factory(rng):
    """
    Callable building random exact series from the shared rng
    """
    def factory(n_steps, d, low=-3, high=4, denominator=1):
        return random_exact_series(
            rng,
            n_steps=n_steps,
            d=d,
            low=low,
            high=high,
            denominator=denominator
        )
    return factory
