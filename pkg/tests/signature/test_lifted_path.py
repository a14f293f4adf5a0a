import pytest

import fractions
import itertools

import quasi_shuffle_signature.algebra.compositions as compositions
import quasi_shuffle_signature.algebra.words as words_module
import quasi_shuffle_signature.hoffman.hoffman_map as hoffman_map
import quasi_shuffle_signature.hopf.dual_functional as dual_functional
import quasi_shuffle_signature.hopf.products as products
import quasi_shuffle_signature.signature.iterated_sums as iterated_sums
import quasi_shuffle_signature.signature.lifted_path as lifted_path
import quasi_shuffle_signature.signature.time_series as time_series


def test_lift_increments():
    x = time_series.TimeSeries([[0, 0], [1, 2], [3, 1]])
    lifted = lifted_path.lift_increments(x, max_weight=2)
    assert [str(b) for b in lifted] == [
        "[1]", "[2]", "[1,1]", "[1,2]", "[2,2]"]
    assert lifted[words_module.Bracket([1, 2])].tolist() == [2, -2]
    assert lifted[words_module.Bracket([2, 2])].tolist() == [4, 1]

    values = lifted_path.lifted_path_values(x, max_weight=2)
    assert values[words_module.Bracket([1])].tolist() == [0, 1, 3]
    assert values[words_module.Bracket([1, 1])].tolist() == [0, 1, 5]


def test_step_functional():
    x = time_series.TimeSeries([[0, 0], [1, 2], [3, 1]])
    step = lifted_path.step_functional(x, 2, max_weight=2)
    assert step["[1]"] == 2
    assert step["[2]"] == -1
    assert step["[1,2]"] == -2
    assert step["e"] == 0
    assert step["[1][2]"] == 0


def test_linear_path_signature():
    """
    A single linear piece: a word of length p gets the product of its
    bracket increments divided by p!
    """
    x = time_series.TimeSeries([[0, 0], [2, 3]])
    sig = lifted_path.iterated_integrals_signature_pl(x, max_weight=3)
    assert sig["[1][2]"] == 3
    assert sig["[1][1][2]"] == fractions.Fraction(12, 6)
    assert sig["[1,2][1]"] == 6
    assert sig["[1,1,2]"] == 12


def test_shuffle_character(exact_series_fixture):
    sig = lifted_path.iterated_integrals_signature_pl(
        exact_series_fixture, max_weight=4)
    words = [w for w in compositions.canonical_words_up_to(2, 2)
             if len(w) > 0]
    for u, v in itertools.product(words, repeat=2):
        assert dual_functional.pair(
            products.shuffle(u, v), sig) == sig[u]*sig[v]


def test_hoffman_transfer(exact_series_fixture):
    x = exact_series_fixture
    sums = iterated_sums.iterated_sums_signature(x, max_weight=3)
    integrals = lifted_path.iterated_integrals_signature_pl(x, max_weight=3)
    for w in compositions.canonical_words_up_to(2, 3):
        assert dual_functional.pair(
            hoffman_map.hoffman_exp(w), sums) == integrals[w]


def test_golden_one_dimensional():
    x = time_series.TimeSeries([0, 1, 3])
    sig = lifted_path.iterated_integrals_signature_pl(x, max_weight=2)
    assert sig["[1][1]"] == fractions.Fraction(9, 2)
    assert sig["[1,1]"] == 5


def test_errors():
    with pytest.raises(ValueError, match="must be of type"):
        lifted_path.lift_increments([0, 1])
    with pytest.raises(ValueError, match="must be an integer"):
        lifted_path.iterated_integrals_signature_pl(
            time_series.TimeSeries([0, 1]), max_weight=1.5)
