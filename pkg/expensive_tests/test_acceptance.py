"""
Acceptance-scale runs of the algebraic identities on many random
series and on fine partitions.

These take minutes rather than seconds, so they are kept out of
py.test tests/
"""
import pytest

import fractions
import itertools
import json

import numpy as np

import quasi_shuffle_signature.algebra.compositions as compositions
import quasi_shuffle_signature.area.area_ops as area_ops
import quasi_shuffle_signature.area.linear_algebra as linear_algebra
import quasi_shuffle_signature.cli.area_calculator as area_calculator
import quasi_shuffle_signature.cli.compute_signature as compute_signature
import quasi_shuffle_signature.hoffman.hoffman_map as hoffman_map
import quasi_shuffle_signature.hopf.coproduct as coproduct
import quasi_shuffle_signature.hopf.dual_functional as dual_functional
import quasi_shuffle_signature.hopf.products as products
import quasi_shuffle_signature.qsym.dimensions as dimensions
import quasi_shuffle_signature.signature.continuous_paths as continuous_paths
import quasi_shuffle_signature.signature.iterated_sums as iterated_sums
import quasi_shuffle_signature.signature.lifted_path as lifted_path
import quasi_shuffle_signature.signature.parallel as parallel
import quasi_shuffle_signature.signature.time_series as time_series
import quasi_shuffle_signature.utils.file_utils as file_utils
import quasi_shuffle_signature.utils.log_class as log_class


@pytest.fixture(scope='session')
def tmp_dir_fixture(
        tmp_path_factory):
    result = tmp_path_factory.mktemp('quasi_shuffle_signature_acceptance_')
    yield result
    print(f'cleaning up {result}')
    file_utils.clean_up(result)


@pytest.fixture
def rng():
    return np.random.default_rng(771123)


def _random_series(rng, d, max_steps=8, low=-5, high=6):
    n_steps = int(rng.integers(1, max_steps+1))
    values = rng.integers(low, high, size=(n_steps+1, d))
    return time_series.TimeSeries(
        [[fractions.Fraction(int(v)) for v in row] for row in values],
        kind='exact'
    )


def _nonempty_words(d, max_weight):
    return [
        w for w in compositions.canonical_words_up_to(d, max_weight)
        if len(w) > 0
    ]


@pytest.mark.parametrize("d", [1, 2, 3])
def test_character_identity(rng, d):
    for _ in range(200):
        x = _random_series(rng, d)
        sig = iterated_sums.iterated_sums_signature(x, max_weight=5)
        assert dual_functional.find_character_violation(sig) is None


@pytest.mark.parametrize("d", [1, 2, 3])
def test_chen_every_split(rng, d):
    for _ in range(200):
        x = _random_series(rng, d)
        full = iterated_sums.iterated_sums_signature(x, max_weight=4)
        for k in range(x.n_steps+1):
            merged = iterated_sums.chen_merge(
                iterated_sums.iterated_sums_signature(
                    x, n=0, m=k, max_weight=4),
                iterated_sums.iterated_sums_signature(
                    x, n=k, m=x.n_steps, max_weight=4)
            )
            assert merged == full


@pytest.mark.parametrize("d", [1, 2, 3])
def test_time_warping_invariance(rng, d):
    max_weight = 5
    for _ in range(100):
        x = _random_series(rng, d)
        reference = iterated_sums.iterated_sums_signature(
            x, max_weight=max_weight)
        for n in range(1, x.n_steps+1):
            warped = time_series.time_warp(x, n)
            assert iterated_sums.iterated_sums_signature(
                warped, max_weight=max_weight) == reference


@pytest.mark.parametrize("d,max_weight", [(1, 6), (2, 6), (3, 6)])
def test_hoffman_exp_is_invertible(d, max_weight):
    for w in compositions.canonical_words_up_to(d, max_weight):
        assert hoffman_map.hoffman_log(hoffman_map.hoffman_exp(w)) == w


@pytest.mark.parametrize("d,max_weight", [(1, 6), (2, 6), (3, 6)])
def test_hoffman_exp_is_hopf_morphism(d, max_weight):
    words = _nonempty_words(d, max_weight)
    for u, v in itertools.product(words, repeat=2):
        if u.weight + v.weight > max_weight:
            continue
        assert hoffman_map.hoffman_exp(products.shuffle(u, v)) == (
            products.quasi_shuffle(
                hoffman_map.hoffman_exp(u), hoffman_map.hoffman_exp(v)))
    for w in words:
        assert coproduct.coproduct(hoffman_map.hoffman_exp(w)) == (
            coproduct.apply_to_tensor(
                coproduct.coproduct(w),
                left_map=hoffman_map.hoffman_exp,
                right_map=hoffman_map.hoffman_exp))


@pytest.mark.parametrize("d", [1, 2])
def test_lifted_path_transfer(rng, d):
    for _ in range(25):
        x = _random_series(rng, d, max_steps=6)
        sums = iterated_sums.iterated_sums_signature(x, max_weight=4)
        integrals = lifted_path.iterated_integrals_signature_pl(
            x, max_weight=4)
        for w in compositions.canonical_words_up_to(d, 4):
            assert dual_functional.pair(
                hoffman_map.hoffman_exp(w), sums) == integrals[w]

    x = time_series.TimeSeries([0, 1, 3])
    integrals = lifted_path.iterated_integrals_signature_pl(x, max_weight=2)
    assert integrals["[1][1]"] == fractions.Fraction(9, 2)


def test_partition_refinement_consistency():
    """
    X = (t, t^2) on [0, 1] sampled on N = 2^k points
    """
    coefficients = [[0, 1], [0, 0, 1]]
    reference = continuous_paths.polynomial_path_signature(
        coefficients, max_weight=3)
    words = compositions.canonical_words_up_to(2, 3)
    letter_words = [
        w for w in words
        if len(w) >= 2 and all(b.weight == 1 for b in w)]
    heavy_words = [w for w in words if any(b.weight > 1 for b in w)]

    previous = None
    for k in range(2, 11):
        x = continuous_paths.sample_polynomial_path(
            coefficients, n_steps=2**k)
        sig = iterated_sums.iterated_sums_signature(x, max_weight=3)
        errors = {
            w: abs(sig[w] - float(reference[w])) for w in letter_words}
        magnitudes = {w: abs(sig[w]) for w in heavy_words}
        if previous is not None:
            for w in letter_words:
                assert errors[w] <= previous[0][w] + 1.0e-12
            for w in heavy_words:
                assert magnitudes[w] <= previous[1][w] + 1.0e-12
        previous = (errors, magnitudes)

    assert max(previous[0].values()) < 1.0e-3
    assert max(previous[1].values()) < 1.0e-2


def test_antipode_gives_character_inverse(rng):
    for d in (1, 2, 3):
        for _ in range(100):
            sig = iterated_sums.iterated_sums_signature(
                _random_series(rng, d), max_weight=4)
            inverse = dual_functional.precompose(sig, coproduct.antipode)
            assert dual_functional.convolve(inverse, sig) == (
                dual_functional.epsilon(4))
            assert dual_functional.convolve(sig, inverse) == (
                dual_functional.epsilon(4))


def test_bracket_square_is_nonnegative(rng):
    for _ in range(1000):
        x = _random_series(rng, 1)
        sig = iterated_sums.iterated_sums_signature(x, max_weight=2)
        value = dual_functional.log_conv(sig)["[1,1]"]
        assert value >= 0
        assert value == sum(v**2 for v in x.increments[:, 0])

    # a character whose [1,1] coefficient is negative, hence not
    # the signature of any one-dimensional series
    f = dual_functional.DualFunctional(
        {"[1]": 1, "[1][1]": fractions.Fraction(1, 2), "[1,1]": -1},
        max_weight=2, d=1)
    c = dual_functional.exp_conv(f)
    assert dual_functional.is_character(c)
    assert c["[1,1]"] < 0


def test_area_morphism():
    elements = area_ops.area_space_span("continuous", 2, 4)
    for p, q in itertools.product(elements, elements):
        if p.max_weight() + q.max_weight() > 4:
            continue
        assert hoffman_map.hoffman_exp(area_ops.area(p, q)) == (
            area_ops.darea(
                hoffman_map.hoffman_exp(p), hoffman_map.hoffman_exp(q)))


def test_area_span_theorem():
    report = area_calculator.span_check(d=2, max_weight=4)
    assert report['passed']
    assert report['missing'] is None


def test_dimension_tables():
    for d in (1, 2, 3):
        table = dimensions.dimension_table(d, 7)
        assert table['agree'].all()
    assert dimensions.dimension_table(1, 7)['dim'].tolist() == [
        1, 1, 2, 4, 8, 16, 32, 64]


def test_spanning_lemma(rng):
    """
    Signatures of random series span the dual of the words of
    weight <= 3 over two letters
    """
    words = compositions.canonical_words_up_to(2, 3)
    target = sum(dimensions.hilbert_dim(2, n) for n in range(4))
    assert len(words) == target
    rows = []
    rank = 0
    while len(rows) < 3*target and rank < target:
        sig = iterated_sums.iterated_sums_signature(
            _random_series(rng, 2), max_weight=3)
        rows.append([sig[w] for w in words])
        rank = linear_algebra.exact_rank(rows)
    assert rank == target


def test_parallel_determinism(rng):
    x = _random_series(rng, 2, max_steps=40)
    direct = iterated_sums.iterated_sums_signature(x, max_weight=4)
    for chunks in (1, 2, 4, 8, x.n_steps):
        assert parallel.parallel_signature(
            x, max_weight=4, chunks=chunks) == direct
    assert parallel.parallel_signature(
        x, max_weight=4, chunks=4, n_processors=2,
        log=log_class.QuietLog()) == direct

    y = time_series.TimeSeries(rng.uniform(-1.0, 1.0, size=(201, 3)))
    direct = iterated_sums.iterated_sums_signature(y, max_weight=4)
    for chunks in (2, 4, 8, 200):
        chunked = parallel.parallel_signature(y, max_weight=4, chunks=chunks)
        for w in iterated_sums.signature_words(3, 4):
            assert np.isclose(
                chunked[w], direct[w], rtol=1.0e-12, atol=1.0e-12)


def test_sig_cli_with_workers(tmp_dir_fixture, rng):
    csv_path = file_utils.mkstemp_clean(dir=tmp_dir_fixture, suffix='.csv')
    values = rng.integers(-5, 6, size=(60, 2))
    with open(csv_path, 'w') as dst:
        dst.write("a,b\n")
        for row in values:
            dst.write(f"{row[0]},{row[1]}\n")

    serial_path = file_utils.mkstemp_clean(
        dir=tmp_dir_fixture, suffix='.json', delete=True)
    parallel_path = file_utils.mkstemp_clean(
        dir=tmp_dir_fixture, suffix='.json', delete=True)
    assert compute_signature.main(
        [csv_path, "--exact", "--max-weight", "4",
         "--output", serial_path]) == 0
    assert compute_signature.main(
        [csv_path, "--exact", "--max-weight", "4", "--chunks", "6",
         "--n-processors", "3", "--output", parallel_path]) == 0

    with open(serial_path, 'rb') as src:
        serial = json.load(src)
    with open(parallel_path, 'rb') as src:
        chunked = json.load(src)
    assert serial == chunked
