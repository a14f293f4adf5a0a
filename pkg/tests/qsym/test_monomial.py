import pytest

import fractions

import quasi_shuffle_signature.algebra.compositions as compositions
import quasi_shuffle_signature.algebra.polynomial as polynomial
import quasi_shuffle_signature.algebra.scalars as scalars
import quasi_shuffle_signature.algebra.words as words_module
import quasi_shuffle_signature.qsym.monomial as monomial
import quasi_shuffle_signature.signature.iterated_sums as iterated_sums


def test_monomial_eval_small():
    assert monomial.monomial_eval("[1][1]", [1, 2]) == 2
    assert monomial.monomial_eval("[1,1]", [1, 2]) == 5
    assert monomial.monomial_eval("[1]", [1, 2, 3]) == 6
    assert monomial.monomial_eval("e", [1, 2]) == 1
    assert monomial.monomial_eval("e", []) == 1
    assert monomial.monomial_eval("[1][1][1]", [1, 2]) == 0

    # Y_1 = (1, 2), Y_2 = (3, 5)
    Y = [[1, 2], [3, 5]]
    assert monomial.monomial_eval("[1][2]", Y) == 5
    assert monomial.monomial_eval("[2][1]", Y) == 6
    assert monomial.monomial_eval("[1,2]", Y) == 17
    assert monomial.monomial_eval("[1,1,2]", Y) == 2 + 45


def test_monomial_eval_kinds():
    half = fractions.Fraction(1, 2)
    value = monomial.monomial_eval("[1][1]", [half, "1/3"], kind=scalars.EXACT)
    assert value == fractions.Fraction(1, 6)
    assert isinstance(value, fractions.Fraction)

    value = monomial.monomial_eval("[1][1]", [0.5, 0.25])
    assert isinstance(value, float)
    assert value == pytest.approx(0.125)

    with pytest.raises(scalars.ScalarKindError):
        monomial.monomial_eval("[1]", [0.5, half])


def test_monomial_eval_at_increments(exact_series_fixture):
    """
    Evaluated at the increments of a series, the monomial function
    of a word is its iterated-sums signature coefficient
    """
    sig = iterated_sums.iterated_sums_signature(
        exact_series_fixture, max_weight=3)
    Y = exact_series_fixture.increments.tolist()
    for w in compositions.canonical_words_up_to(2, 3):
        assert monomial.monomial_eval(w, Y) == sig[w]


def test_evaluate_polynomial():
    Y = [[1, 2], [3, 5]]
    p = polynomial.Polynomial({"[1][2]": 2, "[2][1]": -1, "e": 3})
    assert monomial.evaluate_polynomial(p, Y) == 2*5 - 6 + 3
    assert monomial.evaluate_polynomial(
        polynomial.Polynomial({"[1]": 0.5}), [[1.0, 0.0]]) == 0.5
    with pytest.raises(scalars.ScalarKindError, match="float polynomial"):
        monomial.evaluate_polynomial(
            polynomial.Polynomial({"[1]": 0.5}), Y)


@pytest.mark.parametrize(
    "u,v",
    [("[1]", "[1]"),
     ("[1][2]", "[2]"),
     ("[1,2]", "[1][1]"),
     ("[2][1,1]", "[1][2]")]
)
def test_product_as_quasi_shuffle(u, v):
    exact_Y = [[1, -2], [fractions.Fraction(3, 2), 5], [-1, 1], [2, 2]]
    assert monomial.product_as_quasi_shuffle_check(u, v, exact_Y)
    float_Y = [[0.1, -0.7], [1.3, 0.2], [-0.4, 2.1]]
    assert monomial.product_as_quasi_shuffle_check(u, v, float_Y)


def test_monomial_errors():
    with pytest.raises(words_module.AlphabetError, match="d=2"):
        monomial.monomial_eval("[3]", [[1, 2]])
    with pytest.raises(ValueError, match="point 1"):
        monomial.monomial_eval("[1]", [[1, 2], [3]])


def test_monomial_eval_is_quasisymmetric(rng):
    """
    Spreading the points out with zeros in between leaves every
    monomial function unchanged
    """
    Y = [fractions.Fraction(int(n), 3) for n in rng.integers(-6, 7, size=4)]
    zero = fractions.Fraction(0)
    spread = [zero, Y[0], zero, zero, Y[1], Y[2], zero, Y[3], zero]
    for w in compositions.canonical_words_up_to(1, 5):
        assert monomial.monomial_eval(w, Y, kind=scalars.EXACT) == (
            monomial.monomial_eval(w, spread, kind=scalars.EXACT))


def test_summation_by_parts_example(rng):
    Y = [fractions.Fraction(int(n), int(m))
         for n, m in zip(rng.integers(-9, 10, size=5),
                         rng.integers(1, 6, size=5))]
    assert monomial.product_as_quasi_shuffle_check(
        "[1]", "[1,1,1][1,1,1,1,1,1,1]", Y)
