import pytest

import fractions
import itertools

import quasi_shuffle_signature.algebra.compositions as compositions
import quasi_shuffle_signature.algebra.polynomial as polynomial
import quasi_shuffle_signature.algebra.scalars as scalars
import quasi_shuffle_signature.hoffman.hoffman_map as hoffman_map
import quasi_shuffle_signature.hopf.coproduct as coproduct
import quasi_shuffle_signature.hopf.dual_functional as dual_functional
import quasi_shuffle_signature.hopf.products as products
import quasi_shuffle_signature.signature.iterated_sums as iterated_sums
import quasi_shuffle_signature.signature.lifted_path as lifted_path


def _nonempty_words(d, max_weight):
    return [
        w for w in compositions.canonical_words_up_to(d, max_weight)
        if len(w) > 0
    ]


def test_composition_apply():
    assert hoffman_map.composition_apply((2, 1), "[1][2,3][4]") == (
        polynomial.as_word("[1,2,3][4]"))
    assert hoffman_map.composition_apply((1, 1), "[2][1]") == (
        polynomial.as_word("[2][1]"))
    with pytest.raises(compositions.CompositionError, match="sums to"):
        hoffman_map.composition_apply((1, 1), "[1][2][3]")
    with pytest.raises(compositions.CompositionError, match="nonempty"):
        hoffman_map.composition_apply((), "e")


@pytest.mark.parametrize(
    "w,expected_exp,expected_log",
    [("e", "e", "e"),
     ("[1,2]", "[1,2]", "[1,2]"),
     ("[1][2]", "[1][2] + 1/2 [1,2]", "[1][2] - 1/2 [1,2]"),
     ("[1][2][3]",
      "[1][2][3] + 1/2 [1][2,3] + 1/2 [1,2][3] + 1/6 [1,2,3]",
      "[1][2][3] - 1/2 [1][2,3] - 1/2 [1,2][3] + 1/3 [1,2,3]")]
)
def test_hoffman_exp_log(w, expected_exp, expected_log):
    assert str(hoffman_map.hoffman_exp(w)) == expected_exp
    assert str(hoffman_map.hoffman_log(w)) == expected_log


def test_exp_log_are_inverse():
    for w in compositions.canonical_words_up_to(2, 4):
        assert hoffman_map.hoffman_log(hoffman_map.hoffman_exp(w)) == w
        assert hoffman_map.hoffman_exp(hoffman_map.hoffman_log(w)) == w


def test_exp_is_algebra_morphism():
    """
    exp_H(u sh v) = exp_H(u) * exp_H(v)
    """
    words = _nonempty_words(2, 2)
    for u, v in itertools.product(words, repeat=2):
        lhs = hoffman_map.hoffman_exp(products.shuffle(u, v))
        rhs = products.quasi_shuffle(
            hoffman_map.hoffman_exp(u), hoffman_map.hoffman_exp(v))
        assert lhs == rhs


def test_exp_is_coalgebra_morphism():
    """
    delta(exp_H(w)) = (exp_H (x) exp_H) delta(w)
    """
    for w in _nonempty_words(2, 3):
        lhs = coproduct.coproduct(hoffman_map.hoffman_exp(w))
        rhs = coproduct.apply_to_tensor(
            coproduct.coproduct(w),
            left_map=hoffman_map.hoffman_exp,
            right_map=hoffman_map.hoffman_exp
        )
        assert lhs == rhs


def test_remainder():
    assert hoffman_map.hoffman_remainder("[1]").is_zero()
    assert str(hoffman_map.hoffman_remainder("[1][2]")) == "1/2 [1,2]"
    for w in _nonempty_words(2, 4):
        lhs = hoffman_map.hoffman_exp(w)
        rhs = products.concatenate(
            hoffman_map.hoffman_exp(w[:-1]), w[-1:]
        ) + hoffman_map.hoffman_remainder(w)
        assert lhs == rhs
    with pytest.raises(ValueError, match="undefined on e"):
        hoffman_map.hoffman_remainder("e")


def test_lie_compatibility():
    """
    exp_H(u([a][b] - [b][a])) = exp_H(u[a])[b] - exp_H(u[b])[a]
    """
    brackets = [polynomial.as_word(t) for t in ("[1]", "[2]", "[1,2]")]
    for u in compositions.canonical_words_up_to(2, 2):
        for a, b in itertools.combinations(brackets, 2):
            if u.weight + a.weight + b.weight > 5:
                continue
            lhs = hoffman_map.hoffman_exp(
                polynomial.Polynomial({u + a + b: 1, u + b + a: -1}))
            rhs = (
                products.concatenate(hoffman_map.hoffman_exp(u + a), b)
                - products.concatenate(hoffman_map.hoffman_exp(u + b), a)
            )
            assert lhs == rhs


def test_float_rejected():
    p = polynomial.Polynomial({"[1]": 0.5})
    with pytest.raises(scalars.ScalarKindError, match="exact"):
        hoffman_map.hoffman_exp(p)
    with pytest.raises(scalars.ScalarKindError, match="exact"):
        hoffman_map.hoffman_adjoint(
            dual_functional.epsilon(2, d=1, kind=scalars.FLOAT))


def test_adjoint_transfers_signatures(exact_series_fixture):
    """
    exp_H^* maps the iterated-sums signature to the iterated-integrals
    signature of the piecewise-linear lifted path, and log_H^* maps it
    back
    """
    sums = iterated_sums.iterated_sums_signature(
        exact_series_fixture, max_weight=4)
    integrals = lifted_path.iterated_integrals_signature_pl(
        exact_series_fixture, max_weight=4)
    transferred = hoffman_map.hoffman_adjoint(sums)
    assert transferred == integrals
    assert hoffman_map.hoffman_log_adjoint(transferred) == sums


def test_exp_coefficients_are_inverse_factorials():
    w = polynomial.as_word("[1][1][1][1]")
    result = hoffman_map.hoffman_exp(w)
    assert result["[1,1,1,1]"] == fractions.Fraction(1, 24)
    assert result["[1,1][1,1]"] == fractions.Fraction(1, 4)
    assert result["[1][1,1,1]"] == fractions.Fraction(1, 6)
