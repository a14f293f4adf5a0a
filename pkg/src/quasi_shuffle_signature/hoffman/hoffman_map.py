"""
Hoffman's exponential and logarithm, the isomorphisms between the
shuffle and the quasi-shuffle Hopf algebras on T(A):

    exp_H(w) = sum_{I in C(l(w))} I[w] / (i_1! ... i_p!)
    log_H(w) = sum_{I in C(l(w))} (-1)^(l(w)-p) I[w] / (i_1 ... i_p)

Only exact scalars are supported.
"""
import fractions
import functools
import math

import quasi_shuffle_signature.algebra.compositions as compositions
import quasi_shuffle_signature.algebra.polynomial as polynomial
import quasi_shuffle_signature.algebra.scalars as scalars
import quasi_shuffle_signature.hopf.dual_functional as dual_functional


def composition_apply(composition, w):
    """
    The word I[w]: consecutive blocks of brackets of w (block sizes
    given by the composition I) merged by the semigroup product.

    Parameters
    ----------
    composition:
        tuple of positive integers summing to the length of w
    w:
        a nonempty Word (or word string)

    Returns
    -------
    A Word of length len(composition) and the same weight as w
    """
    w = polynomial.as_word(w)
    if len(w) == 0:
        raise compositions.CompositionError(
            "composition_apply needs a nonempty word"
        )
    composition = tuple(composition)
    if sum(composition) != len(w):
        raise compositions.CompositionError(
            f"composition {composition} sums to {sum(composition)}; "
            f"word {w} has length {len(w)}"
        )
    return compositions.merge_blocks(composition, w)


def hoffman_exp(w, d=None):
    """
    Hoffman's exponential, extended linearly to Polynomials.
    exp_H(e) = e.
    """
    return _apply_exact(w, _hoffman_exp_word, d=d)


def hoffman_log(w, d=None):
    """
    Hoffman's logarithm, the two-sided inverse of hoffman_exp
    """
    return _apply_exact(w, _hoffman_log_word, d=d)


def hoffman_remainder(w, d=None):
    """
    R_H(w): the part of exp_H(w) coming from compositions whose
    last part is > 1, so that

        exp_H(w_1...w_n) = exp_H(w_1...w_{n-1}) w_n + R_H(w)
    """
    w = polynomial.as_word(w, d=d)
    if len(w) == 0:
        raise ValueError("hoffman_remainder is undefined on e")
    result = dict()
    for composition in compositions.compositions(len(w)):
        if composition[-1] == 1:
            continue
        merged = compositions.merge_blocks(composition, w)
        result[merged] = (
            result.get(merged, 0) + _inverse_factorial_product(composition)
        )
    return polynomial.Polynomial._trusted(
        result, d=d, kind=scalars.EXACT)


def hoffman_adjoint(c):
    """
    The adjoint exp_H^* acting on a dual functional:

        <w, exp_H^*(c)> = <exp_H(w), c>

    for every word w up to the truncation weight.
    """
    if c.kind != scalars.EXACT:
        raise scalars.ScalarKindError(
            "hoffman_adjoint is only defined for exact functionals"
        )
    return dual_functional.precompose(c, _hoffman_exp_word)


def hoffman_log_adjoint(c):
    """
    <w, log_H^*(c)> = <log_H(w), c>
    """
    if c.kind != scalars.EXACT:
        raise scalars.ScalarKindError(
            "hoffman_log_adjoint is only defined for exact functionals"
        )
    return dual_functional.precompose(c, _hoffman_log_word)


def _apply_exact(w, word_map, d=None):
    p = polynomial.as_polynomial(w, d=d)
    if p.kind != scalars.EXACT:
        raise scalars.ScalarKindError(
            "Hoffman's maps are only defined for exact scalars; "
            f"you gave a polynomial with {p.kind} coefficients"
        )
    return p.map_words(word_map)


@functools.lru_cache(maxsize=4096)
def _hoffman_exp_word(w):
    result = dict()
    for composition in compositions.compositions(len(w)):
        merged = compositions.merge_blocks(composition, w)
        result[merged] = (
            result.get(merged, 0) + _inverse_factorial_product(composition)
        )
    return polynomial.Polynomial._trusted(
        result, d=None, kind=scalars.EXACT)


@functools.lru_cache(maxsize=4096)
def _hoffman_log_word(w):
    result = dict()
    n = len(w)
    for composition in compositions.compositions(n):
        merged = compositions.merge_blocks(composition, w)
        sign = 1 if (n - len(composition)) % 2 == 0 else -1
        value = sign*fractions.Fraction(1, math.prod(composition))
        result[merged] = result.get(merged, 0) + value
    return polynomial.Polynomial._trusted(
        result, d=None, kind=scalars.EXACT)


def _inverse_factorial_product(composition):
    return fractions.Fraction(
        1,
        math.prod(math.factorial(part) for part in composition)
    )

