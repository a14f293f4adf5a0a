"""
Deconcatenation coproduct, counit and antipode of the quasi-shuffle
Hopf algebra.
"""
import quasi_shuffle_signature.algebra.compositions as compositions
import quasi_shuffle_signature.algebra.polynomial as polynomial
import quasi_shuffle_signature.algebra.scalars as scalars
import quasi_shuffle_signature.algebra.words as words_module
import quasi_shuffle_signature.hopf.products as products


def coproduct(w, d=None):
    """
    Deconcatenation coproduct

        delta(w_1...w_n) = sum_{i=0}^{n} w_1...w_i (x) w_{i+1}...w_n

    so delta(e) = e (x) e. Extended linearly to Polynomials.

    Returns
    -------
    A TensorPair
    """
    p = polynomial.as_polynomial(w, d=d)
    result = dict()
    for word, coefficient in p.terms.items():
        for i_cut in range(len(word)+1):
            key = (word[:i_cut], word[i_cut:])
            if key in result:
                result[key] += coefficient
            else:
                result[key] = coefficient
    return polynomial.TensorPair._trusted(result, d=p.d, kind=p.kind)


def reduced_coproduct(w, d=None):
    """
    delta'(w) = delta(w) - w (x) e - e (x) w, i.e. only the cuts
    into two nonempty factors
    """
    p = polynomial.as_polynomial(w, d=d)
    result = dict()
    for word, coefficient in p.terms.items():
        for i_cut in range(1, len(word)):
            key = (word[:i_cut], word[i_cut:])
            if key in result:
                result[key] += coefficient
            else:
                result[key] = coefficient
    return polynomial.TensorPair._trusted(result, d=p.d, kind=p.kind)


def counit(p):
    """
    The coefficient of e in p
    """
    p = polynomial.as_polynomial(p)
    return p.coefficient(words_module.EMPTY_WORD)


def antipode(w, d=None):
    """
    Antipode of the quasi-shuffle Hopf algebra

        alpha(w_1...w_n) = (-1)^n sum_{I in C(n)} I[w_n...w_1]

    where I ranges over the compositions of n and I[.] merges
    consecutive blocks of brackets. Extended linearly.
    """
    p = polynomial.as_polynomial(w, d=d)
    if p.kind != scalars.EXACT:
        raise scalars.ScalarKindError(
            "the antipode is only implemented for exact scalars"
        )
    return p.map_words(_antipode_word)


def _antipode_word(word):
    n = len(word)
    sign = -1 if n % 2 == 1 else 1
    reversed_word = tuple(reversed(word))
    result = dict()
    for composition in compositions.compositions(n):
        merged = compositions.merge_blocks(composition, reversed_word)
        if merged in result:
            result[merged] += sign
        else:
            result[merged] = sign
    return polynomial.Polynomial._trusted(
        {k: scalars.coerce(v, scalars.EXACT) for k, v in result.items()},
        d=None,
        kind=scalars.EXACT
    )


def apply_to_tensor(t, left_map=None, right_map=None):
    """
    Apply (left_map (x) right_map) to a TensorPair, where each map
    is a function Word -> Polynomial (None means identity)

    Returns
    -------
    A TensorPair
    """
    result = dict()
    for (u, v), coefficient in t.terms.items():
        if left_map is None:
            left_terms = {u: 1}
        else:
            left_terms = left_map(u).terms
        if right_map is None:
            right_terms = {v: 1}
        else:
            right_terms = right_map(v).terms
        for u1, c1 in left_terms.items():
            for v1, c2 in right_terms.items():
                key = (u1, v1)
                value = coefficient*c1*c2
                if key in result:
                    result[key] += value
                else:
                    result[key] = value
    return polynomial.TensorPair._trusted(result, d=t.d, kind=t.kind)


def multiply_tensor(t, product=products.quasi_shuffle):
    """
    Apply the multiplication map m(u (x) v) = product(u, v)
    to a TensorPair
    """
    result = polynomial.Polynomial.zero(d=t.d, kind=t.kind)
    for (u, v), coefficient in t.terms.items():
        result = result + product(u, v).scale(coefficient)
    return result
