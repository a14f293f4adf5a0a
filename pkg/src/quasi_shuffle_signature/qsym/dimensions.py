"""
Graded dimensions of the quasi-shuffle algebra over d letters.

The number of words of weight n is

    sum_{(i_1,...,i_p) in C(n)} prod_j binom(d-1+i_j, i_j)

(one factor per bracket: the number of multisets of size i_j),
and the generating function of these numbers is

    G(t) = (1-t)^d / (2(1-t)^d - 1)
"""
import pandas as pd
import scipy.special

import quasi_shuffle_signature.algebra.compositions as compositions
import quasi_shuffle_signature.utils.typing_utils as typing_utils


def hilbert_dim(d, n):
    """
    Number of words of weight n over d letters (an exact int)
    """
    d = typing_utils.check_positive_int("d", d)
    n = typing_utils.check_nonnegative_int("n", n)
    total = 0
    for composition in compositions.compositions(n):
        product = 1
        for part in composition:
            product *= int(scipy.special.comb(d-1+part, part, exact=True))
        total += product
    return total


def hilbert_series_coeffs(d, max_n):
    """
    Coefficients g_0, ..., g_{max_n} of G(t), by power-series
    division of (1-t)^d by 2(1-t)^d - 1

    Returns
    -------
    list of ints
    """
    d = typing_utils.check_positive_int("d", d)
    max_n = typing_utils.check_nonnegative_int("max_n", max_n)
    numerator = [
        (-1)**k * int(scipy.special.comb(d, k, exact=True))
        if k <= d else 0
        for k in range(max_n+1)
    ]
    denominator = [2*a for a in numerator]
    denominator[0] -= 1

    # denominator[0] == 1, so the division stays in the integers
    coeffs = []
    for n in range(max_n+1):
        value = numerator[n]
        for k in range(1, n+1):
            value -= denominator[k]*coeffs[n-k]
        coeffs.append(value)
    return coeffs


def enumerate_words(d, n):
    """
    Every word of weight n over 1..d, each exactly once, in the
    canonical word order
    """
    d = typing_utils.check_positive_int("d", d)
    n = typing_utils.check_nonnegative_int("n", n)
    return list(compositions.canonical_words(d, n))


def words_up_to_weight(d, max_weight):
    """
    Every word of weight <= max_weight over 1..d (e first), in the
    canonical word order
    """
    d = typing_utils.check_positive_int("d", d)
    max_weight = typing_utils.check_nonnegative_int("max_weight", max_weight)
    return list(compositions.canonical_words_up_to(d, max_weight))


def dimension_table(d, max_n, enumerate_up_to=None):
    """
    Tabulate the graded dimensions for n = 0..max_n.

    Parameters
    ----------
    d:
        alphabet size
    max_n:
        largest weight to tabulate
    enumerate_up_to:
        words are explicitly enumerated (an expensive cross-check)
        only for n <= enumerate_up_to; defaults to max_n

    Returns
    -------
    pandas.DataFrame with columns
        'n', 'dim' (hilbert_dim), 'series' (G(t) coefficient),
        'enumerated' (word count, or None where not enumerated)
        and 'agree' (whether every available count matches)
    """
    if enumerate_up_to is None:
        enumerate_up_to = max_n
    series = hilbert_series_coeffs(d, max_n)
    records = []
    for n in range(max_n+1):
        dim = hilbert_dim(d, n)
        enumerated = None
        if n <= enumerate_up_to:
            enumerated = len(compositions.canonical_words(d, n))
        agree = (dim == series[n]) and (
            enumerated is None or enumerated == dim)
        records.append(
            {'n': n,
             'dim': dim,
             'series': series[n],
             'enumerated': enumerated,
             'agree': agree}
        )
    return pd.DataFrame(records)
