"""
The lifted path of a time series and the iterated-integrals
signature of its piecewise-linear interpolation.

The lift has one component per bracket a; its increment at step j
is Delta x_j^[a]. Only brackets of weight <= W can be seen by words
of weight <= W, so only those components are built.
"""
import numpy as np

import quasi_shuffle_signature.algebra.compositions as compositions
import quasi_shuffle_signature.algebra.scalars as scalars
import quasi_shuffle_signature.algebra.words as words_module
import quasi_shuffle_signature.hopf.dual_functional as dual_functional
import quasi_shuffle_signature.signature.iterated_sums as iterated_sums
import quasi_shuffle_signature.signature.time_series as time_series
import quasi_shuffle_signature.utils.typing_utils as typing_utils


def lift_increments(x, max_weight=iterated_sums.DEFAULT_MAX_WEIGHT):
    """
    Per-step increments of the lifted path.

    Parameters
    ----------
    x:
        TimeSeries
    max_weight:
        only brackets of weight <= max_weight are lifted

    Returns
    -------
    dict mapping each Bracket (in order of weight, then letters)
    to a length-N numpy array whose entry j-1 is Delta x_j^[a]
    """
    typing_utils.assert_type("x", x, time_series.TimeSeries)
    brackets = list(compositions.iter_brackets(x.d, max_weight))
    increments = x.bracket_increments(brackets)
    return {
        bracket: increments[:, i_bracket].copy()
        for i_bracket, bracket in enumerate(brackets)
    }


def lifted_path_values(x, max_weight=iterated_sums.DEFAULT_MAX_WEIGHT):
    """
    Values X^a_n = sum_{j <= n} Delta x_j^[a] of the lifted path
    for n = 0..N (X^a_0 = 0)

    Returns
    -------
    dict mapping each Bracket to a length-(N+1) numpy array
    """
    result = dict()
    for bracket, increments in lift_increments(x, max_weight).items():
        values = np.empty(increments.shape[0]+1, dtype=increments.dtype)
        values[0] = scalars.zero(x.kind)
        values[1:] = np.cumsum(increments)
        result[bracket] = values
    return result


def step_functional(x, j, max_weight=iterated_sums.DEFAULT_MAX_WEIGHT):
    """
    The functional that is Delta x_j^[a] on every one-bracket word
    [a] and zero elsewhere (the j-th increment of the lifted path)
    """
    coefficients = dict()
    for bracket in compositions.iter_brackets(x.d, max_weight):
        coefficients[words_module.Word._trusted((bracket,))] = (
            _bracket_value(x.increment(j), bracket, x.kind)
        )
    return dual_functional.DualFunctional._trusted(
        coefficients,
        max_weight=max_weight,
        d=x.d,
        kind=x.kind
    )


def iterated_integrals_signature_pl(
        x,
        max_weight=iterated_sums.DEFAULT_MAX_WEIGHT):
    """
    S(X)_{0,N} for the piecewise-linear interpolation X of the
    lifted path of x, truncated at weight max_weight.

    Each linear piece contributes exp_conv of its increment (so a
    word of length p gets (1/p!) times the product of the bracket
    increments); the pieces are concatenated with Chen's rule.

    Returns
    -------
    A DualFunctional (a shuffle character)
    """
    typing_utils.assert_type("x", x, time_series.TimeSeries)
    max_weight = typing_utils.check_nonnegative_int("max_weight", max_weight)
    result = dual_functional.epsilon(max_weight, d=x.d, kind=x.kind)
    for j in range(1, x.n_steps+1):
        result = dual_functional.convolve(
            result,
            dual_functional.exp_conv(step_functional(x, j, max_weight))
        )
    return result


def _bracket_value(increment, bracket, kind):
    value = scalars.one(kind)
    for letter in bracket:
        value = value*increment[letter-1]
    if kind == scalars.FLOAT:
        return float(value)
    return value
