"""
Time-warping invariant feature vectors built from truncated
iterated-sums signatures.
"""
import numpy as np
import pandas as pd

import quasi_shuffle_signature.algebra.polynomial as polynomial
import quasi_shuffle_signature.algebra.scalars as scalars
import quasi_shuffle_signature.algebra.word_parser as word_parser
import quasi_shuffle_signature.signature.iterated_sums as iterated_sums
import quasi_shuffle_signature.signature.time_series as time_series
import quasi_shuffle_signature.utils.typing_utils as typing_utils


def signature_feature_vector(sig, words=None):
    """
    Coefficients of a signature as a numpy vector.

    Parameters
    ----------
    sig:
        a DualFunctional (usually a Signature)
    words:
        list of words (Word or word strings) to read off; defaults
        to every word of weight <= sig.max_weight over sig.d, in
        canonical order

    Returns
    -------
    numpy array; float64 for float signatures, an object array of
    Fractions for exact ones
    """
    if words is None:
        if sig.d is None:
            raise ValueError(
                "signature_feature_vector needs sig.d to enumerate words"
            )
        words = iterated_sums.signature_words(sig.d, sig.max_weight)
    else:
        words = [polynomial.as_word(w, d=sig.d) for w in words]

    values = [sig.coefficient(w) for w in words]
    if sig.kind == scalars.FLOAT:
        return np.array(values, dtype=float)
    result = np.empty(len(values), dtype=object)
    result[:] = values
    return result


def signature_feature_frame(
        series_list,
        max_weight=iterated_sums.DEFAULT_MAX_WEIGHT,
        index=None):
    """
    Tabulate the truncated signatures of many series.

    Parameters
    ----------
    series_list:
        list of TimeSeries sharing d and scalar kind
    max_weight:
        truncation weight
    index:
        optional labels for the rows

    Returns
    -------
    pandas.DataFrame with one row per series and one column per
    word of weight <= max_weight (column names are the printed
    words, in canonical order)
    """
    if len(series_list) == 0:
        raise ValueError("series_list is empty")
    d = series_list[0].d
    kind = series_list[0].kind
    for i_series, x in enumerate(series_list):
        typing_utils.assert_type(f"series_list[{i_series}]", x,
                                 time_series.TimeSeries)
        if x.d != d:
            raise time_series.TimeSeriesError(
                f"series {i_series} has d={x.d}; series 0 has d={d}"
            )
        if x.kind != kind:
            raise scalars.ScalarKindError(
                f"series {i_series} is {x.kind}; series 0 is {kind}"
            )

    words = iterated_sums.signature_words(d, max_weight)
    rows = [
        signature_feature_vector(
            iterated_sums.iterated_sums_signature(
                x, max_weight=max_weight),
            words=words)
        for x in series_list
    ]
    return pd.DataFrame(
        np.stack(rows),
        columns=[word_parser.print_word(w) for w in words],
        index=index
    )


def warping_invariant_distance(
        x,
        y,
        max_weight=iterated_sums.DEFAULT_MAX_WEIGHT):
    """
    Euclidean distance between the truncated signature feature
    vectors of two series. Zero for a series and any of its time
    warps. Always returned as a float.
    """
    if x.d != y.d:
        raise time_series.TimeSeriesError(
            f"cannot compare series with d={x.d} and d={y.d}"
        )
    v_x = signature_feature_vector(
        iterated_sums.iterated_sums_signature(x, max_weight=max_weight))
    v_y = signature_feature_vector(
        iterated_sums.iterated_sums_signature(y, max_weight=max_weight))
    return float(np.linalg.norm((v_x - v_y).astype(float)))
