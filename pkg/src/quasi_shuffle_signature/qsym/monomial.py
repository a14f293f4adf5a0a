"""
Monomial quasisymmetric functions of level d, evaluated at finitely
supported substitutions.

A substitution Y is a finite list of points Y_1, ..., Y_L of F^d
(zero afterwards). The monomial function of a word [u_1]...[u_n]
evaluates to

    sum_{j_1 < ... < j_n} Y_{j_1}^[u_1] ... Y_{j_n}^[u_n]

where Y_j^[a] is the product of the components of Y_j over the
letters of a. Evaluated at the increments of a time series this is
the iterated-sums signature coefficient of the word.
"""
import numbers

import numpy as np

import quasi_shuffle_signature.algebra.polynomial as polynomial
import quasi_shuffle_signature.algebra.scalars as scalars
import quasi_shuffle_signature.algebra.words as words_module
import quasi_shuffle_signature.hopf.products as products


def monomial_eval(w, Y, kind=None):
    """
    Evaluate the monomial quasisymmetric function of w at Y.

    Parameters
    ----------
    w:
        Word (or word string)
    Y:
        list of points; each point is a sequence of d scalars
        (a bare scalar is read as a point of F^1)
    kind:
        scalar kind; inferred from Y if None

    Returns
    -------
    A scalar. monomial_eval(e, Y) = 1.
    """
    points, kind = _as_substitution(Y, kind)
    w = polynomial.as_word(w)
    return _monomial_eval(w, points, kind)


def evaluate_polynomial(p, Y, kind=None):
    """
    Linear extension of monomial_eval to a Polynomial
    """
    points, kind = _as_substitution(Y, kind)
    p = polynomial.as_polynomial(p)
    if p.kind == scalars.FLOAT and kind == scalars.EXACT:
        raise scalars.ScalarKindError(
            "cannot evaluate a float polynomial at an exact substitution"
        )
    result = scalars.zero(kind)
    for word, coefficient in p.items():
        if kind == scalars.FLOAT:
            coefficient = float(coefficient)
        result += coefficient*_monomial_eval(word, points, kind)
    return result


def product_as_quasi_shuffle_check(u, v, Y, kind=None):
    """
    Whether monomial_eval(u, Y) * monomial_eval(v, Y) equals the
    evaluation of the quasi-shuffle u * v at Y (exactly for exact
    substitutions, within the default float tolerance otherwise).
    """
    points, kind = _as_substitution(Y, kind)
    u = polynomial.as_word(u)
    v = polynomial.as_word(v)
    lhs = _monomial_eval(u, points, kind)*_monomial_eval(v, points, kind)
    rhs = scalars.zero(kind)
    for word, coefficient in products.quasi_shuffle(u, v).items():
        if kind == scalars.FLOAT:
            coefficient = float(coefficient)
        rhs += coefficient*_monomial_eval(word, points, kind)
    if kind == scalars.EXACT:
        return lhs == rhs
    return scalars.scalars_equal(lhs, rhs)


def _monomial_eval(w, points, kind):
    n_points, d = points.shape
    for bracket in w:
        for letter in bracket:
            if letter > d:
                raise words_module.AlphabetError(
                    f"letter out of alphabet: {letter} in word {w} "
                    f"(substitution has d={d})"
                )

    # partial[j] = evaluation of the current prefix using Y_1..Y_j
    partial = np.empty(n_points+1, dtype=object)
    partial[:] = scalars.one(kind)
    for bracket in w:
        column = np.empty(n_points, dtype=object)
        column[:] = scalars.one(kind)
        for letter in bracket:
            column = column*points[:, letter-1]
        running = np.empty(n_points+1, dtype=object)
        running[0] = scalars.zero(kind)
        if n_points > 0:
            running[1:] = np.cumsum(partial[:-1]*column)
        partial = running
    result = partial[-1]
    if kind == scalars.FLOAT:
        return float(result)
    return result


def _as_substitution(Y, kind):
    """
    Return Y as an (L, d) object array of scalars, and its kind
    """
    rows = []
    for point in Y:
        if isinstance(point, (numbers.Number, str)):
            rows.append([point])
        else:
            rows.append(list(point))
    if kind is None:
        kind = scalars.infer_kind(
            [v for row in rows for v in row if not isinstance(v, str)]
        )
    scalars.check_kind(kind)
    d = len(rows[0]) if len(rows) > 0 else 1
    points = np.empty((len(rows), d), dtype=object)
    for i_row, row in enumerate(rows):
        if len(row) != d:
            raise ValueError(
                f"substitution point {i_row} has {len(row)} components; "
                f"point 0 has {d}"
            )
        for i_col, value in enumerate(row):
            points[i_row, i_col] = scalars.coerce(value, kind)
    return points, kind
