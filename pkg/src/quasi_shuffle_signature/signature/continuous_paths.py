"""
Exact reference signatures of polynomial paths X^i(t) = sum_k c_ik t^k
on [0, 1], and the sampling of such paths on uniform partitions.

Used to check that the iterated-sums signature of finer and finer
samples converges to the iterated-integrals signature on words
made of single letters, while words containing a heavier bracket
tend to zero.

Polynomials in t are lists of coefficients, lowest degree first.
"""
import fractions

import quasi_shuffle_signature.algebra.scalars as scalars
import quasi_shuffle_signature.algebra.words as words_module
import quasi_shuffle_signature.hopf.dual_functional as dual_functional
import quasi_shuffle_signature.signature.time_series as time_series


def polynomial_path_signature(coefficients, max_weight):
    """
    Iterated-integrals signature over [0, 1] of the polynomial path
    with the given coefficients, restricted to words whose brackets
    are single letters.

    Parameters
    ----------
    coefficients:
        list of d lists; coefficients[i][k] is the coefficient of
        t^k in component i+1. Must be integers or Fractions.
    max_weight:
        truncation weight (= maximal word length here)

    Returns
    -------
    An exact DualFunctional. Words containing a bracket of weight
    >= 2 are zero.
    """
    paths = [
        [scalars.coerce(c, scalars.EXACT) for c in component]
        for component in coefficients
    ]
    d = len(paths)
    if d == 0:
        raise time_series.TimeSeriesError("path must have d >= 1")
    derivatives = [_derivative(p) for p in paths]

    # integrand[w](t) = int_0^t (iterated integral of w up to s)
    one = [fractions.Fraction(1)]
    running = {words_module.EMPTY_WORD: one}
    frontier = [words_module.EMPTY_WORD]
    for _ in range(max_weight):
        next_frontier = []
        for word in frontier:
            for letter in range(1, d+1):
                integrand = _times(running[word], derivatives[letter-1])
                extended = word + words_module.Word._trusted(
                    (words_module.Bracket._trusted((letter,)),))
                running[extended] = _antiderivative(integrand)
                next_frontier.append(extended)
        frontier = next_frontier

    values = {
        word: _evaluate(poly, fractions.Fraction(1))
        for word, poly in running.items()
    }
    return dual_functional.DualFunctional(
        values,
        max_weight=max_weight,
        d=d,
        kind=scalars.EXACT
    )


def sample_polynomial_path(coefficients, n_steps, exact=False):
    """
    The time series x_j = X(j / n_steps), j = 0..n_steps

    Parameters
    ----------
    coefficients:
        as for polynomial_path_signature
    n_steps:
        number of intervals of the uniform partition
    exact:
        if True sample with Fractions, else with floats
    """
    if n_steps < 1:
        raise ValueError(f"n_steps must be >= 1; you gave {n_steps}")
    kind = scalars.kind_from_exact_flag(exact)
    paths = [
        [scalars.coerce(c, scalars.EXACT) for c in component]
        for component in coefficients
    ]
    rows = []
    for j in range(n_steps+1):
        t = fractions.Fraction(j, n_steps)
        row = [_evaluate(p, t) for p in paths]
        if kind == scalars.FLOAT:
            row = [float(v) for v in row]
        rows.append(row)
    return time_series.TimeSeries(rows, kind=kind)


def _normalize(p):
    n = len(p)
    while n and p[n-1] == 0:
        n -= 1
    return p[:n]


def _times(a, b):
    if len(a) == 0 or len(b) == 0:
        return []
    result = [fractions.Fraction(0)]*(len(a)+len(b)-1)
    for i, ai in enumerate(a):
        if ai == 0:
            continue
        for j, bj in enumerate(b):
            result[i+j] += ai*bj
    return _normalize(result)


def _derivative(a):
    return _normalize([a[k]*k for k in range(1, len(a))])


def _antiderivative(a):
    """
    Primitive vanishing at t = 0
    """
    return _normalize(
        [fractions.Fraction(0)]
        + [c / (k+1) for k, c in enumerate(a)]
    )


def _evaluate(a, t):
    result = fractions.Fraction(0)
    for c in reversed(a):
        result = result*t + c
    return result
