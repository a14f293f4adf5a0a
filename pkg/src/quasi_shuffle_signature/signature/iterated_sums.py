"""
The iterated-sums signature DS(x)_{n,m} of a time series:

    <[u_1]...[u_k], DS(x)_{n,m}> =
        sum_{n < i_1 < ... < i_k <= m}
            Delta x_{i_1}^[u_1] ... Delta x_{i_k}^[u_k]

computed by streaming over time steps. Adding one step multiplies
the running signature (by convolution) with the single-step
signature, which only touches the last bracket of every word:

    <w a, DS_{n,j}> = <w a, DS_{n,j-1}> + <w, DS_{n,j-1}> Delta x_j^[a]

All words of weight <= W are updated at once with numpy.
"""
import functools

import numpy as np

import quasi_shuffle_signature.algebra.compositions as compositions
import quasi_shuffle_signature.algebra.scalars as scalars
import quasi_shuffle_signature.algebra.words as words_module
import quasi_shuffle_signature.hopf.dual_functional as dual_functional
import quasi_shuffle_signature.signature.time_series as time_series
import quasi_shuffle_signature.utils.typing_utils as typing_utils


DEFAULT_MAX_WEIGHT = 3


class Signature(dual_functional.DualFunctional):
    """
    A DualFunctional that remembers the time window (n, m) it was
    computed over.

    Parameters
    ----------
    coefficients, max_weight, d, kind:
        as for DualFunctional
    window:
        tuple (n, m) with 0 <= n <= m
    """

    def __init__(
            self,
            coefficients,
            max_weight,
            d=None,
            kind=None,
            window=(0, 0)):
        super().__init__(
            coefficients, max_weight=max_weight, d=d, kind=kind)
        self._init_extra(window=window)

    def _init_extra(self, window=(0, 0)):
        n, m = window
        if n < 0 or m < n:
            raise WindowError(
                f"invalid signature window ({n}, {m}); need 0 <= n <= m"
            )
        self._window = (int(n), int(m))

    @property
    def window(self):
        return self._window

    @property
    def n(self):
        return self._window[0]

    @property
    def m(self):
        return self._window[1]

    def as_functional(self):
        return dual_functional.DualFunctional._trusted(
            self.coefficients,
            max_weight=self.max_weight,
            d=self.d,
            kind=self.kind
        )

    def __repr__(self):
        return (
            f"Signature(window={self._window}, "
            f"max_weight={self.max_weight}, {self.__str__()})"
        )


def signature_words(d, max_weight):
    """
    The words of weight <= max_weight over 1..d (e included) in
    canonical order; the coordinates of a truncated signature
    """
    return compositions.canonical_words_up_to(d, max_weight)


@functools.lru_cache(maxsize=32)
def _word_index(d, max_weight):
    """
    Index structures for the vectorised update.

    Returns
    -------
    words:
        tuple of all words of weight <= max_weight (canonical order,
        words[0] is e)
    brackets:
        tuple of all brackets of weight <= max_weight
    parent:
        int array; parent[i] is the position of words[i] without
        its last bracket
    last:
        int array; last[i] is the position in brackets of the last
        bracket of words[i]
    """
    words = signature_words(d, max_weight)
    brackets = tuple(compositions.iter_brackets(d, max_weight))
    word_position = {w: i for i, w in enumerate(words)}
    bracket_position = {b: i for i, b in enumerate(brackets)}
    parent = np.zeros(len(words), dtype=int)
    last = np.zeros(len(words), dtype=int)
    for i_word, word in enumerate(words):
        if len(word) == 0:
            continue
        parent[i_word] = word_position[word[:-1]]
        last[i_word] = bracket_position[word[-1]]
    return words, brackets, parent, last


def _initial_state(n_words, kind):
    if kind == scalars.EXACT:
        values = np.empty(n_words, dtype=object)
        values[:] = scalars.zero(kind)
    else:
        values = np.zeros(n_words, dtype=float)
    values[0] = scalars.one(kind)
    return values


def _stream_values(x, n, m, max_weight):
    """
    Generator yielding the coefficient array of DS(x)_{n,j} for
    j = n, n+1, ..., m (arrays are not copied; consume before the
    next step)
    """
    words, brackets, parent, last = _word_index(x.d, max_weight)
    values = _initial_state(len(words), x.kind)
    yield values

    last_step = min(m, x.n_steps)
    if last_step > n:
        increments = x.bracket_increments(brackets)
    parent = parent[1:]
    last = last[1:]

    compensation = None
    if x.kind == scalars.FLOAT:
        compensation = np.zeros(len(words), dtype=float)

    for j in range(n+1, m+1):
        if j <= last_step:
            row = increments[j-1]
            update = values[parent]*row[last]
            if compensation is None:
                values[1:] = values[1:] + update
            else:
                # Kahan summation
                corrected = update - compensation[1:]
                total = values[1:] + corrected
                compensation[1:] = (total - values[1:]) - corrected
                values[1:] = total
        yield values


def check_window(x, n, m):
    typing_utils.assert_type("x", x, time_series.TimeSeries)
    if m is None:
        m = x.n_steps
    n = typing_utils.check_nonnegative_int("n", n)
    m = typing_utils.check_nonnegative_int("m", m)
    if n > m:
        raise WindowError(
            f"iterated-sums signature needs n <= m; you gave n={n}, m={m}"
        )
    return n, m


def _as_signature(values, x, max_weight, window):
    words = _word_index(x.d, max_weight)[0]
    if x.kind == scalars.EXACT:
        coefficients = {
            w: v for w, v in zip(words, values) if v != 0
        }
    else:
        coefficients = {
            w: float(v) for w, v in zip(words, values)
        }
    return Signature._trusted(
        coefficients,
        max_weight=max_weight,
        d=x.d,
        kind=x.kind,
        window=window
    )


def iterated_sums_signature(x, n=0, m=None, max_weight=DEFAULT_MAX_WEIGHT):
    """
    Compute DS(x)_{n,m} truncated at weight max_weight.

    Parameters
    ----------
    x:
        TimeSeries
    n, m:
        window indices, 0 <= n <= m; m defaults to N and may exceed
        it (increments after N are zero)
    max_weight:
        truncation weight W >= 0

    Returns
    -------
    A Signature over window (n, m)
    """
    n, m = check_window(x, n, m)
    max_weight = typing_utils.check_nonnegative_int("max_weight", max_weight)
    values = None
    for values in _stream_values(x, n, m, max_weight):
        pass
    return _as_signature(values, x, max_weight, window=(n, m))


def signature_stream(x, max_weight=DEFAULT_MAX_WEIGHT, n=0, m=None):
    """
    Generator yielding DS(x)_{n,j} for j = n, ..., m (m defaults
    to N), one Signature per time step
    """
    n, m = check_window(x, n, m)
    max_weight = typing_utils.check_nonnegative_int("max_weight", max_weight)
    j = n
    for values in _stream_values(x, n, m, max_weight):
        yield _as_signature(values, x, max_weight, window=(n, j))
        j += 1


def single_step_signature(
        v,
        max_weight=DEFAULT_MAX_WEIGHT,
        kind=None,
        window=(0, 1)):
    """
    Signature of a series with a single nonzero increment v:
    <[1^k_1 ... d^k_d], .> = (v^(1))^k_1 ... (v^(d))^k_d on words of
    length 1, e gets 1 and every longer word gets 0.

    Parameters
    ----------
    v:
        sequence of d scalars
    max_weight:
        truncation weight
    kind:
        scalar kind (inferred from v if None)
    window:
        window metadata of the result
    """
    v = list(v)
    if kind is None:
        kind = scalars.infer_kind(v)
    v = [scalars.coerce(value, kind) for value in v]
    d = len(v)
    if d == 0:
        raise time_series.TimeSeriesError("increment must have d >= 1")
    coefficients = {words_module.EMPTY_WORD: scalars.one(kind)}
    for bracket in compositions.iter_brackets(d, max_weight):
        value = scalars.one(kind)
        for letter in bracket:
            value = value*v[letter-1]
        coefficients[words_module.Word._trusted((bracket,))] = value
    return Signature._trusted(
        coefficients,
        max_weight=max_weight,
        d=d,
        kind=kind,
        window=window
    )


def chen_merge(s0, s1):
    """
    DS_{n,n'} . DS_{n',n''} = DS_{n,n''}

    Parameters
    ----------
    s0, s1:
        Signatures over abutting windows (n, n') and (n', n'')
        with the same truncation, alphabet and scalar kind

    Returns
    -------
    A Signature over (n, n'')
    """
    typing_utils.check_many_types(
        name_arr=["s0", "s1"],
        arg_arr=[s0, s1],
        type_arr=[Signature, Signature]
    )
    if s0.m != s1.n:
        raise WindowError(
            f"cannot merge signatures over windows {s0.window} and "
            f"{s1.window}; they do not abut"
        )
    merged = dual_functional.convolve(s0, s1)
    return Signature._trusted(
        merged.coefficients,
        max_weight=merged.max_weight,
        d=merged.d,
        kind=merged.kind,
        window=(s0.n, s1.m)
    )


def empty_window_signature(d, max_weight, kind, at=0):
    """
    The signature of an empty window (at, at), i.e. epsilon
    """
    return Signature._trusted(
        {words_module.EMPTY_WORD: scalars.one(kind)},
        max_weight=max_weight,
        d=d,
        kind=kind,
        window=(at, at)
    )


def signature_by_factorisation(x, max_weight=DEFAULT_MAX_WEIGHT):
    """
    DS(x)_{0,N} as the ordered convolution product of the
    single-step signatures of the increments of x
    """
    typing_utils.assert_type("x", x, time_series.TimeSeries)
    result = empty_window_signature(x.d, max_weight, x.kind)
    increments = x.increments
    for j in range(1, x.n_steps+1):
        step = single_step_signature(
            increments[j-1],
            max_weight=max_weight,
            kind=x.kind,
            window=(j-1, j)
        )
        result = chen_merge(result, step)
    return result


def iterated_sums_of_functions(x, functions, n=0, m=None):
    """
    sum_{n < i_1 < ... < i_k <= m} f_1(Delta x_{i_1}) ... f_k(Delta x_{i_k})

    Parameters
    ----------
    x:
        TimeSeries
    functions:
        list of callables taking a length-d numpy array and
        returning a scalar. Each must vanish at the zero increment
        (otherwise the sum depends on the time parametrisation).
    n, m:
        window (m defaults to N; may exceed it)

    Returns
    -------
    A scalar
    """
    n, m = check_window(x, n, m)
    zero = time_series.zero_vector(x.d, x.kind)
    for i_function, function in enumerate(functions):
        if function(zero) != 0:
            raise ValueError(
                f"function {i_function} does not vanish at the zero "
                "increment, so its iterated sums are not invariant "
                "under time warping"
            )

    last_step = min(m, x.n_steps)
    increments = x.increments[n:max(last_step, n)]
    n_terms = increments.shape[0]

    partial = np.empty(n_terms+1, dtype=object)
    partial[:] = scalars.one(x.kind)
    for function in functions:
        evaluated = np.empty(n_terms, dtype=object)
        for i_term in range(n_terms):
            evaluated[i_term] = function(increments[i_term])
        running = np.empty(n_terms+1, dtype=object)
        running[0] = scalars.zero(x.kind)
        running[1:] = np.cumsum(partial[:-1]*evaluated)
        partial = running
    result = partial[-1]
    if x.kind == scalars.FLOAT:
        return float(result)
    return result


class WindowError(Exception):
    pass
