"""
Define the TimeSeries class and the elementary operations on time
series (increments, bracket monomials of increments, time warping,
reversal, translation).
"""
import numbers

import numpy as np

import quasi_shuffle_signature.algebra.scalars as scalars
import quasi_shuffle_signature.algebra.words as words_module


class TimeSeries(object):
    """
    A d-dimensional time series x_0, x_1, ..., x_N, extended
    constantly after x_N.

    Parameters
    ----------
    values:
        array-like of shape (N+1, d); row 0 is the base point x_0.
        A one-dimensional sequence is read as a single column (d=1).
        An empty sequence is a series with no points at all (its
        increments are all zero).
    kind:
        scalars.EXACT or scalars.FLOAT. If None, the kind is
        inferred: float arrays/values give FLOAT, otherwise EXACT.
    d:
        dimension to use for an empty series (default 1)

    Notes
    -----
    Exact series are stored as numpy object arrays of
    fractions.Fraction; float series as float64 arrays.
    """

    def __init__(self, values, kind=None, d=None):
        if kind is not None:
            scalars.check_kind(kind)

        if (isinstance(values, np.ndarray)
                and values.dtype.kind in ('f', 'i', 'u')):
            self._init_from_numeric_array(values, kind=kind, d=d)
        else:
            self._init_from_sequence(values, kind=kind, d=d)

        self._values.setflags(write=False)

    def _init_from_numeric_array(self, values, kind, d):
        if values.ndim == 1:
            values = values.reshape(-1, 1)
        if values.ndim != 2:
            raise TimeSeriesError(
                "time series values must be two-dimensional; "
                f"you gave an array of shape {values.shape}"
            )
        if values.shape[0] == 0 and d is not None:
            values = values.reshape(0, d)
        if kind is None:
            if values.dtype.kind == 'f':
                kind = scalars.FLOAT
            else:
                kind = scalars.EXACT
        if kind == scalars.FLOAT:
            self._values = values.astype(float)
        else:
            if values.dtype.kind == 'f':
                raise scalars.ScalarKindError(
                    "cannot build an exact time series from a float array"
                )
            self._values = _to_object_array(
                [[scalars.coerce(int(v), kind) for v in row]
                 for row in values],
                n_columns=values.shape[1]
            )
        self._kind = kind

    def _init_from_sequence(self, values, kind, d):
        rows = [_as_row(row) for row in values]
        if len(rows) == 0:
            n_columns = 1 if d is None else d
        else:
            n_columns = len(rows[0])
        for i_row, row in enumerate(rows):
            if len(row) != n_columns:
                raise TimeSeriesError(
                    f"ragged time series: row {i_row} has {len(row)} "
                    f"entries; row 0 has {n_columns}"
                )
        if n_columns == 0:
            raise TimeSeriesError("time series must have d >= 1")

        if kind is None:
            kind = scalars.infer_kind(
                [v for row in rows for v in row if not isinstance(v, str)]
            )

        converted = [
            [scalars.coerce(v, kind) for v in row] for row in rows
        ]
        if kind == scalars.FLOAT:
            self._values = np.array(
                converted, dtype=float).reshape(len(rows), n_columns)
        else:
            self._values = _to_object_array(converted, n_columns=n_columns)
        self._kind = kind

    @property
    def kind(self):
        return self._kind

    @property
    def exact(self):
        return self._kind == scalars.EXACT

    @property
    def d(self):
        return self._values.shape[1]

    @property
    def n_steps(self):
        """
        N, the index of the last point (0 for a series with at most
        one point)
        """
        return max(self._values.shape[0]-1, 0)

    @property
    def values(self):
        """
        Copy of the (N+1, d) array of points
        """
        return self._values.copy()

    @property
    def base(self):
        if self._values.shape[0] == 0:
            return None
        return self._values[0].copy()

    @property
    def points(self):
        return self._values[1:].copy()

    @property
    def increments(self):
        """
        (N, d) array whose row j-1 is x_j - x_{j-1}
        """
        if self._values.shape[0] < 2:
            return _empty(self._kind, self.d)
        return np.diff(self._values, axis=0)

    def point(self, j):
        """
        x_j, with x_j = x_N for j > N
        """
        if j < 0:
            raise ValueError(f"time index must be >= 0; you gave {j}")
        if self._values.shape[0] == 0:
            raise TimeSeriesError("empty time series has no points")
        j = min(j, self._values.shape[0]-1)
        return self._values[j].copy()

    def increment(self, j):
        """
        x_j - x_{j-1} (zero for j > N)
        """
        if j < 1:
            raise ValueError(f"increments start at j=1; you gave {j}")
        if j > self.n_steps:
            return np.array(
                [scalars.zero(self._kind)]*self.d,
                dtype=_dtype(self._kind))
        return self._values[j] - self._values[j-1]

    def bracket_increments(self, brackets):
        """
        Array of shape (N, len(brackets)) whose entry (j-1, i) is
        the product of the increment components (Delta x_j)^(l)
        over the letters l of brackets[i] (with multiplicity)
        """
        increments = self.increments
        n_steps = increments.shape[0]
        result = np.empty((n_steps, len(brackets)), dtype=_dtype(self._kind))
        for i_bracket, bracket in enumerate(brackets):
            _check_bracket(bracket, self.d)
            column = np.full(
                n_steps, scalars.one(self._kind), dtype=_dtype(self._kind))
            for letter in bracket:
                column = column*increments[:, letter-1]
            result[:, i_bracket] = column
        return result

    def with_values(self, values):
        """
        New TimeSeries of the same kind with different values
        """
        return TimeSeries(values, kind=self._kind, d=self.d)

    def __eq__(self, other):
        if not isinstance(other, TimeSeries):
            return NotImplemented
        if self._kind != other._kind:
            return False
        if self._values.shape != other._values.shape:
            return False
        return bool(np.all(self._values == other._values))

    __hash__ = None

    def __repr__(self):
        return (
            f"TimeSeries(kind={self._kind}, d={self.d}, "
            f"N={self.n_steps})"
        )


def bracket_increment(x, j, a):
    """
    Delta x_j^[a] = product over the letters l of a (with
    multiplicity) of the l-th component of x_j - x_{j-1};
    zero for j > N.

    Parameters
    ----------
    x:
        TimeSeries
    j:
        int >= 1
    a:
        Bracket (or list of letters)
    """
    if j < 1:
        raise ValueError(f"increments start at j=1; you gave {j}")
    a = words_module.Bracket(a)
    _check_bracket(a, x.d)
    if j > x.n_steps:
        return scalars.zero(x.kind)
    increment = x.increment(j)
    result = scalars.one(x.kind)
    for letter in a:
        result = result*increment[letter-1]
    return result


def time_warp(x, n):
    """
    tau_n(x): repeat the value at time n once, so that
    tau_n(x)_j = x_j for j <= n and x_{j-1} for j > n.
    For n > N the (constant) final value is repeated.

    The result has N+1 steps.
    """
    if isinstance(n, bool) or not isinstance(n, numbers.Integral):
        raise ValueError(f"n must be an integer; you gave {n}")
    if n < 1:
        raise ValueError(f"time_warp needs n >= 1; you gave {n}")
    values = x.values
    if values.shape[0] == 0:
        raise TimeSeriesError("cannot time warp an empty series")
    n = min(n, values.shape[0]-1)
    warped = np.concatenate([values[:n+1], values[n:]], axis=0)
    return TimeSeries(warped, kind=x.kind, d=x.d)


def reverse_series(x):
    """
    The series run backwards: (x_N, x_{N-1}, ..., x_0), whose base
    point is x_N
    """
    return TimeSeries(x.values[::-1], kind=x.kind, d=x.d)


def translate_series(x, shift):
    """
    x_j -> x_j + shift for every j. Increments (hence signatures)
    are unchanged.
    """
    shift = np.array(
        [scalars.coerce(v, x.kind) for v in _as_row(shift)],
        dtype=_dtype(x.kind))
    if shift.shape != (x.d,):
        raise TimeSeriesError(
            f"shift must have {x.d} components; you gave {shift.shape[0]}"
        )
    return TimeSeries(x.values + shift, kind=x.kind, d=x.d)


def product_increments(x, y):
    """
    Increments of the componentwise product series (x y)_j, via the
    discrete Leibniz rule

        Delta(xy)_n = y_{n-1} Delta x_n + x_{n-1} Delta y_n
                      + Delta x_n Delta y_n

    Returns
    -------
    (N, d) array
    """
    if x.kind != y.kind:
        raise scalars.ScalarKindError(
            f"cannot multiply {x.kind} and {y.kind} series"
        )
    if x.values.shape != y.values.shape:
        raise TimeSeriesError(
            f"series shapes differ: {x.values.shape} versus "
            f"{y.values.shape}"
        )
    x_values = x.values
    y_values = y.values
    dx = x.increments
    dy = y.increments
    return y_values[:-1]*dx + x_values[:-1]*dy + dx*dy


def zero_vector(d, kind):
    return np.array([scalars.zero(kind)]*d, dtype=_dtype(kind))


def _dtype(kind):
    if kind == scalars.FLOAT:
        return float
    return object


def _empty(kind, d):
    return np.empty((0, d), dtype=_dtype(kind))


def _to_object_array(rows, n_columns):
    result = np.empty((len(rows), n_columns), dtype=object)
    for i_row, row in enumerate(rows):
        for i_col, value in enumerate(row):
            result[i_row, i_col] = value
    return result


def _as_row(row):
    if isinstance(row, (str, numbers.Number)):
        return [row]
    return list(row)


def _check_bracket(bracket, d):
    for letter in bracket:
        if letter < 1 or letter > d:
            raise words_module.AlphabetError(
                f"letter out of alphabet: {letter} in bracket {bracket} "
                f"(alphabet is 1..{d})"
            )


class TimeSeriesError(Exception):
    pass
