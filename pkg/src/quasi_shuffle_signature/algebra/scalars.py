"""
Define the two scalar kinds used throughout the package.

Exact scalars are fractions.Fraction instances (python ints are
accepted as input and promoted). Float scalars are python/numpy
floats. The two kinds never mix inside a single Polynomial,
DualFunctional or TimeSeries.
"""
import fractions
import math
import numbers

import numpy as np


EXACT = 'exact'
FLOAT = 'float'

VALID_KINDS = (EXACT, FLOAT)

# default tolerances for comparing float scalars
FLOAT_RTOL = 1.0e-9
FLOAT_ATOL = 1.0e-12


def check_kind(kind):
    if kind not in VALID_KINDS:
        raise ScalarKindError(
            f"scalar kind must be one of {VALID_KINDS}; you gave {kind}"
        )
    return kind


def kind_from_exact_flag(exact):
    if exact:
        return EXACT
    return FLOAT


def scalar_kind(value):
    """
    Return the kind (EXACT or FLOAT) of a single scalar, or None
    if the value is a plain integer (which is compatible with both
    kinds).
    """
    if isinstance(value, bool):
        raise ScalarKindError(
            f"booleans are not scalars; you gave {value}"
        )
    if isinstance(value, fractions.Fraction):
        return EXACT
    if isinstance(value, numbers.Integral):
        return None
    if isinstance(value, (float, np.floating)):
        return FLOAT
    raise ScalarKindError(
        f"cannot interpret {value} of type {type(value)} as a scalar"
    )


def infer_kind(values, default=EXACT):
    """
    Infer the scalar kind of an iterable of scalars.
    Raise a ScalarKindError if exact and float values mix.
    """
    found = None
    for value in values:
        this_kind = scalar_kind(value)
        if this_kind is None:
            continue
        if found is None:
            found = this_kind
        elif found != this_kind:
            raise ScalarKindError(
                "exact and float scalars cannot be mixed; "
                f"found both kinds (e.g. {value})"
            )
    if found is None:
        return default
    return found


def coerce(value, kind):
    """
    Convert value to a scalar of the given kind.

    Integers and (under EXACT) strings of the form 'p' or 'p/q'
    are accepted by both kinds. A float can never become exact and
    a Fraction can never become a float.
    """
    check_kind(kind)
    if isinstance(value, str):
        return parse_scalar(value, kind)
    this_kind = scalar_kind(value)
    if this_kind is not None and this_kind != kind:
        raise ScalarKindError(
            f"cannot use {this_kind} scalar {value} where "
            f"{kind} scalars are required"
        )
    if kind == EXACT:
        return fractions.Fraction(value)
    return float(value)


def zero(kind):
    if check_kind(kind) == EXACT:
        return fractions.Fraction(0)
    return 0.0


def one(kind):
    if check_kind(kind) == EXACT:
        return fractions.Fraction(1)
    return 1.0


def inverse_integer(n, kind):
    """
    Return 1/n as a scalar of the given kind
    """
    if check_kind(kind) == EXACT:
        return fractions.Fraction(1, n)
    return 1.0 / n


def is_zero(value):
    return value == 0


def scalars_equal(a, b, rtol=FLOAT_RTOL, atol=FLOAT_ATOL):
    """
    Exact scalars are compared with ==; if either value is a
    float, a relative/absolute tolerance is used instead.
    """
    if isinstance(a, float) or isinstance(b, float):
        return math.isclose(
            float(a), float(b), rel_tol=rtol, abs_tol=atol)
    return a == b


def format_scalar(value):
    """
    Render a scalar as text: 'p' or 'p/q' for exact values,
    repr() for floats.
    """
    if isinstance(value, fractions.Fraction):
        if value.denominator == 1:
            return f"{value.numerator}"
        return f"{value.numerator}/{value.denominator}"
    if isinstance(value, numbers.Integral):
        return f"{int(value)}"
    return repr(float(value))


def parse_scalar(text, kind):
    """
    Parse a scalar from text.

    Under EXACT, integers and 'p/q' rationals are accepted; decimal
    notation is rejected so that float data never silently becomes
    exact. Under FLOAT, anything float() accepts is allowed except
    'p/q' rationals.
    """
    check_kind(kind)
    text = text.strip()
    if len(text) == 0:
        raise ValueError("empty string is not a scalar")
    if kind == EXACT:
        numerator, _, denominator = text.partition('/')
        try:
            numerator = int(numerator)
            if len(denominator) > 0:
                denominator = int(denominator)
            else:
                denominator = 1
        except ValueError:
            if _looks_like_float(text):
                raise ScalarKindError(
                    f"'{text}' is a float; only integers and p/q "
                    "rationals are allowed for exact scalars"
                )
            raise ValueError(
                f"'{text}' is not an integer or p/q rational"
            )
        if denominator == 0:
            raise ValueError(f"'{text}' has a zero denominator")
        return fractions.Fraction(numerator, denominator)

    if '/' in text:
        raise ScalarKindError(
            f"'{text}' is a p/q rational; rationals are only allowed "
            "for exact scalars"
        )
    try:
        return float(text)
    except ValueError:
        raise ValueError(f"'{text}' is not a number")


def _looks_like_float(text):
    try:
        float(text)
    except ValueError:
        return False
    return True


class ScalarKindError(Exception):
    pass
