"""
Helpers shared by the command line modules: truncation weight
resolution, logging setup and the conversion of library errors
into exit statuses.
"""
import os
import sys

import quasi_shuffle_signature.algebra.compositions as compositions
import quasi_shuffle_signature.algebra.scalars as scalars
import quasi_shuffle_signature.algebra.word_parser as word_parser
import quasi_shuffle_signature.algebra.words as words_module
import quasi_shuffle_signature.hopf.dual_functional as dual_functional
import quasi_shuffle_signature.hopf.products as products
import quasi_shuffle_signature.io.csv_utils as csv_utils
import quasi_shuffle_signature.io.json_utils as json_utils
import quasi_shuffle_signature.signature.iterated_sums as iterated_sums
import quasi_shuffle_signature.signature.time_series as time_series
import quasi_shuffle_signature.utils.file_utils as file_utils
import quasi_shuffle_signature.utils.log_class as log_class


MAX_WEIGHT_ENV_VAR = "QSIG_MAX_WEIGHT"

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_USAGE = 2

LIBRARY_ERRORS = (
    compositions.CompositionError,
    csv_utils.CsvFormatError,
    dual_functional.CharacterError,
    dual_functional.TruncationError,
    file_utils.NotAFileError,
    iterated_sums.WindowError,
    json_utils.SignatureJsonError,
    products.HalfShuffleError,
    scalars.ScalarKindError,
    time_series.TimeSeriesError,
    word_parser.WordParseError,
    words_module.AlphabetError,
    words_module.EmptyBracketError,
    FileExistsError,
    FileNotFoundError,
    ValueError
)


def add_max_weight_argument(parser):
    parser.add_argument(
        "--max-weight",
        type=int,
        default=None,
        help=(
            "Truncation weight W. Defaults to the value of "
            f"${MAX_WEIGHT_ENV_VAR} if set, else "
            f"{iterated_sums.DEFAULT_MAX_WEIGHT}."
        )
    )


def resolve_max_weight(flag_value, environ=None):
    """
    The truncation weight to use: the flag if given, else the
    environment variable, else the default.

    Raise a UsageError for a negative flag or a bad environment
    value.
    """
    if environ is None:
        environ = os.environ
    if flag_value is not None:
        if flag_value < 0:
            raise UsageError(
                f"--max-weight must be >= 0; you gave {flag_value}"
            )
        return flag_value
    raw = environ.get(MAX_WEIGHT_ENV_VAR)
    if raw is None or len(raw.strip()) == 0:
        return iterated_sums.DEFAULT_MAX_WEIGHT
    try:
        value = int(raw.strip())
    except ValueError:
        raise UsageError(
            f"${MAX_WEIGHT_ENV_VAR} must be a non-negative integer; "
            f"it is '{raw}'"
        )
    if value < 0:
        raise UsageError(
            f"${MAX_WEIGHT_ENV_VAR} must be a non-negative integer; "
            f"it is '{raw}'"
        )
    return value


def get_log(verbose):
    """
    Progress goes to stderr so that stdout stays machine readable
    """
    if verbose:
        return log_class.StdoutLog(stream=sys.stderr)
    return log_class.QuietLog()


def run_and_report(prog, func, *args, **kwargs):
    """
    Call func; library errors become a one-line diagnostic on
    stderr and exit status 2. Otherwise return func's result
    (an exit status).
    """
    try:
        return func(*args, **kwargs)
    except UsageError as err:
        print(f"{prog}: error: {err}", file=sys.stderr)
        return EXIT_USAGE
    except LIBRARY_ERRORS as err:
        print(f"{prog}: error: {err}", file=sys.stderr)
        return EXIT_USAGE


class UsageError(Exception):
    pass
