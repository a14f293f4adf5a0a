"""
Read time series from CSV files.

Format: an optional header row (recognised because at least one of
its cells is not a number), then one row per time point, x_0 first.
The number of columns is the dimension d. Under exact reading cells
must be integers or p/q rationals; otherwise anything float()
accepts is allowed except p/q rationals. Cells may be quoted.
"""
import re

import pandas as pd

import quasi_shuffle_signature.algebra.scalars as scalars
import quasi_shuffle_signature.signature.time_series as time_series
import quasi_shuffle_signature.utils.file_utils as file_utils


_too_many_fields = re.compile(
    r"Expected (\d+) fields in line (\d+), saw (\d+)")


def read_time_series_csv(csv_path, exact=False):
    """
    Parameters
    ----------
    csv_path:
        path to the CSV file
    exact:
        if True, read exact rationals; else floats

    Returns
    -------
    A TimeSeries. A file with no data rows gives a series with no
    points (its signature is epsilon); d is then the number of
    header columns, or 1 without a header.

    Raises
    ------
    CsvFormatError
        for ragged rows and bad cells, with the (1-based) line and
        column of the problem
    """
    file_utils.assert_is_file(csv_path)
    kind = scalars.kind_from_exact_flag(exact)
    records = _read_records(csv_path)

    d = None
    if len(records) > 0 and _is_header(records[0][1]):
        d = len(records[0][1])
        records = records[1:]

    if len(records) == 0:
        return time_series.TimeSeries([], kind=kind, d=d)

    n_columns = d if d is not None else len(records[0][1])
    rows = []
    for line_number, cells in records:
        if len(cells) != n_columns:
            raise CsvFormatError(
                f"ragged row: line {line_number} has {len(cells)} "
                f"columns; expected {n_columns}",
                row=line_number,
                column=None
            )
        rows.append([
            _parse_cell(cell, kind, line_number, i_col+1)
            for i_col, cell in enumerate(cells)
        ])
    return time_series.TimeSeries(rows, kind=kind)


def _read_records(csv_path):
    """
    (line number, list of stripped cells) for every non-blank line.
    Missing trailing fields shorten the list.
    """
    try:
        raw = pd.read_csv(
            csv_path,
            header=None,
            dtype=str,
            keep_default_na=False,
            skip_blank_lines=False
        )
    except pd.errors.EmptyDataError:
        return []
    except pd.errors.ParserError as err:
        match = _too_many_fields.search(str(err))
        if match is None:
            raise CsvFormatError(
                f"could not parse {csv_path}: {err}",
                row=None,
                column=None
            )
        expected, line_number, found = (int(g) for g in match.groups())
        raise CsvFormatError(
            f"ragged row: line {line_number} has {found} "
            f"columns; expected {expected}",
            row=line_number,
            column=None
        )

    records = []
    for i_row, values in enumerate(raw.itertuples(index=False)):
        cells = [
            value.strip() for value in values if not pd.isna(value)
        ]
        if all(len(cell) == 0 for cell in cells):
            continue
        records.append((i_row+1, cells))
    return records


def _is_header(cells):
    return any(
        len(cell) > 0 and not _looks_numeric(cell) for cell in cells
    )


def _looks_numeric(cell):
    for kind in scalars.VALID_KINDS:
        try:
            scalars.parse_scalar(cell, kind)
            return True
        except (ValueError, scalars.ScalarKindError):
            pass
    return False


def _parse_cell(cell, kind, row, column):
    try:
        return scalars.parse_scalar(cell, kind)
    except scalars.ScalarKindError as err:
        raise CsvFormatError(
            f"line {row}, column {column}: {err}",
            row=row,
            column=column
        )
    except ValueError:
        raise CsvFormatError(
            f"line {row}, column {column}: non-numeric cell '{cell}'",
            row=row,
            column=column
        )


class CsvFormatError(Exception):

    def __init__(self, msg, row, column):
        super().__init__(msg)
        self.row = row
        self.column = column
