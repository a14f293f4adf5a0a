"""
Exact linear algebra over the rationals for spans of polynomials.

Elimination is fraction-free (Bareiss): every row is first scaled
to integers, all intermediate entries stay integers and every
division is exact. Pivot rows are chosen as the earliest eligible
row, and rows are indexed by words in the canonical word order, so
results (in particular membership certificates) are deterministic.
"""
import fractions
import math

import numpy as np

import quasi_shuffle_signature.algebra.polynomial as polynomial
import quasi_shuffle_signature.algebra.scalars as scalars
import quasi_shuffle_signature.algebra.words as words_module


def word_basis(polys):
    """
    The union of the supports of polys, in canonical order
    """
    support = set()
    for p in polys:
        support.update(p.terms.keys())
    return words_module.sort_words(support)


def coefficient_matrix(polys, words=None):
    """
    Matrix (as an object array of Fractions) whose column i holds
    the coefficients of polys[i] on `words` (default: word_basis)

    Returns
    -------
    matrix:
        (len(words), len(polys)) object array
    words:
        the row labels
    """
    polys = [_as_exact_polynomial(p) for p in polys]
    if words is None:
        words = word_basis(polys)
    matrix = np.empty((len(words), len(polys)), dtype=object)
    matrix[:, :] = fractions.Fraction(0)
    row_of = {w: i for i, w in enumerate(words)}
    for i_poly, p in enumerate(polys):
        for w, c in p.terms.items():
            if w not in row_of:
                raise ValueError(
                    f"word {w} of polynomial {i_poly} is not among the "
                    "requested words"
                )
            matrix[row_of[w], i_poly] = c
    return matrix, words


def bareiss_echelon(matrix):
    """
    Fraction-free row echelon form.

    Parameters
    ----------
    matrix:
        2-D array-like of ints/Fractions

    Returns
    -------
    echelon:
        integer object array in row echelon form (rows of the input
        scaled to integers, then eliminated)
    pivots:
        list of (row, column) pivot positions
    """
    echelon = _integer_rows(matrix)
    n_rows, n_cols = echelon.shape
    pivots = []
    previous = 1
    row = 0
    for col in range(n_cols):
        if row >= n_rows:
            break
        candidates = np.flatnonzero(echelon[row:, col] != 0)
        if len(candidates) == 0:
            continue
        pivot_row = row + int(candidates[0])
        if pivot_row != row:
            echelon[[row, pivot_row], :] = echelon[[pivot_row, row], :]
        pivot = echelon[row, col]
        if row+1 < n_rows:
            below = echelon[row+1:, col].copy()
            echelon[row+1:, col+1:] = (
                pivot*echelon[row+1:, col+1:]
                - np.multiply.outer(below, echelon[row, col+1:])
            ) // previous
            echelon[row+1:, col] = 0
        previous = pivot
        pivots.append((row, col))
        row += 1
    return echelon, pivots


def exact_rank(vectors):
    """
    Rank of a list of Polynomials, or of a 2-D array of exact
    scalars (rows are the vectors)
    """
    if len(vectors) == 0:
        return 0
    if all(isinstance(v, polynomial.Polynomial) for v in vectors):
        matrix, _ = coefficient_matrix(vectors)
    else:
        matrix = _as_exact_array(vectors)
    if matrix.size == 0:
        return 0
    _, pivots = bareiss_echelon(matrix)
    return len(pivots)


def independent_subset(polys):
    """
    The greedy maximal linearly independent subsequence of polys:
    polys[i] is kept iff it is not in the span of polys[:i]

    Returns
    -------
    list of indices into polys
    """
    if len(polys) == 0:
        return []
    matrix, _ = coefficient_matrix(polys)
    if matrix.shape[0] == 0:
        return []
    _, pivots = bareiss_echelon(matrix)
    return [col for _, col in pivots]


def span_membership(p, generators):
    """
    Decide whether p is a linear combination of generators.

    Parameters
    ----------
    p:
        Polynomial with exact coefficients
    generators:
        list of Polynomials with exact coefficients

    Returns
    -------
    (in_span, certificate)
        in_span is a boolean; certificate is a list of Fractions
        c with sum_i c[i] generators[i] = p when in_span is True
        (free coefficients are set to zero), else None
    """
    p = _as_exact_polynomial(p)
    generators = [_as_exact_polynomial(g) for g in generators]
    n_generators = len(generators)
    if p.is_zero():
        return True, [fractions.Fraction(0)]*n_generators

    matrix, _ = coefficient_matrix(generators + [p])
    echelon, pivots = bareiss_echelon(matrix)
    if any(col == n_generators for _, col in pivots):
        return False, None

    certificate = [fractions.Fraction(0)]*n_generators
    for row, col in reversed(pivots):
        value = fractions.Fraction(echelon[row, n_generators])
        for j in range(col+1, n_generators):
            if certificate[j] != 0:
                value -= echelon[row, j]*certificate[j]
        certificate[col] = value / echelon[row, col]
    return True, certificate


def span_contains(spanning, members):
    """
    Whether every polynomial in members lies in the span of
    spanning, decided by comparing ranks
    """
    if len(members) == 0:
        return True
    return exact_rank(list(spanning)) == exact_rank(
        list(spanning) + list(members))


def combine(coefficients, polys):
    """
    sum_i coefficients[i] polys[i]
    """
    result = polynomial.Polynomial.zero()
    for c, p in zip(coefficients, polys):
        if c != 0:
            result = result + p.scale(c)
    return result


def _as_exact_polynomial(p):
    p = polynomial.as_polynomial(p)
    if p.kind != scalars.EXACT:
        raise scalars.ScalarKindError(
            "exact linear algebra needs exact coefficients; "
            f"you gave a polynomial with {p.kind} coefficients"
        )
    return p


def _as_exact_array(rows):
    rows = [list(r) for r in rows]
    n_cols = len(rows[0])
    result = np.empty((len(rows), n_cols), dtype=object)
    for i_row, r in enumerate(rows):
        if len(r) != n_cols:
            raise ValueError(
                f"row {i_row} has {len(r)} entries; row 0 has {n_cols}"
            )
        for i_col, value in enumerate(r):
            result[i_row, i_col] = scalars.coerce(value, scalars.EXACT)
    return result


def _integer_rows(matrix):
    """
    Copy of matrix with every row multiplied by the lcm of its
    denominators, as Python ints
    """
    matrix = np.asarray(matrix, dtype=object)
    result = np.empty(matrix.shape, dtype=object)
    for i_row in range(matrix.shape[0]):
        entries = [fractions.Fraction(v) for v in matrix[i_row]]
        scale = math.lcm(*[v.denominator for v in entries]) if entries else 1
        result[i_row, :] = [
            v.numerator*(scale // v.denominator) for v in entries
        ]
    return result
