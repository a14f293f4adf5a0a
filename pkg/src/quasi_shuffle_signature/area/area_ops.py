"""
The area and discrete area operations and the spaces spanned by
their iterates.

    area(u, v)  = u > v - v > u     (right half-shuffle)
    darea(u, v) = u >. v - v >. u   (right half-quasi-shuffle)

Both are bilinear and antisymmetric.
"""
import functools
import itertools

import quasi_shuffle_signature.algebra.compositions as compositions
import quasi_shuffle_signature.algebra.polynomial as polynomial
import quasi_shuffle_signature.algebra.scalars as scalars
import quasi_shuffle_signature.algebra.words as words_module
import quasi_shuffle_signature.area.linear_algebra as linear_algebra
import quasi_shuffle_signature.hopf.products as products
import quasi_shuffle_signature.utils.typing_utils as typing_utils


CONTINUOUS = 'continuous'
DISCRETE = 'discrete'

VALID_AREA_KINDS = (CONTINUOUS, DISCRETE)


def area(u, v, d=None):
    """
    area(u, v) = u > v - v > u, extended bilinearly.
    Raise a HalfShuffleError if e appears in either argument.
    """
    return (
        products.half_shuffle_sh('right', u, v, d=d)
        - products.half_shuffle_sh('right', v, u, d=d)
    )


def darea(u, v, d=None):
    """
    darea(u, v) = u >. v - v >. u, extended bilinearly.
    Raise a HalfShuffleError if e appears in either argument.
    """
    return (
        products.half_shuffle_qsh('right', u, v, d=d)
        - products.half_shuffle_qsh('right', v, u, d=d)
    )


def area_operation(kind):
    """
    Return area or darea according to kind
    """
    _check_area_kind(kind)
    if kind == CONTINUOUS:
        return area
    return darea


def area_space_basis(kind, n, d, max_weight):
    """
    A basis of the iterated area space of depth n (D_n for
    kind='continuous', its discrete analogue for kind='discrete'),
    restricted to weight <= max_weight.

    D_1 is spanned by the brackets; D_{n} is spanned by
    area(D_{n-m}, D_m) for m = 1..n-1.

    Parameters
    ----------
    kind:
        'continuous' or 'discrete'
    n:
        depth >= 1
    d:
        alphabet size
    max_weight:
        weight cap

    Returns
    -------
    list of weight-homogeneous Polynomials, linearly independent,
    sorted by weight
    """
    _check_area_kind(kind)
    n = typing_utils.check_positive_int("n", n)
    d = typing_utils.check_positive_int("d", d)
    max_weight = typing_utils.check_nonnegative_int("max_weight", max_weight)
    return list(_area_space_basis(kind, n, d, max_weight))


@functools.lru_cache(maxsize=128)
def _area_space_basis(kind, n, d, max_weight):
    if n == 1:
        return tuple(
            polynomial.Polynomial._trusted(
                {words_module.Word._trusted((bracket,)): _one()},
                d=d,
                kind=scalars.EXACT)
            for bracket in compositions.iter_brackets(d, max_weight)
        )
    operation = area_operation(kind)
    generators = []
    for m in range(1, n):
        left = _area_space_basis(kind, n-m, d, max_weight)
        right = _area_space_basis(kind, m, d, max_weight)
        for p, q in itertools.product(left, right):
            if p.max_weight() + q.max_weight() > max_weight:
                continue
            image = operation(p, q, d=d)
            if not image.is_zero():
                generators.append(image)
    return list(_homogeneous_basis(generators))


def area_space_span(kind, d, max_weight):
    """
    A basis of the sum of the iterated area spaces of every depth,
    restricted to weight <= max_weight (depth n only contributes
    weights >= n, so depths up to max_weight suffice)
    """
    _check_area_kind(kind)
    generators = []
    for n in range(1, max_weight+1):
        generators += area_space_basis(kind, n, d, max_weight)
    return list(_homogeneous_basis(generators))


def area_span_generators(d, max_weight):
    """
    The brackets together with every u([a][b] - [b][a]) for a word
    u and brackets a, b, restricted to weight <= max_weight

    Returns
    -------
    list of Polynomials (not reduced)
    """
    d = typing_utils.check_positive_int("d", d)
    max_weight = typing_utils.check_nonnegative_int("max_weight", max_weight)
    brackets = list(compositions.iter_brackets(d, max_weight))
    result = [
        polynomial.Polynomial._trusted(
            {words_module.Word._trusted((a,)): _one()},
            d=d,
            kind=scalars.EXACT)
        for a in brackets
    ]
    prefixes = compositions.canonical_words_up_to(d, max_weight)
    for a, b in itertools.combinations(brackets, 2):
        for u in prefixes:
            if u.weight + a.weight + b.weight > max_weight:
                continue
            ab = u + words_module.Word._trusted((a, b))
            ba = u + words_module.Word._trusted((b, a))
            result.append(
                polynomial.Polynomial._trusted(
                    {ab: _one(), ba: -_one()},
                    d=d,
                    kind=scalars.EXACT)
            )
    return result


def _homogeneous_basis(generators):
    """
    Split generators by weight (each is homogeneous) and keep an
    independent subset per weight
    """
    by_weight = dict()
    for p in generators:
        by_weight.setdefault(p.max_weight(), []).append(p)
    basis = []
    for weight in sorted(by_weight):
        chunk = by_weight[weight]
        basis += [chunk[i] for i in linear_algebra.independent_subset(chunk)]
    return tuple(basis)


def _one():
    return scalars.one(scalars.EXACT)


def _check_area_kind(kind):
    if kind not in VALID_AREA_KINDS:
        raise ValueError(
            f"area kind must be one of {VALID_AREA_KINDS}; you gave {kind}"
        )
