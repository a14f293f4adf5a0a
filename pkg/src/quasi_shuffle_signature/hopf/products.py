"""
Products on T(A): quasi-shuffle, shuffle, their half-shuffles
and concatenation.

On basis words the products are computed by the usual recursion
on the last bracket. Each bilinear call carries its own memo of
word-pair results, dropped when the call returns.
"""
import functools

import quasi_shuffle_signature.algebra.polynomial as polynomial
import quasi_shuffle_signature.algebra.words as words_module


QSH_HALF_KINDS = {
    'right': 'right',
    '≻̇': 'right',
    'left': 'left',
    '≺̇': 'left',
    'diamond': 'diamond',
    '⋄': 'diamond'
}

SH_HALF_KINDS = {
    'right': 'right',
    '≻': 'right',
    'left': 'left',
    '≺': 'left'
}


def quasi_shuffle(u, v, d=None):
    """
    The quasi-shuffle product u * v, defined on words by

        e * w = w * e = w
        ua * vb = (u * vb)a + (ua * v)b + (u * v)[ab]

    and extended bilinearly.

    Parameters
    ----------
    u, v:
        Words, word strings or Polynomials
    d:
        optional ambient alphabet size

    Returns
    -------
    A Polynomial
    """
    return _bilinear(u, v, _quasi_shuffle_words, d=d)


def shuffle(u, v, d=None):
    """
    The shuffle product of u and v (brackets are treated as
    letters; no merging happens)
    """
    return _bilinear(u, v, _shuffle_words, d=d)


def half_shuffle_qsh(kind, u, v, d=None):
    """
    Quasi-shuffle half-shuffles

        ua right vb   = (ua * v)b
        ua left vb    = (u * vb)a
        ua diamond vb = (u * v)[ab]

    The three always sum to u * v.

    Parameters
    ----------
    kind:
        'right' (or '≻̇'), 'left' (or '≺̇') or 'diamond' (or '⋄')
    u, v:
        nonempty words (or polynomials without an e term)
    """
    if kind not in QSH_HALF_KINDS:
        raise ValueError(
            f"half-shuffle kind must be one of {sorted(QSH_HALF_KINDS)}; "
            f"you gave {kind}"
        )
    kind = QSH_HALF_KINDS[kind]
    word_product = {
        'right': _right_half_qsh_words,
        'left': _left_half_qsh_words,
        'diamond': _diamond_words
    }[kind]
    return _bilinear(u, v, word_product, d=d, nonempty=True)


def half_shuffle_sh(kind, u, v, d=None):
    """
    Shuffle half-shuffles

        ua right vb = (ua sh v)b
        ua left vb  = (u sh vb)a

    Parameters
    ----------
    kind:
        'right' (or '≻') or 'left' (or '≺')
    """
    if kind not in SH_HALF_KINDS:
        raise ValueError(
            f"half-shuffle kind must be one of {sorted(SH_HALF_KINDS)}; "
            f"you gave {kind}"
        )
    kind = SH_HALF_KINDS[kind]
    word_product = {
        'right': _right_half_sh_words,
        'left': _left_half_sh_words
    }[kind]
    return _bilinear(u, v, word_product, d=d, nonempty=True)


def concatenate(u, v, d=None):
    """
    Bilinear extension of word concatenation
    """
    return _bilinear(u, v, _concatenate_words, d=d)


def quasi_shuffle_many(factors, d=None):
    """
    Quasi-shuffle product of a list of words/polynomials
    (e for the empty list)
    """
    result = polynomial.as_polynomial(words_module.EMPTY_WORD, d=d)
    for factor in factors:
        result = quasi_shuffle(result, factor, d=d)
    return result


def _bilinear(u, v, word_product, d=None, nonempty=False):
    p = polynomial.as_polynomial(u, d=d)
    q = polynomial.as_polynomial(v, d=d)
    d = words_module.merge_alphabet_sizes(p.d, q.d)
    if not (p.is_zero() or q.is_zero()):
        polynomial.check_same_kind(p, q)
    kind = p.kind if not p.is_zero() else q.kind

    p_terms = p.terms
    q_terms = q.terms
    if nonempty:
        if (words_module.EMPTY_WORD in p_terms
                or words_module.EMPTY_WORD in q_terms):
            raise HalfShuffleError("half-shuffles undefined on e")

    memo = dict()
    result = dict()
    for w0, c0 in p_terms.items():
        for w1, c1 in q_terms.items():
            coefficient = c0*c1
            for w, count in word_product(w0, w1, memo):
                if w in result:
                    result[w] += coefficient*count
                else:
                    result[w] = coefficient*count
    return polynomial.Polynomial._trusted(result, d=d, kind=kind)


def _append(word, bracket):
    return words_module.Word._trusted(tuple.__add__(word, (bracket,)))


def _accumulate(result, items, bracket=None):
    for w, count in items:
        if bracket is not None:
            w = _append(w, bracket)
        if w in result:
            result[w] += count
        else:
            result[w] = count


def _freeze(result):
    return tuple((w, c) for w, c in result.items() if c != 0)


def _memoized(word_product):
    """
    Cache word_product(u, v, memo) in memo, keyed by the function
    and the pair of words
    """
    @functools.wraps(word_product)
    def wrapper(u, v, memo):
        key = (word_product.__name__, u, v)
        if key not in memo:
            memo[key] = word_product(u, v, memo)
        return memo[key]
    return wrapper


@_memoized
def _quasi_shuffle_words(u, v, memo):
    """
    Quasi-shuffle of two basis words as a tuple of
    (word, integer multiplicity) pairs
    """
    if len(u) == 0:
        return ((v, 1),)
    if len(v) == 0:
        return ((u, 1),)
    result = dict()
    _accumulate(result, _left_half_qsh_words(u, v, memo))
    _accumulate(result, _right_half_qsh_words(u, v, memo))
    _accumulate(result, _diamond_words(u, v, memo))
    return _freeze(result)


@_memoized
def _right_half_qsh_words(u, v, memo):
    result = dict()
    _accumulate(result, _quasi_shuffle_words(u, v[:-1], memo), bracket=v[-1])
    return _freeze(result)


@_memoized
def _left_half_qsh_words(u, v, memo):
    result = dict()
    _accumulate(result, _quasi_shuffle_words(u[:-1], v, memo), bracket=u[-1])
    return _freeze(result)


@_memoized
def _diamond_words(u, v, memo):
    result = dict()
    _accumulate(
        result,
        _quasi_shuffle_words(u[:-1], v[:-1], memo),
        bracket=u[-1].merge(v[-1])
    )
    return _freeze(result)


@_memoized
def _shuffle_words(u, v, memo):
    if len(u) == 0:
        return ((v, 1),)
    if len(v) == 0:
        return ((u, 1),)
    result = dict()
    _accumulate(result, _left_half_sh_words(u, v, memo))
    _accumulate(result, _right_half_sh_words(u, v, memo))
    return _freeze(result)


@_memoized
def _right_half_sh_words(u, v, memo):
    result = dict()
    _accumulate(result, _shuffle_words(u, v[:-1], memo), bracket=v[-1])
    return _freeze(result)


@_memoized
def _left_half_sh_words(u, v, memo):
    result = dict()
    _accumulate(result, _shuffle_words(u[:-1], v, memo), bracket=u[-1])
    return _freeze(result)


def _concatenate_words(u, v, memo):
    return ((u + v, 1),)


class HalfShuffleError(Exception):
    pass
