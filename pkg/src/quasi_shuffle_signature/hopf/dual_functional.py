"""
Truncated dual functionals (word series) and the convolution
algebra they form: convolution product, exp/log, the pairing with
polynomials, the character test and the Eulerian idempotent.
"""
import math
import warnings

import quasi_shuffle_signature.algebra.compositions as compositions
import quasi_shuffle_signature.algebra.polynomial as polynomial
import quasi_shuffle_signature.algebra.scalars as scalars
import quasi_shuffle_signature.algebra.words as words_module
import quasi_shuffle_signature.hopf.products as products


class DualFunctional(object):
    """
    A linear functional on T(A) truncated at weight max_weight,
    stored as a finite map Word -> scalar.

    Parameters
    ----------
    coefficients:
        dict mapping words (Word or word string) to scalars. Words
        that are not given have coefficient zero.
    max_weight:
        the truncation weight W. Every stored word must have
        weight <= W; looking up a heavier word is an error.
    d:
        ambient alphabet size (may be None if unknown)
    kind:
        scalars.EXACT or scalars.FLOAT (inferred if None)

    Notes
    -----
    Exact functionals never store zero coefficients. Float
    functionals keep whatever they are given.
    """

    def __init__(self, coefficients, max_weight, d=None, kind=None):
        if max_weight < 0:
            raise TruncationError(
                f"max_weight must be >= 0; you gave {max_weight}"
            )
        if isinstance(coefficients, dict):
            pairs = list(coefficients.items())
        else:
            pairs = list(coefficients)
        if kind is None:
            kind = scalars.infer_kind([pair[1] for pair in pairs])
        scalars.check_kind(kind)

        clean = dict()
        for word, value in pairs:
            word = polynomial.as_word(word, d=d)
            if word.weight > max_weight:
                raise TruncationError(
                    f"word {word} has weight {word.weight} > "
                    f"truncation weight {max_weight}"
                )
            value = scalars.coerce(value, kind)
            if word in clean:
                clean[word] += value
            else:
                clean[word] = value
        self._init_trusted(clean, max_weight, d, kind)

    def _init_trusted(self, coefficients, max_weight, d, kind):
        if kind == scalars.EXACT:
            coefficients = {
                w: c for w, c in coefficients.items() if c != 0
            }
        self._coefficients = coefficients
        self._max_weight = max_weight
        self._d = d
        self._kind = kind

    @classmethod
    def _trusted(cls, coefficients, max_weight, d, kind, **kwargs):
        result = cls.__new__(cls)
        DualFunctional._init_trusted(
            result, coefficients, max_weight, d, kind)
        result._init_extra(**kwargs)
        return result

    def _init_extra(self):
        pass

    @property
    def max_weight(self):
        return self._max_weight

    @property
    def d(self):
        return self._d

    @property
    def kind(self):
        return self._kind

    @property
    def coefficients(self):
        return dict(self._coefficients)

    def coefficient(self, word):
        """
        <word, self>; zero for words that are not stored.
        Raise a TruncationError if word is heavier than the
        truncation weight.
        """
        word = polynomial.as_word(word)
        if word.weight > self._max_weight:
            raise TruncationError(
                f"word {word} has weight {word.weight}; this functional "
                f"is truncated at weight {self._max_weight}"
            )
        if word in self._coefficients:
            return self._coefficients[word]
        return scalars.zero(self._kind)

    def __getitem__(self, word):
        return self.coefficient(word)

    def support(self):
        """
        Stored words in canonical order
        """
        return words_module.sort_words(self._coefficients.keys())

    def items(self):
        return [(w, self._coefficients[w]) for w in self.support()]

    def as_polynomial(self):
        return polynomial.Polynomial._trusted(
            self._coefficients, d=self._d, kind=self._kind)

    def truncate(self, max_weight):
        if max_weight > self._max_weight:
            raise TruncationError(
                f"cannot raise truncation from {self._max_weight} "
                f"to {max_weight}"
            )
        return DualFunctional._trusted(
            {w: c for w, c in self._coefficients.items()
             if w.weight <= max_weight},
            max_weight=max_weight,
            d=self._d,
            kind=self._kind
        )

    def _check_compatible(self, other):
        if not isinstance(other, DualFunctional):
            raise ValueError(
                f"expected a DualFunctional; you gave {other} "
                f"of type {type(other)}"
            )
        if self._max_weight != other._max_weight:
            raise TruncationError(
                f"mismatched truncation weights: {self._max_weight} "
                f"versus {other._max_weight}"
            )
        if self._kind != other._kind:
            raise scalars.ScalarKindError(
                f"cannot combine {self._kind} and {other._kind} "
                "functionals"
            )
        return words_module.merge_alphabet_sizes(self._d, other._d)

    def __add__(self, other):
        d = self._check_compatible(other)
        result = dict(self._coefficients)
        for w, c in other._coefficients.items():
            result[w] = result.get(w, 0) + c
        return DualFunctional._trusted(
            result, max_weight=self._max_weight, d=d, kind=self._kind)

    def __sub__(self, other):
        return self + other.scale(-1)

    def __neg__(self):
        return self.scale(-1)

    def scale(self, factor):
        factor = scalars.coerce(factor, self._kind)
        return DualFunctional._trusted(
            {w: factor*c for w, c in self._coefficients.items()},
            max_weight=self._max_weight,
            d=self._d,
            kind=self._kind
        )

    def __eq__(self, other):
        if not isinstance(other, DualFunctional):
            return NotImplemented
        if self._max_weight != other._max_weight:
            return False
        keys = set(self._coefficients) | set(other._coefficients)
        for w in keys:
            if self._coefficients.get(w, 0) != other._coefficients.get(w, 0):
                return False
        return True

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result

    __hash__ = None

    def approx_equal(
            self,
            other,
            rtol=scalars.FLOAT_RTOL,
            atol=scalars.FLOAT_ATOL):
        """
        Coefficientwise comparison with a tolerance for floats
        (exact functionals are compared exactly)
        """
        if self._max_weight != other._max_weight:
            return False
        return first_difference(self, other, rtol=rtol, atol=atol) is None

    def __str__(self):
        return polynomial.format_terms(
            [(str(w), c) for w, c in self.items() if c != 0]
        )

    def __repr__(self):
        return (
            f"{type(self).__name__}(max_weight={self._max_weight}, "
            f"{self.__str__()})"
        )


def first_difference(
        c0,
        c1,
        rtol=scalars.FLOAT_RTOL,
        atol=scalars.FLOAT_ATOL):
    """
    Return the first word (in canonical order) on which c0 and c1
    disagree, or None
    """
    keys = set(c0.coefficients) | set(c1.coefficients)
    for w in words_module.sort_words(keys):
        a = c0.coefficients.get(w, 0)
        b = c1.coefficients.get(w, 0)
        if not scalars.scalars_equal(a, b, rtol=rtol, atol=atol):
            return w
    return None


def epsilon(max_weight, d=None, kind=scalars.EXACT):
    """
    The counit functional: <e, epsilon> = 1, all else 0
    """
    return DualFunctional._trusted(
        {words_module.EMPTY_WORD: scalars.one(kind)},
        max_weight=max_weight,
        d=d,
        kind=kind
    )


def zero_functional(max_weight, d=None, kind=scalars.EXACT):
    return DualFunctional._trusted(
        dict(), max_weight=max_weight, d=d, kind=kind)


def convolve(c0, c1):
    """
    Convolution product

        <w, c0 . c1> = sum_{uv = w} <u, c0><v, c1>

    truncated at the common truncation weight.
    """
    d = c0._check_compatible(c1)
    max_weight = c0.max_weight

    by_weight = [[] for _ in range(max_weight+1)]
    for v, b in c1.coefficients.items():
        by_weight[v.weight].append((v, b))

    result = dict()
    for u, a in c0.coefficients.items():
        if a == 0:
            continue
        budget = max_weight - u.weight
        for weight in range(budget+1):
            for v, b in by_weight[weight]:
                w = u + v
                if w in result:
                    result[w] += a*b
                else:
                    result[w] = a*b
    return DualFunctional._trusted(
        result, max_weight=max_weight, d=d, kind=c0.kind)


def convolution_power(c, k):
    result = epsilon(c.max_weight, d=c.d, kind=c.kind)
    for _ in range(k):
        result = convolve(result, c)
    return result


def exp_conv(f):
    """
    exp(f) = epsilon + sum_{j>=1} f^j / j!

    The series terminates at the truncation weight because f
    vanishes on e.
    """
    if f.coefficient(words_module.EMPTY_WORD) != 0:
        raise CharacterError(
            "exp_conv requires <e, f> = 0; "
            f"you gave <e, f> = {f.coefficient(words_module.EMPTY_WORD)}"
        )
    result = epsilon(f.max_weight, d=f.d, kind=f.kind)
    power = epsilon(f.max_weight, d=f.d, kind=f.kind)
    for j in range(1, f.max_weight+1):
        power = convolve(power, f)
        result = result + power.scale(
            scalars.inverse_integer(math.factorial(j), f.kind))
    return result


def log_conv(c):
    """
    log(c) = sum_{i>=1} (-1)^(i-1) (c - epsilon)^i / i

    Requires <e, c> = 1.
    """
    if c.coefficient(words_module.EMPTY_WORD) != 1:
        raise CharacterError(
            "log_conv requires <e, c> = 1; "
            f"you gave <e, c> = {c.coefficient(words_module.EMPTY_WORD)}"
        )
    unit = epsilon(c.max_weight, d=c.d, kind=c.kind)
    augmentation = c - unit
    result = zero_functional(c.max_weight, d=c.d, kind=c.kind)
    power = unit
    for i in range(1, c.max_weight+1):
        power = convolve(power, augmentation)
        sign = 1 if i % 2 == 1 else -1
        result = result + power.scale(
            sign*scalars.inverse_integer(i, c.kind))
    return result


def pair(p, c):
    """
    The pairing <p, c> = sum_w p_w <w, c> of a polynomial with a
    dual functional.

    Exact polynomials may be paired with float functionals (the
    result is then a float); float polynomials cannot be paired
    with exact functionals.
    """
    p = polynomial.as_polynomial(p)
    words_module.merge_alphabet_sizes(p.d, c.d)
    if p.kind == scalars.FLOAT and c.kind == scalars.EXACT:
        raise scalars.ScalarKindError(
            "cannot pair a float polynomial with an exact functional"
        )
    result = scalars.zero(c.kind)
    for word, coefficient in p.terms.items():
        if c.kind == scalars.FLOAT:
            coefficient = float(coefficient)
        result += coefficient*c.coefficient(word)
    return result


def precompose(c, word_map, d=None):
    """
    The functional w -> <word_map(w), c> on every word of weight
    <= c.max_weight, i.e. c composed with the linear map word_map

    Parameters
    ----------
    c:
        a DualFunctional
    word_map:
        function Word -> Polynomial
    d:
        alphabet size; defaults to c.d (one of them must be known)
    """
    d = words_module.merge_alphabet_sizes(c.d, d)
    if d is None:
        raise ValueError(
            "precompose needs to know the alphabet size d"
        )
    result = dict()
    for word in compositions.canonical_words_up_to(d, c.max_weight):
        result[word] = pair(word_map(word), c)
    return DualFunctional._trusted(
        result, max_weight=c.max_weight, d=d, kind=c.kind)


def find_character_violation(c, max_weight=None, d=None):
    """
    Look for a pair of words (u, v) with |u| + |v| <= max_weight
    such that <u * v, c> != <u, c><v, c> (or for <e, c> != 1).

    Parameters
    ----------
    c:
        a DualFunctional
    max_weight:
        test pairs up to this total weight (default: c.max_weight)
    d:
        alphabet size; defaults to c.d, else inferred from the
        support of c

    Returns
    -------
    None if c passes, else a dict
        {'u': Word, 'v': Word, 'lhs': <u*v, c>, 'rhs': <u,c><v,c>}
    for the first failing pair in canonical order
    """
    if max_weight is None:
        max_weight = c.max_weight
    max_weight = min(max_weight, c.max_weight)

    d = words_module.merge_alphabet_sizes(c.d, d)
    if d is None:
        d = max(
            [words_module.max_letter(w) for w in c.coefficients] + [1]
        )

    e_value = c.coefficient(words_module.EMPTY_WORD)
    if not scalars.scalars_equal(e_value, 1):
        return {
            'u': words_module.EMPTY_WORD,
            'v': words_module.EMPTY_WORD,
            'lhs': e_value,
            'rhs': e_value*e_value
        }

    candidates = [
        w for w in compositions.canonical_words_up_to(d, max_weight)
        if len(w) > 0
    ]
    rank = {w: i for i, w in enumerate(candidates)}
    for u in candidates:
        budget = max_weight - u.weight
        if budget < u.weight:
            continue
        for v in candidates:
            if v.weight > budget:
                break
            if rank[v] < rank[u]:
                continue
            lhs = pair(products.quasi_shuffle(u, v), c)
            rhs = c.coefficient(u)*c.coefficient(v)
            if not scalars.scalars_equal(lhs, rhs):
                return {'u': u, 'v': v, 'lhs': lhs, 'rhs': rhs}
    return None


def is_character(c, max_weight=None, d=None):
    return find_character_violation(c, max_weight=max_weight, d=d) is None


def eulerian_idempotent(u, d=None):
    """
    The polynomial

        E(u) = sum_k (-1)^(k-1)/k sum_{u = u_1...u_k, u_i != e}
               u_1 * ... * u_k

    so that <E(u), c> = <u, log(c)> for every character c.
    E(e) = 0.
    """
    u = polynomial.as_word(u, d=d)
    result = polynomial.Polynomial.zero(d=d)
    n = len(u)
    if n == 0:
        return result
    for composition in compositions.compositions(n):
        k = len(composition)
        factors = [
            words_module.Word._trusted(block)
            for block in compositions.split_by_composition(u, composition)
        ]
        sign = 1 if k % 2 == 1 else -1
        result = result + products.quasi_shuffle_many(
            factors, d=d).scale(
                sign*scalars.inverse_integer(k, scalars.EXACT))
    return result


def eulerian_projection(u, c, check=True):
    """
    <E(u), c> where E is the Eulerian idempotent polynomial.

    For a character c this equals <u, log_conv(c)>. If check is
    True and c fails the character test up to weight |u|, a
    NonCharacterWarning is issued (the value is still returned but
    has no meaning).
    """
    u = polynomial.as_word(u)
    if u.weight > c.max_weight:
        raise TruncationError(
            f"word {u} has weight {u.weight}; functional is truncated "
            f"at weight {c.max_weight}"
        )
    if check:
        violation = find_character_violation(c, max_weight=u.weight)
        if violation is not None:
            warnings.warn(
                "eulerian_projection called on a functional that is "
                f"not a character: <{violation['u']} * {violation['v']}> "
                f"= {violation['lhs']} but the product of the "
                f"coefficients is {violation['rhs']}",
                category=NonCharacterWarning
            )
    return pair(eulerian_idempotent(u, d=c.d), c)


class TruncationError(Exception):
    pass


class CharacterError(Exception):
    pass


class NonCharacterWarning(UserWarning):
    pass
