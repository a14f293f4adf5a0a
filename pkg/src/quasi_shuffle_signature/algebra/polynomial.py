"""
Define Polynomial (finite linear combinations of words) and
TensorPair (finite linear combinations of pairs of words).
"""
import quasi_shuffle_signature.algebra.scalars as scalars
import quasi_shuffle_signature.algebra.words as words_module
import quasi_shuffle_signature.algebra.word_parser as word_parser


class Polynomial(object):
    """
    A finite map Word -> scalar, i.e. an element of T(A).

    Parameters
    ----------
    terms:
        dict (or iterable of pairs) mapping words to coefficients.
        Words may be given as Word instances, tuples of letter
        tuples, or strings in the word grammar.
    d:
        optional ambient alphabet size
    kind:
        scalars.EXACT or scalars.FLOAT. Inferred from the
        coefficients if None (exact if there are no floats).

    Notes
    -----
    Terms with a zero coefficient are never stored. Coefficients of
    repeated words are summed.
    """

    def __init__(self, terms=None, d=None, kind=None):
        if terms is None:
            terms = dict()
        if isinstance(terms, dict):
            pairs = list(terms.items())
        else:
            pairs = list(terms)

        if kind is None:
            kind = scalars.infer_kind([pair[1] for pair in pairs])
        scalars.check_kind(kind)

        clean = dict()
        for word, coefficient in pairs:
            word = as_word(word, d=d)
            coefficient = scalars.coerce(coefficient, kind)
            if word in clean:
                clean[word] += coefficient
            else:
                clean[word] = coefficient
        self._terms = {
            w: c for w, c in clean.items() if not scalars.is_zero(c)
        }
        self._d = d
        self._kind = kind

    @classmethod
    def _trusted(cls, terms, d, kind):
        """
        Construct from a dict whose keys are Words and whose values
        are already scalars of the right kind. Zeros are pruned.
        """
        result = cls.__new__(cls)
        result._terms = {
            w: c for w, c in terms.items() if c != 0
        }
        result._d = d
        result._kind = kind
        return result

    @classmethod
    def zero(cls, d=None, kind=scalars.EXACT):
        return cls._trusted(dict(), d=d, kind=kind)

    @classmethod
    def from_word(cls, word, coefficient=1, d=None, kind=scalars.EXACT):
        word = as_word(word, d=d)
        return cls._trusted(
            {word: scalars.coerce(coefficient, kind)},
            d=d,
            kind=kind
        )

    @property
    def d(self):
        return self._d

    @property
    def kind(self):
        return self._kind

    @property
    def terms(self):
        return dict(self._terms)

    def coefficient(self, word):
        """
        Coefficient of word (zero if absent)
        """
        word = as_word(word)
        if word in self._terms:
            return self._terms[word]
        return scalars.zero(self._kind)

    def __getitem__(self, word):
        return self.coefficient(word)

    def __contains__(self, word):
        return as_word(word) in self._terms

    def __len__(self):
        return len(self._terms)

    def words(self):
        """
        The words with nonzero coefficient, in canonical order
        """
        return words_module.sort_words(self._terms.keys())

    def items(self):
        """
        (word, coefficient) pairs in canonical word order
        """
        return [(w, self._terms[w]) for w in self.words()]

    def is_zero(self):
        return len(self._terms) == 0

    def weights(self):
        return set(w.weight for w in self._terms)

    def lengths(self):
        return set(len(w) for w in self._terms)

    def is_homogeneous(self):
        return len(self.weights()) <= 1

    def max_weight(self):
        if len(self._terms) == 0:
            return 0
        return max(self.weights())

    def with_d(self, d):
        """
        Return a copy of self tagged with alphabet size d
        """
        for w in self._terms:
            words_module.check_alphabet(w, d)
        return Polynomial._trusted(self._terms, d=d, kind=self._kind)

    def truncate(self, max_weight):
        """
        Drop every term of weight > max_weight
        """
        return Polynomial._trusted(
            {w: c for w, c in self._terms.items()
             if w.weight <= max_weight},
            d=self._d,
            kind=self._kind
        )

    def homogeneous_component(self, weight):
        return Polynomial._trusted(
            {w: c for w, c in self._terms.items() if w.weight == weight},
            d=self._d,
            kind=self._kind
        )

    def map_words(self, word_map):
        """
        Extend word_map (a function Word -> Polynomial) linearly
        to self.
        """
        result = dict()
        d = self._d
        for word, coefficient in self._terms.items():
            image = word_map(word)
            d = words_module.merge_alphabet_sizes(d, image.d)
            check_same_kind(self, image)
            for w, c in image._terms.items():
                if w in result:
                    result[w] += coefficient*c
                else:
                    result[w] = coefficient*c
        return Polynomial._trusted(result, d=d, kind=self._kind)

    def _combine(self, other, sign):
        other = as_polynomial(other)
        if not (self.is_zero() or other.is_zero()):
            check_same_kind(self, other)
        kind = self._kind if not self.is_zero() else other._kind
        d = words_module.merge_alphabet_sizes(self._d, other._d)
        result = dict(self._terms)
        for w, c in other._terms.items():
            if w in result:
                result[w] = result[w] + sign*c
            else:
                result[w] = sign*c
        return Polynomial._trusted(result, d=d, kind=kind)

    def __add__(self, other):
        return self._combine(other, 1)

    def __radd__(self, other):
        if isinstance(other, int) and other == 0:
            return self
        return as_polynomial(other)._combine(self, 1)

    def __sub__(self, other):
        return self._combine(other, -1)

    def __rsub__(self, other):
        return as_polynomial(other)._combine(self, -1)

    def __neg__(self):
        return Polynomial._trusted(
            {w: -c for w, c in self._terms.items()},
            d=self._d,
            kind=self._kind
        )

    def scale(self, factor):
        factor = scalars.coerce(factor, self._kind)
        return Polynomial._trusted(
            {w: factor*c for w, c in self._terms.items()},
            d=self._d,
            kind=self._kind
        )

    def __mul__(self, factor):
        if isinstance(factor, Polynomial):
            raise TypeError(
                "use hopf.products to multiply two polynomials"
            )
        return self.scale(factor)

    def __rmul__(self, factor):
        return self.scale(factor)

    def __eq__(self, other):
        if isinstance(other, (words_module.Word, str)):
            other = as_polynomial(other)
        if isinstance(other, int) and other == 0:
            return self.is_zero()
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self._terms == other._terms

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __str__(self):
        return format_terms(
            [(word_parser.print_word(w), c) for w, c in self.items()]
        )

    def __repr__(self):
        return f"Polynomial({self.__str__()})"


class TensorPair(object):
    """
    A finite map (Word, Word) -> scalar, an element of T(A) (x) T(A).
    Pairs are aggregated and zero coefficients are not stored.
    """

    def __init__(self, terms=None, d=None, kind=scalars.EXACT):
        if terms is None:
            terms = dict()
        if isinstance(terms, dict):
            triples = [(k[0], k[1], v) for k, v in terms.items()]
        else:
            triples = list(terms)
        clean = dict()
        for left, right, coefficient in triples:
            key = (as_word(left, d=d), as_word(right, d=d))
            coefficient = scalars.coerce(coefficient, kind)
            if key in clean:
                clean[key] += coefficient
            else:
                clean[key] = coefficient
        self._terms = {k: c for k, c in clean.items() if c != 0}
        self._d = d
        self._kind = kind

    @classmethod
    def _trusted(cls, terms, d, kind):
        result = cls.__new__(cls)
        result._terms = {k: c for k, c in terms.items() if c != 0}
        result._d = d
        result._kind = kind
        return result

    @property
    def d(self):
        return self._d

    @property
    def kind(self):
        return self._kind

    @property
    def terms(self):
        return dict(self._terms)

    def triples(self):
        """
        (left, right, coefficient) triples in canonical order
        (by left word, then right word)
        """
        keys = sorted(
            self._terms.keys(),
            key=lambda k: (words_module.word_sort_key(k[0]),
                           words_module.word_sort_key(k[1]))
        )
        return [(k[0], k[1], self._terms[k]) for k in keys]

    def coefficient(self, left, right):
        key = (as_word(left), as_word(right))
        if key in self._terms:
            return self._terms[key]
        return scalars.zero(self._kind)

    def __len__(self):
        return len(self._terms)

    def __add__(self, other):
        d = words_module.merge_alphabet_sizes(self._d, other._d)
        result = dict(self._terms)
        for k, c in other._terms.items():
            result[k] = result.get(k, 0) + c
        return TensorPair._trusted(result, d=d, kind=self._kind)

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, factor):
        factor = scalars.coerce(factor, self._kind)
        return TensorPair._trusted(
            {k: factor*c for k, c in self._terms.items()},
            d=self._d,
            kind=self._kind
        )

    def __eq__(self, other):
        if not isinstance(other, TensorPair):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __str__(self):
        return format_terms(
            [(f"{word_parser.print_word(u)} ⊗ "
              f"{word_parser.print_word(v)}", c)
             for u, v, c in self.triples()]
        )

    def __repr__(self):
        return f"TensorPair({self.__str__()})"


def as_word(word, d=None):
    """
    Coerce a Word, a string in the word grammar or a tuple of
    letter lists into a Word
    """
    if isinstance(word, str):
        return word_parser.parse_word(word, d=d)
    word = words_module.Word(word)
    if d is not None:
        words_module.check_alphabet(word, d)
    return word


def as_polynomial(value, d=None, kind=scalars.EXACT):
    """
    Coerce a Polynomial, Word or word string into a Polynomial
    """
    if isinstance(value, Polynomial):
        if d is not None:
            words_module.merge_alphabet_sizes(d, value.d)
            if value.d is None:
                return value.with_d(d)
        return value
    if isinstance(value, int) and not isinstance(value, bool) and value == 0:
        return Polynomial.zero(d=d, kind=kind)
    return Polynomial.from_word(value, d=d, kind=kind)


def check_same_kind(p, q):
    if p.kind != q.kind:
        raise scalars.ScalarKindError(
            f"cannot combine {p.kind} and {q.kind} scalars"
        )


def format_terms(labelled_terms):
    """
    Render a list of (label, coefficient) pairs as a signed sum.

    A coefficient of 1 is omitted, other coefficients are written
    as 'p' or 'p/q' followed by a space; the empty sum is '0'.
    """
    if len(labelled_terms) == 0:
        return "0"
    pieces = []
    for i_term, (label, coefficient) in enumerate(labelled_terms):
        negative = coefficient < 0
        magnitude = -coefficient if negative else coefficient
        if magnitude == 1:
            body = label
        else:
            body = f"{scalars.format_scalar(magnitude)} {label}"
        if i_term == 0:
            pieces.append(f"-{body}" if negative else body)
        else:
            pieces.append(f" - {body}" if negative else f" + {body}")
    return "".join(pieces)
