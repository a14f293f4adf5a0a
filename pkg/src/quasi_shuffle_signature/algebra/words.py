"""
Define the letters, brackets and words the algebra is built on.

A Bracket is an element of the free commutative semigroup over the
letters 1..d, stored as a sorted tuple of letters (a multiset).
A Word is an ordered tuple of Brackets; the empty word e is the
empty tuple.

Both classes are tuple subclasses so that they are immutable,
hashable and cheap to compare.
"""
import numbers


class Bracket(tuple):
    """
    A nonempty multiset of letters, kept in canonical (sorted) form.

    Bracket([2, 1]) == Bracket([1, 2])
    """
    __slots__ = ()

    def __new__(cls, letters):
        if isinstance(letters, Bracket):
            return letters
        letters = tuple(sorted(_flatten_letters(letters)))
        if len(letters) == 0:
            raise EmptyBracketError("empty bracket")
        return tuple.__new__(cls, letters)

    @classmethod
    def _trusted(cls, letters):
        """
        Build a Bracket from a tuple already known to be sorted
        and valid.
        """
        return tuple.__new__(cls, letters)

    @property
    def letters(self):
        return tuple(self)

    @property
    def weight(self):
        return len(self)

    def merge(self, other):
        """
        The commutative semigroup product [a][b] -> [ab]
        """
        return Bracket._trusted(tuple(sorted(self + other)))

    def __repr__(self):
        return "[" + ",".join(str(ii) for ii in self) + "]"

    def __str__(self):
        return self.__repr__()

    def __getnewargs__(self):
        return (tuple(self),)


class Word(tuple):
    """
    An ordered tuple of Brackets. Word() is the empty word e.
    """
    __slots__ = ()

    def __new__(cls, brackets=()):
        if isinstance(brackets, Word):
            return brackets
        return tuple.__new__(
            cls,
            tuple(Bracket(b) for b in brackets)
        )

    @classmethod
    def _trusted(cls, brackets):
        return tuple.__new__(cls, brackets)

    @property
    def brackets(self):
        return tuple(self)

    @property
    def length(self):
        return len(self)

    @property
    def weight(self):
        return sum(len(b) for b in self)

    def is_empty(self):
        return len(self) == 0

    def letters(self):
        """
        Return the set of letters appearing anywhere in the word
        """
        result = set()
        for bracket in self:
            result.update(bracket)
        return result

    def __add__(self, other):
        return Word._trusted(tuple.__add__(self, Word(other)))

    def __getitem__(self, key):
        result = tuple.__getitem__(self, key)
        if isinstance(key, slice):
            return Word._trusted(result)
        return result

    def __repr__(self):
        if len(self) == 0:
            return "e"
        return "".join(repr(b) for b in self)

    def __str__(self):
        return self.__repr__()

    def __getnewargs__(self):
        return (tuple(self),)


EMPTY_WORD = Word()


def canonical_bracket(letters, d=None):
    """
    Return the canonical Bracket for a (possibly nested) list of
    letters.

    Parameters
    ----------
    letters:
        list of positive integers. Nested lists are flattened, so
        [1, [2, 3]] and [3, 2, 1] give the same Bracket
    d:
        optional alphabet size. If given, every letter must be
        in 1..d

    Returns
    -------
    A Bracket
    """
    bracket = Bracket(letters)
    if d is not None:
        check_alphabet(Word._trusted((bracket,)), d)
    return bracket


def word_weight(w):
    """
    Sum of the weights of the brackets in w; |e| = 0
    """
    return Word(w).weight


def word_length(w):
    return len(Word(w))


def concatenate(u, v):
    return Word(u) + Word(v)


def word_sort_key(w):
    """
    Key implementing the canonical total order on words:
    weight ascending, then length descending, then lexicographic
    on the tuple of bracket letter-tuples.
    """
    return (w.weight, -len(w), tuple(tuple(b) for b in w))


def sort_words(words):
    return sorted(words, key=word_sort_key)


def max_letter(w):
    """
    Largest letter in w (0 for the empty word)
    """
    result = 0
    for bracket in w:
        if bracket[-1] > result:
            result = bracket[-1]
    return result


def check_alphabet(w, d):
    """
    Raise an AlphabetError if any letter of w lies outside 1..d
    """
    if d is None:
        return
    for bracket in w:
        for letter in bracket:
            if letter < 1 or letter > d:
                raise AlphabetError(
                    f"letter out of alphabet: {letter} in word {w} "
                    f"(alphabet is 1..{d})"
                )


def merge_alphabet_sizes(d0, d1):
    """
    Combine the ambient alphabet sizes of two operands.
    None means 'unspecified' and is compatible with anything.
    """
    if d0 is None:
        return d1
    if d1 is None:
        return d0
    if d0 != d1:
        raise AlphabetError(
            f"mismatched alphabets: d={d0} versus d={d1}"
        )
    return d0


def _flatten_letters(letters):
    if isinstance(letters, bool):
        raise AlphabetError(f"letter must be an integer; you gave {letters}")
    if isinstance(letters, numbers.Integral):
        letters = [letters]
    result = []
    for item in letters:
        if isinstance(item, (list, tuple)):
            result += _flatten_letters(item)
            continue
        if isinstance(item, bool) or not isinstance(item, numbers.Integral):
            raise AlphabetError(
                f"letter must be an integer; you gave {item} "
                f"of type {type(item)}"
            )
        if item < 1:
            raise AlphabetError(
                f"letter out of alphabet: {item} (letters are >= 1)"
            )
        result.append(int(item))
    return result


class EmptyBracketError(Exception):
    pass


class AlphabetError(Exception):
    pass
