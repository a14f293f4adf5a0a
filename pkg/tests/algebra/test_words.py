import pytest

import pickle

import quasi_shuffle_signature.algebra.words as words_module


def test_bracket():
    a = words_module.Bracket([2, 1, 2])
    assert a == (1, 2, 2)
    assert a.weight == 3
    assert a == words_module.Bracket((2, 2, 1))
    assert repr(a) == "[1,2,2]"
    assert a.merge(words_module.Bracket([1])) == (1, 1, 2, 2)
    assert words_module.canonical_bracket([1, [3, 2]]) == (1, 2, 3)

    with pytest.raises(words_module.EmptyBracketError):
        words_module.Bracket([])
    with pytest.raises(words_module.AlphabetError, match="out of alphabet"):
        words_module.Bracket([0])
    with pytest.raises(words_module.AlphabetError, match="must be an integer"):
        words_module.Bracket([1.5])
    with pytest.raises(words_module.AlphabetError, match="out of alphabet"):
        words_module.canonical_bracket([1, 3], d=2)


def test_word():
    w = words_module.Word([[3], [2, 1], 4])
    assert w.length == 3
    assert w.weight == 4
    assert str(w) == "[3][1,2][4]"
    assert w.letters() == {1, 2, 3, 4}
    assert words_module.max_letter(w) == 4
    assert isinstance(w[1:], words_module.Word)
    assert w[1:] == words_module.Word([[1, 2], [4]])
    assert w[0] == words_module.Bracket([3])

    e = words_module.EMPTY_WORD
    assert e.is_empty()
    assert e.weight == 0
    assert str(e) == "e"
    assert words_module.max_letter(e) == 0

    assert words_module.concatenate(w, e) == w
    assert words_module.concatenate([[1]], [[2]]) == words_module.Word([1, 2])
    assert words_module.word_weight([[1, 1], [2]]) == 3
    assert words_module.word_length([[1, 1], [2]]) == 2


def test_pickle_round_trip():
    w = words_module.Word([[1, 2], [3]])
    assert pickle.loads(pickle.dumps(w)) == w
    assert isinstance(pickle.loads(pickle.dumps(w)), words_module.Word)
    assert isinstance(pickle.loads(pickle.dumps(w))[0], words_module.Bracket)


def test_canonical_order():
    unsorted = [
        words_module.Word([[2, 2]]),
        words_module.Word([]),
        words_module.Word([2, 1]),
        words_module.Word([[1, 2]]),
        words_module.Word([1]),
        words_module.Word([1, 2]),
        words_module.Word([2])
    ]
    expected = [
        words_module.Word([]),
        words_module.Word([1]),
        words_module.Word([2]),
        words_module.Word([1, 2]),
        words_module.Word([2, 1]),
        words_module.Word([[1, 2]]),
        words_module.Word([[2, 2]])
    ]
    assert words_module.sort_words(unsorted) == expected


def test_alphabet():
    words_module.check_alphabet(words_module.Word([1, 2]), 2)
    words_module.check_alphabet(words_module.Word([1, 7]), None)
    with pytest.raises(words_module.AlphabetError, match="alphabet is 1..2"):
        words_module.check_alphabet(words_module.Word([[1, 3]]), 2)

    assert words_module.merge_alphabet_sizes(None, 3) == 3
    assert words_module.merge_alphabet_sizes(3, None) == 3
    assert words_module.merge_alphabet_sizes(None, None) is None
    with pytest.raises(words_module.AlphabetError, match="mismatched"):
        words_module.merge_alphabet_sizes(2, 3)
