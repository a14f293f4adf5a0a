"""
Integer compositions, letter multisets and the block-merging
operation I[w] they index.
"""
import functools
import itertools

import quasi_shuffle_signature.algebra.words as words_module


def compositions(n):
    """
    Generate all compositions of n (ordered tuples of positive
    integers summing to n).

    Compositions are enumerated as bitmasks over the n-1 gaps
    between consecutive positions in increasing binary order; a set
    bit means "cut here". So compositions(3) yields
    (3,), (1, 2), (2, 1), (1, 1, 1).

    compositions(0) yields the single empty composition ().
    """
    if n < 0:
        raise CompositionError(f"cannot compose negative integer {n}")
    if n == 0:
        yield ()
        return
    for mask in range(1 << (n - 1)):
        parts = []
        current = 1
        for gap in range(n - 1):
            if mask & (1 << gap):
                parts.append(current)
                current = 1
            else:
                current += 1
        parts.append(current)
        yield tuple(parts)


def compositions_with_k_parts(n, k):
    """
    Generate the compositions of n with exactly k parts, in the
    same relative order as compositions(n)
    """
    for composition in compositions(n):
        if len(composition) == k:
            yield composition


def multisets(d, size):
    """
    Generate all multisets of `size` letters drawn from 1..d,
    as sorted tuples in lexicographic order
    """
    return itertools.combinations_with_replacement(range(1, d+1), size)


def split_by_composition(sequence, composition):
    """
    Cut sequence into consecutive blocks whose sizes are given by
    composition. Returns a tuple of tuples.
    """
    if sum(composition) != len(sequence):
        raise CompositionError(
            f"composition {composition} sums to {sum(composition)}; "
            f"need {len(sequence)}"
        )
    blocks = []
    i0 = 0
    for part in composition:
        if part < 1:
            raise CompositionError(
                f"composition {composition} has a non-positive part"
            )
        blocks.append(tuple(sequence[i0:i0+part]))
        i0 += part
    return tuple(blocks)


def merge_blocks(composition, brackets):
    """
    Merge consecutive blocks of brackets with the semigroup
    product. Returns the merged brackets as a Word.

    merge_blocks((2, 1), ([1], [2,3], [4])) -> [1,2,3][4]
    """
    result = []
    for block in split_by_composition(brackets, composition):
        if len(block) == 1:
            result.append(block[0])
        else:
            letters = []
            for bracket in block:
                letters += bracket
            result.append(
                words_module.Bracket._trusted(tuple(sorted(letters)))
            )
    return words_module.Word._trusted(tuple(result))


def iter_words(d, n):
    """
    Generate every word of weight exactly n over the alphabet 1..d,
    each exactly once (not in canonical order).

    Every such word is I[a_1...a_n] for a composition I of n; per
    block size we range over the multisets of letters of that size.
    """
    for composition in compositions(n):
        per_block = [
            [words_module.Bracket._trusted(m) for m in multisets(d, part)]
            for part in composition
        ]
        for brackets in itertools.product(*per_block):
            yield words_module.Word._trusted(brackets)


def iter_brackets(d, max_weight):
    """
    Generate every bracket over 1..d with weight <= max_weight,
    by weight then lexicographically
    """
    for weight in range(1, max_weight+1):
        for letters in multisets(d, weight):
            yield words_module.Bracket._trusted(letters)


@functools.lru_cache(maxsize=64)
def canonical_words(d, n):
    """
    All words of weight exactly n over 1..d as a tuple in the
    canonical word order
    """
    return tuple(words_module.sort_words(iter_words(d, n)))


@functools.lru_cache(maxsize=64)
def canonical_words_up_to(d, max_weight):
    """
    All words of weight <= max_weight over 1..d (including e)
    as a tuple in the canonical word order
    """
    result = []
    for n in range(max_weight+1):
        result += canonical_words(d, n)
    return tuple(result)


class CompositionError(Exception):
    pass
