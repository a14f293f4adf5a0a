"""
Parse and print words in the text grammar

    word    := "e" | bracket+
    bracket := "[" letter ("," letter)* "]"
    letter  := decimal integer >= 1

Leading and trailing whitespace around the whole word is ignored;
whitespace anywhere else is a syntax error.
"""
import quasi_shuffle_signature.algebra.words as words_module


WHITESPACE = " \n\t\r"
DIGITS = "0123456789"


class WordParser(object):
    """
    Single-pass recursive descent parser over the text of one word.
    """

    def __init__(self, text, d=None):
        if not isinstance(text, str):
            raise ValueError(
                f"can only parse str; you gave {text} of type {type(text)}"
            )
        self.text = text
        self.text_len = len(text)
        self.d = d
        self.i = 0

    def more(self):
        return self.i < self.text_len

    def current(self):
        return self.text[self.i]

    def advance(self):
        self.i += 1

    def error(self, msg):
        raise WordParseError(
            msg=msg,
            text=self.text,
            offset=len(self.text[:self.i].encode('utf-8'))
        )

    def skip_whitespace(self):
        while self.more() and self.current() in WHITESPACE:
            self.advance()

    def parse(self):
        self.skip_whitespace()
        if not self.more():
            self.error("expected a word, found end of input")

        if self.current() == 'e':
            self.advance()
            word = words_module.EMPTY_WORD
        else:
            brackets = []
            while self.more() and self.current() == '[':
                brackets.append(self.read_bracket())
            if len(brackets) == 0:
                self.error(
                    f"expected '[' or 'e', found '{self.current()}'"
                )
            word = words_module.Word._trusted(tuple(brackets))

        self.skip_whitespace()
        if self.more():
            self.error(f"unexpected character '{self.current()}'")

        if self.d is not None:
            words_module.check_alphabet(word, self.d)
        return word

    def read_bracket(self):
        self.advance()  # past '['
        letters = [self.read_letter()]
        while True:
            if not self.more():
                self.error("unmatched '['")
            char = self.current()
            if char == ']':
                self.advance()
                break
            if char != ',':
                self.error(f"expected ',' or ']', found '{char}'")
            self.advance()
            letters.append(self.read_letter())
        return words_module.Bracket._trusted(tuple(sorted(letters)))

    def read_letter(self):
        start = self.i
        token = []
        while self.more() and self.current() in DIGITS:
            token.append(self.current())
            self.advance()
        if len(token) == 0:
            if not self.more():
                self.error("expected a letter, found end of input")
            if self.current() == ']':
                self.error("empty bracket")
            self.error(f"expected a letter, found '{self.current()}'")
        value = int("".join(token))
        if value < 1:
            self.i = start
            self.error("letters must be >= 1")
        return value


def parse_word(text, d=None):
    """
    Parse text into a Word.

    Parameters
    ----------
    text:
        str conforming to the word grammar
    d:
        optional alphabet size. If given, letters > d raise an
        AlphabetError

    Returns
    -------
    A Word with every bracket canonicalized (sorted)
    """
    return WordParser(text, d=d).parse()


def parse_word_list(text_list, d=None):
    return [parse_word(text, d=d) for text in text_list]


def print_word(w):
    """
    Canonical text for a word: 'e' for the empty word, else the
    concatenated brackets with sorted comma-separated letters.
    """
    w = words_module.Word(w)
    if len(w) == 0:
        return "e"
    return "".join(
        "[" + ",".join(str(letter) for letter in bracket) + "]"
        for bracket in w
    )


class WordParseError(Exception):

    def __init__(self, msg, text, offset):
        self.msg = msg
        self.text = text
        self.offset = offset
        super().__init__(
            f"could not parse word '{text}' at byte offset {offset}: {msg}"
        )
