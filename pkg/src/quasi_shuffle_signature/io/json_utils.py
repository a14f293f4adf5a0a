"""
Serialize truncated signatures as JSON documents

    {"d": ..., "n": ..., "m": ..., "max_weight": ...,
     "coefficients": {word string: value}}

Words are keyed by their printed form in canonical order. Exact
values are strings ("p" or "p/q"), float values are JSON numbers.
Zero coefficients are left out (e is always written) unless the
words to write are given explicitly.
"""
import json

import quasi_shuffle_signature.algebra.polynomial as polynomial
import quasi_shuffle_signature.algebra.scalars as scalars
import quasi_shuffle_signature.algebra.word_parser as word_parser
import quasi_shuffle_signature.algebra.words as words_module
import quasi_shuffle_signature.signature.iterated_sums as iterated_sums
import quasi_shuffle_signature.utils.file_utils as file_utils


def signature_to_json_dict(sig, words=None):
    """
    Parameters
    ----------
    sig:
        a Signature
    words:
        optional list of words (Word or word strings) to write; e is
        always written. Asking for a word heavier than the
        truncation raises a TruncationError.

    Returns
    -------
    dict ready for json.dumps
    """
    if words is None:
        selected = [
            w for w in sig.support()
            if len(w) == 0 or sig.coefficient(w) != 0
        ]
    else:
        selected = set(polynomial.as_word(w, d=sig.d) for w in words)
        selected.add(words_module.EMPTY_WORD)
        selected = words_module.sort_words(selected)

    if words_module.EMPTY_WORD not in selected:
        selected = [words_module.EMPTY_WORD] + list(selected)

    coefficients = dict()
    for w in selected:
        coefficients[word_parser.print_word(w)] = _json_value(
            sig.coefficient(w), sig.kind)

    return {
        "d": sig.d,
        "n": sig.n,
        "m": sig.m,
        "max_weight": sig.max_weight,
        "coefficients": coefficients
    }


def signature_to_json_str(sig, words=None):
    return json.dumps(signature_to_json_dict(sig, words=words), indent=2)


def write_signature_json(sig, json_path, words=None, clobber=False):
    """
    Write the JSON document of sig to json_path
    """
    json_path = file_utils.prepare_output_path(json_path, clobber=clobber)
    with open(json_path, 'w') as dst:
        dst.write(signature_to_json_str(sig, words=words))
        dst.write('\n')


def read_signature_json(json_path):
    """
    Read a document written by write_signature_json back into a
    Signature. Words missing from the document get coefficient
    zero.

    The scalar kind is exact if every value is a string and float
    if every value is a number; anything else is a SignatureJsonError.
    """
    file_utils.assert_is_file(json_path)
    with open(json_path, 'rb') as src:
        doc = json.load(src)
    return signature_from_json_dict(doc)


def signature_from_json_dict(doc):
    for key in ("d", "n", "m", "max_weight", "coefficients"):
        if key not in doc:
            raise SignatureJsonError(
                f"signature document is missing the key '{key}'"
            )
    values = list(doc["coefficients"].values())
    if all(isinstance(v, str) for v in values):
        kind = scalars.EXACT
    elif all(isinstance(v, (int, float)) and not isinstance(v, bool)
             for v in values):
        kind = scalars.FLOAT
    else:
        raise SignatureJsonError(
            "signature coefficients must be all strings (exact) or all "
            "numbers (float)"
        )

    d = doc["d"]
    coefficients = dict()
    for word_text, value in doc["coefficients"].items():
        word = word_parser.parse_word(word_text, d=d)
        if kind == scalars.FLOAT:
            value = float(value)
        coefficients[word] = scalars.coerce(value, kind)

    return iterated_sums.Signature(
        coefficients,
        max_weight=doc["max_weight"],
        d=d,
        kind=kind,
        window=(doc["n"], doc["m"])
    )


def _json_value(value, kind):
    if kind == scalars.EXACT:
        return scalars.format_scalar(value)
    return float(value)


class SignatureJsonError(Exception):
    pass
