"""
Property suites run on concrete data: each check returns a
PropertyReport saying whether the property held, how many
instances were checked and the first counterexample found.
"""
import quasi_shuffle_signature.algebra.compositions as compositions
import quasi_shuffle_signature.algebra.scalars as scalars
import quasi_shuffle_signature.algebra.words as words_module
import quasi_shuffle_signature.hoffman.hoffman_map as hoffman_map
import quasi_shuffle_signature.hopf.dual_functional as dual_functional
import quasi_shuffle_signature.signature.iterated_sums as iterated_sums
import quasi_shuffle_signature.signature.lifted_path as lifted_path
import quasi_shuffle_signature.signature.time_series as time_series
import quasi_shuffle_signature.utils.typing_utils as typing_utils


VALID_CHECKS = (
    'invariance',
    'character',
    'chen',
    'hoffman-transfer',
    'translation'
)


class PropertyReport(object):
    """
    Outcome of a property check.

    Parameters
    ----------
    name:
        name of the property
    passed:
        boolean
    n_checked:
        number of instances (split points, word pairs, ...) checked
    counterexample:
        None if passed, else a dict describing the first failure
    """

    def __init__(self, name, passed, n_checked, counterexample=None):
        self._name = name
        self._passed = bool(passed)
        self._n_checked = n_checked
        self._counterexample = counterexample

    @property
    def name(self):
        return self._name

    @property
    def passed(self):
        return self._passed

    @property
    def n_checked(self):
        return self._n_checked

    @property
    def counterexample(self):
        return self._counterexample

    def summary(self):
        if self._passed:
            return f"{self._name}: PASS ({self._n_checked} checked)"
        details = ", ".join(
            f"{key}={_format(value)}"
            for key, value in self._counterexample.items()
        )
        return f"{self._name}: FAIL; counterexample: {details}"

    def __repr__(self):
        return f"PropertyReport({self.summary()})"


def check_time_warp_invariance(
        x,
        max_weight=iterated_sums.DEFAULT_MAX_WEIGHT):
    """
    DS(tau_n(x))_{0,N+1} == DS(x)_{0,N} for every n in 1..N
    """
    typing_utils.assert_type("x", x, time_series.TimeSeries)
    reference = iterated_sums.iterated_sums_signature(
        x, max_weight=max_weight)
    n_checked = 0
    for n in range(1, x.n_steps+1):
        warped = iterated_sums.iterated_sums_signature(
            time_series.time_warp(x, n), max_weight=max_weight)
        n_checked += 1
        word = dual_functional.first_difference(reference, warped)
        if word is not None:
            return PropertyReport(
                'invariance',
                False,
                n_checked,
                {'n': n,
                 'word': word,
                 'original': reference.coefficient(word),
                 'warped': warped.coefficient(word)}
            )
    return PropertyReport('invariance', True, n_checked)


def check_character(sig, max_weight=None):
    """
    <u * v, sig> == <u, sig><v, sig> for every pair of nonempty
    words with |u| + |v| <= max_weight (default: the truncation
    weight), and <e, sig> == 1
    """
    if max_weight is None:
        max_weight = sig.max_weight
    violation = dual_functional.find_character_violation(
        sig, max_weight=max_weight)
    if violation is not None:
        return PropertyReport('character', False, None, violation)
    d = sig.d
    if d is None:
        d = max(
            [words_module.max_letter(w) for w in sig.coefficients] + [1]
        )
    n_checked = 1 + _count_word_pairs(d, min(max_weight, sig.max_weight))
    return PropertyReport('character', True, n_checked)


def check_chen(x, max_weight=iterated_sums.DEFAULT_MAX_WEIGHT):
    """
    DS_{0,k} . DS_{k,N} == DS_{0,N} for every split point k
    """
    typing_utils.assert_type("x", x, time_series.TimeSeries)
    full = iterated_sums.iterated_sums_signature(x, max_weight=max_weight)
    n_checked = 0
    for k in range(0, x.n_steps+1):
        merged = iterated_sums.chen_merge(
            iterated_sums.iterated_sums_signature(
                x, n=0, m=k, max_weight=max_weight),
            iterated_sums.iterated_sums_signature(
                x, n=k, m=x.n_steps, max_weight=max_weight)
        )
        n_checked += 1
        word = dual_functional.first_difference(full, merged)
        if word is not None:
            return PropertyReport(
                'chen',
                False,
                n_checked,
                {'k': k,
                 'word': word,
                 'direct': full.coefficient(word),
                 'merged': merged.coefficient(word)}
            )
    return PropertyReport('chen', True, n_checked)


def check_hoffman_transfer(x, max_weight=iterated_sums.DEFAULT_MAX_WEIGHT):
    """
    <exp_H(w), DS(x)> == <w, S(X)> for every word w of weight
    <= max_weight, where S(X) is the iterated-integrals signature of
    the piecewise-linear lifted path
    """
    typing_utils.assert_type("x", x, time_series.TimeSeries)
    sums = iterated_sums.iterated_sums_signature(x, max_weight=max_weight)
    integrals = lifted_path.iterated_integrals_signature_pl(
        x, max_weight=max_weight)
    n_checked = 0
    for w in compositions.canonical_words_up_to(x.d, max_weight):
        lhs = dual_functional.pair(hoffman_map.hoffman_exp(w), sums)
        rhs = integrals.coefficient(w)
        n_checked += 1
        if not scalars.scalars_equal(lhs, rhs):
            return PropertyReport(
                'hoffman-transfer',
                False,
                n_checked,
                {'word': w, 'sums_side': lhs, 'integrals_side': rhs}
            )
    return PropertyReport('hoffman-transfer', True, n_checked)


def check_translation_invariance(
        x,
        shift=None,
        max_weight=iterated_sums.DEFAULT_MAX_WEIGHT):
    """
    DS(x + shift) == DS(x); shift defaults to (1, 2, ..., d)
    """
    typing_utils.assert_type("x", x, time_series.TimeSeries)
    if shift is None:
        shift = list(range(1, x.d+1))
    reference = iterated_sums.iterated_sums_signature(
        x, max_weight=max_weight)
    shifted = iterated_sums.iterated_sums_signature(
        time_series.translate_series(x, shift), max_weight=max_weight)
    word = dual_functional.first_difference(reference, shifted)
    if word is not None:
        return PropertyReport(
            'translation',
            False,
            1,
            {'shift': list(shift),
             'word': word,
             'original': reference.coefficient(word),
             'translated': shifted.coefficient(word)}
        )
    return PropertyReport('translation', True, 1)


def run_check(name, x=None, sig=None, max_weight=None):
    """
    Dispatch on the check name. 'character' uses sig if given,
    otherwise the signature of x; every other check needs x.
    """
    if name not in VALID_CHECKS:
        raise ValueError(
            f"unknown check '{name}'; valid checks are {VALID_CHECKS}"
        )
    if max_weight is None:
        max_weight = iterated_sums.DEFAULT_MAX_WEIGHT
    if name == 'character':
        if sig is None:
            sig = iterated_sums.iterated_sums_signature(
                x, max_weight=max_weight)
        return check_character(sig, max_weight=max_weight)
    if x is None:
        raise ValueError(f"check '{name}' needs a time series")
    if name == 'invariance':
        return check_time_warp_invariance(x, max_weight=max_weight)
    if name == 'chen':
        return check_chen(x, max_weight=max_weight)
    if name == 'hoffman-transfer':
        return check_hoffman_transfer(x, max_weight=max_weight)
    return check_translation_invariance(x, max_weight=max_weight)


def _count_word_pairs(d, max_weight):
    """
    Number of unordered pairs {u, v} of nonempty words with
    |u| + |v| <= max_weight
    """
    counts = [
        len(compositions.canonical_words(d, n))
        for n in range(max_weight+1)
    ]
    total = 0
    for a in range(1, max_weight+1):
        for b in range(a, max_weight+1-a):
            if a == b:
                total += counts[a]*(counts[a]+1)//2
            else:
                total += counts[a]*counts[b]
    return total


def _format(value):
    if isinstance(value, (int, float)) or hasattr(value, 'denominator'):
        return scalars.format_scalar(value)
    return str(value)
