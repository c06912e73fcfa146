import math

import pytest
from hypothesis import given, strategies as st

from holedtorus.errors import CapTooLarge, EmptyAfterReduction
from holedtorus.words import (
    INVERSE,
    Totient,
    canonical,
    count_classes_of_length,
    enumerate_classes,
    inverse_word,
    is_cyclically_reduced,
    is_primitive,
    parse_word,
    rank_key,
    reduce_word,
    totient,
)

letters = st.text(alphabet="aAbB", min_size=1, max_size=10)


def brute_reduce(raw):
    """Independent reducer: repeatedly delete adjacent (cyclically) inverse
    pairs until none remain."""
    word = list(raw)
    changed = True
    while changed and word:
        changed = False
        for i in range(len(word)):
            j = (i + 1) % len(word)
            if i != j and word[i] == INVERSE[word[j]]:
                for k in sorted((i, j), reverse=True):
                    del word[k]
                changed = True
                break
    return "".join(word)


def brute_classes(n):
    """All canonical keys of length n by canonicalizing every reduced
    linear word."""
    out = set()
    stack = [ch for ch in "aAbB"]
    words = []
    for w in stack:
        words.append(w)
    for _ in range(n - 1):
        words = [w + ch for w in words for ch in "aAbB" if ch != INVERSE[w[-1]]]
    for w in words:
        if is_cyclically_reduced(w):
            out.add(canonical(w))
    return out


def test_parse_rejects_bad_letters():
    with pytest.raises(ValueError):
        parse_word("abc")


def test_reduce_wraparound():
    assert reduce_word("abbA") == "bb"


def test_reduce_already_reduced():
    assert reduce_word("abaB") == "abaB"


def test_reduce_linear_cancellation():
    assert reduce_word("abbabB") == "abba"


def test_reduce_identity_raises():
    with pytest.raises(EmptyAfterReduction):
        reduce_word("aA")


def test_canonical_examples():
    assert canonical("abba") == "aabb"
    assert canonical("Baba") == "abaB"
    assert canonical("a") == "a"
    assert canonical("A") == "a"


def test_is_primitive():
    assert not is_primitive("abab")
    assert is_primitive("abaB")
    assert is_primitive("a")


def test_enumerate_small_caps():
    assert set(enumerate_classes(1)) == {"a", "b"}
    assert set(enumerate_classes(2)) == {"a", "b", "aa", "ab", "aB", "bb"}


def test_class_count_at_three():
    # brute force gives six: aaa, aab, aaB, abb, aBB, bbb
    assert count_classes_of_length(3) == 6
    assert brute_classes(3) == {"aaa", "aab", "aaB", "abb", "aBB", "bbb"}


@pytest.mark.parametrize("n", range(1, 9))
def test_enumeration_matches_brute_force(n):
    assert set(enumerate_classes(n)) - set(enumerate_classes(n - 1) if n > 1 else []) == brute_classes(n)


def test_enumeration_order():
    keys = list(enumerate_classes(4))
    assert keys == sorted(keys, key=lambda k: (len(k), rank_key(k)))
    assert len(keys) == len(set(keys))


def test_budget_guard():
    with pytest.raises(CapTooLarge):
        list(enumerate_classes(30, budget=1000))


@given(letters)
def test_reduce_shrinks_and_is_reduced(raw):
    try:
        w = reduce_word(raw)
    except EmptyAfterReduction:
        assert brute_reduce(raw) == ""
        return
    assert len(w) <= len(raw)
    assert is_cyclically_reduced(w)
    assert len(w) == len(brute_reduce(raw))


@given(letters, st.integers(min_value=0, max_value=9))
def test_canonical_rotation_and_inverse_invariance(raw, k):
    try:
        w = reduce_word(raw)
    except EmptyAfterReduction:
        return
    rot = w[k % len(w):] + w[: k % len(w)]
    assert canonical(rot) == canonical(w)
    assert canonical(inverse_word(w)) == canonical(w)
    assert canonical(canonical(w)) == canonical(w)


def trial_phi(n):
    return sum(1 for k in range(1, n + 1) if math.gcd(k, n) == 1)


def test_totient_against_trial_division():
    t = Totient(10_000)
    for n in range(1, 10_001):
        assert t(n) == trial_phi(n)


def test_totient_conventions():
    assert totient(12) == 4
    assert totient(1) == 1
    assert totient(2.0) == 1
    assert totient(2.5) == 0
    assert totient.at_ratio(10, 3) == 0
    assert totient.at_ratio(12, 3) == 2


def test_summatory_headline():
    assert totient.summatory_double(170) == 17660


def test_summatory_asymptotics():
    L = 10_000
    ratio = totient.summatory_double(L) / ((6 / math.pi**2) * L * L)
    assert abs(ratio - 1) < 0.02
