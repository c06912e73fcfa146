import pytest
from hypothesis import given, strategies as st

from holedtorus.errors import DegeneratePoints, EqualRays, NonPrimitive
from holedtorus.intersect import compare_rays, linked, ray_order_key, self_intersection
from holedtorus.words import canonical, enumerate_classes, is_primitive, reduce_word

# published self-intersection values for every orbit seed
TABLE_SI = {
    "a": 0, "abAB": 0,
    "aabAB": 1, "abaB": 1,
    "aabABabAB": 2, "aaabb": 2, "aabAAB": 2, "aaabAB": 2, "abaBabAB": 2,
    "aabaB": 2,
    "aabABabABabAB": 3, "aabAbaBAb": 3, "aabbAB": 3, "aaabABabAB": 3,
    "aabAABabAB": 3, "abaBAbaBAbaB": 3, "abaBAbAB": 3, "aaaabb": 3,
    "aaaabAB": 3, "aaabAAB": 3, "aabaBAbaB": 3, "aabaBabAB": 3,
    "aaabaB": 3, "aabaaB": 3,
}


def test_ray_order_examples():
    assert ray_order_key("ab", 4) == (1, 3, 1, 3)
    assert ray_order_key("ba", 4)[0] == 2
    assert compare_rays("ab", "ba") == -1
    assert compare_rays("ab", "BA") == -1


def test_equal_rays_detected():
    with pytest.raises(EqualRays):
        compare_rays("ab", "ab")
    with pytest.raises(EqualRays):
        compare_rays("ab", "abab")  # same infinite word


def test_linked_examples():
    assert linked((1, 3), (2, 4))
    assert not linked((1, 2), (3, 4))
    assert not linked((1, 4), (2, 3))
    with pytest.raises(DegeneratePoints):
        linked((1, 2), (2, 3))


def test_si_paper_values():
    for word, si in TABLE_SI.items():
        assert self_intersection(canonical(reduce_word(word))) == si, word


def test_si_rejects_powers():
    with pytest.raises(NonPrimitive):
        self_intersection("abab")


@given(st.text(alphabet="aAbB", min_size=1, max_size=8), st.integers(0, 7))
def test_si_invariant_under_rotation_and_inversion(raw, k):
    from holedtorus.errors import EmptyAfterReduction
    from holedtorus.words import inverse_word

    try:
        w = reduce_word(raw)
    except EmptyAfterReduction:
        return
    if not is_primitive(w):
        return
    base = self_intersection(canonical(w))
    rot = w[k % len(w):] + w[: k % len(w)]
    assert self_intersection(canonical(rot)) == base
    assert self_intersection(canonical(inverse_word(w))) == base


def test_si_zero_exactly_for_simple_classes():
    # the simple classes up to length 8: orbit of a plus the boundary class
    simple = [
        k for k in enumerate_classes(8)
        if is_primitive(k) and self_intersection(k) == 0
    ]
    assert "a" in simple and "abAB" in simple
    # counts by length match 2*phi(l) plus the boundary class at length 4
    from holedtorus.words import totient

    by_len = {}
    for k in simple:
        by_len[len(k)] = by_len.get(len(k), 0) + 1
    for l in range(1, 9):
        expected = 2 * totient(l) + (1 if l == 4 else 0)
        assert by_len.get(l, 0) == expected, l
