import pytest

from holedtorus.errors import SeedNotReduced
from holedtorus.intersect import self_intersection
from holedtorus.orbits import (
    apply_automorphism,
    classify,
    count_series,
    enumerate_orbit,
    orbit_closure_violations,
    whitehead_generators,
)
from holedtorus.words import enumerate_classes, is_primitive, totient

GENS = {g.name: g for g in whitehead_generators()}


def test_generator_examples():
    assert apply_automorphism(GENS["a->ab"], "a") == "ab"
    assert apply_automorphism(GENS["a->ab"], "b") == "b"
    assert apply_automorphism(GENS["a->ab"], "abaB") == "aabb"
    assert apply_automorphism(GENS["inv_a"], "a") == "a"


def test_swap_is_involution():
    swap = GENS["swap"]
    for key in enumerate_classes(8):
        assert apply_automorphism(swap, apply_automorphism(swap, key)) == key


def test_boundary_orbit_is_singleton():
    assert enumerate_orbit("abAB", 20).members == ("abAB",)


def test_seed_validation():
    with pytest.raises(SeedNotReduced):
        enumerate_orbit("abA", 10)  # not cyclically reduced
    with pytest.raises(SeedNotReduced):
        enumerate_orbit("aabAB", 3)  # longer than the cap


def test_simple_orbit_counts_to_60():
    series = count_series(enumerate_orbit("a", 60))
    for l in range(1, 61):
        assert series.count(l) == 2 * totient(l), l
    assert series.cumulative(3) == 8


def test_orbit_count_full_scale():
    # all classes of word length <= 170 in the orbit of the simple curve
    assert len(enumerate_orbit("a", 170).members) == 17660


def test_orbit_closure_and_si_constancy():
    for seed in ("a", "aabAB", "abaB", "aaabb", "aabaaB"):
        orbit = enumerate_orbit(seed, 20)
        assert orbit_closure_violations(orbit) == []
        target = self_intersection(orbit.seed)
        assert all(self_intersection(m) == target for m in orbit.members)


def test_orbit_workers_deterministic():
    runs = [enumerate_orbit("aabAB", 40, workers=w).members for w in (1, 4, 8)]
    assert runs[0] == runs[1] == runs[2]


def test_count_series_rows():
    rows = count_series(enumerate_orbit("a", 6)).rows()
    assert rows == [(1, 2, 2), (2, 2, 4), (3, 4, 8), (4, 4, 12), (5, 8, 20), (6, 4, 24)]


def test_classify_small_si():
    zero = classify(0, 12)
    assert [o.seed for o in zero] == ["a", "abAB"]
    one = classify(1, 12)
    # the minimal representative of the orbit of abaB is aabb
    assert [o.seed for o in one] == ["aabb", "aabAB"]
    two = classify(2, 12)
    assert len(two) == 6


def test_classify_si3_full_set_needs_cap_13():
    # the orbit of a(abAB)^3 has minimal word length 13, so the fourteenth
    # orbit only appears at cap 13
    orbits = classify(3, 13)
    assert len(orbits) == 14
    assert "aabABabABabAB" in [o.seed for o in orbits]


def test_classify_partition_is_exact():
    # orbits partition the si=1 classes: member sets are disjoint and cover
    orbits = classify(1, 10)
    members = [m for o in orbits for m in o.members]
    assert len(members) == len(set(members))
    expected = {
        k for k in enumerate_classes(10)
        if is_primitive(k) and self_intersection(k) == 1
    }
    assert set(members) == expected
