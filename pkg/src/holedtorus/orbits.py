"""Mapping-class-group orbits of unoriented classes under Nielsen moves.

The mapping class group of the one-holed torus acts on conjugacy classes
through automorphisms of the rank-2 free group.  A small generating set
(elementary Nielsen maps, the generator swap, and generator inversions)
drives a breadth-first closure with a word-length cap; Whitehead peak
reduction guarantees that every orbit element under the cap is reachable
without passing through longer intermediate words.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

from .errors import CapTooLarge, SeedNotReduced
from .intersect import self_intersection
from .words import (
    INVERSE,
    canonical,
    enumerate_classes,
    inverse_word,
    is_cyclically_reduced,
    is_primitive,
    rank_key,
    reduce_word,
)

DEFAULT_MEMBER_BUDGET = 5_000_000


@dataclass(frozen=True)
class Automorphism:
    """Substitution rule on the generators; images of A, B are implied."""

    name: str
    image_a: str
    image_b: str

    def letter_images(self):
        return {
            "a": self.image_a,
            "b": self.image_b,
            "A": inverse_word(self.image_a),
            "B": inverse_word(self.image_b),
        }

    def __call__(self, key):
        return apply_automorphism(self, key)


def whitehead_generators():
    """Generating set acting on unoriented classes: the four elementary
    Nielsen maps, the generator swap, and the two inversions."""
    return [
        Automorphism("a->ab", "ab", "b"),
        Automorphism("a->aB", "aB", "b"),
        Automorphism("b->ba", "a", "ba"),
        Automorphism("b->bA", "a", "bA"),
        Automorphism("swap", "b", "a"),
        Automorphism("inv_a", "A", "b"),
        Automorphism("inv_b", "a", "B"),
    ]


GENERATORS = whitehead_generators()


def apply_automorphism(phi, key):
    """Image of an unoriented class: substitute, reduce, canonicalize."""
    images = phi.letter_images()
    return canonical(reduce_word("".join(images[ch] for ch in key)))


@dataclass(frozen=True)
class Orbit:
    seed: str
    cap: int
    members: tuple  # sorted canonical keys
    complete: bool = True

    def __contains__(self, key):
        return key in set(self.members)

    def min_representative(self):
        return min(self.members, key=lambda k: (len(k), rank_key(k)))


@dataclass
class CountSeries:
    """Per-length and cumulative member counts of a complete orbit."""

    cap: int
    counts: dict = field(default_factory=dict)

    def count(self, length):
        return self.counts.get(length, 0)

    def cumulative(self, length):
        return sum(c for l, c in self.counts.items() if l <= length)

    def rows(self):
        total = 0
        out = []
        for l in range(1, self.cap + 1):
            total += self.counts.get(l, 0)
            out.append((l, self.counts.get(l, 0), total))
        return out


def enumerate_orbit(seed, l_max, workers=1, budget=DEFAULT_MEMBER_BUDGET):
    """Breadth-first closure of the seed class under the generator set,
    discarding images longer than l_max."""
    if not is_cyclically_reduced(seed):
        raise SeedNotReduced(f"{seed!r} is not cyclically reduced")
    start = canonical(seed)
    if len(start) > l_max:
        raise SeedNotReduced(f"seed {seed!r} longer than the cap {l_max}")
    members = {start}
    frontier = [start]
    while frontier:
        if workers > 1 and len(frontier) >= 4 * workers:
            chunks = [frontier[k::workers] for k in range(workers)]
            with ThreadPoolExecutor(max_workers=workers) as pool:
                parts = pool.map(_expand_chunk, chunks, [l_max] * workers)
            images = set().union(*parts)
        else:
            images = _expand_chunk(frontier, l_max)
        frontier = [k for k in images if k not in members]
        members.update(frontier)
        if len(members) > budget:
            raise CapTooLarge(f"orbit of {seed!r} exceeds the member budget")
    return Orbit(seed=start, cap=l_max, members=tuple(sorted(members, key=_order)))


def _order(key):
    return (len(key), rank_key(key))


def _expand_chunk(keys, l_max):
    out = set()
    for key in keys:
        for phi in GENERATORS:
            image = apply_automorphism(phi, key)
            if len(image) <= l_max:
                out.add(image)
    return out


def count_series(orbit):
    counts = {}
    for key in orbit.members:
        counts[len(key)] = counts.get(len(key), 0) + 1
    return CountSeries(cap=orbit.cap, counts=counts)


def classify(si_value, l_max):
    """Partition all primitive classes of word length <= l_max with the
    given self-intersection number into mapping-class-group orbits.

    Two classes under the cap lie in the same orbit iff they are connected
    by generator moves that never leave the cap (peak reduction), so the
    partition is the connected-component decomposition of the one-step
    image graph restricted to the cap.
    """
    keys = [k for k in enumerate_classes(l_max) if is_primitive(k)]
    selected = [k for k in keys if self_intersection(k) == si_value]
    index = {k: n for n, k in enumerate(selected)}
    parent = list(range(len(selected)))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for k in selected:
        for phi in GENERATORS:
            image = apply_automorphism(phi, k)
            if len(image) <= l_max and image in index:
                ra, rb = find(index[k]), find(index[image])
                if ra != rb:
                    parent[ra] = rb
    groups = {}
    for k in selected:
        groups.setdefault(find(index[k]), []).append(k)
    orbits = [
        Orbit(seed=min(g, key=_order), cap=l_max, members=tuple(sorted(g, key=_order)))
        for g in groups.values()
    ]
    orbits.sort(key=lambda o: _order(o.seed))
    return orbits


def orbit_closure_violations(orbit):
    """Members whose in-cap images escape the member set (should be none)."""
    members = set(orbit.members)
    bad = []
    for key in orbit.members:
        for phi in GENERATORS:
            image = apply_automorphism(phi, key)
            if len(image) <= orbit.cap and image not in members:
                bad.append((key, phi.name, image))
    return bad
