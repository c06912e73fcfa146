"""Exact self-intersection numbers via the circular order on group ends.

Each cyclic shift of a primitive word acts as a hyperbolic element whose
axis has two endpoints on the boundary circle of the rank-2 free group.
Endpoints are infinite reduced words (rays); the circular order among rays
is the planar order of the Cayley tree with the cyclic letter order
a -> b -> A -> B forced by the boundary word abAB.  The self-intersection
number is the number of pairs of shift axes whose endpoint chords link.
"""

from __future__ import annotations

from .errors import DegeneratePoints, EqualRays, NonPrimitive
from .words import INVERSE, inverse_word, is_primitive

# position of the first letter of a ray in the linear order cut at the basepoint
_FIRST = {"a": 1, "b": 2, "A": 3, "B": 4}

# D(x): the cyclic sequence a -> b -> A -> B -> a started after inv(x),
# with inv(x) removed; the next letter's index in D(prev) extends the key
_D = {"a": "Bab", "b": "abA", "A": "bAB", "B": "ABa"}
_STEP = {(p, c): i + 1 for p, row in _D.items() for i, c in enumerate(row)}


def ray_order_key(period, length):
    """Order key (t-sequence) of the ray period^infinity, truncated to
    `length` letters.  Keys compare like the circular order cut at the
    basepoint."""
    n = len(period)
    first = period[0]
    key = [_FIRST[first]]
    prev = first
    for k in range(1, length):
        cur = period[k % n]
        key.append(_STEP[prev, cur])
        prev = cur
    return tuple(key)


def compare_rays(period1, period2):
    """-1 if ray1 precedes ray2 in the cut order, +1 otherwise.

    Raises EqualRays when the infinite words coincide within the horizon
    (they then coincide everywhere, since both are periodic).
    """
    horizon = len(period1) + len(period2) + 1
    k1 = ray_order_key(period1, horizon)
    k2 = ray_order_key(period2, horizon)
    if k1 == k2:
        raise EqualRays(f"rays ({period1})^inf and ({period2})^inf coincide")
    return -1 if k1 < k2 else 1


def linked(chord1, chord2):
    """True iff the two chords alternate around the circle.

    Positions are compared with <; any total order obtained by cutting the
    circle gives the same answer.
    """
    pts = (*chord1, *chord2)
    if len(set(pts)) != 4:
        raise DegeneratePoints(f"chord endpoints not distinct: {pts}")
    lo, hi = min(chord1), max(chord1)
    return (lo < chord2[0] < hi) != (lo < chord2[1] < hi)


def self_intersection(key):
    """Self-intersection number of a primitive class.

    The n cyclic shifts of the word are the bi-infinite strands of the
    curve through a common vertex of the Cayley tree.  Two strands cross
    iff their endpoint chords alternate; the crossing lies somewhere on
    the (finite) segment the two strand paths share.  Counting every
    linked pair would count one surface crossing once per shared vertex,
    so an ordered pair (i, j) is kept only when strand i's backward edge
    leaves the shared segment immediately (its first backward letter is
    used by neither ray of strand j).  Each crossing then contributes
    exactly two ordered pairs, one per end of the shared segment.
    """
    if not is_primitive(key):
        raise NonPrimitive(f"{key!r} is a proper power")
    n = len(key)
    horizon = n + 1
    fwd = []
    bwd = []
    for i in range(n):
        shift = key[i:] + key[:i]
        fwd.append(ray_order_key(shift, horizon))
        bwd.append(ray_order_key(inverse_word(shift), horizon))
    rays = sorted(fwd + bwd)
    if any(rays[k] == rays[k + 1] for k in range(2 * n - 1)):
        raise EqualRays(f"coincident axis endpoints for {key!r}")
    pos = {k: p for p, k in enumerate(rays)}
    chords = [(pos[fwd[i]], pos[bwd[i]]) for i in range(n)]
    first_fwd = [key[i] for i in range(n)]
    first_bwd = [INVERSE[key[i - 1]] for i in range(n)]
    ordered = 0
    for i in range(n):
        for j in range(n):
            if i == j:
                continue
            if first_bwd[i] in (first_bwd[j], first_fwd[j]):
                continue  # shared segment extends backward along strand i
            if linked(chords[i], chords[j]):
                ordered += 1
    assert ordered % 2 == 0
    return ordered // 2
