"""Hyperbolic metrics on the one-holed torus from pentagon parameters.

Upper half-plane model throughout.  A metric is determined by (l1, l2, l3):
a pentagon with four right angles, consecutive sides of lengths l1 and l2
meeting at a vertex G with acute angle, and the opposite side of length l3.
The generators are a = r_G r_Y and b = r_G r_O, products of pi-rotations
about G and points Y, O on the sides of lengths l1, l2.  Matrices are 2x2
real tuples with determinant 1, identified with their negatives.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from itertools import product

from .errors import (
    EllipticOrParabolic,
    EndpointCollision,
    InvalidMetric,
    NonConvergence,
    NoPentagon,
    NotHyperbolic,
)
from .words import INVERSE, parse_word

IDENTITY = ((1.0, 0.0), (0.0, 1.0))


def mat_mul(m, n):
    (a, b), (c, d) = m
    (e, f), (g, h) = n
    return ((a * e + b * g, a * f + b * h), (c * e + d * g, c * f + d * h))


def mat_inv(m):
    # determinant-1 inverse
    (a, b), (c, d) = m
    return ((d, -b), (-c, a))


def mat_trace(m):
    return m[0][0] + m[1][1]


def mat_det(m):
    (a, b), (c, d) = m
    return a * d - b * c


def mobius(m, z):
    (a, b), (c, d) = m
    if z == cmath.inf:
        return cmath.inf if abs(c) < 1e-300 else a / c
    den = c * z + d
    if abs(den) < 1e-300:
        return cmath.inf
    return (a * z + b) / den


def translation(d):
    """Isometry moving i up the imaginary axis by hyperbolic distance d."""
    e = math.exp(d / 2.0)
    return ((e, 0.0), (0.0, 1.0 / e))


def rotation_about_i(theta):
    """Elliptic isometry fixing i, rotating tangent vectors by theta."""
    c, s = math.cos(theta / 2.0), math.sin(theta / 2.0)
    return ((c, s), (-s, c))


def rotation_pi(z):
    """The pi rotation about a point of the upper half-plane: the unique
    elliptic involution fixing it; trace 0, determinant 1."""
    x, y = z.real, z.imag
    if y <= 0:
        raise ValueError("point must lie in the upper half-plane")
    return ((x / y, -(x * x + y * y) / y), (1.0 / y, -x / y))


def dist(z, w):
    """Hyperbolic distance between two upper half-plane points."""
    return math.acosh(1.0 + abs(z - w) ** 2 / (2.0 * z.imag * w.imag))


def _to_hyperboloid(z):
    x, y = z.real, z.imag
    n = x * x + y * y
    return ((n + 1.0) / (2.0 * y), x / y, (n - 1.0) / (2.0 * y))


def _from_hyperboloid(u):
    y = 1.0 / (u[0] - u[2])
    return complex(u[1] * y, y)


def midpoint(z, w):
    """Midpoint of the geodesic segment between two points."""
    u = _to_hyperboloid(z)
    v = _to_hyperboloid(w)
    s = tuple(a + b for a, b in zip(u, v))
    norm = math.sqrt(s[0] * s[0] - s[1] * s[1] - s[2] * s[2])
    return _from_hyperboloid(tuple(a / norm for a in s))


def angle_at(apex, p, q):
    """Interior angle at apex of the geodesic triangle apex-p-q, by the
    hyperbolic law of cosines."""
    x, y = dist(apex, p), dist(apex, q)
    c = dist(p, q)
    val = (math.cosh(x) * math.cosh(y) - math.cosh(c)) / (
        math.sinh(x) * math.sinh(y)
    )
    return math.acos(max(-1.0, min(1.0, val)))


@dataclass(frozen=True)
class MetricParams:
    l1: float
    l2: float
    l3: float

    def __post_init__(self):
        if min(self.l1, self.l2, self.l3) <= 0:
            raise ValueError("pentagon side lengths must be positive")


@dataclass(frozen=True)
class Pentagon:
    """Right-angled-but-one pentagon: vertices G (the l1-l2 corner), V_a,
    W_a, W_b, V_b in boundary order, solved flank lengths s, t, and the
    acute apex angle phi at G."""

    params: MetricParams
    G: complex
    V_a: complex
    W_a: complex
    W_b: complex
    V_b: complex
    s: float
    t: float
    phi: float

    def side_lengths(self):
        return (
            dist(self.G, self.V_a),
            dist(self.V_a, self.W_a),
            dist(self.W_a, self.W_b),
            dist(self.W_b, self.V_b),
            dist(self.V_b, self.G),
        )

    def right_angle_residuals(self):
        half = math.pi / 2.0
        return (
            abs(angle_at(self.V_a, self.G, self.W_a) - half),
            abs(angle_at(self.W_a, self.V_a, self.W_b) - half),
            abs(angle_at(self.W_b, self.W_a, self.V_b) - half),
            abs(angle_at(self.V_b, self.W_b, self.G) - half),
        )


def _walk_points(p, s, t, signs):
    """Vertices of the candidate pentagon: side l3 on the imaginary axis
    from W_a = i to W_b = i*exp(l3), flanks of lengths s, t erected at its
    ends with the given turn signs, then sides l1, l2 toward the apex."""
    q = math.pi / 2.0
    e1, e2, e3, e4 = signs
    f = mat_mul(rotation_about_i(e1 * q), translation(s))
    V_a = mobius(f, 1j)
    f = mat_mul(f, mat_mul(rotation_about_i(e2 * q), translation(p.l1)))
    G1 = mobius(f, 1j)
    g = mat_mul(translation(p.l3), mat_mul(rotation_about_i(e3 * q), translation(t)))
    V_b = mobius(g, 1j)
    g = mat_mul(g, mat_mul(rotation_about_i(e4 * q), translation(p.l2)))
    G2 = mobius(g, 1j)
    W_b = mobius(translation(p.l3), 1j)
    return V_a, G1, V_b, G2, W_b


def _solve_signs(p, signs, max_iter=200, target=1e-11):
    # coarse grid seed, then damped Newton with finite-difference Jacobian
    # on the closure condition G1(s) = G2(t)
    def residual(s, t):
        _, g1, _, g2, _ = _walk_points(p, s, t, signs)
        d = g1 - g2
        return (d.real, d.imag)

    best = None
    grid = [0.05 + 0.25 * k for k in range(24)]
    for s0 in grid:
        for t0 in grid:
            r = residual(s0, t0)
            v = math.hypot(*r)
            if best is None or v < best[0]:
                best = (v, s0, t0)
    _, s, t = best
    h = 1e-7
    for _ in range(max_iter):
        r = residual(s, t)
        v = math.hypot(*r)
        if v < target:
            return s, t
        rs = residual(s + h, t)
        rt = residual(s, t + h)
        j11, j21 = (rs[0] - r[0]) / h, (rs[1] - r[1]) / h
        j12, j22 = (rt[0] - r[0]) / h, (rt[1] - r[1]) / h
        det = j11 * j22 - j12 * j21
        if abs(det) < 1e-300:
            return None
        ds = (-r[0] * j22 + r[1] * j12) / det
        dt = (-r[1] * j11 + r[0] * j21) / det
        lam = 1.0
        while lam > 1e-8:
            s2, t2 = s + lam * ds, t + lam * dt
            if 0 < s2 < 20 and 0 < t2 < 20 and math.hypot(*residual(s2, t2)) < v:
                s, t = s2, t2
                break
            lam *= 0.5
        else:
            return None
    return None


def solve_pentagon(p: MetricParams, tol=1e-9):
    """Solve for the pentagon with side lengths (l1, s, l3, t, l2), right
    angles everywhere except the acute apex G between the l1 and l2 sides."""
    last_error = "no sign pattern converged"
    for signs in product((-1, 1), repeat=4):
        st = _solve_signs(p, signs)
        if st is None:
            continue
        s, t = st
        V_a, G1, V_b, G2, _W_b = _walk_points(p, s, t, signs)
        G = (G1 + G2) / 2.0
        pent = Pentagon(
            params=p, G=G, V_a=V_a, W_a=1j, W_b=1j * math.exp(p.l3),
            V_b=V_b, s=s, t=t, phi=angle_at(G, V_a, V_b),
        )
        sides = pent.side_lengths()
        want = (p.l1, s, p.l3, t, p.l2)
        if max(abs(a - b) for a, b in zip(sides, want)) > tol:
            last_error = "side-length residual above tolerance"
            continue
        if max(pent.right_angle_residuals()) > tol:
            last_error = "right-angle residual above tolerance"
            continue
        if not 1e-6 < pent.phi < math.pi / 2.0 - 1e-12:
            last_error = f"apex angle {pent.phi:.6f} not acute"
            continue
        pts = (pent.G, pent.V_a, pent.W_a, pent.W_b, pent.V_b)
        if min(
            abs(a - b) for i, a in enumerate(pts) for b in pts[i + 1:]
        ) < 1e-9:
            last_error = "degenerate pentagon (coincident vertices)"
            continue
        return pent
    if last_error.startswith("no sign") or "residual" in last_error:
        raise NonConvergence(f"pentagon solve failed for {p}: {last_error}")
    raise NoPentagon(f"no valid pentagon for {p}: {last_error}")


@dataclass(frozen=True)
class Representation:
    """Holonomy of the metric: A, B are the matrices of the generators
    a, b; Y, O, G the rotation centers; c the inclusion constant with
    gl(w) >= c * wl(w) for every class w."""

    params: MetricParams
    pentagon: Pentagon
    A: tuple
    B: tuple
    Y: complex
    O: complex
    G: complex
    c: float
    placement: str = "vertex"

    def letter_matrix(self, letter):
        return {
            "a": self.A,
            "A": mat_inv(self.A),
            "b": self.B,
            "B": mat_inv(self.B),
        }[letter]

    def word_matrix(self, word):
        parse_word(word)
        m = IDENTITY
        for ch in word:
            m = mat_mul(m, self.letter_matrix(ch))
        return m


def _assemble(p, pent, Y, O, placement):
    r_G = rotation_pi(pent.G)
    A = mat_mul(r_G, rotation_pi(Y))
    B = mat_mul(r_G, rotation_pi(O))
    return Representation(
        params=p, pentagon=pent, A=A, B=B, Y=Y, O=O, G=pent.G,
        c=min(2.0 * p.l1, 2.0 * p.l2, p.l3), placement=placement,
    )


def _proxies_ok(rep, tol=1e-9):
    if mat_trace(rep.word_matrix("abAB")) >= -2.0:
        return False
    if abs(geodesic_length(rep, "a") - 2.0 * dist(rep.G, rep.Y)) > tol:
        return False
    if abs(geodesic_length(rep, "b") - 2.0 * dist(rep.G, rep.O)) > tol:
        return False
    return True


def build_metric(p: MetricParams):
    """Representation for the metric: primary placement puts the rotation
    centers at the pentagon vertices Y = V_a, O = V_b (so gl(a) = 2*l1 and
    the inclusion constant min(2l1, 2l2, l3) is sharp); if its validity
    proxies fail, falls back to the octagon-side midpoints (midpoints of
    the flank sides of lengths s and t)."""
    pent = solve_pentagon(p)
    rep = _assemble(p, pent, pent.V_a, pent.V_b, "vertex")
    if _proxies_ok(rep):
        return rep
    fallback = _assemble(
        p, pent, midpoint(pent.V_a, pent.W_a), midpoint(pent.V_b, pent.W_b),
        "octagon-midpoint",
    )
    if _proxies_ok(fallback):
        return fallback
    raise InvalidMetric(
        f"trace([A,B]) >= -2 or length law fails under both placements for {p}"
    )


def geodesic_length(rep, word):
    """Length of the geodesic representative: 2*arccosh(|trace|/2)."""
    tr = abs(mat_trace(rep.word_matrix(word)))
    if tr <= 2.0:
        raise EllipticOrParabolic(
            f"word {word!r} has |trace| = {tr} <= 2 under {rep.params}"
        )
    return 2.0 * math.acosh(tr / 2.0)


def axis_endpoints(m):
    """(attracting, repelling) boundary fixed points of a hyperbolic
    isometry, as reals or math.inf."""
    (a, b), (c, d) = m
    tr = a + d
    if abs(tr) <= 2.0:
        raise NotHyperbolic(f"trace {tr} has absolute value <= 2")
    if abs(c) < 1e-14:
        finite = b / (d - a) if abs(d - a) > 1e-300 else math.inf
        # z -> infinity is attracting iff |a/d| > 1
        return (math.inf, finite) if abs(a) > abs(d) else (finite, math.inf)
    disc = math.sqrt(tr * tr - 4.0)
    x1 = (a - d + disc) / (2.0 * c)
    x2 = (a - d - disc) / (2.0 * c)
    # attracting fixed point has |derivative| = (c x + d)^-2 > 1^-... < 1
    if abs(c * x1 + d) > abs(c * x2 + d):
        return x1, x2
    return x2, x1


def _boundary_angle(x):
    """Circle position of a boundary point via the Cayley transform."""
    if x is math.inf or x == math.inf:
        return 0.0
    w = (x - 1j) / (x + 1j)
    return math.atan2(w.imag, w.real) % (2.0 * math.pi)


def _geodesic_between(p, q):
    """Geodesic with endpoints p, q on the boundary: ('v', x) for the
    vertical line at x, or ('c', center, radius) for a half-circle."""
    if p is math.inf or p == math.inf:
        return ("v", q)
    if q is math.inf or q == math.inf:
        return ("v", p)
    return ("c", (p + q) / 2.0, abs(p - q) / 2.0)


def _cross_point(g1, g2):
    """Upper half-plane intersection of two crossing geodesics."""
    if g1[0] == "v" and g2[0] == "v":
        return None
    if g1[0] == "v":
        g1, g2 = g2, g1
    if g2[0] == "v":
        _, c, r = g1
        x = g2[1]
        y2 = r * r - (x - c) ** 2
        return complex(x, math.sqrt(y2)) if y2 > 0 else None
    _, c1, r1 = g1
    _, c2, r2 = g2
    if abs(c2 - c1) < 1e-300:
        return None
    x = (r1 * r1 - r2 * r2 + c2 * c2 - c1 * c1) / (2.0 * (c2 - c1))
    y2 = r1 * r1 - (x - c1) ** 2
    return complex(x, math.sqrt(y2)) if y2 > 0 else None


def self_intersection_geometric(rep, key, tol=1e-9, merge=1e-3):
    """Geometric self-intersection oracle: count the distinct self-crossing
    points of the closed geodesic of the class.

    Lifts are the axes of the cyclic-shift conjugates; for every linked
    pair of shift axes, the crossing point is carried back to the base
    axis and tagged by the (unordered) pair of curve parameters of its two
    branches, taken modulo the translation length; distinct tags are
    distinct surface points.
    """
    n = len(key)
    m0 = rep.word_matrix(key)
    att, rpl = axis_endpoints(m0)
    gl = geodesic_length(rep, key)

    prefixes = [rep.word_matrix(key[:i]) if i else IDENTITY for i in range(n)]
    axes = []
    for i in range(n):
        u_inv = mat_inv(prefixes[i])
        mi = mat_mul(u_inv, mat_mul(m0, prefixes[i]))
        axes.append(axis_endpoints(mi))

    angles = [(_boundary_angle(p), _boundary_angle(q)) for p, q in axes]
    flat = sorted(a for pair in angles for a in pair)
    for a, b2 in zip(flat, flat[1:]):
        if b2 - a < tol:
            raise EndpointCollision(
                f"axis endpoints of {key!r} collide within {tol}"
            )

    def param(z):
        # curve parameter along the base axis: a fixed Mobius map sends the
        # axis to the ray from 0 to infinity, where log|.| is arclength
        if att == math.inf:
            w = z - rpl
        elif rpl == math.inf:
            w = 1.0 / (z - att)
        else:
            w = (z - rpl) / (z - att)
        return math.log(abs(w)) % gl

    def linked_pair(i, j):
        lo, hi = sorted(angles[i])
        return (lo < angles[j][0] < hi) != (lo < angles[j][1] < hi)

    tags = []
    for i in range(n):
        gi = _geodesic_between(*axes[i])
        for j in range(i + 1, n):
            if not linked_pair(i, j):
                continue
            z = _cross_point(gi, _geodesic_between(*axes[j]))
            if z is None or z.imag <= 0:
                raise EndpointCollision(
                    f"degenerate axis crossing for shifts {i},{j} of {key!r}"
                )
            ti = param(mobius(prefixes[i], z))
            tj = param(mobius(prefixes[j], z))
            tags.append(tuple(sorted((ti, tj))))

    def same(a, b):
        return all(
            min(abs(x - y), gl - abs(x - y)) < merge for x, y in zip(a, b)
        )

    # connected-component clustering: numerical error perturbs tags of one
    # crossing slightly, while distinct crossings sit far apart on the curve
    parent = list(range(len(tags)))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for i in range(len(tags)):
        for j in range(i + 1, len(tags)):
            if same(tags[i], tags[j]):
                ri, rj = find(i), find(j)
                if ri != rj:
                    parent[ri] = rj
    return len({find(i) for i in range(len(tags))})
