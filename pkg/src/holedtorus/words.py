"""Cyclic reduced words over {a, A, b, B} and canonical unoriented class keys.

A free homotopy class of curves on the one-holed torus is a conjugacy class
in the rank-2 free group, stored here as a cyclically reduced word.  The
unoriented class is the word up to rotation and inversion; ``canonical``
picks the least representative under the letter order a < A < b < B.
"""

from __future__ import annotations

from .errors import CapTooLarge, EmptyAfterReduction

ALPHABET = "aAbB"
INVERSE = {"a": "A", "A": "a", "b": "B", "B": "b"}

# rank string: natural byte order on the translated word realizes a < A < b < B
_RANK = {"a": "0", "A": "1", "b": "2", "B": "3"}
_RANK_TRANS = str.maketrans(_RANK)
_UNRANK = {v: k for k, v in _RANK.items()}

# estimated bytes per stored class during exhaustive enumeration
DEFAULT_WORD_BUDGET = 500_000_000


def parse_word(text):
    """Validate a plain-text word; reject any character outside {a,A,b,B}."""
    for ch in text:
        if ch not in INVERSE:
            raise ValueError(f"invalid letter {ch!r}; alphabet is a, A, b, B")
    return text


def inverse_word(w):
    """Inverse of a word: reverse the sequence and invert each letter."""
    return "".join(INVERSE[ch] for ch in reversed(w))


def rank_key(w):
    """Comparison key realizing the letter order a < A < b < B."""
    return w.translate(_RANK_TRANS)


def reduce_word(raw):
    """Freely and cyclically reduce a letter sequence.

    Raises EmptyAfterReduction if the input represents the identity.
    """
    parse_word(raw)
    stack = []
    for ch in raw:
        if stack and stack[-1] == INVERSE[ch]:
            stack.pop()
        else:
            stack.append(ch)
    # wrap-around cancellation
    lo, hi = 0, len(stack)
    while hi - lo >= 2 and stack[lo] == INVERSE[stack[hi - 1]]:
        lo += 1
        hi -= 1
    if lo == hi:
        raise EmptyAfterReduction(f"word {raw!r} reduces to the identity")
    return "".join(stack[lo:hi])


def is_cyclically_reduced(w):
    if not w:
        return False
    return all(w[i] != INVERSE[w[(i + 1) % len(w)]] for i in range(len(w)))


def _least_rotation(s):
    """Booth's algorithm: index of the lexicographically least rotation."""
    s2 = s + s
    n = len(s2)
    f = [-1] * n
    k = 0
    for j in range(1, n):
        sj = s2[j]
        i = f[j - k - 1]
        while i != -1 and sj != s2[k + i + 1]:
            if sj < s2[k + i + 1]:
                k = j - i - 1
            i = f[i]
        if sj != s2[k + i + 1]:
            if sj < s2[k]:
                k = j
            f[j - k] = -1
        else:
            f[j - k] = i + 1
    return k


def canonical(w):
    """Canonical unoriented class key of a cyclically reduced word.

    Least word, under a < A < b < B, over all rotations of w and of its
    inverse.
    """
    r = rank_key(w)
    n = len(r)
    i = _least_rotation(r)
    best = r[i:] + r[:i]
    ri = rank_key(inverse_word(w))
    j = _least_rotation(ri)
    alt = ri[j:] + ri[:j]
    if alt < best:
        best = alt
    return "".join(_UNRANK[c] for c in best)


def is_primitive(w):
    """True iff w is not a proper power, i.e. fixed by no proper rotation."""
    return (w + w).find(w, 1) == len(w)


def word_length(key):
    return len(key)


def enumerate_classes(l_max, budget=DEFAULT_WORD_BUDGET):
    """Yield every unoriented class key of word length <= l_max exactly once.

    Order is by length, then lexicographic in the a < A < b < B order.
    Non-primitive classes are included.
    """
    if l_max < 1:
        raise ValueError("l_max must be >= 1")
    est = sum(3 ** (n - 1) for n in range(1, l_max + 1)) * (l_max + 50)
    if est > budget:
        raise CapTooLarge(f"enumeration to length {l_max} exceeds budget")
    for n in range(1, l_max + 1):
        yield from sorted(_classes_of_length(n), key=rank_key)


def _classes_of_length(n):
    """Canonical keys of length exactly n (set, unsorted)."""
    # a canonical key containing a or A starts with 'a'; the only class over
    # {b, B} alone is b^n, so it is enough to extend words starting with 'a'
    found = {"b" * n}
    if n == 1:
        found.add("a")
        return found
    stack = [("a", "a")]
    while stack:
        prefix, last = stack.pop()
        if len(prefix) == n - 1:
            banned = INVERSE[last]
            for ch in ALPHABET:
                # keep the wrap pair (last, first='a') reduced too
                if ch != banned and ch != "A":
                    w = prefix + ch
                    found.add(canonical(w))
        else:
            for ch in ALPHABET:
                if ch != INVERSE[last]:
                    stack.append((prefix + ch, ch))
    return found


def count_classes_of_length(n):
    return len(_classes_of_length(n))


class Totient:
    """Euler totient values 1..N by sieve, with the conventions used here:
    phi(1) = 1 and phi(x) = 0 when x is not a positive integer."""

    def __init__(self, n_max=1024):
        self._sieve(max(n_max, 1))

    def _sieve(self, n_max):
        phi = list(range(n_max + 1))
        for p in range(2, n_max + 1):
            if phi[p] == p:  # p prime
                for m in range(p, n_max + 1, p):
                    phi[m] -= phi[m] // p
        self._phi = phi
        self.n_max = n_max

    def __call__(self, n):
        if isinstance(n, float):
            if not n.is_integer():
                return 0
            n = int(n)
        if n < 1:
            return 0
        if n > self.n_max:
            self._sieve(max(n, 2 * self.n_max))
        return self._phi[n]

    def at_ratio(self, num, den):
        """phi(num/den), which is 0 unless den divides num."""
        if den <= 0 or num % den != 0:
            return 0
        return self(num // den)

    def summatory_double(self, l_max):
        """Sum over n <= l_max of 2*phi(n)."""
        if l_max < 1:
            return 0
        self(l_max)
        return 2 * sum(self._phi[1 : l_max + 1])


totient = Totient()
