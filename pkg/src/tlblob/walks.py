"""Walks on the nonnegative half of the Pascal graph, and their word map.

A walk of length n is a sequence in {1,2}^n read as column moves +1/-1
from the origin; every prefix must stay at a nonnegative column (which in
particular forces the first step to be 1).  Pairs of walks sharing an
endpoint index diagram basis elements: the pair (a, b) maps to a generator
word whose diagram has a as its upper half and b as its lower half.

The partial order on pairs is containment of drawings: pointwise column
domination of both walks at equal endpoints, and endpoint-column comparison
across different endpoints.
"""

from __future__ import annotations

from dataclasses import dataclass

from .words import GenWord

__all__ = [
    "Walk",
    "WalkPair",
    "enumerate_walks",
    "enumerate_pairs",
    "raise_at",
    "lower_at",
    "leq",
    "pair_word",
    "linear_extension",
    "walk_from_string",
]


@dataclass(frozen=True)
class Walk:
    steps: tuple

    def __post_init__(self):
        steps = tuple(int(s) for s in self.steps)
        object.__setattr__(self, "steps", steps)
        h = 0
        for s in steps:
            if s not in (1, 2):
                raise ValueError(f"step {s} not in {{1,2}}")
            h += 1 if s == 1 else -1
            if h < 0:
                raise ValueError(f"walk {steps} leaves the nonnegative columns")

    def __len__(self):
        return len(self.steps)

    @property
    def profile(self):
        """Columns after 0..n steps."""
        out = [0]
        for s in self.steps:
            out.append(out[-1] + (1 if s == 1 else -1))
        return tuple(out)

    @property
    def endpoint(self):
        return self.profile[-1]

    def __repr__(self):
        return "".join(str(s) for s in self.steps)


def walk_from_string(text):
    return Walk(tuple(int(ch) for ch in text.strip()))


@dataclass(frozen=True)
class WalkPair:
    a: Walk
    b: Walk

    def __post_init__(self):
        if len(self.a) != len(self.b):
            raise ValueError("walks must have equal length")
        if self.a.endpoint != self.b.endpoint:
            raise ValueError("walks must share an endpoint")

    @property
    def n(self):
        return len(self.a)

    @property
    def endpoint(self):
        return self.a.endpoint

    def __repr__(self):
        return f"({self.a!r},{self.b!r})"


def enumerate_walks(n, c):
    """All length-n walks ending at column c, lexicographically sorted."""
    if not 0 <= c <= n or (n - c) % 2:
        raise ValueError(f"no walks of length {n} end at column {c}")
    out = []

    def grow(steps, h):
        if len(steps) == n:
            if h == c:
                out.append(Walk(tuple(steps)))
            return
        # Prune: remaining steps must be able to reach column c.
        rem = n - len(steps)
        if abs(c - h) > rem:
            return
        steps.append(1)
        grow(steps, h + 1)
        steps.pop()
        if h > 0:
            steps.append(2)
            grow(steps, h - 1)
            steps.pop()

    grow([], 0)
    return out


def enumerate_pairs(n):
    """All same-endpoint walk pairs of length n."""
    out = []
    for c in range(n % 2, n + 1, 2):
        walks = enumerate_walks(n, c)
        out.extend(WalkPair(a, b) for a in walks for b in walks)
    return out


def raise_at(walk, i):
    """Replace the descent (2,1) at 1-based positions (i, i+1) by (1,2)."""
    s = walk.steps
    if not 1 <= i <= len(s) - 1 or s[i - 1] != 2 or s[i] != 1:
        raise ValueError(f"no descent at position {i} of {walk!r}")
    return Walk(s[: i - 1] + (1, 2) + s[i + 1:])


def lower_at(walk, i):
    """Inverse of raise_at; only legal when the walk stays nonnegative."""
    s = walk.steps
    if not 1 <= i <= len(s) - 1 or s[i - 1] != 1 or s[i] != 2:
        raise ValueError(f"no ascent at position {i} of {walk!r}")
    return Walk(s[: i - 1] + (2, 1) + s[i + 1:])


def _lowest_legal_lowering(walk):
    s = walk.steps
    h = 0
    for i in range(1, len(s)):
        h += 1 if s[i - 1] == 1 else -1
        # Lowering at i turns (1,2) into (2,1) and drops the column after
        # step i by 2, so it needs h(i) >= 2.
        if s[i - 1] == 1 and s[i] == 2 and h >= 2:
            return i
    return None


def leq(p, q):
    """Envelope order: domination at equal endpoints, else endpoint order."""
    if p.n != q.n:
        raise ValueError("pairs must have equal length")
    if p.endpoint != q.endpoint:
        return p.endpoint < q.endpoint
    return all(x <= y for x, y in zip(p.a.profile, q.a.profile)) and \
        all(x <= y for x, y in zip(p.b.profile, q.b.profile))


def lowest_walk(n, c):
    """The minimum of the endpoint-(n,c) lattice: (12)^k followed by 1s."""
    k = (n - c) // 2
    return Walk((1, 2) * k + (1,) * (n - 2 * k))


def pair_word(p):
    """The generator word of a walk pair.

    The lowest pair of its lattice maps to U_1 U_3 .. U_{2k-1} (k = number
    of 2-steps); lowering the left walk at position i prepends U_i, lowering
    the right walk appends U_i.  The canonical chain lowers at the smallest
    legal position first, left walk before right; any other chain yields the
    same diagram.
    """
    left = []
    a = p.a
    while (i := _lowest_legal_lowering(a)) is not None:
        left.append(i)
        a = lower_at(a, i)
    right = []
    b = p.b
    while (i := _lowest_legal_lowering(b)) is not None:
        right.append(i)
        b = lower_at(b, i)
    k = sum(1 for s in a.steps if s == 2)
    base = [2 * j + 1 for j in range(k)]
    letters = tuple(left) + tuple(base) + tuple(reversed(right))
    return GenWord(letters, p.n)


def linear_extension(pairs):
    """A total order consistent with leq, independent of input order.

    Sorting by (endpoint, reversed-step tuples) is a linear extension: at a
    first step difference the dominated walk takes the 2, so pointwise-lower
    walks are lexicographically greater as step strings.
    """
    def key(p):
        return (p.endpoint,
                tuple(-s for s in p.a.steps),
                tuple(-s for s in p.b.steps))

    return sorted(pairs, key=key)


def hasse_edges(pairs):
    """Covering relations of the envelope order on the given pairs."""
    pairs = linear_extension(pairs)
    below = {
        q: [p for p in pairs if p != q and leq(p, q)] for q in pairs
    }
    edges = []
    for q, lower in below.items():
        for p in lower:
            if not any(leq(p, r) and leq(r, q) and r != p and r != q for r in lower):
                edges.append((p, q))
    return edges


def tl_basis_word_table(n):
    """One loop-free word per plain diagram, indexed by walk pairs."""
    from .words import eval_word

    table = {}
    for p in enumerate_pairs(n):
        word = pair_word(p)
        table[eval_word(word).diagram] = word
    return table
