"""Words in the algebra generators and their diagrammatic evaluation.

A word is a sequence of letters, each either the blob generator ``"e"`` or
an integer i standing for the cup-cap generator U_i.  Two index conventions
exist: ``"standard"`` indices run 1..n-1; ``"shifted"`` indices run
-n/2+1..n/2-1 on an even ambient size n (shifted index i acts at absolute
position n/2 + i, so index 0 sits at the middle of the frame).

Evaluating a word folds its letters into one (blob) diagram while counting
every discarded feature; a word is loop free when nothing was discarded.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .diagrams import (
    BlobPairing,
    blob_e,
    compose_blob,
    generator_u,
    identity,
)

__all__ = [
    "GenWord",
    "WordEval",
    "eval_word",
    "blob_basis_words",
    "f_map",
    "verify_presentation",
    "parse_word",
    "format_word",
]


@dataclass(frozen=True)
class GenWord:
    """A word in {e, U_i}; the empty word denotes the algebra unit."""

    letters: tuple
    n: int
    convention: str = "standard"

    def __post_init__(self):
        object.__setattr__(self, "letters", tuple(self.letters))
        for letter in self.letters:
            if letter == "e":
                if self.convention != "standard":
                    raise ValueError("the blob letter lives in the standard convention")
                continue
            if not isinstance(letter, int):
                raise ValueError(f"bad letter {letter!r}")
            # Range check once, at construction.
            _probe_index(letter, self.n, self.convention)

    def __mul__(self, other):
        if self.n != other.n or self.convention != other.convention:
            raise ValueError("cannot concatenate words of different shape")
        return GenWord(self.letters + other.letters, self.n, self.convention)

    def __repr__(self):
        return f"GenWord({format_word(self)!r}, n={self.n}, {self.convention})"


def _probe_index(i, n, convention):
    # Delegates range validation to the diagram constructor.
    generator_u(i, n, convention)


@dataclass(frozen=True)
class WordEval:
    """Evaluation of a word: final diagram plus accumulated discard counts."""

    diagram: BlobPairing
    plain_loops: int
    blob_loops: int
    blob_merges: int

    @property
    def loop_free(self):
        return not (self.plain_loops or self.blob_loops or self.blob_merges)

    @property
    def tl_diagram(self):
        if self.diagram.blobbed:
            raise ValueError("diagram carries blobs")
        return self.diagram.base


def _letter_diagram(letter, n, convention):
    if letter == "e":
        return blob_e(n)
    return BlobPairing(generator_u(letter, n, convention))


def eval_word(word):
    """Left-to-right fold of the word's generator diagrams."""
    cur = BlobPairing(identity(word.n))
    plain = loops = merges = 0
    for letter in word.letters:
        res, _ = compose_blob(cur, _letter_diagram(letter, word.n, word.convention))
        cur = res.diagram
        plain += res.plain_loops
        loops += res.blob_loops
        merges += res.blob_merges
    return WordEval(cur, plain, loops, merges)


def blob_basis_words(n):
    """One loop-free word per blob diagram, found by breadth-first search.

    Right-multiplication by the generators (fixed order: e, U_1, ..,
    U_{n-1}) extends the frontier; an extension survives only when the
    incremental composition discards nothing.  First word found wins, so the
    table is deterministic.  Completeness over all (2n)!/(n!n!) diagrams is
    asserted.
    """
    from math import comb

    gens = [("e", blob_e(n))] + [
        (i, BlobPairing(generator_u(i, n))) for i in range(1, n)
    ]
    start = BlobPairing(identity(n))
    table = {start: GenWord((), n)}
    queue = deque([start])
    while queue:
        diag = queue.popleft()
        word = table[diag]
        for letter, gd in gens:
            res, _ = compose_blob(diag, gd)
            if res.plain_loops or res.blob_loops or res.blob_merges:
                continue
            if res.diagram not in table:
                table[res.diagram] = GenWord(word.letters + (letter,), n)
                queue.append(res.diagram)
    expected = comb(2 * n, n)
    assert len(table) == expected, f"basis search incomplete: {len(table)}/{expected}"
    return table


def f_map(word):
    """Fold a blob word into the doubled algebra: e -> U_0, U_i -> U_{-i} U_i.

    Takes loop-free words to loop-free words; not an algebra map.
    """
    if word.convention != "standard":
        raise ValueError("f_map expects a standard-convention blob word")
    letters = []
    for letter in word.letters:
        if letter == "e":
            letters.append(0)
        else:
            letters.extend((-letter, letter))
    return GenWord(tuple(letters), 2 * word.n, "shifted")


def parse_word(text, n, convention="standard"):
    """Parse a word from text ("e u1 u-2") or from a JSON-style token list."""
    tokens = text.split() if isinstance(text, str) else list(text)
    letters = []
    for tok in tokens:
        if tok == "e":
            letters.append("e")
        elif isinstance(tok, int):
            letters.append(tok)
        elif isinstance(tok, str) and tok.startswith("u"):
            letters.append(int(tok[1:]))
        else:
            raise ValueError(f"bad word token {tok!r}")
    return GenWord(tuple(letters), n, convention)


def format_word(word):
    return " ".join("e" if l == "e" else f"u{l}" for l in word.letters)


@dataclass
class PresentationReport:
    """Outcome of checking the defining relations against matrices."""

    violations: list
    empirical_scalars: dict

    @property
    def ok(self):
        return not self.violations


def _check(violations, name, lhs, rhs):
    if lhs != rhs:
        violations.append((name, lhs.sub(rhs)))


def verify_presentation(rep, n, delta, blob_params=None):
    """Check the cup-cap relations (and blob relations when "e" is present).

    ``rep`` maps generator indices 1..n-1 (and optionally "e") to square
    matrices supporting mul/scalar_mul/sub.  Every violated identity is
    reported with its residual matrix.  For the two scalar-shaped blob
    relations the empirically observed scalar is recorded next to the
    expected one.
    """
    violations = []
    empirical = {}
    idx = [i for i in rep if i != "e"]
    for i in idx:
        u = rep[i]
        _check(violations, f"u{i}.u{i} = delta u{i}", u.mul(u), u.scalar_mul(delta))
        for j in idx:
            if abs(i - j) == 1:
                _check(violations, f"u{i} u{j} u{i} = u{i}",
                       u.mul(rep[j]).mul(u), u)
            elif i != j:
                _check(violations, f"u{i} u{j} = u{j} u{i}",
                       u.mul(rep[j]), rep[j].mul(u))
    if "e" in rep:
        if blob_params is None:
            raise ValueError("blob relations need blob parameters")
        e = rep["e"]
        ee = e.mul(e)
        empirical["delta_e"] = ee.ratio_to(e)
        _check(violations, "e.e = delta_e e", ee, e.scalar_mul(blob_params.delta_e))
        if 1 in rep:
            u1 = rep[1]
            ueu = u1.mul(e).mul(u1)
            empirical["gamma"] = ueu.ratio_to(u1)
            _check(violations, "u1 e u1 = gamma u1",
                   ueu, u1.scalar_mul(blob_params.gamma))
        for i in idx:
            if i >= 2:
                _check(violations, f"e u{i} = u{i} e", e.mul(rep[i]), rep[i].mul(e))
    return PresentationReport(violations, empirical)
