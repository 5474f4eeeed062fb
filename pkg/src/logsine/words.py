"""The word algebra Q<e0, e1> with the shuffle product.

A word is a tuple of letters ``0`` (e0) and ``1`` (e1).  A word polynomial is
a :class:`WordPoly`, a mapping from words to nonzero :class:`Fraction`
coefficients.  The word ``e1 e0^(k1-1) ... e1 e0^(kn-1)`` is identified with the
index ``(k1, ..., kn)``.
"""
from __future__ import annotations

from collections.abc import Iterable, Mapping
from fractions import Fraction
from functools import lru_cache

from .indices import Index, IndexConstraintError

E0 = 0
E1 = 1

Word = tuple[int, ...]


class WordPoly(Mapping):
    """Immutable Q-linear combination of words."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms=None):
        clean: dict[Word, Fraction] = {}
        if terms:
            items = terms.items() if isinstance(terms, Mapping) else terms
            for w, c in items:
                w = tuple(w)
                c = Fraction(c)
                if c:
                    clean[w] = clean.get(w, Fraction(0)) + c
                    if not clean[w]:
                        del clean[w]
        self._terms = dict(sorted(clean.items(), key=lambda t: word_key(t[0])))
        self._hash = None

    @classmethod
    def unit(cls) -> "WordPoly":
        return cls({(): 1})

    @classmethod
    def of(cls, w: Iterable[int], c=1) -> "WordPoly":
        return cls({tuple(w): c})

    def __getitem__(self, w):
        return self._terms[tuple(w)]

    def __iter__(self):
        return iter(self._terms)

    def __len__(self):
        return len(self._terms)

    def __eq__(self, other):
        if isinstance(other, WordPoly):
            return self._terms == other._terms
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(tuple(self._terms.items()))
        return self._hash

    def __add__(self, other: "WordPoly") -> "WordPoly":
        out = dict(self._terms)
        for w, c in other._terms.items():
            out[w] = out.get(w, Fraction(0)) + c
        return WordPoly(out)

    def __neg__(self):
        return WordPoly({w: -c for w, c in self._terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c) -> "WordPoly":
        c = Fraction(c)
        return WordPoly({w: c * v for w, v in self._terms.items()})

    def concat(self, suffix: Word) -> "WordPoly":
        """Right-multiply every term by a fixed word."""
        suffix = tuple(suffix)
        return WordPoly({w + suffix: c for w, c in self._terms.items()})

    def __repr__(self):
        if not self._terms:
            return "WordPoly(0)"
        parts = [f"{c}*{format_word(w) or '1'}" for w, c in self._terms.items()]
        return "WordPoly(" + " + ".join(parts) + ")"


def word_key(w: Word):
    """Canonical order: length first, then lexicographic."""
    return (len(w), w)


def format_word(w: Word) -> str:
    return "".join(f"x{a}" for a in w)


def parse_word(text: str) -> Word:
    text = text.strip()
    if len(text) % 2 or any(text[i] != "x" or text[i + 1] not in "01" for i in range(0, len(text), 2)):
        raise ValueError(f"malformed word {text!r}")
    return tuple(int(text[i + 1]) for i in range(0, len(text), 2))


@lru_cache(maxsize=65536)
def shuffle_words(u: Word, v: Word) -> WordPoly:
    """Shuffle of two words by dynamic programming over interleaving prefixes."""
    if not u:
        return WordPoly.of(v)
    if not v:
        return WordPoly.of(u)
    a, b = len(u), len(v)
    # row[j] holds the shuffle of u[:i] and v[:j] as a dict
    row = [{v[:j]: 1} for j in range(b + 1)]
    for i in range(1, a + 1):
        new = [{u[:i]: 1}]
        for j in range(1, b + 1):
            cell: dict[Word, int] = {}
            for w, c in row[j].items():
                key = w + (u[i - 1],)
                cell[key] = cell.get(key, 0) + c
            for w, c in new[j - 1].items():
                key = w + (v[j - 1],)
                cell[key] = cell.get(key, 0) + c
            new.append(cell)
        row = new
    return WordPoly(row[b])


def shuffle(a: WordPoly, b: WordPoly) -> WordPoly:
    """Bilinear shuffle product."""
    out: dict[Word, Fraction] = {}
    for u, cu in a.items():
        for v, cv in b.items():
            for w, c in shuffle_words(u, v).items():
                out[w] = out.get(w, Fraction(0)) + cu * cv * c
    return WordPoly(out)


@lru_cache(maxsize=None)
def e1_shuffle_power(r: int) -> WordPoly:
    """``e1`` shuffled with itself ``r`` times, i.e. ``r! e1^r``."""
    out = WordPoly.unit()
    for _ in range(r):
        out = shuffle(out, WordPoly.of((E1,)))
    return out


@lru_cache(maxsize=None)
def w_word(j: Index, r: Index) -> WordPoly:
    """The recursive word ``w_j^r = (w_{j-}^{r-} sh e1^{sh r_n}) e0^{1+j_n}``."""
    if len(j) != len(r):
        raise IndexConstraintError(f"depth mismatch: {j} vs {r}")
    if any(v < 0 for v in j + r):
        raise IndexConstraintError("negative entry")
    if not j:
        return WordPoly.unit()
    inner = shuffle(w_word(j[:-1], r[:-1]), e1_shuffle_power(r[-1]))
    return inner.concat((E0,) * (1 + j[-1]))


def word_index(w: Word) -> Index:
    """Index of a word in ``Q + e1 H``; raises for words starting with e0."""
    w = tuple(w)
    if not w:
        return ()
    if w[0] != E1:
        raise ValueError(f"word {format_word(w)} does not start with x1")
    out = []
    for a in w:
        if a == E1:
            out.append(1)
        else:
            out[-1] += 1
    return tuple(out)


def index_word(k: Index) -> Word:
    if any(v < 1 for v in k):
        raise IndexConstraintError(f"entries must be >= 1, got {k}")
    out: list[int] = []
    for v in k:
        out.append(E1)
        out.extend([E0] * (v - 1))
    return tuple(out)


def subspace_of(w: Word) -> str:
    """``"H0"``, ``"H1_only"`` or ``"neither"``."""
    w = tuple(w)
    if not w:
        return "H0"
    if w[0] != E1:
        return "neither"
    return "H0" if w[-1] == E0 else "H1_only"


def dual_word(w: Word) -> Word:
    """Reverse the word and swap e0 and e1 (the change of variables t -> 1 - t)."""
    return tuple(1 - a for a in reversed(w))
