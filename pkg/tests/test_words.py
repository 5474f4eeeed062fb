import math
import random

import pytest
from hypothesis import given, strategies as st

from logsine.indices import IndexConstraintError
from logsine.words import (
    WordPoly,
    dual_word,
    format_word,
    index_word,
    parse_word,
    shuffle,
    subspace_of,
    w_word,
    word_index,
)

words = st.lists(st.integers(0, 1), max_size=5).map(tuple)
polys = st.dictionaries(words, st.integers(-3, 3), max_size=3).map(WordPoly)


def P(*pairs):
    return WordPoly({w: c for w, c in pairs})


def test_shuffle_examples():
    assert shuffle(P(((1,), 1)), P(((1,), 1))) == P(((1, 1), 2))
    assert shuffle(P(((1,), 1)), P(((0,), 1))) == P(((1, 0), 1), ((0, 1), 1))
    assert shuffle(P(((1, 0), 1)), P(((1,), 1))) == P(((1, 0, 1), 1), ((1, 1, 0), 2))


def test_unit_is_neutral():
    w = P(((1, 0, 0), 3), ((0,), -1))
    assert shuffle(w, WordPoly.unit()) == w


def test_w_word_examples():
    assert w_word((), ()) == WordPoly.unit()
    assert w_word((0,), (1,)) == P(((1, 0), 1))
    assert w_word((0, 0), (1, 1)) == P(((1, 0, 1, 0), 1), ((1, 1, 0, 0), 2))
    with pytest.raises(IndexConstraintError):
        w_word((0,), (1, 1))


@pytest.mark.parametrize("w,k", [((1, 0), (2,)), ((1, 1, 0), (1, 2)), ((1, 0, 0), (3,)), ((), ())])
def test_word_index_roundtrip(w, k):
    assert word_index(w) == k
    assert index_word(k) == w


def test_word_index_rejects_e0_start():
    with pytest.raises(ValueError):
        word_index((0, 1))
    with pytest.raises(IndexConstraintError):
        index_word((0, 2))


def test_subspace_of():
    assert subspace_of(()) == "H0"
    assert subspace_of((1, 0)) == "H0"
    assert subspace_of((0, 1)) == "neither"
    assert subspace_of((1, 1)) == "H1_only"


def test_text_syntax():
    assert format_word((1, 0, 0)) == "x1x0x0"
    assert parse_word("x1x0x0") == (1, 0, 0)
    with pytest.raises(ValueError):
        parse_word("x2")


def test_dual_word():
    assert dual_word((1, 0, 0)) == (1, 1, 0)
    assert dual_word(dual_word((1, 1, 0, 1))) == (1, 1, 0, 1)


@given(polys, polys)
def test_shuffle_commutative(a, b):
    assert shuffle(a, b) == shuffle(b, a)


@given(polys, polys, polys)
def test_shuffle_associative(a, b, c):
    assert shuffle(shuffle(a, b), c) == shuffle(a, shuffle(b, c))


@given(words, words)
def test_shuffle_coefficient_sum(u, v):
    assert sum(shuffle(WordPoly.of(u), WordPoly.of(v)).values()) == math.comb(len(u) + len(v), len(u))


@given(st.lists(st.tuples(st.integers(0, 2), st.integers(0, 2)), min_size=1, max_size=3))
def test_w_word_structure(pairs):
    j = tuple(a for a, _ in pairs)
    r = tuple(b for _, b in pairs)
    poly = w_word(j, r)
    assert poly
    for w in poly:
        assert w[-1] == 0
        assert len(w) == sum(j) + sum(r) + len(j)
        if r[0] >= 1:
            assert subspace_of(w) == "H0"


def test_shuffle_seeded_random(request):
    rng = random.Random(request.config.lsi_seed)
    for _ in range(30):
        u = tuple(rng.randint(0, 1) for _ in range(rng.randint(0, 6)))
        v = tuple(rng.randint(0, 1) for _ in range(rng.randint(0, 6)))
        prod = shuffle(WordPoly.of(u), WordPoly.of(v))
        assert all(len(w) == len(u) + len(v) for w in prod)
