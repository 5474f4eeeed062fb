from fractions import Fraction
from math import prod

import pytest
from hypothesis import given, strategies as st

from logsine import indices as ix
from logsine.indices import IndexConstraintError

small = st.lists(st.integers(0, 4), min_size=0, max_size=5).map(tuple)
small_pos = st.lists(st.integers(0, 4), min_size=1, max_size=5).map(tuple)


def test_index_basics():
    assert ix.index_basics(()) == (0, 0, True)
    assert ix.index_basics((1, 1, 2)) == (4, 3, True)
    assert ix.index_basics((2, 1)) == (3, 2, False)


def test_parse_and_format():
    assert ix.parse_index("2,1") == (2, 1)
    assert ix.parse_index("") == ()
    assert ix.format_index((3, 1, 2)) == "3,1,2"
    with pytest.raises(IndexConstraintError):
        ix.parse_index("2,x")


def test_index_arith():
    assert ix.index_arith((2, 3), (1, 1), "sub") == (1, 2)
    assert ix.index_arith((1, 1), (0, 2), "add") == (1, 3)
    with pytest.raises(IndexConstraintError):
        ix.index_arith((1,), (2,), "sub")
    assert ix.index_arith((1,), (2,), "sub", nonnegative=False) == (-1,)
    with pytest.raises(IndexConstraintError):
        ix.add((1,), (1, 2))


def test_multinomial_product():
    assert ix.multinomial_product((0,), (0,), (0,), (0,)) == 1
    assert ix.multinomial_product((2,), (1,), (1,), (0,)) == 2
    assert ix.multinomial_product((2, 1), (1, 0), (1, 1), (0, 0)) == 2
    with pytest.raises(IndexConstraintError):
        ix.multinomial_product((2,), (1,), (0,), (0,))


def test_binom_product():
    assert ix.binom_product((2, 1), (0, 0)) == 1
    assert ix.binom_product((2, 1), (2, 1)) == 1
    assert ix.binom_product((2, 1), (1, 1)) == 2
    with pytest.raises(IndexConstraintError):
        ix.binom_product((1,), (2,))


def test_order_relation():
    assert ix.order_relation((), (), "dominance")
    assert ix.order_relation((0, 1), (1, 0), "dominance")
    assert not ix.order_relation((0, 1), (1, 0), "componentwise")
    assert not ix.order_relation((1, 0), (0, 1), "dominance")
    with pytest.raises(IndexConstraintError):
        ix.order_relation((1,), (1, 2), "dominance")


def test_compositions_triple_examples():
    assert ix.compositions_triple((0,)) == (((0,), (0,), (0,)),)
    assert len(ix.compositions_triple((1,))) == 3
    assert len(ix.compositions_triple((1, 1))) == 9


def test_coefficients():
    assert ix.b_coeff(()) == 1
    assert ix.b_coeff((1,)) == Fraction(1, 2)
    assert ix.b_coeff((1, 2)) == Fraction(1, 10)
    assert ix.c_coeff((), ()) == 1
    assert ix.c_coeff((2,), (1,)) == -2
    assert ix.c_coeff((1, 1), (1, 0)) == -1
    with pytest.raises(IndexConstraintError):
        ix.c_coeff((0, 1), (1, 0))


def test_split_pair():
    assert ix.split_pair((1, 2, 3, 4), (0, 0, 1, 2)) == ((1, 2), (3, 4), (1, 2), (8, 4))
    assert ix.split_pair((0,), (0,)) == ((0,), (), (), ())
    assert ix.split_pair((0,), (1,)) == ((), (0,), (1,), (0,))


def test_block_partitions_examples():
    assert len(ix.block_partitions((1,), (0,))) == 1
    assert len(ix.block_partitions((1, 2), (0, 1))) == 2
    assert len(ix.block_partitions((1, 2, 3), (0, 1, 0))) == 4
    with pytest.raises(IndexConstraintError):
        ix.block_partitions((), ())


def test_bernoulli_and_fibonacci():
    assert ix.bernoulli_number(1) == Fraction(-1, 2)
    assert ix.bernoulli_number(12) == Fraction(-691, 2730)
    assert [ix.fibonacci(n) for n in range(8)] == [0, 1, 1, 2, 3, 5, 8, 13]


@given(small_pos)
def test_b_coeff_product_form(q):
    expected = prod(Fraction(1, sum(q[: u + 1]) + u + 1) for u in range(len(q)))
    assert ix.b_coeff(q) == expected


@given(small)
def test_c_coeff_zero_tuple(q):
    assert ix.c_coeff(q, (0,) * len(q)) == 1


@given(st.integers(0, 6))
def test_c_coeff_single_component(q0):
    # depth one: C_(q)^(j) = (-1)^j q!/(q-j)!
    from math import factorial

    for j in range(q0 + 1):
        assert ix.c_coeff((q0,), (j,)) == (-1) ** j * Fraction(factorial(q0), factorial(q0 - j))


@given(st.lists(st.integers(0, 3), min_size=0, max_size=4).map(tuple))
def test_compositions_triple_count(m):
    triples = ix.compositions_triple(m)
    assert len(triples) == prod((v + 2) * (v + 1) // 2 for v in m)
    assert all(ix.add(ix.add(p, q), r) == m for p, q, r in triples)
    assert len(set(triples)) == len(triples)


@given(st.lists(st.tuples(st.integers(0, 3), st.integers(0, 3)), min_size=1, max_size=6))
def test_block_partitions_properties(pairs):
    q = tuple(a for a, _ in pairs)
    r = tuple(b for _, b in pairs)
    parts = ix.block_partitions(q, r)
    assert len(parts) == 2 ** (len(q) - 1)
    for blocks in parts:
        assert all(len(qb) == len(rb) >= 1 for qb, rb in blocks)
        assert sum((qb for qb, _ in blocks), ()) == q
        assert sum((rb for _, rb in blocks), ()) == r


@given(small_pos)
def test_dominated_by_is_exact(q):
    got = list(ix.dominated_by(q))
    import itertools

    brute = [j for j in itertools.product(range(sum(q) + 1), repeat=len(q)) if ix.dominated(j, q)]
    assert got == sorted(brute)
