"""Exact combinatorics on integer tuples.

Indices are plain tuples of Python ints, stored in the order they are written:
``k = (k_1, ..., k_n)`` with ``k_1`` the innermost summation/integration
variable.  Nothing in the package ever reverses an index.
"""
from __future__ import annotations

import itertools
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial, prod

Index = tuple[int, ...]


class IndexConstraintError(ValueError):
    """Raised when an index violates the constraints of an operation."""


def as_index(x) -> Index:
    return tuple(int(v) for v in x)


def parse_index(text: str) -> Index:
    """Parse ``"2,1"`` into ``(2, 1)``; the empty string is the empty index."""
    text = text.strip()
    if not text:
        return ()
    try:
        return tuple(int(part) for part in text.split(","))
    except ValueError as exc:
        raise IndexConstraintError(f"malformed index {text!r}") from exc


def format_index(k: Index) -> str:
    return ",".join(str(v) for v in k)


def weight(k: Index) -> int:
    return sum(k)


def depth(k: Index) -> int:
    return len(k)


def is_admissible(k: Index) -> bool:
    if not k:
        return True
    return all(v >= 1 for v in k) and k[-1] >= 2


def index_basics(k: Index) -> tuple[int, int, bool]:
    """Return ``(weight, depth, admissible)``."""
    return weight(k), depth(k), is_admissible(k)


def _same_depth(a: Index, b: Index) -> None:
    if len(a) != len(b):
        raise IndexConstraintError(f"depth mismatch: {a} vs {b}")


def add(a: Index, b: Index) -> Index:
    _same_depth(a, b)
    return tuple(x + y for x, y in zip(a, b))


def sub(a: Index, b: Index, nonnegative: bool = True) -> Index:
    _same_depth(a, b)
    out = tuple(x - y for x, y in zip(a, b))
    if nonnegative and any(v < 0 for v in out):
        raise IndexConstraintError(f"{a} - {b} has a negative entry")
    return out


def index_arith(a: Index, b: Index, op: str, nonnegative: bool = True) -> Index:
    if op == "add":
        return add(a, b)
    if op == "sub":
        return sub(a, b, nonnegative)
    raise ValueError(f"unknown op {op!r}")


def ones(n: int) -> Index:
    return (1,) * n


def twos(n: int) -> Index:
    return (2,) * n


def multinomial_product(m: Index, p: Index, q: Index, r: Index) -> int:
    """Product over components of ``m_u! / (p_u! q_u! r_u!)``."""
    if not (len(m) == len(p) == len(q) == len(r)):
        raise IndexConstraintError("depth mismatch")
    out = 1
    for mu, pu, qu, ru in zip(m, p, q, r):
        if min(pu, qu, ru) < 0 or pu + qu + ru != mu:
            raise IndexConstraintError(f"p+q+r != m at component ({pu},{qu},{ru}) vs {mu}")
        out *= factorial(mu) // (factorial(pu) * factorial(qu) * factorial(ru))
    return out


def binom_product(l: Index, j: Index) -> int:
    _same_depth(l, j)
    if any(not 0 <= ju <= lu for lu, ju in zip(l, j)):
        raise IndexConstraintError(f"need 0 <= j <= l componentwise, got j={j}, l={l}")
    return prod(comb(lu, ju) for lu, ju in zip(l, j))


def leq(j: Index, q: Index) -> bool:
    """Componentwise order."""
    _same_depth(j, q)
    return all(a <= b for a, b in zip(j, q))


def dominated(j: Index, q: Index) -> bool:
    """Prefix-sum (dominance) order; the empty pair is related."""
    _same_depth(j, q)
    sj = sq = 0
    for a, b in zip(j, q):
        sj += a
        sq += b
        if sj > sq:
            return False
    return True


def order_relation(j: Index, q: Index, kind: str) -> bool:
    if kind == "componentwise":
        return leq(j, q)
    if kind == "dominance":
        return dominated(j, q)
    raise ValueError(f"unknown order {kind!r}")


def below(l: Index):
    """All ``j`` with ``0 <= j <= l`` componentwise, lexicographic."""
    return itertools.product(*(range(v + 1) for v in l))


def dominated_by(q: Index):
    """All nonnegative ``j`` with ``j`` dominated by ``q``, lexicographic."""

    def rec(u: int, slack: int):
        if u == len(q):
            yield ()
            return
        top = slack + q[u]
        for ju in range(top + 1):
            for rest in rec(u + 1, top - ju):
                yield (ju,) + rest

    return rec(0, 0)


def _triples(mu: int):
    for p in range(mu + 1):
        for q in range(mu - p + 1):
            yield p, q, mu - p - q


@lru_cache(maxsize=None)
def compositions_triple(m: Index) -> tuple[tuple[Index, Index, Index], ...]:
    """Every ``(p, q, r)`` with ``p + q + r = m``, lexicographic in the per-component triples."""
    if any(v < 0 for v in m):
        raise IndexConstraintError(f"negative entry in {m}")
    out = []
    for combo in itertools.product(*(_triples(v) for v in m)):
        p = tuple(c[0] for c in combo)
        q = tuple(c[1] for c in combo)
        r = tuple(c[2] for c in combo)
        out.append((p, q, r))
    return tuple(out)


@lru_cache(maxsize=None)
def b_coeff(q: Index) -> Fraction:
    if not q:
        return Fraction(1)
    return b_coeff(q[:-1]) / (sum(q) + len(q))


@lru_cache(maxsize=None)
def c_coeff(q: Index, j: Index) -> Fraction:
    _same_depth(q, j)
    if not q:
        return Fraction(1)
    if not dominated(j, q):
        raise IndexConstraintError(f"{j} is not dominated by {q}")
    top = sum(q) - sum(j[:-1])
    sign = -1 if j[-1] % 2 else 1
    return sign * Fraction(factorial(top), factorial(top - j[-1])) * c_coeff(q[:-1], j[:-1])


def split_pair(q: Index, r: Index) -> tuple[Index, Index, Index, Index]:
    """Split at the leading zero run of ``r``.

    Returns ``(q', q'', r'', qbar)``; ``qbar`` is empty exactly when ``r`` is
    all zeros.
    """
    _same_depth(q, r)
    n1 = 0
    while n1 < len(r) and r[n1] == 0:
        n1 += 1
    q1, q2, r2 = q[:n1], q[n1:], r[n1:]
    if not q2:
        return q1, q2, r2, ()
    qbar = (sum(q1) + n1 + q2[0],) + q2[1:]
    return q1, q2, r2, qbar


def block_partitions(q: Index, r: Index) -> list[list[tuple[Index, Index]]]:
    """Cut ``q`` and ``r`` at the same positions into consecutive nonempty blocks.

    Ordered by the bitmask of cut positions (no cut first).
    """
    _same_depth(q, r)
    n = len(q)
    if n == 0:
        raise IndexConstraintError("block_partitions needs depth >= 1")
    out = []
    for mask in range(1 << (n - 1)):
        cuts = [0] + [u + 1 for u in range(n - 1) if mask >> u & 1] + [n]
        out.append([(q[a:b], r[a:b]) for a, b in zip(cuts, cuts[1:])])
    return out


def compositions(total: int, min_part: int = 1):
    """Ordered compositions of ``total`` with parts ``>= min_part`` (lexicographic)."""
    if total == 0:
        yield ()
        return
    for first in range(min_part, total + 1):
        for rest in compositions(total - first, min_part):
            yield (first,) + rest


@lru_cache(maxsize=None)
def bernoulli_number(n: int) -> Fraction:
    """Bernoulli numbers with ``B_1 = -1/2``."""
    if n < 0:
        raise ValueError("n must be >= 0")
    if n == 0:
        return Fraction(1)
    if n > 1 and n % 2:
        return Fraction(0)
    return -sum(comb(n + 1, j) * bernoulli_number(j) for j in range(n)) / (n + 1)


def bernoulli_poly(n: int, x) -> Fraction:
    """Exact value of the Bernoulli polynomial ``B_n(x)`` at a rational ``x``."""
    x = Fraction(x)
    return sum(comb(n, j) * bernoulli_number(j) * x ** (n - j) for j in range(n + 1))


def fibonacci(n: int) -> int:
    a, b = 0, 1
    for _ in range(n):
        a, b = b, a + b
    return a
