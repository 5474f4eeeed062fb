"""Exact closed forms of iterated log-sine integrals.

``Ls_k^l(sigma)`` for ``sigma`` in ``[0, 2 pi]`` is reduced to a :class:`SymCombo`
in ``sigma``, ``pi``, multiple zeta values and multiple polylogarithms at
``e^{i sigma}``.  The building blocks are

* ``f_q^r(sigma)`` (:func:`f_sym`) and its value at zero (:func:`f_zero`),
* ``F_q^r(sigma)`` (:func:`big_f_sym`), an alternating sum over block
  partitions that equals the nested integral of
  ``prod i (i theta)^q_u Li_1(e^{i theta})^r_u``,
* the trinomial expansion of ``A(theta) = -Li_1 - i(theta - pi)/2`` that turns
  an ``Ls`` into a combination of ``F`` (:func:`ls_closed_form`).

Arguments outside ``[0, 2 pi]`` go through the reflection, shift and
decomposition rules (:func:`ls_general`).
"""
from __future__ import annotations

from collections import Counter
from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import NamedTuple

from . import indices as ix
from .combo import GaussianRational, Monomial, SymCombo, cl_gl_split  # noqa: F401
from .indices import Index, IndexConstraintError
from .words import E0, WordPoly, e1_shuffle_power, shuffle, shuffle_words, subspace_of, w_word, word_index

__all__ = [
    "atoms_from_words",
    "f_sym",
    "f_zero",
    "big_f_sym",
    "ls_closed_form",
    "ls_easy_depth1",
    "ls_reflect",
    "ls_shift_expand",
    "ls_at_2mpi",
    "ls_general",
    "sls_closed_form",
    "sls_shuffle",
    "cl_gl_split",
    "isigma_power",
    "ls_weight_classes",
    "ShiftTerm",
]


def isigma_power(a: int) -> SymCombo:
    """``(i sigma)^a``."""
    return SymCombo.term(GaussianRational.i_power(a), sigma=a)


def atoms_from_words(p: WordPoly, target: str) -> SymCombo:
    """Apply the Z map (``target="zeta"``) or the L map at ``e^{i sigma}`` (``"li"``)."""
    terms = []
    for w, c in p.items():
        space = subspace_of(w)
        if target == "zeta":
            if space != "H0":
                raise ValueError(f"Z is undefined on word {w}: not in H0")
            mono = Monomial(zetas=(word_index(w),))
        elif target == "li":
            if space == "neither":
                raise ValueError(f"L is undefined on word {w}: not in H1")
            if space == "H1_only":
                raise ValueError(f"L of word {w} is a non-admissible polylogarithm")
            mono = Monomial(atom=("Li", word_index(w)))
        else:
            raise ValueError(f"unknown target {target!r}")
        terms.append((mono, c))
    return SymCombo(terms)


@lru_cache(maxsize=None)
def f_sym(q: Index, r: Index) -> SymCombo:
    if len(q) != len(r):
        raise IndexConstraintError(f"depth mismatch: {q} vs {r}")
    if not r:
        return SymCombo.constant(1)
    q1, _, r2, qbar = ix.split_pair(q, r)
    if not qbar:
        return isigma_power(sum(q) + len(q)).scale(ix.b_coeff(q))
    out = SymCombo()
    for j in ix.dominated_by(qbar):
        li = atoms_from_words(w_word(j, r2), "li")
        out = out + (isigma_power(sum(qbar) - sum(j)) * li).scale(ix.c_coeff(qbar, j))
    return out.scale(ix.b_coeff(q1))


@lru_cache(maxsize=None)
def f_zero(q: Index, r: Index) -> SymCombo:
    """``f_q^r(0)`` from its own zeta-value formula (not by substitution)."""
    if len(q) != len(r):
        raise IndexConstraintError(f"depth mismatch: {q} vs {r}")
    if not r:
        return SymCombo.constant(1)
    q1, _, r2, qbar = ix.split_pair(q, r)
    if not qbar:
        return SymCombo()
    top = sum(qbar)
    out = SymCombo()
    for jm in ix.dominated_by(qbar[:-1]):
        t = top - sum(jm)
        word = shuffle(w_word(jm, r2[:-1]), e1_shuffle_power(r2[-1])).concat((E0,) * (1 + t))
        c = ix.c_coeff(qbar[:-1], jm) * (-1) ** t * factorial(t)
        out = out + atoms_from_words(word, "zeta").scale(c)
    return out.scale(ix.b_coeff(q1))


@lru_cache(maxsize=None)
def big_f_sym(q: Index, r: Index) -> SymCombo:
    if len(q) != len(r):
        raise IndexConstraintError(f"depth mismatch: {q} vs {r}")
    if not q:
        return SymCombo.constant(1)
    out = SymCombo()
    for blocks in ix.block_partitions(q, r):
        h = len(blocks)
        term = SymCombo.constant(-1 if (h - 1) % 2 else 1)
        for qb, rb in blocks[:-1]:
            term = term * f_zero(qb, rb)
        qb, rb = blocks[-1]
        out = out + term * (f_sym(qb, rb) - f_zero(qb, rb))
    return out


def _check_kl(k: Index, l: Index) -> None:
    if len(k) != len(l):
        raise IndexConstraintError(f"depth mismatch: {k} vs {l}")
    if any(ku < 1 or lu < 0 or ku - 1 - lu < 0 for ku, lu in zip(k, l)):
        raise IndexConstraintError(f"need k_u >= 1 and 0 <= l_u <= k_u - 1, got k={k}, l={l}")


@lru_cache(maxsize=None)
def ls_closed_form(k: Index, l: Index) -> SymCombo:
    """Closed form of ``Ls_k^l(sigma)``, valid for ``sigma`` in ``[0, 2 pi]``."""
    k, l = tuple(k), tuple(l)
    _check_kl(k, l)
    n = len(k)
    if n == 0:
        return SymCombo.constant(1)
    m = ix.sub(ix.sub(k, ix.ones(n)), l)
    out = SymCombo()
    for p, q, r in ix.compositions_triple(m):
        P, Q = sum(p), sum(q)
        c = GaussianRational.i_power(-P) * Fraction(ix.multinomial_product(m, p, q, r), 2 ** (P + Q))
        out = out + (SymCombo.term(c, pi=P) * big_f_sym(ix.add(q, l), r))
    sign = -1 if (sum(k) + n) % 2 else 1
    return out.scale(GaussianRational.i_power(sum(l) + n) * sign)


def ls_easy_depth1(k: int) -> SymCombo:
    """Direct formula for ``Ls_k^{(k-2)}(sigma)``."""
    if k < 2:
        raise IndexConstraintError("k must be >= 2")
    i = GaussianRational.i_power
    out = SymCombo.term(i(1) * Fraction(1, 2 * k), sigma=k)
    out = out - SymCombo.term(i(1) * Fraction(1, 2 * (k - 1)), sigma=k - 1, pi=1)
    out = out + SymCombo.term(i(k - 1) * factorial(k - 2), zetas=[(k,)])
    for j in range(k - 1):
        c = i(j + 1) * Fraction(factorial(k - 2), factorial(k - 2 - j))
        out = out - SymCombo.term(c, sigma=k - 2 - j, li=(j + 2,))
    return out


def ls_reflect(k: Index, l: Index) -> int:
    """Sign ``s`` with ``Ls_k^l(sigma) = s * Ls_k^l(-sigma)``."""
    if len(k) != len(l):
        raise IndexConstraintError("depth mismatch")
    return -1 if (sum(l) + len(l)) % 2 else 1


class ShiftTerm(NamedTuple):
    """``coeff * pi^pi_pow * Ls_k^l(sigma)``."""

    coeff: Fraction
    pi_pow: int
    k: Index
    l: Index


def ls_shift_expand(k: Index, l: Index, m: int) -> list[ShiftTerm]:
    """Expand ``Ls_k^l(2 m pi; 2 m pi + sigma)`` into ``Ls_{k-j}^{l-j}(sigma)`` terms."""
    k, l = tuple(k), tuple(l)
    if len(k) != len(l):
        raise IndexConstraintError("depth mismatch")
    out = []
    for j in ix.below(l):
        J = sum(j)
        if m == 0 and J:
            continue
        c = Fraction((2 * m) ** J * ix.binom_product(l, j))
        out.append(ShiftTerm(c, J, ix.sub(k, j), ix.sub(l, j)))
    return out


def _segment(k: Index, l: Index, m: int, inner) -> SymCombo:
    """``Ls_k^l(2 m pi; 2 m pi + sigma)`` with ``inner(k, l)`` supplying ``Ls_k^l(sigma)``."""
    out = SymCombo()
    for t in ls_shift_expand(k, l, m):
        out = out + SymCombo.term(t.coeff, pi=t.pi_pow) * inner(t.k, t.l)
    return out


@lru_cache(maxsize=None)
def ls_at_2mpi(k: Index, l: Index, m: int) -> SymCombo:
    """``Ls_k^l(2 m pi)`` as pi powers times zeta values."""
    k, l = tuple(k), tuple(l)
    _check_kl(k, l)
    if m < 0:
        raise ValueError("m must be >= 0")
    if not k:
        return SymCombo.constant(1)
    if m == 0:
        return SymCombo()
    if m == 1:
        return ls_closed_form(k, l).substitute_sigma("2pi")
    prev = m - 1
    at_2pi = lambda kk, ll: ls_at_2mpi(kk, ll, 1)  # noqa: E731
    out = SymCombo()
    for h in range(len(k) + 1):
        out = out + ls_at_2mpi(k[:h], l[:h], prev) * _segment(k[h:], l[h:], prev, at_2pi)
    return out


@lru_cache(maxsize=None)
def ls_general(k: Index, l: Index, m: int = 0, sign: int = 1) -> SymCombo:
    """``Ls_k^l(sign * (2 m pi + sigma))`` for ``sigma`` in ``[0, 2 pi]``."""
    k, l = tuple(k), tuple(l)
    _check_kl(k, l)
    if m < 0:
        raise ValueError("m must be >= 0")
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    out = SymCombo()
    for h in range(len(k) + 1):
        head = ls_at_2mpi(k[:h], l[:h], m)
        if head.is_zero():
            continue
        out = out + head * _segment(k[h:], l[h:], m, ls_closed_form)
    if sign < 0:
        out = out.scale(ls_reflect(k, l))
    return out


@lru_cache(maxsize=None)
def sls_closed_form(k: Index) -> SymCombo:
    """Closed form of the shifted log-sine integral ``SLs(k; sigma)``."""
    k = tuple(k)
    if any(v < 2 for v in k):
        raise IndexConstraintError(f"SLs needs entries >= 2, got {k}")
    n = len(k)
    e = ix.sub(k, ix.twos(n))
    out = SymCombo()
    for j in ix.below(e):
        a = sum(e) - sum(j)
        c = ix.binom_product(e, j) * (-1) ** a
        out = out + SymCombo.term(c, sigma=a) * ls_closed_form(ix.add(j, ix.twos(n)), tuple(j))
    return out.scale(-1 if n % 2 else 1)


def sls_shuffle(a: Index, b: Index) -> Counter:
    """Multiset of order-preserving interleavings of two SLs indices."""
    for v in tuple(a) + tuple(b):
        if v < 2:
            raise IndexConstraintError("SLs entries must be >= 2")
    return Counter({w: int(c) for w, c in shuffle_words(tuple(a), tuple(b)).items()})


def ls_weight_classes(k: Index, l: Index) -> int:
    """Total exponent of ``A(theta)``: ``|k - 1_n - l|``."""
    return sum(k) - len(k) - sum(l)

