"""Arbitrary-precision values of MZVs, MPLs on the unit circle and whole combos.

Multiple polylogarithms are evaluated as iterated integrals of ``dt/t`` (letter
e0) and ``dt/(1-t)`` (letter e1).  All prefixes of all requested words are
carried together in a trie and transported along a path from 0 to ``z`` by
local Taylor series: each step stays within half the distance to the nearest
singularity (0 or 1), so every series converges at least like ``2^-m``.

At ``z = 1`` the path is cut at ``1/2``; the piece from ``1/2`` to ``1`` is
mapped back to ``[0, 1/2]`` by ``t -> 1 - t``, which turns a word into its dual
(reversed, letters swapped).
"""
from __future__ import annotations

import math
import re
import threading
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Optional

import mpmath
from mpmath import mp

from .combo import CGCombo, SymCombo, _Combo
from .indices import Index, bernoulli_poly, is_admissible  # noqa: F401  (re-export)
from .words import Word, dual_word, index_word

DEFAULT_PRECISION = 30
GUARD_DIGITS = 10
STEP_RATIO = 0.5


class EvaluationError(ArithmeticError):
    pass


# ----------------------------------------------------------------------------
# sigma tokens

_PI_RE = re.compile(r"^([+-]?)(\d*)pi(?:/(\d+))?$")


@dataclass(frozen=True)
class Sigma:
    """An exact real argument: ``value * pi`` (kind ``"pi"``) or a rational ``value``."""

    kind: str
    value: Fraction

    @classmethod
    def parse(cls, text) -> "Sigma":
        if isinstance(text, Sigma):
            return text
        if isinstance(text, (int, Fraction)):
            return cls("rat", Fraction(text))
        if isinstance(text, float):
            return cls("rat", Fraction(repr(text)))
        s = str(text).replace(" ", "").replace("*", "")
        m = _PI_RE.match(s)
        if m:
            num = int(m.group(2) or 1)
            den = int(m.group(3) or 1)
            return cls("pi", Fraction(-num if m.group(1) == "-" else num, den))
        try:
            return cls("rat", Fraction(s))
        except ValueError as exc:
            raise ValueError(f"cannot parse sigma {text!r}") from exc

    @classmethod
    def pi(cls, mult=1) -> "Sigma":
        return cls("pi", Fraction(mult))

    @property
    def key(self):
        return (self.kind, self.value)

    def mpf(self):
        v = mp.mpf(self.value.numerator) / self.value.denominator
        return v * mp.pi if self.kind == "pi" else v

    def __float__(self):
        return float(self.value) * (math.pi if self.kind == "pi" else 1.0)

    def exp_i(self):
        """``e^{i sigma}``, exact on the real/imaginary axes for pi multiples."""
        if self.kind == "pi":
            return mpmath.expjpi(mp.mpf(self.value.numerator) / self.value.denominator)
        return mpmath.expj(self.mpf())

    def is_multiple_of_2pi(self) -> bool:
        if self.kind == "pi":
            return self.value.denominator == 1 and self.value.numerator % 2 == 0
        return self.value == 0

    def __str__(self):
        if self.kind == "rat":
            return str(self.value)
        num, den = self.value.numerator, self.value.denominator
        head = {1: "", -1: "-"}.get(num, str(num))
        return f"{head}pi" + (f"/{den}" if den != 1 else "")


PI_OVER_3 = Sigma.pi(Fraction(1, 3))


# ----------------------------------------------------------------------------
# evaluation context


@dataclass
class EvalContext:
    """Working precision plus a cache of atom values.

    Cache entries remember the precision they were computed at and are only
    reused for requests at that precision or lower.
    """

    precision_digits: int = DEFAULT_PRECISION
    guard_digits: int = GUARD_DIGITS
    step_ratio: float = STEP_RATIO
    cache: dict = field(default_factory=dict)
    _lock: threading.RLock = field(default_factory=threading.RLock, repr=False)

    @property
    def dps(self) -> int:
        return self.precision_digits + self.guard_digits

    def workdps(self):
        return mp.workdps(self.dps)

    def lookup(self, key):
        with self._lock:
            hit = self.cache.get(key)
        if hit is not None and hit[0] >= self.precision_digits:
            return hit[1]
        return None

    def store(self, key, value):
        with self._lock:
            prev = self.cache.get(key)
            if prev is None or prev[0] < self.precision_digits:
                self.cache[key] = (self.precision_digits, value)

    def with_precision(self, digits: int) -> "EvalContext":
        """A context at another precision sharing this cache."""
        return EvalContext(digits, self.guard_digits, self.step_ratio, self.cache, self._lock)


_default_ctx: Optional[EvalContext] = None


def default_context() -> EvalContext:
    global _default_ctx
    if _default_ctx is None:
        _default_ctx = EvalContext()
    return _default_ctx


# ----------------------------------------------------------------------------
# iterated integrals by series transport


class _Trie:
    def __init__(self, words: Iterable[Word]):
        self.parent = [-1]
        self.letter = [-1]
        self.index: dict[Word, int] = {(): 0}
        for w in words:
            node = 0
            for p in range(1, len(w) + 1):
                pre = w[:p]
                nxt = self.index.get(pre)
                if nxt is None:
                    nxt = len(self.parent)
                    self.index[pre] = nxt
                    self.parent.append(node)
                    self.letter.append(w[p - 1])
                node = nxt
        self.depth = max((len(w) for w in self.index), default=0)

    def __len__(self):
        return len(self.parent)


def _terms_needed(ratio: float, depth: int, dps: int) -> int:
    target = (dps + 5) * math.log(10)
    lr = -math.log(ratio)
    m = 8
    while m * lr - depth * math.log(m + 1) < target:
        m += 1
    return m


def _series_step(trie: _Trie, values: list, c, h, M: int) -> list:
    """Values of every trie node at ``c + h`` given their values at ``c``."""
    zero = c == 0
    n = len(trie)
    coefs = [None] * n
    coefs[0] = [mp.one] + [mp.zero] * M
    inv_c = None if zero else 1 / c
    inv_1c = 1 / (1 - c)
    out = [mp.one] * n
    for node in range(1, n):
        par = coefs[trie.parent[node]]
        a = [mp.zero] * (M + 1)
        a[0] = mp.zero if zero else values[node]
        u = mp.zero
        if trie.letter[node] == 1:
            for m in range(M):
                u = (par[m] + u) * inv_1c
                a[m + 1] = u / (m + 1)
        elif zero:
            for m in range(M):
                a[m + 1] = par[m + 1] / (m + 1)
        else:
            for m in range(M):
                u = (par[m] - u) * inv_c
                a[m + 1] = u / (m + 1)
        coefs[node] = a
        acc = a[M]
        for m in range(M - 1, -1, -1):
            acc = acc * h + a[m]
        out[node] = acc
    return out


def iterated_integrals(words: Iterable[Word], z, ratio: float = STEP_RATIO) -> dict:
    """``L(w; z)`` for each word (and each of its prefixes) at the current precision.

    ``z`` must lie in the closed unit disc and differ from 1; the path runs
    radially from 0, which never meets the cut ``[1, inf)``.
    """
    words = [tuple(w) for w in words]
    for w in words:
        if w and w[0] != 1:
            raise EvaluationError("words must start with e1")
    trie = _Trie(words)
    z = mp.mpc(z)
    if abs(z - 1) < mp.mpf(10) ** (-mp.dps // 2):
        raise EvaluationError("z too close to 1 for direct transport")
    if abs(z) > 1 + mp.mpf(10) ** (-mp.dps + 5):
        raise EvaluationError("z outside the closed unit disc")
    values = [mp.one] + [mp.zero] * (len(trie) - 1)
    r0 = min(abs(z), mp.mpf(ratio))
    start = z if abs(z) <= ratio else z * ratio / abs(z)
    M = _terms_needed(max(float(r0), 1e-300) if abs(z) > 0 else ratio, trie.depth, mp.dps)
    values = _series_step(trie, values, mp.zero, start, M)
    c = start
    while abs(z - c) > 0:
        radius = min(abs(c), abs(1 - c))
        dist = abs(z - c)
        if dist <= ratio * radius:
            h, rho = z - c, float(dist / radius)
        else:
            h, rho = (z - c) / dist * ratio * radius, ratio
        M = _terms_needed(max(rho, 1e-300), trie.depth, mp.dps)
        values = _series_step(trie, values, c, h, M)
        c = z if h == z - c else c + h
    return {w: values[i] for w, i in trie.index.items()}


def _mzv_from_half(words: list[Word], ratio: float) -> dict:
    """MZVs of admissible words by cutting the path ``[0, 1]`` at 1/2."""
    need = set()
    for w in words:
        for j in range(len(w) + 1):
            need.add(w[:j])
            need.add(dual_word(w[j:]))
    vals = iterated_integrals(need, mp.mpf(1) / 2, ratio)
    out = {}
    for w in words:
        out[w] = mp.re(mp.fsum(vals[w[:j]] * vals[dual_word(w[j:])] for j in range(len(w) + 1)))
    return out


# ----------------------------------------------------------------------------
# public evaluators


def mzv_batch(ks: Iterable[Index], ctx: Optional[EvalContext] = None) -> dict:
    ctx = ctx or default_context()
    ks = [tuple(k) for k in ks]
    out, todo = {}, []
    for k in ks:
        if not is_admissible(k):
            raise EvaluationError(f"zeta{k} diverges: index is not admissible")
        hit = ctx.lookup(("zeta", k))
        if not k:
            out[k] = mp.one
        elif hit is not None:
            out[k] = hit
        else:
            todo.append(k)
    if todo:
        with ctx.workdps():
            vals = _mzv_from_half([index_word(k) for k in todo], ctx.step_ratio)
        for k in todo:
            v = vals[index_word(k)]
            ctx.store(("zeta", k), v)
            out[k] = v
    return out


def mzv_eval(k: Index, ctx: Optional[EvalContext] = None):
    """``zeta(k)`` to ``ctx.precision_digits`` correct digits (as an mpf)."""
    return mzv_batch([k], ctx)[tuple(k)]


def mpl_batch(ks: Iterable[Index], sigma, ctx: Optional[EvalContext] = None) -> dict:
    ctx = ctx or default_context()
    sigma = Sigma.parse(sigma)
    ks = [tuple(k) for k in ks]
    if sigma.is_multiple_of_2pi():
        for k in ks:
            if not is_admissible(k):
                raise EvaluationError(f"Li{k}(1) diverges: index is not admissible")
        return {k: mp.mpc(v) for k, v in mzv_batch(ks, ctx).items()}
    out, todo = {}, []
    for k in ks:
        if not k:
            out[k] = mp.mpc(1)
            continue
        hit = ctx.lookup(("li", k, sigma.key))
        if hit is not None:
            out[k] = hit
        else:
            todo.append(k)
    if todo:
        with ctx.workdps():
            vals = iterated_integrals([index_word(k) for k in todo], sigma.exp_i(), ctx.step_ratio)
        for k in todo:
            v = vals[index_word(k)]
            ctx.store(("li", k, sigma.key), v)
            out[k] = v
    return out


def mpl_eval(k: Index, sigma, ctx: Optional[EvalContext] = None):
    """``Li_k(e^{i sigma})`` as an mpc."""
    return mpl_batch([k], sigma, ctx)[tuple(k)]


def mpl_direct(k: Index, z, terms: int):
    """Truncated nested sum for ``Li_k(z)``; a cross-check for ``|z| < 1``."""
    k = tuple(k)
    z = mp.mpc(z)
    n = len(k)
    if n == 0:
        return mp.mpc(1)
    # partial[u] after processing m: sum over m_1 < ... < m_u <= m
    partial = [mp.mpf(1)] + [mp.zero] * n
    total = mp.zero
    zm = mp.one
    for m in range(1, terms + 1):
        zm *= z
        for u in range(n, 0, -1):
            term = partial[u - 1] / mp.mpf(m) ** k[u - 1]
            if u == n:
                total += term * zm
            partial[u] += term
    return total


def cl_gl_eval(kind: str, k: Index, sigma, ctx: Optional[EvalContext] = None):
    """Multiple Clausen (``"Cl"``) or Glaisher (``"Gl"``) function at ``sigma``."""
    v = mpl_eval(k, sigma, ctx)
    even = sum(k) % 2 == 0
    if kind == "Cl":
        return mp.im(v) if even else mp.re(v)
    if kind == "Gl":
        return mp.re(v) if even else mp.im(v)
    raise ValueError(f"unknown kind {kind!r}")


def combo_eval(c: _Combo, sigma, ctx: Optional[EvalContext] = None):
    """Numeric value of a SymCombo or CGCombo at ``sigma`` (an mpc)."""
    ctx = ctx or default_context()
    sigma = Sigma.parse(sigma)
    zetas, fns = set(), set()
    for m in c:
        zetas.update(m.zetas)
        if m.atom:
            fns.add(m.atom[1])
    zvals = mzv_batch(zetas, ctx)
    fvals = mpl_batch(fns, sigma, ctx) if fns else {}
    with ctx.workdps():
        s = sigma.mpf()
        total = mp.mpc(0)
        for m, coeff in c.items():
            if isinstance(c, CGCombo):
                v = mp.mpf(coeff.numerator) / coeff.denominator
            else:
                v = mp.mpc(mp.mpf(coeff.re.numerator) / coeff.re.denominator,
                           mp.mpf(coeff.im.numerator) / coeff.im.denominator)
            if m.sigma_pow:
                v *= s ** m.sigma_pow
            if m.pi_pow:
                v *= mp.pi ** m.pi_pow
            for z in m.zetas:
                v *= zvals[z]
            if m.atom:
                kind, k = m.atom
                li = fvals[k]
                if kind == "Li":
                    v *= li
                else:
                    even = sum(k) % 2 == 0
                    take_im = (kind == "Cl") == even
                    v *= mp.im(li) if take_im else mp.re(li)
            total += v
        return +total


def nstr(x, digits: int) -> str:
    """Decimal string with exactly ``digits`` significant digits."""
    return mpmath.nstr(x, digits, strip_zeros=False, min_fixed=-mp.inf, max_fixed=mp.inf)


__all__ = [
    "Sigma",
    "PI_OVER_3",
    "EvalContext",
    "EvaluationError",
    "default_context",
    "mzv_eval",
    "mzv_batch",
    "mpl_eval",
    "mpl_batch",
    "mpl_direct",
    "bernoulli_poly",
    "cl_gl_eval",
    "combo_eval",
    "iterated_integrals",
    "nstr",
    "SymCombo",
]
