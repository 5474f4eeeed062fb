"""Generator sets, dimension counts, integer relations and named identities.

Everything numeric is evaluated at ``sigma = pi/3`` unless a set says
otherwise.  SLs constants go through :func:`sls_closed_form` and
:func:`combo_eval`, so any precision is reachable.
"""
from __future__ import annotations

import itertools
import json
import math
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache, reduce
from math import comb, factorial
from typing import Callable, Iterable, Optional, Sequence, Union

import mpmath
from mpmath import mp

from . import indices as ix
from .closed_form import ls_closed_form, sls_closed_form, sls_shuffle
from .combo import CGCombo, GaussianRational, SymCombo, _Combo, to_text
from .indices import Index, IndexConstraintError
from .numerics import PI_OVER_3, EvalContext, Sigma, cl_gl_eval, combo_eval, mpl_eval, mzv_eval

S_KINDS = ("Sprime", "So", "Se", "Hoffman")
L_KINDS = ("Lo", "Le", "Mo", "Me", "No", "Ne")
KINDS = S_KINDS + L_KINDS

DEFAULT_HEIGHT = 10**8
ESCALATION = (30, 60, 120)


class InsufficientPrecision(ArithmeticError):
    """PSLQ ran out of precision before certifying the requested height."""


# ----------------------------------------------------------------------------
# constants


@dataclass(frozen=True)
class ConstantExpr:
    """``pi^pi_pow * SLs(sls_index; pi/3)``, or an MZV for the Hoffman set."""

    pi_pow: int = 0
    sls_index: Index = ()
    role: str = ""
    zeta_index: Optional[Index] = None

    @property
    def name(self) -> str:
        if self.zeta_index is not None:
            return f"zeta({ix.format_index(self.zeta_index)})"
        parts = []
        if self.pi_pow:
            parts.append("pi" if self.pi_pow == 1 else f"pi^{self.pi_pow}")
        if self.sls_index:
            parts.append(f"SLs({ix.format_index(self.sls_index)})")
        return "*".join(parts) or "1"

    @property
    def weight(self) -> int:
        if self.zeta_index is not None:
            return sum(self.zeta_index)
        return self.pi_pow + sum(self.sls_index)

    def value(self, ctx: EvalContext):
        if self.zeta_index is not None:
            return mzv_eval(self.zeta_index, ctx)
        sls = combo_eval(sls_closed_form(self.sls_index), PI_OVER_3, ctx) if self.sls_index else 1
        with ctx.workdps():
            return mp.pi ** self.pi_pow * mp.re(sls)


@dataclass(frozen=True)
class NamedConstant:
    """An arbitrary real constant given by an evaluator."""

    name: str
    evaluator: Callable[[EvalContext], object]

    def value(self, ctx: EvalContext):
        # evaluators may do their own arithmetic; give it the working precision
        with ctx.workdps():
            return +self.evaluator(ctx)


def zeta_constant(k: Index) -> NamedConstant:
    k = tuple(k)
    return NamedConstant(f"zeta({ix.format_index(k)})", lambda ctx: mzv_eval(k, ctx))


def clausen_constant(kind: str, k: Index, sigma="pi/3") -> NamedConstant:
    k = tuple(k)
    s = Sigma.parse(sigma)
    return NamedConstant(f"{kind}_{ix.format_index(k)}({s})", lambda ctx: cl_gl_eval(kind, k, s, ctx))


@dataclass(frozen=True)
class LsDescriptor:
    """``sigma^sigma_pow * Ls_k^l(sigma)``."""

    k: Index
    l: Index
    sigma_pow: int = 0

    @property
    def name(self) -> str:
        head = f"sigma^{self.sigma_pow}*" if self.sigma_pow else ""
        if not self.k:
            return head.rstrip("*") or "1"
        return f"{head}Ls_{{{ix.format_index(self.k)}}}^{{({ix.format_index(self.l)})}}"

    @property
    def a_exponent(self) -> int:
        return sum(self.k) - len(self.k) - sum(self.l)

    def value(self, ctx: EvalContext, sigma=PI_OVER_3):
        s = Sigma.parse(sigma)
        c = SymCombo.sigma(self.sigma_pow) * ls_closed_form(self.k, self.l)
        return mp.re(combo_eval(c, s, ctx))


Member = Union[ConstantExpr, LsDescriptor]


@dataclass(frozen=True)
class GeneratorSet:
    kind: str
    weight: int
    depth: int
    members: tuple

    def __len__(self):
        return len(self.members)

    def __iter__(self):
        return iter(self.members)

    @property
    def names(self) -> list[str]:
        return [m.name for m in self.members]


# ----------------------------------------------------------------------------
# enumeration


def _odd_parts(total: int):
    return (c for c in ix.compositions(total, 3) if all(v % 2 for v in c))


def _ls_components(w: int, a_min: int, k_min: int):
    """All ``(k, l)`` of weight ``w`` with ``k_u >= k_min`` and ``k_u - 1 - l_u >= a_min``."""
    for k in ix.compositions(w, k_min):
        ranges = [range(0, ku - a_min) for ku in k]
        for l in itertools.product(*ranges):
            yield k, tuple(l)


def gen_set(kind: str, k: int, d: int) -> GeneratorSet:
    """Generators of the given kind at weight ``k`` and depth bound ``d``.

    S kinds and the Hoffman set are ordered by depth, then index.  L, M and N
    kinds are ordered by the sigma power, then depth, then ``(k, l)``.
    """
    if k < 0 or d < 0:
        raise ValueError("k and d must be >= 0")
    members: list = []
    if kind == "Sprime":
        for total in range(k, -1, -1):
            if (k - total) % 2:
                continue
            for c in _odd_parts(total):
                if len(c) <= d:
                    members.append(ConstantExpr(k - total, c, kind))
    elif kind in ("So", "Se"):
        parity = 1 if kind == "So" else 0
        for total in range(k, -1, -1):
            for c in ix.compositions(total, 2):
                if len(c) <= d and len(c) % 2 == parity:
                    members.append(ConstantExpr(k - total, c, kind))
    elif kind == "Hoffman":
        for c in ix.compositions(k, 2):
            if all(v in (2, 3) for v in c) and c.count(3) <= d:
                members.append(ConstantExpr(role=kind, zeta_index=c))
    elif kind in L_KINDS:
        parity = 1 if kind.endswith("o") else 0
        family = kind[0]
        a_min, k_min = (0, 1) if family == "L" else (1, 2)
        weights = range(k, -1, -1) if family == "M" else (k,)
        for w in weights:
            for kk, ll in _ls_components(w, a_min, k_min):
                a = sum(kk) - len(kk) - sum(ll)
                if a <= d and a % 2 == parity:
                    members.append(LsDescriptor(kk, ll, k - w))
    else:
        raise ValueError(f"unknown kind {kind!r}")
    if kind in S_KINDS:
        key = lambda m: (len(m.sls_index) if m.zeta_index is None else len(m.zeta_index),  # noqa: E731
                         m.sls_index, m.zeta_index or ())
    else:
        key = lambda m: (m.sigma_pow, len(m.k), m.k, m.l)  # noqa: E731
    members.sort(key=key)
    return GeneratorSet(kind, k, d, tuple(members))


# ----------------------------------------------------------------------------
# counting


@lru_cache(maxsize=None)
def _compositions_table(k: int, part_ok: Callable[[int], bool]):
    """``t[w][n]`` = compositions of ``w`` into ``n`` allowed parts."""
    t = [[0] * (k + 1) for _ in range(k + 1)]
    t[0][0] = 1
    for w in range(1, k + 1):
        for n in range(1, w + 1):
            t[w][n] = sum(t[w - p][n - 1] for p in range(1, w + 1) if part_ok(p))
    return t


def _odd3(p: int) -> bool:
    return p >= 3 and p % 2 == 1


def _ge2(p: int) -> bool:
    return p >= 2


@lru_cache(maxsize=None)
def _ls_table(k: int, a_min: int, k_min: int):
    """``t[w][a]`` = number of ``(k, l)`` of weight ``w`` and A-exponent ``a``."""
    t = [[0] * (k + 1) for _ in range(k + 1)]
    t[0][0] = 1
    for w in range(1, k + 1):
        for a in range(w + 1):
            s = 0
            for ku in range(k_min, w + 1):
                for au in range(a_min, min(ku - 1, a) + 1):
                    s += t[w - ku][a - au]
            t[w][a] = s
    return t


def count_seq(kind: str, k: int, d: int) -> int:
    """``|gen_set(kind, k, d)|`` by dynamic programming (no enumeration)."""
    if k < 0 or d < 0:
        raise ValueError("k and d must be >= 0")
    if kind == "Sprime":
        t = _compositions_table(k, _odd3)
        return sum(t[w][n] for w in range(k + 1) if (k - w) % 2 == 0 for n in range(min(d, w) + 1))
    if kind in ("So", "Se"):
        parity = 1 if kind == "So" else 0
        t = _compositions_table(k, _ge2)
        return sum(t[w][n] for w in range(k + 1) for n in range(min(d, w) + 1) if n % 2 == parity)
    if kind == "Hoffman":
        # twos and threes: choose positions of the threes
        total = 0
        for threes in range(min(d, k // 3) + 1):
            rest = k - 3 * threes
            if rest % 2 == 0:
                total += comb(threes + rest // 2, threes)
        return total
    if kind in L_KINDS:
        parity = 1 if kind.endswith("o") else 0
        family = kind[0]
        a_min, k_min = (0, 1) if family == "L" else (1, 2)
        t = _ls_table(k, a_min, k_min)
        weights = range(k + 1) if family == "M" else (k,)
        return sum(t[w][a] for w in weights for a in range(min(d, w) + 1) if a % 2 == parity)
    raise ValueError(f"unknown kind {kind!r}")


@lru_cache(maxsize=None)
def zagier_dim(k: int) -> int:
    if k < 0:
        raise ValueError("k must be >= 0")
    if k < 3:
        return (1, 0, 1)[k]
    return zagier_dim(k - 2) + zagier_dim(k - 3)


@lru_cache(maxsize=None)
def _ir(k: int) -> tuple[int, int]:
    if k < 2:
        return 0, 1
    i1, r1 = _ir(k - 1)
    i2, r2 = _ir(k - 2)
    return i1 + r2, r1 + i2


def irw_dims(k: int) -> tuple[int, int, int]:
    """``(I(k), R(k), W(k))``; raises if ``W(k) != F_{k+1}``."""
    if k < 0:
        raise ValueError("k must be >= 0")
    i, r = _ir(k)
    if i + r != ix.fibonacci(k + 1):
        raise ArithmeticError(f"W({k}) = {i + r} differs from F_{k + 1}")
    return i, r, i + r


def table_row(kind: str, max_k: int) -> list[int]:
    """Row ``k = 0..max_k`` of the dimension tables (diagonal ``d = k``)."""
    if kind in ("I", "R", "W"):
        pos = "IRW".index(kind)
        return [irw_dims(k)[pos] for k in range(max_k + 1)]
    if kind == "d":
        return [zagier_dim(k) for k in range(max_k + 1)]
    if kind in ("L", "M"):
        return [count_seq(kind + "o", k, k) + count_seq(kind + "e", k, k) for k in range(max_k + 1)]
    return [count_seq(kind, k, k) for k in range(max_k + 1)]


TABLE_KINDS = ("Lo", "Le", "L", "Mo", "Me", "M", "No", "Ne", "I", "R", "W", "d", "Sprime", "So", "Se", "Hoffman")


# ----------------------------------------------------------------------------
# integer relations


@dataclass
class RelationReport:
    basis: list[str]
    coeffs: Optional[list[int]]
    precision: int
    height_bound: int
    residual: str
    norm_bound: str = "0"
    expression: Optional[dict] = None
    extra: dict = field(default_factory=dict)

    @property
    def found(self) -> bool:
        return self.coeffs is not None

    def to_json_obj(self) -> dict:
        obj = {
            "basis": list(self.basis),
            "coeffs": None if self.coeffs is None else [int(c) for c in self.coeffs],
            "precision": self.precision,
            "height_bound": self.height_bound,
            "residual": self.residual,
            "norm_bound": self.norm_bound,
        }
        if self.expression is not None:
            obj["expression"] = {k: str(v) for k, v in self.expression.items()}
        obj.update(self.extra)
        return obj

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj(), sort_keys=False)


def _pslq(x: list, tol, max_norm, max_steps: int):
    """PSLQ on ``x`` at the current working precision.

    Returns ``(relation or None, norm_bound)`` where ``norm_bound`` is a lower
    bound for the Euclidean norm of any integer relation not yet found.
    """
    n = len(x)
    g = mp.sqrt(mp.mpf(4) / 3)
    scale = mp.sqrt(mp.fsum(v * v for v in x))
    x = [v / scale for v in x]
    s = [mp.sqrt(mp.fsum(x[j] ** 2 for j in range(k, n))) for k in range(n)]
    y = [v / s[0] for v in x]
    s = [v / s[0] for v in s]
    H = [[mp.zero] * (n - 1) for _ in range(n)]
    for i in range(n):
        for j in range(min(i + 1, n - 1)):
            if i == j:
                H[i][j] = s[j + 1] / s[j]
            else:
                H[i][j] = -y[i] * y[j] / (s[j] * s[j + 1])
    A = [[int(i == j) for j in range(n)] for i in range(n)]
    B = [[int(i == j) for j in range(n)] for i in range(n)]

    def reduce_rows(rows):
        for i in rows:
            for j in range(min(i - 1, n - 2), -1, -1):
                if H[j][j] == 0:
                    continue
                t = int(mp.nint(H[i][j] / H[j][j]))
                if not t:
                    continue
                y[j] += t * y[i]
                for c in range(j + 1):
                    H[i][c] -= t * H[j][c]
                for c in range(n):
                    A[i][c] -= t * A[j][c]
                    B[c][j] += t * B[c][i]

    reduce_rows(range(1, n))
    bound = mp.zero
    limit = mp.mpf(10) ** (mp.dps - 5)
    # the initial reduction alone already solves small-ratio inputs such as (6, 1)
    best = min(range(n), key=lambda i: abs(y[i]))
    if abs(y[best]) < tol:
        return [B[r][best] for r in range(n)], bound
    for _ in range(max_steps):
        m = max(range(n - 1), key=lambda i: g ** (i + 1) * abs(H[i][i]))
        y[m], y[m + 1] = y[m + 1], y[m]
        H[m], H[m + 1] = H[m + 1], H[m]
        A[m], A[m + 1] = A[m + 1], A[m]
        for row in B:
            row[m], row[m + 1] = row[m + 1], row[m]
        if m < n - 2:
            t0 = mp.sqrt(H[m][m] ** 2 + H[m][m + 1] ** 2)
            if t0 == 0:
                raise InsufficientPrecision("degenerate PSLQ step")
            t1, t2 = H[m][m] / t0, H[m][m + 1] / t0
            for i in range(m, n):
                t3, t4 = H[i][m], H[i][m + 1]
                H[i][m] = t1 * t3 + t2 * t4
                H[i][m + 1] = -t2 * t3 + t1 * t4
        reduce_rows(range(m + 1, n))
        best = min(range(n), key=lambda i: abs(y[i]))
        if abs(y[best]) < tol:
            return [B[r][best] for r in range(n)], bound
        diag = max(abs(H[j][j]) for j in range(n - 1))
        if diag > 0:
            bound = max(bound, 1 / diag)
        if bound > max_norm:
            return None, bound
        if max(abs(v) for row in A for v in row) > limit:
            raise InsufficientPrecision("PSLQ matrix entries exceeded the working precision")
    raise InsufficientPrecision("PSLQ step limit reached")


def _normalize(rel: list[int]) -> list[int]:
    g = reduce(math.gcd, (abs(v) for v in rel), 0) or 1
    rel = [v // g for v in rel]
    first = next((v for v in rel if v), 0)
    return [-v for v in rel] if first < 0 else rel


def _residual(values, rel):
    return abs(mp.fsum(c * v for c, v in zip(rel, values)))


def integer_relation(values: Sequence, precision: int, height_bound: int = DEFAULT_HEIGHT,
                     names: Optional[Sequence[str]] = None, max_steps: int = 20000) -> RelationReport:
    """Search for an integer relation of height at most ``height_bound``.

    ``values`` must be accurate to ``precision`` digits.  A ``None`` result
    means no relation of that height exists, certified by the PSLQ norm bound
    at this precision; it is never an unconditional independence claim.
    """
    if len(values) < 2:
        raise ValueError("need at least two values")
    names = list(names) if names is not None else [f"v{i}" for i in range(len(values))]
    n = len(values)
    with mp.workdps(precision):
        vals = [mp.re(mp.mpmathify(v)) for v in values]
        vmax = max(abs(v) for v in vals)
        if vmax == 0:
            raise ValueError("all values are zero")
        threshold = mp.mpf(10) ** (-(precision - 10)) * vmax
        for i, v in enumerate(vals):
            if abs(v) <= threshold:
                rel = [int(i == j) for j in range(n)]
                return RelationReport(names, rel, precision, height_bound, mpmath.nstr(abs(v), 5), "0")
        max_norm = mp.mpf(height_bound) * mp.sqrt(n)
        rel, bound = _pslq(vals, threshold / vmax, max_norm, max_steps)
        if rel is None:
            return RelationReport(names, None, precision, height_bound, "0", mpmath.nstr(bound, 5))
        rel = _normalize(rel)
        res = _residual(vals, rel)
        if max(abs(c) for c in rel) > height_bound or res > threshold:
            raise InsufficientPrecision(
                f"only a spurious relation of height {max(abs(c) for c in rel)} was found at {precision} digits")
        return RelationReport(names, rel, precision, height_bound, mpmath.nstr(res, 5), mpmath.nstr(bound, 5))


Constant = Union[ConstantExpr, NamedConstant, LsDescriptor]


def evaluate_all(constants: Sequence[Constant], precision: int, ctx: Optional[EvalContext] = None) -> list:
    base = ctx or EvalContext(precision)
    c = base.with_precision(precision)
    return [k.value(c) for k in constants]


def search_relation(constants: Sequence[Constant], precision: int = 30, height_bound: int = DEFAULT_HEIGHT,
                    ctx: Optional[EvalContext] = None, escalate: bool = True) -> RelationReport:
    """:func:`integer_relation` with precision escalation and a double-precision recheck."""
    names = [k.name for k in constants]
    ladder = [p for p in ESCALATION if p > precision] if escalate else []
    ctx = ctx or EvalContext(precision)
    last_error = None
    for p in [precision] + ladder:
        vals = evaluate_all(constants, p, ctx)
        try:
            rep = integer_relation(vals, p, height_bound, names)
        except InsufficientPrecision as exc:
            last_error = exc
            continue
        if rep.found:
            check = evaluate_all(constants, 2 * p, ctx)
            with mp.workdps(2 * p):
                res = _residual(check, rep.coeffs)
                vmax = max(abs(v) for v in check)
                if res > mp.mpf(10) ** (-(2 * p - 10)) * vmax:
                    last_error = InsufficientPrecision(f"relation at {p} digits failed the {2 * p}-digit recheck")
                    continue
                rep.extra["recheck_precision"] = 2 * p
                rep.extra["recheck_residual"] = mpmath.nstr(res, 5)
        return rep
    raise last_error or InsufficientPrecision("no precision level succeeded")


def express_target(target: Constant, basis: Union[GeneratorSet, Sequence[Constant]], precision: int = 60,
                   height_bound: int = DEFAULT_HEIGHT, ctx: Optional[EvalContext] = None) -> RelationReport:
    """Write ``target`` as a rational combination of ``basis``.

    The first coefficient of the relation must be nonzero; ``expression`` maps
    basis names to the rational coefficients.
    """
    members = list(basis.members if isinstance(basis, GeneratorSet) else basis)
    rep = search_relation([target] + members, precision, height_bound, ctx)
    if rep.found and rep.coeffs[0] != 0:
        c0 = rep.coeffs[0]
        rep.expression = {m.name: Fraction(-c, c0) for m, c in zip(members, rep.coeffs[1:]) if c}
    rep.extra["target"] = target.name
    return rep


def scan(kind: str, weight: int, depth: Optional[int] = None, precision: int = 60,
         height_bound: int = 10**6, out: Optional[str] = None, ctx: Optional[EvalContext] = None) -> RelationReport:
    """Relation search among the generators of one set; appends a JSON line to ``out``."""
    depth = weight if depth is None else depth
    gs = gen_set(kind, weight, depth)
    if kind not in S_KINDS:
        raise ValueError("scans run over S kinds and the Hoffman set")
    if len(gs) < 2:
        rep = RelationReport(gs.names, None, precision, height_bound, "0", "inf")
        rep.extra["note"] = "fewer than two generators"
    else:
        rep = search_relation(list(gs.members), precision, height_bound, ctx, escalate=False)
    rep.extra.update({"set": kind, "weight": weight, "depth": depth})
    if out:
        with open(out, "a", encoding="utf-8") as fh:
            fh.write(rep.to_json() + "\n")
    return rep


def sprime_product(a: ConstantExpr, b: ConstantExpr) -> Counter:
    """Expand the product of two S' generators via the SLs shuffle."""
    out: Counter = Counter()
    for idx, mult in sls_shuffle(a.sls_index, b.sls_index).items():
        out[ConstantExpr(a.pi_pow + b.pi_pow, idx, "Sprime")] += mult
    return out


# ----------------------------------------------------------------------------
# named identities


@dataclass(frozen=True)
class AtomValue:
    """``coeff * Li_k(e^{i sigma})`` (or Cl/Gl), any index with a convergent value."""

    kind: str
    index: Index
    coeff: GaussianRational = GaussianRational(Fraction(1))

    def evaluate(self, sigma: Sigma, ctx: EvalContext):
        if self.kind == "Li":
            v = mpl_eval(self.index, sigma, ctx)
        else:
            v = cl_gl_eval(self.kind, self.index, sigma, ctx)
        c = self.coeff
        with ctx.workdps():
            return v * mp.mpc(mp.mpf(c.re.numerator) / c.re.denominator, mp.mpf(c.im.numerator) / c.im.denominator)

    def text(self) -> str:
        return f"{self.kind}_{{{ix.format_index(self.index)}}}"


Side = Union[_Combo, AtomValue]


@dataclass(frozen=True)
class Identity:
    name: str
    params: tuple
    sigma: Sigma
    lhs: Side
    rhs: Side

    def evaluate(self, ctx: Optional[EvalContext] = None):
        ctx = ctx or EvalContext()

        def ev(side):
            return side.evaluate(self.sigma, ctx) if isinstance(side, AtomValue) else combo_eval(side, self.sigma, ctx)

        return ev(self.lhs), ev(self.rhs)

    def discrepancy(self, ctx: Optional[EvalContext] = None):
        a, b = self.evaluate(ctx)
        return abs(a - b)

    def text(self) -> str:
        def tx(side):
            return side.text() if isinstance(side, AtomValue) else to_text(side)

        return f"{tx(self.lhs)} = {tx(self.rhs)}  at sigma={self.sigma}"


def _sls_sym(k: int) -> SymCombo:
    return sls_closed_form((k,))


def ccs_identity(k: int) -> SymCombo:
    """``(-1)^k SLs(2k+3)`` at ``pi/3`` as a combination of zeta values and even powers of pi."""
    if k < 0:
        raise ValueError("k must be >= 0")
    f = factorial(2 * k + 1)
    c0 = Fraction(-1, 2) * f * (1 - Fraction(1, 2 ** (2 * k + 2))) * (1 - Fraction(1, 3 ** (2 * k + 2)))
    out = SymCombo.term(c0, zetas=[(2 * k + 3,)])
    for m in range(k + 1):
        c = Fraction((-1) ** m * f, factorial(2 * m) * 3 ** (2 * m))
        z = 2 * k + 3 - 2 * m
        out = out + SymCombo.term(c, pi=2 * m, zetas=[(z,)] if z else [])
    return out


def ccs_lhs(k: int) -> SymCombo:
    """``(-1)^k SLs(2k+3; sigma)`` as a closed form in ``sigma``."""
    return _sls_sym(2 * k + 3).scale((-1) ** k)


def special_identity(name: str, params) -> Identity:
    """Both sides of a named evaluation at ``pi/3`` (or ``2 pi x``)."""
    i = GaussianRational.i_power
    if name == "cl_odd":
        k = int(params[0] if isinstance(params, (tuple, list)) else params)
        if k < 1:
            raise ValueError("cl_odd needs k >= 1")
        c = Fraction(1, 2) * (1 - Fraction(1, 2 ** (2 * k))) * (1 - Fraction(1, 3 ** (2 * k)))
        return Identity(name, (k,), PI_OVER_3, CGCombo.term(cl=(2 * k + 1,)),
                        SymCombo.term(c, zetas=[(2 * k + 1,)]))
    if name == "cl_even_via_sls":
        k = int(params[0] if isinstance(params, (tuple, list)) else params)
        if k < 0:
            raise ValueError("cl_even_via_sls needs k >= 0")
        rhs = _sls_sym(2 * k + 2).scale(Fraction(-((-1) ** k), factorial(2 * k)))
        for j in range(k):
            e = 2 * k - 2 * j - 1
            rhs = rhs + SymCombo.term(Fraction((-1) ** (k - j - 1), factorial(e)), sigma=e, zetas=[(3 + 2 * j,)])
        return Identity(name, (k,), PI_OVER_3, CGCombo.term(cl=(2 * k + 2,)), rhs)
    if name == "gl_bernoulli":
        k, x = int(params[0]), Fraction(params[1]) if len(params) > 1 else Fraction(1, 6)
        if k < 2 or not 0 <= x <= 1:
            raise ValueError("gl_bernoulli needs k >= 2 and 0 <= x <= 1")
        c = (-1) ** (1 + k // 2) * 2 ** (k - 1) * ix.bernoulli_poly(k, x) / factorial(k)
        return Identity(name, (k, x), Sigma.pi(2 * x), CGCombo.term(gl=(k,)), SymCombo.term(c, pi=k))
    if name == "li_ones_two_ones":
        a, b = int(params[0]), int(params[1])
        if a < 0 or b < 0:
            raise ValueError("a and b must be >= 0")
        w = a + b + 2
        tail = SymCombo.term(i(a + b) * Fraction(1, 2 * factorial(w)), sigma=w)
        if b == 0:
            rhs = tail
            for j in range(a + 1):
                rhs = rhs - (SymCombo.term(i(a + 1) * Fraction(comb(a, j), factorial(a)), sigma=j) * _sls_sym(w - j))
        else:
            rhs = tail
            c1 = Fraction((-1) ** (b - 1), factorial(a + 1) * factorial(b - 1))
            for j in range(a + 2):
                rhs = rhs + SymCombo.term(i(a + b + 1) * (c1 * comb(a + 1, j)), sigma=j) * _sls_sym(w - j)
            c2 = Fraction((-1) ** b, factorial(a) * factorial(b))
            for j in range(a + 1):
                rhs = rhs - SymCombo.term(i(a + b + 1) * (c2 * comb(a, j)), sigma=j) * _sls_sym(w - j)
        index = (1,) * a + (2,) + (1,) * b
        return Identity(name, (a, b), PI_OVER_3, AtomValue("Li", index), rhs)
    raise ValueError(f"unknown identity {name!r}")


IDENTITY_NAMES = ("cl_odd", "cl_even_via_sls", "gl_bernoulli", "li_ones_two_ones")

__all__ = [
    "ConstantExpr",
    "NamedConstant",
    "LsDescriptor",
    "GeneratorSet",
    "RelationReport",
    "InsufficientPrecision",
    "Identity",
    "AtomValue",
    "gen_set",
    "count_seq",
    "zagier_dim",
    "irw_dims",
    "table_row",
    "integer_relation",
    "search_relation",
    "express_target",
    "scan",
    "sprime_product",
    "ccs_identity",
    "ccs_lhs",
    "special_identity",
    "zeta_constant",
    "clausen_constant",
    "evaluate_all",
    "KINDS",
    "TABLE_KINDS",
    "IDENTITY_NAMES",
]
