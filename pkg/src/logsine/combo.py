"""Exact linear combinations of sigma/pi/zeta/polylogarithm monomials.

A :class:`SymCombo` is a finite Q(i)-linear combination of monomials

    sigma^a * pi^b * zeta(k_1) * ... * zeta(k_s) * [Li_k(e^{i sigma})]

with at most one polylogarithm factor.  :class:`CGCombo` has the same shape,
with rational coefficients and a Clausen or Glaisher factor in place of the
polylogarithm.  Zeta atoms are kept as they are; :meth:`SymCombo.normalized`
is the one place where even zeta values are rewritten as powers of pi.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Optional

from .indices import Index, bernoulli_number, format_index, is_admissible


class ComboError(ValueError):
    pass


def _frac(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, str):
        return Fraction(x)
    if isinstance(x, int):
        return Fraction(x)
    raise TypeError(f"cannot use {type(x).__name__} as an exact coefficient")


@dataclass(frozen=True)
class GaussianRational:
    re: Fraction = Fraction(0)
    im: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "re", _frac(self.re))
        object.__setattr__(self, "im", _frac(self.im))

    @classmethod
    def coerce(cls, x) -> "GaussianRational":
        if isinstance(x, GaussianRational):
            return x
        return cls(_frac(x), Fraction(0))

    @classmethod
    def i_power(cls, n: int) -> "GaussianRational":
        return _I_POWERS[n % 4]

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __add__(self, other):
        o = GaussianRational.coerce(other)
        return GaussianRational(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __sub__(self, other):
        return self + (-GaussianRational.coerce(other))

    def __rsub__(self, other):
        return GaussianRational.coerce(other) - self

    def __mul__(self, other):
        o = GaussianRational.coerce(other)
        return GaussianRational(self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def conjugate(self):
        return GaussianRational(self.re, -self.im)

    def __repr__(self):
        if not self.im:
            return str(self.re)
        if not self.re:
            return f"{self.im}i"
        return f"({self.re}{'+' if self.im > 0 else '-'}{abs(self.im)}i)"


_I_POWERS = (
    GaussianRational(1, 0),
    GaussianRational(0, 1),
    GaussianRational(-1, 0),
    GaussianRational(0, -1),
)
I = _I_POWERS[1]

ATOM_KINDS = ("Li", "Cl", "Gl")


@dataclass(frozen=True)
class Monomial:
    """``sigma^sigma_pow * pi^pi_pow * prod(zeta(z) for z in zetas) * atom``.

    ``atom`` is ``None`` or ``(kind, index)`` with kind one of Li/Cl/Gl; the
    Li argument is always ``e^{i sigma}`` and Cl/Gl are evaluated at ``sigma``.
    """

    sigma_pow: int = 0
    pi_pow: int = 0
    zetas: tuple[Index, ...] = ()
    atom: Optional[tuple[str, Index]] = None

    def __post_init__(self):
        if self.sigma_pow < 0 or self.pi_pow < 0:
            raise ComboError("negative power in monomial")
        zs = tuple(sorted(tuple(z) for z in self.zetas if len(z)))
        for z in zs:
            if not is_admissible(z):
                raise ComboError(f"zeta{z} is not admissible")
        object.__setattr__(self, "zetas", zs)
        atom = self.atom
        if atom is not None:
            kind, k = atom[0], tuple(atom[1])
            if kind not in ATOM_KINDS:
                raise ComboError(f"unknown atom kind {kind!r}")
            if not k:
                atom = None
            elif not is_admissible(k):
                raise ComboError(f"{kind}{k} is not admissible")
            else:
                atom = (kind, k)
        object.__setattr__(self, "atom", atom)

    @property
    def li(self) -> Optional[Index]:
        return self.atom[1] if self.atom and self.atom[0] == "Li" else None

    def sort_key(self):
        atom_key = () if self.atom is None else (1, self.atom[0], self.atom[1])
        return (self.sigma_pow, self.pi_pow, self.zetas, atom_key)

    def __mul__(self, other: "Monomial") -> "Monomial":
        if self.atom is not None and other.atom is not None:
            raise ComboError("product of two monomials that both carry a function atom")
        return Monomial(
            self.sigma_pow + other.sigma_pow,
            self.pi_pow + other.pi_pow,
            self.zetas + other.zetas,
            self.atom or other.atom,
        )

    def weight(self) -> int:
        w = self.sigma_pow + self.pi_pow + sum(sum(z) for z in self.zetas)
        if self.atom:
            w += sum(self.atom[1])
        return w


ONE = Monomial()


class _Combo:
    """Shared machinery; subclasses fix the coefficient ring."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms=None):
        acc: dict[Monomial, object] = {}
        if terms:
            items = terms.items() if isinstance(terms, dict) else terms
            for mono, c in items:
                c = self._coerce(c)
                if not c:
                    continue
                self._check(mono)
                prev = acc.get(mono)
                acc[mono] = c if prev is None else prev + c
        self._terms = {m: acc[m] for m in sorted(acc, key=Monomial.sort_key) if acc[m]}
        self._hash = None

    @staticmethod
    def _coerce(c):
        raise NotImplementedError

    def _check(self, mono: Monomial) -> None:
        pass

    # container protocol
    def items(self):
        return self._terms.items()

    def __iter__(self):
        return iter(self._terms)

    def __len__(self):
        return len(self._terms)

    def __getitem__(self, m):
        return self._terms[m]

    def coeff(self, m: Monomial):
        return self._terms.get(m, self._coerce(0))

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def __eq__(self, other):
        if type(other) is type(self):
            return self._terms == other._terms
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self == type(self).constant(other)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((type(self).__name__, tuple(self._terms.items())))
        return self._hash

    @classmethod
    def constant(cls, c):
        return cls({ONE: c})

    @classmethod
    def zero(cls):
        return cls()

    def _lift(self, other):
        if isinstance(other, type(self)):
            return other
        if isinstance(other, _Combo):
            raise TypeError(f"cannot combine {type(self).__name__} with {type(other).__name__}")
        return type(self).constant(other)

    def __add__(self, other):
        other = self._lift(other)
        out = dict(self._terms)
        for m, c in other._terms.items():
            out[m] = out[m] + c if m in out else c
        return type(self)(out)

    __radd__ = __add__

    def __neg__(self):
        return type(self)({m: -c for m, c in self._terms.items()})

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def scale(self, c):
        c = self._coerce(c)
        return type(self)({m: c * v for m, v in self._terms.items()})

    def __mul__(self, other):
        if not isinstance(other, _Combo):
            return self.scale(other)
        other = self._lift(other)
        out: dict[Monomial, object] = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                m = m1 * m2
                c = c1 * c2
                out[m] = out[m] + c if m in out else c
        return type(self)(out)

    def __rmul__(self, other):
        return self.scale(other)

    def __pow__(self, n: int):
        out = type(self).constant(1)
        for _ in range(n):
            out = out * self
        return out

    def has_sigma(self) -> bool:
        return any(m.sigma_pow for m in self._terms)

    def has_atoms(self) -> bool:
        return any(m.atom for m in self._terms)

    def __repr__(self):
        return f"{type(self).__name__}({to_text(self)})"


class SymCombo(_Combo):
    """Q(i)-linear combination of sigma/pi/zeta/Li monomials."""

    __slots__ = ()

    @staticmethod
    def _coerce(c):
        return GaussianRational.coerce(c)

    def _check(self, mono):
        if mono.atom is not None and mono.atom[0] != "Li":
            raise ComboError("SymCombo only carries Li atoms")

    @classmethod
    def term(cls, coeff=1, sigma=0, pi=0, zetas=(), li=None) -> "SymCombo":
        return cls({Monomial(sigma, pi, tuple(zetas), None if li is None else ("Li", tuple(li))): coeff})

    @classmethod
    def sigma(cls, power: int = 1):
        return cls.term(1, sigma=power)

    @classmethod
    def zeta(cls, k: Index):
        return cls.term(1, zetas=(tuple(k),))

    @classmethod
    def li(cls, k: Index):
        return cls.term(1, li=tuple(k))

    def is_real_rational(self) -> bool:
        return all(not c.im for c in self._terms.values())

    def substitute_sigma(self, point: str) -> "SymCombo":
        """Substitute ``sigma = 0`` or ``sigma = 2 pi``.

        Li atoms become zeta atoms (their indices are admissible, so
        ``Li_k(1) = zeta(k)``); at ``2 pi`` each ``sigma^a`` becomes ``2^a pi^a``.
        """
        if point not in ("0", "2pi"):
            raise ValueError("point must be '0' or '2pi'")
        out: dict[Monomial, GaussianRational] = {}
        for m, c in self._terms.items():
            if point == "0" and m.sigma_pow:
                continue
            zetas = m.zetas + ((m.atom[1],) if m.atom else ())
            if point == "2pi":
                c = c * (2 ** m.sigma_pow)
                mono = Monomial(0, m.pi_pow + m.sigma_pow, zetas)
            else:
                mono = Monomial(0, m.pi_pow, zetas)
            out[mono] = out[mono] + c if mono in out else c
        return SymCombo(out)

    def normalized(self) -> "SymCombo":
        """Rewrite depth-one even zeta values as rational multiples of ``pi^(2n)``."""
        out = SymCombo()
        for m, c in self._terms.items():
            factor = Fraction(1)
            pi_pow = m.pi_pow
            kept = []
            for z in m.zetas:
                if len(z) == 1 and z[0] % 2 == 0:
                    factor *= even_zeta_rational(z[0])
                    pi_pow += z[0]
                else:
                    kept.append(z)
            out = out + SymCombo({Monomial(m.sigma_pow, pi_pow, tuple(kept), m.atom): c * factor})
        return out

    def real_part(self) -> "SymCombo":
        """Real part of the coefficients (only meaningful without Li atoms)."""
        return SymCombo({m: GaussianRational(c.re) for m, c in self._terms.items()})

    def imag_part(self) -> "SymCombo":
        return SymCombo({m: GaussianRational(c.im) for m, c in self._terms.items()})

    def conjugate(self) -> "SymCombo":
        if self.has_atoms():
            raise ComboError("conjugation of Li atoms is not symbolic")
        return SymCombo({m: c.conjugate() for m, c in self._terms.items()})

    # serialization
    def to_json_obj(self) -> list[dict]:
        out = []
        for m, c in self._terms.items():
            out.append(
                {
                    "coeff": {"re": _fmt_frac(c.re), "im": _fmt_frac(c.im)},
                    "sigma_pow": m.sigma_pow,
                    "pi_pow": m.pi_pow,
                    "zetas": [list(z) for z in m.zetas],
                    "li": None if m.li is None else list(m.li),
                }
            )
        return out

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj())

    @classmethod
    def from_json_obj(cls, obj) -> "SymCombo":
        terms = []
        for t in obj:
            c = GaussianRational(Fraction(t["coeff"]["re"]), Fraction(t["coeff"]["im"]))
            li = t.get("li")
            mono = Monomial(
                int(t["sigma_pow"]),
                int(t["pi_pow"]),
                tuple(tuple(z) for z in t["zetas"]),
                None if li is None else ("Li", tuple(li)),
            )
            terms.append((mono, c))
        return cls(terms)

    @classmethod
    def from_json(cls, text: str) -> "SymCombo":
        return cls.from_json_obj(json.loads(text))


class CGCombo(_Combo):
    """Q-linear combination of sigma/pi/zeta monomials with optional Cl/Gl atoms."""

    __slots__ = ()

    @staticmethod
    def _coerce(c):
        if isinstance(c, GaussianRational):
            if c.im:
                raise ComboError("CGCombo coefficients are rational")
            return c.re
        return _frac(c)

    def _check(self, mono):
        if mono.atom is not None and mono.atom[0] == "Li":
            raise ComboError("CGCombo carries Cl/Gl atoms only")

    @classmethod
    def term(cls, coeff=1, sigma=0, pi=0, zetas=(), cl=None, gl=None) -> "CGCombo":
        atom = ("Cl", tuple(cl)) if cl is not None else ("Gl", tuple(gl)) if gl is not None else None
        return cls({Monomial(sigma, pi, tuple(zetas), atom): coeff})

    def to_json_obj(self) -> list[dict]:
        out = []
        for m, c in self._terms.items():
            out.append(
                {
                    "coeff": _fmt_frac(c),
                    "sigma_pow": m.sigma_pow,
                    "pi_pow": m.pi_pow,
                    "zetas": [list(z) for z in m.zetas],
                    "atom": None if m.atom is None else {"kind": m.atom[0], "index": list(m.atom[1])},
                }
            )
        return out


def _fmt_frac(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


def even_zeta_rational(k: int) -> Fraction:
    """``zeta(k) / pi^k`` for even ``k >= 2``."""
    if k < 2 or k % 2:
        raise ValueError("k must be even and >= 2")
    n = k // 2
    sign = 1 if n % 2 else -1
    return sign * bernoulli_number(k) * Fraction(2 ** (k - 1), factorial(k))


def cl_gl_split(c: SymCombo) -> tuple[CGCombo, CGCombo]:
    """Split into real and imaginary parts with Li atoms replaced by Cl/Gl.

    sigma, pi and zeta atoms are real; ``Li_k(e^{i sigma})`` is ``Gl_k + i Cl_k``
    for even weight and ``Cl_k + i Gl_k`` for odd weight.
    """
    re_terms: list[tuple[Monomial, Fraction]] = []
    im_terms: list[tuple[Monomial, Fraction]] = []
    for m, coeff in c.items():
        a, b = coeff.re, coeff.im
        if m.atom is None:
            re_terms.append((m, a))
            im_terms.append((m, b))
            continue
        k = m.atom[1]
        real_kind, imag_kind = ("Gl", "Cl") if sum(k) % 2 == 0 else ("Cl", "Gl")
        m_re = Monomial(m.sigma_pow, m.pi_pow, m.zetas, (real_kind, k))
        m_im = Monomial(m.sigma_pow, m.pi_pow, m.zetas, (imag_kind, k))
        # (a + bi)(X + iY) = (aX - bY) + i(aY + bX)
        re_terms += [(m_re, a), (m_im, -b)]
        im_terms += [(m_im, a), (m_re, b)]
    return CGCombo(re_terms), CGCombo(im_terms)


# ----------------------------------------------------------------------------
# text and LaTeX rendering


def _atom_text(kind: str, k: Index, latex: bool) -> str:
    if latex:
        name = {"Li": r"{\rm Li}", "Cl": r"{\rm Cl}", "Gl": r"{\rm Gl}"}[kind]
        arg = r"e^{i \sigma}" if kind == "Li" else r"\sigma"
        sub = " , ".join(str(v) for v in k)
        return f"{name}_{{{sub}}}({arg})"
    arg = "e^(i*sigma)" if kind == "Li" else "sigma"
    return f"{kind}_{format_index(k)}({arg})"


def _factors(m: Monomial, latex: bool) -> list[str]:
    out = []
    if latex:
        if m.pi_pow:
            out.append(r"\pi" if m.pi_pow == 1 else rf"\pi^{{{m.pi_pow}}}")
        if m.sigma_pow:
            out.append(r"\sigma" if m.sigma_pow == 1 else rf"\sigma^{{{m.sigma_pow}}}")
        out += [rf"\zeta({' , '.join(map(str, z))})" for z in m.zetas]
    else:
        if m.pi_pow:
            out.append("pi" if m.pi_pow == 1 else f"pi^{m.pi_pow}")
        if m.sigma_pow:
            out.append("sigma" if m.sigma_pow == 1 else f"sigma^{m.sigma_pow}")
        out += [f"zeta({format_index(z)})" for z in m.zetas]
    if m.atom:
        out.append(_atom_text(m.atom[0], m.atom[1], latex))
    return out


def _frac_text(x: Fraction, latex: bool) -> str:
    if x.denominator == 1:
        return str(x.numerator)
    if latex:
        return rf"\frac{{{x.numerator}}}{{{x.denominator}}}"
    return f"{x.numerator}/{x.denominator}"


def _render(c: _Combo, latex: bool) -> str:
    if c.is_zero():
        return "0"
    sep = " " if latex else "*"
    pieces = []
    for m, coeff in c.items():
        if isinstance(coeff, GaussianRational) and coeff.re and coeff.im:
            inner = _render(SymCombo.constant(coeff.re) + SymCombo.term(GaussianRational(0, coeff.im)), latex)
            sign, body = "+", [f"({inner})"]
        else:
            if isinstance(coeff, GaussianRational):
                val, imag = (coeff.im, True) if coeff.im else (coeff.re, False)
            else:
                val, imag = coeff, False
            sign = "-" if val < 0 else "+"
            mag = abs(val)
            body = []
            if mag != 1 or (not imag and m == ONE):
                body.append(_frac_text(mag, latex))
            if imag:
                body.append("i")
        body += _factors(m, latex)
        pieces.append((sign, sep.join(body)))
    out = ("-" if pieces[0][0] == "-" else "") + pieces[0][1]
    for sign, body in pieces[1:]:
        out += f" {sign} {body}"
    return out


def to_text(c: _Combo) -> str:
    return _render(c, latex=False)


def to_latex(c: _Combo) -> str:
    return _render(c, latex=True)
