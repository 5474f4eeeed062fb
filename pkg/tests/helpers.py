"""Shared test utilities: a tiny expression reader and index enumerators."""
from __future__ import annotations

import itertools
import re
from fractions import Fraction

from logsine.combo import GaussianRational, SymCombo
from logsine.indices import compositions

_TERM_SPLIT = re.compile(r"\s*([+-])\s*")
_FACTOR = re.compile(r"(\d+/\d+|\d+)|(i)(?![a-zA-Z])|pi(?:\^(\d+))?|sigma(?:\^(\d+))?|zeta\(([\d, ]+)\)|Li\(([\d, ]+)\)")


def sym(text: str) -> SymCombo:
    """Read ``"-1/2 i pi sigma + 1/4 i sigma^2 + i zeta(2) - i Li(2)"``.

    Factors inside a term are separated by spaces; ``Li(k)`` means
    ``Li_k(e^{i sigma})``.
    """
    text = text.strip()
    if not text.startswith(("+", "-")):
        text = "+ " + text
    parts = _TERM_SPLIT.split(text)[1:]
    out = SymCombo()
    for sign, body in zip(parts[0::2], parts[1::2]):
        coeff = GaussianRational(Fraction(1 if sign == "+" else -1))
        sigma = pi = 0
        zetas, li = [], None
        pos = 0
        body = body.strip()
        while pos < len(body):
            if body[pos] == " ":
                pos += 1
                continue
            m = _FACTOR.match(body, pos)
            if not m:
                raise ValueError(f"cannot read {body[pos:]!r}")
            num, imag, pip, sgp, zt, lt = m.groups()
            tok = m.group(0)
            if num:
                coeff = coeff * Fraction(num)
            elif imag:
                coeff = coeff * GaussianRational(0, 1)
            elif tok.startswith("pi"):
                pi += int(pip or 1)
            elif tok.startswith("sigma"):
                sigma += int(sgp or 1)
            elif zt:
                zetas.append(tuple(int(v) for v in zt.split(",")))
            else:
                li = tuple(int(v) for v in lt.split(","))
            pos = m.end()
        out = out + SymCombo.term(coeff, sigma=sigma, pi=pi, zetas=zetas, li=li)
    return out


def kl_pairs(max_weight: int, min_weight: int = 1):
    """Every ``(k, l)`` with ``min_weight <= |k| <= max_weight`` and ``0 <= l_u <= k_u - 1``."""
    for w in range(min_weight, max_weight + 1):
        for k in compositions(w):
            for l in itertools.product(*(range(v) for v in k)):
                yield k, tuple(l)
