"""Brute-force double-precision quadrature of the defining nested integrals.

This module never touches the symbolic engine.  A nested integral
``int_0^sigma g_n(t_n) int_0^{t_n} g_{n-1} ... int_0^{t_2} g_1`` is computed as a
cascade ``G_u(t) = int_0^t g_u(s) G_{u-1}(s) ds`` on a single panel grid: the
integrand of each level is sampled at the Gauss-Legendre nodes, turned into a
Legendre series per panel and integrated exactly, which gives ``G_u`` at the
same nodes for the next level.

``A(t) = log|2 sin(t/2)|`` is singular at every multiple of 2 pi.  The grid
breaks ``[0, |sigma|]`` at multiples of pi; each piece is attached to its
nearest multiple of 2 pi (its anchor), nodes are stored as offsets from the
anchor so ``A`` keeps full relative accuracy, and panels shrink geometrically
toward the anchor.  Two grids of different order and grading are compared to
produce the error estimate.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Sequence

import numpy as np
from numpy.polynomial import legendre as npleg

from .indices import Index, IndexConstraintError

TWO_PI = 2.0 * math.pi
MAX_TARGET_DIGITS = 15

# (order, grading ratio) per refinement level
LEVELS = ((20, 0.3), (28, 0.2), (36, 0.15))


class QuadratureError(ArithmeticError):
    """The requested tolerance was not reached within the refinement budget."""


@dataclass(frozen=True)
class QuadResult:
    value: complex
    error_estimate: float
    evaluations: int

    @property
    def real(self) -> float:
        return float(np.real(self.value))


@lru_cache(maxsize=None)
def _rule(p: int):
    """Gauss-Legendre rule on [-1, 1] plus its cumulative integration matrix."""
    x, w = npleg.leggauss(p)
    vander = npleg.legvander(x, p - 1)
    cum = np.empty((p, p))
    for m in range(p):
        e = np.zeros(p)
        e[m] = 1.0
        cum[:, m] = npleg.legval(x, npleg.legint(e, lbnd=-1))
    return x, w, cum @ np.linalg.inv(vander)


@dataclass
class _Grid:
    anchor: np.ndarray  # anchor multiple m, per panel
    lo: np.ndarray  # panel bounds as offsets from 2 pi m
    hi: np.ndarray
    order: int

    @classmethod
    def build(cls, length: float, order: int, ratio: float, tiny: float = 1e-15) -> "_Grid":
        anchors, los, his = [], [], []
        j = 0
        while j * math.pi < length:
            a, b = j * math.pi, min((j + 1) * math.pi, length)
            m = (j + 1) // 2
            base = TWO_PI * m
            lo, hi = a - base, b - base
            if j % 2 == 0:
                near, far = lo, hi  # anchor on the left: lo == 0
            else:
                near, far = hi, lo  # anchor on the right: hi <= 0
            pts = _graded(near, far, ratio, tiny)
            pts.sort()
            for u, v in zip(pts, pts[1:]):
                anchors.append(m)
                los.append(u)
                his.append(v)
            j += 1
        return cls(np.array(anchors), np.array(los), np.array(his), order)

    def nodes(self):
        x, w, cum = _rule(self.order)
        half = (self.hi - self.lo) / 2.0
        t = (self.lo + self.hi)[:, None] / 2.0 + half[:, None] * x[None, :]
        theta = TWO_PI * self.anchor[:, None] + t
        return t, theta, half, w, cum


def _graded(near: float, far: float, ratio: float, tiny: float) -> list[float]:
    """Points from ``far`` to ``near`` with geometric spacing toward ``near``.

    ``near`` is the end closest to the anchor (offset 0).  At a singular end
    (``near == 0``) panels shrink down to ``tiny``; otherwise grading stops once
    the panel is small relative to the distance from the singularity.
    """
    span = far - near
    dist = abs(near)
    stop = tiny if dist == 0 else 0.5 * dist
    pts = [far]
    step = span
    while abs(step) * ratio > stop:
        step *= ratio
        pts.append(near + step)
    pts.append(near)
    return pts


def log_2sin(t: np.ndarray) -> np.ndarray:
    """``A`` at offset ``t`` from a multiple of 2 pi."""
    return np.log(np.abs(2.0 * np.sin(t / 2.0)))


Integrand = Callable[[np.ndarray, np.ndarray], np.ndarray]


def _cascade(levels: Sequence[Integrand], length: float, sign: float, order: int, ratio: float,
             tiny: float = 1e-15):
    grid = _Grid.build(length, order, ratio, tiny)
    t, theta, half, w, cum = grid.nodes()
    theta_signed = sign * theta
    g_prev = np.ones_like(t, dtype=complex)
    total = 1.0 + 0j
    evals = 0
    for f in levels:
        g = f(t, theta_signed) * g_prev
        evals += g.size
        totals = (g @ w) * half * sign
        starts = np.concatenate(([0.0], np.cumsum(totals)[:-1]))
        g_prev = starts[:, None] + (g @ cum.T) * half[:, None] * sign
        total = totals.sum()
    return complex(total), evals


def _run(levels: Sequence[Integrand], sigma: float, target_digits: int) -> QuadResult:
    if target_digits > MAX_TARGET_DIGITS:
        raise ValueError(f"target_digits is capped at {MAX_TARGET_DIGITS}")
    sigma = float(sigma)
    if not levels:
        return QuadResult(1.0 + 0j, 0.0, 0)
    if sigma == 0.0:
        return QuadResult(0j, 0.0, 0)
    sign = 1.0 if sigma > 0 else -1.0
    length = abs(sigma)
    evals = 0
    prev = None
    err = math.inf
    for order, ratio in LEVELS:
        val, n = _cascade(levels, length, sign, order, ratio)
        evals += n
        if prev is not None:
            err = abs(val - prev)
            tol = 10.0 ** (-target_digits) * max(1.0, abs(val))
            if err <= tol:
                return QuadResult(val, err, evals)
        prev = val
    raise QuadratureError(f"estimated error {err:.3g} above 1e-{target_digits}")


def _check_kl(k: Index, l: Index) -> None:
    if len(k) != len(l):
        raise IndexConstraintError("depth mismatch")
    if any(ku - 1 - lu < 0 or lu < 0 for ku, lu in zip(k, l)):
        raise IndexConstraintError("need 0 <= l_u <= k_u - 1")


def ls_quad(k: Index, l: Index, sigma: float, target_digits: int = 12) -> QuadResult:
    """``(-1)^n`` times the nested integral of ``t^l_u A(t)^(k_u-1-l_u)``; a real value."""
    k, l = tuple(k), tuple(l)
    _check_kl(k, l)
    levels = [_ls_level(lu, ku - 1 - lu) for ku, lu in zip(k, l)]
    r = _run(levels, sigma, target_digits)
    s = -1.0 if len(k) % 2 else 1.0
    return QuadResult(complex(s * r.value.real, 0.0), r.error_estimate, r.evaluations)


def _ls_level(power: int, apow: int) -> Integrand:
    def f(t, theta):
        return theta ** power * log_2sin(t) ** apow

    return f


def sls_quad(k: Index, sigma: float, target_digits: int = 12) -> QuadResult:
    """Nested integral of ``(t - sigma)^(k_u-2) A(t)``; no overall sign."""
    k = tuple(k)
    if any(v < 2 for v in k):
        raise IndexConstraintError("SLs entries must be >= 2")
    sigma = float(sigma)

    def level(e):
        return lambda t, theta: (theta - sigma) ** e * log_2sin(t)

    r = _run([level(v - 2) for v in k], sigma, target_digits)
    return QuadResult(complex(r.value.real, 0.0), r.error_estimate, r.evaluations)


def li1_on_circle(t: np.ndarray, theta: np.ndarray) -> np.ndarray:
    """Principal ``-log(1 - e^{i theta})`` from the anchor offset ``t``."""
    reduced = np.where(t > 0, t, t + TWO_PI)
    return -log_2sin(t) - 0.5j * (reduced - math.pi)


def ili_quad(q: Index, r: Index, sigma: float, target_digits: int = 12) -> QuadResult:
    """Nested integral of ``i (i t)^q_u Li_1(e^{i t})^r_u``; complex."""
    q, r = tuple(q), tuple(r)
    if len(q) != len(r):
        raise IndexConstraintError("depth mismatch")
    if any(v < 0 for v in q + r):
        raise IndexConstraintError("negative entry")

    def level(qu, ru):
        return lambda t, theta: 1j * (1j * theta) ** qu * li1_on_circle(t, theta) ** ru

    return _run([level(a, b) for a, b in zip(q, r)], sigma, target_digits)


def ls_quad_fine(k: Index, l: Index, sigma: float, tiny: float) -> complex:
    """Single-grid value with a chosen smallest panel; used to probe the endpoint."""
    k, l = tuple(k), tuple(l)
    _check_kl(k, l)
    levels = [_ls_level(lu, ku - 1 - lu) for ku, lu in zip(k, l)]
    order, ratio = LEVELS[-1]
    sign = 1.0 if sigma > 0 else -1.0
    val, _ = _cascade(levels, abs(sigma), sign, order, ratio, tiny)
    return (-1.0 if len(k) % 2 else 1.0) * val.real


__all__ = [
    "QuadResult",
    "QuadratureError",
    "ls_quad",
    "sls_quad",
    "ili_quad",
    "ls_quad_fine",
    "li1_on_circle",
    "log_2sin",
    "MAX_TARGET_DIGITS",
]
