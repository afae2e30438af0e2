"""Classical orthogonal polynomials with exact rational coefficients.

Laguerre comes from its closed-form coefficients; Gegenbauer and Jacobi come
from their three-term recurrences, which keeps every intermediate Gamma away
from nonpositive arguments.  The two power-linearization routines exist to
cross-check the hypergeometric route used by the entropy formulas; the
production path never calls them.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Sequence

from hydrenyi.exactnum import RationalLike, pochhammer
from hydrenyi.hyperfun import LauricellaSpec, lauricella_fa, multi_index_sum


class PolyExact:
    """Dense univariate polynomial over exact rationals, index = degree."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Sequence[RationalLike]):
        trimmed = [Fraction(c) for c in coeffs]
        while trimmed and trimmed[-1] == 0:
            trimmed.pop()
        self.coeffs = tuple(trimmed)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def coeff(self, k: int) -> Fraction:
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return Fraction(0)

    def __add__(self, other: "PolyExact") -> "PolyExact":
        size = max(len(self.coeffs), len(other.coeffs))
        return PolyExact(
            [self.coeff(k) + other.coeff(k) for k in range(size)] or [0]
        )

    def __sub__(self, other: "PolyExact") -> "PolyExact":
        size = max(len(self.coeffs), len(other.coeffs))
        return PolyExact(
            [self.coeff(k) - other.coeff(k) for k in range(size)] or [0]
        )

    def __mul__(self, other: "PolyExact | RationalLike") -> "PolyExact":
        if isinstance(other, (int, Fraction)):
            return PolyExact([c * other for c in self.coeffs])
        if not self.coeffs or not other.coeffs:
            return PolyExact([])
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return PolyExact(out)

    __rmul__ = __mul__

    def __pow__(self, r: int) -> "PolyExact":
        if r < 0:
            raise ValueError("polynomial powers must be nonnegative")
        out = PolyExact([1])
        base = self
        for _ in range(r):
            out = out * base
        return out

    def shift_degree(self, k: int) -> "PolyExact":
        """Multiply by x**k."""
        if not self.coeffs:
            return self
        return PolyExact([Fraction(0)] * k + list(self.coeffs))

    def scale_arg(self, t: RationalLike) -> "PolyExact":
        """Substitute x -> t*x."""
        t = Fraction(t)
        return PolyExact([c * t**k for k, c in enumerate(self.coeffs)])

    def eval_fraction(self, x: RationalLike) -> Fraction:
        x = Fraction(x)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def eval_float(self, x: float) -> float:
        acc = 0.0
        for c in reversed(self.coeffs):
            acc = acc * x + float(c)
        return acc

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PolyExact):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"PolyExact({[str(c) for c in self.coeffs]})"


def laguerre(n: int, alpha: RationalLike) -> PolyExact:
    """Generalized Laguerre polynomial, orthogonal (not orthonormal) form.

    Coefficient of x**k is (-1)**k binom(n+alpha, n-k) / k!.
    """
    alpha = Fraction(alpha)
    if alpha <= -1:
        raise ValueError("laguerre requires alpha > -1")
    coeffs = []
    for k in range(n + 1):
        binom = pochhammer(alpha + k + 1, n - k) / math.factorial(n - k)
        coeffs.append(Fraction(-1) ** k * binom / math.factorial(k))
    return PolyExact(coeffs)


def gegenbauer(n: int, lam: RationalLike) -> PolyExact:
    """Gegenbauer polynomial via the three-term recurrence."""
    lam = Fraction(lam)
    if n > 0 and (lam <= Fraction(-1, 2) or lam == 0):
        raise ValueError("gegenbauer requires lambda > -1/2, lambda != 0")
    prev = PolyExact([1])
    if n == 0:
        return prev
    cur = PolyExact([0, 2 * lam])
    for k in range(2, n + 1):
        nxt = PolyExact([0, Fraction(2 * (k + lam - 1), k)]) * cur - PolyExact(
            [Fraction(k + 2 * lam - 2, k)]
        ) * prev
        prev, cur = cur, nxt
    return cur


def jacobi(n: int, alpha: RationalLike, beta: RationalLike) -> PolyExact:
    """Jacobi polynomial via the three-term recurrence."""
    a = Fraction(alpha)
    b = Fraction(beta)
    if a <= -1 or b <= -1:
        raise ValueError("jacobi requires alpha, beta > -1")
    prev = PolyExact([1])
    if n == 0:
        return prev
    cur = PolyExact([Fraction(a - b, 2), Fraction(a + b + 2, 2)])
    for k in range(2, n + 1):
        c1 = 2 * k * (k + a + b) * (2 * k + a + b - 2)
        c2 = (2 * k + a + b - 1) * (a * a - b * b)
        c3 = (2 * k + a + b - 1) * (2 * k + a + b) * (2 * k + a + b - 2)
        c4 = 2 * (k + a - 1) * (k + b - 1) * (2 * k + a + b)
        nxt = (PolyExact([c2, c3]) * cur - PolyExact([c4]) * prev) * (Fraction(1) / c1)
        prev, cur = cur, nxt
    return cur


def gegenbauer_as_jacobi(kappa: int, lam: RationalLike) -> tuple[Fraction, PolyExact]:
    """Rational scale s and Jacobi polynomial P such that s*P = gegenbauer.

    The Gamma-ratio prefactor collapses to the rational (2 lam)_kappa /
    (lam + 1/2)_kappa because the sqrt(pi) parts cancel.
    """
    lam = Fraction(lam)
    if lam <= 0:
        raise ValueError("gegenbauer_as_jacobi requires lambda > 0")
    scale = pochhammer(2 * lam, kappa) / pochhammer(lam + Fraction(1, 2), kappa)
    return scale, jacobi(kappa, lam - Fraction(1, 2), lam - Fraction(1, 2))


def poly_pow(p: PolyExact, r: int) -> PolyExact:
    """Exact r-th power by repeated convolution."""
    if r < 1:
        raise ValueError("poly_pow requires r >= 1")
    return p**r


def laguerre_power_linearization(
    a: int,
    r: int,
    t: RationalLike,
    k: int,
    alpha: RationalLike,
    gamma: RationalLike,
    i_max: int,
) -> list[Fraction]:
    """Coefficients c_i expanding y**a * laguerre(k, alpha)(t*y)**r in the
    laguerre(i, gamma) basis, for i = 0..i_max.

    Each coefficient is one terminating Lauricella sum with r+1 axes: r axes
    of order k for the power, plus one axis of order i for the target index.
    """
    if a < 0:
        raise ValueError("the monomial degree a must be a nonnegative integer")
    t = Fraction(t)
    alpha = Fraction(alpha)
    gamma = Fraction(gamma)
    ratio = pochhammer(alpha + 1, k) / math.factorial(k)
    prefactor = pochhammer(gamma + 1, a) * ratio**r
    out = []
    for i in range(i_max + 1):
        spec = LauricellaSpec(
            a=gamma + a + 1,
            b=(Fraction(-k),) * r + (Fraction(-i),),
            c=(alpha + 1,) * r + (gamma + 1,),
            x=(t,) * r + (Fraction(1),),
        )
        out.append(prefactor * lauricella_fa(spec))
    return out


def jacobi_power_linearization(
    kappa: int,
    q: int,
    alpha: RationalLike,
    beta: RationalLike,
    gamma: RationalLike,
    delta: RationalLike,
    i_max: int,
) -> list[Fraction]:
    """Coefficients expanding jacobi(kappa, alpha, beta)**(2q) in the
    jacobi(i, gamma, delta) basis, for i = 0..i_max."""
    alpha = Fraction(alpha)
    beta = Fraction(beta)
    gamma = Fraction(gamma)
    delta = Fraction(delta)
    r = 2 * q
    base = (pochhammer(alpha + 1, kappa) / math.factorial(kappa)) ** r

    # Per-axis factor tables; the r power axes share one table.
    axis = [
        pochhammer(-kappa, j)
        * pochhammer(alpha + beta + kappa + 1, j)
        / (pochhammer(alpha + 1, j) * math.factorial(j))
        for j in range(kappa + 1)
    ]

    out = []
    for i in range(i_max + 1):
        head = Fraction(gamma + delta + 2 * i + 1) / (gamma + delta + i + 1)
        last = [
            pochhammer(-i, j) / (pochhammer(gamma + 1, j) * math.factorial(j))
            for j in range(i + 1)
        ]
        top = [pochhammer(gamma + 1, s) for s in range(r * kappa + i + 1)]
        bottom = [pochhammer(gamma + delta + i + 2, s) for s in range(r * kappa + 1)]

        def term(idx: tuple[int, ...]) -> Fraction:
            s_power = sum(idx[:r])
            j_last = idx[r]
            val = top[s_power + j_last] / bottom[s_power] * last[j_last]
            for j in idx[:r]:
                val *= axis[j]
            return val

        total = multi_index_sum([kappa] * r + [i], term)
        out.append(base * head * total)
    return out
