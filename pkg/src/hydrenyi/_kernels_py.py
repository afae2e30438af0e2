"""Pure-Python kernels for terminating hypergeometric box sums.

Rationals are passed and returned as (numerator, denominator) integer pairs.
Terms are updated with per-axis incremental ratios instead of recomputed
Pochhammer products, and each subtree accumulates its own partial sum so
intermediate integers stay small.  A compiled twin of this module may be
built as ``hydrenyi._kernels_cy``; both backends must agree bit for bit.
"""

from __future__ import annotations

from math import gcd


def _reduced(num: int, den: int) -> tuple[int, int]:
    if num == 0:
        return 0, 1
    g = gcd(num, den)
    return num // g, den // g


def lauricella_boxsum(
    a: tuple[int, int],
    b: list[tuple[int, int]],
    c: list[tuple[int, int]],
    x: list[tuple[int, int]],
    bounds: list[int],
) -> tuple[int, int]:
    """Sum of (a)_{|j|} prod_i (b_i)_{j_i} x_i^{j_i} / ((c_i)_{j_i} j_i!)
    over the box 0 <= j_i <= bounds[i]."""
    an, ad = a
    axes = len(bounds)

    def rec(axis: int, total: int) -> tuple[int, int]:
        if axis == axes:
            return 1, 1
        bn, bd = b[axis]
        cn, cd = c[axis]
        xn, xd = x[axis]
        acc_n, acc_d = 0, 1
        f_n, f_d = 1, 1
        for j in range(bounds[axis] + 1):
            if j:
                # factor for j-1 -> j: (a+total+j-1)(b+j-1) x / ((c+j-1) j)
                step_n = (an + (total + j - 1) * ad) * (bn + (j - 1) * bd) * xn * cd
                step_d = ad * bd * xd * (cn + (j - 1) * cd) * j
                f_n, f_d = _reduced(f_n * step_n, f_d * step_d)
            if f_n == 0:
                continue
            sub_n, sub_d = rec(axis + 1, total + j)
            if sub_n == 0:
                continue
            acc_n, acc_d = _reduced(
                acc_n * f_d * sub_d + f_n * sub_n * acc_d, acc_d * f_d * sub_d
            )
        return acc_n, acc_d

    return rec(0, 0)


def daoust_boxsum(
    a0: tuple[int, int],
    d0: tuple[int, int],
    b: list[tuple[int, int]],
    c: list[tuple[int, int]],
    e: list[tuple[int, int]],
    x: list[tuple[int, int]],
    bounds: list[int],
) -> tuple[int, int]:
    """Sum of (a0)_{|j|}/(d0)_{|j|} prod_i (b_i)_{j_i}(c_i)_{j_i} x_i^{j_i} /
    ((e_i)_{j_i} j_i!) over the box 0 <= j_i <= bounds[i]."""
    a0n, a0d = a0
    d0n, d0d = d0
    axes = len(bounds)

    def rec(axis: int, total: int) -> tuple[int, int]:
        if axis == axes:
            return 1, 1
        bn, bd = b[axis]
        cn, cd = c[axis]
        en, ed = e[axis]
        xn, xd = x[axis]
        acc_n, acc_d = 0, 1
        f_n, f_d = 1, 1
        for j in range(bounds[axis] + 1):
            if j:
                step_n = (
                    (a0n + (total + j - 1) * a0d)
                    * (bn + (j - 1) * bd)
                    * (cn + (j - 1) * cd)
                    * xn
                    * d0d
                    * ed
                )
                step_d = (
                    a0d
                    * (d0n + (total + j - 1) * d0d)
                    * bd
                    * cd
                    * xd
                    * (en + (j - 1) * ed)
                    * j
                )
                f_n, f_d = _reduced(f_n * step_n, f_d * step_d)
            if f_n == 0:
                continue
            sub_n, sub_d = rec(axis + 1, total + j)
            if sub_n == 0:
                continue
            acc_n, acc_d = _reduced(
                acc_n * f_d * sub_d + f_n * sub_n * acc_d, acc_d * f_d * sub_d
            )
        return acc_n, acc_d

    return rec(0, 0)
