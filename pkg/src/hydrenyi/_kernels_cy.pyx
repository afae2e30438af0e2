# cython: language_level=3
"""Compiled kernels for terminating hypergeometric box sums.

Same contract as hydrenyi._kernels_py: rationals travel as (num, den) int
pairs and both backends must return identical pairs.  The win over the pure
Python twin is loop and call overhead; the big-integer arithmetic itself is
shared.
"""

from math import gcd


cdef inline tuple _reduced(object num, object den):
    if num == 0:
        return 0, 1
    g = gcd(num, den)
    return num // g, den // g


cdef tuple _fa_rec(int axis, int total, int axes, object an, object ad,
                   list b, list c, list x, list bounds):
    if axis == axes:
        return 1, 1
    cdef int j, bound
    bound = bounds[axis]
    bn, bd = b[axis]
    cn, cd = c[axis]
    xn, xd = x[axis]
    acc_n, acc_d = 0, 1
    f_n, f_d = 1, 1
    for j in range(bound + 1):
        if j:
            step_n = (an + (total + j - 1) * ad) * (bn + (j - 1) * bd) * xn * cd
            step_d = ad * bd * xd * (cn + (j - 1) * cd) * j
            f_n, f_d = _reduced(f_n * step_n, f_d * step_d)
        if f_n == 0:
            continue
        sub_n, sub_d = _fa_rec(axis + 1, total + j, axes, an, ad, b, c, x, bounds)
        if sub_n == 0:
            continue
        acc_n, acc_d = _reduced(
            acc_n * f_d * sub_d + f_n * sub_n * acc_d, acc_d * f_d * sub_d
        )
    return acc_n, acc_d


def lauricella_boxsum(a, b, c, x, bounds):
    """Sum of (a)_{|j|} prod_i (b_i)_{j_i} x_i^{j_i} / ((c_i)_{j_i} j_i!)
    over the box 0 <= j_i <= bounds[i]."""
    an, ad = a
    return _fa_rec(0, 0, len(bounds), an, ad, list(b), list(c), list(x), list(bounds))


cdef tuple _sd_rec(int axis, int total, int axes, object a0n, object a0d,
                   object d0n, object d0d, list b, list c, list e, list x,
                   list bounds):
    if axis == axes:
        return 1, 1
    cdef int j, bound
    bound = bounds[axis]
    bn, bd = b[axis]
    cn, cd = c[axis]
    en, ed = e[axis]
    xn, xd = x[axis]
    acc_n, acc_d = 0, 1
    f_n, f_d = 1, 1
    for j in range(bound + 1):
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
        sub_n, sub_d = _sd_rec(axis + 1, total + j, axes, a0n, a0d, d0n, d0d,
                               b, c, e, x, bounds)
        if sub_n == 0:
            continue
        acc_n, acc_d = _reduced(
            acc_n * f_d * sub_d + f_n * sub_n * acc_d, acc_d * f_d * sub_d
        )
    return acc_n, acc_d


def daoust_boxsum(a0, d0, b, c, e, x, bounds):
    """Sum of (a0)_{|j|}/(d0)_{|j|} prod_i (b_i)_{j_i}(c_i)_{j_i} x_i^{j_i} /
    ((e_i)_{j_i} j_i!) over the box 0 <= j_i <= bounds[i]."""
    a0n, a0d = a0
    d0n, d0d = d0
    return _sd_rec(0, 0, len(bounds), a0n, a0d, d0n, d0d,
                   list(b), list(c), list(e), list(x), list(bounds))
