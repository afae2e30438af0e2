"""Brute-force evaluation of the entropy arguments, independent of the
closed forms.

For integer order q every integral reduces to exact factorial or Beta
moments of polynomial expansions, so closed form and oracle can be compared
structurally with zero tolerance.  For real q an adaptive extended-precision
quadrature evaluates the same integrals numerically.
"""

from __future__ import annotations

import json
import math
import time
from dataclasses import dataclass
from fractions import Fraction
from typing import Literal, NamedTuple

import mpmath

from hydrenyi import entropy
from hydrenyi.exactnum import ExactScalar, gamma_exact, to_float
from hydrenyi.polynomials import PolyExact, gegenbauer, laguerre, poly_pow
from hydrenyi.states import HydrogenicState, radial_norm_squared, validate

Space = Literal["position", "momentum"]

QUADRATURE_DPS = 30
QUADRATURE_REL_TARGET = 1e-10


class QuadratureError(RuntimeError):
    """Quadrature failed to reach the relative error target."""

    def __init__(self, message: str, value: float, estimate: float):
        super().__init__(message)
        self.value = value
        self.estimate = estimate


@dataclass(frozen=True)
class MomentBasis:
    """Closed-form moments of one of the three weights the oracles need.

    kinds: "laguerre" is x^k e^-x on (0, inf); "gegenbauer" is
    t^k (1-t^2)^s on (-1, 1) with params (s,); "jacobi-shifted" is
    (1-y)^a (1+y)^(b+k) on (-1, 1) with params (a, b).
    """

    kind: str
    params: tuple[Fraction, ...] = ()

    def moment(self, k: int) -> ExactScalar:
        if self.kind == "laguerre":
            return ExactScalar.from_rational(math.factorial(k))
        if self.kind == "gegenbauer":
            if k % 2 == 1:
                return ExactScalar(0)
            (s,) = self.params
            half = k // 2
            return (
                gamma_exact(half + Fraction(1, 2))
                * gamma_exact(s + 1)
                / gamma_exact(half + s + Fraction(3, 2))
            )
        if self.kind == "jacobi-shifted":
            a, b = self.params
            exponent = a + b + k + 1
            if exponent.denominator != 1:
                raise ValueError("shifted moment needs an integer total 2-power")
            return (
                ExactScalar.from_rational(Fraction(2) ** exponent.numerator)
                * gamma_exact(a + 1)
                * gamma_exact(b + k + 1)
                / gamma_exact(a + b + k + 2)
            )
        raise ValueError(f"unknown moment basis {self.kind!r}")


def _check_order(q, minimum: int = 1) -> int:
    q = Fraction(q)
    if q.denominator != 1 or q < minimum:
        raise ValueError(f"oracle needs integer q >= {minimum}, got {q}")
    return q.numerator


def radial_position_w_exact(state: HydrogenicState, q: int) -> ExactScalar:
    """Entropic moment of the radial position density by termwise factorial
    moments of the expanded Laguerre power."""
    q = _check_order(q)
    d = validate(state)
    l, D = d.l, state.D
    poly = poly_pow(
        laguerre(state.n - l - 1, 2 * l + D - 2).scale_arg(Fraction(1, q)), 2 * q
    ).shift_degree(2 * l * q + D - 1)
    basis = MomentBasis("laguerre")
    integral = ExactScalar(0)
    for k, coeff in enumerate(poly.coeffs):
        if coeff:
            integral = integral + basis.moment(k) * coeff
    norm = radial_norm_squared(state)
    scale = d.lam ** (D * (1 - q)) * norm**q * Fraction(1, q ** (2 * l * q + D))
    return integral * scale


def angular_w_exact(D: int, mu: tuple[int, ...], q: int) -> ExactScalar:
    """Entropic moment of a hyperspherical harmonic by even Beta moments of
    the expanded Gegenbauer powers."""
    q = _check_order(q)
    chain = tuple(mu[:-1]) + (abs(mu[-1]),)
    inv_pi = ExactScalar.pi_power(-2, 1)
    norm2 = ExactScalar.pi_power(-2, Fraction(1, 2))  # the 1/(2 pi) phi factor
    value = ExactScalar.pi_power(2, 2)  # the 2*pi from the phi integral
    for j in range(1, D - 1):
        two_alpha = D - j - 1
        alpha = Fraction(two_alpha, 2)
        mu_j, mu_j1 = chain[j - 1], chain[j]
        k = mu_j - mu_j1
        factor = (
            (alpha + mu_j)
            * math.factorial(k)
            * Fraction(2) ** (two_alpha + 2 * mu_j1 - 1)
        )
        norm_j = (
            ExactScalar.from_rational(factor)
            * gamma_exact(alpha + mu_j1) ** 2
            * inv_pi
            / gamma_exact(2 * alpha + mu_j + mu_j1)
        )
        norm2 = norm2 * norm_j
        power = poly_pow(gegenbauer(k, alpha + mu_j1), 2 * q)
        basis = MomentBasis("gegenbauer", (q * mu_j1 + alpha - Fraction(1, 2),))
        integral = ExactScalar(0)
        for m, coeff in enumerate(power.coeffs):
            if m % 2 == 1:
                assert coeff == 0, "odd moments of an even power must vanish"
                continue
            if coeff:
                integral = integral + basis.moment(m) * coeff
        value = value * integral
    return value * norm2**q


def _shifted_basis_coeffs(poly: PolyExact) -> list[Fraction]:
    """Rewrite sum a_m y^m as sum s_k (1+y)^k."""
    out = [Fraction(0)] * (poly.degree + 1 if poly.coeffs else 1)
    for m, a in enumerate(poly.coeffs):
        if a == 0:
            continue
        for k in range(m + 1):
            out[k] += a * math.comb(m, k) * Fraction(-1) ** (m - k)
    return out


def radial_momentum_w_exact(state: HydrogenicState, q: int) -> ExactScalar:
    """Entropic moment of the radial momentum density by Beta moments in the
    shifted (1+y)^k basis."""
    q = _check_order(q)
    d = validate(state)
    l, D = d.l, state.D
    power = poly_pow(gegenbauer(state.n - l - 1, d.L + 1), 2 * q)
    shifted = _shifted_basis_coeffs(power)
    a_exp = l * q + Fraction(D, 2) - 1
    b_exp = D * (q - Fraction(1, 2)) + q * (l + 1) - 1
    basis = MomentBasis("jacobi-shifted", (a_exp, b_exp))
    integral = ExactScalar(0)
    for k, coeff in enumerate(shifted):
        if coeff:
            integral = integral + basis.moment(k) * coeff
    k_squared = (
        ExactScalar.pi_power(-2, Fraction(1, 2))
        * Fraction(
            2 ** (4 * l + 2 * D) * math.factorial(state.n - l - 1),
            math.factorial(state.n + l + D - 3),
        )
        * gamma_exact(Fraction(2 * l + D - 1, 2)) ** 2
        * d.eta ** (D + 1)
        * state.Z ** (-D)
    )
    two_power = Fraction(1, 2 ** (q * (2 * l + D + 1)))
    scale = ExactScalar.from_rational((state.Z / d.eta) ** D * two_power)
    return k_squared**q * scale * integral


# -- floating-point path for real orders -------------------------------------


def _poly_mpf(poly: PolyExact) -> list[mpmath.mpf]:
    return [mpmath.mpf(c.numerator) / c.denominator for c in poly.coeffs]


def _horner(coeffs: list[mpmath.mpf], x: mpmath.mpf) -> mpmath.mpf:
    acc = mpmath.mpf(0)
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


def _real_roots_in(poly: PolyExact, lo: float, hi: float) -> list[float]:
    if poly.degree < 1:
        return []
    roots = mpmath.polyroots(list(reversed(_poly_mpf(poly))), maxsteps=200)
    out = []
    for r in roots:
        if abs(mpmath.im(r)) < 1e-12 and lo < mpmath.re(r) < hi:
            out.append(float(mpmath.re(r)))
    return sorted(out)


def _quad(f, points) -> tuple[mpmath.mpf, mpmath.mpf]:
    value, err = mpmath.quad(f, points, error=True, maxdegree=9)
    return value, err


def position_radial_power_integral(
    state: HydrogenicState, q: float
) -> tuple[mpmath.mpf, mpmath.mpf]:
    """Integral of the q-th power of the radial position density against
    r^(D-1) dr, with its quadrature error estimate."""
    d = validate(state)
    l, D = d.l, state.D
    with mpmath.workdps(QUADRATURE_DPS):
        lam = mpmath.mpf(d.lam.numerator) / d.lam.denominator
        norm = radial_norm_squared(state)
        norm2 = (mpmath.mpf(norm.numerator) / norm.denominator) / lam**D
        poly = laguerre(state.n - l - 1, 2 * l + D - 2)
        coeffs = _poly_mpf(poly)
        qm = mpmath.mpf(q)

        def integrand(r):
            rt = r / lam
            density = norm2 * rt ** (2 * l) * mpmath.exp(-rt) * _horner(coeffs, rt) ** 2
            return density**qm * r ** (D - 1)

        scale = float(lam) * float(2 * d.eta)
        points = (
            [0.0]
            + [float(lam) * r for r in _real_roots_in(poly, 0.0, math.inf)]
            + [scale, 4 * scale]
        )
        return _quad(integrand, sorted(set(points)) + [mpmath.inf])


def momentum_radial_power_integral(
    state: HydrogenicState, q: float
) -> tuple[mpmath.mpf, mpmath.mpf]:
    """Integral of the q-th power of the radial momentum density against
    p^(D-1) dp, with its quadrature error estimate."""
    d = validate(state)
    l, D = d.l, state.D
    with mpmath.workdps(QUADRATURE_DPS):
        z = mpmath.mpf(state.Z.numerator) / state.Z.denominator
        eta = mpmath.mpf(d.eta.numerator) / d.eta.denominator
        poly = gegenbauer(state.n - l - 1, d.L + 1)
        coeffs = _poly_mpf(poly)
        k2 = (
            z ** (-D)
            * mpmath.mpf(2) ** (4 * l + 2 * D)
            * math.factorial(state.n - l - 1)
            * (mpmath.gamma(mpmath.mpf(2 * l + D - 1) / 2)) ** 2
            * eta ** (D + 1)
            / (2 * mpmath.pi * math.factorial(state.n + l + D - 3))
        )
        qm = mpmath.mpf(q)
        two_l_plus_4 = 2 * d.L + 4
        exp_decay = mpmath.mpf(two_l_plus_4.numerator) / two_l_plus_4.denominator

        def integrand(p):
            pt = p / z
            u = (eta * pt) ** 2
            y = (1 - u) / (1 + u)
            density = k2 * u**l * (1 + u) ** (-exp_decay) * _horner(coeffs, y) ** 2
            return density**qm * p ** (D - 1)

        scale = float(z / eta)
        points = [0.0]
        for y0 in _real_roots_in(poly, -1.0, 1.0):
            points.append(scale * math.sqrt((1 - y0) / (1 + y0)))
        points += [scale, 4 * scale]
        return _quad(integrand, sorted(set(points)) + [mpmath.inf])


def angular_power_integral(
    D: int, mu: tuple[int, ...], q: float
) -> tuple[mpmath.mpf, mpmath.mpf]:
    """Integral of |harmonic|^(2q) over the sphere for real q, with error
    estimate.  Axes with equal chain entries use closed Beta factors; the
    others get adaptive quadrature split at the polynomial roots."""
    chain = tuple(mu[:-1]) + (abs(mu[-1]),)
    with mpmath.workdps(QUADRATURE_DPS):
        qm = mpmath.mpf(q)
        value = 2 * mpmath.pi
        err_rel = mpmath.mpf(0)
        norm2 = 1 / (2 * mpmath.pi)
        for j in range(1, D - 1):
            alpha = Fraction(D - j - 1, 2)
            alpha_m = mpmath.mpf(alpha.numerator) / alpha.denominator
            mu_j, mu_j1 = chain[j - 1], chain[j]
            k = mu_j - mu_j1
            norm2 *= (
                (alpha_m + mu_j)
                * math.factorial(k)
                * mpmath.gamma(alpha_m + mu_j1) ** 2
                / (
                    mpmath.pi
                    * mpmath.mpf(2) ** (1 - 2 * alpha_m - 2 * mu_j1)
                    * mpmath.gamma(2 * alpha_m + mu_j + mu_j1)
                )
            )
            s = qm * mu_j1 + alpha_m - mpmath.mpf(1) / 2
            if k == 0:
                value *= mpmath.beta(mpmath.mpf(1) / 2, s + 1)
                continue
            poly = gegenbauer(k, alpha + mu_j1)
            coeffs = _poly_mpf(poly)

            def integrand(t):
                return abs(_horner(coeffs, t)) ** (2 * qm) * (1 - t * t) ** s

            points = [-1.0] + _real_roots_in(poly, -1.0, 1.0) + [1.0]
            part, err = _quad(integrand, points)
            value *= part
            if part != 0:
                err_rel += abs(err / part)
        value *= norm2**qm
        return value, abs(value) * err_rel


class FloatEntropy(NamedTuple):
    value: float
    error: float


def renyi_float(state: HydrogenicState, q, space: Space) -> FloatEntropy:
    """Renyi entropy of any real order q > 0, q != 1, by quadrature of the
    density power, with a propagated error estimate."""
    q = float(q)
    if q <= 0 or q == 1:
        raise ValueError(f"need real q > 0, q != 1, got {q}")
    validate(state)
    if space == "position":
        radial, radial_err = position_radial_power_integral(state, q)
    elif space == "momentum":
        radial, radial_err = momentum_radial_power_integral(state, q)
    else:
        raise ValueError(f"unknown space {space!r}")
    with mpmath.workdps(QUADRATURE_DPS):
        chain = state.canonical_mu()
        if all(m == chain[0] for m in chain):
            # Gamma-closed angular factor, exact for any real order.
            l = abs(chain[0])
            D = state.D
            log_angular = (1 - q) * (
                mpmath.log(2) + mpmath.mpf(D) / 2 * mpmath.log(mpmath.pi)
            ) + (
                q * mpmath.loggamma(l + mpmath.mpf(D) / 2)
                + mpmath.loggamma(q * l + 1)
                - q * mpmath.loggamma(l + 1)
                - mpmath.loggamma(q * l + mpmath.mpf(D) / 2)
            )
            angular_rel_err = mpmath.mpf(0)
        else:
            angular, angular_err = angular_power_integral(state.D, state.mu, q)
            log_angular = mpmath.log(angular)
            angular_rel_err = abs(angular_err / angular)
        rel = abs(radial_err / radial) + angular_rel_err
        entropy_value = (mpmath.log(radial) + log_angular) / (1 - q)
        err = float(rel / abs(1 - q))
        result = FloatEntropy(float(entropy_value), err)
    if rel > QUADRATURE_REL_TARGET:
        raise QuadratureError(
            f"quadrature reached relative error {float(rel):.2e} "
            f"(target {QUADRATURE_REL_TARGET:.0e})",
            result.value,
            result.error,
        )
    return result


# -- verification -------------------------------------------------------------


@dataclass(frozen=True)
class CheckResult:
    name: str
    closed: str
    oracle: str
    equal: bool
    residual: float

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "closed": self.closed,
            "oracle": self.oracle,
            "equal": self.equal,
            "residual": self.residual,
        }


@dataclass(frozen=True)
class StateVerdict:
    state: str
    q: int
    checks: tuple[CheckResult, ...]
    elapsed_ms: float

    @property
    def all_equal(self) -> bool:
        return all(check.equal for check in self.checks)

    def to_dict(self) -> dict:
        return {
            "state": self.state,
            "q": self.q,
            "all_equal": self.all_equal,
            "elapsed_ms": self.elapsed_ms,
            "checks": [check.to_dict() for check in self.checks],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)


def _compare(name: str, closed: ExactScalar, oracle: ExactScalar) -> CheckResult:
    equal = closed == oracle
    if equal:
        residual = 0.0
    else:
        a, b = to_float(closed), to_float(oracle)
        residual = abs(a - b) / max(abs(a), abs(b), 1e-300)
    return CheckResult(name, closed.render(), oracle.render(), equal, residual)


def verify_state(state: HydrogenicState, q: int) -> StateVerdict:
    """Compare every closed-form entropy argument against its brute-force
    oracle for one state and order."""
    q = _check_order(q, minimum=2)
    started = time.perf_counter()
    closed_radial_pos = entropy.radial_position_entropy(state, q).w
    closed_angular = entropy.angular_entropy(state.D, state.mu, q).w
    closed_radial_mom = entropy.radial_momentum_entropy(state, q).w
    oracle_radial_pos = radial_position_w_exact(state, q)
    oracle_angular = angular_w_exact(state.D, state.mu, q)
    oracle_radial_mom = radial_momentum_w_exact(state, q)
    checks = (
        _compare("radial_position", closed_radial_pos, oracle_radial_pos),
        _compare("angular", closed_angular, oracle_angular),
        _compare("radial_momentum", closed_radial_mom, oracle_radial_mom),
        _compare(
            "position_total",
            closed_radial_pos * closed_angular,
            oracle_radial_pos * oracle_angular,
        ),
        _compare(
            "momentum_total",
            closed_radial_mom * closed_angular,
            oracle_radial_mom * oracle_angular,
        ),
    )
    elapsed = (time.perf_counter() - started) * 1000
    return StateVerdict(state.literal(), q, checks, elapsed)
