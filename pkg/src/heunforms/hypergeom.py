"""Kummer's 1F1, its Hermite and Laguerre reductions, and the K_n function.

K_n(x) = HC(n, 1, 0, 1/2, 2n; x) = 1F1(1/2; 1; -4nx) is available three ways
here: the 1F1 series, Gauss-Chebyshev quadrature of its integral
representation, and (in :mod:`heunforms.entropy`) the squared Poisson sum.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

import mpmath

from .exact import RationalLike, binomial, pochhammer
from .series import Polynomial

#: working precision (decimal digits) for every non-exact path
DIGITS = 40

Value = Union[Fraction, mpmath.mpf]


class ConvergenceError(RuntimeError):
    pass


def _to_mpf(v) -> mpmath.mpf:
    if isinstance(v, Fraction):
        return mpmath.mpf(v.numerator) / v.denominator
    return mpmath.mpf(v)


@dataclass(frozen=True)
class Kummer1F1Spec:
    alpha: Fraction
    gamma: Fraction

    def __post_init__(self) -> None:
        object.__setattr__(self, "alpha", Fraction(self.alpha))
        object.__setattr__(self, "gamma", Fraction(self.gamma))
        if self.gamma.denominator == 1 and self.gamma <= 0:
            raise ValueError(f"1F1 undefined for gamma = {self.gamma}")

    @property
    def terminating_degree(self) -> int | None:
        """n when alpha = -n, else None."""
        if self.alpha.denominator == 1 and self.alpha <= 0:
            return int(-self.alpha)
        return None


@dataclass(frozen=True)
class SeriesSum:
    value: Value
    tail_bound: Value
    terms: int


def onef1_sum(
    spec: Kummer1F1Spec,
    t,
    tol: float | None = None,
    max_terms: int = 100_000,
) -> SeriesSum:
    """Partial sum of  sum_k (alpha)_k / ((gamma)_k k!) t^k  with its tail bound.

    Terminating series are summed exactly (tail 0).  Otherwise terms are
    added until a geometric bound on the remainder drops below ``tol``.  The
    bound uses that for K past -alpha and -gamma every later term ratio is at
    most max(|alpha+K|/|gamma+K|, 1) |t| / (K+1).
    A rational ``t`` is summed in exact arithmetic and only the final value
    is rounded.
    """
    alpha, gamma = spec.alpha, spec.gamma
    exact = isinstance(t, (int, Fraction))
    deg = spec.terminating_degree
    if exact and t == 0:
        return SeriesSum(Fraction(1), Fraction(0), 1)
    if deg is None and tol is None:
        raise ValueError("non-terminating 1F1 needs a tolerance")

    with mpmath.workdps(DIGITS):
        if exact:
            t = Fraction(t)
            one, ratio_of = Fraction(1), (lambda q: q)
        else:
            t = mpmath.mpf(t)
            one, ratio_of = mpmath.mpf(1), _to_mpf
        term = total = one
        if deg is not None:
            for k in range(deg):
                term = term * ratio_of((alpha + k) / ((gamma + k) * (k + 1))) * t
                total += term
            return SeriesSum(total, 0 * one, deg + 1)

        abs_t = _to_mpf(abs(t))
        k_min = max(0, math.floor(-alpha) + 1, math.floor(-gamma) + 1)
        for k in range(max_terms):
            if k >= k_min:
                rho = _to_mpf(max(abs(alpha + k) / abs(gamma + k), Fraction(1)) / (k + 1)) * abs_t
                if rho < 1:
                    bound = abs(_to_mpf(term)) * rho / (1 - rho)
                    if bound <= tol:
                        return SeriesSum(+_to_mpf(total), bound, k + 1)
            term = term * ratio_of((alpha + k) / ((gamma + k) * (k + 1))) * t
            total += term
    raise ConvergenceError(f"1F1 tolerance {tol} not reached in {max_terms} terms")


def onef1(alpha: RationalLike, gamma: RationalLike, t, tol: float | None = None) -> Value:
    """1F1(alpha; gamma; t).

    Exact (a Fraction) for terminating series at rational t; otherwise an
    mpmath value accurate to ``tol``.
    """
    return onef1_sum(Kummer1F1Spec(alpha, gamma), t, tol).value


def onef1_hermite_case(n: int, x: RationalLike) -> Fraction:
    """1F1(-n; 1/2; x) through its Hermite-polynomial closed form."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    x = Fraction(x)
    return math.factorial(n) * sum(
        (Fraction((-4 * x) ** (n - k)) / (math.factorial(k) * math.factorial(2 * n - 2 * k))
         for k in range(n + 1)),
        Fraction(0),
    )


@dataclass(frozen=True)
class LaguerreSpec:
    n: int
    lam: Fraction

    def __post_init__(self) -> None:
        object.__setattr__(self, "lam", Fraction(self.lam))
        if self.n < 0:
            raise ValueError("n must be nonnegative")
        if self.lam <= -1:
            raise ValueError(f"lambda must exceed -1, got {self.lam}")


def laguerre_polynomial(spec: LaguerreSpec) -> Polynomial:
    """L_n^lambda as an exact polynomial."""
    n, lam = spec.n, spec.lam
    return Polynomial(
        (-1) ** k * pochhammer(lam + k + 1, n - k) / (math.factorial(k) * math.factorial(n - k))
        for k in range(n + 1)
    )


def laguerre(spec: LaguerreSpec, x: RationalLike) -> Fraction:
    return laguerre_polynomial(spec)(x)


def kn_quadrature(n: int, x, nodes: int = 64) -> mpmath.mpf:
    """M-node Gauss-Chebyshev rule for (1/pi) int_{-1}^{1} e^{-2nx(1+t)} dt / sqrt(1-t^2)."""
    if nodes < 1:
        raise ValueError("need at least one node")
    with mpmath.workdps(DIGITS):
        c = -2 * n * _to_mpf(x)
        total = mpmath.fsum(
            mpmath.exp(c * (1 + mpmath.cos((2 * i - 1) * mpmath.pi / (2 * nodes))))
            for i in range(1, nodes + 1)
        )
        return total / nodes


def kn_quadrature_checked(n: int, x, nodes: int = 64, tol: float = 1e-25) -> mpmath.mpf:
    """Quadrature at ``nodes`` and ``2*nodes``; raises if they differ by more than tol."""
    a, b = kn_quadrature(n, x, nodes), kn_quadrature(n, x, 2 * nodes)
    if abs(a - b) > tol:
        raise ConvergenceError(f"quadrature not converged: |Q{nodes} - Q{2 * nodes}| = {abs(a - b)}")
    return b


def kn_series(n: int, x, tol: float = 1e-30) -> Value:
    """K_n(x) from its 1F1 series."""
    return onef1(Fraction(1, 2), 1, -4 * n * x, tol)


def kn_deriv_moment_route(n: int, j: int) -> int:
    """K_n^{(j)}(0) from the moments of the arcsine density:
    (-2n)^j sum_i C(j, 2i) C(2i, i) 4^{-i}."""
    s = sum((Fraction(binomial(j, 2 * i) * binomial(2 * i, i), 4**i) for i in range(j // 2 + 1)),
            Fraction(0))
    value = (-2 * n) ** j * s
    if value.denominator != 1:
        raise ArithmeticError(f"moment route gave a non-integer {value}")
    return value.numerator


def kn_deriv_at_zero(n: int, j: int) -> int:
    """K_n^{(j)}(0) = (-n)^j C(2j, j), cross-checked against the moment route."""
    if j < 0:
        raise ValueError("j must be nonnegative")
    direct = (-n) ** j * binomial(2 * j, j)
    moment = kn_deriv_moment_route(n, j)
    if direct != moment:
        raise ArithmeticError(f"K_{n}^({j})(0): {direct} != {moment} via moments")
    return direct
