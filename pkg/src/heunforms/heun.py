"""Local solutions of the general and confluent Heun equations around x = 0.

Both equations are handled through their polynomial-coefficient form

    P2(x) u'' + P1(x) u' + P0(x) u = 0,

obtained by clearing denominators (by x(x-1)(x-a) for the general equation,
by x(x-1) for the confluent one).  The Frobenius recurrence is not written
out anywhere: :func:`_frobenius` substitutes the series into the operator
and solves the x^k coefficient for c_{k+1}.  The same operator produces the
residual used for certification, so a slip in the operator shows up as a
residual failure rather than as silently wrong coefficients.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Literal, Union

import mpmath

from .exact import RationalLike, pochhammer
from .series import ClosedFormExpr, Polynomial, PowerSeries, t_power_series

Candidate = Union[PowerSeries, Polynomial, ClosedFormExpr]
HALF = Fraction(1, 2)


class InvalidParameters(ValueError):
    pass


class SeriesDomainError(ValueError):
    """Point lies on or beyond the convergence radius of the local series."""


def _nonpositive_integer(v: Fraction) -> bool:
    return v.denominator == 1 and v <= 0


@dataclass(frozen=True)
class HeunParams:
    """Parameters of Hl(a, q; alpha, beta; gamma, delta; x).

    ``epsilon`` follows from alpha + beta + 1 = gamma + delta + epsilon.
    """

    a: Fraction
    q: Fraction
    alpha: Fraction
    beta: Fraction
    gamma: Fraction
    delta: Fraction
    epsilon: Fraction = field(init=False)

    def __post_init__(self) -> None:
        for name in ("a", "q", "alpha", "beta", "gamma", "delta"):
            object.__setattr__(self, name, Fraction(getattr(self, name)))
        if self.a in (0, 1):
            raise InvalidParameters(f"a must not be 0 or 1, got {self.a}")
        if _nonpositive_integer(self.gamma):
            raise InvalidParameters(f"gamma must not be a nonpositive integer, got {self.gamma}")
        object.__setattr__(
            self, "epsilon", self.alpha + self.beta + 1 - self.gamma - self.delta
        )

    def operator(self) -> tuple[Polynomial, Polynomial, Polynomial]:
        x = Polynomial.x()
        a = self.a
        p2 = x * (x - 1) * (x - a)
        p1 = self.gamma * (x - 1) * (x - a) + self.delta * x * (x - a) + self.epsilon * x * (x - 1)
        p0 = self.alpha * self.beta * x - self.q
        return p2, p1, p0

    @property
    def radius(self) -> Fraction:
        return min(abs(self.a), Fraction(1))

    def __str__(self) -> str:
        return (
            f"Hl({self.a}, {self.q}; {self.alpha}, {self.beta}; "
            f"{self.gamma}, {self.delta}; x)"
        )


@dataclass(frozen=True)
class ConfluentHeunParams:
    """Parameters of HC(p, gamma, delta, alpha, sigma; x)."""

    p: Fraction
    gamma: Fraction
    delta: Fraction
    alpha: Fraction
    sigma: Fraction

    def __post_init__(self) -> None:
        for name in ("p", "gamma", "delta", "alpha", "sigma"):
            object.__setattr__(self, name, Fraction(getattr(self, name)))
        if self.p == 0:
            raise InvalidParameters("p must be nonzero")
        if _nonpositive_integer(self.gamma):
            raise InvalidParameters(f"gamma must not be a nonpositive integer, got {self.gamma}")

    def operator(self) -> tuple[Polynomial, Polynomial, Polynomial]:
        x = Polynomial.x()
        p2 = x * (x - 1)
        p1 = 4 * self.p * x * (x - 1) + self.gamma * (x - 1) + self.delta * x
        p0 = 4 * self.p * self.alpha * x - self.sigma
        return p2, p1, p0

    @property
    def radius(self) -> Fraction:
        return Fraction(1)

    def __str__(self) -> str:
        return f"HC({self.p}, {self.gamma}, {self.delta}, {self.alpha}, {self.sigma}; x)"


def _frobenius(p2: Polynomial, p1: Polynomial, p0: Polynomial, order: int) -> PowerSeries:
    """Series with c_0 = 1 annihilated by the operator through x^{order-1}."""
    if p2[0] != 0:
        raise InvalidParameters("x = 0 is not a singular point of the operator")
    c = [Fraction(1)] + [Fraction(0)] * order
    for k in range(order):
        lead = (k + 1) * (k * p2[1] + p1[0])
        if lead == 0:
            raise InvalidParameters(f"recurrence breaks down at step {k + 1}")
        rest = Fraction(0)
        for i, coef in enumerate(p2.coeffs):
            m = k - i + 2
            if coef and 0 <= m <= k and m >= 2:
                rest += coef * m * (m - 1) * c[m]
        for i, coef in enumerate(p1.coeffs):
            m = k - i + 1
            if coef and 1 <= m <= k:
                rest += coef * m * c[m]
        for i, coef in enumerate(p0.coeffs):
            m = k - i
            if coef and 0 <= m <= k:
                rest += coef * c[m]
        c[k + 1] = -rest / lead
    return PowerSeries(c)


def heun_series(params: HeunParams, order: int) -> PowerSeries:
    """Normalized local solution of the general Heun equation to x^order."""
    if order < 2:
        raise ValueError("order must be at least 2")
    return _frobenius(*params.operator(), order)


def confluent_series(params: ConfluentHeunParams, order: int) -> PowerSeries:
    """Normalized local solution of the confluent Heun equation to x^order."""
    if order < 2:
        raise ValueError("order must be at least 2")
    return _frobenius(*params.operator(), order)


def apply_operator(
    ops: tuple[Polynomial, Polynomial, Polynomial], u: Candidate
) -> Candidate:
    """Apply P2 D^2 + P1 D + P0 to ``u``, keeping u's representation.

    A :class:`PowerSeries` result carries the largest truncation order that
    the input determines.
    """
    p2, p1, p0 = ops
    if isinstance(u, ClosedFormExpr):
        q2, q1, q0 = (ClosedFormExpr.from_x_polynomial(p) for p in ops)
        du = u.derivative_x()
        return q2 * du.derivative_x() + q1 * du + q0 * u
    if isinstance(u, Polynomial):
        return p2 * u.derivative(2) + p1 * u.derivative() + p0 * u
    if isinstance(u, PowerSeries):
        if u.order < 2:
            raise ValueError("need truncation order >= 2 to take two derivatives")
        terms = [u.derivative(2) * p2, u.derivative() * p1, u * p0]
        n = min(t.order for t in terms)
        return PowerSeries(sum(t[k] for t in terms) for k in range(n + 1))
    raise TypeError(f"unsupported candidate type {type(u).__name__}")


def is_identically_zero(residual: Candidate) -> bool:
    return residual.is_zero()


def ode_residual_general(candidate: Candidate, params: HeunParams) -> Candidate:
    """L[u] for the general Heun equation multiplied by x(x-1)(x-a).

    For a t-Laurent candidate the result is again a t-Laurent expression;
    multiplying it by t^{-min exponent} gives the numerator polynomial, so it
    is identically zero exactly when it has no terms.
    """
    if (
        isinstance(candidate, ClosedFormExpr)
        and (candidate.min_exponent or 0) < 0
        and params.a != HALF
    ):
        raise ValueError(
            "candidate has poles at x = 1/2 but the equation's singular point is "
            f"a = {params.a}"
        )
    return apply_operator(params.operator(), candidate)


def ode_residual_confluent(candidate: Candidate, params: ConfluentHeunParams) -> Candidate:
    """L[u] for the confluent Heun equation multiplied by x(x-1)."""
    if isinstance(candidate, ClosedFormExpr) and (candidate.min_exponent or 0) < 0:
        raise ValueError("a pole at x = 1/2 is not admissible for the confluent equation")
    return apply_operator(params.operator(), candidate)


@dataclass(frozen=True)
class RelationCheck:
    relation: str
    base: object
    target: object
    lhs: PowerSeries
    rhs: PowerSeries
    diff: PowerSeries

    @property
    def equal(self) -> bool:
        return self.diff.is_zero()

    def __bool__(self) -> bool:
        return self.equal


Relation = Literal["2.1", "2.11", "3.4", "3.5"]
_MIN_COMPARED = 10


def _require_symmetric_heun(base: HeunParams) -> None:
    if not isinstance(base, HeunParams):
        raise TypeError("relations 2.1/2.11 need HeunParams")
    if base.a != HALF or base.delta != base.gamma or base.q != base.alpha * base.beta / 2:
        raise ValueError(
            "relations 2.1/2.11 apply to Hl(1/2, alpha*beta/2; alpha, beta; gamma, gamma)"
        )
    if base.alpha * base.beta == 0:
        raise ValueError("relations 2.1/2.11 need alpha*beta != 0")


def _require_kummer_confluent(base: ConfluentHeunParams) -> None:
    if not isinstance(base, ConfluentHeunParams):
        raise TypeError("relations 3.4/3.5 need ConfluentHeunParams")
    if base.delta != 0 or base.sigma != 4 * base.p * base.alpha:
        raise ValueError("relations 3.4/3.5 apply to HC(p, gamma, 0, alpha, 4 p alpha)")
    if base.alpha == 0:
        raise ValueError("relations 3.4/3.5 need alpha*p != 0")


def check_derivative_relation(
    relation: Relation,
    base: HeunParams | ConfluentHeunParams,
    order: int,
    j: int = 1,
) -> RelationCheck:
    """Compare both sides of a derivative-ladder relation as exact series.

    ``order`` is the truncation order of the base solution; the comparison
    runs over the ``order - j`` coefficients that survive differentiation
    (``j`` = 1 except for relation 3.5).
    """
    relation = str(relation)
    if relation in ("2.1", "2.11"):
        _require_symmetric_heun(base)
        steps = 1
    elif relation == "3.4":
        _require_kummer_confluent(base)
        steps = 1
    elif relation == "3.5":
        _require_kummer_confluent(base)
        if j < 0:
            raise ValueError("j must be nonnegative")
        if pochhammer(base.alpha, j) == 0:
            raise ValueError(f"(alpha)_j vanishes for alpha={base.alpha}, j={j}")
        steps = j
    else:
        raise ValueError(f"unknown relation {relation!r}; choose 2.1, 2.11, 3.4 or 3.5")
    if order - steps < _MIN_COMPARED - 1:
        raise ValueError(
            f"order {order} leaves fewer than {_MIN_COMPARED} coefficients to compare"
        )
    n = order - steps

    if relation in ("2.1", "2.11"):
        al, be, ga = base.alpha, base.beta, base.gamma
        u = heun_series(base, order)
        if relation == "2.1":
            target = HeunParams(HALF, (al + 2) * (be + 2) / 2, al + 2, be + 2, ga + 1, ga + 1)
            prefactor = t_power_series(-1, n)
        else:
            a2, b2 = 2 * ga - al, 2 * ga - be
            target = HeunParams(HALF, a2 * b2 / 2, a2, b2, ga + 1, ga + 1)
            prefactor = t_power_series(al + be + 1 - 2 * ga, n)
        lhs = heun_series(target, n)
        rhs = prefactor * u.derivative() * (ga / (al * be))
    else:
        p, ga, al = base.p, base.gamma, base.alpha
        target = ConfluentHeunParams(p, ga + steps, 0, al + steps, 4 * p * (al + steps))
        u = confluent_series(base, order)
        scale = (-1) ** steps * pochhammer(ga, steps) / ((4 * p) ** steps * pochhammer(al, steps))
        lhs = confluent_series(target, n)
        rhs = (u.derivative(steps) if steps else u) * scale
    return RelationCheck(relation, base, target, lhs, rhs, lhs - rhs)


def evaluate_series(
    params: HeunParams | ConfluentHeunParams,
    x: RationalLike,
    digits: int = 30,
    max_order: int = 4096,
) -> tuple[mpmath.mpf, int]:
    """Sum the local series at ``x`` inside its disc of convergence.

    Returns the value and the order used.  The order is doubled until the
    last ten coefficients contribute less than 10^-digits; this is a
    heuristic stopping rule, not a certified tail bound.
    """
    x = Fraction(x)
    if abs(x) >= params.radius:
        raise SeriesDomainError(
            f"|x| = {abs(x)} is not inside the convergence radius {params.radius} of the local series"
        )
    build = heun_series if isinstance(params, HeunParams) else confluent_series
    order = 64
    with mpmath.workdps(digits + 10):
        eps = mpmath.mpf(10) ** (-digits - 2)
        while True:
            s = build(params, order)
            tail = [abs(mpmath.mpf((s[k] * x**k).numerator) / (s[k] * x**k).denominator)
                    for k in range(order - 9, order + 1)]
            if max(tail) < eps:
                total = s.partial_sum(x)
                return mpmath.mpf(total.numerator) / total.denominator, order
            if order >= max_order:
                raise SeriesDomainError(
                    f"series did not settle within order {max_order} at x = {x}"
                )
            order *= 2
