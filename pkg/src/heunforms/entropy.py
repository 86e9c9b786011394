"""Order-2 power sums of the binomial, negative binomial and Poisson laws.

These sums are the collision probabilities whose negative logarithm is the
Rényi entropy of order 2.  Each one also has a Heun-side expression, and
:func:`cross_check` compares the two.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Literal, Union

import mpmath

from .closed_forms import hl_closed_form, index_form_sum, negative_binomial_closed_form
from .exact import RationalLike
from .hypergeom import DIGITS, kn_series

Kind = Literal["binomial", "negbinomial", "poisson"]
Value = Union[Fraction, mpmath.mpf]


def _mpf(v) -> mpmath.mpf:
    if isinstance(v, Fraction):
        return mpmath.mpf(v.numerator) / v.denominator
    return mpmath.mpf(v)


@dataclass(frozen=True)
class DistributionFamily:
    kind: Kind
    n: int
    x: Fraction

    def __post_init__(self) -> None:
        object.__setattr__(self, "x", Fraction(self.x))
        if self.kind not in ("binomial", "negbinomial", "poisson"):
            raise ValueError(f"unknown distribution {self.kind!r}")
        if self.n < 1:
            raise ValueError("n must be at least 1")
        if self.kind == "binomial" and not 0 <= self.x <= 1:
            raise ValueError("binomial needs 0 <= x <= 1")
        if self.kind == "negbinomial" and self.x <= 0:
            raise ValueError("negative binomial needs x > 0")
        if self.kind == "poisson" and self.x < 0:
            raise ValueError("poisson needs x >= 0")


@dataclass(frozen=True)
class PowerSum:
    value: Value
    tail_bound: Value
    terms: int

    @property
    def exact(self) -> bool:
        return isinstance(self.value, Fraction) and self.tail_bound == 0


def _poisson_power_sum(n: int, x: Fraction, tol, max_terms: int) -> PowerSum:
    # sum_k (lam^k/k!)^2 exactly, then times e^{-2 lam}; term ratio (lam/(k+1))^2
    lam = n * x
    with mpmath.workdps(DIGITS):
        decay = mpmath.exp(-2 * _mpf(lam))
        tol = mpmath.mpf(tol)
        term, total = Fraction(1), Fraction(0)
        for k in range(max_terms):
            total += term
            rho = (lam / (k + 1)) ** 2
            if rho < 1:
                bound = decay * _mpf(term * rho / (1 - rho))
                if bound <= tol:
                    return PowerSum(decay * _mpf(total), bound, k + 1)
            term *= rho
    raise RuntimeError(f"tolerance {tol} not reached within {max_terms} terms")


def power_sum_2(family: DistributionFamily, tol: float = 1e-15, max_terms: int = 1_000_000) -> PowerSum:
    """sum_k p_k^2 for the family.

    Binomial: exact.  Negative binomial: exact partial sum plus a certified
    geometric tail bound.  Poisson: 40-digit value with a certified tail bound.
    """
    if family.kind == "binomial":
        s = index_form_sum("1.3", family.n, family.x)
        return PowerSum(s.value, Fraction(0), s.terms)
    if family.kind == "negbinomial":
        s = index_form_sum("1.4", family.n, family.x, tol, max_terms)
        return PowerSum(s.value, s.tail_bound, s.terms)
    return _poisson_power_sum(family.n, family.x, tol, max_terms)


def renyi2(power_sum: Value | float, base: float | None = None) -> mpmath.mpf:
    """-log(sum p_k^2); natural log unless ``base`` is given."""
    with mpmath.workdps(DIGITS):
        s = _mpf(power_sum)
        if s <= 0:
            raise ValueError("power sum must be positive")
        if s > 1:
            raise ValueError("power sum of a probability vector cannot exceed 1")
        h = -mpmath.log(s)
        return h / mpmath.log(base) if base else h


def heun_value(family: DistributionFamily, tol: float = 1e-30) -> Value:
    """The same quantity computed on the Heun side.

    binomial     Hl(1/2, -n; -2n, 1; 1, 1; x) from its t-form
    negbinomial  Hl(1/2, n; 2n, 1; 1, 1; -x), evaluated at the mapped point -x
    poisson      K_n(x) = 1F1(1/2; 1; -4nx)
    """
    if family.kind == "binomial":
        return hl_closed_form("F2.2", family.n)(family.x)
    if family.kind == "negbinomial":
        return negative_binomial_closed_form(family.n, family.x)
    return kn_series(family.n, family.x, tol)


@dataclass(frozen=True)
class CrossCheck:
    family: DistributionFamily
    power_sum: Value
    heun: Value
    difference: Value
    ok: bool


def cross_check(
    kind: Kind, n: int, points: Iterable[RationalLike], tol: float = 1e-12
) -> list[CrossCheck]:
    """Compare power sums against Heun-side values at each point.

    Binomial points must agree exactly; the others within ``tol`` (the
    infinite sums are themselves truncated at tol/10).
    """
    out = []
    for x in points:
        fam = DistributionFamily(kind, n, Fraction(x))
        if kind == "binomial":
            ps, hv = power_sum_2(fam).value, heun_value(fam)
            out.append(CrossCheck(fam, ps, hv, ps - hv, ps == hv))
            continue
        ps = power_sum_2(fam, tol / 10).value
        hv = heun_value(fam)
        with mpmath.workdps(DIGITS):
            diff = _mpf(ps) - _mpf(hv)
            out.append(CrossCheck(fam, ps, hv, diff, abs(diff) <= tol))
    return out
