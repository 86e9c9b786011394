"""Exact truncated power series, exact polynomials and t-Laurent forms.

Three value types live here:

* :class:`PowerSeries` -- coefficients of x^0..x^N around x = 0, with the
  truncation order N carried explicitly.
* :class:`Polynomial` -- an exact (untruncated) polynomial in x.
* :class:`ClosedFormExpr` -- a finite sum  sum_e c_e t^e  with t = 1 - 2x and
  integer exponents that may be negative.

All arithmetic is over :class:`fractions.Fraction`.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Mapping, Sequence, Union

from .exact import RationalLike

__all__ = [
    "PoleError",
    "PowerSeries",
    "Polynomial",
    "ClosedFormExpr",
    "generalized_binomial",
    "t_power_series",
    "ps_arith",
    "ps_differentiate",
    "cf_eval_exact",
    "cf_expand_series",
]


class PoleError(ZeroDivisionError):
    """Evaluation hit t = 0 (x = 1/2) with a negative power of t."""


def generalized_binomial(s: RationalLike, k: int) -> Fraction:
    """C(s, k) = s (s-1) ... (s-k+1) / k! for rational s."""
    if k < 0:
        return Fraction(0)
    s = Fraction(s)
    num, den = 1, 1
    for i in range(k):
        term = s - i
        num *= term.numerator
        den *= term.denominator * (i + 1)
    return Fraction(num, den)


def _strip(coeffs: Sequence[Fraction]) -> tuple[Fraction, ...]:
    n = len(coeffs)
    while n and not coeffs[n - 1]:
        n -= 1
    return tuple(coeffs[:n])


@dataclass(frozen=True)
class Polynomial:
    """Exact polynomial in x; ``coeffs[k]`` multiplies x^k, no trailing zeros."""

    coeffs: tuple[Fraction, ...] = ()

    def __init__(self, coeffs: Iterable[RationalLike] = ()):
        object.__setattr__(self, "coeffs", _strip([Fraction(c) for c in coeffs]))

    @classmethod
    def constant(cls, c: RationalLike) -> "Polynomial":
        return cls([c])

    @classmethod
    def x(cls) -> "Polynomial":
        return cls([0, 1])

    @property
    def degree(self) -> int:
        """Degree, -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def valuation(self) -> int | None:
        """Index of the lowest nonzero coefficient (None for zero)."""
        for k, c in enumerate(self.coeffs):
            if c:
                return k
        return None

    def is_zero(self) -> bool:
        return not self.coeffs

    def __getitem__(self, k: int) -> Fraction:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else Fraction(0)

    def __iter__(self) -> Iterator[Fraction]:
        return iter(self.coeffs)

    def __add__(self, other: "Polynomial | RationalLike") -> "Polynomial":
        other = _as_poly(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return Polynomial(self[k] + other[k] for k in range(n))

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        return Polynomial(-c for c in self.coeffs)

    def __sub__(self, other: "Polynomial | RationalLike") -> "Polynomial":
        return self + (-_as_poly(other))

    def __rsub__(self, other: RationalLike) -> "Polynomial":
        return _as_poly(other) - self

    def __mul__(self, other: "Polynomial | RationalLike") -> "Polynomial":
        if not isinstance(other, Polynomial):
            c = Fraction(other)
            return Polynomial(c * a for a in self.coeffs)
        if self.is_zero() or other.is_zero():
            return Polynomial()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return Polynomial(out)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "Polynomial":
        if e < 0:
            raise ValueError("negative power of a polynomial")
        result = Polynomial([1])
        for _ in range(e):
            result = result * self
        return result

    def derivative(self, times: int = 1) -> "Polynomial":
        p = self
        for _ in range(times):
            p = Polynomial(k * c for k, c in enumerate(p.coeffs) if k)
        return p

    def __call__(self, x: RationalLike) -> Fraction:
        x = Fraction(x)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def to_series(self, order: int) -> "PowerSeries":
        return PowerSeries([self[k] for k in range(order + 1)])

    def __repr__(self) -> str:
        return f"Polynomial([{', '.join(str(c) for c in self.coeffs)}])"


def _as_poly(value: "Polynomial | RationalLike") -> Polynomial:
    return value if isinstance(value, Polynomial) else Polynomial([value])


@dataclass(frozen=True)
class PowerSeries:
    """Truncated series c_0 + c_1 x + ... + c_N x^N + O(x^{N+1}).

    Coefficients past ``order`` are unknown, so binary operations keep the
    smaller of the two orders.
    """

    coeffs: tuple[Fraction, ...]

    def __init__(self, coeffs: Iterable[RationalLike]):
        coeffs = tuple(Fraction(c) for c in coeffs)
        if not coeffs:
            raise ValueError("a power series needs at least one coefficient")
        object.__setattr__(self, "coeffs", coeffs)

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __len__(self) -> int:
        return len(self.coeffs)

    def __getitem__(self, k: int) -> Fraction:
        if not 0 <= k <= self.order:
            raise IndexError(f"coefficient {k} is beyond truncation order {self.order}")
        return self.coeffs[k]

    def __iter__(self) -> Iterator[Fraction]:
        return iter(self.coeffs)

    def truncate(self, order: int) -> "PowerSeries":
        if order > self.order:
            raise ValueError(f"cannot raise truncation order {self.order} to {order}")
        return PowerSeries(self.coeffs[: order + 1])

    def __add__(self, other: "PowerSeries | RationalLike") -> "PowerSeries":
        if not isinstance(other, PowerSeries):
            return PowerSeries((self.coeffs[0] + Fraction(other),) + self.coeffs[1:])
        n = min(self.order, other.order)
        return PowerSeries(self.coeffs[k] + other.coeffs[k] for k in range(n + 1))

    __radd__ = __add__

    def __neg__(self) -> "PowerSeries":
        return PowerSeries(-c for c in self.coeffs)

    def __sub__(self, other: "PowerSeries | RationalLike") -> "PowerSeries":
        return self + (-other)

    def __mul__(self, other: "PowerSeries | Polynomial | RationalLike") -> "PowerSeries":
        if isinstance(other, PowerSeries):
            n = min(self.order, other.order)
            a, b = self.coeffs, other.coeffs
            return PowerSeries(
                sum((a[i] * b[k - i] for i in range(k + 1)), Fraction(0))
                for k in range(n + 1)
            )
        if isinstance(other, Polynomial):
            # x^v * (...) shifts the unknown tail up by v.
            v = other.valuation
            if v is None:
                return PowerSeries([0] * (self.order + 1))
            n = self.order + v
            a = self.coeffs
            out = []
            for k in range(n + 1):
                acc = Fraction(0)
                for i, p in enumerate(other.coeffs):
                    if p and 0 <= k - i <= self.order:
                        acc += p * a[k - i]
                out.append(acc)
            return PowerSeries(out)
        c = Fraction(other)
        return PowerSeries(c * a for a in self.coeffs)

    __rmul__ = __mul__

    def derivative(self, times: int = 1) -> "PowerSeries":
        s = self
        for _ in range(times):
            if s.order < 1:
                raise ValueError("cannot differentiate a series of truncation order 0")
            s = PowerSeries(k * c for k, c in enumerate(s.coeffs) if k)
        return s

    def partial_sum(self, x: RationalLike) -> Fraction:
        """Sum of the known terms at x (exact; says nothing about the tail)."""
        return Polynomial(self.coeffs)(x)

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __repr__(self) -> str:
        return f"PowerSeries([{', '.join(str(c) for c in self.coeffs)}])"


def ps_arith(op: str, a: PowerSeries, b: PowerSeries | RationalLike) -> PowerSeries:
    """Dispatch ``add``, ``mul`` or ``scale``."""
    if op == "add":
        return a + b
    if op == "mul":
        if not isinstance(b, PowerSeries):
            raise TypeError("mul expects two power series; use 'scale' for a scalar")
        return a * b
    if op == "scale":
        if isinstance(b, PowerSeries):
            raise TypeError("scale expects a scalar")
        return a * Fraction(b)
    raise ValueError(f"unknown series operation {op!r}")


def ps_differentiate(a: PowerSeries) -> PowerSeries:
    return a.derivative()


def t_power_series(exponent: RationalLike, order: int) -> PowerSeries:
    """Taylor expansion of (1 - 2x)^exponent around x = 0, any rational exponent."""
    if order < 0:
        raise ValueError("order must be nonnegative")
    return PowerSeries(generalized_binomial(exponent, k) * (-2) ** k for k in range(order + 1))


class ClosedFormExpr:
    """Finite t-Laurent expression  sum c_e t^e,  t = 1 - 2x.

    Built from ``(coefficient, exponent)`` pairs; repeated exponents are
    merged and zero coefficients dropped, so equality is structural.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Iterable[tuple[RationalLike, int]] | Mapping[int, RationalLike] = ()):
        if isinstance(terms, Mapping):
            pairs = [(c, e) for e, c in terms.items()]
        else:
            pairs = list(terms)
        acc: dict[int, Fraction] = {}
        for c, e in pairs:
            if int(e) != e:
                raise ValueError(f"t-exponents must be integers, got {e}")
            e = int(e)
            acc[e] = acc.get(e, Fraction(0)) + Fraction(c)
        self._terms = {e: c for e, c in sorted(acc.items()) if c}

    @classmethod
    def t_power(cls, e: int, c: RationalLike = 1) -> "ClosedFormExpr":
        return cls([(c, e)])

    @classmethod
    def from_x_polynomial(cls, poly: Polynomial) -> "ClosedFormExpr":
        """Rewrite a polynomial in x in terms of t, using x = (1 - t)/2."""
        x_in_t = cls([(Fraction(1, 2), 0), (Fraction(-1, 2), 1)])
        out = cls()
        power = cls([(1, 0)])
        for c in poly.coeffs:
            out = out + power * c
            power = power * x_in_t
        return out

    @property
    def terms(self) -> tuple[tuple[Fraction, int], ...]:
        return tuple((c, e) for e, c in self._terms.items())

    def coefficient(self, e: int) -> Fraction:
        return self._terms.get(e, Fraction(0))

    @property
    def exponents(self) -> tuple[int, ...]:
        return tuple(self._terms)

    @property
    def min_exponent(self) -> int | None:
        return min(self._terms) if self._terms else None

    @property
    def max_exponent(self) -> int | None:
        return max(self._terms) if self._terms else None

    def is_zero(self) -> bool:
        return not self._terms

    def value_at_zero(self) -> Fraction:
        """Value at x = 0, where t = 1."""
        return sum(self._terms.values(), Fraction(0))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ClosedFormExpr):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(tuple(self._terms.items()))

    def __add__(self, other: "ClosedFormExpr | RationalLike") -> "ClosedFormExpr":
        if not isinstance(other, ClosedFormExpr):
            other = ClosedFormExpr([(other, 0)])
        return ClosedFormExpr(list(self.terms) + list(other.terms))

    __radd__ = __add__

    def __neg__(self) -> "ClosedFormExpr":
        return ClosedFormExpr([(-c, e) for c, e in self.terms])

    def __sub__(self, other: "ClosedFormExpr | RationalLike") -> "ClosedFormExpr":
        if not isinstance(other, ClosedFormExpr):
            other = ClosedFormExpr([(other, 0)])
        return self + (-other)

    def __mul__(self, other: "ClosedFormExpr | RationalLike") -> "ClosedFormExpr":
        if not isinstance(other, ClosedFormExpr):
            c = Fraction(other)
            return ClosedFormExpr([(c * a, e) for a, e in self.terms])
        return ClosedFormExpr(
            [(a * b, e + f) for a, e in self.terms for b, f in other.terms]
        )

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "ClosedFormExpr":
        if k < 0:
            raise ValueError("negative powers of a general t-expression are not supported")
        out = ClosedFormExpr([(1, 0)])
        for _ in range(k):
            out = out * self
        return out

    def derivative_t(self) -> "ClosedFormExpr":
        return ClosedFormExpr([(c * e, e - 1) for c, e in self.terms])

    def derivative_x(self) -> "ClosedFormExpr":
        """d/dx = -2 d/dt."""
        return self.derivative_t() * -2

    def __call__(self, x: RationalLike) -> Fraction:
        return cf_eval_exact(self, x)

    def __repr__(self) -> str:
        if not self._terms:
            return "ClosedFormExpr(0)"
        body = " + ".join(f"({c})*t^{e}" for e, c in self._terms.items())
        return f"ClosedFormExpr({body})"


def cf_eval_exact(e: ClosedFormExpr, x: RationalLike) -> Fraction:
    t = 1 - 2 * Fraction(x)
    if t == 0 and e.min_exponent is not None and e.min_exponent < 0:
        raise PoleError(f"negative power of (1-2x) at x = 1/2: {e!r}")
    return sum((c * t**k for c, k in e.terms), Fraction(0))


def cf_expand_series(e: ClosedFormExpr, order: int) -> PowerSeries:
    """Exact Taylor coefficients of ``e`` up to x^order."""
    if order < 0:
        raise ValueError("order must be nonnegative")
    out = [Fraction(0)] * (order + 1)
    for c, k in e.terms:
        for i, b in enumerate(t_power_series(k, order)):
            out[i] += c * b
    return PowerSeries(out)
