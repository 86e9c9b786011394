"""Exact rational arithmetic and the combinatorial primitives.

Rationals are :class:`fractions.Fraction`, which is always reduced and keeps a
positive denominator.  Nothing in this module ever touches a float.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Literal, Union

BigRational = Fraction
RationalLike = Union[int, Fraction]


def as_rational(value: RationalLike | str) -> Fraction:
    """Coerce an int, Fraction or ``"p/q"`` string to a Fraction.

    Floats are rejected on purpose: a float has already been rounded.
    """
    if isinstance(value, bool):
        raise TypeError("bool is not a rational")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        text = value.strip()
        if not text or any(c in text for c in ".eE"):
            raise ValueError(f"expected an integer or 'p/q' string, got {value!r}")
        return Fraction(text)
    raise TypeError(f"cannot convert {type(value).__name__} to an exact rational")


def format_rational(value: RationalLike) -> str:
    """Render as ``"p/q"`` (always with a denominator)."""
    value = Fraction(value)
    return f"{value.numerator}/{value.denominator}"


def binomial(n: int, k: int) -> int:
    """C(n, k) for n >= 0, zero when k is outside 0..n."""
    if n < 0:
        raise ValueError(f"binomial: n must be nonnegative, got {n}")
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


def pochhammer(x: RationalLike, k: int) -> Fraction:
    """Rising factorial (x)_k = x (x+1) ... (x+k-1), with (x)_0 = 1."""
    if k < 0:
        raise ValueError(f"pochhammer: k must be nonnegative, got {k}")
    x = Fraction(x)
    num, den = 1, 1
    for i in range(k):
        term = x + i
        num *= term.numerator
        den *= term.denominator
    return Fraction(num, den)


def _check_index(n: int, j: int) -> None:
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    if not 0 <= j <= n:
        raise ValueError(f"index j={j} outside 0..{n}")


@lru_cache(maxsize=None)
def coeff_a(n: int, j: int) -> Fraction:
    """a_{nj} = 4^{-n} C(2j, j) C(2n-2j, n-j)."""
    _check_index(n, j)
    return Fraction(binomial(2 * j, j) * binomial(2 * n - 2 * j, n - j), 4**n)


@lru_cache(maxsize=None)
def coeff_r(n: int, j: int) -> Fraction:
    """r_{nj} = a_{nj} / C(n, j)."""
    _check_index(n, j)
    return coeff_a(n, j) / binomial(n, j)


@dataclass(frozen=True)
class CoeffTable:
    """Row ``n`` of the a- or r-coefficients, ``values[j]`` for j = 0..n."""

    kind: Literal["a", "r"]
    n: int
    values: tuple[Fraction, ...]

    def __getitem__(self, j: int) -> Fraction:
        return self.values[j]

    def __len__(self) -> int:
        return len(self.values)


@lru_cache(maxsize=None)
def coeff_table(n: int, kind: Literal["a", "r"] = "a") -> CoeffTable:
    if kind == "a":
        fn = coeff_a
    elif kind == "r":
        fn = coeff_r
    else:
        raise ValueError(f"unknown coefficient kind {kind!r}")
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    return CoeffTable(kind, n, tuple(fn(n, j) for j in range(n + 1)))
