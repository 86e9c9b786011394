from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from heunforms.exact import (
    as_rational,
    binomial,
    coeff_a,
    coeff_r,
    coeff_table,
    format_rational,
    pochhammer,
)


def pascal_row(n):
    row = [1]
    for _ in range(n):
        row = [a + b for a, b in zip([0] + row, row + [0])]
    return row


def test_binomial_examples():
    assert binomial(4, 2) == 6
    assert binomial(5, 7) == 0
    assert binomial(5, -1) == 0


def test_binomial_against_pascal_oracle():
    row = pascal_row(30)
    assert row[15] == 155117520
    assert [binomial(30, k) for k in range(31)] == row


def test_binomial_rejects_negative_n():
    with pytest.raises(ValueError):
        binomial(-1, 0)


def test_pochhammer_examples():
    assert pochhammer(Fraction(1, 2), 0) == 1
    assert pochhammer(Fraction(1, 2), 2) == Fraction(3, 4)
    assert pochhammer(3, 3) == 60
    assert pochhammer(-2, 3) == 0
    with pytest.raises(ValueError):
        pochhammer(1, -1)


@given(st.integers(-20, 20), st.integers(0, 10), st.integers(0, 10))
def test_pochhammer_splits(x, j, k):
    assert pochhammer(x, j + k) == pochhammer(x, j) * pochhammer(x + j, k)


def test_coeff_examples():
    assert coeff_a(1, 0) == Fraction(1, 2)
    assert coeff_a(2, 1) == Fraction(1, 4)
    assert coeff_a(2, 0) == Fraction(3, 8)
    assert coeff_r(1, 0) == Fraction(1, 2)
    assert coeff_r(2, 1) == Fraction(1, 8)
    assert coeff_r(2, 2) == Fraction(3, 8)


def test_coeff_r_oracle():
    # direct product of the defining factors, no shared helpers
    for n in range(12):
        for j in range(n + 1):
            a = Fraction(pascal_row(2 * j)[j] * pascal_row(2 * n - 2 * j)[n - j], 4**n)
            assert coeff_a(n, j) == a
            assert coeff_r(n, j) == a / pascal_row(n)[j]


@pytest.mark.parametrize("bad", [(-1, 0), (2, 3), (2, -1)])
def test_coeff_domain(bad):
    with pytest.raises(ValueError):
        coeff_a(*bad)
    with pytest.raises(ValueError):
        coeff_r(*bad)


def test_coeff_sum_and_symmetry_to_200():
    for n in range(201):
        row = [coeff_a(n, j) for j in range(n + 1)]
        assert sum(row) == 1
        assert row == row[::-1]
        r = [coeff_r(n, j) for j in range(n + 1)]
        assert r == r[::-1]


def test_coeff_table():
    t = coeff_table(3, "r")
    assert t.kind == "r" and t.n == 3
    assert list(t.values) == [coeff_r(3, j) for j in range(4)]
    assert coeff_table(3, "r") is t
    with pytest.raises(ValueError):
        coeff_table(3, "z")


def test_as_rational_and_format():
    assert as_rational("3/6") == Fraction(1, 2)
    assert as_rational("-4") == -4
    assert as_rational(Fraction(2, 3)) == Fraction(2, 3)
    for bad in ("0.5", "1e3", ""):
        with pytest.raises(ValueError):
            as_rational(bad)
    with pytest.raises(TypeError):
        as_rational(0.5)
    assert format_rational(Fraction(4, 2)) == "2/1"
    assert format_rational(Fraction(-3, 9)) == "-1/3"
