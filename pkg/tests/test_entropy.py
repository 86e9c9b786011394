from fractions import Fraction

import mpmath
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from heunforms.entropy import DistributionFamily, cross_check, power_sum_2, renyi2
from heunforms.hypergeom import onef1

F = Fraction


def test_power_sum_examples():
    assert power_sum_2(DistributionFamily("binomial", 1, F(1, 2))).value == F(1, 2)
    for n in range(1, 6):
        assert power_sum_2(DistributionFamily("binomial", n, 0)).value == 1
    assert power_sum_2(DistributionFamily("poisson", 1, 0)).value == 1


def test_validation():
    with pytest.raises(ValueError):
        DistributionFamily("binomial", 1, F(3, 2))
    with pytest.raises(ValueError):
        DistributionFamily("negbinomial", 1, 0)
    with pytest.raises(ValueError):
        DistributionFamily("poisson", 0, 1)
    with pytest.raises(ValueError):
        DistributionFamily("geometric", 1, 1)


def test_renyi2_examples():
    assert renyi2(F(1)) == 0
    with mpmath.workdps(40):
        assert abs(renyi2(F(1, 2)) - mpmath.log(2)) < mpmath.mpf(10) ** -35
        assert abs(renyi2(F(1, 4)) - mpmath.log(4)) < mpmath.mpf(10) ** -35
    assert abs(renyi2(F(1, 4), base=2) - 2) < 1e-15
    for bad in (F(0), F(-1), F(3, 2)):
        with pytest.raises(ValueError):
            renyi2(bad)


def test_cross_check_examples():
    (b,) = cross_check("binomial", 2, [F(1, 3)])
    assert b.ok and b.difference == 0
    (p,) = cross_check("poisson", 1, [F(1, 4)], tol=1e-10)
    with mpmath.workdps(40):
        assert p.ok and abs(p.power_sum - onef1(F(1, 2), 1, -1, tol=1e-30)) < 1e-10
    (nb,) = cross_check("negbinomial", 1, [F(1)], tol=1e-12)
    assert nb.ok and nb.heun == F(1, 3)


def test_cross_checks_over_grid():
    pts = [F(1, 10), F(1, 3), F(1, 2), F(1), F(2)]
    for n in range(1, 5):
        assert all(c.ok for c in cross_check("binomial", n, [p for p in pts if p <= 1]))
        assert all(c.ok for c in cross_check("negbinomial", n, pts))
        assert all(c.ok for c in cross_check("poisson", n, pts))


@settings(max_examples=50, deadline=None)
@given(st.integers(1, 12), st.integers(0, 30))
def test_binomial_symmetry_and_range(n, k):
    x = F(k, 30)
    s = power_sum_2(DistributionFamily("binomial", n, x)).value
    assert s == power_sum_2(DistributionFamily("binomial", n, 1 - x)).value
    assert 0 < s <= 1


def test_infinite_sums_in_unit_interval():
    for kind in ("negbinomial", "poisson"):
        for x in (F(1, 5), F(3)):
            s = power_sum_2(DistributionFamily(kind, 2, x))
            assert 0 < s.value < 1 and not s.exact
