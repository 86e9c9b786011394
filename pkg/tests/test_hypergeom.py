from fractions import Fraction

import mpmath
import pytest

from heunforms.hypergeom import (
    ConvergenceError,
    Kummer1F1Spec,
    LaguerreSpec,
    kn_deriv_at_zero,
    kn_deriv_moment_route,
    kn_quadrature,
    kn_quadrature_checked,
    kn_series,
    laguerre,
    laguerre_polynomial,
    onef1,
    onef1_hermite_case,
    onef1_sum,
)
from heunforms.exact import pochhammer

F = Fraction
POINTS = [F(k, 7) for k in range(-5, 5)]


def mp(q):
    return mpmath.mpf(q.numerator) / q.denominator


def test_onef1_examples():
    assert onef1(F(3, 7), F(5, 2), 0) == 1
    for x in POINTS:
        assert onef1(-1, F(1, 2), x) == 1 - 2 * x
    assert onef1(F(1, 2), 1, 0, tol=1e-30) == 1


def test_onef1_against_independent_oracle():
    # mpmath.hyp1f1 serves as an independent reference
    with mpmath.workdps(40):
        for a, g, t in [(F(1, 2), 1, F(-4)), (F(3, 2), F(5, 3), F(7, 2)), (F(-5, 2), F(1, 3), F(-9, 4))]:
            got = onef1(a, g, t, tol=1e-32)
            ref = mpmath.hyp1f1(mp(F(a)), mp(F(g)), mp(t))
            assert abs(got - ref) < mpmath.mpf(10) ** -30


def test_onef1_tail_bound_is_honest():
    with mpmath.workdps(40):
        s = onef1_sum(Kummer1F1Spec(F(1, 2), 1), F(-8), tol=1e-20)
        ref = mpmath.hyp1f1(0.5, 1, -8)
        assert abs(s.value - ref) <= s.tail_bound + mpmath.mpf(10) ** -35


def test_onef1_requires_tol_when_infinite():
    with pytest.raises(ValueError):
        onef1(F(1, 2), 1, F(1))
    with pytest.raises(ValueError):
        Kummer1F1Spec(1, -2)
    with pytest.raises(ConvergenceError):
        onef1_sum(Kummer1F1Spec(F(1, 2), 1), F(-40), tol=1e-30, max_terms=10)


def test_hermite_case_examples():
    for x in POINTS:
        assert onef1_hermite_case(1, x) == 1 - 2 * x
        assert onef1_hermite_case(0, x) == 1
    assert onef1_hermite_case(2, 1) == F(-5, 3)
    assert onef1(-2, F(1, 2), 1) == F(-5, 3)


def test_hermite_case_matches_terminating_series():
    for n in range(21):
        for x in POINTS:
            assert onef1_hermite_case(n, x) == onef1(-n, F(1, 2), x)


def test_laguerre_examples():
    for x in POINTS:
        assert laguerre(LaguerreSpec(1, 0), x) == 1 - x
        assert laguerre(LaguerreSpec(0, F(3, 2)), x) == 1
    assert laguerre(LaguerreSpec(2, 1), 0) == 3
    with pytest.raises(ValueError):
        LaguerreSpec(2, -1)


def test_laguerre_kummer_relation():
    # 1F1(-n; lam+1; x) = L_n^lam(x) / binom-type normalization (lam+1)_n / n!
    import math
    for lam in range(6):
        for n in range(16):
            scale = F(math.factorial(n)) / pochhammer(lam + 1, n)
            for x in POINTS:
                assert onef1(-n, lam + 1, x) == scale * laguerre(LaguerreSpec(n, lam), x)


def test_laguerre_three_term_recurrence():
    for lam in (F(0), F(1, 2), F(3)):
        x = laguerre_polynomial(LaguerreSpec(1, 0)).x()
        for n in range(1, 10):
            l_next = laguerre_polynomial(LaguerreSpec(n + 1, lam))
            l_n = laguerre_polynomial(LaguerreSpec(n, lam))
            l_prev = laguerre_polynomial(LaguerreSpec(n - 1, lam))
            lhs = l_next * (n + 1)
            rhs = l_n * (2 * n + 1 + lam) - x * l_n - l_prev * (n + lam)
            assert lhs == rhs


def test_quadrature_examples():
    for m in (1, 5, 64):
        assert kn_quadrature(3, 0, m) == 1
    with mpmath.workdps(40):
        assert abs(kn_quadrature(1, F(1, 4), 64) - mpmath.hyp1f1(0.5, 1, -1)) < 1e-10
        assert abs(kn_quadrature(2, 1, 64) - kn_quadrature(2, 1, 128)) < 1e-12
    with pytest.raises(ValueError):
        kn_quadrature(1, 1, 0)


def test_quadrature_error_decreases_with_nodes():
    with mpmath.workdps(40):
        ref = kn_series(2, F(1, 2), 1e-35)
        errs = [abs(kn_quadrature(2, F(1, 2), m) - ref) for m in (2, 4, 8, 16)]
        floor = mpmath.mpf(10) ** -25
        assert all(b < a or a < floor for a, b in zip(errs, errs[1:]))
        assert kn_quadrature_checked(2, F(1, 2)) is not None


def test_kn_derivatives():
    assert kn_deriv_at_zero(5, 0) == 1
    assert kn_deriv_at_zero(1, 1) == -2
    assert kn_deriv_at_zero(2, 2) == 24
    for n in range(1, 4):
        for j in range(40):
            assert kn_deriv_moment_route(n, j) == kn_deriv_at_zero(n, j)
    with pytest.raises(ValueError):
        kn_deriv_at_zero(1, -1)
