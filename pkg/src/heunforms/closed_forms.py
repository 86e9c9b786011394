"""Catalog of closed-form Heun and confluent Heun families.

General-Heun families all have a = 1/2 and are stored as t-Laurent
expressions in t = 1 - 2x.  Their "alternate" forms are sums over
4^j (x^2 - x)^j, which equals (t^2 - 1)^j, so they land in the same normal
form and the two displays can be compared term by term.

Every family carries its own parameter constructor; certification substitutes
the closed form into the ODE with those parameters.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable, Iterator, Optional, Sequence

from .exact import RationalLike, binomial, coeff_a, coeff_r, pochhammer
from .heun import (
    HALF,
    ConfluentHeunParams,
    HeunParams,
    confluent_series,
    ode_residual_confluent,
    ode_residual_general,
)
from .hypergeom import LaguerreSpec, laguerre_polynomial, onef1
from .series import ClosedFormExpr, Polynomial, cf_eval_exact

T = ClosedFormExpr.t_power


class CertificationFailure(AssertionError):
    """Two displayed forms of one family disagree."""

    def __init__(self, message: str, primary: ClosedFormExpr, alternate: ClosedFormExpr):
        super().__init__(f"{message}\n  primary:   {primary!r}\n  alternate: {alternate!r}")
        self.primary = primary
        self.alternate = alternate


def _hypergeometric_t_form(
    length: int, numer: Fraction, denom: Fraction, prefix_exponent: int = 0
) -> ClosedFormExpr:
    """t^prefix * sum_{j=0}^{length} C(length, j) (numer)_j/(denom)_j (t^2-1)^j."""
    base = ClosedFormExpr([(1, 2), (-1, 0)])
    out = ClosedFormExpr()
    power = ClosedFormExpr([(1, 0)])
    for j in range(length + 1):
        out = out + power * (binomial(length, j) * pochhammer(numer, j) / pochhammer(denom, j))
        power = power * base
    return out * T(prefix_exponent)


# -- general Heun families -------------------------------------------------


def _f22(n: int, _aux: int):
    params = HeunParams(HALF, -n, -2 * n, 1, 1, 1)
    primary = ClosedFormExpr([(coeff_a(n, j), 2 * j) for j in range(n + 1)])
    return params, primary, None


def _f23(n: int, m: int):
    params = HeunParams(HALF, (2 * m + 1) * (m - n), 2 * (m - n), 2 * m + 1, m + 1, m + 1)
    scale = Fraction(4**m, binomial(n, m) * binomial(2 * m, m))
    primary = ClosedFormExpr(
        [(scale * binomial(m + j, m) * coeff_a(n, m + j), 2 * j) for j in range(n - m + 1)]
    )
    alternate = _hypergeometric_t_form(n - m, m + HALF, Fraction(m + 1))
    return params, primary, alternate


def _f28(n: int, _aux: int):
    params = HeunParams(HALF, n + 1, 2 * n + 2, 1, 1, 1)
    primary = ClosedFormExpr([(coeff_a(n, j), 2 * j - 2 * n - 1) for j in range(n + 1)])
    return params, primary, None


def _ft4(n: int, m: int):
    params = HeunParams(
        HALF, (2 * m + 1) * (m + n + 1), 2 * (m + n + 1), 2 * m + 1, m + 1, m + 1
    )
    primary = ClosedFormExpr(
        [
            (
                Fraction(binomial(2 * n + 2 * m - 2 * j, 2 * m), binomial(n + m - j, m))
                * coeff_a(n, j)
                / binomial(n + m, n),
                2 * j - 2 * n - 2 * m - 1,
            )
            for j in range(n + 1)
        ]
    )
    alternate = _hypergeometric_t_form(n, HALF, Fraction(m + 1), -2 * n - 2 * m - 1)
    return params, primary, alternate


def _f212(n: int, k: int):
    params = HeunParams(HALF, (2 * k + 1) * (k - n), 2 * (k - n), 2 * k + 1, 2 * k + 1, 2 * k + 1)
    scale = Fraction(4**k, binomial(n + k, n) * binomial(n, k))
    primary = ClosedFormExpr(
        [
            (scale * binomial(2 * n - 2 * i, 2 * k) * binomial(n, i) * coeff_r(n, k + i), 2 * i)
            for i in range(n - k + 1)
        ]
    )
    alternate = _hypergeometric_t_form(n - k, k + HALF, Fraction(2 * k + 1))
    return params, primary, alternate


def _f215(n: int, k: int):
    params = HeunParams(HALF, (2 * k - 1) * (k + n), 2 * (k + n), 2 * k - 1, 2 * k, 2 * k)
    scale = Fraction(2 ** (2 * k - 1), binomial(n + k - 1, k - 1) * binomial(n - 1, k - 1))
    primary = ClosedFormExpr(
        [
            (
                scale * binomial(2 * n - 2 * i - 2, 2 * k - 2) * binomial(n - 1, i) * coeff_r(n, k + i),
                1 - 2 * n + 2 * i,
            )
            for i in range(n - k + 1)
        ]
    )
    alternate = _hypergeometric_t_form(n - k, k + HALF, Fraction(2 * k), 1 - 2 * n)
    return params, primary, alternate


def _f220(n: int, k: int):
    params = HeunParams(
        HALF, (2 * k + 1) * (k + n + 1), 2 * (k + n + 1), 2 * k + 1, 2 * k + 1, 2 * k + 1
    )
    scale = Fraction(4**k, binomial(n + k, n) * binomial(n, k))
    primary = ClosedFormExpr(
        [
            (
                scale * binomial(2 * k + 2 * j, 2 * j) * binomial(n, k + j) * coeff_r(n, j),
                -2 * k - 1 - 2 * j,
            )
            for j in range(n - k + 1)
        ]
    )
    alternate = _hypergeometric_t_form(n - k, k + HALF, Fraction(2 * k + 1), -2 * n - 1)
    return params, primary, alternate


def _f221(n: int, k: int):
    # Parameters exactly as displayed; certification decides whether they fit.
    params = HeunParams(HALF, (2 * k + 1) * (k - n), 2 * (k - n), 2 * k + 1, 2 * k + 2, 2 * k + 2)
    scale = Fraction(4**k * (2 * k + 1), (n + 1) * binomial(n + k + 1, n) * binomial(n, k))
    primary = ClosedFormExpr(
        [
            (
                scale * binomial(2 * k + 2 * j + 2, 2 * j) * binomial(n + 1, k + j + 1) * coeff_r(n, j),
                2 * n - 2 * k - 2 * j,
            )
            for j in range(n - k + 1)
        ]
    )
    alternate = _hypergeometric_t_form(n - k, k + HALF, Fraction(2 * k + 2))
    return params, primary, alternate


@dataclass(frozen=True)
class HlFamily:
    id: str
    aux_name: Optional[str]
    #: (n, max_aux) -> admissible aux values for this n
    aux_values: Callable[[int, int], Sequence[int]]
    build: Callable[[int, int], tuple]
    min_n: int = 0
    #: the t-exponent shift making the form a polynomial in t^2, if any
    clearing_exponent: Optional[Callable[[int, int], int]] = None


def _no_aux(n: int, _max: int) -> Sequence[int]:
    return (0,)


HL_FAMILIES: dict[str, HlFamily] = {
    f.id: f
    for f in (
        HlFamily("F2.2", None, _no_aux, _f22),
        HlFamily("F2.3", "m", lambda n, _: range(n + 1), _f23),
        HlFamily("F2.8", None, _no_aux, _f28, clearing_exponent=lambda n, _: 2 * n + 1),
        HlFamily(
            "F2.T4", "m", lambda n, mx: range(mx + 1), _ft4,
            clearing_exponent=lambda n, m: 2 * n + 2 * m + 1,
        ),
        HlFamily("F2.12", "k", lambda n, _: range(n + 1), _f212),
        HlFamily(
            "F2.15", "k", lambda n, _: range(1, n + 1), _f215, min_n=1,
            clearing_exponent=lambda n, k: 2 * n - 1,
        ),
        HlFamily(
            "F2.20", "k", lambda n, _: range(n + 1), _f220,
            clearing_exponent=lambda n, k: 2 * n + 1,
        ),
        HlFamily("F2.21", "k", lambda n, _: range(n + 1), _f221),
    )
}


@dataclass(frozen=True)
class HlClosedForm:
    family: str
    n: int
    aux: Optional[int]
    params: HeunParams
    primary: ClosedFormExpr
    alternate: Optional[ClosedFormExpr]

    def __call__(self, x: RationalLike) -> Fraction:
        return cf_eval_exact(self.primary, x)


def hl_closed_form(family: str, n: int, aux: Optional[int] = None) -> HlClosedForm:
    """Parameters and closed form(s) of one member of a general-Heun family.

    When the family has two displayed forms they are compared before
    returning; a mismatch raises :class:`CertificationFailure`.
    """
    fam = HL_FAMILIES[normalize_family_id(family)]
    if n < fam.min_n:
        raise ValueError(f"{fam.id} needs n >= {fam.min_n}, got {n}")
    if fam.aux_name is None:
        if aux not in (None, 0):
            raise ValueError(f"{fam.id} takes no auxiliary parameter")
        aux = None
    else:
        if aux is None:
            raise ValueError(f"{fam.id} needs {fam.aux_name}")
        bound = aux if fam.id == "F2.T4" else n
        if aux not in fam.aux_values(n, max(bound, 0)):
            raise ValueError(f"{fam.id}: {fam.aux_name}={aux} outside the admissible range for n={n}")
    params, primary, alternate = fam.build(n, 0 if aux is None else aux)
    if alternate is not None and primary != alternate:
        raise CertificationFailure(f"{fam.id} n={n} {fam.aux_name}={aux}: forms differ", primary, alternate)
    return HlClosedForm(fam.id, n, aux, params, primary, alternate)


def hl_members(family: str, max_n: int, max_aux: Optional[int] = None) -> Iterator[tuple[int, Optional[int]]]:
    """All (n, aux) with n <= max_n; an unbounded aux is capped at ``max_aux`` (default max_n)."""
    fam = HL_FAMILIES[normalize_family_id(family)]
    cap = max_n if max_aux is None else max_aux
    for n in range(fam.min_n, max_n + 1):
        for aux in fam.aux_values(n, cap):
            yield n, (None if fam.aux_name is None else aux)


# -- confluent Heun families ----------------------------------------------


@dataclass(frozen=True)
class HcClosedForm:
    family: str
    params: ConfluentHeunParams
    polynomial: Optional[Polynomial] = None
    #: for the 1F1-backed families: (alpha, gamma, scale) with u(x) = 1F1(alpha; gamma; scale*x)
    kummer: Optional[tuple[Fraction, Fraction, Fraction]] = None

    def __call__(self, x, tol: float = 1e-30):
        if self.polynomial is not None and isinstance(x, (int, Fraction)):
            return self.polynomial(x)
        if self.polynomial is not None:
            return sum(c * x**k for k, c in enumerate(self.polynomial.coeffs))
        alpha, gamma, scale = self.kummer
        return onef1(alpha, gamma, scale * x, tol)

    def taylor_coefficients(self, order: int) -> list[Fraction]:
        """Exact Taylor coefficients of the closed form through x^order."""
        if self.polynomial is not None:
            return [self.polynomial[k] for k in range(order + 1)]
        alpha, gamma, scale = self.kummer
        return [
            pochhammer(alpha, k) / (pochhammer(gamma, k) * math.factorial(k)) * scale**k
            for k in range(order + 1)
        ]


def _scaled(poly: Polynomial, s: Fraction) -> Polynomial:
    """poly(s*x)."""
    return Polynomial(c * s**k for k, c in enumerate(poly.coeffs))


def _c311(p: Fraction, n: int, j: int) -> Polynomial:
    lead = Fraction(math.factorial(2 * j), math.factorial(j))
    # coefficient of x^{n-j-k}
    coeffs = [Fraction(0)] * (n - j + 1)
    for k in range(n - j + 1):
        coeffs[n - j - k] = (
            lead * binomial(n - j, k) * Fraction(math.factorial(n - k), math.factorial(2 * n - 2 * k))
            * (16 * p) ** (n - j - k)
        )
    return Polynomial(coeffs)


def _c312(p: Fraction, n: int, j: int, lam: Fraction) -> Polynomial:
    lead = pochhammer(lam + 1, j) / pochhammer(lam + 1, n)
    coeffs = [Fraction(0)] * (n - j + 1)
    for k in range(n - j + 1):
        coeffs[n - j - k] = lead * pochhammer(lam + n + 1 - k, k) * binomial(n - j, k) * (4 * p) ** (n - j - k)
    return Polynomial(coeffs)


def _c314(p: Fraction, n: int) -> Polynomial:
    coeffs = [Fraction(0)] * (n + 1)
    for k in range(n + 1):
        coeffs[n - k] = (
            math.factorial(n) * (16 * p) ** (n - k) / (math.factorial(k) * math.factorial(2 * n - 2 * k))
        )
    return Polynomial(coeffs)


def _c317(p: Fraction, n: int, lam: Fraction) -> Polynomial:
    lag = laguerre_polynomial(LaguerreSpec(n, lam))
    return _scaled(lag, -4 * p) * (math.factorial(n) / pochhammer(lam + 1, n))


HC_FAMILIES = ("C3.3", "C3.7", "C3.9", "C3.11", "C3.12", "C3.14", "C3.17")


def hc_closed_form(
    family: str,
    p: Optional[RationalLike] = None,
    n: int = 0,
    j: int = 0,
    lam: RationalLike = 0,
    alpha: Optional[RationalLike] = None,
    gamma: Optional[RationalLike] = None,
) -> HcClosedForm:
    """One member of a confluent-Heun family.

    C3.11, C3.12, C3.14 and C3.17 come back as exact polynomials; C3.3, C3.7
    and C3.9 as 1F1-backed evaluators.  For C3.7 and C3.9, p defaults to n.
    """
    fam = normalize_family_id(family)
    lam = Fraction(lam)
    if n < 0 or j < 0:
        raise ValueError("n and j must be nonnegative")
    if fam in ("C3.7", "C3.9"):
        if n < 1:
            raise ValueError(f"{fam} needs n >= 1")
        if p is not None and Fraction(p) != n:
            raise ValueError(f"{fam} fixes p = n")
        p = Fraction(n)
    if p is None:
        raise ValueError(f"{fam} needs p")
    p = Fraction(p)
    if p == 0:
        raise ValueError("p must be nonzero")

    if fam == "C3.3":
        if alpha is None or gamma is None:
            raise ValueError("C3.3 needs alpha and gamma")
        alpha, gamma = Fraction(alpha), Fraction(gamma)
        if alpha == 0:
            raise ValueError("C3.3 needs alpha != 0")
        params = ConfluentHeunParams(p, gamma, 0, alpha, 4 * p * alpha)
        return HcClosedForm(fam, params, kummer=(alpha, gamma, -4 * p))
    if fam == "C3.7":
        params = ConfluentHeunParams(p, 1, 0, HALF, 2 * n)
        return HcClosedForm(fam, params, kummer=(HALF, Fraction(1), -4 * p))
    if fam == "C3.9":
        params = ConfluentHeunParams(p, j + 1, 0, j + HALF, 2 * n * (2 * j + 1))
        return HcClosedForm(fam, params, kummer=(j + HALF, Fraction(j + 1), -4 * p))
    if fam == "C3.11":
        if not 0 <= j <= n:
            raise ValueError("C3.11 needs 0 <= j <= n")
        params = ConfluentHeunParams(p, j + HALF, 0, j - n, 4 * p * (j - n))
        return HcClosedForm(fam, params, polynomial=_c311(p, n, j))
    if fam == "C3.12":
        if not 0 <= j <= n:
            raise ValueError("C3.12 needs 0 <= j <= n")
        if lam <= -1:
            raise ValueError("C3.12 needs lambda > -1")
        params = ConfluentHeunParams(p, j + 1 + lam, 0, j - n, 4 * p * (j - n))
        return HcClosedForm(fam, params, polynomial=_c312(p, n, j, lam))
    if fam == "C3.14":
        params = ConfluentHeunParams(p, HALF, 0, -n, -4 * p * n)
        return HcClosedForm(fam, params, polynomial=_c314(p, n))
    if fam == "C3.17":
        if lam <= -1:
            raise ValueError("C3.17 needs lambda > -1")
        params = ConfluentHeunParams(p, lam + 1, 0, -n, -4 * p * n)
        return HcClosedForm(fam, params, polynomial=_c317(p, n, lam))
    raise KeyError(fam)


# -- ids -------------------------------------------------------------------

_ALIASES = {"T4": "F2.T4", "2.T4": "F2.T4", "F2.T4": "F2.T4", "2.4T": "F2.T4"}


def normalize_family_id(name: str) -> str:
    """Map '2.2', 'F2.2', '3.14', 'C3.14', 'T4' ... onto catalog ids."""
    s = str(name).strip().upper()
    if s in _ALIASES:
        return _ALIASES[s]
    if s[:1] in ("F", "C"):
        s = s[1:]
    if s.startswith("2.") and "F" + s in HL_FAMILIES:
        return "F" + s
    if s.startswith("3.") and "C" + s in HC_FAMILIES:
        return "C" + s
    raise KeyError(
        f"unknown family {name!r}; available: {', '.join(all_family_ids())}"
    )


def all_family_ids() -> list[str]:
    return list(HL_FAMILIES) + list(HC_FAMILIES)


# -- certification -------------------------------------------------------


@dataclass
class MemberResult:
    family: str
    params: dict
    passed: bool
    forms_equal: Optional[bool] = None
    #: lowest-order nonzero residual term, (coefficient, exponent) in t or x
    leading_residual: Optional[tuple[Fraction, int]] = None
    note: str = ""


@dataclass
class CertificationReport:
    family: str
    members: list[MemberResult] = field(default_factory=list)

    @property
    def failures(self) -> list[MemberResult]:
        return [m for m in self.members if not m.passed]

    @property
    def passed(self) -> bool:
        return bool(self.members) and not self.failures

    def __len__(self) -> int:
        return len(self.members)


def _leading_term_t(r: ClosedFormExpr) -> Optional[tuple[Fraction, int]]:
    return None if r.is_zero() else r.terms[0]


def _leading_term_x(r: Polynomial) -> Optional[tuple[Fraction, int]]:
    v = r.valuation
    return None if v is None else (r[v], v)


def certify_hl_member(family: str, n: int, aux: Optional[int]) -> MemberResult:
    fam = HL_FAMILIES[normalize_family_id(family)]
    label = {"n": n} if fam.aux_name is None else {"n": n, fam.aux_name: aux}
    params, primary, alternate = fam.build(n, 0 if aux is None else aux)
    forms_equal = None if alternate is None else primary == alternate
    residual = ode_residual_general(primary, params)
    lead = _leading_term_t(residual)
    note = ""
    if alternate is not None and not forms_equal:
        note = "displayed forms differ"
    if primary.value_at_zero() != 1:
        note = (note + "; " if note else "") + f"value at x=0 is {primary.value_at_zero()}"
    passed = lead is None and forms_equal is not False and primary.value_at_zero() == 1
    return MemberResult(fam.id, label, passed, forms_equal, lead, note)


DEFAULT_P_VALUES = (Fraction(1), Fraction(2), Fraction(3))
DEFAULT_LAMBDAS = (Fraction(0), Fraction(1, 2), Fraction(1), Fraction(2), Fraction(5))


def hc_members(
    family: str,
    max_n: int,
    p_values: Iterable[RationalLike] = DEFAULT_P_VALUES,
    lambdas: Iterable[RationalLike] = DEFAULT_LAMBDAS,
) -> Iterator[dict]:
    """Keyword sets for :func:`hc_closed_form` covering members with n <= max_n."""
    fam = normalize_family_id(family)
    ps = [Fraction(p) for p in p_values]
    lams = [Fraction(v) for v in lambdas]
    for n in range(max_n + 1):
        if fam == "C3.3":
            for p in ps:
                for alpha in sorted({Fraction(-n), n + HALF, Fraction(n + 1)} - {Fraction(0)}):
                    for gamma in (HALF, Fraction(1), Fraction(3, 2), Fraction(2)):
                        yield dict(p=p, n=n, alpha=alpha, gamma=gamma)
        elif fam == "C3.7" and n >= 1:
            yield dict(n=n)
        elif fam == "C3.9" and n >= 1:
            for j in range(max_n + 1):
                yield dict(n=n, j=j)
        elif fam == "C3.11":
            for p in ps:
                for j in range(n + 1):
                    yield dict(p=p, n=n, j=j)
        elif fam == "C3.12":
            for p in ps:
                for lam in lams:
                    for j in range(n + 1):
                        yield dict(p=p, n=n, j=j, lam=lam)
        elif fam == "C3.14":
            for p in ps:
                yield dict(p=p, n=n)
        elif fam == "C3.17":
            for p in ps:
                for lam in lams:
                    yield dict(p=p, n=n, lam=lam)


def certify_hc_member(family: str, **kw) -> MemberResult:
    fam = normalize_family_id(family)
    form = hc_closed_form(fam, **kw)
    if form.polynomial is not None:
        residual = ode_residual_confluent(form.polynomial, form.params)
        lead = _leading_term_x(residual)
        ok_norm = form.polynomial(0) == 1
        note = "" if ok_norm else f"value at x=0 is {form.polynomial(0)}"
        return MemberResult(fam, kw, lead is None and ok_norm, None, lead, note)
    # 1F1-backed: exact Taylor coefficients against the Frobenius series.
    order = 24
    series = confluent_series(form.params, order)
    expected = form.taylor_coefficients(order)
    for k in range(order + 1):
        if series[k] != expected[k]:
            return MemberResult(fam, kw, False, None, (series[k] - expected[k], k),
                                "Taylor coefficient mismatch")
    return MemberResult(fam, kw, True)


def certify_family(
    family: str,
    max_n: int,
    *,
    max_aux: Optional[int] = None,
    p_values: Iterable[RationalLike] = DEFAULT_P_VALUES,
    lambdas: Iterable[RationalLike] = DEFAULT_LAMBDAS,
) -> CertificationReport:
    """Certify every member with n <= max_n.

    General-Heun members: ODE residual of the closed form is identically zero,
    displayed forms agree, and the value at x = 0 is 1.  Polynomial confluent
    members: confluent ODE residual vanishes and the value at 0 is 1.
    1F1-backed members: Taylor coefficients match the Frobenius series
    exactly through x^24.  Failures are recorded, never raised.
    """
    if max_n < 0:
        raise ValueError("max_n must be nonnegative")
    fam = normalize_family_id(family)
    report = CertificationReport(fam)
    if fam in HL_FAMILIES:
        for n, aux in hl_members(fam, max_n, max_aux):
            report.members.append(certify_hl_member(fam, n, aux))
    else:
        for kw in hc_members(fam, max_n, p_values, lambdas):
            report.members.append(certify_hc_member(fam, **kw))
    return report


# -- index sums ------------------------------------------------------------


@dataclass(frozen=True)
class IndexSum:
    value: Fraction
    tail_bound: Fraction
    terms: int


def index_form_sum(which: str, n: int, x: RationalLike, tol: RationalLike | float = 1e-15,
                   max_terms: int = 1_000_000) -> IndexSum:
    """The squared-probability index sums.

    ``"1.3"``: sum_k (C(n,k) x^k (1-x)^{n-k})^2, exact and finite.
    ``"1.4"``: sum_k (C(n+k-1,k) x^k (1+x)^{-n-k})^2 for x > 0, summed in
    exact rationals until the geometric tail bound term/(1-rho) drops below
    ``tol``, rho = ((n+K)/(K+1))^2 (x/(1+x))^2 being the current term ratio.
    The ratios decrease in K, so the bound is rigorous once rho < 1.
    """
    x = Fraction(x)
    which = str(which)
    if which == "1.3":
        if n < 0:
            raise ValueError("n must be nonnegative")
        value = sum(
            (Fraction(binomial(n, k)) * x**k * (1 - x) ** (n - k)) ** 2 for k in range(n + 1)
        )
        return IndexSum(Fraction(value), Fraction(0), n + 1)
    if which == "1.4":
        if n < 1:
            raise ValueError("n must be positive")
        if x <= 0:
            raise ValueError("the negative-binomial sum needs x > 0")
        tol = Fraction(tol)
        q = (x / (1 + x)) ** 2
        term = (1 / (1 + x)) ** (2 * n)
        total = Fraction(0)
        for k in range(max_terms):
            total += term
            rho = Fraction(n + k, k + 1) ** 2 * q
            if rho < 1:
                bound = term / (1 - rho)
                if bound < tol:
                    return IndexSum(total, bound, k + 1)
            term *= rho
        raise RuntimeError(f"tolerance {tol} not reached within {max_terms} terms")
    raise ValueError(f"unknown index sum {which!r}; choose 1.3 or 1.4")


def negative_binomial_closed_form(n: int, x: RationalLike) -> Fraction:
    """Hl(1/2, n; 2n, 1; 1, 1; -x), the (n-1) member of F2.8 evaluated at -x."""
    if n < 1:
        raise ValueError("n must be positive")
    return hl_closed_form("F2.8", n - 1)(-Fraction(x))
