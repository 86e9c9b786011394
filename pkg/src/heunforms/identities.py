"""Exact verification of the combinatorial identity catalog.

Each identity is a pair of callables over named integer parameters: ``lhs``
evaluates the displayed sum term by term, ``rhs`` the displayed closed
product.  The two never share code beyond the primitives in
:mod:`heunforms.exact`.
"""

from __future__ import annotations

import csv
import io
import itertools
import json
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Iterable, Iterator, Mapping, Sequence

from .exact import binomial as C
from .exact import coeff_a, coeff_r, format_rational, pochhammer

__all__ = [
    "Identity",
    "IdentityCase",
    "IdentityReport",
    "InadmissibleParameters",
    "IDENTITIES",
    "REDUCTIONS",
    "normalize_identity_id",
    "verify_identity",
    "admissible_tuples",
    "sweep",
    "emit_report",
    "check_reductions",
    "PARTICULAR_CASES",
    "transport_5_2",
    "transport_2_4",
    "transport_5_3",
    "transport_2_5",
]

F = Fraction
QUARTER = F(-1, 4)


class InadmissibleParameters(ValueError):
    pass


@lru_cache(maxsize=None)
def _ratio(a: Fraction, b: Fraction, j: int) -> Fraction:
    """(a)_j / (b)_j."""
    return pochhammer(a, j) / pochhammer(b, j)


def _inv(v: int) -> Fraction:
    return F(1, v)


@dataclass(frozen=True)
class Identity:
    id: str
    params: tuple[str, ...]
    admissible: Callable[..., bool]
    lhs: Callable[..., Fraction]
    rhs: Callable[..., Fraction]
    #: the equation this is a special case of, for the particular cases
    parent: str | None = None


def _ident(id_, params, admissible, lhs, rhs, parent=None):
    return Identity(id_, tuple(params.split()), admissible, lhs, rhs, parent)


_CATALOG: list[Identity] = [
    _ident(
        "I2.4", "n m i",
        lambda n, m, i: 0 <= m <= n and 0 <= i <= n - m,
        lambda n, m, i: sum(
            (-1) ** (j - i) * C(n - m, j) * _ratio(m + F(1, 2), F(m + 1), j) * C(j, i)
            for j in range(i, n - m + 1)
        ),
        lambda n, m, i: F(4**m) / (C(n, m) * C(2 * m, m)) * C(m + i, m) * coeff_a(n, m + i),
    ),
    _ident(
        "I2.5", "n m j",
        lambda n, m, j: 0 <= m <= n and 0 <= j <= n - m,
        lambda n, m, j: sum(
            C(m + i, m) * C(i, j) * coeff_a(n, m + i) for i in range(j, n - m + 1)
        ),
        lambda n, m, j: F(C(n, m) * C(2 * m, m), 4**m) * _ratio(m + F(1, 2), F(m + 1), j) * C(n - m, j),
    ),
    _ident(
        "I2.6", "n",
        lambda n: n >= 0,
        lambda n: sum(QUARTER**j * C(n, j) * C(2 * j, j) for j in range(n + 1)),
        lambda n: F(C(2 * n, n), 4**n),
    ),
    _ident(
        "I2.7", "n",
        lambda n: n >= 0,
        lambda n: F(sum(C(2 * i, i) * C(2 * n - 2 * i, n - i) for i in range(n + 1))),
        lambda n: F(4**n),
    ),
    _ident(
        "I2.9", "n m i",
        lambda n, m, i: n >= 0 and m >= 0 and 0 <= i <= n,
        lambda n, m, i: sum(
            (-1) ** (j - i) * C(n, j) * _ratio(F(1, 2), F(m + 1), j) * C(j, i)
            for j in range(i, n + 1)
        ),
        lambda n, m, i: F(C(2 * n + 2 * m - 2 * i, 2 * m), C(n + m, n) * C(n + m - i, m)) * coeff_a(n, i),
    ),
    _ident(
        "I2.10", "n m j",
        lambda n, m, j: n >= 0 and m >= 0 and 0 <= j <= n,
        lambda n, m, j: sum(
            F(C(2 * n + 2 * m - 2 * i, 2 * m) * C(i, j), C(n + m - i, m)) * coeff_a(n, i)
            for i in range(j, n + 1)
        ),
        lambda n, m, j: C(n + m, n) * C(n, j) * _ratio(F(1, 2), F(m + 1), j),
    ),
    _ident(
        "I2.13", "n k i",
        lambda n, k, i: 0 <= k <= n and 0 <= i <= n - k,
        lambda n, k, i: sum(
            (-1) ** (j - i) * C(n - k, j) * _ratio(k + F(1, 2), F(2 * k + 1), j) * C(j, i)
            for j in range(i, n - k + 1)
        ),
        lambda n, k, i: F(4**k, C(n + k, n) * C(n, k)) * C(2 * n - 2 * i, 2 * k) * C(n, i) * coeff_r(n, k + i),
    ),
    _ident(
        "I2.14", "n k j",
        lambda n, k, j: 0 <= k <= n and 0 <= j <= n - k,
        lambda n, k, j: sum(
            C(2 * n - 2 * i, 2 * k) * C(n, i) * C(i, j) * coeff_r(n, k + i)
            for i in range(j, n - k + 1)
        ),
        lambda n, k, j: F(C(n + k, n) * C(n, k) * C(n - k, j), 4**k) * _ratio(k + F(1, 2), F(2 * k + 1), j),
    ),
    _ident(
        "I2.16", "n k i",
        lambda n, k, i: 1 <= k <= n and 0 <= i <= n - k,
        lambda n, k, i: sum(
            (-1) ** (j - i) * C(n - k, j) * _ratio(k + F(1, 2), F(2 * k), j) * C(j, i)
            for j in range(i, n - k + 1)
        ),
        lambda n, k, i: F(2 ** (2 * k - 1), C(n + k - 1, k - 1) * C(n - 1, k - 1))
        * C(2 * n - 2 * i - 2, 2 * k - 2) * C(n - 1, i) * coeff_r(n, k + i),
    ),
    _ident(
        "I2.17", "n k j",
        lambda n, k, j: 1 <= k <= n and 0 <= j <= n - k,
        lambda n, k, j: sum(
            C(2 * n - 2 * i - 2, 2 * k - 2) * C(n - 1, i) * C(i, j) * coeff_r(n, k + i)
            for i in range(j, n - k + 1)
        ),
        lambda n, k, j: F(C(n + k - 1, k - 1) * C(n - 1, k - 1) * C(n - k, j), 2 ** (2 * k - 1))
        * _ratio(k + F(1, 2), F(2 * k), j),
    ),
    _ident(
        "I2.18", "n",
        lambda n: n >= 0,
        lambda n: sum(QUARTER**j * C(n, j) * C(2 * j + 1, j) for j in range(n + 1)),
        lambda n: F(C(2 * n, n), (n + 1) * 4**n),
    ),
    _ident(
        "I2.19", "n",
        lambda n: n >= 0,
        lambda n: F(sum((i + 1) * C(2 * i + 2, i + 1) * C(2 * n - 2 * i, n - i) for i in range(n + 1))),
        lambda n: F(n + 1, 2) * 4 ** (n + 1),
    ),
    _ident(
        "I2.22", "n k i",
        lambda n, k, i: 0 <= k <= n and 0 <= i <= n - k,
        lambda n, k, i: sum(
            (-1) ** (j - i) * C(n - k, j) * _ratio(k + F(1, 2), F(2 * k + 2), j) * C(j, i)
            for j in range(i, n - k + 1)
        ),
        lambda n, k, i: F(4**k * (2 * k + 1), (n + 1) * C(n + k + 1, n) * C(n, k))
        * C(2 * n - 2 * i + 2, 2 * k + 2) * C(n + 1, i) * coeff_r(n, k + i),
    ),
    _ident(
        "I2.23", "n k j",
        lambda n, k, j: 0 <= k <= n and 0 <= j <= n - k,
        lambda n, k, j: sum(
            C(2 * n - 2 * i + 2, 2 * k + 2) * C(n + 1, i) * C(i, j) * coeff_r(n, k + i)
            for i in range(j, n - k + 1)
        ),
        lambda n, k, j: F((n + 1) * C(n + k + 1, n) * C(n, k) * C(n - k, j), 4**k * (2 * k + 1))
        * _ratio(k + F(1, 2), F(2 * k + 2), j),
    ),
    _ident(
        "I2.24", "n",
        lambda n: n >= 0,
        lambda n: sum(QUARTER**j * C(n + 1, j + 1) * C(2 * j, j) for j in range(n + 1)),
        lambda n: F((2 * n + 1) * C(2 * n, n), 4**n),
    ),
    _ident(
        "I2.25", "n h",
        lambda n, h: n >= 0 and h >= 0,
        lambda n, h: sum(
            QUARTER**j * C(n, j) * C(2 * j, j) * _inv(C(j + h, h)) for j in range(n + 1)
        ),
        lambda n, h: F(C(2 * n + 2 * h, n + h), 4**n * C(2 * h, h)),
    ),
    _ident(
        "I2.26", "n",
        lambda n: n >= 0,
        lambda n: F(sum((2 * n - 2 * i + 1) * C(2 * i, i) * C(2 * n - 2 * i, n - i) for i in range(n + 1))),
        lambda n: F((n + 1) * 4**n),
    ),
    _ident(
        "I3.99", "j",
        lambda j: j >= 0,
        lambda j: sum(F(C(j, 2 * i) * C(2 * i, i), 4**i) for i in range(j // 2 + 1)),
        lambda j: F(C(2 * j, j), 2**j),
    ),
    _ident(
        "I5.2", "n r m",
        lambda n, r, m: n >= 0 and r >= m >= 0,
        lambda n, r, m: sum(
            QUARTER**k * C(n + r - m, n - k) * C(2 * r + 2 * k, r + k) * C(r - m + k, k)
            for k in range(n + 1)
        ),
        lambda n, r, m: F(C(r, m) * C(2 * r, r) * C(2 * n, n), 4**n * C(n + r, m)),
    ),
    _ident(
        "I5.2-rmn", "n",
        lambda n: n >= 0,
        lambda n: sum(QUARTER**k * C(n, k) * C(2 * n + 2 * k, n + k) for k in range(n + 1)),
        lambda n: F(C(2 * n, n), 4**n),
        parent="I5.2",
    ),
    _ident(
        "I5.2-rm", "n r",
        lambda n, r: n >= 0 and r >= 0,
        lambda n, r: sum(QUARTER**k * C(n, k) * C(2 * r + 2 * k, r + k) for k in range(n + 1)),
        lambda n, r: F(C(2 * r, r) * C(2 * n, n), 4**n * C(n + r, r)),
        parent="I5.2",
    ),
    _ident(
        "I5.2-m0", "n r",
        lambda n, r: n >= 0 and r >= 0,
        lambda n, r: sum(
            QUARTER**k * C(n + r, n - k) * C(2 * r + 2 * k, r + k) * C(r + k, k) for k in range(n + 1)
        ),
        lambda n, r: F(C(2 * r, r) * C(2 * n, n), 4**n),
        parent="I5.2",
    ),
    _ident(
        "I5.2-rn", "n m",
        lambda n, m: 0 <= m <= n,
        lambda n, m: sum(
            QUARTER**k * C(2 * n - m, n - k) * C(2 * n + 2 * k, n + k) * C(n - m + k, k)
            for k in range(n + 1)
        ),
        lambda n, m: F(C(n, m) * C(2 * n, n) ** 2, 4**n * C(2 * n, m)),
        parent="I5.2",
    ),
    _ident(
        "I5.2-mn", "n r",
        lambda n, r: 0 <= n <= r,
        lambda n, r: sum(
            QUARTER**k * C(r, n - k) * C(2 * r + 2 * k, r + k) * C(r - n + k, k) for k in range(n + 1)
        ),
        lambda n, r: F(C(r, n) * C(2 * r, r) * C(2 * n, n), 4**n * C(n + r, r)),
        parent="I5.2",
    ),
    _ident(
        "I5.3", "n r m",
        lambda n, r, m: n >= 0 and r >= m >= 0,
        lambda n, r, m: F(sum(
            C(r + k, m) * C(r + k - m, k) * C(2 * r + 2 * k, r + k) * C(2 * n - 2 * k, n - k)
            for k in range(n + 1)
        )),
        lambda n, r, m: F(4**n * C(n + r, m) * C(2 * r, r) * C(n + r - m, n)),
    ),
    _ident(
        "I5.3-rmn", "n",
        lambda n: n >= 0,
        lambda n: F(sum(
            C(n + k, n) * C(2 * n + 2 * k, n + k) * C(2 * n - 2 * k, n - k) for k in range(n + 1)
        )),
        lambda n: F(4**n * C(2 * n, n) ** 2),
        parent="I5.3",
    ),
]

IDENTITIES: dict[str, Identity] = {ident.id: ident for ident in _CATALOG}


def normalize_identity_id(name: str) -> str:
    s = str(name).strip()
    if s[:1] in ("I", "i"):
        s = s[1:]
    key = "I" + s
    if key not in IDENTITIES:
        raise KeyError(f"unknown identity {name!r}; available: {', '.join(IDENTITIES)}")
    return key


@dataclass(frozen=True)
class IdentityCase:
    id: str
    params: dict
    lhs: Fraction
    rhs: Fraction

    @property
    def passed(self) -> bool:
        return self.lhs == self.rhs

    def to_record(self) -> dict:
        return {
            "identity": self.id,
            "params": dict(self.params),
            "lhs": format_rational(self.lhs),
            "rhs": format_rational(self.rhs),
            "pass": self.passed,
        }


@dataclass
class IdentityReport:
    id: str
    range: dict
    cases: list[IdentityCase] = field(default_factory=list)
    wall_time: float = 0.0

    @property
    def case_count(self) -> int:
        return len(self.cases)

    @property
    def failures(self) -> list[IdentityCase]:
        return [c for c in self.cases if not c.passed]

    @property
    def passed(self) -> bool:
        return not self.failures


def _as_kwargs(ident: Identity, params: Mapping[str, int] | Sequence[int]) -> dict:
    if isinstance(params, Mapping):
        if set(params) != set(ident.params):
            raise InadmissibleParameters(
                f"{ident.id} takes parameters {', '.join(ident.params)}, got {', '.join(params)}"
            )
        return {name: int(params[name]) for name in ident.params}
    params = tuple(params)
    if len(params) != len(ident.params):
        raise InadmissibleParameters(f"{ident.id} takes {len(ident.params)} parameters")
    return dict(zip(ident.params, (int(v) for v in params)))


def verify_identity(identity: str, params: Mapping[str, int] | Sequence[int]) -> IdentityCase:
    """Evaluate both sides of one identity instance exactly."""
    ident = IDENTITIES[normalize_identity_id(identity)]
    kw = _as_kwargs(ident, params)
    if not ident.admissible(**kw):
        raise InadmissibleParameters(f"{ident.id}: parameters {kw} are not admissible")
    return IdentityCase(ident.id, kw, F(ident.lhs(**kw)), F(ident.rhs(**kw)))


def admissible_tuples(identity: str, max_n: int) -> Iterator[tuple[int, ...]]:
    """Admissible tuples with every parameter in 0..max_n, lexicographic order."""
    ident = IDENTITIES[normalize_identity_id(identity)]
    for tup in itertools.product(range(max_n + 1), repeat=len(ident.params)):
        if ident.admissible(*tup):
            yield tup


def _sweep_one(args: tuple[str, int]) -> IdentityReport:
    identity, max_n = args
    ident = IDENTITIES[identity]
    start = time.perf_counter()
    report = IdentityReport(identity, {"max_n": max_n})
    for tup in admissible_tuples(identity, max_n):
        kw = dict(zip(ident.params, tup))
        report.cases.append(IdentityCase(identity, kw, F(ident.lhs(**kw)), F(ident.rhs(**kw))))
    report.wall_time = time.perf_counter() - start
    return report


def sweep(
    identities: Iterable[str] | None = None,
    max_n: int = 30,
    threads: int | None = None,
) -> list[IdentityReport]:
    """Run every admissible case of the selected identities (all by default).

    Reports come back in catalog order regardless of ``threads``; a failing
    case is recorded, never raised.
    """
    if max_n < 0:
        raise ValueError("max_n must be nonnegative")
    chosen = set(IDENTITIES) if identities is None else {normalize_identity_id(i) for i in identities}
    ordered = [i for i in IDENTITIES if i in chosen]
    jobs = [(i, max_n) for i in ordered]
    workers = threads if threads is not None else (os.cpu_count() or 1)
    if workers <= 1 or len(jobs) <= 1:
        return [_sweep_one(job) for job in jobs]
    with ProcessPoolExecutor(max_workers=min(workers, len(jobs))) as pool:
        return list(pool.map(_sweep_one, jobs))


CSV_COLUMNS = ("identity", "params", "lhs", "rhs", "pass")


def emit_report(reports: Iterable[IdentityReport | IdentityCase], fmt: str = "json") -> bytes:
    """Serialize cases as UTF-8 JSON (an array of records) or CSV."""
    cases: list[IdentityCase] = []
    for item in reports:
        cases.extend(item.cases if isinstance(item, IdentityReport) else [item])
    records = [c.to_record() for c in cases]
    if fmt == "json":
        return (json.dumps(records, indent=1) + "\n").encode("utf-8")
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(CSV_COLUMNS)
        for r in records:
            writer.writerow([
                r["identity"],
                json.dumps(r["params"], separators=(",", ":")),
                r["lhs"],
                r["rhs"],
                "true" if r["pass"] else "false",
            ])
        return buf.getvalue().encode("utf-8")
    raise ValueError(f"unknown format {fmt!r}; choose json or csv")


# -- cross-identity consistency ------------------------------------------


@dataclass(frozen=True)
class Reduction:
    """At each n, ``target(target_args(n))`` equals ``factor(n)`` times
    ``source(source_args(n))``, on both sides."""

    label: str
    source: str
    source_args: Callable[[int], tuple[int, ...]]
    target: str
    factor: Callable[[int], Fraction]


def _red(label, source, source_args, target, factor=lambda n: F(1)):
    return Reduction(label, source, source_args, target, factor)


REDUCTIONS: list[Reduction] = [
    _red("I2.4 at i=m=0", "I2.4", lambda n: (n, 0, 0), "I2.6"),
    _red("I2.5 at j=m=0", "I2.5", lambda n: (n, 0, 0), "I2.7", lambda n: F(4**n)),
    _red("I2.9 at i=m=0", "I2.9", lambda n: (n, 0, 0), "I2.6"),
    _red("I2.10 at j=m=0", "I2.10", lambda n: (n, 0, 0), "I2.7", lambda n: F(4**n)),
    _red("I2.13 at i=k=0", "I2.13", lambda n: (n, 0, 0), "I2.6"),
    _red("I2.14 at j=k=0", "I2.14", lambda n: (n, 0, 0), "I2.7", lambda n: F(4**n)),
    _red("I2.16 at i=0, k=1, n+1", "I2.16", lambda n: (n + 1, 1, 0), "I2.18"),
    _red("I2.17 at j=0, k=1, n+1", "I2.17", lambda n: (n + 1, 1, 0), "I2.19",
         lambda n: F((n + 1) * 4 ** (n + 1))),
    _red("I2.22 at i=k=0", "I2.22", lambda n: (n, 0, 0), "I2.24", lambda n: F(n + 1)),
    _red("I2.23 at j=k=0", "I2.23", lambda n: (n, 0, 0), "I2.26", lambda n: F(4**n, n + 1)),
    _red("I2.25 at h=1", "I2.25", lambda n: (n, 1), "I2.24", lambda n: F(n + 1)),
]

#: particular cases of I5.2/I5.3: case parameters -> parent parameters
PARTICULAR_CASES: dict[str, Callable[..., tuple[int, ...]]] = {
    "I5.2-rmn": lambda n: (n, n, n),
    "I5.2-rm": lambda n, r: (n, r, r),
    "I5.2-m0": lambda n, r: (n, r, 0),
    "I5.2-rn": lambda n, m: (n, n, m),
    "I5.2-mn": lambda n, r: (n, r, n),
    "I5.3-rmn": lambda n: (n, n, n),
}


def check_reductions(max_n: int) -> list[tuple[str, int, bool]]:
    """Special-case reductions between catalog entries, for n = 0..max_n."""
    out = []
    for red in REDUCTIONS:
        for n in range(max_n + 1):
            src = verify_identity(red.source, red.source_args(n))
            tgt = verify_identity(red.target, (n,))
            f = red.factor(n)
            out.append((red.label, n, tgt.lhs == f * src.lhs and tgt.rhs == f * src.rhs))
    return out


def transport_5_2(n: int, r: int, m: int) -> tuple[tuple[int, int, int], Fraction]:
    """I5.2 tuple -> the I2.4 tuple it came from, and the scale between them."""
    return (n + r, m, r - m), F(4**m, 4**r * C(2 * m, m))


def transport_2_4(n: int, m: int, i: int) -> tuple[int, int, int]:
    """I2.4 tuple -> I5.2 tuple; inverse of :func:`transport_5_2`."""
    r = i + m
    return (n - r, r, m)


def transport_5_3(n: int, r: int, m: int) -> tuple[tuple[int, int, int], Fraction]:
    """I5.3 tuple -> the I2.5 tuple it came from, and the scale between them."""
    return (n + r, m, r - m), F(1, 4 ** (n + r))


def transport_2_5(n: int, m: int, j: int) -> tuple[int, int, int]:
    r = j + m
    return (n - r, r, m)
