"""Exhaustive checks of the two slope inequalities and the dimension formula.

Candidate sets are the hypothesis sets of the inequalities: they are cut
out by checkable slope conditions and so contain every geometric quotient
or kernel, plus possibly more.  The inequalities hold on the whole
hypothesis set, so any violation reported here is a bug.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Iterator

import numpy as np

from hnpoly.bundles import Bundle, StableSummand, is_semistable
from hnpoly.errors import DomainError
from hnpoly.extensions import enumerate_extensions
from hnpoly.moduli import dim_ext_stratum
from hnpoly.paths import concave_paths, height_order_key
from hnpoly.polygons import (
    bundle_of,
    deg_hom_nonneg,
    polygon_leq,
    polygon_of,
    twice_area_between,
)
from hnpoly.strata import down_set

DEFAULT_MAX_RANK = 5
DEFAULT_MAX_DEN = 3
DEFAULT_MAX_NUM = 3


@dataclass
class SweepReport:
    instances_checked: int = 0
    violations: list[dict] = field(default_factory=list)
    equality_cases: list[dict] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.violations

    def merge(self, other: SweepReport) -> SweepReport:
        self.instances_checked += other.instances_checked
        self.violations.extend(other.violations)
        self.equality_cases.extend(other.equality_cases)
        return self

    def to_json(self) -> dict:
        return {
            "passed": self.passed,
            "instances_checked": self.instances_checked,
            "violations": self.violations,
            "equality_cases": self.equality_cases,
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True, indent=2)


def _record(report: SweepReport, lhs: int, rhs: int, **inputs):
    report.instances_checked += 1
    if lhs < rhs:
        return
    rec = {k: str(v) for k, v in inputs.items()}
    rec.update(lhs=lhs, rhs=rhs)
    report.violations.append(rec)
    if lhs == rhs:
        report.equality_cases.append(rec)


# -- surjection inequality -------------------------------------------------


def _check_step1(e: Bundle, f: Bundle):
    if f.is_zero or not is_semistable(f):
        raise DomainError(f"f = {f} must be nonzero and semistable")
    if e.is_zero or not e.mu_max < f.mu:
        raise DomainError("need the maximal slope of e strictly below mu(f)")
    if not e.rank > f.rank:
        raise DomainError("need rank e > rank f")


def candidates_step1(e: Bundle, f: Bundle) -> list[Bundle]:
    """Bundles ``q != f`` that pass the slope tests for being a quotient of
    ``e`` and a subbundle of ``f``."""
    _check_step1(e, f)
    e_strips = polygon_of(e).strip_slopes()
    out = []
    for r in range(1, f.rank + 1):
        out.extend(q for q in _quotient_shapes(r, f.mu, tuple(e_strips[-r:])) if q != f)
    return out


@lru_cache(maxsize=1 << 14)
def _quotient_shapes(r: int, slope_max: Fraction, tail: tuple) -> tuple[Bundle, ...]:
    paths = concave_paths(r, slope_max=slope_max, strip_min=lambda j: tail[j])
    return tuple(bundle_of(p) for p in sorted(paths, key=height_order_key))


def verify_step1(e: Bundle, f: Bundle) -> SweepReport:
    """``deg(E^v Q)>=0 + deg(Q^v F)>=0 < deg(E^v F)>=0 + deg(Q^v Q)>=0``."""
    report = SweepReport()
    base = deg_hom_nonneg(e, f)
    for q in candidates_step1(e, f):
        lhs = deg_hom_nonneg(e, q) + deg_hom_nonneg(q, f)
        rhs = base + deg_hom_nonneg(q, q)
        _record(report, lhs, rhs, e=e, f=f, q=q)
    return report


# -- kernel inequality -----------------------------------------------------


def _check_step2(d: Bundle, f: Bundle, e: Bundle):
    for name, b in (("d", d), ("f", f)):
        if b.is_zero or not is_semistable(b):
            raise DomainError(f"{name} = {b} must be nonzero and semistable")
    if d.mu > f.mu:
        raise DomainError("need mu(d) <= mu(f)")
    if not polygon_leq(polygon_of(e), polygon_of(d + f)):
        raise DomainError(f"HN({e}) is not <= HN({d + f})")
    if not e.mu_max < f.mu:
        raise DomainError("need the maximal slope of e strictly below mu(f)")


def candidates_step2(d: Bundle, f: Bundle, e: Bundle) -> list[Bundle]:
    """Non-semistable ``k`` with the rank and degree of ``d`` and
    ``mu_max(k) <= mu_max(e)``."""
    _check_step2(d, f, e)
    paths = concave_paths(d.rank, end=d.degree, slope_max=e.mu_max)
    ks = [bundle_of(p) for p in sorted(paths, key=height_order_key)]
    return [k for k in ks if not is_semistable(k)]


def verify_step2(d: Bundle, f: Bundle, e: Bundle) -> SweepReport:
    """``deg(K^v E)>=0 < deg(K^v K)>=0 + deg(E^v F)>=0``."""
    report = SweepReport()
    base = deg_hom_nonneg(e, f)
    for k in candidates_step2(d, f, e):
        _record(
            report,
            deg_hom_nonneg(k, e),
            deg_hom_nonneg(k, k) + base,
            d=d, f=f, e=e, k=k,
        )
    return report


# -- dimension of extension strata -----------------------------------------


def cross_check_dimensions(f1: Bundle, f2: Bundle) -> SweepReport:
    """Compare the extension-stratum dimension with the enclosed area."""
    exts = enumerate_extensions(f1, f2)
    split = f1 + f2
    top = polygon_of(split)
    report = SweepReport()
    values = {}
    for e in exts:
        report.instances_checked += 1
        value = dim_ext_stratum(f1, f2, e).value
        values[e] = value
        area = twice_area_between(polygon_of(e), top)
        if value != area:
            report.violations.append(
                {"check": "area", "f1": str(f1), "f2": str(f2), "e": str(e),
                 "value": value, "area": area}
            )
        if value < 0 or (value == 0) != (e == split):
            report.violations.append(
                {"check": "sign", "f1": str(f1), "f2": str(f2), "e": str(e), "value": value}
            )
    # antitone: lower[i] <= upper[j] pointwise must force value[i] >= value[j]
    prof = np.array([polygon_of(e).scaled_profile for e in exts], dtype=object)
    vals = [values[e] for e in exts]
    for i, a in enumerate(exts):
        below = np.all(prof[i] <= prof, axis=1)
        for j in np.flatnonzero(below):
            if vals[i] < vals[j]:
                report.violations.append(
                    {"check": "antitone", "f1": str(f1), "f2": str(f2),
                     "lower": str(a), "upper": str(exts[j]),
                     "value_lower": vals[i], "value_upper": vals[j]}
                )
    return report


# -- sweep domains ---------------------------------------------------------


def slope_grid(max_den: int, max_num: int) -> list[Fraction]:
    """Reduced slopes ``d/h`` with ``h <= max_den`` and ``|d| <= max_num``, descending."""
    return sorted(
        {Fraction(n, h) for h in range(1, max_den + 1) for n in range(-max_num, max_num + 1)
         if Fraction(n, h).denominator == h},
        reverse=True,
    )


def bundles_up_to(max_rank: int, slopes: list[Fraction]) -> Iterator[Bundle]:
    """Every nonzero bundle of rank ``<= max_rank`` with slopes from ``slopes``."""
    slopes = sorted(set(slopes), reverse=True)

    @lru_cache(maxsize=None)
    def build(i: int, budget: int) -> tuple[tuple[StableSummand, ...], ...]:
        if i == len(slopes):
            return ((),)
        s = slopes[i]
        out = list(build(i + 1, budget))
        m = 1
        while m * s.denominator <= budget:
            head = (StableSummand(s, m),)
            out.extend(head + rest for rest in build(i + 1, budget - m * s.denominator))
            m += 1
        return tuple(out)

    for blocks in build(0, max_rank):
        if blocks:
            yield Bundle(blocks)


def semistables_up_to(max_rank: int, slopes: list[Fraction]) -> Iterator[Bundle]:
    for s in sorted(set(slopes), reverse=True):
        m = 1
        while m * s.denominator <= max_rank:
            yield Bundle.stable(s, m)
            m += 1


def sweep_step1(
    max_rank_e: int = 6,
    max_rank_f: int = 3,
    max_den: int = DEFAULT_MAX_DEN,
    max_num: int = DEFAULT_MAX_NUM,
) -> SweepReport:
    slopes = slope_grid(max_den, max_num)
    es = list(bundles_up_to(max_rank_e, slopes))
    report = SweepReport()
    for f in semistables_up_to(max_rank_f, slopes):
        for e in es:
            if e.rank > f.rank and e.mu_max < f.mu:
                report.merge(verify_step1(e, f))
    return report


def step2_instances(max_total_rank: int, max_den: int, max_num: int):
    """Valid ``(d, f, e)`` triples for the kernel inequality."""
    slopes = slope_grid(max_den, max_num)
    ss = list(semistables_up_to(max_total_rank, slopes))
    for d in ss:
        for f in ss:
            if d.rank + f.rank > max_total_rank or d.mu > f.mu:
                continue
            for p in down_set(polygon_of(d + f)):
                e = bundle_of(p)
                if e.mu_max < f.mu:
                    yield d, f, e


def sweep_step2(
    max_total_rank: int = 6,
    max_den: int = DEFAULT_MAX_DEN,
    max_num: int = DEFAULT_MAX_NUM,
) -> SweepReport:
    report = SweepReport()
    for d, f, e in step2_instances(max_total_rank, max_den, max_num):
        report.merge(verify_step2(d, f, e))
    return report


def sweep_dimensions(
    max_rank: int = 4,
    max_den: int = DEFAULT_MAX_DEN,
    max_num: int = DEFAULT_MAX_NUM,
) -> SweepReport:
    slopes = slope_grid(max_den, max_num)
    ss = list(semistables_up_to(max_rank, slopes))
    report = SweepReport()
    for f1 in ss:
        for f2 in ss:
            if f1.mu < f2.mu:
                report.merge(cross_check_dimensions(f1, f2))
    return report
