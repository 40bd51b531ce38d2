"""Dimensions of the moduli spaces of bundle maps, as integer formulas.

All dimensions are built from ``deg(V^dual (x) W)^{>= 0}`` (see
:func:`hnpoly.polygons.deg_hom_nonneg`).  Strata that may be empty carry a
three-valued ``nonempty`` flag: ``"yes"`` only with a positive certificate,
``"no"`` only when a necessary condition fails, ``"unknown"`` otherwise.
"""

from __future__ import annotations

from dataclasses import dataclass

from hnpoly.bundles import Bundle, dual, is_semistable, truncate
from hnpoly.errors import DomainError
from hnpoly.extensions import exists_extension
from hnpoly.polygons import (
    deg_hom,
    deg_hom_nonneg,
    instability,
    polygon_leq,
    polygon_of,
)

YES, NO, UNKNOWN = "yes", "no", "unknown"


@dataclass(frozen=True)
class StratumDim:
    value: int
    nonempty: str
    formula: str = ""

    def to_json(self) -> dict:
        return {"formula": self.formula, "value": self.value, "nonempty": self.nonempty}


def dim_h0(e: Bundle) -> int:
    return truncate(e, 0, ">=").degree


def dim_hom(e: Bundle, f: Bundle) -> int:
    return deg_hom_nonneg(e, f)


def dim_aut(e: Bundle) -> int:
    return deg_hom_nonneg(e, e)


def _strip_dominates(upper: list, lower: list) -> bool:
    return all(a >= b for a, b in zip(upper, lower))


def quotient_necessary(e: Bundle, q: Bundle) -> bool:
    """Slope condition every quotient ``q`` of ``e`` satisfies.

    With right endpoints aligned, on each of the last ``rank q`` unit strips
    the slope of ``HN(q)`` is at least the slope of ``HN(e)``.
    """
    if q.rank > e.rank:
        raise DomainError(f"rank {q.rank} quotient of a rank {e.rank} bundle")
    qs = polygon_of(q).strip_slopes()[::-1]
    es = polygon_of(e).strip_slopes()[::-1]
    return _strip_dominates(qs, es)


def subbundle_necessary(q: Bundle, f: Bundle) -> bool:
    """Slope condition every subbundle ``q`` of ``f`` satisfies.

    Left endpoints aligned, ``HN(q)`` is no steeper than ``HN(f)`` on each of
    its strips; this is the dual of :func:`quotient_necessary`.
    """
    if q.rank > f.rank:
        return False
    return quotient_necessary(dual(f), dual(q))


def surjection_certified(e: Bundle, q: Bundle) -> bool:
    """A surjection ``e -> q`` is known to exist."""
    if e.has_summand(q):
        return True
    return (
        not q.is_zero
        and is_semistable(q)
        and e.rank > q.rank
        and e.mu_max <= q.mu
    )


def injection_certified(q: Bundle, f: Bundle) -> bool:
    """An injective bundle map ``q -> f`` is known to exist."""
    if f.has_summand(q):
        return True
    if q.rank == 1 and not f.is_zero and f.mu_max >= q.mu:
        # any nonzero map out of a line bundle is injective
        return True
    return surjection_certified(dual(f), dual(q))


def dim_hom_stratum(e: Bundle, f: Bundle, q: Bundle) -> StratumDim:
    """Maps ``e -> f`` with image isomorphic to ``q``."""
    if q.is_zero:
        raise DomainError("the image bundle q must be nonzero")
    value = deg_hom_nonneg(e, q) + deg_hom_nonneg(q, f) - deg_hom_nonneg(q, q)
    if q.rank > e.rank or not quotient_necessary(e, q) or not subbundle_necessary(q, f):
        status = NO
    elif surjection_certified(e, q) and injection_certified(q, f):
        status = YES
    else:
        status = UNKNOWN
    return StratumDim(
        value, status, "deg(E^v(x)Q)>=0 + deg(Q^v(x)F)>=0 - deg(Q^v(x)Q)>=0"
    )


def dim_surj_with_kernel(e: Bundle, f: Bundle, k: Bundle) -> StratumDim:
    """Surjections ``e -> f`` whose kernel is isomorphic to ``k``."""
    if f.is_zero or not is_semistable(f):
        raise DomainError(f"f = {f} must be nonzero and semistable")
    if (k.rank + f.rank, k.degree + f.degree) != (e.rank, e.degree):
        raise DomainError("rank and degree of k + f must match e")
    value = deg_hom_nonneg(k, e) - deg_hom_nonneg(k, k)
    if not polygon_leq(polygon_of(e), polygon_of(k + f)):
        status = NO
    elif not k.is_zero and is_semistable(k) and k.mu < f.mu:
        status = YES
    elif k.is_zero:
        status = YES if e == f else NO
    else:
        status = UNKNOWN
    return StratumDim(value, status, "deg(E(x)K^v)>=0 - deg(K(x)K^v)>=0")


def dim_ext_stratum(f1: Bundle, f2: Bundle, e: Bundle) -> StratumDim:
    """Extensions of ``f2`` by ``f1`` isomorphic to ``e``."""
    if (e.rank, e.degree) != (f1.rank + f2.rank, f1.degree + f2.degree):
        raise DomainError("endpoints of HN(e) and HN(f1 + f2) differ")
    exists = exists_extension(f1, f2, e)
    value = deg_hom(f1, f2) - instability(e)
    return StratumDim(value, YES if exists else NO, "deg(F2(x)F1^v) - deg(E(x)E^v)>=0")
