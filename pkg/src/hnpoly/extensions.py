"""Extensions and filtrations with semistable graded pieces.

For semistable ``F1``, ``F2`` with ``mu(F1) < mu(F2)``, a bundle ``E`` is an
extension ``0 -> F1 -> E -> F2 -> 0`` exactly when ``HN(E) <= HN(F1 + F2)``.
The multi-step version (strictly increasing slopes) has the same polygon
criterion, and a filtration can be built by repeatedly splitting off the
top graded piece through an upper convex hull.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce
from typing import Sequence

from hnpoly.bundles import Bundle, direct_sum, is_semistable
from hnpoly.errors import DomainError
from hnpoly.paths import concave_paths, height_order_key
from hnpoly.polygons import Polygon, bundle_of, polygon_leq, polygon_of


def _sum(bundles: Sequence[Bundle]) -> Bundle:
    return reduce(direct_sum, bundles, Bundle.zero())


def _require_semistable(b: Bundle, name: str):
    if b.is_zero or not is_semistable(b):
        raise DomainError(f"{name} = {b} must be a nonzero semistable bundle")


def _check_pair(f1: Bundle, f2: Bundle):
    _require_semistable(f1, "f1")
    _require_semistable(f2, "f2")
    if not f1.mu < f2.mu:
        raise DomainError(
            f"need mu(f1) < mu(f2), got {f1.mu} >= {f2.mu}; "
            "equal or reversed slopes are outside the extension criterion"
        )


def _check_graded(graded: Sequence[Bundle], increasing: bool):
    if not graded:
        raise DomainError("at least one graded piece is required")
    for i, f in enumerate(graded, 1):
        _require_semistable(f, f"F_{i}")
    if increasing:
        for i in range(len(graded) - 1):
            if not graded[i].mu < graded[i + 1].mu:
                raise DomainError(
                    f"slopes must strictly increase: mu(F_{i + 1}) = {graded[i].mu} "
                    f">= mu(F_{i + 2}) = {graded[i + 1].mu}"
                )


def exists_extension(f1: Bundle, f2: Bundle, e: Bundle) -> bool:
    """Does ``e`` sit in an exact sequence ``0 -> f1 -> e -> f2 -> 0``?"""
    _check_pair(f1, f2)
    return polygon_leq(polygon_of(e), polygon_of(f1 + f2))


def necessary_condition(e: Bundle, graded: Sequence[Bundle]) -> bool:
    """The polygon bound any filtration with these semistable gradeds forces."""
    _check_graded(graded, increasing=False)
    return polygon_leq(polygon_of(e), polygon_of(_sum(graded)))


def exists_filtration(e: Bundle, graded: Sequence[Bundle]) -> bool:
    """Does ``e`` have a filtration with gradeds ``graded`` (slopes increasing)?"""
    _check_graded(graded, increasing=True)
    return polygon_leq(polygon_of(e), polygon_of(_sum(graded)))


@dataclass(frozen=True)
class FiltrationWitness:
    """``0 = E_0 < E_1 < ... < E_k = E`` with ``E_i / E_{i-1} = F_i``."""

    chain: tuple[Bundle, ...]
    graded: tuple[Bundle, ...]

    def violations(self) -> list[str]:
        """Every broken invariant, as human-readable strings."""
        out = []
        if len(self.chain) != len(self.graded) + 1:
            out.append("chain length must be one more than the number of gradeds")
            return out
        if not self.chain[0].is_zero:
            out.append("E_0 must be the zero bundle")
        partial = Bundle.zero()
        for i, f in enumerate(self.graded, 1):
            lo, hi = self.chain[i - 1], self.chain[i]
            partial = partial + f
            if (hi.rank - lo.rank, hi.degree - lo.degree) != (f.rank, f.degree):
                out.append(f"rank/degree of E_{i}/E_{i-1} differ from F_{i}")
            if not polygon_leq(polygon_of(hi), polygon_of(partial)):
                out.append(f"HN(E_{i}) is not <= HN(F_1 + ... + F_{i})")
            if not polygon_leq(polygon_of(hi), polygon_of(lo + f)):
                out.append(f"HN(E_{i}) is not <= HN(E_{i-1} + F_{i})")
        return out

    @property
    def polygons(self) -> list[Polygon]:
        return [polygon_of(b) for b in self.chain]


def _split_top(e: Bundle, top: Bundle) -> Bundle:
    """Hull step: HN(top) first, then the upper hull with HN(e); drop ``top``."""
    hull = Polygon.upper_hull(list(polygon_of(e).points) + [(top.rank, top.degree)])
    return bundle_of(hull).remove(top)


def build_filtration_witness(e: Bundle, graded: Sequence[Bundle]) -> FiltrationWitness:
    """Construct the filtration promised by the polygon criterion.

    The top graded piece ``F_k`` has the largest slope, so its segment sits
    above ``HN(e)``.  The upper hull of that segment and ``HN(e)`` is the
    polygon of ``F_k + E_{k-1}``; ``E_{k-1}`` is then filtered by
    ``F_1, ..., F_{k-1}`` recursively.
    """
    graded = tuple(graded)
    if not exists_filtration(e, graded):
        raise DomainError(f"{e} admits no filtration with gradeds {list(map(str, graded))}")
    chain = [e]
    current = e
    for top in reversed(graded[1:]):
        current = _split_top(current, top)
        chain.append(current)
    chain.append(Bundle.zero())
    return FiltrationWitness(tuple(reversed(chain)), graded)


def enumerate_extensions(f1: Bundle, f2: Bundle) -> list[Bundle]:
    """All extensions of ``f2`` by ``f1``, highest height profile first."""
    _check_pair(f1, f2)
    ceiling = polygon_of(f1 + f2)
    paths = sorted(
        concave_paths(ceiling.width, end=ceiling.end[1], ceiling=ceiling),
        key=height_order_key,
    )
    return [bundle_of(p) for p in paths]


def split_common_top(e: Bundle, f2: Bundle) -> tuple[Bundle, Bundle]:
    """Cancel a shared top block ``O(mu(f2))^n`` from ``e`` and ``f2``.

    After cancellation the maximal slope of ``e`` is strictly below the slope
    of what remains of ``f2``; adding the block back undoes the reduction.
    """
    _require_semistable(f2, "f2")
    if e.is_zero or e.mu_max != f2.mu:
        return e, f2
    n = e.summands[0].multiplicity
    m = f2.summands[0].multiplicity
    if n > m:
        raise DomainError(
            f"e has O({f2.mu})^{n} on top but f2 only has multiplicity {m}"
        )
    block = Bundle.stable(f2.mu, n)
    return e.remove(block), f2.remove(block)
