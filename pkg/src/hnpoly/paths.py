"""Enumeration of concave lattice paths starting at the origin.

A concave lattice path of width ``n`` is an HN polygon: lattice
breakpoints, strictly decreasing slopes.  The search is depth-first over
the next breakpoint, and every constraint is turned into an integer range
for its height so that nothing outside the feasible region is visited.
"""

from __future__ import annotations

from fractions import Fraction
from math import ceil, floor
from typing import Callable, Iterator, Optional

from hnpoly.errors import DomainError
from hnpoly.polygons import Polygon


def concave_paths(
    width: int,
    *,
    end: Optional[int] = None,
    ceiling: Optional[Polygon] = None,
    slope_max: Optional[Fraction] = None,
    strip_min: Optional[Callable[[int], Fraction]] = None,
) -> Iterator[Polygon]:
    """Yield every concave lattice polygon of the given width.

    ``end`` fixes the final height, ``ceiling`` bounds the path from above,
    ``slope_max`` caps every segment slope and ``strip_min(j)`` is a lower
    bound on the slope over the unit strip ``[j, j+1]``.  The height range
    must be bounded: above by ``ceiling`` or ``slope_max`` and below by
    ``end`` or ``strip_min``.
    """
    if width < 0:
        raise DomainError("width must be non-negative")
    if ceiling is None and slope_max is None:
        raise DomainError("unbounded search: give a ceiling or a maximal slope")
    if end is None and strip_min is None:
        raise DomainError("unbounded search: give an endpoint or strip slope bounds")
    if ceiling is not None and ceiling.width != width:
        raise DomainError("ceiling width does not match")
    if width == 0:
        if end in (None, 0):
            yield Polygon(((0, 0),))
        return
    if end is not None and ceiling is not None and end > ceiling.end[1]:
        return

    cap = None
    if ceiling is not None:
        cap = [floor(ceiling.height(x)) for x in range(width + 1)]
    lows = None
    if strip_min is not None:
        lows = [Fraction(strip_min(j)) for j in range(width)]

    path = [(0, 0)]
    smax = None if slope_max is None else Fraction(slope_max)

    def ceil_div(a: int, b: int) -> int:
        return -(-a // b)

    # all bounds are integer arithmetic; slopes are (dy, dx) pairs with dx > 0
    def extend(x: int, y: int, prev: Optional[tuple[int, int]]) -> Iterator[Polygon]:
        for dx in range(1, width - x + 1):
            nx = x + dx
            hi = None
            if prev is not None:
                hi = y + ceil_div(prev[0] * dx, prev[1]) - 1
            if smax is not None:
                bound = y + (smax.numerator * dx) // smax.denominator
                hi = bound if hi is None else min(hi, bound)
            if cap is not None:
                hi = cap[nx] if hi is None else min(hi, cap[nx])
            lo = None
            if lows is not None:
                # strip bounds decrease only if the caller's bounds do; take the max
                m = max(lows[x:nx])
                lo = y + ceil_div(m.numerator * dx, m.denominator)
            if end is not None:
                if nx == width:
                    lo = end if lo is None else max(lo, end)
                    hi = min(hi, end)
                else:
                    # rest of the path must fall below this segment's slope
                    bound = y + ((end - y) * dx) // (width - x) + 1
                    lo = bound if lo is None else max(lo, bound)
            for ny in range(hi, lo - 1, -1):
                path.append((nx, ny))
                if nx == width:
                    yield Polygon(tuple(path))
                else:
                    yield from extend(nx, ny, (ny - y, dx))
                path.pop()

    yield from extend(0, 0, None)


def height_order_key(p: Polygon):
    """Sort key putting higher height profiles first (lexicographically)."""
    return (p.width,) + tuple(-h for h in p.scaled_profile)
