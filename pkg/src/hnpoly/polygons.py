"""Harder-Narasimhan polygons and the cross-product calculus of degrees.

A bundle ``V = sum O(d_i/h_i)^{m_i}`` (slopes descending) has HN vectors
``v_i = (m_i h_i, m_i d_i)``; its HN polygon is the concave path through
their partial sums.  Degrees of ``Hom``-bundles are sums of 2d cross
products of these vectors, and areas are always kept doubled so that every
quantity stays an integer.
"""

from __future__ import annotations

from bisect import bisect_left
from dataclasses import dataclass
from functools import cached_property, lru_cache
from fractions import Fraction
from math import gcd, lcm
from typing import NamedTuple, Sequence

from hnpoly.bundles import Bundle, StableSummand
from hnpoly.errors import DomainError


class HNVector(NamedTuple):
    x: int
    y: int

    def __add__(self, other):
        return HNVector(self.x + other.x, self.y + other.y)

    def __sub__(self, other):
        return HNVector(self.x - other.x, self.y - other.y)


Point = tuple[int, int]


def _is_int(v) -> bool:
    return isinstance(v, int) and not isinstance(v, bool)


@dataclass(frozen=True)
class Polygon:
    """A concave lattice polygon starting at the origin.

    ``points`` are exactly the vertices: x strictly increasing, segment
    slopes strictly decreasing.  The single point ``((0, 0),)`` is the
    polygon of the zero bundle.
    """

    points: tuple[Point, ...]

    def __post_init__(self):
        pts = tuple(tuple(p) for p in self.points)
        object.__setattr__(self, "points", pts)
        if not pts or pts[0] != (0, 0):
            raise DomainError("an HN polygon must start at (0, 0)")
        for p in pts:
            if len(p) != 2 or not (_is_int(p[0]) and _is_int(p[1])):
                raise DomainError(f"breakpoint {p!r} is not a lattice point")
        for a, b in zip(pts, pts[1:]):
            if b[0] <= a[0]:
                raise DomainError("breakpoint x-coordinates must strictly increase")
        for o, a, b in zip(pts, pts[1:], pts[2:]):
            if _cross3(o, a, b) >= 0:
                raise DomainError(f"polygon is not strictly concave at {a}")

    @classmethod
    def upper_hull(cls, points: Sequence[Point]) -> Polygon:
        """Upper convex hull of a point set containing the origin, from x = 0."""
        pts = sorted(set(tuple(p) for p in points))
        # keep the highest point per x; the hull must start at the origin
        best: dict[int, int] = {}
        for x, y in pts:
            best[x] = max(y, best.get(x, y))
        pts = sorted(best.items())
        if pts[0] != (0, 0):
            raise DomainError("hull points must start at the origin")
        hull: list[Point] = []
        for p in pts:
            while len(hull) >= 2 and _cross3(hull[-2], hull[-1], p) >= 0:
                hull.pop()
            hull.append(p)
        return cls(tuple(hull))

    @property
    def width(self) -> int:
        return self.points[-1][0]

    @property
    def end(self) -> Point:
        return self.points[-1]

    def vectors(self) -> list[HNVector]:
        return [HNVector(b[0] - a[0], b[1] - a[1]) for a, b in zip(self.points, self.points[1:])]

    def slopes(self) -> list[Fraction]:
        return [Fraction(v.y, v.x) for v in self.vectors()]

    def height(self, x) -> Fraction:
        """Height of the polygon at abscissa ``0 <= x <= width``."""
        x = Fraction(x)
        if not 0 <= x <= self.width:
            raise DomainError(f"x = {x} outside [0, {self.width}]")
        for (x0, y0), (x1, y1) in zip(self.points, self.points[1:]):
            if x <= x1:
                return y0 + Fraction(y1 - y0, x1 - x0) * (x - x0)
        return Fraction(self.points[-1][1])

    def profile(self) -> tuple[Fraction, ...]:
        """Heights at every integer abscissa."""
        return tuple(self.height(x) for x in range(self.width + 1))

    @cached_property
    def scaled_profile(self) -> tuple[int, ...]:
        """Heights at integer abscissae times ``lcm(1, ..., width)``.

        Two polygons of equal width compare pointwise through these integers.
        """
        scale = lcm(*range(1, self.width + 1)) if self.width else 1
        out = [0]
        for (x0, y0), (x1, y1) in zip(self.points, self.points[1:]):
            step = (y1 - y0) * (scale // (x1 - x0))
            out.extend(y0 * scale + step * k for k in range(1, x1 - x0 + 1))
        return tuple(out)

    def strip_slopes(self) -> list[Fraction]:
        """Slope on each unit strip ``[j, j+1]``, left to right."""
        out = []
        for v in self.vectors():
            out.extend([Fraction(v.y, v.x)] * v.x)
        return out

    def __str__(self) -> str:
        return "[" + ",".join(f"({x},{y})" for x, y in self.points) + "]"


def _cross3(o: Point, a: Point, b: Point) -> int:
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def chord(p: Polygon) -> Polygon:
    """The straight segment joining the endpoints of ``p``."""
    if p.width == 0:
        return p
    return Polygon(((0, 0), p.end))


@lru_cache(maxsize=1 << 16)
def hn_vectors(b: Bundle) -> tuple[HNVector, ...]:
    return tuple(HNVector(s.rank, s.degree) for s in b.summands)


@lru_cache(maxsize=1 << 16)
def polygon_of(b: Bundle) -> Polygon:
    pts = [(0, 0)]
    for v in hn_vectors(b):
        pts.append((pts[-1][0] + v.x, pts[-1][1] + v.y))
    return Polygon(tuple(pts))


def bundle_of(p: Polygon | Sequence[Point]) -> Bundle:
    if not isinstance(p, Polygon):
        p = Polygon(tuple(p))
    return Bundle(
        tuple(StableSummand(Fraction(v.y, v.x), _block_multiplicity(v)) for v in p.vectors())
    )


def _block_multiplicity(v: HNVector) -> int:
    # v = (m h, m d) with gcd(h, d) = 1, and gcd(m, 0) = m covers d = 0
    return gcd(v.x, v.y)


def vec_cross(v, w) -> int:
    return v[0] * w[1] - v[1] * w[0]


def _check_x(v, w):
    if v[0] == 0 or w[0] == 0:
        raise DomainError("slope order needs nonzero x-coordinates")


def vec_preceq(v, w) -> bool:
    """``v`` has slope not greater than ``w``."""
    _check_x(v, w)
    # compare v.y/v.x <= w.y/w.x after clearing denominators
    lhs, rhs = v[1] * w[0], w[1] * v[0]
    return lhs >= rhs if v[0] * w[0] < 0 else lhs <= rhs


def vec_prec(v, w) -> bool:
    """``v`` has slope strictly less than ``w``."""
    _check_x(v, w)
    lhs, rhs = v[1] * w[0], w[1] * v[0]
    return lhs > rhs if v[0] * w[0] < 0 else lhs < rhs


def polygon_leq(p: Polygon, q: Polygon) -> bool:
    """``p`` lies on or below ``q`` and both share the right endpoint.

    Differing endpoints give ``False`` rather than an error.
    """
    if p.end != q.end:
        return False
    # q is concave and p is linear between its vertices: vertices of p suffice
    qx = [x for x, _ in q.points]
    for x, y in p.points[1:-1]:
        i = bisect_left(qx, x)
        x1, y1 = q.points[i]
        if x1 == x:
            if y > y1:
                return False
            continue
        x0, y0 = q.points[i - 1]
        if (y - y0) * (x1 - x0) > (y1 - y0) * (x - x0):
            return False
    return True


def deg_hom(v: Bundle, w: Bundle) -> int:
    """``deg(v^dual (x) w)`` as the sum of all pairwise cross products."""
    return sum(vec_cross(a, b) for a in hn_vectors(v) for b in hn_vectors(w))


def deg_hom_nonneg(v: Bundle, w: Bundle) -> int:
    """``deg(v^dual (x) w)^{>= 0}``: cross products over pairs ``v_i <= w_j``."""
    return sum(
        vec_cross(a, b)
        for a in hn_vectors(v)
        for b in hn_vectors(w)
        if vec_preceq(a, b)
    )


def instability(v: Bundle) -> int:
    """``deg(v^dual (x) v)^{>= 0}``, twice the area between HN(v) and its chord."""
    if v.is_zero:
        raise DomainError("instability of the zero bundle is undefined")
    return deg_hom_nonneg(v, v)


def shoelace2(points: Sequence[Point]) -> int:
    """Signed doubled area of a closed polygon (counterclockwise positive)."""
    n = len(points)
    return sum(
        points[i][0] * points[(i + 1) % n][1] - points[(i + 1) % n][0] * points[i][1]
        for i in range(n)
    )


def twice_area_between(lower: Polygon, upper: Polygon) -> int:
    if not polygon_leq(lower, upper):
        raise DomainError(f"{lower} is not <= {upper}")
    # walk the lower path forwards and the upper path back: counterclockwise
    ring = list(lower.points) + list(reversed(upper.points[1:-1]))
    return shoelace2(ring)
