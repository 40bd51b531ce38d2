from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache

from hypothesis import strategies as st

from hnpoly.bundles import Bundle, StableSummand

slopes = st.builds(Fraction, st.integers(-6, 6), st.integers(1, 4))


@st.composite
def bundles(draw, max_blocks: int = 3, max_mult: int = 2, allow_zero: bool = False):
    n = draw(st.integers(0 if allow_zero else 1, max_blocks))
    blocks = [StableSummand(draw(slopes), draw(st.integers(1, max_mult))) for _ in range(n)]
    return Bundle(tuple(blocks))


@st.composite
def semistables(draw, max_mult: int = 2):
    return Bundle.stable(draw(slopes), draw(st.integers(1, max_mult)))


def grid(max_den: int, max_num: int) -> list[Fraction]:
    return sorted({Fraction(n, h) for h in range(1, max_den + 1) for n in range(-max_num, max_num + 1)})


def all_bundles(max_rank: int, slope_list) -> list[Bundle]:
    """Every nonzero bundle of rank <= max_rank, built block by block."""
    slope_list = sorted(set(slope_list))
    out = []

    def grow(start, budget, blocks):
        if blocks:
            out.append(Bundle(tuple(blocks)))
        for i in range(start, len(slope_list)):
            s = slope_list[i]
            m = 1
            while m * s.denominator <= budget:
                grow(i + 1, budget - m * s.denominator, blocks + [StableSummand(s, m)])
                m += 1

    grow(0, max_rank, [])
    return out


def twice_area_oracle(points) -> int:
    """Shoelace on a closed ring, written independently of the library."""
    total = 0
    for (x0, y0), (x1, y1) in zip(points, points[1:] + points[:1]):
        total += x0 * y1 - x1 * y0
    return abs(total)


def count_paths_below(ceiling_points) -> int:
    """Concave lattice paths from (0,0) to the ceiling's endpoint lying on or
    below it, counted by a memoized recursion over next vertices.

    A concave path lies above its own chord, which bounds each vertex from
    below; the ceiling bounds it from above.
    """
    n, d = ceiling_points[-1]

    def ceil_height(x):
        for (x0, y0), (x1, y1) in zip(ceiling_points, ceiling_points[1:]):
            if x0 <= x <= x1:
                return y0 + Fraction(y1 - y0, x1 - x0) * (x - x0)
        raise AssertionError(x)

    heights = [ceil_height(x) for x in range(n + 1)]

    def under_ceiling(a, b):
        (x0, y0), (x1, y1) = a, b
        return all(
            y0 + Fraction(y1 - y0, x1 - x0) * (x - x0) <= heights[x] for x in range(x0, x1 + 1)
        )

    @lru_cache(maxsize=None)
    def count(x0, y0, prev_slope):
        if (x0, y0) == (n, d):
            return 1
        total = 0
        for x1 in range(x0 + 1, n + 1):
            lo = math.ceil(Fraction(d * x1, n))
            for y1 in range(lo, math.floor(heights[x1]) + 1):
                if x1 == n and y1 != d:
                    continue
                s = Fraction(y1 - y0, x1 - x0)
                if prev_slope is not None and s >= prev_slope:
                    continue
                if x1 < n and Fraction(d - y1, n - x1) >= s:
                    continue
                if under_ceiling((x0, y0), (x1, y1)):
                    total += count(x1, y1, s)
        return total

    return count(0, 0, None)


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in sorted(mod.RESULTS, key=lambda s: int(s.split("criterion ")[1].split(":")[0])):
        terminalreporter.write_line(line)
