"""Closure order on the HN strata of rank-n bundles.

The closure of the stratum with polygon ``P`` consists of the strata with
polygon ``>= P``.  Up-sets are infinite, so only the membership predicate
and finite down-sets below a ceiling polygon are exposed.
"""

from __future__ import annotations

from dataclasses import dataclass

import networkx as nx

from hnpoly.errors import DomainError
from hnpoly.paths import concave_paths, height_order_key
from hnpoly.polygons import Polygon, polygon_leq


def down_set(ceiling: Polygon) -> list[Polygon]:
    """Every HN polygon ``<= ceiling``, highest height profile first."""
    return sorted(
        concave_paths(ceiling.width, end=ceiling.end[1], ceiling=ceiling),
        key=height_order_key,
    )


def in_closure(p_target: Polygon, p_stratum: Polygon) -> bool:
    """Is the ``p_target`` stratum in the closure of the ``p_stratum`` stratum?"""
    if p_target.end != p_stratum.end:
        raise DomainError(f"endpoints differ: {p_target.end} vs {p_stratum.end}")
    return polygon_leq(p_stratum, p_target)


@dataclass(frozen=True)
class StrataPoset:
    ceiling: Polygon
    nodes: tuple[Polygon, ...]

    @classmethod
    def below(cls, ceiling: Polygon) -> StrataPoset:
        return cls(ceiling, tuple(down_set(ceiling)))

    def leq(self, i: int, j: int) -> bool:
        return polygon_leq(self.nodes[i], self.nodes[j])

    def relation(self) -> set[tuple[int, int]]:
        """Strict order as index pairs ``(i, j)`` meaning ``nodes[i] < nodes[j]``."""
        n = len(self.nodes)
        return {(i, j) for i in range(n) for j in range(n) if i != j and self.leq(i, j)}


def hasse_diagram(poset: StrataPoset) -> list[tuple[int, int]]:
    """Covering pairs ``(lower, upper)`` as node indices, sorted."""
    g = nx.DiGraph()
    g.add_nodes_from(range(len(poset.nodes)))
    g.add_edges_from(poset.relation())
    return sorted(nx.transitive_reduction(g).edges())


def to_dot(poset: StrataPoset) -> str:
    lines = ["digraph strata {", "  rankdir=BT;"]
    for i, p in enumerate(poset.nodes):
        lines.append(f'  "P{i}" [label="{p}"];')
    for i, j in hasse_diagram(poset):
        lines.append(f'  "P{i}" -> "P{j}";')
    lines.append("}")
    return "\n".join(lines) + "\n"
