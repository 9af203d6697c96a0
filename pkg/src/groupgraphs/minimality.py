"""Minimal (edge) connectivity predicates decided by exhaustive per-edge
deletion, plus the fast dominating-vertex criterion.

A graph is minimally edge connected when deleting any single edge lowers the
edge connectivity by exactly 1, and minimally connected when the same holds
for vertex connectivity.  Deleting one edge can lower either value by at most
1, so each sweep only has to distinguish "dropped" from "stayed".
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Optional

from .connectivity import edge_connectivity, vertex_connectivity
from .graphs import SimpleGraph, shape_profile

__all__ = [
    "MinimalityVerdict",
    "DominatingVertexCriterion",
    "is_minimally_edge_connected",
    "is_minimally_connected",
    "dominating_vertex_criterion",
]


@dataclass(frozen=True)
class MinimalityVerdict:
    """Outcome of one per-edge deletion sweep.

    ``applicable`` is False on disconnected or single-vertex graphs, where the
    predicate is not meaningful; such graphs never "hold".  Violating edges
    are reported completely and in canonical edge order, so two runs are
    diffable.  ``per_edge_values`` maps each edge to the connectivity of the
    graph with that edge deleted; every value is base_value or base_value - 1.
    """

    mode: str  # "edge" or "vertex"
    applicable: bool
    base_value: int
    holds: bool
    violating_edges: tuple[tuple[int, int], ...]
    per_edge_values: dict[tuple[int, int], int]


def _sweep(graph: SimpleGraph, mode: str, connectivity: Callable[..., int]) -> MinimalityVerdict:
    applicable = graph.n >= 2 and graph.is_connected()
    base = connectivity(graph) if applicable else 0
    if not applicable:
        return MinimalityVerdict(mode, False, base, False, (), {})
    per_edge: dict[tuple[int, int], int] = {}
    violating = []
    for edge in graph.edge_list:
        # the deleted edge's endpoints are where the drop shows up, if anywhere
        prefer = edge if mode == "edge" else (edge,)
        value = connectivity(graph.delete_edge(*edge), lower_bound=base - 1, prefer=prefer)
        if not base - 1 <= value <= base:
            raise RuntimeError(
                f"{mode} connectivity jumped from {base} to {value} after deleting "
                f"{edge}; this is an internal bug"
            )
        per_edge[edge] = value
        if value != base - 1:
            violating.append(edge)
    return MinimalityVerdict(
        mode=mode,
        applicable=True,
        base_value=base,
        holds=not violating,
        violating_edges=tuple(violating),
        per_edge_values=per_edge,
    )


def is_minimally_edge_connected(graph: SimpleGraph) -> MinimalityVerdict:
    """Does deleting any single edge lower the edge connectivity by exactly 1?"""
    return _sweep(graph, "edge", edge_connectivity)


def is_minimally_connected(graph: SimpleGraph) -> MinimalityVerdict:
    """Does deleting any single edge lower the vertex connectivity by exactly 1?"""
    return _sweep(graph, "vertex", vertex_connectivity)


@dataclass(frozen=True)
class DominatingVertexCriterion:
    """Shortcut test for minimal edge connectivity of dominated graphs.

    Applies only to non-complete graphs with at least one dominating vertex;
    there the graph is minimally edge connected iff the dominating vertex x
    is unique and the graph minus x is regular.  ``rest_regular`` refers to
    the smallest-index dominating vertex.
    """

    applies: bool
    reason: Optional[str] = None
    answer: Optional[bool] = None
    unique_dominating: Optional[bool] = None
    rest_regular: Optional[bool] = None
    dominating_vertices: tuple[int, ...] = ()


def dominating_vertex_criterion(graph: SimpleGraph) -> DominatingVertexCriterion:
    """Evaluate the dominating-vertex shortcut, or report it inapplicable."""
    shape = shape_profile(graph)
    if shape.is_complete:
        return DominatingVertexCriterion(applies=False, reason="graph is complete")
    if not shape.dominating_vertices:
        return DominatingVertexCriterion(applies=False, reason="no dominating vertex")
    unique = len(shape.dominating_vertices) == 1
    rest = graph.delete_vertex(shape.dominating_vertices[0])
    degrees = rest.degrees()
    rest_regular = bool(degrees.min() == degrees.max())
    return DominatingVertexCriterion(
        applies=True,
        answer=unique and rest_regular,
        unique_dominating=unique,
        rest_regular=rest_regular,
        dominating_vertices=shape.dominating_vertices,
    )
