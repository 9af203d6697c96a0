"""The four graphs a finite group induces on its own elements.

Vertex i is element x_i; every relation below is symmetric and evaluated on
unordered distinct pairs, so all four graphs are simple.
"""

from __future__ import annotations

import numpy as np

from .graphs import SimpleGraph
from .groups import FiniteGroup

__all__ = [
    "GRAPH_KINDS",
    "commuting_graph",
    "coprime_graph",
    "order_sum_graph",
    "non_inverse_graph",
    "build_graph",
]


def commuting_graph(group: FiniteGroup) -> SimpleGraph:
    """x ~ y iff xy = yx; the identity dominates, abelian groups give K_n."""
    adj = group.table == group.table.T
    np.fill_diagonal(adj, False)
    return SimpleGraph(adj, kind_tag="commuting")


def coprime_graph(group: FiniteGroup) -> SimpleGraph:
    """x ~ y iff gcd(o(x), o(y)) = 1; the identity (order 1) dominates."""
    orders = group.element_orders
    adj = np.gcd.outer(orders, orders) == 1
    np.fill_diagonal(adj, False)
    return SimpleGraph(adj, kind_tag="coprime")


def order_sum_graph(group: FiniteGroup) -> SimpleGraph:
    """x ~ y iff o(x) + o(y) > |G|, strictly."""
    orders = group.element_orders
    adj = (orders[:, None] + orders[None, :]) > group.order
    np.fill_diagonal(adj, False)
    return SimpleGraph(adj, kind_tag="ordersum")


def non_inverse_graph(group: FiniteGroup) -> SimpleGraph:
    """x ~ y iff y is not the inverse of x.

    Equivalently K_n minus the matching of inverse pairs {x, x^-1} with
    x != x^-1; self-inverse elements are exactly the dominating vertices.
    """
    n = group.order
    adj = np.ones((n, n), dtype=bool)
    np.fill_diagonal(adj, False)
    # inv is an involution, so clearing (i, inv(i)) for every i is symmetric
    adj[np.arange(n), group.inverses] = False
    return SimpleGraph(adj, kind_tag="noninverse")


GRAPH_KINDS = {
    "commuting": commuting_graph,
    "coprime": coprime_graph,
    "ordersum": order_sum_graph,
    "noninverse": non_inverse_graph,
}


def build_graph(group: FiniteGroup, kind: str) -> SimpleGraph:
    """Build one of the four graphs by kind name."""
    try:
        builder = GRAPH_KINDS[kind]
    except KeyError:
        raise ValueError(
            f"unknown graph kind {kind!r}; expected one of {sorted(GRAPH_KINDS)}"
        ) from None
    return builder(group)
