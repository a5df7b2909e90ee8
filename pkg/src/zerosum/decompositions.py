"""Edge decompositions of K_n into spanning paths or spanning cycles.

The classical zig-zag construction is fixed as the canonical output so
that every run of the package produces identical decompositions: path i
is the rotation by i of the order 0, 1, n-1, 2, n-2, ... which walks
through every circular difference exactly once.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DomainError
from .graphs import ColoredGraph, EdgeSubgraph, canonical_edge


@dataclass(frozen=True)
class Decomposition:
    """Pairwise edge-disjoint parts covering the full host edge set."""

    parts: tuple[EdgeSubgraph, ...]
    orders: tuple[tuple[int, ...], ...]  # vertex order per part, for display


def _zigzag(n: int, offset: int) -> list[int]:
    """Zig-zag Hamiltonian-path order on 0..n-1 (n even), shifted by offset."""
    # 0, 1, n-1, 2, n-2, ...: consecutive circular differences 1..n-1
    order = [0]
    for t in range(1, n // 2):
        order.append(t)
        order.append(n - t)
    order.append(n // 2)
    return [(x + offset) % n for x in order]


def _edges_of_order(host: ColoredGraph, order, close: bool = False) -> EdgeSubgraph:
    edges = {canonical_edge(order[i], order[i + 1]) for i in range(len(order) - 1)}
    if close:
        edges.add(canonical_edge(order[-1], order[0]))
    return EdgeSubgraph(host, edges)


def hamilton_path_decomposition(n: int, host: ColoredGraph | None = None) -> Decomposition:
    """Decompose K_n (n even) into n/2 edge-disjoint Hamiltonian paths."""
    if n < 2 or n % 2 != 0:
        raise DomainError(f"path decomposition needs even n >= 2, got {n}")
    if host is None:
        host = ColoredGraph.complete(n)
    elif host.n != n or not host.is_complete:
        raise DomainError("host must be the complete graph on n vertices")
    orders = tuple(tuple(_zigzag(n, i)) for i in range(n // 2))
    parts = tuple(_edges_of_order(host, order) for order in orders)
    return Decomposition(parts, orders)


def hamilton_cycle_decomposition(n: int, host: ColoredGraph | None = None) -> Decomposition:
    """Decompose K_n (n odd) into (n-1)/2 edge-disjoint Hamiltonian cycles.

    Each cycle is a zig-zag path on the first n-1 vertices closed through
    the hub vertex n-1.  Removing any edge of a cycle leaves a spanning
    path, which is what lets these cycles stand in for paths.
    """
    if n < 3 or n % 2 != 1:
        raise DomainError(f"cycle decomposition needs odd n >= 3, got {n}")
    if host is None:
        host = ColoredGraph.complete(n)
    elif host.n != n or not host.is_complete:
        raise DomainError("host must be the complete graph on n vertices")
    orders = tuple(
        (n - 1,) + tuple(_zigzag(n - 1, i)) for i in range((n - 1) // 2)
    )
    parts = tuple(_edges_of_order(host, order, close=True) for order in orders)
    return Decomposition(parts, orders)
