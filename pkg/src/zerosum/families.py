"""Closed families of spanning subgraphs and edge-replacement chains.

Three families are supported, each with members of exactly n-1 edges:
spanning trees of a connected host, Hamiltonian paths of a complete host,
and spanning trees of diameter at most 3 of a complete host.  Any two
members are joined by a chain of single edge replacements that stays
inside the family; walking such a chain moves the signed weight in steps
of 0 or +-2, which is what makes weight interpolation work.

Matchings are deliberately not a family here: copies of a perfect
matching in K_{4n} are not connected under single edge replacements, so
no chain construction exists for them.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterator, Union

from .errors import DomainError
from .graphs import (
    ColoredGraph,
    EdgeSubgraph,
    canonical_edge,
    is_hamiltonian_path,
    is_spanning_tree,
    tree_diameter,
    weight,
)


@dataclass(frozen=True)
class SpanningTrees:
    host: ColoredGraph

    def __post_init__(self):
        if not self.host.is_connected():
            raise DomainError("spanning-tree family requires a connected host")


@dataclass(frozen=True)
class HamiltonianPaths:
    host: ColoredGraph

    def __post_init__(self):
        if not self.host.is_complete:
            raise DomainError("Hamiltonian-path family requires a complete host")


@dataclass(frozen=True)
class Diam3Trees:
    host: ColoredGraph

    def __post_init__(self):
        if not self.host.is_complete:
            raise DomainError("diameter-3 tree family requires a complete host")


FamilyKind = Union[SpanningTrees, HamiltonianPaths, Diam3Trees]


def member_edge_count(kind: FamilyKind) -> int:
    return kind.host.n - 1


def member_of(kind: FamilyKind, h: EdgeSubgraph) -> bool:
    if not (h.host is kind.host or h.host == kind.host):
        return False
    if isinstance(kind, SpanningTrees):
        return is_spanning_tree(h)
    if isinstance(kind, HamiltonianPaths):
        return is_hamiltonian_path(h)
    if isinstance(kind, Diam3Trees):
        return is_spanning_tree(h) and tree_diameter(h) <= 3
    raise DomainError(f"unknown family kind {kind!r}")


@dataclass(frozen=True)
class ExchangeChain:
    """A sequence of family members, consecutive ones one edge swap apart."""

    steps: tuple[EdgeSubgraph, ...]

    @property
    def replacements(self) -> int:
        return len(self.steps) - 1

    def validate(self, kind: FamilyKind) -> None:
        """Raise DomainError on any violated chain invariant."""
        if not self.steps:
            raise DomainError("chain must contain at least one member")
        for i, h in enumerate(self.steps):
            if not member_of(kind, h):
                raise DomainError(f"chain member {i} is not in the family")
        for i in range(len(self.steps) - 1):
            a, b = self.steps[i].edges, self.steps[i + 1].edges
            if len(a - b) != 1 or len(b - a) != 1:
                raise DomainError(f"steps {i}->{i + 1} are not a single edge replacement")
            dw = abs(weight(self.steps[i + 1]) - weight(self.steps[i]))
            if dw not in (0, 2):
                raise DomainError(f"steps {i}->{i + 1} change weight by {dw}")


def _require_member(kind: FamilyKind, h: EdgeSubgraph, role: str) -> None:
    if not member_of(kind, h):
        raise DomainError(f"{role} is not a member of {type(kind).__name__}")


# --- spanning trees: matroid basis exchange ----------------------------------


def _component_after_removal(edges: set, n: int, e: tuple[int, int]) -> set[int]:
    """Vertex set of the component of e[0] in the tree minus e."""
    adj: list[list[int]] = [[] for _ in range(n)]
    for u, v in edges:
        if (u, v) != e:
            adj[u].append(v)
            adj[v].append(u)
    comp = {e[0]}
    queue = deque([e[0]])
    while queue:
        x = queue.popleft()
        for y in adj[x]:
            if y not in comp:
                comp.add(y)
                queue.append(y)
    return comp


def _tree_chain(t_from: EdgeSubgraph, t_to: EdgeSubgraph) -> Iterator[EdgeSubgraph]:
    host = t_from.host
    yield t_from
    cur = set(t_from.edges)
    target = t_to.edges
    while True:
        extra = sorted(cur - target)
        if not extra:
            return
        e = extra[0]
        comp = _component_after_removal(cur, host.n, e)
        cur.discard(e)
        # any target edge crossing the cut restores a spanning tree and
        # strictly shrinks the symmetric difference
        swap_in = min(
            f for f in target - cur if (f[0] in comp) != (f[1] in comp)
        )
        cur.add(swap_in)
        yield EdgeSubgraph._unchecked(host, frozenset(cur))


def tree_exchange_chain(
    t_from: EdgeSubgraph, t_to: EdgeSubgraph, kind: SpanningTrees | None = None
) -> ExchangeChain:
    """Basis-exchange chain between two spanning trees of one host.

    Uses exactly |E(t_from) \\ E(t_to)| replacements.
    """
    if kind is None:
        kind = SpanningTrees(t_from.host)
    _require_member(kind, t_from, "t_from")
    _require_member(kind, t_to, "t_to")
    return ExchangeChain(tuple(_tree_chain(t_from, t_to)))


# --- Hamiltonian paths: prefix-growing two-swap procedure ---------------------


def path_sequence(h: EdgeSubgraph) -> list[int]:
    """Vertex order of a Hamiltonian path, starting at its smaller endpoint."""
    n = h.host.n
    if n == 1:
        return [0]
    adj = h.adjacency()
    ends = [v for v in range(n) if len(adj[v]) == 1]
    start = min(ends)
    seq = [start]
    prev = -1
    cur = start
    while len(seq) < n:
        nxt = adj[cur][0] if adj[cur][0] != prev else adj[cur][1]
        seq.append(nxt)
        prev, cur = cur, nxt
    return seq


def _hampath_chain(p_from: EdgeSubgraph, p_to: EdgeSubgraph) -> Iterator[EdgeSubgraph]:
    host = p_from.host
    n = host.n
    yield p_from
    if p_from.edges == p_to.edges or n <= 2:
        return
    target = path_sequence(p_to)
    cur = path_sequence(p_from)
    cur_edges = set(p_from.edges)

    def snapshot():
        return EdgeSubgraph._unchecked(host, frozenset(cur_edges))

    for k in range(n - 1):
        v = target[k]
        pos = cur.index(v)
        if pos == k:
            continue
        if k == 0:
            if pos == n - 1:
                cur.reverse()
                continue
            # one swap moves v to an endpoint: cut before v, reattach the
            # severed tail reversed at the current end
            cur_edges.discard(canonical_edge(cur[pos - 1], cur[pos]))
            cur_edges.add(canonical_edge(cur[pos - 1], cur[n - 1]))
            cur = cur[:pos] + cur[pos:][::-1]
            cur.reverse()
            yield snapshot()
            continue
        if pos < n - 1:
            # swap (a): make v the far endpoint of the unmatched tail
            cur_edges.discard(canonical_edge(cur[pos - 1], cur[pos]))
            cur_edges.add(canonical_edge(cur[pos - 1], cur[n - 1]))
            cur = cur[:pos] + cur[pos:][::-1]
            yield snapshot()
        # swap (b): flip the tail so v lands right after the matched prefix
        cur_edges.discard(canonical_edge(cur[k - 1], cur[k]))
        cur_edges.add(canonical_edge(cur[k - 1], cur[n - 1]))
        cur = cur[:k] + cur[k:][::-1]
        yield snapshot()


def hampath_exchange_chain(p_from: EdgeSubgraph, p_to: EdgeSubgraph) -> ExchangeChain:
    """Chain between Hamiltonian paths of a complete host.

    Grows the prefix that matches the target order, spending at most two
    replacements per placed vertex: at most 2(n-1) in total.
    """
    kind = HamiltonianPaths(p_from.host)
    _require_member(kind, p_from, "p_from")
    _require_member(kind, p_to, "p_to")
    return ExchangeChain(tuple(_hampath_chain(p_from, p_to)))


# --- diameter-3 trees: leaf migration between stars and double stars ---------


def _classify_diam3(h: EdgeSubgraph):
    """Return ("star", centres) or ("double", (u, leaves_u), (v, leaves_v)).

    centres is the set of valid star centres (unique for n >= 3).
    """
    n = h.host.n
    if n <= 2:
        return ("star", set(range(n)))
    adj = h.adjacency()
    internal = sorted(v for v in range(n) if len(adj[v]) >= 2)
    if len(internal) == 1:
        return ("star", {internal[0]})
    if len(internal) == 2:
        u, v = internal
        if canonical_edge(u, v) not in h.edges:
            raise DomainError("tree has diameter greater than 3")
        leaves_u = sorted(x for x in adj[u] if x != v)
        leaves_v = sorted(x for x in adj[v] if x != u)
        return ("double", (u, leaves_u), (v, leaves_v))
    raise DomainError("tree has diameter greater than 3")


def _diam3_chain(t_from: EdgeSubgraph, t_to: EdgeSubgraph) -> Iterator[EdgeSubgraph]:
    host = t_from.host
    yield t_from
    if t_from.edges == t_to.edges:
        return
    cur_edges = set(t_from.edges)

    def apply(swaps):
        for old, new in swaps:
            cur_edges.discard(old)
            cur_edges.add(new)
            yield EdgeSubgraph._unchecked(host, frozenset(cur_edges))

    cls_from = _classify_diam3(t_from)
    cls_to = _classify_diam3(t_to)

    # middle star centre, chosen so that the final phase is a plain leaf
    # migration out of it
    if cls_to[0] == "star":
        c2 = min(cls_to[1])
        final_leaves = None
    else:
        (x, leaves_x), (y, leaves_y) = cls_to[1], cls_to[2]
        heavy, light = (x, y) if len(leaves_x) >= len(leaves_y) else (y, x)
        c2 = heavy
        if cls_from[0] == "double":
            from_centres = {cls_from[1][0], cls_from[2][0]}
            if heavy not in from_centres and light in from_centres:
                c2 = light
        final_leaves = leaves_x if c2 == y else leaves_y
        final_other = x if c2 == y else y

    # phase 1: collapse the start tree onto a single star centre c1
    if cls_from[0] == "star":
        centres = cls_from[1]
        c1 = c2 if c2 in centres else min(centres)
    else:
        (u, leaves_u), (v, leaves_v) = cls_from[1], cls_from[2]
        if c2 in (u, v):
            c1 = c2
        else:
            # migrate the lighter side: p <= q keeps this phase short
            c1 = v if len(leaves_u) <= len(leaves_v) else u
        other = u if c1 == v else v
        other_leaves = leaves_u if c1 == v else leaves_v
        yield from apply(
            (canonical_edge(z, other), canonical_edge(z, c1)) for z in other_leaves
        )

    # phase 2: relocate the star centre
    if c1 != c2:
        yield from apply(
            (canonical_edge(z, c1), canonical_edge(z, c2))
            for z in range(host.n)
            if z not in (c1, c2)
        )

    # phase 3: split the star at c2 back into the target double star
    if cls_to[0] == "double":
        yield from apply(
            (canonical_edge(z, c2), canonical_edge(z, final_other)) for z in final_leaves
        )


def diam3_exchange_chain(t_from: EdgeSubgraph, t_to: EdgeSubgraph) -> ExchangeChain:
    """Chain between spanning trees of diameter <= 3 of a complete host.

    Every intermediate tree has diameter <= 3 and the number of
    replacements never exceeds 2(n-2).
    """
    kind = Diam3Trees(t_from.host)
    _require_member(kind, t_from, "t_from")
    _require_member(kind, t_to, "t_to")
    chain = ExchangeChain(tuple(_diam3_chain(t_from, t_to)))
    assert chain.replacements <= max(0, 2 * (t_from.host.n - 2))
    return chain


# --- interpolation ------------------------------------------------------------


def chain_steps(kind: FamilyKind, h_from: EdgeSubgraph, h_to: EdgeSubgraph) -> Iterator[EdgeSubgraph]:
    """Lazy chain walk for the given family kind."""
    if isinstance(kind, SpanningTrees):
        return _tree_chain(h_from, h_to)
    if isinstance(kind, HamiltonianPaths):
        return _hampath_chain(h_from, h_to)
    if isinstance(kind, Diam3Trees):
        return _diam3_chain(h_from, h_to)
    raise DomainError(f"unknown family kind {kind!r}")


def interpolate_traced(
    kind: FamilyKind,
    h_lo: EdgeSubgraph,
    h_hi: EdgeSubgraph,
    collect: list | None = None,
) -> tuple[EdgeSubgraph, int]:
    """Walk the chain from h_lo to h_hi and stop at the first member of
    absolute weight at most 1.  Returns (member, replacements walked).

    Accepts the endpoints in either order; requires one non-positive and
    one non-negative weight.  Steps change the weight by 0 or +-2 and all
    weights share the parity of n-1, so the walk cannot skip past zero.
    """
    _require_member(kind, h_lo, "h_lo")
    _require_member(kind, h_hi, "h_hi")
    w_lo, w_hi = weight(h_lo), weight(h_hi)
    if w_lo > w_hi:
        h_lo, h_hi = h_hi, h_lo
        w_lo, w_hi = w_hi, w_lo
    if w_lo > 0:
        raise DomainError(f"no endpoint with weight <= 0: weights are {w_lo}, {w_hi}")
    if w_hi < 0:
        raise DomainError(f"no endpoint with weight >= 0: weights are {w_lo}, {w_hi}")
    replacements = 0
    for step in chain_steps(kind, h_lo, h_hi):
        if collect is not None:
            collect.append(step)
        w = weight(step)
        if abs(w) <= 1:
            m = member_edge_count(kind)
            assert w == 0 if m % 2 == 0 else abs(w) == 1
            return step, replacements
        replacements += 1
    raise AssertionError("chain ended without crossing zero")  # unreachable


def interpolate(kind: FamilyKind, h_lo: EdgeSubgraph, h_hi: EdgeSubgraph) -> EdgeSubgraph:
    """First member of weight 0 (n-1 even) or +-1 (n-1 odd) along the chain."""
    member, _ = interpolate_traced(kind, h_lo, h_hi)
    return member
