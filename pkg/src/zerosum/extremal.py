"""Deterministic generators for extremal graphs and sharp colourings.

Each construction realizes one tightness witness: a colouring (or a bare
Turan witness, emitted with all edges -1 since that is the colour class
it models) sitting exactly at a guarantee's threshold while the promised
subgraph does not exist.  verify_extremal replays the claimed
non-existence property exhaustively and never guesses: instances too
large for the applicable budget raise BudgetExceeded.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from typing import Union

from . import finders, oracle
from .errors import BudgetExceeded, DomainError
from .families import HamiltonianPaths, SpanningTrees
from .graphs import (
    ColoredGraph,
    StackedCertificate,
    UnionFind,
    binomial,
    canonical_edge,
    census,
    complete_edges,
    weight,
)
from .oracle import EnumerationBudget, enumerate_family, spanning_tree_count
from .thresholds import (
    ex_forest,
    ex_linear_forest,
    ex_star,
    forest_bound_degenerate,
    forest_bound_planar,
    spanning_path_threshold,
)


@dataclass(frozen=True)
class TuranLinearForest:
    n: int
    k: int
    which: str  # "clique" (K_k plus isolated vertices) or "join" (dominating set)


@dataclass(frozen=True)
class ForestExtremal:
    n: int
    k: int


@dataclass(frozen=True)
class StarExtremalCirculant:
    n: int
    k: int


@dataclass(frozen=True)
class PathSharpness:
    n: int


@dataclass(frozen=True)
class TreeSharpness:
    n: int


@dataclass(frozen=True)
class BipartiteSharpness:
    n: int  # bipartite host on 2n+1 vertices; threshold parameter n


@dataclass(frozen=True)
class DTreeSharpness:
    n: int
    d: int


@dataclass(frozen=True)
class PlanarSharpness:
    n: int


@dataclass(frozen=True)
class ConnectivitySmall:
    n: int  # 4 or 5


@dataclass(frozen=True)
class ConnectivityMatching:
    n: int  # >= 6


@dataclass(frozen=True)
class NoLength2:
    n: int  # >= 7


@dataclass(frozen=True)
class NoZeroSumStar:
    n: int


@dataclass(frozen=True)
class MatchingK4n:
    t: int  # host is K_{4t^2}


ConstructionId = Union[
    TuranLinearForest,
    ForestExtremal,
    StarExtremalCirculant,
    PathSharpness,
    TreeSharpness,
    BipartiteSharpness,
    DTreeSharpness,
    PlanarSharpness,
    ConnectivitySmall,
    ConnectivityMatching,
    NoLength2,
    NoZeroSumStar,
    MatchingK4n,
]


# --- building blocks -----------------------------------------------------------


def _clique_edges(vertices) -> set:
    vs = sorted(vertices)
    return {(u, v) for i, u in enumerate(vs) for v in vs[i + 1 :]}


def _linear_forest_witness_edges(n: int, k: int, which: str) -> set:
    if not 1 <= k <= n - 1:
        raise DomainError(f"need 1 <= k <= n-1, got n={n}, k={k}")
    if which == "clique":
        return _clique_edges(range(k))
    if which == "join":
        s = (k - 1) // 2
        c = (k - 1) % 2
        edges = _clique_edges(range(s))
        edges |= {(u, v) for u in range(s) for v in range(s, n)}
        if c:
            edges.add((s, s + 1))
        return edges
    raise DomainError(f"unknown variant {which!r}; use 'clique' or 'join'")


def _circulant_star_free_edges(n: int, k: int) -> set:
    """Near-regular graph of maximum degree k-1 with exactly
    floor((k-1)n/2) edges."""
    if not 1 <= k <= n:
        raise DomainError(f"need 1 <= k <= n, got n={n}, k={k}")
    target = (k - 1) * n // 2
    t = (k - 1) // 2
    edges = {canonical_edge(i, (i + d) % n) for d in range(1, t + 1) for i in range(n)}
    if (k - 1) % 2 == 1:
        if n % 2 == 0:
            edges |= {canonical_edge(i, i + n // 2) for i in range(n // 2)}
        else:
            # a difference class coprime to n is one n-cycle; alternate
            # edges of it form a near-perfect matching
            d = next(
                (d for d in range(t + 1, (n - 1) // 2 + 1) if math.gcd(d, n) == 1), None
            )
            if d is not None:
                cyc = [(j * d) % n for j in range(n)]
                edges |= {canonical_edge(cyc[i], cyc[i + 1]) for i in range(0, n - 1, 2)}
            else:
                # greedy completion keeps determinism when no class fits
                deg = Counter()
                for u, v in edges:
                    deg[u] += 1
                    deg[v] += 1
                for u, v in complete_edges(n):
                    if len(edges) == target:
                        break
                    if (u, v) not in edges and deg[u] < k - 1 and deg[v] < k - 1:
                        edges.add((u, v))
                        deg[u] += 1
                        deg[v] += 1
    if len(edges) != target:
        raise DomainError(f"cannot realize {target} edges with max degree {k - 1} on {n} vertices")
    return edges


def _stacked_planar_host(n: int) -> tuple[set, StackedCertificate]:
    """Stacked triangulation grown by always filling the lexicographically
    smallest available face; every insertion touches only earlier vertices,
    so each vertex prefix induces the stacked triangulation of its size."""
    if n < 3:
        raise DomainError(f"need n >= 3, got {n}")
    faces = Counter({(0, 1, 2): 2})
    edges = {(0, 1), (0, 2), (1, 2)}
    inserts = []
    for v in range(3, n):
        face = min(f for f, cnt in faces.items() if cnt > 0)
        faces[face] -= 1
        a, b, c = face
        edges |= {canonical_edge(v, a), canonical_edge(v, b), canonical_edge(v, c)}
        for tri in ((v, a, b), (v, b, c), (v, a, c)):
            faces[tuple(sorted(tri))] += 1
        inserts.append((v, face))
    return edges, StackedCertificate((0, 1, 2), tuple(inserts))


def _lowest_dtree_edges(n: int, d: int) -> set:
    """d-tree grown by attaching every new vertex to {0..d-1}."""
    if d < 1 or n < d + 1:
        raise DomainError(f"need n >= d+1 >= 2, got n={n}, d={d}")
    edges = _clique_edges(range(d + 1))
    for v in range(d + 1, n):
        edges |= {(j, v) for j in range(d)}
    return edges


def _all_minus(n: int, edges) -> ColoredGraph:
    return ColoredGraph(n, [(u, v, -1) for u, v in sorted(edges)])


def _balanced_split(n: int):
    """x > n/2 with C(x,2) = x(n-x) + C(n-x,2), if one exists."""
    for x in range(n // 2 + 1, n):
        y = n - x
        if binomial(x, 2) == x * y + binomial(y, 2):
            return x, y
    return None


# --- construction dispatch -------------------------------------------------------


def make_extremal_graph(cid: ConstructionId) -> ColoredGraph:
    if isinstance(cid, TuranLinearForest):
        return _all_minus(cid.n, _linear_forest_witness_edges(cid.n, cid.k, cid.which))

    if isinstance(cid, ForestExtremal):
        if not 1 <= cid.k <= cid.n:
            raise DomainError(f"need 1 <= k <= n, got n={cid.n}, k={cid.k}")
        return _all_minus(cid.n, _clique_edges(range(cid.k)))

    if isinstance(cid, StarExtremalCirculant):
        return _all_minus(cid.n, _circulant_star_free_edges(cid.n, cid.k))

    if isinstance(cid, PathSharpness):
        n = cid.n
        if n < 3:
            raise DomainError(f"need n >= 3, got {n}")
        k = (n - 1) // 2
        val_clique = binomial(k, 2)
        val_join = len(_linear_forest_witness_edges(n, k, "join"))
        which = "clique" if val_clique >= val_join else "join"
        g = ColoredGraph.complete_with_minus(n, _linear_forest_witness_edges(n, k, which))
        assert census(g).e_minus == ex_linear_forest(n, k) == spanning_path_threshold(n)
        return g

    if isinstance(cid, TreeSharpness):
        n = cid.n
        if n < 3:
            raise DomainError(f"need n >= 3, got {n}")
        k = (n - 1) // 2
        g = ColoredGraph.complete_with_minus(n, _clique_edges(range(k)))
        assert census(g).e_minus == ex_forest(n, k)
        return g

    if isinstance(cid, BipartiteSharpness):
        np = cid.n
        if np < 2:
            raise DomainError(f"need n >= 2, got {np}")
        # connected bipartite host of odd order 2n+1 (parity kills the
        # almost zero-sum escape) holding a balanced complete bipartite
        # core coloured -1
        x_side = list(range(np))
        y_side = list(range(np, 2 * np + 1))
        minus = {
            canonical_edge(u, v) for u in x_side[: np // 2] for v in y_side[: (np + 1) // 2]
        }
        rows = []
        for u in x_side:
            for v in y_side:
                e = canonical_edge(u, v)
                rows.append((e[0], e[1], -1 if e in minus else 1))
        g = ColoredGraph(2 * np + 1, rows)
        assert census(g).e_minus == np * np // 4
        return g

    if isinstance(cid, DTreeSharpness):
        n, d = cid.n, cid.d
        if n < 2 * d + 2:
            raise DomainError(f"need n >= 2d+2 = {2 * d + 2}, got n={n}")
        k = (n - 1) // 2
        host_edges = _lowest_dtree_edges(n, d)
        minus = {(u, v) for u, v in host_edges if v < k}
        rows = [(u, v, -1 if (u, v) in minus else 1) for u, v in sorted(host_edges)]
        g = ColoredGraph(n, rows)
        assert census(g).e_minus == forest_bound_degenerate(k, d)
        return g

    if isinstance(cid, PlanarSharpness):
        n = cid.n
        if n < 7:
            raise DomainError(f"need n >= 7, got {n}")
        k = (n - 1) // 2
        host_edges, cert = _stacked_planar_host(n)
        minus = {(u, v) for u, v in host_edges if v < k}
        rows = [(u, v, -1 if (u, v) in minus else 1) for u, v in sorted(host_edges)]
        g = ColoredGraph(n, rows, certificate=cert)
        assert census(g).e_minus == 3 * k - 6 == forest_bound_planar(k) - 1
        return g

    if isinstance(cid, ConnectivitySmall):
        if cid.n not in (4, 5):
            raise DomainError(f"small connectivity witness needs n in {{4,5}}, got {cid.n}")
        g = ColoredGraph.complete_with_minus(cid.n, [(0, 1), (0, 2), (1, 2)])
        assert census(g).e_minus == 3 == (cid.n + 2) // 2
        return g

    if isinstance(cid, ConnectivityMatching):
        n = cid.n
        if n < 6:
            raise DomainError(f"matching connectivity witness needs n >= 6, got {n}")
        minus = [(2 * i, 2 * i + 1) for i in range(n // 2)]
        g = ColoredGraph.complete_with_minus(n, minus)
        assert census(g).e_minus == n // 2 == (n + 2) // 2 - 1
        return g

    if isinstance(cid, NoLength2):
        n = cid.n
        if n < 7:
            raise DomainError(f"need n >= 7, got {n}")
        anchors = {canonical_edge(0, u) for u in range(2, n)}
        anchors |= {canonical_edge(1, u) for u in range(2, n)}
        extra = binomial(n, 2) // 2 - len(anchors)
        minus = set(anchors)
        for e in complete_edges(n):
            if extra == 0:
                break
            if e not in minus:
                minus.add(e)
                extra -= 1
        g = ColoredGraph.complete_with_minus(n, minus)
        cs = census(g)
        assert abs(cs.e_minus - cs.e_plus) <= 1
        return g

    if isinstance(cid, NoZeroSumStar):
        split = _balanced_split(cid.n)
        if split is None:
            raise DomainError(f"no balanced split exists for n={cid.n}")
        x, _ = split
        g = ColoredGraph.complete_with_minus(cid.n, _clique_edges(range(x)))
        cs = census(g)
        assert cs.e_minus == cs.e_plus
        return g

    if isinstance(cid, MatchingK4n):
        t = cid.t
        if t < 1:
            raise DomainError(f"need t >= 1, got {t}")
        n = t * t
        size_a = 2 * n + t - 1
        total = 4 * n
        minus = _clique_edges(range(size_a)) | _clique_edges(range(size_a, total))
        g = ColoredGraph.complete_with_minus(total, minus)
        cs = census(g)
        assert cs.e_plus == 4 * n * n - t * t + 2 * t - 1
        assert cs.e_minus == 4 * n * n - n - 2 * t + 1
        return g

    raise DomainError(f"unknown construction {cid!r}")


# --- verification ----------------------------------------------------------------


def _max_forest_size(g: ColoredGraph, sign: int) -> int:
    """Size of a maximum forest inside one colour class (greedy is exact)."""
    uf = UnionFind(g.n)
    return sum(1 for e, c in g.sign.items() if c == sign and uf.union(*e))


def _no_light_member(g, kind, budget) -> bool:
    return all(abs(weight(member)) > 1 for member in enumerate_family(g, kind, budget))


def _tree_weight_floor_certified(g: ColoredGraph, k: int, budget) -> bool:
    """No spanning tree of g has |weight| <= 1, shown by the minus class
    containing no k-edge forest; cross-checked by full enumeration when
    the tree count fits the budget."""
    m = g.n - 1
    if _max_forest_size(g, -1) >= k:
        return False
    # any spanning tree carries at most k-1 minus edges
    floor = m - 2 * (k - 1)
    if floor <= 1:
        return False
    if spanning_tree_count(g) <= budget.max_spanning_trees:
        if not _no_light_member(g, SpanningTrees(g), budget):
            return False
    return True


def verify_extremal(cid: ConstructionId, budget: EnumerationBudget | None = None) -> bool:
    """True iff the construction's claimed non-existence property holds.

    Raises BudgetExceeded instead of guessing when the instance is too
    large to verify exhaustively.
    """
    budget = budget or oracle.DEFAULT_BUDGET
    g = make_extremal_graph(cid)

    if isinstance(cid, TuranLinearForest):
        expected = (
            binomial(cid.k, 2)
            if cid.which == "clique"
            else binomial(cid.n, 2)
            - binomial(cid.n - (cid.k - 1) // 2, 2)
            + (cid.k - 1) % 2
        )
        if len(g.edges) != expected:
            return False
        return finders._find_linear_forest(g, -1, cid.k) is None

    if isinstance(cid, ForestExtremal):
        return len(g.edges) == binomial(cid.k, 2) and _max_forest_size(g, -1) < cid.k

    if isinstance(cid, StarExtremalCirculant):
        deg = Counter()
        for u, v in g.edges:
            deg[u] += 1
            deg[v] += 1
        return len(g.edges) == ex_star(cid.n, cid.k) and (
            not deg or max(deg.values()) <= cid.k - 1
        )

    if isinstance(cid, PathSharpness):
        return _no_light_member(g, HamiltonianPaths(g), budget)

    if isinstance(cid, TreeSharpness):
        return _no_light_member(g, SpanningTrees(g), budget)

    if isinstance(cid, BipartiteSharpness):
        return _tree_weight_floor_certified(g, cid.n, budget)

    if isinstance(cid, DTreeSharpness):
        return _tree_weight_floor_certified(g, (cid.n - 1) // 2, budget)

    if isinstance(cid, PlanarSharpness):
        return _tree_weight_floor_certified(g, (cid.n - 1) // 2, budget)

    if isinstance(cid, (ConnectivitySmall, ConnectivityMatching)):
        # designated pair: an edge of the -1 core
        report = finders.find_zero_sum_path_leq4(g, 0, 1)
        if report.found:
            return False
        # independent scan over the same path space
        eidx = {e: i for i, e in enumerate(g.edges)}
        mask = sum(1 << eidx[e] for e, c in g.sign.items() if c == -1)
        masks2, masks4 = oracle._short_path_masks(g.n, eidx, 0, 1)
        return not any((p & mask).bit_count() == 1 for p in masks2) and not any(
            (p & mask).bit_count() == 2 for p in masks4
        )

    if isinstance(cid, NoLength2):
        cs = census(g)
        if abs(cs.e_minus - cs.e_plus) > 1:
            return False
        sign = g.sign
        return all(
            sign[canonical_edge(0, u)] + sign[canonical_edge(u, 1)] != 0
            for u in range(2, g.n)
        )

    if isinstance(cid, NoZeroSumStar):
        cs = census(g)
        if cs.e_minus != cs.e_plus:
            return False
        for centre in range(g.n):
            star_weight = sum(
                g.sign[canonical_edge(centre, v)] for v in range(g.n) if v != centre
            )
            if abs(star_weight) <= 1:
                return False
        return True

    if isinstance(cid, MatchingK4n):
        n = cid.t * cid.t
        cs = census(g)
        if (cs.e_plus, cs.e_minus) != (
            4 * n * n - cid.t * cid.t + 2 * cid.t - 1,
            4 * n * n - n - 2 * cid.t + 1,
        ):
            return False
        return all(
            weight(matching) != 0
            for matching in enumerate_family(g, oracle.PerfectMatchings(g), budget)
        )

    raise DomainError(f"unknown construction {cid!r}")


# --- CLI plumbing ----------------------------------------------------------------

CONSTRUCTION_NAMES = {
    "turan-linear-forest": (TuranLinearForest, ("n", "k", "which")),
    "forest": (ForestExtremal, ("n", "k")),
    "star-circulant": (StarExtremalCirculant, ("n", "k")),
    "path-sharpness": (PathSharpness, ("n",)),
    "tree-sharpness": (TreeSharpness, ("n",)),
    "bipartite-sharpness": (BipartiteSharpness, ("n",)),
    "dtree-sharpness": (DTreeSharpness, ("n", "d")),
    "planar-sharpness": (PlanarSharpness, ("n",)),
    "connectivity-small": (ConnectivitySmall, ("n",)),
    "connectivity-matching": (ConnectivityMatching, ("n",)),
    "no-length2": (NoLength2, ("n",)),
    "no-zero-sum-star": (NoZeroSumStar, ("n",)),
    "matching-k4n": (MatchingK4n, ("t",)),
}


def construction_from_args(name: str, params: list[str]) -> ConstructionId:
    if name not in CONSTRUCTION_NAMES:
        raise DomainError(
            f"unknown construction {name!r}; choose from {sorted(CONSTRUCTION_NAMES)}"
        )
    cls, fields = CONSTRUCTION_NAMES[name]
    if len(params) != len(fields):
        raise DomainError(f"construction {name} takes parameters {fields}")
    args = []
    for field_name, value in zip(fields, params):
        if field_name == "which":
            args.append(value)
        else:
            try:
                args.append(int(value))
            except ValueError:
                raise DomainError(f"parameter {field_name} must be an integer") from None
    return cls(*args)


def construction_header(cid: ConstructionId) -> str:
    name = next(n for n, (cls, _) in CONSTRUCTION_NAMES.items() if isinstance(cid, cls))
    cls, fields = CONSTRUCTION_NAMES[name]
    params = " ".join(str(getattr(cid, f)) for f in fields)
    return f"construction: {name} {params}"
