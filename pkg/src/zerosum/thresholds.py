"""Exact extremal edge-count formulas and sufficient-condition verdicts.

Everything here is integer or exact-rational arithmetic; there is no
floating point.  The formulas give, for each supported family, the
largest number of edges a host can spend on one colour class without
being forced to contain the half-sized monochromatic subgraph that the
finders need.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Union

from .errors import DomainError
from .families import Diam3Trees, FamilyKind, HamiltonianPaths, SpanningTrees
from .graphs import ColoredGraph, binomial, census


def ex_linear_forest(n: int, k: int) -> int:
    """Most edges of an n-vertex graph with no linear forest of k edges.

    max{ C(k,2), C(n,2) - C(n - floor((k-1)/2), 2) + c } with c the parity
    of k-1.
    """
    if not 1 <= k <= n - 1:
        raise DomainError(f"need 1 <= k <= n-1, got n={n}, k={k}")
    c = (k - 1) % 2
    s = (k - 1) // 2
    return max(binomial(k, 2), binomial(n, 2) - binomial(n - s, 2) + c)


def ex_forest(n: int, k: int) -> int:
    """Most edges of an n-vertex graph with no forest of k edges: C(k,2)."""
    if not 1 <= k <= n:
        raise DomainError(f"need 1 <= k <= n, got n={n}, k={k}")
    return binomial(k, 2)


def ex_star(n: int, k: int) -> int:
    """Most edges of an n-vertex graph with no k-edge star: floor((k-1)n/2)."""
    if k < 1:
        raise DomainError(f"need k >= 1, got k={k}")
    return (k - 1) * n // 2


def forest_bound_triangle_free(k: int) -> int:
    """Edge threshold whose strict excess forces a k-edge forest in a
    triangle-free host: floor(k^2/4)."""
    if k < 1:
        raise DomainError(f"need k >= 1, got k={k}")
    return k * k // 4


def forest_bound_degenerate(k: int, d: int) -> int:
    """Edge threshold whose strict excess forces a k-edge forest in a
    d-degenerate host."""
    if k < 1 or d < 1:
        raise DomainError(f"need k >= 1 and d >= 1, got k={k}, d={d}")
    if k <= d:
        return binomial(k, 2)
    return k * d - binomial(d + 1, 2)


def forest_bound_planar(k: int) -> int:
    """Edge count at which a planar host is forced to contain a k-edge
    forest (reaching the bound suffices): 3k-5."""
    if k < 3:
        raise DomainError(f"planar forest bound needs k >= 3, got k={k}")
    return 3 * k - 5


def spanning_path_threshold(n: int) -> int:
    """Census threshold for zero-sum or almost zero-sum spanning paths.

    Equals ex(n, half-sized linear forests) = ex_linear_forest(n, floor((n-1)/2)).
    """
    if n < 3:
        raise DomainError(f"need n >= 3, got n={n}")
    c = ((n - 1) // 2 - 1) % 2
    return binomial(n, 2) - binomial(n - (n - 3) // 4, 2) + c


@dataclass(frozen=True)
class ConditionReport:
    holds: bool
    bound: Union[int, Fraction]
    note: str = ""


@dataclass(frozen=True)
class MasterVerdict:
    """Evaluation of the three sufficient conditions for a family on K_n.

    condition1 compares min{e(-1), e(1)} against the half-family edge
    threshold; condition2/condition3 compare |f(K_n)| against the
    decomposition bounds (2+c)/m * C(n,2) and (3+c)/(m+1) * C(n,2).  The
    decomposition conditions are reported only when the corresponding
    decomposition exists for (n, family); when absent they are None, not
    False.
    """

    condition1: ConditionReport
    condition2: Optional[ConditionReport]
    condition3: Optional[ConditionReport]
    c: int
    m: int

    def any_holds(self) -> bool:
        return any(
            r is not None and r.holds
            for r in (self.condition1, self.condition2, self.condition3)
        )


def half_family_threshold(kind: FamilyKind) -> tuple[int, str]:
    """Edge threshold used by condition 1, plus a note on its status."""
    n = kind.host.n
    k = (n - 1) // 2
    if isinstance(kind, SpanningTrees):
        return ex_forest(n, k) if k >= 1 else 0, "exact"
    if isinstance(kind, HamiltonianPaths):
        return (spanning_path_threshold(n) if n >= 3 else 0), "exact"
    if isinstance(kind, Diam3Trees):
        # only the star Turan number is known here; it bounds the true
        # half-family threshold from above, so condition 1 stays sufficient
        return ex_star(n, k) if k >= 1 else 0, "upper bound"
    raise DomainError(f"unknown family kind {kind!r}")


def _decomposition_parts_are_members(kind: FamilyKind, n: int) -> bool:
    # Hamiltonian paths are spanning trees; they have diameter <= 3 only
    # for n <= 4
    if isinstance(kind, (SpanningTrees, HamiltonianPaths)):
        return True
    return n <= 4


def master_verdict(g: ColoredGraph, kind: FamilyKind) -> MasterVerdict:
    """Evaluate all available sufficient conditions for g and the family.

    Rational bounds are compared by cross-multiplied integers so the
    strict inequalities are exact at the boundary.
    """
    if not (kind.host is g or kind.host == g):
        raise DomainError("family kind is bound to a different host")
    n = g.n
    m = n - 1
    c = m % 2
    cs = census(g)
    bound1, note1 = half_family_threshold(kind)
    cond1 = ConditionReport(cs.minimum > bound1, bound1, note1)

    cond2 = cond3 = None
    if g.is_complete:
        total = abs(cs.total_weight)
        pairs = binomial(n, 2)
        if n % 2 == 0 and n >= 2 and _decomposition_parts_are_members(kind, n):
            # decomposition into n/2 spanning paths exists for even n
            cond2 = ConditionReport(
                total * m < (2 + c) * pairs,
                Fraction((2 + c) * pairs, m) if m else Fraction(0),
                "path decomposition",
            )
        if n % 2 == 1 and n >= 3 and _decomposition_parts_are_members(kind, n):
            # decomposition into (n-1)/2 spanning cycles exists for odd n;
            # a cycle minus any edge is a spanning path
            cond3 = ConditionReport(
                total * (m + 1) < (3 + c) * pairs,
                Fraction((3 + c) * pairs, m + 1),
                "cycle decomposition",
            )
    return MasterVerdict(cond1, cond2, cond3, c, m)
