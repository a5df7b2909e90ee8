import random

from zerosum.graphs import ColoredGraph, complete_edges


def complete_from_mask(n, mask):
    """K_n whose i-th canonical edge is -1 iff bit i of mask is set."""
    edges = complete_edges(n)
    sign = {e: -1 if (mask >> i) & 1 else 1 for i, e in enumerate(edges)}
    return ColoredGraph._unchecked(n, edges, sign)


def random_complete(n, rng: random.Random):
    m = n * (n - 1) // 2
    return complete_from_mask(n, rng.getrandbits(m))
