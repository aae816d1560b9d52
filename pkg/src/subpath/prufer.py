"""Labelled trees from Pruefer sequences and unicyclic graphs built on them."""

from __future__ import annotations

import heapq
from itertools import product
from typing import Iterator

from .graph import Graph

__all__ = ["prufer_to_tree", "random_tree", "trees", "unicyclic_graphs"]


def prufer_to_tree(seq, n: int) -> Graph:
    """Decode a Pruefer sequence of length ``n - 2`` over ``0..n-1``."""
    if n == 1:
        return Graph(1, ((),))
    if n == 2:
        return Graph.from_edges(2, [(0, 1)])
    seq = list(seq)
    if len(seq) != n - 2 or any(not 0 <= x < n for x in seq):
        raise ValueError(f"not a Pruefer sequence for n={n}: {seq}")
    degree = [1] * n
    for x in seq:
        degree[x] += 1
    leaves = [v for v in range(n) if degree[v] == 1]
    heapq.heapify(leaves)
    edges = []
    for x in seq:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, x))
        degree[x] -= 1
        if degree[x] == 1:
            heapq.heappush(leaves, x)
    edges.append((heapq.heappop(leaves), heapq.heappop(leaves)))
    return Graph.from_edges(n, edges)


def trees(n: int) -> Iterator[Graph]:
    """Every labelled tree on ``n`` vertices, once each (``n**(n-2)`` of them)."""
    if n < 1:
        raise ValueError("trees need n >= 1")
    if n <= 2:
        yield prufer_to_tree((), n)
        return
    for seq in product(range(n), repeat=n - 2):
        yield prufer_to_tree(seq, n)


def unicyclic_graphs(n: int, rooted: bool = False) -> Iterator[Graph]:
    """Unicyclic graphs as a labelled tree plus one non-edge.

    ``rooted`` keeps only the closing edge {0, 1}; every isomorphism class still
    appears because any cycle edge can be relabelled to {0, 1}. Isomorphic
    duplicates are expected either way.
    """
    if n < 3:
        raise ValueError("unicyclic graphs need n >= 3")
    for t in trees(n):
        edges = list(t.edges())
        pairs = [(0, 1)] if rooted else [(x, y) for x in range(n) for y in range(x + 1, n)]
        for x, y in pairs:
            if not t.has_edge(x, y):
                yield Graph.from_edges(n, [*edges, (x, y)])


def random_tree(n: int, rng) -> Graph:
    """Uniform labelled tree; ``rng`` is a :class:`numpy.random.Generator`."""
    if n <= 2:
        return prufer_to_tree((), n)
    return prufer_to_tree(rng.integers(0, n, size=n - 2).tolist(), n)
