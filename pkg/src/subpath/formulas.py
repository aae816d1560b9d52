"""Closed-form subpath numbers for trees, cycles, unicyclic graphs, complete
and complete bipartite graphs, ladders and hexagonal chains, plus the exact
expectation over the Erdos-Renyi model G(n, p).

Everything returns Python integers or :class:`fractions.Fraction`; no float
enters any result.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb, factorial, perm

from .graph import Graph, GraphError, is_connected

__all__ = [
    "expected_pn",
    "hexagonal_bounds",
    "parse_rational",
    "pn_complete",
    "pn_complete_bipartite",
    "pn_cycle",
    "pn_ladder",
    "pn_tree",
    "pn_unicyclic",
    "pn_unicyclic_graph",
    "unicyclic_component_sizes",
]


def _choose(n: int, k: int) -> int:
    # Vanishes outside 0 <= k <= n, including negative n.
    if n < 0 or k < 0 or k > n:
        return 0
    return comb(n, k)


def _exact_div(num: int, den: int, what: str) -> int:
    q, r = divmod(num, den)
    if r:
        raise ArithmeticError(f"{what}: {num}/{den} is not an integer")
    return q


def pn_tree(n: int) -> int:
    if n < 1:
        raise ValueError(f"a tree needs n >= 1, got {n}")
    return comb(n + 1, 2)


def pn_cycle(n: int) -> int:
    if n < 3:
        raise ValueError(f"a cycle needs n >= 3, got {n}")
    return n * n


def pn_unicyclic(component_sizes: list[int]) -> int:
    """Subpath number of a unicyclic graph from the orders of the trees hanging
    off its cycle (one entry per cycle vertex, the cycle vertex included)."""
    sizes = list(component_sizes)
    if len(sizes) < 3:
        raise ValueError(f"the cycle needs at least 3 vertices, got {len(sizes)} components")
    if any(s < 1 for s in sizes):
        raise ValueError(f"component sizes must be positive: {sizes}")
    n = sum(sizes)
    return n + 2 * comb(n, 2) - sum(comb(s, 2) for s in sizes)


def unicyclic_component_sizes(g: Graph) -> list[int]:
    """Tree sizes around the unique cycle of ``g``, in cycle order.

    The cycle is found by repeatedly stripping degree-1 vertices.
    """
    if g.n < 3 or g.m != g.n or not is_connected(g):
        raise GraphError("graph is not unicyclic (needs connected, m == n >= 3)")
    deg = g.degrees()
    alive = [True] * g.n
    leaves = [v for v in range(g.n) if deg[v] == 1]
    while leaves:
        v = leaves.pop()
        alive[v] = False
        for w in g.adjacency[v]:
            if alive[w]:
                deg[w] -= 1
                if deg[w] == 1:
                    leaves.append(w)
    cycle_set = {v for v in range(g.n) if alive[v]}
    # Walk the cycle to report sizes in cyclic order.
    start = min(cycle_set)
    order = [start]
    prev, cur = -1, start
    while True:
        nxt = next(w for w in g.adjacency[cur] if w in cycle_set and w != prev)
        if nxt == start:
            break
        order.append(nxt)
        prev, cur = cur, nxt
        if len(order) > len(cycle_set):
            raise AssertionError("cycle walk did not close")
    sizes = []
    for root in order:
        seen = {root}
        stack = [root]
        while stack:
            u = stack.pop()
            for w in g.adjacency[u]:
                if w not in seen and w not in cycle_set:
                    seen.add(w)
                    stack.append(w)
        sizes.append(len(seen))
    return sizes


def pn_unicyclic_graph(g: Graph) -> int:
    return pn_unicyclic(unicyclic_component_sizes(g))


def pn_complete(n: int) -> int:
    if n < 1:
        raise ValueError(f"K_n needs n >= 1, got {n}")
    ordered = sum(perm(n, k) for k in range(1, n + 1))
    return _exact_div(ordered + n, 2, f"pn(K_{n})")


def pn_complete_bipartite(a: int, b: int) -> int:
    """Subpath number of K_{a,b}, summed over endpoint pairs by side.

    The first sum uses C(a-2, k-1) for the interior vertices taken from the
    smaller side. A variant with C(a, k-1) appears in some write-ups of this
    count; it overcounts (it lets a path reuse its own endpoints) and
    disagrees with enumeration already on K_{2,3}.
    """
    if a < 1 or b < 1:
        raise ValueError(f"K_(a,b) needs a, b >= 1, got ({a}, {b})")
    if a > b:
        a, b = b, a
    n = a + b
    same_small = comb(a, 2) * sum(
        perm(b, k) * _choose(a - 2, k - 1) * factorial(k - 1) for k in range(1, a + 1)
    )
    # Terms with k = a + 1 vanish since C(a, a+1) = 0; kept to match the range.
    same_large = comb(b, 2) * sum(
        _choose(a, k) * factorial(k) * _choose(b - 2, k - 1) * factorial(k - 1)
        for k in range(1, a + 2)
    )
    cross = a * b * sum(
        perm(a - 1, k - 1) * perm(b - 1, k - 1) for k in range(1, a + 1)
    )
    return same_small + same_large + cross + n


def parse_rational(value: str | int | Fraction) -> Fraction:
    """Accept ``"NUM/DEN"``, ``"NUM"``, an int or a Fraction. Floats are refused."""
    if isinstance(value, float):
        raise TypeError("pass probabilities as exact rationals, not floats")
    if isinstance(value, str):
        text = value.strip()
        if "." in text or "e" in text.lower():
            raise ValueError(f"expected NUM/DEN, got {value!r}")
        return Fraction(text)
    return Fraction(value)


def expected_pn(n: int, p: str | int | Fraction) -> Fraction:
    """Exact expectation of the subpath number of G(n, p)."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    q = parse_rational(p)
    if not 0 <= q <= 1:
        raise ValueError(f"edge probability must lie in [0, 1], got {q}")
    total = sum(perm(n, k) * q ** (k - 1) for k in range(1, n + 1))
    return Fraction(total, 2) + Fraction(n, 2)


def pn_ladder(k: int) -> int:
    """Ladder with ``k`` squares, i.e. the 4-cycle chain on 2k + 2 vertices."""
    if k < 2:
        raise ValueError(f"ladder needs k >= 2 squares, got {k}")
    return _exact_div(108 * 2**k - k**3 - 12 * k**2 - 56 * k - 99, 3, f"pn_ladder({k})")


def hexagonal_bounds(k: int) -> tuple[int, int]:
    """(min, max) subpath number over hexagonal chains with ``k`` hexagons."""
    if k < 2:
        raise ValueError(f"hexagonal chain needs k >= 2 hexagons, got {k}")
    lower = _exact_div(
        432 * 2**k - 5 * k**3 - 63 * k**2 - 265 * k - 423, 3, f"hexagonal lower({k})"
    )
    upper = _exact_div(
        288 * 2**k - 3 * k**3 - 43 * k**2 - 176 * k - 282, 2, f"hexagonal upper({k})"
    )
    if lower > upper:
        raise AssertionError(f"hexagonal bounds inverted at k={k}: {lower} > {upper}")
    return lower, upper
