"""Experiments over graph catalogues: extremal scans, exhaustive checks of the
bipartite and unicyclic extremal results, a seeded Monte Carlo check of the
G(n, p) expectation, and the candidate cubic minimiser L_n.

Catalogues are graph6 streams. The bundled ones live in ``subpath/data``
(see the README there for provenance).
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from decimal import Decimal, localcontext
from fractions import Fraction
from importlib import resources
from itertools import combinations
from typing import Callable, Iterable

import numpy as np

from . import _kernels as K
from .count import count_subpaths
from .formulas import (
    expected_pn,
    parse_rational,
    pn_complete,
    pn_complete_bipartite,
    pn_tree,
    pn_unicyclic,
)
from .graph import (
    Graph,
    GraphError,
    count_triangles,
    encode_graph6,
    girth,
    is_connected,
    parse_graph6,
    stats,
)
from .prufer import random_tree

__all__ = [
    "BipartiteMaxReport",
    "CubicReport",
    "MonteCarloResult",
    "ScanError",
    "ScanReport",
    "UnicyclicReport",
    "build_Ln",
    "catalogue",
    "cubic_extremes",
    "monte_carlo_pn",
    "random_connected_graph",
    "scan_stream",
    "triangle_free_probe",
    "verify_bipartite_max",
    "verify_general_bounds",
    "verify_trees",
    "verify_unicyclic_extremes",
]


class ScanError(ValueError):
    pass


def catalogue(kind: str, n: int) -> list[str]:
    """Lines of a bundled catalogue: ``kind`` is connected, bipartite or cubic."""
    path = resources.files("subpath") / "data" / f"{kind}_n{n}.g6"
    if not path.is_file():
        raise FileNotFoundError(f"no bundled {kind} catalogue for n={n}")
    return path.read_text().split()


# -- scanning ------------------------------------------------------------------


def _is_cubic(g: Graph) -> bool:
    return all(len(r) == 3 for r in g.adjacency)


PREDICATES: dict[str, Callable[[Graph], bool]] = {
    "none": lambda g: True,
    "connected": is_connected,
    "bipartite": lambda g: stats(g).bipartition is not None,
    "triangle-free": lambda g: count_triangles(g) == 0,
    "cubic": _is_cubic,
}


@dataclass(frozen=True)
class ScanReport:
    objective: str
    entries: tuple[tuple[str, int], ...]
    extremal_value: int
    extremal_graphs: tuple[str, ...]
    graphs_scanned: int

    def to_json(self) -> dict:
        return {
            "objective": self.objective,
            "extremal_value": str(self.extremal_value),
            "extremal_graphs": list(self.extremal_graphs),
            "graphs_scanned": self.graphs_scanned,
            "entries": [{"graph6": s, "pn": str(v)} for s, v in self.entries],
        }


def decode_stream(lines: Iterable[str]) -> list[tuple[str, Graph]]:
    out = []
    for lineno, raw in enumerate(lines, start=1):
        text = raw.strip()
        if not text:
            continue
        try:
            out.append((text, parse_graph6(text)))
        except GraphError as exc:
            raise ScanError(f"line {lineno}: {exc}") from exc
    return out


def _evaluate(graphs: list[Graph], threads: int | None) -> list[int]:
    # Single-threaded kernels release the GIL, so a thread pool scales.
    if threads == 1 or len(graphs) < 2:
        return [count_subpaths(g, threads=1) for g in graphs]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(lambda g: count_subpaths(g, threads=1), graphs))


def scan_stream(
    lines: Iterable[str],
    objective: str = "max",
    filter: str | None = None,
    *,
    top: int | None = None,
    threads: int | None = None,
) -> ScanReport:
    """Evaluate every graph passing ``filter`` and keep all extremal ones.

    ``entries`` lists the scanned graphs in input order, or with ``top`` the
    ``top`` best ones (stable, so ties keep input order).
    """
    if objective not in ("min", "max"):
        raise ValueError(f"objective must be min or max, got {objective!r}")
    pred = PREDICATES[filter or "none"]
    decoded = [(s, g) for s, g in decode_stream(lines) if pred(g)]
    if not decoded:
        raise ScanError("no graphs left to scan after filtering")
    values = _evaluate([g for _, g in decoded], threads)
    pick = min if objective == "min" else max
    best = pick(values)
    entries = [(s, v) for (s, _), v in zip(decoded, values)]
    if top is not None:
        entries = sorted(entries, key=lambda e: e[1], reverse=objective == "max")[:top]
    return ScanReport(
        objective=objective,
        entries=tuple(entries),
        extremal_value=best,
        extremal_graphs=tuple(s for (s, _), v in zip(decoded, values) if v == best),
        graphs_scanned=len(decoded),
    )


# -- exhaustive checks ---------------------------------------------------------


@dataclass(frozen=True)
class BipartiteMaxReport:
    n: int
    graphs: int
    maximizers: tuple[str, ...]
    max_value: int
    runner_up: int | None
    expected_value: int
    holds: bool

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "graphs": self.graphs,
            "maximizers": list(self.maximizers),
            "max_value": str(self.max_value),
            "runner_up": None if self.runner_up is None else str(self.runner_up),
            "expected_value": str(self.expected_value),
            "holds": self.holds,
        }


def _is_balanced_biclique(g: Graph) -> bool:
    # A bipartite graph with floor(n^2/4) edges is the balanced complete bipartite graph.
    return stats(g).bipartition is not None and g.m == (g.n // 2) * ((g.n + 1) // 2)


def verify_bipartite_max(n: int, lines: Iterable[str], threads: int | None = None) -> BipartiteMaxReport:
    """Check that the balanced complete bipartite graph is the unique maximiser
    among the bipartite graphs in ``lines`` (one per isomorphism class)."""
    if n < 2:
        raise ValueError("needs n >= 2")
    decoded = decode_stream(lines)
    for s, g in decoded:
        if g.n != n or stats(g).bipartition is None:
            raise ScanError(f"{s} is not a bipartite graph on {n} vertices")
    values = _evaluate([g for _, g in decoded], threads)
    best = max(values)
    winners = [i for i, v in enumerate(values) if v == best]
    rest = [v for v in values if v != best]
    expected = pn_complete_bipartite((n + 1) // 2, n // 2)
    holds = (
        len(winners) == 1
        and _is_balanced_biclique(decoded[winners[0]][1])
        and best == expected
    )
    return BipartiteMaxReport(
        n=n,
        graphs=len(decoded),
        maximizers=tuple(decoded[i][0] for i in winners),
        max_value=best,
        runner_up=max(rest) if rest else None,
        expected_value=expected,
        holds=holds,
    )


@dataclass(frozen=True)
class TreeReport:
    n: int
    trees: int
    mismatches: int
    expected_value: int

    @property
    def holds(self) -> bool:
        return self.mismatches == 0


def verify_trees(n: int) -> TreeReport:
    """Enumerate pn for every labelled tree on ``n`` vertices (Pruefer codes)."""
    if n < 1:
        raise ValueError("needs n >= 1")
    expected = pn_tree(n)
    if n < 3:
        from .prufer import trees

        got = [count_subpaths(t) for t in trees(n)]
        return TreeReport(n, len(got), sum(v != expected for v in got), expected)
    count, bad = K.tree_sweep(n, expected)
    return TreeReport(n, int(count), int(bad), expected)


@dataclass(frozen=True)
class UnicyclicReport:
    n: int
    mode: str
    graphs: int
    formula_mismatches: int
    min_value: int
    max_value: int
    min_only_triangle: bool
    max_only_cycle: bool
    triangle_values: tuple[int, int]
    cycle_values: tuple[int, int]
    cycles_seen: int
    expected_min: int

    @property
    def holds(self) -> bool:
        n = self.n
        return (
            self.formula_mismatches == 0
            and self.max_value == n * n
            and self.max_only_cycle
            and self.cycles_seen > 0
            and self.cycle_values == (n * n, n * n)
            and self.min_only_triangle
            and self.triangle_values == (self.min_value, self.min_value)
            and self.min_value == self.expected_min
        )

    def to_json(self) -> dict:
        out = {k: getattr(self, k) for k in self.__dataclass_fields__}
        for key in ("min_value", "max_value", "expected_min"):
            out[key] = str(out[key])
        out["triangle_values"] = [str(v) for v in self.triangle_values]
        out["cycle_values"] = [str(v) for v in self.cycle_values]
        out["holds"] = self.holds
        return out


def verify_unicyclic_extremes(n: int, mode: str = "auto") -> UnicyclicReport:
    """Sweep unicyclic graphs on ``n`` vertices, each a Pruefer tree plus one edge.

    ``mode="all"`` adds every non-edge to every labelled tree; ``"rooted"`` only
    closes the edge {0, 1}, which still reaches every isomorphism class at a
    fraction of the cost. ``"auto"`` uses ``all`` up to n = 8.

    Checks that the enumerated pn matches the unicyclic formula, that n^2 is the
    maximum and is attained exactly by C_n, and that the minimum is attained
    exactly when the cycle is a triangle with (at least) two degree-2 vertices.
    """
    if n < 3:
        raise ValueError("unicyclic graphs need n >= 3")
    if n > 12:
        raise ValueError("sweep is limited to n <= 12")
    if mode == "auto":
        mode = "all" if n <= 8 else "rooted"
    if mode not in ("all", "rooted"):
        raise ValueError(f"unknown mode {mode!r}")
    out = K.unicyclic_sweep(n, mode == "rooted")
    return UnicyclicReport(
        n=n,
        mode=mode,
        graphs=int(out[0]),
        formula_mismatches=int(out[1]),
        min_value=int(out[2]),
        max_value=int(out[3]),
        min_only_triangle=bool(out[4]),
        max_only_cycle=bool(out[5]),
        triangle_values=(int(out[6]), int(out[7])),
        cycle_values=(int(out[8]), int(out[9])),
        cycles_seen=int(out[10]),
        expected_min=pn_unicyclic([n - 2, 1, 1]),
    )


@dataclass(frozen=True)
class BoundsReport:
    graphs: int
    violations: tuple[str, ...] = field(default=())

    @property
    def holds(self) -> bool:
        return not self.violations


def verify_general_bounds(lines: Iterable[str], threads: int | None = None) -> BoundsReport:
    """pn(tree) <= pn(G) <= pn(K_n) on connected graphs, with equality exactly
    for trees and for K_n."""
    decoded = [(s, g) for s, g in decode_stream(lines) if is_connected(g) and g.n >= 1]
    values = _evaluate([g for _, g in decoded], threads)
    bad = []
    for (s, g), v in zip(decoded, values):
        lo, hi = pn_tree(g.n), pn_complete(g.n)
        tree, full = g.m == g.n - 1, g.m == g.n * (g.n - 1) // 2
        if not lo <= v <= hi or (v == lo) != tree or (v == hi) != full:
            bad.append(s)
    return BoundsReport(len(decoded), tuple(bad))


@dataclass(frozen=True)
class TriangleFreeReport:
    n: int
    graphs: int
    maximizers: tuple[str, ...]
    max_value: int
    biclique_value: int
    holds: bool


def triangle_free_probe(n: int, lines: Iterable[str], threads: int | None = None) -> TriangleFreeReport:
    """Maximise pn over the triangle-free graphs in ``lines`` and compare with
    the balanced complete bipartite graph. A mismatch is a finding, reported
    through ``holds``; nothing is raised."""
    rep = scan_stream(lines, "max", "triangle-free", threads=threads)
    winners = [parse_graph6(s) for s in rep.extremal_graphs]
    expected = pn_complete_bipartite((n + 1) // 2, n // 2) if n >= 2 else 1
    holds = (
        len(winners) == 1
        and winners[0].n == n
        and (n < 2 or _is_balanced_biclique(winners[0]))
        and rep.extremal_value == expected
    )
    return TriangleFreeReport(n, rep.graphs_scanned, rep.extremal_graphs, rep.extremal_value, expected, holds)


def random_connected_graph(n: int, p: float, rng) -> Graph:
    """Uniform random labelled spanning tree plus each other pair with probability ``p``."""
    t = random_tree(n, rng)
    edges = set(t.edges())
    for e in combinations(range(n), 2):
        if e not in edges and rng.random() < p:
            edges.add(e)
    return Graph.from_edges(n, sorted(edges))


# -- Monte Carlo ---------------------------------------------------------------


def _sig_digits(x: Fraction | Decimal, digits: int = 12) -> str:
    with localcontext() as ctx:
        ctx.prec = digits
        d = +(Decimal(x.numerator) / Decimal(x.denominator)) if isinstance(x, Fraction) else +x
        return format(d, "f") if d.adjusted() < digits else str(d)


@dataclass(frozen=True)
class MonteCarloResult:
    n: int
    p: Fraction
    trials: int
    seed: int
    sample_mean: str
    sample_stddev: str
    exact_expectation: Fraction
    # Exact sample moments, kept for the statistical check.
    mean_exact: Fraction = field(repr=False, default=Fraction(0))
    variance_exact: Fraction = field(repr=False, default=Fraction(0))

    @property
    def standard_error(self) -> float:
        return math.sqrt(self.variance_exact / self.trials)

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "p": f"{self.p.numerator}/{self.p.denominator}",
            "trials": self.trials,
            "seed": self.seed,
            "generator": "numpy PCG64, SeedSequence(seed, spawn_key=(trial,))",
            "sample_mean": self.sample_mean,
            "sample_stddev": self.sample_stddev,
            "exact_expectation": f"{self.exact_expectation.numerator}/{self.exact_expectation.denominator}",
            "exact_expectation_decimal": _sig_digits(self.exact_expectation),
        }


def _trial_draws(seed: int, trial: int, pairs: int, den: int) -> np.ndarray:
    rng = np.random.Generator(np.random.PCG64(np.random.SeedSequence(seed, spawn_key=(trial,))))
    return rng.integers(0, den, size=pairs, dtype=np.int64)


def monte_carlo_pn(n: int, p, trials: int, seed: int) -> MonteCarloResult:
    """Sample pn over G(n, p).

    Trial ``t`` draws from PCG64 seeded with ``SeedSequence(seed, spawn_key=(t,))``:
    one integer in ``[0, den)`` per vertex pair in lexicographic order, the edge
    being present iff the draw is below ``num`` (for ``p = num/den``). The
    inclusion test is therefore exact and results depend only on
    ``(n, p, trials, seed)``.
    """
    q = parse_rational(p)
    if n < 1:
        raise ValueError("n must be >= 1")
    if not 0 <= q <= 1:
        raise ValueError(f"edge probability must lie in [0, 1], got {q}")
    if trials < 1:
        raise ValueError("trials must be >= 1")
    if not 0 <= seed < 1 << 64:
        raise ValueError("seed must be a 64-bit unsigned integer")
    if n > 20:
        raise ValueError("Monte Carlo sampling is limited to n <= 20")
    if q.denominator >= 1 << 62:
        raise ValueError("denominator of p too large for exact sampling")
    pairs = n * (n - 1) // 2
    draws = np.empty((trials, pairs), np.int64)
    for t in range(trials):
        draws[t] = _trial_draws(seed, t, pairs, q.denominator)
    values = K.gnp_pn_batch(n, draws, q.numerator)
    s1 = sum(int(v) for v in values)
    s2 = sum(int(v) * int(v) for v in values)
    mean = Fraction(s1, trials)
    var = Fraction(s2 * trials - s1 * s1, trials * (trials - 1)) if trials > 1 else Fraction(0)
    with localcontext() as ctx:
        ctx.prec = 40
        sd = (Decimal(var.numerator) / Decimal(var.denominator)).sqrt()
    return MonteCarloResult(
        n=n,
        p=q,
        trials=trials,
        seed=seed,
        sample_mean=_sig_digits(mean),
        sample_stddev=_sig_digits(sd),
        exact_expectation=expected_pn(n, q),
        mean_exact=mean,
        variance_exact=var,
    )


# -- cubic graphs ----------------------------------------------------------------


def _k4_minus_edge(base: int) -> tuple[list[tuple[int, int]], int, int]:
    a, b, c, d = base, base + 1, base + 2, base + 3
    return [(a, b), (a, c), (a, d), (b, c), (b, d)], c, d


def _cap5(base: int) -> tuple[list[tuple[int, int]], int]:
    # K4 on w, x, y, z with xy subdivided by s; s carries the bridge.
    w, x, y, z, s = range(base, base + 5)
    return [(w, x), (w, y), (w, z), (x, z), (y, z), (x, s), (s, y)], s


def _cap7(base: int) -> tuple[list[tuple[int, int]], int]:
    # K4 - e whose two degree-2 vertices meet a triangle; the triangle's free
    # vertex carries the bridge.
    edges, c, d = _k4_minus_edge(base)
    x, y, z = base + 4, base + 5, base + 6
    return edges + [(x, y), (y, z), (x, z), (c, x), (d, y)], z


def build_Ln(n: int) -> Graph:
    """Cubic graph made of a path of K4 - e blocks between two pendant blocks.

    For ``n = 4q + 2`` there are ``(n - 10)/4`` inner blocks and two 5-vertex
    caps; for ``n = 4q`` there are ``(n - 12)/4`` inner blocks, one 5-vertex and
    one 7-vertex cap. Consecutive blocks are joined by single bridges.
    """
    if n < 10 or n % 2:
        raise GraphError(f"L_n needs an even n >= 10, got {n}")
    edges, left = _cap5(0)
    base = 5
    copies = (n - 10) // 4 if n % 4 == 2 else (n - 12) // 4
    for _ in range(copies):
        block, c, d = _k4_minus_edge(base)
        edges += block + [(left, c)]
        left = d
        base += 4
    cap, port = _cap5(base) if n % 4 == 2 else _cap7(base)
    edges += cap + [(left, port)]
    g = Graph.from_edges(base + (5 if n % 4 == 2 else 7), edges)
    if g.n != n or not _is_cubic(g) or not is_connected(g):
        raise AssertionError(f"L_{n} construction is not a connected cubic graph on {n} vertices")
    return g


@dataclass(frozen=True)
class CubicReport:
    n: int
    minimum: ScanReport
    maximum: ScanReport
    ln_value: int | None
    ln_is_unique_min: bool | None
    max_signature: tuple[tuple[int, int | None], ...]
    petersen_is_max: bool | None

    def to_json(self) -> dict:
        def brief(r: ScanReport) -> dict:
            d = r.to_json()
            d.pop("entries")
            return d

        return {
            "n": self.n,
            "min": brief(self.minimum),
            "max": brief(self.maximum),
            "ln_value": None if self.ln_value is None else str(self.ln_value),
            "ln_is_unique_min": self.ln_is_unique_min,
            "max_signature": [{"degree": d, "girth": gi} for d, gi in self.max_signature],
            "petersen_is_max": self.petersen_is_max,
        }


def cubic_extremes(lines: Iterable[str], n: int, threads: int | None = None) -> CubicReport:
    """Minimum and maximum pn over connected cubic graphs on ``n`` vertices.

    ``lines`` must list every connected cubic graph on ``n`` vertices once up to
    isomorphism. L_n is confirmed as the unique minimiser when it alone attains
    the minimum value (the catalogue graph isomorphic to L_n must then be that
    minimiser).
    """
    lines = list(lines)
    for s, g in decode_stream(lines):
        if g.n != n or not _is_cubic(g) or not is_connected(g):
            raise ScanError(f"{s} is not a connected cubic graph on {n} vertices")
    lo = scan_stream(lines, "min", threads=threads)
    hi = scan_stream(lines, "max", threads=threads)
    ln_value = ln_unique = None
    if n >= 10 and n % 2 == 0:
        ln_value = count_subpaths(build_Ln(n))
        ln_unique = len(lo.extremal_graphs) == 1 and lo.extremal_value == ln_value
    sig = []
    for s in hi.extremal_graphs:
        g = parse_graph6(s)
        sig.append((max(g.degrees()), girth(g)))
    petersen = None
    if n == 10:
        petersen = len(hi.extremal_graphs) == 1 and sig[0] == (3, 5)
    return CubicReport(n, lo, hi, ln_value, ln_unique, tuple(sig), petersen)


def encode_all(graphs: Iterable[Graph]) -> list[str]:
    return [encode_graph6(g) for g in graphs]
