"""Verification suites: each closed form or extremal statement checked against
exhaustive enumeration, one :class:`Case` per checked instance."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Callable

from . import chains as ch
from . import explore as ex
from . import formulas as fm
from .count import count_subpaths
from .graph import complete_bipartite, complete_graph, cycle_graph


@dataclass(frozen=True)
class Case:
    name: str
    passed: bool
    detail: str = ""

    def to_json(self) -> dict:
        return {"case": self.name, "passed": self.passed, "detail": self.detail}


def _eq(name: str, got: int, want: int) -> Case:
    return Case(name, got == want, f"enumerated {got}, formula {want}")


def suite_trees(max_size: int) -> list[Case]:
    cases = []
    for n in range(1, max_size + 1):
        r = ex.verify_trees(n)
        cases.append(Case(f"trees n={n}", r.holds, f"{r.trees} labelled trees, {r.mismatches} mismatches"))
    return cases


def suite_cycles(max_size: int) -> list[Case]:
    return [_eq(f"C_{n}", count_subpaths(cycle_graph(n)), fm.pn_cycle(n)) for n in range(3, max_size + 1)]


def suite_unicyclic(max_size: int) -> list[Case]:
    cases = []
    for n in range(3, max_size + 1):
        r = ex.verify_unicyclic_extremes(n)
        cases.append(Case(
            f"unicyclic n={n}",
            r.holds,
            f"{r.graphs} graphs ({r.mode}), {r.formula_mismatches} mismatches, "
            f"min {r.min_value}, max {r.max_value}",
        ))
    return cases


def suite_complete(max_size: int) -> list[Case]:
    return [_eq(f"K_{n}", count_subpaths(complete_graph(n)), fm.pn_complete(n)) for n in range(1, max_size + 1)]


def suite_biclique(max_size: int) -> list[Case]:
    return [
        _eq(f"K_{a},{b}", count_subpaths(complete_bipartite(a, b)), fm.pn_complete_bipartite(a, b))
        for a in range(1, max_size)
        for b in range(a, max_size - a + 1)
    ]


def suite_chains(max_size: int, max_k: int = 5) -> list[Case]:
    bad = []
    total = 0
    for s in ch.chain_specs_up_to(max_size, max_k):
        total += 1
        if count_subpaths(ch.chain_graph(s)) != ch.pn_chain(s):
            bad.append(str(s))
    cases = [Case(
        f"chain formula, n <= {max_size}, k <= {max_k}",
        not bad,
        f"{total} specs, mismatches: {bad[:10]}",
    )]
    for k in (3, 4):
        for g in product(range(4, 8), repeat=k):
            r = ch.extremal_in_family(g, check=False)
            cases.append(Case(
                f"extremal family g={','.join(map(str, g))}",
                r.holds,
                f"min {r.min_value} x{len(r.min_specs)}, max {r.max_value} x{len(r.max_specs)}",
            ))
    return cases


def suite_ladder(max_size: int) -> list[Case]:
    cases = []
    for k in range(2, max_size + 1):
        s = ch.ladder_spec(k)
        cases.append(_eq(f"ladder k={k}", count_subpaths(ch.chain_graph(s)), fm.pn_ladder(k)))
    return cases


def suite_hex(max_size: int) -> list[Case]:
    cases = []
    for k in range(2, max_size + 1):
        lo, hi = fm.hexagonal_bounds(k)
        family = list(ch.enumerate_family([6] * k))
        values = {s: count_subpaths(ch.chain_graph(s)) for s in family}
        mismatched = [str(s) for s in family if values[s] != ch.pn_chain(s)]
        vmin, vmax = min(values.values()), max(values.values())
        argmin = [s for s in family if values[s] == vmin]
        argmax = [s for s in family if values[s] == vmax]
        ok = (
            not mismatched
            and (vmin, vmax) == (lo, hi)
            and argmin == [ch.linear_hexagonal_spec(k)]
            and all(ch.classify_chain(s).kink_chain for s in argmax)
        )
        cases.append(Case(
            f"hexagonal k={k}",
            ok,
            f"{len(family)} chains, enumerated range [{vmin}, {vmax}], bounds [{lo}, {hi}]",
        ))
    return cases


def suite_bipartite_max(max_size: int) -> list[Case]:
    cases = []
    for n in range(2, min(max_size, 8) + 1):
        r = ex.verify_bipartite_max(n, ex.catalogue("bipartite", n))
        cases.append(Case(f"bipartite max n={n}", r.holds, f"max {r.max_value}, runner-up {r.runner_up}"))
    return cases


def suite_cubic(max_size: int) -> list[Case]:
    cases = []
    for n in (8, 10, 12, 14):
        if n > max_size:
            break
        r = ex.cubic_extremes(ex.catalogue("cubic", n), n)
        if r.ln_is_unique_min is not None:
            cases.append(Case(
                f"cubic min n={n} is L_n",
                r.ln_is_unique_min,
                f"min {r.minimum.extremal_value} at {list(r.minimum.extremal_graphs)}, L_n {r.ln_value}",
            ))
        if r.petersen_is_max is not None:
            cases.append(Case(
                "cubic max n=10 is Petersen",
                r.petersen_is_max,
                f"max {r.maximum.extremal_value}, signature {r.max_signature}",
            ))
        if n == 8:
            cases.append(Case(
                "cubic max n=8 recorded",
                len(r.maximum.extremal_graphs) >= 1,
                f"max {r.maximum.extremal_value} at {list(r.maximum.extremal_graphs)}",
            ))
    return cases


def suite_triangle_free(max_size: int) -> list[Case]:
    cases = []
    for n in range(2, min(max_size, 8) + 1):
        r = ex.triangle_free_probe(n, ex.catalogue("connected", n))
        cases.append(Case(f"triangle-free max n={n}", r.holds, f"max {r.max_value} at {list(r.maximizers)}"))
    return cases


def suite_bounds(max_size: int) -> list[Case]:
    cases = []
    for n in range(1, min(max_size, 8) + 1):
        r = ex.verify_general_bounds(ex.catalogue("connected", n))
        cases.append(Case(f"general bounds n={n}", r.holds, f"{r.graphs} graphs, violations {list(r.violations)[:5]}"))
    return cases


SUITES: dict[str, tuple[Callable[[int], list[Case]], int]] = {
    "trees": (suite_trees, 9),
    "cycles": (suite_cycles, 12),
    "unicyclic": (suite_unicyclic, 9),
    "complete": (suite_complete, 8),
    "biclique": (suite_biclique, 10),
    "chains": (suite_chains, 18),
    "ladder": (suite_ladder, 5),
    "hex": (suite_hex, 4),
    "bipartite-max": (suite_bipartite_max, 8),
    "cubic": (suite_cubic, 12),
    "triangle-free": (suite_triangle_free, 8),
    "bounds": (suite_bounds, 8),
}


def run_suite(name: str, max_size: int | None = None) -> list[Case]:
    fn, default = SUITES[name]
    return fn(default if max_size is None else max_size)
