"""Cycle chains: sequences of cycles where consecutive cycles share one edge.

A chain with ``k`` cycles is described by ``S = (a_1..a_k; b_1..b_k)`` with
``a_1 = b_1`` and ``a_k = b_k``. The shared edges are the rungs
``u_i v_i`` (``1 <= i <= k-1``). The first and last cycles close a rung with a
path of length ``a_1 + 1`` (resp. ``a_k + 1``). An interior cycle ``i`` joins
``u_{i-1}`` to ``u_i`` by a path of length ``a_i`` along the top, and
``v_{i-1}`` to ``v_i`` by a path of length ``b_i`` along the bottom.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from math import comb
from typing import Iterator

from .graph import Graph

__all__ = [
    "ChainClass",
    "ChainError",
    "ChainSpec",
    "CycleClass",
    "FamilyReport",
    "chain_graph",
    "chain_specs_up_to",
    "classify_chain",
    "enumerate_family",
    "extremal_in_family",
    "helicene_spec",
    "ladder_spec",
    "linear_hexagonal_spec",
    "make_chain_spec",
    "parse_chain_spec",
    "pn_chain",
]


class ChainError(ValueError):
    pass


@dataclass(frozen=True)
class ChainSpec:
    a: tuple[int, ...]
    b: tuple[int, ...]

    @property
    def k(self) -> int:
        return len(self.a)

    @property
    def cycle_lengths(self) -> tuple[int, ...]:
        k = self.k
        return tuple(
            self.a[i] + 2 if i in (0, k - 1) else self.a[i] + self.b[i] + 2 for i in range(k)
        )

    @property
    def n(self) -> int:
        return sum(self.a[i] + self.b[i + 1] for i in range(self.k - 1)) + 2

    def swapped(self) -> ChainSpec:
        return ChainSpec(self.b, self.a)

    def reversed(self) -> ChainSpec:
        return ChainSpec(self.a[::-1], self.b[::-1])

    def __str__(self) -> str:
        return ",".join(map(str, self.a)) + ";" + ",".join(map(str, self.b))


def make_chain_spec(a, b) -> ChainSpec:
    a, b = tuple(int(x) for x in a), tuple(int(x) for x in b)
    if len(a) != len(b):
        raise ChainError(f"a and b differ in length ({len(a)} vs {len(b)})")
    if len(a) < 2:
        raise ChainError(f"a chain needs k >= 2 cycles, got {len(a)}")
    if any(x < 1 for x in a + b):
        raise ChainError(f"entries must be positive: {a};{b}")
    if a[0] != b[0]:
        raise ChainError(f"boundary mismatch a_1={a[0]} != b_1={b[0]}")
    if a[-1] != b[-1]:
        raise ChainError(f"boundary mismatch a_k={a[-1]} != b_k={b[-1]}")
    return ChainSpec(a, b)


def parse_chain_spec(text: str) -> ChainSpec:
    """Parse ``"a1,...,ak;b1,...,bk"``."""
    try:
        left, right = text.split(";")
        a = [int(x) for x in left.split(",")]
        b = [int(x) for x in right.split(",")]
    except ValueError as exc:
        raise ChainError(f"malformed chain spec {text!r}: expected 'a1,..,ak;b1,..,bk'") from exc
    return make_chain_spec(a, b)


def chain_graph(s: ChainSpec) -> Graph:
    """Build G(S).

    Rung endpoints come first (``u_i = 2(i-1)``, ``v_i = 2(i-1) + 1``), then path
    interiors left to right: the first cycle, then top and bottom of each interior
    cycle, then the last cycle.
    """
    k = s.k
    u = [2 * i for i in range(k - 1)]
    v = [2 * i + 1 for i in range(k - 1)]
    edges = [(u[i], v[i]) for i in range(k - 1)]
    next_id = 2 * (k - 1)

    def join(x: int, y: int, length: int) -> None:
        nonlocal next_id
        prev = x
        for _ in range(length - 1):
            edges.append((prev, next_id))
            prev = next_id
            next_id += 1
        edges.append((prev, y))

    join(u[0], v[0], s.a[0] + 1)
    for i in range(1, k - 1):
        join(u[i - 1], u[i], s.a[i])
        join(v[i - 1], v[i], s.b[i])
    join(u[k - 2], v[k - 2], s.a[k - 1] + 1)
    if next_id != s.n:
        raise AssertionError(f"built {next_id} vertices, expected {s.n}")
    return Graph.from_edges(next_id, edges)


def pn_chain(s: ChainSpec) -> int:
    """Closed-form subpath number of G(S)."""
    k, a, b = s.k, s.a, s.b
    # 1-based access keeps the index arithmetic readable.
    A = (None, *a)
    B = (None, *b)

    def weight(i: int, j: int) -> int:
        return 2 ** (j - i - 1) * (i + 1) * (k - j + 2)

    cross = sum(
        (A[i] * B[j] + B[i] * A[j]) * weight(i, j)
        for i in range(1, k + 1)
        for j in range(i + 1, k + 1)
    ) - A[1] * A[k] * 2**k
    same = sum(
        (A[i] * A[j] + B[i] * B[j]) * weight(i, j)
        for i in range(2, k)
        for j in range(i + 1, k)
    )
    within = sum(
        (comb(A[i] + 1, 2) + comb(B[i] + 1, 2)) * (1 + i * (k - i + 1)) for i in range(2, k)
    )
    ends = (comb(A[1] + 2, 2) + comb(A[k] + 2, 2)) * (k + 1)
    across = sum((A[i] + 1) * (B[i] + 1) * (k + 1) for i in range(2, k))
    return cross + same + within + ends + across - (k - 1) * (k + 1) + s.n


# -- classification ------------------------------------------------------------


@dataclass(frozen=True)
class CycleClass:
    index: int  # 1-based cycle position
    linear: bool
    almost_linear: bool
    kink: bool

    @property
    def tags(self) -> tuple[str, ...]:
        out = tuple(
            t for t, on in (("linear", self.linear), ("almost-linear", self.almost_linear),
                            ("kink", self.kink)) if on
        )
        return out or ("other",)


@dataclass(frozen=True)
class ChainClass:
    cycles: tuple[CycleClass, ...]  # interior cycles only
    linear: bool
    almost_linear: bool
    kink_chain: bool
    degenerate: bool

    @property
    def tags(self) -> tuple[str, ...]:
        if self.degenerate:
            return ("degenerate",)
        out = tuple(
            t for t, on in (("linear", self.linear), ("almost-linear", self.almost_linear),
                            ("kink-chain", self.kink_chain)) if on
        )
        return out or ("other",)


def classify_chain(s: ChainSpec) -> ChainClass:
    cycles = tuple(
        CycleClass(
            index=i + 1,
            linear=s.a[i] == s.b[i],
            almost_linear=abs(s.a[i] - s.b[i]) == 1,
            kink=s.a[i] == 1 or s.b[i] == 1,
        )
        for i in range(1, s.k - 1)
    )
    linear = all(c.linear for c in cycles)
    return ChainClass(
        cycles=cycles,
        linear=linear,
        almost_linear=not linear and all(c.linear or c.almost_linear for c in cycles),
        kink_chain=all(c.kink for c in cycles),
        degenerate=s.k == 2,
    )


# -- families --------------------------------------------------------------------


def _check_lengths(g: tuple[int, ...]) -> None:
    if len(g) < 2:
        raise ChainError(f"a chain needs k >= 2 cycles, got {len(g)}")
    for i, x in enumerate(g):
        interior = 0 < i < len(g) - 1
        if interior and x < 4:
            raise ChainError(f"interior cycle {i + 1} of length {x} admits no split (needs >= 4)")
        if x < 3:
            raise ChainError(f"cycle {i + 1} of length {x} is too short")


def _orbit(s: ChainSpec, palindrome: bool) -> list[ChainSpec]:
    images = [s, s.swapped()]
    if palindrome:
        images += [s.reversed(), s.reversed().swapped()]
    return images


def enumerate_family(g, dedupe: bool = False) -> Iterator[ChainSpec]:
    """All chain specs with cycle lengths ``g``, in lexicographic order of the
    interior splits.

    With ``dedupe`` only the lexicographically smallest spec of each orbit under
    the top/bottom swap (and under reversal when ``g`` is a palindrome) is kept.
    """
    g = tuple(int(x) for x in g)
    _check_lengths(g)
    first, last = g[0] - 2, g[-1] - 2
    palindrome = g == g[::-1]
    for mid in product(*(range(1, x - 2) for x in g[1:-1])):
        a = (first, *mid, last)
        b = (first, *(x - 2 - ai for x, ai in zip(g[1:-1], mid)), last)
        s = ChainSpec(a, b)
        if dedupe:
            key = (s.a, s.b)
            if any((t.a, t.b) < key for t in _orbit(s, palindrome)):
                continue
        yield s


@dataclass(frozen=True)
class FamilyReport:
    g: tuple[int, ...]
    size: int
    min_value: int
    max_value: int
    min_specs: tuple[ChainSpec, ...]
    max_specs: tuple[ChainSpec, ...]
    max_all_kink: bool
    min_all_linear: bool

    @property
    def holds(self) -> bool:
        return self.max_all_kink and self.min_all_linear


def extremal_in_family(g, *, check: bool = True) -> FamilyReport:
    """Evaluate every chain with cycle lengths ``g`` and collect all minimisers
    and maximisers.

    With ``check`` an AssertionError is raised unless every maximiser is a kink
    chain and every minimiser is linear or almost linear.
    """
    g = tuple(int(x) for x in g)
    if len(g) < 3:
        raise ChainError(f"extremal families need k >= 3 cycles, got {len(g)}")
    if any(x < 4 for x in g):
        raise ChainError(f"extremal families need every cycle length >= 4: {g}")
    values = [(s, pn_chain(s)) for s in enumerate_family(g)]
    lo = min(v for _, v in values)
    hi = max(v for _, v in values)
    mins = tuple(s for s, v in values if v == lo)
    maxs = tuple(s for s, v in values if v == hi)
    report = FamilyReport(
        g=g,
        size=len(values),
        min_value=lo,
        max_value=hi,
        min_specs=mins,
        max_specs=maxs,
        max_all_kink=all(classify_chain(s).kink_chain for s in maxs),
        min_all_linear=all(
            classify_chain(s).linear or classify_chain(s).almost_linear for s in mins
        ),
    )
    if check and not report.holds:
        raise AssertionError(f"extremal chain characterisation fails for g={g}: {report}")
    return report


def linear_hexagonal_spec(k: int) -> ChainSpec:
    return make_chain_spec([4, *[2] * (k - 2), 4], [4, *[2] * (k - 2), 4])


def helicene_spec(k: int) -> ChainSpec:
    return make_chain_spec([4, *[1] * (k - 2), 4], [4, *[3] * (k - 2), 4])


def ladder_spec(k: int) -> ChainSpec:
    return make_chain_spec([2, *[1] * (k - 2), 2], [2, *[1] * (k - 2), 2])


def chain_specs_up_to(max_n: int, max_k: int) -> Iterator[ChainSpec]:
    """Every chain spec with ``2 <= k <= max_k`` cycles and at most ``max_n`` vertices."""
    budget = max_n - 2

    def fill(slots: int, room: int):
        if slots == 0:
            yield ()
            return
        for x in range(1, room - slots + 2):
            for rest in fill(slots - 1, room - x):
                yield (x, *rest)

    for k in range(2, max_k + 1):
        # Free entries: a_1, then (a_i, b_i) per interior cycle, then a_k.
        slots = 2 + 2 * (k - 2)
        if slots > budget:
            break
        for vals in fill(slots, budget):
            first, last = vals[0], vals[-1]
            mid = vals[1:-1]
            a = (first, *mid[0::2], last)
            b = (first, *mid[1::2], last)
            yield ChainSpec(a, b)
