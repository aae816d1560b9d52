"""Exact path counting by depth-first extension of simple paths.

Every simple path of length >= 1 is reached twice, once from each endpoint,
so ordered counts are halved and the ``n`` trivial paths added back.

The kernels are compiled with numba. Work is split by start vertex: each
start owns one row of an ``int64`` profile matrix, and rows are summed as
Python integers afterwards. A row entry grows by one per extension step, so
it cannot overflow in any run that finishes; the final totals are exact
arbitrary-precision integers regardless of instance size.
"""

from __future__ import annotations

import os
import threading
from dataclasses import dataclass
from math import comb

import numba
import numpy as np

from . import _kernels as K
from .graph import Graph, GraphError, stats

__all__ = [
    "BudgetExceeded",
    "LengthProfile",
    "count_paths_between",
    "count_subpaths",
    "length_profile",
    "profile_closed_small",
    "set_threads",
]

_parallel_lock = threading.Lock()


class BudgetExceeded(RuntimeError):
    """Raised when an enumeration needs more extension steps than allowed."""

    def __init__(self, budget: int, steps: int):
        super().__init__(f"node budget {budget} exhausted ({steps} extension steps needed so far)")
        self.budget = budget
        self.steps = steps


def set_threads(threads: int | None = None) -> int:
    """Cap kernel parallelism; ``None`` reads SUBPATH_THREADS or uses every core."""
    if threads is None:
        env = os.environ.get("SUBPATH_THREADS")
        threads = int(env) if env else numba.config.NUMBA_NUM_THREADS
    threads = max(1, min(int(threads), numba.config.NUMBA_NUM_THREADS))
    numba.set_num_threads(threads)
    return threads


# -- public API --------------------------------------------------------------


def bitmasks(g: Graph) -> np.ndarray:
    """Neighbour bitmask per vertex; only meaningful for n <= 64."""
    adj = np.zeros(g.n, np.uint64)
    for v, row in enumerate(g.adjacency):
        adj[v] = sum(1 << w for w in row)
    return adj


def csr(g: Graph) -> tuple[np.ndarray, np.ndarray]:
    indptr = np.zeros(g.n + 1, np.int64)
    np.cumsum([len(r) for r in g.adjacency], out=indptr[1:])
    indices = np.fromiter((v for r in g.adjacency for v in r), np.int64, count=int(indptr[-1]))
    return indptr, indices


@dataclass(frozen=True)
class LengthProfile:
    """``counts[l]`` is the number of paths with ``l`` edges; ``len(counts) == max(n, 1)``."""

    counts: tuple[int, ...]

    @property
    def total(self) -> int:
        return sum(self.counts)

    def __getitem__(self, length: int) -> int:
        return self.counts[length] if length < len(self.counts) else 0

    def __len__(self) -> int:
        return len(self.counts)


def _ordered_profile(g: Graph, budget: int | None, threads: int | None) -> list[int]:
    if g.n == 0:
        return [0]
    cap = -1 if budget is None else int(budget)
    serial = threads == 1 or g.n < 8
    if g.n <= K.WORD:
        args = (bitmasks(g), cap)
        kernels = (K.profile_bits_serial, K.profile_bits_parallel)
    else:
        args = (*csr(g), cap)
        kernels = (K.profile_flags_serial, K.profile_flags_parallel)
    if serial:
        prof, steps = kernels[0](*args)
    else:
        with _parallel_lock:
            prior = numba.get_num_threads()
            if threads is not None:
                set_threads(threads)
            try:
                prof, steps = kernels[1](*args)
            finally:
                numba.set_num_threads(prior)
    total_steps = sum(int(x) for x in steps)
    if budget is not None and total_steps > budget:
        raise BudgetExceeded(budget, total_steps)
    return [sum(int(x) for x in prof[:, l]) for l in range(g.n)]


def length_profile(g: Graph, *, budget: int | None = None, threads: int | None = None) -> LengthProfile:
    """Number of paths of each length ``0..n-1``.

    ``budget`` caps the total number of extension steps; exceeding it raises
    :class:`BudgetExceeded`. ``threads=1`` forces the single-threaded kernel,
    which is the one to use from worker threads.
    """
    ordered = _ordered_profile(g, budget, threads)
    counts = [ordered[0]]
    for l, c in enumerate(ordered[1:], start=1):
        if c % 2:
            raise AssertionError(f"odd ordered path count {c} at length {l}")
        counts.append(c // 2)
    return LengthProfile(tuple(counts))


def count_subpaths(g: Graph, *, budget: int | None = None, threads: int | None = None) -> int:
    """Subpath number: all simple paths of ``g``, the ``n`` trivial ones included."""
    return length_profile(g, budget=budget, threads=threads).total


def profile_closed_small(g: Graph) -> tuple[int, int, int, int]:
    """Path counts of lengths 0..3 from degrees, Zagreb indices and triangles."""
    st = stats(g)
    pn2 = sum(comb(d, 2) for d in st.degree_sequence)
    pn3 = st.m2 - st.m1 + st.m - 3 * st.triangles
    return st.n, st.m, pn2, pn3


def count_paths_between(g: Graph, x: int, y: int, *, budget: int | None = None) -> int:
    """Number of simple paths with endpoints exactly ``{x, y}``."""
    if not (0 <= x < g.n and 0 <= y < g.n):
        raise GraphError(f"vertex pair ({x}, {y}) out of range for n={g.n}")
    if x == y:
        raise GraphError("count_paths_between needs distinct endpoints")
    indptr, indices = csr(g)
    found, steps = K.between(x, y, indptr, indices, -1 if budget is None else int(budget))
    if budget is not None and steps > budget:
        raise BudgetExceeded(budget, int(steps))
    return int(found)
