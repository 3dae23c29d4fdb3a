"""Erdős–Rényi null models and their closed-form triad expectations.

Three flavours share :class:`ErParams`: ``G(n, p)`` over the ``C(n, 2)``
undirected pairs, the directed ``G(n, p)`` over the ``n(n-1)`` ordered
pairs, and the random loop digraph over all ``n**2`` ordered pairs.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import comb
from typing import NamedTuple

import numpy as np

from .graphs import Digraph, LoopDigraph, UndirectedGraph
from .montecarlo import sample_rng
from .triads import TRIAD_CLASSES, Motto

__all__ = [
    "ErParams",
    "MottoPrimeExpectation",
    "sample_er_undirected",
    "sample_er_directed",
    "sample_er_loop",
    "er_undirected_batch",
    "er_directed_batch",
    "gnm_undirected_batch",
    "undirected_proportions",
    "expected_census_undirected",
    "expected_census_directed",
    "expected_intransitive_triples",
    "expected_motto_prime_failures",
]


@dataclass(frozen=True)
class ErParams:
    n: int
    p: float

    def __post_init__(self):
        if int(self.n) != self.n or self.n < 0:
            raise ValueError(f"n must be a nonnegative integer, got {self.n!r}")
        if not 0.0 <= self.p <= 1.0:
            raise ValueError(f"edge probability must lie in [0, 1], got {self.p!r}")
        object.__setattr__(self, "n", int(self.n))
        object.__setattr__(self, "p", float(self.p))

    @classmethod
    def matching_undirected(cls, n: int, edges: int) -> "ErParams":
        """Density-matched ``p = 2e / (n(n-1))``."""
        return cls(n, 2 * edges / (n * (n - 1)))

    @classmethod
    def matching_directed(cls, n: int, arcs: int) -> "ErParams":
        """Density-matched ``p = e / (n(n-1))``."""
        return cls(n, arcs / (n * (n - 1)))

    @classmethod
    def matching_loop(cls, n: int, arcs: int) -> "ErParams":
        """Density-matched ``p = e / n**2``."""
        return cls(n, arcs / n**2)

    @property
    def degenerate(self) -> bool:
        return self.p in (0.0, 1.0)


def _rng(seed, index=0):
    if isinstance(seed, np.random.Generator):
        return seed
    return sample_rng(seed, index)


def _upper_pairs(n):
    return np.triu_indices(n, 1)


def sample_er_undirected(params: ErParams, seed) -> UndirectedGraph:
    """One draw of ``G(n, p)``; ``seed`` is an int (sample 0 of that seed) or a Generator."""
    return UndirectedGraph.from_adjacency(_er_undirected_adj(params, _rng(seed)))


def sample_er_directed(params: ErParams, seed) -> Digraph:
    return Digraph.from_adjacency(_er_directed_adj(params, _rng(seed)))


def sample_er_loop(params: ErParams, seed) -> LoopDigraph:
    rng = _rng(seed)
    return LoopDigraph.from_adjacency(rng.random((params.n, params.n)) < params.p)


def _er_undirected_adj(params, rng):
    n = params.n
    iu, ju = _upper_pairs(n)
    a = np.zeros((n, n), dtype=bool)
    present = rng.random(len(iu)) < params.p
    a[iu[present], ju[present]] = True
    return a | a.T


def _er_directed_adj(params, rng):
    n = params.n
    a = rng.random((n, n)) < params.p
    np.fill_diagonal(a, False)
    return a


def er_undirected_batch(params: ErParams, seed: int, start: int, stop: int) -> np.ndarray:
    """Adjacency matrices of samples ``start..stop-1``, shape ``(stop-start, n, n)``."""
    return np.stack([_er_undirected_adj(params, sample_rng(seed, i)) for i in range(start, stop)])


def er_directed_batch(params: ErParams, seed: int, start: int, stop: int) -> np.ndarray:
    return np.stack([_er_directed_adj(params, sample_rng(seed, i)) for i in range(start, stop)])


def gnm_undirected_batch(n: int, edges: int, seed: int, start: int, stop: int) -> np.ndarray:
    """Uniform graphs with exactly ``edges`` edges, one per sample index."""
    iu, ju = _upper_pairs(n)
    out = np.zeros((stop - start, n, n), dtype=bool)
    for row, i in enumerate(range(start, stop)):
        pick = sample_rng(seed, i).choice(len(iu), size=edges, replace=False)
        out[row, iu[pick], ju[pick]] = True
    return out | out.transpose(0, 2, 1)


def undirected_proportions(p: float) -> np.ndarray:
    """Probabilities that a triad of ``G(n, p)`` has 0, 1, 2, 3 edges."""
    q = 1.0 - p
    return np.array([q**3, 3 * p * q**2, 3 * p**2 * q, p**3])


def expected_census_undirected(params: ErParams) -> np.ndarray:
    """Expected number of 0-, 1-, 2- and 3-edge triads in ``G(n, p)``."""
    return comb(params.n, 3) * undirected_proportions(params.p)


def expected_census_directed(params: ErParams) -> np.ndarray:
    """Expected count of each of the 16 classes (index ``c - 1``) in directed ``G(n, p)``."""
    p, q = params.p, 1.0 - params.p
    per_class = np.array([c.size * p**c.arc_count * q ** (6 - c.arc_count) for c in TRIAD_CLASSES])
    return comb(params.n, 3) * per_class


def expected_intransitive_triples(params: ErParams) -> float:
    n, p = params.n, params.p
    return n * (n - 1) * (n - 2) * p**2 * (1 - p)


class MottoPrimeExpectation(NamedTuple):
    """Expected failing-triple counts for M1'..M4' in a random loop digraph.

    ``leading`` is the ``n**3``-scaled formula, which treats every triple as
    if its nodes were distinct; ``exact`` sums the exact failure
    probability over the five node-coincidence patterns.
    """

    leading: tuple
    exact: tuple


# node coincidence patterns of (x, y, z), as the arc each slot refers to
_PATTERNS = (
    # (name, number of triples as a function of n, labels of xy, yz, xz)
    ("distinct", lambda n: n * (n - 1) * (n - 2), ("xy", "yz", "xz")),
    ("x=y", lambda n: n * (n - 1), ("xx", "xz", "xz")),
    ("y=z", lambda n: n * (n - 1), ("xy", "yy", "xy")),
    ("x=z", lambda n: n * (n - 1), ("xy", "yx", "xx")),
    ("x=y=z", lambda n: n, ("xx", "xx", "xx")),
)


def pattern_failure_probability(slots, motto: Motto, p: float) -> float:
    """Probability that ``motto`` fails when the three slots name the given arcs."""
    arcs = sorted(set(slots))
    total = 0.0
    for bits in itertools.product((False, True), repeat=len(arcs)):
        value = dict(zip(arcs, bits))
        xy, yz, xz = (np.bool_(value[s]) for s in slots)
        if motto.fails(xy, yz, xz):
            k = sum(bits)
            total += p**k * (1 - p) ** (len(arcs) - k)
    return total


def expected_motto_prime_failures(params: ErParams) -> MottoPrimeExpectation:
    n, p = params.n, params.p
    q = 1.0 - p
    leading = (n**3 * p**2 * q, n**3 * q**3, n**3 * p**2 * q, n**3 * p**2 * q)
    exact = tuple(
        sum(count(n) * pattern_failure_probability(slots, m, p) for _, count, slots in _PATTERNS)
        for m in Motto
    )
    return MottoPrimeExpectation(leading, exact)
