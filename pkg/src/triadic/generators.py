"""Star graphs, noisy star constellations and clique unions.

A ``(k, n, delta)`` noisy constellation is the disjoint union of ``k``
components on ``n`` nodes each.  Every component is a star (one hub joined
to ``n - 1`` leaves) in which each pair of leaves is additionally joined
with probability ``delta``, independently.  Component ``c`` (0-based) uses
nodes ``c*n + 1 .. (c+1)*n`` with its hub first.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from math import comb

import numpy as np

from .graphs import UndirectedGraph
from .montecarlo import sample_rng
from .null_models import undirected_proportions

__all__ = [
    "ConstellationParams",
    "ConstellationExpectation",
    "SignPatternReport",
    "star_graph",
    "clique_union",
    "sample_constellation",
    "constellation_batch",
    "constellation_expectation",
    "sign_pattern_report",
]


@dataclass(frozen=True)
class ConstellationParams:
    k: int
    n: int
    delta: float

    def __post_init__(self):
        if int(self.k) != self.k or self.k < 1:
            raise ValueError(f"k must be a positive integer, got {self.k!r}")
        if int(self.n) != self.n or self.n < 2:
            raise ValueError(f"n must be an integer >= 2, got {self.n!r}")
        if not 0.0 <= self.delta <= 1.0:
            raise ValueError(f"delta must lie in [0, 1], got {self.delta!r}")
        object.__setattr__(self, "k", int(self.k))
        object.__setattr__(self, "n", int(self.n))
        object.__setattr__(self, "delta", float(self.delta))

    @property
    def nodes(self) -> int:
        return self.k * self.n

    @property
    def in_regime(self) -> bool:
        """Numerical stand-in for ``n**-2 << delta << n**-1/2``.

        The thresholds ``delta * n**2 >= 10`` and ``delta * sqrt(n) <= 0.1``
        are a convention of this library.
        """
        return self.delta * self.n**2 >= 10 and self.delta * self.n**0.5 <= 0.1


def star_graph(n: int) -> UndirectedGraph:
    """Node 1 joined to each of nodes 2..n."""
    if n < 2:
        raise ValueError(f"a star graph needs at least 2 nodes, got {n}")
    return UndirectedGraph(n, frozenset((1, v) for v in range(2, n + 1)))


def clique_union(k: int, n: int) -> UndirectedGraph:
    """``k`` disjoint complete graphs on ``n`` nodes each."""
    if k < 1 or n < 1:
        raise ValueError(f"need k >= 1 and n >= 1, got k={k}, n={n}")
    edges = set()
    for c in range(k):
        base = c * n
        edges.update(
            (base + i, base + j) for i in range(1, n + 1) for j in range(i + 1, n + 1)
        )
    return UndirectedGraph(k * n, frozenset(edges))


def _constellation_adj(params: ConstellationParams, rng: np.random.Generator) -> np.ndarray:
    k, n = params.k, params.n
    a = np.zeros((k * n, k * n), dtype=bool)
    li, lj = np.triu_indices(n - 1, 1)
    for c in range(k):
        hub = c * n
        a[hub, hub + 1 : hub + n] = True
        noise = rng.random(len(li)) < params.delta
        a[hub + 1 + li[noise], hub + 1 + lj[noise]] = True
    return a | a.T


def sample_constellation(params: ConstellationParams, seed) -> UndirectedGraph:
    rng = seed if isinstance(seed, np.random.Generator) else sample_rng(seed, 0)
    return UndirectedGraph.from_adjacency(_constellation_adj(params, rng))


def constellation_batch(params: ConstellationParams, seed: int, start: int, stop: int) -> np.ndarray:
    """Adjacency matrices of constellation samples ``start..stop-1``."""
    return np.stack([_constellation_adj(params, sample_rng(seed, i)) for i in range(start, stop)])


@dataclass(frozen=True)
class ConstellationExpectation:
    """Expected census of a constellation and of its density-matched ``G(kn, p)``.

    ``constellation[i]`` and ``er[i]`` are expected numbers of ``i``-edge triads.
    """

    params: ConstellationParams
    eps: float
    p_match: float
    constellation: np.ndarray
    er: np.ndarray


def constellation_expectation(params: ConstellationParams) -> ConstellationExpectation:
    k, n, d = params.k, params.n, params.delta
    c2, c3 = comb(n - 1, 2), comb(n - 1, 3)
    eps = k * (n - 1 + d * c2)
    p = eps / comb(k * n, 2)
    e3 = k * (d**3 * c3 + d * c2)
    e2 = k * ((1 - d) * c2 + 3 * d**2 * (1 - d) * c3)
    e1 = k * c3 * 3 * d * (1 - d) ** 2 + k * (k - 1) * (n * (n - 1) + d * n * c2)
    total = comb(k * n, 3)
    ea = np.array([total - e1 - e2 - e3, e1, e2, e3])
    eb = total * undirected_proportions(p)
    return ConstellationExpectation(params, eps, p, ea, eb)


@dataclass(frozen=True)
class SignPatternReport:
    """Over/under pattern of a constellation against its matched ER graph.

    ``signs[i]`` is the sign of ``constellation[i] - er[i]``.  The ratios
    compare finite-``n`` closed forms with their large-``n`` magnitudes and
    should approach 1 as ``n`` grows inside the regime.
    """

    expectation: ConstellationExpectation
    signs: tuple
    in_regime: bool
    triangle_ratio: float  # Ea[3] / (k/2 n^2 delta)
    wedge_ratio: float  # Ea[2] / (k/2 n^2)
    one_edge_gap_ratio: float  # (Eb[1] - Ea[1]) / (k n^2)
    empty_gap_ratio: float  # (Ea[0] - Eb[0]) / (k/2 n^2)
    one_edge_branch_ratio: float  # Ea[1] over k(k-1) n^2, or n^3 delta / 2 when k == 1

    @property
    def matches_pattern(self) -> bool:
        return self.signs == (1, -1, 1, 1)


def sign_pattern_report(params: ConstellationParams) -> SignPatternReport:
    if not params.in_regime:
        warnings.warn(
            f"(k, n, delta) = ({params.k}, {params.n}, {params.delta}) is outside the "
            "n^-2 << delta << n^-1/2 regime; asymptotic ratios may be far from 1",
            stacklevel=2,
        )
    ex = constellation_expectation(params)
    ea, eb = ex.constellation, ex.er
    k, n, d = params.k, params.n, params.delta
    signs = tuple(int(np.sign(a - b)) for a, b in zip(ea, eb))
    half = k / 2 * n**2
    branch = ea[1] / (k * (k - 1) * n**2) if k >= 2 else ea[1] / (n**3 * d / 2) if d > 0 else float("nan")
    return SignPatternReport(
        expectation=ex,
        signs=signs,
        in_regime=params.in_regime,
        triangle_ratio=float(ea[3] / (half * d)) if d > 0 else float("nan"),
        wedge_ratio=float(ea[2] / half),
        one_edge_gap_ratio=float((eb[1] - ea[1]) / (k * n**2)),
        empty_gap_ratio=float((ea[0] - eb[0]) / half),
        one_edge_branch_ratio=float(branch),
    )
