"""Triad censuses, intransitive-triple counts and flow balance."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import comb
from typing import NamedTuple, Optional

import numpy as np

from .graphs import Digraph, GraphError, UndirectedGraph, WeightedDigraph
from .triads import ARC_ORDER, Motto, class_of_mask

__all__ = [
    "UndirectedCensus",
    "DirectedCensus",
    "TransitivityCount",
    "CompleteBalance",
    "FlowBalance",
    "census_undirected",
    "census_undirected_batch",
    "census_directed",
    "census_directed_batch",
    "count_intransitive_triples",
    "intransitive_triples_batch",
    "motto_failure_counts",
    "is_completely_balanced",
    "flow_balance",
    "clique_union_census",
]


def _require_n3(n: int):
    if n < 3:
        raise GraphError(f"a census needs at least 3 nodes, got n={n}")


@dataclass(frozen=True)
class UndirectedCensus:
    """Number of triads with 0, 1, 2 and 3 edges."""

    n: int
    counts: tuple

    @property
    def total(self) -> int:
        return comb(self.n, 3)

    def __getitem__(self, i: int) -> int:
        return self.counts[i]

    def __iter__(self):
        return iter(self.counts)

    def proportions(self) -> np.ndarray:
        return np.asarray(self.counts, dtype=float) / self.total


@dataclass(frozen=True)
class DirectedCensus:
    """Triad counts per class; ``counts[c - 1]`` is the count of class ``c``."""

    n: int
    counts: tuple

    @property
    def total(self) -> int:
        return comb(self.n, 3)

    def of_class(self, index: int) -> int:
        if not 1 <= index <= 16:
            raise IndexError(f"triad classes are numbered 1..16, got {index}")
        return self.counts[index - 1]

    def __iter__(self):
        return iter(self.counts)


class TransitivityCount(NamedTuple):
    intransitive_triples: int
    total_triples: int


def _census_from_stats(n, m, p2, tri):
    c3 = tri
    c2 = p2 - 3 * tri
    c1 = m * (n - 2) - 2 * p2 + 3 * tri
    c0 = comb(n, 3) - c1 - c2 - c3
    return c0, c1, c2, c3


def census_undirected(g: UndirectedGraph) -> UndirectedCensus:
    """Exact 4-class census from edge, wedge and triangle counts.

    With ``m`` edges, ``T`` triangles and ``P2`` the number of paths of
    length two, the counts are ``T``, ``P2 - 3T``, ``m(n-2) - 2 P2 + 3T``
    and the remainder of ``C(n, 3)``.
    """
    _require_n3(g.n)
    a = g.adjacency(np.int64)
    deg = a.sum(axis=1)
    m = int(deg.sum()) // 2
    p2 = int((deg * (deg - 1) // 2).sum())
    tri = int(((a @ a) * a).sum()) // 6
    return UndirectedCensus(g.n, _census_from_stats(g.n, m, p2, tri))


def census_undirected_batch(adj: np.ndarray) -> np.ndarray:
    """Censuses of a stack of symmetric 0/1 adjacency matrices, shape ``(S, 4)``."""
    adj = np.asarray(adj)
    n = adj.shape[-1]
    _require_n3(n)
    # float matmul is exact here (entries <= n) and much faster than int
    a = adj.astype(np.float64)
    deg = a.sum(axis=-1)
    m = deg.sum(axis=-1) / 2
    p2 = (deg * (deg - 1) / 2).sum(axis=-1)
    tri = np.einsum("sij,sij->s", a @ a, a) / 6
    m, p2, tri = (np.rint(x).astype(np.int64) for x in (m, p2, tri))
    c3 = tri
    c2 = p2 - 3 * tri
    c1 = m * (n - 2) - 2 * p2 + 3 * tri
    c0 = comb(n, 3) - c1 - c2 - c3
    return np.stack([c0, c1, c2, c3], axis=-1)


_TRIPLE_CACHE: dict = {}


def _triples(n: int) -> np.ndarray:
    t = _TRIPLE_CACHE.get(n)
    if t is None:
        t = np.fromiter(
            itertools.chain.from_iterable(itertools.combinations(range(n), 3)),
            dtype=np.int64,
            count=3 * comb(n, 3),
        ).reshape(-1, 3)
        if n <= 200:
            _TRIPLE_CACHE[n] = t
    return t


def _masks(adj: np.ndarray, triples: np.ndarray) -> np.ndarray:
    nodes = triples.T
    mask = np.zeros(adj.shape[:-2] + (len(triples),), dtype=np.int64)
    for bit, (u, v) in enumerate(ARC_ORDER):
        mask |= adj[..., nodes[u], nodes[v]].astype(np.int64) << bit
    return mask


def census_directed(g: Digraph) -> DirectedCensus:
    """16-class census by classifying every unordered node triple."""
    _require_n3(g.n)
    counts = census_directed_batch(g.adjacency(bool)[None])[0]
    return DirectedCensus(g.n, tuple(int(c) for c in counts))


def census_directed_batch(adj: np.ndarray, chunk: int = 200_000) -> np.ndarray:
    """Directed censuses of a stack of adjacency matrices, shape ``(S, 16)``."""
    adj = np.asarray(adj, dtype=bool)
    n = adj.shape[-1]
    _require_n3(n)
    s = adj.shape[0]
    out = np.zeros((s, 16), dtype=np.int64)
    triples = _triples(n)
    step = max(1, chunk // max(1, s))
    for start in range(0, len(triples), step):
        cls = class_of_mask(_masks(adj, triples[start : start + step])) - 1
        flat = cls + 16 * np.arange(s)[:, None]
        out += np.bincount(flat.ravel(), minlength=16 * s).reshape(s, 16)
    return out


def intransitive_triples_batch(adj: np.ndarray) -> np.ndarray:
    """Ordered distinct triples x->y->z with x->z absent, per matrix in a stack."""
    a = np.asarray(adj).astype(np.float64)
    n = a.shape[-1]
    paths = a @ a
    paths[..., np.arange(n), np.arange(n)] = 0
    return np.rint(np.einsum("sij,sij->s", paths, 1 - a)).astype(np.int64)


def count_intransitive_triples(g: Digraph) -> TransitivityCount:
    _require_n3(g.n)
    a = g.adjacency(np.int64)
    paths = a @ a
    np.fill_diagonal(paths, 0)
    bad = int((paths * (1 - a)).sum())
    return TransitivityCount(bad, g.n * (g.n - 1) * (g.n - 2))


def motto_failure_counts(g: Digraph) -> tuple:
    """Ordered triples of distinct nodes failing each of M1..M4."""
    _require_n3(g.n)
    a = g.adjacency(np.int64)
    na = 1 - a
    np.fill_diagonal(na, 0)
    hyp = {
        Motto.M1: (a @ a, na),
        Motto.M2: (na @ na, na),
        Motto.M3: (a @ na, a),
        Motto.M4: (na @ a, a),
    }
    out = []
    for motto in Motto:
        h, concl = hyp[motto]
        h = h.copy()
        np.fill_diagonal(h, 0)
        out.append(int((h * concl).sum()))
    return tuple(out)


class CompleteBalance(NamedTuple):
    balanced: bool
    parts: tuple = ()  # clique node sets when balanced
    witness: tuple = ()  # 1-based triad with 0 or 2 edges otherwise


def _components(a: np.ndarray) -> list:
    n = a.shape[0]
    seen = np.zeros(n, dtype=bool)
    comps = []
    for s in range(n):
        if seen[s]:
            continue
        stack, comp = [s], []
        seen[s] = True
        while stack:
            v = stack.pop()
            comp.append(v)
            for u in np.nonzero(a[v] & ~seen)[0]:
                seen[u] = True
                stack.append(int(u))
        comps.append(sorted(comp))
    return comps


def is_completely_balanced(g: UndirectedGraph) -> CompleteBalance:
    """Whether every triad has 1 or 3 edges, i.e. ``g`` is one clique or two.

    On failure the witness is a node triple inducing 0 edges (three
    components) or 2 edges (a non-clique component).
    """
    _require_n3(g.n)
    a = g.adjacency(bool)
    comps = _components(a)
    if len(comps) >= 3:
        return CompleteBalance(False, witness=tuple(sorted(c[0] + 1 for c in comps[:3])))
    ai = a.astype(np.int64)
    two_step = (ai @ ai > 0) & ~a
    np.fill_diagonal(two_step, False)
    if two_step.any():
        x, z = (int(v) for v in np.argwhere(two_step)[0])
        y = int(np.nonzero(a[x] & a[z])[0][0])
        return CompleteBalance(False, witness=tuple(sorted((x + 1, y + 1, z + 1))))
    return CompleteBalance(True, parts=tuple(frozenset(v + 1 for v in c) for c in comps))


class FlowBalance(NamedTuple):
    balanced: bool
    node: Optional[int] = None
    in_weight: float = 0.0
    out_weight: float = 0.0


def flow_balance(g: WeightedDigraph, tol: Optional[float] = None) -> FlowBalance:
    """Check that in-weight equals out-weight at every node.

    The default tolerance is 0 for integer weights and ``1e-9`` times the
    largest node throughput otherwise.  When unbalanced, the node with the
    largest discrepancy (lowest id on ties) is reported.
    """
    if tol is not None and not tol >= 0:
        raise ValueError(f"tolerance must be nonnegative, got {tol}")
    w = g.weight_matrix()
    w_in = w.sum(axis=0)
    w_out = w.sum(axis=1)
    if tol is None:
        if all(isinstance(x, int) for x in g.weights.values()):
            tol = 0.0
        else:
            tol = 1e-9 * float(max(w_in.max(initial=0.0), w_out.max(initial=0.0)))
    gap = np.abs(w_in - w_out)
    if g.n == 0 or gap.max() <= tol:
        return FlowBalance(True)
    v = int(np.argmax(gap))
    return FlowBalance(False, v + 1, float(w_in[v]), float(w_out[v]))


def clique_union_census(k: int, n: int) -> tuple:
    """Closed-form census of ``k`` disjoint cliques on ``n`` nodes each."""
    c1 = k * (k - 1) * n * comb(n, 2)
    c3 = k * comb(n, 3)
    return (comb(k * n, 3) - c1 - c3, c1, 0, c3)
