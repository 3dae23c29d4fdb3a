"""Graph representations and edge-list / JSON I/O.

Four flavours are supported: simple undirected graphs, digraphs (no loops,
at most one arc per ordered pair), loop digraphs (self-arcs allowed) and
weighted digraphs with nonnegative weights.  Node ids are 1-based in every
public interface; adjacency matrices use 0-based indices.

All graph objects are immutable.
"""

from __future__ import annotations

import io
import json
import re
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Union

import numpy as np

__all__ = [
    "GraphError",
    "EdgeListError",
    "UndirectedGraph",
    "Digraph",
    "LoopDigraph",
    "WeightedDigraph",
    "MODES",
    "parse_edge_list",
    "read_edge_list",
    "to_edge_list",
    "to_json",
    "from_json",
    "direct",
    "symmetrize",
    "induced_triad",
    "relabel",
]

MODES = ("undirected", "directed", "loop", "weighted")


class GraphError(ValueError):
    """Raised when a graph violates the invariants of its type."""


class EdgeListError(GraphError):
    """Malformed edge-list input; ``lineno`` is 1-based (0 if unknown)."""

    def __init__(self, message: str, lineno: int = 0):
        self.lineno = lineno
        if lineno:
            message = f"line {lineno}: {message}"
        super().__init__(message)


def _check_n(n: int) -> int:
    if isinstance(n, bool) or int(n) != n or n < 0:
        raise GraphError(f"node count must be a nonnegative integer, got {n!r}")
    return int(n)


def _check_node(v: int, n: int) -> int:
    if isinstance(v, bool) or int(v) != v:
        raise GraphError(f"node id must be an integer, got {v!r}")
    v = int(v)
    if not 1 <= v <= n:
        raise GraphError(f"node id {v} out of range 1..{n}")
    return v


@dataclass(frozen=True)
class UndirectedGraph:
    """Simple undirected graph on nodes ``1..n``.

    Edges are stored as sorted pairs ``(u, v)`` with ``u < v``.
    """

    n: int
    edges: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        n = _check_n(self.n)
        norm = set()
        for e in self.edges:
            u, v = (_check_node(x, n) for x in e)
            if u == v:
                raise GraphError(f"loop at node {u} not allowed in an undirected graph")
            norm.add((min(u, v), max(u, v)))
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "edges", frozenset(norm))

    @classmethod
    def from_adjacency(cls, adj) -> "UndirectedGraph":
        a = np.asarray(adj, dtype=bool)
        if a.ndim != 2 or a.shape[0] != a.shape[1]:
            raise GraphError("adjacency matrix must be square")
        if (a != a.T).any():
            raise GraphError("adjacency matrix of an undirected graph must be symmetric")
        if a.diagonal().any():
            raise GraphError("adjacency matrix has nonzero diagonal")
        iu, ju = np.nonzero(np.triu(a, 1))
        return cls(a.shape[0], frozenset(zip((iu + 1).tolist(), (ju + 1).tolist())))

    def adjacency(self, dtype=bool) -> np.ndarray:
        a = np.zeros((self.n, self.n), dtype=dtype)
        if self.edges:
            e = np.array(sorted(self.edges)) - 1
            a[e[:, 0], e[:, 1]] = 1
            a[e[:, 1], e[:, 0]] = 1
        return a

    def degrees(self) -> np.ndarray:
        return self.adjacency(np.int64).sum(axis=1)

    def has_edge(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in self.edges

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def remove_nodes(self, nodes: Iterable[int]) -> "UndirectedGraph":
        """Drop ``nodes`` and renumber the survivors ``1..n'`` in increasing order."""
        drop = set(nodes)
        keep = [v for v in range(1, self.n + 1) if v not in drop]
        new_id = {v: i + 1 for i, v in enumerate(keep)}
        kept = frozenset(
            (new_id[u], new_id[v]) for u, v in self.edges if u in new_id and v in new_id
        )
        return UndirectedGraph(len(keep), kept)


@dataclass(frozen=True)
class Digraph:
    """Directed graph without loops on nodes ``1..n``."""

    n: int
    arcs: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        n = _check_n(self.n)
        norm = set()
        for a in self.arcs:
            u, v = (_check_node(x, n) for x in a)
            if u == v:
                raise GraphError(f"loop at node {u} not allowed in a digraph")
            norm.add((u, v))
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "arcs", frozenset(norm))

    @classmethod
    def from_adjacency(cls, adj) -> "Digraph":
        a = np.asarray(adj, dtype=bool)
        if a.ndim != 2 or a.shape[0] != a.shape[1]:
            raise GraphError("adjacency matrix must be square")
        if a.diagonal().any():
            raise GraphError("adjacency matrix has nonzero diagonal")
        i, j = np.nonzero(a)
        return cls(a.shape[0], frozenset(zip((i + 1).tolist(), (j + 1).tolist())))

    def adjacency(self, dtype=bool) -> np.ndarray:
        a = np.zeros((self.n, self.n), dtype=dtype)
        if self.arcs:
            e = np.array(sorted(self.arcs)) - 1
            a[e[:, 0], e[:, 1]] = 1
        return a

    def has_arc(self, u: int, v: int) -> bool:
        return (u, v) in self.arcs

    @property
    def arc_count(self) -> int:
        return len(self.arcs)

    def is_symmetric(self) -> bool:
        return all((v, u) in self.arcs for u, v in self.arcs)


@dataclass(frozen=True)
class LoopDigraph:
    """Directed graph on ``1..n`` in which self-arcs ``(v, v)`` are permitted."""

    n: int
    arcs: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        n = _check_n(self.n)
        norm = frozenset((_check_node(u, n), _check_node(v, n)) for u, v in self.arcs)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "arcs", norm)

    @classmethod
    def from_adjacency(cls, adj) -> "LoopDigraph":
        a = np.asarray(adj, dtype=bool)
        if a.ndim != 2 or a.shape[0] != a.shape[1]:
            raise GraphError("adjacency matrix must be square")
        i, j = np.nonzero(a)
        return cls(a.shape[0], frozenset(zip((i + 1).tolist(), (j + 1).tolist())))

    @classmethod
    def complete(cls, n: int) -> "LoopDigraph":
        return cls(n, frozenset((u, v) for u in range(1, n + 1) for v in range(1, n + 1)))

    def adjacency(self, dtype=bool) -> np.ndarray:
        a = np.zeros((self.n, self.n), dtype=dtype)
        if self.arcs:
            e = np.array(sorted(self.arcs)) - 1
            a[e[:, 0], e[:, 1]] = 1
        return a

    @property
    def arc_count(self) -> int:
        return len(self.arcs)


@dataclass(frozen=True, eq=False)
class WeightedDigraph:
    """Digraph with nonnegative arc weights; an absent arc has weight 0."""

    n: int
    weights: Mapping = field(default_factory=dict)

    def __post_init__(self):
        n = _check_n(self.n)
        norm = {}
        for (u, v), w in dict(self.weights).items():
            u, v = _check_node(u, n), _check_node(v, n)
            if u == v:
                raise GraphError(f"loop at node {u} not allowed in a weighted digraph")
            w = float(w) if not isinstance(w, int) else w
            if not w >= 0:
                raise GraphError(f"arc ({u},{v}) has negative or invalid weight {w!r}")
            norm[(u, v)] = w
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "weights", dict(sorted(norm.items())))

    def __eq__(self, other):
        if not isinstance(other, WeightedDigraph):
            return NotImplemented
        return self.n == other.n and self.weights == other.weights

    def __hash__(self):
        return hash((self.n, frozenset(self.weights.items())))

    def weight_matrix(self) -> np.ndarray:
        w = np.zeros((self.n, self.n), dtype=float)
        for (u, v), x in self.weights.items():
            w[u - 1, v - 1] = x
        return w

    def support(self) -> Digraph:
        """Digraph of the arcs carrying positive weight."""
        return Digraph(self.n, frozenset(a for a, w in self.weights.items() if w > 0))

    def reversed(self) -> "WeightedDigraph":
        return WeightedDigraph(self.n, {(v, u): w for (u, v), w in self.weights.items()})


AnyGraph = Union[UndirectedGraph, Digraph, LoopDigraph, WeightedDigraph]

_HEADER = re.compile(r"^n\s*=\s*(\d+)$")


def parse_edge_list(text: Union[str, bytes], mode: str = "undirected") -> AnyGraph:
    """Parse a whitespace separated edge list.

    Each non-comment line holds ``u v`` (``u v w`` in weighted mode) with
    1-based ids; ``#`` starts a comment.  A line ``n=<k>`` fixes the node
    count, which otherwise is the largest id seen.  Duplicate edges or arcs
    are an error rather than being merged.
    """
    if mode not in MODES:
        raise ValueError(f"unknown mode {mode!r}; expected one of {MODES}")
    if isinstance(text, bytes):
        text = text.decode("utf-8")

    header_n = None
    max_id = 0
    seen: dict = {}
    for lineno, raw in enumerate(io.StringIO(text), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        m = _HEADER.match(line)
        if m:
            if header_n is not None:
                raise EdgeListError("repeated n=<k> header", lineno)
            header_n = int(m.group(1))
            continue
        parts = line.split()
        want = 3 if mode == "weighted" else 2
        if len(parts) != want:
            raise EdgeListError(f"expected {want} fields, got {len(parts)}: {line!r}", lineno)
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise EdgeListError(f"node ids must be integers: {line!r}", lineno) from None
        if u < 1 or v < 1:
            raise EdgeListError(f"node ids are 1-based, got {u} {v}", lineno)
        if u == v and mode != "loop":
            raise EdgeListError(f"loop at node {u} is not allowed in {mode} mode", lineno)
        w = None
        if mode == "weighted":
            try:
                w = int(parts[2]) if re.fullmatch(r"[+]?\d+", parts[2]) else float(parts[2])
            except ValueError:
                raise EdgeListError(f"weight is not a number: {parts[2]!r}", lineno) from None
            if not w >= 0:
                raise EdgeListError(f"negative or invalid weight {parts[2]}", lineno)
        key = (min(u, v), max(u, v)) if mode == "undirected" else (u, v)
        if key in seen:
            raise EdgeListError(
                f"duplicate edge {key[0]} {key[1]} (first seen on line {seen[key][0]})", lineno
            )
        seen[key] = (lineno, w)
        max_id = max(max_id, u, v)

    n = max_id if header_n is None else header_n
    if n < max_id:
        raise EdgeListError(f"header n={n} is smaller than the largest node id {max_id}")
    if mode == "undirected":
        return UndirectedGraph(n, frozenset(seen))
    if mode == "directed":
        return Digraph(n, frozenset(seen))
    if mode == "loop":
        return LoopDigraph(n, frozenset(seen))
    return WeightedDigraph(n, {k: w for k, (_, w) in seen.items()})


def read_edge_list(path, mode: str = "undirected") -> AnyGraph:
    """Read an edge list from ``path``; ``"-"`` means standard input."""
    if str(path) == "-":
        import sys

        return parse_edge_list(sys.stdin.read(), mode)
    with open(path, "rb") as fh:
        return parse_edge_list(fh.read(), mode)


def _mode_of(g: AnyGraph) -> str:
    if isinstance(g, UndirectedGraph):
        return "undirected"
    if isinstance(g, Digraph):
        return "directed"
    if isinstance(g, LoopDigraph):
        return "loop"
    if isinstance(g, WeightedDigraph):
        return "weighted"
    raise TypeError(f"not a graph: {type(g).__name__}")


def _fmt_weight(w) -> str:
    return str(w) if isinstance(w, int) else repr(float(w))


def to_edge_list(g: AnyGraph) -> str:
    """Serialize ``g`` in the edge-list format read by :func:`parse_edge_list`."""
    lines = [f"n={g.n}"]
    if isinstance(g, WeightedDigraph):
        lines += [f"{u} {v} {_fmt_weight(w)}" for (u, v), w in g.weights.items()]
    else:
        pairs = g.edges if isinstance(g, UndirectedGraph) else g.arcs
        lines += [f"{u} {v}" for u, v in sorted(pairs)]
    return "\n".join(lines) + "\n"


def to_json(g: AnyGraph) -> str:
    mode = _mode_of(g)
    if mode == "weighted":
        edges = [[u, v, w] for (u, v), w in g.weights.items()]
    else:
        pairs = g.edges if mode == "undirected" else g.arcs
        edges = [[u, v] for u, v in sorted(pairs)]
    return json.dumps({"n": g.n, "mode": mode, "edges": edges})


def from_json(text: Union[str, bytes]) -> AnyGraph:
    doc = json.loads(text)
    try:
        n, mode, edges = doc["n"], doc["mode"], doc["edges"]
    except (KeyError, TypeError):
        raise GraphError('JSON graph needs keys "n", "mode" and "edges"') from None
    if mode == "weighted":
        return WeightedDigraph(n, {(e[0], e[1]): e[2] for e in edges})
    pairs = [tuple(e) for e in edges]
    if len(set(pairs)) != len(pairs):
        raise GraphError("duplicate edge in JSON graph")
    if mode == "undirected":
        g = UndirectedGraph(n, frozenset(pairs))
        if len(g.edges) != len(pairs):
            raise GraphError("duplicate undirected edge in JSON graph")
        return g
    if mode == "directed":
        return Digraph(n, frozenset(pairs))
    if mode == "loop":
        return LoopDigraph(n, frozenset(pairs))
    raise GraphError(f"unknown mode {mode!r}")


def direct(g: UndirectedGraph) -> Digraph:
    """Replace every undirected edge by the two opposite arcs."""
    return Digraph(g.n, frozenset(g.edges | {(v, u) for u, v in g.edges}))


def symmetrize(d: Digraph) -> UndirectedGraph:
    """Collapse each mutual pair of arcs into one undirected edge.

    Raises
    ------
    GraphError
        If ``d`` has an arc whose reverse is missing; the message names it.
    """
    for u, v in sorted(d.arcs):
        if (v, u) not in d.arcs:
            raise GraphError(f"digraph is not symmetric: arc ({u},{v}) present but ({v},{u}) absent")
    return UndirectedGraph(d.n, frozenset((u, v) for u, v in d.arcs if u < v))


def induced_triad(g: AnyGraph, nodes) -> AnyGraph:
    """Subgraph induced on three distinct nodes, relabelled 1, 2, 3 in the given order."""
    nodes = tuple(nodes)
    if len(nodes) != 3:
        raise GraphError(f"a triad needs exactly 3 nodes, got {len(nodes)}")
    for v in nodes:
        _check_node(v, g.n)
    if len(set(nodes)) != 3:
        raise GraphError(f"triad nodes must be distinct, got {nodes}")
    return _induce(g, nodes)


def _induce(g: AnyGraph, nodes) -> AnyGraph:
    pos = {v: i + 1 for i, v in enumerate(nodes)}
    k = len(nodes)
    if isinstance(g, UndirectedGraph):
        return UndirectedGraph(
            k, frozenset((pos[u], pos[v]) for u, v in g.edges if u in pos and v in pos)
        )
    if isinstance(g, WeightedDigraph):
        return WeightedDigraph(
            k, {(pos[u], pos[v]): w for (u, v), w in g.weights.items() if u in pos and v in pos}
        )
    return type(g)(k, frozenset((pos[u], pos[v]) for u, v in g.arcs if u in pos and v in pos))


def relabel(g: AnyGraph, perm: Mapping[int, int]) -> AnyGraph:
    """Apply the node bijection ``perm`` (old id -> new id) to ``g``."""
    if sorted(perm) != list(range(1, g.n + 1)) or sorted(perm.values()) != list(range(1, g.n + 1)):
        raise GraphError("relabelling must be a permutation of 1..n")
    if isinstance(g, UndirectedGraph):
        return UndirectedGraph(g.n, frozenset((perm[u], perm[v]) for u, v in g.edges))
    if isinstance(g, WeightedDigraph):
        return WeightedDigraph(g.n, {(perm[u], perm[v]): w for (u, v), w in g.weights.items()})
    return type(g)(g.n, frozenset((perm[u], perm[v]) for u, v in g.arcs))
