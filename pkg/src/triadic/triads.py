"""Triad isomorphism classes and the four friend/enemy mottoes.

A labelled 3-node digraph is encoded as a 6-bit arc mask, bit ``i`` standing
for the arc ``ARC_ORDER[i]`` between nodes 0, 1, 2.  The 64 masks fall into
16 isomorphism classes, numbered 1..16 in the usual M-A-N order::

    003 012 102 021D 021U 021C 111D 111U 030T 030C 201 120D 120U 120C 210 300

The mottoes, for an ordered triple ``(x, y, z)``:

* M1  x->y and y->z present        =>  x->z present   (transitivity)
* M2  x->y and y->z absent         =>  x->z present
* M3  x->y present, y->z absent    =>  x->z absent
* M4  x->y absent,  y->z present   =>  x->z absent

A triad satisfies a motto when the implication holds for all six ordered
triples of its distinct nodes.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .graphs import Digraph, GraphError, LoopDigraph, UndirectedGraph

__all__ = [
    "ARC_ORDER",
    "CLASS_SIZES",
    "Motto",
    "MottoProfile",
    "TriadClass",
    "TRIAD_CLASSES",
    "UndirectedTriad",
    "LoopBalance",
    "arc_mask",
    "mask_to_digraph",
    "class_of_mask",
    "classify_directed_triad",
    "classify_undirected_triad",
    "motto_holds",
    "motto_witnesses",
    "motto_profile",
    "motto_table",
    "is_balanced_triad",
    "motto_prime_failures",
    "balanced_loop_digraph_structure",
]

ARC_ORDER = ((0, 1), (0, 2), (1, 0), (1, 2), (2, 0), (2, 1))
_BIT = {arc: 1 << i for i, arc in enumerate(ARC_ORDER)}

# Canonical representatives on nodes A=0, B=1, C=2.  Types 7 and 8 follow the
# mutual pair A<->B with C->B (7) or B->C (8).
_REPRESENTATIVES = (
    ("003", ()),
    ("012", ((0, 1),)),
    ("102", ((0, 1), (1, 0))),
    ("021D", ((1, 0), (1, 2))),
    ("021U", ((0, 1), (2, 1))),
    ("021C", ((0, 1), (1, 2))),
    ("111D", ((0, 1), (1, 0), (2, 1))),
    ("111U", ((0, 1), (1, 0), (1, 2))),
    ("030T", ((0, 1), (1, 2), (0, 2))),
    ("030C", ((0, 1), (1, 2), (2, 0))),
    ("201", ((0, 1), (1, 0), (0, 2), (2, 0))),
    ("120D", ((0, 1), (0, 2), (1, 2), (2, 1))),
    ("120U", ((1, 0), (2, 0), (1, 2), (2, 1))),
    ("120C", ((0, 1), (1, 2), (0, 2), (2, 0))),
    ("210", ((0, 1), (1, 0), (0, 2), (2, 0), (1, 2))),
    ("300", ARC_ORDER),
)


def arc_mask(arcs) -> int:
    """6-bit mask of a collection of 0-based arcs among nodes 0, 1, 2."""
    m = 0
    for a in arcs:
        m |= _BIT[tuple(a)]
    return m


def _mask_arcs(mask: int):
    return tuple(arc for i, arc in enumerate(ARC_ORDER) if mask >> i & 1)


def mask_to_digraph(mask: int) -> Digraph:
    return Digraph(3, frozenset((u + 1, v + 1) for u, v in _mask_arcs(mask)))


def _permute_mask(mask: int, perm) -> int:
    return arc_mask((perm[u], perm[v]) for u, v in _mask_arcs(mask))


def _build_lookup():
    lookup = np.zeros(64, dtype=np.int64)
    for index, (_, arcs) in enumerate(_REPRESENTATIVES, start=1):
        base = arc_mask(arcs)
        for perm in itertools.permutations(range(3)):
            m = _permute_mask(base, perm)
            if lookup[m] and lookup[m] != index:
                raise AssertionError(f"representatives {lookup[m]} and {index} are isomorphic")
            lookup[m] = index
    if not lookup.all():
        raise AssertionError("representatives do not cover all 64 labelled triads")
    lookup.flags.writeable = False
    return lookup


_CLASS_OF_MASK = _build_lookup()
CLASS_SIZES = tuple(int(c) for c in np.bincount(_CLASS_OF_MASK, minlength=17)[1:])


class Motto(enum.Enum):
    M1 = 1
    M2 = 2
    M3 = 3
    M4 = 4

    def fails(self, xy, yz, xz):
        """Truth of "the implication fails" for arc indicators; works elementwise on arrays."""
        if self is Motto.M1:
            return xy & yz & ~xz
        if self is Motto.M2:
            return ~xy & ~yz & ~xz
        if self is Motto.M3:
            return xy & ~yz & xz
        return ~xy & yz & xz


class MottoProfile(NamedTuple):
    m1: bool
    m2: bool
    m3: bool
    m4: bool

    def as_yn(self) -> str:
        return "".join("Y" if b else "N" for b in self)


@dataclass(frozen=True)
class TriadClass:
    index: int
    code: str
    mask: int
    size: int

    @property
    def representative(self) -> Digraph:
        return mask_to_digraph(self.mask)

    @property
    def arc_count(self) -> int:
        return bin(self.mask).count("1")


TRIAD_CLASSES = tuple(
    TriadClass(i, code, arc_mask(arcs), CLASS_SIZES[i - 1])
    for i, (code, arcs) in enumerate(_REPRESENTATIVES, start=1)
)


class UndirectedTriad(enum.IntEnum):
    """Undirected triad class, identified by its edge count."""

    EMPTY = 0
    ONE_EDGE = 1
    INTRANSITIVE = 2
    TRIANGLE = 3


def class_of_mask(mask):
    """Class index (1..16) of a mask or an integer array of masks."""
    return _CLASS_OF_MASK[mask]


def _triad_mask(t: Digraph) -> int:
    if not isinstance(t, Digraph):
        raise TypeError(f"expected a Digraph, got {type(t).__name__}")
    if t.n != 3:
        raise GraphError(f"a triad has 3 nodes, got {t.n}")
    return arc_mask((u - 1, v - 1) for u, v in t.arcs)


def classify_directed_triad(t: Digraph) -> TriadClass:
    return TRIAD_CLASSES[int(_CLASS_OF_MASK[_triad_mask(t)]) - 1]


def classify_undirected_triad(t: UndirectedGraph) -> UndirectedTriad:
    if t.n != 3:
        raise GraphError(f"a triad has 3 nodes, got {t.n}")
    return UndirectedTriad(len(t.edges))


def motto_witnesses(t: Digraph, motto: Motto) -> list:
    """Ordered triples (1-based) of ``t`` for which ``motto`` fails."""
    _triad_mask(t)
    arcs = t.arcs
    out = []
    for x, y, z in itertools.permutations((1, 2, 3)):
        xy, yz, xz = (np.bool_(a in arcs) for a in ((x, y), (y, z), (x, z)))
        if motto.fails(xy, yz, xz):
            out.append((x, y, z))
    return out


def motto_holds(t: Digraph, motto: Motto) -> bool:
    return not motto_witnesses(t, motto)


def motto_profile(t: Digraph) -> MottoProfile:
    return MottoProfile(*(motto_holds(t, m) for m in Motto))


def motto_table() -> list:
    """Motto profile of each of the 16 classes, evaluated on the representatives."""
    return [motto_profile(c.representative) for c in TRIAD_CLASSES]


def is_balanced_triad(t: Digraph) -> bool:
    return all(motto_profile(t))


def _fail_tensor(a: np.ndarray, motto: Motto) -> np.ndarray:
    # [x, y, z] -> motto fails for (x, y, z)
    xy = a[:, :, None]
    yz = a[None, :, :]
    xz = a[:, None, :]
    return motto.fails(xy, yz, xz)


def motto_prime_failures(g: LoopDigraph) -> tuple:
    """Number of triples ``(x, y, z)`` in ``V**3`` (repeats allowed) failing M1'..M4'."""
    a = g.adjacency(np.int64)
    na = 1 - a
    return (
        int(((a @ a) * na).sum()),
        int(((na @ na) * na).sum()),
        int(((a @ na) * a).sum()),
        int(((na @ a) * a).sum()),
    )


class LoopBalance(NamedTuple):
    balanced: bool
    classes: tuple = ()
    witness: tuple = ()  # (motto, (x, y, z)) when not balanced


def balanced_loop_digraph_structure(g: LoopDigraph) -> LoopBalance:
    """Equivalence classes of a loop digraph satisfying M1'..M4', or a failing triple."""
    a = g.adjacency(bool)
    for motto in Motto:
        fail = _fail_tensor(a, motto)
        if fail.any():
            x, y, z = (int(i) + 1 for i in np.argwhere(fail)[0])
            return LoopBalance(False, witness=(motto, (x, y, z)))
    # reflexive, symmetric and transitive: rows are the classes
    classes = []
    seen = set()
    for v in range(g.n):
        if v in seen:
            continue
        cls = frozenset(int(u) + 1 for u in np.nonzero(a[v])[0])
        seen.update(u - 1 for u in cls)
        classes.append(cls)
    if len(classes) > 2:
        raise AssertionError("a loop digraph satisfying M1'-M4' has at most two classes")
    return LoopBalance(True, classes=tuple(classes))
