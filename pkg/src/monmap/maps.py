"""Bicolored maps on surfaces, encoded as involution triples.

A map is a triple (beta, omega, eps) of fixed-point-free involutions on a
common even label set: beta pairs the two edge-sides meeting at a corner of
a black vertex, omega does the same for white vertices, and eps pairs the
two sides of each edge.  Everything else is derived:

* faces       = orbits of <beta, omega>   (even cycles; polygons)
* black nodes = orbits of <beta, eps>
* white nodes = orbits of <omega, eps>
* components  = orbits of <beta, omega, eps>

All values are immutable; every operation is a pure function returning new
values, so instances are safe to share and to use as cache keys.
"""

from __future__ import annotations

import enum
import json
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from itertools import permutations
from types import MappingProxyType
from typing import Iterable, Optional

from . import kernels


class MapError(ValueError):
    """Invalid map data or an operation applied outside its domain."""


def _normalize_edge(e) -> tuple[int, int]:
    a, b = e
    return (a, b) if a <= b else (b, a)


class Pairing:
    """Fixed-point-free involution on a finite label set (perfect matching)."""

    __slots__ = ("_mapping", "_pairs", "_hash")

    def __init__(self, pairs: Iterable = ()):
        mapping: dict[int, int] = {}
        for pair in pairs:
            a, b = pair
            a = int(a)
            b = int(b)
            if a == b:
                raise MapError(f"pairing has a fixed point: {a}")
            if a in mapping or b in mapping:
                raise MapError(f"label reused in pairing: {pair}")
            mapping[a] = b
            mapping[b] = a
        object.__setattr__(self, "_mapping", mapping)
        object.__setattr__(
            self,
            "_pairs",
            tuple(sorted((a, b) for a, b in mapping.items() if a < b)),
        )
        object.__setattr__(self, "_hash", hash(self._pairs))

    def __setattr__(self, name, value):
        raise AttributeError("Pairing values are immutable")

    @classmethod
    def from_mapping(cls, mapping: dict[int, int]) -> "Pairing":
        return cls((a, b) for a, b in mapping.items() if a < b)

    @property
    def pairs(self) -> tuple[tuple[int, int], ...]:
        return self._pairs

    @property
    def mapping(self):
        return MappingProxyType(self._mapping)

    @property
    def support(self) -> frozenset[int]:
        return frozenset(self._mapping)

    def __call__(self, x: int) -> int:
        return self._mapping[x]

    def __len__(self) -> int:
        return len(self._pairs)

    def __contains__(self, pair) -> bool:
        return _normalize_edge(pair) in self._pairs

    def __iter__(self):
        return iter(self._pairs)

    def __eq__(self, other):
        if isinstance(other, Pairing):
            return self._pairs == other._pairs
        return NotImplemented

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"Pairing({list(map(list, self._pairs))!r})"


class EdgeKind(enum.Enum):
    STRAIGHT = "straight"
    TWISTED = "twisted"
    INTERFACE = "interface"


@dataclass(frozen=True)
class EdgeRole:
    is_bridge: bool
    is_leaf: bool


@dataclass(frozen=True)
class MapStructure:
    blacks: int
    whites: int
    edges: int
    faces: int
    components: int
    euler: int
    genus: Fraction

    @property
    def vertices(self) -> int:
        return self.blacks + self.whites


@dataclass(frozen=True)
class BicoloredGraph:
    """Underlying bicolored multigraph: vertex counts plus incidence list.

    Edge entries are (black index, white index) pairs; indices are in
    first-visit order of the source object's orbits, so the representation
    is deterministic but not canonical (see :func:`graph_class`).
    """

    blacks: int
    whites: int
    edges: tuple[tuple[int, int], ...]

    def multiplicity_matrix(self) -> tuple[tuple[int, ...], ...]:
        rows = [[0] * self.whites for _ in range(self.blacks)]
        for b, w in self.edges:
            rows[b][w] += 1
        return tuple(tuple(r) for r in rows)


@dataclass(frozen=True)
class BicoloredGraphClass:
    """Canonical encoding of a bicolored multigraph up to isomorphism."""

    blacks: int
    whites: int
    matrix: tuple[tuple[int, ...], ...]

    @property
    def key(self) -> bytes:
        return repr((self.blacks, self.whites, self.matrix)).encode()


_MATRIX_CANON_CACHE: dict = {}


def _canonical_matrix(rows: tuple[tuple[int, ...], ...]):
    """Lexicographically minimal matrix under independent row/column perms.

    Exhaustive over row orders (desk scale: at most a handful of vertices);
    for a fixed row order the best column order is just the ascending sort
    of column vectors.
    """
    cached = _MATRIX_CANON_CACHE.get(rows)
    if cached is not None:
        return cached
    if not rows or not rows[0]:
        best = rows
    else:
        best = None
        for perm in permutations(rows):
            cols = sorted(zip(*perm))
            cand = tuple(zip(*cols))
            if best is None or cand < best:
                best = cand
    _MATRIX_CANON_CACHE[rows] = best
    return best


def canonical_graph_class(graph: BicoloredGraph) -> BicoloredGraphClass:
    matrix = _canonical_matrix(graph.multiplicity_matrix())
    return BicoloredGraphClass(graph.blacks, graph.whites, matrix)


class NonOrientedMap:
    """A bicolored map on a (possibly non-orientable) surface.

    ``root``, when present, decorates one edge-side.  Labels are arbitrary
    distinct integers; they are not required to stay contiguous after edge
    removals.
    """

    __slots__ = ("beta", "omega", "eps", "root", "__dict__")

    def __init__(self, beta: Pairing, omega: Pairing, eps: Pairing,
                 root: Optional[int] = None):
        support = beta.support
        if omega.support != support or eps.support != support:
            raise MapError("the three pairings must share one label set")
        if root is not None and root not in support:
            raise MapError(f"root {root} is not a label of the map")
        object.__setattr__(self, "beta", beta)
        object.__setattr__(self, "omega", omega)
        object.__setattr__(self, "eps", eps)
        object.__setattr__(self, "root", root)

    def __setattr__(self, name, value):
        raise AttributeError("NonOrientedMap values are immutable")

    @classmethod
    def from_pairs(cls, beta, omega, eps, root=None) -> "NonOrientedMap":
        return cls(Pairing(beta), Pairing(omega), Pairing(eps), root)

    @cached_property
    def labels(self) -> tuple[int, ...]:
        return tuple(sorted(self.beta.support))

    @property
    def n(self) -> int:
        """Number of edges."""
        return len(self.eps)

    def edges(self) -> tuple[tuple[int, int], ...]:
        return self.eps.pairs

    def has_edge(self, e) -> bool:
        return e in self.eps

    def with_root(self, root: Optional[int]) -> "NonOrientedMap":
        return NonOrientedMap(self.beta, self.omega, self.eps, root)

    # -- index-array views consumed by the kernels ------------------------

    @cached_property
    def _index(self) -> dict[int, int]:
        return {lab: i for i, lab in enumerate(self.labels)}

    def _array(self, pairing: Pairing) -> tuple[int, ...]:
        idx = self._index
        return tuple(idx[pairing(lab)] for lab in self.labels)

    @cached_property
    def _arrays(self):
        return self._array(self.beta), self._array(self.omega), self._array(self.eps)

    @cached_property
    def _face_data(self):
        b, w, _ = self._arrays
        return kernels.face_data(b, w)

    @cached_property
    def _component_data(self):
        b, w, e = self._arrays
        return kernels.orbit_ids3(b, w, e)

    @cached_property
    def _vertex_counts(self):
        b, w, e = self._arrays
        _, blacks = kernels.orbit_ids2(b, e)
        _, whites = kernels.orbit_ids2(w, e)
        return blacks, whites

    def __eq__(self, other):
        if isinstance(other, NonOrientedMap):
            return (self.beta, self.omega, self.eps, self.root) == (
                other.beta, other.omega, other.eps, other.root)
        return NotImplemented

    def __hash__(self):
        return hash((self.beta, self.omega, self.eps, self.root))

    def __repr__(self):
        root = f", root={self.root}" if self.root is not None else ""
        return (f"NonOrientedMap(B={list(map(list, self.beta.pairs))}, "
                f"W={list(map(list, self.omega.pairs))}, "
                f"E={list(map(list, self.eps.pairs))}{root})")


EMPTY_MAP = NonOrientedMap(Pairing(), Pairing(), Pairing())


def faces(m: NonOrientedMap):
    """Face orbits (as frozensets of labels) and the face-type partition."""
    ids, _, count = m._face_data
    orbits = [[] for _ in range(count)]
    for i, fid in enumerate(ids):
        orbits[fid].append(m.labels[i])
    face_sets = [frozenset(o) for o in orbits]
    face_type = tuple(sorted((len(o) // 2 for o in orbits), reverse=True))
    return face_sets, face_type


def structure(m: NonOrientedMap) -> MapStructure:
    blacks, whites = m._vertex_counts
    n_faces = m._face_data[2]
    n_comps = m._component_data[1]
    euler = n_faces - m.n + blacks + whites
    genus = Fraction(2 * n_comps - euler, 2)
    return MapStructure(blacks, whites, m.n, n_faces, n_comps, euler, genus)


def is_orientable(m: NonOrientedMap) -> bool:
    """Bipartiteness of the graph on labels with beta/omega/eps adjacencies.

    Orientable maps are exactly those whose edge-sides can be split into
    two classes, one per boundary direction; the three pairings each join
    opposite classes.
    """
    b, w, e = m._arrays
    return kernels.bipartite3(b, w, e)


def classify_edge(m: NonOrientedMap, e) -> EdgeKind:
    a, b = _normalize_edge(e)
    if not m.has_edge((a, b)):
        raise MapError(f"{{{a},{b}}} is not an edge of the map")
    ids, cols, _ = m._face_data
    idx = m._index
    ia, ib = idx[a], idx[b]
    if ids[ia] != ids[ib]:
        return EdgeKind.INTERFACE
    if cols[ia] == cols[ib]:
        return EdgeKind.TWISTED
    return EdgeKind.STRAIGHT


def _heal(mapping: dict[int, int], a: int, b: int) -> dict[int, int]:
    # Drop labels a, b; if they were not partners, re-pair their partners.
    pa = mapping[a]
    pb = mapping[b]
    out = {x: y for x, y in mapping.items() if x != a and x != b and y != a and y != b}
    if pa != b:
        out[pa] = pb
        out[pb] = pa
    return out


def remove_edge(m: NonOrientedMap, e) -> NonOrientedMap:
    """Remove one edge; endpoints that become isolated vanish with it."""
    a, b = _normalize_edge(e)
    if not m.has_edge((a, b)):
        raise MapError(f"{{{a},{b}}} is not an edge of the map")
    beta = Pairing.from_mapping(_heal(m.beta.mapping, a, b))
    omega = Pairing.from_mapping(_heal(m.omega.mapping, a, b))
    eps = {x: y for x, y in m.eps.mapping.items() if x != a and x != b}
    root = m.root if m.root not in (a, b) else None
    return NonOrientedMap(beta, omega, Pairing.from_mapping(eps), root)


def twist(m: NonOrientedMap, e) -> NonOrientedMap:
    """Conjugate the white pairing by the transposition of e's two sides."""
    a, b = _normalize_edge(e)
    if not m.has_edge((a, b)):
        raise MapError(f"{{{a},{b}}} is not an edge of the map")
    swap = {a: b, b: a}
    omega = {swap.get(x, x): swap.get(y, y) for x, y in m.omega.mapping.items()}
    return NonOrientedMap(m.beta, Pairing.from_mapping(omega), m.eps, m.root)


def twist_many(m: NonOrientedMap, edges) -> NonOrientedMap:
    """Twist a set of (necessarily disjoint) edges; order is irrelevant."""
    swap: dict[int, int] = {}
    for e in edges:
        a, b = _normalize_edge(e)
        if not m.has_edge((a, b)):
            raise MapError(f"{{{a},{b}}} is not an edge of the map")
        if a in swap:
            raise MapError(f"edge {{{a},{b}}} listed twice in the twist set")
        swap[a] = b
        swap[b] = a
    omega = {swap.get(x, x): swap.get(y, y) for x, y in m.omega.mapping.items()}
    return NonOrientedMap(m.beta, Pairing.from_mapping(omega), m.eps, m.root)


def edge_role(m: NonOrientedMap, e) -> EdgeRole:
    """Leaf: an endpoint has degree one.  Bridge: removal splits a component.

    Removing a pendant edge deletes the pendant vertex rather than leaving
    a second component, so a leaf is never a bridge here; the single-edge
    component counts as a leaf.
    """
    a, b = _normalize_edge(e)
    if not m.has_edge((a, b)):
        raise MapError(f"{{{a},{b}}} is not an edge of the map")
    leaf = m.beta(a) == b or m.omega(a) == b
    comps_before = m._component_data[1]
    comps_after = remove_edge(m, (a, b))._component_data[1]
    return EdgeRole(is_bridge=comps_after > comps_before, is_leaf=leaf)


def _component_trace(m: NonOrientedMap, start: int) -> tuple[int, ...]:
    """Relabel the component of `start` by BFS discovery over (B, W, E).

    The trace lists, for each discovered label in discovery order, the
    discovery indices of its three partners.  Two starts yield equal traces
    exactly when some label bijection maps one rooted component to the
    other, which is what canonical forms minimize over.
    """
    b, w, e = m.beta, m.omega, m.eps
    pos = {start: 0}
    order = [start]
    i = 0
    while i < len(order):
        x = order[i]
        i += 1
        for y in (b(x), w(x), e(x)):
            if y not in pos:
                pos[y] = len(order)
                order.append(y)
    out = []
    for x in order:
        out.append(pos[b(x)])
        out.append(pos[w(x)])
        out.append(pos[e(x)])
    return tuple(out)


def canonical_form(m: NonOrientedMap, rooted: bool = False) -> bytes:
    """Canonical byte string: equal iff the maps are label-isomorphic.

    Per component, the minimum BFS trace over all starting labels (for the
    rooted form the root's component starts at the root only); component
    encodings are sorted.
    """
    if rooted and m.root is None:
        raise MapError("rooted canonical form requires a root")
    ids, count = m._component_data
    comps: list[list[int]] = [[] for _ in range(count)]
    for i, cid in enumerate(ids):
        comps[cid].append(m.labels[i])
    root_trace = None
    rest = []
    for comp in comps:
        if rooted and m.root in comp:
            root_trace = _component_trace(m, m.root)
        else:
            rest.append(min(_component_trace(m, s) for s in comp))
    rest.sort()
    if rooted:
        payload = ("R", root_trace, tuple(rest))
    else:
        payload = ("U", tuple(rest))
    return repr(payload).encode()


def bicolored_graph(m: NonOrientedMap) -> BicoloredGraph:
    b, w, e = m._arrays
    black_ids, blacks = kernels.orbit_ids2(b, e)
    white_ids, whites = kernels.orbit_ids2(w, e)
    idx = m._index
    edges = tuple(sorted(
        (black_ids[idx[a]], white_ids[idx[a]]) for a, _ in m.eps.pairs
    ))
    return BicoloredGraph(blacks, whites, edges)


def graph_class(m: NonOrientedMap) -> BicoloredGraphClass:
    return canonical_graph_class(bicolored_graph(m))


# -- JSON interchange and shipped fixtures --------------------------------


def map_to_json_obj(m: NonOrientedMap) -> dict:
    obj = {
        "labels": list(m.labels),
        "B": [list(p) for p in m.beta.pairs],
        "W": [list(p) for p in m.omega.pairs],
        "E": [list(p) for p in m.eps.pairs],
    }
    if m.root is not None:
        obj["root"] = m.root
    return obj


def map_from_json_obj(obj: dict) -> NonOrientedMap:
    m = NonOrientedMap.from_pairs(obj["B"], obj["W"], obj["E"],
                                  obj.get("root"))
    labels = obj.get("labels")
    if labels is not None and tuple(sorted(labels)) != m.labels:
        raise MapError("label list does not match the pairings")
    return m


def load_fixture(name: str) -> NonOrientedMap:
    """Shipped example maps: 'klein' (Klein bottle) and 'projective' (RP2)."""
    from importlib.resources import files

    path = files("monmap.data").joinpath(f"{name.lower()}.json")
    try:
        text = path.read_text()
    except FileNotFoundError:
        raise MapError(f"unknown fixture {name!r}") from None
    return map_from_json_obj(json.loads(text))
