"""Oriented maps as pairs of permutations, and the bridge to involution maps.

An oriented map with n labeled edges is a pair (sigma1, sigma2) of
permutations of [n]: sigma1 gives the counterclockwise order of edges
around white vertices, sigma2 around black vertices.  Faces are the cycles
of sigma2 o sigma1 (sigma1 applied first); the convention is fixed once and
validated by Euler characteristics of known embeddings.

``side_label`` converts an oriented map into an orientable involution map
by giving each edge two side labels, read counterclockwise around its white
endpoint.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Optional

from .maps import (BicoloredGraph, BicoloredGraphClass, MapError,
                   NonOrientedMap, Pairing, canonical_graph_class)


def _perm_from_cycles(n: int, cycles) -> tuple[int, ...]:
    """Build a 0-based image tuple from 1-based cycles."""
    img = list(range(n))
    seen = set()
    for cyc in cycles:
        for i, a in enumerate(cyc):
            a = int(a)
            if not 1 <= a <= n:
                raise MapError(f"cycle entry {a} outside 1..{n}")
            if a in seen:
                raise MapError(f"label {a} repeated in cycles")
            seen.add(a)
            img[a - 1] = int(cyc[(i + 1) % len(cyc)]) - 1
    return tuple(img)


def perm_cycles(perm: tuple[int, ...]) -> tuple[tuple[int, ...], ...]:
    """Disjoint cycles of an image tuple, 1-based, fixed points included."""
    seen = [False] * len(perm)
    cycles = []
    for s in range(len(perm)):
        if seen[s]:
            continue
        cyc = []
        x = s
        while not seen[x]:
            seen[x] = True
            cyc.append(x + 1)
            x = perm[x]
        cycles.append(tuple(cyc))
    return tuple(cycles)


def _compose(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    """(a o b): apply b first."""
    return tuple(a[b[i]] for i in range(len(a)))


@dataclass(frozen=True)
class OrientedStructure:
    whites: int
    blacks: int
    faces: int
    components: int
    euler: int
    genus: Optional[int]
    component_genera: tuple[int, ...]

    @property
    def vertices(self) -> int:
        return self.whites + self.blacks


class OrientedMap:
    """Oriented bicolored map with edges labeled 1..n."""

    __slots__ = ("n", "sigma1", "sigma2", "root", "__dict__")

    def __init__(self, sigma1, sigma2, root: Optional[int] = None):
        s1 = tuple(sigma1)
        s2 = tuple(sigma2)
        n = len(s1)
        if len(s2) != n:
            raise MapError("sigma1 and sigma2 must act on the same set")
        for s in (s1, s2):
            if sorted(s) != list(range(n)):
                raise MapError("not a permutation of 0..n-1")
        if root is not None and not 1 <= root <= n:
            raise MapError(f"root edge {root} outside 1..{n}")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "sigma1", s1)
        object.__setattr__(self, "sigma2", s2)
        object.__setattr__(self, "root", root)

    def __setattr__(self, name, value):
        raise AttributeError("OrientedMap values are immutable")

    @classmethod
    def from_cycles(cls, n: int, cycles1, cycles2,
                    root: Optional[int] = None) -> "OrientedMap":
        return cls(_perm_from_cycles(n, cycles1), _perm_from_cycles(n, cycles2),
                   root)

    @cached_property
    def white_cycles(self):
        return perm_cycles(self.sigma1)

    @cached_property
    def black_cycles(self):
        return perm_cycles(self.sigma2)

    @cached_property
    def face_cycles(self):
        return perm_cycles(_compose(self.sigma2, self.sigma1))

    def __eq__(self, other):
        if isinstance(other, OrientedMap):
            return (self.sigma1, self.sigma2, self.root) == (
                other.sigma1, other.sigma2, other.root)
        return NotImplemented

    def __hash__(self):
        return hash((self.sigma1, self.sigma2, self.root))

    def __repr__(self):
        return (f"OrientedMap(sigma1={self.white_cycles}, "
                f"sigma2={self.black_cycles}, root={self.root})")


def is_transitive(m: OrientedMap) -> bool:
    """True iff <sigma1, sigma2> has a single orbit on the edge set."""
    if m.n == 0:
        raise MapError("transitivity needs at least one edge")
    return _orbit_count(m) == 1


def _orbit_count(m: OrientedMap) -> int:
    parent = list(range(m.n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for perm in (m.sigma1, m.sigma2):
        for i, j in enumerate(perm):
            ri, rj = find(i), find(j)
            if ri != rj:
                parent[ri] = rj
    return sum(1 for i in range(m.n) if find(i) == i)


def oriented_structure(m: OrientedMap) -> OrientedStructure:
    if m.n == 0:
        raise MapError("structure of the empty oriented map is undefined")
    whites = len(m.white_cycles)
    blacks = len(m.black_cycles)
    n_faces = len(m.face_cycles)
    comps = _orbit_count(m)
    euler = n_faces - m.n + whites + blacks
    genera = []
    if comps == 1:
        genera.append((2 - euler) // 2)
    else:
        for edges in _component_edge_sets(m):
            sub = _restrict(m, edges)
            genera.append((2 - (len(sub.face_cycles) - sub.n
                                + len(sub.white_cycles)
                                + len(sub.black_cycles))) // 2)
    genus = genera[0] if comps == 1 else None
    return OrientedStructure(whites, blacks, n_faces, comps, euler, genus,
                             tuple(genera))


def _component_edge_sets(m: OrientedMap):
    parent = list(range(m.n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for perm in (m.sigma1, m.sigma2):
        for i, j in enumerate(perm):
            ri, rj = find(i), find(j)
            if ri != rj:
                parent[ri] = rj
    comps: dict[int, list[int]] = {}
    for e in range(m.n):
        comps.setdefault(find(e), []).append(e + 1)
    return [comps[k] for k in sorted(comps)]


def _restrict(m: OrientedMap, edges: list[int]) -> OrientedMap:
    pos = {e: i for i, e in enumerate(edges)}
    s1 = tuple(pos[m.sigma1[e - 1] + 1] for e in edges)
    s2 = tuple(pos[m.sigma2[e - 1] + 1] for e in edges)
    return OrientedMap(s1, s2)


def default_side_labeling(n: int) -> dict[tuple[int, int], int]:
    """The straightforward bijection (k,1) -> 2k-1, (k,2) -> 2k."""
    f = {}
    for k in range(1, n + 1):
        f[(k, 1)] = 2 * k - 1
        f[(k, 2)] = 2 * k
    return f


def side_label(m: OrientedMap, f=None) -> NonOrientedMap:
    """Read off edge-side labels and return the involution-triple map.

    ``f`` is a bijection from [n] x {1,2} onto 2n labels (mapping or
    callable); side 2 of edge k is followed counterclockwise around k's
    white endpoint by side 1 of the next edge.  The result is orientable,
    has the same underlying bicolored graph, and is connected exactly when
    the permutation pair is transitive.
    """
    if f is None:
        f = default_side_labeling(m.n)
    if isinstance(f, dict):
        fd = dict(f)
    else:
        fd = {(k, s): f(k, s) for k in range(1, m.n + 1) for s in (1, 2)}
    values = sorted(fd.values())
    if len(set(values)) != 2 * m.n:
        raise MapError("side labeling is not a bijection")
    beta = []
    omega = []
    eps = []
    for k in range(1, m.n + 1):
        s2k = m.sigma2[k - 1] + 1
        s1k = m.sigma1[k - 1] + 1
        beta.append((fd[(k, 1)], fd[(s2k, 2)]))
        omega.append((fd[(k, 2)], fd[(s1k, 1)]))
        eps.append((fd[(k, 1)], fd[(k, 2)]))
    root = fd[(m.root, 1)] if m.root is not None else None
    return NonOrientedMap(Pairing(beta), Pairing(omega), Pairing(eps), root)


def bicolored_graph_oriented(m: OrientedMap) -> BicoloredGraph:
    white_of = {}
    for i, cyc in enumerate(m.white_cycles):
        for x in cyc:
            white_of[x] = i
    black_of = {}
    for i, cyc in enumerate(m.black_cycles):
        for x in cyc:
            black_of[x] = i
    edges = tuple(sorted((black_of[k], white_of[k]) for k in range(1, m.n + 1)))
    return BicoloredGraph(len(m.black_cycles), len(m.white_cycles), edges)


def graph_class_oriented(m: OrientedMap) -> BicoloredGraphClass:
    return canonical_graph_class(bicolored_graph_oriented(m))


def oriented_to_json_obj(m: OrientedMap) -> dict:
    obj = {
        "n": m.n,
        "sigma1": [list(c) for c in m.white_cycles],
        "sigma2": [list(c) for c in m.black_cycles],
    }
    if m.root is not None:
        obj["root"] = m.root
    return obj


def oriented_from_json_obj(obj: dict) -> OrientedMap:
    return OrientedMap.from_cycles(int(obj["n"]), obj["sigma1"], obj["sigma2"],
                                   obj.get("root"))
