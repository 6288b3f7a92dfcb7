"""The five admissible vertex orbits and their symmetry groups.

A *seed* is one of the five centrally symmetric solids whose vertex set can
carry a vertex-transitive regular polyhedron of index two: the cube,
cuboctahedron, icosahedron, dodecahedron and icosidodecahedron.  All are
built at Euclidean edge length 2 so that every coordinate lives in
Z[phi] or Z[sqrt(2)] and antipodes are exact negatives.

Symmetry groups are not hard-coded: each rotation group is generated by the
coordinate 3-cycle (x,y,z) -> (z,x,y) together with one face (or vertex
figure) rotation solved exactly from a 4-point cycle, then closed by
multiplication.  The full group adjoins central inversion.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Dict, FrozenSet, List, Sequence, Tuple

from .exact import Mat3, PHI, QuadExt, Vec3, triple

SEED_NAMES = (
    "cube",
    "cuboctahedron",
    "icosahedron",
    "dodecahedron",
    "icosidodecahedron",
)

# Euclidean squared edge length per seed; the metric module rescales all
# path lengths so that one edge counts as 1.  The cuboctahedron keeps the
# integer coordinates (+-1,+-1,0), hence the shorter edge.
EDGE_NORM2 = {
    "cube": QuadExt(4),
    "cuboctahedron": QuadExt(2),
    "icosahedron": QuadExt(4),
    "dodecahedron": QuadExt(4),
    "icosidodecahedron": QuadExt(4),
}

_ROTATION_ORDER = {
    "cube": 24,
    "cuboctahedron": 24,
    "icosahedron": 60,
    "dodecahedron": 60,
    "icosidodecahedron": 60,
}


@dataclass(frozen=True)
class Seed:
    name: str
    family: str  # "platonic" | "quasiregular"
    edge_norm2: QuadExt
    vertices: Tuple[Vec3, ...]
    neighbors: Tuple[Tuple[int, ...], ...]
    edges: FrozenSet[FrozenSet[int]]
    faces: Tuple[Tuple[int, ...], ...]  # CCW as seen from outside
    rotations: Tuple[Mat3, ...]
    group: Tuple[Mat3, ...]  # rotations followed by their central inversions
    rotation_perms: Tuple[Tuple[int, ...], ...]
    group_perms: Tuple[Tuple[int, ...], ...]
    antipode: Tuple[int, ...]

    @property
    def index_of(self) -> Dict[Vec3, int]:
        return _index_map(self.vertices)

    @property
    def degree(self) -> int:
        return len(self.neighbors[0])

    def __repr__(self):
        return f"Seed({self.name}: {len(self.vertices)} vertices, |G|={len(self.group)})"


@lru_cache(maxsize=None)
def _index_map(vertices: Tuple[Vec3, ...]) -> Dict[Vec3, int]:
    return {v: i for i, v in enumerate(vertices)}


def _cyclic(t):
    a, b, c = t
    return [(a, b, c), (c, a, b), (b, c, a)]


def _raw_vertices(name: str) -> List[Vec3]:
    one = QuadExt(1)
    phi = PHI
    phi2 = PHI * PHI
    pts = set()
    if name == "cube":
        for signs in itertools.product((1, -1), repeat=3):
            pts.add(tuple(QuadExt(s) for s in signs))
    elif name == "cuboctahedron":
        for sa, sb in itertools.product((1, -1), repeat=2):
            for t in set(itertools.permutations((sa * one, sb * one, QuadExt(0)))):
                pts.add(t)
    elif name == "icosahedron":
        for sa, sb in itertools.product((1, -1), repeat=2):
            for t in _cyclic((QuadExt(0), sa * one, sb * phi)):
                pts.add(t)
    elif name == "dodecahedron":
        for sa, sb in itertools.product((1, -1), repeat=2):
            for t in _cyclic((QuadExt(0), sa * one, sb * phi2)):
                pts.add(t)
        for signs in itertools.product((1, -1), repeat=3):
            pts.add(tuple(s * phi for s in signs))
    elif name == "icosidodecahedron":
        for s in (1, -1):
            for t in _cyclic((QuadExt(0), QuadExt(0), 2 * s * phi)):
                pts.add(t)
        for sa, sb, sc in itertools.product((1, -1), repeat=3):
            for t in _cyclic((sa * one, sb * phi, sc * phi2)):
                pts.add(t)
    else:
        raise KeyError(f"unknown seed {name!r}")
    return sorted((Vec3(p) for p in pts), key=lambda v: tuple((x.a, x.b) for x in v))


def _neighbor_lists(vertices: Sequence[Vec3], edge_norm2: QuadExt) -> List[Tuple[int, ...]]:
    n = len(vertices)
    nbrs: List[List[int]] = [[] for _ in range(n)]
    for i, j in itertools.combinations(range(n), 2):
        if (vertices[i] - vertices[j]).norm2() == edge_norm2:
            nbrs[i].append(j)
            nbrs[j].append(i)
    return [tuple(sorted(v)) for v in nbrs]


def _walk_ring(members: Sequence[int], adjacent) -> List[int]:
    """Order a set of indices into the unique cycle given an adjacency test."""
    start = min(members)
    ring = [start]
    prev = None
    while True:
        nxt = [m for m in members if m != ring[-1] and m != prev and adjacent(ring[-1], m)]
        step = min(nxt)  # at most 2 candidates on the first step, 1 after
        if step == start:
            break
        prev = ring[-1]
        ring.append(step)
    if len(ring) != len(members):
        raise ValueError("member set is not a single cycle")
    return ring


def _extract_faces(
    vertices: Sequence[Vec3],
    neighbors: Sequence[Tuple[int, ...]],
    edge_norm2: QuadExt,
) -> List[Tuple[int, ...]]:
    """All convex-hull facets, each as a CCW vertex cycle (seen from outside)."""
    n = len(vertices)
    seen: Dict[FrozenSet[int], None] = {}
    for i in range(n):
        for a, b in itertools.combinations(neighbors[i], 2):
            nrm = (vertices[a] - vertices[i]).cross(vertices[b] - vertices[i])
            if all(x.sign() == 0 for x in nrm):
                continue
            sides = [nrm.dot(vertices[j] - vertices[i]).sign() for j in range(n)]
            if any(s > 0 for s in sides) and any(s < 0 for s in sides):
                continue
            seen[frozenset(j for j in range(n) if sides[j] == 0)] = None

    edge_ok = lambda x, y: (vertices[x] - vertices[y]).norm2() == edge_norm2
    faces = []
    for members in seen:
        ring = _walk_ring(sorted(members), edge_ok)
        # the seeds are star-shaped around the origin, so a cycle is CCW from
        # outside exactly when consecutive triples have positive determinant
        if triple(vertices[ring[0]], vertices[ring[1]], vertices[ring[2]]).sign() < 0:
            ring = [ring[0]] + ring[:0:-1]
        faces.append(tuple(ring))
    faces.sort()
    return faces


def rotation_from_cycle(points: Sequence[Vec3]) -> Mat3:
    """The linear map sending p0,p1,p2 -> p1,p2,p3 for four cycle points.

    For four consecutive vertices of a planar regular polygon (or of a
    vertex figure) whose plane misses the origin this is the polygon's
    rotation; the caller is expected to validate orthogonality.
    """
    p0, p1, p2, p3 = points[:4]
    return Mat3.from_columns([p1, p2, p3]) @ Mat3.from_columns([p0, p1, p2]).inverse()


def close_under_multiplication(
    generators: Sequence[Mat3], bound: int = 130
) -> List[Mat3]:
    group = {Mat3.identity()}
    frontier = [Mat3.identity()]
    while frontier:
        nxt = []
        for m in frontier:
            for g in generators:
                prod = m @ g
                if prod not in group:
                    group.add(prod)
                    nxt.append(prod)
                    if len(group) > bound:
                        raise RuntimeError("group closure exceeded bound")
        frontier = nxt
    return sorted(group, key=lambda m: tuple((x.a, x.b) for r in m.rows for x in r))


def _rotation_generators(
    name: str, vertices: Sequence[Vec3], neighbors, faces, edge_norm2: QuadExt
) -> List[Mat3]:
    shift = Mat3([[0, 0, 1], [1, 0, 0], [0, 1, 0]])  # (x,y,z) -> (z,x,y)
    if name == "icosahedron":
        # faces are triangles: use the pentagonal vertex figure instead
        ring = _walk_ring(
            neighbors[0],
            lambda x, y: (vertices[x] - vertices[y]).norm2() == edge_norm2,
        )
        cycle_pts = [vertices[i] for i in ring[:4]]
    else:
        face = max(faces, key=len)  # square for the cube family, else pentagon
        cycle_pts = [vertices[i] for i in face[:4]]
    return [shift, rotation_from_cycle(cycle_pts)]


def _perm_of(matrix: Mat3, vertices: Sequence[Vec3], index: Dict[Vec3, int]):
    return tuple(index[matrix.apply(v)] for v in vertices)


@lru_cache(maxsize=None)
def seed(name: str) -> Seed:
    vertices = tuple(_raw_vertices(name))
    edge_norm2 = EDGE_NORM2[name]
    index = {v: i for i, v in enumerate(vertices)}
    neighbors = tuple(_neighbor_lists(vertices, edge_norm2))
    edges = frozenset(
        frozenset((i, j)) for i in range(len(vertices)) for j in neighbors[i] if i < j
    )
    faces = tuple(_extract_faces(vertices, neighbors, edge_norm2))

    generators = _rotation_generators(name, vertices, neighbors, faces, edge_norm2)
    vertex_set = set(vertices)
    for g in generators:
        if not g.is_orthogonal() or g.det() != QuadExt(1):
            raise RuntimeError(f"{name}: generator is not a rotation")
        if {g.apply(v) for v in vertices} != vertex_set:
            raise RuntimeError(f"{name}: generator does not preserve the vertex set")
    rotations = tuple(close_under_multiplication(generators))
    if len(rotations) != _ROTATION_ORDER[name]:
        raise RuntimeError(
            f"{name}: expected {_ROTATION_ORDER[name]} rotations, got {len(rotations)}"
        )
    group = rotations + tuple(-m for m in rotations)

    rotation_perms = tuple(_perm_of(m, vertices, index) for m in rotations)
    group_perms = rotation_perms + tuple(
        _perm_of(-m, vertices, index) for m in rotations
    )
    antipode = tuple(index[-v] for v in vertices)

    family = (
        "quasiregular"
        if name in ("cuboctahedron", "icosidodecahedron")
        else "platonic"
    )
    return Seed(
        name=name,
        family=family,
        edge_norm2=edge_norm2,
        vertices=vertices,
        neighbors=neighbors,
        edges=edges,
        faces=faces,
        rotations=rotations,
        group=group,
        rotation_perms=rotation_perms,
        group_perms=group_perms,
        antipode=antipode,
    )


def face_of_vertices(s: Seed, members: FrozenSet[int]) -> Tuple[int, ...] | None:
    """The seed face with exactly this vertex set, if one exists."""
    for f in s.faces:
        if frozenset(f) == members:
            return f
    return None
