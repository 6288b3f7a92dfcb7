"""Edge-length metrics on the seeds, admissible lengths, and orientation type.

Distances between seed vertices are measured in units of the seed edge.  On
the Platonic seeds this is the graph distance along edges; on the two
quasiregular seeds paths may also run along diagonals of square/pentagon
faces, each counting d (= sqrt(2) for the cuboctahedron, the golden ratio
for the icosidodecahedron).  A diagonal of a triangle is just an edge, so
triangles contribute nothing extra.  Every distance is m + n*d with a
unique pair of non-negative integers (d is irrational), represented as
``EdgeLength(m, n)``.
"""

from __future__ import annotations

import heapq
import itertools
from functools import lru_cache
from typing import Dict, List, NamedTuple, Optional, Sequence, Tuple

from .exact import PHI, QuadExt, SQRT2
from .seeds import Seed, seed


class EdgeLength(NamedTuple):
    m: int
    n: int

    def value(self, d: Optional[QuadExt]) -> QuadExt:
        out = QuadExt(self.m)
        if self.n:
            if d is None:
                raise ValueError("diagonal length on a seed without diagonals")
            out = out + self.n * d
        return out

    @property
    def label(self) -> str:
        if self.n == 0:
            return str(self.m)
        dpart = "d" if self.n == 1 else f"{self.n}d"
        return dpart if self.m == 0 else f"{self.m}+{dpart}"

    def __repr__(self):
        return f"EdgeLength({self.label})"


def parse_length(text: str) -> EdgeLength:
    """Inverse of EdgeLength.label, accepting e.g. '2', 'd', '2d', '1+d'."""
    text = text.strip()
    m = n = 0
    for part in text.split("+"):
        part = part.strip()
        if part.endswith("d"):
            coeff = part[:-1]
            n += int(coeff) if coeff else 1
        else:
            m += int(part)
    if (m, n) == (0, 0):
        raise ValueError(f"not a length: {text!r}")
    return EdgeLength(m, n)


def diagonal_constant(s: Seed) -> Optional[QuadExt]:
    """Length of a square/pentagon face diagonal in edge units, if any."""
    if s.name == "cuboctahedron":
        return SQRT2
    if s.name == "icosidodecahedron":
        return PHI
    return None


def _moves(s: Seed) -> List[Tuple[int, int, EdgeLength]]:
    moves = [(i, j, EdgeLength(1, 0)) for e in s.edges for i, j in (sorted(e),)]
    if s.family == "quasiregular":
        for face in s.faces:
            k = len(face)
            if k < 4:
                continue
            # vertices two apart along a square or pentagon face
            diagonals = {
                frozenset((face[i], face[(i + 2) % k])) for i in range(k)
            }
            for pair in diagonals:
                i, j = sorted(pair)
                moves.append((i, j, EdgeLength(0, 1)))
    return moves


@lru_cache(maxsize=None)
def distance_table(seed_name: str) -> Tuple[Tuple[EdgeLength, ...], ...]:
    """All-pairs shortest distances; entry [u][v] (diagonal holds (0,0))."""
    s = seed(seed_name)
    d = diagonal_constant(s)
    n = len(s.vertices)
    adj: List[List[Tuple[int, EdgeLength]]] = [[] for _ in range(n)]
    for i, j, w in _moves(s):
        adj[i].append((j, w))
        adj[j].append((i, w))

    rows = []
    for src in range(n):
        best: List[Optional[EdgeLength]] = [None] * n
        best[src] = EdgeLength(0, 0)
        counter = itertools.count()
        heap = [(QuadExt(0), next(counter), src, EdgeLength(0, 0))]
        while heap:
            val, _, u, length = heapq.heappop(heap)
            if best[u] != length:
                continue
            for v, w in adj[u]:
                cand = EdgeLength(length.m + w.m, length.n + w.n)
                cv = cand.value(d)
                if best[v] is None or cv < best[v].value(d):
                    best[v] = cand
                    heapq.heappush(heap, (cv, next(counter), v, cand))
        rows.append(tuple(best))  # type: ignore[arg-type]
    return tuple(rows)


def distance(s: Seed, u: int, v: int) -> EdgeLength:
    if u == v:
        raise ValueError("distance requires two distinct vertices")
    return distance_table(s.name)[u][v]


def neighbors_at(s: Seed, v: int, length: EdgeLength) -> Tuple[int, ...]:
    """All vertices at the given distance, never including the antipode."""
    row = distance_table(s.name)[v]
    anti = s.antipode[v]
    return tuple(
        w for w in range(len(s.vertices)) if w != v and w != anti and row[w] == length
    )


# ---------------------------------------------------------------------------
# admissible edge lengths


class LengthConfig(NamedTuple):
    """One admissible edge-length configuration for a candidate polyhedron."""

    seed_name: str
    lengths: Tuple[EdgeLength, ...]  # one entry, or an alternating pair
    expected_degree: int  # q of the candidate polyhedron

    @property
    def is_pair(self) -> bool:
        return len(self.lengths) == 2

    @property
    def label(self) -> str:
        return ",".join(l.label for l in self.lengths)


def _L(m, n=0):
    return EdgeLength(m, n)


_ADMISSIBLE: Dict[str, Tuple[Tuple[Tuple[EdgeLength, ...], int], ...]] = {
    # (lengths, q_P); alternating pairs list the starting length first
    "cube": (((_L(1), _L(2)), 6),),
    "dodecahedron": (
        ((_L(1), _L(4)), 6),
        ((_L(2),), 6),
        ((_L(3),), 6),
    ),
    "icosahedron": (((_L(1), _L(2)), 10),),
    "cuboctahedron": (
        ((_L(1),), 4),
        ((_L(2),), 4),
    ),
    "icosidodecahedron": (
        ((_L(1),), 4),
        ((_L(2),), 4),
        ((_L(3),), 4),
        ((_L(4),), 4),
        ((_L(0, 1),), 4),
        ((_L(0, 2),), 4),
    ),
}


def admissible_configs(seed_name: str) -> Tuple[LengthConfig, ...]:
    return tuple(
        LengthConfig(seed_name, lengths, q) for lengths, q in _ADMISSIBLE[seed_name]
    )


def all_configs() -> Tuple[LengthConfig, ...]:
    out = []
    for name in _ADMISSIBLE:
        out.extend(admissible_configs(name))
    return tuple(out)


# ---------------------------------------------------------------------------
# directed/bicolor orientation classes


DIRECTED_TABLE = {
    ("dodecahedron", _L(2)),
    ("cuboctahedron", _L(1)),
    ("icosidodecahedron", _L(1)),
    ("icosidodecahedron", _L(3)),
    ("icosidodecahedron", _L(0, 1)),
}

BICOLOR_TABLE = {
    ("dodecahedron", _L(3)),
    ("cuboctahedron", _L(2)),
    ("icosidodecahedron", _L(2)),
    ("icosidodecahedron", _L(4)),
    ("icosidodecahedron", _L(0, 2)),
}


def directed_edges_at(s: Seed, length: EdgeLength) -> List[Tuple[int, int]]:
    return [
        (u, w)
        for u in range(len(s.vertices))
        for w in neighbors_at(s, u, length)
    ]


@lru_cache(maxsize=None)
def _orbit_split(seed_name: str, length: EdgeLength):
    """Partition of directed edges at `length` into G+ transitivity classes."""
    s = seed(seed_name)
    edges = directed_edges_at(s, length)
    edge_set = set(edges)
    classes: Dict[Tuple[int, int], int] = {}
    label = 0
    for e in edges:
        if e in classes:
            continue
        stack = [e]
        classes[e] = label
        while stack:
            u, w = stack.pop()
            for p in s.rotation_perms:
                img = (p[u], p[w])
                if img not in classes:
                    if img not in edge_set:
                        raise RuntimeError("rotation left the length class")
                    classes[img] = label
                    stack.append(img)
        label += 1
    return classes, label


def orientation_type(s: Seed, length: EdgeLength) -> str:
    """'directed' or 'bicolor', computed from G+ orbits and table-checked."""
    classes, count = _orbit_split(s.name, length)
    if count != 2:
        raise RuntimeError(
            f"{s.name} length {length.label}: expected 2 directed-edge classes, got {count}"
        )
    u, w = next(iter(classes))
    computed = "directed" if classes[(u, w)] != classes[(w, u)] else "bicolor"
    table = (
        "directed"
        if (s.name, length) in DIRECTED_TABLE
        else "bicolor"
        if (s.name, length) in BICOLOR_TABLE
        else None
    )
    if table is not None and table != computed:
        raise RuntimeError(
            f"{s.name} length {length.label}: computed {computed} but table says {table}"
        )
    return computed


def same_orientation(
    s: Seed, e1: Tuple[int, int], e2: Tuple[int, int]
) -> bool:
    """True iff some rotation of the seed maps e1 to e2 as ordered pairs."""
    return any(
        (p[e1[0]], p[e1[1]]) == e2 for p in s.rotation_perms
    )


def edge_stabilizer(s: Seed, pair: Tuple[int, int]) -> List[int]:
    """Indices into s.group_perms of elements fixing the unordered pair."""
    u, w = pair
    out = []
    for k, p in enumerate(s.group_perms):
        if {p[u], p[w]} == {u, w}:
            out.append(k)
    return out
