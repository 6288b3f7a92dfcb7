"""Glue traced faces into a map and measure its combinatorial symmetry.

A candidate polyhedron is a set of polygonal faces spanning every vertex of a
seed solid.  ``assemble`` performs the structural checks (connectivity, each
edge in exactly two faces, uniform vertex degree, no two faces meeting along
consecutive edges) and builds the flag structure: one flag per incident
(vertex, edge, face) triple, with the three adjacency involutions that swap
one component at a time.  On top of that live the quantities the
classification needs — the combinatorial automorphism count, the point
symmetries that survive as map automorphisms, the type {p,q} with skew
polygon length r, orientability and genus.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Sequence, Tuple

from .seeds import Seed
from .tracer import face_planarity

Cycle = Tuple[int, ...]
Edge = Tuple[int, int]
Flag = Tuple[int, Edge, int]


class MapRejection(Exception):
    """A candidate failed a structural or symmetry test."""

    def __init__(self, stage: str, diagnosis: str, detail: str = ""):
        super().__init__(f"{diagnosis}: {detail}" if detail else diagnosis)
        self.stage = stage
        self.diagnosis = diagnosis
        self.detail = detail


def canonical_cycle(cycle: Sequence[int]) -> Cycle:
    """Least rotation over both traversal directions: identity of a face."""
    seq = tuple(cycle)
    best = seq
    for cand in (seq, seq[::-1]):
        for i in range(len(cand)):
            rot = cand[i:] + cand[:i]
            if rot < best:
                best = rot
    return best


def face_orbit(s: Seed, boundary: Sequence[int]) -> Tuple[Cycle, ...]:
    """All rotation images of one face, deduplicated as canonical cycles."""
    out = {canonical_cycle([perm[v] for v in boundary]) for perm in s.rotation_perms}
    return tuple(sorted(out))


def _edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass
class PolyMap:
    seed_name: str
    faces: Tuple[Cycle, ...]
    edges: Tuple[Edge, ...]
    degree: int
    flags: Tuple[Flag, ...]
    flag_index: Dict[Flag, int]
    adj0: Tuple[int, ...]
    adj1: Tuple[int, ...]
    adj2: Tuple[int, ...]

    @property
    def f_vector(self) -> Tuple[int, int, int]:
        return (len({v for e in self.edges for v in e}), len(self.edges), len(self.faces))


def assemble(s: Seed, boundaries: Sequence[Sequence[int]]) -> PolyMap:
    """Build the flag structure, or raise MapRejection with a diagnosis."""
    faces = tuple(sorted({canonical_cycle(b) for b in boundaries}))
    for f in faces:
        # A face visiting a vertex twice leaves "the other edge at v" ambiguous.
        if len(set(f)) != len(f):
            raise MapRejection("flags", "Rho1IllDefined", f"face {f} revisits a vertex")

    edge_faces: Dict[Edge, List[int]] = {}
    for fi, f in enumerate(faces):
        for i, v in enumerate(f):
            edge_faces.setdefault(_edge(f[i - 1], v), []).append(fi)

    # Connectivity first: a disjoint union of smaller polyhedra can pass every
    # local test, so it must not survive to the flag stage.
    neigh: Dict[int, List[int]] = {v: [] for v in range(len(s.vertices))}
    for (u, v) in edge_faces:
        neigh[u].append(v)
        neigh[v].append(u)
    reached = {0}
    stack = [0]
    while stack:
        for w in neigh[stack.pop()]:
            if w not in reached:
                reached.add(w)
                stack.append(w)
    if len(reached) != len(s.vertices):
        raise MapRejection(
            "assembly", "CompoundDisconnected",
            f"{len(reached)} of {len(s.vertices)} vertices in one component")

    for e, fs in edge_faces.items():
        if len(fs) != 2:
            raise MapRejection("assembly", "EdgeNotInTwoFaces",
                               f"edge {e} lies in {len(fs)} face(s)")

    degrees = {v: len(ns) for v, ns in neigh.items()}
    if len(set(degrees.values())) != 1:
        raise MapRejection("assembly", "WrongVertexDegree",
                           f"degrees {sorted(set(degrees.values()))}")

    for fi, f in enumerate(faces):
        p = len(f)
        for i in range(p):
            e1 = _edge(f[i - 1], f[i])
            e2 = _edge(f[i], f[(i + 1) % p])
            o1 = [x for x in edge_faces[e1] if x != fi]
            o2 = [x for x in edge_faces[e2] if x != fi]
            if o1 == o2:
                raise MapRejection(
                    "assembly", "ConsecutiveSharedEdges",
                    f"faces {fi} and {o1[0]} share both edges at vertex {f[i]}")

    flags: List[Flag] = []
    for fi, f in enumerate(faces):
        p = len(f)
        for i in range(p):
            flags.append((f[i], _edge(f[i - 1], f[i]), fi))
            flags.append((f[i], _edge(f[i], f[(i + 1) % p]), fi))
    flag_index = {t: k for k, t in enumerate(flags)}
    assert len(flag_index) == 4 * len(edge_faces)

    adj0: List[int] = []
    adj1: List[int] = []
    adj2: List[int] = []
    for (v, e, fi) in flags:
        u = e[0] if e[1] == v else e[1]
        adj0.append(flag_index[(u, e, fi)])
        f = faces[fi]
        i = f.index(v)
        e_prev = _edge(f[i - 1], v)
        e_next = _edge(v, f[(i + 1) % len(f)])
        adj1.append(flag_index[(v, e_next if e == e_prev else e_prev, fi)])
        fa, fb = edge_faces[e]
        adj2.append(flag_index[(v, e, fb if fi == fa else fa)])

    # The flag graph itself must be connected too; a pinched vertex passes the
    # vertex-graph test but splits the surface.
    seen = {0}
    stack = [0]
    while stack:
        k = stack.pop()
        for nxt in (adj0[k], adj1[k], adj2[k]):
            if nxt not in seen:
                seen.add(nxt)
                stack.append(nxt)
    if len(seen) != len(flags):
        raise MapRejection("assembly", "CompoundDisconnected",
                           f"flag graph splits: {len(seen)} of {len(flags)} flags")

    return PolyMap(
        seed_name=s.name,
        faces=faces,
        edges=tuple(sorted(edge_faces)),
        degree=degrees[0],
        flags=tuple(flags),
        flag_index=flag_index,
        adj0=tuple(adj0),
        adj1=tuple(adj1),
        adj2=tuple(adj2),
    )


def automorphisms(pm: PolyMap) -> List[Tuple[int, ...]]:
    """Every symmetry of the flag graph, as a flag permutation.

    An automorphism is fixed by the image of flag 0; each candidate image is
    propagated across the three adjacencies and kept iff no conflict arises.
    The map is combinatorially regular exactly when every flag works.
    """
    adjs = (pm.adj0, pm.adj1, pm.adj2)
    n = len(pm.flags)
    out: List[Tuple[int, ...]] = []
    for target in range(n):
        image = [-1] * n
        image[0] = target
        stack = [0]
        ok = True
        while stack and ok:
            a = stack.pop()
            for adj in adjs:
                b, tb = adj[a], adj[image[a]]
                if image[b] == -1:
                    image[b] = tb
                    stack.append(b)
                elif image[b] != tb:
                    ok = False
                    break
        if ok and image.count(-1) == 0 and len(set(image)) == n:
            out.append(tuple(image))
    return out


def regularity_diagnosis(pm: PolyMap, auts: Sequence[Tuple[int, ...]]) -> str:
    """Why a non-flag-transitive map fails, as precisely as possible.

    Flag-transitivity needs an automorphism onto every flag; the minimal
    witnesses are the three reflections of a base flag.  If the adj1-image is
    the unreachable one, the vertex/face-fixing edge swap has no realization.
    """
    targets = {im[0] for im in auts}
    if pm.adj1[0] not in targets:
        return "Rho1IllDefined"
    return "NotRegular"


def preserving_group_indices(s: Seed, pm: PolyMap) -> List[int]:
    """Indices into s.group of the point symmetries fixing the face set."""
    face_set = set(pm.faces)
    out = []
    for gi, perm in enumerate(s.group_perms):
        if all(canonical_cycle([perm[v] for v in f]) in face_set for f in pm.faces):
            out.append(gi)
    return out


def induced_flag_perm(s: Seed, pm: PolyMap, gi: int) -> Tuple[int, ...]:
    """Flag permutation induced by the point symmetry s.group[gi]."""
    perm = s.group_perms[gi]
    fidx = {f: i for i, f in enumerate(pm.faces)}
    fmap = [fidx[canonical_cycle([perm[v] for v in f])] for f in pm.faces]
    return tuple(
        pm.flag_index[(perm[v], _edge(perm[e[0]], perm[e[1]]), fmap[fi])]
        for (v, e, fi) in pm.flags)


def orbit_count(n: int, perms: Sequence[Tuple[int, ...]]) -> int:
    """Number of orbits of {0..n-1} under a set of permutations."""
    seen = [False] * n
    orbits = 0
    for start in range(n):
        if seen[start]:
            continue
        orbits += 1
        stack = [start]
        seen[start] = True
        while stack:
            x = stack.pop()
            for p in perms:
                y = p[x]
                if not seen[y]:
                    seen[y] = True
                    stack.append(y)
    return orbits


def face_orbit_count(s: Seed, pm: PolyMap, rotation_only: bool) -> int:
    """Face orbits under the rotation group or the full point group."""
    perms = s.rotation_perms if rotation_only else s.group_perms
    fidx = {f: i for i, f in enumerate(pm.faces)}
    fperms = [
        tuple(fidx[canonical_cycle([perm[v] for v in f])] for f in pm.faces)
        for perm in perms
        if all(canonical_cycle([perm[v] for v in f]) in fidx for f in pm.faces)
    ]
    return orbit_count(len(pm.faces), fperms)


def _compose(*perms: Sequence[int]) -> Tuple[int, ...]:
    """Left-to-right composition: apply perms[0] first."""
    n = len(perms[0])
    out = list(range(n))
    for k in range(n):
        x = k
        for p in perms:
            x = p[x]
        out[k] = x
    return tuple(out)


def _cycle_lengths(perm: Sequence[int]) -> set:
    lens = set()
    seen = [False] * len(perm)
    for start in range(len(perm)):
        if seen[start]:
            continue
        x, ln = start, 0
        while not seen[x]:
            seen[x] = True
            x = perm[x]
            ln += 1
        lens.add(ln)
    return lens


@dataclass(frozen=True)
class MapType:
    p: int
    q: int
    r: int
    orientable: bool
    genus: int
    euler: int

    @property
    def label(self) -> str:
        return "{%d,%d}_%d" % (self.p, self.q, self.r)


def map_type(pm: PolyMap) -> MapType:
    """Type {p,q}, skew polygon length r, orientability, and genus.

    Walking adj0 then adj1 advances one edge along a face boundary; adj1 then
    adj2 pivots around a vertex; composing all three advances along a zigzag
    that alternates sides.  Regularity makes each cycle structure uniform.
    """
    p_lens = _cycle_lengths(_compose(pm.adj0, pm.adj1))
    q_lens = _cycle_lengths(_compose(pm.adj1, pm.adj2))
    r_lens = _cycle_lengths(_compose(pm.adj0, pm.adj1, pm.adj2))
    if len(p_lens) != 1 or len(q_lens) != 1 or len(r_lens) != 1:
        raise MapRejection("type", "NotRegular",
                           f"mixed cycle structure p={sorted(p_lens)} "
                           f"q={sorted(q_lens)} r={sorted(r_lens)}")
    p, q, r = p_lens.pop(), q_lens.pop(), r_lens.pop()

    # Orientable maps 2-color their flags with adjacent flags distinct.
    color = [-1] * len(pm.flags)
    color[0] = 0
    stack = [0]
    orientable = True
    while stack and orientable:
        k = stack.pop()
        for adj in (pm.adj0, pm.adj1, pm.adj2):
            nxt = adj[k]
            if color[nxt] == -1:
                color[nxt] = 1 - color[k]
                stack.append(nxt)
            elif color[nxt] == color[k]:
                orientable = False
                break

    f0, f1, f2 = pm.f_vector
    euler = f0 - f1 + f2
    genus = (2 - euler) // 2 if orientable else 2 - euler
    return MapType(p=p, q=q, r=r, orientable=orientable, genus=genus, euler=euler)


def sigma1_squared_realized(s: Seed, pm: PolyMap) -> bool:
    """Is the two-step rotation of every face boundary a rotation of the seed?"""
    for f in pm.faces:
        p = len(f)
        want = {f[i]: f[(i + 2) % p] for i in range(p)}
        if not any(all(perm[v] == w for v, w in want.items())
                   for perm in s.rotation_perms):
            return False
    return True


def edge_stabilizer_kinds(s: Seed, pm: PolyMap) -> set:
    """Classify the nontrivial face-set-preserving stabilizer of each edge.

    Returns the set of kinds seen across all edges: "half-turn" (det +1,
    trace -1), "reflection" (det -1, trace +1), "inversion", or a count tag
    when the stabilizer order is not 2.
    """
    keep = preserving_group_indices(s, pm)
    kinds = set()
    for (u, v) in pm.edges:
        elems = [gi for gi in keep
                 if {s.group_perms[gi][u], s.group_perms[gi][v]} == {u, v}]
        if len(elems) != 2:
            kinds.add(f"order-{len(elems)}")
            continue
        mat = next(s.group[gi] for gi in elems
                   if s.group_perms[gi] != tuple(range(len(s.vertices))))
        d, t = mat.det().sign(), mat.trace()
        if d > 0 and t == -1:
            kinds.add("half-turn")
        elif d < 0 and t == 1:
            kinds.add("reflection")
        elif d < 0 and t == -3:
            kinds.add("inversion")
        else:
            kinds.add("other")
    return kinds


def planar_faces(s: Seed, pm: PolyMap) -> bool:
    return all(face_planarity(s, f) for f in pm.faces)
