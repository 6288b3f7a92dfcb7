"""Petrie duality and the antipodal (C-) duality as constructive transforms.

Both operations take an assembled map and return a new one over the same
seed.  The Petrie dual keeps vertices and edges, replacing faces by the
zigzag polygons; the C-dual replaces every second vertex of each face
boundary with its antipode, which swaps the two edge-orientation classes
and pairs each polyhedron with one on complementary edge lengths.
"""

from __future__ import annotations

from typing import FrozenSet, List, Optional, Sequence, Set, Tuple

from .seeds import Seed
from .tracer import Word, prime
from .maps import Cycle, MapRejection, PolyMap, assemble, canonical_cycle


# ---------------------------------------------------------------------------
# Petrie dual


def petrie_polygons(pm: PolyMap) -> Tuple[Cycle, ...]:
    """The zigzag polygons: alternate left/right at every vertex.

    Walking adj0, adj1, adj2 in turn advances one edge while switching the
    face side, so each orbit of the composition projects to one polygon
    (each polygon shows up once per traversal direction; dedupe).
    """
    sigma = [pm.adj2[pm.adj1[pm.adj0[k]]] for k in range(len(pm.flags))]
    seen = [False] * len(sigma)
    out: Set[Cycle] = set()
    for start in range(len(sigma)):
        if seen[start]:
            continue
        cyc: List[int] = []
        k = start
        while not seen[k]:
            seen[k] = True
            cyc.append(pm.flags[k][0])
            k = sigma[k]
        if len(set(cyc)) != len(cyc):
            raise MapRejection("petrie", "VertexRevisit",
                               f"zigzag polygon revisits a vertex: {cyc}")
        out.add(canonical_cycle(cyc))
    return tuple(sorted(out))


def petrie_dual(s: Seed, pm: PolyMap) -> PolyMap:
    return assemble(s, petrie_polygons(pm))


# ---------------------------------------------------------------------------
# shape transformation laws

ShapePrediction = Tuple[str, FrozenSet[Word]]  # ("exact" | "contains", words)


def petrie_shape_law(words: Sequence[Word]) -> Optional[ShapePrediction]:
    """Predict the word set of the Petrie dual's faces, where a law applies.

    Two laws cover the records here: faces reading [a,a,a,a] with the mirror
    [a',a',a',a'] have zigzags reading [a,a',a,a'] and conversely; faces
    alternating a turn with the straight symbol f force an [f,f,f,f] face on
    the dual.  Anything else gets no prediction (None).
    """
    ws = frozenset(tuple(w) for w in words)
    symbols = {x for w in ws for x in w}
    f_only = frozenset({("f", "f", "f", "f")})
    if ws == f_only:
        return ("contains", f_only)  # straight-ahead is its own mirror
    for a in symbols:
        if a == "f":
            continue
        b = prime(a)
        if ws == frozenset({(a,) * 4, (b,) * 4}):
            return ("exact", frozenset({(a, b, a, b), (b, a, b, a)}))
        if ws and ws <= frozenset({(a, b, a, b), (b, a, b, a)}):
            return ("exact", frozenset({(a,) * 4, (b,) * 4}))
    if ws and all(
        w[1] == w[3] == "f" and "f" not in (w[0], w[2])
        or w[0] == w[2] == "f" and "f" not in (w[1], w[3])
        for w in ws
    ):
        return ("contains", f_only)
    return None


def holds(prediction: ShapePrediction, dual_words: Sequence[Word]) -> bool:
    kind, predicted = prediction
    actual = frozenset(tuple(w) for w in dual_words)
    return predicted == actual if kind == "exact" else predicted <= actual


# ---------------------------------------------------------------------------
# C-dual


def c_dual_face_size(s: Seed, boundary: Sequence[int]) -> int:
    """Face size after antipodal alternation: 2p, p, or p/2."""
    p = len(boundary)
    if p % 2 == 1:
        return 2 * p
    members = set(boundary)
    if any(s.antipode[v] in members for v in boundary):
        return p // 2
    return p


def _minimal_period(seq: Tuple[int, ...]) -> Tuple[int, ...]:
    n = len(seq)
    for d in range(1, n + 1):
        if n % d == 0 and all(seq[i] == seq[i % d] for i in range(n)):
            return seq[:d]
    return seq


def face_images(s: Seed, f: Cycle) -> Tuple[Cycle, ...]:
    """All antipodal-alternation images of one face boundary.

    Odd boundaries are walked twice (the alternation only closes after 2p
    steps, and both starting parities give the same doubled polygon).  Even
    boundaries admit two alternations, point reflections of each other; a
    boundary containing an antipodal vertex pair collapses each image to a
    doubled half-size polygon, which minimal-period reduction undoes.
    """
    anti = s.antipode
    p = len(f)
    if p % 2 == 1:
        doubled = tuple(
            f[i % p] if i % 2 == 0 else anti[f[i % p]] for i in range(2 * p))
        return (canonical_cycle(doubled),)
    img0 = tuple(v if i % 2 == 0 else anti[v] for i, v in enumerate(f))
    img1 = tuple(anti[v] for v in img0)
    return tuple(sorted({
        canonical_cycle(_minimal_period(img0)),
        canonical_cycle(_minimal_period(img1)),
    }))


def c_dual(s: Seed, pm: PolyMap) -> PolyMap:
    """Replace every second boundary vertex by its antipode, across the map.

    Every alternation image of every face goes in.  For an odd or collapsing
    face that is the whole story; for the remaining even faces the two images
    per face pair up two-to-two across the map (the face set is closed under
    point reflection, so the reflected image of one face recurs as an image
    of another), leaving exactly as many faces as the original.  Any failure
    to knit into a polyhedron surfaces as an assembly rejection.
    """
    sizes = {c_dual_face_size(s, f) for f in pm.faces}
    if len(sizes) != 1:
        raise MapRejection("c-dual", "InconsistentFaceSize", f"sizes {sorted(sizes)}")
    out: Set[Cycle] = set()
    for f in pm.faces:
        out.update(face_images(s, f))
    return assemble(s, tuple(sorted(out)))


def c_dual_word(word: Word) -> Word:
    """Shape transformation under the C-dual: [a,b,c,d] -> [a,b',c,d']."""
    return tuple(x if i % 2 == 0 else prime(x) for i, x in enumerate(word))  # type: ignore[return-value]
