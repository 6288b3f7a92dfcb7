"""Face tracing: direction alphabets, canonical starting edges, and the
walk that turns a four-symbol shape word into a closed polygon.

Turn labels are assigned by exact angular order around the outward vertex
axis.  For a step arriving at vertex ``v`` from ``t``, the straight-ahead
reference is the great-circle continuation through ``v`` (equivalently the
direction of ``-t``); candidates are sorted counterclockwise as seen from
outside the circumsphere, using only signs of triple products.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cmp_to_key, lru_cache
from typing import Dict, List, Optional, Sequence, Tuple

from .exact import Vec3, triple
from .metric import EdgeLength, LengthConfig, distance, distance_table, neighbors_at
from .seeds import Seed, face_of_vertices, seed

Word = Tuple[str, str, str, str]

ALPHABET_3 = ("r", "f", "l")
ALPHABET_5 = ("hr", "sr", "f", "sl", "hl")

#: mirror image of each symbol (left/right swap); f is self-paired
PRIME = {
    "r": "l",
    "l": "r",
    "f": "f",
    "hr": "hl",
    "hl": "hr",
    "sr": "sl",
    "sl": "sr",
}


def prime(symbol: str) -> str:
    return PRIME[symbol]


class TurnError(ValueError):
    """A continuation pattern the direction alphabet cannot label."""


# ---------------------------------------------------------------------------
# exact angular order of continuations


def _signed_side(v: Vec3, t: Vec3, w: Vec3) -> int:
    """-1 if w lies right of the continuation through v from t, +1 left, 0 on it."""
    return -triple(v, t, w).sign()


def _ahead_sign(v: Vec3, t: Vec3, w: Vec3) -> int:
    # sign of cos(turn angle): positive means w is on the forward half-circle
    return (t.dot(v) * v.dot(w) - v.dot(v) * t.dot(w)).sign()


def _sort_half(v: Vec3, points: List[Tuple[int, Vec3]]) -> List[int]:
    # ascending turn angle within one open half-plane around the axis v
    def cmp(a, b):
        s = triple(v, a[1], b[1]).sign()
        if s == 0:
            raise TurnError("two continuations in the same direction")
        return -s

    return [i for i, _ in sorted(points, key=cmp_to_key(cmp))]


@lru_cache(maxsize=None)
def _continuations(
    seed_name: str, tail: int, vertex: int, length: EdgeLength
) -> Tuple[Tuple[str, int], ...]:
    s = seed(seed_name)
    v = s.vertices[vertex]
    t = s.vertices[tail]
    candidates = [w for w in neighbors_at(s, vertex, length) if w != tail]
    rights: List[Tuple[int, Vec3]] = []
    lefts: List[Tuple[int, Vec3]] = []
    ahead: List[int] = []
    for w in candidates:
        wv = s.vertices[w]
        side = _signed_side(v, t, wv)
        if side < 0:
            rights.append((w, wv))
        elif side > 0:
            lefts.append((w, wv))
        elif _ahead_sign(v, t, wv) > 0:
            ahead.append(w)
        else:
            raise TurnError("continuation folds straight back along the arrival arc")
    ordered = _sort_half(v, rights) + ahead + _sort_half(v, lefts)
    if len(ahead) > 1:
        raise TurnError("multiple straight-ahead continuations")
    # Symbols are purely positional in the circular order (an f-labelled step
    # need not be geometrically straight), but when a continuation *is* exactly
    # straight it must land on the f position.
    if len(ordered) == 3:
        labels = ALPHABET_3
    elif len(ordered) == 5:
        labels = ALPHABET_5
    else:
        raise TurnError(
            f"unsupported continuation pattern at {seed_name} vertex {vertex}: "
            f"{len(rights)} right / {len(ahead)} ahead / {len(lefts)} left"
        )
    if ahead and ordered[len(ordered) // 2] != ahead[0]:
        raise TurnError("straight continuation off the middle position")
    return tuple(zip(labels, ordered))


def turn_candidates(
    s: Seed, tail: int, vertex: int, length: EdgeLength
) -> Dict[str, int]:
    """Map each direction symbol to the continuation vertex it selects."""
    return dict(_continuations(s.name, tail, vertex, length))


def turn_label(s: Seed, tail: int, vertex: int, target: int) -> str:
    """The direction symbol taking tail -> vertex -> target."""
    length = distance(s, vertex, target)
    for label, w in _continuations(s.name, tail, vertex, length):
        if w == target:
            return label
    raise TurnError(f"{target} is not an admissible continuation at {vertex}")


def config_alphabet(s: Seed, cfg: LengthConfig) -> Tuple[str, ...]:
    """The direction alphabet in force for a length configuration."""
    u, v = canonical_start(s, cfg)
    k = len(_continuations(s.name, u, v, cfg.lengths[len(cfg.lengths) > 1]))
    return ALPHABET_3 if k == 3 else ALPHABET_5


# ---------------------------------------------------------------------------
# shape words


def expand_word(symbols: Sequence[str]) -> Word:
    """Normalize a 1-, 2-, or 4-symbol spelling to the stored period 4."""
    symbols = tuple(symbols)
    if len(symbols) == 1:
        symbols = symbols * 4
    elif len(symbols) == 2:
        symbols = symbols * 2
    if len(symbols) != 4:
        raise ValueError(f"a shape word has 1, 2, or 4 symbols, got {symbols!r}")
    for sym in symbols:
        if sym not in PRIME:
            raise ValueError(f"unknown direction symbol {sym!r}")
    return symbols  # type: ignore[return-value]


def format_word(word: Sequence[str]) -> str:
    word = expand_word(word)
    if word[0] == word[2] and word[1] == word[3]:
        return f"[{word[0]},{word[1]}]"
    return "[" + ",".join(word) + "]"


def parse_word(text: str) -> Word:
    body = text.strip().lower()
    if body.startswith("[") and body.endswith("]"):
        body = body[1:-1]
    return expand_word([p.strip() for p in body.split(",") if p.strip()])


def parse_shape(text: str) -> Tuple[Word, ...]:
    """Parse '[hl,f]' or '[r,l]&[l,r]' into one or two period-4 words."""
    words = tuple(parse_word(part) for part in text.split("&"))
    if len(words) not in (1, 2):
        raise ValueError(f"a shape has one or two words, got {text!r}")
    return words


def format_shape(words: Sequence[Sequence[str]]) -> str:
    return " & ".join(format_word(w) for w in words)


# ---------------------------------------------------------------------------
# canonical starting edges


def _directed_pairs(s: Seed, length: EdgeLength) -> List[Tuple[int, int]]:
    return [
        (u, v)
        for u in range(len(s.vertices))
        for v in neighbors_at(s, u, length)
    ]


def _unique_triangle_apex(s: Seed, u: int, v: int) -> int:
    """Third vertex of the one triangular face of S containing edge {u, v}."""
    tris = [
        f for f in s.faces if len(f) == 3 and u in f and v in f
    ]
    if len(tris) != 1:
        raise ValueError("edge not on exactly one triangle")
    return next(x for x in tris[0] if x not in (u, v))


def _min_paths(s: Seed, u: int, v: int, length: EdgeLength) -> List[Tuple[int, ...]]:
    """All minimal paths u -> v realizing the metric, stepping on edges (or, for
    a pure-diagonal distance, on face diagonals)."""
    steps = EdgeLength(1, 0) if length.m else EdgeLength(0, 1)
    hops = length.m or length.n
    paths = [(u,)]
    for k in range(hops):
        remaining = EdgeLength(length.m - (k + 1) if length.m else 0,
                               length.n - (k + 1) if not length.m else 0)
        grown = []
        for p in paths:
            for w in neighbors_at(s, p[-1], steps):
                if w in p:
                    continue
                if k + 1 == hops:
                    if w == v:
                        grown.append(p + (w,))
                elif distance(s, w, v) == remaining:
                    grown.append(p + (w,))
        paths = grown
    return paths


def _pentagon_centroid(s: Seed, u: int, w: int) -> Vec3:
    """Centroid of the pentagon face whose diagonal is {u, w}."""
    for f in s.faces:
        if len(f) == 5 and u in f and w in f:
            i, j = f.index(u), f.index(w)
            if (i - j) % 5 in (2, 3):
                out = s.vertices[f[0]]
                for x in f[1:]:
                    out = out + s.vertices[x]
                return out
    raise ValueError("not a pentagon diagonal")


def _left_of_edge(s: Seed, u: int, w: int, x: Vec3) -> bool:
    # x lies left of the directed arc u -> w, viewed from outside the sphere
    return triple(s.vertices[u], s.vertices[w], x).sign() > 0


def canonical_start(s: Seed, cfg: LengthConfig) -> Tuple[int, int]:
    """A starting directed edge in the conventional orbit for this config.

    All valid representatives are equivalent under the rotation group; the
    lexicographically least one is returned for determinism.
    """
    for e in sorted(_directed_pairs(s, cfg.lengths[0])):
        if _start_ok(s, cfg, e):
            return e
    raise ValueError(f"no canonical start for {cfg}")


def _start_ok(s: Seed, cfg: LengthConfig, e: Tuple[int, int]) -> bool:
    u, v = e
    if cfg.is_pair:
        return True  # any shortest edge; the length-1 directed edges form one orbit
    length = cfg.lengths[0]
    if s.name == "dodecahedron":
        paths = _min_paths(s, u, v, length)
        if length == EdgeLength(2, 0):
            # left orientation: the two-step path bends left at its midpoint
            (path,) = paths
            w = path[1]
            return triple(s.vertices[w], s.vertices[u], s.vertices[v]).sign() < 0
        # length 3: color class of edges whose minimal path starts with a left bend
        verdicts = {
            triple(s.vertices[p[1]], s.vertices[u], s.vertices[p[2]]).sign() < 0
            for p in paths
        }
        if len(verdicts) != 1:
            raise ValueError("ambiguous bend convention on a length-3 edge")
        return verdicts.pop()
    if s.family != "quasiregular":
        raise ValueError(f"no start convention for {cfg}")
    if length == EdgeLength(1, 0):
        # the triangle of S adjoining the edge sits so that [r,r,r,r] traces it
        x = _unique_triangle_apex(s, u, v)
        return turn_label(s, u, v, x) == "r"
    if length in (EdgeLength(2, 0), EdgeLength(4, 0)):
        # color class: the triangle adjoining the first step lies left of it
        verdicts = set()
        for p in _min_paths(s, u, v, length):
            x = _unique_triangle_apex(s, p[0], p[1])
            verdicts.add(_left_of_edge(s, p[0], p[1], s.vertices[x]))
        if len(verdicts) != 1:
            raise ValueError(f"ambiguous triangle convention for {cfg}")
        return verdicts.pop()
    if length == EdgeLength(0, 2):
        # color class: the pentagon traversed by the first diagonal lies left of it
        verdicts = set()
        for p in _min_paths(s, u, v, length):
            verdicts.add(_left_of_edge(s, p[0], p[1], _pentagon_centroid(s, p[0], p[1])))
        if len(verdicts) != 1:
            raise ValueError(f"ambiguous pentagon convention for {cfg}")
        return verdicts.pop()
    if length == EdgeLength(3, 0):
        # direction class in which [r,r,r,r] closes a pentagram, not a triangle
        t = _trace(s, cfg, e, ("r", "r", "r", "r"), 40)
        return t.closed and len(t.boundary) == 5
    if length == EdgeLength(0, 1):
        # direction class in which [r,r,r,r] is a convex pentagon: closed with 5
        # vertices that are not the vertex set of a pentagon face of S
        t = _trace(s, cfg, e, ("r", "r", "r", "r"), 40)
        return (
            t.closed
            and len(t.boundary) == 5
            and face_of_vertices(s, frozenset(t.boundary)) is None
        )
    raise ValueError(f"no start convention for {cfg}")


# ---------------------------------------------------------------------------
# tracing


@dataclass(frozen=True)
class Trace:
    """Outcome of walking a shape word from a starting edge."""

    seed_name: str
    lengths: Tuple[EdgeLength, ...]
    word: Word
    start: Tuple[int, int]
    closed: bool
    boundary: Tuple[int, ...]  # the full cycle when closed, the partial walk if not
    diagnosis: Optional[str]  # None | VertexRevisit | NoClosure | OppositeVertexEdge
    planar: Optional[bool] = None

    @property
    def period(self) -> int:
        if not self.closed:
            raise ValueError("open trace has no period")
        return len(self.boundary)

    @property
    def turns(self) -> Tuple[str, ...]:
        """Turn taken at boundary[i], aligned with the closed cycle."""
        p = self.period
        return tuple(self.word[(i - 1) % 4] for i in range(p))

    @property
    def edge_lengths(self) -> Tuple[EdgeLength, ...]:
        p = self.period
        return tuple(self.lengths[i % len(self.lengths)] for i in range(p))


def _rotated(word: Word, k: int) -> Word:
    return word[k % 4 :] + word[: k % 4]  # type: ignore[return-value]


def _open(s, cfg, start, word, boundary, diagnosis) -> Trace:
    return Trace(s.name, cfg.lengths, word, start, False, tuple(boundary), diagnosis)


def _trace(
    s: Seed,
    cfg: LengthConfig,
    start: Tuple[int, int],
    word: Word,
    max_steps: int,
) -> Trace:
    lengths = cfg.lengths
    nlen = len(lengths)
    v0, v1 = start
    if distance(s, v0, v1) != lengths[0]:
        raise ValueError(f"start edge {start} does not have length {lengths[0].label}")
    path = [v0, v1]
    where = {v0: 0, v1: 1}
    i = 1
    while i <= max_steps:
        step_len = lengths[i % nlen]
        tail, here = path[-2], path[-1]
        if distance_table(s.name)[here][s.antipode[here]] == step_len:
            return _open(s, cfg, start, word, path, "OppositeVertexEdge")
        options = turn_candidates(s, tail, here, step_len)
        symbol = word[(i - 1) % 4]
        if symbol not in options:
            raise TurnError(f"symbol {symbol!r} not in alphabet at step {i}")
        nxt = options[symbol]
        if nxt == v0:
            p = i + 1
            if (
                lengths[p % nlen] == lengths[0]
                and _rotated(word, p) == word
                and turn_label(s, here, v0, v1) == word[(p - 1) % 4]
            ):
                boundary = tuple(path)
                return Trace(
                    s.name, lengths, word, start, True, boundary, None,
                    planar=face_planarity(s, boundary),
                )
            return _open(s, cfg, start, word, path + [nxt], "VertexRevisit")
        if nxt in where:
            return _open(s, cfg, start, word, path + [nxt], "VertexRevisit")
        path.append(nxt)
        where[nxt] = i + 1
        i += 1
    return _open(s, cfg, start, word, path, "NoClosure")


def trace_face(
    s: Seed,
    cfg: LengthConfig,
    start: Tuple[int, int],
    word: Sequence[str],
    max_steps: Optional[int] = None,
) -> Trace:
    """Walk `word` cyclically from `start`; close a polygon or diagnose why not.

    Closure requires returning to the start vertex with the turn there and all
    subsequent turns consistent with the cyclic word (so a word can only close
    after p steps if shifting it by p is the identity).
    """
    if max_steps is None:
        max_steps = 4 * (len(s.vertices) * cfg.expected_degree // 2)
    return _trace(s, cfg, start, expand_word(word), max_steps)


def trace_from_canonical(
    s: Seed, cfg: LengthConfig, word: Sequence[str], max_steps: Optional[int] = None
) -> Trace:
    return trace_face(s, cfg, canonical_start(s, cfg), word, max_steps)


def face_planarity(s: Seed, boundary: Sequence[int]) -> bool:
    """True iff the boundary vertices lie in a single plane (exact rank test)."""
    pts = [s.vertices[b] for b in boundary]
    base = pts[0]
    diffs = [p - base for p in pts[1:]]
    first = diffs[0]
    axis = None
    for d in diffs[1:]:
        c = first.cross(d)
        if c.norm2().sign() != 0:
            axis = c
            break
    if axis is None:
        return True  # fewer than three independent points
    return all(axis.dot(d).sign() == 0 for d in diffs)
