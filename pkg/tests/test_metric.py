from __future__ import annotations

from collections import Counter

import mpmath
import pytest

from index2poly.metric import (
    EdgeLength,
    admissible_configs,
    all_configs,
    diagonal_constant,
    distance,
    edge_stabilizer,
    neighbors_at,
    orientation_type,
    parse_length,
    same_orientation,
)
from index2poly.seeds import SEED_NAMES, seed

# how many vertices sit at each length class, seen from any one vertex
DISTANCE_PROFILE = {
    "cube": {"1": 3, "2": 3, "3": 1},
    "cuboctahedron": {"1": 4, "2": 4, "d": 2, "2d": 1},
    "icosahedron": {"1": 5, "2": 5, "3": 1},
    "dodecahedron": {"1": 3, "2": 6, "3": 6, "4": 3, "5": 1},
    "icosidodecahedron": {
        "1": 4, "2": 4, "3": 4, "4": 4,
        "d": 4, "1+d": 4, "2d": 4, "3d": 1,
    },
}

# (seed, label) -> expected vertex degree, pair?, orientation class split
CONFIGS = [
    ("cube", "1,2", 6, True, None),
    ("dodecahedron", "1,4", 6, True, None),
    ("dodecahedron", "2", 6, False, "directed"),
    ("dodecahedron", "3", 6, False, "bicolor"),
    ("icosahedron", "1,2", 10, True, None),
    ("cuboctahedron", "1", 4, False, "directed"),
    ("cuboctahedron", "2", 4, False, "bicolor"),
    ("icosidodecahedron", "1", 4, False, "directed"),
    ("icosidodecahedron", "2", 4, False, "bicolor"),
    ("icosidodecahedron", "3", 4, False, "directed"),
    ("icosidodecahedron", "4", 4, False, "bicolor"),
    ("icosidodecahedron", "d", 4, False, "directed"),
    ("icosidodecahedron", "2d", 4, False, "bicolor"),
]


@pytest.mark.parametrize("name", SEED_NAMES)
def test_distance_profile(name):
    s = seed(name)
    for u in (0, len(s.vertices) // 2):
        profile = Counter(
            distance(s, u, v).label for v in range(len(s.vertices)) if v != u
        )
        assert dict(profile) == DISTANCE_PROFILE[name]


def test_distance_is_symmetric():
    s = seed("icosidodecahedron")
    for v in range(1, 30, 3):
        assert distance(s, 0, v) == distance(s, v, 0)


def test_parse_length_round_trips():
    for text in ("1", "4", "d", "2d", "1+d", "3d"):
        assert parse_length(text).label == text
    assert parse_length("2") == EdgeLength(2, 0)
    assert parse_length("d") == EdgeLength(0, 1)
    assert parse_length("1+d") == EdgeLength(1, 1)


def test_diagonal_constant_exists_only_on_quasiregular_seeds():
    assert diagonal_constant(seed("cube")) is None
    assert diagonal_constant(seed("dodecahedron")) is None
    c = diagonal_constant(seed("cuboctahedron"))
    assert c * c == 2  # square diagonal over edge
    i = diagonal_constant(seed("icosidodecahedron"))
    assert i * i == i + 1  # pentagon diagonal over edge
    mpmath.mp.dps = 30
    assert abs(float(i) - float(mpmath.phi)) < 1e-15


def test_neighbors_at_matches_profile_and_is_symmetric():
    s = seed("dodecahedron")
    two = parse_length("2")
    for v in range(20):
        ns = neighbors_at(s, v, two)
        assert len(ns) == 6
        assert all(v in neighbors_at(s, w, two) for w in ns)
        assert all(distance(s, v, w).label == "2" for w in ns)


def test_admissible_configs_table():
    rows = []
    for name in SEED_NAMES:
        for cfg in admissible_configs(name):
            ot = None if cfg.is_pair else orientation_type(seed(name), cfg.lengths[0])
            rows.append((name, cfg.label, cfg.expected_degree, cfg.is_pair, ot))
    assert sorted(rows) == sorted(CONFIGS)
    assert len(all_configs()) == 13


def test_pair_configs_use_complementary_lengths():
    by_label = {(c.seed_name, c.label): c for c in all_configs()}
    cube = by_label[("cube", "1,2")]
    assert [l.label for l in cube.lengths] == ["1", "2"]
    dode = by_label[("dodecahedron", "1,4")]
    assert [l.label for l in dode.lengths] == ["1", "4"]


def test_orientation_split_means_reversal_changes_class():
    s = seed("dodecahedron")
    # length 2 splits directed edges into two orbits: reversal switches them
    assert same_orientation(s, (0, 2), (0, 2))
    assert not same_orientation(s, (0, 2), (2, 0))
    # length 3 keeps an edge and its reverse in one orbit
    assert same_orientation(s, (0, 11), (11, 0))


def test_orientation_classes_are_rotation_invariant():
    s = seed("icosidodecahedron")
    d = parse_length("d")
    u, v = 0, neighbors_at(s, 0, d)[0]
    for p in s.rotation_perms[::9]:
        assert same_orientation(s, (u, v), (p[u], p[v]))


def test_edge_stabilizer_order():
    s = seed("dodecahedron")
    u, v = 0, s.neighbors[0][0]
    stab = edge_stabilizer(s, (u, v))
    assert len(stab) == 4  # identity, half-turn, and two reflections
