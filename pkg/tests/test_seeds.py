from __future__ import annotations

import pytest

from index2poly.exact import Vec3
from index2poly.seeds import SEED_NAMES, seed

# name -> (vertices, edges, faces, |rotation group|, |full group|)
COUNTS = {
    "cube": (8, 12, 6, 24, 48),
    "cuboctahedron": (12, 24, 14, 24, 48),
    "icosahedron": (12, 30, 20, 60, 120),
    "dodecahedron": (20, 30, 12, 60, 120),
    "icosidodecahedron": (30, 60, 32, 60, 120),
}


def test_seed_names():
    assert set(SEED_NAMES) == set(COUNTS)


@pytest.mark.parametrize("name", SEED_NAMES)
def test_counts(name):
    s = seed(name)
    nv, ne, nf, nrot, ngrp = COUNTS[name]
    assert len(s.vertices) == nv
    assert len(s.edges) == ne
    assert len(s.faces) == nf
    assert len(s.rotations) == len(s.rotation_perms) == nrot
    assert len(s.group) == len(s.group_perms) == ngrp
    assert sum(len(f) for f in s.faces) == 2 * ne


@pytest.mark.parametrize("name", SEED_NAMES)
def test_all_edges_have_the_stated_squared_length(name):
    s = seed(name)
    for e in s.edges:
        u, v = sorted(e)
        assert (s.vertices[u] - s.vertices[v]).norm2() == s.edge_norm2


@pytest.mark.parametrize("name", SEED_NAMES)
def test_every_edge_bounds_exactly_two_faces(name):
    s = seed(name)
    count = {e: 0 for e in s.edges}
    for f in s.faces:
        for i, v in enumerate(f):
            count[frozenset((f[i - 1], v))] += 1
    assert set(count.values()) == {2}


@pytest.mark.parametrize("name", SEED_NAMES)
def test_faces_wind_counterclockwise_seen_from_outside(name):
    s = seed(name)
    for f in s.faces:
        a, b, c = (s.vertices[f[i]] for i in range(3))
        normal = (b - a).cross(c - b)
        # centered solids: outward means the normal points away from the origin
        assert normal.dot(a) > 0


@pytest.mark.parametrize("name", SEED_NAMES)
def test_antipode_is_a_fixed_point_free_involution(name):
    s = seed(name)
    for v, w in enumerate(s.antipode):
        assert w != v
        assert s.antipode[w] == v
        assert s.vertices[w] == -s.vertices[v]


def test_neighbors_agree_with_edges():
    s = seed("dodecahedron")
    for v, ns in enumerate(s.neighbors):
        assert len(ns) == 3
        for w in ns:
            assert frozenset((v, w)) in s.edges


def test_rotation_permutations_track_the_matrices():
    s = seed("icosahedron")
    for m, p in zip(s.rotations, s.rotation_perms):
        assert m.det() == 1
        for i in (0, 3, 7):
            assert s.vertices[p[i]] == m.apply(s.vertices[i])


def test_full_group_contains_reflections_and_is_closed():
    s = seed("cube")
    assert any(m.det() == -1 for m in s.group)
    perms = set(s.group_perms)
    assert len(perms) == 48
    assert set(s.rotation_perms) <= perms
    # closure under composition (permutations act on vertex indices)
    for p in s.group_perms[:8]:
        for q in s.group_perms[::7]:
            assert tuple(p[i] for i in q) in perms


def test_group_permutations_preserve_faces():
    s = seed("cuboctahedron")
    face_sets = {frozenset(f) for f in s.faces}
    for p in s.group_perms[::5]:
        assert {frozenset(p[v] for v in f) for f in s.faces} == face_sets


def test_seed_is_cached_and_validates_names():
    assert seed("cube") is seed("cube")
    with pytest.raises(KeyError):
        seed("octahedron")
