from __future__ import annotations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from index2poly.metric import admissible_configs, parse_length
from index2poly.seeds import seed
from index2poly.tracer import (
    ALPHABET_3,
    ALPHABET_5,
    canonical_start,
    config_alphabet,
    expand_word,
    format_shape,
    format_word,
    parse_shape,
    parse_word,
    prime,
    trace_face,
    trace_from_canonical,
    turn_candidates,
)


def cfg(seed_name, label):
    return {c.label: c for c in admissible_configs(seed_name)}[label]


def test_prime_swaps_handedness_and_fixes_straight():
    assert prime("r") == "l" and prime("l") == "r"
    assert prime("hr") == "hl" and prime("sl") == "sr"
    assert prime("f") == "f"
    for a in ALPHABET_3 + ALPHABET_5:
        assert prime(prime(a)) == a


def test_parse_word_expands_short_forms():
    assert parse_word("[r,r]") == ("r", "r", "r", "r")
    assert parse_word("[hl,f]") == ("hl", "f", "hl", "f")
    assert parse_word("[r,r,l,l]") == ("r", "r", "l", "l")
    assert expand_word(("r",)) == ("r", "r", "r", "r")
    assert expand_word(("r", "l")) == ("r", "l", "r", "l")


def test_format_word_compresses_periodic_words():
    assert format_word(("r", "l", "r", "l")) == "[r,l]"
    assert format_word(("f", "f", "f", "f")) == "[f,f]"
    assert format_word(("r", "r", "l", "l")) == "[r,r,l,l]"


def test_shape_strings():
    shape = (("r", "r", "r", "r"), ("l", "l", "l", "l"))
    assert format_shape(shape) == "[r,r] & [l,l]"
    assert parse_shape("[r,r] & [l,l]") == shape
    assert parse_shape("[hl,f]") == (("hl", "f", "hl", "f"),)


@given(st.lists(st.sampled_from(ALPHABET_5), min_size=4, max_size=4))
def test_word_text_round_trip(symbols):
    w = tuple(symbols)
    assert parse_word(format_word(w)) == w


def test_canonical_starts_are_stable():
    starts = {
        ("cube", "1,2"): (0, 1),
        ("dodecahedron", "1,4"): (0, 1),
        ("dodecahedron", "2"): (0, 2),
        ("dodecahedron", "3"): (0, 11),
        ("icosahedron", "1,2"): (0, 2),
        ("icosidodecahedron", "d"): (0, 7),
        ("icosidodecahedron", "2d"): (0, 19),
    }
    for (name, label), expected in starts.items():
        assert canonical_start(seed(name), cfg(name, label)) == expected


def test_config_alphabets():
    assert config_alphabet(seed("cube"), cfg("cube", "1,2")) == ALPHABET_3
    assert config_alphabet(seed("dodecahedron"), cfg("dodecahedron", "2")) == ALPHABET_5
    assert (
        config_alphabet(seed("icosidodecahedron"), cfg("icosidodecahedron", "d"))
        == ALPHABET_3
    )


def test_turn_candidates_cover_the_alphabet():
    s = seed("dodecahedron")
    cands = turn_candidates(s, 0, 2, parse_length("2"))
    assert cands == {"hr": 8, "sr": 12, "f": 13, "sl": 9, "hl": 1}


def test_pentagon_closes_in_five_steps():
    s = seed("dodecahedron")
    t = trace_from_canonical(s, cfg("dodecahedron", "2"), parse_word("[hl,hl,hl,hl]"))
    assert t.closed
    assert t.start == (0, 2)
    assert t.boundary == (0, 2, 1, 4, 5)
    assert t.diagnosis is None
    assert t.planar is True


def test_skew_hexagon_closes_without_lying_in_a_plane():
    s = seed("icosidodecahedron")
    t = trace_from_canonical(s, cfg("icosidodecahedron", "2d"), parse_word("[r,r]"))
    assert t.closed
    assert t.start == (0, 19)
    assert t.boundary == (0, 19, 4, 17, 2, 15)
    assert t.planar is False


def test_revisiting_a_vertex_aborts_the_walk():
    s = seed("dodecahedron")
    t = trace_from_canonical(s, cfg("dodecahedron", "1,4"), parse_word("[r,r,l,l]"))
    assert not t.closed
    assert t.diagnosis == "VertexRevisit"
    assert t.boundary == (0, 1, 12, 8, 15, 19, 1)
    assert t.planar is None


def test_longer_period_than_the_word():
    # closure is cyclic in the word, so a period-12 polygon can carry it
    s = seed("dodecahedron")
    t = trace_from_canonical(s, cfg("dodecahedron", "2"), parse_word("[hr,sr,hl,sl]"))
    assert t.closed
    assert len(t.boundary) == 12


def test_traces_are_equivariant_under_rotations():
    s = seed("dodecahedron")
    c = cfg("dodecahedron", "2")
    word = parse_word("[hl,hl,hl,hl]")
    t = trace_from_canonical(s, c, word)
    for p in s.rotation_perms[::13]:
        moved = trace_face(s, c, (p[t.start[0]], p[t.start[1]]), word)
        assert moved.closed
        assert set(moved.boundary) == {p[v] for v in t.boundary}
