import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from golden import FIG_BORDURES_EXT
from jasso.mapmodel import (MapFormatError, RootedMap, are_equivalent, corner_triples,
                            extended_bordure, format_map_text, make_map, parse_map_text,
                            validate_map)
from mapgen import all_maps, random_map


def test_figure1_parses_with_expected_bordures(figure1):
    for f, ext in FIG_BORDURES_EXT.items():
        assert extended_bordure(figure1, f) == ext
    assert (figure1.root_neg, figure1.root_pos) == ("a", "b")


def test_figure1_counts(figure1):
    c = figure1.counts()
    assert (c["F"], c["E"], c["V"]) == (11, 27, 18)


def test_valid_maps_have_no_errors(figure1, theta):
    assert validate_map(figure1) == []
    assert validate_map(theta) == []


def test_text_round_trip(figure1):
    assert parse_map_text(format_map_text(figure1)) == figure1


@pytest.mark.parametrize("text, fragment", [
    ("border x: y\nroot x y\n", "missing 'faces'"),
    ("faces x y\nborder x: y\nborder y: x\n", "missing 'root'"),
    ("faces x y\nborder x: y\nroot x y\n", "missing border"),
    ("faces x\nbogus\nroot x x\n", "unknown directive"),
    ("faces x y\nborder x y\n", "expected 'border"),
    ("faces x y\nborder x: y\nborder x: y\nroot x y\n", "second border"),
])
def test_parse_errors(text, fragment):
    with pytest.raises(MapFormatError, match=fragment):
        parse_map_text(text)


def test_comments_and_blank_lines_are_ignored(theta):
    text = "# a comment\n\n" + format_map_text(theta).replace("\n", "   # trailing\n", 1)
    assert parse_map_text(text) == theta


def _mutated(m: RootedMap, face, new):
    b = dict(m.bordures)
    b[face] = new
    return RootedMap(m.faces, b, m.root_neg, m.root_pos)


def test_detects_broken_reciprocity(figure1):
    bad = _mutated(figure1, "k", ("g", "d"))
    errs = validate_map(bad)
    assert any(e.startswith("reciprocity") for e in errs)


def test_detects_unknown_neighbour(theta):
    assert any("unknown face" in e for e in validate_map(_mutated(theta, "z", ("x", "q"))))


def test_detects_root_anchor(theta):
    assert any(e.startswith("root") for e in validate_map(_mutated(theta, "x", ("z", "y"))))


def test_detects_self_neighbour(theta):
    assert any("own bordure" in e for e in validate_map(_mutated(theta, "z", ("x", "z"))))


def test_detects_short_bordure(theta):
    assert any("fewer than 2" in e for e in validate_map(_mutated(theta, "z", ("x",))))


def test_two_faces_fail_euler():
    m = make_map({"x": ("y", "y", "y"), "y": ("x", "x", "x")}, "x", "y")
    assert validate_map(m)


def test_corner_triples_are_rotations_of_each_other(figure1):
    tri = corner_triples(figure1)
    for (c, a, b), n in tri.items():
        assert tri[(a, b, c)] == n


def test_generated_maps_are_valid():
    for f in (3, 4, 5):
        for m in all_maps(f):
            assert validate_map(m) == []


def test_tutte_counts_from_generator():
    # rooted bridgeless cubic planar maps: 2^(n+1) (3n)! / ((2n+2)! n!) with n = F - 2
    from math import factorial
    for faces in (3, 4, 5, 6):
        n = faces - 2
        tutte = 2 ** (n + 1) * factorial(3 * n) // (factorial(2 * n + 2) * factorial(n))
        assert len(all_maps(faces)) == tutte


def test_equivalence_is_reflexive_and_distinguishes(figure1, theta):
    assert are_equivalent(figure1, figure1)
    assert not are_equivalent(figure1, theta)
    maps = all_maps(5)
    for i, m in enumerate(maps):
        for j, n in enumerate(maps):
            assert are_equivalent(m, n) == (i == j)


def test_rotating_a_root_face_is_refused(theta):
    with pytest.raises(ValueError):
        theta.rotate("x", 1)


@settings(max_examples=40, deadline=None)
@given(seed=st.integers(0, 10**6), faces=st.integers(3, 8))
def test_relabel_and_rotate_preserve_equivalence(seed, faces):
    rng = random.Random(seed)
    m = random_map(faces, rng)
    names = list(m.faces)
    perm = names[:]
    rng.shuffle(perm)
    r = m.relabel({a: "q" + b for a, b in zip(names, perm)})
    assert validate_map(r) == []
    assert are_equivalent(m, r)
    others = [f for f in r.faces if f not in (r.root_neg, r.root_pos)]
    if others:
        f = rng.choice(others)
        r2 = r.rotate(f, rng.randrange(1, 6))
        assert are_equivalent(m, r2)


@settings(max_examples=40, deadline=None)
@given(seed=st.integers(0, 10**6), faces=st.integers(3, 8))
def test_euler_holds_for_random_maps(seed, faces):
    m = random_map(faces, random.Random(seed))
    c = m.counts()
    assert c["S"] == 2 * c["E"] == 3 * c["V"]
    assert c["F"] - c["E"] + c["V"] == 2
    assert c["E"] == 3 * (c["F"] - 2)


def test_theta_with_reversed_root_is_equivalent(theta):
    # regression value from the exhaustive bijection search: the theta map is symmetric
    flipped = parse_map_text("faces x y z\nborder x: y z\nborder y: x z\nborder z: x y\nroot y x\n")
    assert validate_map(flipped) == []
    assert are_equivalent(theta, flipped)
