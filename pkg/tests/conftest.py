import random
from pathlib import Path

import pytest

from jasso.mapmodel import parse_map_text
from mapgen import all_maps, random_map

DATA = Path(__file__).parent / "data"


@pytest.fixture(scope="session")
def figure1():
    return parse_map_text((DATA / "figure1.map").read_text())


@pytest.fixture(scope="session")
def theta():
    return parse_map_text((DATA / "theta.map").read_text())


def map_corpus():
    """Small maps up to 8 faces: every map with at most 5 faces, random larger ones,
    plus relabelled and re-anchored variants."""
    rng = random.Random(7)
    base = [m for f in (3, 4, 5) for m in all_maps(f)]
    base += [random_map(f, rng) for f in (6, 7, 8) for _ in range(4)]
    out = list(base)
    for m in base[::3]:
        names = list(m.faces)
        shuffled = names[:]
        rng.shuffle(shuffled)
        r = m.relabel(dict(zip(names, (f"n{x}" for x in shuffled))))
        out.append(r)
        others = [f for f in r.faces if f not in (r.root_neg, r.root_pos)]
        if others:
            f = rng.choice(others)
            out.append(r.rotate(f, 1 + rng.randrange(len(r.bordures[f]))))
    return out
