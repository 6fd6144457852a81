"""Rooted cubic planar maps described by the cyclic neighbour sequence of each face."""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass


class MapFormatError(ValueError):
    pass


@dataclass(frozen=True)
class RootedMap:
    faces: tuple
    bordures: dict          # face -> tuple of neighbours, B(e)
    root_neg: str
    root_pos: str

    def border(self, e) -> tuple:
        return self.bordures[e]

    def counts(self) -> dict:
        s = sum(len(b) for b in self.bordures.values())
        return {"F": len(self.faces), "S": s, "E": s // 2, "V": s // 3}

    def relabel(self, mapping: dict) -> "RootedMap":
        return RootedMap(
            tuple(mapping[f] for f in self.faces),
            {mapping[f]: tuple(mapping[x] for x in b) for f, b in self.bordures.items()},
            mapping[self.root_neg],
            mapping[self.root_pos],
        )

    def rotate(self, face, k: int) -> "RootedMap":
        """Move the anchor of a non-root face by k steps."""
        if face in (self.root_neg, self.root_pos):
            raise ValueError("root faces have a fixed anchor")
        b = self.bordures[face]
        k %= len(b)
        nb = dict(self.bordures)
        nb[face] = b[k:] + b[:k]
        return RootedMap(self.faces, nb, self.root_neg, self.root_pos)


def make_map(bordures: dict, root_neg, root_pos, faces=None) -> RootedMap:
    faces = tuple(faces) if faces is not None else tuple(bordures)
    return RootedMap(faces, {f: tuple(b) for f, b in bordures.items()}, root_neg, root_pos)


def extended_bordure(m: RootedMap, e) -> tuple:
    if e not in m.bordures:
        raise KeyError(f"unknown face {e!r}")
    b = m.bordures[e]
    return b + b[:1]


def corner_triples(m: RootedMap) -> Counter:
    """Multiset of (owner, a, b) for each consecutive pair (a, b) of B̄(owner)."""
    out = Counter()
    for c in m.faces:
        eb = extended_bordure(m, c)
        for a, b in zip(eb, eb[1:]):
            out[(c, a, b)] += 1
    return out


def validate_map(m: RootedMap) -> list[str]:
    """Empty list when the map is consistent, otherwise one message per violation."""
    errs = []
    faces = set(m.faces)
    if len(faces) != len(m.faces):
        errs.append("faces: duplicate face id")
    if set(m.bordures) != faces:
        errs.append("faces: bordure set does not match face list")
    for f in m.faces:
        if not f:
            errs.append("faces: empty face id")
    for f, b in m.bordures.items():
        if len(b) < 2:
            errs.append(f"bordure: B({f}) has fewer than 2 neighbours")
        for x in b:
            if x not in faces:
                errs.append(f"bordure: B({f}) mentions unknown face {x}")
            if x == f:
                errs.append(f"bordure: {f} appears in its own bordure")
    if errs:
        return errs
    if m.root_neg not in faces or m.root_pos not in faces:
        return errs + ["root: root faces are not faces of the map"]
    if m.bordures[m.root_neg][0] != m.root_pos:
        errs.append(f"root: B({m.root_neg}) does not start with {m.root_pos}")
    if m.bordures[m.root_pos][0] != m.root_neg:
        errs.append(f"root: B({m.root_pos}) does not start with {m.root_neg}")
    tri = corner_triples(m)
    for (c, a, b), n in sorted(tri.items()):
        for other in ((a, b, c), (b, c, a)):
            if tri.get(other, 0) != n:
                errs.append(
                    f"reciprocity: ({a},{b}) occurs {n}x in B̄({c}) but "
                    f"({other[1]},{other[2]}) occurs {tri.get(other, 0)}x in B̄({other[0]})")
    s = sum(len(b) for b in m.bordures.values())
    if s % 6:
        errs.append(f"euler: total bordure length {s} is not divisible by 6")
    else:
        f, e, v = len(faces), s // 2, s // 3
        if f - e + v != 2:
            errs.append(f"euler: F - E + V = {f} - {e} + {v} != 2")
    seen, stack = {m.root_neg}, [m.root_neg]
    while stack:
        for x in m.bordures[stack.pop()]:
            if x not in seen:
                seen.add(x)
                stack.append(x)
    if seen != faces:
        errs.append(f"connectivity: faces {sorted(faces - seen)} unreachable from the root")
    return errs


# -- text format ---------------------------------------------------------------

def parse_map_text(text: str) -> RootedMap:
    faces, bord, root = None, {}, None
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        head, _, rest = line.partition(" ")
        if head == "faces":
            faces = rest.split()
        elif head == "border":
            owner, colon, nbrs = rest.partition(":")
            if not colon or not owner.strip():
                raise MapFormatError(f"line {lineno}: expected 'border <id>: <ids>'")
            owner = owner.strip()
            if owner in bord:
                raise MapFormatError(f"line {lineno}: second border for {owner}")
            bord[owner] = tuple(nbrs.split())
        elif head == "root":
            parts = rest.split()
            if len(parts) != 2:
                raise MapFormatError(f"line {lineno}: root needs two face ids")
            root = tuple(parts)
        else:
            raise MapFormatError(f"line {lineno}: unknown directive {head!r}")
    if faces is None:
        raise MapFormatError("missing 'faces' line")
    if root is None:
        raise MapFormatError("missing 'root' line")
    missing = [f for f in faces if f not in bord]
    if missing:
        raise MapFormatError(f"missing border for {missing}")
    return RootedMap(tuple(faces), bord, root[0], root[1])


def format_map_text(m: RootedMap) -> str:
    lines = ["faces " + " ".join(m.faces)]
    for f in m.faces:
        lines.append(f"border {f}: " + " ".join(m.bordures[f]))
    lines.append(f"root {m.root_neg} {m.root_pos}")
    return "\n".join(lines) + "\n"


# -- equivalence oracle ------------------------------------------------------------

def are_equivalent(m1: RootedMap, m2: RootedMap) -> bool:
    """Search for a face bijection carrying each bordure onto a rotation of the
    image bordure, with both root bordures carried over unrotated."""
    if len(m1.faces) != len(m2.faces):
        return False
    if sorted(map(len, m1.bordures.values())) != sorted(map(len, m2.bordures.values())):
        return False

    def assign(phi, inv, src, dst):
        """Extend phi with src[i] -> dst[i]; None on conflict."""
        phi, inv = dict(phi), dict(inv)
        for x, y in zip(src, dst):
            if phi.get(x, y) != y or inv.get(y, x) != x:
                return None
            phi[x], inv[y] = y, x
        return phi, inv

    start = assign({}, {}, (m1.root_neg, m1.root_pos), (m2.root_neg, m2.root_pos))
    if start is None:
        return False
    fixed = {m1.root_neg, m1.root_pos}

    def solve(phi, inv, done):
        todo = [f for f in m1.faces if f in phi and f not in done]
        if not todo:
            return len(phi) == len(m1.faces)
        f = todo[0]
        b1, b2 = m1.bordures[f], m2.bordures[phi[f]]
        if len(b1) != len(b2):
            return False
        shifts = [0] if f in fixed else range(len(b2))
        for k in shifts:
            nxt = assign(phi, inv, b1, b2[k:] + b2[:k])
            if nxt is not None and solve(nxt[0], nxt[1], done | {f}):
                return True
        return False

    return solve(start[0], start[1], frozenset())
