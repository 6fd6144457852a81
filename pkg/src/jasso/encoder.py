"""Layer decomposition of a rooted cubic planar map and the recursion that
produces its stratojasse table, its ordered tree and its word."""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field

from .mapmodel import RootedMap, extended_bordure, validate_map
from .sequences import EPS, Term, is_unitary
from .tokens import BA, CA, CH, CU, Mono, closer, opener
from .trees import Dallajascar, validate_dallajascar


class EncodingError(ValueError):
    pass


def _check(cond, msg):
    if not cond:
        raise EncodingError(msg)


# -- layering --------------------------------------------------------------------

@dataclass
class Rovejasse:
    ident: int
    layer: int
    cells: frozenset
    support: frozenset = frozenset()
    cplus: dict = field(default_factory=dict)
    cminus: dict = field(default_factory=dict)
    zouc: str | None = None
    baou: tuple | None = None
    caouly: tuple | None = None
    fan: tuple = ()


@dataclass
class Layering:
    layers: list            # list of frozensets j_0 .. j_m
    layer_of: dict          # face -> p
    rovejasses: list        # all Rovejasse objects, layer 1 first
    rov_of: dict            # face -> Rovejasse (faces of layer >= 1)


def _runs(seq, pred):
    """Maximal runs of consecutive items, as (flag, list) pairs."""
    out = []
    for x in seq:
        f = pred(x)
        if out and out[-1][0] == f:
            out[-1][1].append(x)
        else:
            out.append((f, [x]))
    return out


def ring_maps(m: RootedMap, cells: frozenset, support: frozenset) -> tuple[dict, dict]:
    """c⁺ and c⁻ on the support ring of a rovéjasse."""
    cplus, cminus = {}, {}
    for a in support:
        b = m.bordures[a]
        inside = [x in cells for x in b]
        _check(any(inside), f"P3: {a} does not touch its rovejasse")
        _check(not all(inside), f"P3: bordure of {a} lies inside a rovejasse")
        n = len(b)
        # start just after a non-member so runs are not split by the wrap
        start = next(i for i in range(n) if not inside[i])
        rot = [b[(start + 1 + i) % n] for i in range(n)]
        flags = [x in cells for x in rot]
        runs = _runs(range(n), lambda i: flags[i])
        member_runs = [r for f, r in runs if f]
        _check(len(member_runs) == 1, f"P3: rovejasse cells split into several factors of B({a})")
        r = member_runs[0]
        cplus[a] = rot[(r[0] - 1) % n]
        cminus[a] = rot[(r[-1] + 1) % n]
    for a, b in cplus.items():
        _check(b in support and cminus.get(b) == a, f"P3: ring around rovejasse broken at {a}")
    return cplus, cminus


def compute_layering(m: RootedMap) -> Layering:
    layer_of = {m.root_neg: 0}
    layers = [frozenset([m.root_neg])]
    while len(layer_of) < len(m.faces):
        nxt = {x for e in layers[-1] for x in m.bordures[e] if x not in layer_of}
        _check(nxt, "layering: map is not connected")
        for x in nxt:
            layer_of[x] = len(layers)
        layers.append(frozenset(nxt))

    rovs, rov_of = [], {}
    for p in range(1, len(layers)):
        left = set(layers[p])
        for f in sorted(left, key=m.faces.index):
            if f not in left:
                continue
            comp, stack = {f}, [f]
            left.discard(f)
            while stack:
                for x in m.bordures[stack.pop()]:
                    if x in left:
                        left.discard(x)
                        comp.add(x)
                        stack.append(x)
            comp = frozenset(comp)
            support = frozenset(x for e in comp for x in m.bordures[e] if layer_of[x] == p - 1)
            rv = Rovejasse(len(rovs), p, comp, support)
            rovs.append(rv)
            for e in comp:
                rov_of[e] = rv
    for rv in rovs:
        if rv.layer < 2:
            continue
        owners = {rov_of[a].ident for a in rv.support}
        _check(len(owners) == 1, f"P2: support of rovejasse {sorted(rv.cells)} spans several rovejasses")
        rv.cplus, rv.cminus = ring_maps(m, rv.cells, rv.support)
    return Layering(layers, layer_of, rovs, rov_of)


def derive_caouly_fan(rv: Rovejasse, baou: tuple, mediane: bool) -> tuple[tuple, tuple]:
    a, b = baou
    _check(rv.cplus.get(a) == b, f"baou {baou} is not a ring step")
    if rv.cplus[b] == a:
        return (b, a), ()
    ring = []
    g = rv.cplus[b]
    while g != a:
        ring.append(g)
        _check(len(ring) <= len(rv.support), "ring walk does not close")
        g = rv.cplus[g]
    r = len(ring)
    if not mediane:
        return (ring[-1], a), tuple(ring)
    if r == 1:
        return (b, ring[0]), ()
    return (ring[-2], ring[-1]), tuple(ring[:-1])


def rotate_to(ext: tuple, pair: tuple, min_index: int = 0) -> int:
    for i in range(min_index, len(ext) - 1):
        if (ext[i], ext[i + 1]) == tuple(pair):
            return i
    raise EncodingError(f"pair {pair} is not a factor of {ext}")


def oriented_boundary(ext: tuple, gh: tuple, dh: tuple | None = None) -> tuple[tuple, tuple]:
    """B° (rotation of B̄ starting with gh) and Br (prefix of B° ending with dh)."""
    k = rotate_to(ext, gh)
    cyc = ext[:-1]
    bo = tuple(cyc[k:] + cyc[:k]) + (ext[k],)
    if dh is None:
        return bo, bo
    j = rotate_to(bo, dh, 1)
    return bo, bo[: j + 2]


def project_delta(xi: tuple, baou, caouly) -> list:
    """Four-case projection of a support block onto the word."""
    g = list(xi)
    u = len(g) - 1
    starts = u >= 1 and baou is not None and (g[0], g[1]) == tuple(baou)
    ends = u >= 1 and caouly is not None and (g[-2], g[-1]) == tuple(caouly)
    if starts and ends:
        _check(u >= 2, f"delta block {xi} too short for both anchors")
        return [BA] + g[2:-1] + [CA]
    if starts:
        return [BA] + g[2:]
    if ends:
        return g[1:-1] + [CA]
    return g[1:]


# -- the recursion ---------------------------------------------------------------

@dataclass
class CellInfo:
    binome: str = ""
    mediane: bool = False
    parent: str | None = None
    gh: tuple | None = None
    dh: tuple | None = None
    H: list = field(default_factory=list)
    T: list = field(default_factory=list)
    S: list = field(default_factory=list)
    G: list = field(default_factory=list)
    dG: list = field(default_factory=list)
    v: int = 0
    xi: dict = field(default_factory=dict)


def _faces(seq):
    return [x for x in seq if not isinstance(x, Mono)]


class Encoder:
    """Single-use encoder; call :meth:`run` once."""

    def __init__(self, m: RootedMap):
        errs = validate_map(m)
        if errs:
            raise EncodingError("; ".join(errs))
        self.m = m
        self.lay = compute_layering(m)
        self.w0, self.w1 = m.root_neg, m.root_pos
        self.info = {f: CellInfo() for f in m.faces}
        self.sigma: dict = {}
        self.mediane_rov: dict = {}  # rov ident -> médiane flag of its zouc

    # helpers
    def L(self, f) -> int:
        return self.lay.layer_of[f]

    def rov(self, f) -> Rovejasse:
        return self.lay.rov_of[f]

    def set_cell(self, f, binome, parent, mediane=False):
        ci = self.info[f]
        _check(not ci.binome, f"cell {f} reached twice")
        ci.binome, ci.parent, ci.mediane = binome, parent, mediane

    def discover(self, zouc, baou, binome, parent, mediane=False) -> Rovejasse:
        rv = self.rov(zouc)
        _check(rv.zouc is None, f"rovejasse of {zouc} discovered twice")
        rv.zouc, rv.baou = zouc, tuple(baou)
        rv.caouly, rv.fan = derive_caouly_fan(rv, rv.baou, mediane)
        self.mediane_rov[rv.ident] = mediane
        self.set_cell(zouc, binome, parent, mediane)
        for c in rv.fan:
            x = self.fan_parent(rv, c)
            self.set_cell(c, "ln", x)
        return rv

    def fan_parent(self, rv: Rovejasse, c):
        pair = (rv.cminus[c], c)
        hits = []
        for x in sorted(rv.cells, key=self.m.faces.index):
            b = extended_bordure(self.m, x)
            if pair in zip(b, b[1:]):
                hits.append(x)
        _check(len(hits) == 1, f"fan cell {c}: no unique parent in its rovejasse")
        return hits[0]

    def delta(self, e, xi):
        if not xi or self.L(xi[0]) == 0:
            return []
        rv = self.rov(e)
        return project_delta(tuple(xi), rv.baou, rv.caouly)

    @staticmethod
    def split_lateral(seq, inside):
        """(s_0, t_1, s_1, ..., t_u, s_u) with s blocks inside, s_0 and s_u possibly empty."""
        s, t = [[]], []
        for f, run in _runs(seq, inside):
            if f:
                s[-1] = run
            else:
                t.append(run)
                s.append([])
        return s, t

    def lateral(self, e, xi, mode):
        """R/T/S for a lateral block; mode is 'k', 'd' or 'g'."""
        own = self.rov(e).cells
        s, t = self.split_lateral(xi, lambda x: x in own)
        u = len(t)
        for run in t:
            _check(all(self.L(x) == self.L(e) + 1 for x in run), f"lateral block of {e} leaves layers")
            _check(len({self.rov(x).ident for x in run}) == 1, f"lateral block of {e} spans rovejasses")
        R, T, S = [], [], []
        if mode == "g":
            first_q = 1 if s[0] else 2
            _check(u >= first_q - 1 and s[u], f"g-block of {e} malformed")
            for c in s[0][1:]:
                self.set_cell(c, "sn", e)
            if first_q == 2:
                for c in s[1][1:]:
                    self.set_cell(c, "sn", e)
                R += [CU] + s[1][1:]
                T += [CU]
                S += s[1][1:]
            else:
                R += s[0][1:]
                S += s[0][1:]
        else:
            first_q = 1
            _check(s[0], f"{mode}-block of {e} does not start on its rovejasse")
            for c in s[0]:
                self.set_cell(c, "sn", e)
            R += s[0]
            S += s[0]
        for q in range(first_q, u + 1):
            last_mediane = mode == "d" and q == u and not s[u]
            if last_mediane:
                z = t[q - 1][-1]
                rv = self.rov(z)
                _check(rv.cplus.get(e) == s[q - 1][-1], f"ring of {z} disagrees with block of {e}")
                self.discover(z, (e, s[q - 1][-1]), "tc", e, mediane=True)
                R += [z]
                T += [z]
                S += list(rv.fan)
                break
            _check(s[q], f"lateral block of {e} has an empty support run")
            z = t[q - 1][0]
            rv = self.rov(z)
            _check(rv.cplus.get(e) == s[q - 1][-1] and rv.cminus.get(e) == s[q][0],
                   f"ring of {z} disagrees with block of {e}")
            self.discover(z, (e, s[q - 1][-1]), "tc", e)
            _check(rv.caouly == (s[q][0], e), f"caouly of rovejasse of {z} unexpected")
            for c in s[q][1:]:
                self.set_cell(c, "sn", e)
            R += [z, CU] + s[q][1:]
            T += [z, CU]
            S += list(rv.fan) + s[q][1:]
        if mode in ("k", "g"):
            R.append(CH)
            S.append(CH)
        return R, T, S

    # pass A: the cell is the zouc of its own rovéjasse
    def pass_a(self, e):
        ci = self.info[e]
        ext = extended_bordure(self.m, e)
        if e == self.w1:
            ci.gh = (ext[0], ext[1])
        else:
            rv = self.rov(e)
            ci.gh = (rv.caouly[1], rv.baou[0]) if ci.mediane else rv.baou
        bo, br = oriented_boundary(ext, ci.gh)
        ci.dh = (br[-2], br[-1])
        lo = self.L(e) - 1
        runs = _runs(br, lambda x: self.L(x) == lo)
        _check(runs[0][0] and runs[-1][0], f"oriented boundary of {e} does not start and end below")
        d = [r for f, r in runs if f]
        rr = [r for f, r in runs if not f]
        if ci.mediane:
            _check(d[0][0] == ci.gh[0] and len(d[0]) >= 2, f"median zouc {e} has a bad first block")
            d[0] = d[0][1:]
        ci.v = len(rr)
        ci.xi = {"D": d, "R": rr, "g": [], "d": [], "Rg": [], "Rd": [], "G": []}
        H, T, S, segs = list(self.delta(e, d[0])), [], [], []
        for k, blk in enumerate(rr, 1):
            R_k, T_k, S_k = self.lateral(e, blk, "k")
            H += R_k + self.delta(e, d[k])
            T += T_k
            S += S_k
            segs.append(("k", k, _faces(S_k)))
        ci.H, ci.T, ci.S = H, T, S
        return segs

    # pass B: the cell belongs to a chain row
    def pass_b(self, e, prev, nxt):
        ci = self.info[e]
        ext = extended_bordure(self.m, e)
        _check(ci.gh is not None and ci.dh is not None, f"chain cell {e} lacks gh/dh")
        bo, br = oriented_boundary(ext, ci.gh, ci.dh)
        lo = self.L(e) - 1
        runs = _runs(br, lambda x: self.L(x) == lo)
        _check(not runs[0][0] and not runs[-1][0], f"oriented boundary of {e} starts or ends below")
        d = [r for f, r in runs if f]
        rr = [r for f, r in runs if not f]
        g, dd, mid = rr[0], rr[-1], rr[1:-1]
        ci.v = len(mid)
        xRg, xRd, xG = [], [], []
        if len(g) > 1:
            _check(g[1] == prev, f"left boundary of {e} does not meet the previous cell")
            last = max(i for i, x in enumerate(g) if x == g[1])
            xRg = g[last + 1:]
        if len(dd) > 1:
            _check(dd[-2] == nxt, f"right boundary of {e} does not meet the next cell")
            first = dd.index(dd[-2])
            xG, xRd = dd[first:-1], dd[:first]
        ci.xi = {"D": d, "R": mid, "g": g, "d": dd, "Rg": xRg, "Rd": xRd, "G": xG}
        segs = []
        H, T, S = [], [], []
        if xRg:
            Rg, Tg, Sg = self.lateral(e, xRg, "g")
            H += Rg
            T += Tg
            S += Sg
            segs.append(("g", 0, _faces(Sg)))
        H += self.delta(e, d[0])
        for k, blk in enumerate(mid, 1):
            R_k, T_k, S_k = self.lateral(e, blk, "k")
            H += R_k + self.delta(e, d[k])
            T += T_k
            S += S_k
            segs.append(("k", k, _faces(S_k)))
        if xRd:
            Rd, Td, Sd = self.lateral(e, xRd, "d")
            H += Rd
            T += Td
            S += Sd
            sdf = _faces(Sd)
            segs.append(("d", 0, sdf))
            if xRd[-1] in self.rov(e).cells and sdf:
                self.info[sdf[-1]].mediane = True
        G, dG = [], []
        if len(xG) > 1:
            parts, cur = [], []
            for x in xG[1:]:
                if x == nxt:
                    parts.append(cur)
                    cur = []
                else:
                    cur.append(x)
            _check(not cur and all(parts), f"pinched block of {e} malformed")
            for part in parts:
                _check(len({self.rov(x).ident for x in part}) == 1 and self.L(part[0]) == self.L(e) + 1,
                       f"pinched block of {e} spans rovejasses")
                rv = self.discover(part[0], (e, nxt), "tg", e)
                _check(not rv.fan, f"pinched rovejasse of {part[0]} has a fan")
                G.append(part[0])
                dG += [BA, CA]
        H += G
        ci.H, ci.T, ci.S, ci.G, ci.dG = H, T, S, G, dG
        return segs

    def assign_chain(self, cells, first_gh, last_dh):
        for i, c in enumerate(cells):
            ci = self.info[c]
            ci.gh = first_gh if i == 0 else (ci.parent, cells[i - 1])
            ci.dh = last_dh if i == len(cells) - 1 else (cells[i + 1], self.info[cells[i + 1]].parent)

    def process_row(self, row_faces, first: bool):
        segs = {}
        for t, e in enumerate(row_faces):
            if first:
                segs[e] = self.pass_a(e)
            else:
                prev = row_faces[t - 1] if t > 0 else None
                nxt = row_faces[t + 1] if t + 1 < len(row_faces) else None
                segs[e] = self.pass_b(e, prev, nxt)
        for t, e in enumerate(row_faces):
            D = self.info[e].xi["D"]
            for kind, k, cells in segs[e]:
                if not cells:
                    continue
                if kind == "k":
                    self.assign_chain(cells, (e, D[k - 1][-1]), (D[k][0], e))
                elif kind == "g":
                    prev_sd = [c for kd, _, cs in segs[row_faces[t - 1]] if kd == "d" for c in cs]
                    _check(prev_sd, f"g-chain of {e} has no predecessor")
                    self.assign_chain(cells, (self.info[cells[0]].parent, prev_sd[-1]), (D[0][0], e))
                else:
                    f = row_faces[t + 1]
                    nxt_sg = [c for kd, _, cs in segs[f] if kd == "g" for c in cs]
                    if nxt_sg:
                        last = (nxt_sg[0], self.info[nxt_sg[0]].parent)
                    else:
                        last = (self.info[f].xi["D"][0][0], f)
                    self.assign_chain(cells, (e, D[-1][-1]), last)

    def run(self) -> "Encoding":
        w0, w1 = self.w0, self.w1
        self.info[w0].binome, self.info[w0].H = "zc", [w1]
        self.set_cell(w1, "mr", w0)
        j1 = self.rov(w1)
        j1.zouc = w1
        one = (Term(1),)
        self.sigma[EPS] = [w0]
        self.sigma[one] = [w1]
        queue = deque([one])
        guard = len(self.m.faces) + 2
        while queue:
            Y = queue.popleft()
            X = Y[:-1]
            n = 1
            while True:
                _check(n <= guard, "recursion does not terminate")
                row = (X + (Term(n),)) if n > 1 else Y
                cells = _faces(self.sigma.get(row, []))
                if not cells:
                    break
                self.check_p4(row, cells)
                self.process_row(cells, first=(n == 1))
                new = {
                    X + (Term(n), Term(1)): [x for e in cells for x in self.info[e].G],
                    X + (Term(n, True),): [x for e in cells for x in self.info[e].dG],
                    X + (Term(n, True), Term(1)): [x for e in cells for x in self.info[e].T],
                    X + (Term(n + 1),): [x for e in cells for x in self.info[e].S],
                }
                for key, val in new.items():
                    if val:
                        _check(key not in self.sigma, f"row {key} filled twice")
                        self.sigma[key] = val
                        if is_unitary(key):
                            queue.append(key)
                n += 1
        missing = [f for f in self.m.faces if not self.info[f].binome]
        _check(not missing, f"faces never reached: {missing}")
        return self.finish()

    def check_p4(self, row, cells):
        _check(len(set(cells)) == len(cells), f"P4: row {row} repeats a cell")
        if is_unitary(row):
            for i, a in enumerate(cells):
                for b in cells[i + 1:]:
                    _check(b not in self.m.bordures[a], f"P4: zoucs {a} and {b} touch in row {row}")
            return
        items = self.sigma[row]
        adj = {f: set(self.m.bordures[f]) for f in cells}
        pos = [i for i, x in enumerate(items) if not isinstance(x, Mono)]
        for i, a in enumerate(cells):
            for j in range(i + 2, len(cells)):
                _check(cells[j] not in adj[a], f"P4: {a} and {cells[j]} touch in row {row}")
            if i + 1 < len(cells):
                broken = CH in items[pos[i] + 1: pos[i + 1]]
                _check((cells[i + 1] in adj[a]) != broken,
                       f"P4: contact of {a} and {cells[i + 1]} disagrees with chain marks in row {row}")

    def finish(self) -> "Encoding":
        info = self.info
        children = {f: tuple(_faces(info[f].H)) for f in self.m.faces}
        tree = Dallajascar.from_children(self.w0, children)
        errs = validate_dallajascar(tree)
        _check(not errs and set(tree.elements) == set(self.m.faces), f"ordered tree invalid: {errs}")
        for f in self.m.faces:
            _check(tree.parent.get(f) == info[f].parent, f"parent of {f} disagrees with its H placement")
        tokens, order = [], []
        stack = [("cell", self.w0)]
        while stack:
            kind, x = stack.pop()
            if kind == "tok":
                tokens.append(x)
                continue
            order.append(x)
            b = info[x].binome
            tokens.append(opener(b))
            stack.append(("tok", closer(b)))
            for y in reversed(info[x].H):
                stack.append(("tok", y.value) if isinstance(y, Mono) else ("cell", y))
        return Encoding(self.m, self.lay, info, self.sigma, tree, tokens, order)


@dataclass
class Encoding:
    map: RootedMap
    layering: Layering
    info: dict
    sigma: dict
    tree: Dallajascar
    tokens: list
    order: list

    @property
    def word(self) -> str:
        return " ".join(self.tokens)

    @property
    def nj(self) -> list:
        from functools import cmp_to_key
        from .sequences import compare_stratinos
        return sorted(self.sigma, key=cmp_to_key(compare_stratinos))

    def coloring(self) -> dict:
        return stratojasse_coloring(self.sigma)


def encode(m: RootedMap) -> Encoding:
    return Encoder(m).run()


def emit_word(m: RootedMap) -> str:
    return encode(m).word


def stratojasse_coloring(sigma: dict) -> dict:
    colors = {}
    for X, items in sigma.items():
        faces = _faces(items)
        if not faces:
            continue
        if not X:
            c = 0
        else:
            _check(not X[-1].shifted, "cells in a shifted row")
            p, n = len(X) % 2, X[-1].value % 2
            c = {(1, 1): 1, (1, 0): 3, (0, 1): 0, (0, 0): 2}[(p, n)]
        for f in faces:
            colors[f] = c
    return colors


def contact_violations(m: RootedMap, sigma: dict) -> list[str]:
    """Same-coloured faces touch exactly when they are chain neighbours of one row.

    CH breaks a chain; so does CU, which closes each zouc of a unitary row."""
    colors = stratojasse_coloring(sigma)
    chained = set()
    for items in sigma.values():
        last, broken = None, False
        for x in items:
            if x is CH or x is CU:
                broken = True
            elif not isinstance(x, Mono):
                if last is not None and not broken:
                    chained.add(frozenset((last, x)))
                last, broken = x, False
    out = []
    fs = list(m.faces)
    for i, a in enumerate(fs):
        for b in fs[i + 1:]:
            if colors[a] != colors[b]:
                continue
            touch = b in m.bordures[a]
            if touch != (frozenset((a, b)) in chained):
                out.append(f"{a},{b}: contact={touch} chained={not touch}")
    return out
