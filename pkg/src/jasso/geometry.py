"""Geometric decoding: from a valid word to an orthogonal drawing on the unit
grid, and from the drawing to a rooted cubic planar map.

Coordinates: x grows rightward (one unit per kept column), y grows downward
(one unit per ladder row).  A_γ is the top-left corner of the cell of γ.
"""
from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field

from .mapmodel import RootedMap, validate_map
from .sequences import Term, compare_stratinos, format_stratino, is_natural, is_unitary
from .trees import emboite
from .words import WordAnalysis, stratajos, validate


class GeometryError(RuntimeError):
    pass


# -- ladder and table ----------------------------------------------------------------

@dataclass
class Ladder:
    rows: list                      # ("row", X) or ("blank", Z)
    index: dict                     # entry -> y
    unitary: dict                   # Z -> a_k for every unitary (Z, 1)

    def y(self, X) -> int:
        return self.index[("row", X)]

    def blank(self, Z) -> int:
        return self.index[("blank", Z)]

    def labels(self) -> list[str]:
        return ["X'" if kind == "blank" else (format_stratino(X) or "ε") for kind, X in self.rows]


def build_ladder(a: WordAnalysis) -> Ladder:
    nj = a.nj
    present = set(nj)
    unitary = {}
    for X in nj:
        if is_unitary(X):
            Z, k = X[:-1], 1
            while Z + (Term(k + 1),) in present:
                k += 1
            unitary[Z] = k
    # the blank row of Z closes every row hanging under (Z, 1..a_k), which
    # includes a shifted (Z, a_k#) block when one exists
    after = {}
    for Z, k in unitary.items():
        last = max(i for i, X in enumerate(nj)
                   if len(X) > len(Z) and X[:len(Z)] == Z and X[len(Z)].value <= k)
        after.setdefault(last, []).append(Z)
    rows = []
    for i, X in enumerate(nj):
        rows.append(("row", X))
        for Z in sorted(after.get(i, []), key=len, reverse=True):
            rows.append(("blank", Z))
    return Ladder(rows, {r: i for i, r in enumerate(rows)}, unitary)


@dataclass
class Table:
    columns: list                   # kept word positions, increasing
    x: dict                         # position -> column index
    y: dict                         # position -> row index

    def A(self, g) -> tuple:
        return (self.x[g], self.y[g])


def build_table(a: WordAnalysis, ladder: Ladder) -> Table:
    keep = set(a.E)
    row_of = {g: a.sigma[g] for g in a.E}
    for al, be in a.pairs:
        if a.kind(al) in ("zc", "mr", "tg"):
            keep.add(be)
            row_of[be] = a.sigma[al]
    cols = sorted(keep)
    return Table(cols, {g: i for i, g in enumerate(cols)}, {g: ladder.y(row_of[g]) for g in cols})


# -- curves, segments, transversals ----------------------------------------------------

@dataclass
class Curve:
    opener: int
    points: list                    # closed polyline (first point repeated at the end)
    top: tuple                      # (x0, x1, y)
    lower: list                     # [(x0, x1, y), ...]

    def project(self, x: int) -> tuple:
        """Vertical projection of column x onto the lower horizontals."""
        hits = [(x, y) for x0, x1, y in self.lower if x0 < x < x1]
        if len(hits) != 1:
            raise GeometryError(f"column {x} does not project onto curve {self.opener}")
        return hits[0]


@dataclass
class Polyline:
    kind: str                       # curve, segment, transversal
    label: str
    points: list


@dataclass
class GeoArrangement:
    ladder: Ladder
    table: Table
    curves: dict = field(default_factory=dict)        # opener -> Curve
    segments: dict = field(default_factory=dict)      # first position of stratajo -> Polyline
    transversals: list = field(default_factory=list)  # Polyline
    stratajos: list = field(default_factory=list)

    def polylines(self) -> list:
        out = [Polyline("curve", f"C{o}", c.points) for o, c in sorted(self.curves.items())]
        out += [self.segments[k] for k in sorted(self.segments)]
        return out + self.transversals


def build_curves(a: WordAnalysis, ladder: Ladder, table: Table) -> dict:
    A = table.A
    curves = {}
    for al in [2] + a.zoucs:
        sig = a.sigma[al]
        yb = ladder.blank(sig[:-1])
        if al == 2:
            right = a.closer_of[2]
            xa, ya = A(al)
            xr, _ = A(right)
            pts = [(xa, ya), (xa, yb), (xr, yb), (xr, ya), (xa, ya)]
            curves[al] = Curve(al, pts, (xa, xr, ya), [(xa, xr, yb)])
            continue
        if a.kind(al) == "tg":
            right = a.closer_of[al]
        else:
            row = a.Sigma[sig]
            right = row[row.index(al) + 1]
            assert a.kind(right) == "cu"
        fan = a.fan[al]
        gb, gc = fan[0], fan[-1]
        xa, ya = A(al)
        xr, _ = A(right)
        xb, yf = A(gb)
        xc, _ = A(gc)
        pts = [(xa, ya), (xa, yb), (xb, yb), (xb, yf), (xc, yf), (xc, yb), (xr, yb), (xr, ya), (xa, ya)]
        curves[al] = Curve(al, pts, (xa, xr, ya), [(xa, xb, yb), (xb, xc, yf), (xc, xr, yb)])
    return curves


def _enclosing_zouc(a: WordAnalysis, g: int, Z) -> int:
    tree = a.tree
    for al in a.Sigma[Z + (Term(1),)]:
        if a.x(al).endswith("+") and emboite(tree, al, g):
            return al
    raise GeometryError(f"no enclosing zouc for {g}")


def build_segments(a: WordAnalysis, table: Table, curves: dict) -> tuple[dict, list]:
    segs, factors = {}, []
    for S in stratajos(a):
        first, last = S[0], S[-1]
        Z = a.sigma[first][:-1]
        q = _enclosing_zouc(a, first, Z)
        c = curves[q]
        p0, p1 = table.A(first), table.A(last)
        pts = [c.project(p0[0]), p0, p1, c.project(p1[0])]
        segs[first] = Polyline("segment", f"R{first}", pts)
        factors.append((S, q))
    return segs, factors


def _horizontals(curves: dict, segs: dict) -> list:
    """(x0, x1, y, owner) for every horizontal piece a transversal may stop on."""
    out = []
    for o, c in curves.items():
        out.append(c.top + (("curve", o),))
        out += [h + (("curve", o),) for h in c.lower]
    for k, s in segs.items():
        (x0, y), (x1, _) = s.points[1], s.points[2]
        out.append((x0, x1, y, ("segment", k)))
    return out


def _drop(x: int, y: int, horizontals: list):
    best = None
    for x0, x1, hy, owner in horizontals:
        if x0 <= x <= x1 and hy > y and (best is None or hy < best[1]):
            best = ((x, hy), hy, owner)
    if best is None:
        raise GeometryError(f"nothing below ({x}, {y})")
    return best[0], best[2]


def build_transversals(a: WordAnalysis, ladder: Ladder, table: Table, curves: dict,
                       segs: dict, factors: list) -> list:
    hz = _horizontals(curves, segs)
    out = []
    for S, q in factors:
        openers = [g for g in S if a.x(g).endswith("+")]
        Z, n = a.sigma[S[0]][:-1], a.sigma[S[0]][-1].value
        for prev, cur in zip(openers, openers[1:]):
            x, y = table.A(cur)
            pts = [(x, y)]
            if a.G[prev]:
                gb = a.dG[prev][0]
                ys = ladder.y(Z + (Term(n, True),))
                pts += [(x, ys), table.A(gb)]
                x, y = table.A(gb)
            end, owner = _drop(x, y, hz)
            rg = a.Rg[cur]
            if not rg or (a.kind(rg[0]) != "cu" and not a.Rd[prev]):
                # with nothing left of cur in the deeper row, the stratajo of
                # Rg starts to the right of cur and the drop reaches the curve
                want = ("curve", q)
            elif a.kind(rg[0]) == "cu":
                want = ("curve", "tc")
            else:
                want = ("segment", "next")
            ok = (owner == want or (want[1] == "tc" and owner[0] == "curve" and owner[1] != q
                                    and a.kind(owner[1]) == "tc")
                  or (want[1] == "next" and owner[0] == "segment"
                      and a.sigma[owner[1]] == Z + (Term(n + 1),)))
            if not ok:
                raise GeometryError(f"transversal from {cur} lands on {owner}, expected {want}")
            pts.append(end)
            out.append(Polyline("transversal", f"T{cur}", pts))
    return out


def build_arrangement(a: WordAnalysis) -> GeoArrangement:
    ladder = build_ladder(a)
    table = build_table(a, ladder)
    curves = build_curves(a, ladder, table)
    segs, factors = build_segments(a, table, curves)
    trans = build_transversals(a, ladder, table, curves, segs, factors)
    return GeoArrangement(ladder, table, curves, segs, trans, [S for S, _ in factors])


# -- planar subdivision -----------------------------------------------------------------

def unit_edges(points) -> set:
    out = set()
    for (x0, y0), (x1, y1) in zip(points, points[1:]):
        if x0 != x1 and y0 != y1:
            raise GeometryError("polyline piece is not axis-parallel")
        dx, dy = (x1 > x0) - (x1 < x0), (y1 > y0) - (y1 < y0)
        x, y = x0, y0
        while (x, y) != (x1, y1):
            nx, ny = x + dx, y + dy
            out.add(frozenset(((x, y), (nx, ny))))
            x, y = nx, ny
    return out


def _left_cell(u, v):
    (x0, y0), (x1, y1) = u, v
    if y0 == y1:
        return (min(x0, x1), y0 - 1) if x1 > x0 else (x1, y0)
    return (x0, min(y0, y1)) if y1 > y0 else (x0 - 1, y1)


def _right_cell(u, v):
    return _left_cell(v, u)


@dataclass
class GeometricMap:
    arrangement: GeoArrangement
    map: RootedMap
    root_edge: list                 # lattice points from B_γb to B_γa
    face_labels: dict               # pair index p -> face id
    region_of: dict                 # cell -> face id
    edges: set
    label_cells: dict               # face id -> cell of its opener


def extract_map(a: WordAnalysis, arr: GeoArrangement) -> GeometricMap:
    edges = set()
    for pl in arr.polylines():
        edges |= unit_edges(pl.points)
    nbr = defaultdict(list)
    for e in edges:
        u, v = tuple(e)
        nbr[u].append(v)
        nbr[v].append(u)
    for v, ns in nbr.items():
        if len(ns) not in (2, 3):
            raise GeometryError(f"junction of degree {len(ns)} at {v}")

    # regions by flood fill over unit cells
    xs = [p[0] for p in nbr]
    ys = [p[1] for p in nbr]
    x_lo, x_hi, y_lo, y_hi = min(xs) - 1, max(xs) + 1, min(ys) - 1, max(ys) + 1
    region, count = {}, 0
    for cx in range(x_lo, x_hi):
        for cy in range(y_lo, y_hi):
            if (cx, cy) in region:
                continue
            stack = [(cx, cy)]
            region[(cx, cy)] = count
            while stack:
                x, y = stack.pop()
                for (nx, ny), wall in (((x + 1, y), ((x + 1, y), (x + 1, y + 1))),
                                       ((x - 1, y), ((x, y), (x, y + 1))),
                                       ((x, y + 1), ((x, y + 1), (x + 1, y + 1))),
                                       ((x, y - 1), ((x, y), (x + 1, y)))):
                    if not (x_lo <= nx < x_hi and y_lo <= ny < y_hi) or (nx, ny) in region:
                        continue
                    if frozenset(wall) in edges:
                        continue
                    region[(nx, ny)] = count
                    stack.append((nx, ny))
            count += 1
    if count != len(a.pairs):
        raise GeometryError(f"{count} regions for {len(a.pairs)} pairs")

    name = {}
    for p, (al, _) in enumerate(a.pairs):
        r = region[arr.table.A(al)]
        if r in name:
            raise GeometryError(f"opener {al} shares a region with another opener")
        name[r] = p
    names = {r: f"w{p}" for r, p in name.items()}
    region_of = {c: names[r] for c, r in region.items()}

    # half-edges with the face on the left; leftmost turn walking
    def turn_order(u, v):
        dx, dy = v[0] - u[0], v[1] - u[1]
        left, straight, right = (dy, -dx), (dx, dy), (-dy, dx)
        return [d for d in (left, straight, right, (-dx, -dy))]

    def succ(u, v):
        for dx, dy in turn_order(u, v):
            w = (v[0] + dx, v[1] + dy)
            if frozenset((v, w)) in edges:
                return w
        raise GeometryError("dead end")

    # root edge λ
    c2 = arr.curves[2]
    s2 = a.Sigma[(Term(2),)]
    ga, gb = s2[0], s2[-1]
    yb = c2.lower[0][2]
    p_start = (arr.table.x[gb], yb)
    p_end = (arr.table.x[ga], yb)

    def chain_from(u, v):
        """Unit steps from the junction u through v up to the next junction."""
        path = [u, v]
        while len(nbr[path[-1]]) == 2:
            a_, b_ = nbr[path[-1]]
            path.append(a_ if a_ != path[-2] else b_)
        return path

    root_chain = None
    for v in nbr[p_start]:
        ch = chain_from(p_start, v)
        if ch[-1] == p_end and len(ch) > 2 and ch[1][1] == yb and ch[1][0] > p_start[0]:
            root_chain = ch
    if root_chain is None:
        raise GeometryError("root edge not found")

    def walk(u, v):
        """Chains around the face on the left of u->v, starting with that chain."""
        seq, start = [], (u, v)
        while True:
            ch = chain_from(u, v)
            seq.append(ch)
            w = succ(ch[-2], ch[-1])
            u, v = ch[-1], w
            if (u, v) == start:
                return seq
            if len(seq) > 4 * len(edges):
                raise GeometryError("face walk does not close")

    faces = [f"w{p}" for p in range(len(a.pairs))]
    bord = {}
    starts = {}
    for e in sorted(edges, key=lambda e: sorted(e)):
        u, v = sorted(e)
        for s, t in ((u, v), (v, u)):
            if len(nbr[s]) != 3:
                continue
            f = region_of[_left_cell(s, t)]
            starts.setdefault(f, (s, t))
    # root faces start at λ: w0 on one side, w1 on the other
    r0, r1 = root_chain[0], root_chain[1]
    lf, rf = region_of[_left_cell(r0, r1)], region_of[_right_cell(r0, r1)]
    if {lf, rf} != {"w0", "w1"}:
        raise GeometryError("root edge does not separate w0 and w1")
    back = root_chain[::-1]
    starts[lf] = (r0, r1)
    starts[rf] = (back[0], back[1])
    for f in faces:
        if f not in starts:
            raise GeometryError(f"face {f} has no boundary junction")
        seq = walk(*starts[f])
        bord[f] = tuple(region_of[_right_cell(ch[0], ch[1])] for ch in seq)
    m = RootedMap(tuple(faces), bord, "w0", "w1")
    errs = validate_map(m)
    if errs:
        raise GeometryError("extracted map is inconsistent: " + "; ".join(errs))
    return GeometricMap(arr, m, root_chain, {p: f"w{p}" for p in range(len(a.pairs))},
                        region_of, edges,
                        {f"w{p}": arr.table.A(al) for p, (al, _) in enumerate(a.pairs)})


def decode(word) -> GeometricMap:
    rep = validate(word)
    if not rep.valid:
        raise ValueError(rep.summary())
    a = rep.analysis
    return extract_map(a, build_arrangement(a))


# -- output ------------------------------------------------------------------------------

def geometry_dump(gm: GeometricMap) -> str:
    arr = gm.arrangement
    lines = ["ladder " + " | ".join(arr.ladder.labels()),
             "columns " + " ".join(map(str, arr.table.columns))]
    for pl in arr.polylines():
        lines.append(f"{pl.kind} {pl.label}: " + " ".join(f"{x},{y}" for x, y in pl.points))
    lines.append("root: " + " ".join(f"{x},{y}" for x, y in gm.root_edge))
    return "\n".join(lines) + "\n"


PALETTE = ("#f4d35e", "#ee964b", "#7fb7be", "#b5d99c")


def render_svg(gm: GeometricMap, coloring: dict | None = None, scale: int = 24) -> str:
    """SVG drawing of the regions, edges and root edge; coloring maps face -> 0..3."""
    cells = gm.region_of
    xs = [c[0] for c in cells]
    ys = [c[1] for c in cells]
    x0, y0 = min(xs), min(ys)
    w, h = (max(xs) - x0 + 1) * scale, (max(ys) - y0 + 1) * scale

    def P(p):
        return (p[0] - x0) * scale, (p[1] - y0) * scale

    out = [f'<svg xmlns="http://www.w3.org/2000/svg" width="{w}" height="{h}" '
           f'viewBox="0 0 {w} {h}">']
    if coloring:
        for (cx, cy), f in sorted(cells.items()):
            col = coloring.get(f)
            if col is not None and f != "w0":
                px, py = P((cx, cy))
                out.append(f'<rect x="{px}" y="{py}" width="{scale}" height="{scale}" '
                           f'fill="{PALETTE[col % 4]}" stroke="none"/>')
    for e in sorted(gm.edges, key=lambda e: sorted(e)):
        (ax, ay), (bx, by) = map(P, sorted(e))
        out.append(f'<line x1="{ax}" y1="{ay}" x2="{bx}" y2="{by}" stroke="black" stroke-width="2"/>')
    pts = " ".join("%d,%d" % P(p) for p in gm.root_edge)
    out.append(f'<polyline points="{pts}" fill="none" stroke="red" stroke-width="3"/>')
    for f, (cx, cy) in sorted(gm.label_cells.items()):
        px, py = P((cx, cy))
        out.append(f'<text x="{px + scale // 8}" y="{py + 3 * scale // 4}" '
                   f'font-size="{scale // 2}" font-family="monospace">{f}</text>')
    out.append("</svg>")
    return "\n".join(out) + "\n"
