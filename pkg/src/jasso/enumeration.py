"""Generate-and-validate enumeration of complex words by number of pairs.

Words are grown as labelled trees from the root.  Each opener's children list
is drawn from the regular shape that rule 3 forces on it
([g-ramajo] Δ (ramajo Δ)* [d-ramajo] tg*, with Δ made of ln, ba, ca), and a
child kind is only offered when it receives a non-empty stratino.  Every
complete word then goes through the full validator.
"""
from __future__ import annotations

import re

from .sequences import Term
from .words import sigma_of, validate_tokens

# kid letters: S sn, T tc, L ln, G tg (openers) and u h b c (monomials)
_KIND = {"S": "sn", "T": "tc", "L": "ln", "G": "tg", "u": "cu", "h": "ch", "b": "ba", "c": "ca"}
_OPEN = set("STLG")

# NFA over kid letters; states listed with their outgoing edges
_NFA = {
    "start": {"u": {"g"}, "S": {"g", "r"}, "T": {"gt"}, "h": {"delta"},
              "L": {"delta"}, "b": {"delta"}, "c": {"delta"}, "G": {"tail"}},
    "g": {"S": {"g"}, "T": {"gt"}, "h": {"delta"}},
    "gt": {"u": {"g"}},
    "delta": {"L": {"delta"}, "b": {"delta"}, "c": {"delta"}, "S": {"r"}, "G": {"tail"}},
    "r": {"S": {"r"}, "T": {"rt"}, "h": {"delta"}, "G": {"tail"}},
    "rt": {"u": {"r"}, "G": {"tail"}},
    "tail": {"G": {"tail"}},
}
_ACCEPT = {"start", "delta", "r", "rt", "tail"}

# mr and zouc openers close both sides of their chain: Δ0 (ramajo Δ)*, and a
# zouc that is not median opens Δ0 with ba
_NFA_Z = {
    "start": {"b": {"delta"}},
    "delta": {"L": {"delta"}, "b": {"delta"}, "c": {"delta"}, "S": {"r"}},
    "r": {"S": {"r"}, "T": {"rt"}, "h": {"delta"}},
    "rt": {"u": {"r"}},
}
_ACCEPT_Z = {"delta"}


def default_max_monomials(pairs: int) -> int:
    """Each zouc brings at most ba, ca and cu; each chain one ch and at least one sn."""
    return 3 * max(pairs - 2, 0)


def children_lists(sig, max_open: int, max_mono: int, kind: str = "sn", median: bool = False):
    """Kid strings accepted by the shape automaton, within budget and allowed by sig."""
    allowed = [x for x in "STLGuhbc" if sigma_of(_KIND[x], sig)]
    if kind in ("mr", "tg", "tc"):
        nfa, accept = _NFA_Z, _ACCEPT_Z
        first = {"delta"} if kind == "mr" or median else {"start"}
    else:
        nfa, accept, first = _NFA, _ACCEPT, {"start"}

    def walk(states, prefix, o, m):
        if states & accept:
            yield prefix
        for x in allowed:
            if x in _OPEN:
                if o == 0:
                    continue
            elif m == 0:
                continue
            nxt = set()
            for s in states:
                nxt |= nfa[s].get(x, set())
            if nxt:
                yield from walk(nxt, prefix + x, o - (x in _OPEN), m - (x not in _OPEN))

    yield from walk(first, "", max_open, max_mono)


def _serialize(node) -> list:
    kind, kids = node[0], node[2]
    if kind in ("cu", "ch", "ba", "ca"):
        return [kind]
    out = [kind + "+"]
    for k in kids:
        out += _serialize(k)
    return out + [kind + "-"]


_RAMAJO = re.compile(r"S(?:S|Tu)*h")
_TG_PREFIX = re.compile(r"bc?")
_TC_PREFIX = re.compile(r"bL*c?")


def _parts(kids: str):
    """(Rd, has G, blocks of R') of a kid string, in kid letters."""
    r = "".join(x for x in kids if x in "STuh")
    cut = r.rfind("h") + 1
    blocks = [b + "h" for b in r[:cut].split("h")[:-1]]
    return r[cut:], "G" in kids, blocks


def _left_ok(kids: str, cg: bool, prev_rd: str) -> bool:
    _, _, blocks = _parts(kids)
    if cg:
        return not blocks or _RAMAJO.fullmatch(blocks[0]) is not None
    rg = blocks[0] if blocks else ""
    if not kids.startswith(rg):
        return False
    joined = prev_rd + rg
    return not joined or _RAMAJO.fullmatch(joined) is not None


def candidate_words(pairs: int, max_monomials: int | None = None):
    """Token lists with the given number of pairs passing the tree-shape pruning.

    Nodes are expanded in word order, so when an opener is reached everything
    before it is fixed: whether it starts a chain, the right part of the
    previous opener of its row, and whether that opener ended its chain."""
    if pairs < 3:
        return
    if max_monomials is None:
        max_monomials = default_max_monomials(pairs)
    mr = ["mr", "", [], (Term(1),), None]   # kind, kid letters, kid nodes, stratino, parent
    openers = ("sn", "tc", "ln", "tg", "mr")

    def needs_successor(node) -> bool:
        rd, has_g, _ = _parts(node[1])
        return bool(rd or has_g)

    def fan_row(node):
        X, n = node[3][:-2], node[3][-2].value
        return X + (Term(n, True),) if node[0] == "tg" else X + (Term(n + 1),)

    def fan_step(fans, node):
        """Record node in the fans of the zoucs above it; None when a fan breaks."""
        z = node[4]
        while z is not None:
            if z[0] in ("tg", "tc") and fan_row(z) == node[3]:
                letters = fans.get(id(z), "") + {"ba": "b", "ca": "c", "ln": "L"}.get(node[0], "?")
                rx = _TG_PREFIX if z[0] == "tg" else _TC_PREFIX
                if not rx.fullmatch(letters):
                    return None
                fans = dict(fans)
                fans[id(z)] = letters
            z = z[4]
        return fans

    def grow(pending, rows, fans, o, m):
        if not pending:
            if o == 0 and not any(last is not None and needs_successor(last)
                                  for last, _ in rows.values()):
                yield ["zc+"] + _serialize(mr) + ["zc-"]
            return
        (node, sig, median), rest = pending[0], pending[1:]
        if node == "end":
            got = fans.get(id(sig), "")
            if got == "bc" or (sig[0] == "tc" and got.endswith("c")):
                yield from grow(rest, rows, fans, o, m)
            return
        kind = node[0]
        fans = fan_step(fans, node)
        if fans is None:
            return
        last, ch_since = rows.get(sig, (None, False))
        if kind not in openers:
            if kind == "ch" and last is not None and not ch_since and needs_successor(last):
                return
            rows = dict(rows)
            rows[sig] = (last, ch_since or kind == "ch")
            yield from grow(rest, rows, fans, o, m)
            return
        prev_rd = ""
        if last is not None:
            rd, has_g, _ = _parts(last[1])
            if ch_since and (rd or has_g):
                return
            prev_rd = "" if ch_since else rd
        cg = kind in ("mr", "tg", "tc") or last is None or ch_since
        rows = dict(rows)
        rows[sig] = (node, False)
        for kids in children_lists(sig, o, m, kind, median):
            if not _left_ok(kids, cg, prev_rd):
                continue
            if kind in ("tg", "tc"):
                # direct ba, ca and ln kids of a zouc all sit in its fan row
                rx = _TG_PREFIX if kind == "tg" else _TC_PREFIX
                if not rx.fullmatch("".join(x for x in kids if x in "bcL")):
                    continue
            node[1], node[2] = kids, []
            items = []
            for j, x in enumerate(kids):
                child = [_KIND[x], "", [], sigma_of(_KIND[x], sig), node]
                node[2].append(child)
                items.append((child, child[3], x == "T" and set(kids[j + 1:]) <= {"G"}))
            if kind in ("tg", "tc"):
                items.append(("end", node, False))
            opened = sum(x in _OPEN for x in kids)
            o2 = o - opened
            # rows still waiting for a next opener must be served by pending
            # openers or by the remaining budget
            waiting = {s for s, (lst, _) in rows.items() if lst is not None and needs_successor(lst)}
            waiting -= {it[1] for it in items + rest if it[0] != "end" and it[0][0] in openers}
            if len(waiting) <= o2:
                yield from grow(items + rest, rows, fans, o2, m - (len(kids) - opened))
        node[1], node[2] = "", []

    yield from grow([(mr, mr[3], False)], {}, {}, pairs - 2, max_monomials)


def enumerate_words(pairs: int, max_monomials: int | None = None):
    """Valid words with exactly this many pairs, in generation order."""
    for toks in candidate_words(pairs, max_monomials):
        if validate_tokens(toks).valid:
            yield " ".join(toks)
