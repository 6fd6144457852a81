"""Complex words over the 16-token alphabet: tokenizing, the four validation
rules, and the tables they build along the way."""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import cmp_to_key

from .sequences import EPS, Term, compare_stratinos, is_natural, is_shifted, is_unitary
from .tokens import ALPHABET, is_closer, is_mono, is_opener, kind_of
from .trees import Dallajascar, WordError, emboite, match_brackets


class LexError(ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"token {position}: {message}")
        self.position = position


def tokenize(text: str) -> list[str]:
    toks = []
    for line in text.splitlines():
        toks.extend(line.split("#", 1)[0].split())
    for i, t in enumerate(toks, 1):
        if t not in ALPHABET:
            raise LexError(f"unknown token {t!r}", i)
    return toks


# -- grammars over L-strings ----------------------------------------------------------

_CHAR = {
    "zc+": "Z", "zc-": "z", "mr+": "M", "mr-": "m", "tg+": "G", "tg-": "g",
    "tc+": "T", "tc-": "t", "sn+": "S", "sn-": "s", "ln+": "L", "ln-": "l",
    "cu": "u", "ch": "h", "ba": "b", "ca": "c",
}
_FAN = r"b(?:Ll)*c"
GRAMMARS = {
    "trouglyre": r"(?:Gg)+",
    "stougammon": r"(?:Ss)+",
    "trenagatte": r"(?:Ttu)+",
    "lounafan": _FAN,
    "lounagatte": rf"(?:{_FAN})+",
    "ramajo": r"Ss(?:Ss|Ttu)*h",
    "d_ramajo": r"Ss(?:Ss|Ttu)*(?:Tt)?",
    "g_ramajo": r"u?(?:Ss|Ttu)*h",
    "stratajo": rf"Ss(?:Ss|{_FAN})*h",
    "d_stratajo": rf"Ss(?:Ss|{_FAN})*",
    "g_stratajo": rf"(?:Ss|{_FAN})*h",
}
_COMPILED = {k: re.compile(v) for k, v in GRAMMARS.items()}


def chars(tokens) -> str:
    return "".join(_CHAR[t] for t in tokens)


def matches(name: str, tokens) -> bool:
    return _COMPILED[name].fullmatch(chars(tokens)) is not None


def grammar_classify(tokens) -> list[str]:
    """Every regroup shape the token string belongs to (most specific first)."""
    s = chars(tokens)
    out = [k for k, rx in _COMPILED.items() if rx.fullmatch(s)]
    if "lounafan" in out and s == "bc":
        out.insert(out.index("lounafan"), "simple_lounafan")
    return out


# -- analysis tables -----------------------------------------------------------------

@dataclass
class Violation:
    rule: int
    condition: str
    position: int | None
    message: str

    def __str__(self) -> str:
        at = f" at {self.position}" if self.position is not None else ""
        return f"rule {self.rule} ({self.condition}){at}: {self.message}"


@dataclass
class WordAnalysis:
    tokens: list
    pairs: list = field(default_factory=list)          # (alpha_p, beta_p), p = 0..N
    closer_of: dict = field(default_factory=dict)
    E: list = field(default_factory=list)
    parent: dict = field(default_factory=dict)
    H: dict = field(default_factory=dict)
    sigma: dict = field(default_factory=dict)
    Sigma: dict = field(default_factory=dict)
    sSigma: dict = field(default_factory=dict)
    A: list = field(default_factory=list)
    Cg: set = field(default_factory=set)
    Cd: set = field(default_factory=set)
    G: dict = field(default_factory=dict)
    R: dict = field(default_factory=dict)
    Rd: dict = field(default_factory=dict)
    Rp: dict = field(default_factory=dict)
    Rg: dict = field(default_factory=dict)
    Rk: dict = field(default_factory=dict)             # alpha -> [R_1, ..., R_v]
    v: dict = field(default_factory=dict)
    Delta: dict = field(default_factory=dict)          # alpha -> [Δ_0, ..., Δ_v]
    zoucs: list = field(default_factory=list)
    fan: dict = field(default_factory=dict)
    Zm: set = field(default_factory=set)
    dG: dict = field(default_factory=dict)
    T: dict = field(default_factory=dict)
    S: dict = field(default_factory=dict)

    @property
    def eta(self) -> int:
        return len(self.tokens)

    def x(self, pos: int) -> str:
        return self.tokens[pos - 1]

    def kind(self, pos: int) -> str:
        return kind_of(self.x(pos))

    def L(self, seq) -> list[str]:
        out = []
        for g in seq:
            t = self.x(g)
            out.append(t)
            if is_opener(t):
                out.append(self.x(self.closer_of[g]))
        return out

    @property
    def nj(self) -> list:
        return sorted(self.Sigma, key=cmp_to_key(compare_stratinos))

    @property
    def tree(self) -> Dallajascar:
        return Dallajascar(1, {g: self.parent.get(g) for g in self.E},
                           {g: tuple(self.H.get(g, ())) for g in self.E})


@dataclass
class Report:
    valid: bool
    violations: list
    analysis: WordAnalysis | None
    rule: int | None = None       # first failing rule

    def summary(self) -> str:
        if self.valid:
            a = self.analysis
            return f"valid: {len(a.pairs)} pairs, {a.eta - 2 * len(a.pairs)} monomials, length {a.eta}"
        return f"invalid (rule {self.rule}): " + "; ".join(map(str, self.violations))


# -- rule 1 ----------------------------------------------------------------------------

def rule1(tokens: list) -> tuple[WordAnalysis, list]:
    a = WordAnalysis(list(tokens))
    errs = []
    eta = len(tokens)
    openers = [i for i, t in enumerate(tokens, 1) if is_opener(t)]
    if len(openers) < 3:
        errs.append(Violation(1, "1", None, f"only {len(openers)} opening tokens"))
        return a, errs
    skel_pos = [i for i, t in enumerate(tokens, 1) if not is_mono(t)]
    skel = "".join("(" if is_opener(tokens[i - 1]) else ")" for i in skel_pos)
    try:
        pairs = match_brackets(skel)
    except WordError as ex:
        pos = skel_pos[ex.position - 1] if ex.position else None
        errs.append(Violation(1, "2", pos, f"bracket skeleton: {ex}"))
        return a, errs
    pairs = [(skel_pos[i - 1], skel_pos[j - 1]) for i, j in pairs]
    if pairs[0][1] != skel_pos[-1]:
        errs.append(Violation(1, "2", pairs[0][1], "first opener does not close last"))
        return a, errs
    a.pairs = pairs
    a.closer_of = dict(pairs)
    for al, be in pairs:
        if kind_of(tokens[al - 1]) != kind_of(tokens[be - 1]):
            errs.append(Violation(1, "pair", al, f"{tokens[al - 1]} closed by {tokens[be - 1]}"))
    if pairs[0] != (1, eta) or tokens[0] != "zc+":
        errs.append(Violation(1, "3", 1, "the zc pair must span the whole word"))
    if pairs[1] != (2, eta - 1) or tokens[1] != "mr+":
        errs.append(Violation(1, "4", 2, "the mr pair must sit at 2 and length-1"))
    for al, _ in pairs[2:]:
        if kind_of(tokens[al - 1]) not in ("tg", "tc", "sn", "ln"):
            errs.append(Violation(1, "5", al, f"{tokens[al - 1]} may not appear inside"))
    return a, errs


def word_skeleton(a: WordAnalysis) -> None:
    stack = []
    for i, t in enumerate(a.tokens, 1):
        if is_closer(t):
            stack.pop()
            continue
        a.E.append(i)
        a.parent[i] = stack[-1] if stack else None
        a.H.setdefault(i, [])
        if stack:
            a.H[stack[-1]].append(i)
        if is_opener(t):
            stack.append(i)


# -- rule 2 ----------------------------------------------------------------------------

def sigma_of(kind: str, parent_sigma) -> tuple:
    """Stratino of a token from its kind and the stratino of its parent opener."""
    if not parent_sigma:
        return EPS
    X, n = parent_sigma[:-1], parent_sigma[-1]
    assert not n.shifted
    n = n.value
    if kind == "tg":
        return EPS if n == 1 else X + (Term(n), Term(1))
    if kind in ("tc", "cu"):
        return X + (Term(n, True), Term(1))
    if kind in ("sn", "ch"):
        return X + (Term(n + 1),)
    if kind == "ln":
        if is_shifted(X):
            return X[:-1] + (Term(X[-1].value + 1),)
        return EPS
    if kind in ("ba", "ca"):
        if not X or is_unitary(X):
            return EPS
        if is_natural(X):
            return X[:-1] + (Term(X[-1].value, True),)
        return X[:-1] + (Term(X[-1].value + 1),)
    return EPS


def sigma_table(a: WordAnalysis) -> list:
    errs = []
    for g in a.E:
        if g == 1:
            s = EPS
        elif g == 2:
            s = (Term(1),)
        else:
            s = sigma_of(a.kind(g), a.sigma[a.parent[g]])
            if not s:
                errs.append(Violation(2, "stratino", g, f"{a.x(g)} gets the empty stratino"))
        a.sigma[g] = s
    for g in a.E:
        a.Sigma.setdefault(a.sigma[g], []).append(g)
    if errs:
        return errs[:1]
    a.A = [al for al, _ in a.pairs[1:]]
    for X, items in a.Sigma.items():
        a.sSigma[X] = [g for g in items if is_opener(a.x(g))]
    return errs


# -- rule 3 ----------------------------------------------------------------------------

R_KINDS = ("tc", "sn", "cu", "ch")


def _split_after(seq, pred):
    """Blocks each ending with an element satisfying pred, plus the tail."""
    blocks, cur = [], []
    for g in seq:
        cur.append(g)
        if pred(g):
            blocks.append(cur)
            cur = []
    return blocks, cur


def rule3(a: WordAnalysis) -> list:
    errs = []
    for al in a.A:
        k = a.kind(al)
        row = a.Sigma[a.sigma[al]]
        srow = a.sSigma[a.sigma[al]]
        i = srow.index(al)
        if k in ("mr", "tg", "tc"):
            a.Cg.add(al)
            a.Cd.add(al)
            continue
        if i == 0 or any(a.kind(g) == "ch" for g in row if srow[i - 1] < g < al):
            a.Cg.add(al)
        if i == len(srow) - 1 or any(a.kind(g) == "ch" for g in row if al < g < srow[i + 1]):
            a.Cd.add(al)
    for al in a.A:
        H = a.H[al]
        a.G[al] = [g for g in H if a.kind(g) == "tg"]
        R = [g for g in H if a.kind(g) in R_KINDS]
        a.R[al] = R
        chs = [j for j, g in enumerate(R) if a.kind(g) == "ch"]
        if chs:
            a.Rp[al], a.Rd[al] = R[: chs[-1] + 1], R[chs[-1] + 1:]
        else:
            a.Rp[al], a.Rd[al] = [], list(R)
        blocks, _ = _split_after(a.Rp[al], lambda g: a.kind(g) == "ch")
        if al in a.Cg:
            a.Rg[al], a.Rk[al] = [], blocks
        else:
            a.Rg[al], a.Rk[al] = (blocks[0] if blocks else []), blocks[1:]
        a.v[al] = len(a.Rk[al])

    for al in a.A:
        H, G, Rd, Rg = a.H[al], a.G[al], a.Rd[al], a.Rg[al]
        if al in a.Cd and (G or Rd):
            errs.append(Violation(3, "1", al, "closes its chain but has a right part"))
        if Rd and not matches("d_ramajo", a.L(Rd)):
            errs.append(Violation(3, "2", al, "right part is not a d-ramajo"))
        if Rg and not matches("g_ramajo", a.L(Rg)):
            errs.append(Violation(3, "3", al, "left part is not a g-ramajo"))
        srow = a.sSigma[a.sigma[al]]
        i = srow.index(al)
        if i > 0:
            joined = a.L(a.Rd[srow[i - 1]]) + a.L(Rg)
            if joined and not matches("ramajo", joined):
                errs.append(Violation(3, "4", al, "junction with the previous opener is not a ramajo"))
        for blk in a.Rk[al]:
            if not matches("ramajo", a.L(blk)):
                errs.append(Violation(3, "5", al, "inner block is not a ramajo"))
        tail = Rd + G
        if H[len(H) - len(tail):] != tail:
            errs.append(Violation(3, "6", al, "right part and pinched children are not a suffix"))
        if H[: len(Rg)] != Rg:
            errs.append(Violation(3, "7", al, "left part is not a prefix"))
        pos = {g: j for j, g in enumerate(H)}
        for blk in a.Rk[al]:
            j = pos[blk[0]]
            if H[j: j + len(blk)] != blk:
                errs.append(Violation(3, "8", al, "inner block is not contiguous"))
        if errs:
            continue
        # complementary blocks
        cuts = [(len(Rg), None)]
        for blk in a.Rk[al]:
            cuts.append((pos[blk[0]], pos[blk[-1]] + 1))
        deltas, start = [], len(Rg)
        for blk in a.Rk[al]:
            deltas.append(H[start: pos[blk[0]]])
            start = pos[blk[-1]] + 1
        deltas.append(H[start: len(H) - len(tail)])
        a.Delta[al] = deltas
    return errs


# -- rule 4 ----------------------------------------------------------------------------

def rule4(a: WordAnalysis) -> list:
    errs = []
    tree = a.tree
    a.zoucs = [al for al in a.A if a.kind(al) in ("tg", "tc")]
    for al in a.zoucs:
        s = a.sigma[al]
        X, n = s[:-2], s[-2]
        if a.kind(al) == "tg":
            row = X + (Term(n.value, True),)
        else:
            row = X + (Term(n.value + 1),)
        a.fan[al] = [g for g in a.Sigma.get(row, []) if emboite(tree, al, g)]
    for al in a.A:
        if a.Rd.get(al):
            last = a.Rd[al][-1]
            if a.kind(last) == "tc":
                a.Zm.add(last)
    for al in a.zoucs:
        L = a.L(a.fan[al])
        if a.kind(al) == "tg" and L != ["ba", "ca"]:
            errs.append(Violation(4, "1", al, "pinched zouc needs the fan 'ba ca'"))
        if a.kind(al) == "tc" and not matches("lounafan", L):
            errs.append(Violation(4, "2", al, "fan is not a lounafan"))
        if al not in a.Zm:
            d0 = a.Delta[al][0] if a.Delta.get(al) else []
            if not d0 or a.x(d0[0]) != "ba":
                errs.append(Violation(4, "3", al, "first delta block does not start with ba"))
    return errs


# -- derived tables and row coherence -----------------------------------------------------

def derived_TS(a: WordAnalysis) -> list:
    errs = []

    def s_of(seq):
        out = []
        for g in seq:
            k = a.kind(g)
            if k == "tc":
                out += a.fan[g]
            elif k in ("sn", "ln", "ch"):
                out.append(g)
        return out

    for al in a.A:
        a.dG[al] = [x for g in a.G[al] for x in a.fan[g]]
        parts = [a.Rg[al]] + a.Rk[al] + [a.Rd[al]]
        a.T[al] = [g for p in parts for g in p if a.kind(g) in ("tc", "cu")]
        a.S[al] = [g for p in parts for g in s_of(p)]
    produced = {}
    for X in a.nj:
        if not X or not is_natural(X):
            continue
        srow = a.sSigma.get(X, [])
        if not srow:
            continue
        Z, n = X[:-1], X[-1].value
        for key, table in (((Term(n), Term(1)), a.G), ((Term(n, True),), a.dG),
                           ((Term(n, True), Term(1)), a.T), ((Term(n + 1),), a.S)):
            produced[Z + key] = [g for al in srow for g in table[al]]
    for X in a.nj:
        if len(X) <= 1 and X in ((), (Term(1),)):
            continue
        want = produced.get(X, [])
        if want != a.Sigma[X]:
            errs.append(Violation(5, "rows", a.Sigma[X][0],
                                  f"row {','.join(map(str, X))} is not rebuilt by its parent row"))
    for X, items in a.Sigma.items():
        L = a.L(items)
        if not X or X == (Term(1),):
            continue
        if is_unitary(X):
            shape = "trouglyre" if not X[-2].shifted else "trenagatte"
        elif is_shifted(X):
            shape = "lounagatte"
        else:
            shape = None
        if shape == "lounagatte":
            ok = chars(L) and re.fullmatch(r"(?:bc)+", chars(L))
        elif shape:
            ok = matches(shape, L)
        else:
            ok = re.fullmatch(rf"(?:{GRAMMARS['stratajo']})+", chars(L))
        if not ok:
            errs.append(Violation(5, "shape", items[0], f"row {','.join(map(str, X))} has the wrong shape"))
    return errs


def stratajos(a: WordAnalysis) -> list[list[int]]:
    """Factor every natural non-unitary row into its stratajos (CH-terminated)."""
    out = []
    for X in a.nj:
        if not X or is_unitary(X) or is_shifted(X):
            continue
        blocks, tail = _split_after(a.Sigma[X], lambda g: a.kind(g) == "ch")
        out.extend(blocks)
    return out


def validate_tokens(tokens: list, coherence: bool = True) -> Report:
    a, errs = rule1(tokens)
    if errs:
        return Report(False, errs, a, 1)
    word_skeleton(a)
    for rule, fn in ((2, sigma_table), (3, rule3), (4, rule4)):
        errs = fn(a)
        if errs:
            return Report(False, errs, a, rule)
    errs = derived_TS(a)
    if errs and coherence:
        return Report(False, errs, a, 5)
    return Report(True, [], a)


def validate(text_or_tokens, coherence: bool = True) -> Report:
    toks = tokenize(text_or_tokens) if isinstance(text_or_tokens, str) else list(text_or_tokens)
    return validate_tokens(toks, coherence)
