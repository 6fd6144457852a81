"""Ordered trees given by a parent map and ordered children lists, and the
balanced bracket words that encode them."""
from __future__ import annotations

import sys
from dataclasses import dataclass, field
from typing import Hashable


@dataclass
class Dallajascar:
    root: Hashable
    parent: dict = field(default_factory=dict)    # node -> parent (root absent or None)
    children: dict = field(default_factory=dict)  # node -> tuple of children

    @classmethod
    def from_children(cls, root, children: dict) -> "Dallajascar":
        kids = {x: tuple(c) for x, c in children.items()}
        parent = {root: None}
        stack = [root]
        while stack:
            x = stack.pop()
            for c in kids.get(x, ()):
                parent[c] = x
                stack.append(c)
        for x in parent:
            kids.setdefault(x, ())
        return cls(root, parent, kids)

    @property
    def elements(self) -> set:
        return set(self.parent) | set(self.children)

    def kids(self, x) -> tuple:
        return self.children.get(x, ())

    def depth(self, x) -> int:
        d = 0
        while self.parent.get(x) is not None:
            x = self.parent[x]
            d += 1
        return d

    def ancestors(self, x) -> list:
        """Chain x, φ(x), φ²(x), ... up to the root."""
        out = [x]
        while self.parent.get(x) is not None:
            x = self.parent[x]
            out.append(x)
        return out


def validate_dallajascar(d: Dallajascar) -> list[str]:
    errs = []
    elems = d.elements
    if d.parent.get(d.root) is not None:
        errs.append("i: root has a parent")
    for x in elems:
        if x != d.root and d.parent.get(x) is None:
            errs.append(f"ii: {x!r} has no parent")
    for x in elems:
        seen, y = {x}, d.parent.get(x)
        while y is not None:
            if y in seen:
                errs.append(f"iii: parent cycle through {x!r}")
                break
            seen.add(y)
            y = d.parent.get(y)
    listed = []
    for x in elems:
        kids = d.kids(x)
        if len(set(kids)) != len(kids):
            errs.append(f"iv: children of {x!r} repeat")
        pre = {y for y in elems if y != d.root and d.parent.get(y) == x}
        if set(kids) != pre:
            errs.append(f"iv: children of {x!r} differ from parent preimage")
        listed.extend(kids)
    if sorted(map(repr, listed)) != sorted(repr(x) for x in elems if x != d.root):
        errs.append("iv: children lists do not partition the non-root elements")
    return errs


def emboite(d: Dallajascar, x, y) -> bool:
    """True when x is a strict ancestor of y."""
    y = d.parent.get(y)
    while y is not None:
        if y == x:
            return True
        y = d.parent.get(y)
    return False


def _split_at_lca(d: Dallajascar, x, y):
    ax, ay = d.ancestors(x)[::-1], d.ancestors(y)[::-1]
    i = 0
    while i < min(len(ax), len(ay)) and ax[i] == ay[i]:
        i += 1
    return ax, ay, i


def precede(d: Dallajascar, x, y) -> bool:
    """True when neither contains the other and x's branch comes first."""
    if x == y or emboite(d, x, y) or emboite(d, y, x):
        return False
    ax, ay, i = _split_at_lca(d, x, y)
    kids = d.kids(ax[i - 1])
    return kids.index(ax[i]) < kids.index(ay[i])


def order_cmp(d: Dallajascar, x, y) -> int:
    """Pre-order comparison: ancestors first, then sibling order."""
    if x == y:
        return 0
    if emboite(d, x, y) or precede(d, x, y):
        return -1
    return 1


def preorder(d: Dallajascar) -> list:
    out, stack = [], [d.root]
    while stack:
        x = stack.pop()
        out.append(x)
        stack.extend(reversed(d.kids(x)))
    return out


# -- simple words --------------------------------------------------------------

def simple_word_of(d: Dallajascar) -> str:
    """Leftmost substitution of x -> "(" children ")" starting from the root."""
    parts = []

    def walk(x):
        parts.append("(")
        for c in d.kids(x):
            walk(c)
        parts.append(")")

    sys.setrecursionlimit(max(10000, sys.getrecursionlimit()))
    walk(d.root)
    return "".join(parts)


class WordError(ValueError):
    def __init__(self, message: str, position: int | None = None):
        super().__init__(message)
        self.position = position


def match_brackets(word: str) -> list[tuple[int, int]]:
    """Pairs (opener, closer) in 1-based positions, ordered by opener.

    Repeatedly removes an opener immediately followed by a closer; raises
    WordError when the word is not balanced."""
    stack, pairs = [], []
    for i, ch in enumerate(word, 1):
        if ch == "(":
            stack.append(i)
        elif ch == ")":
            if not stack:
                raise WordError("closer without opener", i)
            pairs.append((stack.pop(), i))
        else:
            raise WordError(f"unexpected character {ch!r}", i)
    if stack:
        raise WordError("opener never closed", stack[-1])
    return sorted(pairs)


def validate_simple_word(word: str) -> list[tuple[int, int]]:
    """Checks balance and that the first opener closes last; returns the pairs."""
    if not word:
        raise WordError("empty word", 0)
    pairs = match_brackets(word)
    if pairs[0] != (1, len(word)):
        raise WordError("first opener does not close the word", pairs[0][1])
    return pairs


def dallajascar_of_simple_word(word: str) -> Dallajascar:
    """Tree on pair indices 0..N; the parent of pair k is the latest earlier
    pair whose closer comes after k's closer."""
    pairs = validate_simple_word(word)
    parent = {0: None}
    stack = [0]
    for k in range(1, len(pairs)):
        a, b = pairs[k]
        while pairs[stack[-1]][1] < b:
            stack.pop()
        parent[k] = stack[-1]
        stack.append(k)
    children = {k: [] for k in parent}
    for k in range(1, len(pairs)):
        children[parent[k]].append(k)
    return Dallajascar(0, parent, {k: tuple(v) for k, v in children.items()})


def ordered_trees(n: int):
    """All ordered trees with n nodes, as nested tuples of children."""
    if n == 1:
        yield ()
        return
    # forests of n-1 nodes as children of the root
    yield from _forests(n - 1)


def _forests(n: int):
    if n == 0:
        yield ()
        return
    for first in range(1, n + 1):
        for t in ordered_trees(first):
            for rest in _forests(n - first):
                yield (t,) + rest


def dallajascar_of_nested(tree: tuple) -> Dallajascar:
    children, counter = {}, [0]

    def build(t):
        me = counter[0]
        counter[0] += 1
        children[me] = tuple(build(c) for c in t)
        return me

    build(tree)
    return Dallajascar.from_children(0, children)


def same_tree(d1: Dallajascar, d2: Dallajascar) -> bool:
    """Structural equality of ordered trees (children compared in order)."""
    def shape(d, x):
        return tuple(shape(d, c) for c in d.kids(x))
    return shape(d1, d1.root) == shape(d2, d2.root)
