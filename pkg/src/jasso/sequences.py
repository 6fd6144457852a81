"""Finite sequences, their orders, and stratinos.

A stratino is a tuple of ``Term`` values.  Each term is an integer that may be
marked as shifted (written ``n#``).  Terms are ordered ``1 < 1# < 2 < 2# < ...``
and stratinos compare lexicographically with a proper prefix being smaller,
which is exactly Python's tuple ordering on ``(value, shifted)`` pairs.
"""
from __future__ import annotations

from typing import NamedTuple, Sequence


class Term(NamedTuple):
    value: int
    shifted: bool = False

    def __str__(self) -> str:
        return f"{self.value}#" if self.shifted else str(self.value)


Stratino = tuple  # tuple[Term, ...]
EPS: Stratino = ()


# -- plain sequence relations ------------------------------------------------

def is_prefix(u: Sequence, v: Sequence) -> bool:
    return len(u) <= len(v) and tuple(v[: len(u)]) == tuple(u)


def is_suffix(u: Sequence, v: Sequence) -> bool:
    return len(u) <= len(v) and tuple(v[len(v) - len(u):]) == tuple(u)


def find_factor(u: Sequence, v: Sequence, start: int = 0) -> int:
    """Index of the first occurrence of ``u`` as a contiguous block of ``v``, or -1."""
    u, v = tuple(u), tuple(v)
    for i in range(start, len(v) - len(u) + 1):
        if v[i: i + len(u)] == u:
            return i
    return -1


def is_factor(u: Sequence, v: Sequence) -> bool:
    return find_factor(u, v) >= 0


def is_subsequence(u: Sequence, v: Sequence) -> bool:
    it = iter(v)
    return all(any(x == y for y in it) for x in u)


def is_simple(u: Sequence) -> bool:
    return len(set(u)) == len(u)


def nesile_relations(u: Sequence, v: Sequence) -> dict:
    return {
        "prefix": is_prefix(u, v),
        "suffix": is_suffix(u, v),
        "factor": is_factor(u, v),
        "subnesile": is_subsequence(u, v),
        "simple": is_simple(u),
    }


def cmp(a, b) -> int:
    return (a > b) - (a < b)


def shortlex(u: Sequence, v: Sequence, key=None) -> int:
    """Crossword order: shorter first, then lexicographic."""
    if len(u) != len(v):
        return cmp(len(u), len(v))
    if key is not None:
        u, v = [key(x) for x in u], [key(x) for x in v]
    return cmp(tuple(u), tuple(v))


# -- stratinos ----------------------------------------------------------------

def compare_terms(a: Term, b: Term) -> int:
    return cmp(tuple(a), tuple(b))


def compare_stratinos(x: Stratino, y: Stratino) -> int:
    return cmp(tuple(tuple(t) for t in x), tuple(tuple(t) for t in y))


def parse_stratino(text: str) -> Stratino:
    text = text.strip()
    if text in ("", "ε"):
        return EPS
    terms = []
    for part in text.split(","):
        part = part.strip()
        shifted = part.endswith("#")
        digits = part[:-1] if shifted else part
        if not digits.isdigit() or int(digits) < 1:
            raise ValueError(f"bad stratino term {part!r}")
        terms.append(Term(int(digits), shifted))
    return tuple(terms)


def format_stratino(x: Stratino) -> str:
    return ",".join(str(t) for t in x)


def st(*parts) -> Stratino:
    """Shorthand: ``st(1, "2#", 1)`` builds the stratino 1,2#,1."""
    out = []
    for p in parts:
        if isinstance(p, Term):
            out.append(p)
        elif isinstance(p, int):
            out.append(Term(p))
        else:
            out.extend(parse_stratino(str(p)))
    return tuple(out)


def stratino_kind(x: Stratino) -> str:
    if not x:
        return "empty"
    return "shifted" if x[-1].shifted else "natural"


def is_natural(x: Stratino) -> bool:
    return bool(x) and not x[-1].shifted


def is_shifted(x: Stratino) -> bool:
    return bool(x) and x[-1].shifted


def is_unitary(x: Stratino) -> bool:
    return bool(x) and x[-1] == Term(1)


def natural_of(x: Stratino) -> Stratino:
    if not x:
        return x
    return x[:-1] + (Term(x[-1].value),)


def shifted_of(x: Stratino) -> Stratino:
    if not x:
        return x
    return x[:-1] + (Term(x[-1].value, True),)


def dnj_member(x: Stratino, p: int) -> bool:
    if is_unitary(x):
        return len(x) == p + 1
    return len(x) == p


def d_set_member(x: Stratino, y: Stratino) -> bool:
    """Membership in the family attached to the unitary stratino ``y = (X, 1)``."""
    if not is_unitary(y):
        raise ValueError("d_set_member needs a unitary stratino")
    base = y[:-1]
    k = len(base)
    if x[:k] != base or len(x) not in (k + 1, k + 2):
        return False
    n = x[k]
    if len(x) == k + 1:
        return n.shifted or n.value >= 2
    return x[k + 1] == Term(1)
