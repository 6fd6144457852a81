"""The 16-token alphabet shared by the encoder, the validator and the decoder."""
from __future__ import annotations

from enum import Enum

PAIR_KINDS = ("zc", "mr", "tg", "tc", "sn", "ln")
MONO_KINDS = ("cu", "ch", "ba", "ca")
ALPHABET = tuple(k + s for k in PAIR_KINDS for s in "+-") + MONO_KINDS


class Mono(Enum):
    """Monomial markers as they appear inside H, R, T, S and Δ sequences."""
    CU = "cu"
    CH = "ch"
    BA = "ba"
    CA = "ca"

    def __repr__(self) -> str:
        return self.name


CU, CH, BA, CA = Mono.CU, Mono.CH, Mono.BA, Mono.CA


def opener(kind: str) -> str:
    return kind + "+"


def closer(kind: str) -> str:
    return kind + "-"


def is_opener(tok: str) -> bool:
    return tok.endswith("+")


def is_closer(tok: str) -> bool:
    return tok.endswith("-")


def is_mono(tok: str) -> bool:
    return tok in MONO_KINDS


def kind_of(tok: str) -> str:
    return tok[:2]


def item_text(x) -> str:
    """Render a face or a monomial marker."""
    return x.value.upper() if isinstance(x, Mono) else str(x)
