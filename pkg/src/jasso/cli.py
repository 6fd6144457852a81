"""Command-line entry point: ``jasso <verb> ...``.

Exit codes: 0 ok, 1 semantic failure, 2 input error, 3 internal inconsistency.
"""
from __future__ import annotations

import argparse
import sys

from .encoder import EncodingError, encode
from .enumeration import enumerate_words
from .geometry import GeometryError, decode, geometry_dump, render_svg
from .mapmodel import MapFormatError, are_equivalent, format_map_text, parse_map_text, validate_map
from .sequences import format_stratino
from .tokens import item_text
from .words import LexError, tokenize, validate_tokens

OK, FAIL, INPUT, INTERNAL = 0, 1, 2, 3
MAX_PAIRS = 6


class CliError(Exception):
    def __init__(self, message: str, code: int):
        super().__init__(message)
        self.code = code


def _read(path: str) -> str:
    try:
        if path == "-":
            return sys.stdin.read()
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as e:
        raise CliError(f"cannot read {path}: {e.strerror}", INPUT)


def _write(path: str, text: str) -> None:
    try:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
    except OSError as e:
        raise CliError(f"cannot write {path}: {e.strerror}", INPUT)


def load_map(path: str):
    try:
        m = parse_map_text(_read(path))
    except MapFormatError as e:
        raise CliError(f"{path}: {e}", INPUT)
    errs = validate_map(m)
    if errs:
        raise CliError(f"{path}: not a rooted cubic planar map: " + "; ".join(errs), INPUT)
    return m


def load_tokens(path: str) -> list:
    try:
        return tokenize(_read(path))
    except LexError as e:
        raise CliError(f"{path}: {e}", INPUT)


def encode_map(m, path: str = "map"):
    try:
        return encode(m)
    except EncodingError as e:
        raise CliError(f"{path}: cannot encode: {e}", INPUT)


def decode_tokens(toks: list):
    rep = validate_tokens(toks)
    if not rep.valid:
        raise CliError(rep.summary(), FAIL)
    try:
        return decode(toks)
    except GeometryError as e:
        raise CliError(f"valid word failed to decode: {e}", INTERNAL)


def encoding_report(enc) -> str:
    lines = ["visit order: " + " ".join(enc.order), "rows:"]
    for X in enc.nj:
        items = " ".join(item_text(x) for x in enc.sigma[X])
        lines.append(f"  {format_stratino(X) or 'ε'}: {items}")
    col = enc.coloring()
    lines.append("coloring:")
    for c in sorted(set(col.values())):
        lines.append(f"  c{c}: " + " ".join(f for f in enc.order if col[f] == c))
    return "\n".join(lines) + "\n"


# -- verbs ---------------------------------------------------------------------------

def cmd_encode(args) -> int:
    enc = encode_map(load_map(args.map), args.map)
    print(enc.word)
    if args.report:
        print(encoding_report(enc), end="")
    return OK


def cmd_validate(args) -> int:
    rep = validate_tokens(load_tokens(args.word))
    print(rep.summary() if rep.valid else f"invalid: first failing rule {rep.rule}")
    for v in rep.violations:
        print(f"  {v}")
    return OK if rep.valid else FAIL


def cmd_decode(args) -> int:
    gm = decode_tokens(load_tokens(args.word))
    text = format_map_text(gm.map)
    if args.output:
        _write(args.output, text)
    else:
        print(text, end="")
    if args.svg:
        _write(args.svg, render_svg(gm))
    if args.geometry:
        _write(args.geometry, geometry_dump(gm))
    return OK


def cmd_equiv(args) -> int:
    m1, m2 = load_map(args.first), load_map(args.second)
    same = encode_map(m1, args.first).tokens == encode_map(m2, args.second).tokens
    print("equivalent" if same else "distinct")
    if args.oracle:
        oracle = are_equivalent(m1, m2)
        print(f"oracle: {'equivalent' if oracle else 'distinct'}")
        if oracle != same:
            raise CliError("word comparison and oracle disagree", INTERNAL)
    return OK if same else FAIL


def cmd_color(args) -> int:
    enc = encode_map(load_map(args.map), args.map)
    col = enc.coloring()
    for f in enc.order:
        print(f"{f} c{col[f]}")
    if args.svg:
        gm = decode_tokens(enc.tokens)
        by_w = {f"w{p}": col[f] for p, f in enumerate(enc.order)}
        _write(args.svg, render_svg(gm, by_w))
    return OK


def _first_diff(a: list, b: list) -> int:
    for i, (x, y) in enumerate(zip(a, b), 1):
        if x != y:
            return i
    return min(len(a), len(b)) + 1


def cmd_roundtrip(args) -> int:
    text = _read(args.input)
    mode = args.mode
    if mode == "auto":
        body = [ln.split("#", 1)[0].strip() for ln in text.splitlines()]
        first = next((ln for ln in body if ln), "")
        mode = "map" if first.split(" ", 1)[0] in ("faces", "border", "root") else "word"
    if mode == "word":
        try:
            toks = tokenize(text)
        except LexError as e:
            raise CliError(f"{args.input}: {e}", INPUT)
        gm = decode_tokens(toks)
        back = encode_map(gm.map).tokens
        if back != toks:
            i = _first_diff(toks, back)
            print(f"mismatch at token {i}")
            return FAIL
        print(f"identity: {len(toks)} tokens")
        return OK
    try:
        m = parse_map_text(text)
    except MapFormatError as e:
        raise CliError(f"{args.input}: {e}", INPUT)
    if validate_map(m):
        raise CliError(f"{args.input}: not a rooted cubic planar map", INPUT)
    enc = encode_map(m, args.input)
    gm = decode_tokens(enc.tokens)
    if not are_equivalent(gm.map, m):
        bad = [f"w{p}" for p, f in enumerate(enc.order)
               if len(gm.map.bordures[f"w{p}"]) != len(m.bordures[f])]
        print("mismatch" + (f" at face {bad[0]}" if bad else ""))
        return FAIL
    print(f"equivalent: {len(m.faces)} faces")
    return OK


def cmd_enumerate(args) -> int:
    if args.max_pairs > args.bound:
        raise CliError(f"max pairs {args.max_pairs} exceeds bound {args.bound}", INPUT)
    status = OK
    print("pairs count")
    for p in range(1, args.max_pairs + 1):
        words = list(enumerate_words(p))
        print(f"{p} {len(words)}")
        if args.list:
            for w in words:
                print(f"  {w}")
        if args.check_injective and words:
            maps = [decode_tokens(w.split()).map for w in words]
            clash = [(i, j) for i in range(len(maps)) for j in range(i + 1, len(maps))
                     if are_equivalent(maps[i], maps[j])]
            print(f"  injective: {'yes' if not clash else 'no'}")
            if clash:
                status = INTERNAL
    return status


# -- parser --------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="jasso", description="Rooted cubic planar maps as bracket words.")
    sub = p.add_subparsers(dest="verb", required=True)

    s = sub.add_parser("encode", help="print the word of a map")
    s.add_argument("map")
    s.add_argument("--report", action="store_true", help="also print rows, coloring and visit order")
    s.set_defaults(fn=cmd_encode)

    s = sub.add_parser("validate", help="check a word against the four rules")
    s.add_argument("word")
    s.set_defaults(fn=cmd_validate)

    s = sub.add_parser("decode", help="rebuild the map of a valid word")
    s.add_argument("word")
    s.add_argument("-o", "--output", help="write the map here instead of stdout")
    s.add_argument("--svg", help="write a drawing")
    s.add_argument("--geometry", help="write the ladder, columns and polylines")
    s.set_defaults(fn=cmd_decode)

    s = sub.add_parser("equiv", help="decide whether two maps are equivalent")
    s.add_argument("first")
    s.add_argument("second")
    s.add_argument("--oracle", action="store_true", help="cross-check with the backtracking test")
    s.set_defaults(fn=cmd_equiv)

    s = sub.add_parser("color", help="print the four-colouring of a map")
    s.add_argument("map")
    s.add_argument("--svg", help="write a coloured drawing")
    s.set_defaults(fn=cmd_color)

    s = sub.add_parser("roundtrip", help="check decode/encode identities")
    s.add_argument("input")
    s.add_argument("--mode", choices=("auto", "map", "word"), default="auto")
    s.set_defaults(fn=cmd_roundtrip)

    s = sub.add_parser("enumerate", help="count valid words by number of pairs")
    s.add_argument("max_pairs", type=int)
    s.add_argument("--bound", type=int, default=MAX_PAIRS)
    s.add_argument("--list", action="store_true", help="print the words too")
    s.add_argument("--check-injective", action="store_true",
                   help="check that decoded maps are pairwise distinct")
    s.set_defaults(fn=cmd_enumerate)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except CliError as e:
        print(f"jasso: {e}", file=sys.stderr)
        return e.code


if __name__ == "__main__":
    sys.exit(main())
