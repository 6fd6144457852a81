"""Rooted cubic planar maps encoded as bracket words, with a validator for the
words and an orthogonal drawing that decodes them back."""
from .encoder import Encoding, EncodingError, emit_word, encode
from .geometry import GeometryError, decode, render_svg
from .mapmodel import RootedMap, are_equivalent, format_map_text, parse_map_text, validate_map
from .words import tokenize, validate

__all__ = [
    "Encoding", "EncodingError", "GeometryError", "RootedMap", "are_equivalent", "decode",
    "emit_word", "encode", "format_map_text", "parse_map_text", "render_svg", "tokenize",
    "validate", "validate_map",
]
__version__ = "0.1.0"
