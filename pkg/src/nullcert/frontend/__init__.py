"""Instance formats and problem encoders."""

from nullcert.frontend.coloring import encode_kcoloring, parse_edges
from nullcert.frontend.documents import (
    DocumentError,
    emit_certificate,
    emit_no_solution,
    emit_system,
    parse_certificate,
    parse_system,
)
from nullcert.frontend.sat import CnfInstance, DimacsError, emit_dimacs, encode_3sat, parse_dimacs

__all__ = [
    "CnfInstance",
    "DimacsError",
    "DocumentError",
    "emit_certificate",
    "emit_dimacs",
    "emit_no_solution",
    "emit_system",
    "encode_3sat",
    "encode_kcoloring",
    "parse_certificate",
    "parse_dimacs",
    "parse_edges",
    "parse_system",
]
