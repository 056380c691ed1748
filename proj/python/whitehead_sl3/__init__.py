"""Trace coordinates and representation reconstruction for symmetric SL(3,C) pairs."""

from ._core import (
    DEFAULT_SEED,
    SCHEMA,
    DetGuardError,
    FormatError,
    TraceCoords,
    WordParseError,
    certificates,
    check_relation,
    coords_of,
    f_eval,
    f_scale,
    hypersurface_polynomial,
    is_irreducible,
    is_ordinary,
    k_matrix,
    lifts,
    on_hypersurface,
    random_sl3,
    random_surface_matrix,
    sample,
    solve,
    solve_matrix,
    verify,
    word_trace,
)

__all__ = [
    "DEFAULT_SEED",
    "SCHEMA",
    "DetGuardError",
    "FormatError",
    "TraceCoords",
    "WordParseError",
    "certificates",
    "check_relation",
    "coords_of",
    "f_eval",
    "f_scale",
    "hypersurface_polynomial",
    "is_irreducible",
    "is_ordinary",
    "k_matrix",
    "lifts",
    "on_hypersurface",
    "random_sl3",
    "random_surface_matrix",
    "sample",
    "solve",
    "solve_matrix",
    "verify",
    "word_trace",
]
