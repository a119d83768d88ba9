"""Circular binary words whose only squares are 00, 11 and 0101."""

from .catalog import load_catalog, parse_morphism, serialize_morphism
from .constructor import (
    FORBIDDEN,
    LengthCertificate,
    Recipe,
    construct,
    knockout,
    reachable_lengths,
    replay,
)
from .morphism import HNReport, Morphism, apply, apply_circular, certify_hn
from .search import SearchOutcome, decide, decide_range
from .ternary import generate_level_ternary, substitute
from .words import (
    B,
    S,
    T,
    Alphabet,
    CircularWord,
    SquareOccurrence,
    Word,
    circular_factors,
    conjugates,
    find_squares,
    is_circular_fs,
    is_circular_square_free,
    is_fs_word,
    is_square_free,
    project_to_ternary,
)

__version__ = "0.1.0"
