"""Exact matching of conservative degenerate patterns.

A degenerate string has set-valued positions; this package finds all
exact occurrences of such a pattern in a (possibly degenerate) text in
O(k*n) time after index construction, where k bounds the total number of
set-valued positions, and ships a brute-force reference matcher for
verification.
"""

from .core import (
    Alphabet,
    DegenerateString,
    DegenerateSymbol,
    DNA_ALPHABET,
    EmptyBracket,
    EmptyPattern,
    IUPAC_CODES,
    OutOfRange,
    ParseError,
    UnclosedBracket,
    UnknownCharacter,
    UnknownCode,
    format_bracket,
    parse_bracket,
    parse_iupac,
    parse_solid,
    symbols_match,
)
from .lce import LceIndex, MissingSeparator, SeparatorNotUnique
from .matcher import (
    FAKE,
    REAL,
    MatchReport,
    MismatchTable,
    SubstitutedString,
    filter_occurrences,
    find_occurrences,
    kangaroo_search,
    precompute_membership,
    substitute,
)
from .oracle import RandomInstanceSpec, generate_instance, naive_match

__version__ = "0.1.0"

__all__ = [
    "Alphabet",
    "DegenerateString",
    "DegenerateSymbol",
    "DNA_ALPHABET",
    "EmptyBracket",
    "EmptyPattern",
    "FAKE",
    "IUPAC_CODES",
    "LceIndex",
    "MatchReport",
    "MismatchTable",
    "MissingSeparator",
    "OutOfRange",
    "ParseError",
    "REAL",
    "RandomInstanceSpec",
    "SeparatorNotUnique",
    "SubstitutedString",
    "UnclosedBracket",
    "UnknownCharacter",
    "UnknownCode",
    "filter_occurrences",
    "find_occurrences",
    "format_bracket",
    "generate_instance",
    "kangaroo_search",
    "naive_match",
    "parse_bracket",
    "parse_iupac",
    "parse_solid",
    "precompute_membership",
    "substitute",
    "symbols_match",
]
