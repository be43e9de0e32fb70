"""Alphabets, degenerate symbols and strings, and the bracket/IUPAC parsers.

A degenerate symbol is a non-empty subset of the alphabet occupying one
string position; it is stored as a bit mask over alphabet ranks so that
"do two symbols match" is a single integer AND. Positions are 1-based in
every public interface.
"""

from typing import Iterable, Iterator


class ParseError(ValueError):
    """Input text could not be parsed into a degenerate string."""

    def __init__(self, message: str, position: int | None = None):
        super().__init__(message)
        self.position = position  # 1-based character index, when known


class UnknownCharacter(ParseError):
    pass


class EmptyBracket(ParseError):
    pass


class UnclosedBracket(ParseError):
    pass


class UnknownCode(ParseError):
    pass


class OutOfRange(IndexError):
    pass


class EmptyPattern(ValueError):
    pass


# Metacharacters of the bracket grammar plus the index separator; none of
# these may ever be an alphabet member.
_FORBIDDEN = frozenset("#[],")


class Alphabet:
    """Ordered set of distinct single characters; rank = position in order."""

    __slots__ = ("symbols", "_ranks")

    def __init__(self, symbols: Iterable[str]):
        syms = tuple(symbols)
        if not syms:
            raise ValueError("alphabet must contain at least one symbol")
        seen = set()
        for c in syms:
            if len(c) != 1:
                raise ValueError(f"alphabet symbols must be single characters, got {c!r}")
            if c in _FORBIDDEN or c.isspace():
                raise ValueError(f"reserved character {c!r} cannot be an alphabet symbol")
            if c in seen:
                raise ValueError(f"duplicate alphabet symbol {c!r}")
            seen.add(c)
        self.symbols = syms
        self._ranks = {c: r for r, c in enumerate(syms)}

    def __len__(self) -> int:
        return len(self.symbols)

    def __contains__(self, ch: str) -> bool:
        return ch in self._ranks

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Alphabet) and self.symbols == other.symbols

    def __hash__(self) -> int:
        return hash(self.symbols)

    def __repr__(self) -> str:
        return f"Alphabet({''.join(self.symbols)!r})"

    def rank(self, ch: str) -> int:
        try:
            return self._ranks[ch]
        except KeyError:
            raise UnknownCharacter(f"character {ch!r} is not in the alphabet") from None

    def char(self, rank: int) -> str:
        return self.symbols[rank]

    def fold(self, ch: str) -> str | None:
        """Case-fold ``ch`` onto an alphabet member, or None if impossible."""
        if ch in self._ranks:
            return ch
        for alt in (ch.lower(), ch.upper()):
            if alt in self._ranks:
                return alt
        return None


class DegenerateSymbol:
    """Non-empty subset of an alphabet, stored as a bit mask over ranks.

    Plain Python integers give word-at-a-time set operations for any
    alphabet size; the mask is immutable after construction.
    """

    __slots__ = ("alphabet", "mask")

    def __init__(self, alphabet: Alphabet, mask: int):
        if mask <= 0:
            raise ValueError("degenerate symbol must be a non-empty set")
        if mask >> len(alphabet):
            raise ValueError("mask has bits outside the alphabet")
        self.alphabet = alphabet
        self.mask = mask

    @classmethod
    def of(cls, alphabet: Alphabet, chars: Iterable[str]) -> "DegenerateSymbol":
        mask = 0
        for c in chars:
            mask |= 1 << alphabet.rank(c)
        return cls(alphabet, mask)

    @classmethod
    def solid(cls, alphabet: Alphabet, ch: str) -> "DegenerateSymbol":
        return cls(alphabet, 1 << alphabet.rank(ch))

    @property
    def is_solid(self) -> bool:
        return self.mask.bit_count() == 1

    def __len__(self) -> int:
        return self.mask.bit_count()

    def chars(self) -> str:
        """Members in alphabet order."""
        return "".join(c for r, c in enumerate(self.alphabet.symbols) if self.mask >> r & 1)

    def solid_rank(self) -> int:
        if not self.is_solid:
            raise ValueError("symbol is not solid")
        return self.mask.bit_length() - 1

    def matches(self, other: "DegenerateSymbol") -> bool:
        if self.alphabet != other.alphabet:
            raise ValueError("symbols are over different alphabets")
        return self.mask & other.mask != 0

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, DegenerateSymbol)
            and self.alphabet == other.alphabet
            and self.mask == other.mask
        )

    def __hash__(self) -> int:
        return hash((self.alphabet, self.mask))

    def __repr__(self) -> str:
        s = self.chars()
        return f"DegenerateSymbol({s if self.is_solid else '[' + s + ']'})"


def symbols_match(a: DegenerateSymbol, b: DegenerateSymbol) -> bool:
    """True iff the two symbol sets intersect. Symmetric, reflexive, and
    deliberately not transitive."""
    return a.matches(b)


class DegenerateString:
    """Immutable sequence of degenerate symbols over a single alphabet."""

    __slots__ = ("alphabet", "symbols", "non_solid_positions")

    def __init__(self, alphabet: Alphabet, symbols: Iterable[DegenerateSymbol]):
        syms = tuple(symbols)
        for s in syms:
            if s.alphabet != alphabet:
                raise ValueError("symbol alphabet does not match string alphabet")
        self.alphabet = alphabet
        self.symbols = syms
        self.non_solid_positions = tuple(
            p for p, s in enumerate(syms, start=1) if not s.is_solid
        )

    def __len__(self) -> int:
        return len(self.symbols)

    def __iter__(self) -> Iterator[DegenerateSymbol]:
        return iter(self.symbols)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, DegenerateString)
            and self.alphabet == other.alphabet
            and self.symbols == other.symbols
        )

    def __hash__(self) -> int:
        return hash((self.alphabet, self.symbols))

    def __repr__(self) -> str:
        return f"DegenerateString({format_bracket(self)!r})"

    @property
    def is_solid(self) -> bool:
        return not self.non_solid_positions

    def is_conservative(self, k: int) -> bool:
        """At most ``k`` non-solid positions."""
        return len(self.non_solid_positions) <= k

    def symbol_at(self, pos: int) -> DegenerateSymbol:
        """Symbol at 1-based position ``pos``."""
        if not 1 <= pos <= len(self.symbols):
            raise OutOfRange(f"position {pos} outside 1..{len(self.symbols)}")
        return self.symbols[pos - 1]

    def substring(self, i: int, j: int) -> "DegenerateString":
        """Symbols at 1-based positions i..j; i = j+1 yields the empty string."""
        if not (1 <= i <= j + 1 and j <= len(self.symbols)):
            raise OutOfRange(f"substring bounds ({i}, {j}) invalid for length {len(self.symbols)}")
        return DegenerateString(self.alphabet, self.symbols[i - 1 : j])


def parse_bracket(text: str, alphabet: Alphabet) -> DegenerateString:
    """Parse bracket notation, e.g. ``a[bc]da[bd]``.

    A bare character is a solid symbol; ``[xyz]`` is a set. Whitespace and
    commas inside a group are skipped, duplicate members collapse, and a
    singleton group normalizes to a solid symbol.
    """
    symbols = []
    i, n = 0, len(text)
    while i < n:
        c = text[i]
        if c == "[":
            start = i + 1  # 1-based position of '['
            mask = 0
            i += 1
            while i < n and text[i] != "]":
                m = text[i]
                if m.isspace() or m == ",":
                    i += 1
                    continue
                folded = alphabet.fold(m)
                if folded is None:
                    raise UnknownCharacter(
                        f"unknown character {m!r} at position {i + 1}", i + 1
                    )
                mask |= 1 << alphabet.rank(folded)
                i += 1
            if i >= n:
                raise UnclosedBracket(f"bracket opened at position {start} is never closed", start)
            if mask == 0:
                raise EmptyBracket(f"empty bracket group at position {start}", start)
            symbols.append(DegenerateSymbol(alphabet, mask))
            i += 1
        else:
            folded = alphabet.fold(c)
            if folded is None:
                raise UnknownCharacter(f"unknown character {c!r} at position {i + 1}", i + 1)
            symbols.append(DegenerateSymbol.solid(alphabet, folded))
            i += 1
    return DegenerateString(alphabet, symbols)


def parse_solid(text: str, alphabet: Alphabet) -> DegenerateString:
    """Parse a plain string of alphabet characters (every symbol solid)."""
    symbols = []
    for i, c in enumerate(text, start=1):
        folded = alphabet.fold(c)
        if folded is None:
            raise UnknownCharacter(f"unknown character {c!r} at position {i}", i)
        symbols.append(DegenerateSymbol.solid(alphabet, folded))
    return DegenerateString(alphabet, symbols)


def format_bracket(s: DegenerateString) -> str:
    """Canonical bracket form: solid symbols bare, sets as ``[..]`` with
    members in alphabet order, no whitespace. Inverse of ``parse_bracket``."""
    parts = []
    for sym in s.symbols:
        parts.append(sym.chars() if sym.is_solid else f"[{sym.chars()}]")
    return "".join(parts)


#: The 15 standard nucleotide codes over {A, C, G, T}.
IUPAC_CODES = {
    "A": "A", "C": "C", "G": "G", "T": "T",
    "R": "AG", "Y": "CT", "S": "CG", "W": "AT", "K": "GT", "M": "AC",
    "B": "CGT", "D": "AGT", "H": "ACT", "V": "ACG",
    "N": "ACGT",
}

DNA_ALPHABET = Alphabet("ACGT")


def parse_iupac(text: str) -> DegenerateString:
    """Parse IUPAC nucleotide codes (case-insensitive) over {A, C, G, T}."""
    symbols = []
    for i, c in enumerate(text, start=1):
        members = IUPAC_CODES.get(c.upper())
        if members is None:
            raise UnknownCode(f"unknown IUPAC code {c!r} at position {i}", i)
        symbols.append(DegenerateSymbol.of(DNA_ALPHABET, members))
    return DegenerateString(DNA_ALPHABET, symbols)
