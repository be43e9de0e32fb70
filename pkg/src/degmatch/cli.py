"""Command-line front end: ingest pattern and text, match, report.

Exit codes follow the grep convention: 0 when at least one occurrence was
found, 1 when none, 2 on input errors, 3 when --self-check disagrees with
the brute-force reference.
"""

import argparse
import json
import sys
import warnings
from dataclasses import dataclass

from . import bench as bench_mod
from .core import (
    Alphabet,
    DegenerateString,
    DNA_ALPHABET,
    ParseError,
    parse_bracket,
    parse_iupac,
    parse_solid,
)
from .matcher import find_occurrences
from .oracle import naive_match


class FastaError(ValueError):
    pass


class EmptyFile(FastaError):
    pass


class SequenceBeforeHeader(FastaError):
    pass


_BRACKET_METACHARS = frozenset("[],")


@dataclass(frozen=True)
class RunConfig:
    pattern: str | None = None
    pattern_file: str | None = None
    text: str | None = None
    text_file: str | None = None
    pattern_syntax: str = "bracket"
    text_syntax: str = "solid"
    fmt: str = "positions"
    diagnostics: bool = False
    self_check: bool = False
    bench: str | None = None

    def __post_init__(self):
        if self.bench is not None:
            return
        if (self.pattern is None) == (self.pattern_file is None):
            raise ValueError("exactly one of --pattern or --pattern-file is required")
        if self.text is not None and self.text_file is not None:
            raise ValueError("--text and --text-file are mutually exclusive")


def _split_fasta(contents: str):
    """FASTA records as (id, [(line number, chunk)]) with whitespace stripped."""
    records = []
    current = None
    for line_no, line in enumerate(contents.splitlines(), start=1):
        stripped = line.strip()
        if not stripped:
            continue
        if stripped.startswith(">"):
            header = stripped[1:].strip()
            rid = header.split()[0] if header else ""
            current = (rid, [])
            records.append(current)
        else:
            if current is None:
                raise SequenceBeforeHeader(
                    f"line {line_no}: sequence data before any '>' header"
                )
            current[1].append((line_no, "".join(stripped.split())))
    if not records:
        raise EmptyFile("no FASTA records found")
    return records


def _line_of(chunks, position: int | None) -> int:
    if chunks and position is not None:
        consumed = 0
        for line_no, chunk in chunks:
            consumed += len(chunk)
            if position <= consumed:
                return line_no
    return chunks[0][0] if chunks else 0


def ingest_fasta(contents: str, parse) -> list[tuple[str, DegenerateString]]:
    """Parse FASTA ``contents`` into (record id, sequence) pairs.

    ``parse`` maps the concatenated raw sequence of one record to a
    DegenerateString; parse failures are re-raised with the record id and
    source line attached. Empty records warn and stay in the list.
    """
    out = []
    for rid, chunks in _split_fasta(contents):
        raw = "".join(chunk for _, chunk in chunks)
        if not raw:
            warnings.warn(f"FASTA record {rid!r} has an empty sequence", stacklevel=2)
        try:
            out.append((rid, parse(raw)))
        except ParseError as err:
            line = _line_of(chunks, err.position)
            raise type(err)(f"record {rid!r}, line {line}: {err}", err.position) from err
    return out


def _read(path: str) -> str:
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _collect_chars(raw: str, syntax: str) -> set:
    chars = set(raw)
    chars -= {c for c in chars if c.isspace()}
    if syntax in ("bracket",):
        chars -= _BRACKET_METACHARS
    return chars


def _infer_alphabet(pattern_raw: str, pattern_syntax: str, records, text_syntax: str) -> Alphabet:
    """Lowercase union of every character appearing in the inputs."""
    chars = _collect_chars(pattern_raw, pattern_syntax)
    for _, raw in records:
        chars |= _collect_chars(raw, text_syntax)
    folded = sorted({c.lower() for c in chars})
    if not folded:
        raise ParseError("cannot infer an alphabet from empty input")
    return Alphabet(folded)


def _make_parser(syntax: str, alphabet: Alphabet):
    if syntax == "iupac":
        return parse_iupac
    if syntax == "bracket":
        return lambda raw: parse_bracket(raw, alphabet)
    return lambda raw: parse_solid(raw, alphabet)


def _load_text_records(config: RunConfig, stdin) -> list[tuple[str | None, str]]:
    """Raw records as (id, sequence text); id None for a single anonymous
    source. FASTA framing is detected by a leading '>'."""
    if config.text is not None:
        joined = "".join(config.text.split())
        if not joined:
            raise EmptyFile("text input is empty")
        return [(None, joined)]
    contents = _read(config.text_file) if config.text_file is not None else stdin.read()
    if contents.lstrip().startswith(">"):
        return [(rid, raw) for rid, chunks in _split_fasta(contents)
                for raw in ["".join(chunk for _, chunk in chunks)]]
    joined = "".join(contents.split())
    if not joined:
        raise EmptyFile("text input is empty")
    return [(None, joined)]


def _emit(record_id, report, pattern_length, fmt, diagnostics, out) -> None:
    verdict_of = {}
    if diagnostics and report.verdicts is not None:
        verdict_of = dict(zip(report.approximate_occurrences, report.verdicts))
    for pos in report.exact_occurrences:
        if fmt == "positions":
            prefix = f"{record_id}:" if record_id is not None else ""
            out.write(f"{prefix}{pos}\n")
        elif fmt == "tsv":
            row = [record_id if record_id is not None else "-", str(pos)]
            if diagnostics:
                row.append(",".join(verdict_of.get(pos - 1, ())))
            out.write("\t".join(row) + "\n")
        else:  # json-lines
            obj = {
                "record": record_id if record_id is not None else "-",
                "position": pos,
                "pattern_length": pattern_length,
            }
            if diagnostics:
                obj["verdicts"] = list(verdict_of.get(pos - 1, ()))
            out.write(json.dumps(obj) + "\n")


def run(config: RunConfig, out=None, err=None, stdin=None) -> int:
    """Execute one run; returns the process exit code."""
    out = out if out is not None else sys.stdout
    err = err if err is not None else sys.stderr
    stdin = stdin if stdin is not None else sys.stdin

    if config.bench is not None:
        grid = bench_mod.parse_grid(config.bench)
        out.write(bench_mod.run_scaling(grid).to_tsv() + "\n")
        return 0

    pattern_raw = (
        config.pattern if config.pattern is not None else _read(config.pattern_file)
    ).strip()
    records = _load_text_records(config, stdin)

    if config.pattern_syntax == "iupac" or config.text_syntax == "iupac":
        alphabet = DNA_ALPHABET
    else:
        alphabet = _infer_alphabet(pattern_raw, config.pattern_syntax, records, config.text_syntax)

    pattern = _make_parser(config.pattern_syntax, alphabet)(pattern_raw)
    parse_text = _make_parser(config.text_syntax, alphabet)

    found = False
    for rid, raw in records:
        if not raw:
            err.write(f"degmatch: warning: record {rid!r} has an empty sequence\n")
        try:
            text = parse_text(raw)
        except ParseError as e:
            if rid is not None:
                raise type(e)(f"record {rid!r}: {e}", e.position) from e
            raise
        report = find_occurrences(pattern, text, diagnostics=config.diagnostics)
        if config.self_check:
            expected = naive_match(pattern, text)
            if list(report.exact_occurrences) != expected:
                err.write(
                    f"degmatch: self-check failed for record {rid or '-'!r}: "
                    f"matcher={list(report.exact_occurrences)} oracle={expected}\n"
                )
                return 3
        _emit(rid, report, len(pattern), config.fmt, config.diagnostics, out)
        found = found or bool(report.exact_occurrences)
    return 0 if found else 1


def _build_argparser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="degmatch",
        description="Find exact occurrences of a degenerate pattern in a text.",
    )
    p.add_argument("-p", "--pattern", help="pattern as an inline string")
    p.add_argument("--pattern-file", help="read the pattern from a file")
    p.add_argument("--text", help="text as an inline string")
    p.add_argument("--text-file", help="read the text (plain or FASTA) from a file; stdin when absent")
    p.add_argument("--pattern-syntax", choices=["bracket", "iupac"], default="bracket")
    p.add_argument("--text-syntax", choices=["solid", "bracket", "iupac"], default="solid")
    p.add_argument("--format", dest="fmt", choices=["positions", "tsv", "json-lines"],
                   default="positions")
    p.add_argument("--diagnostics", action="store_true",
                   help="include per-placeholder match verdicts in tsv/json output")
    p.add_argument("--self-check", action="store_true",
                   help="cross-check results against the brute-force matcher")
    p.add_argument("--bench", metavar="SPEC",
                   help="run the scaling benchmark, e.g. n=32768,65536,k=2,4,sigma=4,reps=5")
    return p


def main(argv=None) -> int:
    args = _build_argparser().parse_args(argv)
    try:
        config = RunConfig(
            pattern=args.pattern,
            pattern_file=args.pattern_file,
            text=args.text,
            text_file=args.text_file,
            pattern_syntax=args.pattern_syntax,
            text_syntax=args.text_syntax,
            fmt=args.fmt,
            diagnostics=args.diagnostics,
            self_check=args.self_check,
            bench=args.bench,
        )
        return run(config)
    except (ParseError, FastaError, OSError, ValueError) as e:
        print(f"degmatch: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
