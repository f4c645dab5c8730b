"""Save and load value tables.

The file format is a versioned header line followed by one record per line:
the canonical key in hex and its game value. Loading a cache and replaying
any computation gives bit-identical results to a cold run; a file with an
unknown version or a malformed line is rejected with its line number.
"""

from __future__ import annotations

from typing import Optional

from .canon import CanonKey
from .engine import VALUE_LIMIT, GrundyTable

FORMAT_NAME = "graphchomp-grundy-cache"
FORMAT_VERSION = 1


class CacheFormatError(ValueError):
    """Raised for unreadable cache files; the message names the line."""


def save_table(table: GrundyTable, path: str) -> None:
    """Write all entries, sorted by key for deterministic output."""
    with open(path, "w", encoding="ascii") as fh:
        fh.write(f"{FORMAT_NAME} {FORMAT_VERSION}\n")
        for key in sorted(table.entries):
            fh.write(f"{key.hex()} {table.entries[key]}\n")


def load_table(path: str, table: Optional[GrundyTable] = None) -> GrundyTable:
    """Read a cache file, merging into ``table`` when given."""
    table = table if table is not None else GrundyTable()
    with open(path, "r", encoding="ascii") as fh:
        header = fh.readline().rstrip("\n")
        fields = header.split()
        if len(fields) != 2 or fields[0] != FORMAT_NAME:
            raise CacheFormatError(f"{path}:1: not a {FORMAT_NAME} file")
        if fields[1] != str(FORMAT_VERSION):
            raise CacheFormatError(
                f"{path}:1: unsupported version {fields[1]!r} "
                f"(expected {FORMAT_VERSION})")
        for lineno, raw in enumerate(fh, start=2):
            line = raw.strip()
            if not line:
                continue
            parts = line.split()
            if len(parts) != 2:
                raise CacheFormatError(f"{path}:{lineno}: expected 'HEX VALUE'")
            try:
                key = CanonKey.from_hex(parts[0])
                value = int(parts[1])
            except ValueError:
                raise CacheFormatError(
                    f"{path}:{lineno}: malformed record {line!r}") from None
            if not (0 <= value < VALUE_LIMIT):
                raise CacheFormatError(
                    f"{path}:{lineno}: value {value} out of range")
            table.bind(key, value)
    return table
