"""CSV datasets of classical records, ranked against a preference formula."""
from __future__ import annotations

import csv
import io
from dataclasses import dataclass

from .errors import DataFormatError, UnboundAtomError
from .synthesis import parse_bool
from .values import FALSE, TRUE, TruthValue

__all__ = ["Dataset", "read_dataset"]


@dataclass(frozen=True)
class Dataset:
    columns: tuple[str, ...]
    records: tuple[tuple[bool, ...], ...]
    ids: tuple[str, ...]

    def assignments(self, atoms=None) -> list[dict[str, TruthValue]]:
        """One assignment per record, restricted to ``atoms`` when given.

        Raises :class:`UnboundAtomError` if an atom has no column.
        """
        cols = self.columns if atoms is None else tuple(atoms)
        index = {c: k for k, c in enumerate(self.columns)}
        for a in cols:
            if a not in index:
                raise UnboundAtomError(a)
        return [{a: TRUE if rec[index[a]] else FALSE for a in cols} for rec in self.records]


def read_dataset(text: str) -> Dataset:
    """Parse CSV text: a header line, then one record per line.

    A leading ``id`` column is carried through as the record label; without
    one, records are labelled by 1-based row number.
    """
    reader = csv.reader(io.StringIO(text))
    try:
        rows = [r for r in reader if r and any(c.strip() for c in r)]
    except csv.Error as e:
        raise DataFormatError(f"malformed CSV: {e}") from None
    if not rows:
        return Dataset((), (), ())
    header = [c.strip() for c in rows[0]]
    has_id = bool(header) and header[0].lower() == "id"
    columns = tuple(header[1:] if has_id else header)
    if len(set(header)) != len(header) or any(not c for c in header):
        raise DataFormatError("header has empty or duplicate column names")
    records, ids = [], []
    for lineno, r in enumerate(rows[1:], start=2):
        if len(r) != len(header):
            raise DataFormatError(f"line {lineno}: expected {len(header)} cells, got {len(r)}")
        cells = r[1:] if has_id else r
        try:
            records.append(tuple(parse_bool(c) for c in cells))
        except DataFormatError as e:
            raise DataFormatError(f"line {lineno}: {e}") from None
        ids.append(r[0].strip() if has_id else str(lineno - 1))
    return Dataset(columns, tuple(records), tuple(ids))
