"""Embedded reference data: printed generator matrices, extension vectors
and shortening sets, with replayable construction records.

Entries are never trusted: every claimed property (rank, LCD, minimum
weight, weight distribution, odd-likeness) is checked by ``verify_entry``
and the test suite.  Entries whose base code came from an external
database ship the construction data but no matrix; they are marked
optional and replay raises MissingBase instead of failing the suite.

Records may use another corpus entry as their base, so a table row is
one step on top of the row it was built from; replay resolves the chain
recursively back to a stored matrix.

The data directory can be overridden with the LCDKIT_CORPUS environment
variable (it must follow the same layout).
"""

from __future__ import annotations

import csv
import os
from dataclasses import dataclass
from pathlib import Path

from . import codes as codes_mod
from .codes import LinearCode, is_even_like, is_lcd, min_weight, read_code_file, weight_distribution
from .construct import ConstructionRecord, apply_record, parse_record


class CorpusError(ValueError):
    pass


class MissingBase(CorpusError):
    """The entry's base matrix is not distributed (external database code)."""


def data_dir() -> Path:
    override = os.environ.get("LCDKIT_CORPUS")
    if override:
        return Path(override)
    return Path(__file__).parent / "data"


@dataclass(frozen=True)
class CorpusEntry:
    id: str
    kind: str  # "code" | "record"
    file: str | None
    field_name: str
    n: int
    k: int
    d: int | None
    properties: tuple[str, ...]
    weights: dict[int, int] | None
    source: str
    optional: bool

    def claims_lcd(self) -> bool:
        return "lcd" in self.properties

    def claims_odd_like(self) -> bool:
        return "odd-like" in self.properties


def _parse_weights(text: str) -> dict[int, int] | None:
    if not text:
        return None
    out = {}
    for part in text.split():
        w, c = part.split(":")
        out[int(w)] = int(c)
    return out


def manifest() -> dict[str, CorpusEntry]:
    path = data_dir() / "manifest.csv"
    entries: dict[str, CorpusEntry] = {}
    with open(path, newline="", encoding="ascii") as fh:
        for row in csv.DictReader(fh):
            entry = CorpusEntry(
                id=row["id"],
                kind=row["kind"],
                file=row["file"] or None,
                field_name=row["field"],
                n=int(row["n"]),
                k=int(row["k"]),
                d=int(row["d"]) if row["d"] else None,
                properties=tuple(p for p in row["properties"].split(";") if p),
                weights=_parse_weights(row["weights"]),
                source=row["source"],
                optional=row["optional"] == "yes",
            )
            entries[entry.id] = entry
    return entries


def load(entry_id: str, entries: dict[str, CorpusEntry] | None = None) -> CorpusEntry:
    entries = manifest() if entries is None else entries
    try:
        return entries[entry_id]
    except KeyError:
        raise CorpusError(f"unknown corpus entry {entry_id!r}") from None


def load_record(entry: CorpusEntry) -> ConstructionRecord:
    if entry.kind != "record":
        raise CorpusError(f"{entry.id} is not a record entry")
    with open(data_dir() / entry.file, encoding="ascii") as fh:
        return parse_record(fh.read())


def resolve_code(entry_id: str, entries: dict[str, CorpusEntry] | None = None, _seen=()) -> LinearCode:
    """Materialize an entry as a code, replaying records recursively."""
    entries = manifest() if entries is None else entries
    if entry_id in _seen:
        raise CorpusError(f"record base cycle through {entry_id!r}")
    if entry_id not in entries:
        # allow records to point straight at a code file path
        path = data_dir() / entry_id
        if path.exists():
            return read_code_file(path)
        raise CorpusError(f"unknown corpus entry {entry_id!r}")
    entry = entries[entry_id]
    if entry.kind == "code":
        if entry.file is None:
            raise MissingBase(f"{entry.id}: matrix not distributed ({entry.source})")
        return read_code_file(data_dir() / entry.file)
    rec = load_record(entry)
    base = resolve_code(rec.base, entries, _seen + (entry_id,))
    steps = apply_record(rec, base)
    return steps[-1] if steps else base


def replay(entry_id: str, entries: dict[str, CorpusEntry] | None = None) -> list[LinearCode]:
    """Replay a record entry, returning the code after every step."""
    entries = manifest() if entries is None else entries
    entry = load(entry_id, entries)
    rec = load_record(entry)
    base = resolve_code(rec.base, entries, (entry_id,))
    return apply_record(rec, base)


@dataclass
class VerificationReport:
    entry_id: str
    ok: bool
    skipped: bool
    messages: list[str]


def verify_entry(entry: CorpusEntry, entries=None, threads: int = 1) -> VerificationReport:
    """Check every claim the manifest makes about one entry."""
    messages: list[str] = []
    try:
        code = resolve_code(entry.id, entries)
    except MissingBase as exc:
        if entry.optional:
            return VerificationReport(entry.id, True, True, [f"skipped: {exc}"])
        return VerificationReport(entry.id, False, False, [f"missing base: {exc}"])
    ok = True

    def check(cond, label):
        nonlocal ok
        if cond:
            messages.append(f"{label}: ok")
        else:
            messages.append(f"{label}: FAILED")
            ok = False

    check(code.field.name == entry.field_name, "field")
    check(code.params() == (entry.n, entry.k), f"parameters [{entry.n},{entry.k}]")
    if entry.claims_lcd():
        check(is_lcd(code), "lcd")
    if entry.d is not None:
        try:
            d = min_weight(code, threads=threads)
            check(d == entry.d, f"min weight {entry.d} (got {d})")
        except codes_mod.BudgetExceeded as exc:
            messages.append(f"min weight: inconclusive ({exc})")
            ok = False
    if entry.claims_odd_like():
        check(not is_even_like(code), "odd-like")
    if entry.weights is not None:
        wd = weight_distribution(code, threads=threads)
        check(dict(wd.nonzero()) == entry.weights, "weight distribution")
    return VerificationReport(entry.id, ok, False, messages)


def check_all(include_optional: bool = False, threads: int = 1) -> list[VerificationReport]:
    entries = manifest()
    reports = []
    for entry in entries.values():
        if entry.optional and not include_optional:
            try:
                resolve_code(entry.id, entries)
            except MissingBase as exc:
                reports.append(VerificationReport(entry.id, True, True, [f"skipped: {exc}"]))
                continue
            except CorpusError as exc:
                reports.append(VerificationReport(entry.id, False, False, [str(exc)]))
                continue
            # optional but resolvable: verify it anyway
        reports.append(verify_entry(entry, entries, threads=threads))
    return reports
