"""Citation-record data model.

Defines the record/publication/event types, file ingestion (JSON and two CSV
layouts), validation, self-citation filtering and the descending citation
vector that every index module consumes.  Records are immutable after
parsing; everything here is a pure function of its inputs.

Two data fidelities exist side by side: counts-only records (enough for the
order-statistic indices) and event-level records (required for trend scoring,
per-year windows and self-citation filtering).  Operations that need events
fail loudly with FidelityError instead of silently approximating.
"""

from __future__ import annotations

import csv
import json
from dataclasses import dataclass
from pathlib import Path

from .errors import DomainError, FidelityError, RecordParseError, RecordValidationError

KINDS = ("researcher", "journal", "institution", "topic")
SELF_CITATION_MODES = ("include", "exclude_own", "exclude_coauthor")
G_CONVENTIONS = ("bounded", "unbounded")

_COUNTS_CSV_HEADER = ["id", "year", "author_count", "citation_count"]
_EVENTS_CSV_HEADER = ["pub_id", "pub_year", "author_count", "cite_year", "citing_authors"]


def normalize_author(name):
    """Author identity is exact string equality after trimming and case-folding."""
    return name.strip().casefold()


@dataclass(frozen=True)
class CitationEvent:
    """One citation: the year it was made and, optionally, who made it."""

    year: int
    citing_authors: tuple = ()


@dataclass(frozen=True)
class Publication:
    id: str
    year: int
    authors: tuple = ()
    author_count: int | None = None
    citation_count: int | None = None
    citation_events: tuple | None = None

    @property
    def has_events(self):
        return self.citation_events is not None

    def effective_author_count(self):
        if self.author_count is not None:
            return self.author_count
        if self.authors:
            return len(self.authors)
        return None

    def citations(self):
        """Total recorded citations; the event list wins when present."""
        if self.citation_events is not None:
            return len(self.citation_events)
        if self.citation_count is None:
            raise RecordValidationError(f"publication {self.id!r} carries no citation data")
        return self.citation_count


@dataclass(frozen=True)
class CitationRecord:
    """One evaluated entity (researcher, journal, institution or topic)."""

    entity: str
    kind: str = "researcher"
    owner_name: str | None = None
    publications: tuple = ()


@dataclass(frozen=True)
class IndexConfig:
    """Knobs shared by the index computations.

    now_year defaults to the latest year appearing anywhere in the record
    under evaluation, which keeps fixture files self-contained.  delta may be
    zero (no ageing), which is what makes the decayed indices collapse onto
    the plain h-index.
    """

    now_year: int | None = None
    gamma: float = 4.0
    delta: float = 1.0
    g_convention: str = "bounded"
    self_citation_mode: str = "include"
    alpha_predictive: float = -0.1
    beta_molinari: float = 0.4

    def __post_init__(self):
        if self.g_convention not in G_CONVENTIONS:
            raise ValueError(f"unknown g_convention {self.g_convention!r}")
        if self.self_citation_mode not in SELF_CITATION_MODES:
            raise ValueError(f"unknown self_citation_mode {self.self_citation_mode!r}")
        if self.gamma <= 0:
            raise ValueError("gamma must be positive")
        if self.delta < 0:
            raise ValueError("delta must be non-negative")


@dataclass(frozen=True)
class CitationVector:
    """Citation counts sorted descending, with the source publication ids
    retained rank by rank."""

    counts: tuple
    publication_ids: tuple


def validate_record(record):
    """Check every record invariant; raise RecordValidationError naming the
    offending publication."""
    if record.kind not in KINDS:
        raise RecordValidationError(
            f"record {record.entity!r}: unknown kind {record.kind!r}")
    seen = set()
    for pub in record.publications:
        if pub.id in seen:
            raise RecordValidationError(f"duplicate publication id {pub.id!r}")
        seen.add(pub.id)
        if pub.citation_count is None and pub.citation_events is None:
            raise RecordValidationError(
                f"publication {pub.id!r}: needs citation_count or citation_events")
        if pub.citation_count is not None and pub.citation_count < 0:
            raise RecordValidationError(
                f"publication {pub.id!r}: citation_count must be non-negative")
        if pub.citation_count is not None and pub.citation_events is not None:
            if pub.citation_count != len(pub.citation_events):
                raise RecordValidationError(
                    f"publication {pub.id!r}: citation_count {pub.citation_count} "
                    f"does not match {len(pub.citation_events)} citation events")
        if pub.citation_events is not None:
            for event in pub.citation_events:
                if event.year < pub.year:
                    raise RecordValidationError(
                        f"publication {pub.id!r}: citation event year {event.year} "
                        f"precedes publication year {pub.year}")
        if pub.author_count is not None and pub.author_count < 1:
            raise RecordValidationError(
                f"publication {pub.id!r}: author_count must be at least 1")
        if pub.authors and pub.author_count is not None and pub.author_count < len(pub.authors):
            raise RecordValidationError(
                f"publication {pub.id!r}: author_count smaller than the author list")
    return record


def resolve_now_year(record, config=None):
    """Observation year actually used: the configured one, or the latest year
    anywhere in the record.  Returns None for a record with no years at all."""
    config = config or IndexConfig()
    pub_years = [p.year for p in record.publications]
    all_years = list(pub_years)
    for pub in record.publications:
        if pub.citation_events:
            all_years.extend(e.year for e in pub.citation_events)
    if config.now_year is None:
        return max(all_years) if all_years else None
    if pub_years and config.now_year < max(pub_years):
        raise DomainError(
            f"now_year {config.now_year} precedes publication year {max(pub_years)}")
    return config.now_year


def filter_self_citations(record, mode="include"):
    """Drop self-citations and recompute counts.

    exclude_own removes events whose citing authors include the record owner;
    exclude_coauthor removes events whose citing authors intersect the cited
    publication's author list (plus the owner when set, so it always removes
    a superset of exclude_own).
    """
    if mode not in SELF_CITATION_MODES:
        raise ValueError(f"unknown self_citation_mode {mode!r}")
    if mode == "include":
        return record
    owner = normalize_author(record.owner_name) if record.owner_name else None
    if mode == "exclude_own" and owner is None:
        raise FidelityError(
            f"record {record.entity!r}: exclude_own needs owner_name to be set")
    new_pubs = []
    for pub in record.publications:
        if pub.citation_events is None:
            raise FidelityError(
                f"publication {pub.id!r} has no citation events; "
                "self-citation filtering needs event-level data")
        if mode == "exclude_own":
            blocked = {owner}
        else:
            blocked = {normalize_author(a) for a in pub.authors}
            if owner is not None:
                blocked.add(owner)
        kept = tuple(
            e for e in pub.citation_events
            if not blocked & {normalize_author(a) for a in e.citing_authors})
        count = len(kept) if pub.citation_count is not None else None
        new_pubs.append(Publication(
            id=pub.id, year=pub.year, authors=pub.authors,
            author_count=pub.author_count, citation_count=count,
            citation_events=kept))
    return CitationRecord(entity=record.entity, kind=record.kind,
                          owner_name=record.owner_name,
                          publications=tuple(new_pubs))


def citation_vector(record, config=None):
    """Descending citation counts with a fixed tie order (year asc, id asc)
    so reports are reproducible.  Self-citation filtering is applied first,
    per the config."""
    mode = config.self_citation_mode if config is not None else "include"
    filtered = filter_self_citations(record, mode)
    ordered = sorted(filtered.publications,
                     key=lambda p: (-p.citations(), p.year, p.id))
    return CitationVector(counts=tuple(p.citations() for p in ordered),
                          publication_ids=tuple(p.id for p in ordered))


def totals(record):
    """(N_p, N_c): publication count and total citations as recorded."""
    n_p = len(record.publications)
    n_c = sum(p.citations() for p in record.publications)
    return n_p, n_c


# ---------------------------------------------------------------------------
# Ingestion / serialization

_RECORD_KEYS = {"entity", "kind", "owner_name", "publications"}
_PUB_KEYS = {"id", "year", "authors", "author_count", "citation_count", "citation_events"}
_EVENT_KEYS = {"year", "citing_authors"}


def _require(condition, message):
    if not condition:
        raise RecordParseError(message)


def record_from_dict(data, source="<memory>"):
    """Build and validate a CitationRecord from the JSON-shaped dict."""
    _require(isinstance(data, dict), f"{source}: record must be a JSON object")
    unknown = set(data) - _RECORD_KEYS
    if unknown:
        raise RecordParseError(f"{source}: unknown record field {sorted(unknown)[0]!r}")
    _require(isinstance(data.get("entity"), str), f"{source}: field 'entity' must be a string")
    kind = data.get("kind", "researcher")
    _require(isinstance(kind, str), f"{source}: field 'kind' must be a string")
    owner = data.get("owner_name")
    _require(owner is None or isinstance(owner, str),
             f"{source}: field 'owner_name' must be a string")
    raw_pubs = data.get("publications")
    _require(isinstance(raw_pubs, list), f"{source}: field 'publications' must be a list")

    pubs = []
    for i, raw in enumerate(raw_pubs):
        where = f"{source}: publications[{i}]"
        _require(isinstance(raw, dict), f"{where}: must be an object")
        unknown = set(raw) - _PUB_KEYS
        if unknown:
            raise RecordParseError(f"{where}: unknown field {sorted(unknown)[0]!r}")
        _require(isinstance(raw.get("id"), str), f"{where}: field 'id' must be a string")
        _require(isinstance(raw.get("year"), int), f"{where}: field 'year' must be an integer")
        authors = raw.get("authors", [])
        _require(isinstance(authors, list) and all(isinstance(a, str) for a in authors),
                 f"{where}: field 'authors' must be a list of strings")
        for field in ("author_count", "citation_count"):
            value = raw.get(field)
            _require(value is None or isinstance(value, int),
                     f"{where}: field {field!r} must be an integer")
        events = None
        if "citation_events" in raw:
            raw_events = raw["citation_events"]
            _require(isinstance(raw_events, list),
                     f"{where}: field 'citation_events' must be a list")
            events = []
            for j, raw_event in enumerate(raw_events):
                ewhere = f"{where}.citation_events[{j}]"
                _require(isinstance(raw_event, dict), f"{ewhere}: must be an object")
                unknown = set(raw_event) - _EVENT_KEYS
                if unknown:
                    raise RecordParseError(
                        f"{ewhere}: unknown field {sorted(unknown)[0]!r}")
                _require(isinstance(raw_event.get("year"), int),
                         f"{ewhere}: field 'year' must be an integer")
                citing = raw_event.get("citing_authors", [])
                _require(isinstance(citing, list) and all(isinstance(a, str) for a in citing),
                         f"{ewhere}: field 'citing_authors' must be a list of strings")
                events.append(CitationEvent(year=raw_event["year"],
                                            citing_authors=tuple(citing)))
            events = tuple(events)
        pubs.append(Publication(
            id=raw["id"], year=raw["year"], authors=tuple(authors),
            author_count=raw.get("author_count"),
            citation_count=raw.get("citation_count"),
            citation_events=events))

    record = CitationRecord(entity=data["entity"], kind=kind, owner_name=owner,
                            publications=tuple(pubs))
    return validate_record(record)


def record_to_dict(record):
    """Inverse of record_from_dict; parse(serialize(r)) == r, field for field."""
    out = {"entity": record.entity, "kind": record.kind}
    if record.owner_name is not None:
        out["owner_name"] = record.owner_name
    pubs = []
    for pub in record.publications:
        item = {"id": pub.id, "year": pub.year}
        if pub.authors:
            item["authors"] = list(pub.authors)
        if pub.author_count is not None:
            item["author_count"] = pub.author_count
        if pub.citation_count is not None:
            item["citation_count"] = pub.citation_count
        if pub.citation_events is not None:
            item["citation_events"] = [
                {"year": e.year, **({"citing_authors": list(e.citing_authors)}
                                    if e.citing_authors else {})}
                for e in pub.citation_events]
        pubs.append(item)
    out["publications"] = pubs
    return out


def write_record(record, path):
    Path(path).write_text(json.dumps(record_to_dict(record), indent=2) + "\n",
                          encoding="utf-8")


def _parse_int(value, where, field, required=True):
    text = (value or "").strip()
    if not text:
        if required:
            raise RecordParseError(f"{where}: missing value for {field!r}")
        return None
    try:
        return int(text)
    except ValueError:
        raise RecordParseError(f"{where}: field {field!r} is not an integer: {text!r}") from None


def _parse_counts_csv(path, rows):
    pubs = []
    for lineno, row in rows:
        where = f"{path}: line {lineno}"
        if row.get(None) is not None or any(v is None for v in row.values()):
            raise RecordParseError(f"{where}: wrong number of columns")
        pubs.append(Publication(
            id=row["id"].strip(),
            year=_parse_int(row["year"], where, "year"),
            author_count=_parse_int(row["author_count"], where, "author_count",
                                    required=False),
            citation_count=_parse_int(row["citation_count"], where, "citation_count")))
    return pubs


def _parse_events_csv(path, rows):
    order = []
    meta = {}
    events = {}
    for lineno, row in rows:
        where = f"{path}: line {lineno}"
        if row.get(None) is not None or any(v is None for v in row.values()):
            raise RecordParseError(f"{where}: wrong number of columns")
        pub_id = row["pub_id"].strip()
        year = _parse_int(row["pub_year"], where, "pub_year")
        author_count = _parse_int(row["author_count"], where, "author_count",
                                  required=False)
        if pub_id not in meta:
            order.append(pub_id)
            meta[pub_id] = (year, author_count)
            events[pub_id] = []
        elif meta[pub_id] != (year, author_count):
            raise RecordParseError(
                f"{where}: publication {pub_id!r} repeats with different "
                "pub_year/author_count")
        cite_year = _parse_int(row["cite_year"], where, "cite_year", required=False)
        if cite_year is None:
            continue  # zero-citation publication, listed once with empty cite_year
        citing = tuple(a.strip() for a in row["citing_authors"].split(";") if a.strip())
        events[pub_id].append(CitationEvent(year=cite_year, citing_authors=citing))
    return [Publication(id=pid, year=meta[pid][0], author_count=meta[pid][1],
                        citation_events=tuple(events[pid]))
            for pid in order]


def _parse_csv(path):
    with open(path, newline="", encoding="utf-8") as fh:
        reader = csv.DictReader(fh)
        header = reader.fieldnames
        if header == _COUNTS_CSV_HEADER:
            parser = _parse_counts_csv
        elif header == _EVENTS_CSV_HEADER:
            parser = _parse_events_csv
        else:
            raise RecordParseError(
                f"{path}: line 1: unrecognized CSV header {header!r}")
        pubs = parser(path, ((lineno, row) for lineno, row in enumerate(reader, start=2)))
    record = CitationRecord(entity=Path(path).stem, publications=tuple(pubs))
    return validate_record(record)


def parse_record(path, format=None):
    """Read a record file (JSON or CSV, inferred from the suffix when format
    is not given) and return a validated CitationRecord."""
    path = Path(path)
    if format is None:
        suffix = path.suffix.lower()
        format = {"": None, ".json": "json", ".csv": "csv"}.get(suffix)
        if format is None:
            raise RecordParseError(
                f"{path}: cannot infer format from suffix {suffix!r}; pass format=")
    if format == "json":
        try:
            data = json.loads(path.read_text(encoding="utf-8"))
        except json.JSONDecodeError as exc:
            raise RecordParseError(f"{path}: line {exc.lineno}: {exc.msg}") from None
        return record_from_dict(data, source=str(path))
    if format == "csv":
        return _parse_csv(path)
    raise RecordParseError(f"{path}: unknown format {format!r}")
