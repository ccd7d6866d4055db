"""Indices that depend on publication and citation ages or career time.

Ages use the +1 convention throughout: a publication from the observation
year has age 1, so decay weights never divide by zero.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import sqrt

from .core import h_index
from .errors import DomainError, FidelityError, UndefinedInputError
from .records import IndexConfig, citation_vector, filter_self_citations, resolve_now_year


@dataclass(frozen=True)
class ScoredVector:
    """Per-publication scores sorted descending, ids retained rank by rank."""

    scores: tuple
    publication_ids: tuple


@dataclass(frozen=True)
class HSequence:
    """h over the cumulative windows [end, end], [end-1, end], ... back to
    the first publication year; values[k] belongs to the window starting at
    start_years[k]."""

    end_year: int
    start_years: tuple
    values: tuple


@dataclass(frozen=True)
class HMatrix:
    """One h-sequence per record, aligned at window index 0 (the most recent
    window); shorter careers are padded with None."""

    entities: tuple
    rows: tuple


def _config(config):
    return config if config is not None else IndexConfig()


def _score_scan(scores):
    best = 0
    for rank, score in enumerate(scores, start=1):
        if score >= rank:
            best = rank
        else:
            break
    return best


def _age(now_year, year, what):
    age = now_year - year + 1
    if age <= 0:
        raise DomainError(f"{what} year {year} is after now_year {now_year}")
    return age


def contemporary_scores(record, config=None):
    config = _config(config)
    filtered = filter_self_citations(record, config.self_citation_mode)
    if not filtered.publications:
        return ScoredVector((), ())
    now = resolve_now_year(filtered, config)
    scored = []
    for pub in filtered.publications:
        weight = config.gamma * _age(now, pub.year, "publication") ** (-config.delta)
        scored.append((weight * pub.citations(), pub))
    scored.sort(key=lambda item: (-item[0], item[1].year, item[1].id))
    return ScoredVector(scores=tuple(s for s, _ in scored),
                        publication_ids=tuple(p.id for _, p in scored))


def contemporary_h(record, config=None):
    """h-style scan over per-publication scores gamma * age**(-delta) * citations."""
    return _score_scan(contemporary_scores(record, config).scores)


def trend_scores(record, config=None):
    config = _config(config)
    filtered = filter_self_citations(record, config.self_citation_mode)
    if not filtered.publications:
        return ScoredVector((), ())
    now = resolve_now_year(filtered, config)
    scored = []
    for pub in filtered.publications:
        if not pub.has_events:
            raise FidelityError(
                f"publication {pub.id!r} has no citation events; "
                "trend scoring needs event-level data")
        score = config.gamma * sum(
            _age(now, e.year, "citation event") ** (-config.delta)
            for e in pub.citation_events)
        scored.append((score, pub))
    scored.sort(key=lambda item: (-item[0], item[1].year, item[1].id))
    return ScoredVector(scores=tuple(s for s, _ in scored),
                        publication_ids=tuple(p.id for _, p in scored))


def trend_h(record, config=None):
    """h-style scan over scores that sum a decayed weight per citation event."""
    return _score_scan(trend_scores(record, config).scores)


def normalized_h_output(record, config=None):
    """h divided by the number of publications."""
    n_p = len(record.publications)
    if n_p == 0:
        raise UndefinedInputError(f"record {record.entity!r} has no publications")
    return h_index(citation_vector(record, _config(config))) / n_p


def ar_index(record, config=None):
    """Age-weighted analogue of R: sqrt of the h-core sum of citations/age."""
    config = _config(config)
    vector = citation_vector(record, config)
    h = h_index(vector)
    if h == 0:
        return 0.0
    now = resolve_now_year(record, config)
    year_of = {p.id: p.year for p in record.publications}
    total = sum(
        count / _age(now, year_of[pid], "publication")
        for count, pid in zip(vector.counts[:h], vector.publication_ids[:h]))
    return sqrt(total)


def m_quotient(record, config=None):
    """h divided by the career length in years (first publication to now)."""
    config = _config(config)
    if not record.publications:
        raise UndefinedInputError(f"record {record.entity!r} has no publications")
    now = resolve_now_year(record, config)
    career_years = now - min(p.year for p in record.publications) + 1
    return h_index(citation_vector(record, config)) / career_years


def _windowed_count(pub, cutoff):
    if cutoff is None:
        return pub.citations()
    if not pub.has_events:
        raise FidelityError(
            f"publication {pub.id!r} has no citation events; "
            "window-limited counting needs event-level data")
    return sum(1 for e in pub.citation_events if e.year <= cutoff)


def h_sequence(record, config=None, truncate_events_to_now=False):
    """h over publication-year windows growing back from the last publication
    year.  Citation counts are the record's totals; with
    truncate_events_to_now only events dated up to now_year are counted
    (event-level data required)."""
    config = _config(config)
    if not record.publications:
        raise UndefinedInputError(f"record {record.entity!r} has no publications")
    filtered = filter_self_citations(record, config.self_citation_mode)
    cutoff = resolve_now_year(filtered, config) if truncate_events_to_now else None
    last = max(p.year for p in filtered.publications)
    first = min(p.year for p in filtered.publications)
    counts = {p.id: _windowed_count(p, cutoff) for p in filtered.publications}
    starts = []
    values = []
    for start in range(last, first - 1, -1):
        in_window = [counts[p.id] for p in filtered.publications
                     if start <= p.year <= last]
        starts.append(start)
        values.append(h_index(in_window))
    return HSequence(end_year=last, start_years=tuple(starts), values=tuple(values))


def h_matrix(records, config=None, truncate_events_to_now=False):
    """Stack the h-sequences of a cohort, aligned at the most recent window."""
    records = list(records)
    if not records:
        raise UndefinedInputError("cohort is empty")
    sequences = [h_sequence(r, config, truncate_events_to_now) for r in records]
    width = max(len(s.values) for s in sequences)
    rows = tuple(s.values + (None,) * (width - len(s.values)) for s in sequences)
    return HMatrix(entities=tuple(r.entity for r in records), rows=rows)
