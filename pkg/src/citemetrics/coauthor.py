"""Co-authorship-corrected h variants."""

from __future__ import annotations

import math
import statistics
from dataclasses import dataclass
from fractions import Fraction

from .core import h_index
from .errors import FidelityError
from .records import filter_self_citations


@dataclass(frozen=True)
class AuthoredVector:
    """(citation count, author count) pairs, citations descending."""

    entries: tuple


def authored_vector(record, config=None):
    """Build the (citations, authors) vector with the record-model tie rule.
    Every publication must expose an author count of at least 1."""
    mode = config.self_citation_mode if config is not None else "include"
    filtered = filter_self_citations(record, mode)
    ordered = sorted(filtered.publications,
                     key=lambda p: (-p.citations(), p.year, p.id))
    entries = []
    for pub in ordered:
        n_authors = pub.effective_author_count()
        if n_authors is None or n_authors < 1:
            raise FidelityError(
                f"publication {pub.id!r} has no author count; "
                "co-authorship indices need one")
        entries.append((pub.citations(), n_authors))
    return AuthoredVector(tuple(entries))


def _entries(av):
    entries = getattr(av, "entries", av)
    # stable sort: plain pair lists keep their given tie order
    return sorted(((int(c), int(a)) for c, a in entries), key=lambda e: -e[0])


def hi_index(av, center="mean"):
    """h divided by the mean (or median) author count over the h-core."""
    entries = _entries(av)
    h = h_index([c for c, _ in entries])
    if h == 0:
        return 0.0
    core_authors = [a for _, a in entries[:h]]
    if center == "mean":
        divisor = sum(core_authors) / h
    elif center == "median":
        divisor = statistics.median(core_authors)
    else:
        raise ValueError(f"unknown center {center!r}")
    return h / divisor


def pure_h(av, scores=None):
    """h divided by the square root of the mean equivalent-author number over
    the h-core.  By default each author holds an equal 1/author_count share,
    so the equivalent number is the author count itself; pass scores (one
    credit share per entry, aligned with the sorted vector) to plug in a
    positional weighting scheme."""
    entries = _entries(av)
    h = h_index([c for c, _ in entries])
    if h == 0:
        return 0.0
    if scores is None:
        equivalent = [a for _, a in entries[:h]]
    else:
        equivalent = [1.0 / s for s in list(scores)[:h]]
    return h / math.sqrt(sum(equivalent) / h)


def schreiber_hm(av):
    """Fractional-rank variant: accumulate effective ranks 1/authors down the
    citation-descending list and return the largest effective rank that still
    fits under its citation count."""
    effective_rank = Fraction(0)
    best = Fraction(0)
    for count, n_authors in _entries(av):
        effective_rank += Fraction(1, n_authors)
        if effective_rank <= count:
            best = effective_rank  # ranks grow, so the last hit is the largest
    return float(best)
