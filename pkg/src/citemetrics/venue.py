"""Journal- and field-level indicators, plus cohort residual scoring."""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import (DegenerateCohortError, DomainError, RecordValidationError,
                     UndefinedInputError)

DEFAULT_REFERENCE_FIELD = "physics"


@dataclass(frozen=True)
class JournalWindow:
    """Aggregates for one impact-factor window: articles published in the
    source years and the citations they received in the target year."""

    target_year: int
    n_articles: int
    n_citations: int
    source_years: tuple = ()

    def __post_init__(self):
        if not self.source_years:
            object.__setattr__(self, "source_years",
                               (self.target_year - 2, self.target_year - 1))
        else:
            object.__setattr__(self, "source_years", tuple(self.source_years))
        if any(y >= self.target_year for y in self.source_years):
            raise RecordValidationError("source years must precede the target year")
        if self.n_articles < 0:
            raise RecordValidationError("n_articles must be non-negative")
        if self.n_citations < 0:
            raise RecordValidationError("n_citations must be non-negative")


@dataclass(frozen=True)
class FieldProfile:
    """A research field with its mean citations per paper."""

    name: str
    chi: float

    def __post_init__(self):
        if self.chi <= 0:
            raise DomainError(f"field {self.name!r}: chi must be positive")


@dataclass(frozen=True)
class CohortPoint:
    entity: str
    n_p: int
    h: int

    def __post_init__(self):
        if self.n_p < 0 or self.h < 0:
            raise RecordValidationError(f"{self.entity!r}: counts must be non-negative")
        if self.h > self.n_p:
            raise RecordValidationError(
                f"{self.entity!r}: h ({self.h}) exceeds publication count ({self.n_p})")


def impact_factor(window):
    """Citations in the target year divided by the source-window article count."""
    if window.n_articles < 1:
        raise UndefinedInputError("impact factor needs at least one source article")
    return window.n_citations / window.n_articles


def relative_h(h, n_articles_in_year):
    """h divided by the number of articles published in the current year."""
    if n_articles_in_year < 1:
        raise UndefinedInputError("relative h needs at least one article")
    return h / n_articles_in_year


def sri(h, n):
    """Strike rate index 10*log(h)/log(N); base-independent."""
    if h < 1 or n < 2:
        raise DomainError("strike rate index needs h >= 1 and N >= 2")
    return 10.0 * math.log(h) / math.log(n)


def impact_index_hm(h, n, beta=0.4):
    """Size-corrected journal/institution impact h / N**beta."""
    if n < 1:
        raise UndefinedInputError("impact index needs at least one article")
    return h / n ** beta


def field_factor(reference, field):
    """(chi_reference / chi_field)**(2/3)."""
    return (reference.chi / field.chi) ** (2.0 / 3.0)


def field_normalized_h(h, field, reference):
    """Rescale h so that fields with different citation densities compare."""
    return field_factor(reference, field) * h


def theoretical_h_estimate(n_p, chi, literal_radical=False):
    """Power-law model estimate of h from paper count and mean citation rate.

    The default reading is the dimensionally consistent (N_p * chi**2 / 4)**(1/3);
    literal_radical selects ((N_p / 4) * chi**(2/3))**(1/3) instead.
    """
    if n_p < 1:
        raise DomainError("theoretical h estimate needs at least one paper")
    if chi <= 0:
        raise DomainError("theoretical h estimate needs chi > 0")
    if literal_radical:
        return ((n_p / 4.0) * chi ** (2.0 / 3.0)) ** (1.0 / 3.0)
    return (n_p * chi * chi / 4.0) ** (1.0 / 3.0)


def _as_points(cohort):
    points = []
    for item in cohort:
        if isinstance(item, CohortPoint):
            points.append(item)
        else:
            entity, n_p, h = item
            points.append(CohortPoint(entity=entity, n_p=int(n_p), h=int(h)))
    return points


def research_status(cohort):
    """Residuals of h against an ordinary least-squares line on publication
    counts; positive residuals mark above-trend impact for the output size."""
    points = _as_points(cohort)
    if len(points) < 3:
        raise DegenerateCohortError("research status needs at least three cohort points")
    xs = [p.n_p for p in points]
    ys = [p.h for p in points]
    mean_x = sum(xs) / len(xs)
    mean_y = sum(ys) / len(ys)
    sxx = sum((x - mean_x) ** 2 for x in xs)
    if sxx == 0:
        raise DegenerateCohortError("publication counts are constant; slope undefined")
    slope = sum((x - mean_x) * (y - mean_y) for x, y in zip(xs, ys)) / sxx
    intercept = mean_y - slope * mean_x
    return [(p.entity, p.h - (intercept + slope * p.n_p)) for p in points]


def vanraan_diagnostic(n_c):
    """Chemistry-calibrated prediction 0.42 * N_c**0.45, for sanity inspection
    next to the actual h; never a target to assert against."""
    if n_c < 0:
        raise DomainError("citation total must be non-negative")
    return 0.42 * n_c ** 0.45
