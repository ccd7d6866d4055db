"""Indices computed from a descending citation vector alone.

Every function accepts either a CitationVector or any iterable of
non-negative citation counts; the input order never matters because the
counts are re-sorted defensively.  All indices return 0 on empty vectors,
and forms that divide by h are defined as 0 when h is 0.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import DomainError
from .records import G_CONVENTIONS


def _descending(v):
    counts = getattr(v, "counts", v)
    return sorted((int(c) for c in counts), reverse=True)


def h_index(v):
    """Largest rank h whose paper has at least h citations."""
    best = 0
    for rank, count in enumerate(_descending(v), start=1):
        if count >= rank:
            best = rank
        else:
            break
    return best


def g_index(v, convention="bounded"):
    """Largest g whose top-g papers jointly hold at least g**2 citations.

    Under "bounded" g cannot exceed the number of papers; under "unbounded"
    ranks beyond the record contribute zero citations, so the scan runs to
    floor(sqrt(total citations)).
    """
    if convention not in G_CONVENTIONS:
        raise ValueError(f"unknown g convention {convention!r}")
    counts = _descending(v)
    total = sum(counts)
    limit = math.isqrt(total)
    if convention == "bounded":
        limit = min(limit, len(counts))
    best = 0
    running = 0
    for g in range(1, limit + 1):
        if g <= len(counts):
            running += counts[g - 1]
        if running >= g * g:
            best = g
    return best


def h_core_sum(v):
    """Total citations held by the h-core."""
    counts = _descending(v)
    return sum(counts[:h_index(counts)])


def a_index(v):
    """Mean citations over the h-core."""
    counts = _descending(v)
    h = h_index(counts)
    if h == 0:
        return 0.0
    return sum(counts[:h]) / h


def r_index(v):
    """Square root of the h-core citation sum; equals sqrt(A*h)."""
    return math.sqrt(h_core_sum(v))


def hw_index(v):
    """Citation-weighted h: weighted ranks are the cumulative citation sum
    divided by h; the index is the square root of the citations down to the
    largest rank whose weighted rank still fits under its citation count."""
    counts = _descending(v)
    h = h_index(counts)
    if h == 0:
        return 0.0
    running = 0
    kept = 0
    for rank, count in enumerate(counts, start=1):
        running += count
        if running <= h * count:  # r_w(rank) = running/h <= count, exactly
            kept = running
    return math.sqrt(kept)


def h2_index(v):
    """Largest k whose k-th paper has at least k**2 citations."""
    best = 0
    for rank, count in enumerate(_descending(v), start=1):
        if count >= rank * rank:
            best = rank
        else:
            break
    return best


def w_index(v):
    """Largest w whose w-th paper has at least 10*w citations."""
    best = 0
    for rank, count in enumerate(_descending(v), start=1):
        if count >= 10 * rank:
            best = rank
        else:
            break
    return best


def maxprod(v):
    """Maximum of rank times citations-at-rank."""
    return max((rank * count for rank, count in enumerate(_descending(v), start=1)),
               default=0)


def f_index(v):
    """Largest f whose top-f papers have harmonic mean citations >= f.

    A zero count makes the harmonic mean 0 and ends the scan.  Exact
    rational arithmetic keeps boundary cases deterministic.
    """
    best = 0
    reciprocal_sum = Fraction(0)
    for f, count in enumerate(_descending(v), start=1):
        if count == 0:
            break
        reciprocal_sum += Fraction(1, count)
        if Fraction(f) / reciprocal_sum >= f:
            best = f
    return best


def t_index(v):
    """Largest t whose top-t papers have geometric mean citations >= t.

    The comparison is done in exact integers (product >= t**t), which is the
    geometric-mean condition without floating-point noise.
    """
    best = 0
    product = 1
    for t, count in enumerate(_descending(v), start=1):
        if count == 0:
            break
        product *= count
        if product >= t ** t:
            best = t
    return best


def rm_index(v):
    """Square root of the sum of square roots of the h-core citations."""
    counts = _descending(v)
    h = h_index(counts)
    if h == 0:
        return 0.0
    return math.sqrt(sum(math.sqrt(c) for c in counts[:h]))


def h_core_cv(v):
    """Coefficient of variation of the h-core citations, using the sample
    (h-1 divisor) standard deviation; 0 when h <= 1."""
    counts = _descending(v)
    h = h_index(counts)
    if h <= 1:
        return 0.0
    core = counts[:h]
    mean = sum(core) / h
    variance = sum((c - mean) ** 2 for c in core) / (h - 1)
    return math.sqrt(variance) / mean


def rmcv_index(v):
    """rm_index minus the h-core coefficient of variation."""
    return rm_index(v) - h_core_cv(v)


def h_alpha_predict(h, n_c, alpha=-0.1):
    """Predictive index sqrt(h**2 + alpha*N_c); a negative radicand is an
    error, reported rather than clamped."""
    radicand = h * h + alpha * n_c
    if radicand < 0:
        raise DomainError(
            f"predictive radicand h^2 + alpha*N_c is negative ({radicand:g})")
    return math.sqrt(radicand)


@dataclass(frozen=True)
class CoreIndexReport:
    h: int
    g: int
    a: float
    r: float
    h_w: float
    h2: int
    w: int
    maxprod: int
    f: int
    t: int
    r_m: float
    h_core_cv: float
    r_m_cv: float
    h_alpha: float


def core_report(v, g_convention="bounded", alpha_predictive=-0.1):
    """All vector-only indices in one struct; N_c for the predictive index is
    the vector total."""
    counts = _descending(v)
    return CoreIndexReport(
        h=h_index(counts),
        g=g_index(counts, g_convention),
        a=a_index(counts),
        r=r_index(counts),
        h_w=hw_index(counts),
        h2=h2_index(counts),
        w=w_index(counts),
        maxprod=maxprod(counts),
        f=f_index(counts),
        t=t_index(counts),
        r_m=rm_index(counts),
        h_core_cv=h_core_cv(counts),
        r_m_cv=rmcv_index(counts),
        h_alpha=h_alpha_predict(h_index(counts), sum(counts), alpha_predictive),
    )
