"""Group-level indices and the theory layer.

The theory layer has two faces: closed-form models (power-law h, its
time-dependent form, and the extreme-value H over a survival function) and a
seeded stochastic career simulator (Poisson publication counts with
gamma-mixed per-paper citation rates).  Simulation output is deterministic
for a given seed; the generator is numpy's default PCG64, with one spawned
child stream per career so careers stay independent.
"""

from __future__ import annotations

from bisect import bisect_left
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .core import a_index, h_core_sum, h_index
from .errors import DomainError, UndefinedInputError
from .records import CitationEvent, CitationRecord, Publication, citation_vector, totals


@dataclass(frozen=True)
class Group:
    members: tuple


def _members(group):
    members = list(getattr(group, "members", group))
    if not members:
        raise UndefinedInputError("group has no members")
    return members


def successive_h(group):
    """h-index of the members' h-indices, sorted descending."""
    return h_index([h_index(citation_vector(m)) for m in _members(group)])


def group_hp(group):
    """h-index of the members' publication counts."""
    return h_index([totals(m)[0] for m in _members(group)])


def group_hc(group):
    """h-index of the members' citation totals."""
    return h_index([totals(m)[1] for m in _members(group)])


def lotkaian_h(t_sources, alpha):
    """Equilibrium h of a power-law source-item system: T**(1/alpha)."""
    if t_sources < 1:
        raise DomainError("source count must be at least 1")
    if alpha <= 1:
        raise DomainError("power-law exponent must exceed 1")
    return t_sources ** (1.0 / alpha)


def dynamic_h(t_sources, alpha, b, t):
    """Time-dependent h [(1 - b**t)**(alpha-1) * T]**(1/alpha); grows from 0
    at t=0 towards the equilibrium value as t -> infinity."""
    if t_sources < 1:
        raise DomainError("source count must be at least 1")
    if alpha <= 1:
        raise DomainError("power-law exponent must exceed 1")
    if not 0 < b < 1:
        raise DomainError("ageing rate b must lie in (0, 1)")
    if t < 0:
        raise DomainError("time must be non-negative")
    if t == 0:
        return 0.0
    return ((1.0 - b ** t) ** (alpha - 1.0) * t_sources) ** (1.0 / alpha)


@dataclass(frozen=True)
class TailFunction:
    """Survival function G(k) = P(X >= k) over integer thresholds k >= 0.

    G must be non-increasing with G(0) <= 1.  k_max bounds the search for
    inverse values; leave it None for parametric tails that decay on their
    own.
    """

    survival: object
    k_max: int | None = None

    @classmethod
    def from_sample(cls, counts):
        data = sorted(int(c) for c in counts)
        if not data:
            raise UndefinedInputError("empty sample has no tail")
        n = len(data)

        def survival(k):
            return Fraction(n - bisect_left(data, k), n)

        return cls(survival=survival, k_max=data[-1])

    @classmethod
    def discrete_pareto(cls, exponent, k_max=None):
        """G(k) = k**(-exponent) for k >= 1 (the Price special case is this
        with its own exponent); exact fractions when the exponent is integral."""
        if exponent <= 0:
            raise DomainError("tail exponent must be positive")
        if float(exponent).is_integer():
            power = int(exponent)

            def survival(k):
                return Fraction(1) if k <= 1 else Fraction(1, k ** power)
        else:

            def survival(k):
                return 1.0 if k <= 1 else float(k) ** (-exponent)

        return cls(survival=survival, k_max=k_max)


def _tail_bound(tail, floor):
    """Largest k with G(k) >= floor, found by doubling then bisection."""
    if tail.k_max is not None:
        return tail.k_max
    hi = 1
    while tail.survival(hi) >= floor:
        hi *= 2
        if hi > 2 ** 40:
            raise DomainError("tail does not decay; supply k_max")
    lo = hi // 2  # G(lo) >= floor > G(hi)
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if tail.survival(mid) >= floor:
            lo = mid
        else:
            hi = mid
    return lo


def glanzel_H(tail, n):
    """Extreme-value H: the largest r whose characteristic extreme value
    u_r = max{k : G(k) >= r/n} still reaches r."""
    if n < 1:
        raise DomainError("sample size must be positive")
    u = _tail_bound(tail, Fraction(1, n))
    best = 0
    for r in range(1, n + 1):
        threshold = Fraction(r, n)
        while u > 0 and tail.survival(u) < threshold:
            u -= 1  # u_r is non-increasing in r; G(0) = 1 always qualifies
        if u >= r:
            best = r
        else:
            break
    return best


@dataclass(frozen=True)
class SimConfig:
    """Career-simulation knobs.

    Each career runs for a length drawn uniformly from 1..career_years.
    Publications arrive Poisson(pub_rate) per year; each publication draws a
    latent citation rate from Gamma(gamma_shape, rate=gamma_rate), scaled by
    citation_rate_scale, and collects Poisson(rate) citations in every year
    from its publication year through the career end.  lotka_alpha and
    ageing_b parametrize the closed-form models built on top of the same
    config.
    """

    seed: int = 0
    careers: int = 200
    career_years: int = 30
    pub_rate: float = 2.0
    gamma_shape: float = 3.0
    gamma_rate: float = 1.5
    lotka_alpha: float = 2.0
    ageing_b: float = 0.5
    citation_rate_scale: float = 1.0

    def __post_init__(self):
        if self.careers < 1 or self.career_years < 1:
            raise DomainError("careers and career_years must be positive")
        if self.pub_rate <= 0 or self.gamma_shape <= 0 or self.gamma_rate <= 0:
            raise DomainError("pub_rate, gamma_shape and gamma_rate must be positive")
        if not self.lotka_alpha > 1:
            raise DomainError("lotka_alpha must exceed 1")
        if not 0 < self.ageing_b < 1:
            raise DomainError("ageing_b must lie in (0, 1)")
        if self.citation_rate_scale < 0:
            raise DomainError("citation_rate_scale must be non-negative")


@dataclass(frozen=True)
class CareerSummary:
    """Per-career digest; core_size is the total citations of the h-core."""

    career_id: int
    years: int
    n_p: int
    n_c: int
    h: int
    a: float
    core_size: int


def burrell_simulate(config):
    """Run the career ensemble; returns (records, summaries), both ordered by
    career index and reproducible field for field from the seed."""
    root = np.random.SeedSequence(config.seed)
    records = []
    summaries = []
    for career_id, child in enumerate(root.spawn(config.careers)):
        rng = np.random.default_rng(child)
        length = int(rng.integers(1, config.career_years + 1))
        pubs = []
        serial = 0
        for year in range(1, length + 1):
            for _ in range(int(rng.poisson(config.pub_rate))):
                serial += 1
                rate = float(rng.gamma(config.gamma_shape, 1.0 / config.gamma_rate))
                rate *= config.citation_rate_scale
                events = []
                for cite_year in range(year, length + 1):
                    events.extend(CitationEvent(year=cite_year)
                                  for _ in range(int(rng.poisson(rate))))
                pubs.append(Publication(id=f"p{serial:04d}", year=year,
                                        citation_events=tuple(events)))
        record = CitationRecord(entity=f"career-{career_id:04d}",
                                publications=tuple(pubs))
        vector = citation_vector(record)
        n_p, n_c = totals(record)
        summaries.append(CareerSummary(
            career_id=career_id, years=length, n_p=n_p, n_c=n_c,
            h=h_index(vector), a=a_index(vector), core_size=h_core_sum(vector)))
        records.append(record)
    return records, summaries


def summaries_to_csv(summaries):
    lines = ["career_id,years,n_p,n_c,h,a,core_size"]
    for s in summaries:
        lines.append(f"{s.career_id},{s.years},{s.n_p},{s.n_c},{s.h},{s.a!r},{s.core_size}")
    return "\n".join(lines) + "\n"
