import math

import pytest
from hypothesis import given, strategies as st

from citemetrics import (CohortPoint, DegenerateCohortError, DomainError,
                         FieldProfile, JournalWindow, RecordValidationError,
                         UndefinedInputError, field_factor,
                         field_normalized_h, impact_factor, impact_index_hm,
                         relative_h, research_status, sri,
                         theoretical_h_estimate, vanraan_diagnostic)


def test_journal_window_defaults_to_two_preceding_years():
    window = JournalWindow(target_year=2000, n_articles=50, n_citations=100)
    assert window.source_years == (1998, 1999)


def test_journal_window_rejects_late_source_years():
    with pytest.raises(RecordValidationError):
        JournalWindow(target_year=2000, n_articles=1, n_citations=0,
                      source_years=(2001,))


def test_impact_factor_cases():
    assert impact_factor(JournalWindow(2000, 50, 100)) == 2.0
    assert impact_factor(JournalWindow(2000, 50, 0)) == 0.0
    assert impact_factor(JournalWindow(2000, 38, 19)) == 0.5
    with pytest.raises(UndefinedInputError):
        impact_factor(JournalWindow(2000, 0, 10))


def test_relative_h_cases():
    assert relative_h(10, 10) == 1.0
    assert relative_h(0, 5) == 0.0
    assert relative_h(7, 20) == 0.35
    with pytest.raises(UndefinedInputError):
        relative_h(3, 0)


def test_sri_cases():
    assert sri(10, 100) == pytest.approx(5.0)
    assert sri(17, 17) == pytest.approx(10.0)
    assert sri(20, 500) == pytest.approx(10 * math.log(20) / math.log(500))
    with pytest.raises(DomainError):
        sri(0, 100)
    with pytest.raises(DomainError):
        sri(5, 1)


def test_sri_is_log_base_independent():
    value_ln = 10 * math.log(37) / math.log(812)
    value_log10 = 10 * math.log10(37) / math.log10(812)
    assert sri(37, 812) == pytest.approx(value_ln, abs=1e-12)
    assert value_ln == pytest.approx(value_log10, abs=1e-12)


def test_impact_index_cases():
    assert impact_index_hm(13, 1, 0.4) == 13
    assert impact_index_hm(20, 1000, 0.4) == pytest.approx(20 / 1000 ** 0.4)
    assert impact_index_hm(0, 50, 0.4) == 0.0
    assert impact_index_hm(9, 123, 0.0) == 9.0


def test_field_normalization_cases():
    physics = FieldProfile("physics", 4.0)
    assert field_normalized_h(10, physics, physics) == pytest.approx(10.0)
    dense = FieldProfile("dense", 32.0)
    assert field_normalized_h(10, dense, physics) == pytest.approx(2.5)
    assert field_normalized_h(0, dense, physics) == 0.0


def test_field_profile_requires_positive_chi():
    with pytest.raises(DomainError):
        FieldProfile("bad", 0.0)


@given(st.floats(min_value=0.1, max_value=50), st.floats(min_value=0.1, max_value=50),
       st.integers(min_value=0, max_value=80))
def test_normalize_then_denormalize_round_trips(chi_a, chi_b, h):
    a = FieldProfile("a", chi_a)
    b = FieldProfile("b", chi_b)
    there = field_normalized_h(h, a, b)
    assert field_factor(b, a) * field_factor(a, b) == pytest.approx(1.0, abs=1e-9)
    assert field_normalized_h(there, b, a) == pytest.approx(h, abs=1e-9)


def test_theoretical_h_estimate_cases():
    assert theoretical_h_estimate(4, 1.0) == pytest.approx(1.0)
    assert theoretical_h_estimate(32, 1.0) == pytest.approx(2.0)
    assert theoretical_h_estimate(100, 10.0) == pytest.approx(2500 ** (1 / 3))
    # the literal reading keeps the mean-rate power inside the cube root
    assert theoretical_h_estimate(4, 8.0, literal_radical=True) == pytest.approx(4 ** (1 / 3))
    with pytest.raises(DomainError):
        theoretical_h_estimate(0, 1.0)


def test_research_status_collinear_cohort():
    cohort = [("a", 10, 2), ("b", 20, 4), ("c", 30, 6)]
    assert all(res == pytest.approx(0.0, abs=1e-12)
               for _, res in research_status(cohort))


def test_research_status_closed_form():
    residuals = dict(research_status([("a", 10, 5), ("b", 20, 10), ("c", 30, 12)]))
    assert residuals["a"] == pytest.approx(-0.5)
    assert residuals["b"] == pytest.approx(1.0)
    assert residuals["c"] == pytest.approx(-0.5)


def test_research_status_duplicated_cohort_keeps_residuals():
    base = [("a", 10, 5), ("b", 20, 10), ("c", 30, 12)]
    doubled = [(f"{e}{tag}", n, h) for e, n, h in base for tag in ("1", "2")]
    single = dict(research_status(base))
    both = dict(research_status(doubled))
    for e, _, _ in base:
        assert both[f"{e}1"] == pytest.approx(single[e])
        assert both[f"{e}2"] == pytest.approx(single[e])


def test_research_status_degenerate_cohorts():
    with pytest.raises(DegenerateCohortError):
        research_status([("a", 10, 5), ("b", 20, 10)])
    with pytest.raises(DegenerateCohortError):
        research_status([("a", 10, 5), ("b", 10, 6), ("c", 10, 7)])


@given(st.lists(st.tuples(st.integers(min_value=0, max_value=100),
                          st.integers(min_value=0, max_value=40)),
                min_size=3, max_size=20))
def test_research_status_residual_orthogonality(points):
    cohort = [(f"e{i}", n, min(h, n)) for i, (n, h) in enumerate(points)]
    if len({n for _, n, _ in cohort}) < 2:
        return
    residuals = research_status(cohort)
    res = [r for _, r in residuals]
    xs = [n for _, n, _ in cohort]
    assert sum(res) == pytest.approx(0.0, abs=1e-9)
    assert sum(r * x for r, x in zip(res, xs)) == pytest.approx(0.0, abs=1e-6)


def test_cohort_point_validation():
    with pytest.raises(RecordValidationError):
        CohortPoint("bad", 3, 5)


def test_vanraan_cases():
    assert vanraan_diagnostic(0) == 0.0
    assert vanraan_diagnostic(1) == pytest.approx(0.42)
    assert vanraan_diagnostic(10000) == pytest.approx(0.42 * 10000 ** 0.45)
    with pytest.raises(DomainError):
        vanraan_diagnostic(-1)
