"""Index reports: computing a record's indicator set plus table/JSON/CSV
rendering with the fixed display-rounding rules."""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass

from . import coauthor, core, temporal
from .errors import DomainError, FidelityError, UndefinedInputError
from .records import (IndexConfig, citation_vector, filter_self_citations,
                      resolve_now_year, totals)

REPORT_INDEX_KEYS = (
    "h", "g", "a", "r", "h_w", "h2", "w", "maxprod", "f", "t",
    "r_m", "h_core_cv", "r_m_cv", "h_alpha",
    "h_contemporary", "h_trend", "h_norm_output", "ar", "m_quotient",
    "h_i_mean", "h_i_median", "h_pure", "h_m_schreiber",
)

_ONE_DECIMAL = {"a", "r", "h_w"}
_TWO_DECIMALS = {"r_m", "h_core_cv", "r_m_cv"}
_UNAVAILABLE_ERRORS = (FidelityError, UndefinedInputError, DomainError)


def _h_alpha(record, config):
    filtered = filter_self_citations(record, config.self_citation_mode)
    vector = citation_vector(filtered)
    return core.h_alpha_predict(core.h_index(vector), totals(filtered)[1],
                                config.alpha_predictive)


_COMPUTERS = {
    "h": lambda rec, cfg: core.h_index(citation_vector(rec, cfg)),
    "g": lambda rec, cfg: core.g_index(citation_vector(rec, cfg), cfg.g_convention),
    "a": lambda rec, cfg: core.a_index(citation_vector(rec, cfg)),
    "r": lambda rec, cfg: core.r_index(citation_vector(rec, cfg)),
    "h_w": lambda rec, cfg: core.hw_index(citation_vector(rec, cfg)),
    "h2": lambda rec, cfg: core.h2_index(citation_vector(rec, cfg)),
    "w": lambda rec, cfg: core.w_index(citation_vector(rec, cfg)),
    "maxprod": lambda rec, cfg: core.maxprod(citation_vector(rec, cfg)),
    "f": lambda rec, cfg: core.f_index(citation_vector(rec, cfg)),
    "t": lambda rec, cfg: core.t_index(citation_vector(rec, cfg)),
    "r_m": lambda rec, cfg: core.rm_index(citation_vector(rec, cfg)),
    "h_core_cv": lambda rec, cfg: core.h_core_cv(citation_vector(rec, cfg)),
    "r_m_cv": lambda rec, cfg: core.rmcv_index(citation_vector(rec, cfg)),
    "h_alpha": _h_alpha,
    "h_contemporary": temporal.contemporary_h,
    "h_trend": temporal.trend_h,
    "h_norm_output": temporal.normalized_h_output,
    "ar": temporal.ar_index,
    "m_quotient": temporal.m_quotient,
    "h_i_mean": lambda rec, cfg: coauthor.hi_index(coauthor.authored_vector(rec, cfg), "mean"),
    "h_i_median": lambda rec, cfg: coauthor.hi_index(coauthor.authored_vector(rec, cfg), "median"),
    "h_pure": lambda rec, cfg: coauthor.pure_h(coauthor.authored_vector(rec, cfg)),
    "h_m_schreiber": lambda rec, cfg: coauthor.schreiber_hm(coauthor.authored_vector(rec, cfg)),
}


@dataclass(frozen=True)
class IndexReport:
    entity: str
    kind: str
    config: dict
    keys: tuple
    values: dict
    unavailable: dict


def select_indices(selection):
    """Validate a comma list / iterable of index keys, preserving order."""
    if selection is None:
        return REPORT_INDEX_KEYS
    keys = ([k.strip() for k in selection.split(",")]
            if isinstance(selection, str) else list(selection))
    seen = []
    for key in keys:
        if key not in REPORT_INDEX_KEYS:
            raise KeyError(key)
        if key not in seen:
            seen.append(key)
    return tuple(seen)


def config_echo(record, config):
    try:
        now = resolve_now_year(record, config)
    except DomainError:
        now = config.now_year
    return {
        "now_year": now,
        "gamma": config.gamma,
        "delta": config.delta,
        "g_convention": config.g_convention,
        "self_citation_mode": config.self_citation_mode,
        "alpha_predictive": config.alpha_predictive,
        "beta_molinari": config.beta_molinari,
    }


def compute_report(record, config=None, indices=None, strict=False):
    """Compute the requested indices; data-fidelity and domain problems mark
    the affected index unavailable (with the reason) unless strict."""
    config = config if config is not None else IndexConfig()
    keys = select_indices(indices)
    values = {}
    unavailable = {}
    for key in keys:
        try:
            values[key] = _COMPUTERS[key](record, config)
        except _UNAVAILABLE_ERRORS as exc:
            if strict:
                raise
            unavailable[key] = str(exc)
    return IndexReport(entity=record.entity, kind=record.kind,
                       config=config_echo(record, config), keys=keys,
                       values=values, unavailable=unavailable)


# ---------------------------------------------------------------------------
# Rendering

def format_value(key, value):
    """Display rounding: exact integers render bare; otherwise a, r and h_w
    get one decimal, the root-sum-root family two, everything else four."""
    if isinstance(value, int):
        return str(value)
    if value == int(value):
        return str(int(value))
    if key in _ONE_DECIMAL:
        places = 1
    elif key in _TWO_DECIMALS:
        places = 2
    else:
        places = 4
    return f"{value:.{places}f}"


def _cell(report, key):
    if key in report.values:
        return format_value(key, report.values[key])
    return None


def _pad_table(rows):
    widths = [max(len(row[i]) for row in rows) for i in range(len(rows[0]))]
    lines = []
    for row in rows:
        cells = [cell.ljust(width) for cell, width in zip(row, widths)]
        lines.append("  ".join(cells).rstrip())
    return "\n".join(lines) + "\n"


def render_table(report):
    rows = [["entity", report.entity], ["kind", report.kind]]
    for key in report.keys:
        value = _cell(report, key)
        if value is None:
            value = f"unavailable ({report.unavailable[key]})"
        rows.append([key, value])
    return _pad_table(rows)


def render_compare_table(reports, keys):
    rows = [["entity"] + list(keys)]
    for report in reports:
        rows.append([report.entity] + [(_cell(report, k) or "-") for k in keys])
    return _pad_table(rows)


def report_to_jsonable(report):
    values = {}
    for key in report.keys:
        if key in report.values:
            values[key] = report.values[key]
        else:
            values[key] = {"unavailable": report.unavailable[key]}
    return {"entity": report.entity, "kind": report.kind,
            "config": report.config, "values": values}


def render_json(payload):
    return json.dumps(payload, indent=2, sort_keys=True) + "\n"


def _number_cell(value):
    return repr(value) if isinstance(value, float) else str(value)


def render_csv(report):
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(["index", "value", "note"])
    for key in report.keys:
        if key in report.values:
            writer.writerow([key, _number_cell(report.values[key]), ""])
        else:
            writer.writerow([key, "", report.unavailable[key]])
    return out.getvalue()


def render_compare_csv(reports, keys):
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(["entity", "kind"] + list(keys))
    for report in reports:
        row = [report.entity, report.kind]
        for key in keys:
            row.append(_number_cell(report.values[key]) if key in report.values else "")
        writer.writerow(row)
    return out.getvalue()


def plot_series_csv(entries):
    """Plot-data emission: one (rank, citations) series per record plus an
    (index, value) series; entries are (report, vector) pairs."""
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(["series", "entity", "x", "y"])
    for report, vector in entries:
        for rank, count in enumerate(vector.counts, start=1):
            writer.writerow(["citations", report.entity, rank, count])
        for key in report.keys:
            if key in report.values:
                writer.writerow(["index", report.entity, key,
                                 _number_cell(report.values[key])])
    return out.getvalue()
