"""Command-line surface: ingest record files, run index suites, compare and
rank records, window sequences, group indices, simulation and the journal /
field / cohort indicators.

Exit codes: 0 success (including partial reports with unavailable indices),
2 usage error, 3 input error, 4 domain error.
"""

from __future__ import annotations

import argparse
import csv
import dataclasses
import io
import sys
from pathlib import Path

from . import report as report_mod
from .aggregate import (SimConfig, burrell_simulate, group_hc, group_hp,
                        successive_h, summaries_to_csv)
from .errors import (DegenerateCohortError, DomainError, FidelityError,
                     RecordParseError, RecordValidationError, UndefinedInputError)
from .records import IndexConfig, citation_vector, parse_record
from .temporal import h_matrix, h_sequence
from .venue import (DEFAULT_REFERENCE_FIELD, FieldProfile, JournalWindow,
                    field_factor, field_normalized_h, impact_factor,
                    impact_index_hm, relative_h, research_status, sri,
                    theoretical_h_estimate, vanraan_diagnostic)

_INPUT_ERRORS = (RecordParseError, RecordValidationError, FidelityError,
                 FileNotFoundError, IsADirectoryError)
_DOMAIN_ERRORS = (DomainError, UndefinedInputError, DegenerateCohortError)


def _add_config_flags(parser):
    parser.add_argument("--now-year", type=int, default=None)
    parser.add_argument("--gamma", type=float, default=4.0)
    parser.add_argument("--delta", type=float, default=1.0)
    parser.add_argument("--g-convention", choices=("bounded", "unbounded"),
                        default="bounded")
    parser.add_argument("--self-citations",
                        choices=("include", "exclude-own", "exclude-coauthor"),
                        default="include")
    parser.add_argument("--alpha", type=float, default=-0.1,
                        help="predictive-index coefficient")
    parser.add_argument("--beta", type=float, default=0.4,
                        help="impact-index size exponent")


def _add_output_flags(parser, default_format="table"):
    parser.add_argument("--format", choices=("table", "json", "csv"),
                        default=default_format)
    parser.add_argument("--output", default=None, help="write here instead of stdout")


def _config_from(args):
    return IndexConfig(
        now_year=args.now_year, gamma=args.gamma, delta=args.delta,
        g_convention=args.g_convention,
        self_citation_mode=args.self_citations.replace("-", "_"),
        alpha_predictive=args.alpha, beta_molinari=args.beta)


def _emit(text, args):
    if args.output:
        Path(args.output).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _metric_rows_text(rows, fmt):
    if fmt == "json":
        return report_mod.render_json({key: value for key, value in rows})
    if fmt == "csv":
        out = io.StringIO()
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(["metric", "value"])
        for key, value in rows:
            writer.writerow([key, repr(value) if isinstance(value, float) else value])
        return out.getvalue()
    width = max(len(key) for key, _ in rows)
    lines = [f"{key.ljust(width)}  {value}" for key, value in rows]
    return "\n".join(lines) + "\n"


def _indices_arg(parser, args):
    try:
        return report_mod.select_indices(args.indices)
    except KeyError as exc:
        parser.error(f"unknown index key {exc.args[0]!r}")


def cmd_compute(parser, args):
    record = parse_record(args.input)
    config = _config_from(args)
    indices = _indices_arg(parser, args)
    rep = report_mod.compute_report(record, config, indices, strict=args.strict)
    if args.format == "json":
        text = report_mod.render_json(report_mod.report_to_jsonable(rep))
    elif args.format == "csv":
        text = report_mod.render_csv(rep)
    else:
        text = report_mod.render_table(rep)
    _emit(text, args)
    if args.emit_plot:
        vector = citation_vector(record, config)
        Path(args.emit_plot).write_text(
            report_mod.plot_series_csv([(rep, vector)]), encoding="utf-8")
    return 0


def cmd_compare(parser, args):
    if len(args.inputs) < 2:
        parser.error("compare needs at least two --inputs")
    records = [parse_record(path) for path in args.inputs]
    config = _config_from(args)
    indices = _indices_arg(parser, args)
    reports = [report_mod.compute_report(r, config, indices, strict=args.strict)
               for r in records]
    if args.sort_by:
        if args.sort_by not in indices:
            parser.error(f"--sort-by key {args.sort_by!r} is not among the "
                         "requested indices")
        def sort_key(rep):
            value = rep.values.get(args.sort_by)
            missing = value is None
            return (missing, -(value if not missing else 0), rep.entity)
        reports = sorted(reports, key=sort_key)
    if args.format == "json":
        text = report_mod.render_json(
            {"reports": [report_mod.report_to_jsonable(r) for r in reports]})
    elif args.format == "csv":
        text = report_mod.render_compare_csv(reports, indices)
    else:
        text = report_mod.render_compare_table(reports, indices)
    _emit(text, args)
    if args.emit_plot:
        entries = [(rep, citation_vector(rec, config))
                   for rep, rec in zip(reports, records)]
        Path(args.emit_plot).write_text(report_mod.plot_series_csv(entries),
                                        encoding="utf-8")
    return 0


def cmd_sequence(parser, args):
    record = parse_record(args.input)
    seq = h_sequence(record, _config_from(args),
                     truncate_events_to_now=args.truncate_events)
    if args.format == "json":
        text = report_mod.render_json({
            "entity": record.entity, "end_year": seq.end_year,
            "windows": [{"start_year": s, "h": h}
                        for s, h in zip(seq.start_years, seq.values)]})
    elif args.format == "csv":
        out = io.StringIO()
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(["start_year", "end_year", "h"])
        for start, value in zip(seq.start_years, seq.values):
            writer.writerow([start, seq.end_year, value])
        text = out.getvalue()
    else:
        rows = [["window", "h"]]
        rows += [[f"{start}-{seq.end_year}", str(value)]
                 for start, value in zip(seq.start_years, seq.values)]
        text = f"entity  {record.entity}\n" + report_mod._pad_table(rows)
    _emit(text, args)
    return 0


def cmd_matrix(parser, args):
    records = [parse_record(path) for path in args.inputs]
    matrix = h_matrix(records, _config_from(args),
                      truncate_events_to_now=args.truncate_events)
    width = len(matrix.rows[0]) if matrix.rows else 0
    if args.format == "json":
        text = report_mod.render_json({
            "entities": list(matrix.entities),
            "rows": [list(row) for row in matrix.rows]})
    else:
        out = io.StringIO()
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(["entity"] + list(range(width)))
        for entity, row in zip(matrix.entities, matrix.rows):
            writer.writerow([entity] + ["" if v is None else v for v in row])
        text = out.getvalue()
    _emit(text, args)
    return 0


def cmd_successive(parser, args):
    records = [parse_record(path) for path in args.inputs]
    value = successive_h(records)
    text = _metric_rows_text([("members", len(records)), ("successive_h", value)],
                             args.format)
    _emit(text, args)
    return 0


def cmd_group(parser, args):
    records = [parse_record(path) for path in args.inputs]
    rows = [("members", len(records)),
            ("successive_h", successive_h(records)),
            ("group_hp", group_hp(records)),
            ("group_hc", group_hc(records))]
    _emit(_metric_rows_text(rows, args.format), args)
    return 0


def cmd_simulate(parser, args):
    config = SimConfig(seed=args.seed, careers=args.careers,
                       career_years=args.years, pub_rate=args.pub_rate,
                       gamma_shape=args.gamma_shape, gamma_rate=args.gamma_rate,
                       citation_rate_scale=args.rate_scale)
    _, summaries = burrell_simulate(config)
    if args.format == "json":
        text = report_mod.render_json(
            {"careers": [dataclasses.asdict(s) for s in summaries]})
    elif args.format == "table":
        rows = [["career_id", "years", "n_p", "n_c", "h", "a", "core_size"]]
        rows += [[str(s.career_id), str(s.years), str(s.n_p), str(s.n_c),
                  str(s.h), report_mod.format_value("a", s.a), str(s.core_size)]
                 for s in summaries]
        text = report_mod._pad_table(rows)
    else:
        text = summaries_to_csv(summaries)
    _emit(text, args)
    return 0


def cmd_journal(parser, args):
    window = JournalWindow(target_year=args.target_year,
                           n_articles=args.articles, n_citations=args.citations,
                           source_years=tuple(args.source_years or ()))
    rows = [("impact_factor", impact_factor(window))]
    if args.h is not None:
        articles_in_year = args.articles_in_year
        if articles_in_year is None:
            articles_in_year = args.articles
        rows.append(("relative_h", relative_h(args.h, articles_in_year)))
        rows.append(("sri", sri(args.h, args.articles)))
        rows.append(("impact_index", impact_index_hm(args.h, args.articles, args.beta)))
    _emit(_metric_rows_text(rows, args.format), args)
    return 0


def cmd_field(parser, args):
    rows = []
    if args.field_chi is not None:
        if args.h is None or args.reference_chi is None:
            parser.error("--field-chi needs --h and --reference-chi")
        reference = FieldProfile(args.reference_name, args.reference_chi)
        field = FieldProfile(args.field_name, args.field_chi)
        rows.append(("field_factor", field_factor(reference, field)))
        rows.append(("h_normalized", field_normalized_h(args.h, field, reference)))
    if args.np is not None or args.chi is not None:
        if args.np is None or args.chi is None:
            parser.error("theoretical estimate needs both --np and --chi")
        rows.append(("h_theoretical",
                     theoretical_h_estimate(args.np, args.chi,
                                            literal_radical=args.literal_radical)))
    if args.nc is not None:
        rows.append(("h_vanraan", vanraan_diagnostic(args.nc)))
    if not rows:
        parser.error("nothing to compute; pass --field-chi, --np/--chi or --nc")
    _emit(_metric_rows_text(rows, args.format), args)
    return 0


def cmd_status(parser, args):
    points = []
    with open(args.input, newline="", encoding="utf-8") as fh:
        reader = csv.DictReader(fh)
        if reader.fieldnames != ["entity", "n_p", "h"]:
            raise RecordParseError(
                f"{args.input}: line 1: cohort header must be entity,n_p,h")
        for lineno, row in enumerate(reader, start=2):
            try:
                points.append((row["entity"], int(row["n_p"]), int(row["h"])))
            except (TypeError, ValueError):
                raise RecordParseError(
                    f"{args.input}: line {lineno}: bad cohort row") from None
    residuals = research_status(points)
    by_entity = dict(residuals)
    if args.format == "json":
        text = report_mod.render_json(
            {"cohort": [{"entity": e, "n_p": n, "h": h, "residual": by_entity[e]}
                        for e, n, h in points]})
    elif args.format == "csv":
        out = io.StringIO()
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(["entity", "n_p", "h", "residual"])
        for entity, n_p, h in points:
            writer.writerow([entity, n_p, h, repr(by_entity[entity])])
        text = out.getvalue()
    else:
        rows = [["entity", "n_p", "h", "residual"]]
        rows += [[entity, str(n_p), str(h), f"{by_entity[entity]:.4f}"]
                 for entity, n_p, h in points]
        text = report_mod._pad_table(rows)
    _emit(text, args)
    return 0


def build_parser():
    parser = argparse.ArgumentParser(
        prog="citemetrics",
        description="Citation-impact indicators over flat record files.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", help="index suite for one record")
    p.add_argument("--input", required=True)
    p.add_argument("--indices", default=None, help="comma list of index keys")
    p.add_argument("--strict", action="store_true")
    p.add_argument("--emit-plot", default=None, metavar="PATH")
    _add_config_flags(p)
    _add_output_flags(p)
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("compare", help="rank several records side by side")
    p.add_argument("--inputs", nargs="+", required=True)
    p.add_argument("--indices", default=None)
    p.add_argument("--sort-by", default=None, metavar="INDEX")
    p.add_argument("--strict", action="store_true")
    p.add_argument("--emit-plot", default=None, metavar="PATH")
    _add_config_flags(p)
    _add_output_flags(p)
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("sequence", help="h over windows growing back in time")
    p.add_argument("--input", required=True)
    p.add_argument("--truncate-events", action="store_true",
                   help="count only events dated up to now_year")
    _add_config_flags(p)
    _add_output_flags(p)
    p.set_defaults(func=cmd_sequence)

    p = sub.add_parser("matrix", help="stacked h-sequences for a cohort")
    p.add_argument("--inputs", nargs="+", required=True)
    p.add_argument("--truncate-events", action="store_true")
    _add_config_flags(p)
    _add_output_flags(p, default_format="csv")
    p.set_defaults(func=cmd_matrix)

    p = sub.add_parser("successive", help="h-index of the members' h-indices")
    p.add_argument("--inputs", nargs="+", required=True)
    _add_output_flags(p)
    p.set_defaults(func=cmd_successive)

    p = sub.add_parser("group", help="group indices over member records")
    p.add_argument("--inputs", nargs="+", required=True)
    _add_output_flags(p)
    p.set_defaults(func=cmd_group)

    p = sub.add_parser("simulate", help="seeded stochastic career ensemble")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--careers", type=int, default=200)
    p.add_argument("--years", type=int, default=30)
    p.add_argument("--pub-rate", type=float, default=2.0)
    p.add_argument("--gamma-shape", type=float, default=3.0)
    p.add_argument("--gamma-rate", type=float, default=1.5)
    p.add_argument("--rate-scale", type=float, default=1.0)
    _add_output_flags(p, default_format="csv")
    p.set_defaults(func=cmd_simulate)

    p = sub.add_parser("journal", help="impact factor and journal h variants")
    p.add_argument("--articles", type=int, required=True)
    p.add_argument("--citations", type=int, required=True)
    p.add_argument("--target-year", type=int, default=2000)
    p.add_argument("--source-years", type=int, nargs="*", default=None)
    p.add_argument("--articles-in-year", type=int, default=None)
    p.add_argument("--h", type=int, default=None)
    p.add_argument("--beta", type=float, default=0.4)
    _add_output_flags(p)
    p.set_defaults(func=cmd_journal)

    p = sub.add_parser("field", help="field normalization and model estimates")
    p.add_argument("--h", type=int, default=None)
    p.add_argument("--field-chi", type=float, default=None)
    p.add_argument("--field-name", default="field")
    p.add_argument("--reference-chi", type=float, default=None)
    p.add_argument("--reference-name", default=DEFAULT_REFERENCE_FIELD)
    p.add_argument("--np", type=int, default=None)
    p.add_argument("--chi", type=float, default=None)
    p.add_argument("--nc", type=int, default=None)
    p.add_argument("--literal-radical", action="store_true")
    _add_output_flags(p)
    p.set_defaults(func=cmd_field)

    p = sub.add_parser("status", help="cohort residuals of h against output size")
    p.add_argument("--input", required=True, help="CSV with header entity,n_p,h")
    _add_output_flags(p)
    p.set_defaults(func=cmd_status)

    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(parser, args)
    except _INPUT_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except _DOMAIN_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 4


if __name__ == "__main__":
    raise SystemExit(main())
