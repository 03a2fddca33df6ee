"""Command-line interface: compute, rank, correlate, validate-reference, plot-data.

Output is fully deterministic: identical inputs and flags produce
byte-identical bytes (no timestamps, '.' as the decimal point).  Human
tables round to a configurable number of significant figures; csv and
json output never rounds.  Exit codes: 0 success, 1 validation or
comparison failure, 2 usage error.
"""

from __future__ import annotations

import csv
import io
import json
import math
import sys
from pathlib import Path
from typing import Sequence

import click

from .correlation import correlation_report
from .datasets import (
    DatasetFile,
    MetricTable,
    parse_citations_csv,
    parse_json,
    parse_metric_csv,
    parse_summary_csv,
)
from .errors import CitetraceError, JoinError
from .indicators import score_entity
from .partition import partition_from_list, partition_from_summary, plausibility_warnings, SummaryRecord
from .ranking import INDICATOR_KEYS, RankTable, indicator_values, rank_entities
from .reference import journals_dataset, units_dataset, validate_corpus

_FORMATS = ("summary", "citations", "json")
_OUTPUTS = ("table", "csv", "json")
_CORPUS_INPUTS = {
    "corpus": journals_dataset,
    "corpus:journals": journals_dataset,
    "corpus:units": units_dataset,
}


def _load_dataset(input_: str, format_: str | None) -> DatasetFile:
    if input_ in _CORPUS_INPUTS:
        return _CORPUS_INPUTS[input_]()
    path = Path(input_)
    if not path.is_file():
        raise click.UsageError(f"input file not found: {input_}")
    data = path.read_bytes()
    if format_ is None:
        format_ = "json" if path.suffix.lower() == ".json" else "summary"
    if format_ == "summary":
        return parse_summary_csv(data, source=str(path))
    if format_ == "citations":
        return parse_citations_csv(data, source=str(path))
    return parse_json(data, source=str(path))


def _load_metrics(path_str: str) -> MetricTable:
    path = Path(path_str)
    if not path.is_file():
        raise click.UsageError(f"metric file not found: {path_str}")
    return parse_metric_csv(path.read_bytes(), source=str(path))


def _select_group(dataset: DatasetFile, group: str | None) -> tuple:
    if group is None:
        return dataset.records
    wanted = group.lower()
    return tuple(r for r in dataset.records
                 if getattr(r, "group", None) and r.group.lower() == wanted)


def _emit_plausibility(records) -> None:
    for rec in records:
        part = (partition_from_summary(rec) if isinstance(rec, SummaryRecord)
                else partition_from_list(rec))
        for warning in plausibility_warnings(part):
            click.echo(f"warning: {rec.name}: {warning}", err=True)


def _format_sig(value: float, figures: int) -> str:
    """Fixed-notation rounding to significant figures (tables only)."""
    if isinstance(value, int):
        return str(value)
    if value == 0 or not math.isfinite(value):
        return str(value)
    digits = figures - 1 - math.floor(math.log10(abs(value)))
    rounded = round(value, digits)
    if digits <= 0:
        return f"{rounded:.0f}"
    return f"{rounded:.{digits}f}"


def _cell(value, figures: int | None) -> str:
    if value is None:
        return ""
    if isinstance(value, str):
        return value
    if isinstance(value, int):
        return str(value)
    if figures is None:
        return repr(float(value))
    return _format_sig(value, figures)


def _write_table(headers: Sequence[str], rows: Sequence[Sequence], figures: int) -> str:
    cells = [[_cell(v, figures) for v in row] for row in rows]
    widths = [max(len(h), *(len(r[i]) for r in cells)) if cells else len(h)
              for i, h in enumerate(headers)]
    lines = ["  ".join(h.ljust(w) if i == 0 else h.rjust(w)
                       for i, (h, w) in enumerate(zip(headers, widths)))]
    for row in cells:
        lines.append("  ".join(v.ljust(w) if i == 0 else v.rjust(w)
                               for i, (v, w) in enumerate(zip(row, widths))))
    return "\n".join(line.rstrip() for line in lines) + "\n"


def _write_csv(headers: Sequence[str], rows: Sequence[Sequence]) -> str:
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(headers)
    for row in rows:
        writer.writerow([_cell(v, None) for v in row])
    return out.getvalue()


def _write_json(headers: Sequence[str], rows: Sequence[Sequence]) -> str:
    return json.dumps([dict(zip(headers, row)) for row in rows], indent=2) + "\n"


def _render(output: str, headers: Sequence[str], rows: Sequence[Sequence], figures: int) -> str:
    if output == "table":
        return _write_table(headers, rows, figures)
    if output == "csv":
        return _write_csv(headers, rows)
    return _write_json(headers, rows)


def _entity_headers(mask_x3: bool) -> list[str]:
    keys = [k for k in INDICATOR_KEYS if not (mask_x3 and k == "X3")]
    return ["name"] + keys + ["sign"]


def _entity_row(name: str, values: dict, sign: str, mask_x3: bool) -> list:
    keys = [k for k in INDICATOR_KEYS if not (mask_x3 and k == "X3")]
    return [name] + [values[k] for k in keys] + [sign]


class _Command(click.Command):
    """Maps domain errors to exit code 1 and usage errors to 2."""

    def invoke(self, ctx):
        try:
            return super().invoke(ctx)
        except CitetraceError as err:
            click.echo(f"error: {err}", err=True)
            sys.exit(1)


@click.group()
def main() -> None:
    """h-index core/tail analytics: performance matrices and academic traces."""


_input_option = click.option("--input", "input_", required=True, metavar="PATH",
                             help="Dataset path, or corpus / corpus:units for the bundled data.")
_format_option = click.option("--format", "format_", type=click.Choice(_FORMATS), default=None,
                              help="Input format (default: by file extension; csv means summary).")
_output_option = click.option("--output", type=click.Choice(_OUTPUTS), default="table",
                              show_default=True, help="Report format.")
_group_option = click.option("--group", default=None, metavar="NAME",
                             help="Keep only records tagged with this group (e.g. LIS).")
_mask_option = click.option("--mask-x3", is_flag=True,
                            help="Drop the X3 column from the report (never from the trace).")
_precision_option = click.option("--precision", type=click.IntRange(1, 17), default=4,
                                 show_default=True, help="Significant figures in table output.")


@main.command(cls=_Command)
@_input_option
@_format_option
@_output_option
@_group_option
@_mask_option
@_precision_option
def compute(input_, format_, output, group, mask_x3, precision) -> None:
    """Per-entity matrix entries, trace, h, I3X, I3Y and the sign flag."""
    records = _select_group(_load_dataset(input_, format_), group)
    _emit_plausibility(records)
    rows = []
    for rec in records:
        name, matrix, bundle = score_entity(rec)
        rows.append(_entity_row(name, indicator_values(matrix, bundle), bundle.sign, mask_x3))
    click.echo(_render(output, _entity_headers(mask_x3), rows, precision), nl=False)


@main.command(cls=_Command)
@_input_option
@_format_option
@_output_option
@_group_option
@click.option("--key", type=click.Choice(INDICATOR_KEYS), default="T", show_default=True,
              help="Indicator to sort by (descending).")
@click.option("--positive-only", is_flag=True, help="Keep only entities with T > 0.")
@_mask_option
@_precision_option
def rank(input_, format_, output, group, key, positive_only, mask_x3, precision) -> None:
    """Rank entities by an indicator; ties break by name."""
    records = _select_group(_load_dataset(input_, format_), group)
    entities = [score_entity(rec) for rec in records]
    predicate = (lambda name, m, b: b.trace > 0) if positive_only else None
    table: RankTable = rank_entities(entities, key=key, predicate=predicate)
    headers = ["rank"] + _entity_headers(mask_x3)
    rows = [[i] + _entity_row(row.name, row.values, row.sign, mask_x3)
            for i, row in enumerate(table.rows, start=1)]
    click.echo(_render(output, headers, rows, precision), nl=False)


def _join_metrics(entities, metrics: MetricTable | None):
    """Inner-join computed entities with metric rows; warn on mismatches."""
    computed = [(name, indicator_values(matrix, bundle))
                for name, matrix, bundle in entities]
    if metrics is None:
        return computed, {}
    matched = [(name, values) for name, values in computed if name in metrics.rows]
    matched_names = {name for name, _ in matched}
    for name, _ in computed:
        if name not in matched_names:
            click.echo(f"warning: no metric row for entity {name!r}", err=True)
    for name in metrics.rows:
        if name not in matched_names:
            click.echo(f"warning: metric row {name!r} matches no entity", err=True)
    if not matched:
        raise JoinError("no entity names in common between dataset and metric file")
    metric_columns = {
        metric: [metrics.rows[name][i] for name, _ in matched]
        for i, metric in enumerate(metrics.metrics)
    }
    return matched, metric_columns


@main.command(cls=_Command)
@_input_option
@_format_option
@_output_option
@_group_option
@click.option("--metric-file", default=None, metavar="PATH",
              help="CSV of external per-entity metrics (header: name,<metric>...).")
@_precision_option
@click.argument("columns", nargs=-1)
def correlate(input_, format_, output, group, metric_file, precision, columns) -> None:
    """Pearson and Spearman correlations between indicator/metric columns.

    COLUMNS are indicator ids (T, h, I3X, ...) or metric-file column
    names; default is T plus every metric column, or T/h/I3X/I3Y when no
    metric file is given.
    """
    records = _select_group(_load_dataset(input_, format_), group)
    entities = [score_entity(rec) for rec in records]
    metrics = _load_metrics(metric_file) if metric_file else None
    joined, metric_columns = _join_metrics(entities, metrics)
    if not columns:
        columns = ("T", *metric_columns) if metric_columns else ("T", "h", "I3X", "I3Y")
    series = []
    for column in columns:
        if column in INDICATOR_KEYS:
            series.append((column, [values[column] for _, values in joined]))
        elif column in metric_columns:
            series.append((column, metric_columns[column]))
        else:
            raise click.UsageError(f"unknown column {column!r}")
    if len(series) < 2:
        raise click.UsageError("need at least two columns to correlate")
    report = correlation_report(series)
    headers = ["a", "b", "n", "pearson_r", "p_pearson", "pearson_stars",
               "spearman_rho", "p_spearman", "spearman_stars"]
    rows = [[p.a, p.b, p.n, p.pearson_r, p.pearson_p, p.pearson_stars,
             p.spearman_rho, p.spearman_p, p.spearman_stars]
            for p in report.pairs]
    click.echo(_render(output, headers, rows, precision), nl=False)


@main.command("validate-reference", cls=_Command)
def validate_reference() -> None:
    """Recompute the bundled corpus and check every golden cell."""
    report = validate_corpus()
    for cell in report.cells:
        status = "PASS" if cell.passed else "FAIL"
        click.echo(f"{status} {cell.table:<12} {cell.entity:<22} {cell.cell:<3} "
                   f"computed={cell.computed!r} displayed={cell.displayed}")
    passed = sum(1 for cell in report.cells if cell.passed)
    click.echo(f"{passed}/{len(report.cells)} golden cells within displayed precision")
    if not report.ok:
        sys.exit(1)


@main.command("plot-data", cls=_Command)
@_input_option
@_format_option
@_group_option
@click.option("--metric-file", required=True, metavar="PATH",
              help="CSV of external per-entity metrics to pair with the trace.")
@click.option("--positive-only", is_flag=True, help="Keep only entities with T > 0.")
def plot_data(input_, format_, group, metric_file, positive_only) -> None:
    """Emit name,T,<metric> rows for external plotting."""
    records = _select_group(_load_dataset(input_, format_), group)
    entities = [score_entity(rec) for rec in records]
    metrics = _load_metrics(metric_file)
    joined, metric_columns = _join_metrics(entities, metrics)
    metric = metrics.metrics[0]
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(["name", "T", metric])
    for (name, values), metric_value in zip(joined, metric_columns[metric]):
        if positive_only and values["T"] <= 0:
            continue
        writer.writerow([name, repr(values["T"]), repr(metric_value)])
    click.echo(out.getvalue(), nl=False)


if __name__ == "__main__":
    main()
