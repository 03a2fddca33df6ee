"""citetrace: h-index core/tail analytics for publication/citation records.

Decomposes a document set into h-core, h-tail and uncited classes,
normalizes the class masses into the academic vectors X, Y and Z,
assembles the 3x3 performance matrix, and condenses it into the
academic trace T together with the I3X/I3Y weighted indicators.
Includes deterministic ranking, Pearson/Spearman correlation with
significance levels, dataset parsing, and a bundled reference corpus
with golden expected values.
"""

from .correlation import (
    CorrelationReport,
    PairCorrelation,
    correlation_report,
    midranks,
    pearson,
    significance,
    spearman,
    stars,
)
from .datasets import (
    DatasetFile,
    MetricTable,
    dataset_to_csv,
    dataset_to_json,
    parse_citations_csv,
    parse_json,
    parse_metric_csv,
    parse_summary_csv,
)
from .errors import (
    CitetraceError,
    DegenerateInput,
    DuplicateEntity,
    JoinError,
    LengthMismatch,
    ParseError,
    UnknownIndicator,
    ValidationError,
)
from .indicators import (
    IndicatorBundle,
    PerformanceMatrix,
    WeightScheme,
    academic_vectors,
    class_weights,
    i3_aggregate,
    indicator_bundle,
    performance_matrix,
    score_entity,
    trace_from_counts,
)
from .partition import (
    CitationList,
    Partition,
    SummaryRecord,
    h_index,
    partition_from_list,
    partition_from_summary,
    plausibility_warnings,
    summarize,
)
from .ranking import INDICATOR_KEYS, RankRow, RankTable, indicator_values, rank_entities
from .reference import (
    ReferenceCorpus,
    ReferenceReport,
    journals_dataset,
    matches_displayed,
    reference_corpus,
    units_dataset,
    validate_corpus,
)

__version__ = "0.1.0"

__all__ = [
    "CitationList",
    "SummaryRecord",
    "Partition",
    "h_index",
    "partition_from_list",
    "partition_from_summary",
    "summarize",
    "plausibility_warnings",
    "WeightScheme",
    "PerformanceMatrix",
    "IndicatorBundle",
    "class_weights",
    "academic_vectors",
    "performance_matrix",
    "trace_from_counts",
    "i3_aggregate",
    "indicator_bundle",
    "score_entity",
    "INDICATOR_KEYS",
    "RankRow",
    "RankTable",
    "indicator_values",
    "rank_entities",
    "pearson",
    "spearman",
    "midranks",
    "significance",
    "stars",
    "PairCorrelation",
    "CorrelationReport",
    "correlation_report",
    "DatasetFile",
    "MetricTable",
    "parse_summary_csv",
    "parse_citations_csv",
    "parse_json",
    "parse_metric_csv",
    "dataset_to_csv",
    "dataset_to_json",
    "ReferenceCorpus",
    "ReferenceReport",
    "reference_corpus",
    "journals_dataset",
    "units_dataset",
    "matches_displayed",
    "validate_corpus",
    "CitetraceError",
    "ValidationError",
    "ParseError",
    "DuplicateEntity",
    "LengthMismatch",
    "DegenerateInput",
    "UnknownIndicator",
    "JoinError",
]
