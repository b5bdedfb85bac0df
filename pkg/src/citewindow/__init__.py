"""Windowed h-index variants and citation-aging analytics.

The package models a researcher's record as per-paper, per-year citation
counts and derives time-restricted impact indices from it: the timed
h-index over a sliding publication/citation window, the 5-year index,
the author impact factor and the age-discounted contemporary index,
together with the aging analytics (quantile citation windows, citation
mass groups and their cumulative/yearly curves) that motivate choosing a
window length.
"""

from .aging import (
    CitationGroup,
    GroupPartition,
    QuantileWindows,
    group_cumulative_curves,
    group_yearly_counts,
    partition_by_mass,
    quantile_windows,
    rank_papers_by_total,
    recently_cited_count,
)
from .errors import (
    CitationBeforePublicationError,
    CorpusError,
    DuplicateIdError,
    DuplicateYearRowError,
    EmptyCorpusError,
    IngestError,
    InvalidRangeError,
    MalformedHeaderError,
    NegativeCountError,
    NoPapersInWindowError,
    ParseError,
    RefYearBeforePublicationError,
    SchemaError,
    UnknownPaperIdError,
    ZeroCitationsError,
)
from .indices import (
    ALL,
    AifValue,
    EvolutionTable,
    IndexValue,
    author_impact_factor,
    contemporary_h,
    evolution_table,
    h5_index,
    h_from_ranked,
    interpolate_h,
    rank_citations,
    timed_h,
    windowed_h,
)
from .ingest import (
    IngestOptions,
    export_corpus,
    export_corpus_csv,
    export_corpus_json,
    parse_corpus_csv,
    parse_corpus_json,
)
from .model import (
    Corpus,
    PaperRecord,
    RankedCitations,
    YearWindow,
    citations_in_window,
    cumulative_series,
    validate_corpus,
)

__version__ = "0.1.0"

__all__ = [
    "ALL",
    "AifValue",
    "CitationBeforePublicationError",
    "CitationGroup",
    "Corpus",
    "CorpusError",
    "DuplicateIdError",
    "DuplicateYearRowError",
    "EmptyCorpusError",
    "EvolutionTable",
    "GroupPartition",
    "IndexValue",
    "IngestError",
    "IngestOptions",
    "InvalidRangeError",
    "MalformedHeaderError",
    "NegativeCountError",
    "NoPapersInWindowError",
    "PaperRecord",
    "ParseError",
    "QuantileWindows",
    "RankedCitations",
    "RefYearBeforePublicationError",
    "SchemaError",
    "UnknownPaperIdError",
    "YearWindow",
    "ZeroCitationsError",
    "author_impact_factor",
    "citations_in_window",
    "contemporary_h",
    "cumulative_series",
    "evolution_table",
    "export_corpus",
    "export_corpus_csv",
    "export_corpus_json",
    "group_cumulative_curves",
    "group_yearly_counts",
    "h5_index",
    "h_from_ranked",
    "interpolate_h",
    "parse_corpus_csv",
    "parse_corpus_json",
    "partition_by_mass",
    "quantile_windows",
    "rank_citations",
    "rank_papers_by_total",
    "recently_cited_count",
    "timed_h",
    "validate_corpus",
    "windowed_h",
]
