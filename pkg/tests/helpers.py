"""Shared corpus generators for the test suite.

The seeded numpy generators produce corpora at the scale the acceptance
gate demands; the hypothesis strategies build smaller corpora for
shrinkable property tests.
"""

import numpy as np
from hypothesis import strategies as st

from citewindow import Corpus, PaperRecord, YearWindow, validate_corpus


TITLE_POOL = (None, "On windows", 'a "quoted" title', "commas, everywhere", "über study")


def random_corpus(rng, max_papers=200, max_career=40, max_count=50, with_titles=False) -> Corpus:
    """Seeded random corpus: sparse per-year counts over a bounded career."""
    n_papers = int(rng.integers(1, max_papers + 1))
    y0 = int(rng.integers(1950, 2011))
    career = int(rng.integers(1, max_career + 1))
    last_year = y0 + career - 1
    papers = []
    for i in range(n_papers):
        pub = int(rng.integers(y0, last_year + 1))
        n_years = last_year - pub + 1
        counts = rng.integers(0, max_count + 1, size=n_years)
        counts[rng.random(n_years) < 0.35] = 0
        citations = {pub + j: int(c) for j, c in enumerate(counts) if c > 0}
        title = TITLE_POOL[int(rng.integers(len(TITLE_POOL)))] if with_titles else None
        papers.append(PaperRecord(f"p{i:04d}", pub, citations, title=title))
    # Anchor one paper at y0 so corpus.y0 matches the drawn value.
    papers[0] = PaperRecord(papers[0].id, y0, papers[0].citations, papers[0].title)
    return validate_corpus(papers)


def random_window(rng, corpus: Corpus, unbounded_p=0.25) -> YearWindow:
    """Random window overlapping (or slightly missing) the corpus span."""
    lo = corpus.y0 - 3
    hi = corpus.y_end + 3
    end = int(rng.integers(lo, hi + 1))
    if rng.random() < unbounded_p:
        return YearWindow(None, end)
    start = int(rng.integers(lo, hi + 1))
    if start > end:
        start, end = end, start
    return YearWindow(start, end)


@st.composite
def small_corpora(draw, max_papers=10, max_span=10, max_count=25):
    """Hypothesis corpora small enough to shrink usefully."""
    y0 = draw(st.integers(1960, 2015))
    n_papers = draw(st.integers(1, max_papers))
    papers = []
    for i in range(n_papers):
        pub = y0 + draw(st.integers(0, max_span - 1))
        offsets = draw(st.lists(st.integers(0, max_span), max_size=6, unique=True))
        citations = {pub + off: draw(st.integers(1, max_count)) for off in offsets}
        papers.append(PaperRecord(f"p{i}", pub, citations))
    return validate_corpus(papers)


@st.composite
def ranked_vectors(draw, max_len=8, max_value=12):
    """Non-increasing vectors of non-negative integers."""
    values = draw(st.lists(st.integers(0, max_value), max_size=max_len))
    return tuple(sorted(values, reverse=True))
