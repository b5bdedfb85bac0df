import pytest

from citewindow import PaperRecord, validate_corpus


@pytest.fixture
def toy_corpus():
    """Three papers, 2000-2005, 11 citations; used throughout the suite."""
    return validate_corpus(
        [
            PaperRecord("P1", 2000, {2000: 1, 2001: 3, 2003: 2}),
            PaperRecord("P2", 2001, {2001: 2, 2002: 1}),
            PaperRecord("P3", 2004, {2004: 1, 2005: 1}),
        ]
    )
