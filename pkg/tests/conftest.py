import time

import pytest

from primspec.classify import analyze_ring, verify_theorems
from primspec.corpus import DEFAULT_CORPUS


@pytest.fixture(scope="session")
def corpus_suite():
    """Analyses and verification reports for the whole built-in corpus,
    plus the wall-clock seconds the run took."""
    started = time.perf_counter()
    results = {}
    for text in DEFAULT_CORPUS:
        analysis = analyze_ring(text)
        results[text] = (analysis, verify_theorems(analysis))
    elapsed = time.perf_counter() - started
    return results, elapsed


@pytest.fixture(scope="session")
def corpus_analyses(corpus_suite):
    results, _ = corpus_suite
    return {text: analysis for text, (analysis, _) in results.items()}
