import gc
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from ordplex.toolkit import ordered_flag_corpus  # noqa: E402


@pytest.fixture(scope="session")
def corpus():
    return ordered_flag_corpus(4)


@pytest.fixture(scope="session")
def small_corpus(corpus):
    return [oc for oc in corpus if len(oc.vertices) <= 3]


@pytest.fixture(scope="session")
def corpus_sums(corpus):
    """Both constructions for every corpus pair on the window [0, 3]."""
    from ordplex import BOTH, Window, connected_sum_window

    w = Window(0, 3)
    # the results stay alive for the session; keep the collector from
    # rescanning them during the build and in every later test
    gc.disable()
    try:
        sums = {
            (i, j): connected_sum_window(k1, k2, w, BOTH)
            for i, k1 in enumerate(corpus)
            for j, k2 in enumerate(corpus)
        }
    finally:
        gc.freeze()
        gc.enable()
    return sums
