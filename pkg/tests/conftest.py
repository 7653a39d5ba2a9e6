import os
import sys

import pytest

sys.path.insert(0, os.path.dirname(__file__))

CORPUS_PATH = os.path.join(os.path.dirname(__file__), "data", "connected_upto8.g6")


@pytest.fixture(scope="session")
def corpus_lines():
    with open(CORPUS_PATH) as fh:
        return [ln.strip() for ln in fh if ln.strip()]


@pytest.fixture(scope="session")
def corpus_by_order(corpus_lines):
    from isobound import parse_graph6

    buckets = {}
    for line in corpus_lines:
        g = parse_graph6(line)
        buckets.setdefault(g.n, []).append((line, g))
    return buckets
