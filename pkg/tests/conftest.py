"""Shared fixtures: small-graph corpora and the seeded 10-vertex sample.

The corpora feed both the module tests and the acceptance suite.  The
10-vertex sample is selected by an independent networkx-based
matching-covered filter so that the package's own filter is never the thing
deciding what the package gets tested on.
"""

import random

import networkx as nx
import pytest

from tightcuts.corpus import connected_graphs
from tightcuts.formats import write_graph6
from tightcuts.graphcore import build_graph
from tightcuts.matching import is_matching_covered

SAMPLE10_SEED = 20260822
SAMPLE10_COUNT = 500


def to_networkx(g):
    h = nx.MultiGraph()
    h.add_nodes_from(g.vertices)
    h.add_edges_from(g.edges)
    return h


def nx_is_matching_covered(gnx):
    """Independent matching-covered oracle built on networkx matchings."""
    n = gnx.number_of_nodes()
    if n % 2 or n < 2 or not nx.is_connected(gnx):
        return False
    if 2 * len(nx.max_weight_matching(gnx, maxcardinality=True)) != n:
        return False
    for u, v in list(gnx.edges()):
        h = nx.Graph(gnx)
        h.remove_nodes_from((u, v))
        if 2 * len(nx.max_weight_matching(h, maxcardinality=True)) != n - 2:
            return False
    return True


def by_label(g):
    return {lab: v for v, lab in g.label_items}


@pytest.fixture(scope="session")
def corpus6():
    return [g for n in (2, 4, 6) for g in connected_graphs(n)
            if is_matching_covered(g)]


@pytest.fixture(scope="session")
def corpus8():
    return [g for g in connected_graphs(8) if is_matching_covered(g)]


def generate_sample10():
    rng = random.Random(SAMPLE10_SEED)
    out = []
    while len(out) < SAMPLE10_COUNT:
        p = rng.uniform(0.28, 0.75)
        edges = [(i, j) for i in range(10) for j in range(i + 1, 10)
                 if rng.random() < p]
        gnx = nx.Graph(edges)
        gnx.add_nodes_from(range(10))
        if nx_is_matching_covered(gnx):
            out.append(build_graph(10, edges))
    return out


@pytest.fixture(scope="session")
def sample10():
    return generate_sample10()


@pytest.fixture(scope="session")
def sample10_path(tmp_path_factory, sample10):
    path = tmp_path_factory.mktemp("corpus") / "sample10.g6"
    path.write_text("".join(write_graph6(g) + "\n" for g in sample10))
    return path
