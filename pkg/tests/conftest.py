import random

import pytest

import naive_graph as ng
from lcgraph import Graph


def to_naive(g: Graph) -> dict:
    return ng.make(g.vertices, g.edges())


def from_naive(d: dict) -> Graph:
    edges = sorted(tuple(sorted(e)) for e in ng.edge_set(d))
    return Graph.from_edges(sorted(d), edges)


def same_graph(g: Graph, d: dict) -> bool:
    """Production graph equals oracle graph (labels and edges)."""
    return g.vertices == tuple(sorted(d)) and set(g.edges()) == {
        tuple(sorted(e)) for e in ng.edge_set(d)
    }


@pytest.fixture
def rng():
    return random.Random(20260810)
