from __future__ import annotations

import random

import pytest
from hypothesis import strategies as st

from treeid.graph import Graph


def path(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def star(d: int) -> Graph:
    return Graph(d + 1, [(0, i) for i in range(1, d + 1)])


def relabel_randomly(g: Graph, rng: random.Random) -> Graph:
    perm = list(range(g.n))
    rng.shuffle(perm)
    return g.relabel(perm)


@st.composite
def trees(draw, min_n: int = 1, max_n: int = 16, max_degree: int | None = None) -> Graph:
    """Random labelled tree: attach each vertex to an earlier one, then shuffle ids."""
    n = draw(st.integers(min_n, max_n))
    deg = [0] * n
    edges = []
    for v in range(1, n):
        choices = [u for u in range(v) if max_degree is None or deg[u] < max_degree]
        u = draw(st.sampled_from(choices))
        deg[u] += 1
        deg[v] += 1
        edges.append((u, v))
    perm = draw(st.permutations(range(n)))
    return Graph(n, [(perm[a], perm[b]) for a, b in edges])


@pytest.fixture
def rng() -> random.Random:
    return random.Random(20261015)
