"""Slow, obviously-correct reference implementations used only by the tests.

Nothing here shares code with the pruned solvers or the level-sequence
generator beyond the Graph container and the canonical form.
"""

from __future__ import annotations

from itertools import combinations

from .canon import canonical_form
from .graph import Graph


def _closed(g: Graph) -> list[frozenset[int]]:
    return [frozenset(g.adjacency[v]) | {v} for v in range(g.n)]


def brute_identifying_code(g: Graph) -> tuple[int, tuple[int, ...]] | None:
    """Smallest identifying code by trying subsets in increasing size.

    Returns (size, code) with the first code in ``combinations`` order, or
    None when the graph has closed twins.
    """
    nb = _closed(g)
    if len(set(nb)) < g.n:
        return None
    for k in range(1, g.n + 1):
        for code in combinations(range(g.n), k):
            c = set(code)
            sigs = [frozenset(s & c) for s in nb]
            if all(sigs) and len(set(sigs)) == g.n:
                return k, code
    return None


def brute_dominating_set(g: Graph) -> tuple[int, tuple[int, ...]]:
    nb = _closed(g)
    for k in range(1, g.n + 1):
        for code in combinations(range(g.n), k):
            c = set(code)
            if all(s & c for s in nb):
                return k, code
    raise ValueError("empty graph")


def naive_free_trees(n: int) -> list[Graph]:
    """One representative per isomorphism class, grown leaf by leaf."""
    if n < 1:
        return []
    level = {canonical_form(Graph(1)): Graph(1)}
    for m in range(1, n):
        nxt: dict = {}
        for t in level.values():
            for v in range(m):
                grown = Graph(m + 1, t.edges() + [(v, m)])
                nxt.setdefault(canonical_form(grown), grown)
        level = nxt
    return list(level.values())
