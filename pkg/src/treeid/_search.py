"""Pure-Python hitting-set search kernel.

The identifying-code and dominating-set solvers reduce to the same problem:
given constraint masks, find a vertex set of bounded size meeting every
mask. ``_csearch.pyx`` implements the identical algorithm for n <= 64; the
two must explore the same nodes in the same order.
"""

from __future__ import annotations


class _LimitHit(Exception):
    pass


def hit_search(
    constraints: list[int],
    chosen: int,
    allowed: int,
    budget: int,
    node_limit: int,
) -> tuple[int, int, bool]:
    """Depth-first search for a hitting set of size <= ``budget``.

    The set must contain ``chosen`` and may add vertices from ``allowed``.
    ``constraints`` should be pre-sorted by popcount (see ``prepare``), since
    that order drives the disjoint-packing lower bound. At every node the
    search branches on the unhit constraint with the fewest selectable
    vertices, trying those vertices in increasing id order.

    Returns ``(mask, nodes, limit_hit)`` with ``mask == -1`` when no set exists
    within the budget or the node limit was reached.
    """
    nodes = 0

    def dfs(cons: list[int], chosen: int, allowed: int, room: int) -> int:
        nonlocal nodes
        nodes += 1
        if nodes > node_limit:
            raise _LimitHit
        if not cons:
            return chosen
        if room <= 0:
            return -1
        best = 0
        best_count = 1 << 30
        used = 0
        packed = 0
        for c in cons:
            a = c & allowed
            if not a:
                return -1
            k = a.bit_count()
            if k < best_count:
                best_count = k
                best = a
            if not a & used:
                used |= a
                packed += 1
        if packed > room:
            return -1
        while best:
            low = best & -best
            best ^= low
            res = dfs([c for c in cons if not c & low], chosen | low, allowed & ~low, room - 1)
            if res >= 0:
                return res
            allowed &= ~low
        return -1

    start = [c for c in constraints if not c & chosen]
    try:
        found = dfs(start, chosen, allowed & ~chosen, budget - chosen.bit_count())
    except _LimitHit:
        return -1, nodes - 1, True
    return found, nodes, False
