"""Non-isomorphic free trees by level-sequence successor generation.

This is the Wright-Richmond-Odlyzko-McKay scheme: each tree is rooted at
its center and written as the depth sequence of a preorder walk; successive
sequences are produced in constant amortized time.
"""

from __future__ import annotations

from itertools import islice
from typing import IO, Iterable, Iterator

from .errors import DomainError
from .graph import Graph, to_graph6

MAX_ORDER = 20


def _next_rooted_tree(seq: list[int], p: int | None = None) -> list[int] | None:
    if p is None:
        p = len(seq) - 1
        while seq[p] == 1:
            p -= 1
    if p == 0:
        return None
    q = p - 1
    while seq[q] != seq[p] - 1:
        q -= 1
    out = list(seq)
    for i in range(p, len(out)):
        out[i] = out[i - p + q]
    return out


def _split_tree(seq: list[int]) -> tuple[list[int], list[int]]:
    # left: first subtree of the root (rebased); rest: the root with the others
    m = len(seq)
    seen = False
    for i, d in enumerate(seq):
        if d == 1:
            if seen:
                m = i
                break
            seen = True
    left = [d - 1 for d in seq[1:m]]
    rest = [0] + seq[m:]
    return left, rest


def _next_tree(seq: list[int]) -> list[int] | None:
    left, rest = _split_tree(seq)
    lh, rh = max(left), max(rest)
    ok = rh >= lh
    if ok and rh == lh:
        if len(left) > len(rest) or (len(left) == len(rest) and left > rest):
            ok = False
    if ok:
        return seq
    p = len(left)
    new = _next_rooted_tree(seq, p)
    if new is not None and seq[p] > 2:
        new_left, _ = _split_tree(new)
        tail = list(range(1, max(new_left) + 2))
        new[-len(tail):] = tail
    return new


def _sequence_to_graph(seq: list[int]) -> Graph:
    edges = []
    stack: list[int] = []
    for i, d in enumerate(seq):
        while stack and seq[stack[-1]] >= d:
            stack.pop()
        if stack:
            edges.append((stack[-1], i))
        stack.append(i)
    return Graph(len(seq), edges)


def _all_trees(n: int) -> Iterator[Graph]:
    if n == 1:
        yield Graph(1)
        return
    if n == 2:
        yield Graph(2, [(0, 1)])
        return
    # start from the path, rooted at its center
    seq: list[int] | None = list(range(n // 2 + 1)) + list(range(1, (n + 1) // 2))
    while seq is not None:
        seq = _next_tree(seq)
        if seq is not None:
            yield _sequence_to_graph(seq)
            seq = _next_rooted_tree(seq)


def free_trees(n: int, max_degree: int | None = None) -> Iterator[Graph]:
    """Stream one labelled tree per isomorphism class of order ``n``.

    Vertices are numbered in preorder from the center. With ``max_degree``
    trees of larger maximum degree are skipped.
    """
    if not 1 <= n <= MAX_ORDER:
        raise DomainError(f"tree order must lie in 1..{MAX_ORDER}, got {n}")
    for t in _all_trees(n):
        if max_degree is None or t.max_degree <= max_degree:
            yield t


def enumerate_chunked(n: int, chunks: int, max_degree: int | None = None) -> list[Iterator[Graph]]:
    """Split the stream into ``chunks`` disjoint streams by index stride."""
    if chunks < 1:
        raise DomainError("chunks must be at least 1")
    return [islice(free_trees(n, max_degree), i, None, chunks) for i in range(chunks)]


def write_graph6(trees: Iterable[Graph], out: IO[str]) -> int:
    count = 0
    for t in trees:
        out.write(to_graph6(t) + "\n")
        count += 1
    return count
