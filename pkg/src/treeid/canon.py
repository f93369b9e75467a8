"""Canonical forms of free trees (AHU encoding rooted at the center)."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import NotATree
from .graph import Graph


@dataclass(frozen=True, order=True)
class CanonicalForm:
    encoding: bytes

    def hex(self) -> str:
        return self.encoding.hex()

    def __str__(self) -> str:
        return self.encoding.decode("ascii")


def centers(t: Graph) -> list[int]:
    """The one or two central vertices, found by peeling leaves."""
    if not t.is_tree():
        raise NotATree("centers of a non-tree")
    if t.n <= 2:
        return list(range(t.n))
    deg = list(t.degrees)
    layer = [v for v in range(t.n) if deg[v] == 1]
    remaining = t.n
    while remaining > 2:
        remaining -= len(layer)
        nxt = []
        for v in layer:
            for w in t.adjacency[v]:
                deg[w] -= 1
                if deg[w] == 1:
                    nxt.append(w)
        layer = nxt
    return sorted(layer)


def _rooted(t: Graph, root: int) -> tuple[dict[int, bytes], dict[int, list[int]]]:
    """AHU codes of every subtree when ``t`` hangs from ``root``.

    Returns the code of each vertex and its children sorted by code.
    """
    parent = {root: -1}
    order = [root]
    for v in order:
        for w in t.adjacency[v]:
            if w != parent[v]:
                parent[w] = v
                order.append(w)
    code: dict[int, bytes] = {}
    kids: dict[int, list[int]] = {}
    for v in reversed(order):
        ch = sorted((w for w in t.adjacency[v] if w != parent[v]), key=lambda w: (code[w], w))
        kids[v] = ch
        code[v] = b"(" + b"".join(code[w] for w in ch) + b")"
    return code, kids


def _best_root(t: Graph) -> tuple[int, dict[int, bytes], dict[int, list[int]]]:
    best = None
    for c in centers(t):
        code, kids = _rooted(t, c)
        if best is None or code[c] < best[1][best[0]]:
            best = (c, code, kids)
    return best


def canonical_form(t: Graph) -> CanonicalForm:
    if not t.is_tree():
        raise NotATree("canonical form is defined for trees only")
    root, code, _ = _best_root(t)
    return CanonicalForm(code[root])


def canonical_order(t: Graph) -> list[int]:
    """Vertices in canonical preorder.

    For isomorphic trees ``a`` and ``b`` the i-th entries of their canonical
    orders correspond under an isomorphism.
    """
    if not t.is_tree():
        raise NotATree("canonical order is defined for trees only")
    root, _, kids = _best_root(t)
    out = []
    stack = [root]
    while stack:
        v = stack.pop()
        out.append(v)
        stack.extend(reversed(kids[v]))
    return out


def is_isomorphic(a: Graph, b: Graph) -> bool:
    return a.n == b.n and canonical_form(a) == canonical_form(b)


def isomorphism(a: Graph, b: Graph) -> list[int] | None:
    """A list ``m`` with ``m[v]`` the image in ``b`` of vertex ``v`` of ``a``."""
    if not is_isomorphic(a, b):
        return None
    m = [0] * a.n
    for x, y in zip(canonical_order(a), canonical_order(b)):
        m[x] = y
    return m
