"""Undirected simple graphs, vertex bitsets and structural statistics.

Vertices are the integers ``0..n-1``. Vertex sets are carried as Python ints
used as bit vectors (bit ``v`` set means ``v`` is in the set); the public
:class:`VertexSet` wraps such an int together with its width.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, Sequence

from .errors import Disconnected, InvalidGraph, ParseError

WORD_BITS = 64


def bits_of(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


@dataclass(frozen=True)
class VertexSet:
    """Fixed-width set of vertex ids backed by an integer bit vector."""

    n: int
    bits: int = 0

    def __post_init__(self):
        if self.bits < 0 or self.bits >> self.n:
            raise ValueError(f"bits set outside [0, {self.n})")

    @classmethod
    def of(cls, n: int, vertices: Iterable[int]) -> "VertexSet":
        return cls(n, mask_of(vertices))

    @classmethod
    def full(cls, n: int) -> "VertexSet":
        return cls(n, (1 << n) - 1)

    def _check(self, other: "VertexSet") -> None:
        if self.n != other.n:
            raise ValueError("vertex sets of different width")

    def __or__(self, other: "VertexSet") -> "VertexSet":
        self._check(other)
        return VertexSet(self.n, self.bits | other.bits)

    def __and__(self, other: "VertexSet") -> "VertexSet":
        self._check(other)
        return VertexSet(self.n, self.bits & other.bits)

    def __xor__(self, other: "VertexSet") -> "VertexSet":
        """Symmetric difference."""
        self._check(other)
        return VertexSet(self.n, self.bits ^ other.bits)

    def __sub__(self, other: "VertexSet") -> "VertexSet":
        self._check(other)
        return VertexSet(self.n, self.bits & ~other.bits)

    def complement(self) -> "VertexSet":
        return VertexSet(self.n, ((1 << self.n) - 1) & ~self.bits)

    def __len__(self) -> int:
        return self.bits.bit_count()

    def __iter__(self) -> Iterator[int]:
        return bits_of(self.bits)

    def __contains__(self, v: int) -> bool:
        return 0 <= v < self.n and bool(self.bits >> v & 1)

    def __le__(self, other: "VertexSet") -> bool:
        self._check(other)
        return self.bits & ~other.bits == 0

    @property
    def words(self) -> int:
        """Number of 64-bit machine words needed for this width."""
        return max(1, -(-self.n // WORD_BITS))

    def __repr__(self) -> str:
        return f"VertexSet({sorted(self)})"


class Graph:
    """Immutable undirected simple graph on vertices ``0..n-1``."""

    __slots__ = ("n", "adjacency", "edge_count", "__dict__")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise InvalidGraph("negative vertex count")
        nbrs: list[set[int]] = [set() for _ in range(n)]
        count = 0
        for u, v in edges:
            if u == v:
                raise InvalidGraph(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise InvalidGraph(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
            if v in nbrs[u]:
                raise InvalidGraph(f"duplicate edge ({u}, {v})")
            nbrs[u].add(v)
            nbrs[v].add(u)
            count += 1
        self.n = n
        self.adjacency: tuple[tuple[int, ...], ...] = tuple(tuple(sorted(s)) for s in nbrs)
        self.edge_count = count

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"

    def __eq__(self, other) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.adjacency == other.adjacency

    def __hash__(self) -> int:
        return hash((self.n, self.adjacency))

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in self.adjacency[u] if u < v]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        return tuple(len(a) for a in self.adjacency)

    @cached_property
    def max_degree(self) -> int:
        return max(self.degrees, default=0)

    @cached_property
    def closed_masks(self) -> tuple[int, ...]:
        """Closed neighborhoods N[v] as bit masks."""
        return tuple((1 << v) | mask_of(a) for v, a in enumerate(self.adjacency))

    @cached_property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def is_connected(self) -> bool:
        if self.n == 0:
            return True
        return len(self.bfs(0)) == self.n

    def is_tree(self) -> bool:
        return self.n >= 1 and self.edge_count == self.n - 1 and self.is_connected()

    def is_path(self) -> bool:
        return self.is_tree() and self.max_degree <= 2

    def bfs(self, source: int) -> dict[int, int]:
        """Distances from ``source`` to every reachable vertex."""
        dist = {source: 0}
        queue = deque([source])
        while queue:
            u = queue.popleft()
            for w in self.adjacency[u]:
                if w not in dist:
                    dist[w] = dist[u] + 1
                    queue.append(w)
        return dist

    def components(self) -> list[list[int]]:
        seen: set[int] = set()
        comps = []
        for v in range(self.n):
            if v not in seen:
                comp = sorted(self.bfs(v))
                seen.update(comp)
                comps.append(comp)
        return comps

    def induced(self, vertices: Sequence[int]) -> tuple["Graph", list[int]]:
        """Induced subgraph on ``vertices`` relabelled 0..k-1 in the given order.

        Returns the subgraph and the list mapping new ids back to old ids.
        """
        index = {v: i for i, v in enumerate(vertices)}
        edges = [
            (index[u], index[w])
            for u in vertices
            for w in self.adjacency[u]
            if w in index and u < w
        ]
        return Graph(len(vertices), edges), list(vertices)

    def remove(self, vertices: Iterable[int]) -> tuple["Graph", list[int]]:
        gone = set(vertices)
        return self.induced([v for v in range(self.n) if v not in gone])

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Graph with vertex ``v`` renamed to ``perm[v]``."""
        return Graph(self.n, [(perm[u], perm[v]) for u, v in self.edges()])

    def leaves(self) -> list[int]:
        return [v for v in range(self.n) if self.degrees[v] == 1]

    def supports(self) -> list[int]:
        sup = {self.adjacency[l][0] for l in self.leaves()}
        return sorted(sup)

    def pairs_within_two(self) -> list[tuple[int, int]]:
        """All pairs u < v with distance 1 or 2."""
        out = set()
        for v in range(self.n):
            ball = set(self.adjacency[v])
            for w in self.adjacency[v]:
                ball.update(self.adjacency[w])
            ball.discard(v)
            out.update((v, w) for w in ball if v < w)
        return sorted(out)


def closed_neighborhood(g: Graph, v: int) -> VertexSet:
    if not 0 <= v < g.n:
        raise IndexError(f"vertex {v} not in graph of order {g.n}")
    return VertexSet(g.n, g.closed_masks[v])


@dataclass(frozen=True)
class GraphStats:
    n: int
    max_degree: int
    leaves: VertexSet
    supports: VertexSet
    diameter: int
    identifiable: bool

    @property
    def leaf_count(self) -> int:
        return len(self.leaves)

    @property
    def support_count(self) -> int:
        return len(self.supports)


def has_closed_twins(g: Graph, exhaustive: bool = False) -> bool:
    """True if some u != v has N[u] == N[v].

    Closed twins are adjacent, so only pairs within distance two need checking;
    ``exhaustive=True`` compares every pair instead (test oracle).
    """
    cm = g.closed_masks
    if exhaustive:
        return len(set(cm)) < g.n
    return any(cm[u] == cm[v] for u, v in g.pairs_within_two())


def is_identifiable(g: Graph, exhaustive: bool = False) -> bool:
    return not has_closed_twins(g, exhaustive)


def diameter(g: Graph) -> int:
    if not g.is_connected():
        raise Disconnected("diameter of a disconnected graph")
    if g.n == 0:
        return 0
    if g.is_tree():
        far = max(g.bfs(0).items(), key=lambda kv: (kv[1], -kv[0]))[0]
        return max(g.bfs(far).values())
    return max(max(g.bfs(v).values()) for v in range(g.n))


def stats(g: Graph) -> GraphStats:
    if not g.is_connected():
        raise Disconnected("stats requires a connected graph")
    leaves = g.leaves()
    return GraphStats(
        n=g.n,
        max_degree=g.max_degree,
        leaves=VertexSet.of(g.n, leaves),
        supports=VertexSet.of(g.n, g.supports()),
        diameter=diameter(g),
        identifiable=is_identifiable(g),
    )


def open_twin_leaf_classes(g: Graph) -> list[list[int]]:
    """Leaves grouped by their support vertex, ordered by support id.

    A class of size k forces at least k-1 of its members into any identifying
    code.
    """
    by_support: dict[int, list[int]] = {}
    for l in g.leaves():
        by_support.setdefault(g.adjacency[l][0], []).append(l)
    return [by_support[s] for s in sorted(by_support)]


# -- text formats -----------------------------------------------------------


def from_edge_list(text: str) -> Graph:
    """Parse ``u v`` lines; an optional first line ``n m`` declares the order.

    The first line is read as a header when ``m`` equals the number of edge
    lines that follow. Blank lines and ``#`` comments are ignored.
    """
    rows: list[tuple[int, int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        if len(tokens) != 2:
            raise ParseError(f"line {lineno}: expected two integers, got {raw!r}")
        try:
            a, b = int(tokens[0]), int(tokens[1])
        except ValueError:
            raise ParseError(f"line {lineno}: non-integer token in {raw!r}") from None
        if a < 0 or b < 0:
            raise ParseError(f"line {lineno}: negative vertex id")
        rows.append((lineno, a, b))
    if not rows:
        raise ParseError("empty edge list")
    # a first row "n m" is a header exactly when m counts the remaining rows
    if rows[0][2] == len(rows) - 1 and rows[0][1] > 0:
        return Graph(rows[0][1], [(a, b) for _, a, b in rows[1:]])
    n = 1 + max(max(a, b) for _, a, b in rows)
    return Graph(n, [(a, b) for _, a, b in rows])


def to_edge_list(g: Graph, header: bool = True) -> str:
    lines = [f"{g.n} {g.edge_count}"] if header else []
    lines += [f"{u} {v}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"


def _g6_encode_n(n: int) -> bytes:
    if n < 63:
        return bytes([n + 63])
    if n < 258048:
        return bytes([126, 63 + (n >> 12 & 63), 63 + (n >> 6 & 63), 63 + (n & 63)])
    raise ValueError("graph6 supports at most 258047 vertices here")


def to_graph6(g: Graph) -> str:
    """Encode the adjacency upper triangle, column by column, six bits per byte."""
    out = bytearray(_g6_encode_n(g.n))
    cm = g.closed_masks
    acc = nbits = 0
    for j in range(1, g.n):
        for i in range(j):
            acc = acc << 1 | (cm[j] >> i & 1)
            nbits += 1
            if nbits == 6:
                out.append(63 + acc)
                acc = nbits = 0
    if nbits:
        out.append(63 + (acc << (6 - nbits)))
    return out.decode("ascii")


def from_graph6(line: str) -> Graph:
    data = line.strip()
    if data.startswith(">>graph6<<"):
        data = data[len(">>graph6<<"):]
    raw = data.encode("ascii")
    if not raw or any(c < 63 or c > 126 for c in raw):
        raise ParseError(f"invalid graph6 string {line!r}")
    if raw[0] == 126:
        if len(raw) < 4 or raw[1] == 126:
            raise ParseError("unsupported graph6 order encoding")
        n = (raw[1] - 63) << 12 | (raw[2] - 63) << 6 | (raw[3] - 63)
        body = raw[4:]
    else:
        n = raw[0] - 63
        body = raw[1:]
    need = -(-(n * (n - 1) // 2) // 6)
    if len(body) != need:
        raise ParseError(f"graph6 body has {len(body)} bytes, expected {need}")
    bits = []
    for c in body:
        v = c - 63
        bits.extend((v >> k) & 1 for k in range(5, -1, -1))
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if bits[k]:
                edges.append((i, j))
            k += 1
    if any(bits[k:]):
        raise ParseError("graph6 padding bits must be zero")
    return Graph(n, edges)


def to_dot(g: Graph, code: Iterable[int] = (), name: str = "G") -> str:
    """Graphviz DOT; code vertices are drawn filled black."""
    marked = set(code)
    lines = [f"graph {name} {{", "  node [shape=circle, label=\"\"];"]
    for v in range(g.n):
        style = "style=filled, fillcolor=black" if v in marked else "style=solid"
        lines.append(f"  {v} [xlabel=\"{v}\", {style}];")
    lines += [f"  {u} -- {v};" for u, v in g.edges()]
    lines.append("}")
    return "\n".join(lines) + "\n"


def read_graph(text: str, fmt: str = "edgelist") -> Graph:
    if fmt == "graph6":
        lines = [l for l in text.splitlines() if l.strip() and not l.startswith("#")]
        if len(lines) != 1:
            raise ParseError(f"expected one graph6 line, found {len(lines)}")
        return from_graph6(lines[0])
    if fmt == "edgelist":
        return from_edge_list(text)
    raise ValueError(f"unknown format {fmt!r}")
