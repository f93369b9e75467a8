"""Exact identification and domination numbers, plus closed forms for paths."""

from __future__ import annotations

from dataclasses import dataclass

from . import kernel
from .codes import (
    CodeCertificate,
    certify,
    identifying_constraints,
    lower_bound,
    packing_bound,
    search_seed,
)
from .errors import BudgetExceeded, DomainError, NotATree, NotIdentifiable
from .graph import Graph, VertexSet, has_closed_twins

DEFAULT_NODE_BUDGET = 10**8


@dataclass(frozen=True)
class DominationCertificate:
    code: VertexSet
    dominating: bool

    @property
    def valid(self) -> bool:
        return self.dominating

    @property
    def size(self) -> int:
        return len(self.code)


@dataclass(frozen=True)
class SolveResult:
    optimum: int
    witness: CodeCertificate | DominationCertificate
    nodes_explored: int = 0
    time_budget_exceeded: bool = False


def _greedy_hitting_set(constraints: list[int], chosen: int, n: int) -> int:
    """Repeatedly add the vertex meeting the most unmet constraints (lowest id on ties)."""
    unmet = [c for c in constraints if not c & chosen]
    while unmet:
        best_v, best_hits = -1, 0
        for v in range(n):
            bit = 1 << v
            if chosen & bit:
                continue
            hits = sum(1 for c in unmet if c & bit)
            if hits > best_hits:
                best_v, best_hits = v, hits
        chosen |= 1 << best_v
        unmet = [c for c in unmet if not c >> best_v & 1]
    return chosen


class _Search:
    """Shared node accounting for a sequence of kernel calls on one instance."""

    def __init__(self, constraints: list[int], node_budget: int, backend: str | None):
        self.constraints = kernel.prepare(constraints)
        self.left = node_budget
        self.nodes = 0
        self.exhausted = False
        self.backend = backend

    def find(self, chosen: int, allowed: int, size: int) -> int:
        mask, nodes, hit = kernel.hit_search(
            self.constraints, chosen, allowed, size, self.left, self.backend
        )
        self.nodes += nodes
        self.left -= nodes
        if hit:
            self.exhausted = True
        return mask


def _minimum(
    constraints: list[int],
    n: int,
    seed: int,
    lb: int,
    node_budget: int,
    canonical: bool,
    backend: str | None,
) -> tuple[int, int, int, bool]:
    """Iterative deepening from ``lb``; returns (optimum, witness, nodes, exhausted)."""
    full = (1 << n) - 1
    search = _Search(constraints, node_budget, backend)
    upper = _greedy_hitting_set(search.constraints, seed, n)
    best = upper
    opt = upper.bit_count()
    for k in range(max(lb, seed.bit_count()), upper.bit_count()):
        found = search.find(seed, full & ~seed, k)
        if search.exhausted:
            return upper.bit_count(), upper, search.nodes, True
        if found >= 0:
            best, opt = found, k
            break
    if canonical:
        # smallest witness as an integer: clear high bits first
        excluded = 0
        for v in range(n - 1, -1, -1):
            bit = 1 << v
            if seed & bit:
                continue
            if not best & bit:
                excluded |= bit
                continue
            found = search.find(seed, full & ~seed & ~excluded & ~bit, opt)
            if search.exhausted:
                return opt, best, search.nodes, True
            if found >= 0:
                best = found
                excluded |= bit
    return opt, best, search.nodes, False


def min_identifying_code(
    g: Graph,
    node_budget: int = DEFAULT_NODE_BUDGET,
    canonical: bool = True,
    backend: str | None = None,
) -> SolveResult:
    """Exact identification number with a witness code.

    The search is seeded with the forced vertices and all but one leaf of each
    twin-leaf class, then deepens the size bound from ``lower_bound(g)``. With
    ``canonical=True`` the witness is the numerically smallest optimal code.
    If the node budget runs out, the result carries the best code found so
    far and ``time_budget_exceeded`` is set.
    """
    if g.n == 0:
        raise DomainError("empty graph")
    if has_closed_twins(g):
        raise NotIdentifiable("graph has closed twins")
    opt, code, nodes, exhausted = _minimum(
        identifying_constraints(g),
        g.n,
        search_seed(g),
        lower_bound(g),
        node_budget,
        canonical,
        backend,
    )
    return SolveResult(opt, certify(g, code), nodes, exhausted)


def bounded_code_search(
    g: Graph,
    budget_size: int,
    node_budget: int = DEFAULT_NODE_BUDGET,
    backend: str | None = None,
) -> CodeCertificate | None:
    """A valid identifying code of size <= ``budget_size``, or None if none exists.

    Raises BudgetExceeded when the node budget runs out before a verdict.
    """
    if has_closed_twins(g):
        raise NotIdentifiable("graph has closed twins")
    seed = search_seed(g)
    search = _Search(identifying_constraints(g), node_budget, backend)
    found = search.find(seed, g.full_mask & ~seed, budget_size)
    if search.exhausted:
        raise BudgetExceeded(f"no verdict within {node_budget} nodes at size {budget_size}")
    if found < 0:
        return None
    return certify(g, found)


def min_dominating_set_exact(
    g: Graph,
    node_budget: int = DEFAULT_NODE_BUDGET,
    backend: str | None = None,
) -> SolveResult:
    """Domination number by branch and bound over the closed neighborhoods."""
    if g.n > 20:
        raise DomainError("exact domination is limited to n <= 20")
    if g.n == 0:
        raise DomainError("empty graph")
    cons = list(g.closed_masks)
    lb = packing_bound(kernel.prepare(cons), 0, g.full_mask)
    opt, code, nodes, exhausted = _minimum(cons, g.n, 0, lb, node_budget, True, backend)
    if exhausted:
        raise BudgetExceeded(
            "exact domination ran out of nodes",
            SolveResult(opt, DominationCertificate(VertexSet(g.n, code), True), nodes, True),
        )
    return SolveResult(opt, DominationCertificate(VertexSet(g.n, code), True), nodes, False)


def min_dominating_set_tree(t: Graph) -> SolveResult:
    """Linear dynamic program over a rooted tree.

    States per vertex: in the set, dominated by a child, or left for the
    parent to dominate.
    """
    if not t.is_tree():
        raise NotATree("tree domination DP needs a tree")
    INF = t.n + 1
    parent = [-1] * t.n
    order = [0]
    for v in order:
        for w in t.adjacency[v]:
            if w != parent[v]:
                parent[w] = v
                order.append(w)
    children = [[w for w in t.adjacency[v] if w != parent[v]] for v in range(t.n)]
    IN, DOM, FREE = 0, 1, 2
    cost = [[0, 0, 0] for _ in range(t.n)]
    for v in reversed(order):
        ch = children[v]
        take = 1 + sum(min(cost[c]) for c in ch)
        if ch:
            base = sum(min(cost[c][IN], cost[c][DOM]) for c in ch)
            extra = min(max(0, cost[c][IN] - cost[c][DOM]) for c in ch)
            dom = min(INF, base + extra)
            free = min(INF, sum(cost[c][DOM] for c in ch))
        else:
            dom, free = INF, 0
        cost[v] = [take, dom, free]

    state = [0] * t.n
    state[0] = IN if cost[0][IN] <= cost[0][DOM] else DOM
    for v in order:
        ch = children[v]
        if state[v] == IN:
            for c in ch:
                state[c] = min((IN, DOM, FREE), key=lambda s: (cost[c][s], s))
        elif state[v] == FREE:
            for c in ch:
                state[c] = DOM
        else:
            for c in ch:
                state[c] = IN if cost[c][IN] <= cost[c][DOM] else DOM
            if not any(state[c] == IN for c in ch):
                pick = min(ch, key=lambda c: (cost[c][IN] - cost[c][DOM], c))
                state[pick] = IN
    code = VertexSet.of(t.n, (v for v in range(t.n) if state[v] == IN))
    optimum = min(cost[0][IN], cost[0][DOM])
    assert len(code) == optimum
    dominating = all(m & code.bits for m in t.closed_masks)
    return SolveResult(optimum, DominationCertificate(code, dominating), t.n, False)


def gamma_path(n: int) -> int:
    """Domination number of the path on n vertices: ceil(n/3)."""
    if n < 1:
        raise DomainError("gamma_path needs n >= 1")
    return -(-n // 3)


def gammaID_path(n: int) -> int:
    """Identification number of the path on n >= 3 vertices: floor(n/2) + 1."""
    if n == 1:
        return 1
    if n < 3:
        raise DomainError("P2 has closed twins; paths need n = 1 or n >= 3")
    return n // 2 + 1


def path_code(n: int) -> list[int]:
    """An optimal identifying code of the path 0-1-...-(n-1).

    Odd n: every even position. Even n >= 4: every even position up to n-2,
    plus position n-3.
    """
    if n == 1:
        return [0]
    if n < 3:
        raise DomainError("P2 has closed twins")
    if n % 2:
        return list(range(0, n, 2))
    return sorted(set(range(0, n - 1, 2)) | {n - 3})


__all__ = [
    "SolveResult",
    "DominationCertificate",
    "min_identifying_code",
    "bounded_code_search",
    "min_dominating_set_exact",
    "min_dominating_set_tree",
    "gamma_path",
    "gammaID_path",
    "path_code",
]
