"""Appended stars, named tree families with reference codes, and bound-achieving code builders."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Sequence

from .canon import canonical_form, centers, isomorphism
from .codes import CodeCertificate, certify
from .errors import (
    DegreeDomain,
    DomainError,
    ExcludedInstance,
    InternalBoundViolation,
    InvalidInputCertificate,
    NotATree,
    ParameterDomain,
)
from .graph import Graph, VertexSet
from .solvers import bounded_code_search, min_dominating_set_tree, min_identifying_code, path_code


# ---------------------------------------------------------------- appending


@dataclass(frozen=True)
class AppendRecord:
    """Result of G' |> S: ids below ``base_order`` are inherited from G'."""

    graph: Graph
    base_order: int
    base_vertex: int
    star_degree: int
    universal_vertex: int
    new_leaves: VertexSet


def append_star(g: Graph, v: int, star_degree: int) -> tuple[Graph, AppendRecord]:
    """Identify a leaf of a ``star_degree``-star with ``v``.

    The universal vertex gets id ``g.n`` and the new leaves follow it.
    """
    if star_degree < 3:
        raise DegreeDomain("appended stars need degree >= 3")
    if not 0 <= v < g.n:
        raise ParameterDomain(f"vertex {v} not in graph of order {g.n}")
    u = g.n
    leaves = range(u + 1, u + star_degree)
    h = Graph(g.n + star_degree, g.edges() + [(v, u)] + [(u, x) for x in leaves])
    rec = AppendRecord(h, g.n, v, star_degree, u, VertexSet.of(h.n, leaves))
    return h, rec


def extend_code_through_star(cert: CodeCertificate, rec: AppendRecord) -> CodeCertificate:
    """Code of G' plus the appended star's leaves: valid on G, larger by star_degree - 1."""
    if not cert.valid:
        raise InvalidInputCertificate("base certificate is not a valid identifying code")
    if cert.code.n != rec.base_order:
        raise InvalidInputCertificate("certificate does not belong to the base graph")
    out = certify(rec.graph, set(cert.code) | set(rec.new_leaves))
    assert out.valid and out.size == cert.size + rec.star_degree - 1
    return out


# ---------------------------------------------------------------- families


def _named(edges: Sequence[tuple[str, str]], code: Sequence[str]) -> tuple[Graph, VertexSet]:
    """Number named vertices breadth-first from the first one, neighbors in listed order."""
    adj: dict[str, list[str]] = {}
    for a, b in edges:
        adj.setdefault(a, []).append(b)
        adj.setdefault(b, []).append(a)
    root = edges[0][0] if edges else code[0]
    ids = {root: 0}
    queue = [root]
    for name in queue:
        for w in adj.get(name, []):
            if w not in ids:
                ids[w] = len(ids)
                queue.append(w)
    g = Graph(len(ids), [(ids[a], ids[b]) for a, b in edges])
    return g, VertexSet.of(g.n, (ids[c] for c in code))


def _pendant(center: str, leaves: Sequence[str]) -> list[tuple[str, str]]:
    return [(center, x) for x in leaves]


# vertex names follow the drawings; primed names are the mirrored branch
_T4_EDGES = [("0", "1"), ("0", "4"), ("0", "7")] + _pendant("1", "23") + _pendant("4", "56") + _pendant("7", "89")
_T5_EDGES = (
    [("0", "1"), ("0", "1'")]
    + _pendant("1", "23")
    + _pendant("1'", ["2'", "3'"])
    + [("2", "13")]
    + _pendant("13", ["14", "15"])
)
_T9_EDGES = _T4_EDGES + [("2", "10"), ("2", "13")] + _pendant("10", ["11", "12"]) + _pendant("13", ["14", "15"])

_T3_FAMILY: list[tuple[list[tuple[str, str]], list[str]]] = [
    (_pendant("1", "023"), ["0", "2", "3"]),
    (
        [("0", "1"), ("0", "1'")] + _pendant("1", "23") + _pendant("1'", ["2'", "3'"]),
        ["0", "2", "3", "2'", "3'"],
    ),
    # z = 4 carries the appended star; 4-5-6-7 continues the path
    ([("4", "1"), ("4", "5")] + _pendant("1", "23") + [("5", "6"), ("6", "7")], ["2", "3", "4", "5", "6"]),
    (
        [("4", "1"), ("4", "8"), ("4", "5")] + _pendant("1", "23") + _pendant("8", ["9", "10"]) + [("5", "6"), ("6", "7")],
        ["2", "3", "9", "10", "5", "6", "7"],
    ),
    (_T4_EDGES, ["0", "2", "3", "5", "6", "8", "9"]),
    (_T5_EDGES, ["0", "2", "3", "14", "15", "2'", "3'"]),
    (
        _T5_EDGES + [("3", "19")] + _pendant("19", ["20", "21"]),
        ["0", "2", "3", "14", "15", "20", "21", "2'", "3'"],
    ),
    (
        _T4_EDGES + [("2", "10")] + _pendant("10", ["11", "12"]),
        ["0", "2", "3", "5", "6", "8", "9", "11", "12"],
    ),
    (
        _T4_EDGES + [("2", "13"), ("3", "19")] + _pendant("13", ["14", "15"]) + _pendant("19", ["20", "21"]),
        ["0", "2", "3", "14", "15", "20", "21", "5", "6", "8", "9"],
    ),
    (_T9_EDGES, ["0", "2", "3", "5", "6", "8", "9", "11", "12", "14", "15"]),
    (
        _T9_EDGES + [("3", "16")] + _pendant("16", ["17", "18"]),
        ["0", "2", "3", "5", "6", "8", "9", "11", "12", "14", "15", "17", "18"],
    ),
    (
        _T9_EDGES + [("3", "16"), ("3", "19")] + _pendant("16", ["17", "18"]) + _pendant("19", ["20", "21"]),
        ["0", "2", "3", "5", "6", "8", "9", "11", "12", "14", "15", "17", "18", "20", "21"],
    ),
]

FAMILY_KINDS = (
    "exceptional_T3",
    "star",
    "double_star",
    "two_corona",
    "graph_Z",
    "big_construction",
    "complete_ary",
    "appended_star",
)


@dataclass(frozen=True)
class FamilySpec:
    """A named family member.

    ``params`` by kind: exceptional_T3 (index,), star (Δ,), double_star (Δ,),
    two_corona (k,), graph_Z (), big_construction (t, Δ),
    complete_ary (Δ, height), appended_star (Δ0, v1, Δ1, v2, Δ2, ...).
    """

    kind: str
    params: tuple[int, ...] = field(default_factory=tuple)

    @classmethod
    def parse(cls, kind: str, args: Sequence[str]) -> "FamilySpec":
        """Build from CLI words; ``appended_star`` steps may be written ``v:Δ``."""
        if kind not in FAMILY_KINDS:
            raise ParameterDomain(f"unknown family {kind!r}; choose from {', '.join(FAMILY_KINDS)}")
        params: list[int] = []
        try:
            for a in args:
                params.extend(int(x) for x in a.split(":"))
        except ValueError:
            raise ParameterDomain(f"family parameters must be integers, got {list(args)}") from None
        return cls(kind, tuple(params))


def _arity(spec: FamilySpec, k: int) -> None:
    if len(spec.params) != k:
        raise ParameterDomain(f"{spec.kind} takes {k} parameter(s), got {len(spec.params)}")


def generate(spec: FamilySpec) -> tuple[Graph, VertexSet]:
    """Labelled member of a family plus a valid reference identifying code."""
    p = spec.params
    kind = spec.kind
    if kind == "exceptional_T3":
        _arity(spec, 1)
        if not 0 <= p[0] < len(_T3_FAMILY):
            raise ParameterDomain("exceptional_T3 index must be 0..11")
        g, code = _named(*_T3_FAMILY[p[0]])
    elif kind == "star":
        _arity(spec, 1)
        g, code = _star(p[0])
    elif kind == "double_star":
        _arity(spec, 1)
        g, code = _double_star(p[0])
    elif kind == "two_corona":
        _arity(spec, 1)
        g, code = _two_corona(p[0])
    elif kind == "graph_Z":
        _arity(spec, 0)
        g, code = _graph_z()
    elif kind == "big_construction":
        _arity(spec, 2)
        g, code = _big_construction(*p)
    elif kind == "complete_ary":
        _arity(spec, 2)
        g, code = _complete_ary(*p)
    elif kind == "appended_star":
        if len(p) % 2 != 1:
            raise ParameterDomain("appended_star takes Δ0 followed by (vertex, degree) pairs")
        g, code = _appended_star(p[0], list(zip(p[1::2], p[2::2])))
    else:
        raise ParameterDomain(f"unknown family {kind!r}")
    if not certify(g, code).valid:
        raise InternalBoundViolation(f"reference code for {spec} does not certify")
    return g, code


def _star(delta: int) -> tuple[Graph, VertexSet]:
    # center 0, leaves 1..Δ
    if delta < 3:
        raise ParameterDomain("star needs Δ >= 3")
    g = Graph(delta + 1, [(0, i) for i in range(1, delta + 1)])
    return g, VertexSet.of(g.n, range(1, delta + 1))


def _double_star(delta: int) -> tuple[Graph, VertexSet]:
    # centers 0 and 1; 0 has leaves 2..Δ, 1 has leaves Δ+1..2Δ-1
    if delta < 3:
        raise ParameterDomain("double_star needs Δ >= 3")
    left = list(range(2, delta + 1))
    right = list(range(delta + 1, 2 * delta))
    g = Graph(2 * delta, [(0, 1)] + [(0, x) for x in left] + [(1, x) for x in right])
    return g, VertexSet.of(g.n, [0, 1] + left[:-1] + right[:-1])


def _two_corona(k: int) -> tuple[Graph, VertexSet]:
    # path 0..k-1, pendant path i - (k+i) - (2k+i)
    if k < 1:
        raise ParameterDomain("two_corona needs k >= 1")
    edges = [(i, i + 1) for i in range(k - 1)]
    edges += [(i, k + i) for i in range(k)] + [(k + i, 2 * k + i) for i in range(k)]
    g = Graph(3 * k, edges)
    if k == 1:
        return g, VertexSet.of(3, [0, 2])
    return g, VertexSet.of(g.n, range(2 * k))


def _graph_z() -> tuple[Graph, VertexSet]:
    edges = (
        _pendant("u0", ["a0", "b0", "c0"])
        + _pendant("u1", ["c0", "a1", "b1"])
        + _pendant("u2", ["a0", "a2", "b2"])
        + _pendant("u3", ["a1", "a3", "b3"])
    )
    return _named(edges, ["u0", "u1", "u2", "u3", "a0", "a1", "a2", "a3"])


def _big_construction(t: int, delta: int) -> tuple[Graph, VertexSet]:
    # path p1..pt; each p_j carries Δ-2 pendant Δ-stars, the first through a subdivision vertex
    if t < 3 or delta < 4:
        raise ParameterDomain("big_construction needs t >= 3 and Δ >= 4")
    edges: list[tuple[str, str]] = [(f"p{j}", f"p{j + 1}") for j in range(1, t)]
    code = [f"p{j}" for j in range(1, t + 1)]
    for j in range(1, t + 1):
        for i in range(1, delta - 1):
            u = f"u{j}.{i}"
            if i == 1:
                edges += [(f"p{j}", f"v{j}"), (f"v{j}", u)]
            else:
                edges.append((f"p{j}", u))
            leaves = [f"l{j}.{i}.{k}" for k in range(1, delta)]
            edges += _pendant(u, leaves)
            code += leaves
    return _named(edges, code)


def _complete_ary(delta: int, height: int) -> tuple[Graph, VertexSet]:
    """Complete (Δ-1)-ary tree in breadth-first numbering.

    Reference code: for height 1 the leaves; otherwise every vertex except
    one leaf per deepest support.
    """
    if delta < 3 or height < 1:
        raise ParameterDomain("complete_ary needs Δ >= 3 and height >= 1")
    q = delta - 1
    edges = []
    level = [0]
    n = 1
    for _ in range(height):
        nxt = []
        for v in level:
            for _ in range(q):
                edges.append((v, n))
                nxt.append(n)
                n += 1
        level = nxt
    g = Graph(n, edges)
    if height == 1:
        return g, VertexSet.of(n, range(1, n))
    dropped = set(level[q - 1 :: q])
    return g, VertexSet.of(n, (v for v in range(n) if v not in dropped))


def _appended_star(delta0: int, steps: list[tuple[int, int]]) -> tuple[Graph, VertexSet]:
    """Star S0 followed by star appendings; code = leaves of S0 plus each star's new leaves."""
    g, code = _star(delta0)
    cert = certify(g, code)
    for v, d in steps:
        if d < 3:
            raise ParameterDomain("appended stars need degree >= 3")
        if not 0 <= v < g.n:
            raise ParameterDomain(f"vertex {v} not in graph of order {g.n}")
        g, rec = append_star(g, v, d)
        cert = extend_code_through_star(cert, rec)
    return g, cert.code


# ---------------------------------------------------------------- exceptional trees


@lru_cache(maxsize=1)
def _t3_table() -> dict:
    return {canonical_form(generate(FamilySpec("exceptional_T3", (i,)))[0]): i for i in range(12)}


def classify_exceptional(t: Graph) -> str | None:
    """``"T<i>"`` for members of the Δ=3 collection, ``"Star(Δ)"`` for K_{1,Δ} with Δ >= 4."""
    if not t.is_tree():
        raise NotATree("classification is defined for trees")
    delta = t.max_degree
    if delta <= 2:
        raise DegreeDomain("exceptional trees have Δ >= 3")
    if delta == 3:
        i = _t3_table().get(canonical_form(t))
        return None if i is None else f"T{i}"
    if t.n == delta + 1:
        return f"Star({delta})"
    return None


def exceptional_reference(label: str) -> tuple[Graph, VertexSet]:
    if label.startswith("Star("):
        return generate(FamilySpec("star", (int(label[5:-1]),)))
    return generate(FamilySpec("exceptional_T3", (int(label[1:]),)))


def _mapped_reference(t: Graph, label: str) -> VertexSet:
    ref, code = exceptional_reference(label)
    phi = isomorphism(ref, t)
    assert phi is not None
    return VertexSet.of(t.n, (phi[v] for v in code))


# ---------------------------------------------------------------- builders


def _path_order(t: Graph) -> list[int]:
    start = next(v for v in range(t.n) if t.degree(v) <= 1)
    order, prev = [start], -1
    while len(order) < t.n:
        nxt = next(w for w in t.adjacency[order[-1]] if w != prev)
        prev = order[-1]
        order.append(nxt)
    return order


def _path_certificate(t: Graph) -> CodeCertificate:
    order = _path_order(t)
    return certify(t, [order[i] for i in path_code(t.n)])


def _is_p4(t: Graph) -> bool:
    return t.n == 4 and t.is_path()


def _search_within(t: Graph, budget: int, why: str) -> CodeCertificate:
    cert = bounded_code_search(t, budget)
    if cert is None:
        raise InternalBoundViolation(f"no code of size <= {budget} ({why}); edges {t.edges()}")
    return cert


def _lift(t: Graph, sub_cert: CodeCertificate, old: list[int], extra: Sequence[int]) -> CodeCertificate:
    return certify(t, [old[v] for v in sub_cert.code] + list(extra))


def main_bound_ceiling(n: int, delta: int) -> int:
    return (delta - 1) * n // delta


def construct_main_bound_code(t: Graph) -> CodeCertificate:
    """Identifying code within ((Δ-1)/Δ)·n, or exactly one over for exceptional trees.

    Follows the induction: exceptional trees get their reference code, paths
    the path code; otherwise a pendant star (a support of degree d with d-1
    leaves) is stripped, the rest solved recursively and the star's leaves
    added back. If no strip applies, or it yields more than the leaf and
    support counts allow, a bounded search at that guaranteed budget is used.
    """
    if not t.is_tree():
        raise NotATree("main-bound builder needs a tree")
    if t.n >= 3 and t.is_path():
        return _path_certificate(t)
    delta = t.max_degree
    if delta < 3:
        raise DegreeDomain("the main bound needs Δ >= 3 (or a path of order >= 3)")
    label = classify_exceptional(t)
    if label is not None:
        return certify(t, _mapped_reference(t, label))
    ceiling = main_bound_ceiling(t.n, delta)
    cert = _strip_pendant_star(t, ceiling)
    budget = _main_fallback_budget(t)
    if cert is None or cert.size > budget:
        # the strip can overshoot when the remainder is small (a path plus one star)
        cert = _search_within(t, budget, "main bound")
    if not cert.valid or cert.size > ceiling:
        raise InternalBoundViolation(f"main-bound code of size {cert.size} exceeds {ceiling}")
    return cert


def _main_fallback_budget(t: Graph) -> int:
    n, leaves, supports = t.n, len(t.leaves()), len(t.supports())
    budgets = [main_bound_ceiling(n, t.max_degree), (n + leaves) // 2]
    if n >= 4 and not _is_p4(t):
        budgets.append(n - supports)
    return min(budgets)


def _pendant_star(t: Graph) -> tuple[int, list[int], int] | None:
    """Deepest support v (from a fixed center) whose neighbors are all leaves but one.

    Returns (v, leaves of v, the remaining neighbor).
    """
    depth = t.bfs(centers(t)[0])
    best = None
    for v in range(t.n):
        d = t.degree(v)
        if d < 3:
            continue
        leaves = [w for w in t.adjacency[v] if t.degree(w) == 1]
        if len(leaves) != d - 1:
            continue
        key = (-depth[v], v)
        if best is None or key < best[0]:
            other = next(w for w in t.adjacency[v] if t.degree(w) != 1)
            best = (key, (v, leaves, other))
    return None if best is None else best[1]


def _strip_pendant_star(t: Graph, ceiling: int) -> CodeCertificate | None:
    found = _pendant_star(t)
    if found is None:
        return None
    v, leaves, x = found
    rest, old = t.remove([v, *leaves])
    if rest.n < 3:
        return None
    sub = construct_main_bound_code(rest)
    # rebuild through the append operation, then carry labels back to t
    new_of_old = {o: i for i, o in enumerate(old)}
    grown, rec = append_star(rest, new_of_old[x], len(leaves) + 1)
    ext = extend_code_through_star(sub, rec)
    to_t = list(old) + [v] + leaves
    cert = certify(t, [to_t[w] for w in ext.code])
    return cert if cert.valid and cert.size <= ceiling else None


def construct_domination_bound_code(t: Graph) -> CodeCertificate:
    """Identifying code of size at most n - γ(t), for trees other than P4.

    Mirrors the inductive case analysis around the deepest support vertex.
    Small trees (n <= 8) are solved exactly.
    """
    if not t.is_tree():
        raise NotATree("domination-bound builder needs a tree")
    if t.n < 3:
        raise DomainError("domination-bound builder needs n >= 3")
    if _is_p4(t):
        raise ExcludedInstance("P4 violates the bound: γ^ID = 3 > 4 - 2")
    gamma = min_dominating_set_tree(t).optimum
    cert = _dom_code(t, gamma)
    if not cert.valid or cert.size > t.n - gamma:
        raise InternalBoundViolation(f"domination-bound code of size {cert.size} exceeds {t.n - gamma}")
    return cert


def _dom_recurse(sub: Graph) -> CodeCertificate:
    return _dom_code(sub, min_dominating_set_tree(sub).optimum)


def _dom_code(t: Graph, gamma: int) -> CodeCertificate:
    n = t.n
    if t.is_path():
        return _path_certificate(t)
    if n <= 8:
        return min_identifying_code(t, canonical=False).witness
    supports = set(t.supports())
    inner = [v for v in range(n) if t.degree(v) > 1 and v not in supports]
    if not inner:
        # every vertex is a leaf or a support, so γ = s
        return _search_within(t, n - len(supports), "leaves and supports only")
    x = inner[0]
    depth = t.bfs(x)
    leaf_count = {s: sum(1 for w in t.adjacency[s] if t.degree(w) == 1) for s in supports}
    s = min(supports, key=lambda v: (-depth[v], leaf_count[v] < 2, v))
    leaves = [w for w in t.adjacency[s] if t.degree(w) == 1]
    budget = n - gamma

    if len(leaves) >= 2:
        rest, old = t.remove([s, *leaves])
        if _is_p4(rest):
            return _search_within(t, budget, "star beside P4")
        return _lift(t, _dom_recurse(rest), old, leaves)

    (l,) = leaves
    u = next(w for w in t.adjacency[s] if w != l)
    if t.degree(u) == 2:
        rest, old = t.remove([l, s, u])
        if rest.n < 3 or _is_p4(rest):
            return _search_within(t, budget, "degree-2 chain beside a small tree")
        sub = _dom_recurse(rest)
        for extra in ((s, u), (l, u)):
            cert = _lift(t, sub, old, extra)
            if cert.valid:
                return cert
        raise InternalBoundViolation("neither chain extension identifies")

    u_leaves = [w for w in t.adjacency[u] if t.degree(w) == 1]
    if u_leaves:
        rest, old = t.remove([s, l])
        if rest.n < 3 or _is_p4(rest):
            return _search_within(t, budget, "support neighbor beside a small tree")
        sub = _dom_recurse(rest)
        lifted = {old[v] for v in sub.code}
        if u in lifted:
            return certify(t, lifted | {l})
        lu = min(w for w in u_leaves if w in lifted)
        return certify(t, (lifted | {s, u}) - {lu})

    # u heads a subdivided star: all its deeper neighbors are degree-2 supports
    arms = [w for w in t.adjacency[u] if w in supports and t.degree(w) == 2 and depth[w] > depth[u]]
    arm_leaves = [next(y for y in t.adjacency[w] if t.degree(y) == 1) for w in arms]
    rest, old = t.remove([u, *arms, *arm_leaves])
    if rest.n < 3 or _is_p4(rest):
        return _search_within(t, budget, "subdivided star beside a small tree")
    return _lift(t, _dom_recurse(rest), old, [u, *arms])
