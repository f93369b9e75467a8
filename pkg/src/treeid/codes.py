"""Dominating, separating and identifying sets: predicates and certificates."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable

from .errors import DomainError, NotIdentifiable
from .graph import Graph, VertexSet, has_closed_twins, mask_of, open_twin_leaf_classes


@dataclass(frozen=True)
class CodeCertificate:
    """A candidate code with every vertex's signature N[v] & C and the verdicts."""

    code: VertexSet
    signatures: tuple[VertexSet, ...]
    dominating: bool
    separating: bool
    valid: bool

    @property
    def size(self) -> int:
        return len(self.code)

    def to_record(self) -> dict:
        return {
            "code": sorted(self.code),
            "size": self.size,
            "dominating": self.dominating,
            "separating": self.separating,
            "valid": self.valid,
        }


@lru_cache(maxsize=4096)
def separation_pairs(g: Graph) -> tuple[tuple[int, int], ...]:
    """Pairs at distance <= 2; only these can fail to be separated."""
    return tuple(g.pairs_within_two())


def _as_mask(g: Graph, code) -> int:
    if isinstance(code, VertexSet):
        if code.n != g.n:
            raise DomainError("code width differs from graph order")
        return code.bits
    if isinstance(code, int):
        return code
    m = mask_of(code)
    if m >> g.n:
        raise DomainError("code contains a vertex outside the graph")
    return m


def certify(g: Graph, code: VertexSet | Iterable[int] | int, all_pairs: bool = False) -> CodeCertificate:
    """Check ``code`` as an identifying code of ``g``.

    Separation is checked over pairs within distance two, which suffices
    once the code dominates. For non-dominating codes, or with
    ``all_pairs=True``, every pair is compared.
    """
    if has_closed_twins(g):
        raise NotIdentifiable("graph has closed twins")
    c = _as_mask(g, code)
    sigs = [m & c for m in g.closed_masks]
    dominating = all(sigs)
    if all_pairs or not dominating:
        separating = len(set(sigs)) == g.n
    else:
        separating = separates_within_two(g, c)
    return CodeCertificate(
        code=VertexSet(g.n, c),
        signatures=tuple(VertexSet(g.n, s) for s in sigs),
        dominating=dominating,
        separating=separating,
        valid=dominating and separating,
    )


def separates_within_two(g: Graph, code: int) -> bool:
    """Distinct signatures on every pair at distance <= 2."""
    cm = g.closed_masks
    return all(cm[u] & code != cm[v] & code for u, v in separation_pairs(g))


def is_identifying_code(g: Graph, code: int) -> bool:
    cm = g.closed_masks
    sigs = [m & code for m in cm]
    return all(sigs) and all(sigs[u] != sigs[v] for u, v in separation_pairs(g))


def is_dominating_set(g: Graph, code: int) -> bool:
    return all(m & code for m in g.closed_masks)


def identifying_constraints(g: Graph) -> list[int]:
    """Masks an identifying code must meet: each N[v] and each N[u] ^ N[v]."""
    cm = g.closed_masks
    return list(cm) + [cm[u] ^ cm[v] for u, v in separation_pairs(g)]


def forced_vertices(g: Graph) -> VertexSet:
    """Vertices w with N[u] ^ N[v] == {w} for some pair; every code contains them."""
    cm = g.closed_masks
    forced = 0
    for u, v in separation_pairs(g):
        d = cm[u] ^ cm[v]
        if d and d & (d - 1) == 0:
            forced |= d
    return VertexSet(g.n, forced)


def twin_leaf_seed(g: Graph) -> int:
    """All but the highest-id leaf of every open-twin leaf class.

    Swapping two twin leaves is an automorphism, so some optimal code (indeed
    the lexicographically smallest one) contains this set.
    """
    seed = 0
    for cls in open_twin_leaf_classes(g):
        if len(cls) >= 2:
            seed |= mask_of(cls[:-1])
    return seed


def search_seed(g: Graph) -> int:
    return forced_vertices(g).bits | twin_leaf_seed(g)


def packing_bound(constraints: Iterable[int], chosen: int, allowed: int) -> int:
    """Greedy count of pairwise-disjoint unmet constraints (each needs its own vertex)."""
    used = 0
    k = 0
    for c in sorted((c & allowed for c in constraints if not c & chosen), key=int.bit_count):
        if not c & used:
            used |= c
            k += 1
    return k


def lower_bound(g: Graph) -> int:
    """A lower bound on the identification number.

    The maximum of ceil(log2(n+1)), the twin-class count sum(k-1), and the
    seeded set (forced vertices plus all-but-one leaf per twin class) plus a
    disjoint packing of the constraints the seed leaves unmet.
    """
    if has_closed_twins(g):
        raise NotIdentifiable("graph has closed twins")
    log_term = g.n.bit_length()  # ceil(log2(n + 1)), exactly
    twin_term = sum(len(c) - 1 for c in open_twin_leaf_classes(g) if len(c) >= 2)
    forced = forced_vertices(g).bits
    forced_term = forced.bit_count() + sum(
        max(0, len(cls) - 1 - (forced & mask_of(cls)).bit_count())
        for cls in open_twin_leaf_classes(g)
    )
    seed = search_seed(g)
    seeded_term = seed.bit_count() + packing_bound(identifying_constraints(g), seed, g.full_mask & ~seed)
    return max(log_term, twin_term, forced_term, seeded_term)
