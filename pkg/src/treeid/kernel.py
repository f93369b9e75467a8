"""Backend selection for the hitting-set search kernel.

The compiled extension is used when it was built and the instance fits in
one machine word; otherwise the pure-Python kernel runs. Setting the
environment variable ``TREEID_PURE=1`` forces the Python kernel.
"""

from __future__ import annotations

import os

from . import _search

try:
    if os.environ.get("TREEID_PURE") == "1":
        raise ImportError("pure kernel requested")
    from . import _csearch
except ImportError:
    _csearch = None

BACKEND = "cython" if _csearch is not None else "python"


def hit_search(
    constraints: list[int],
    chosen: int,
    allowed: int,
    budget: int,
    node_limit: int,
    backend: str | None = None,
) -> tuple[int, int, bool]:
    """Dispatch to the compiled or pure kernel (see ``_search.hit_search``)."""
    use = backend or BACKEND
    fits = (allowed | chosen) >> 64 == 0 and max(constraints, default=0) >> 64 == 0
    if use == "cython" and _csearch is not None and fits:
        return _csearch.hit_search(constraints, chosen, allowed, budget, node_limit)
    if use not in ("cython", "python"):
        raise ValueError(f"unknown backend {use!r}")
    return _search.hit_search(constraints, chosen, allowed, budget, node_limit)


def prepare(constraints: list[int]) -> list[int]:
    """Deduplicate, drop supersets of other constraints, sort by (popcount, value)."""
    uniq = sorted(set(constraints), key=lambda c: (c.bit_count(), c))
    kept: list[int] = []
    for c in uniq:
        if not any(k & c == k for k in kept):
            kept.append(c)
    return kept
