"""Maximum matching in general graphs via blossom contraction.

The search keeps an explicit ``base`` array mapping every vertex to the
base of its contracted blossom; odd cycles found while growing alternating
trees are contracted in place.  Roots are scanned in increasing vertex id,
so results are deterministic.  Optimality is certified by Berge's theorem:
a matching is maximum iff no augmenting path exists, and
:func:`has_augmenting_path` runs the same search without mutating its
input.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Optional, Tuple

from .graphs import Graph, bits_of


@dataclass(frozen=True)
class Matching:
    pairs: frozenset  # of (u, v) tuples with u < v
    mate: Tuple[Optional[int], ...]

    @property
    def size(self) -> int:
        return len(self.pairs)

    @classmethod
    def from_mate(cls, mate) -> "Matching":
        pairs = frozenset(
            (v, m) for v, m in enumerate(mate) if m is not None and v < m
        )
        return cls(pairs, tuple(mate))

    @classmethod
    def from_pairs(cls, n: int, pairs) -> "Matching":
        mate = [None] * n
        norm = set()
        for u, v in pairs:
            if mate[u] is not None or mate[v] is not None:
                raise ValueError("vertex matched twice")
            mate[u], mate[v] = v, u
            norm.add((min(u, v), max(u, v)))
        return cls(frozenset(norm), tuple(mate))


def _lca(match, base, parent, a, b):
    used = set()
    v = a
    while True:
        v = base[v]
        used.add(v)
        if match[v] == -1:
            break
        v = parent[match[v]]
    v = b
    while True:
        v = base[v]
        if v in used:
            return v
        v = parent[match[v]]


def _mark_path(match, base, parent, blossom, v, ancestor, child):
    while base[v] != ancestor:
        blossom[base[v]] = True
        blossom[base[match[v]]] = True
        parent[v] = child
        child = match[v]
        v = parent[match[v]]


def _find_augmenting(g: Graph, match, root) -> int:
    """Grow an alternating tree from ``root``; return the exposed far end
    of an augmenting path (or -1), with ``parent`` encoded into ``match``
    by the caller via :func:`_augment_along`."""
    n = g.n
    used = [False] * n
    parent = [-1] * n
    base = list(range(n))
    used[root] = True
    queue = deque([root])
    while queue:
        v = queue.popleft()
        for to in bits_of(g.adj[v]):
            if base[v] == base[to] or match[v] == to:
                continue
            if to == root or (match[to] != -1 and parent[match[to]] != -1):
                cur = _lca(match, base, parent, v, to)
                blossom = [False] * n
                _mark_path(match, base, parent, blossom, v, cur, to)
                _mark_path(match, base, parent, blossom, to, cur, v)
                for i in range(n):
                    if blossom[base[i]]:
                        base[i] = cur
                        if not used[i]:
                            used[i] = True
                            queue.append(i)
            elif parent[to] == -1:
                parent[to] = v
                if match[to] == -1:
                    _augment_along(match, parent, to)
                    return to
                used[match[to]] = True
                queue.append(match[to])
    return -1


def _augment_along(match, parent, v):
    while v != -1:
        pv = parent[v]
        ppv = match[pv]
        match[v] = pv
        match[pv] = v
        v = ppv


def maximum_matching(g: Graph) -> Matching:
    """Maximum-cardinality matching (blossom algorithm)."""
    n = g.n
    match = [-1] * n
    for v in range(n):  # cheap greedy start
        if match[v] == -1:
            for u in bits_of(g.adj[v]):
                if match[u] == -1:
                    match[v], match[u] = u, v
                    break
    for v in range(n):
        if match[v] == -1:
            _find_augmenting(g, match, v)
    return Matching.from_mate([m if m != -1 else None for m in match])


def is_valid_matching(g: Graph, m: Matching) -> bool:
    seen = 0
    for u, v in m.pairs:
        if not g.has_edge(u, v):
            return False
        if seen >> u & 1 or seen >> v & 1:
            return False
        seen |= 1 << u | 1 << v
    for v, mate in enumerate(m.mate):
        if mate is not None and m.mate[mate] != v:
            return False
    return True


def has_augmenting_path(g: Graph, m: Matching) -> bool:
    """Berge certificate: True iff ``m`` is not maximum."""
    match = [v if v is not None else -1 for v in m.mate]
    for v in range(g.n):
        if match[v] == -1:
            probe = list(match)
            if _find_augmenting(g, probe, v) != -1:
                return True
    return False
