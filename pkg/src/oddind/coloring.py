"""Strong odd coloring: verification and exact computation.

A proper coloring is strong odd exactly when every color class is an odd
independent set, so the exact solver is a minimum partition of the vertex
set into OIS classes.  Class feasibility is a property of the class alone
(parity is checked against all outside vertices), which keeps the search
sound: candidate classes are enumerated completely per component and a
memoized covering recursion picks the pivot vertex's class first.  The
parity condition is not hereditary, so partially built classes are never
parity-tested; only complete candidate classes are.
"""

from __future__ import annotations

from typing import Iterable, List, Optional, Sequence, Tuple

from .graphs import Graph, VertexSet, bits_of, metrics, square
from .independence import (
    _as_mask,
    _outside_parity_ok,
    alpha_square,
    is_odd_independent,
    odd_independent_set_masks,
)
from .matching import maximum_matching
from .results import Deadline, SolveResult, default_budget


class AlphaTooLarge(ValueError):
    pass


class Coloring:
    """Total assignment vertex -> color index."""

    __slots__ = ("colors",)

    def __init__(self, colors: Iterable[int]):
        self.colors = tuple(colors)
        if any(c < 0 for c in self.colors):
            raise ValueError("colors must be non-negative")

    @property
    def num_colors(self) -> int:
        return len(set(self.colors))

    def classes(self) -> List[int]:
        masks = {}
        for v, c in enumerate(self.colors):
            masks[c] = masks.get(c, 0) | (1 << v)
        return [masks[c] for c in sorted(masks)]

    def __eq__(self, other):
        return isinstance(other, Coloring) and self.colors == other.colors

    def __repr__(self):
        return f"Coloring({list(self.colors)!r})"


def _as_colors(g: Graph, c) -> Tuple[int, ...]:
    colors = tuple(c.colors if isinstance(c, Coloring) else c)
    if len(colors) != g.n:
        raise ValueError(f"coloring has {len(colors)} entries for {g.n} vertices")
    return colors


def is_proper_coloring(g: Graph, c) -> bool:
    colors = _as_colors(g, c)
    return all(colors[u] != colors[v] for u, v in g.edges())


def is_strong_odd_coloring(g: Graph, c) -> bool:
    """Proper, and every color present in an open neighborhood appears
    there an odd number of times."""
    colors = _as_colors(g, c)
    if not is_proper_coloring(g, colors):
        return False
    for v in range(g.n):
        counts = {}
        for u in bits_of(g.adj[v]):
            counts[colors[u]] = counts.get(colors[u], 0) + 1
        if any(cnt % 2 == 0 for cnt in counts.values()):
            return False
    return True


# -- exact chromatic number (used on squares) ----------------------------------


def _greedy_coloring(g: Graph) -> List[int]:
    order = sorted(range(g.n), key=lambda v: (-g.degree(v), v))
    colors = [-1] * g.n
    for v in order:
        used = {colors[u] for u in bits_of(g.adj[v]) if colors[u] != -1}
        c = 0
        while c in used:
            c += 1
        colors[v] = c
    return colors


def _greedy_clique(g: Graph) -> int:
    best = 0
    for v in range(g.n):
        mask = 1 << v
        cand = g.adj[v]
        while cand:
            bit = cand & -cand
            mask |= bit
            cand &= g.adj[bit.bit_length() - 1]
        best = max(best, mask.bit_count())
    return best


class BudgetUp(Exception):
    pass


def _k_colorable(g: Graph, k: int, deadline: Deadline):
    """A k-coloring as a list, or None; vertices in degree-descending order."""
    order = sorted(range(g.n), key=lambda v: (-g.degree(v), v))
    colors = [-1] * g.n
    nodes = 0

    def rec(i, used):
        nonlocal nodes
        nodes += 1
        if nodes & 1023 == 0 and deadline.expired():
            raise BudgetUp
        if i == len(order):
            return True
        v = order[i]
        forbidden = {colors[u] for u in bits_of(g.adj[v]) if colors[u] != -1}
        for c in range(min(used + 1, k)):
            if c in forbidden:
                continue
            colors[v] = c
            if rec(i + 1, max(used, c + 1)):
                return True
            colors[v] = -1
            if c == used:  # first fresh color; higher fresh ids are symmetric
                break
        return False

    return list(colors) if rec(0, 0) else None


def chromatic_number(g: Graph, budget: Optional[float] = None) -> SolveResult:
    """Exact chromatic number by class backtracking per component."""
    deadline = Deadline(default_budget() if budget is None else budget)
    if g.n == 0:
        return SolveResult(0, Coloring(()), "backtracking")
    total = [0] * g.n
    value = 0
    proven_lower = 0
    exact = True
    for comp in g.component_masks():
        sub, keep = g.induced(comp)
        witness = _greedy_coloring(sub)
        k = max(witness) + 1
        lb = max(_greedy_clique(sub), 1)
        try:
            while k > lb:
                attempt = _k_colorable(sub, k - 1, deadline)
                if attempt is None:
                    lb = k  # k-1 colors proven impossible
                    break
                witness = attempt
                k -= 1
        except BudgetUp:
            exact = False
        for i, v in enumerate(keep):
            total[v] = witness[i]
        value = max(value, k)
        proven_lower = max(proven_lower, lb if exact else min(lb, k))
    coloring = Coloring(total)
    assert is_proper_coloring(g, coloring)
    if exact:
        return SolveResult(value, coloring, "backtracking",
                           millis=deadline.elapsed_ms())
    return SolveResult(value, coloring, "backtracking", exact=False,
                       lower=proven_lower, upper=value,
                       millis=deadline.elapsed_ms(), note="budget exhausted")


def chi_square(g: Graph, budget: Optional[float] = None) -> SolveResult:
    """Exact chromatic number of the square of ``g``."""
    return chromatic_number(square(g), budget=budget)


# -- exact strong odd chromatic number ------------------------------------------


def _component_chi_so(sub: Graph, deadline: Deadline):
    """(k, class masks) for one connected component, or None on timeout."""
    n = sub.n
    if n == 0:
        return 0, []
    if sub.edge_count() == 0:
        return 1, [sub.full_mask]
    candidates = odd_independent_set_masks(sub)
    by_pivot: List[List[int]] = [[] for _ in range(n)]
    for m in candidates:
        if m:
            by_pivot[(m & -m).bit_length() - 1].append(m)
    for lst in by_pivot:
        lst.sort(key=lambda m: (-m.bit_count(), m))
    memo = {0: (0, 0)}
    counter = [0]

    def solve(mask):
        hit = memo.get(mask)
        if hit is not None:
            return hit[0]
        counter[0] += 1
        if counter[0] & 255 == 0 and deadline.expired():
            raise BudgetUp
        pivot = (mask & -mask).bit_length() - 1
        best, choice = n + 1, 0
        for c in by_pivot[pivot]:
            if c & ~mask:
                continue
            sz = solve(mask & ~c) + 1
            if sz < best:
                best, choice = sz, c
                if best == 1:
                    break
        memo[mask] = (best, choice)
        return best

    k = solve(sub.full_mask)
    classes = []
    mask = sub.full_mask
    while mask:
        _, choice = memo[mask]
        classes.append(choice)
        mask &= ~choice
    return k, classes


def chi_so_exact(g: Graph, budget: Optional[float] = None) -> SolveResult:
    """Exact strong odd chromatic number with a witness coloring.

    Components are solved independently (classes merge across components),
    so the answer is the maximum over components.
    """
    deadline = Deadline(default_budget() if budget is None else budget)
    if g.n == 0:
        return SolveResult(0, Coloring(()), "ois-partition")
    colors = [0] * g.n
    value = 0
    try:
        for comp in g.component_masks():
            sub, keep = g.induced(comp)
            if sub.n > 22:
                raise BudgetUp  # partition search is meant for desk scale
            k, classes = _component_chi_so(sub, deadline)
            value = max(value, k)
            for ci, cmask in enumerate(classes):
                for v in bits_of(cmask):
                    colors[keep[v]] = ci
    except BudgetUp:
        k_up, witness = chi_so_upper_from_partition(g)
        lower = 2 if g.edge_count() else 1
        return SolveResult(k_up, witness, "ois-partition", exact=False,
                           lower=lower, upper=k_up,
                           millis=deadline.elapsed_ms(), note="budget exhausted")
    witness = Coloring(colors)
    assert is_strong_odd_coloring(g, witness)
    return SolveResult(value, witness, "ois-partition",
                       millis=deadline.elapsed_ms())


def chi_so_alpha2(g: Graph) -> SolveResult:
    """Polynomial strong odd chromatic number when no independent triple
    exists: ``n`` minus a maximum matching of odd-independent pairs.

    A pair is odd independent exactly when its vertices are nonadjacent
    and share no neighbor (distance at least 3, or disconnected).
    """
    n = g.n
    full = g.full_mask
    for u in range(n):
        nonadj_u = ~g.adj[u] & full & ~(1 << u)
        for v in bits_of(nonadj_u >> (u + 1) << (u + 1)):
            third = nonadj_u & ~g.adj[v] & ~(1 << v) & ~((1 << (v + 1)) - 1)
            if third:
                raise AlphaTooLarge("graph has an independent triple")
    aux_edges = []
    for u in range(n):
        for v in range(u + 1, n):
            if not g.has_edge(u, v) and g.adj[u] & g.adj[v] == 0:
                aux_edges.append((u, v))
    from .graphs import from_edge_list

    aux = from_edge_list(n, aux_edges)
    m = maximum_matching(aux)
    colors = [-1] * n
    nxt = 0
    for u, v in sorted(m.pairs):
        colors[u] = colors[v] = nxt
        nxt += 1
    for v in range(n):
        if colors[v] == -1:
            colors[v] = nxt
            nxt += 1
    witness = Coloring(colors)
    assert is_strong_odd_coloring(g, witness)
    return SolveResult(n - m.size, witness, "alpha2-matching")


def chi_so_upper_from_partition(g: Graph, classes: Optional[Sequence] = None):
    """Valid strong odd coloring from disjoint OIS classes plus singletons.

    With the default single best-known OIS this gives the
    ``n - |S| + 1`` upper bound; callers may supply any family of disjoint
    OIS classes (for instance rotation schemes) to do better.
    """
    if classes is None:
        classes = [greedy_ois_lower(g)] if g.n else []
    masks = []
    seen = 0
    for s in classes:
        mask = _as_mask(g, s)
        if mask & seen:
            raise ValueError("classes are not disjoint")
        if not is_odd_independent(g, mask):
            raise ValueError("a supplied class is not odd independent")
        seen |= mask
        masks.append(mask)
    colors = [-1] * g.n
    for i, mask in enumerate(masks):
        for v in bits_of(mask):
            colors[v] = i
    nxt = len(masks)
    for v in range(g.n):
        if colors[v] == -1:
            colors[v] = nxt
            nxt += 1
    witness = Coloring(colors)
    assert is_strong_odd_coloring(g, witness)
    return nxt, witness


def greedy_ois_lower(g: Graph, budget: Optional[float] = None) -> VertexSet:
    """Cheap verified OIS used as a lower-bound seed: the better of a
    maximum independent set of the square, a bipartition class when all
    degrees are odd, and an odd chunk of a largest neighborhood at girth
    at least 5."""
    if g.n == 0:
        return VertexSet(0)
    best = 1  # any singleton
    best_mask = 1
    sq = alpha_square(g, budget=min(10.0, budget) if budget else 10.0)
    if sq.witness.mask.bit_count() > best:
        best, best_mask = sq.witness.mask.bit_count(), sq.witness.mask
    met = metrics(g)
    degs = [g.degree(v) for v in range(g.n)]
    if met.is_bipartite and g.edge_count() and all(d % 2 == 1 for d in degs):
        a, b = met.bipartition
        mask = max(a.mask, b.mask, key=lambda m: m.bit_count())
        if mask.bit_count() > best:
            best, best_mask = mask.bit_count(), mask
    if met.girth >= 5 and g.edge_count():
        v = max(range(g.n), key=lambda u: (degs[u], -u))
        take = degs[v] if degs[v] % 2 == 1 else degs[v] - 1
        mask, row = 0, g.adj[v]
        for _ in range(take):
            bit = row & -row
            mask |= bit
            row ^= bit
        if take > best:
            best, best_mask = take, mask
    assert is_odd_independent(g, best_mask)
    return VertexSet(g.n, best_mask)


def cube_chi_so(d: int) -> Tuple[int, Coloring]:
    """Strong odd chromatic number of the d-cube with an explicit witness:
    2 for odd d (the bipartition), 4 for even d (parity classes refined by
    the leading coordinate)."""
    from .generators import hypercube

    if d < 1:
        raise ValueError("d must be at least 1")
    n = 1 << d
    if d % 2 == 1:
        colors = [v.bit_count() & 1 for v in range(n)]
        value = 2
    else:
        colors = [2 * (v >> (d - 1)) + (v.bit_count() & 1) for v in range(n)]
        value = 4
    witness = Coloring(colors)
    assert is_strong_odd_coloring(hypercube(d), witness)
    return value, witness
