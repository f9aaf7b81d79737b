"""Odd independence: verification, exact solvers, and search pruning rules.

An odd independent set (OIS) is an independent set ``S`` such that every
vertex outside ``S`` sees either zero or an odd number of members of ``S``.
The parity condition is not hereditary under taking subsets, so the exact
search below branches over the hereditary envelope (independent sets) and
tests parity on each candidate it materializes.  Two sound mid-branch cuts
exist and are both used:

* no OIS contains a *forbidden pair* (nonadjacent ``x, y`` with a common
  neighbor ``z`` whose closed neighborhood lies inside ``N[x] + N[y]``) nor
  a *forcing pair*, so partners of a chosen vertex are dropped from the
  candidate pool;
* global upper bounds: the independence number, the even-degree regular
  bound ``(d-1)/(2d-1) * n``, and the common-neighbor-floor bounds for
  regular graphs.

Lower-bound seeds come from a maximum independent set of the square (always
an OIS), from a bipartition class when all degrees are odd, and from odd
subsets of a largest neighborhood when the girth is at least 5.
"""

from __future__ import annotations

import sys
from dataclasses import dataclass
from typing import Iterator, List, Optional

from .graphs import Graph, VertexSet, bits_of, metrics, square
from .results import (
    BOUNDED_K,
    BRANCH_BOUND,
    BRUTE_FORCE,
    CLAW_FREE_REDUCTION,
    ODD_REGULAR_BIPARTITE,
    Deadline,
    SolveResult,
    default_budget,
)


class NotClawFree(ValueError):
    pass


def _as_mask(g: Graph, s) -> int:
    if isinstance(s, VertexSet):
        if s.n != g.n:
            raise ValueError("vertex set bound to a different order")
        return s.mask
    if isinstance(s, int):
        if s >> g.n:
            raise ValueError("mask has bits outside the graph")
        return s
    return VertexSet.from_ids(g.n, s).mask


def is_independent(g: Graph, s) -> bool:
    mask = _as_mask(g, s)
    for v in bits_of(mask):
        if g.adj[v] & mask:
            return False
    return True


def is_odd_independent(g: Graph, s) -> bool:
    """Exact OIS predicate: independent, and outside counts are 0 or odd."""
    mask = _as_mask(g, s)
    if not is_independent(g, mask):
        return False
    return _outside_parity_ok(g.adj, g.n, mask)


def _outside_parity_ok(rows, n, mask) -> bool:
    for v in range(n):
        if mask >> v & 1:
            continue
        c = (rows[v] & mask).bit_count()
        if c and not c & 1:
            return False
    return True


def odd_profile(g: Graph, s) -> List[int]:
    """Per-vertex counts ``|N(v) & S|`` (diagnostic for certificates)."""
    mask = _as_mask(g, s)
    return [(g.adj[v] & mask).bit_count() for v in range(g.n)]


# -- forbidden and forcing pairs ---------------------------------------------


@dataclass(frozen=True)
class PairClassification:
    forbidden: frozenset  # of (u, v) with u < v
    forcing: tuple  # of ((u, v), witness_center)

    def pair_rows(self, n: int) -> List[int]:
        """Per-vertex masks of partners excluded from any common OIS."""
        rows = [0] * n
        for u, v in self.forbidden:
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        for (u, v), _ in self.forcing:
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return rows


def pair_classification(g: Graph) -> PairClassification:
    """Enumerate all forbidden and forcing pairs of ``g``."""
    n = g.n
    forb_rows = [0] * n
    forbidden = set()
    for x in range(n):
        for y in range(x + 1, n):
            if g.has_edge(x, y):
                continue
            common = g.adj[x] & g.adj[y]
            if not common:
                continue
            cover = g.closed_row(x) | g.closed_row(y)
            for z in bits_of(common):
                if g.closed_row(z) & ~cover == 0:
                    forbidden.add((x, y))
                    forb_rows[x] |= 1 << y
                    forb_rows[y] |= 1 << x
                    break
    forcing = []
    seen = set()
    for z in range(n):
        nbrs = list(bits_of(g.adj[z]))
        for i, x in enumerate(nbrs):
            for y in nbrs[i + 1:]:
                if g.has_edge(x, y) or (x, y) in seen:
                    continue
                third = g.adj[z] & ~g.adj[x] & ~g.adj[y] & ~(1 << x) & ~(1 << y)
                # every independent third neighbor must pair forbidden with x or y
                if third & ~(forb_rows[x] | forb_rows[y]) == 0:
                    forcing.append(((x, y), z))
                    seen.add((x, y))
    return PairClassification(frozenset(forbidden), tuple(forcing))


# -- maximum independent set (branch and bound on the complement clique) -----


class _CliqueSolver:
    """Max-clique search with greedy-coloring bounds (bitset rows)."""

    def __init__(self, rows, n, deadline: Deadline):
        self.rows = rows
        self.n = n
        self.deadline = deadline
        self.best = 0
        self.best_mask = 0
        self.nodes = 0
        self.timed_out = False
        self.root_bound = n

    def seed(self, mask: int):
        size = mask.bit_count()
        if size > self.best:
            self.best = size
            self.best_mask = mask

    def run(self):
        full = (1 << self.n) - 1
        if full:
            self.root_bound = self._color_count(full)
            self._expand(full, 0, 0)
        else:
            self.root_bound = 0

    def _color_count(self, P):
        count = 0
        Q = P
        while Q:
            count += 1
            avail = Q
            while avail:
                v = (avail & -avail).bit_length() - 1
                avail &= ~self.rows[v] & ~(1 << v)
                Q &= ~(1 << v)
        return count

    def _expand(self, P, size, mask):
        self.nodes += 1
        if self.nodes & 2047 == 0 and self.deadline.expired():
            self.timed_out = True
            return
        order = []
        bounds = []
        Q = P
        color = 0
        while Q:
            color += 1
            avail = Q
            while avail:
                v = (avail & -avail).bit_length() - 1
                avail &= ~self.rows[v] & ~(1 << v)
                Q &= ~(1 << v)
                order.append(v)
                bounds.append(color)
        for i in range(len(order) - 1, -1, -1):
            if size + bounds[i] <= self.best:
                return
            v = order[i]
            bit = 1 << v
            child = P & self.rows[v]
            if child:
                self._expand(child, size + 1, mask | bit)
                if self.timed_out:
                    return
            elif size + 1 > self.best:
                self.best = size + 1
                self.best_mask = mask | bit
            P &= ~bit


def _max_clique(rows, n, deadline, seed_mask=0):
    if n == 0:
        return 0, 0, 0, True, 0
    # renumber by decreasing degree for tighter colorings
    order = sorted(range(n), key=lambda v: (-rows[v].bit_count(), v))
    pos = [0] * n
    for i, v in enumerate(order):
        pos[v] = i
    perm_rows = [0] * n
    for v in range(n):
        row = 0
        for u in bits_of(rows[v]):
            row |= 1 << pos[u]
        perm_rows[pos[v]] = row
    solver = _CliqueSolver(perm_rows, n, deadline)
    if seed_mask:
        perm_seed = 0
        for v in bits_of(seed_mask):
            perm_seed |= 1 << pos[v]
        solver.seed(perm_seed)
    solver.run()
    back = 0
    for i in bits_of(solver.best_mask):
        back |= 1 << order[i]
    return solver.best, back, solver.nodes, not solver.timed_out, solver.root_bound


def alpha(g: Graph, budget: Optional[float] = None, seed=None) -> SolveResult:
    """Exact maximum independent set via clique search on the complement."""
    deadline = Deadline(default_budget() if budget is None else budget)
    sys.setrecursionlimit(max(sys.getrecursionlimit(), 4 * g.n + 1000))
    full = g.full_mask
    comp_rows = [~g.adj[v] & full & ~(1 << v) for v in range(g.n)]
    seed_mask = 0
    if seed is not None:
        seed_mask = _as_mask(g, seed)
        if not is_independent(g, seed_mask):
            raise ValueError("seed is not independent")
    best, mask, nodes, exact, root_bound = _max_clique(comp_rows, g.n, deadline, seed_mask)
    return SolveResult(
        value=best,
        witness=VertexSet(g.n, mask),
        method=BRANCH_BOUND,
        exact=exact,
        lower=best,
        upper=best if exact else root_bound,
        nodes=nodes,
        millis=deadline.elapsed_ms(),
    )


def alpha_square(g: Graph, budget: Optional[float] = None) -> SolveResult:
    """Maximum independent set of the square (always an OIS of ``g``)."""
    return alpha(square(g), budget=budget)


# -- exact odd independence ----------------------------------------------------


def independent_set_masks(g: Graph, within: Optional[int] = None) -> Iterator[int]:
    """Yield every independent subset of ``within`` (default all) once."""
    rows = g.adj
    start = g.full_mask if within is None else within

    def rec(s, p):
        yield s
        while p:
            bit = p & -p
            v = bit.bit_length() - 1
            p ^= bit
            yield from rec(s | bit, p & ~rows[v])

    yield from rec(0, start)


def odd_independent_set_masks(g: Graph) -> List[int]:
    """All OIS masks (exponential; meant for small graphs)."""
    return [m for m in independent_set_masks(g)
            if _outside_parity_ok(g.adj, g.n, m)]


def alpha_od_bruteforce(g: Graph) -> SolveResult:
    """Plain exhaustive scan over all vertex subsets; the test oracle."""
    if g.n > 22:
        raise ValueError("brute force capped at 22 vertices")
    best, best_mask = 0, 0
    for mask in range(1 << g.n):
        if mask.bit_count() <= best:
            continue
        if is_independent(g, mask) and _outside_parity_ok(g.adj, g.n, mask):
            best, best_mask = mask.bit_count(), mask
    return SolveResult(best, VertexSet(g.n, best_mask), BRUTE_FORCE)


def _clique_cover_bound(rows, P) -> int:
    count = 0
    Q = P
    while Q:
        bit = Q & -Q
        v = bit.bit_length() - 1
        clique = bit
        cand = Q & rows[v]
        while cand:
            b2 = cand & -cand
            u = b2.bit_length() - 1
            clique |= b2
            cand &= rows[u]
        Q &= ~clique
        count += 1
    return count


class _OisSearch:
    def __init__(self, g: Graph, bad_rows, order, deadline, best_mask, upper):
        self.rows = g.adj
        self.n = g.n
        self.bad = bad_rows
        self.order = order
        self.deadline = deadline
        self.best_mask = best_mask
        self.best = best_mask.bit_count()
        self.upper = upper
        self.nodes = 0
        self.timed_out = False

    def run(self):
        self._expand(0, (1 << self.n) - 1)

    def _expand(self, s, p):
        self.nodes += 1
        if self.nodes & 1023 == 0 and self.deadline.expired():
            self.timed_out = True
            return
        if self.best >= self.upper:
            return
        size = s.bit_count()
        if size + _clique_cover_bound(self.rows, p) <= self.best:
            return
        for v in self.order:
            bit = 1 << v
            if not p & bit:
                continue
            p &= ~bit
            child_s = s | bit
            if child_s.bit_count() > self.best and \
                    _outside_parity_ok(self.rows, self.n, child_s):
                self.best = child_s.bit_count()
                self.best_mask = child_s
            self._expand(child_s, p & ~self.rows[v] & ~self.bad[v])
            if self.timed_out:
                return
            if size + _clique_cover_bound(self.rows, p) <= self.best:
                return


def _component_alpha_od(g: Graph, deadline: Deadline) -> SolveResult:
    n = g.n
    if n == 0:
        return SolveResult(0, VertexSet(0), BRANCH_BOUND, nodes=0)
    if g.edge_count() == 0:
        return SolveResult(n, VertexSet(n, g.full_mask), BRANCH_BOUND)
    met = metrics(g)
    degs = [g.degree(v) for v in range(n)]

    if met.is_bipartite and met.is_regular and degs[0] % 2 == 1:
        a, b = met.bipartition
        cls = a if len(a) >= len(b) else b
        return SolveResult(len(cls), cls, ODD_REGULAR_BIPARTITE)

    remaining = deadline.remaining()
    slice_budget = None if remaining is None else min(max(remaining, 0.01) / 3, 30.0)

    alpha_res = alpha(g, budget=slice_budget)
    upper = alpha_res.value if alpha_res.exact else alpha_res.upper
    if met.is_regular:
        d = degs[0]
        if d % 2 == 0 and d >= 2:
            upper = min(upper, (d - 1) * n // (2 * d - 1))
        lam = min((g.adj[u] & g.adj[v]).bit_count() for u, v in g.edges())
        if (d - lam) % 2 == 0:
            if 2 * d - lam - 1 > 0:
                upper = min(upper, (d - lam - 1) * n // (2 * d - lam - 1))
        else:
            upper = min(upper, (d - lam) * n // (2 * d - lam))

    # lower-bound seeds, all verified as OIS before use
    seeds = [1 << 0]
    sq_res = alpha(square(g), budget=slice_budget)
    seeds.append(sq_res.witness.mask)
    if met.is_bipartite and all(d % 2 == 1 for d in degs):
        a, b = met.bipartition
        seeds.append(max(a.mask, b.mask, key=lambda m: m.bit_count()))
    if met.girth >= 5:
        v = max(range(n), key=lambda u: (degs[u], -u))
        take = degs[v] if degs[v] % 2 == 1 else degs[v] - 1
        mask, row = 0, g.adj[v]
        for _ in range(take):
            bit = row & -row
            mask |= bit
            row ^= bit
        seeds.append(mask)
    best_mask = 0
    for m in seeds:
        if m.bit_count() > best_mask.bit_count() and is_odd_independent(g, m):
            best_mask = m

    nodes = alpha_res.nodes + sq_res.nodes
    if best_mask.bit_count() >= upper:
        return SolveResult(upper, VertexSet(n, best_mask), BRANCH_BOUND, nodes=nodes)

    pairs = pair_classification(g)
    bad = pairs.pair_rows(n)
    sq_deg = [r.bit_count() for r in square(g).adj]
    order = sorted(range(n), key=lambda v: (-sq_deg[v], v))
    search = _OisSearch(g, bad, order, deadline, best_mask, upper)
    search.run()
    nodes += search.nodes
    value = search.best
    if search.timed_out:
        return SolveResult(value, VertexSet(n, search.best_mask), BRANCH_BOUND,
                           exact=False, lower=value, upper=upper, nodes=nodes,
                           note="budget exhausted")
    return SolveResult(value, VertexSet(n, search.best_mask), BRANCH_BOUND, nodes=nodes)


def alpha_od(g: Graph, budget: Optional[float] = None) -> SolveResult:
    """Exact odd independence number with witness (interval on timeout).

    Odd independence is additive over connected components, so each
    component is solved on its own and the witnesses are merged.
    """
    deadline = Deadline(default_budget() if budget is None else budget)
    sys.setrecursionlimit(max(sys.getrecursionlimit(), 4 * g.n + 1000))
    comps = g.component_masks()
    if len(comps) <= 1:
        res = _component_alpha_od(g, deadline)
        res.millis = deadline.elapsed_ms()
        return res
    total_mask = 0
    value = lower = upper = nodes = 0
    exact = True
    methods = set()
    for comp in comps:
        sub, keep = g.induced(comp)
        res = _component_alpha_od(sub, deadline)
        for v in res.witness.ids():
            total_mask |= 1 << keep[v]
        value += res.value
        lower += res.lower
        upper += res.upper if res.upper is not None else sub.n
        nodes += res.nodes
        exact = exact and res.exact
        methods.add(res.method)
    method = methods.pop() if len(methods) == 1 else BRANCH_BOUND
    return SolveResult(value, VertexSet(g.n, total_mask), method, exact=exact,
                       lower=lower, upper=upper if not exact else value,
                       nodes=nodes, millis=deadline.elapsed_ms())


def alpha_od_bounded(g: Graph, k: int) -> SolveResult:
    """Best OIS over all subsets of size at most ``k`` (exhaustive scan).

    Exact exactly when the independence number is at most ``k``, which the
    scan itself certifies by looking for an independent ``k+1``-subset.
    """
    from itertools import combinations

    if k < 1:
        raise ValueError("k must be at least 1")
    best, best_mask = 0, 0
    nodes = 0
    for j in range(min(k, g.n), 0, -1):
        if j <= best:
            break
        for combo in combinations(range(g.n), j):
            nodes += 1
            mask = 0
            for v in combo:
                mask |= 1 << v
            if is_independent(g, mask) and _outside_parity_ok(g.adj, g.n, mask):
                best, best_mask = j, mask
                break
        # continue downward only while nothing of larger size was found
    alpha_le_k = True
    if k < g.n:
        for combo in combinations(range(g.n), k + 1):
            nodes += 1
            mask = 0
            for v in combo:
                mask |= 1 << v
            if is_independent(g, mask):
                alpha_le_k = False
                break
    return SolveResult(best, VertexSet(g.n, best_mask), BOUNDED_K,
                       exact=alpha_le_k, lower=best,
                       upper=best if alpha_le_k else None, nodes=nodes)


def alpha_od_clawfree(g: Graph, budget: Optional[float] = None) -> SolveResult:
    """Fast path: on claw-free graphs the optimum equals ``alpha(square(g))``."""
    if not metrics(g).is_claw_free:
        raise NotClawFree("graph has an induced claw")
    res = alpha_square(g, budget=budget)
    if not is_odd_independent(g, res.witness):
        raise AssertionError("square witness failed OIS verification")
    res.method = CLAW_FREE_REDUCTION
    return res
