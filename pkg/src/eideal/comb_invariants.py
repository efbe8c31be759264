"""Exact combinatorial invariants: induced matching, matching, independence,
vertex-cover extremes and unmixedness.

Everything is additive over connected components, and the solvers exploit
that: forests get linear DPs, graphs with few independent cycles get
branch-to-forest reductions, and only the residue falls back to general
search with an explicit node budget.
"""

from __future__ import annotations

from dataclasses import dataclass

import networkx as nx

from .graph_core import (Graph, bits, complement, component_count,
                         connected_components, induced_subgraph_mask)

DEFAULT_MIS_BUDGET = 10 ** 7
DEFAULT_NODE_BUDGET = 10 ** 7


class BudgetExceededError(RuntimeError):
    """Raised instead of returning a possibly wrong answer."""


def is_forest(g: Graph) -> bool:
    return g.edge_count == g.n - component_count(g)


def _root_orders(g: Graph):
    """Yield (order, parent) BFS arrays per connected component."""
    seen = 0
    for start in range(g.n):
        if seen >> start & 1:
            continue
        order = [start]
        parent = {start: -1}
        seen |= 1 << start
        i = 0
        while i < len(order):
            v = order[i]
            i += 1
            for u in bits(g.adj[v] & ~seen):
                seen |= 1 << u
                parent[u] = v
                order.append(u)
        yield order, parent


NEG = float("-inf")


def tree_induced_matching(g: Graph) -> int:
    """Induced matching number of a forest by rooted DP; errors on non-forests.

    Per vertex: a = best with v matched to a child, n_ = best with v
    unmatched (children free), p = best with v unmatched and no child
    matched (v available to its parent).
    """
    if not is_forest(g):
        raise ValueError("tree_induced_matching requires a forest")
    total = 0
    for order, parent in _root_orders(g):
        a = {}
        n_ = {}
        p = {}
        for v in reversed(order):
            children = [u for u in bits(g.adj[v]) if parent.get(u) == v]
            sum_n = sum(n_[c] for c in children)
            best_swap = max((p[c] - n_[c] for c in children), default=NEG)
            a[v] = 1 + sum_n + best_swap if children else NEG
            n_[v] = sum(max(a[c], n_[c]) for c in children)
            p[v] = sum_n
        root = order[0]
        total += int(max(a[root], n_[root]))
    return total


def _find_cycle_vertex(g: Graph, active: int) -> int | None:
    """Some vertex lying on a cycle of the induced subgraph, or None."""
    # Peel degree-<=1 vertices; anything left is in the 2-core.
    deg = {v: (g.adj[v] & active).bit_count() for v in bits(active)}
    queue = [v for v, d in deg.items() if d <= 1]
    alive = active
    while queue:
        v = queue.pop()
        if not alive >> v & 1:
            continue
        alive &= ~(1 << v)
        for u in bits(g.adj[v] & alive):
            deg[u] -= 1
            if deg[u] == 1:
                queue.append(u)
    if alive == 0:
        return None
    return max(bits(alive), key=lambda v: (g.adj[v] & alive).bit_count())


def induced_matching_number(g: Graph, budget: int = DEFAULT_NODE_BUDGET) -> int:
    """Exact induced matching number.

    Additive over components: forest components go straight to the DP, and
    each cyclic component is branched on a 2-core vertex v (v unmatched, or
    v matched to each neighbor in turn) until the forest DP applies.
    """
    total = 0
    for comp in connected_components(g).component_subgraphs:
        if comp.edge_count == 0:
            continue
        if comp.edge_count == comp.n - 1:
            total += tree_induced_matching(comp)
        else:
            total += _induced_matching_cyclic(comp, budget)
    return total


def _induced_matching_cyclic(g: Graph, budget: int) -> int:
    nodes = 0

    def solve(active: int) -> int:
        nonlocal nodes
        nodes += 1
        if nodes > budget:
            raise BudgetExceededError(
                f"induced matching search exceeded {budget} nodes")
        # Drop vertices isolated within the active set.
        live = 0
        for v in bits(active):
            if g.adj[v] & active:
                live |= 1 << v
        if live == 0:
            return 0
        v = _find_cycle_vertex(g, live)
        if v is None:
            return tree_induced_matching(induced_subgraph_mask(g, live))
        best = solve(live & ~(1 << v))
        for u in bits(g.adj[v] & live):
            rest = live & ~(g.adj[v] | g.adj[u] | (1 << v) | (1 << u))
            cand = 1 + solve(rest)
            if cand > best:
                best = cand
        return best

    return solve((1 << g.n) - 1)


def _tree_matching(g: Graph, order, parent) -> int:
    """Greedy leaf-matching, optimal on trees."""
    matched = set()
    size = 0
    for v in reversed(order):
        par = parent[v]
        if par >= 0 and v not in matched and par not in matched:
            matched.add(v)
            matched.add(par)
            size += 1
    return size


_MATCHING_EXCESS_LIMIT = 16


def matching_number(g: Graph) -> int:
    """Maximum matching size, exact on general graphs.

    Componentwise; trees use the greedy DP, small cyclomatic excess branches
    on cycle edges down to forests, and anything denser goes to networkx's
    blossom implementation.
    """
    total = 0
    for comp in connected_components(g).component_subgraphs:
        total += _matching_component(comp)
    return total


def _matching_component(g: Graph) -> int:
    excess = g.edge_count - g.n + 1
    if excess <= 0:
        order, parent = next(_root_orders(g))
        return _tree_matching(g, order, parent)
    if excess > _MATCHING_EXCESS_LIMIT:
        h = nx.Graph()
        h.add_nodes_from(range(g.n))
        h.add_edges_from(g.edges())
        return len(nx.max_weight_matching(h, maxcardinality=True))

    def solve(active: int, removed_edges: frozenset) -> int:
        sub = _induced_with_removed(g, active, removed_edges)
        if is_forest(sub):
            best = 0
            for order, parent in _root_orders(sub):
                best += _tree_matching(sub, order, parent)
            return best
        u, v = _some_cycle_edge(sub)
        verts = sorted(bits(active))
        gu, gv = verts[u], verts[v]
        skip = solve(active, removed_edges | {(min(gu, gv), max(gu, gv))})
        take = 1 + solve(active & ~(1 << gu) & ~(1 << gv), removed_edges)
        return max(skip, take)

    return solve((1 << g.n) - 1, frozenset())


def _induced_with_removed(g: Graph, active: int, removed: frozenset) -> Graph:
    verts = sorted(bits(active))
    index = {v: i for i, v in enumerate(verts)}
    adj = [0] * len(verts)
    for i, v in enumerate(verts):
        for u in bits(g.adj[v] & active):
            if u > v and (v, u) not in removed:
                j = index[u]
                adj[i] |= 1 << j
                adj[j] |= 1 << i
    return Graph(len(verts), tuple(adj))


def _some_cycle_edge(g: Graph) -> tuple[int, int]:
    """A (u, v) edge on a cycle, found as a DFS back edge."""
    color = [0] * g.n
    parent = [-1] * g.n
    for start in range(g.n):
        if color[start]:
            continue
        stack = [(start, -1)]
        while stack:
            v, par = stack.pop()
            if color[v]:
                continue
            color[v] = 1
            parent[v] = par
            for u in bits(g.adj[v]):
                if u == par:
                    continue
                if color[u]:
                    return (v, u)
                stack.append((u, v))
    raise ValueError("graph is a forest, no cycle edge")


def independence_number(g: Graph, budget: int = DEFAULT_NODE_BUDGET) -> int:
    """Maximum independent set size by branch and bound."""
    nodes = 0
    best = 0

    def greedy_color_bound(active: int) -> int:
        # Chromatic-style bound on the independence number of the complement
        # view: pack active vertices into cliques greedily.
        bound = 0
        rest = active
        while rest:
            v = rest & -rest
            vi = v.bit_length() - 1
            clique = 1 << vi
            cand = g.adj[vi] & rest
            while cand:
                u = cand & -cand
                ui = u.bit_length() - 1
                clique |= u
                cand &= g.adj[ui]
            rest &= ~clique
            bound += 1
        return bound

    def solve(active: int, size: int):
        nonlocal nodes, best
        nodes += 1
        if nodes > budget:
            raise BudgetExceededError(
                f"independence search exceeded {budget} nodes")
        if size > best:
            best = size
        if active == 0:
            return
        if size + greedy_color_bound(active) <= best:
            return
        degs = [(v, (g.adj[v] & active).bit_count()) for v in bits(active)]
        v, d = max(degs, key=lambda t: t[1])
        if d <= 1:
            # Peeling low-degree vertices greedily is exact.
            taken = 0
            rest = active
            while rest:
                u = (rest & -rest).bit_length() - 1
                rest &= ~(g.adj[u] | (1 << u))
                taken += 1
            if size + taken > best:
                best = size + taken
            return
        solve(active & ~(g.adj[v] | (1 << v)), size + 1)
        solve(active & ~(1 << v), size)

    solve((1 << g.n) - 1, 0)
    return best


@dataclass(frozen=True)
class CoverProfile:
    """Minimum vs largest-minimal vertex cover sizes and the unmixed flag."""

    min_cover: int
    max_minimal_cover: int
    unmixed: bool


def _maximal_independent_set_sizes(comp: Graph, budget_left: list):
    """Sizes (min, max) of maximal independent sets via Bron-Kerbosch with
    pivoting on the complement (cliques there are independent sets here)."""
    cadj = complement(comp).adj
    full = (1 << comp.n) - 1
    lo = comp.n + 1
    hi = -1

    def bk(rsize: int, p: int, x: int):
        nonlocal lo, hi
        if p == 0 and x == 0:
            budget_left[0] -= 1
            if budget_left[0] < 0:
                raise BudgetExceededError(
                    "maximal independent set enumeration budget exhausted")
            lo = min(lo, rsize)
            hi = max(hi, rsize)
            return
        pool = p | x
        pivot = max(bits(pool), key=lambda u: (cadj[u] & p).bit_count())
        for v in bits(p & ~cadj[pivot]):
            bk(rsize + 1, p & cadj[v], x & cadj[v])
            p &= ~(1 << v)
            x |= 1 << v

    bk(0, full, 0)
    return lo, hi


def cover_profile(g: Graph, budget: int = DEFAULT_MIS_BUDGET) -> CoverProfile:
    """Cover extremes by enumerating maximal independent sets per component.

    Isolated vertices sit in every maximal independent set and never in a
    minimal cover, so they contribute nothing; unmixedness of the whole graph
    is the conjunction over components.
    """
    min_cover = 0
    max_minimal = 0
    unmixed = True
    budget_left = [budget]
    for comp in connected_components(g).component_subgraphs:
        if comp.n == 1:
            continue
        lo, hi = _maximal_independent_set_sizes(comp, budget_left)
        min_cover += comp.n - hi
        max_minimal += comp.n - lo
        if lo != hi:
            unmixed = False
    return CoverProfile(min_cover, max_minimal, unmixed)


def tree_min_maximal_independent_set(g: Graph) -> int:
    """Minimum maximal (= independent dominating) set size on a forest."""
    if not is_forest(g):
        raise ValueError("requires a forest")
    INF = float("inf")
    total = 0
    for order, parent in _root_orders(g):
        a = {}   # v in the set
        b = {}   # v out, dominated by a child
        f = {}   # v out, domination deferred to the parent
        for v in reversed(order):
            children = [u for u in bits(g.adj[v]) if parent.get(u) == v]
            a[v] = 1 + sum(f[c] for c in children)
            base = sum(min(a[c], b[c]) for c in children)
            f[v] = base
            if children:
                force = min(a[c] - min(a[c], b[c]) for c in children)
                b[v] = base + force
            else:
                b[v] = INF
        root = order[0]
        total += int(min(a[root], b[root]))
    return total
