"""Chordality-family predicates and chordless cycle counting.

``is_chordal`` runs maximum cardinality search and verifies the elimination
order, after collapsing true-twin classes (vertices with equal closed
neighborhoods), which preserves chordality and shrinks the nearly-complete
complements that dominate the dense experiment regimes.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph_core import Graph, bits, complement, delete_closed_neighborhood

# Twin collapsing costs a hash pass; below this size MCS wins outright.
_REDUCE_MIN_VERTICES = 24


def _true_twin_reduced(g: Graph) -> Graph:
    """Keep one vertex per closed-neighborhood class, drop isolated vertices.

    A chordless cycle of length >= 4 never contains two true twins, so the
    reduced graph is chordal (and induced-C4-free) iff g is.
    """
    while True:
        classes: dict[int, int] = {}
        keep = []
        for v in range(g.n):
            row = g.adj[v]
            if row == 0:
                continue
            closed = row | (1 << v)
            if closed not in classes:
                classes[closed] = v
                keep.append(v)
        if len(keep) == g.n:
            return g
        index = {v: i for i, v in enumerate(keep)}
        adj = [0] * len(keep)
        for i, v in enumerate(keep):
            row = g.adj[v]
            acc = 0
            for u in bits(row):
                j = index.get(u)
                if j is not None:
                    acc |= 1 << j
            adj[i] = acc & ~(1 << i)
        g = Graph(len(keep), tuple(adj))
        if g.n < _REDUCE_MIN_VERTICES:
            return g


def _mcs_order(g: Graph) -> list[int]:
    """Maximum cardinality search visit order (ties to the lowest vertex)."""
    n = g.n
    weight = [0] * n
    buckets: list[list[int]] = [list(range(n - 1, -1, -1))]
    placed = [False] * n
    maxw = 0
    order = []
    for _ in range(n):
        while True:
            bucket = buckets[maxw]
            while bucket and placed[bucket[-1]]:
                bucket.pop()
            if bucket:
                break
            maxw -= 1
        v = buckets[maxw].pop()
        placed[v] = True
        order.append(v)
        for u in bits(g.adj[v]):
            if not placed[u]:
                weight[u] += 1
                w = weight[u]
                if w == len(buckets):
                    buckets.append([])
                buckets[w].append(u)
                if w > maxw:
                    maxw = w
    return order


def _verify_mcs_order(g: Graph, order: list[int]) -> bool:
    """Check the reverse of the MCS visit order is a perfect elimination order."""
    pos = [0] * g.n
    for i, v in enumerate(order):
        pos[v] = i
    earlier = 0  # bitmask of vertices visited before the current one
    for v in order:
        back = g.adj[v] & earlier
        if back:
            u = max(bits(back), key=lambda w: pos[w])
            rest = back & ~(1 << u)
            if rest & ~g.adj[u]:
                return False
        earlier |= 1 << v
    return True


def is_chordal(g: Graph) -> bool:
    """True iff every cycle of length >= 4 has a chord."""
    if g.n >= _REDUCE_MIN_VERTICES:
        g = _true_twin_reduced(g)
    if g.n <= 3:
        return True
    return _verify_mcs_order(g, _mcs_order(g))


def has_induced_c4(g: Graph) -> bool:
    """True iff some four vertices induce exactly a 4-cycle."""
    if g.n >= _REDUCE_MIN_VERTICES:
        g = _true_twin_reduced(g)
    if g.n < 4:
        return False
    # An induced C4 is a path u-v-w (u,w non-adjacent) plus a common
    # neighbor of u,w outside N[v]; scan path centers v.
    for v in range(g.n):
        nbrs = list(bits(g.adj[v]))
        if len(nbrs) < 2:
            continue
        block = g.adj[v] | (1 << v)
        for i, u in enumerate(nbrs):
            au = g.adj[u]
            for w in nbrs[i + 1:]:
                if au >> w & 1:
                    continue
                if au & g.adj[w] & ~block:
                    return True
    return False


def is_cochordal(g: Graph) -> bool:
    return is_chordal(complement(g))


def is_4_cochordal(g: Graph) -> bool:
    """Equivalent to gap-freeness of g."""
    return not has_induced_c4(complement(g))


def is_locally_cochordal(g: Graph) -> bool:
    """Every closed-neighborhood deletion leaves a cochordal graph."""
    return all(is_cochordal(delete_closed_neighborhood(g, v))
               for v in range(g.n))


def is_locally_4_cochordal(g: Graph) -> bool:
    return all(is_4_cochordal(delete_closed_neighborhood(g, v))
               for v in range(g.n))


@dataclass(frozen=True)
class ChordlessCycleCount:
    """Counts of chordless k-cycles for 4 <= k <= truncation_length."""

    by_length: dict[int, int]
    truncation_length: int

    def total(self) -> int:
        return sum(self.by_length.values())


def count_chordless_cycles(g: Graph, k_max: int) -> ChordlessCycleCount:
    """Exact chordless (induced) cycle counts by length, each counted once.

    DFS over induced paths with canonical start: the cycle's smallest vertex
    first, and the smaller of its two cycle-neighbors as the second vertex.
    """
    if k_max < 4:
        raise ValueError("k_max must be >= 4")
    counts = {k: 0 for k in range(4, k_max + 1)}
    adj = g.adj

    for s in range(g.n):
        sn = adj[s]
        above = -1 << (s + 1)  # vertices > s
        starts = list(bits(sn & above))
        if len(starts) < 2:
            continue
        for v1 in starts:
            # Paths s-v1-...-last with every vertex > s.  The candidate mask
            # holds vertices not on the path and non-adjacent to the interior
            # vertices v1..second-to-last; adjacency to s or to last is
            # unconstrained until used.
            stack = [((v1,), above & ~(1 << v1))]
            while stack:
                path, cand = stack.pop()
                last = path[-1]
                length = len(path) + 1  # vertices on the path, counting s
                for u in bits(cand & adj[last]):
                    if sn >> u & 1:
                        # u closes a cycle of length+1 vertices; chords to the
                        # interior are excluded by cand, the s-edge is the
                        # closing edge.  Count each cycle once: smaller
                        # s-neighbor first.
                        if 3 <= length <= k_max - 1 and u > v1:
                            counts[length + 1] += 1
                    elif length + 2 <= k_max:
                        stack.append((path + (u,),
                                      cand & ~adj[last] & ~(1 << u)))
    return ChordlessCycleCount(counts, k_max)


def count_triangles(g: Graph) -> int:
    """Number of triangles (3-cycles)."""
    total = 0
    for u, v in g.edges():
        total += (g.adj[u] & g.adj[v]).bit_count()
    return total // 3
