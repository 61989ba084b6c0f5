"""Exact solvers for matching, independence, colouring, domination and integrity.

Adjacency for independence and colouring means "an arc in either direction",
so those invariants coincide with the underlying graph's.  Vertices are
processed in natural label order, which fixes the tie-break between optimal
certificates.  The NP-hard solvers are branch-and-bound over bitsets and stay
practical to roughly 25 vertices; arc integrity is a 3^s subset DP per strong
component of order s, so it is meant for components up to about 12 vertices.
"""
from __future__ import annotations

from typing import Sequence

from .certificates import (
    ARC,
    VERTEX,
    ColoringCertificate,
    DominatingSetCertificate,
    IndependentSetCertificate,
    IntegrityCertificate,
    MatchingCertificate,
    PartitionCheck,
)
from .connectivity import strong_components
from .digraph import Arc, Digraph, delete_arcs, delete_vertices, sorted_labels
from .errors import NotAPartition

__all__ = [
    "maximum_matching",
    "max_independent_set",
    "chromatic_partition",
    "min_dominating_set",
    "vertex_integrity",
    "arc_integrity",
    "check_partition",
    "independence_number",
    "chromatic_number",
    "domination_number",
]


def _popcount(x: int) -> int:
    return bin(x).count("1")


def _bits(x: int):
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


class _Bitgraph:
    """Vertices renumbered in natural label order with adjacency bitmasks."""

    def __init__(self, D: Digraph):
        self.labels = sorted_labels(D.vertices)
        self.n = len(self.labels)
        idx = {v: i for i, v in enumerate(self.labels)}
        self.out = [0] * self.n
        self.inn = [0] * self.n
        for t, h in D.arcs:
            self.out[idx[t]] |= 1 << idx[h]
            self.inn[idx[h]] |= 1 << idx[t]
        self.adj = [self.out[i] | self.inn[i] for i in range(self.n)]
        self.full = (1 << self.n) - 1

    def names(self, mask: int) -> tuple:
        return tuple(self.labels[i] for i in _bits(mask))


# -- matching ---------------------------------------------------------------

def _edmonds(n: int, adj: list) -> list:
    """Maximum matching of an undirected graph (Edmonds' blossom algorithm)."""
    match = [-1] * n

    def find_path(root):
        used = [False] * n
        parent = [-1] * n
        base = list(range(n))
        used[root] = True
        queue = [root]
        head = 0

        def lca(a, b):
            seen = [False] * n
            while True:
                a = base[a]
                seen[a] = True
                if match[a] == -1:
                    break
                a = parent[match[a]]
            while True:
                b = base[b]
                if seen[b]:
                    return b
                b = parent[match[b]]

        def mark(v, b, child, blossom):
            while base[v] != b:
                blossom[base[v]] = blossom[base[match[v]]] = True
                parent[v] = child
                child = match[v]
                v = parent[match[v]]

        while head < len(queue):
            v = queue[head]
            head += 1
            for to in adj[v]:
                if base[v] == base[to] or match[v] == to:
                    continue
                if to == root or (match[to] != -1 and parent[match[to]] != -1):
                    cur = lca(v, to)
                    blossom = [False] * n
                    mark(v, cur, to, blossom)
                    mark(to, cur, v, blossom)
                    for i in range(n):
                        if blossom[base[i]]:
                            base[i] = cur
                            if not used[i]:
                                used[i] = True
                                queue.append(i)
                elif parent[to] == -1:
                    parent[to] = v
                    if match[to] == -1:
                        return to, parent
                    used[match[to]] = True
                    queue.append(match[to])
        return -1, parent

    for root in range(n):
        if match[root] != -1:
            continue
        v, parent = find_path(root)
        while v != -1:
            pv = parent[v]
            ppv = match[pv]
            match[v] = pv
            match[pv] = v
            v = ppv
    return match


def maximum_matching(D: Digraph) -> MatchingCertificate:
    """Maximum arc set with pairwise disjoint end-vertices.

    ``is_perfect`` means the matching covers every vertex.
    """
    g = _Bitgraph(D)
    adj = [list(_bits(g.adj[i])) for i in range(g.n)]
    mate = _edmonds(g.n, adj)
    arcs = []
    for i, j in enumerate(mate):
        if j > i:
            u, v = g.labels[i], g.labels[j]
            arcs.append(Arc(u, v) if D.has_arc(u, v) else Arc(v, u))
    perfect = 2 * len(arcs) == g.n
    return MatchingCertificate(tuple(arcs), is_maximum=True, is_perfect=perfect)


# -- independence -----------------------------------------------------------

def _clique_cover_bound(g: _Bitgraph, cand: int) -> int:
    """Greedy clique cover size of ``cand``: an upper bound on its independence number."""
    bound = 0
    while cand:
        i = (cand & -cand).bit_length() - 1
        clique = 1 << i
        common = g.adj[i] & cand
        while common:
            j = (common & -common).bit_length() - 1
            clique |= 1 << j
            common &= g.adj[j]
        cand &= ~clique
        bound += 1
    return bound


def _mis_mask(g: _Bitgraph, cand: int) -> int:
    best = 0
    best_size = 0

    def search(cur, size, cand):
        nonlocal best, best_size
        if not cand:
            if size > best_size:
                best, best_size = cur, size
            return
        if size + _popcount(cand) <= best_size:
            return
        if size + _clique_cover_bound(g, cand) <= best_size:
            return
        i = (cand & -cand).bit_length() - 1
        bit = 1 << i
        search(cur | bit, size + 1, cand & ~bit & ~g.adj[i])
        if g.adj[i] & cand:
            search(cur, size, cand & ~bit)

    search(0, 0, cand)
    return best


def max_independent_set(D: Digraph) -> IndependentSetCertificate:
    g = _Bitgraph(D)
    return IndependentSetCertificate(g.names(_mis_mask(g, g.full)))


def independence_number(D: Digraph) -> int:
    return max_independent_set(D).size


# -- colouring --------------------------------------------------------------

def _greedy_clique(g: _Bitgraph) -> list:
    best: list = []
    for start in range(g.n):
        clique = [start]
        cand = g.adj[start]
        while cand:
            j = max(_bits(cand), key=lambda k: _popcount(g.adj[k] & cand))
            clique.append(j)
            cand &= g.adj[j]
        if len(clique) > len(best):
            best = clique
    return best


def _dsatur(g: _Bitgraph) -> list:
    colour = [-1] * g.n
    for _ in range(g.n):
        i = _pick_dsatur(g, colour)
        used = {colour[j] for j in _bits(g.adj[i]) if colour[j] >= 0}
        c = 0
        while c in used:
            c += 1
        colour[i] = c
    return colour


def _pick_dsatur(g: _Bitgraph, colour: list) -> int:
    best, key = -1, None
    for i in range(g.n):
        if colour[i] >= 0:
            continue
        sat = len({colour[j] for j in _bits(g.adj[i]) if colour[j] >= 0})
        k = (sat, _popcount(g.adj[i]), -i)
        if key is None or k > key:
            best, key = i, k
    return best


def chromatic_partition(D: Digraph) -> ColoringCertificate:
    """Minimum colouring by DSATUR branch-and-bound, seeded with a clique."""
    g = _Bitgraph(D)
    if g.n == 0:
        return ColoringCertificate(())
    clique = _greedy_clique(g)
    lower = len(clique)
    best_col = _dsatur(g)
    best_k = max(best_col) + 1
    if best_k > lower:
        colour = [-1] * g.n
        for c, i in enumerate(clique):
            colour[i] = c

        def search(coloured, k):
            nonlocal best_col, best_k
            if coloured == g.n:
                if k < best_k:
                    best_col, best_k = list(colour), k
                return best_k == lower
            i = _pick_dsatur(g, colour)
            used = {colour[j] for j in _bits(g.adj[i]) if colour[j] >= 0}
            for c in range(k + 1):
                if c in used or c + 1 >= best_k:
                    continue
                colour[i] = c
                if search(coloured + 1, max(k, c + 1)):
                    return True
                colour[i] = -1
            return False

        search(len(clique), lower)
    classes: dict = {}
    for i in range(g.n):
        classes.setdefault(best_col[i], []).append(g.labels[i])
    # classes are listed by their first vertex in natural order
    ordered = sorted(classes.values(), key=lambda cls: g.labels.index(cls[0]))
    return ColoringCertificate(tuple(tuple(c) for c in ordered))


def chromatic_number(D: Digraph) -> int:
    return chromatic_partition(D).colors


# -- domination -------------------------------------------------------------

def min_dominating_set(D: Digraph) -> DominatingSetCertificate:
    """Smallest S such that every vertex outside S has an in-neighbour in S."""
    g = _Bitgraph(D)
    if g.n == 0:
        return DominatingSetCertificate(())
    closed = [g.out[i] | (1 << i) for i in range(g.n)]
    # vertex v is covered by choosing v or any in-neighbour of v
    coverers = [g.inn[i] | (1 << i) for i in range(g.n)]
    max_cover = max(_popcount(c) for c in closed)

    best = _greedy_domination(g, closed)
    best_size = _popcount(best)

    def search(chosen, size, covered):
        nonlocal best, best_size
        if covered == g.full:
            if size < best_size:
                best, best_size = chosen, size
            return
        todo = g.full & ~covered
        need = -(-_popcount(todo) // max_cover)
        if size + need >= best_size:
            return
        v = min(_bits(todo), key=lambda i: (_popcount(coverers[i]), i))
        for u in sorted(_bits(coverers[v]), key=lambda u: (-_popcount(closed[u] & todo), u)):
            search(chosen | (1 << u), size + 1, covered | closed[u])

    search(0, 0, 0)
    return DominatingSetCertificate(g.names(best))


def _greedy_domination(g: _Bitgraph, closed: list) -> int:
    chosen = covered = 0
    while covered != g.full:
        u = max(range(g.n), key=lambda i: (_popcount(closed[i] & ~covered), -i))
        chosen |= 1 << u
        covered |= closed[u]
    return chosen


def domination_number(D: Digraph) -> int:
    return min_dominating_set(D).size


# -- integrity --------------------------------------------------------------

def _vertex_integrity(D: Digraph) -> IntegrityCertificate:
    """Branch on vertices of a largest strong component.

    Any removal set that beats the incumbent must break every strong
    component of maximum order, so it contains a vertex inside the one
    picked here; exploring those extensions alone is therefore complete.
    """
    best_f: tuple = ()
    best_m = strong_components(D).max_order
    best_val = best_m
    seen = set()

    def search(f: tuple):
        nonlocal best_f, best_m, best_val
        key = frozenset(f)
        if key in seen:
            return
        seen.add(key)
        rest = delete_vertices(D, f)
        part = strong_components(rest)
        m = part.max_order
        if len(f) + m < best_val:
            best_f, best_m, best_val = f, m, len(f) + m
        if len(f) + 1 + 1 >= best_val or m <= 1:
            return
        big = next(c for c in part.components if len(c) == m)
        for v in rest.vertices:
            if v in big:
                search(f + (v,))

    search(())
    return IntegrityCertificate(VERTEX, tuple(sorted_labels(best_f)), best_m, best_val)


def _block_orders(out: list, k: int):
    """Cheapest ordering of vertex blocks of size <= k.

    Returns ``(cost, blocks)`` where cost counts arcs pointing from a later
    block back to an earlier one.
    """
    n = len(out)
    full = (1 << n) - 1
    inf = float("inf")
    f = [inf] * (full + 1)
    back = [0] * (full + 1)
    f[0] = 0
    for S in range(full + 1):
        base = f[S]
        if base == inf:
            continue
        into = [_popcount(out[v] & S) for v in range(n)]
        comp = full ^ S
        B = comp
        while B:
            if _popcount(B) <= k:
                c = base + sum(into[v] for v in _bits(B))
                if c < f[S | B]:
                    f[S | B] = c
                    back[S | B] = B
            B = (B - 1) & comp
    blocks = []
    S = full
    while S:
        blocks.append(back[S])
        S ^= back[S]
    return f[full], blocks[::-1]


def _arc_integrity(D: Digraph) -> IntegrityCertificate:
    """Exact arc integrity by dynamic programming over vertex subsets.

    After deleting F the strong components can be listed so that every
    surviving arc between them points forward.  Hence the least |F| that
    caps component order at k is the fewest backward arcs over ordered
    partitions into blocks of at most k vertices, and the value is the
    minimum of k plus that count.  Arcs between strong components never
    need removing, so each component is solved on its own.
    """
    comps = [sorted_labels(c) for c in strong_components(D).components if len(c) > 1]
    best_f: tuple = ()
    best_m = strong_components(D).max_order
    best_val = best_m
    for k in range(1, best_m):
        removed = []
        for comp in comps:
            if len(comp) <= k:
                continue
            idx = {v: i for i, v in enumerate(comp)}
            out = [0] * len(comp)
            for t, h in D.arcs:
                if t in idx and h in idx:
                    out[idx[t]] |= 1 << idx[h]
            _, blocks = _block_orders(out, k)
            pos = {}
            for i, blk in enumerate(blocks):
                for v in _bits(blk):
                    pos[comp[v]] = i
            removed += [a for a in D.arcs if a.tail in pos and a.head in pos and pos[a.tail] > pos[a.head]]
            if len(removed) + k >= best_val:
                break
        if len(removed) + k < best_val:
            m = strong_components(delete_arcs(D, removed)).max_order
            best_f, best_m, best_val = tuple(removed), m, len(removed) + m
    order = {a: i for i, a in enumerate(D.arcs)}
    return IntegrityCertificate(ARC, tuple(sorted(best_f, key=order.__getitem__)), best_m, best_val)


def vertex_integrity(D: Digraph) -> IntegrityCertificate:
    """``min |F| + m(D - F)`` over vertex sets F, m = largest strong component order."""
    return _vertex_integrity(D)


def arc_integrity(D: Digraph) -> IntegrityCertificate:
    """Same minimum taken over arc sets F."""
    return _arc_integrity(D)


# -- partite structure ------------------------------------------------------

def check_partition(D: Digraph, parts: Sequence) -> PartitionCheck:
    parts = tuple(tuple(p) for p in parts)
    flat = [v for p in parts for v in p]
    if len(set(flat)) != len(flat) or set(flat) != set(D.vertices) or any(not p for p in parts):
        raise NotAPartition("parts must be nonempty, disjoint and cover the vertex set")
    where = {v: i for i, p in enumerate(parts) for v in p}
    crossing = all(where[t] != where[h] for t, h in D.arcs)
    complete = crossing and all(
        D.adjacent(u, v)
        for i, p in enumerate(parts)
        for q in parts[i + 1:]
        for u in p
        for v in q
    )
    return PartitionCheck(parts, crossing, complete)
