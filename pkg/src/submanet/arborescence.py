"""Out-arborescences (directed spanning trees): roots, extraction, counting."""
from __future__ import annotations

from collections import deque

from .certificates import Arborescence
from .connectivity import reachable_set
from .digraph import Digraph, label_key
from .errors import NoArborescence

__all__ = [
    "Arborescence",
    "arborescence_roots",
    "extract_arborescence",
    "count_arborescences",
    "matrix_tree_count",
]


def arborescence_roots(D: Digraph) -> frozenset:
    n = len(D)
    return frozenset(r for r in D.vertices if len(reachable_set(D, r)) == n)


def extract_arborescence(D: Digraph, root: str) -> Arborescence:
    """Breadth-first arborescence from ``root``.

    Each vertex takes the label-smallest in-neighbour lying one level closer
    to the root, so the tree also realises every shortest root distance.
    """
    D.require(root)
    dist = {root: 0}
    q = deque([root])
    while q:
        v = q.popleft()
        for w in D.out_neighbors(v):
            if w not in dist:
                dist[w] = dist[v] + 1
                q.append(w)
    if len(dist) != len(D):
        missing = [v for v in D.vertices if v not in dist]
        raise NoArborescence(f"{root} does not reach {', '.join(missing)}")
    parent = {}
    for v in D.vertices:
        if v == root:
            continue
        eligible = [u for u in D.in_neighbors(v) if dist.get(u) == dist[v] - 1]
        parent[v] = min(eligible, key=label_key)
    return Arborescence(root, parent)


def count_arborescences(D: Digraph, root: str, method: str = "auto") -> int:
    """Number of spanning out-arborescences rooted at ``root``.

    ``method`` is ``"enumerate"`` (backtracking over parent choices),
    ``"matrix_tree"`` (Tutte's determinant) or ``"auto"``, which enumerates
    up to 10 vertices.
    """
    D.require(root)
    if method == "auto":
        method = "enumerate" if len(D) <= 10 else "matrix_tree"
    if method == "matrix_tree":
        return matrix_tree_count(D, root)
    if method != "enumerate":
        raise ValueError(f"unknown method {method!r}")
    others = [v for v in D.vertices if v != root]
    if any(D.in_degree(v) == 0 for v in others):
        return 0
    parent: dict = {}

    def closes_cycle(v, p):
        while p in parent:
            if p == v:
                return True
            p = parent[p]
        return p == v

    def assign(k):
        if k == len(others):
            return 1
        v = others[k]
        total = 0
        for p in D.in_neighbors(v):
            if closes_cycle(v, p):
                continue
            parent[v] = p
            total += assign(k + 1)
            del parent[v]
        return total

    return assign(0)


def matrix_tree_count(D: Digraph, root: str) -> int:
    """Tutte's directed matrix-tree theorem with an exact integer determinant."""
    others = [v for v in D.vertices if v != root]
    idx = {v: i for i, v in enumerate(others)}
    n = len(others)
    lap = [[0] * n for _ in range(n)]
    for v in others:
        lap[idx[v]][idx[v]] = D.in_degree(v)
    for t, h in D.arcs:
        if t in idx and h in idx:
            lap[idx[t]][idx[h]] -= 1
    return _bareiss_det(lap)


def _bareiss_det(m: list) -> int:
    n = len(m)
    if n == 0:
        return 1
    m = [row[:] for row in m]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if m[i][k] != 0), None)
            if swap is None:
                return 0
            m[k], m[swap] = m[swap], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
        prev = m[k][k]
    return sign * m[n - 1][n - 1]
