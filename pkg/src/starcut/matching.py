"""Maximum matching on small graphs given as edge lists.

Exhaustive search below a size threshold (shared with the star packing
limit) yields the lexicographically least maximum matching; larger inputs
use the standard blossom-contraction augmenting algorithm.
"""
from __future__ import annotations

from .stars import EXACT_SEARCH_LIMIT


def maximum_matching(n: int, edges: list[tuple[int, int]]) -> list[tuple[int, int]]:
    """A maximum matching of the graph on 0..n-1 with the given edges."""
    edges = sorted((min(u, v), max(u, v)) for u, v in edges)
    touched = {v for e in edges for v in e}
    if len(touched) <= EXACT_SEARCH_LIMIT:
        return _exhaustive(edges)
    return _blossom(n, edges)


def _exhaustive(edges: list[tuple[int, int]]) -> list[tuple[int, int]]:
    best: list[tuple[int, int]] = []
    chosen: list[tuple[int, int]] = []

    def walk(idx: int, used: set[int]) -> None:
        nonlocal best
        if len(chosen) > len(best):
            best = chosen.copy()
        for i in range(idx, len(edges)):
            if len(chosen) + (len(edges) - i) <= len(best):
                break
            u, v = edges[i]
            if u not in used and v not in used:
                chosen.append(edges[i])
                used.add(u)
                used.add(v)
                walk(i + 1, used)
                used.discard(u)
                used.discard(v)
                chosen.pop()

    walk(0, set())
    return best


def _blossom(n: int, edges: list[tuple[int, int]]) -> list[tuple[int, int]]:
    adj: list[list[int]] = [[] for _ in range(n)]
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    match = [-1] * n
    parent = [0] * n
    base = [0] * n

    def lca(a: int, b: int) -> int:
        used = [False] * n
        while True:
            a = base[a]
            used[a] = True
            if match[a] == -1:
                break
            a = parent[match[a]]
        while True:
            b = base[b]
            if used[b]:
                return b
            b = parent[match[b]]

    def mark_path(v: int, b: int, child: int, blossom: list[bool]) -> None:
        while base[v] != b:
            blossom[base[v]] = True
            blossom[base[match[v]]] = True
            parent[v] = child
            child = match[v]
            v = parent[match[v]]

    def find_path(root: int) -> int:
        used = [False] * n
        for i in range(n):
            parent[i] = -1
            base[i] = i
        used[root] = True
        queue = [root]
        for v in queue:
            for to in adj[v]:
                if base[v] == base[to] or match[v] == to:
                    continue
                if to == root or (match[to] != -1 and parent[match[to]] != -1):
                    b = lca(v, to)
                    blossom = [False] * n
                    mark_path(v, b, to, blossom)
                    mark_path(to, b, v, blossom)
                    for i in range(n):
                        if blossom[base[i]]:
                            base[i] = b
                            if not used[i]:
                                used[i] = True
                                queue.append(i)
                elif parent[to] == -1:
                    parent[to] = v
                    if match[to] == -1:
                        # augment along the alternating path ending here
                        while to != -1:
                            v2 = parent[to]
                            nxt = match[v2]
                            match[v2] = to
                            match[to] = v2
                            to = nxt
                        return 1
                    used[match[to]] = True
                    queue.append(match[to])
        return 0

    for v in range(n):
        if match[v] == -1:
            find_path(v)
    out = [(v, match[v]) for v in range(n) if match[v] > v]
    return sorted(out)
