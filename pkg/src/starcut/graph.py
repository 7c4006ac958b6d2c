"""Core graph type and vertex-connectivity algorithms.

Vertices are integers 0..n-1.  Graphs are simple, undirected and immutable.
Adjacency is kept as one bitmask per vertex, so removing vertices never
requires relabeling: operations that work on a subgraph take the surviving
vertex set explicitly.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, Optional, Sequence


def _bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of mask in ascending order."""
    while mask:
        b = mask & -mask
        yield b.bit_length() - 1
        mask ^= b


class Graph:
    """Immutable simple graph on vertex set {0, ..., n-1}."""

    __slots__ = ("n", "_masks", "_m")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()) -> None:
        if n < 0:
            raise ValueError("vertex count must be nonnegative")
        masks = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            masks[u] |= 1 << v
            masks[v] |= 1 << u
        self.n = n
        self._masks = tuple(masks)
        self._m = sum(m.bit_count() for m in masks) // 2

    @classmethod
    def from_masks(cls, masks: Sequence[int]) -> "Graph":
        """Build a graph directly from per-vertex adjacency bitmasks."""
        g = object.__new__(cls)
        g.n = len(masks)
        g._masks = tuple(masks)
        g._m = sum(m.bit_count() for m in masks) // 2
        for v, m in enumerate(masks):
            if m >> g.n or (m >> v) & 1:
                raise ValueError("adjacency mask out of range or self-loop")
        for u, v_ in ((u, v) for u in range(g.n) for v in _bits(masks[u])):
            if not (masks[v_] >> u) & 1:
                raise ValueError("adjacency masks are not symmetric")
        return g

    # -- basic queries -------------------------------------------------

    @property
    def m(self) -> int:
        return self._m

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def vertices(self) -> range:
        return range(self.n)

    def edges(self) -> list[tuple[int, int]]:
        """All edges as sorted (u, v) pairs with u < v, in ascending order."""
        out = []
        for u in range(self.n):
            rest = self._masks[u] >> (u + 1)
            out.extend((u, u + 1 + w) for w in _bits(rest))
        return out

    def adj_mask(self, v: int) -> int:
        self._check(v)
        return self._masks[v]

    def degree(self, v: int) -> int:
        self._check(v)
        return self._masks[v].bit_count()

    def neighbors(self, v: int) -> frozenset[int]:
        self._check(v)
        return frozenset(_bits(self._masks[v]))

    def joint_neighborhood(self, vertices: Iterable[int]) -> frozenset[int]:
        """Union of the neighborhoods of the given vertices (must be nonempty)."""
        mask = 0
        seen = False
        for v in vertices:
            self._check(v)
            mask |= self._masks[v]
            seen = True
        if not seen:
            raise ValueError("joint neighborhood of an empty vertex set")
        return frozenset(_bits(mask))

    def has_edge(self, u: int, v: int) -> bool:
        self._check(u)
        self._check(v)
        return bool((self._masks[u] >> v) & 1)

    def is_complete(self) -> bool:
        return self._m == self.n * (self.n - 1) // 2

    def without_edge(self, u: int, v: int) -> "Graph":
        if not self.has_edge(u, v):
            raise ValueError(f"({u}, {v}) is not an edge")
        masks = list(self._masks)
        masks[u] &= ~(1 << v)
        masks[v] &= ~(1 << u)
        return Graph.from_masks(masks)

    def _check(self, v: int) -> None:
        if not (0 <= v < self.n):
            raise ValueError(f"vertex {v} out of range for n={self.n}")

    # -- traversal -----------------------------------------------------

    def _reach_mask(self, start_mask: int, alive: int) -> int:
        """Set of vertices reachable from start_mask inside alive."""
        masks = self._masks
        seen = start_mask & alive
        frontier = seen
        while frontier:
            nxt = 0
            for v in _bits(frontier):
                nxt |= masks[v]
            frontier = nxt & alive & ~seen
            seen |= frontier
        return seen

    def components(self, within: Optional[Iterable[int]] = None) -> list[frozenset[int]]:
        """Connected components, ordered by smallest member.

        With `within`, only the induced subgraph on those vertices is
        considered; vertex ids are preserved.
        """
        alive = self.full_mask if within is None else self._subset_mask(within)
        comps = []
        rem = alive
        while rem:
            seen = self._reach_mask(rem & -rem, alive)
            comps.append(frozenset(_bits(seen)))
            rem &= ~seen
        return comps

    def is_connected(self, within: Optional[Iterable[int]] = None) -> bool:
        alive = self.full_mask if within is None else self._subset_mask(within)
        if alive == 0:
            return False
        return self._reach_mask(alive & -alive, alive) == alive

    def _subset_mask(self, vertices: Iterable[int]) -> int:
        mask = 0
        for v in vertices:
            self._check(v)
            mask |= 1 << v
        return mask

    def distance(self, u: int, v: int) -> float:
        """Length of a shortest u-v path; math.inf if none exists."""
        self._check(u)
        self._check(v)
        if u == v:
            return 0
        masks = self._masks
        seen = 1 << u
        frontier = seen
        d = 0
        while frontier:
            d += 1
            nxt = 0
            for w in _bits(frontier):
                nxt |= masks[w]
            frontier = nxt & ~seen
            if (frontier >> v) & 1:
                return d
            seen |= frontier
        return math.inf

    def eccentricity(self, u: int) -> float:
        self._check(u)
        masks = self._masks
        seen = 1 << u
        frontier = seen
        d = 0
        while True:
            nxt = 0
            for w in _bits(frontier):
                nxt |= masks[w]
            frontier = nxt & ~seen
            if not frontier:
                break
            seen |= frontier
            d += 1
        if seen != self.full_mask:
            return math.inf
        return d

    def diameter(self) -> float:
        """Largest pairwise distance; math.inf when disconnected, 0 for n <= 1."""
        if self.n <= 1:
            return 0
        return max(self.eccentricity(u) for u in range(self.n))

    # -- dunder --------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self._masks == other._masks

    def __hash__(self) -> int:
        return hash((self.n, self._masks))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self._m})"


@dataclass(frozen=True)
class Path:
    """A simple path given by its vertex sequence."""

    vertices: tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.vertices:
            raise ValueError("a path has at least one vertex")
        if len(set(self.vertices)) != len(self.vertices):
            raise ValueError("path vertices repeat")

    @property
    def length(self) -> int:
        return len(self.vertices) - 1

    def interior(self) -> tuple[int, ...]:
        return self.vertices[1:-1]

    def is_path_in(self, g: Graph) -> bool:
        return all(g.has_edge(a, b) for a, b in zip(self.vertices, self.vertices[1:]))


# -- vertex-capacity max flow ------------------------------------------
#
# Every vertex v is split into an entry node 2v and an exit node 2v+1
# joined by a unit-capacity arc; each edge contributes two arcs of
# effectively unlimited capacity.  Flow value from exit(u) to entry(v)
# then equals the number of internally disjoint u-v paths (for u, v
# nonadjacent), and the residual cut uses only the unit vertex arcs.


class _FlowState:
    __slots__ = ("value", "to", "cap", "orig", "adj", "maxed", "n")

    def __init__(self, n: int) -> None:
        self.n = n
        self.value = 0
        self.to: list[int] = []
        self.cap: list[int] = []
        self.orig: list[int] = []
        self.adj: list[list[int]] = [[] for _ in range(2 * n)]
        self.maxed = False

    def add_arc(self, a: int, b: int, c: int) -> None:
        self.adj[a].append(len(self.to))
        self.to.append(b)
        self.cap.append(c)
        self.orig.append(c)
        self.adj[b].append(len(self.to))
        self.to.append(a)
        self.cap.append(0)
        self.orig.append(0)


def _run_flow(
    g: Graph, s: int, t: int, skip_edge: Optional[tuple[int, int]] = None, limit: Optional[int] = None
) -> _FlowState:
    """Max flow from exit(s) to entry(t); stops early once value exceeds limit."""
    n = g.n
    st = _FlowState(n)
    big = n + 1
    for v in range(n):
        st.add_arc(2 * v, 2 * v + 1, 1)
    skip = frozenset() if skip_edge is None else frozenset(skip_edge)
    for u, v in g.edges():
        if u in skip and v in skip:
            continue
        st.add_arc(2 * u + 1, 2 * v, big)
        st.add_arc(2 * v + 1, 2 * u, big)
    src, snk = 2 * s + 1, 2 * t
    to, cap, adj = st.to, st.cap, st.adj
    parent = [0] * (2 * n)
    while True:
        if limit is not None and st.value > limit:
            return st
        # BFS for an augmenting path
        seen = [False] * (2 * n)
        seen[src] = True
        queue = [src]
        found = False
        for a in queue:
            if found:
                break
            for arc in adj[a]:
                if cap[arc] > 0 and not seen[to[arc]]:
                    b = to[arc]
                    seen[b] = True
                    parent[b] = arc
                    if b == snk:
                        found = True
                        break
                    queue.append(b)
        if not found:
            st.maxed = True
            return st
        # augment by 1 (every path crosses a unit vertex arc)
        b = snk
        while b != src:
            arc = parent[b]
            cap[arc] -= 1
            cap[arc ^ 1] += 1
            b = to[arc ^ 1]
        st.value += 1


def local_connectivity(g: Graph, u: int, v: int) -> int:
    """Maximum number of internally disjoint u-v paths."""
    g._check(u)
    g._check(v)
    if u == v:
        raise ValueError("local connectivity needs two distinct vertices")
    if g.has_edge(u, v):
        return 1 + _run_flow(g, u, v, skip_edge=(u, v)).value
    return _run_flow(g, u, v).value


def internally_disjoint_paths(g: Graph, u: int, v: int) -> list[Path]:
    """A maximum family of internally disjoint u-v paths.

    Returns exactly local_connectivity(g, u, v) paths; deterministic.
    """
    g._check(u)
    g._check(v)
    if u == v:
        raise ValueError("path family needs two distinct endpoints")
    paths = []
    if g.has_edge(u, v):
        paths.append(Path((u, v)))
        st = _run_flow(g, u, v, skip_edge=(u, v))
    else:
        st = _run_flow(g, u, v)
    # flow per forward arc, then walk unit paths from the source
    flow = {}
    succ: dict[int, list[int]] = {}
    for arc in range(0, len(st.to), 2):
        f = st.orig[arc] - st.cap[arc]
        if f > 0:
            a, b = st.to[arc ^ 1], st.to[arc]
            flow[(a, b)] = f
            succ.setdefault(a, []).append(b)
    for lst in succ.values():
        lst.sort()
    src, snk = 2 * u + 1, 2 * v
    for _ in range(st.value):
        node = src
        verts = [u]
        while node != snk:
            nxt = next(b for b in succ[node] if flow[(node, b)] > 0)
            flow[(node, nxt)] -= 1
            if flow[(node, nxt)] == 0:
                succ[node].remove(nxt)
            if nxt % 2 == 0 and nxt != snk:
                verts.append(nxt // 2)
            node = nxt
        verts.append(v)
        paths.append(Path(tuple(verts)))
    return paths


def min_vertex_cut(g: Graph, u: int, v: int) -> frozenset[int]:
    """A minimum vertex set separating nonadjacent u and v (excludes both)."""
    g._check(u)
    g._check(v)
    if u == v:
        raise ValueError("cut needs two distinct vertices")
    if g.has_edge(u, v):
        raise ValueError("no vertex cut separates adjacent vertices")
    st = _run_flow(g, u, v)
    return _residual_cut(g, st, u)


def _residual_cut(g: Graph, st: _FlowState, u: int) -> frozenset[int]:
    to, cap, adj = st.to, st.cap, st.adj
    seen = [False] * (2 * g.n)
    src = 2 * u + 1
    seen[src] = True
    queue = [src]
    for a in queue:
        for arc in adj[a]:
            if cap[arc] > 0 and not seen[to[arc]]:
                seen[to[arc]] = True
                queue.append(to[arc])
    return frozenset(w for w in range(g.n) if seen[2 * w] and not seen[2 * w + 1])


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> tuple[Graph, list[int]]:
    """The induced subgraph on `vertices`, relabeled 0..k-1.

    Returns the new graph and the sorted original-id list; position i of the
    list is the original id of new vertex i.
    """
    order = sorted(set(vertices))
    for v in order:
        g._check(v)
    index = {v: i for i, v in enumerate(order)}
    edges = [
        (index[u], index[v])
        for u, v in g.edges()
        if u in index and v in index
    ]
    return Graph(len(order), edges), order


@lru_cache(maxsize=None)
def vertex_connectivity(g: Graph) -> int:
    """Vertex connectivity; n-1 for complete graphs, 0 when disconnected."""
    if g.n < 2:
        raise ValueError("connectivity needs at least two vertices")
    if g.is_complete():
        return g.n - 1
    best = min(g.degree(v) for v in range(g.n))
    for u in range(g.n):
        mask = g.adj_mask(u)
        for v in range(u + 1, g.n):
            if (mask >> v) & 1:
                continue
            st = _run_flow(g, u, v, limit=best - 1)
            if st.maxed and st.value < best:
                best = st.value
    return best


def global_min_cut(g: Graph) -> frozenset[int]:
    """A minimum vertex cut of a connected, noncomplete graph.

    Deterministic: scans nonadjacent pairs in ascending order and returns the
    residual cut of the first pair achieving the connectivity.
    """
    if g.n < 3:
        raise ValueError("a vertex cut needs at least three vertices")
    if g.is_complete():
        raise ValueError("complete graphs have no vertex cut")
    if not g.is_connected():
        raise ValueError("graph must be connected")
    k = vertex_connectivity(g)
    for u in range(g.n):
        mask = g.adj_mask(u)
        for v in range(u + 1, g.n):
            if (mask >> v) & 1:
                continue
            st = _run_flow(g, u, v, limit=k)
            if st.maxed and st.value == k:
                return _residual_cut(g, st, u)
    raise AssertionError("unreachable: some nonadjacent pair attains the connectivity")
