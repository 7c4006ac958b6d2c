"""Stars, star families, and exact structure connectivity.

A star here is a copy of K_{1,m} inside a host graph: a center plus m
leaves, every leaf adjacent to the center.  A family of vertex-disjoint
stars is a structure cut when deleting all its vertices leaves the host
disconnected or reduces it to a single vertex.  The exact solver finds the
least number of disjoint stars achieving that, by exhaustive search.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Iterable, Iterator, Optional

from .graph import Graph, _bits, vertex_connectivity

FOUND = "Found"
NO_CUT = "NoCutExists"

# below this many eligible vertices, packings and matchings are exact
EXACT_SEARCH_LIMIT = 12


@dataclass(frozen=True, order=True)
class Star:
    """A K_{1,m} subgraph: center plus a sorted tuple of leaves."""

    center: int
    leaves: tuple[int, ...]

    @classmethod
    def make(cls, center: int, leaves: Iterable[int]) -> "Star":
        lv = tuple(sorted(leaves))
        if len(set(lv)) != len(lv) or center in lv:
            raise ValueError(f"star vertices repeat: center {center}, leaves {lv}")
        if not lv:
            raise ValueError("a star needs at least one leaf")
        return cls(center, lv)

    @property
    def arity(self) -> int:
        return len(self.leaves)

    def vertices(self) -> tuple[int, ...]:
        return tuple(sorted((self.center,) + self.leaves))

    def mask(self) -> int:
        m = 1 << self.center
        for v in self.leaves:
            m |= 1 << v
        return m

    def is_valid_in(self, g: Graph) -> bool:
        if not (0 <= self.center < g.n):
            return False
        adj = g.adj_mask(self.center)
        return all(0 <= v < g.n and (adj >> v) & 1 for v in self.leaves)

    def to_obj(self) -> dict:
        return {"center": self.center, "leaves": list(self.leaves)}

    @classmethod
    def from_obj(cls, obj: dict) -> "Star":
        return cls.make(obj["center"], obj["leaves"])


@dataclass(frozen=True)
class StarFamily:
    """An ordered family of stars of one arity; possibly overlapping."""

    stars: tuple[Star, ...]
    arity: int = 2

    def __post_init__(self) -> None:
        for s in self.stars:
            if s.arity != self.arity:
                raise ValueError(f"star {s} does not have arity {self.arity}")

    @classmethod
    def of(cls, stars: Iterable[Star], arity: int = 2) -> "StarFamily":
        return cls(tuple(sorted(stars)), arity)

    def __len__(self) -> int:
        return len(self.stars)

    def __iter__(self) -> Iterator[Star]:
        return iter(self.stars)

    def covered(self) -> frozenset[int]:
        out: set[int] = set()
        for s in self.stars:
            out.update(s.vertices())
        return frozenset(out)

    def mask(self) -> int:
        m = 0
        for s in self.stars:
            m |= s.mask()
        return m

    def multiplicity(self, v: int) -> int:
        return sum(1 for s in self.stars if v == s.center or v in s.leaves)

    def is_vertex_disjoint(self) -> bool:
        total = sum(len(s.leaves) + 1 for s in self.stars)
        return len(self.covered()) == total

    def is_valid_in(self, g: Graph) -> bool:
        return all(s.is_valid_in(g) for s in self.stars)

    def to_obj(self) -> list[dict]:
        return [s.to_obj() for s in self.stars]

    @classmethod
    def from_obj(cls, obj: list[dict], arity: int = 2) -> "StarFamily":
        return cls(tuple(Star.from_obj(o) for o in obj), arity)


@dataclass(frozen=True)
class StructResult:
    """Outcome of the exact solver: a value plus witness, or nonexistence."""

    status: str
    value: Optional[int] = None
    witness: Optional[StarFamily] = None

    @property
    def found(self) -> bool:
        return self.status == FOUND

    def to_obj(self) -> dict:
        return {
            "status": self.status,
            "value": self.value,
            "witness": None if self.witness is None else self.witness.to_obj(),
        }


def enumerate_stars(g: Graph, m: int = 2) -> list[Star]:
    """Every K_{1,m} subgraph, sorted by (center, leaves)."""
    if m < 1:
        raise ValueError("arity must be positive")
    out = []
    for c in range(g.n):
        nbrs = sorted(_bits(g.adj_mask(c)))
        if len(nbrs) >= m:
            out.extend(Star(c, lv) for lv in combinations(nbrs, m))
    return out


def _removal_cuts(g: Graph, removed_mask: int) -> bool:
    """True iff deleting removed_mask leaves >= 2 components or one vertex."""
    alive = g.full_mask & ~removed_mask
    cnt = alive.bit_count()
    if cnt == 0:
        return False
    if cnt == 1:
        return True
    return g._reach_mask(alive & -alive, alive) != alive


def is_structure_cut(g: Graph, family: StarFamily) -> bool:
    """Validate the family and test whether removing it disconnects the host.

    Raises ValueError for families that are not vertex-disjoint valid stars.
    """
    if not family.is_valid_in(g):
        raise ValueError("family contains a star that is not a subgraph")
    if not family.is_vertex_disjoint():
        raise ValueError("family stars overlap")
    if len(family) == 0:
        return _removal_cuts(g, 0)
    return _removal_cuts(g, family.mask())


def maximal_star_packing(
    g: Graph, forbidden: Iterable[int] = (), m: int = 2
) -> StarFamily:
    """Vertex-disjoint stars avoiding `forbidden`.

    On at most EXACT_SEARCH_LIMIT eligible vertices this is a maximum
    packing (exhaustive, lexicographically least); otherwise it is greedy
    inclusion-maximal over the canonical star order.
    """
    banned = 0
    for v in forbidden:
        g._check(v)
        banned |= 1 << v
    eligible = g.full_mask & ~banned
    cands = [s for s in enumerate_stars(g, m) if s.mask() & banned == 0]
    if eligible.bit_count() <= EXACT_SEARCH_LIMIT:
        best: list[Star] = []
        chosen: list[Star] = []

        def extend(idx: int, used: int) -> None:
            nonlocal best
            if len(chosen) > len(best):
                best = chosen.copy()
            for i in range(idx, len(cands)):
                if len(chosen) + (len(cands) - i) <= len(best):
                    break
                sm = cands[i].mask()
                if sm & used == 0:
                    chosen.append(cands[i])
                    extend(i + 1, used | sm)
                    chosen.pop()

        extend(0, 0)
        return StarFamily.of(best, m)
    picked = []
    used = 0
    for s in cands:
        sm = s.mask()
        if sm & used == 0:
            picked.append(s)
            used |= sm
    return StarFamily.of(picked, m)


def struct_connectivity_exact(g: Graph, m: int = 2, pure: bool = False) -> StructResult:
    """Least size of a vertex-disjoint K_{1,m} family whose removal
    disconnects g or leaves a single vertex.

    Iterative deepening over family sizes; witnesses are lexicographically
    least over the sorted star list.  With pure=False the search starts at
    the size forced by the vertex connectivity (a disconnecting family must
    delete at least that many vertices); results are identical either way.
    """
    if g.n < 3:
        raise ValueError("structure connectivity needs at least three vertices")
    if not g.is_connected():
        raise ValueError("graph must be connected")
    return _struct_exact_cached(g, m, pure)


@lru_cache(maxsize=None)
def _struct_exact_cached(g: Graph, m: int, pure: bool) -> StructResult:
    t_max = (g.n - 1) // (m + 1)
    t_min = 1 if pure else max(1, -(-vertex_connectivity(g) // (m + 1)))
    stars = enumerate_stars(g, m)
    masks = [s.mask() for s in stars]
    count = len(stars)
    reach = g._reach_mask
    full = g.full_mask

    def search(t: int) -> Optional[tuple[Star, ...]]:
        picked: list[int] = []

        def walk(idx: int, used: int) -> Optional[tuple[Star, ...]]:
            if len(picked) == t:
                alive = full & ~used
                cnt = alive.bit_count()
                if cnt == 1 or (cnt > 1 and reach(alive & -alive, alive) != alive):
                    return tuple(stars[i] for i in picked)
                return None
            for i in range(idx, count - (t - len(picked)) + 1):
                if masks[i] & used == 0:
                    picked.append(i)
                    hit = walk(i + 1, used | masks[i])
                    if hit is not None:
                        return hit
                    picked.pop()
            return None

        return walk(0, 0)

    for t in range(t_min, t_max + 1):
        win = search(t)
        if win is not None:
            return StructResult(FOUND, t, StarFamily.of(win, m))
    return StructResult(NO_CUT)
