"""Covering a minimum vertex cut by few vertex-disjoint 3-vertex stars.

Given a connected noncomplete graph and a minimum vertex cut X, the
pipeline builds a family of vertex-disjoint stars whose vertices contain X,
using at most |X| stars:

  1. pack stars inside the induced subgraph on X (three cut vertices per
     star);
  2. the leftover of X induces isolated vertices and single edges; each
     edge pair gets one outside third vertex (two cut vertices per star);
  3. each remaining singleton gets a star through one neighbor on each
     side of the cut, then shared endpoints are reduced to multiplicity
     at most two, merged pairwise via maximum matchings, and finally
     disentangled from the stage-2 stars by endpoint replacements.

Replacement loops are bounded and check strict progress; when a guaranteed
replacement vertex is missing the pipeline raises InvariantViolation
rather than silently repairing, so a genuine gap in the underlying
guarantees surfaces in test runs.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .errors import InvariantViolation
from .graph import Graph, global_min_cut, vertex_connectivity
from .matching import maximum_matching
from .stars import Star, StarFamily, maximal_star_packing


@dataclass(frozen=True)
class CutPartition:
    """A vertex cut split by the stage-1 packing: X = X1 | X2 | X3."""

    cut: frozenset[int]
    f1: StarFamily
    x1: frozenset[int]
    pairs: tuple[tuple[int, int], ...]
    x2: frozenset[int]
    x3: frozenset[int]


@dataclass
class CoverState:
    """Final state of the singleton-covering stages (3a-3e)."""

    s1: frozenset[int]
    s2: frozenset[int]
    f2: StarFamily
    f3: StarFamily
    m1: tuple[tuple[int, int], ...]
    m2: tuple[tuple[int, int], ...]
    trace: dict = field(default_factory=dict)


def _mask(vertices) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def split_sides(g: Graph, cut: frozenset[int]) -> tuple[frozenset[int], frozenset[int]]:
    """Group the components of g - cut into two nonempty sides.

    S1 is the component containing the lowest surviving vertex; S2 is the
    union of all other components.
    """
    comps = g.components(within=set(range(g.n)) - set(cut))
    if len(comps) < 2:
        raise ValueError("removing the given set leaves fewer than two components")
    s1 = comps[0]
    s2 = frozenset().union(*comps[1:])
    return s1, frozenset(s2)


def partition_cut(g: Graph, cut: frozenset[int]) -> CutPartition:
    """Stage-1/2 split of a cut: star packing, leftover matching, singletons."""
    for v in cut:
        g._check(v)
    outside = set(range(g.n)) - set(cut)
    f1 = maximal_star_packing(g, forbidden=outside)
    x1 = f1.covered()
    residue = sorted(set(cut) - x1)
    pairs = []
    x3 = []
    res_mask = _mask(residue)
    for comp in g.components(within=residue):
        if len(comp) == 1:
            x3.extend(comp)
        elif len(comp) == 2:
            pairs.append(tuple(sorted(comp)))
        else:
            raise InvariantViolation(
                f"stage-1 packing left a component of size {len(comp)} in the cut"
            )
    pairs.sort()
    part = CutPartition(
        cut=frozenset(cut),
        f1=f1,
        x1=frozenset(x1),
        pairs=tuple(pairs),
        x2=frozenset(v for p in pairs for v in p),
        x3=frozenset(x3),
    )
    # the leftover of a maximal packing cannot hide edges between its parts
    for z in part.x3:
        if g.adj_mask(z) & res_mask & ~(1 << z):
            raise InvariantViolation(f"singleton {z} is adjacent to the cut leftover")
    return part


def _pair_star(g: Graph, x: int, y: int, w: int) -> Star:
    """The star on a matched pair (x, y) plus third vertex w."""
    if g.has_edge(x, w):
        return Star.make(x, (y, w))
    if g.has_edge(y, w):
        return Star.make(y, (x, w))
    raise ValueError(f"{w} is adjacent to neither {x} nor {y}")


def cover_matched_pairs(g: Graph, part: CutPartition) -> StarFamily:
    """One star per matched pair: the pair edge plus an outside third vertex.

    Thirds are chosen greedily (least fresh neighbor of the pair, outside X1
    and everything already used); if a pass is forced to share a third, the
    earlier star's third is swapped to a fresh neighbor of its own pair.
    """
    x1mask = _mask(part.x1)
    stars: list[Star] = []
    thirds: list[int] = []
    for x, y in part.pairs:
        cand = (g.adj_mask(x) | g.adj_mask(y)) & ~x1mask & ~(1 << x) & ~(1 << y)
        used = _mask(t for s in stars for t in s.vertices())
        fresh = cand & ~used
        pick_from = fresh if fresh else cand & _mask(thirds)
        if not pick_from:
            raise InvariantViolation(
                f"pair ({x}, {y}) has no eligible third vertex; "
                "the cut is not minimum or the partition is invalid"
            )
        w = (pick_from & -pick_from).bit_length() - 1
        stars.append(_pair_star(g, x, y, w))
        thirds.append(w)
    # repair shared thirds, earliest star first
    for _ in range(g.n + 1):
        shared = [i for i, w in enumerate(thirds) if thirds.count(w) > 1]
        if not shared:
            break
        i = shared[0]
        x, y = part.pairs[i]
        used = _mask(t for s in stars for t in s.vertices())
        cand = (g.adj_mask(x) | g.adj_mask(y)) & ~x1mask & ~used
        if not cand:
            raise InvariantViolation(
                f"no replacement third for pair ({x}, {y}); "
                "the degree guarantee for minimum cuts failed"
            )
        w = (cand & -cand).bit_length() - 1
        stars[i] = _pair_star(g, x, y, w)
        thirds[i] = w
    else:
        raise InvariantViolation("third-vertex repair failed to converge")
    return StarFamily.of(stars)


def _family_mask(stars) -> int:
    m = 0
    for s in stars:
        m |= s.mask()
    return m


def _least(mask: int) -> int:
    return (mask & -mask).bit_length() - 1


def cover_singletons(
    g: Graph,
    part: CutPartition,
    f2: StarFamily,
    sides: tuple[frozenset[int], frozenset[int]],
) -> CoverState:
    """Cover the singleton cut vertices X3 by vertex-disjoint stars.

    Stages: (a) one star per singleton through a lowest-id neighbor on each
    side; (b) reduce endpoint multiplicity to at most two by swapping in
    fresh or lightly used neighbors; (c) merge stars sharing a vertex along
    a maximum matching; (d) merge remaining singleton stars whose centers
    see each other's stars, again along a maximum matching; (e) swap
    endpoints / pair-star thirds until the result is disjoint from the
    stage-2 stars.  Returns the covering together with the (possibly
    re-anchored) stage-2 family.
    """
    s1, s2 = sides
    s1mask, s2mask = _mask(s1), _mask(s2)
    x1mask = _mask(part.x1)
    x3set = part.x3
    f2list = list(f2.stars)
    trace: dict = {}

    # (a) initial covering: endpoints on both sides of the cut
    stars: list[Star] = []
    for z in sorted(x3set):
        a = g.adj_mask(z) & s1mask
        b = g.adj_mask(z) & s2mask
        if not a or not b:
            raise InvariantViolation(
                f"cut vertex {z} has no neighbor on one side; the cut is not minimum"
            )
        stars.append(Star.make(z, (_least(a), _least(b))))
    trace["initial"] = [s.to_obj() for s in stars]

    # (b) endpoint multiplicity down to <= 2
    def endpoint_counts() -> dict[int, int]:
        c: dict[int, int] = {}
        for s in stars:
            for v in s.leaves:
                c[v] = c.get(v, 0) + 1
        return c

    def overload(c: dict[int, int]) -> int:
        return sum(d - 2 for d in c.values() if d > 2)

    f2mask = _family_mask(f2list)
    for _ in range(2 * g.n + 8):
        c = endpoint_counts()
        if overload(c) == 0:
            break
        v = min(u for u, d in c.items() if d >= 3)
        hmask = _family_mask(stars)
        # any star holding v may give up its slot; take the first that can
        swap = None
        for i, s in enumerate(stars):
            if v not in s.leaves:
                continue
            z = s.center
            other = s.leaves[0] if s.leaves[1] == v else s.leaves[1]
            cand = g.adj_mask(z) & ~x1mask & ~f2mask & ~hmask
            if cand:
                swap = (i, z, other, _least(cand))
                break
            light = [
                u
                for u, d in c.items()
                if d == 1 and (g.adj_mask(z) >> u) & 1 and u != other
            ]
            if light:
                swap = (i, z, other, min(light))
                break
        if swap is None:
            raise InvariantViolation(
                f"no star holding {v} can release it; the degree guarantee failed"
            )
        i, z, other, w = swap
        before = overload(c)
        stars[i] = Star.make(z, (other, w))
        if overload(endpoint_counts()) >= before:
            raise InvariantViolation("endpoint reduction made no progress")
    else:
        raise InvariantViolation("endpoint reduction exceeded its bound")
    trace["reduced"] = [s.to_obj() for s in stars]

    # (c) merge stars sharing a vertex, along a maximum matching
    shared_edges = [
        (i, j)
        for i in range(len(stars))
        for j in range(i + 1, len(stars))
        if stars[i].mask() & stars[j].mask()
    ]
    m1 = tuple(maximum_matching(len(stars), shared_edges))
    merged: list[Star] = []
    taken: set[int] = set()
    for i, j in m1:
        u = _least(stars[i].mask() & stars[j].mask())
        merged.append(Star.make(u, (stars[i].center, stars[j].center)))
        taken.update((i, j))
    stars = sorted(merged + [s for i, s in enumerate(stars) if i not in taken])
    if not StarFamily.of(stars).is_vertex_disjoint():
        raise InvariantViolation("pairwise merge left overlapping stars")
    trace["merged_shared"] = [s.to_obj() for s in stars]

    # (d) merge singleton stars whose centers reach each other's stars
    singles_idx = [i for i, s in enumerate(stars) if s.center in x3set]
    cross_edges = []
    for a in range(len(singles_idx)):
        for b in range(a + 1, len(singles_idx)):
            i, j = singles_idx[a], singles_idx[b]
            wi, wj = stars[i].center, stars[j].center
            if g.adj_mask(wi) & stars[j].mask() or g.adj_mask(wj) & stars[i].mask():
                cross_edges.append((a, b))
    m2_local = maximum_matching(len(singles_idx), cross_edges)
    m2 = tuple((singles_idx[a], singles_idx[b]) for a, b in m2_local)
    merged2: list[Star] = []
    taken2: set[int] = set()
    for i, j in m2:
        wi, wj = stars[i].center, stars[j].center
        cand = (g.adj_mask(wi) & stars[j].mask()) | (g.adj_mask(wj) & stars[i].mask())
        merged2.append(Star.make(_least(cand), (wi, wj)))
        taken2.update((i, j))
    stars = sorted(merged2 + [s for i, s in enumerate(stars) if i not in taken2])
    if not StarFamily.of(stars).is_vertex_disjoint():
        raise InvariantViolation("center merge left overlapping stars")
    trace["merged_cross"] = [s.to_obj() for s in stars]

    # (e1) singleton stars must not touch the pair stars: swap endpoints out
    for _ in range(2 * g.n + 8):
        f2mask = _family_mask(f2list)
        bad = [
            (i, v)
            for i, s in enumerate(stars)
            if s.center in x3set
            for v in s.leaves
            if (f2mask >> v) & 1
        ]
        if not bad:
            break
        i, v = bad[0]
        z = stars[i].center
        other = stars[i].leaves[0] if stars[i].leaves[1] == v else stars[i].leaves[1]
        cand = g.adj_mask(z) & ~x1mask & ~f2mask & ~_family_mask(stars)
        if not cand:
            raise InvariantViolation(
                f"no fresh endpoint frees singleton star at {z} from the pair stars"
            )
        stars[i] = Star.make(z, (other, _least(cand)))
    else:
        raise InvariantViolation("singleton disentangling exceeded its bound")

    # (e2) merged stars caught on a pair star's third: re-anchor that third,
    # freeing a neighbor of the pair first when every candidate is taken
    pair_of = {}
    for k, s in enumerate(f2list):
        owners = [p for p in part.pairs if set(p) <= set(s.vertices())]
        if len(owners) != 1:
            raise InvariantViolation("pair star does not contain exactly one pair")
        pair_of[k] = owners[0]
    for _ in range(2 * g.n + 8):
        f2mask = _family_mask(f2list)
        bad2 = [
            (i, k)
            for i, s in enumerate(stars)
            if s.center not in x3set
            for k, f in enumerate(f2list)
            if (f.mask() >> s.center) & 1
        ]
        if not bad2:
            break
        i, k = bad2[0]
        x, y = pair_of[k]
        excl = x1mask | f2mask | _family_mask(stars)
        cand = g.adj_mask(y) & ~excl or g.adj_mask(x) & ~excl
        if cand:
            f2list[k] = _pair_star(g, x, y, _least(cand))
            continue
        freed = False
        for side in (y, x):
            nb = g.adj_mask(side)
            for i2, s2 in enumerate(stars):
                if s2.center not in x3set or not nb & _mask(s2.leaves):
                    continue
                e = _least(nb & _mask(s2.leaves))
                other2 = s2.leaves[0] if s2.leaves[1] == e else s2.leaves[1]
                cand2 = g.adj_mask(s2.center) & ~excl
                pool = cand2 & ~nb or cand2
                if not pool:
                    continue
                stars[i2] = Star.make(s2.center, (other2, _least(pool)))
                freed = True
                break
            if freed:
                break
        if not freed:
            raise InvariantViolation(
                f"cannot re-anchor pair star on ({x}, {y}); the degree guarantee failed"
            )
    else:
        raise InvariantViolation("pair-star re-anchoring exceeded its bound")
    trace["final"] = [s.to_obj() for s in stars]

    return CoverState(
        s1=s1,
        s2=s2,
        f2=StarFamily.of(f2list),
        f3=StarFamily.of(stars),
        m1=m1,
        m2=m2,
        trace=trace,
    )


def cover_min_cut(g: Graph) -> StarFamily:
    """Vertex-disjoint stars covering a minimum vertex cut, at most kappa many."""
    return cover_min_cut_detailed(g)[0]


def cover_min_cut_detailed(
    g: Graph,
) -> tuple[StarFamily, frozenset[int], tuple[frozenset[int], frozenset[int]], dict]:
    """As cover_min_cut, also returning the cut, the sides, and a stage trace."""
    if g.n < 4:
        raise ValueError(f"need at least 4 vertices, got {g.n}")
    if not g.is_connected():
        raise ValueError("graph must be connected")
    if g.is_complete():
        raise ValueError("complete graphs have no vertex cut to cover")
    k = vertex_connectivity(g)
    cut = global_min_cut(g)
    sides = split_sides(g, cut)
    if k == 1:
        (x,) = cut
        a = g.adj_mask(x) & _mask(sides[0])
        b = g.adj_mask(x) & _mask(sides[1])
        if not a or not b:
            raise InvariantViolation(f"cut vertex {x} has no neighbor on one side")
        family = StarFamily.of([Star.make(x, (_least(a), _least(b)))])
        return family, cut, sides, {"single_cut_vertex": family.to_obj()}
    for v in cut:
        if not g.adj_mask(v) & _mask(sides[0]) or not g.adj_mask(v) & _mask(sides[1]):
            raise InvariantViolation(
                f"minimum cut vertex {v} has no neighbor on one side"
            )
    part = partition_cut(g, cut)
    f2 = cover_matched_pairs(g, part)
    state = cover_singletons(g, part, f2, sides)
    family = StarFamily.of(tuple(part.f1) + tuple(state.f2) + tuple(state.f3))
    if not family.is_vertex_disjoint():
        raise InvariantViolation("covering stages produced overlapping stars")
    if not set(cut) <= set(family.covered()):
        raise InvariantViolation("covering stages missed part of the cut")
    if len(family) > k:
        raise InvariantViolation(f"covering uses {len(family)} stars for a {k}-cut")
    trace = {
        "cut": sorted(cut),
        "s1": sorted(sides[0]),
        "s2": sorted(sides[1]),
        "f1": part.f1.to_obj(),
        "pairs": [list(p) for p in part.pairs],
        "x3": sorted(part.x3),
        "f2": state.f2.to_obj(),
        "f3": state.f3.to_obj(),
        "stages": state.trace,
    }
    return family, cut, sides, trace
