"""Existence rules for 3-vertex-star structure cuts, with certificates.

decide_existence dispatches on cheap graph features before falling back to
exhaustive search:

  * diameter >= 4: a cut always exists and is built constructively from a
    minimum cut between a diametral pair plus disjoint paths across it;
  * order 1 mod 3: greedy star deletion always terminates in a cut;
  * order 2 mod 3: a cut exists iff the graph is neither the 5-cycle nor
    complete;
  * order 0 mod 3: a vertex whose neighborhood avoids another pair's closed
    joint neighborhood forces a cut.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .errors import InvariantViolation
from .graph import Graph, internally_disjoint_paths, min_vertex_cut
from .stars import Star, StarFamily, is_structure_cut, struct_connectivity_exact

EXISTS = "Exists"
NOT_EXISTS = "NotExists"

RULE_DIAMETER = "DiameterRule"
RULE_MOD1 = "Mod1Greedy"
RULE_MOD2 = "Mod2Iff"
RULE_MOD0 = "Mod0Condition"
RULE_SEARCH = "ExhaustiveSearch"


@dataclass(frozen=True)
class Certificate:
    """Existence verdict plus the rule that produced it and any witness."""

    verdict: str
    rule: str
    witness: Optional[StarFamily] = None
    detail: str = ""

    @property
    def exists(self) -> bool:
        return self.verdict == EXISTS

    def to_obj(self) -> dict:
        return {
            "verdict": self.verdict,
            "rule": self.rule,
            "witness": None if self.witness is None else self.witness.to_obj(),
            "detail": self.detail,
        }

    @classmethod
    def from_obj(cls, obj: dict) -> "Certificate":
        wit = obj.get("witness")
        return cls(
            obj["verdict"],
            obj["rule"],
            None if wit is None else StarFamily.from_obj(wit),
            obj.get("detail", ""),
        )


def _require(g: Graph, n_min: int = 4) -> None:
    if g.n < n_min:
        raise ValueError(f"need at least {n_min} vertices, got {g.n}")
    if not g.is_connected():
        raise ValueError("graph must be connected")


def diameter_cut(g: Graph) -> StarFamily:
    """Structure cut for a connected graph of diameter at least 4.

    Takes a diametral pair (u, v), a minimum u-v separator, and a maximum
    family of internally disjoint u-v paths.  Each separator vertex lies on
    exactly one path, and every path is long enough that a 3-vertex window
    of its interior around that vertex avoids u and v.  The windows are the
    stars; u and v survive on opposite sides of the separator.
    """
    _require(g, 2)
    diam = g.diameter()
    if diam < 4:
        raise ValueError(f"diameter rule needs diameter >= 4, got {diam}")
    pair = next(
        (u, v)
        for u in range(g.n)
        for v in range(u + 1, g.n)
        if g.distance(u, v) == diam
    )
    u, v = pair
    cut = min_vertex_cut(g, u, v)
    paths = internally_disjoint_paths(g, u, v)
    stars = []
    for p in paths:
        inner = p.interior()
        hit = [i for i, w in enumerate(inner) if w in cut]
        if len(hit) != 1:
            raise InvariantViolation(
                f"path {p.vertices} meets the separator {sorted(cut)} {len(hit)} times"
            )
        j = hit[0]
        start = min(max(j - 1, 0), len(inner) - 3)
        a, b, c = inner[start : start + 3]
        stars.append(Star.make(b, (a, c)))
    family = StarFamily.of(stars)
    if not is_structure_cut(g, family):
        raise InvariantViolation("diameter construction failed to disconnect")
    return family


def greedy_cut_mod1(g: Graph) -> StarFamily:
    """Structure cut for connected graphs of order 1 mod 3.

    Deletes the least star of the remainder until it disconnects or shrinks
    to one vertex; the remainder order stays 1 mod 3, so a star always
    exists while the remainder is connected and larger than one vertex.
    """
    _require(g)
    if g.n % 3 != 1:
        raise ValueError(f"greedy rule needs order 1 mod 3, got n={g.n}")
    alive = g.full_mask
    stars: list[Star] = []
    while True:
        cnt = alive.bit_count()
        if cnt == 1 or g._reach_mask(alive & -alive, alive) != alive:
            family = StarFamily.of(stars)
            if not is_structure_cut(g, family):
                raise InvariantViolation("greedy deletion ended without a cut")
            return family
        star = _first_star_within(g, alive)
        if star is None:
            raise InvariantViolation("connected remainder of order > 1 has no star")
        stars.append(star)
        alive &= ~star.mask()


def _first_star_within(g: Graph, alive: int) -> Optional[Star]:
    for c in range(g.n):
        if not (alive >> c) & 1:
            continue
        nbrs = g.adj_mask(c) & alive
        if nbrs.bit_count() >= 2:
            lo = nbrs & -nbrs
            a = lo.bit_length() - 1
            rest = nbrs ^ lo
            b = (rest & -rest).bit_length() - 1
            return Star.make(c, (a, b))
    return None


def exists_mod2(g: Graph) -> bool:
    """Existence decision for connected graphs of order 2 mod 3: a cut
    exists iff the graph is neither the 5-cycle nor complete."""
    _require(g)
    if g.n % 3 != 2:
        raise ValueError(f"mod-2 rule needs order 2 mod 3, got n={g.n}")
    if g.is_complete():
        return False
    if g.n == 5 and all(g.degree(v) == 2 for v in range(5)):
        return False
    return True


def mod0_condition(g: Graph) -> Optional[tuple[int, int, int]]:
    """Least triple (u, v, w), v < w, of distinct vertices with N(u)
    disjoint from N(v) + N(w) + {v, w}; None if there is none."""
    _require(g)
    if g.n % 3 != 0:
        raise ValueError(f"mod-0 rule needs order 0 mod 3, got n={g.n}")
    for u in range(g.n):
        nu = g.adj_mask(u)
        for v in range(g.n):
            if v == u:
                continue
            for w in range(v + 1, g.n):
                if w == u:
                    continue
                closed = g.adj_mask(v) | g.adj_mask(w) | (1 << v) | (1 << w)
                if nu & closed == 0:
                    return (u, v, w)
    return None


def decide_existence(g: Graph) -> Certificate:
    """Existence certificate for a 3-vertex-star structure cut.

    Tries the constructive rules in a fixed order (diameter, then the order
    mod 3 rules) and falls back to exhaustive search.  Witnesses are always
    validated before being returned.
    """
    _require(g)
    if g.diameter() >= 4:
        fam = diameter_cut(g)
        return Certificate(EXISTS, RULE_DIAMETER, fam, f"diameter {g.diameter():.0f}")
    r = g.n % 3
    if r == 1:
        return Certificate(EXISTS, RULE_MOD1, greedy_cut_mod1(g), "order 1 mod 3")
    if r == 2:
        if not exists_mod2(g):
            why = "complete graph" if g.is_complete() else "5-cycle"
            return Certificate(NOT_EXISTS, RULE_MOD2, None, why)
        res = struct_connectivity_exact(g)
        if not res.found:
            raise InvariantViolation("mod-2 rule promised a cut but search found none")
        return Certificate(EXISTS, RULE_MOD2, res.witness, "neither 5-cycle nor complete")
    triple = mod0_condition(g)
    if triple is not None:
        res = struct_connectivity_exact(g)
        if not res.found:
            raise InvariantViolation("mod-0 condition promised a cut but search found none")
        return Certificate(
            EXISTS, RULE_MOD0, res.witness, f"triple u={triple[0]}, v={triple[1]}, w={triple[2]}"
        )
    res = struct_connectivity_exact(g)
    if res.found:
        return Certificate(EXISTS, RULE_SEARCH, res.witness, "found by search")
    return Certificate(NOT_EXISTS, RULE_SEARCH, None, "exhausted all families")
