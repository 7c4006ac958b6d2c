"""Property checks tying the constructions to the exact solver.

Each check is a pure function on a graph; verify_graph runs a selected set
and produces a VerificationRecord suitable for JSONL persistence.  The
refinement turns a covering of a minimum vertex cut into a structure cut by
local star replacements, falling back to the exact solver only when no
replacement applies; the fallback is flagged so corpus runs can report how
often the constructive path sufficed.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Callable, Iterable, Optional

from .covering import cover_min_cut_detailed
from .errors import InvariantViolation
from .existence import (
    decide_existence,
    diameter_cut,
    exists_mod2,
    greedy_cut_mod1,
    mod0_condition,
)
from .formats import to_graph6
from .graph import Graph, _bits, induced_subgraph, vertex_connectivity
from .stars import (
    FOUND,
    Star,
    StarFamily,
    StructResult,
    is_structure_cut,
    struct_connectivity_exact,
)

PASS = "pass"
FAIL = "fail"
SKIP = "skip"


@dataclass
class VerificationRecord:
    """Outcome of the property checks on one graph."""

    graph_id: str
    n: int
    m: int
    kappa: int
    struct_kappa: Optional[int]
    certificate_rule: str
    checks: dict = field(default_factory=dict)
    refinement_fallback: bool = False
    error: Optional[str] = None

    @property
    def failed(self) -> list[str]:
        return [name for name, c in self.checks.items() if c["status"] == FAIL]

    def to_obj(self) -> dict:
        obj = {
            "graph_id": self.graph_id,
            "n": self.n,
            "m": self.m,
            "kappa": self.kappa,
            "struct_kappa": self.struct_kappa,
            "certificate_rule": self.certificate_rule,
            "checks": self.checks,
            "refinement_fallback": self.refinement_fallback,
        }
        if self.error is not None:
            obj["error"] = self.error
        return obj

    @classmethod
    def from_obj(cls, obj: dict) -> "VerificationRecord":
        return cls(
            graph_id=obj["graph_id"],
            n=obj["n"],
            m=obj["m"],
            kappa=obj["kappa"],
            struct_kappa=obj.get("struct_kappa"),
            certificate_rule=obj.get("certificate_rule", ""),
            checks=obj.get("checks", {}),
            refinement_fallback=obj.get("refinement_fallback", False),
            error=obj.get("error"),
        )


def _pass() -> dict:
    return {"status": PASS}


def _fail(witness) -> dict:
    return {"status": FAIL, "witness": witness}


def _skip(reason: str) -> dict:
    return {"status": SKIP, "reason": reason}


# -- refinement ---------------------------------------------------------


@dataclass(frozen=True)
class RefinementResult:
    family: StarFamily
    fallback: bool
    iterations: int


def _star_on(g: Graph, vertices: Iterable[int]) -> Optional[Star]:
    """A valid star on exactly this 3-vertex set, least center first."""
    vs = sorted(set(vertices))
    if len(vs) != 3:
        return None
    for c in vs:
        leaves = [v for v in vs if v != c]
        if all(g.has_edge(c, v) for v in leaves):
            return Star.make(c, leaves)
    return None


def _inner_cut_star(g: Graph, hmask: int) -> Optional[Star]:
    """Least star inside the vertex set hmask whose removal cuts it."""
    for c in sorted(_bits(hmask)):
        nbrs = sorted(_bits(g.adj_mask(c) & hmask))
        for a, b in combinations(nbrs, 2):
            rest = hmask & ~((1 << c) | (1 << a) | (1 << b))
            count = bin(rest).count("1")
            if count == 0:
                continue
            if count == 1 or not g.is_connected(within=_bits(rest)):
                return Star.make(c, (a, b))
    return None


def _is_cut_family(g: Graph, stars: list[Star]) -> bool:
    fam = StarFamily.of(stars)
    if not fam.is_vertex_disjoint() or not fam.is_valid_in(g):
        return False
    return is_structure_cut(g, fam)


def refine_to_structure_cut(
    g: Graph,
    family: StarFamily,
    cut: frozenset[int],
    sides: tuple[frozenset[int], frozenset[int]],
) -> StarFamily:
    """Turn a covering of a minimum cut into a structure cut of size <= kappa."""
    return refine_detailed(g, family, cut, sides).family


def refine_detailed(
    g: Graph,
    family: StarFamily,
    cut: frozenset[int],
    sides: tuple[frozenset[int], frozenset[int]],
) -> RefinementResult:
    """As refine_to_structure_cut, also reporting whether the exact solver
    had to replace the constructive path and how many rewrites ran."""
    k = vertex_connectivity(g)
    xmask = 0
    for v in cut:
        xmask |= 1 << v
    side_masks = []
    for side in sides:
        m = 0
        for v in side:
            m |= 1 << v
        side_masks.append(m)
    stars = list(family)

    for it in range(g.n):
        if stars and _is_cut_family(g, stars) and len(stars) <= k:
            return RefinementResult(StarFamily.of(stars), False, it)
        if not _transform_once(g, stars, xmask, side_masks):
            break
    if stars and _is_cut_family(g, stars) and len(stars) <= k:
        return RefinementResult(StarFamily.of(stars), False, g.n)

    result = struct_connectivity_exact(g)
    if not result.found:
        raise ValueError("graph has no structure cut; gate on decide_existence")
    if result.value > k:
        raise InvariantViolation(
            f"minimum structure cut needs {result.value} stars but kappa is {k}"
        )
    return RefinementResult(result.witness, True, g.n)


def _transform_once(
    g: Graph, stars: list[Star], xmask: int, side_masks: list[int]
) -> bool:
    """Apply one case rewrite in place; False when none applies."""
    used = 0
    for s in stars:
        used |= s.mask()
    hmask = g.full_mask & ~used
    if hmask == 0:
        return False
    in_s1 = bool(hmask & side_masks[0])
    in_s2 = bool(hmask & side_masks[1])
    if in_s1 and in_s2:
        return False
    near = side_masks[0] if in_s1 else side_masks[1]
    far = side_masks[1] if in_s1 else side_masks[0]

    def composition(s: Star) -> tuple[int, int, int]:
        m = s.mask()
        return (
            bin(m & xmask).count("1"),
            bin(m & far).count("1"),
            bin(m & near).count("1"),
        )

    f_a = sorted(s for s in stars if composition(s) == (2, 1, 0))
    f_b = sorted(s for s in stars if composition(s) == (1, 2, 0))
    f_c = sorted(s for s in stars if composition(s) == (1, 1, 1))

    if f_a:
        return _rewrite_two_cut_vertices(g, stars, f_a[0], xmask, far, hmask)
    if f_b:
        return _rewrite_two_far_vertices(g, stars, f_b[0], xmask, far, hmask)
    if f_c:
        return _rewrite_one_each_side(g, stars, f_c[0], xmask, far, near, hmask)
    return False


def _replace(stars: list[Star], old: Star, new: list[Star]) -> bool:
    i = stars.index(old)
    stars[i : i + 1] = new
    return True


def _rewrite_two_cut_vertices(
    g: Graph, stars: list[Star], star: Star, xmask: int, far: int, hmask: int
) -> bool:
    """Star covering two cut vertices w1, w2 and one far-side vertex u."""
    h_graph, _ = induced_subgraph(g, _bits(hmask))
    if h_graph.n >= 2 and h_graph.is_connected() and not h_graph.is_complete():
        if vertex_connectivity(h_graph) == 1:
            inner = _inner_cut_star(g, hmask)
            if inner is not None:
                stars.append(inner)
                return True
    w1, w2 = sorted(_bits(star.mask() & xmask))
    u = next(_bits(star.mask() & far))
    n1 = g.adj_mask(w1) & hmask
    n2 = g.adj_mask(w2) & hmask
    if not n1 and not n2:
        return _replace(stars, star, [])
    if g.has_edge(w1, w2):
        u2 = next(_bits(n1 | n2))
        new = _star_on(g, (w1, w2, u2))
        return new is not None and _replace(stars, star, [new])
    if n1 and not n2:
        new = _star_on(g, (w1, u, next(_bits(n1))))
        return new is not None and _replace(stars, star, [new])
    if n2 and not n1:
        new = _star_on(g, (w2, u, next(_bits(n2))))
        return new is not None and _replace(stars, star, [new])
    common = n1 & n2
    if common:
        new = _star_on(g, (w1, next(_bits(common)), w2))
        return new is not None and _replace(stars, star, [new])
    # w1 and w2 reach disjoint parts of H: split into two stars going deeper
    u1 = next(_bits(n1))
    u2 = next(_bits(n2))
    v1_cand = g.adj_mask(u1) & hmask & ~(1 << u2)
    if not v1_cand:
        return False
    v1 = next(_bits(v1_cand))
    v2_cand = g.adj_mask(u2) & hmask & ~(1 << u1) & ~(1 << v1)
    if not v2_cand:
        return False
    v2 = next(_bits(v2_cand))
    first = _star_on(g, (w1, u1, v1))
    second = _star_on(g, (w2, u2, v2))
    if first is None or second is None:
        return False
    return _replace(stars, star, [first, second])


def _rewrite_two_far_vertices(
    g: Graph, stars: list[Star], star: Star, xmask: int, far: int, hmask: int
) -> bool:
    """Star covering one cut vertex w and two far-side vertices."""
    w = next(_bits(star.mask() & xmask))
    nw = g.adj_mask(w) & hmask
    if not nw:
        return _replace(stars, star, [])
    keep = [v for v in sorted(_bits(star.mask() & far)) if g.has_edge(w, v)]
    if not keep:
        return False
    new = _star_on(g, (keep[0], w, next(_bits(nw))))
    return new is not None and _replace(stars, star, [new])


def _rewrite_one_each_side(
    g: Graph,
    stars: list[Star],
    star: Star,
    xmask: int,
    far: int,
    near: int,
    hmask: int,
) -> bool:
    """Star covering one cut vertex w, one far vertex u, one near vertex f."""
    w = next(_bits(star.mask() & xmask))
    f = next(_bits(star.mask() & near))
    nw = g.adj_mask(w) & hmask
    nf = g.adj_mask(f) & hmask
    if not nw and not nf:
        return _replace(stars, star, [])
    if not nw:
        new = _star_on(g, (w, f, next(_bits(nf))))
    else:
        new = _star_on(g, (f, w, next(_bits(nw))))
    return new is not None and _replace(stars, star, [new])


# -- per-graph checks ---------------------------------------------------


def _solve(g: Graph, pure: bool = False) -> Optional[StructResult]:
    if g.n < 3 or not g.is_connected():
        return None
    return struct_connectivity_exact(g, pure=pure)


def _check_bounds_inequality(g: Graph, result: Optional[StructResult]) -> dict:
    if g.n < 4:
        return _skip("n<4")
    if result is None or not result.found:
        return _skip("NoCutExists")
    k = vertex_connectivity(g)
    s = result.value
    if 3 * s >= k and s <= k:
        return _pass()
    return _fail({"kappa": k, "struct_kappa": s})


def _check_diameter_rule(g: Graph, result: Optional[StructResult]) -> dict:
    if g.n < 4 or g.diameter() < 4:
        return _skip("diam<4")
    try:
        fam = diameter_cut(g)
    except InvariantViolation as exc:
        return _fail({"error": str(exc)})
    if is_structure_cut(g, fam):
        return _pass()
    return _fail({"family": fam.to_obj()})


def _check_mod1_rule(g: Graph, result: Optional[StructResult]) -> dict:
    if g.n < 4 or g.n % 3 != 1:
        return _skip("n mod 3 != 1")
    try:
        fam = greedy_cut_mod1(g)
    except InvariantViolation as exc:
        return _fail({"error": str(exc)})
    if is_structure_cut(g, fam):
        return _pass()
    return _fail({"family": fam.to_obj()})


def _check_mod2_rule(g: Graph, result: Optional[StructResult]) -> dict:
    if g.n < 5 or g.n % 3 != 2:
        return _skip("n mod 3 != 2")
    predicted = exists_mod2(g)
    actual = result is not None and result.found
    if predicted == actual:
        return _pass()
    return _fail({"predicted": predicted, "solver": actual})


def _check_mod0_rule(g: Graph, result: Optional[StructResult]) -> dict:
    if g.n < 6 or g.n % 3 != 0:
        return _skip("n mod 3 != 0 or n < 6")
    triple = mod0_condition(g)
    if triple is None:
        return _skip("condition absent")
    if result is not None and result.found:
        return _pass()
    return _fail({"triple": list(triple)})


def _check_mod0_distance(g: Graph, result: Optional[StructResult]) -> dict:
    if g.n < 6 or g.n % 3 != 0:
        return _skip("n mod 3 != 0 or n < 6")
    triple = mod0_condition(g)
    if triple is None:
        return _skip("condition absent")
    u, v, w = triple
    if g.distance(u, v) >= 3 and g.distance(u, w) >= 3:
        return _pass()
    return _fail(
        {
            "triple": list(triple),
            "dist_uv": g.distance(u, v),
            "dist_uw": g.distance(u, w),
        }
    )


def _check_existence_oracle(g: Graph, result: Optional[StructResult]) -> dict:
    if g.n < 4:
        return _skip("n<4")
    cert = decide_existence(g)
    actual = result is not None and result.found
    if cert.exists != actual:
        return _fail({"certificate": cert.to_obj(), "solver_found": actual})
    if cert.exists and not is_structure_cut(g, cert.witness):
        return _fail({"certificate": cert.to_obj(), "reason": "invalid witness"})
    return _pass()


def _check_solver_modes(g: Graph, result: Optional[StructResult]) -> dict:
    if g.n < 3:
        return _skip("n<3")
    pruned = result if result is not None else _solve(g)
    pure = _solve(g, pure=True)
    if pruned is None or pure is None:
        return _skip("disconnected")
    if pruned.status == pure.status and pruned.value == pure.value:
        return _pass()
    return _fail({"pruned": pruned.to_obj(), "pure": pure.to_obj()})


def _check_covering(g: Graph, result: Optional[StructResult]) -> dict:
    if g.n < 4:
        return _skip("n<4")
    if g.is_complete():
        return _skip("complete")
    try:
        family, cut, _, _ = cover_min_cut_detailed(g)
    except InvariantViolation as exc:
        return _fail({"error": str(exc)})
    k = vertex_connectivity(g)
    ok = (
        family.is_vertex_disjoint()
        and family.is_valid_in(g)
        and set(cut) <= set(family.covered())
        and len(family) <= k
    )
    if ok:
        return _pass()
    return _fail({"family": family.to_obj(), "cut": sorted(cut), "kappa": k})


def _check_refinement(g: Graph, result: Optional[StructResult]) -> dict:
    if g.n < 4:
        return _skip("n<4")
    if g.is_complete():
        return _skip("complete")
    if result is None or not result.found:
        return _skip("NoCutExists")
    try:
        family, cut, sides, _ = cover_min_cut_detailed(g)
        refined = refine_detailed(g, family, cut, sides)
    except InvariantViolation as exc:
        return _fail({"error": str(exc)})
    k = vertex_connectivity(g)
    if is_structure_cut(g, refined.family) and len(refined.family) <= k:
        out = _pass()
        out["fallback"] = refined.fallback
        return out
    return _fail({"family": refined.family.to_obj(), "kappa": k})


CHECKS: dict[str, Callable[[Graph, Optional[StructResult]], dict]] = {
    "bounds": _check_bounds_inequality,
    "diameter_rule": _check_diameter_rule,
    "mod1_rule": _check_mod1_rule,
    "mod2_rule": _check_mod2_rule,
    "mod0_rule": _check_mod0_rule,
    "mod0_distance": _check_mod0_distance,
    "existence_oracle": _check_existence_oracle,
    "solver_modes": _check_solver_modes,
    "covering": _check_covering,
    "refinement": _check_refinement,
}

CHECK_NAMES = tuple(CHECKS)


def verify_graph(
    g: Graph, checks: Optional[Iterable[str]] = None, graph_id: Optional[str] = None
) -> VerificationRecord:
    """Run the selected checks (all by default) and build one record."""
    names = CHECK_NAMES if checks is None else tuple(checks)
    for name in names:
        if name not in CHECKS:
            raise ValueError(f"unknown check {name!r}; known: {', '.join(CHECKS)}")
    if not g.is_connected():
        record = VerificationRecord(
            graph_id=graph_id if graph_id is not None else to_graph6(g),
            n=g.n,
            m=g.m,
            kappa=0,
            struct_kappa=None,
            certificate_rule="",
        )
        for name in names:
            record.checks[name] = _skip("disconnected")
        return record
    result = _solve(g)
    rule = ""
    if g.n >= 4 and g.is_connected():
        rule = decide_existence(g).rule
    record = VerificationRecord(
        graph_id=graph_id if graph_id is not None else to_graph6(g),
        n=g.n,
        m=g.m,
        kappa=vertex_connectivity(g) if g.n >= 2 else 0,
        struct_kappa=result.value if result is not None and result.found else None,
        certificate_rule=rule,
    )
    for name in names:
        record.checks[name] = CHECKS[name](g, result)
    refinement = record.checks.get("refinement")
    if refinement is not None and refinement.get("fallback"):
        record.refinement_fallback = True
    return record


def check_bounds(g: Graph) -> VerificationRecord:
    """The bound inequality plus every existence-rule check applicable to g."""
    return verify_graph(
        g,
        checks=(
            "bounds",
            "diameter_rule",
            "mod1_rule",
            "mod2_rule",
            "mod0_rule",
            "mod0_distance",
        ),
    )


def find_ratio_witnesses(graphs: Iterable[Graph]) -> list[VerificationRecord]:
    """Records of graphs whose minimum structure cut is exactly kappa/3 stars."""
    hits = []
    for g in graphs:
        if g.n < 2 or not g.is_connected():
            continue
        result = _solve(g)
        if result is None or not result.found:
            continue
        if 3 * result.value == vertex_connectivity(g):
            hits.append(check_bounds(g))
    hits.sort(key=lambda r: (r.n, r.graph_id))
    return hits


def check_open_problem(g: Graph, m: int) -> VerificationRecord:
    """Empirical test of the kappa/m <= kappa(G; K_{1,m}) <= kappa bounds."""
    if m < 2:
        raise ValueError(f"star arity must be at least 2, got {m}")
    record = VerificationRecord(
        graph_id=to_graph6(g),
        n=g.n,
        m=g.m,
        kappa=vertex_connectivity(g) if g.n >= 2 else 0,
        struct_kappa=None,
        certificate_rule="",
    )
    if g.n < 3 or not g.is_connected():
        record.checks["open_problem_bounds"] = _skip("too small or disconnected")
        return record
    result = struct_connectivity_exact(g, m=m)
    if not result.found:
        record.checks["open_problem_bounds"] = _skip("NoCutExists")
        return record
    record.struct_kappa = result.value
    k = record.kappa
    s = result.value
    if m * s >= k and s <= k:
        record.checks["open_problem_bounds"] = _pass()
    else:
        record.checks["open_problem_bounds"] = _fail(
            {"arity": m, "kappa": k, "struct_kappa": s}
        )
    return record
