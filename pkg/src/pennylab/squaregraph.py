"""Squaregraphs: validation, edge bounds, and tight constructions.

A squaregraph is a connected plane graph in which every bounded face
is a quadrilateral and every vertex not on the outer face has degree
at least four.  They mirror the triangle-free disk contact graphs:
2-degenerate, at least four non-articulation degree-2 vertices when a
cycle exists, e <= 2n - D - 2, and e <= floor(2n - 2*sqrt(n)) with the
last bound met exactly by trimmed square grids.

The counting route goes through a dual line-arrangement view: with
ell lines and c pairwise crossings (no three lines concurrent, and the
crossing graph triangle-free), n = c + ell + 1 and e = 2c + ell.
Inverting gives c = e - n + 1 and ell = 2n - e - 2, and the
triangle-free crossing condition caps c at floor(ell/2)*ceil(ell/2).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import InternalInvariantViolation, NotSquaregraph
from .faces import (
    BoundsReport,
    CheckRecord,
    FaceStructure,
    extract_faces,
    outer_incidences,
    squaregraph_edge_bound,
)
from .generators import gen_trimmed_grid, trim_grid_points
from .geometry import normalize, tangency_graph
from .graphs import PennyGraph, low_degree_census


def validate_squaregraph(
    g: PennyGraph, outer_face: int | None = None
) -> FaceStructure:
    """Check the two defining face conditions; raise NotSquaregraph
    listing every violation, or return the face structure."""
    fs = extract_faces(g, outer_face=outer_face)
    if g.n == 1:
        return fs
    violations: list[str] = []
    for i, face in enumerate(fs.faces):
        if i == fs.outer:
            continue
        if len(face) != 4:
            walk = [u for u, _ in face]
            violations.append(
                f"bounded face {walk} has length {len(face)}, expected 4"
            )
    boundary = fs.outer_vertex_set()
    for v in range(g.n):
        if v not in boundary and len(g.adj[v]) < 4:
            violations.append(
                f"interior vertex {v} has degree {len(g.adj[v])}, expected >= 4"
            )
    if violations:
        raise NotSquaregraph(violations)
    return fs


def turan_parameters(n: int, e: int) -> tuple[int, int]:
    """Invert the dual-arrangement counts: c crossings, ell lines."""
    return e - n + 1, 2 * n - e - 2


def squaregraph_bounds(
    g: PennyGraph,
    fs: FaceStructure | None = None,
    diameter: int | None = None,
) -> BoundsReport:
    """Evaluate the squaregraph identities and edge bounds.

    Validates first (the identities are meaningless otherwise), then
    checks the dual-parameter recovery, the Turan crossing bound, the
    floor(2n - 2*sqrt(n)) edge maximum, the degree-two census, and the
    diameter bound when a diameter is supplied.
    """
    if fs is None:
        fs = validate_squaregraph(g)
    n, e = g.n, g.e
    c, ell = turan_parameters(n, e)
    k = outer_incidences(fs)
    checks: list[CheckRecord] = []

    checks.append(
        CheckRecord(
            id="dual_parameters_consistent",
            anchor="c = e - n + 1 and ell = 2n - e - 2 recover n = c + ell + 1 "
            "and e = 2c + ell with c, ell >= 0",
            passed=(c >= 0 and ell >= 0 and n == c + ell + 1 and e == 2 * c + ell),
            measured={"n": n, "e": e, "c": c, "ell": ell},
        )
    )
    checks.append(
        CheckRecord(
            id="outer_walk_twice_ell",
            anchor="quadrilateral faces force the outer walk length to 2*ell",
            passed=(k == 2 * ell),
            measured={"outer_walk": k, "ell": ell},
        )
    )
    turan = (ell // 2) * ((ell + 1) // 2)
    checks.append(
        CheckRecord(
            id="turan_crossing_bound",
            anchor="a triangle-free crossing graph on ell lines has at most "
            "floor(ell/2)*ceil(ell/2) crossings",
            passed=(c <= turan),
            measured={"c": c, "ell": ell},
            bound=turan,
            margin=turan - c,
        )
    )
    ebound = squaregraph_edge_bound(n)
    checks.append(
        CheckRecord(
            id="squaregraph_edge_bound",
            anchor="an n-vertex squaregraph has at most "
            "floor(2n - 2*sqrt(n)) edges",
            passed=(e <= ebound),
            measured={"e": e, "n": n},
            bound=ebound,
            margin=ebound - e,
        )
    )
    census = low_degree_census(g)
    if census.has_cycle:
        count = len(census.non_articulation_low_degree)
        checks.append(
            CheckRecord(
                id="squaregraph_four_degree_two",
                anchor="a squaregraph with a cycle has at least four "
                "non-articulation vertices of degree at most two",
                passed=(count >= 4),
                measured={"non_articulation_low_degree": count},
                bound=4,
            )
        )
    if diameter is not None:
        checks.append(
            CheckRecord(
                id="squaregraph_diameter_bound",
                anchor="a connected squaregraph with diameter D has at most "
                "2n - D - 2 edges",
                passed=(e <= 2 * n - diameter - 2),
                measured={"e": e, "n": n, "D": diameter},
                bound=2 * n - diameter - 2,
                margin=2 * n - diameter - 2 - e,
            )
        )
    return BoundsReport(n=n, e=e, k=k, diameter=diameter, checks=checks)


@dataclass
class TightConstruction:
    graph: PennyGraph
    faces: FaceStructure
    edges: int
    bound: int

    @property
    def tight(self) -> bool:
        return self.edges == self.bound


def tight_squaregraph(n: int) -> TightConstruction:
    """Build an n-vertex squaregraph meeting floor(2n - 2*sqrt(n)).

    Trims the smallest covering square grid greedily; if the greedy
    order ever fell short of the bound, a bounded backtracking search
    over removal orders takes over.  The result is simultaneously a
    unit-disk contact configuration (a subset of the even grid).
    """
    cfg = gen_trimmed_grid(n)
    g = tangency_graph(cfg)
    bound = squaregraph_edge_bound(n)
    if g.e < bound:
        pts = _backtrack_tight(n, bound)
        if pts is None:
            raise InternalInvariantViolation(
                f"no {n}-vertex grid trimming with {bound} edges found"
            )
        g = tangency_graph(normalize(pts))
    fs = validate_squaregraph(g)
    return TightConstruction(graph=g, faces=fs, edges=g.e, bound=bound)


def _backtrack_tight(n: int, bound: int, budget: int = 50000):
    """Search removal orders from the covering grid for a tight trim."""
    m = math.isqrt(n - 1) + 1
    from .generators import _articulation_set, _grid_neighbors

    start = frozenset(range(m * m))
    seen: set[frozenset[int]] = set()
    stack = [start]
    spent = 0
    while stack and spent < budget:
        alive = stack.pop()
        spent += 1
        edges = sum(
            1
            for v in alive
            for w in _grid_neighbors(set(alive), v, m, m)
            if w > v
        )
        if len(alive) == n:
            if edges == bound:
                return [(2.0 * (v % m), 2.0 * (v // m)) for v in sorted(alive)]
            continue
        # prune: each removal sheds at least one edge from a connected graph
        if edges - (len(alive) - n) < bound:
            continue
        live = set(alive)
        arts = _articulation_set(live, m, m) if len(alive) > 2 else set()
        cands = sorted(
            (v for v in alive if v not in arts),
            key=lambda v: (len(_grid_neighbors(live, v, m, m)), v),
        )
        for v in reversed(cands):
            child = alive - {v}
            if child not in seen:
                seen.add(child)
                stack.append(child)
    return None


def tight_edge_counts(limit: int) -> list[tuple[int, int, int]]:
    """(n, edges, bound) for every trimmed-grid size up to ``limit``."""
    out = []
    for n in range(1, limit + 1):
        m = math.isqrt(n - 1) + 1
        pts = trim_grid_points(m, n)
        g = tangency_graph(normalize(pts))
        out.append((n, g.e, squaregraph_edge_bound(n)))
    return out
