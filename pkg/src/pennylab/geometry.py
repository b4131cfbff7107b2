"""Coordinate layer: disk configurations and everything derived from them.

A configuration stores centers of interior-disjoint unit disks, scaled so
the minimum pairwise center distance is 2.  Two disks are tangent exactly
when their centers are at distance 2, up to a relative tolerance; the
tangency relation is the edge set of the derived contact graph.

All operations are pure; returned values are never mutated afterwards.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.spatial import cKDTree

from .errors import (
    DuplicatePoints,
    EmptyInput,
    InternalInvariantViolation,
    NotBiconnected,
    OverlapDetected,
    TriangleFound,
)
from .graphs import (
    PennyGraph,
    RotationSystem,
    biconnected_components,
    find_triangle,
)

Point = tuple[float, float]

DEFAULT_EPSILON = 1e-9

# Area of the regular hexagon circumscribed around a unit circle; the
# minimum possible Voronoi cell area of an interior disk center.
HEX_CELL_AREA = 2.0 * math.sqrt(3.0)

# Sites beyond this distance cannot contribute an edge to a bounded cell
# whose vertices stay within half this radius; see voronoi_cells().
_VORONOI_REACH = 8.0


@dataclass
class PennyConfiguration:
    """Normalized point set with its tangency tolerance.

    ``min_dist`` is the minimum pairwise distance measured before
    normalization (None for a single point).  After normalization the
    minimum pairwise distance is 2 up to machine precision.
    """

    points: list[Point]
    epsilon: float = DEFAULT_EPSILON
    min_dist: float | None = None

    @property
    def n(self) -> int:
        return len(self.points)

    def integer_coordinates(self) -> bool:
        return all(x.is_integer() and y.is_integer() for x, y in self.points)


def _closest_pair_distance(points: list[Point]) -> tuple[float, int, int]:
    arr = np.asarray(points, dtype=float)
    tree = cKDTree(arr)
    dists, idx = tree.query(arr, k=2)
    nearest = dists[:, 1]
    i = int(np.argmin(nearest))
    return float(nearest[i]), i, int(idx[i, 1])


def normalize(points, epsilon: float = DEFAULT_EPSILON) -> PennyConfiguration:
    """Scale a point set so its minimum pairwise distance is 2.

    Scale-free inputs (integer grids at any spacing that divides 2)
    normalize exactly; everything else lands within machine precision.
    Raises EmptyInput for zero points and DuplicatePoints when two
    points coincide within epsilon relative to the spread of the set.
    """
    pts = [(float(x), float(y)) for x, y in points]
    if not pts:
        raise EmptyInput("need at least one point")
    if len(pts) == 1:
        return PennyConfiguration(points=pts, epsilon=epsilon, min_dist=None)
    dmin, i, j = _closest_pair_distance(pts)
    xs = [p[0] for p in pts]
    ys = [p[1] for p in pts]
    spread = math.hypot(max(xs) - min(xs), max(ys) - min(ys))
    if dmin <= epsilon * max(1.0, spread):
        raise DuplicatePoints(i, j, dmin)
    scale = 2.0 / dmin
    if scale != 1.0:
        pts = [(x * scale, y * scale) for x, y in pts]
    return PennyConfiguration(points=pts, epsilon=epsilon, min_dist=dmin)


def tangent_pairs(config: PennyConfiguration) -> list[tuple[int, int]]:
    """All unordered point pairs at distance 2 within the tolerance band.

    Pairs closer than 2*(1 - epsilon) mean overlapping disks and raise
    OverlapDetected.  When every coordinate is an integer the test is
    exact integer arithmetic on squared distances.
    """
    pts = config.points
    if len(pts) < 2:
        return []
    eps = config.epsilon
    arr = np.asarray(pts, dtype=float)
    tree = cKDTree(arr)
    candidates = sorted(tree.query_pairs(r=2.0 * (1.0 + eps)))
    if config.integer_coordinates():
        pairs = []
        ipts = [(round(x), round(y)) for x, y in pts]
        for i, j in candidates:
            dx = ipts[i][0] - ipts[j][0]
            dy = ipts[i][1] - ipts[j][1]
            d2 = dx * dx + dy * dy
            if d2 < 4:
                raise OverlapDetected(i, j, math.sqrt(d2))
            if d2 == 4:
                pairs.append((i, j))
        return pairs
    lo = 2.0 * (1.0 - eps)
    pairs = []
    for i, j in candidates:
        d = math.dist(pts[i], pts[j])
        if d < lo:
            raise OverlapDetected(i, j, d)
        pairs.append((i, j))
    return pairs


def rotation_from_points(points: list[Point], adj: list[list[int]]) -> RotationSystem:
    """Sort each adjacency list counterclockwise by direction angle."""
    order: list[list[int]] = []
    angles: list[list[float]] = []
    for v, nbrs in enumerate(adj):
        x, y = points[v]
        pairs = sorted(
            (math.atan2(points[w][1] - y, points[w][0] - x), w) for w in nbrs
        )
        order.append([w for _, w in pairs])
        angles.append([a for a, _ in pairs])
    return RotationSystem(order=order, angles=angles)


def tangency_graph(config: PennyConfiguration) -> PennyGraph:
    """Contact graph of the configuration, with rotation system attached.

    Planarity is guaranteed by construction (tangency segments of
    interior-disjoint disks cannot cross) and is not re-checked.
    """
    pairs = tangent_pairs(config)
    g = PennyGraph.from_edges(config.n, pairs)
    g.points = list(config.points)
    g.rotation = rotation_from_points(g.points, g.adj)
    return g


def angular_gaps(g: PennyGraph, v: int) -> list[float]:
    """Gaps between consecutive neighbor directions at v, in radians.

    A single neighbor yields one full-turn gap; an isolated vertex none.
    Disk disjointness forces every gap to be at least pi/3, strictly
    above pi/3 when the graph is triangle-free.
    """
    if g.rotation is None or g.rotation.angles is None:
        raise InternalInvariantViolation("angular gaps need geometric rotation")
    angs = g.rotation.angles[v]
    if not angs:
        return []
    if len(angs) == 1:
        return [2.0 * math.pi]
    return [
        (angs[(i + 1) % len(angs)] - angs[i]) % (2.0 * math.pi) or 2.0 * math.pi
        for i in range(len(angs))
    ]


def min_angular_gap(g: PennyGraph) -> float | None:
    gaps = [gap for v in range(g.n) for gap in angular_gaps(g, v)]
    return min(gaps) if gaps else None


@dataclass
class VoronoiCell:
    vertex: int
    bounded: bool
    polygon: list[Point] | None  # ccw vertices, present only when bounded
    area: float | None


def _clip_halfplane(poly: list[Point], a: float, b: float, c: float) -> list[Point]:
    """Keep the part of a convex polygon with a*x + b*y <= c."""
    out: list[Point] = []
    m = len(poly)
    for i in range(m):
        px, py = poly[i]
        qx, qy = poly[(i + 1) % m]
        pin = a * px + b * py <= c
        qin = a * qx + b * qy <= c
        if pin:
            out.append((px, py))
        if pin != qin:
            t = (c - a * px - b * py) / (a * (qx - px) + b * (qy - py))
            out.append((px + t * (qx - px), py + t * (qy - py)))
    return out


def _polygon_area(poly: list[Point]) -> float:
    s = 0.0
    m = len(poly)
    for i in range(m):
        x0, y0 = poly[i]
        x1, y1 = poly[(i + 1) % m]
        s += x0 * y1 - x1 * y0
    return 0.5 * s


def _positively_spanning(dirs: list[tuple[float, float]]) -> bool:
    """True when the direction set leaves no open half-plane uncovered,
    i.e. the largest angular gap between consecutive directions is < pi."""
    if len(dirs) < 3:
        return False
    angs = sorted(math.atan2(dy, dx) for dx, dy in dirs)
    worst = 0.0
    for i in range(len(angs)):
        gap = angs[(i + 1) % len(angs)] - angs[i]
        if i + 1 == len(angs):
            gap += 2.0 * math.pi
        worst = max(worst, gap)
    return worst < math.pi - 1e-12


def _cell_polygon(
    center: Point, sites: list[Point], halfwidth: float
) -> list[Point]:
    cx, cy = center
    poly = [
        (cx - halfwidth, cy - halfwidth),
        (cx + halfwidth, cy - halfwidth),
        (cx + halfwidth, cy + halfwidth),
        (cx - halfwidth, cy + halfwidth),
    ]
    for sx, sy in sites:
        # bisector half-plane toward the center: (s - c) . x <= (s - c) . mid
        a = sx - cx
        b = sy - cy
        mx = 0.5 * (sx + cx)
        my = 0.5 * (sy + cy)
        poly = _clip_halfplane(poly, a, b, a * mx + b * my)
        if not poly:
            break
    return poly


def voronoi_cells(config: PennyConfiguration) -> list[VoronoiCell]:
    """Per-site Voronoi cells by half-plane intersection.

    Each cell is clipped only against sites within distance 8: with the
    nearest site at distance 2, a farther site's bisector stays at least
    4 away from the center and cannot cut the cell.  If the clipped cell
    reaches beyond that guarantee the computation falls back to all
    sites.  Boundedness is decided from the neighbor directions
    (positively spanning the plane), not from the clipping box.
    """
    pts = config.points
    n = len(pts)
    cells: list[VoronoiCell] = []
    if n < 2:
        return [VoronoiCell(v, False, None, None) for v in range(n)]
    arr = np.asarray(pts, dtype=float)
    tree = cKDTree(arr)
    neighborhoods = tree.query_ball_point(arr, r=_VORONOI_REACH)
    for v in range(n):
        nearby = [i for i in neighborhoods[v] if i != v]
        if len(nearby) < 3:
            nearby = [i for i in range(n) if i != v]
        cx, cy = pts[v]
        dirs = [(pts[i][0] - cx, pts[i][1] - cy) for i in nearby]
        bounded = _positively_spanning(dirs)
        if not bounded:
            cells.append(VoronoiCell(v, False, None, None))
            continue
        sites = [pts[i] for i in nearby]
        poly = _cell_polygon(pts[v], sites, halfwidth=2.0 * _VORONOI_REACH)
        reach = max(math.dist(pts[v], q) for q in poly) if poly else 0.0
        if reach > _VORONOI_REACH / 2.0 and len(nearby) < n - 1:
            # the locality guarantee does not apply: redo with all sites
            sites = [pts[i] for i in range(n) if i != v]
            halfwidth = 2.0 * max(math.dist(pts[v], s) for s in sites)
            poly = _cell_polygon(pts[v], sites, halfwidth=halfwidth)
        if not poly:
            raise InternalInvariantViolation(f"empty Voronoi cell for site {v}")
        cells.append(VoronoiCell(v, True, poly, _polygon_area(poly)))
    return cells


@dataclass
class TurningAngleTrace:
    """Signed ray-turning angles along the outer cycle of a block.

    The outer face of a biconnected triangle-free configuration is a
    simple cycle, stored here in clockwise order.  At each cycle vertex
    a ray points directly away from a designated neighbor (the neighbor
    next in clockwise order around the vertex after its clockwise cycle
    successor); ``theta[i]`` is the turn from the predecessor's ray to
    the ray at ``cycle[i]``, clockwise positive, zero for parallel rays.

    Walking once around the boundary the turns total 2*pi; a vertex of
    block-degree >= 3 never turns clockwise, and one of degree 2 turns
    less than 2*pi/3, which is why at least four strictly positive turns
    (hence four degree-2 vertices) must occur.
    """

    cycle: list[int]
    ray_directions: list[float]
    theta: list[float]
    degrees: list[int]
    total: float

    def positive_count(self, tol: float = 1e-12) -> int:
        return sum(1 for t in self.theta if t > tol)


def _principal(angle: float) -> float:
    """Map to (-pi, pi]."""
    a = math.fmod(angle + math.pi, 2.0 * math.pi)
    if a <= 0.0:
        a += 2.0 * math.pi
    return a - math.pi


def _outer_cycle_clockwise(block: PennyGraph) -> list[int]:
    """Outer-face vertex cycle of a biconnected plane subgraph, clockwise."""
    from .faces import extract_faces  # local import: faces builds on graphs

    fs = extract_faces(block)
    walk = [u for u, _ in fs.faces[fs.outer]]
    if len(set(walk)) != len(walk):
        raise NotBiconnected("outer face is not a simple cycle")
    area = _polygon_area([block.points[v] for v in walk])
    if area > 0.0:
        walk = walk[::-1]
    return walk


def turning_angles(
    config: PennyConfiguration, graph: PennyGraph, block_edges=None
) -> TurningAngleTrace:
    """Turning-angle trace of a biconnected triangle-free component.

    ``block_edges`` selects the component (defaults to the whole graph,
    which must then be biconnected).  The component is treated as a
    standalone configuration on its own vertices: degrees, rotation and
    the outer face are all taken within the component.
    """
    if block_edges is None:
        block_edges = graph.edges()
    block_edges = list(block_edges)
    if len(block_edges) < 3:
        raise NotBiconnected("component has no cycle")
    sub = graph.subgraph_edges(block_edges)
    verts = sorted({u for e in block_edges for u in e})
    decomp = biconnected_components(sub)
    nontrivial = decomp.nontrivial()
    if len(nontrivial) != 1 or len(decomp.components) != 1:
        raise NotBiconnected("component is not a single biconnected block")
    tri = find_triangle(sub)
    if tri is not None:
        raise TriangleFound(tri)

    # compact to the block's vertex set so the face traversal never sees
    # isolated vertices of the ambient graph
    index = {v: i for i, v in enumerate(verts)}
    pts = [config.points[v] for v in verts]
    edges = [(index[u], index[v]) for u, v in block_edges]
    block = PennyGraph.from_edges(len(verts), edges)
    block.points = pts
    block.rotation = rotation_from_points(pts, block.adj)

    cycle = _outer_cycle_clockwise(block)
    k = len(cycle)
    pos_in_rot = [block.rotation.position(v) for v in range(block.n)]
    rays: list[float] = []
    for i, v in enumerate(cycle):
        w = cycle[(i + 1) % k]  # clockwise cycle successor
        rot = block.rotation.order[v]
        u = rot[(pos_in_rot[v][w] - 1) % len(rot)]  # next clockwise after w
        vx, vy = block.points[v]
        ux, uy = block.points[u]
        rays.append(math.atan2(vy - uy, vx - ux))
    theta = [0.0] * k
    for i in range(k):
        prev = rays[i - 1]
        turn = -_principal(rays[i] - prev)
        theta[i] = 0.0 if turn == 0.0 else turn  # normalize -0.0
    degrees = [block.degree(v) for v in cycle]
    return TurningAngleTrace(
        cycle=[verts[v] for v in cycle],
        ray_directions=rays,
        theta=theta,
        degrees=degrees,
        total=math.fsum(theta),
    )
