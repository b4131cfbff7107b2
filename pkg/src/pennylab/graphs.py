"""Combinatorial graph layer: degeneracy, triangles, blocks, distances.

Graphs are simple and undirected.  All functions treat their inputs as
immutable and return fresh values, so independent calls are safe to run
in parallel.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass, field

from .errors import Disconnected, InternalInvariantViolation, TriangleFound

Edge = tuple[int, int]

# Above this size the all-sources BFS for diameter() switches to
# scipy.sparse.csgraph, which runs the same algorithm in C.
_CSGRAPH_THRESHOLD = 64


@dataclass
class RotationSystem:
    """Cyclic neighbor order around each vertex, counterclockwise.

    ``order[v]`` lists the neighbors of v sorted ccw by the angle of the
    vector from v's center to the neighbor's center; ``angles[v]`` is the
    parallel list of those angles in (-pi, pi], absent for purely
    combinatorial embeddings read from rotation files.
    """

    order: list[list[int]]
    angles: list[list[float]] | None = None

    def position(self, v: int) -> dict[int, int]:
        return {w: i for i, w in enumerate(self.order[v])}


@dataclass
class PennyGraph:
    """Simple undirected graph, optionally with an embedding.

    ``rotation`` and ``points`` are populated when the graph was built
    from a disk configuration (or a rotation file); purely abstract
    graphs carry neither.
    """

    n: int
    adj: list[list[int]]
    rotation: RotationSystem | None = None
    points: list[tuple[float, float]] | None = None

    @classmethod
    def from_edges(cls, n: int, edges) -> "PennyGraph":
        adj: list[list[int]] = [[] for _ in range(n)]
        seen = set()
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            key = (u, v) if u < v else (v, u)
            if key in seen:
                raise ValueError(f"parallel edge {key}")
            seen.add(key)
            adj[u].append(v)
            adj[v].append(u)
        for a in adj:
            a.sort()
        return cls(n=n, adj=adj)

    @property
    def e(self) -> int:
        return sum(len(a) for a in self.adj) // 2

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def edges(self) -> list[Edge]:
        return [(u, v) for u in range(self.n) for v in self.adj[u] if u < v]

    def adjacency_sets(self) -> list[set[int]]:
        return [set(a) for a in self.adj]

    def subgraph_edges(self, edges) -> "PennyGraph":
        """Graph on the same vertex ids restricted to the given edges."""
        return PennyGraph.from_edges(self.n, edges)


@dataclass
class DegeneracyOrder:
    """Removal order from repeated minimum-degree deletion.

    ``later_degree[v]`` is the number of neighbors of v that occur later
    in ``order``; ``d`` is the maximum, which equals the degeneracy.
    """

    order: list[int]
    d: int
    later_degree: list[int]


def degeneracy_order(g: PennyGraph) -> DegeneracyOrder:
    """Bucket-queue minimum-degree removal; lowest vertex id breaks ties.

    Buckets are small heaps so the lowest-id rule is exact; entries are
    re-pushed on every degree change and skipped lazily when stale.
    """
    n = g.n
    if n == 0:
        return DegeneracyOrder([], 0, [])
    cur = [len(a) for a in g.adj]
    maxdeg = max(cur)
    buckets: list[list[int]] = [[] for _ in range(maxdeg + 1)]
    for v in range(n):
        heapq.heappush(buckets[cur[v]], v)
    removed = [False] * n
    order: list[int] = []
    later = [0] * n
    d = 0
    md = 0
    for _ in range(n):
        while True:
            while md <= maxdeg and not buckets[md]:
                md += 1
            v = heapq.heappop(buckets[md])
            if not removed[v] and cur[v] == md:
                break
        removed[v] = True
        later[v] = cur[v]
        d = max(d, cur[v])
        order.append(v)
        for w in g.adj[v]:
            if not removed[w]:
                cur[w] -= 1
                heapq.heappush(buckets[cur[w]], w)
                if cur[w] < md:
                    md = cur[w]
    return DegeneracyOrder(order=order, d=d, later_degree=later)


def find_triangle(g: PennyGraph) -> tuple[int, int, int] | None:
    """Some triangle of g, or None.  Scans later-neighbor pairs along a
    degeneracy order, so the work is O(e * d)."""
    deg_order = degeneracy_order(g)
    pos = [0] * g.n
    for i, v in enumerate(deg_order.order):
        pos[v] = i
    adj_sets = g.adjacency_sets()
    for u in range(g.n):
        later = [w for w in g.adj[u] if pos[w] > pos[u]]
        for i, a in enumerate(later):
            for b in later[i + 1:]:
                if b in adj_sets[a]:
                    return tuple(sorted((u, a, b)))
    return None


@dataclass
class BiconnectedDecomposition:
    components: list[list[Edge]]
    articulation_vertices: set[int]
    # block-cut tree: ('block', i) and ('art', v) nodes
    block_cut_tree: dict = field(default_factory=dict)

    def nontrivial(self) -> list[int]:
        """Indices of components that contain a cycle."""
        return [i for i, c in enumerate(self.components) if len(c) > 1]

    def component_vertices(self, i: int) -> set[int]:
        verts: set[int] = set()
        for u, v in self.components[i]:
            verts.add(u)
            verts.add(v)
        return verts


def biconnected_components(g: PennyGraph) -> BiconnectedDecomposition:
    """Iterative lowpoint decomposition into blocks.

    Every edge lands in exactly one block; single-edge (trivial) blocks
    are kept so callers can filter on their own terms.
    """
    n = g.n
    disc = [-1] * n
    low = [0] * n
    parent = [-1] * n
    timer = 0
    comps: list[list[Edge]] = []
    art: set[int] = set()
    estack: list[Edge] = []

    for root in range(n):
        if disc[root] != -1:
            continue
        disc[root] = low[root] = timer
        timer += 1
        root_children = 0
        stack: list[tuple[int, int]] = [(root, 0)]  # (vertex, adj index)
        while stack:
            v, i = stack[-1]
            if i < len(g.adj[v]):
                stack[-1] = (v, i + 1)
                w = g.adj[v][i]
                if w == parent[v]:
                    continue
                if disc[w] == -1:
                    parent[w] = v
                    estack.append((v, w))
                    disc[w] = low[w] = timer
                    timer += 1
                    if v == root:
                        root_children += 1
                    stack.append((w, 0))
                elif disc[w] < disc[v]:
                    estack.append((v, w))
                    low[v] = min(low[v], disc[w])
            else:
                stack.pop()
                if stack:
                    p = stack[-1][0]
                    low[p] = min(low[p], low[v])
                    if low[v] >= disc[p]:
                        # p separates the subtree at v: close a block
                        comp: list[Edge] = []
                        while estack:
                            edge = estack.pop()
                            comp.append(edge)
                            if edge == (p, v):
                                break
                        comps.append(comp)
                        if p != root or root_children > 1:
                            art.add(p)
        if estack:
            raise InternalInvariantViolation("edge stack not drained")

    bct: dict = {}
    for i, comp in enumerate(comps):
        verts = {u for edge in comp for u in edge}
        for v in verts & art:
            bct.setdefault(("block", i), []).append(("art", v))
            bct.setdefault(("art", v), []).append(("block", i))
        bct.setdefault(("block", i), [])
    return BiconnectedDecomposition(
        components=comps, articulation_vertices=art, block_cut_tree=bct
    )


@dataclass
class LowDegreeCensus:
    """Counts behind the degree-two guarantees for triangle-free graphs."""

    non_articulation_low_degree: list[int]  # degree <= 2 in g, not articulation
    per_block_degree2: list[tuple[int, int]]  # (block index, in-block deg-2 count)
    has_cycle: bool

    @property
    def count(self) -> int:
        return len(self.non_articulation_low_degree)


def low_degree_census(g: PennyGraph) -> LowDegreeCensus:
    """Census of low-degree vertices; rejects graphs with triangles.

    For a triangle-free contact graph with at least one cycle the
    non-articulation count must come out >= 4, and every nontrivial
    block must show >= 4 in-block degree-2 vertices; callers assert.
    """
    tri = find_triangle(g)
    if tri is not None:
        raise TriangleFound(tri)
    decomp = biconnected_components(g)
    low = [
        v
        for v in range(g.n)
        if g.degree(v) <= 2 and v not in decomp.articulation_vertices
    ]
    per_block: list[tuple[int, int]] = []
    for i in decomp.nontrivial():
        bdeg: dict[int, int] = {}
        for u, v in decomp.components[i]:
            bdeg[u] = bdeg.get(u, 0) + 1
            bdeg[v] = bdeg.get(v, 0) + 1
        per_block.append((i, sum(1 for d in bdeg.values() if d == 2)))
    n_components = _component_count(g)
    has_cycle = g.e > g.n - n_components
    return LowDegreeCensus(
        non_articulation_low_degree=low,
        per_block_degree2=per_block,
        has_cycle=has_cycle,
    )


def _component_count(g: PennyGraph) -> int:
    seen = [False] * g.n
    count = 0
    for s in range(g.n):
        if seen[s]:
            continue
        count += 1
        seen[s] = True
        queue = [s]
        while queue:
            v = queue.pop()
            for w in g.adj[v]:
                if not seen[w]:
                    seen[w] = True
                    queue.append(w)
    return count


def bfs_eccentricity(g: PennyGraph, source: int) -> list[int]:
    """Distances from source; unreachable vertices get -1."""
    dist = [-1] * g.n
    dist[source] = 0
    frontier = [source]
    d = 0
    while frontier:
        d += 1
        nxt = []
        for v in frontier:
            for w in g.adj[v]:
                if dist[w] == -1:
                    dist[w] = d
                    nxt.append(w)
        frontier = nxt
    return dist


def is_connected(g: PennyGraph) -> bool:
    if g.n == 0:
        return True
    return min(bfs_eccentricity(g, 0)) >= 0


def diameter(g: PennyGraph) -> int:
    """Exact graph-theoretic diameter via all-sources BFS.

    Large graphs route the same computation through scipy's csgraph to
    keep the all-sources sweep at C speed; the result is identical.
    """
    if g.n == 0:
        raise Disconnected("empty graph has no diameter")
    if g.n == 1:
        return 0
    if not is_connected(g):
        raise Disconnected("diameter requires a connected graph")
    if all(len(a) == 2 for a in g.adj):
        # connected 2-regular graph: a single n-cycle, diameter floor(n/2)
        return g.n // 2
    if g.n <= _CSGRAPH_THRESHOLD:
        best = 0
        for s in range(g.n):
            best = max(best, max(bfs_eccentricity(g, s)))
        return best
    import numpy as np
    from scipy.sparse import csr_matrix
    from scipy.sparse.csgraph import shortest_path

    rows, cols = [], []
    for u in range(g.n):
        for v in g.adj[u]:
            rows.append(u)
            cols.append(v)
    data = np.ones(len(rows), dtype=np.int8)
    mat = csr_matrix((data, (rows, cols)), shape=(g.n, g.n))
    dist = shortest_path(mat, method="auto", directed=False, unweighted=True)
    return int(dist.max())


def diameter_lower_bound(g: PennyGraph, start: int = 0) -> int:
    """Double-sweep heuristic: a certified lower bound on the diameter,
    never a substitute for diameter()."""
    d0 = bfs_eccentricity(g, start)
    if min(d0) < 0:
        raise Disconnected("double sweep requires a connected graph")
    far = max(range(g.n), key=lambda v: (d0[v], -v))
    d1 = bfs_eccentricity(g, far)
    return max(d1)
