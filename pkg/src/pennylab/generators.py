"""Deterministic generators for unit-disk contact configurations.

All families come out with minimum distance exactly 2, so
normalization is the identity up to floating-point noise.  Grids and
their trimmings use even integer coordinates and therefore hit the
exact integer tangency path.  Randomness goes through SplitMix64 with
explicit seeds; the same seed reproduces the same instance on any
platform.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .errors import FormatError
from .geometry import PennyConfiguration, normalize

MASK64 = (1 << 64) - 1
GOLDEN_GAMMA = 0x9E3779B97F4A7C15


class SplitMix64:
    """SplitMix64 generator (Steele, Lea, Flood 2014 constants)."""

    def __init__(self, seed: int):
        self.state = seed & MASK64

    def next_u64(self) -> int:
        self.state = (self.state + GOLDEN_GAMMA) & MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
        return z ^ (z >> 31)

    def next_float(self) -> float:
        return (self.next_u64() >> 11) * 2.0**-53

    def next_below(self, n: int) -> int:
        """Uniform integer in [0, n) by rejection; no modulo bias."""
        if n <= 0:
            raise ValueError("next_below needs n >= 1")
        limit = (1 << 64) - ((1 << 64) % n)
        while True:
            x = self.next_u64()
            if x < limit:
                return x % n

    @staticmethod
    def derive(seed: int, index: int) -> int:
        """Stable per-instance child seed from a master seed."""
        return SplitMix64((seed ^ ((index + 1) * GOLDEN_GAMMA)) & MASK64).next_u64()


Point = tuple[float, float]


def gen_grid(m: int, h: int | None = None) -> PennyConfiguration:
    """An m x h rectangular grid of tangent disks (h defaults to m)."""
    if h is None:
        h = m
    if m < 1 or h < 1:
        raise FormatError("grid sides must be at least 1")
    pts = [(2.0 * c, 2.0 * r) for r in range(h) for c in range(m)]
    return normalize(pts)


def gen_path(n: int) -> PennyConfiguration:
    if n < 1:
        raise FormatError("path needs at least 1 vertex")
    return normalize([(2.0 * i, 0.0) for i in range(n)])


def gen_cycle(n: int) -> PennyConfiguration:
    """A ring of n tangent disks: regular n-gon with side length 2."""
    if n < 3:
        raise FormatError("cycle needs at least 3 vertices")
    radius = 1.0 / math.sin(math.pi / n)
    pts = []
    for i in range(n):
        a = 2.0 * math.pi * i / n
        pts.append((radius * math.cos(a), radius * math.sin(a)))
    return normalize(pts)


def hex_size(r: int) -> int:
    """Vertices of the hexagonal packing with r full rings: 3r^2 + 3r + 1."""
    return 3 * r * r + 3 * r + 1


def gen_hex_packing(r: int) -> PennyConfiguration:
    """The densest packing: a center disk surrounded by r hexagonal rings.

    Axial coordinates (a, b) with |a|, |b|, |a + b| <= r map to the
    plane via basis (2, 0) and (1, sqrt(3)); every nearest pair is at
    distance exactly 2.
    """
    if r < 0:
        raise FormatError("ring count must be nonnegative")
    s3 = math.sqrt(3.0)
    pts = []
    for a in range(-r, r + 1):
        for b in range(-r, r + 1):
            if abs(a + b) <= r:
                pts.append((2.0 * a + b, s3 * b))
    return normalize(pts)


def _grid_neighbors(alive: set[int], v: int, m: int, h: int) -> list[int]:
    r, c = divmod(v, m)
    out = []
    if c > 0 and v - 1 in alive:
        out.append(v - 1)
    if c + 1 < m and v + 1 in alive:
        out.append(v + 1)
    if r > 0 and v - m in alive:
        out.append(v - m)
    if r + 1 < h and v + m in alive:
        out.append(v + m)
    return out


def _articulation_set(alive: set[int], m: int, h: int) -> set[int]:
    """Articulation vertices of the induced grid subgraph (iterative)."""
    disc: dict[int, int] = {}
    low: dict[int, int] = {}
    parent: dict[int, int | None] = {}
    arts: set[int] = set()
    timer = 0
    for root in alive:
        if root in disc:
            continue
        parent[root] = None
        root_children = 0
        stack = [(root, iter(_grid_neighbors(alive, root, m, h)))]
        disc[root] = low[root] = timer
        timer += 1
        while stack:
            v, it = stack[-1]
            advanced = False
            for w in it:
                if w not in disc:
                    parent[w] = v
                    if v == root:
                        root_children += 1
                    disc[w] = low[w] = timer
                    timer += 1
                    stack.append((w, iter(_grid_neighbors(alive, w, m, h))))
                    advanced = True
                    break
                elif w != parent[v]:
                    low[v] = min(low[v], disc[w])
            if not advanced:
                stack.pop()
                if stack:
                    p = stack[-1][0]
                    low[p] = min(low[p], low[v])
                    if p != root and low[v] >= disc[p]:
                        arts.add(p)
        if root_children > 1:
            arts.add(root)
    return arts


def trim_grid_points(m: int, target: int, h: int | None = None) -> list[Point]:
    """Trim an m x h grid down to ``target`` vertices, greedily keeping
    as many tangencies as possible.

    Each step removes a non-articulation vertex of minimum current
    degree (lowest row-major index on ties), so the survivor stays
    connected and loses the fewest edges available to a single
    removal.  Starting from the smallest square grid covering n, this
    greedy sequence meets the floor(2n - 2*sqrt(n)) edge maximum at
    every intermediate size.
    """
    if h is None:
        h = m
    total = m * h
    if not 1 <= target <= total:
        raise FormatError(f"target {target} outside 1..{total}")
    alive = set(range(total))
    while len(alive) > target:
        arts = _articulation_set(alive, m, h) if len(alive) > 2 else set()
        best = None
        for v in alive:
            if v in arts:
                continue
            key = (len(_grid_neighbors(alive, v, m, h)), v)
            if best is None or key < best:
                best = key
        if best is None:  # pragma: no cover - connected graphs keep leaves
            raise FormatError("no removable vertex while trimming")
        alive.remove(best[1])
    pts = [(2.0 * (v % m), 2.0 * (v // m)) for v in sorted(alive)]
    return pts


def gen_trimmed_grid(n: int) -> PennyConfiguration:
    """n disks trimmed from the smallest square grid with >= n vertices."""
    if n < 1:
        raise FormatError("need at least 1 vertex")
    m = math.isqrt(n - 1) + 1
    return normalize(trim_grid_points(m, n))


def gen_random_subgrid(m: int, density: float, seed: int) -> PennyConfiguration:
    """Random connected subgrid: keep grid cells with probability
    ``density``, then keep the largest connected component."""
    if m < 1:
        raise FormatError("grid side must be at least 1")
    if not 0.0 < density <= 1.0:
        raise FormatError("density must lie in (0, 1]")
    rng = SplitMix64(seed)
    chosen = {v for v in range(m * m) if rng.next_float() < density}
    if not chosen:
        chosen = {rng.next_below(m * m)}
    best: set[int] = set()
    unseen = set(chosen)
    while unseen:
        root = min(unseen)
        comp = {root}
        frontier = [root]
        while frontier:
            v = frontier.pop()
            for w in _grid_neighbors(chosen, v, m, m):
                if w not in comp:
                    comp.add(w)
                    frontier.append(w)
        unseen -= comp
        if len(comp) > len(best) or (
            len(comp) == len(best) and comp and min(comp) < min(best)
        ):
            best = comp
    pts = [(2.0 * (v % m), 2.0 * (v // m)) for v in sorted(best)]
    return normalize(pts)


@dataclass
class InstanceSpec:
    """A reproducible instance: family name plus parameters and seed."""

    kind: str
    params: dict = field(default_factory=dict)
    seed: int | None = None

    @property
    def name(self) -> str:
        inner = ",".join(f"{k}={self.params[k]}" for k in sorted(self.params))
        if self.seed is not None:
            inner = f"{inner},seed={self.seed}" if inner else f"seed={self.seed}"
        return f"{self.kind}({inner})"

    def build(self) -> PennyConfiguration:
        p = self.params
        if self.kind == "grid":
            return gen_grid(p["m"], p.get("h"))
        if self.kind == "hex":
            return gen_hex_packing(p["r"])
        if self.kind == "cycle":
            return gen_cycle(p["n"])
        if self.kind == "path":
            return gen_path(p["n"])
        if self.kind == "trimmed_grid":
            return gen_trimmed_grid(p["n"])
        if self.kind == "random_subgrid":
            if self.seed is None:
                raise FormatError("random_subgrid needs a seed")
            return gen_random_subgrid(p["m"], p["density"], self.seed)
        raise FormatError(f"unknown instance kind {self.kind!r}")


def random_instance_specs(master_seed: int, count: int) -> list[InstanceSpec]:
    """Derive ``count`` random instances from one master seed.

    Roughly 70% subgrids (side 3..40, density 0.55..0.95) and 30%
    rings (length 4..2000); each instance gets its own child seed, so
    corpora for the same master seed agree across runs and platforms.
    """
    specs = []
    for i in range(count):
        child = SplitMix64.derive(master_seed, i)
        rng = SplitMix64(child)
        if rng.next_float() < 0.7:
            m = 3 + rng.next_below(38)
            density = 0.55 + 0.40 * rng.next_float()
            specs.append(
                InstanceSpec(
                    kind="random_subgrid",
                    params={"m": m, "density": round(density, 6)},
                    seed=rng.next_u64(),
                )
            )
        else:
            n = 4 + rng.next_below(1997)
            specs.append(InstanceSpec(kind="cycle", params={"n": n}))
    return specs
