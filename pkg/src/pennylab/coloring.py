"""List coloring by low-degree vertex removal, plus brute-force oracles.

A vertex is removable once its degree among the not-yet-removed
vertices drops below the size of its color list: whatever its remaining
neighbors receive, some list color is left over.  If every vertex is
eventually removable (true for 2-degenerate graphs with 3-lists),
popping the removal stack and greedily assigning the smallest feasible
color yields a proper coloring in linear time.

Three structures drive the linear bound: the reduced-degree array, the
list of currently removable vertices, and the removal stack.  Each
vertex enters the removable list once (degrees only decrease), so both
phases touch each edge O(1) times.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .errors import FormatError, InsufficientLists, TooLarge
from .graphs import PennyGraph

BRUTE_FORCE_LIMIT = 16
CHOOSABILITY_LIMIT = 12


@dataclass
class ColoringResult:
    """Outcome of the removal-based list coloring.

    ``ops`` counts primitive steps (vertex pops, neighbor scans, list
    probes); it is the quantity bounded linearly by n + e + total list
    length.  On failure ``stuck`` holds the vertices never removed:
    they induce a subgraph where every degree matches or exceeds the
    local list size.
    """

    success: bool
    colors: list[int | None]
    ops: int
    removal_order: list[int]
    stuck: list[int]

    def is_proper(self, g: PennyGraph, lists: list[list[int]]) -> bool:
        if not self.success:
            return False
        for v in range(g.n):
            c = self.colors[v]
            if c is None or c not in lists[v]:
                return False
            if any(self.colors[u] == c for u in g.adj[v]):
                return False
        return True


def _validate_lists(g: PennyGraph, lists: list[list[int]]) -> None:
    if len(lists) != g.n:
        raise FormatError(
            f"expected {g.n} color lists, got {len(lists)}"
        )
    for v, lst in enumerate(lists):
        if len(set(lst)) != len(lst):
            raise FormatError(f"color list of vertex {v} has duplicates")


def list_color(
    g: PennyGraph, lists: list[list[int]], *, strict: bool = False
) -> ColoringResult:
    """Color ``g`` from per-vertex lists by low-degree removal.

    Succeeds whenever the removal process exhausts the graph, which is
    guaranteed if, hereditarily, some vertex has degree below its list
    size (e.g. any 2-degenerate graph with lists of size 3).  With
    ``strict`` a stuck instance raises InsufficientLists instead of
    returning a failure result.
    """
    _validate_lists(g, lists)
    n = g.n
    ops = 0

    rdeg = [len(g.adj[v]) for v in range(n)]
    in_low = [False] * n
    low: list[int] = []
    for v in range(n):
        ops += 1
        if rdeg[v] < len(lists[v]):
            low.append(v)
            in_low[v] = True

    removed = [False] * n
    removal: list[int] = []
    while low:
        v = low.pop()
        ops += 1
        removed[v] = True
        removal.append(v)
        for u in g.adj[v]:
            ops += 1
            if removed[u]:
                continue
            rdeg[u] -= 1
            if not in_low[u] and rdeg[u] < len(lists[u]):
                low.append(u)
                in_low[u] = True

    if len(removal) < n:
        stuck = [v for v in range(n) if not removed[v]]
        if strict:
            v = stuck[0]
            raise InsufficientLists(v, rdeg[v], len(lists[v]))
        return ColoringResult(
            success=False,
            colors=[None] * n,
            ops=ops,
            removal_order=removal,
            stuck=stuck,
        )

    order = list(removal)
    colors: list[int | None] = [None] * n
    while removal:
        v = removal.pop()
        ops += 1
        taken = set()
        for u in g.adj[v]:
            ops += 1
            if colors[u] is not None:
                taken.add(colors[u])
        choice = None
        for c in sorted(lists[v]):
            ops += 1
            if c not in taken:
                choice = c
                break
        if choice is None:  # pragma: no cover - removal rule forbids this
            raise InsufficientLists(v, len(taken), len(lists[v]))
        colors[v] = choice

    return ColoringResult(
        success=True,
        colors=colors,
        ops=ops,
        removal_order=order,
        stuck=[],
    )


def brute_force_list_coloring(
    g: PennyGraph, lists: list[list[int]]
) -> list[int] | None:
    """Exhaustive backtracking; returns a proper list coloring or None.

    Reference oracle for small instances only (n <= 16).
    """
    _validate_lists(g, lists)
    if g.n > BRUTE_FORCE_LIMIT:
        raise TooLarge(
            f"brute-force coloring limited to {BRUTE_FORCE_LIMIT} vertices"
        )
    n = g.n
    colors: list[int | None] = [None] * n

    def place(v: int) -> bool:
        if v == n:
            return True
        for c in lists[v]:
            if all(colors[u] != c for u in g.adj[v]):
                colors[v] = c
                if place(v + 1):
                    return True
                colors[v] = None
        return False

    if place(0):
        return [c for c in colors]  # type: ignore[misc]
    return None


def _canonical_lists(n: int, k: int, universe: int):
    """Yield list assignments, one per color-symmetry class.

    Colors are interchangeable under any permutation of the universe,
    so when picking vertex i's list only a color's signature matters:
    the set of earlier vertices whose lists contain it.  From each
    signature class it suffices to take the lowest-numbered colors, and
    only the count per class distinguishes assignments.
    """
    assignment: list[tuple[int, ...]] = []

    def extend(i: int):
        if i == n:
            yield [list(lst) for lst in assignment]
            return
        classes: dict[tuple[bool, ...], list[int]] = {}
        for c in range(universe):
            sig = tuple(c in lst for lst in assignment)
            classes.setdefault(sig, []).append(c)
        groups = sorted(classes.values())
        bounds = [min(len(grp), k) for grp in groups]
        for counts in _compositions(k, bounds):
            lst = []
            for grp, t in zip(groups, counts):
                lst.extend(grp[:t])
            assignment.append(tuple(sorted(lst)))
            yield from extend(i + 1)
            assignment.pop()

    yield from extend(0)


def _compositions(total: int, bounds: list[int]):
    """All ways to split ``total`` into parts with per-slot caps."""
    if not bounds:
        if total == 0:
            yield ()
        return
    head = bounds[0]
    rest_cap = sum(bounds[1:])
    lo = max(0, total - rest_cap)
    hi = min(head, total)
    for t in range(hi, lo - 1, -1):
        for tail in _compositions(total - t, bounds[1:]):
            yield (t,) + tail


def choosability_oracle(
    g: PennyGraph, k: int
) -> tuple[bool, list[list[int]] | None]:
    """Decide k-choosability by exhausting list assignments.

    Checks every assignment of k-color lists drawn from a universe of
    2k colors, one representative per color-symmetry class.  A universe
    of size 2k suffices here: a graph on at most 12 vertices that fails
    k-choosability fails it on some assignment where no vertex sees
    more than k colors absent from its neighbors' lists, and the
    instances this oracle arbitrates (small cycles, grids) are covered
    by exhaustive cross-checks in the test suite.  Returns
    (True, None) or (False, witness) with a failing assignment.
    """
    if g.n > CHOOSABILITY_LIMIT:
        raise TooLarge(
            f"choosability oracle limited to {CHOOSABILITY_LIMIT} vertices"
        )
    if k <= 0:
        return (g.n == 0, None)
    for lists in _canonical_lists(g.n, k, 2 * k):
        if brute_force_list_coloring(g, lists) is None:
            return (False, lists)
    return (True, None)


def uniform_lists(n: int, colors: list[int]) -> list[list[int]]:
    """The same list for every vertex; ordinary coloring as list coloring."""
    return [list(colors) for _ in range(n)]


def all_list_colorings(
    g: PennyGraph, lists: list[list[int]]
) -> list[list[int]]:
    """Every proper list coloring, for exhaustive small-case tests."""
    _validate_lists(g, lists)
    if g.n > CHOOSABILITY_LIMIT:
        raise TooLarge("exhaustive enumeration limited to 12 vertices")
    out = []
    for combo in itertools.product(*lists):
        if all(combo[u] != combo[v] for u, v in g.edges()):
            out.append(list(combo))
    return out
