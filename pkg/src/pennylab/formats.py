"""Line-oriented UTF-8 file formats.

Four formats, all plain text:

* point set: one ``x y`` pair of decimal literals per line;
* edge list: header ``n m`` then m lines ``u v`` with 0-based ids;
* color lists: one line of space-separated color ids per vertex, in
  edge-list vertex order;
* rotation: one line per vertex giving its neighbors in ccw order.

Blank lines and lines starting with ``#`` are ignored everywhere.
Parse errors raise FormatError with the offending line number.
"""

from __future__ import annotations

import os
from .errors import FormatError
from .graphs import PennyGraph, RotationSystem

Point = tuple[float, float]


def _content_lines(text: str) -> list[tuple[int, str]]:
    out = []
    for idx, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        out.append((idx, line))
    return out


def parse_points(text: str) -> list[Point]:
    pts = []
    for ln, line in _content_lines(text):
        parts = line.split()
        if len(parts) != 2:
            raise FormatError(f"line {ln}: expected 'x y', got {line!r}")
        try:
            pts.append((float(parts[0]), float(parts[1])))
        except ValueError:
            raise FormatError(f"line {ln}: not decimal literals: {line!r}")
    return pts


def read_points(path: str | os.PathLike) -> list[Point]:
    with open(path, encoding="utf-8") as fh:
        return parse_points(fh.read())


def write_points(path: str | os.PathLike, points, comment: str | None = None) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        if comment:
            for line in comment.splitlines():
                fh.write(f"# {line}\n")
        for x, y in points:
            fh.write(f"{x!r} {y!r}\n")


def parse_edge_list(text: str) -> tuple[int, list[tuple[int, int]]]:
    lines = _content_lines(text)
    if not lines:
        raise FormatError("edge-list file is empty")
    ln, header = lines[0]
    parts = header.split()
    if len(parts) != 2:
        raise FormatError(f"line {ln}: expected header 'n m'")
    try:
        n, m = int(parts[0]), int(parts[1])
    except ValueError:
        raise FormatError(f"line {ln}: header must be two integers")
    if n < 0 or m < 0:
        raise FormatError(f"line {ln}: negative counts in header")
    body = lines[1:]
    if len(body) != m:
        raise FormatError(f"header promises {m} edges, file has {len(body)}")
    edges = []
    for ln, line in body:
        parts = line.split()
        if len(parts) != 2:
            raise FormatError(f"line {ln}: expected 'u v'")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise FormatError(f"line {ln}: vertex ids must be integers")
        if not (0 <= u < n and 0 <= v < n):
            raise FormatError(f"line {ln}: vertex id outside 0..{n - 1}")
        edges.append((u, v))
    return n, edges


def read_edge_list(path: str | os.PathLike) -> tuple[int, list[tuple[int, int]]]:
    with open(path, encoding="utf-8") as fh:
        return parse_edge_list(fh.read())


def write_edge_list(path: str | os.PathLike, g: PennyGraph) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(f"{g.n} {g.e}\n")
        for u, v in g.edges():
            fh.write(f"{u} {v}\n")


def parse_lists(text: str, n: int) -> list[list[int]]:
    lines = _content_lines(text)
    if len(lines) != n:
        raise FormatError(f"expected {n} list lines, got {len(lines)}")
    lists = []
    for ln, line in lines:
        try:
            colors = [int(tok) for tok in line.split()]
        except ValueError:
            raise FormatError(f"line {ln}: color ids must be integers")
        lists.append(colors)
    return lists


def read_lists(path: str | os.PathLike, n: int) -> list[list[int]]:
    with open(path, encoding="utf-8") as fh:
        return parse_lists(fh.read(), n)


def write_lists(path: str | os.PathLike, lists) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        for lst in lists:
            fh.write(" ".join(str(c) for c in lst) + "\n")


def parse_rotation(text: str, g: PennyGraph) -> RotationSystem:
    """Parse per-vertex ccw neighbor orders and verify each line is a
    permutation of that vertex's adjacency."""
    lines = _content_lines(text)
    if len(lines) != g.n:
        raise FormatError(f"expected {g.n} rotation lines, got {len(lines)}")
    order = []
    for v, (ln, line) in enumerate(lines):
        try:
            neigh = [int(tok) for tok in line.split()]
        except ValueError:
            raise FormatError(f"line {ln}: vertex ids must be integers")
        if sorted(neigh) != g.adj[v]:
            raise FormatError(
                f"line {ln}: rotation of vertex {v} is not a permutation "
                f"of its neighbors {g.adj[v]}"
            )
        order.append(neigh)
    return RotationSystem(order=order)


def read_rotation(path: str | os.PathLike, g: PennyGraph) -> RotationSystem:
    with open(path, encoding="utf-8") as fh:
        return parse_rotation(fh.read(), g)


def write_rotation(path: str | os.PathLike, rotation: RotationSystem) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        for neigh in rotation.order:
            fh.write(" ".join(str(u) for u in neigh) + "\n")


def load_graph(
    edge_path: str | os.PathLike, rotation_path: str | os.PathLike | None = None
) -> PennyGraph:
    """Edge-list file, optionally with a rotation file attached."""
    n, edges = read_edge_list(edge_path)
    g = PennyGraph.from_edges(n, edges)
    if rotation_path is not None:
        g.rotation = read_rotation(rotation_path, g)
    return g
