"""Figure and CSV rendering for suite runs.

The suite's report path writes one results.csv plus a set of PNG
figures summarizing the measured quantities against their bounds.
Only deterministic families feed the figures, so repeated runs at the
same scale produce identical CSV bytes and identical plotted data.
"""

from __future__ import annotations

import csv
import math
import os
from pathlib import Path

from .coloring import list_color, uniform_lists
from .faces import extract_faces, general_edge_bound, outer_incidences, squaregraph_edge_bound
from .generators import gen_grid, gen_hex_packing
from .geometry import tangency_graph
from .graphs import diameter
from .squaregraph import tight_squaregraph

FIGURE_DPI = 110


def collect_metric_rows(scale: str = "full") -> list[dict]:
    """Per-instance metrics for the deterministic families.

    One row per instance; inapplicable fields stay None.  Row order is
    fixed (grids, hex packings, tight squaregraphs, each by size).
    """
    grid_top = 30 if scale == "full" else 8
    sq_top = 200 if scale == "full" else 40
    rows: list[dict] = []
    for m in range(2, grid_top + 1):
        g = tangency_graph(gen_grid(m))
        fs = extract_faces(g)
        k = outer_incidences(fs)
        D = diameter(g)
        ops = list_color(g, uniform_lists(g.n, [0, 1, 2])).ops
        rows.append(
            {
                "family": "grid",
                "label": f"m={m}",
                "n": g.n,
                "e": g.e,
                "k": k,
                "diameter": D,
                "coloring_ops": ops,
                "bound_general": general_edge_bound(g.n),
                "bound_big_face_2e": 4 * g.n - k - 4,
                "bound_diameter": 2 * g.n - D - 2,
                "bound_squaregraph": squaregraph_edge_bound(g.n),
            }
        )
    for r in range(1, 6):
        g = tangency_graph(gen_hex_packing(r))
        rows.append(
            {
                "family": "hex",
                "label": f"r={r}",
                "n": g.n,
                "e": g.e,
                "k": None,
                "diameter": None,
                "coloring_ops": None,
                "bound_general": general_edge_bound(g.n),
                "bound_big_face_2e": None,
                "bound_diameter": None,
                "bound_squaregraph": None,
            }
        )
    for n in range(1, sq_top + 1):
        tc = tight_squaregraph(n)
        rows.append(
            {
                "family": "tight_squaregraph",
                "label": f"n={n}",
                "n": n,
                "e": tc.edges,
                "k": outer_incidences(tc.faces),
                "diameter": None,
                "coloring_ops": None,
                "bound_general": general_edge_bound(n),
                "bound_big_face_2e": None,
                "bound_diameter": None,
                "bound_squaregraph": tc.bound,
            }
        )
    return rows


CSV_FIELDS = [
    "family",
    "label",
    "n",
    "e",
    "k",
    "diameter",
    "coloring_ops",
    "bound_general",
    "bound_big_face_2e",
    "bound_diameter",
    "bound_squaregraph",
]


def write_results_csv(path: str | os.PathLike, rows: list[dict]) -> None:
    with open(path, "w", encoding="utf-8", newline="") as fh:
        writer = csv.DictWriter(fh, fieldnames=CSV_FIELDS)
        writer.writeheader()
        for row in rows:
            writer.writerow({k: ("" if row[k] is None else row[k]) for k in CSV_FIELDS})


def render_figures(out_dir: str | os.PathLike, scale: str = "full") -> list[Path]:
    """Write results.csv and the metric figures; return all paths."""
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    rows = collect_metric_rows(scale)
    written: list[Path] = []

    csv_path = out / "results.csv"
    write_results_csv(csv_path, rows)
    written.append(csv_path)

    grids = [r for r in rows if r["family"] == "grid"]
    hexes = [r for r in rows if r["family"] == "hex"]
    squares = [r for r in rows if r["family"] == "tight_squaregraph"]

    def save(fig, name: str) -> None:
        path = out / name
        fig.savefig(path, dpi=FIGURE_DPI, bbox_inches="tight")
        plt.close(fig)
        written.append(path)

    # edge counts against the three bounds
    fig, ax = plt.subplots(figsize=(6.5, 4.5))
    ns = [r["n"] for r in grids]
    ax.plot(ns, [r["e"] for r in grids], "o-", label="grid edges")
    ax.plot(ns, [r["bound_diameter"] for r in grids], "--", label="2n - D - 2")
    ax.plot(
        ns, [r["bound_big_face_2e"] / 2 for r in grids], ":", label="2n - k/2 - 2"
    )
    ax.plot(ns, [r["bound_general"] for r in grids], "-.", label="floor(3n - sqrt(12n-3))")
    hx = [r["n"] for r in hexes]
    ax.plot(hx, [r["e"] for r in hexes], "s", label="hex edges (= general bound)")
    ax.set_xlabel("n")
    ax.set_ylabel("edges")
    ax.set_title("edge counts vs bounds")
    ax.legend(fontsize=8)
    save(fig, "edge_bounds.png")

    # outer-face incidences vs the isoperimetric threshold
    fig, ax = plt.subplots(figsize=(6.5, 4.5))
    ax.plot(ns, [r["k"] for r in grids], "o-", label="grid outer incidences k")
    ax.plot(
        ns,
        [3.3 * math.sqrt(n) - 12.0 for n in ns],
        "--",
        label="3.3*sqrt(n) - 12",
    )
    ax.set_xlabel("n")
    ax.set_ylabel("k")
    ax.set_title("outer-face incidences vs isoperimetric threshold")
    ax.legend(fontsize=8)
    save(fig, "isoperimetric.png")

    # coloring work vs instance size
    fig, ax = plt.subplots(figsize=(6.5, 4.5))
    xs = [r["n"] + r["e"] for r in grids]
    ys = [r["coloring_ops"] for r in grids]
    c_fit = sum(x * y for x, y in zip(xs, ys)) / sum(x * x for x in xs)
    ax.plot(xs, ys, "o", label="measured ops")
    ax.plot(xs, [c_fit * x for x in xs], "--", label=f"fit {c_fit:.2f}*(n+e)")
    ax.set_xlabel("n + e")
    ax.set_ylabel("primitive operations")
    ax.set_title("list-coloring operation counts")
    ax.legend(fontsize=8)
    save(fig, "coloring_ops.png")

    # diameter scaling on grids
    fig, ax = plt.subplots(figsize=(6.5, 4.5))
    ax.plot(ns, [r["diameter"] for r in grids], "o-", label="grid diameter")
    ax.plot(ns, [2 * (math.isqrt(n) - 1) for n in ns], "--", label="2(m - 1)")
    ax.plot(ns, [0.5 * math.sqrt(n) for n in ns], ":", label="0.5*sqrt(n)")
    ax.set_xlabel("n")
    ax.set_ylabel("D")
    ax.set_title("grid diameter scaling")
    ax.legend(fontsize=8)
    save(fig, "diameter_scaling.png")

    # squaregraph staircase
    fig, ax = plt.subplots(figsize=(6.5, 4.5))
    sn = [r["n"] for r in squares]
    ax.step(sn, [r["e"] for r in squares], where="post", label="tight construction")
    ax.plot(
        sn,
        [2 * n - 2 * math.sqrt(n) for n in sn],
        "--",
        alpha=0.7,
        label="2n - 2*sqrt(n)",
    )
    ax.set_xlabel("n")
    ax.set_ylabel("edges")
    ax.set_title("squaregraph edge maximum: floor(2n - 2*sqrt(n))")
    ax.legend(fontsize=8)
    save(fig, "squaregraph_staircase.png")

    return written
