"""Verification reports: per-instance check pipelines and the suite.

A report is a JSON-ready bundle {spec, checks, version, seed} plus a
timing block that determinism comparisons strip.  Single instances get
one check record per verified statement; the suite compresses each
battery criterion into one aggregate record and appends detail records
only for failures, so green reports stay small and red ones name the
culprit instances.
"""

from __future__ import annotations

import json
import math
import time
from dataclasses import dataclass, field
from functools import cached_property

from .coloring import (
    brute_force_list_coloring,
    choosability_oracle,
    list_color,
    uniform_lists,
)
from .errors import NotSquaregraph
from .faces import (
    DEFAULT_ISOPERIMETRIC_CONSTANT,
    CheckRecord,
    check_edge_bounds,
    extract_faces,
    outer_incidences,
    general_edge_bound,
)
from .generators import (
    InstanceSpec,
    SplitMix64,
    gen_cycle,
    gen_grid,
    gen_hex_packing,
    random_instance_specs,
)
from .geometry import (
    HEX_CELL_AREA,
    PennyConfiguration,
    tangency_graph,
    turning_angles,
    voronoi_cells,
)
from .graphs import (
    PennyGraph,
    biconnected_components,
    degeneracy_order,
    diameter,
    find_triangle,
    is_connected,
    low_degree_census,
)
from .squaregraph import squaregraph_bounds, tight_squaregraph, validate_squaregraph
from .version import VERSION

AREA_TOLERANCE = 1e-9
ANGLE_TOLERANCE = 1e-9
DEFAULT_SEED = 7

# what the numbers in check records mean, for cross-tool consumers
SEMANTICS = {
    "length_unit": "disk radii; after normalization every disk has radius 1",
    "area": "square radii",
    "angle": "radians",
    "margin": "bound minus measured value for upper bounds, measured minus "
    "bound for lower bounds; nonnegative means the check passed",
    "passed": "true/false for evaluated checks, null for skipped ones",
    "asserted": "false marks informational records that do not gate the "
    "exit code",
}


def _js(value):
    """Make a measured value JSON-stable (plain int/float/str/bool)."""
    if isinstance(value, bool) or value is None:
        return value
    if isinstance(value, int):
        return value
    if isinstance(value, float):
        return float(value)
    if isinstance(value, (list, tuple)):
        return [_js(v) for v in value]
    if isinstance(value, dict):
        return {str(k): _js(v) for k, v in value.items()}
    if hasattr(value, "item"):
        return value.item()
    return str(value)


@dataclass
class VerificationReport:
    spec: dict
    checks: list[CheckRecord]
    version: str = VERSION
    seed: int | None = None
    timing: dict = field(default_factory=dict)

    def to_json(self, strip_timing: bool = False) -> dict:
        doc = {
            "spec": _js(self.spec),
            "checks": [_js(c.to_json()) for c in self.checks],
            "version": self.version,
            "seed": self.seed,
            "semantics": SEMANTICS,
        }
        if not strip_timing:
            doc["timing"] = _js(self.timing)
        return doc

    def to_text(self, strip_timing: bool = False) -> str:
        return json.dumps(self.to_json(strip_timing), indent=2, sort_keys=True)

    def failed(self) -> list[CheckRecord]:
        return [c for c in self.checks if c.asserted and c.passed is False]

    def all_passed(self) -> bool:
        return not self.failed()


class InstanceAnalysis:
    """Lazily computed facts about one configuration, shared by every
    check that looks at the same instance."""

    def __init__(self, name: str, cfg: PennyConfiguration):
        self.name = name
        self.cfg = cfg

    @cached_property
    def graph(self) -> PennyGraph:
        return tangency_graph(self.cfg)

    @cached_property
    def triangle(self):
        return find_triangle(self.graph)

    @property
    def triangle_free(self) -> bool:
        return self.triangle is None

    @cached_property
    def connected(self) -> bool:
        return is_connected(self.graph)

    @cached_property
    def census(self):
        return low_degree_census(self.graph)

    @cached_property
    def degeneracy(self):
        return degeneracy_order(self.graph)

    @cached_property
    def faces(self):
        return extract_faces(self.graph)

    @property
    def k(self) -> int:
        return outer_incidences(self.faces)

    @cached_property
    def diameter(self) -> int:
        return diameter(self.graph)

    @cached_property
    def blocks(self):
        return biconnected_components(self.graph)

    @cached_property
    def voronoi(self):
        return voronoi_cells(self.cfg)

    @cached_property
    def turning(self):
        """Turning-angle traces, one per nontrivial block."""
        traces = []
        for i in self.blocks.nontrivial():
            traces.append(
                turning_angles(self.cfg, self.graph, self.blocks.components[i])
            )
        return traces


@dataclass
class CriterionResult:
    number: int
    key: str
    title: str
    passed: bool
    summary: dict
    failures: list[CheckRecord] = field(default_factory=list)
    elapsed: float = 0.0

    def record(self) -> CheckRecord:
        return CheckRecord(
            id=f"criterion_{self.number}_{self.key}",
            anchor=self.title,
            passed=self.passed,
            measured=_js(self.summary),
        )


def _fail(cid: str, anchor: str, instance: str, measured: dict) -> CheckRecord:
    return CheckRecord(
        id=cid,
        anchor=anchor,
        passed=False,
        measured=_js(measured),
        instance=instance,
    )


# ---------------------------------------------------------------------------
# corpus definition


def deterministic_instance_specs(scale: str) -> list[InstanceSpec]:
    full = scale == "full"
    grids = range(2, 31) if full else range(2, 9)
    hexes = range(0, 6) if full else range(0, 3)
    cycles = (
        list(range(3, 13)) + [25, 101, 500, 1001] if full else list(range(3, 13))
    )
    paths = [1, 2, 3, 10, 50] if full else [1, 2, 3, 10]
    trimmed = [2, 5, 7, 10, 12, 20, 37, 101, 150, 200] if full else [2, 5, 7, 10, 12]
    specs: list[InstanceSpec] = []
    specs += [InstanceSpec("grid", {"m": m}) for m in grids]
    specs += [InstanceSpec("hex", {"r": r}) for r in hexes]
    specs += [InstanceSpec("cycle", {"n": n}) for n in cycles]
    specs += [InstanceSpec("path", {"n": n}) for n in paths]
    specs += [InstanceSpec("trimmed_grid", {"n": n}) for n in trimmed]
    return specs


def corpus_specs(scale: str, seed: int) -> list[InstanceSpec]:
    count = 1000 if scale == "full" else 50
    return deterministic_instance_specs(scale) + random_instance_specs(seed, count)


def corpus_pass(specs: list[InstanceSpec], collectors: list) -> None:
    for idx, spec in enumerate(specs):
        an = InstanceAnalysis(spec.name, spec.build())
        for c in collectors:
            c.observe(idx, an)


# ---------------------------------------------------------------------------
# corpus collectors (criteria that sweep every instance)


class DegeneracyCollector:
    """Criterion 2: degeneracy <= 2 triangle-free, <= 3 in general."""

    number, key = 2, "degeneracy"
    title = (
        "triangle-free contact graphs are 2-degenerate; all contact "
        "graphs are 3-degenerate (hex packings reach 3)"
    )

    def __init__(self):
        self.instances = 0
        self.max_tf = 0
        self.max_all = 0
        self.failures: list[CheckRecord] = []

    def observe(self, idx: int, an: InstanceAnalysis):
        self.instances += 1
        d = an.degeneracy.d
        self.max_all = max(self.max_all, d)
        if an.triangle_free:
            self.max_tf = max(self.max_tf, d)
            if d > 2:
                self.failures.append(
                    _fail(
                        "degeneracy_le_2",
                        "2-degeneracy of a triangle-free instance",
                        an.name,
                        {"degeneracy": d},
                    )
                )
        if d > 3:
            self.failures.append(
                _fail(
                    "degeneracy_le_3",
                    "3-degeneracy of a contact graph",
                    an.name,
                    {"degeneracy": d},
                )
            )

    def finish(self) -> CriterionResult:
        hex_max = 0
        for r in range(1, 6):
            g = tangency_graph(gen_hex_packing(r))
            dg = degeneracy_order(g)
            hex_max = max(hex_max, dg.d)
            if dg.d > 3:
                self.failures.append(
                    _fail(
                        "degeneracy_le_3",
                        "3-degeneracy of a contact graph",
                        f"hex(r={r})",
                        {"degeneracy": dg.d},
                    )
                )
        return CriterionResult(
            self.number,
            self.key,
            self.title,
            passed=not self.failures,
            summary={
                "instances": self.instances,
                "max_degeneracy_triangle_free": self.max_tf,
                "max_degeneracy_overall": max(self.max_all, hex_max),
                "hex_max_degeneracy": hex_max,
            },
            failures=self.failures,
        )


class CensusCollector:
    """Criterion 3: four non-articulation low-degree vertices."""

    number, key = 3, "degree_two_census"
    title = (
        "every cyclic triangle-free instance has >= 4 non-articulation "
        "vertices of degree <= 2, and every nontrivial block has >= 4 "
        "in-block degree-2 vertices"
    )

    def __init__(self):
        self.cyclic_instances = 0
        self.blocks = 0
        self.min_census = None
        self.min_block = None
        self.failures: list[CheckRecord] = []

    def observe(self, idx: int, an: InstanceAnalysis):
        if not an.triangle_free:
            return
        census = an.census
        if not census.has_cycle:
            return
        self.cyclic_instances += 1
        c = census.count
        self.min_census = c if self.min_census is None else min(self.min_census, c)
        if c < 4:
            self.failures.append(
                _fail(
                    "four_non_articulation_low_degree",
                    "cyclic triangle-free instance needs >= 4 "
                    "non-articulation vertices of degree <= 2",
                    an.name,
                    {"count": c},
                )
            )
        for bi, cnt in census.per_block_degree2:
            self.blocks += 1
            self.min_block = (
                cnt if self.min_block is None else min(self.min_block, cnt)
            )
            if cnt < 4:
                self.failures.append(
                    _fail(
                        "block_degree_two",
                        "nontrivial block needs >= 4 in-block degree-2 "
                        "vertices",
                        an.name,
                        {"block": bi, "count": cnt},
                    )
                )

    def finish(self) -> CriterionResult:
        return CriterionResult(
            self.number,
            self.key,
            self.title,
            passed=not self.failures,
            summary={
                "cyclic_instances": self.cyclic_instances,
                "nontrivial_blocks": self.blocks,
                "min_non_articulation_count": self.min_census,
                "min_block_degree2_count": self.min_block,
            },
            failures=self.failures,
        )


class ColoringCollector:
    """Criterion 4: removal coloring succeeds on random 3-lists and
    agrees with the exhaustive oracle on small instances."""

    number, key = 4, "list_coloring"
    title = (
        "random 3-lists from a 6-color universe always color the "
        "triangle-free corpus; n <= 10 outcomes match the exhaustive "
        "oracle; C5 is 3-choosable but not 2-choosable"
    )

    LISTS_STREAM = 0x715C0FFEE  # separates list randomness from the corpus

    def __init__(self, seed: int):
        self.seed = seed
        self.instances = 0
        self.oracle_checked = 0
        self.failures: list[CheckRecord] = []

    def _random_lists(self, idx: int, n: int) -> list[list[int]]:
        rng = SplitMix64(SplitMix64.derive(self.seed ^ self.LISTS_STREAM, idx))
        lists = []
        for _ in range(n):
            pool = list(range(6))
            lst = []
            for _ in range(3):
                lst.append(pool.pop(rng.next_below(len(pool))))
            lists.append(sorted(lst))
        return lists

    def observe(self, idx: int, an: InstanceAnalysis):
        if not an.triangle_free:
            return
        self.instances += 1
        g = an.graph
        lists = self._random_lists(idx, g.n)
        res = list_color(g, lists)
        if not (res.success and res.is_proper(g, lists)):
            self.failures.append(
                _fail(
                    "list_color_3_lists",
                    "3-lists always suffice on a 2-degenerate instance",
                    an.name,
                    {"success": res.success},
                )
            )
        if g.n <= 10:
            self.oracle_checked += 1
            oracle = brute_force_list_coloring(g, lists)
            if res.success != (oracle is not None):
                self.failures.append(
                    _fail(
                        "oracle_agreement",
                        "removal coloring agrees with the exhaustive "
                        "oracle on success/failure",
                        an.name,
                        {"removal": res.success, "oracle": oracle is not None},
                    )
                )

    def finish(self) -> CriterionResult:
        c5 = tangency_graph(gen_cycle(5))
        three, _ = choosability_oracle(c5, 3)
        two, witness = choosability_oracle(c5, 2)
        if not three or two:
            self.failures.append(
                _fail(
                    "c5_choosability",
                    "C5 is 3-choosable and not 2-choosable",
                    "cycle(n=5)",
                    {"choosable_3": three, "choosable_2": two},
                )
            )
        return CriterionResult(
            self.number,
            self.key,
            self.title,
            passed=not self.failures,
            summary={
                "instances": self.instances,
                "oracle_cross_checked": self.oracle_checked,
                "c5_choosable_3": three,
                "c5_choosable_2": two,
                "c5_witness_2": witness,
            },
            failures=self.failures,
        )


class VoronoiCollector:
    """Criterion 6: interior Voronoi cells have area >= 2*sqrt(3)."""

    number, key = 6, "voronoi_cells"
    title = (
        "every bounded Voronoi cell of a contact configuration has area "
        ">= 2*sqrt(3) - 1e-9; the hexagonal flower's center cell equals "
        "2*sqrt(3) within 1e-9"
    )

    def __init__(self):
        self.instances = 0
        self.bounded_cells = 0
        self.min_area = None
        self.failures: list[CheckRecord] = []

    def observe(self, idx: int, an: InstanceAnalysis):
        self.instances += 1
        for cell in an.voronoi:
            if not cell.bounded:
                continue
            self.bounded_cells += 1
            a = cell.area
            self.min_area = a if self.min_area is None else min(self.min_area, a)
            if a < HEX_CELL_AREA - AREA_TOLERANCE:
                self.failures.append(
                    _fail(
                        "voronoi_interior_area",
                        "bounded cell area >= 2*sqrt(3) - 1e-9",
                        an.name,
                        {"vertex": cell.vertex, "area": a},
                    )
                )

    def finish(self) -> CriterionResult:
        flower = voronoi_cells(gen_hex_packing(1))
        center = [c for c in flower if c.bounded]
        err = (
            abs(center[0].area - HEX_CELL_AREA) if len(center) == 1 else math.inf
        )
        if err > AREA_TOLERANCE:
            self.failures.append(
                _fail(
                    "hex_flower_center_area",
                    "hex flower center cell area equals 2*sqrt(3)",
                    "hex(r=1)",
                    {"bounded_cells": len(center), "error": err},
                )
            )
        return CriterionResult(
            self.number,
            self.key,
            self.title,
            passed=not self.failures,
            summary={
                "instances": self.instances,
                "bounded_cells": self.bounded_cells,
                "min_area": self.min_area,
                "min_margin": None
                if self.min_area is None
                else self.min_area - (HEX_CELL_AREA - AREA_TOLERANCE),
                "hex_center_area_error": err,
            },
            failures=self.failures,
        )


class TurningCollector:
    """Criterion 7: per-block boundary turning angles obey the sign and sum rules."""

    number, key = 7, "turning_angles"
    title = (
        "on every biconnected triangle-free block: turning angles sum "
        "to 2*pi, are <= 0 at degree >= 3, are < 2*pi/3 at degree 2, "
        "and at least four are strictly positive"
    )

    def __init__(self):
        self.blocks = 0
        self.worst_sum_error = 0.0
        self.max_high_degree_theta = None
        self.max_degree2_theta = None
        self.min_positive_count = None
        self.failures: list[CheckRecord] = []

    def observe(self, idx: int, an: InstanceAnalysis):
        if not an.triangle_free:
            return
        for trace in an.turning:
            self.blocks += 1
            err = abs(trace.total - 2.0 * math.pi)
            self.worst_sum_error = max(self.worst_sum_error, err)
            if err > ANGLE_TOLERANCE:
                self.failures.append(
                    _fail(
                        "turning_angle_sum",
                        "turning angles around a block boundary sum to 2*pi",
                        an.name,
                        {"sum": trace.total, "error": err},
                    )
                )
            pos = trace.positive_count()
            self.min_positive_count = (
                pos
                if self.min_positive_count is None
                else min(self.min_positive_count, pos)
            )
            if pos < 4:
                self.failures.append(
                    _fail(
                        "turning_angle_positive_count",
                        "at least four strictly positive turning angles",
                        an.name,
                        {"positive": pos},
                    )
                )
            for theta, deg in zip(trace.theta, trace.degrees):
                if deg >= 3:
                    self.max_high_degree_theta = (
                        theta
                        if self.max_high_degree_theta is None
                        else max(self.max_high_degree_theta, theta)
                    )
                    if theta > ANGLE_TOLERANCE:
                        self.failures.append(
                            _fail(
                                "turning_angle_high_degree",
                                "no positive turn at a boundary vertex of "
                                "degree >= 3",
                                an.name,
                                {"theta": theta, "degree": deg},
                            )
                        )
                else:
                    self.max_degree2_theta = (
                        theta
                        if self.max_degree2_theta is None
                        else max(self.max_degree2_theta, theta)
                    )
                    if theta >= 2.0 * math.pi / 3.0:
                        self.failures.append(
                            _fail(
                                "turning_angle_degree_two",
                                "turn at a degree-2 boundary vertex stays "
                                "below 2*pi/3",
                                an.name,
                                {"theta": theta},
                            )
                        )

    def finish(self) -> CriterionResult:
        return CriterionResult(
            self.number,
            self.key,
            self.title,
            passed=not self.failures,
            summary={
                "blocks": self.blocks,
                "worst_sum_error": self.worst_sum_error,
                "max_theta_degree_ge_3": self.max_high_degree_theta,
                "max_theta_degree_2": self.max_degree2_theta,
                "degree2_theta_cap": 2.0 * math.pi / 3.0,
                "min_positive_count": self.min_positive_count,
            },
            failures=self.failures,
        )


class EdgeBoundCollector:
    """Criterion 8: the three edge bounds, exact arithmetic."""

    number, key = 8, "edge_bounds"
    title = (
        "e <= 2n - k/2 - 2 and e <= 2n - D - 2 on triangle-free "
        "instances; e <= floor(3n - sqrt(12n - 3)) everywhere, with "
        "equality on hex packings"
    )

    def __init__(self):
        self.instances = 0
        self.triangle_free_instances = 0
        self.min_margins = {"big_face": None, "diameter": None, "general": None}
        self.failures: list[CheckRecord] = []

    def _margin(self, key: str, value) -> None:
        cur = self.min_margins[key]
        self.min_margins[key] = value if cur is None else min(cur, value)

    def observe(self, idx: int, an: InstanceAnalysis):
        self.instances += 1
        g = an.graph
        n, e = g.n, g.e
        if an.triangle_free:
            self.triangle_free_instances += 1
            k = an.k
            self._margin("big_face", (4 * n - k - 4) - 2 * e)
            if 2 * e > 4 * n - k - 4:
                self.failures.append(
                    _fail(
                        "big_face_edge_bound",
                        "e <= 2n - k/2 - 2 (as 2e <= 4n - k - 4)",
                        an.name,
                        {"e": e, "n": n, "k": k},
                    )
                )
            D = an.diameter
            self._margin("diameter", (2 * n - D - 2) - e)
            if e > 2 * n - D - 2:
                self.failures.append(
                    _fail(
                        "diameter_edge_bound",
                        "e <= 2n - D - 2",
                        an.name,
                        {"e": e, "n": n, "D": D},
                    )
                )
        bound = general_edge_bound(n)
        self._margin("general", bound - e)
        if e > bound:
            self.failures.append(
                _fail(
                    "general_edge_bound",
                    "e <= floor(3n - sqrt(12n - 3))",
                    an.name,
                    {"e": e, "n": n, "bound": bound},
                )
            )

    def finish(self) -> CriterionResult:
        hex_equalities = []
        for r in range(1, 6):
            g = tangency_graph(gen_hex_packing(r))
            bound = general_edge_bound(g.n)
            hex_equalities.append(g.e == bound)
            if g.e != bound:
                self.failures.append(
                    _fail(
                        "hex_edge_equality",
                        "hex packings meet floor(3n - sqrt(12n - 3)) exactly",
                        f"hex(r={r})",
                        {"e": g.e, "bound": bound},
                    )
                )
        # derived consequence, never asserted: combining k >= 3.3*sqrt(n) - 12
        # with the big-face bound yields e <= 2n - 1.65*sqrt(n) + 4 on grids
        asym_margin = None
        for m in range(2, 31):
            g = tangency_graph(gen_grid(m))
            margin = (2 * g.n - 1.65 * math.sqrt(g.n) + 4) - g.e
            asym_margin = margin if asym_margin is None else min(asym_margin, margin)
        return CriterionResult(
            self.number,
            self.key,
            self.title,
            passed=not self.failures,
            summary={
                "instances": self.instances,
                "triangle_free_instances": self.triangle_free_instances,
                "min_margin_big_face_2e": self.min_margins["big_face"],
                "min_margin_diameter": self.min_margins["diameter"],
                "min_margin_general": self.min_margins["general"],
                "hex_equalities": hex_equalities,
                "asymptotic_consequence_min_margin_grids": asym_margin,
            },
            failures=self.failures,
        )


# ---------------------------------------------------------------------------
# family criteria (fixed generated families, no corpus sweep)


def criterion_grid_edges(scale: str) -> CriterionResult:
    top = 30 if scale == "full" else 8
    failures = []
    for m in range(2, top + 1):
        g = tangency_graph(gen_grid(m))
        n = g.n
        root = math.isqrt(n)
        expected = 2 * n - 2 * root
        if root * root != n or g.e != expected:
            failures.append(
                _fail(
                    "grid_edge_formula",
                    "square grids have exactly 2n - 2*sqrt(n) edges",
                    f"grid(m={m})",
                    {"e": g.e, "expected": expected},
                )
            )
    return CriterionResult(
        1,
        "grid_edge_formula",
        "square grids m = 2..30 satisfy e = 2n - 2*sqrt(n) exactly",
        passed=not failures,
        summary={"grids": top - 1, "m_max": top},
        failures=failures,
    )


def criterion_linear_ops(scale: str) -> CriterionResult:
    top = 30 if scale == "full" else 8
    xs, ys = [], []
    for m in range(3, top + 1):
        g = tangency_graph(gen_grid(m))
        res = list_color(g, uniform_lists(g.n, [0, 1, 2]))
        xs.append(g.n + g.e)
        ys.append(res.ops)
    c_fit = sum(x * y for x, y in zip(xs, ys)) / sum(x * x for x in xs)
    ratios = [y / (c_fit * x) for x, y in zip(xs, ys)]
    worst = max(ratios)
    failures = []
    if worst > 1.25:
        failures.append(
            _fail(
                "linear_ops_fit",
                "list-coloring operation counts fit ops <= C*(n + e) with "
                "max residual ratio <= 1.25",
                f"grid(m={3 + ratios.index(worst)})",
                {"C": c_fit, "worst_ratio": worst},
            )
        )
    return CriterionResult(
        5,
        "linear_time_contract",
        "list_color operation counts fit ops <= C*(n + e) across grids "
        "(max residual ratio <= 1.25)",
        passed=not failures,
        summary={
            "grids": len(xs),
            "fitted_C": c_fit,
            "max_residual_ratio": worst,
            "min_residual_ratio": min(ratios),
        },
        failures=failures,
    )


def criterion_isoperimetric(scale: str) -> CriterionResult:
    top = 30 if scale == "full" else 8
    failures = []
    min_margin = None
    for m in range(2, top + 1):
        g = tangency_graph(gen_grid(m))
        fs = extract_faces(g)
        k = outer_incidences(fs)
        threshold = 3.3 * math.sqrt(g.n) - 12.0
        margin = k - threshold
        min_margin = margin if min_margin is None else min(min_margin, margin)
        if k < threshold:
            failures.append(
                _fail(
                    "isoperimetric_outer_face",
                    "grid outer face carries k >= 3.3*sqrt(n) - 12 "
                    "vertex incidences",
                    f"grid(m={m})",
                    {"k": k, "threshold": threshold},
                )
            )
    return CriterionResult(
        9,
        "isoperimetric_outer_face",
        "grids m = 2..30 satisfy k >= 3.3*sqrt(n) - 12 on the outer face",
        passed=not failures,
        summary={"grids": top - 1, "min_margin": min_margin},
        failures=failures,
    )


def criterion_grid_diameter(scale: str) -> CriterionResult:
    top = 30 if scale == "full" else 8
    failures = []
    min_ratio = None
    for m in range(2, top + 1):
        g = tangency_graph(gen_grid(m))
        D = diameter(g)
        ratio = D / math.sqrt(g.n)
        min_ratio = ratio if min_ratio is None else min(min_ratio, ratio)
        if D != 2 * (m - 1) or ratio < 0.5:
            failures.append(
                _fail(
                    "grid_diameter",
                    "grid diameter equals 2(m - 1) and D/sqrt(n) >= 0.5",
                    f"grid(m={m})",
                    {"D": D, "expected": 2 * (m - 1), "ratio": ratio},
                )
            )
    return CriterionResult(
        10,
        "grid_diameter",
        "grid diameters equal 2(m - 1) with D/sqrt(n) >= 0.5",
        passed=not failures,
        summary={"grids": top - 1, "min_ratio": min_ratio},
        failures=failures,
    )


def criterion_squaregraph(scale: str) -> CriterionResult:
    top = 200 if scale == "full" else 40
    failures = []
    min_turan_margin = None
    for n in range(1, top + 1):
        name = f"tight_squaregraph(n={n})"
        try:
            tc = tight_squaregraph(n)
        except NotSquaregraph as exc:
            failures.append(
                _fail(
                    "squaregraph_valid",
                    "tight construction validates as a squaregraph",
                    name,
                    {"violations": exc.violations},
                )
            )
            continue
        if not tc.tight:
            failures.append(
                _fail(
                    "squaregraph_tight",
                    "tight construction meets floor(2n - 2*sqrt(n)) exactly",
                    name,
                    {"e": tc.edges, "bound": tc.bound},
                )
            )
        D = diameter(tc.graph) if n > 1 else 0
        rep = squaregraph_bounds(tc.graph, tc.faces, diameter=D)
        for c in rep.failed():
            failures.append(
                _fail(c.id, c.anchor, name, dict(c.measured))
            )
        for c in rep.checks:
            if c.id == "turan_crossing_bound" and c.margin is not None:
                min_turan_margin = (
                    c.margin
                    if min_turan_margin is None
                    else min(min_turan_margin, c.margin)
                )
    return CriterionResult(
        11,
        "squaregraph_family",
        "tight squaregraphs n = 1..200 validate, meet floor(2n - 2*sqrt(n)) "
        "exactly, and satisfy the Turan and diameter bounds",
        passed=not failures,
        summary={"sizes": top, "min_turan_margin": min_turan_margin},
        failures=failures,
    )


# ---------------------------------------------------------------------------
# suite


def run_suite(
    scale: str = "full",
    seed: int = DEFAULT_SEED,
    isoperimetric_constant: float = DEFAULT_ISOPERIMETRIC_CONSTANT,
) -> VerificationReport:
    """Run the whole battery (criteria 1-11) at the chosen scale.

    One streaming pass feeds the corpus-sweeping criteria so every
    instance is built and analyzed exactly once; family criteria run
    standalone.  Record order is fixed by criterion number, never by
    completion order.
    """
    if scale not in ("small", "full"):
        raise ValueError(f"unknown scale {scale!r}")
    t_start = time.perf_counter()
    specs = corpus_specs(scale, seed)

    collectors = [
        DegeneracyCollector(),
        CensusCollector(),
        ColoringCollector(seed),
        VoronoiCollector(),
        TurningCollector(),
        EdgeBoundCollector(),
    ]
    t0 = time.perf_counter()
    corpus_pass(specs, collectors)
    sweep_seconds = time.perf_counter() - t0

    results: list[CriterionResult] = []
    timing: dict[str, float] = {}

    def run(fn, *args):
        t0 = time.perf_counter()
        res = fn(*args)
        res.elapsed = time.perf_counter() - t0
        results.append(res)

    run(criterion_grid_edges, scale)
    for col in collectors:
        t0 = time.perf_counter()
        res = col.finish()
        res.elapsed = time.perf_counter() - t0
        results.append(res)
    run(criterion_linear_ops, scale)
    run(criterion_isoperimetric, scale)
    run(criterion_grid_diameter, scale)
    run(criterion_squaregraph, scale)

    results.sort(key=lambda r: r.number)
    checks: list[CheckRecord] = []
    for r in results:
        checks.append(r.record())
        checks.extend(r.failures)
        timing[f"criterion_{r.number}"] = round(r.elapsed, 6)
    timing["corpus_sweep_seconds"] = round(sweep_seconds, 6)
    timing["total_seconds"] = round(time.perf_counter() - t_start, 6)

    spec = {
        "command": "suite",
        "scale": scale,
        "instances": len(specs),
        "random_instances": sum(1 for s in specs if s.seed is not None),
        "isoperimetric_constant": isoperimetric_constant,
    }
    return VerificationReport(spec=spec, checks=checks, seed=seed, timing=timing)


# ---------------------------------------------------------------------------
# single-instance verification (the `verify` command)


def verify_configuration(
    cfg: PennyConfiguration,
    *,
    name: str = "point-set",
    isoperimetric_constant: float = DEFAULT_ISOPERIMETRIC_CONSTANT,
    check_ids: set[str] | None = None,
    seed: int | None = None,
) -> VerificationReport:
    """Every applicable check on one configuration, fully itemized.

    Triangle-bearing inputs skip the triangle-free group (recorded as
    skipped, not failed); disconnected inputs skip face and distance
    checks the same way.  ``check_ids`` restricts output to a subset.
    """
    t0 = time.perf_counter()
    an = InstanceAnalysis(name, cfg)
    checks: list[CheckRecord] = []
    g = an.graph

    checks.append(
        CheckRecord(
            id="triangle_free",
            anchor="status: triangle detection selects which bound group "
            "applies",
            passed=None,
            asserted=False,
            measured={"triangle_free": an.triangle_free, "witness": an.triangle},
        )
    )
    d = an.degeneracy.d
    if an.triangle_free:
        checks.append(
            CheckRecord(
                id="degeneracy_le_2",
                anchor="triangle-free contact graphs are 2-degenerate",
                passed=(d <= 2),
                measured={"degeneracy": d},
                bound=2,
            )
        )
    checks.append(
        CheckRecord(
            id="degeneracy_le_3",
            anchor="contact graphs are 3-degenerate",
            passed=(d <= 3),
            measured={"degeneracy": d},
            bound=3,
        )
    )
    if an.triangle_free:
        census = an.census
        if census.has_cycle:
            checks.append(
                CheckRecord(
                    id="four_non_articulation_low_degree",
                    anchor="a cyclic triangle-free instance has >= 4 "
                    "non-articulation vertices of degree <= 2",
                    passed=(census.count >= 4),
                    measured={"count": census.count},
                    bound=4,
                )
            )
            for bi, cnt in census.per_block_degree2:
                checks.append(
                    CheckRecord(
                        id="block_degree_two",
                        anchor="every nontrivial block has >= 4 in-block "
                        "degree-2 vertices",
                        passed=(cnt >= 4),
                        measured={"block": bi, "count": cnt},
                        bound=4,
                    )
                )
        else:
            checks.append(
                CheckRecord(
                    id="four_non_articulation_low_degree",
                    anchor="a cyclic triangle-free instance has >= 4 "
                    "non-articulation vertices of degree <= 2",
                    passed=None,
                    asserted=False,
                    measured={},
                    note="acyclic instance: census not applicable",
                )
            )

    if an.connected:
        fs = an.faces
        D = an.diameter
        bounds = check_edge_bounds(
            g,
            fs,
            diameter=D,
            triangle_free=an.triangle_free,
            isoperimetric_constant=isoperimetric_constant,
        )
        checks.extend(bounds.checks)
        if an.triangle_free and an.blocks.nontrivial():
            worst_sum = 0.0
            positives = []
            theta_viol = 0
            for trace in an.turning:
                worst_sum = max(worst_sum, abs(trace.total - 2.0 * math.pi))
                positives.append(trace.positive_count())
                for theta, deg in zip(trace.theta, trace.degrees):
                    if deg >= 3 and theta > ANGLE_TOLERANCE:
                        theta_viol += 1
                    if deg == 2 and theta >= 2.0 * math.pi / 3.0:
                        theta_viol += 1
            checks.append(
                CheckRecord(
                    id="turning_angles",
                    anchor="block boundary turning angles: sum 2*pi, <= 0 at "
                    "degree >= 3, < 2*pi/3 at degree 2, >= 4 positive",
                    passed=(
                        worst_sum <= ANGLE_TOLERANCE
                        and theta_viol == 0
                        and min(positives) >= 4
                    ),
                    measured={
                        "blocks": len(positives),
                        "worst_sum_error": worst_sum,
                        "min_positive_count": min(positives),
                        "degree_rule_violations": theta_viol,
                    },
                )
            )
    else:
        checks.append(
            CheckRecord(
                id="faces_and_bounds",
                anchor="face and distance checks need a connected instance",
                passed=None,
                asserted=False,
                measured={},
                note="disconnected input: skipped",
            )
        )

    bounded = [c for c in an.voronoi if c.bounded]
    min_area = min((c.area for c in bounded), default=None)
    checks.append(
        CheckRecord(
            id="voronoi_interior_area",
            anchor="every bounded Voronoi cell has area >= 2*sqrt(3) - 1e-9",
            passed=(
                True
                if min_area is None
                else min_area >= HEX_CELL_AREA - AREA_TOLERANCE
            ),
            measured={"bounded_cells": len(bounded), "min_area": min_area},
            bound=HEX_CELL_AREA,
            margin=None if min_area is None else min_area - HEX_CELL_AREA,
        )
    )

    if an.connected:
        try:
            sq_fs = validate_squaregraph(g)
        except NotSquaregraph as exc:
            checks.append(
                CheckRecord(
                    id="squaregraph_applicable",
                    anchor="squaregraph checks apply only to valid "
                    "squaregraphs",
                    passed=None,
                    asserted=False,
                    measured={"violations": len(exc.violations)},
                    note="not a squaregraph: group skipped",
                )
            )
        else:
            rep = squaregraph_bounds(g, sq_fs, diameter=an.diameter)
            checks.extend(rep.checks)

    if check_ids is not None:
        checks = [c for c in checks if c.id in check_ids]
    for c in checks:
        if c.instance is None:
            c.instance = name
        c.measured = _js(c.measured)

    return VerificationReport(
        spec={"command": "verify", "instance": name, "n": cfg.n},
        checks=checks,
        seed=seed,
        timing={"total_seconds": round(time.perf_counter() - t0, 6)},
    )


def verify_graph(
    g: PennyGraph,
    *,
    name: str = "edge-list",
    check_ids: set[str] | None = None,
    seed: int | None = None,
) -> VerificationReport:
    """Checks for abstract graph input (edge list, optional rotation).

    Without coordinates nothing certifies the input as a disk contact
    graph, so contact-specific bounds are reported informationally;
    asserted checks are the ones valid for the declared class: plane
    triangle-free bounds when a rotation is present, plus the full
    squaregraph group when validation succeeds.
    """
    t0 = time.perf_counter()
    checks: list[CheckRecord] = []
    tri = find_triangle(g)
    triangle_free = tri is None
    checks.append(
        CheckRecord(
            id="triangle_free",
            anchor="status: triangle detection selects which bound group "
            "applies",
            passed=None,
            asserted=False,
            measured={"triangle_free": triangle_free, "witness": tri},
        )
    )
    d = degeneracy_order(g).d
    is_square = False
    sq_fs = None
    if g.rotation is not None and is_connected(g):
        try:
            sq_fs = validate_squaregraph(g)
            is_square = True
        except NotSquaregraph as exc:
            checks.append(
                CheckRecord(
                    id="squaregraph_applicable",
                    anchor="squaregraph checks apply only to valid "
                    "squaregraphs",
                    passed=None,
                    asserted=False,
                    measured={"violations": len(exc.violations)},
                    note="not a squaregraph: group skipped",
                )
            )
    checks.append(
        CheckRecord(
            id="degeneracy_le_2",
            anchor="squaregraphs (and triangle-free contact graphs) are "
            "2-degenerate",
            passed=(d <= 2) if is_square else None,
            asserted=is_square,
            measured={"degeneracy": d},
            bound=2,
            note=None if is_square else "informational: input class unproven",
        )
    )
    if is_square and sq_fs is not None:
        census = low_degree_census(g)
        if census.has_cycle:
            checks.append(
                CheckRecord(
                    id="four_non_articulation_low_degree",
                    anchor="a cyclic squaregraph has >= 4 non-articulation "
                    "vertices of degree <= 2",
                    passed=(census.count >= 4),
                    measured={"count": census.count},
                    bound=4,
                )
            )
        D = diameter(g) if g.n > 1 else 0
        rep = squaregraph_bounds(g, sq_fs, diameter=D)
        checks.extend(rep.checks)
    elif g.rotation is not None and is_connected(g):
        fs = extract_faces(g)
        bounds = check_edge_bounds(g, fs, triangle_free=triangle_free)
        for c in bounds.checks:
            # only the plane-graph statements are provable here
            if c.id in ("general_edge_bound", "isoperimetric_outer_face"):
                c.asserted = False
                c.note = "informational: contact-graph statement, input is " \
                    "an abstract plane graph"
        checks.extend(bounds.checks)

    if check_ids is not None:
        checks = [c for c in checks if c.id in check_ids]
    for c in checks:
        if c.instance is None:
            c.instance = name
        c.measured = _js(c.measured)
    return VerificationReport(
        spec={"command": "verify", "instance": name, "n": g.n, "abstract": True},
        checks=checks,
        seed=seed,
        timing={"total_seconds": round(time.perf_counter() - t0, 6)},
    )
