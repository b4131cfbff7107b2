"""Unit-disk contact graphs: construction, coloring, and verified bounds.

The package normalizes point sets into disk contact configurations,
builds their tangency graphs with rotation systems, colors them from
3-lists in linear time, and mechanically checks the structural facts
the whole pipeline rests on: 2-degeneracy, the degree-2 census,
Voronoi cell areas, boundary turning angles, Euler accounting, three
edge-count bounds, diameter identities, and the squaregraph analogue
of each.
"""

from .coloring import (
    ColoringResult,
    all_list_colorings,
    brute_force_list_coloring,
    choosability_oracle,
    list_color,
    uniform_lists,
)
from .errors import (
    Degenerate,
    Disconnected,
    DuplicatePoints,
    EmptyInput,
    FormatError,
    InputError,
    InsufficientLists,
    InternalInvariantViolation,
    MissingRotation,
    NotBiconnected,
    NotSquaregraph,
    OverlapDetected,
    PennyLabError,
    TooLarge,
    TriangleFound,
)
from .faces import (
    BoundsReport,
    CheckRecord,
    FaceStructure,
    check_edge_bounds,
    extract_faces,
    general_edge_bound,
    outer_incidences,
    squaregraph_edge_bound,
)
from .generators import (
    InstanceSpec,
    SplitMix64,
    gen_cycle,
    gen_grid,
    gen_hex_packing,
    gen_path,
    gen_random_subgrid,
    gen_trimmed_grid,
    hex_size,
    random_instance_specs,
    trim_grid_points,
)
from .geometry import (
    DEFAULT_EPSILON,
    HEX_CELL_AREA,
    PennyConfiguration,
    TurningAngleTrace,
    VoronoiCell,
    angular_gaps,
    min_angular_gap,
    normalize,
    rotation_from_points,
    tangency_graph,
    tangent_pairs,
    turning_angles,
    voronoi_cells,
)
from .graphs import (
    BiconnectedDecomposition,
    DegeneracyOrder,
    LowDegreeCensus,
    PennyGraph,
    RotationSystem,
    biconnected_components,
    degeneracy_order,
    diameter,
    diameter_lower_bound,
    find_triangle,
    is_connected,
    low_degree_census,
)
from .report import (
    VerificationReport,
    run_suite,
    verify_configuration,
    verify_graph,
)
from .squaregraph import (
    TightConstruction,
    squaregraph_bounds,
    tight_squaregraph,
    turan_parameters,
    validate_squaregraph,
)
from .version import VERSION as __version__

__all__ = [
    "__version__",
    # geometry
    "DEFAULT_EPSILON",
    "HEX_CELL_AREA",
    "PennyConfiguration",
    "TurningAngleTrace",
    "VoronoiCell",
    "angular_gaps",
    "min_angular_gap",
    "normalize",
    "rotation_from_points",
    "tangency_graph",
    "tangent_pairs",
    "turning_angles",
    "voronoi_cells",
    # graphs
    "BiconnectedDecomposition",
    "DegeneracyOrder",
    "LowDegreeCensus",
    "PennyGraph",
    "RotationSystem",
    "biconnected_components",
    "degeneracy_order",
    "diameter",
    "diameter_lower_bound",
    "find_triangle",
    "is_connected",
    "low_degree_census",
    # coloring
    "ColoringResult",
    "all_list_colorings",
    "brute_force_list_coloring",
    "choosability_oracle",
    "list_color",
    "uniform_lists",
    # faces
    "BoundsReport",
    "CheckRecord",
    "FaceStructure",
    "check_edge_bounds",
    "extract_faces",
    "general_edge_bound",
    "outer_incidences",
    "squaregraph_edge_bound",
    # generators
    "InstanceSpec",
    "SplitMix64",
    "gen_cycle",
    "gen_grid",
    "gen_hex_packing",
    "gen_path",
    "gen_random_subgrid",
    "gen_trimmed_grid",
    "hex_size",
    "random_instance_specs",
    "trim_grid_points",
    # squaregraph
    "TightConstruction",
    "squaregraph_bounds",
    "tight_squaregraph",
    "turan_parameters",
    "validate_squaregraph",
    # report
    "VerificationReport",
    "run_suite",
    "verify_configuration",
    "verify_graph",
    # errors
    "PennyLabError",
    "InputError",
    "EmptyInput",
    "DuplicatePoints",
    "OverlapDetected",
    "FormatError",
    "Degenerate",
    "NotBiconnected",
    "TriangleFound",
    "Disconnected",
    "MissingRotation",
    "InsufficientLists",
    "TooLarge",
    "NotSquaregraph",
    "InternalInvariantViolation",
]
