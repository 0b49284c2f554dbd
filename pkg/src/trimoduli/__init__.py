"""trimoduli: similarity classes of lattice triangles.

Exact census of triangle shapes realized on integer grids, closed-form
measures on the space of triangle shapes, Dirichlet-pigeonhole lattice
approximants of arbitrary shapes, and the Monte Carlo baselines the census
is compared against.
"""

from .errors import GuardError, PrecisionError
from .parallel import ENV_THREADS, map_ordered, worker_count
from .lattice import (
    MAX_COORD,
    AngleClass,
    LatticePoint,
    LatticeTriangle,
    SimilarityKey,
    SquaredSides,
    classify_angle,
    cross,
    is_collinear,
    reduced_triple,
    similarity_key,
    squared_sides,
    strict_triangle_test,
    triangle,
)
from .moduli import (
    SUM_TOL,
    LabeledTriple,
    ModuliRegion,
    PlanePoint,
    ShapeTriple,
    WeightedShapeSet,
    dirac_ratio,
    measure_moduli,
    measure_teich,
    obtuse_region_measure,
    region_contains,
    right_locus,
    s3_orbit,
    shape_of,
    to_plane,
    uniform_target,
)
from .enumeration import (
    MAX_N,
    NAIVE_POINT_GUARD,
    BoundingBox,
    TranslationClass,
    collinear_triple_count,
    distinct_classes,
    enumerate_naive,
    enumerate_weighted,
    total_triangle_count,
    translation_multiplicity,
)
from .diophantine import (
    DirichletApproximant,
    PlaneVertex,
    approximate_shape,
    dirichlet_1d,
    dirichlet_2d,
    equilateral_approximant,
    shape_to_vertex,
    star_discrepancy,
    weyl_sequence,
)
from .rng import BLOCK_SAMPLES, block_generator, splitmix64, stream_key
from .randgeom import (
    OBTUSE_MARGIN,
    Histogram2D,
    McEstimate,
    langford_obtuse_probability,
    mean_pair_distance,
    obtuse_probability,
    pair_distances,
    shape_histogram,
    unit_square_mean_distance,
)
from .analysis import (
    MAX_ANALYSIS_N,
    EquidistReport,
    ObtuseCurvePoint,
    compare_to_uniform,
    curve_point_from_set,
    equidist_report,
    obtuse_curve,
    obtuse_point,
    orbit_bin_masses,
    orbit_projections,
    report_from_point,
    tv_distance,
    uniform_bin_masses,
)
from .serialize import (
    export_curve,
    export_estimate,
    export_histogram,
    export_report,
    export_weighted_set,
    read_weighted_set,
    write_text,
)
from .svgplot import plot_curve, plot_shapes

__version__ = "0.1.0"
