"""DFT phase analysis of pitch-class sets: tori, spectral units, gestures."""

from .core import (
    IntervalVector,
    PcDistribution,
    Spectrum,
    ZERO_TOL,
    dft,
    idft,
    indicator,
    interval_content,
    invert,
    magnitudes,
    nearest_pcset,
    phases,
    principal_angle,
    transpose,
)
from .torus import (
    LocusKind,
    SELECTION_35,
    SELECTION_35_WEIGHTED,
    SELECTION_45,
    TONNETZ_WEIGHT,
    TorusLocus,
    TorusSelection,
    chord_locus,
    distance_table,
    nearest_neighbors,
    phase_coords,
    torus_distance,
    wrap_difference,
)
from .units import (
    NotHomometricError,
    SpectralUnit,
    apply_unit,
    identity_unit,
    orbit,
    transposition_unit,
    unit_between,
    unit_multiply,
    unit_order,
    unit_power,
    unit_root,
)
from .gestures import (
    GesturePath,
    continuous_transpose,
    nearest_on_path,
    path_polyline,
    restricted_rotation,
)
from .analysis import (
    AnalysisReport,
    ChordEntry,
    ParseError,
    coefficient_ranking,
    parse_sequence,
    recommend_selection,
    report_csv_tables,
    report_json,
    run_analysis,
    serialize_entries,
)

__version__ = "0.1.0"
