"""Near/far-field convergence analysis for dipole arrays.

Computes exact infinitesimal-dipole array fields, measures how fast they
converge to the outgoing spherical-wave far-field approximation along
radial test lines, and evaluates six boundary-distance formulas against
that convergence.  See the README for the full tour.
"""

from .boundaries import (
    BoundaryResult,
    BoundarySpec,
    TailNotMonotone,
    UndefinedProjection,
    d_ar,
    d_en,
    d_ep,
    d_up,
    d_wc,
    evaluate_boundary,
    find_crossing,
    find_first_above,
    find_first_below,
    find_last_above,
    find_last_below,
    gamma_uniform_power,
    phi_excess,
    psi_gain_ratio,
    quasi_rayleigh,
    upsilon_power,
    xi_worst_mismatch,
)
from .core import (
    DEFAULT_CONTEXT,
    DIAGONAL,
    DIRECTION_PRESETS,
    FREE_SPACE_IMPEDANCE,
    FRONT,
    SIDE,
    Direction,
    SphericalPoint,
    WaveContext,
    cartesian_to_spherical,
    spherical_to_cartesian,
    stable_excess_path,
    unit_vector,
)
from .farfield import (
    AngularFieldDistribution,
    InconsistentFarField,
    analytic_angular_distribution,
    auxiliary_fields,
    sample_angular_distribution,
)
from .harness import (
    ConfigError,
    FieldTrace,
    ScenarioConfig,
    SweepResult,
    TraceFormatError,
    TraceScenario,
    export_table,
    export_trace,
    import_trace,
    load_scenario,
    parse_boundaries,
    parse_direction,
    reproduce_reference,
    run_sweep,
    trace_error_curve,
)
from .metric import (
    DipoleArrayScenario,
    ErrorCurve,
    FieldScenario,
    approximation_error,
    default_grid,
    error_sweep,
    field_mismatch,
)
from .sources import (
    ArrayGeometry,
    DipoleElement,
    FieldSingularity,
    array_field,
    dipole_field,
    ff_precoder,
    nf_precoder,
    uniform_linear_array,
)

__version__ = "0.1.0"

__all__ = [
    "AngularFieldDistribution",
    "ArrayGeometry",
    "BoundaryResult",
    "BoundarySpec",
    "ConfigError",
    "DEFAULT_CONTEXT",
    "DIAGONAL",
    "DIRECTION_PRESETS",
    "DipoleArrayScenario",
    "DipoleElement",
    "Direction",
    "ErrorCurve",
    "FREE_SPACE_IMPEDANCE",
    "FRONT",
    "FieldScenario",
    "FieldSingularity",
    "FieldTrace",
    "InconsistentFarField",
    "SIDE",
    "ScenarioConfig",
    "SphericalPoint",
    "SweepResult",
    "TailNotMonotone",
    "TraceFormatError",
    "TraceScenario",
    "UndefinedProjection",
    "WaveContext",
    "analytic_angular_distribution",
    "approximation_error",
    "array_field",
    "auxiliary_fields",
    "cartesian_to_spherical",
    "d_ar",
    "d_en",
    "d_ep",
    "d_up",
    "d_wc",
    "default_grid",
    "dipole_field",
    "error_sweep",
    "evaluate_boundary",
    "export_table",
    "export_trace",
    "ff_precoder",
    "field_mismatch",
    "find_crossing",
    "find_first_above",
    "find_first_below",
    "find_last_above",
    "find_last_below",
    "gamma_uniform_power",
    "import_trace",
    "load_scenario",
    "nf_precoder",
    "parse_boundaries",
    "parse_direction",
    "phi_excess",
    "psi_gain_ratio",
    "quasi_rayleigh",
    "reproduce_reference",
    "run_sweep",
    "sample_angular_distribution",
    "spherical_to_cartesian",
    "stable_excess_path",
    "trace_error_curve",
    "uniform_linear_array",
    "unit_vector",
    "upsilon_power",
    "xi_worst_mismatch",
]
