"""Constants for the coherent imaging toolkit."""

VERSION = "1.0.0"

# Parameter names, in the order used by every 4x4 matrix
PARAM_S = "s"
PARAM_Q = "q"
PARAM_GAMMA_R = "gamma_r"
PARAM_GAMMA_I = "gamma_i"
PARAMETER_NAMES = (PARAM_S, PARAM_Q, PARAM_GAMMA_R, PARAM_GAMMA_I)
PURITY_PARAMETER_NAMES = ("r", PARAM_Q, PARAM_GAMMA_R, PARAM_GAMMA_I)

# Basis tags
BASIS_GEOMETRIC = "geometric_e"
BASIS_CENTROID = "centroid_v"

# Frame policies for the reference weight alpha
ALPHA_GEOMETRIC = "geometric"
ALPHA_CENTROID = "centroid"

# Optical defaults
DEFAULT_SIGMA = 1.0
DEFAULT_DELTA = 1e-2
DEFAULT_ALPHA = 0.5

# Numerical tolerances
PURE_STATE_TOL = 1e-8
OVERLAP_TOL = 1e-14
DENOMINATOR_TOL = 1e-12
PROBABILITY_TOL = 1e-14
PHOTON_NUMBER_CLAMP = 1e-15
GRAM_SCHMIDT_TOL = 1e-10
KERNEL_TOL = 1e-12
HERMITIAN_TOL = 1e-10
SYMMETRY_TOL = 1e-12
PSD_TOL = 1e-10

# Oracle defaults
HG_ORDER = 40
TRUNCATION_TOL = 1e-12
FD_STEP = 1e-5
RICHARDSON_TOL = 1e-4
BOUNDARY_OFFSET = 1e-8
COHERENCE_OFFSET = 1e-9
# offsets grow tenfold until the coherence defect exceeds BOUNDARY_MARGIN * PURE_STATE_TOL
BOUNDARY_MARGIN = 10.0
BOUNDARY_OFFSET_GROWTHS = 6

# Purity inversion bracket, in units of sigma
PURITY_BRACKET = (1e-6, 40.0)
PURITY_XTOL = 1e-12

# Figure defaults
GAMMA_LEGEND = (-0.9, -0.5, 0.0, 0.5, 0.9)
FIGURE_IDS = (
    "fig1",
    "fig2",
    "fig3",
    "fig4",
    "fig5",
    "fig6",
    "fig7",
    "fig8",
    "purity",
)
UNITS_NOTE = "in units of (delta/4sigma^2)"
STATUS_OK = "ok"
STATUS_SKIPPED = "skipped"

# Measurement kinds
POVM_PROJECTOR_V = "projector_v"
POVM_PROJECTOR_E = "projector_e"
POVM_HG0_CENTROID = "hg0_centroid"
POVM_HG0_GEOMETRIC = "hg0_geometric"
POVM_KINDS = (
    POVM_PROJECTOR_V,
    POVM_PROJECTOR_E,
    POVM_HG0_CENTROID,
    POVM_HG0_GEOMETRIC,
)
MODE_EXACT = "exact"
MODE_QUBIT_APPROX = "qubit_approx"

# Bound kinds
KIND_QFI_STATE = "qfi_state"
KIND_PRIOR_FI = "prior_fi"
KIND_VAN_TREES = "van_trees_info"
KIND_QUBIT_APPROX = "qubit_approx"
KIND_INDIRECT = "indirect"
KIND_BMSE = "bmse_bound"
KIND_NUMERIC_QFI = "numeric_qfi"
KIND_COUNTING = "counting_fi"

# Validation presets
PRESET_QUICK = "quick"
PRESET_DEFAULT = "default"

# CLI exit codes
EXIT_SUCCESS = 0
EXIT_VALIDATION_FAILURE = 1
EXIT_USAGE_ERROR = 2

# Files
CONFIG_FILE = "coherent_imaging_config.json"
LOG_FILE = "coherent_imaging_runs.json"
CSV_FLOAT_FORMAT = "%.12g"
