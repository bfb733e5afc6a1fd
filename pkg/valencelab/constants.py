from bidict import bidict

SCHEMA_VERSION = 1

SENSE_PRESERVING = 'sense_preserving'
SENSE_REVERSING = 'sense_reversing'
SINGULAR = 'singular'
ORIENTATION_TO_SIGN = bidict({
    SENSE_PRESERVING: 1,
    SENSE_REVERSING: -1,
    SINGULAR: 0,
})

EXIT_CODES = bidict({
    'success': 0,
    'usage': 2,
    'numerical_failure': 3,
    'verification_mismatch': 4,
})

# polycore
ROOT_TOL = 1e-12
ROOT_MAX_ITER = 500
COEFF_TRIM = 1e-13

# harmonic-solver / valence-verify
SOLVE_TOL = 1e-8
SINGULAR_JACOBIAN = 1e-8
CONTOUR_MARGIN = 1e-6
WINDING_INITIAL_SAMPLES = 64
WINDING_MAX_SAMPLES = 2 ** 20
ELIMINANT_DYNAMIC_RANGE = 1e12
NEWTON_MAX_ITER = 60
GRID_RESOLUTION = 400

# extremal-construct
GEYER_TOL = 1e-9
GEYER_MIN_SEPARATION = 1e-4
GEYER_RESTARTS = 200
GEYER_RESTART_SEED = 0
ATTRACTING_MARGIN = 1e-6
DELTA_SCHEDULE = tuple(0.1 * 2. ** -k for k in range(21))

# orbit of infinity
ORBIT_MAX_ITER = 10000
ORBIT_TOL = 1e-9
ORBIT_WINDOW = 64

DEFAULT_TOLERANCES = {
    'root': ROOT_TOL,
    'solve': SOLVE_TOL,
    'singular': SINGULAR_JACOBIAN,
    'margin': ATTRACTING_MARGIN,
    'geyer': GEYER_TOL,
    'orbit': ORBIT_TOL,
}
