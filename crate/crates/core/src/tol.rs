//! Numerical tolerances shared by every check in the crate.

/// Eigensolver stops once the off-diagonal Frobenius norm drops below
/// `JACOBI_REL_TOL * (1 + ||M||_F)`.
pub const JACOBI_REL_TOL: f64 = 1e-13;
pub const JACOBI_MAX_SWEEPS: usize = 100;

/// Unit-norm tolerance for returned eigenvectors.
pub const UNIT_NORM: f64 = 1e-12;
/// Accepted norm deviation for caller-supplied unit vectors.
pub const UNIT_INPUT: f64 = 1e-9;
pub const RESIDUAL: f64 = 1e-8;
/// Lower bound accepted for any Q-eigenvalue (positive semidefiniteness).
pub const PSD_FLOOR: f64 = -1e-9;
/// A connected graph is reported bipartite when its least Q-eigenvalue is below this.
pub const BIPARTITE_QMIN: f64 = 1e-9;
/// Every tested non-bipartite connected graph sits above this.
pub const NON_BIPARTITE_QMIN: f64 = 1e-6;
/// Slack in the Rayleigh bound.
pub const RAYLEIGH: f64 = 1e-9;

/// Below this spectral gap the first eigenvector is not numerically unique.
pub const GAP_GUARD: f64 = 1e-9;
/// Two least eigenvalues closer than this are tied.
pub const TIE: f64 = 1e-9;
/// Required per-step margin in the monotonicity sweeps.
pub const STRICT_STEP: f64 = 1e-9;
/// Allowed increase of the least eigenvalue after a relocation.
pub const RELOCATION_SLACK: f64 = 1e-10;
/// Differences below this count as equality for relocation diagnostics.
pub const RELOCATION_EQUALITY: f64 = 1e-9;

/// Symmetry items of the sign-structure check.
pub const SIGN_SYMMETRY: f64 = 1e-8;
/// Strict sign products must clear this.
pub const SIGN_PRODUCT: f64 = 1e-12;
/// Strict chains of absolute values must step by at least this.
pub const STRICT_CHAIN: f64 = 1e-10;
/// A branch counts as nonzero when some vertex exceeds this in absolute value.
pub const NONZERO_ENTRY: f64 = 1e-8;
