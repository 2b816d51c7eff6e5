//! Library-wide default tolerances.
//!
//! Every threshold used by the library is named here so tests can tighten or
//! loosen them uniformly instead of sprinkling magic numbers. Operations that
//! accept an explicit `tol` parameter default to these values.

/// Default validation tolerance for state invariants: Hermiticity (entrywise),
/// trace deviation, and the most negative admissible eigenvalue of a density
/// matrix. Also the default support threshold for Schmidt-correlated pattern
/// detection.
pub const VALIDATION: f64 = 1e-9;

/// Eigendecomposition quality: `‖M − VΛV†‖_F ≤ RECONSTRUCTION · dim` and
/// `V†V = I` entrywise to this tolerance.
pub const RECONSTRUCTION: f64 = 1e-10;

/// Pure-state amplitude normalization: `|Σ|c_m|² − 1| ≤ AMPLITUDE_NORM`.
/// Same threshold gates mixture weights summing to one.
pub const AMPLITUDE_NORM: f64 = 1e-12;

/// Eigenvalues of a partially transposed state in `[−NEG_EIGEN_CUTOFF, 0)`
/// are treated as numerical zeros when accumulating negativity. Prevents
/// phantom negativity on separable inputs from the eigensolver's residual
/// floor.
pub const NEG_EIGEN_CUTOFF: f64 = 1e-12;

/// Jacobi eigensolver stops when the off-diagonal Frobenius norm drops below
/// `JACOBI_OFF_THRESHOLD_PER_DIM · dim`.
pub const JACOBI_OFF_THRESHOLD_PER_DIM: f64 = 1e-13;

/// Maximum number of cyclic Jacobi sweeps before reporting no convergence.
pub const JACOBI_SWEEP_BUDGET: usize = 100;

/// Modulus threshold below which a coefficient entry is considered
/// unpopulated when measuring the band width Δ of a quasidiagonal state.
pub const BAND_SUPPORT: f64 = 1e-12;

/// Two attainable sums λ_m¹ + λ_n² closer than this are grouped into the
/// same λ-subspace when maps are built from floating-point spectra.
pub const LAMBDA_GROUPING: f64 = 1e-9;

/// Spectra entries closer than this count as degenerate and are rejected by
/// the λ-map construction.
pub const SPECTRUM_DEGENERACY: f64 = 1e-12;

/// Entrywise unitarity requirement `‖u†u − I‖_max ≤ UNITARITY` on local
/// basis factors.
pub const UNITARITY: f64 = 1e-10;

/// Agreement required between two independent routes to the same quantity
/// (eigenvalue route vs closed form, trace-norm route vs eigenvalue sum).
pub const CROSS_METHOD: f64 = 1e-10;

/// Local-basis coordinate descent stops when a full sweep improves the
/// objective by less than this.
pub const SWEEP_IMPROVEMENT: f64 = 1e-10;

/// Slack admitted when testing the conjecture `exact ≤ best_bound`: a
/// violation must exceed this margin to count.
pub const CONJECTURE_SLACK: f64 = 1e-8;

/// Tolerance at which integrated states are revalidated as density matrices;
/// exceeding it signals a too-large time step.
pub const RK4_VALIDATION: f64 = 1e-6;

/// Required agreement between the closed-form dephasing solution and the
/// RK4 integrator at the recommended step size.
pub const RK4_AGREEMENT: f64 = 1e-6;
