//! Bipartite density matrices, Schmidt-correlated coefficient matrices, the
//! embedding between them, and validated constructors and generators.
//!
//! A Schmidt-correlated (SC) state over Schmidt dimension N is stored only as
//! its N×N coefficient matrix ρ_mn; the N²×N² density matrix is materialized
//! on demand by [`sc_embed`]. The coefficient entry ρ_mn lives at row
//! `n·N + n`, column `m·N + m` of the embedding, i.e. on the pairs of equal
//! local indices; everything else is zero.

use num_complex::Complex64;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

use crate::error::{Error, Result};
use crate::linalg::{hermitian_eig, ComplexMatrix};
use crate::tol;

/// Local dimensions of a bipartite system.
///
/// The composite index convention is fixed: the basis pair `(m, n)` with `m`
/// in subsystem 1 and `n` in subsystem 2 maps to flat index `m·n2 + n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BipartiteDims {
    pub n1: usize,
    pub n2: usize,
}

impl BipartiteDims {
    pub fn new(n1: usize, n2: usize) -> Self {
        assert!(n1 >= 1 && n2 >= 1, "local dimensions must be positive");
        BipartiteDims { n1, n2 }
    }

    pub fn total(&self) -> usize {
        self.n1 * self.n2
    }

    /// Flat composite index of the basis pair `(m, n)`.
    #[inline]
    pub fn flat(&self, m: usize, n: usize) -> usize {
        m * self.n2 + n
    }
}

/// Validated bipartite density matrix: Hermitian, unit trace, positive
/// semidefinite within the construction tolerance.
#[derive(Debug, Clone)]
pub struct DensityMatrix {
    dims: BipartiteDims,
    mat: ComplexMatrix,
}

impl DensityMatrix {
    pub fn dims(&self) -> BipartiteDims {
        self.dims
    }

    pub fn matrix(&self) -> &ComplexMatrix {
        &self.mat
    }

    pub fn dim(&self) -> usize {
        self.mat.dim()
    }

    /// Construct from parts whose invariants are guaranteed by the caller
    /// (used where validity follows structurally, e.g. embedding an SC
    /// state or zeroing off-diagonals of an already-valid state).
    pub(crate) fn trusted(mat: ComplexMatrix, dims: BipartiteDims) -> Self {
        debug_assert_eq!(mat.dim(), dims.total());
        DensityMatrix { dims, mat }
    }

    /// Purity `trace(ρ²)`.
    pub fn purity(&self) -> f64 {
        self.mat.matmul(&self.mat).trace().re
    }
}

/// Validate a candidate density matrix. Never repairs the input: any
/// violation is an error naming the offending quantity.
pub fn validate_density(
    mat: ComplexMatrix,
    dims: BipartiteDims,
    tol: f64,
) -> Result<DensityMatrix> {
    if mat.dim() != dims.total() {
        return Err(Error::DimensionMismatch {
            context: "density matrix vs dims",
            expected: dims.total(),
            actual: mat.dim(),
        });
    }
    let dev = mat.hermiticity_deviation();
    if dev > tol {
        return Err(Error::NotHermitian {
            max_deviation: dev,
            tol,
        });
    }
    let tr = mat.trace();
    if (tr.re - 1.0).abs() > tol || tr.im.abs() > tol {
        return Err(Error::TraceNotOne { trace: tr.re, tol });
    }
    let eig = hermitian_eig(&mat, tol)?;
    let min = eig.eigenvalues[0];
    if min < -tol {
        return Err(Error::NotPositive {
            min_eigenvalue: min,
            tol,
        });
    }
    Ok(DensityMatrix { dims, mat })
}

/// Pure bipartite state of Schmidt form `Σ_m c_m |m⟩|m⟩`.
#[derive(Debug, Clone)]
pub struct PureSchmidtVector {
    n: usize,
    amps: Vec<Complex64>,
}

impl PureSchmidtVector {
    /// Amplitudes must be normalized: `|Σ|c_m|² − 1| ≤ 1e−12`.
    pub fn new(amps: Vec<Complex64>) -> Result<Self> {
        if amps.is_empty() {
            return Err(Error::DimensionMismatch {
                context: "schmidt amplitudes",
                expected: 1,
                actual: 0,
            });
        }
        for (i, a) in amps.iter().enumerate() {
            if !a.re.is_finite() || !a.im.is_finite() {
                return Err(Error::NonFinite { row: i, col: 0 });
            }
        }
        let norm_sqr: f64 = amps.iter().map(|a| a.norm_sqr()).sum();
        if (norm_sqr - 1.0).abs() > tol::AMPLITUDE_NORM {
            return Err(Error::BadWeights {
                reason: format!("amplitude norm² = {norm_sqr:.15} is not 1"),
            });
        }
        Ok(PureSchmidtVector {
            n: amps.len(),
            amps,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amps
    }
}

/// Schmidt-correlated state, stored as its N×N coefficient matrix ρ_mn.
///
/// The coefficient matrix is itself a valid N×N density matrix
/// (`ρ_mn = Σ_i p_i c_n^i (c_m^i)*` is Hermitian, PSD, unit trace), and
/// positivity forces `|ρ_mn| ≤ √(ρ_mm ρ_nn)` entrywise.
#[derive(Debug, Clone)]
pub struct SchmidtCorrelatedState {
    n: usize,
    coeff: ComplexMatrix,
}

impl SchmidtCorrelatedState {
    /// Validate a coefficient matrix at the given tolerance.
    pub fn new_with_tol(coeff: ComplexMatrix, tol: f64) -> Result<Self> {
        let n = coeff.dim();
        let dev = coeff.hermiticity_deviation();
        if dev > tol {
            return Err(Error::NotHermitian {
                max_deviation: dev,
                tol,
            });
        }
        let tr = coeff.trace();
        if (tr.re - 1.0).abs() > tol || tr.im.abs() > tol {
            return Err(Error::TraceNotOne { trace: tr.re, tol });
        }
        let eig = hermitian_eig(&coeff, tol)?;
        if eig.eigenvalues[0] < -tol {
            return Err(Error::NotPositive {
                min_eigenvalue: eig.eigenvalues[0],
                tol,
            });
        }
        // Positivity consequence used by the band estimate.
        for m in 0..n {
            for nn in 0..n {
                let bound = (coeff.get(m, m).re * coeff.get(nn, nn).re).max(0.0).sqrt();
                if coeff.get(m, nn).norm() > bound + tol {
                    return Err(Error::NotPositive {
                        min_eigenvalue: bound - coeff.get(m, nn).norm(),
                        tol,
                    });
                }
            }
        }
        Ok(SchmidtCorrelatedState { n, coeff })
    }

    /// Validate a coefficient matrix at the default tolerance.
    pub fn new(coeff: ComplexMatrix) -> Result<Self> {
        Self::new_with_tol(coeff, tol::VALIDATION)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// The coefficient matrix; entry `(m, n)` is ρ_mn.
    pub fn coeff(&self) -> &ComplexMatrix {
        &self.coeff
    }
}

/// Build the coefficient matrix of a mixture of pure Schmidt vectors:
/// `ρ_mn = Σ_i p_i c_n^i (c_m^i)*`.
pub fn sc_from_mixture(
    weights: &[f64],
    states: &[PureSchmidtVector],
) -> Result<SchmidtCorrelatedState> {
    if weights.len() != states.len() || states.is_empty() {
        return Err(Error::BadWeights {
            reason: format!("{} weights for {} states", weights.len(), states.len()),
        });
    }
    if let Some(w) = weights.iter().find(|&&w| !(w >= 0.0)) {
        return Err(Error::BadWeights {
            reason: format!("negative or non-finite weight {w}"),
        });
    }
    let sum: f64 = weights.iter().sum();
    if (sum - 1.0).abs() > tol::AMPLITUDE_NORM {
        return Err(Error::BadWeights {
            reason: format!("weights sum to {sum:.15}, not 1"),
        });
    }
    let n = states[0].n();
    for s in states {
        if s.n() != n {
            return Err(Error::MixedDimensions {
                expected: n,
                actual: s.n(),
            });
        }
    }
    let coeff = ComplexMatrix::from_fn(n, |m, nn| {
        weights
            .iter()
            .zip(states)
            .map(|(&p, s)| p * s.amplitudes()[nn] * s.amplitudes()[m].conj())
            .sum()
    });
    SchmidtCorrelatedState::new_with_tol(coeff, tol::VALIDATION)
}

/// Materialize the N²×N² density matrix of an SC state.
///
/// Entry at flat row `n·N + n`, flat column `m·N + m` is ρ_mn; all entries
/// off that pattern are zero. The result is always a valid density matrix
/// because the coefficient matrix is one.
pub fn sc_embed(sc: &SchmidtCorrelatedState) -> DensityMatrix {
    let n = sc.n();
    let dims = BipartiteDims::new(n, n);
    let mut mat = ComplexMatrix::zeros(n * n);
    for m in 0..n {
        for nn in 0..n {
            mat.set(dims.flat(nn, nn), dims.flat(m, m), sc.coeff().get(m, nn));
        }
    }
    DensityMatrix::trusted(mat, dims)
}

/// Recognize the SC support pattern of a density matrix in the fixed
/// computational product basis.
///
/// Returns the coefficient matrix when every entry outside the
/// `(n·N+n, m·N+m)` pattern has modulus at most `tol`, `None` otherwise.
/// Requires equal local dimensions.
pub fn detect_sc(rho: &DensityMatrix, tol: f64) -> Result<Option<SchmidtCorrelatedState>> {
    let dims = rho.dims();
    if dims.n1 != dims.n2 {
        return Err(Error::DimensionMismatch {
            context: "detect_sc local dims",
            expected: dims.n1,
            actual: dims.n2,
        });
    }
    let n = dims.n1;
    let mat = rho.matrix();
    let diag_pair = |flat: usize| -> bool { flat / n == flat % n };
    for r in 0..mat.dim() {
        for c in 0..mat.dim() {
            if !(diag_pair(r) && diag_pair(c)) && mat.get(r, c).norm() > tol {
                return Ok(None);
            }
        }
    }
    let coeff = ComplexMatrix::from_fn(n, |m, nn| mat.get(dims.flat(nn, nn), dims.flat(m, m)));
    // Off-pattern leakage below `tol` can push the coefficient trace off one
    // by at most (N²−N)·tol; validate with that headroom.
    let slack = tol::VALIDATION.max(tol * (n * n) as f64);
    let sc = SchmidtCorrelatedState::new_with_tol(coeff, slack)?;
    Ok(Some(sc))
}

fn standard_complex(rng: &mut ChaCha8Rng) -> Complex64 {
    let re: f64 = rng.sample(StandardNormal);
    let im: f64 = rng.sample(StandardNormal);
    Complex64::new(re, im)
}

/// Random unit vector with standard-normal complex entries (Haar on the
/// sphere), drawn from the given generator.
pub(crate) fn random_unit_vector(n: usize, rng: &mut ChaCha8Rng) -> Vec<Complex64> {
    loop {
        let v: Vec<Complex64> = (0..n).map(|_| standard_complex(rng)).collect();
        let norm = v.iter().map(|a| a.norm_sqr()).sum::<f64>().sqrt();
        if norm > 1e-6 {
            return v.into_iter().map(|a| a / norm).collect();
        }
    }
}

/// Random point on the probability simplex (normalized Exp(1) draws).
pub(crate) fn random_simplex(k: usize, rng: &mut ChaCha8Rng) -> Vec<f64> {
    let raw: Vec<f64> = (0..k)
        .map(|_| -(1.0 - rng.random::<f64>()).ln().max(1e-12))
        .collect();
    let sum: f64 = raw.iter().sum();
    raw.into_iter().map(|w| w / sum).collect()
}

/// Seeded random SC state: `rank` Haar-like unit vectors mixed with random
/// simplex weights. The generator is ChaCha8, so fixed seeds reproduce
/// across platforms.
pub fn random_sc(n: usize, rank: usize, seed: u64) -> SchmidtCorrelatedState {
    assert!(rank >= 1, "rank must be positive");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let weights = random_simplex(rank, &mut rng);
    let states: Vec<PureSchmidtVector> = (0..rank)
        .map(|_| PureSchmidtVector::new(random_unit_vector(n, &mut rng)).expect("unit vector"))
        .collect();
    sc_from_mixture(&weights, &states).expect("generated mixture is valid")
}

/// Seeded random SC state whose coefficient matrix is banded with width at
/// most `delta`: mixes pure vectors each supported on a window of
/// `delta + 1` consecutive indices.
pub fn random_banded_sc(n: usize, delta: usize, seed: u64) -> SchmidtCorrelatedState {
    assert!(delta < n, "band width must be below the dimension");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let windows = n - delta;
    let weights = random_simplex(windows, &mut rng);
    let states: Vec<PureSchmidtVector> = (0..windows)
        .map(|start| {
            let local = random_unit_vector(delta + 1, &mut rng);
            let mut amps = vec![Complex64::ZERO; n];
            amps[start..start + delta + 1].copy_from_slice(&local);
            PureSchmidtVector::new(amps).expect("unit vector")
        })
        .collect();
    sc_from_mixture(&weights, &states).expect("generated mixture is valid")
}

/// Seeded random full-rank density matrix (Ginibre construction
/// `GG†/tr(GG†)`).
pub fn random_density(dims: BipartiteDims, seed: u64) -> DensityMatrix {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let d = dims.total();
    let g = ComplexMatrix::from_fn(d, |_, _| standard_complex(&mut rng));
    let gg = g.matmul(&g.adjoint());
    let tr = gg.trace().re;
    let scaled = gg.scale(Complex64::new(1.0 / tr, 0.0));
    // GG† is Hermitian up to rounding; make it exact.
    let mat = ComplexMatrix::from_fn(d, |i, j| 0.5 * (scaled.get(i, j) + scaled.get(j, i).conj()));
    DensityMatrix::trusted(mat, dims)
}

/// Partial trace over subsystem 2, an n1×n1 matrix.
pub fn partial_trace_2(rho: &DensityMatrix) -> ComplexMatrix {
    let dims = rho.dims();
    ComplexMatrix::from_fn(dims.n1, |i, j| {
        (0..dims.n2)
            .map(|k| rho.matrix().get(dims.flat(i, k), dims.flat(j, k)))
            .sum()
    })
}

/// Partial trace over subsystem 1, an n2×n2 matrix.
pub fn partial_trace_1(rho: &DensityMatrix) -> ComplexMatrix {
    let dims = rho.dims();
    ComplexMatrix::from_fn(dims.n2, |i, j| {
        (0..dims.n1)
            .map(|k| rho.matrix().get(dims.flat(k, i), dims.flat(k, j)))
            .sum()
    })
}

/// The Bell coefficient matrix (all entries 1/N for amplitudes 1/√N), handy
/// in tests and fixtures.
pub fn bell_sc(n: usize) -> SchmidtCorrelatedState {
    let amp = Complex64::new(1.0 / (n as f64).sqrt(), 0.0);
    let v = PureSchmidtVector::new(vec![amp; n]).expect("normalized");
    sc_from_mixture(&[1.0], &[v]).expect("valid")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::alpha_norm;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn validate_maximally_mixed() {
        let mat = ComplexMatrix::identity(4).scale(c(0.25, 0.0));
        let rho = validate_density(mat, BipartiteDims::new(2, 2), 1e-9).unwrap();
        assert_eq!(rho.dim(), 4);
    }

    #[test]
    fn validate_rejects_negative_eigenvalue() {
        let mat = ComplexMatrix::diagonal(&[1.0, 0.0, 0.0, -1e-3]);
        match validate_density(mat, BipartiteDims::new(2, 2), 1e-9) {
            Err(Error::NotPositive { min_eigenvalue, .. }) => {
                assert!((min_eigenvalue + 1e-3).abs() < 1e-12);
            }
            other => panic!("expected NotPositive, got {other:?}"),
        }
    }

    #[test]
    fn validate_rejects_wrong_dims() {
        let mat = ComplexMatrix::identity(4).scale(c(0.25, 0.0));
        assert!(matches!(
            validate_density(mat, BipartiteDims::new(2, 3), 1e-9),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn bell_projector_is_valid_rank_one() {
        let rho = sc_embed(&bell_sc(2));
        let eig = hermitian_eig(rho.matrix(), 1e-9).unwrap();
        // Spectrum {0, 0, 0, 1}.
        assert!(eig.eigenvalues[..3].iter().all(|l| l.abs() < 1e-12));
        assert!((eig.eigenvalues[3] - 1.0).abs() < 1e-12);
        assert!((rho.matrix().trace().re - 1.0).abs() < 1e-12);
    }

    #[test]
    fn sc_from_single_basis_state() {
        let mut amps = vec![Complex64::ZERO; 3];
        amps[0] = Complex64::ONE;
        let v = PureSchmidtVector::new(amps).unwrap();
        let sc = sc_from_mixture(&[1.0], &[v]).unwrap();
        for m in 0..3 {
            for n in 0..3 {
                let want = if m == 0 && n == 0 { 1.0 } else { 0.0 };
                assert!((sc.coeff().get(m, n) - c(want, 0.0)).norm() < 1e-15);
            }
        }
    }

    #[test]
    fn sc_from_bell_vector() {
        let sc = bell_sc(2);
        for m in 0..2 {
            for n in 0..2 {
                assert!((sc.coeff().get(m, n) - c(0.5, 0.0)).norm() < 1e-15);
            }
        }
    }

    #[test]
    fn sc_from_mixture_matches_outer_product_loop() {
        // Oracle: direct weighted outer-product accumulation.
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let states: Vec<PureSchmidtVector> = (0..3)
            .map(|_| PureSchmidtVector::new(random_unit_vector(4, &mut rng)).unwrap())
            .collect();
        let weights = random_simplex(3, &mut rng);
        let sc = sc_from_mixture(&weights, &states).unwrap();

        let mut expected = vec![vec![Complex64::ZERO; 4]; 4];
        for (p, s) in weights.iter().zip(&states) {
            for m in 0..4 {
                for n in 0..4 {
                    expected[m][n] += p * s.amplitudes()[n] * s.amplitudes()[m].conj();
                }
            }
        }
        for m in 0..4 {
            for n in 0..4 {
                assert!((sc.coeff().get(m, n) - expected[m][n]).norm() < 1e-14);
            }
        }
    }

    #[test]
    fn sc_from_mixture_rejects_bad_weights() {
        let v = PureSchmidtVector::new(vec![Complex64::ONE, Complex64::ZERO]).unwrap();
        assert!(matches!(
            sc_from_mixture(&[0.5, 0.6], &[v.clone(), v.clone()]),
            Err(Error::BadWeights { .. })
        ));
        assert!(matches!(
            sc_from_mixture(&[-0.1, 1.1], &[v.clone(), v.clone()]),
            Err(Error::BadWeights { .. })
        ));
        let w = PureSchmidtVector::new(vec![Complex64::ONE; 1]).unwrap();
        assert!(matches!(
            sc_from_mixture(&[0.5, 0.5], &[v, w]),
            Err(Error::MixedDimensions { .. })
        ));
    }

    #[test]
    fn embed_basis_state() {
        let mut coeff = ComplexMatrix::zeros(2);
        coeff.set(0, 0, Complex64::ONE);
        let sc = SchmidtCorrelatedState::new(coeff).unwrap();
        let rho = sc_embed(&sc);
        for r in 0..4 {
            for s in 0..4 {
                let want = if r == 0 && s == 0 { 1.0 } else { 0.0 };
                assert!((rho.matrix().get(r, s) - c(want, 0.0)).norm() < 1e-15);
            }
        }
    }

    #[test]
    fn embed_bell_pattern() {
        let rho = sc_embed(&bell_sc(2));
        for (r, s) in [(0, 0), (0, 3), (3, 0), (3, 3)] {
            assert!((rho.matrix().get(r, s) - c(0.5, 0.0)).norm() < 1e-15);
        }
        assert!((alpha_norm(rho.matrix()) - 2.0).abs() < 1e-14);
    }

    #[test]
    fn embed_validates_and_reduces_to_diagonal() {
        let sc = random_sc(3, 2, 17);
        let rho = sc_embed(&sc);
        // The embedding passes full validation.
        validate_density(rho.matrix().clone(), rho.dims(), 1e-9).unwrap();
        // Oracle: both partial traces equal diag(ρ_mm).
        for reduced in [partial_trace_1(&rho), partial_trace_2(&rho)] {
            for i in 0..3 {
                for j in 0..3 {
                    let want = if i == j {
                        sc.coeff().get(i, i)
                    } else {
                        Complex64::ZERO
                    };
                    assert!((reduced.get(i, j) - want).norm() < 1e-13);
                }
            }
        }
    }

    #[test]
    fn detect_bell() {
        let rho = sc_embed(&bell_sc(2));
        let sc = detect_sc(&rho, 1e-9).unwrap().unwrap();
        for m in 0..2 {
            for n in 0..2 {
                assert!((sc.coeff().get(m, n) - c(0.5, 0.0)).norm() < 1e-14);
            }
        }
    }

    #[test]
    fn detect_rejects_maximally_mixed() {
        let mat = ComplexMatrix::identity(4).scale(c(0.25, 0.0));
        let rho = validate_density(mat, BipartiteDims::new(2, 2), 1e-9).unwrap();
        assert!(detect_sc(&rho, 1e-9).unwrap().is_none());
    }

    #[test]
    fn detect_requires_equal_dims() {
        let mat = ComplexMatrix::identity(6).scale(c(1.0 / 6.0, 0.0));
        let rho = validate_density(mat, BipartiteDims::new(2, 3), 1e-9).unwrap();
        assert!(matches!(
            detect_sc(&rho, 1e-9),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn detect_embed_round_trip() {
        for seed in 0..20 {
            let sc = random_sc(2 + (seed as usize % 4), 2, seed);
            let back = detect_sc(&sc_embed(&sc), 1e-9).unwrap().unwrap();
            assert_eq!(back.n(), sc.n());
            assert!(back.coeff().sub(sc.coeff()).max_abs() < 1e-14);
        }
    }

    #[test]
    fn random_sc_rank_one_is_pure() {
        let sc = random_sc(2, 1, 3);
        let eig = hermitian_eig(sc.coeff(), 1e-9).unwrap();
        assert!(eig.eigenvalues[0].abs() < 1e-12);
        assert!((eig.eigenvalues[1] - 1.0).abs() < 1e-12);
    }

    #[test]
    fn random_sc_is_psd_unit_trace() {
        let sc = random_sc(4, 3, 9);
        let eig = hermitian_eig(sc.coeff(), 1e-9).unwrap();
        assert!(eig.eigenvalues[0] > -1e-12);
        assert!((sc.coeff().trace().re - 1.0).abs() < 1e-12);
    }

    #[test]
    fn random_sc_deterministic() {
        let a = random_sc(4, 3, 1234);
        let b = random_sc(4, 3, 1234);
        assert_eq!(a.coeff(), b.coeff());
    }

    #[test]
    fn random_banded_sc_has_band_support() {
        let sc = random_banded_sc(6, 2, 7);
        for m in 0..6 {
            for n in 0..6 {
                if usize::abs_diff(m, n) > 2 {
                    assert!(sc.coeff().get(m, n).norm() < 1e-15);
                }
            }
        }
        assert!((sc.coeff().trace().re - 1.0).abs() < 1e-12);
    }

    #[test]
    fn random_density_validates() {
        let rho = random_density(BipartiteDims::new(2, 3), 21);
        validate_density(rho.matrix().clone(), rho.dims(), 1e-9).unwrap();
    }

    #[test]
    fn pure_vector_rejects_unnormalized() {
        assert!(matches!(
            PureSchmidtVector::new(vec![c(0.9, 0.0), c(0.1, 0.0)]),
            Err(Error::BadWeights { .. })
        ));
    }
}
