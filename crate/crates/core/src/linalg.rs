//! Dense complex matrix arithmetic, Hermitian eigendecomposition, Kronecker
//! products, and the matrix norms the distance computations are built on.
//!
//! The indexing convention is fixed library-wide: `(i, j)` means row `i`,
//! column `j`. Storage is row-major. All matrices are square.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::tol;

/// Dense square complex matrix, row-major.
///
/// Constructors reject NaN and infinite entries; the arithmetic on finite
/// inputs at the scales this library works at (dim ≤ 512, entries O(1))
/// stays finite.
#[derive(Debug, Clone, PartialEq)]
pub struct ComplexMatrix {
    dim: usize,
    data: Vec<Complex64>,
}

impl ComplexMatrix {
    /// Zero matrix of the given dimension.
    pub fn zeros(dim: usize) -> Self {
        assert!(dim >= 1, "matrix dimension must be at least 1");
        ComplexMatrix {
            dim,
            data: vec![Complex64::ZERO; dim * dim],
        }
    }

    /// Identity matrix.
    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zeros(dim);
        for i in 0..dim {
            m.data[i * dim + i] = Complex64::ONE;
        }
        m
    }

    /// Build from a generator over (row, col). Panics on non-finite values.
    pub fn from_fn(dim: usize, mut f: impl FnMut(usize, usize) -> Complex64) -> Self {
        let mut m = Self::zeros(dim);
        for i in 0..dim {
            for j in 0..dim {
                let v = f(i, j);
                assert!(
                    v.re.is_finite() && v.im.is_finite(),
                    "non-finite entry at ({i}, {j})"
                );
                m.data[i * dim + j] = v;
            }
        }
        m
    }

    /// Build from nested rows, checking squareness and finiteness.
    pub fn from_rows(rows: &[Vec<Complex64>]) -> Result<Self> {
        let dim = rows.len();
        if dim == 0 {
            return Err(Error::DimensionMismatch {
                context: "from_rows",
                expected: 1,
                actual: 0,
            });
        }
        let mut data = Vec::with_capacity(dim * dim);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != dim {
                return Err(Error::DimensionMismatch {
                    context: "from_rows row length",
                    expected: dim,
                    actual: row.len(),
                });
            }
            for (j, &v) in row.iter().enumerate() {
                if !v.re.is_finite() || !v.im.is_finite() {
                    return Err(Error::NonFinite { row: i, col: j });
                }
                data.push(v);
            }
        }
        Ok(ComplexMatrix { dim, data })
    }

    /// Real diagonal matrix.
    pub fn diagonal(entries: &[f64]) -> Self {
        Self::from_fn(entries.len(), |i, j| {
            if i == j {
                Complex64::new(entries[i], 0.0)
            } else {
                Complex64::ZERO
            }
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> Complex64 {
        self.data[i * self.dim + j]
    }

    /// Panics on out-of-bounds indices or non-finite values.
    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: Complex64) {
        assert!(
            v.re.is_finite() && v.im.is_finite(),
            "non-finite entry at ({i}, {j})"
        );
        self.data[i * self.dim + j] = v;
    }

    /// Flat row-major view of the entries.
    pub fn entries(&self) -> &[Complex64] {
        &self.data
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.dim, other.dim, "dimension mismatch in add");
        ComplexMatrix {
            dim: self.dim,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!(self.dim, other.dim, "dimension mismatch in sub");
        ComplexMatrix {
            dim: self.dim,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    pub fn scale(&self, s: Complex64) -> Self {
        ComplexMatrix {
            dim: self.dim,
            data: self.data.iter().map(|a| a * s).collect(),
        }
    }

    /// Matrix product `self · other`.
    pub fn matmul(&self, other: &Self) -> Self {
        assert_eq!(self.dim, other.dim, "dimension mismatch in matmul");
        let n = self.dim;
        let mut out = vec![Complex64::ZERO; n * n];
        for i in 0..n {
            for k in 0..n {
                let a = self.data[i * n + k];
                if a == Complex64::ZERO {
                    continue;
                }
                let row = &other.data[k * n..(k + 1) * n];
                let dst = &mut out[i * n..(i + 1) * n];
                for (d, &b) in dst.iter_mut().zip(row) {
                    *d += a * b;
                }
            }
        }
        ComplexMatrix { dim: n, data: out }
    }

    /// Matrix-vector product.
    pub fn mul_vec(&self, v: &[Complex64]) -> Vec<Complex64> {
        assert_eq!(self.dim, v.len(), "dimension mismatch in mul_vec");
        let n = self.dim;
        (0..n)
            .map(|i| {
                self.data[i * n..(i + 1) * n]
                    .iter()
                    .zip(v)
                    .map(|(a, b)| a * b)
                    .sum()
            })
            .collect()
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> Self {
        let n = self.dim;
        Self::from_fn(n, |i, j| self.get(j, i).conj())
    }

    pub fn trace(&self) -> Complex64 {
        (0..self.dim).map(|i| self.get(i, i)).sum()
    }

    /// Largest entrywise modulus.
    pub fn max_abs(&self) -> f64 {
        self.data.iter().map(|v| v.norm()).fold(0.0, f64::max)
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.data
            .iter()
            .map(|v| v.norm_sqr())
            .sum::<f64>()
            .sqrt()
    }

    /// Largest deviation from Hermiticity, `max |m_ij − conj(m_ji)|`.
    pub fn hermiticity_deviation(&self) -> f64 {
        let mut max = 0.0_f64;
        for i in 0..self.dim {
            for j in i..self.dim {
                let d = (self.get(i, j) - self.get(j, i).conj()).norm();
                max = max.max(d);
            }
        }
        max
    }

    pub fn is_hermitian(&self, tol: f64) -> bool {
        self.hermiticity_deviation() <= tol
    }
}

/// Kronecker product `a ⊗ b`.
///
/// Entry `((i₁·dim(b) + i₂), (j₁·dim(b) + j₂))` equals `a(i₁,j₁)·b(i₂,j₂)`.
pub fn kron(a: &ComplexMatrix, b: &ComplexMatrix) -> ComplexMatrix {
    let (na, nb) = (a.dim(), b.dim());
    let n = na * nb;
    let mut out = ComplexMatrix::zeros(n);
    for i1 in 0..na {
        for j1 in 0..na {
            let f = a.get(i1, j1);
            if f == Complex64::ZERO {
                continue;
            }
            for i2 in 0..nb {
                for j2 in 0..nb {
                    out.data[(i1 * nb + i2) * n + (j1 * nb + j2)] = f * b.get(i2, j2);
                }
            }
        }
    }
    out
}

/// Entrywise sum of absolute values, `‖x‖_α = Σ_ij |x_ij|`.
///
/// This is the norm that induces the distance between a state and its
/// diagonal projection; it is zero iff the matrix is zero.
pub fn alpha_norm(m: &ComplexMatrix) -> f64 {
    m.entries().iter().map(|v| v.norm()).sum()
}

/// Trace norm `Σ |eigenvalues|` of a Hermitian matrix.
pub fn trace_norm(m: &ComplexMatrix, tol: f64) -> Result<f64> {
    let eig = hermitian_eig(m, tol)?;
    Ok(eig.eigenvalues.iter().map(|l| l.abs()).sum())
}

/// Result of diagonalizing a Hermitian matrix.
///
/// Eigenvalues are sorted ascending; column `k` of `eigenvectors` is the
/// unit-norm eigenvector matching `eigenvalues[k]`. Ties keep the order the
/// rotation history produced, so identical inputs give identical outputs.
#[derive(Debug, Clone)]
pub struct EigenDecomposition {
    pub eigenvalues: Vec<f64>,
    pub eigenvectors: ComplexMatrix,
}

impl EigenDecomposition {
    /// Rebuild `V Λ V†`; used by reconstruction checks.
    pub fn reconstruct(&self) -> ComplexMatrix {
        let n = self.eigenvalues.len();
        let v = &self.eigenvectors;
        ComplexMatrix::from_fn(n, |i, j| {
            (0..n)
                .map(|k| v.get(i, k) * self.eigenvalues[k] * v.get(j, k).conj())
                .sum()
        })
    }
}

/// Off-diagonal Frobenius norm, the Jacobi convergence measure.
fn off_diagonal_norm(m: &ComplexMatrix) -> f64 {
    let n = m.dim();
    let mut s = 0.0;
    for i in 0..n {
        for j in 0..n {
            if i != j {
                s += m.get(i, j).norm_sqr();
            }
        }
    }
    s.sqrt()
}

/// Eigendecomposition of a Hermitian matrix by cyclic Jacobi sweeps with
/// complex Givens rotations.
///
/// The input must satisfy `‖m − m†‖_max ≤ tol`; the iteration runs on the
/// Hermitian part `(m + m†)/2`. Stops when the off-diagonal Frobenius norm
/// drops below `1e−13 · dim`, errors with [`Error::NoConvergence`] after 100
/// sweeps. Deterministic: fixed pivot order, no randomness.
pub fn hermitian_eig(m: &ComplexMatrix, tol: f64) -> Result<EigenDecomposition> {
    let dev = m.hermiticity_deviation();
    if dev > tol {
        return Err(Error::NotHermitian {
            max_deviation: dev,
            tol,
        });
    }
    let n = m.dim();
    // Work on the Hermitian part so the rotations see an exactly Hermitian
    // operator even when the input sits just inside the tolerance.
    let mut a = ComplexMatrix::from_fn(n, |i, j| 0.5 * (m.get(i, j) + m.get(j, i).conj()));
    let mut v = ComplexMatrix::identity(n);

    let threshold = tol::JACOBI_OFF_THRESHOLD_PER_DIM * n as f64;
    let mut off = off_diagonal_norm(&a);
    let mut sweeps = 0;
    while off > threshold {
        if sweeps >= tol::JACOBI_SWEEP_BUDGET {
            return Err(Error::NoConvergence {
                off_diagonal: off,
                sweeps,
            });
        }
        for p in 0..n - 1 {
            for q in p + 1..n {
                jacobi_rotate(&mut a, &mut v, p, q);
            }
        }
        sweeps += 1;
        off = off_diagonal_norm(&a);
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| {
        a.get(i, i)
            .re
            .partial_cmp(&a.get(j, j).re)
            .expect("finite eigenvalues")
    });
    let eigenvalues: Vec<f64> = order.iter().map(|&i| a.get(i, i).re).collect();
    let eigenvectors = ComplexMatrix::from_fn(n, |i, j| v.get(i, order[j]));
    Ok(EigenDecomposition {
        eigenvalues,
        eigenvectors,
    })
}

/// One complex Jacobi rotation zeroing the (p, q) pivot of the Hermitian
/// matrix `a`, accumulating the rotation into `v`.
///
/// With `a_pq = |a_pq| e^{iφ}` the unitary acts on the (p, q) plane as
/// `[[c, s·e^{iφ}], [−s·e^{−iφ}, c]]`; the angle is chosen by the stable
/// smaller-root formula from the real symmetric case applied to |a_pq|.
fn jacobi_rotate(a: &mut ComplexMatrix, v: &mut ComplexMatrix, p: usize, q: usize) {
    let apq = a.get(p, q);
    let mag = apq.norm();
    if mag == 0.0 {
        return;
    }
    let phase = apq / mag;
    let app = a.get(p, p).re;
    let aqq = a.get(q, q).re;

    let tau = (aqq - app) / (2.0 * mag);
    let t = if tau >= 0.0 {
        1.0 / (tau + (1.0 + tau * tau).sqrt())
    } else {
        -1.0 / (-tau + (1.0 + tau * tau).sqrt())
    };
    let c = 1.0 / (1.0 + t * t).sqrt();
    let s = t * c;

    let n = a.dim();
    let sp = s * phase; // s·e^{iφ}
    let spc = sp.conj(); // s·e^{−iφ}

    // Columns: A ← A·U with U[p][p]=c, U[p][q]=s·e^{iφ}, U[q][p]=−s·e^{−iφ}, U[q][q]=c.
    for r in 0..n {
        let arp = a.get(r, p);
        let arq = a.get(r, q);
        a.data[r * n + p] = c * arp - spc * arq;
        a.data[r * n + q] = sp * arp + c * arq;
    }
    // Rows: A ← U†·A.
    for r in 0..n {
        let apr = a.get(p, r);
        let aqr = a.get(q, r);
        a.data[p * n + r] = c * apr - sp * aqr;
        a.data[q * n + r] = spc * apr + c * aqr;
    }
    // The pivot is zero analytically; pin it against rounding and keep the
    // diagonal exactly real.
    a.data[p * n + q] = Complex64::ZERO;
    a.data[q * n + p] = Complex64::ZERO;
    a.data[p * n + p] = Complex64::new(a.data[p * n + p].re, 0.0);
    a.data[q * n + q] = Complex64::new(a.data[q * n + q].re, 0.0);

    // Accumulate eigenvectors: V ← V·U.
    for r in 0..n {
        let vrp = v.get(r, p);
        let vrq = v.get(r, q);
        v.data[r * n + p] = c * vrp - spc * vrq;
        v.data[r * n + q] = sp * vrp + c * vrq;
    }
}
