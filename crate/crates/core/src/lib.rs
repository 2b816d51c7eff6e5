//! Negativity of Schmidt-correlated (SC) bipartite states.
//!
//! An SC state is a mixture of pure states sharing the same pair of Schmidt
//! bases; it is fully encoded by an N×N coefficient matrix. For such states
//! the negativity has a closed form — half the sum of the off-diagonal
//! moduli of the density matrix, which is also the α-norm distance to the
//! separable state obtained by zeroing the off-diagonals. This crate
//! computes exact negativity by partial transposition, the closed form and
//! its analytic partial-transpose eigensystem, the band bound for
//! quasidiagonal states, the conserving dephasing dynamics that generate SC
//! states, upper bounds for mixtures of λ-SC components, and a numerical
//! search for the minimal off-diagonal distance over local product bases.

pub mod cli;
pub mod dynamics;
pub mod error;
pub mod explorer;
pub mod io;
pub mod linalg;
pub mod mixtures;
pub mod negativity;
pub mod selftest;
pub mod states;
pub mod tol;

pub use error::{Error, Result};
pub use linalg::{alpha_norm, hermitian_eig, kron, trace_norm, ComplexMatrix, EigenDecomposition};
pub use states::{BipartiteDims, DensityMatrix, PureSchmidtVector, SchmidtCorrelatedState};
