//! Squared magnitudes of Hermitian eigenvector components computed from
//! eigenvalues alone: those of the matrix and of its principal minors.
//!
//! * [`eigensolve`] — dense Hermitian eigenvalues and eigenvectors.
//! * [`identity`] — the eigenvalue identity, its resolvent forms, clustering
//!   of degenerate spectra and interlacing checks.
//! * [`io`] — matrix text documents, seeded generators, CSV/JSON tables.
//! * [`verify`] — comparison against a full eigendecomposition.
//!
//! The numerical core is generic over [`Scalar`] (`f32` or `f64`); file
//! formats and generators work in `f64`.

pub mod eigensolve;
pub mod error;
pub mod identity;
pub mod io;
pub mod scalar;
pub mod verify;

pub use eigensolve::{eigenvalues, spectral_decomposition, HermitianMatrix, Spectrum};
pub use error::{Error, Result};
pub use identity::{magnitude_table, EigenClustering, MagnitudeTable};
pub use scalar::Scalar;

pub type Matrix64 = HermitianMatrix<f64>;
pub type Matrix32 = HermitianMatrix<f32>;
pub type Spectrum64 = Spectrum<f64>;
pub type Spectrum32 = Spectrum<f32>;
pub type Table64 = MagnitudeTable<f64>;
pub type Table32 = MagnitudeTable<f32>;
