//! Exact structural invariants of finite-dimensional Lie algebras over the
//! rationals: derived algebra, center, lower central series, and the Schur
//! multiplier through second homology, together with an identification of
//! nilpotent algebras whose multiplier is close to the maximum.

pub mod catalog;
pub mod classifier;
pub mod error;
pub mod lie;
pub mod lieconst;
pub mod linalg;
pub mod multiplier;
pub mod population;
pub mod rational;
pub mod verify;

pub use catalog::{CatalogEntry, Family};
pub use classifier::{classify, fingerprint, ClassificationResult, Fingerprint, Status};
pub use error::{LieError, LinalgError};
pub use lie::{LieAlgebra, SeriesReport};
pub use linalg::{Matrix, Subspace};
pub use multiplier::{schur_multiplier_dim, MultiplierReport};
pub use rational::Rational;
