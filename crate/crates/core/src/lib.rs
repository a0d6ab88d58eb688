//! Exact computations in length categories through iterated extensions.
//!
//! Objects of a length category are handled concretely as representations of
//! a quiver with relations ([`quiverrep`]). Graded modules over the first Weyl
//! algebra are truncated to a finite window of weights ([`gradedrep`]) and
//! presented through the same machinery, so the category engine in [`abcat`]
//! (Hom, Ext¹, socles, composition series, indecomposability) serves both.
//!
//! All arithmetic is exact over the Gaussian rationals.

pub mod abcat;
pub mod error;
pub mod gradedrep;
pub mod itext;
pub mod linalg;
pub mod quiverrep;
pub mod species;
pub mod weyl;
pub mod weylcat;

pub use error::{Error, Result};
pub use linalg::{Matrix, Scalar};
