//! Exact Euler characteristics of ordered configuration spaces of finite
//! simplicial complexes.
//!
//! * [`complex`]: abstract simplicial complexes and their constructions.
//! * [`series`]: exact truncated power series and products of linear factors.
//! * [`euler`]: cell weights, the closed-form generating function and the
//!   puncture recursion, plus identity checks.
//! * [`oracle`]: brute-force deleted-product counts for cross-validation.
//! * [`families`]: named complexes.
//!
//! With the default `parallel` feature the per-cell computations and the
//! oracle enumeration run on rayon; without it they run sequentially with
//! identical results.

pub mod complex;
pub mod error;
pub mod euler;
pub mod families;
pub mod oracle;
mod par;
pub mod series;

pub use complex::{Cell, FVector, SimplicialComplex, VertexId};
pub use error::{Error, Result};
pub use series::{Exponent, LinearFactor, LinearFactorProduct, TruncatedSeries};
