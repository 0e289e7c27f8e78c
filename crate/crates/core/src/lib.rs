//! Exact computations on Jordan superalgebras of small type: structure
//! constants, derivations, second cohomology and degenerations.

pub mod error;
pub mod exact;
pub mod catalog;
pub mod cohomology;
pub mod degeneration;
pub mod derivation;
pub mod linear;
pub mod superalgebra;

pub use error::{Error, Result};
pub use exact::{Field, Poly, RatFun, Scalar};
pub use linear::Matrix;
pub use superalgebra::{GradedElement, ParamFamily, SuperAlgebra};
