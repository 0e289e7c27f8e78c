//! Exact scalars: rationals, univariate polynomials and rational functions.
//!
//! Every computation in the crate is carried out over one of the two fields
//! defined here. [`Scalar`] is the base field (the rationals); [`RatFun`] is
//! the field of rational functions in one formal variable, used both for the
//! curve parameter `t` of a degeneration and for the parameter of a family
//! when computing its generic invariants.

mod parse;
mod poly;
mod ratfun;
mod scalar;

use std::fmt::{Debug, Display};
use std::ops::{Add, Mul, Neg, Sub};

pub use parse::{parse_poly, parse_ratfun, parse_scalar};
pub use poly::Poly;
pub use ratfun::RatFun;
pub use scalar::Scalar;

/// A commutative field with exact arithmetic.
///
/// Linear algebra and structure-constant manipulation are written against
/// this trait so the same code runs over the rationals and over `Q(t)`.
pub trait Field:
    Clone
    + PartialEq
    + Debug
    + Display
    + Send
    + Sync
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
    + for<'a> Add<&'a Self, Output = Self>
    + for<'a> Sub<&'a Self, Output = Self>
    + for<'a> Mul<&'a Self, Output = Self>
{
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    /// Multiplicative inverse, `None` for zero.
    fn inv(&self) -> Option<Self>;
    fn from_scalar(s: &Scalar) -> Self;

    fn is_one(&self) -> bool {
        *self == Self::one()
    }

    fn from_i64(v: i64) -> Self {
        Self::from_scalar(&Scalar::from(v))
    }

    /// Cost heuristic used for pivot selection: smaller is cheaper.
    fn pivot_weight(&self) -> u64;
}
