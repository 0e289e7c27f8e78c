use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::{Field, Poly, Scalar};
use crate::error::{Error, Result};

/// A rational function `num / den` in one formal variable, kept in
/// canonical form: `den` monic, `gcd(num, den) = 1`, and `0 = 0 / 1`.
///
/// Laurent monomials `t^-k` are simply `1 / t^k`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatFun {
    num: Poly,
    den: Poly,
}

impl RatFun {
    /// Reduce `num / den` to canonical form.
    pub fn normalize(num: Poly, den: Poly) -> Result<RatFun> {
        if den.is_zero() {
            return Err(Error::ZeroPolynomialDivision);
        }
        if num.is_zero() {
            return Ok(RatFun::from_poly(Poly::zero()));
        }
        let g = Poly::gcd(&num, &den);
        let (num, _) = num.div_rem(&g)?;
        let (den, _) = den.div_rem(&g)?;
        let lead = den.leading().inv().expect("nonzero leading coefficient");
        Ok(RatFun {
            num: num.scale(&lead),
            den: den.scale(&lead),
        })
    }

    pub fn from_poly(p: Poly) -> RatFun {
        RatFun {
            num: p,
            den: Poly::one(),
        }
    }

    pub fn constant(c: Scalar) -> RatFun {
        RatFun::from_poly(Poly::constant(c))
    }

    /// The formal variable.
    pub fn var() -> RatFun {
        RatFun::from_poly(Poly::x())
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_constant()
    }

    /// The constant value, if this rational function does not depend on
    /// the variable.
    pub fn as_constant(&self) -> Option<Scalar> {
        if self.num.is_constant() && self.den.is_constant() {
            Some(self.num.coeff(0))
        } else {
            None
        }
    }

    /// Value at the variable equal to zero; fails when the reduced
    /// denominator vanishes there.
    pub fn eval_at_zero(&self) -> Result<Scalar> {
        self.eval(&Scalar::zero()).map_err(|_| Error::PoleAtZero)
    }

    pub fn eval(&self, x: &Scalar) -> Result<Scalar> {
        let d = self.den.eval(x);
        if d.is_zero() {
            return Err(Error::Pole(x.to_string()));
        }
        self.num.eval(x).checked_div(&d)
    }

    /// Whether the canonical form is regular at zero.
    pub fn has_pole_at_zero(&self) -> bool {
        self.den.coeff(0).is_zero()
    }

    /// Substitute a polynomial for the variable.
    pub fn compose(&self, inner: &Poly) -> Result<RatFun> {
        RatFun::normalize(self.num.compose(inner), self.den.compose(inner))
    }

    pub fn fmt_with(&self, var: &str) -> String {
        if self.den == Poly::one() {
            self.num.fmt_with(var)
        } else {
            format!("({})/({})", self.num.fmt_with(var), self.den.fmt_with(var))
        }
    }
}

impl Field for RatFun {
    fn zero() -> Self {
        RatFun::from_poly(Poly::zero())
    }

    fn one() -> Self {
        RatFun::from_poly(Poly::one())
    }

    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    fn inv(&self) -> Option<Self> {
        if self.num.is_zero() {
            None
        } else {
            Some(RatFun::normalize(self.den.clone(), self.num.clone()).expect("nonzero"))
        }
    }

    fn from_scalar(s: &Scalar) -> Self {
        RatFun::constant(s.clone())
    }

    fn pivot_weight(&self) -> u64 {
        let deg = self.num.degree().unwrap_or(0) + self.den.degree().unwrap_or(0);
        let bits: u64 = self
            .num
            .coeffs()
            .iter()
            .chain(self.den.coeffs())
            .map(Field::pivot_weight)
            .sum();
        (deg as u64) * 1000 + bits.max(1)
    }
}

impl fmt::Display for RatFun {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.fmt_with("t"))
    }
}

impl fmt::Debug for RatFun {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatFun({self})")
    }
}

impl Serialize for RatFun {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for RatFun {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        super::parse_ratfun(&s, "t").map_err(serde::de::Error::custom)
    }
}

impl<'b> Add<&'b RatFun> for &RatFun {
    type Output = RatFun;
    fn add(self, rhs: &'b RatFun) -> RatFun {
        if self.den == rhs.den {
            return RatFun::normalize(&self.num + &rhs.num, self.den.clone()).expect("nonzero");
        }
        let num = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
        RatFun::normalize(num, &self.den * &rhs.den).expect("nonzero")
    }
}

impl<'b> Sub<&'b RatFun> for &RatFun {
    type Output = RatFun;
    fn sub(self, rhs: &'b RatFun) -> RatFun {
        self + &(-rhs)
    }
}

impl<'b> Mul<&'b RatFun> for &RatFun {
    type Output = RatFun;
    fn mul(self, rhs: &'b RatFun) -> RatFun {
        if self.is_zero() || rhs.is_zero() {
            return RatFun::zero();
        }
        RatFun::normalize(&self.num * &rhs.num, &self.den * &rhs.den).expect("nonzero")
    }
}

impl Neg for &RatFun {
    type Output = RatFun;
    fn neg(self) -> RatFun {
        RatFun {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Neg for RatFun {
    type Output = RatFun;
    fn neg(self) -> RatFun {
        -&self
    }
}

macro_rules! owned_ops {
    ($trait:ident, $method:ident) => {
        impl $trait for RatFun {
            type Output = RatFun;
            fn $method(self, rhs: RatFun) -> RatFun {
                $trait::$method(&self, &rhs)
            }
        }
        impl<'a> $trait<&'a RatFun> for RatFun {
            type Output = RatFun;
            fn $method(self, rhs: &'a RatFun) -> RatFun {
                $trait::$method(&self, rhs)
            }
        }
    };
}

owned_ops!(Add, add);
owned_ops!(Sub, sub);
owned_ops!(Mul, mul);
