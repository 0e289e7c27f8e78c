use super::SuperAlgebra;
use crate::error::{Error, Result};
use crate::exact::{Field, Poly, RatFun, Scalar};

/// A one-parameter family of superalgebras whose structure constants are
/// polynomials in a formal parameter, defined for nonzero parameter values.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParamFamily {
    param: String,
    generic: SuperAlgebra<RatFun>,
}

impl ParamFamily {
    /// `generic` holds the constants as elements of `Q(param)`; they must be
    /// polynomials.
    pub fn new(param: impl Into<String>, generic: SuperAlgebra<RatFun>) -> Result<Self> {
        let param = param.into();
        for (label, v) in generic.labelled_constants() {
            if !v.is_polynomial() {
                return Err(Error::InvalidArgument(format!(
                    "family constant {label} = {} is not a polynomial in {param}",
                    v.fmt_with(&param)
                )));
            }
        }
        Ok(ParamFamily { param, generic })
    }

    pub fn param(&self) -> &str {
        &self.param
    }

    /// The family as one superalgebra over the rational function field.
    pub fn generic(&self) -> &SuperAlgebra<RatFun> {
        &self.generic
    }

    /// Whether no constant involves the parameter.
    pub fn is_constant(&self) -> bool {
        self.generic.labelled_constants().iter().all(|(_, v)| v.as_constant().is_some())
    }

    /// The member at a nonzero parameter value.
    pub fn specialize(&self, value: &Scalar) -> Result<SuperAlgebra<Scalar>> {
        if value.is_zero() {
            return Err(Error::FamilyDomain(value.to_string()));
        }
        Ok(self.at(value))
    }

    /// Substitute an element of any field for the parameter. No domain
    /// check is made.
    pub fn at<F: Field>(&self, value: &F) -> SuperAlgebra<F> {
        self.generic.map_field(|c| eval_poly(c.num(), value))
    }
}

/// Horner evaluation of a rational polynomial at an element of `F`.
pub fn eval_poly<F: Field>(p: &Poly, x: &F) -> F {
    p.coeffs()
        .iter()
        .rev()
        .fold(F::zero(), |acc, c| acc * x + &F::from_scalar(c))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::parse_ratfun;

    fn d_family() -> ParamFamily {
        // e1e1 = e1, e2e2 = e2, e1f_i = f_i/2, e2f_i = f_i/2, f1f2 = e1 + g e2
        let mut a = SuperAlgebra::<RatFun>::zero(2, 2);
        let c = |s: &str| parse_ratfun(s, "g").unwrap();
        a.set_supercommutative(0, 0, &[c("1"), c("0"), c("0"), c("0")]).unwrap();
        a.set_supercommutative(1, 1, &[c("0"), c("1"), c("0"), c("0")]).unwrap();
        for (i, j) in [(0, 2), (1, 2)] {
            a.set_supercommutative(i, j, &[c("0"), c("0"), c("1/2"), c("0")]).unwrap();
        }
        for (i, j) in [(0, 3), (1, 3)] {
            a.set_supercommutative(i, j, &[c("0"), c("0"), c("0"), c("1/2")]).unwrap();
        }
        a.set_supercommutative(2, 3, &[c("1"), c("g"), c("0"), c("0")]).unwrap();
        ParamFamily::new("g", a).unwrap()
    }

    #[test]
    fn specialization() {
        let fam = d_family();
        let a = fam.specialize(&Scalar::from(2)).unwrap();
        assert_eq!(a.mul_basis(2, 3), vec![Scalar::from(1), Scalar::from(2), Scalar::zero(), Scalar::zero()]);
        assert!(a.check_supercommutativity().is_ok());
        assert!(a.check_jordan_superidentity().is_ok());
        assert!(matches!(fam.specialize(&Scalar::zero()), Err(Error::FamilyDomain(_))));
        assert!(fam.generic().check_jordan_superidentity().is_ok());
    }

    #[test]
    fn non_polynomial_rejected() {
        let mut a = SuperAlgebra::<RatFun>::zero(2, 0);
        let inv = parse_ratfun("(1)/(t)", "t").unwrap();
        a.set_supercommutative(0, 0, &[inv, RatFun::zero()]).unwrap();
        assert!(ParamFamily::new("g", a).is_err());
    }
}
