//! Unreduced fractions of multivariate polynomials.

use std::fmt;

use super::field::Field;
use super::mpoly::{MPoly, Vars};
use crate::error::{Error, Result};

#[derive(Clone, Debug)]
pub struct Frac<F: Field> {
    num: MPoly<F>,
    den: MPoly<F>,
}

impl<F: Field> Frac<F> {
    pub fn new(num: MPoly<F>, den: MPoly<F>) -> Self {
        assert!(!den.is_zero(), "fraction with zero denominator");
        Frac { num, den }
    }

    pub fn from_poly(p: MPoly<F>) -> Self {
        let den = MPoly::one(p.vars());
        Frac { num: p, den }
    }

    pub fn constant(vars: &Vars, c: F) -> Self {
        Self::from_poly(MPoly::constant(vars, c))
    }

    pub fn var(vars: &Vars, i: usize) -> Self {
        Self::from_poly(MPoly::var(vars, i))
    }

    pub fn num(&self) -> &MPoly<F> {
        &self.num
    }

    pub fn den(&self) -> &MPoly<F> {
        &self.den
    }

    pub fn add(&self, o: &Self) -> Self {
        if self.den == o.den {
            return Frac::new(self.num.add(&o.num), self.den.clone());
        }
        Frac::new(self.num.mul(&o.den).add(&o.num.mul(&self.den)), self.den.mul(&o.den))
    }

    pub fn neg(&self) -> Self {
        Frac { num: self.num.neg(), den: self.den.clone() }
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &Self) -> Self {
        Frac::new(self.num.mul(&o.num), self.den.mul(&o.den))
    }

    pub fn scale(&self, c: &F) -> Self {
        Frac { num: self.num.scale(c), den: self.den.clone() }
    }

    pub fn try_div(&self, o: &Self) -> Result<Self> {
        if o.num.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Frac::new(self.num.mul(&o.den), self.den.mul(&o.num)))
    }

    pub fn recip(&self) -> Result<Self> {
        Self::constant(self.num.vars(), F::one()).try_div(self)
    }

    /// Numerator of `self − o` over the product of denominators.
    pub fn residual(&self, o: &Self) -> MPoly<F> {
        self.num.mul(&o.den).sub(&o.num.mul(&self.den))
    }

    pub fn equals(&self, o: &Self) -> bool {
        self.residual(o).is_zero()
    }

    /// Exact value at a point; error when the denominator vanishes there.
    pub fn eval(&self, point: &[F]) -> Result<F> {
        let d = self.den.eval(point);
        if d.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(self.num.eval(point).div(&d))
    }
}

impl<F: Field> fmt::Display for Frac<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})/({})", self.num, self.den)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::field::{rat_int, Rat};
    use crate::exactmath::mpoly::vars;

    #[test]
    fn cross_multiplied_equality() {
        let v = vars(&["x"]);
        let x = Frac::<Rat>::var(&v, 0);
        let one = Frac::constant(&v, rat_int(1));
        // 1/(((1+x)/(1−x))²−1) = (1−x)²/(4x)
        let r = one.add(&x).try_div(&one.sub(&x)).unwrap();
        let lhs = r.mul(&r).sub(&one).recip().unwrap();
        let omx = one.sub(&x);
        let rhs = omx.mul(&omx).try_div(&x.scale(&rat_int(4))).unwrap();
        assert!(lhs.equals(&rhs));
        assert!(x.recip().unwrap().eval(&[rat_int(0)]).is_err());
    }
}
