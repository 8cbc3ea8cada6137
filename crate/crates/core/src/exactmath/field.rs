use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Reduced rational number with positive denominator.
pub type Rat = BigRational;

/// Build a rational from small integers.
pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

pub fn rat_int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// `p/q` string form, `p` for integers.
pub fn rat_string(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Exact square root of a rational, if it is a square.
pub fn rat_sqrt(r: &Rat) -> Option<Rat> {
    if r.is_negative() {
        return None;
    }
    let n = r.numer().sqrt();
    let d = r.denom().sqrt();
    if &(&n * &n) == r.numer() && &(&d * &d) == r.denom() {
        Some(Rat::new(n, d))
    } else {
        None
    }
}

/// Operations every coefficient field in the tower provides.
///
/// Methods take references so big-number types are not cloned needlessly.
pub trait Field: Clone + PartialEq + fmt::Debug + fmt::Display + Send + Sync + 'static {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    /// `None` for zero.
    fn try_inv(&self) -> Option<Self>;
    fn from_rat(r: &Rat) -> Self;
    /// The value as a rational constant, when it is one.
    fn as_rat(&self) -> Option<Rat>;
    /// True when printing needs parentheses inside a product.
    fn is_compound(&self) -> bool {
        false
    }

    fn is_one(&self) -> bool {
        *self == Self::one()
    }
    fn inv(&self) -> Self {
        self.try_inv().expect("inverse of zero")
    }
    fn div(&self, rhs: &Self) -> Self {
        self.mul(&rhs.inv())
    }
    fn from_int(n: i64) -> Self {
        Self::from_rat(&rat_int(n))
    }
    fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }
    /// Sign of a rational value (used for canonical printing); 0 if not rational.
    fn sign_hint(&self) -> i32 {
        match self.as_rat() {
            Some(r) if r.is_negative() => -1,
            Some(r) if r.is_positive() => 1,
            _ => 0,
        }
    }
}

impl Field for Rat {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    fn try_inv(&self) -> Option<Self> {
        if Zero::is_zero(self) {
            None
        } else {
            Some(self.recip())
        }
    }
    fn from_rat(r: &Rat) -> Self {
        r.clone()
    }
    fn as_rat(&self) -> Option<Rat> {
        Some(self.clone())
    }
    fn is_one(&self) -> bool {
        One::is_one(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rat_is_reduced() {
        let r = rat(6, -4);
        assert_eq!(r.numer(), &BigInt::from(-3));
        assert_eq!(r.denom(), &BigInt::from(2));
        assert_eq!(rat_string(&r), "-3/2");
        assert_eq!(rat_string(&rat_int(7)), "7");
    }

    #[test]
    fn sqrt_of_squares_only() {
        assert_eq!(rat_sqrt(&rat(9, 4)), Some(rat(3, 2)));
        assert_eq!(rat_sqrt(&rat_int(2)), None);
        assert_eq!(rat_sqrt(&rat_int(-4)), None);
    }

    #[test]
    fn field_pow() {
        assert_eq!(Field::pow(&rat(2, 3), 3), rat(8, 27));
        assert_eq!(Field::pow(&rat(5, 1), 0), rat_int(1));
    }
}
