//! The coefficient tower ℚ ⊂ ℚ(s) ⊂ ℚ(s)(α).

use std::fmt;

use num_traits::{One, Signed};

use super::field::{rat_int, rat_string, Field, Rat};
use super::upoly::UPoly;
use crate::error::{Error, Result};

/// Reduced fraction of polynomials in `s` with monic denominator.
#[derive(Clone, PartialEq, Debug)]
pub struct RatFun {
    num: UPoly<Rat>,
    den: UPoly<Rat>,
}

impl RatFun {
    pub fn new(num: UPoly<Rat>, den: UPoly<Rat>) -> Self {
        assert!(!den.is_zero(), "rational function with zero denominator");
        if num.is_zero() {
            return Self::zero();
        }
        if den.degree() == Some(0) {
            let c = den.lc().recip();
            return RatFun { num: num.scale(&c), den: UPoly::one() };
        }
        let g = num.gcd(&den);
        let (num, den) = if g.is_one() { (num, den) } else { (num.div_exact(&g).unwrap(), den.div_exact(&g).unwrap()) };
        let c = den.lc().recip();
        RatFun { num: num.scale(&c), den: den.scale(&c) }
    }

    pub fn from_poly(p: UPoly<Rat>) -> Self {
        RatFun { num: p, den: UPoly::one() }
    }

    pub fn constant(c: Rat) -> Self {
        Self::from_poly(UPoly::constant(c))
    }

    pub fn s() -> Self {
        Self::from_poly(UPoly::monomial(rat_int(1), 1))
    }

    pub fn zero() -> Self {
        Self::from_poly(UPoly::zero())
    }

    pub fn num(&self) -> &UPoly<Rat> {
        &self.num
    }

    pub fn den(&self) -> &UPoly<Rat> {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_poly(&self) -> bool {
        self.den.is_one()
    }

    pub fn as_rat(&self) -> Option<Rat> {
        if self.den.is_one() && self.num.degree().unwrap_or(0) == 0 {
            Some(self.num.coeff(0))
        } else {
            None
        }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        if self.is_poly() && rhs.is_poly() {
            return Self::from_poly(self.num.add(&rhs.num));
        }
        if self.den == rhs.den {
            return Self::new(self.num.add(&rhs.num), self.den.clone());
        }
        Self::new(self.num.mul(&rhs.den).add(&rhs.num.mul(&self.den)), self.den.mul(&rhs.den))
    }

    pub fn neg(&self) -> Self {
        RatFun { num: self.num.neg(), den: self.den.clone() }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Self::zero();
        }
        if self.is_poly() && rhs.is_poly() {
            return Self::from_poly(self.num.mul(&rhs.num));
        }
        Self::new(self.num.mul(&rhs.num), self.den.mul(&rhs.den))
    }

    pub fn try_inv(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(Self::new(self.den.clone(), self.num.clone()))
        }
    }

    /// Evaluate at a rational point.
    pub fn eval(&self, s0: &Rat) -> Result<Rat> {
        let d = self.den.eval(s0);
        if num_traits::Zero::is_zero(&d) {
            return Err(Error::Pole(rat_string(s0)));
        }
        Ok(self.num.eval(s0) / d)
    }

    /// Values of `s` where numerator or denominator vanishes, restricted to rational roots.
    /// Factors whose coefficients are too large to search are skipped.
    pub fn rational_zeros_and_poles(&self) -> Vec<Rat> {
        let mut out = Vec::new();
        for p in [&self.num, &self.den] {
            out.extend(super::ops::try_rational_roots(p).unwrap_or_default());
        }
        out.sort();
        out.dedup();
        out
    }
}

impl fmt::Display for RatFun {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            f.write_str(&self.num.fmt_var("s"))
        } else {
            write!(f, "({})/({})", self.num.fmt_var("s"), self.den.fmt_var("s"))
        }
    }
}

/// Which square root α denotes.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash, PartialOrd, Ord, Default, serde::Serialize)]
pub enum Ext {
    /// No extension in play.
    #[default]
    None,
    /// α² = s² − s
    SSquaredMinusS,
    /// α² = 2
    Two,
}

impl Ext {
    pub fn alpha_square(self) -> Option<RatFun> {
        match self {
            Ext::None => None,
            Ext::SSquaredMinusS => {
                Some(RatFun::from_poly(UPoly::from_coeffs(vec![rat_int(0), rat_int(-1), rat_int(1)])))
            }
            Ext::Two => Some(RatFun::constant(rat_int(2))),
        }
    }

    fn merge(self, other: Ext) -> Ext {
        match (self, other) {
            (Ext::None, e) | (e, Ext::None) => e,
            (a, b) if a == b => a,
            (a, b) => panic!("mixing incompatible extensions {a:?} and {b:?}"),
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, serde::Serialize)]
pub enum Level {
    Q,
    Qs,
    QsAlpha,
}

/// The tower level together with α², as declared for a computation.
#[derive(Clone, PartialEq, Debug)]
pub struct FieldDescriptor {
    pub level: Level,
    pub alpha_square: Option<RatFun>,
}

/// `a + b·α` with `a, b ∈ ℚ(s)`.
#[derive(Clone, Debug)]
pub struct FieldElem {
    ext: Ext,
    a: RatFun,
    b: RatFun,
}

impl PartialEq for FieldElem {
    fn eq(&self, other: &Self) -> bool {
        self.a == other.a && self.b == other.b && (self.b.is_zero() || self.ext == other.ext)
    }
}

/// How α is treated when specializing `s`.
#[derive(Clone, Debug, PartialEq)]
pub enum AlphaValue {
    Rational(Rat),
    Symbolic,
}

impl FieldElem {
    pub fn new(ext: Ext, a: RatFun, b: RatFun) -> Self {
        assert!(ext != Ext::None || b.is_zero(), "α-part without an extension");
        FieldElem { ext, a, b }
    }

    pub fn from_ratfun(a: RatFun) -> Self {
        FieldElem { ext: Ext::None, a, b: RatFun::zero() }
    }

    pub fn s() -> Self {
        Self::from_ratfun(RatFun::s())
    }

    pub fn alpha(ext: Ext) -> Self {
        assert!(ext != Ext::None);
        FieldElem { ext, a: RatFun::zero(), b: RatFun::constant(rat_int(1)) }
    }

    pub fn ext(&self) -> Ext {
        self.ext
    }

    pub fn a(&self) -> &RatFun {
        &self.a
    }

    pub fn b(&self) -> &RatFun {
        &self.b
    }

    pub fn with_ext(mut self, ext: Ext) -> Self {
        self.ext = self.ext.merge(ext);
        self
    }

    pub fn descriptor(&self) -> FieldDescriptor {
        let level = if !self.b.is_zero() || self.ext != Ext::None {
            Level::QsAlpha
        } else if self.a.as_rat().is_some() {
            Level::Q
        } else {
            Level::Qs
        };
        FieldDescriptor { level, alpha_square: self.ext.alpha_square() }
    }

    /// Galois conjugate α ↦ −α.
    pub fn conjugate(&self) -> Self {
        FieldElem { ext: self.ext, a: self.a.clone(), b: self.b.neg() }
    }

    /// Norm to ℚ(s).
    pub fn norm(&self) -> RatFun {
        self.mul(&self.conjugate()).a
    }

    pub fn specialize(&self, s0: &Rat, alpha: &AlphaValue) -> Result<FieldElem> {
        let a = self.a.eval(s0)?;
        let b = self.b.eval(s0)?;
        if num_traits::Zero::is_zero(&b) {
            return Ok(Self::from_rat(&a));
        }
        let sq = self.ext.alpha_square().unwrap().eval(s0)?;
        match alpha {
            AlphaValue::Rational(a0) => {
                if a0 * a0 != sq {
                    return Err(Error::AlphaMismatch(format!(
                        "alpha0^2 = {} but alpha^2 specializes to {}",
                        rat_string(&(a0 * a0)),
                        rat_string(&sq)
                    )));
                }
                Ok(Self::from_rat(&(a + b * a0)))
            }
            AlphaValue::Symbolic => {
                if sq == rat_int(2) {
                    Ok(FieldElem::new(Ext::Two, RatFun::constant(a), RatFun::constant(b)))
                } else {
                    Err(Error::AlphaMismatch(format!(
                        "alpha^2 specializes to {}, not a supported extension",
                        rat_string(&sq)
                    )))
                }
            }
        }
    }
}

impl Field for FieldElem {
    fn zero() -> Self {
        Self::from_ratfun(RatFun::zero())
    }
    fn one() -> Self {
        Self::from_rat(&rat_int(1))
    }
    fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }
    fn add(&self, rhs: &Self) -> Self {
        FieldElem { ext: self.ext.merge(rhs.ext), a: self.a.add(&rhs.a), b: self.b.add(&rhs.b) }
    }
    fn sub(&self, rhs: &Self) -> Self {
        FieldElem { ext: self.ext.merge(rhs.ext), a: self.a.sub(&rhs.a), b: self.b.sub(&rhs.b) }
    }
    fn mul(&self, rhs: &Self) -> Self {
        let ext = self.ext.merge(rhs.ext);
        if self.b.is_zero() && rhs.b.is_zero() {
            return FieldElem { ext, a: self.a.mul(&rhs.a), b: RatFun::zero() };
        }
        let d = ext.alpha_square().unwrap();
        let a = self.a.mul(&rhs.a).add(&self.b.mul(&rhs.b).mul(&d));
        let b = self.a.mul(&rhs.b).add(&self.b.mul(&rhs.a));
        FieldElem { ext, a, b }
    }
    fn neg(&self) -> Self {
        FieldElem { ext: self.ext, a: self.a.neg(), b: self.b.neg() }
    }
    fn try_inv(&self) -> Option<Self> {
        if self.b.is_zero() {
            return self.a.try_inv().map(|a| FieldElem { ext: self.ext, a, b: RatFun::zero() });
        }
        let n = self.norm().try_inv()?;
        let c = self.conjugate();
        Some(FieldElem { ext: self.ext, a: c.a.mul(&n), b: c.b.mul(&n) })
    }
    fn from_rat(r: &Rat) -> Self {
        Self::from_ratfun(RatFun::constant(r.clone()))
    }
    fn as_rat(&self) -> Option<Rat> {
        if self.b.is_zero() {
            self.a.as_rat()
        } else {
            None
        }
    }
    fn is_compound(&self) -> bool {
        if !self.b.is_zero() {
            return true;
        }
        match self.a.as_rat() {
            Some(_) => false,
            None => {
                !(self.a.is_poly()
                    && self.a.num().coeffs().iter().filter(|c| !num_traits::Zero::is_zero(*c)).count() == 1
                    && One::is_one(&self.a.num().lc()))
            }
        }
    }
    fn sign_hint(&self) -> i32 {
        if !self.b.is_zero() {
            return 0;
        }
        match self.a.as_rat() {
            Some(r) if r.is_negative() => -1,
            Some(_) => 1,
            None => {
                if self.a.num().lc().is_negative() {
                    -1
                } else {
                    1
                }
            }
        }
    }
}

impl fmt::Display for FieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            return write!(f, "{}", self.a);
        }
        let bpart = if let Some(r) = self.b.as_rat() {
            if One::is_one(&r) {
                "alpha".to_string()
            } else if r == rat_int(-1) {
                "-alpha".to_string()
            } else {
                format!("{}*alpha", rat_string(&r))
            }
        } else {
            format!("({})*alpha", self.b)
        };
        if self.a.is_zero() {
            f.write_str(&bpart)
        } else if bpart.starts_with('-') {
            write!(f, "{}{}", self.a, bpart)
        } else {
            write!(f, "{}+{}", self.a, bpart)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::field::rat;

    fn s() -> FieldElem {
        FieldElem::s()
    }

    fn c(n: i64) -> FieldElem {
        FieldElem::from_int(n)
    }

    #[test]
    fn alpha_squared_is_alpha_square() {
        let a = FieldElem::alpha(Ext::SSquaredMinusS);
        let lhs = a.mul(&a);
        let rhs = s().mul(&s()).sub(&s());
        assert!(lhs.sub(&rhs).is_zero());
        let b = FieldElem::alpha(Ext::Two);
        assert_eq!(b.mul(&b), c(2));
    }

    #[test]
    fn inverse_in_extension() {
        let a = FieldElem::alpha(Ext::SSquaredMinusS);
        let x = s().add(&a);
        let y = x.inv();
        assert_eq!(x.mul(&y), c(1));
        // 1/(s+α) = (s−α)/s
        assert_eq!(y, s().sub(&a).div(&s()));
    }

    #[test]
    fn specialization_rules() {
        let e = s().mul(&s()).sub(&s());
        assert_eq!(e.specialize(&rat_int(1), &AlphaValue::Symbolic).unwrap(), c(0));
        let a = FieldElem::alpha(Ext::SSquaredMinusS);
        let sym = a.specialize(&rat_int(-1), &AlphaValue::Symbolic).unwrap();
        assert_eq!(sym, FieldElem::alpha(Ext::Two));
        assert!(a.specialize(&rat_int(-1), &AlphaValue::Rational(rat_int(1))).is_err());
        assert!(a.specialize(&rat_int(3), &AlphaValue::Symbolic).is_err());
        let pole = c(1).div(&s());
        assert!(matches!(pole.specialize(&rat_int(0), &AlphaValue::Symbolic), Err(Error::Pole(_))));
        // s=1/2: α² = −1/4, no rational α
        assert!(a.specialize(&rat(1, 2), &AlphaValue::Rational(rat(1, 2))).is_err());
    }

    #[test]
    fn display_forms() {
        let a = FieldElem::alpha(Ext::SSquaredMinusS);
        assert_eq!(s().add(&a).to_string(), "s+alpha");
        assert_eq!(s().sub(&a).to_string(), "s-alpha");
        assert_eq!(c(1).div(&s().add(&c(1))).to_string(), "(1)/(s+1)");
        assert_eq!(FieldElem::from_rat(&rat(-3, 2)).to_string(), "-3/2");
    }

    #[test]
    fn ratfun_normalizes() {
        let num = UPoly::from_coeffs(vec![rat_int(-2), rat_int(2)]);
        let den = UPoly::from_coeffs(vec![rat_int(-3), rat_int(3)]);
        let r = RatFun::new(num, den);
        assert_eq!(r.as_rat(), Some(rat(2, 3)));
    }
}
