//! Dense univariate polynomials over a field.

use std::fmt;

use super::field::Field;

/// Coefficients stored low degree first, with no trailing zeros.
#[derive(Clone, PartialEq, Debug)]
pub struct UPoly<F: Field> {
    coeffs: Vec<F>,
}

impl<F: Field> UPoly<F> {
    pub fn zero() -> Self {
        UPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(F::one())
    }

    pub fn constant(c: F) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// The monomial `c·t^k`.
    pub fn monomial(c: F, k: usize) -> Self {
        let mut v = vec![F::zero(); k + 1];
        v[k] = c;
        Self::from_coeffs(v)
    }

    pub fn from_coeffs(mut coeffs: Vec<F>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        UPoly { coeffs }
    }

    pub fn coeffs(&self) -> &[F] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> F {
        self.coeffs.get(k).cloned().unwrap_or_else(F::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn lc(&self) -> F {
        self.coeffs.last().cloned().unwrap_or_else(F::zero)
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let v = (0..n).map(|i| self.coeff(i).add(&rhs.coeff(i))).collect();
        Self::from_coeffs(v)
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let v = (0..n).map(|i| self.coeff(i).sub(&rhs.coeff(i))).collect();
        Self::from_coeffs(v)
    }

    pub fn neg(&self) -> Self {
        UPoly { coeffs: self.coeffs.iter().map(|c| c.neg()).collect() }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Self::zero();
        }
        let mut v = vec![F::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    v[i + j] = v[i + j].add(&a.mul(b));
                }
            }
        }
        Self::from_coeffs(v)
    }

    pub fn scale(&self, c: &F) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|a| a.mul(c)).collect())
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Quotient and remainder; panics on a zero divisor.
    pub fn divrem(&self, d: &Self) -> (Self, Self) {
        let dd = d.degree().expect("division by zero polynomial");
        let inv = d.lc().inv();
        let mut r = self.coeffs.clone();
        if r.len() <= dd {
            return (Self::zero(), self.clone());
        }
        let mut q = vec![F::zero(); r.len() - dd];
        for k in (0..q.len()).rev() {
            let c = r[k + dd].mul(&inv);
            if c.is_zero() {
                continue;
            }
            for (j, dc) in d.coeffs.iter().enumerate() {
                r[k + j] = r[k + j].sub(&c.mul(dc));
            }
            q[k] = c;
        }
        r.truncate(dd);
        (Self::from_coeffs(q), Self::from_coeffs(r))
    }

    pub fn rem(&self, d: &Self) -> Self {
        self.divrem(d).1
    }

    /// Exact quotient, `None` when `d` does not divide.
    pub fn div_exact(&self, d: &Self) -> Option<Self> {
        let (q, r) = self.divrem(d);
        r.is_zero().then_some(q)
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        self.scale(&self.lc().inv())
    }

    /// Monic gcd; zero only when both inputs are zero.
    pub fn gcd(&self, rhs: &Self) -> Self {
        let mut a = self.clone();
        let mut b = rhs.clone();
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r.monic();
        }
        a.monic()
    }

    pub fn derivative(&self) -> Self {
        let v = self.coeffs.iter().enumerate().skip(1).map(|(i, c)| c.mul(&F::from_int(i as i64))).collect();
        Self::from_coeffs(v)
    }

    pub fn eval(&self, x: &F) -> F {
        let mut acc = F::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(x).add(c);
        }
        acc
    }

    /// Yun's algorithm. Returns `(unit, [(factor, exponent)])` with monic factors in
    /// increasing exponent order.
    pub fn squarefree(&self) -> (F, Vec<(Self, u32)>) {
        assert!(!self.is_zero(), "squarefree decomposition of zero");
        let unit = self.lc();
        let f = self.monic();
        let mut out = Vec::new();
        if f.degree() == Some(0) {
            return (unit, out);
        }
        let df = f.derivative();
        let a = f.gcd(&df);
        let mut b = f.div_exact(&a).unwrap();
        let mut c = df.div_exact(&a).unwrap().sub(&b.derivative());
        let mut k = 1;
        loop {
            let d = b.gcd(&c);
            if d.degree().unwrap_or(0) > 0 {
                out.push((d.clone(), k));
            }
            b = b.div_exact(&d).unwrap();
            if b.degree() == Some(0) {
                break;
            }
            c = c.div_exact(&d).unwrap().sub(&b.derivative());
            k += 1;
        }
        (unit, out)
    }

    pub fn map<G: Field>(&self, f: impl Fn(&F) -> G) -> UPoly<G> {
        UPoly::from_coeffs(self.coeffs.iter().map(f).collect())
    }
}

impl<F: Field> UPoly<F> {
    /// Print with the given variable name, highest degree first.
    pub fn fmt_var(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.sign_hint() < 0;
            let c = if neg { c.neg() } else { c.clone() };
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { "-" } else { "+" });
            }
            let mono = match k {
                0 => String::new(),
                1 => var.to_string(),
                _ => format!("{var}^{k}"),
            };
            if mono.is_empty() {
                out.push_str(&c.to_string());
            } else if c.is_one() {
                out.push_str(&mono);
            } else if c.is_compound() {
                out.push_str(&format!("({c})*{mono}"));
            } else {
                out.push_str(&format!("{c}*{mono}"));
            }
        }
        out
    }
}

impl<F: Field> fmt::Display for UPoly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.fmt_var("t"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::field::{rat_int, Rat};

    fn p(v: &[i64]) -> UPoly<Rat> {
        UPoly::from_coeffs(v.iter().map(|&c| rat_int(c)).collect())
    }

    #[test]
    fn gcd_shared_root() {
        assert_eq!(p(&[-1, 0, 1]).gcd(&p(&[-1, 1])), p(&[-1, 1]));
        assert_eq!(p(&[0, 1]).gcd(&p(&[1])), p(&[1]));
    }

    #[test]
    fn yun_decomposition() {
        // (t-1)^2 (t+2)
        let f = p(&[-1, 1]).pow(2).mul(&p(&[2, 1]));
        let (u, fs) = f.squarefree();
        assert_eq!(u, rat_int(1));
        assert_eq!(fs, vec![(p(&[2, 1]), 1), (p(&[-1, 1]), 2)]);
    }

    #[test]
    fn printing() {
        assert_eq!(p(&[1, -2, 0, 3]).fmt_var("s"), "3*s^3-2*s+1");
        assert_eq!(p(&[0, -1]).fmt_var("s"), "-s");
    }

    #[test]
    fn divrem_roundtrip() {
        let a = p(&[3, 0, -2, 5, 1]);
        let b = p(&[1, 2]);
        let (q, r) = a.divrem(&b);
        assert_eq!(q.mul(&b).add(&r), a);
    }
}
