//! Sparse multivariate polynomials in graded-lex order.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use super::field::Field;
use super::upoly::UPoly;
use crate::error::{Error, Result};

pub type Vars = Arc<[String]>;

pub fn vars(names: &[&str]) -> Vars {
    names.iter().map(|s| s.to_string()).collect::<Vec<_>>().into()
}

/// Exponent vector, ordered by total degree then lexicographically.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Mono(pub Vec<u32>);

impl Mono {
    pub fn one(n: usize) -> Self {
        Mono(vec![0; n])
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    fn mul(&self, o: &Mono) -> Mono {
        Mono(self.0.iter().zip(&o.0).map(|(a, b)| a + b).collect())
    }

    fn div(&self, o: &Mono) -> Option<Mono> {
        self.0.iter().zip(&o.0).map(|(a, b)| a.checked_sub(*b)).collect::<Option<Vec<_>>>().map(Mono)
    }
}

impl Ord for Mono {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Mono {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[derive(Clone, Debug)]
pub struct MPoly<F: Field> {
    vars: Vars,
    terms: BTreeMap<Mono, F>,
}

impl<F: Field> PartialEq for MPoly<F> {
    fn eq(&self, other: &Self) -> bool {
        self.vars == other.vars && self.terms == other.terms
    }
}

impl<F: Field> MPoly<F> {
    pub fn zero(vars: &Vars) -> Self {
        MPoly { vars: vars.clone(), terms: BTreeMap::new() }
    }

    pub fn constant(vars: &Vars, c: F) -> Self {
        let mut p = Self::zero(vars);
        p.add_term(Mono::one(vars.len()), c);
        p
    }

    pub fn one(vars: &Vars) -> Self {
        Self::constant(vars, F::one())
    }

    pub fn var(vars: &Vars, i: usize) -> Self {
        let mut e = vec![0; vars.len()];
        e[i] = 1;
        let mut p = Self::zero(vars);
        p.add_term(Mono(e), F::one());
        p
    }

    pub fn var_named(vars: &Vars, name: &str) -> Result<Self> {
        let i = vars.iter().position(|v| v == name).ok_or_else(|| Error::UnknownVariable(name.to_string()))?;
        Ok(Self::var(vars, i))
    }

    pub fn monomial(vars: &Vars, exps: Vec<u32>, c: F) -> Self {
        assert_eq!(exps.len(), vars.len());
        let mut p = Self::zero(vars);
        p.add_term(Mono(exps), c);
        p
    }

    pub fn from_terms(vars: &Vars, terms: impl IntoIterator<Item = (Vec<u32>, F)>) -> Self {
        let mut p = Self::zero(vars);
        for (e, c) in terms {
            assert_eq!(e.len(), vars.len());
            p.add_term(Mono(e), c);
        }
        p
    }

    /// Add `c·m` in place.
    pub fn add_term(&mut self, m: Mono, c: F) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = o.get().add(&c);
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn vars(&self) -> &Vars {
        &self.vars
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn var_index(&self, name: &str) -> Result<usize> {
        self.vars.iter().position(|v| v == name).ok_or_else(|| Error::UnknownVariable(name.to_string()))
    }

    /// Terms, leading term first.
    pub fn terms(&self) -> impl Iterator<Item = (&Mono, &F)> {
        self.terms.iter().rev()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|m| m.degree() == 0)
    }

    pub fn constant_term(&self) -> F {
        self.terms.get(&Mono::one(self.nvars())).cloned().unwrap_or_else(F::zero)
    }

    pub fn coeff(&self, exps: &[u32]) -> F {
        self.terms.get(&Mono(exps.to_vec())).cloned().unwrap_or_else(F::zero)
    }

    /// Total degree; `None` for zero.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().next_back().map(|m| m.degree())
    }

    /// Lowest total degree of a term; `None` for zero.
    pub fn order(&self) -> Option<u32> {
        self.terms.keys().next().map(|m| m.degree())
    }

    pub fn degree_in(&self, i: usize) -> u32 {
        self.terms.keys().map(|m| m.0[i]).max().unwrap_or(0)
    }

    pub fn lead(&self) -> Option<(&Mono, &F)> {
        self.terms.iter().next_back()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut it = self.terms.keys().map(|m| m.degree());
        match it.next() {
            None => true,
            Some(d) => it.all(|e| e == d),
        }
    }

    /// Variables that occur with positive exponent.
    pub fn support_vars(&self) -> Vec<usize> {
        (0..self.nvars()).filter(|&i| self.degree_in(i) > 0).collect()
    }

    fn check_vars(&self, o: &Self) {
        assert!(
            Arc::ptr_eq(&self.vars, &o.vars) || self.vars == o.vars,
            "variable lists differ: {:?} vs {:?}",
            self.vars,
            o.vars
        );
    }

    pub fn add(&self, o: &Self) -> Self {
        self.check_vars(o);
        let mut r = self.clone();
        for (m, c) in &o.terms {
            r.add_term(m.clone(), c.clone());
        }
        r
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.check_vars(o);
        let mut r = self.clone();
        for (m, c) in &o.terms {
            r.add_term(m.clone(), c.neg());
        }
        r
    }

    pub fn neg(&self) -> Self {
        MPoly { vars: self.vars.clone(), terms: self.terms.iter().map(|(m, c)| (m.clone(), c.neg())).collect() }
    }

    pub fn mul(&self, o: &Self) -> Self {
        self.mul_trunc(o, u32::MAX)
    }

    /// Product keeping only terms of total degree at most `max_deg`.
    pub fn mul_trunc(&self, o: &Self, max_deg: u32) -> Self {
        self.check_vars(o);
        let mut r = Self::zero(&self.vars);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &o.terms {
                if m1.degree() + m2.degree() > max_deg {
                    break;
                }
                r.add_term(m1.mul(m2), c1.mul(c2));
            }
        }
        r
    }

    pub fn truncate(&self, max_deg: u32) -> Self {
        MPoly {
            vars: self.vars.clone(),
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree() <= max_deg)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn scale(&self, c: &F) -> Self {
        if c.is_zero() {
            return Self::zero(&self.vars);
        }
        MPoly { vars: self.vars.clone(), terms: self.terms.iter().map(|(m, a)| (m.clone(), a.mul(c))).collect() }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one(&self.vars);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = MPoly::mul(&acc, &base);
            }
            e >>= 1;
            if e > 0 {
                base = MPoly::mul(&base, &base);
            }
        }
        acc
    }

    /// Divide by the leading coefficient.
    pub fn monic(&self) -> Self {
        match self.lead() {
            None => self.clone(),
            Some((_, c)) => self.scale(&c.inv()),
        }
    }

    /// Exact quotient, `None` when `d` does not divide `self`.
    pub fn div_exact(&self, d: &Self) -> Option<Self> {
        self.check_vars(d);
        let (dm, dc) = d.lead().expect("division by zero polynomial");
        let dinv = dc.inv();
        let mut r = self.clone();
        let mut q = Self::zero(&self.vars);
        while let Some((rm, rc)) = r.lead() {
            let m = rm.div(dm)?;
            let c = rc.mul(&dinv);
            let t = Self::monomial(&self.vars, m.0.clone(), c.clone());
            r = r.sub(&t.mul(d));
            q.add_term(m, c);
        }
        Some(q)
    }

    pub fn derivative(&self, i: usize) -> Self {
        let mut r = Self::zero(&self.vars);
        for (m, c) in &self.terms {
            let e = m.0[i];
            if e == 0 {
                continue;
            }
            let mut m2 = m.clone();
            m2.0[i] -= 1;
            r.add_term(m2, c.mul(&F::from_int(e as i64)));
        }
        r
    }

    pub fn gradient(&self) -> Vec<Self> {
        (0..self.nvars()).map(|i| self.derivative(i)).collect()
    }

    pub fn eval(&self, point: &[F]) -> F {
        assert_eq!(point.len(), self.nvars());
        let mut acc = F::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (x, &e) in point.iter().zip(&m.0) {
                if e > 0 {
                    t = t.mul(&x.pow(e));
                }
            }
            acc = acc.add(&t);
        }
        acc
    }

    /// Set variable `i` to a constant; arity is kept.
    pub fn eval_var(&self, i: usize, v: &F) -> Self {
        let mut r = Self::zero(&self.vars);
        for (m, c) in &self.terms {
            let mut m2 = m.clone();
            let e = std::mem::replace(&mut m2.0[i], 0);
            r.add_term(m2, c.mul(&v.pow(e)));
        }
        r
    }

    /// Substitute `x_i ↦ images[i]`; the result lives in the images' variables.
    pub fn compose(&self, images: &[MPoly<F>]) -> MPoly<F> {
        assert_eq!(images.len(), self.nvars());
        let target = images[0].vars.clone();
        let mut cache: Vec<Vec<MPoly<F>>> = images.iter().map(|p| vec![MPoly::one(&target), p.clone()]).collect();
        let mut r = MPoly::zero(&target);
        for (m, c) in &self.terms {
            let mut t = MPoly::constant(&target, c.clone());
            for (i, &e) in m.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                while cache[i].len() <= e as usize {
                    let next = cache[i].last().unwrap().mul(&images[i]);
                    cache[i].push(next);
                }
                t = t.mul(&cache[i][e as usize]);
            }
            r = r.add(&t);
        }
        r
    }

    /// `compose`, dropping terms of total degree above `max_deg` at every step.
    pub fn compose_trunc(&self, images: &[MPoly<F>], max_deg: u32) -> MPoly<F> {
        assert_eq!(images.len(), self.nvars());
        let target = images[0].vars.clone();
        let mut cache: Vec<Vec<MPoly<F>>> =
            images.iter().map(|p| vec![MPoly::one(&target), p.truncate(max_deg)]).collect();
        let mut r = MPoly::zero(&target);
        for (m, c) in &self.terms {
            let mut t = MPoly::constant(&target, c.clone());
            for (i, &e) in m.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                while cache[i].len() <= e as usize {
                    let next = cache[i].last().unwrap().mul_trunc(&images[i], max_deg);
                    cache[i].push(next);
                }
                t = t.mul_trunc(&cache[i][e as usize], max_deg);
            }
            r = r.add(&t);
        }
        r
    }

    /// `x_i ↦ x_i + shift[i]`.
    pub fn translate(&self, shift: &[F]) -> Self {
        let images: Vec<_> = (0..self.nvars())
            .map(|i| Self::var(&self.vars, i).add(&Self::constant(&self.vars, shift[i].clone())))
            .collect();
        self.compose(&images)
    }

    /// Apply `x ↦ M·x` (images `x_i ↦ Σ_j M[i][j] x_j`).
    pub fn linear_change(&self, m: &[Vec<F>]) -> Self {
        let images: Vec<_> = m
            .iter()
            .map(|row| {
                let mut p = Self::zero(&self.vars);
                for (j, c) in row.iter().enumerate() {
                    p.add_term(unit_mono(self.nvars(), j), c.clone());
                }
                p
            })
            .collect();
        self.compose(&images)
    }

    /// Coefficients of powers of `x_i`, index = power.
    pub fn coeffs_in(&self, i: usize) -> Vec<Self> {
        let d = self.degree_in(i) as usize;
        let mut out = vec![Self::zero(&self.vars); d + 1];
        for (m, c) in &self.terms {
            let mut m2 = m.clone();
            let e = std::mem::replace(&mut m2.0[i], 0);
            out[e as usize].add_term(m2, c.clone());
        }
        if self.is_zero() {
            out.clear();
        }
        out
    }

    pub fn from_coeffs_in(vars: &Vars, i: usize, coeffs: &[Self]) -> Self {
        let mut r = Self::zero(vars);
        for (k, c) in coeffs.iter().enumerate() {
            for (m, a) in &c.terms {
                let mut m2 = m.clone();
                m2.0[i] += k as u32;
                r.add_term(m2, a.clone());
            }
        }
        r
    }

    pub fn homogeneous_part(&self, d: u32) -> Self {
        MPoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().filter(|(m, _)| m.degree() == d).map(|(m, c)| (m.clone(), c.clone())).collect(),
        }
    }

    /// Append a homogenizing variable at the end.
    pub fn homogenize(&self, name: &str) -> Self {
        let mut names: Vec<String> = self.vars.to_vec();
        names.push(name.to_string());
        let nv: Vars = names.into();
        let d = self.total_degree().unwrap_or(0);
        let mut r = MPoly::zero(&nv);
        for (m, c) in &self.terms {
            let mut e = m.0.clone();
            e.push(d - m.degree());
            r.add_term(Mono(e), c.clone());
        }
        r
    }

    /// Set variable `i` to 1 and drop it.
    pub fn dehomogenize(&self, i: usize) -> Self {
        self.eval_var(i, &F::one()).drop_var(i)
    }

    /// Remove variable `i`, which must not occur.
    pub fn drop_var(&self, i: usize) -> Self {
        assert_eq!(self.degree_in(i), 0, "dropping a variable that occurs");
        let mut names: Vec<String> = self.vars.to_vec();
        names.remove(i);
        let nv: Vars = names.into();
        let mut r = MPoly::zero(&nv);
        for (m, c) in &self.terms {
            let mut e = m.0.clone();
            e.remove(i);
            r.add_term(Mono(e), c.clone());
        }
        r
    }

    /// Re-express over another variable list, matching by name.
    pub fn with_vars(&self, nv: &Vars) -> Result<Self> {
        let map: Vec<Option<usize>> = self.vars.iter().map(|v| nv.iter().position(|w| w == v)).collect();
        let mut r = MPoly::zero(nv);
        for (m, c) in &self.terms {
            let mut e = vec![0; nv.len()];
            for (i, &k) in m.0.iter().enumerate() {
                if k == 0 {
                    continue;
                }
                let j = map[i].ok_or_else(|| Error::UnknownVariable(self.vars[i].clone()))?;
                e[j] += k;
            }
            r.add_term(Mono(e), c.clone());
        }
        Ok(r)
    }

    pub fn map_coeffs<G: Field>(&self, f: impl Fn(&F) -> G) -> MPoly<G> {
        let mut r = MPoly::zero(&self.vars);
        for (m, c) in &self.terms {
            r.add_term(m.clone(), f(c));
        }
        r
    }

    pub fn try_map_coeffs<G: Field>(&self, f: impl Fn(&F) -> Result<G>) -> Result<MPoly<G>> {
        let mut r = MPoly::zero(&self.vars);
        for (m, c) in &self.terms {
            r.add_term(m.clone(), f(c)?);
        }
        Ok(r)
    }

    /// The only variable that occurs, if at most one does.
    pub fn univariate_var(&self) -> Result<Option<usize>> {
        let s = self.support_vars();
        match s.len() {
            0 => Ok(None),
            1 => Ok(Some(s[0])),
            _ => Err(Error::NotUnivariate(self.to_string())),
        }
    }

    pub fn to_upoly(&self, i: usize) -> Result<UPoly<F>> {
        if self.support_vars().iter().any(|&j| j != i) {
            return Err(Error::NotUnivariate(self.to_string()));
        }
        let mut v = vec![F::zero(); self.degree_in(i) as usize + 1];
        for (m, c) in &self.terms {
            v[m.0[i] as usize] = c.clone();
        }
        Ok(UPoly::from_coeffs(v))
    }

    pub fn from_upoly(vars: &Vars, i: usize, p: &UPoly<F>) -> Self {
        let mut r = Self::zero(vars);
        for (k, c) in p.coeffs().iter().enumerate() {
            r.add_term(unit_mono_pow(vars.len(), i, k as u32), c.clone());
        }
        r
    }

    /// Binary form `Σ c_k x^k y^(d-k)` from its dehomogenization `Σ c_k t^k`.
    pub fn from_binary(vars: &Vars, p: &UPoly<F>, d: u32) -> Self {
        assert_eq!(vars.len(), 2);
        let mut r = Self::zero(vars);
        for (k, c) in p.coeffs().iter().enumerate() {
            r.add_term(Mono(vec![k as u32, d - k as u32]), c.clone());
        }
        r
    }
}

fn unit_mono(n: usize, i: usize) -> Mono {
    unit_mono_pow(n, i, 1)
}

fn unit_mono_pow(n: usize, i: usize, k: u32) -> Mono {
    let mut e = vec![0; n];
    e[i] = k;
    Mono(e)
}

impl<F: Field> fmt::Display for MPoly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut out = String::new();
        for (m, c) in self.terms() {
            let neg = c.sign_hint() < 0;
            let c = if neg { c.neg() } else { c.clone() };
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { "-" } else { "+" });
            }
            let mono: Vec<String> =
                m.0.iter()
                    .enumerate()
                    .filter(|(_, &e)| e > 0)
                    .map(|(i, &e)| if e == 1 { self.vars[i].clone() } else { format!("{}^{}", self.vars[i], e) })
                    .collect();
            let mono = mono.join("*");
            let cs = if c.is_compound() { format!("({c})") } else { c.to_string() };
            if mono.is_empty() {
                out.push_str(&cs);
            } else if c.is_one() {
                out.push_str(&mono);
            } else {
                out.push_str(&cs);
                out.push('*');
                out.push_str(&mono);
            }
        }
        f.write_str(&out)
    }
}

macro_rules! binop {
    ($tr:ident, $m:ident) => {
        impl<F: Field> $tr<&MPoly<F>> for &MPoly<F> {
            type Output = MPoly<F>;
            fn $m(self, o: &MPoly<F>) -> MPoly<F> {
                MPoly::$m(self, o)
            }
        }
        impl<F: Field> $tr<MPoly<F>> for MPoly<F> {
            type Output = MPoly<F>;
            fn $m(self, o: MPoly<F>) -> MPoly<F> {
                MPoly::$m(&self, &o)
            }
        }
        impl<F: Field> $tr<&MPoly<F>> for MPoly<F> {
            type Output = MPoly<F>;
            fn $m(self, o: &MPoly<F>) -> MPoly<F> {
                MPoly::$m(&self, o)
            }
        }
        impl<F: Field> $tr<MPoly<F>> for &MPoly<F> {
            type Output = MPoly<F>;
            fn $m(self, o: MPoly<F>) -> MPoly<F> {
                MPoly::$m(self, &o)
            }
        }
    };
}

binop!(Add, add);
binop!(Sub, sub);
binop!(Mul, mul);

impl<F: Field> Neg for &MPoly<F> {
    type Output = MPoly<F>;
    fn neg(self) -> MPoly<F> {
        MPoly::neg(self)
    }
}

impl<F: Field> Neg for MPoly<F> {
    type Output = MPoly<F>;
    fn neg(self) -> MPoly<F> {
        MPoly::neg(&self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::field::{rat_int, Rat};

    fn xy() -> (Vars, MPoly<Rat>, MPoly<Rat>) {
        let v = vars(&["x", "y"]);
        let x = MPoly::var(&v, 0);
        let y = MPoly::var(&v, 1);
        (v, x, y)
    }

    #[test]
    fn grlex_order_and_print() {
        let (v, x, y) = xy();
        let p = &(&x * &y) + &x.pow(2) - MPoly::constant(&v, rat_int(3)) + y.pow(3);
        assert_eq!(p.to_string(), "y^3+x^2+x*y-3");
    }

    #[test]
    fn exact_division() {
        let (v, x, y) = xy();
        let a = &x + &y;
        let b = &x - &y + MPoly::constant(&v, rat_int(2));
        let p = &a * &b;
        assert_eq!(p.div_exact(&a), Some(b.clone()));
        assert_eq!(p.add(&x).div_exact(&a), None);
    }

    #[test]
    fn homogenize_roundtrip() {
        let (v, x, y) = xy();
        let p = x.pow(3) + &x * &y + MPoly::constant(&v, rat_int(1));
        let h = p.homogenize("t");
        assert!(h.is_homogeneous());
        assert_eq!(h.dehomogenize(2), p);
    }

    #[test]
    fn compose_and_translate() {
        let (v, x, y) = xy();
        let p = &x * &y;
        let q = p.translate(&[rat_int(1), rat_int(-2)]);
        // (x+1)(y-2)
        let expect = (&x + MPoly::constant(&v, rat_int(1))) * (&y - MPoly::constant(&v, rat_int(2)));
        assert_eq!(q, expect);
        assert_eq!(q.eval(&[rat_int(0), rat_int(0)]), rat_int(-2));
    }

    #[test]
    fn coefficients_in_a_variable() {
        let (v, x, y) = xy();
        let p = x.pow(2) * &y + &y + x.clone();
        let cs = p.coeffs_in(0);
        assert_eq!(cs.len(), 3);
        assert_eq!(cs[2], y);
        assert_eq!(MPoly::from_coeffs_in(&v, 0, &cs), p);
    }
}
