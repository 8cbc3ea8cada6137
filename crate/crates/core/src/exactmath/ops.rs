//! gcd, squarefree decomposition, resultants, substitution and specialization.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::field::{Field, Rat};
use super::fieldelem::{AlphaValue, FieldElem};
use super::frac::Frac;
use super::mpoly::{MPoly, Vars};
use super::upoly::UPoly;
use crate::error::{Error, Result};

fn common_univariate_var<F: Field>(p: &MPoly<F>, q: &MPoly<F>) -> Result<usize> {
    let a = p.univariate_var()?;
    let b = q.univariate_var()?;
    match (a, b) {
        (Some(i), Some(j)) if i != j => Err(Error::NotUnivariate(format!("{p} and {q}"))),
        (Some(i), _) | (_, Some(i)) => Ok(i),
        (None, None) => Ok(0),
    }
}

/// Monic gcd of two univariate polynomials.
pub fn gcd_poly<F: Field>(p: &MPoly<F>, q: &MPoly<F>) -> Result<MPoly<F>> {
    if p.is_zero() && q.is_zero() {
        return Err(Error::UndefinedGcd);
    }
    let i = common_univariate_var(p, q)?;
    let g = p.to_upoly(i)?.gcd(&q.to_upoly(i)?);
    Ok(MPoly::from_upoly(p.vars(), i, &g))
}

#[derive(Clone, Debug, PartialEq)]
pub struct SquarefreeDecomposition<F: Field> {
    pub unit: F,
    /// Monic, pairwise coprime, squarefree; exponents increasing.
    pub factors: Vec<(MPoly<F>, u32)>,
}

impl<F: Field> SquarefreeDecomposition<F> {
    pub fn reconstruct(&self, vars: &Vars) -> MPoly<F> {
        let mut acc = MPoly::constant(vars, self.unit.clone());
        for (f, e) in &self.factors {
            acc = acc.mul(&f.pow(*e));
        }
        acc
    }

    pub fn all_even(&self) -> bool {
        self.factors.iter().all(|(_, e)| e % 2 == 0)
    }
}

pub fn squarefree_decomposition<F: Field>(p: &MPoly<F>) -> Result<SquarefreeDecomposition<F>> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let i = p.univariate_var()?.unwrap_or(0);
    let (unit, fs) = p.to_upoly(i)?.squarefree();
    Ok(SquarefreeDecomposition {
        unit,
        factors: fs.into_iter().map(|(f, e)| (MPoly::from_upoly(p.vars(), i, &f), e)).collect(),
    })
}

/// Determinant over a field by Gaussian elimination.
pub fn det_field<F: Field>(mut m: Vec<Vec<F>>) -> F {
    let n = m.len();
    let mut det = F::one();
    for k in 0..n {
        let Some(piv) = (k..n).find(|&i| !m[i][k].is_zero()) else {
            return F::zero();
        };
        if piv != k {
            m.swap(piv, k);
            det = det.neg();
        }
        let inv = m[k][k].inv();
        det = det.mul(&m[k][k]);
        for i in k + 1..n {
            if m[i][k].is_zero() {
                continue;
            }
            let f = m[i][k].mul(&inv);
            for j in k..n {
                let t = f.mul(&m[k][j]);
                m[i][j] = m[i][j].sub(&t);
            }
        }
    }
    det
}

/// Fraction-free (Bareiss) determinant of a polynomial matrix.
pub fn det_bareiss<F: Field>(mut m: Vec<Vec<MPoly<F>>>, vars: &Vars) -> MPoly<F> {
    let n = m.len();
    if n == 0 {
        return MPoly::one(vars);
    }
    let mut neg = false;
    let mut prev = MPoly::one(vars);
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            let Some(piv) = (k + 1..n).find(|&i| !m[i][k].is_zero()) else {
                return MPoly::zero(vars);
            };
            m.swap(piv, k);
            neg = !neg;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let t = m[i][j].mul(&m[k][k]).sub(&m[i][k].mul(&m[k][j]));
                m[i][j] = t.div_exact(&prev).expect("Bareiss step is exact");
            }
        }
        prev = m[k][k].clone();
    }
    let d = m[n - 1][n - 1].clone();
    if neg {
        d.neg()
    } else {
        d
    }
}

/// Sylvester matrix of two polynomials given as coefficient lists (index = power).
pub fn sylvester<T: Clone>(a: &[T], b: &[T], zero: &T) -> Vec<Vec<T>> {
    let m = a.len() - 1;
    let n = b.len() - 1;
    let size = m + n;
    let mut rows = Vec::with_capacity(size);
    for i in 0..n {
        let mut row = vec![zero.clone(); size];
        for (k, c) in a.iter().rev().enumerate() {
            row[i + k] = c.clone();
        }
        rows.push(row);
    }
    for j in 0..m {
        let mut row = vec![zero.clone(); size];
        for (k, c) in b.iter().rev().enumerate() {
            row[j + k] = c.clone();
        }
        rows.push(row);
    }
    rows
}

/// Res_var(p, q) as the Sylvester determinant.
pub fn resultant<F: Field>(p: &MPoly<F>, q: &MPoly<F>, var: &str) -> Result<MPoly<F>> {
    let i = p.var_index(var)?;
    if p.degree_in(i) == 0 || q.degree_in(i) == 0 {
        return Err(Error::DegreeZero(var.to_string()));
    }
    let a = p.coeffs_in(i);
    let b = q.coeffs_in(i);
    let zero = MPoly::zero(p.vars());
    Ok(det_bareiss(sylvester(&a, &b, &zero), p.vars()))
}

/// Resultant of univariate polynomials over a field.
pub fn resultant_univariate<F: Field>(a: &UPoly<F>, b: &UPoly<F>) -> F {
    if a.is_zero() || b.is_zero() {
        return F::zero();
    }
    if a.degree() == Some(0) {
        return a.lc().pow(b.degree().unwrap() as u32);
    }
    if b.degree() == Some(0) {
        return b.lc().pow(a.degree().unwrap() as u32);
    }
    det_field(sylvester(a.coeffs(), b.coeffs(), &F::zero()))
}

/// Pseudo-remainder of `a` by `b` as polynomials in `x_i`.
pub fn pseudo_rem<F: Field>(a: &MPoly<F>, b: &MPoly<F>, i: usize) -> MPoly<F> {
    let db = b.degree_in(i);
    let bc = b.coeffs_in(i);
    let lb = bc[db as usize].clone();
    let xi = MPoly::var(a.vars(), i);
    let mut r = a.clone();
    while !r.is_zero() && r.degree_in(i) >= db {
        let dr = r.degree_in(i);
        let lr = r.coeffs_in(i)[dr as usize].clone();
        r = r.mul(&lb).sub(&lr.mul(&xi.pow(dr - db)).mul(b));
    }
    r
}

/// Gcd of univariate polynomials in variable `i` sharing a variable list.
fn gcd_in<F: Field>(a: &MPoly<F>, b: &MPoly<F>, i: usize) -> MPoly<F> {
    if a.is_zero() {
        return b.monic();
    }
    if b.is_zero() {
        return a.monic();
    }
    let g = a.to_upoly(i).expect("univariate").gcd(&b.to_upoly(i).expect("univariate"));
    MPoly::from_upoly(a.vars(), i, &g)
}

/// Gcd of two polynomials in exactly two variables, monic in grlex.
pub fn bivariate_gcd<F: Field>(a: &MPoly<F>, b: &MPoly<F>) -> MPoly<F> {
    assert_eq!(a.nvars(), 2, "bivariate_gcd needs two variables");
    let (x, y) = (0, 1);
    if a.is_zero() {
        return b.monic();
    }
    if b.is_zero() {
        return a.monic();
    }
    let content =
        |p: &MPoly<F>| -> MPoly<F> { p.coeffs_in(y).iter().fold(MPoly::zero(p.vars()), |g, c| gcd_in(&g, c, x)) };
    let ca = content(a);
    let cb = content(b);
    let c = gcd_in(&ca, &cb, x);
    let mut p = a.div_exact(&ca).unwrap();
    let mut q = b.div_exact(&cb).unwrap();
    if p.degree_in(y) < q.degree_in(y) {
        std::mem::swap(&mut p, &mut q);
    }
    while q.degree_in(y) > 0 {
        let r = pseudo_rem(&p, &q, y);
        p = q;
        if r.is_zero() {
            q = MPoly::zero(p.vars());
            break;
        }
        let cr = content(&r);
        q = r.div_exact(&cr).unwrap();
    }
    let g = if q.is_zero() { p } else { MPoly::one(a.vars()) };
    g.mul(&c).monic()
}

/// Substitute `var ↦ num/den` and clear denominators.
///
/// Unbound variables map to the variable of the same name in `target`.
pub fn substitute<F: Field>(
    p: &MPoly<F>,
    bindings: &BTreeMap<String, (MPoly<F>, MPoly<F>)>,
    target: &Vars,
) -> Result<(MPoly<F>, MPoly<F>)> {
    let n = p.nvars();
    let mut nums = Vec::with_capacity(n);
    let mut dens = Vec::with_capacity(n);
    for name in p.vars().iter() {
        match bindings.get(name) {
            Some((a, b)) => {
                if b.is_zero() {
                    return Err(Error::ZeroDenominator(name.clone()));
                }
                nums.push(a.with_vars(target)?);
                dens.push(b.with_vars(target)?);
            }
            None => {
                nums.push(MPoly::var_named(target, name)?);
                dens.push(MPoly::one(target));
            }
        }
    }
    let degs: Vec<u32> = (0..n).map(|i| p.degree_in(i)).collect();
    let pow_cache = |v: &Vec<MPoly<F>>| -> Vec<Vec<MPoly<F>>> {
        v.iter()
            .zip(&degs)
            .map(|(x, &d)| {
                let mut c = vec![MPoly::one(target)];
                for _ in 0..d {
                    let nx = c.last().unwrap().mul(x);
                    c.push(nx);
                }
                c
            })
            .collect()
    };
    let npow = pow_cache(&nums);
    let dpow = pow_cache(&dens);
    let mut num = MPoly::zero(target);
    for (m, c) in p.terms() {
        let mut t = MPoly::constant(target, c.clone());
        for i in 0..n {
            let a = m.0[i] as usize;
            t = t.mul(&npow[i][a]).mul(&dpow[i][degs[i] as usize - a]);
        }
        num = num.add(&t);
    }
    let mut den = MPoly::one(target);
    for i in 0..n {
        den = den.mul(&dpow[i][degs[i] as usize]);
    }
    Ok((num, den))
}

/// Substitute into a fraction.
pub fn substitute_frac<F: Field>(
    f: &Frac<F>,
    bindings: &BTreeMap<String, (MPoly<F>, MPoly<F>)>,
    target: &Vars,
) -> Result<Frac<F>> {
    let (a, b) = substitute(f.num(), bindings, target)?;
    let (c, d) = substitute(f.den(), bindings, target)?;
    Ok(Frac::new(a.mul(&d), b.mul(&c)))
}

/// Specialize `s = s0` (and α) coefficientwise.
pub fn specialize(p: &MPoly<FieldElem>, s0: &Rat, alpha: &AlphaValue) -> Result<MPoly<FieldElem>> {
    p.try_map_coeffs(|c| c.specialize(s0, alpha))
}

/// Coefficients as rationals, when they all are.
pub fn to_rat_poly(p: &MPoly<FieldElem>) -> Result<MPoly<Rat>> {
    p.try_map_coeffs(|c| c.as_rat().ok_or_else(|| Error::Other(format!("coefficient {c} is not rational"))))
}

pub fn from_rat_poly(p: &MPoly<Rat>) -> MPoly<FieldElem> {
    p.map_coeffs(FieldElem::from_rat)
}

/// Integer coefficients of a rational polynomial after clearing denominators and content.
pub fn primitive_integer_coeffs(p: &UPoly<Rat>) -> Vec<BigInt> {
    let l = p.coeffs().iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints: Vec<BigInt> = p.coeffs().iter().map(|c| (c * Rat::from_integer(l.clone())).to_integer()).collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    if g.is_zero() {
        return ints;
    }
    ints.into_iter().map(|c| c / &g).collect()
}

const DIVISOR_LIMIT: u64 = 1_000_000_000_000;

fn divisors(n: &BigInt) -> Option<Vec<BigInt>> {
    let mut n = n.abs().to_u64()?;
    if n > DIVISOR_LIMIT {
        return None;
    }
    let mut primes = Vec::new();
    let mut d = 2u64;
    while d * d <= n {
        let mut e = 0;
        while n % d == 0 {
            n /= d;
            e += 1;
        }
        if e > 0 {
            primes.push((d, e));
        }
        d += 1;
    }
    if n > 1 {
        primes.push((n, 1));
    }
    let mut divs = vec![1u64];
    for (p, e) in primes {
        let cur = divs.clone();
        let mut pk = 1;
        for _ in 0..e {
            pk *= p;
            divs.extend(cur.iter().map(|x| x * pk));
        }
    }
    divs.sort();
    Some(divs.into_iter().map(BigInt::from).collect())
}

/// Rational roots by the rational root theorem (coefficients up to 10^12 after clearing).
pub fn rational_roots(p: &UPoly<Rat>) -> Vec<Rat> {
    try_rational_roots(p).expect("coefficients too large for rational root search")
}

pub fn try_rational_roots(p: &UPoly<Rat>) -> Result<Vec<Rat>> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let mut out = Vec::new();
    let mut q = p.clone();
    let zero = <Rat as Zero>::zero();
    if Zero::is_zero(&q.coeff(0)) {
        out.push(zero.clone());
        while Zero::is_zero(&q.coeff(0)) {
            q = UPoly::from_coeffs(q.coeffs()[1..].to_vec());
        }
    }
    if q.degree().unwrap_or(0) == 0 {
        return Ok(out);
    }
    let ints = primitive_integer_coeffs(&q);
    let a0 = ints.first().unwrap();
    let an = ints.last().unwrap();
    let (Some(ps), Some(qs)) = (divisors(a0), divisors(an)) else {
        return Err(Error::Other("rational root search: coefficients too large".into()));
    };
    // cheap filter mod a prime before the exact evaluation
    const P: u64 = 2_305_843_009_213_693_951;
    let bp = BigInt::from(P);
    let red: Vec<u64> = ints.iter().map(|c| ((c % &bp + &bp) % &bp).to_u64().unwrap()).collect();
    let mm = |a: u64, b: u64| ((a as u128 * b as u128) % P as u128) as u64;
    for num in &ps {
        for den in &qs {
            if !num.gcd(den).is_one() {
                continue;
            }
            let (n, d) = (num.to_u64().unwrap() % P, den.to_u64().unwrap() % P);
            let deg = red.len() - 1;
            let mut dpow = vec![1u64; deg + 1];
            for i in 1..=deg {
                dpow[i] = mm(dpow[i - 1], d);
            }
            for sign in [1i64, -1] {
                let ns = if sign == 1 { n } else { (P - n) % P };
                // Σ a_i n^i d^(deg−i)
                let h = (0..=deg).rev().fold(0u64, |acc, i| (mm(acc, ns) + mm(red[i], dpow[deg - i])) % P);
                if h != 0 {
                    continue;
                }
                let r = Rat::new(num * sign, den.clone());
                if Zero::is_zero(&q.eval(&r)) && !out.contains(&r) {
                    out.push(r);
                }
            }
        }
    }
    out.sort();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::field::{rat, rat_int};
    use crate::exactmath::mpoly::vars;

    fn t() -> (Vars, MPoly<Rat>) {
        let v = vars(&["t"]);
        let t = MPoly::var(&v, 0);
        (v, t)
    }

    fn c(v: &Vars, n: i64) -> MPoly<Rat> {
        MPoly::constant(v, rat_int(n))
    }

    #[test]
    fn gcd_examples() {
        let (v, t) = t();
        let g = gcd_poly(&(t.pow(2) - c(&v, 1)), &(&t - c(&v, 1))).unwrap();
        assert_eq!(g, &t - c(&v, 1));
        assert_eq!(gcd_poly(&t, &c(&v, 1)).unwrap(), c(&v, 1));
        assert_eq!(gcd_poly(&MPoly::<Rat>::zero(&v), &MPoly::zero(&v)), Err(Error::UndefinedGcd));
    }

    #[test]
    fn squarefree_example() {
        let (v, t) = t();
        let p = (&t - c(&v, 1)).pow(2) * (&t + c(&v, 2));
        let d = squarefree_decomposition(&p).unwrap();
        assert_eq!(d.factors, vec![(&t + c(&v, 2), 1), (&t - c(&v, 1), 2)]);
        assert_eq!(d.reconstruct(&v), p);
        assert!(squarefree_decomposition(&MPoly::<Rat>::zero(&v)).is_err());
    }

    #[test]
    fn resultant_examples() {
        let v = vars(&["t", "a", "b"]);
        let t = MPoly::<Rat>::var(&v, 0);
        let a = MPoly::var(&v, 1);
        let b = MPoly::var(&v, 2);
        assert_eq!(resultant(&(&t - &a), &(&t - &b), "t").unwrap(), &a - &b);
        assert!(resultant(&t.pow(2), &t.pow(2), "t").unwrap().is_zero());
        assert_eq!(resultant(&a, &t, "t"), Err(Error::DegreeZero("t".into())));
    }

    #[test]
    fn substitution_clears() {
        let v = vars(&["x"]);
        let x = MPoly::<Rat>::var(&v, 0);
        let one = c(&v, 1);
        let mut b = BTreeMap::new();
        b.insert("x".to_string(), (&one + &x, &one - &x));
        let (n, d) = substitute(&x.pow(2), &b, &v).unwrap();
        assert_eq!(n, (&one + &x).pow(2));
        assert_eq!(d, (&one - &x).pow(2));
        b.insert("x".to_string(), (x.clone(), MPoly::zero(&v)));
        assert!(substitute(&x, &b, &v).is_err());
    }

    #[test]
    fn rational_root_search() {
        let p = UPoly::from_coeffs(vec![rat_int(-6), rat_int(1), rat_int(2)]); // (2t-3)(t+2)
        assert_eq!(rational_roots(&p), vec![rat_int(-2), rat(3, 2)]);
        let q = UPoly::from_coeffs(vec![rat_int(-2), rat_int(0), rat_int(1)]);
        assert!(rational_roots(&q).is_empty());
    }

    #[test]
    fn bivariate_gcd_finds_common_factor() {
        let v = vars(&["x", "y"]);
        let x = MPoly::<Rat>::var(&v, 0);
        let y = MPoly::<Rat>::var(&v, 1);
        let common = &x * &y + c(&v, 1);
        let a = &common * &(&x - &y);
        let b = &common * &(x.pow(2) + &y);
        assert_eq!(bivariate_gcd(&a, &b), common.monic());
        assert_eq!(bivariate_gcd(&x, &y), c(&v, 1));
        // content-only common factor
        assert_eq!(bivariate_gcd(&(&x * &y), &(&x * &x)), x);
    }

    #[test]
    fn bareiss_matches_field_det() {
        let v = vars(&["x"]);
        let m: Vec<Vec<MPoly<Rat>>> = vec![
            vec![c(&v, 2), c(&v, 3), c(&v, 1)],
            vec![c(&v, 0), c(&v, 5), c(&v, 4)],
            vec![c(&v, 7), c(&v, 1), c(&v, 6)],
        ];
        let f: Vec<Vec<Rat>> = m.iter().map(|r| r.iter().map(|p| p.constant_term()).collect()).collect();
        assert_eq!(det_bareiss(m, &v).constant_term(), det_field(f));
    }
}
