//! Elimination-based certificates for zero-dimensional projective systems.
//!
//! `certify_projective` proves that the common zeros of a list of homogeneous
//! polynomials are exactly a given list of candidate points. Each level projects
//! from a center `c ∉ V` to a hyperplane: random-ish combinations `A_0, …, A_E` of
//! the equations are moved into coordinates where `c = (0:…:0:1)`, and the
//! resultants `Res(A_0, A_k)` in the last coordinate cut out a superset of the
//! projection. The recursion bottoms out at binary forms, where candidate
//! linear factors are stripped and the residuals must be coprime. Every
//! candidate fiber is then checked against *all* equations on the line through
//! the center.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use super::field::{rat_int, Field, Rat};
use super::fieldelem::FieldElem;
use super::mpoly::{vars, MPoly, Vars};
use super::ops::{
    det_bareiss, primitive_integer_coeffs, rational_roots, resultant_univariate, sylvester, try_rational_roots,
};
use super::upoly::UPoly;
use crate::error::{Error, Result};

/// Extra hooks the elimination engine uses per coefficient field.
pub trait ElimField: Field {
    /// Rescale to keep coefficient growth in check.
    fn normalize(p: &MPoly<Self>) -> MPoly<Self> {
        p.clone()
    }
    /// `Some(true)` when a cheap test proves `a` and `b` coprime.
    /// Upper bound on the degree of the gcd of `ps`, when cheaply available.
    fn gcd_degree_bound(_ps: &[UPoly<Self>]) -> Option<usize> {
        None
    }
    /// Parameter values where this nonzero constant could vanish or blow up.
    fn bad_values(_x: &Self) -> Vec<Rat> {
        Vec::new()
    }
    /// Whether [`ElimField::bad_values`] can report anything.
    const PARAMETRIC: bool = false;
    fn resultant_u(a: &UPoly<Self>, b: &UPoly<Self>) -> Self {
        resultant_univariate(a, b)
    }
}

impl ElimField for Rat {
    fn normalize(p: &MPoly<Rat>) -> MPoly<Rat> {
        primitive_mpoly(p)
    }

    fn resultant_u(a: &UPoly<Rat>, b: &UPoly<Rat>) -> Rat {
        let integral = |p: &UPoly<Rat>| p.coeffs().iter().all(|c| c.is_integer());
        if a.degree().unwrap_or(0) == 0 || b.degree().unwrap_or(0) == 0 || !integral(a) || !integral(b) {
            return resultant_univariate(a, b);
        }
        let ia: Vec<BigInt> = a.coeffs().iter().map(|c| c.to_integer()).collect();
        let ib: Vec<BigInt> = b.coeffs().iter().map(|c| c.to_integer()).collect();
        Rat::from_integer(det_integer(sylvester(&ia, &ib, &BigInt::from(0))))
    }

    fn gcd_degree_bound(ps: &[UPoly<Rat>]) -> Option<usize> {
        // A common factor over Q survives reduction mod p with its degree
        // as long as no leading coefficient vanishes mod p.
        const PRIMES: [u64; 3] = [2_305_843_009_213_693_951, 1_000_000_007, 998_244_353];
        let mut best: Option<usize> = None;
        'primes: for p in PRIMES {
            let mut g: Option<Vec<u64>> = None;
            for a in ps {
                let Some(x) = reduce_mod(a, p) else { continue 'primes };
                if x.last().is_none_or(|&c| c == 0) {
                    continue 'primes;
                }
                g = Some(match g {
                    None => x,
                    Some(g) => gcd_mod(g, x, p),
                });
            }
            let d = g.map_or(0, |g| g.len().saturating_sub(1));
            best = Some(best.map_or(d, |b: usize| b.min(d)));
            if d == 0 {
                break;
            }
        }
        best
    }
}

impl ElimField for FieldElem {
    const PARAMETRIC: bool = true;

    fn resultant_u(a: &UPoly<FieldElem>, b: &UPoly<FieldElem>) -> FieldElem {
        let plain = |p: &UPoly<FieldElem>| p.coeffs().iter().all(|c| c.b().is_zero());
        let (Some(da), Some(db)) = (a.degree(), b.degree()) else { return resultant_univariate(a, b) };
        if da == 0 || db == 0 || !plain(a) || !plain(b) {
            return resultant_univariate(a, b);
        }
        // clear denominators, then evaluate at s = 0, 1, … and interpolate
        let clear = |p: &UPoly<FieldElem>| -> (Vec<UPoly<Rat>>, UPoly<Rat>) {
            let l = p.coeffs().iter().fold(UPoly::one(), |l: UPoly<Rat>, c| {
                let d = c.a().den();
                l.mul(d).div_exact(&l.gcd(d)).unwrap()
            });
            let nums = p.coeffs().iter().map(|c| c.a().num().mul(&l.div_exact(c.a().den()).unwrap())).collect();
            (nums, l)
        };
        let (ca, la) = clear(a);
        let (cb, lb) = clear(b);
        let sdeg = |v: &[UPoly<Rat>]| v.iter().filter_map(|c| c.degree()).max().unwrap_or(0);
        let bound = db * sdeg(&ca) + da * sdeg(&cb);
        let zero = <Rat as Zero>::zero();
        let ys: Vec<Rat> = (0..=bound)
            .map(|t| {
                let s0 = rat_int(t as i64);
                let ea: Vec<Rat> = ca.iter().map(|c| c.eval(&s0)).collect();
                let eb: Vec<Rat> = cb.iter().map(|c| c.eval(&s0)).collect();
                super::ops::det_field(sylvester(&ea, &eb, &zero))
            })
            .collect();
        let r = interpolate(&ys);
        let den = la.pow(db as u32).mul(&lb.pow(da as u32));
        FieldElem::from_ratfun(super::fieldelem::RatFun::new(r, den))
    }

    fn gcd_degree_bound(ps: &[UPoly<FieldElem>]) -> Option<usize> {
        // Specialize s = s0 and reduce mod p. A common factor over Q(s) keeps
        // its degree when every coefficient stays finite and no leading
        // coefficient vanishes.
        if ps.iter().any(|a| a.coeffs().iter().any(|c| !c.b().is_zero())) {
            return None;
        }
        const POINTS: [(u64, u64); 3] =
            [(2_305_843_009_213_693_951, 1_234_567_891), (1_000_000_007, 271_828_183), (998_244_353, 314_159_265)];
        let eval = |u: &UPoly<Rat>, p: u64, s0: u64| -> Option<u64> {
            let c = reduce_mod(u, p)?;
            Some(c.iter().rev().fold(0, |acc, &x| (mulmod(acc, s0, p) + x) % p))
        };
        let mut best: Option<usize> = None;
        'points: for (p, s0) in POINTS {
            let mut g: Option<Vec<u64>> = None;
            for a in ps {
                let mut x = Vec::with_capacity(a.coeffs().len());
                for c in a.coeffs() {
                    let (Some(n), Some(d)) = (eval(c.a().num(), p, s0), eval(c.a().den(), p, s0)) else {
                        continue 'points;
                    };
                    if d == 0 {
                        continue 'points;
                    }
                    x.push(mulmod(n, powmod(d, p - 2, p), p));
                }
                if x.last().is_none_or(|&c| c == 0) {
                    continue 'points;
                }
                g = Some(match g {
                    None => x,
                    Some(g) => gcd_mod(g, x, p),
                });
            }
            let d = g.map_or(0, |g| g.len().saturating_sub(1));
            best = Some(best.map_or(d, |b: usize| b.min(d)));
            if d == 0 {
                break;
            }
        }
        best
    }
    fn bad_values(x: &FieldElem) -> Vec<Rat> {
        let n = x.norm();
        let mut v = n.rational_zeros_and_poles();
        v.sort();
        v.dedup();
        v
    }
}

/// Bareiss determinant of an integer matrix.
pub fn det_integer(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::from(1);
    }
    let mut neg = false;
    let mut prev = BigInt::from(1);
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            let Some(piv) = (k + 1..n).find(|&i| !m[i][k].is_zero()) else {
                return BigInt::from(0);
            };
            m.swap(piv, k);
            neg = !neg;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let t = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                m[i][j] = t / &prev;
            }
        }
        prev = m[k][k].clone();
    }
    let d = m[n - 1][n - 1].clone();
    if neg {
        -d
    } else {
        d
    }
}

/// Divide a rational polynomial by its content, making it integral and primitive.
pub fn primitive_mpoly(p: &MPoly<Rat>) -> MPoly<Rat> {
    if p.is_zero() {
        return p.clone();
    }
    let coeffs: Vec<Rat> = p.terms().map(|(_, c)| c.clone()).collect();
    let ints = primitive_integer_coeffs(&UPoly::from_coeffs(coeffs.clone()));
    // ints is aligned with coeffs unless trailing zeros were trimmed, which cannot
    // happen since every term is nonzero.
    let scale = Rat::from_integer(ints[0].clone()) / &coeffs[0];
    p.scale(&scale)
}

fn mulmod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn powmod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1;
    while e > 0 {
        if e & 1 == 1 {
            r = mulmod(r, a, p);
        }
        a = mulmod(a, a, p);
        e >>= 1;
    }
    r
}

fn reduce_mod(a: &UPoly<Rat>, p: u64) -> Option<Vec<u64>> {
    let bp = num_bigint::BigInt::from(p);
    a.coeffs()
        .iter()
        .map(|c| {
            let n = (c.numer() % &bp + &bp) % &bp;
            let d = (c.denom() % &bp).to_u64()?;
            if d == 0 {
                return None;
            }
            Some(mulmod(n.to_u64()?, powmod(d, p - 2, p), p))
        })
        .collect()
}

/// gcd over F_p, not normalized.
fn gcd_mod(mut a: Vec<u64>, mut b: Vec<u64>, p: u64) -> Vec<u64> {
    let trim = |v: &mut Vec<u64>| {
        while v.last() == Some(&0) {
            v.pop();
        }
    };
    trim(&mut a);
    trim(&mut b);
    while !b.is_empty() {
        // a mod b
        let inv = powmod(*b.last().unwrap(), p - 2, p);
        while a.len() >= b.len() {
            let c = mulmod(*a.last().unwrap(), inv, p);
            let shift = a.len() - b.len();
            for (j, &bj) in b.iter().enumerate() {
                let t = mulmod(c, bj, p);
                a[shift + j] = (a[shift + j] + p - t) % p;
            }
            trim(&mut a);
            if a.is_empty() {
                break;
            }
        }
        std::mem::swap(&mut a, &mut b);
    }
    a
}

/// A binary form `y^deg · p(x/y)`.
#[derive(Clone, Debug)]
struct BinForm<F: Field> {
    deg: u32,
    p: UPoly<F>,
}

impl<F: Field> BinForm<F> {
    fn from_mpoly(f: &MPoly<F>) -> Self {
        let deg = f.total_degree().unwrap_or(0);
        let mut v = vec![F::zero(); deg as usize + 1];
        for (m, c) in f.terms() {
            v[m.0[0] as usize] = c.clone();
        }
        BinForm { deg, p: UPoly::from_coeffs(v) }
    }

    fn vanishes_at_infinity(&self) -> bool {
        self.p.degree().is_none_or(|d| (d as u32) < self.deg)
    }
}

/// Outcome of a certification attempt.
#[derive(Clone, Debug, PartialEq)]
pub enum Outcome {
    Complete,
    /// Zeros beyond the candidates could not be excluded.
    Extra(String),
}

#[derive(Clone, Debug)]
pub struct EliminationCertificate {
    pub complete: bool,
    pub witness: Option<String>,
    /// Degrees of the eliminants produced at each projection level.
    pub eliminant_degrees: Vec<Vec<u32>>,
    /// Parameter values (over ℚ(s)) where the generic argument may break down.
    pub bad_parameter_values: Vec<Rat>,
}

impl fmt::Display for EliminationCertificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.complete {
            write!(f, "complete (eliminant degrees {:?})", self.eliminant_degrees)
        } else {
            write!(f, "incomplete: {}", self.witness.as_deref().unwrap_or("?"))
        }
    }
}

struct Ctx {
    degrees: Vec<Vec<u32>>,
    bad: Vec<Rat>,
    // projection attempts left, shared across levels
    budget: u32,
}

const MAX_ATTEMPTS: u64 = 6;

/// Certify that the common projective zeros of `polys` are exactly `candidates`
/// (each of which must be a zero).
pub fn certify_projective<F: ElimField>(polys: &[MPoly<F>], candidates: &[Vec<F>]) -> Result<EliminationCertificate> {
    if polys.iter().any(|p| !p.is_homogeneous()) {
        return Err(Error::NotHomogeneous);
    }
    for c in candidates {
        if c.iter().all(|x| x.is_zero()) {
            return Err(Error::Other("candidate with all coordinates zero".into()));
        }
        if let Some(p) = polys.iter().find(|p| !p.eval(c).is_zero()) {
            return Ok(EliminationCertificate {
                complete: false,
                witness: Some(format!("candidate {:?} is not a zero of {p}", fmt_point(c))),
                eliminant_degrees: vec![],
                bad_parameter_values: vec![],
            });
        }
    }
    let mut ctx = Ctx { degrees: vec![], bad: vec![], budget: 12 };
    let out = certify_rec(polys.to_vec(), candidates.to_vec(), &mut ctx, 0)?;
    ctx.bad.sort();
    ctx.bad.dedup();
    Ok(EliminationCertificate {
        complete: out == Outcome::Complete,
        witness: match out {
            Outcome::Complete => None,
            Outcome::Extra(w) => Some(w),
        },
        eliminant_degrees: ctx.degrees,
        bad_parameter_values: ctx.bad,
    })
}

pub fn fmt_point<F: Field>(p: &[F]) -> String {
    let parts: Vec<String> = p.iter().map(|c| c.to_string()).collect();
    format!("({})", parts.join(":"))
}

/// Scale so the first nonzero coordinate is 1.
pub fn normalize_point<F: Field>(p: &[F]) -> Vec<F> {
    let i = p.iter().position(|c| !c.is_zero()).expect("zero vector");
    let inv = p[i].inv();
    p.iter().map(|c| c.mul(&inv)).collect()
}

fn dedup_points<F: Field>(pts: &[Vec<F>]) -> Vec<Vec<F>> {
    let mut out: Vec<Vec<F>> = Vec::new();
    for p in pts {
        let n = normalize_point(p);
        if !out.contains(&n) {
            out.push(n);
        }
    }
    out
}

/// Small deterministic pseudo-random integers.
struct Lcg(u64);

impl Lcg {
    fn next_in(&mut self, lo: i64, hi: i64) -> i64 {
        self.0 = self.0.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
        lo + ((self.0 >> 33) % ((hi - lo + 1) as u64)) as i64
    }
    fn nonzero_in(&mut self, lo: i64, hi: i64) -> i64 {
        loop {
            let v = self.next_in(lo, hi);
            if v != 0 {
                return v;
            }
        }
    }
}

/// Raise every equation to a common degree without changing the zero set.
fn equalize_degrees<F: Field>(polys: Vec<MPoly<F>>) -> Vec<MPoly<F>> {
    let d = polys.iter().filter_map(|p| p.total_degree()).max().unwrap_or(0);
    let mut out = Vec::new();
    for p in polys {
        let e = p.total_degree().unwrap_or(0);
        if e == d {
            out.push(p);
        } else {
            for j in 0..p.nvars() {
                out.push(p.mul(&MPoly::var(p.vars(), j).pow(d - e)));
            }
        }
    }
    out
}

fn certify_rec<F: ElimField>(polys: Vec<MPoly<F>>, cands: Vec<Vec<F>>, ctx: &mut Ctx, level: usize) -> Result<Outcome> {
    let polys: Vec<_> = polys.into_iter().filter(|p| !p.is_zero()).collect();
    let cands = dedup_points(&cands);
    let nv = polys.first().map(|p| p.nvars()).unwrap_or(0);
    if polys.is_empty() {
        return Ok(Outcome::Extra("no equations: every point is a zero".into()));
    }
    if polys.iter().any(|p| p.is_constant()) {
        return Ok(Outcome::Complete);
    }
    if nv == 1 {
        return Ok(if cands.is_empty() { Outcome::Extra("the unique point of P^0".into()) } else { Outcome::Complete });
    }
    if nv == 2 {
        return certify_binary(&polys, &cands, ctx);
    }
    if polys.len() == 1 {
        return Ok(Outcome::Extra(format!("single equation {} cuts a hypersurface", polys[0])));
    }
    let polys = equalize_degrees(polys);
    let n = nv - 1;
    let e = if n == 2 { 2 } else { 3 }.min(polys.len() - 1);
    let mut last = String::from("no admissible center");
    for attempt in 0..MAX_ATTEMPTS {
        if ctx.budget == 0 {
            break;
        }
        ctx.budget -= 1;
        let mut rng = Lcg(0x9e37_79b9 ^ (attempt * 7919 + level as u64 * 104_729));
        let combos: Vec<MPoly<F>> = if polys.len() == 2 {
            polys.clone()
        } else {
            (0..=e)
                .map(|k| {
                    let mut acc = MPoly::zero(polys[0].vars());
                    for (i, p) in polys.iter().enumerate() {
                        let w = if attempt == 0 && i == k { 1 } else { rng.next_in(-4, 4) };
                        let w = if i == k && w == 0 { 1 } else { w };
                        acc = acc.add(&p.scale(&F::from_int(w)));
                    }
                    acc
                })
                .collect()
        };
        let center: Vec<F> = (0..=n)
            .map(|i| {
                if i == n {
                    F::one()
                } else if attempt == 0 {
                    F::from_int(i as i64 + 2)
                } else {
                    F::from_int(rng.nonzero_in(-3, 3))
                }
            })
            .collect();
        if combos.iter().any(|a| a.eval(&center).is_zero()) {
            last = "center lies on a combination".into();
            continue;
        }
        let cn = normalize_point(&center);
        if cands.contains(&cn) {
            continue;
        }
        for a in &combos {
            ctx.bad.extend(F::bad_values(&a.eval(&center)));
        }
        // x = M x'
        let m: Vec<Vec<F>> = (0..=n)
            .map(|i| {
                (0..=n)
                    .map(|j| {
                        if i == j && i < n {
                            F::one()
                        } else if j == n {
                            center[i].clone()
                        } else {
                            F::zero()
                        }
                    })
                    .collect()
            })
            .collect();
        let moved: Vec<MPoly<F>> = combos.iter().map(|a| a.linear_change(&m)).collect();
        let mut res = Vec::new();
        let mut ok = true;
        for k in 1..moved.len() {
            let r = if n == 2 {
                interp_resultant_ternary(&moved[0], &moved[k])
            } else {
                let a = moved[0].coeffs_in(n);
                let b = moved[k].coeffs_in(n);
                let zero = MPoly::zero(moved[0].vars());
                det_bareiss(sylvester(&a, &b, &zero), moved[0].vars()).drop_var(n)
            };
            if r.is_zero() {
                ok = false;
                break;
            }
            res.push(F::normalize(&r));
        }
        if !ok {
            last = "combinations share a component".into();
            continue;
        }
        // projected candidates: p' = M^{-1} p
        let proj: Vec<Vec<F>> = cands
            .iter()
            .map(|p| {
                let pn = p[n].div(&center[n]);
                (0..n).map(|i| p[i].sub(&center[i].mul(&pn))).collect()
            })
            .collect();
        let degs: Vec<u32> = res.iter().map(|r| r.total_degree().unwrap_or(0)).collect();
        match certify_rec(res, proj.clone(), ctx, level + 1)? {
            Outcome::Extra(w) => {
                last = w;
                continue;
            }
            Outcome::Complete => {}
        }
        ctx.degrees.push(degs);
        // fiber checks with all equations
        let all_moved: Vec<MPoly<F>> = polys.iter().map(|p| p.linear_change(&m)).collect();
        let lv = vars(&["lambda", "mu"]);
        for q in dedup_points(&proj) {
            let images: Vec<MPoly<F>> =
                (0..=n).map(|i| if i == n { MPoly::var(&lv, 1) } else { MPoly::var(&lv, 0).scale(&q[i]) }).collect();
            let forms: Vec<MPoly<F>> = all_moved.iter().map(|p| p.compose(&images)).collect();
            let qi = q.iter().position(|c| !c.is_zero()).unwrap();
            let on_fiber: Vec<Vec<F>> = cands
                .iter()
                .zip(&proj)
                .filter(|(_, pp)| normalize_point(pp) == q)
                .map(|(p, pp)| vec![pp[qi].div(&q[qi]), p[n].div(&center[n])])
                .collect();
            if let Outcome::Extra(w) = certify_binary(&forms, &on_fiber, ctx)? {
                return Ok(Outcome::Extra(format!(
                    "extra zero on the line through {} and {}: {w}",
                    fmt_point(&center),
                    fmt_point(&q)
                )));
            }
        }
        return Ok(Outcome::Complete);
    }
    Ok(Outcome::Extra(last))
}

fn certify_binary<F: ElimField>(forms: &[MPoly<F>], cands: &[Vec<F>], ctx: &mut Ctx) -> Result<Outcome> {
    let mut bfs: Vec<BinForm<F>> = Vec::new();
    for f in forms {
        if f.is_zero() {
            continue;
        }
        bfs.push(BinForm::from_mpoly(f));
    }
    if bfs.is_empty() {
        return Ok(Outcome::Extra("all equations vanish on a whole line".into()));
    }
    let cands = dedup_points(cands);
    for bf in bfs.iter_mut() {
        for c in &cands {
            if c[1].is_zero() {
                bf.deg = bf.p.degree().unwrap_or(0) as u32;
            } else {
                let r = c[0].div(&c[1]);
                let lin = UPoly::from_coeffs(vec![r.neg(), F::one()]);
                while !bf.p.is_zero() && bf.p.eval(&r).is_zero() {
                    bf.p = bf.p.div_exact(&lin).unwrap();
                    bf.deg -= 1;
                }
            }
        }
    }
    if bfs.iter().all(|b| b.vanishes_at_infinity()) {
        return Ok(Outcome::Extra("common zero at (1:0)".into()));
    }
    let ps: Vec<UPoly<F>> = bfs.iter().map(|b| b.p.clone()).collect();
    let g = match F::gcd_degree_bound(&ps) {
        Some(0) => UPoly::one(),
        Some(d) => {
            return Ok(Outcome::Extra(format!("residual common factor of degree {d}")));
        }
        _ => ps[1..].iter().fold(ps[0].clone(), |g, q| if g.degree() == Some(0) { g } else { g.gcd(q) }),
    };
    if g.degree().unwrap_or(0) > 0 {
        return Ok(Outcome::Extra(format!("residual common factor {}", g.fmt_var("t"))));
    }
    if F::PARAMETRIC && bfs.len() >= 2 {
        let r = F::resultant_u(&bfs[0].p, &bfs[1].p);
        if !r.is_zero() {
            ctx.bad.extend(F::bad_values(&r));
        }
    }
    Ok(Outcome::Complete)
}

/// Newton interpolation through `(i, ys[i])`, `i = 0..ys.len()`.
pub fn interpolate<F: Field>(ys: &[F]) -> UPoly<F> {
    let n = ys.len();
    let mut dd = ys.to_vec();
    for j in 1..n {
        for i in (j..n).rev() {
            dd[i] = dd[i].sub(&dd[i - 1]).div(&F::from_int(j as i64));
        }
    }
    let mut p = UPoly::constant(dd[n - 1].clone());
    for i in (0..n - 1).rev() {
        let lin = UPoly::from_coeffs(vec![F::from_int(-(i as i64)), F::one()]);
        p = p.mul(&lin).add(&UPoly::constant(dd[i].clone()));
    }
    p
}

/// Res_z(A, B) for ternary forms with constant leading coefficients in z,
/// by evaluation at `(t, 1, z)` and interpolation.
pub fn interp_resultant_ternary<F: ElimField>(a: &MPoly<F>, b: &MPoly<F>) -> MPoly<F> {
    let da = a.total_degree().unwrap_or(0);
    let db = b.total_degree().unwrap_or(0);
    let d = da * db;
    let ys: Vec<F> = (0..=d as i64)
        .map(|t| {
            let at = a.eval_var(0, &F::from_int(t)).eval_var(1, &F::one()).to_upoly(2).unwrap();
            let bt = b.eval_var(0, &F::from_int(t)).eval_var(1, &F::one()).to_upoly(2).unwrap();
            F::resultant_u(&at, &bt)
        })
        .collect();
    let r = interpolate(&ys);
    let two: Vars = a.vars()[..2].to_vec().into();
    MPoly::from_binary(&two, &r, d)
}

/// Rational solutions of a polynomial system in two unknowns.
pub fn rational_points_2d(polys: &[MPoly<Rat>]) -> Result<Vec<(Rat, Rat)>> {
    let polys: Vec<MPoly<Rat>> = polys.iter().filter(|p| !p.is_zero()).map(primitive_mpoly).collect();
    if polys.iter().any(|p| p.is_constant()) {
        return Ok(vec![]);
    }
    if polys.is_empty() {
        return Err(Error::Elimination("empty system".into()));
    }
    let v = polys[0].vars().clone();
    let with_b: Vec<&MPoly<Rat>> = polys.iter().filter(|p| p.degree_in(1) > 0).collect();
    let mut elim: Option<UPoly<Rat>> = None;
    fn absorb(elim: &mut Option<UPoly<Rat>>, u: UPoly<Rat>) {
        *elim = Some(match elim.take() {
            None => u.monic(),
            Some(g) => g.gcd(&u),
        });
    }
    for p in polys.iter().filter(|p| p.degree_in(1) == 0) {
        absorb(&mut elim, p.to_upoly(0)?);
    }
    'outer: for i in 0..with_b.len() {
        for j in i + 1..with_b.len() {
            let a = with_b[i].coeffs_in(1);
            let b = with_b[j].coeffs_in(1);
            let r = det_bareiss(sylvester(&a, &b, &MPoly::zero(&v)), &v);
            if !r.is_zero() {
                absorb(&mut elim, r.to_upoly(0)?);
                if elim.as_ref().and_then(|g| g.degree()) == Some(0) {
                    break 'outer;
                }
            }
        }
    }
    let Some(e) = elim else {
        return Err(Error::Elimination("no nonzero eliminant".into()));
    };
    let mut out = Vec::new();
    if e.degree() == Some(0) {
        return Ok(out);
    }
    for a in try_rational_roots(&e)? {
        let mut g: Option<UPoly<Rat>> = None;
        for p in &polys {
            let u = p.eval_var(0, &a).to_upoly(1)?;
            if u.is_zero() {
                continue;
            }
            g = Some(match g {
                None => u.monic(),
                Some(h) => h.gcd(&u),
            });
        }
        let Some(g) = g else {
            return Err(Error::Elimination(format!("positive-dimensional solution set at a = {a}")));
        };
        if g.degree() == Some(0) {
            continue;
        }
        for b in rational_roots(&g) {
            if polys.iter().all(|p| Field::is_zero(&p.eval(&[a.clone(), b.clone()]))) {
                out.push((a.clone(), b));
            }
        }
    }
    out.sort();
    Ok(out)
}

/// Convenience: integer point as field coordinates.
pub fn int_point<F: Field>(c: &[i64]) -> Vec<F> {
    c.iter().map(|&x| F::from_rat(&rat_int(x))).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::parse::parse_rat_poly;

    #[test]
    fn cusp_and_node_cubic() {
        // nodal cubic y^2 z = x^2 (x + z): singular only at (0:0:1)
        let v = vars(&["x", "y", "z"]);
        let f = parse_rat_poly("y^2*z-x^3-x^2*z", &v).unwrap();
        let grad = f.gradient();
        let ok = certify_projective(&grad, &[int_point(&[0, 0, 1])]).unwrap();
        assert!(ok.complete, "{ok}");
        let missing = certify_projective::<Rat>(&grad, &[]).unwrap();
        assert!(!missing.complete);
    }

    #[test]
    fn smooth_conic_has_empty_locus() {
        let v = vars(&["x", "y", "z"]);
        let f = parse_rat_poly("x^2+y^2-z^2", &v).unwrap();
        assert!(certify_projective::<Rat>(&f.gradient(), &[]).unwrap().complete);
    }

    #[test]
    fn line_pair_is_not_zero_dimensional_failure_mode() {
        let v = vars(&["x", "y", "z"]);
        // x*y has singular point (0:0:1) only
        let f = parse_rat_poly("x*y", &v).unwrap();
        assert!(certify_projective(&f.gradient(), &[int_point(&[0, 0, 1])]).unwrap().complete);
        // x^2 is singular along a line
        let g = parse_rat_poly("x^2", &v).unwrap();
        assert!(!certify_projective(&g.gradient(), &[int_point(&[0, 0, 1])]).unwrap().complete);
    }

    #[test]
    fn interpolation_recovers_polynomial() {
        let ys: Vec<Rat> = (0..5).map(|t| rat_int(t * t * t - 2 * t + 7)).collect();
        let p = interpolate(&ys);
        assert_eq!(p, UPoly::from_coeffs(vec![rat_int(7), rat_int(-2), rat_int(0), rat_int(1)]));
    }

    #[test]
    fn interpolated_resultant_matches_bareiss() {
        let v = vars(&["x", "y", "z"]);
        let a = parse_rat_poly("z^2+x*z-3*y^2+x*y", &v).unwrap();
        let b = parse_rat_poly("2*z^3+y*z^2-x^2*z+x^3-y^3", &v).unwrap();
        let r1 = interp_resultant_ternary(&a, &b);
        let r2 = super::super::ops::resultant(&a, &b, "z").unwrap().drop_var(2);
        assert_eq!(r1.with_vars(&vars(&["x", "y"])).unwrap(), r2);
    }

    #[test]
    fn modular_coprimality() {
        let a = UPoly::from_coeffs(vec![rat_int(1), rat_int(0), rat_int(1)]);
        let b = UPoly::from_coeffs(vec![rat_int(-1), rat_int(1)]);
        assert_eq!(Rat::gcd_degree_bound(&[a.clone(), b.clone()]), Some(0));
        assert_eq!(Rat::gcd_degree_bound(&[a.clone(), a.clone()]), a.degree());
    }

    #[test]
    fn two_unknowns() {
        let v = vars(&["a", "b"]);
        let p = parse_rat_poly("a^2+b^2-5", &v).unwrap();
        let q = parse_rat_poly("a-2*b", &v).unwrap();
        let sols = rational_points_2d(&[p, q]).unwrap();
        assert_eq!(sols, vec![(rat_int(-2), rat_int(-1)), (rat_int(2), rat_int(1))]);
    }
}
