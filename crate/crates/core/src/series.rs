//! θ-operators acting on truncated power series, and the sequences they annihilate.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::{binomial, Integer};
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactmath::ops::rational_roots;
use crate::exactmath::{rat_string, Rat, UPoly};
use crate::report::Status;

pub fn apery(n: u64) -> BigInt {
    let n_ = BigInt::from(n);
    (0..=n)
        .map(|k| {
            let k_ = BigInt::from(k);
            let a = binomial(n_.clone(), k_.clone());
            let b = binomial(&n_ + &k_, k_);
            &a * &a * &b * &b
        })
        .sum()
}

/// `a_n = Σ C(n,k)² C(2k,k)`.
pub fn sum_a(n: u64) -> BigInt {
    let n_ = BigInt::from(n);
    (0..=n)
        .map(|k| {
            let k_ = BigInt::from(k);
            let a = binomial(n_.clone(), k_.clone());
            &a * &a * binomial(BigInt::from(2 * k), k_)
        })
        .sum()
}

/// `b_n = C(2n,n) a_n`.
pub fn domb(n: u64) -> BigInt {
    binomial(BigInt::from(2 * n), BigInt::from(n)) * sum_a(n)
}

/// Integer polynomial in θ, low degree first.
pub type ThetaPoly = Vec<BigInt>;

fn tp(c: &[i64]) -> ThetaPoly {
    c.iter().map(|&x| BigInt::from(x)).collect()
}

fn tp_mul(a: &ThetaPoly, b: &ThetaPoly) -> ThetaPoly {
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn tp_prod(fs: &[&[i64]]) -> ThetaPoly {
    fs.iter().fold(tp(&[1]), |acc, f| tp_mul(&acc, &tp(f)))
}

fn tp_eval(p: &ThetaPoly, x: &BigInt) -> BigInt {
    p.iter().rev().fold(BigInt::zero(), |acc, c| acc * x + c)
}

fn tp_fmt(p: &ThetaPoly, var: &str) -> String {
    let u = UPoly::from_coeffs(p.iter().map(|c| Rat::from_integer(c.clone())).collect());
    u.fmt_var(var)
}

/// `Σ_a var^a · p_a(θ)` with `θ = var·d/dvar`.
#[derive(Clone, Debug, PartialEq)]
pub struct ThetaOperator {
    pub var: String,
    pub terms: BTreeMap<u32, ThetaPoly>,
}

impl ThetaOperator {
    pub fn new(var: &str, terms: Vec<(u32, ThetaPoly)>) -> Self {
        let mut m = BTreeMap::new();
        for (a, p) in terms {
            let mut p = p;
            while p.last().is_some_and(|c| c.is_zero()) {
                p.pop();
            }
            if !p.is_empty() {
                m.insert(a, p);
            }
        }
        ThetaOperator { var: var.into(), terms: m }
    }

    pub fn theta_power(var: &str, k: usize) -> Self {
        let mut p = vec![BigInt::zero(); k + 1];
        p[k] = BigInt::one();
        Self::new(var, vec![(0, p)])
    }

    /// Multiply the `var^a` term by `c`.
    pub fn scale_term(&self, a: u32, c: &BigInt) -> Self {
        let mut o = self.clone();
        if let Some(p) = o.terms.get_mut(&a) {
            for x in p.iter_mut() {
                *x *= c;
            }
        }
        o
    }

    pub fn order(&self) -> usize {
        self.terms.values().map(|p| p.len() - 1).max().unwrap_or(0)
    }

    /// Substitute `var = new²`, so `θ_var = θ_new / 2`, and clear the powers of 2.
    pub fn pullback_square(&self, new: &str) -> Self {
        let d = self.order() as u32;
        let terms = self
            .terms
            .iter()
            .map(|(&a, p)| {
                let q = p.iter().enumerate().map(|(k, c)| c * BigInt::from(2).pow(d - k as u32)).collect();
                (2 * a, q)
            })
            .collect();
        Self::new(new, terms)
    }
}

impl fmt::Display for ThetaOperator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(&a, p)| {
                let t = tp_fmt(p, "θ");
                match a {
                    0 => format!("({t})"),
                    1 => format!("{}*({t})", self.var),
                    _ => format!("{}^{a}*({t})", self.var),
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

pub fn apery_operator() -> ThetaOperator {
    ThetaOperator::new(
        "lambda",
        vec![
            (0, tp(&[0, 0, 0, 1])),
            (1, tp_prod(&[&[-1], &[1, 2], &[5, 17, 17]])),
            (2, tp_prod(&[&[1, 1], &[1, 1], &[1, 1]])),
        ],
    )
}

/// The Fermi operator as usually printed; its middle term is half the pullback's.
pub fn fermi_printed() -> ThetaOperator {
    ThetaOperator::new(
        "xi",
        vec![
            (0, tp(&[0, 0, 0, 1])),
            (2, tp_prod(&[&[-1], &[1, 1], &[20, 34, 17]])),
            (4, tp_prod(&[&[2, 1], &[2, 1], &[2, 1]])),
        ],
    )
}

pub fn fermi_corrected() -> ThetaOperator {
    fermi_printed().scale_term(2, &BigInt::from(2))
}

/// The Domb operator as usually printed; the last term is off by a factor 36.
pub fn domb_printed() -> ThetaOperator {
    ThetaOperator::new(
        "mu",
        vec![
            (0, tp(&[0, 0, 0, 1])),
            (1, tp_prod(&[&[-2], &[1, 2], &[3, 10, 10]])),
            (2, tp_prod(&[&[1, 2], &[1, 1], &[3, 2]])),
        ],
    )
}

pub fn domb_corrected() -> ThetaOperator {
    domb_printed().scale_term(2, &BigInt::from(36))
}

#[derive(Clone, Debug, PartialEq)]
pub struct PowerSeries {
    pub var: String,
    pub coeffs: Vec<Rat>,
}

impl PowerSeries {
    pub fn new(var: &str, coeffs: Vec<Rat>) -> Self {
        PowerSeries { var: var.into(), coeffs }
    }

    pub fn from_ints(var: &str, c: &[BigInt]) -> Self {
        Self::new(var, c.iter().map(|x| Rat::from_integer(x.clone())).collect())
    }

    /// `Σ u_n var^{step·n}` up to `var^order`.
    pub fn spread(var: &str, u: &[BigInt], step: usize, order: usize) -> Self {
        let mut c = vec![Rat::zero(); order + 1];
        for (n, x) in u.iter().enumerate() {
            if n * step <= order {
                c[n * step] = Rat::from_integer(x.clone());
            }
        }
        Self::new(var, c)
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }
}

/// Coefficientwise action, truncated at the order of `f`.
pub fn theta_apply(op: &ThetaOperator, f: &PowerSeries) -> Result<PowerSeries> {
    if op.var != f.var {
        return Err(Error::VariableMismatch { expected: op.var.clone(), got: f.var.clone() });
    }
    let n = f.order();
    let mut out = vec![Rat::zero(); n + 1];
    for (&a, p) in &op.terms {
        for (m, c) in f.coeffs.iter().enumerate() {
            let k = m + a as usize;
            if k > n || c.is_zero() {
                continue;
            }
            out[k] += Rat::from_integer(tp_eval(p, &BigInt::from(m))) * c;
        }
    }
    Ok(PowerSeries::new(&f.var, out))
}

/// `Σ_a c_a(n − a)·u(n − a) = 0` for all `n`, with `c_a = p_a`.
#[derive(Clone, Debug, PartialEq)]
pub struct Recurrence {
    pub order: u32,
    /// `(a, c_a)`
    pub coeffs: Vec<(u32, ThetaPoly)>,
}

pub fn operator_to_recurrence(op: &ThetaOperator) -> Recurrence {
    let coeffs: Vec<(u32, ThetaPoly)> = op.terms.iter().map(|(&a, p)| (a, p.clone())).collect();
    let order = coeffs.iter().map(|c| c.0).max().unwrap_or(0);
    Recurrence { order, coeffs }
}

impl Recurrence {
    /// Residual at index `n` for the sequence `u` (missing terms count as 0).
    pub fn residual(&self, u: &[Rat], n: usize) -> Rat {
        let mut acc = Rat::zero();
        for (a, c) in &self.coeffs {
            let a = *a as usize;
            if a > n {
                continue;
            }
            if let Some(x) = u.get(n - a) {
                acc += Rat::from_integer(tp_eval(c, &BigInt::from(n - a))) * x;
            }
        }
        acc
    }

    /// Continue `initial` to length `len`; needs the `a = 0` coefficient nonzero.
    pub fn extend(&self, initial: &[Rat], len: usize) -> Result<Vec<Rat>> {
        let c0 = self.coeffs.iter().find(|c| c.0 == 0).map(|c| c.1.clone()).ok_or(Error::Degenerate)?;
        let mut u = initial.to_vec();
        while u.len() < len {
            let n = u.len();
            let lead = tp_eval(&c0, &BigInt::from(n));
            if lead.is_zero() {
                return Err(Error::Degenerate);
            }
            let mut rest = Rat::zero();
            for (a, c) in &self.coeffs {
                let a = *a as usize;
                if a == 0 || a > n {
                    continue;
                }
                rest += Rat::from_integer(tp_eval(c, &BigInt::from(n - a))) * &u[n - a];
            }
            u.push(-rest / Rat::from_integer(lead));
        }
        Ok(u)
    }
}

impl fmt::Display for Recurrence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .coeffs
            .iter()
            .map(|(a, c)| {
                // c(n − a) as a polynomial in n
                let shifted = shift_poly(c, -(*a as i64));
                let arg = if *a == 0 { "n".to_string() } else { format!("n-{a}") };
                format!("({})*u({arg})", tp_fmt(&shifted, "n"))
            })
            .collect();
        write!(f, "{} = 0", parts.join(" + "))
    }
}

/// `p(n + h)`.
fn shift_poly(p: &ThetaPoly, h: i64) -> ThetaPoly {
    let mut out = vec![BigInt::zero(); p.len()];
    for (k, c) in p.iter().enumerate() {
        // c·(n + h)^k
        for j in 0..=k {
            let b = binomial(BigInt::from(k), BigInt::from(j));
            out[j] += c * b * BigInt::from(h).pow((k - j) as u32);
        }
    }
    out
}

#[derive(Clone, Debug, Serialize)]
pub struct Annihilation {
    pub pass: bool,
    pub order: usize,
    /// first exponent with a nonzero coefficient
    pub first_failure: Option<usize>,
    pub residual_at_failure: Option<String>,
}

pub fn annihilation_check(op: &ThetaOperator, f: &PowerSeries) -> Result<Annihilation> {
    let r = theta_apply(op, f)?;
    let first = r.coeffs.iter().position(|c| !c.is_zero());
    Ok(Annihilation {
        pass: first.is_none(),
        order: f.order(),
        first_failure: first,
        residual_at_failure: first.map(|k| rat_string(&r.coeffs[k])),
    })
}

/// The factor `κ` that makes `var^a`-term·κ consistent with the first
/// coefficient of `f` where that term contributes.
pub fn fit_term_scale(op: &ThetaOperator, a: u32, f: &PowerSeries) -> Option<Rat> {
    let p = op.terms.get(&a)?;
    let rest =
        ThetaOperator::new(&op.var, op.terms.iter().filter(|(&b, _)| b != a).map(|(&b, q)| (b, q.clone())).collect());
    let r = theta_apply(&rest, f).ok()?;
    for m in 0..f.coeffs.len() {
        let k = m + a as usize;
        if k >= f.coeffs.len() {
            break;
        }
        let t = Rat::from_integer(tp_eval(p, &BigInt::from(m))) * &f.coeffs[m];
        if !t.is_zero() {
            return Some(-&r.coeffs[k] / t);
        }
    }
    None
}

/// A root `p + q·√m` (`m` squarefree, `q = 0` for rational roots).
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Surd {
    pub p: Rat,
    pub q: Rat,
    pub m: BigInt,
}

impl Surd {
    pub fn rational(r: Rat) -> Self {
        Surd { p: r, q: Rat::zero(), m: BigInt::one() }
    }

    pub fn numeric(&self) -> f64 {
        self.p.to_f64().unwrap() + self.q.to_f64().unwrap() * self.m.to_f64().unwrap().sqrt()
    }
}

impl fmt::Display for Surd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.q.is_zero() {
            return write!(f, "{}", rat_string(&self.p));
        }
        let qs = if self.q.abs() == Rat::one() { String::new() } else { format!("{}*", rat_string(&self.q.abs())) };
        let sign = if self.q.is_negative() { "-" } else { "+" };
        if self.p.is_zero() {
            let lead = if self.q.is_negative() { "-" } else { "" };
            write!(f, "{lead}{qs}sqrt({})", self.m)
        } else {
            write!(f, "{}{sign}{qs}sqrt({})", rat_string(&self.p), self.m)
        }
    }
}

impl Serialize for Surd {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_string().serialize(s)
    }
}

fn int_poly_eval(c: &[BigInt], x: &BigInt) -> BigInt {
    c.iter().rev().fold(BigInt::zero(), |acc, a| acc * x + a)
}

fn int_divisors(n: &BigInt) -> Vec<BigInt> {
    let n = n.abs().to_u64().expect("value too large to factor");
    let mut out = Vec::new();
    let mut d = 1u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            if d * d != n {
                out.push(n / d);
            }
        }
        d += 1;
    }
    out.into_iter().flat_map(|d| [BigInt::from(d), -BigInt::from(d)]).collect()
}

fn to_rat_upoly(c: &[BigInt]) -> UPoly<Rat> {
    UPoly::from_coeffs(c.iter().map(|x| Rat::from_integer(x.clone())).collect())
}

fn primitive(p: &UPoly<Rat>) -> Vec<BigInt> {
    crate::exactmath::ops::primitive_integer_coeffs(p)
}

/// Factor an integer polynomial into irreducibles of degree ≤ 2 where they
/// exist (rational roots, then quadratic factors by Kronecker's method);
/// whatever remains is returned as one factor.
pub fn factor_small(c: &[BigInt]) -> Vec<(Vec<BigInt>, u32)> {
    let mut rest = to_rat_upoly(c);
    let mut out: Vec<(Vec<BigInt>, u32)> = Vec::new();
    let push = |f: Vec<BigInt>, out: &mut Vec<(Vec<BigInt>, u32)>| {
        if let Some(e) = out.iter_mut().find(|e| e.0 == f) {
            e.1 += 1;
        } else {
            out.push((f, 1));
        }
    };
    for r in rational_roots(&rest) {
        let lin = primitive(&UPoly::from_coeffs(vec![-r.clone(), Rat::one()]));
        let l = to_rat_upoly(&lin);
        while let Some(q) = rest.div_exact(&l) {
            rest = q;
            push(lin.clone(), &mut out);
        }
    }
    'outer: while rest.degree().unwrap_or(0) >= 4 {
        let ic = primitive(&rest);
        let pts = [BigInt::zero(), BigInt::one(), -BigInt::one()];
        let vals: Vec<BigInt> = pts.iter().map(|x| int_poly_eval(&ic, x)).collect();
        let divs: Vec<Vec<BigInt>> = vals.iter().map(int_divisors).collect();
        for d0 in &divs[0] {
            for d1 in &divs[1] {
                for d2 in &divs[2] {
                    // q(0) = d0, q(1) = d1, q(−1) = d2
                    let two = BigInt::from(2);
                    let a2 = d1 + d2 - &two * d0;
                    let a1 = d1 - d2;
                    if !a2.is_multiple_of(&two) || !a1.is_multiple_of(&two) || a2.is_zero() {
                        continue;
                    }
                    let q = vec![d0.clone(), a1 / &two, a2 / &two];
                    if q[2].is_negative() {
                        continue;
                    }
                    let qp = to_rat_upoly(&q);
                    if let Some(r) = rest.div_exact(&qp) {
                        rest = r;
                        push(q, &mut out);
                        continue 'outer;
                    }
                }
            }
        }
        break;
    }
    if rest.degree().unwrap_or(0) > 0 {
        push(primitive(&rest), &mut out);
    }
    out
}

/// Roots of a factor of degree ≤ 2.
pub fn surd_roots(f: &[BigInt]) -> Vec<Surd> {
    match f.len() {
        2 => vec![Surd::rational(Rat::new(-f[0].clone(), f[1].clone()))],
        3 => {
            let (c, b, a) = (&f[0], &f[1], &f[2]);
            let disc: BigInt = b * b - BigInt::from(4) * a * c;
            let two_a = BigInt::from(2) * a;
            let p = Rat::new(-b.clone(), two_a.clone());
            if disc.is_zero() {
                return vec![Surd::rational(p)];
            }
            // disc = k² m with m squarefree
            let (k, m) = square_part(&disc);
            if m.is_one() {
                let r = Rat::new(k, two_a.clone());
                return vec![Surd::rational(&p - &r), Surd::rational(&p + &r)];
            }
            let q = Rat::new(k, two_a.abs());
            vec![Surd { p: p.clone(), q: -q.clone(), m: m.clone() }, Surd { p, q, m }]
        }
        _ => vec![],
    }
}

fn square_part(n: &BigInt) -> (BigInt, BigInt) {
    let neg = n.is_negative();
    let mut m = n.abs();
    let mut k = BigInt::one();
    let mut d = BigInt::from(2);
    while &d * &d <= m {
        let dd = &d * &d;
        while m.is_multiple_of(&dd) {
            m /= &dd;
            k *= &d;
        }
        d += 1;
    }
    (k, if neg { -m } else { m })
}

#[derive(Clone, Debug, Serialize)]
pub struct Singularities {
    /// leading coefficient of the operator in `d/dvar`, divided by `var^order`
    pub symbol: String,
    pub factors: Vec<String>,
    /// finite nonzero singular points; 0 and ∞ are always singular
    pub points: Vec<Surd>,
}

pub fn leading_symbol(op: &ThetaOperator) -> Vec<BigInt> {
    let d = op.order();
    let top = *op.terms.keys().max().unwrap_or(&0) as usize;
    let mut c = vec![BigInt::zero(); top + 1];
    for (&a, p) in &op.terms {
        if p.len() == d + 1 {
            c[a as usize] = p[d].clone();
        }
    }
    c
}

pub fn operator_singularities(op: &ThetaOperator) -> Singularities {
    let sym = leading_symbol(op);
    let factors = factor_small(&sym);
    let mut points: Vec<Surd> = factors.iter().flat_map(|(f, _)| surd_roots(f)).collect();
    points.sort_by(|a, b| a.numeric().partial_cmp(&b.numeric()).unwrap());
    Singularities {
        symbol: tp_fmt(&sym, &op.var),
        factors: factors
            .iter()
            .map(|(f, e)| {
                let s = tp_fmt(f, &op.var);
                if *e > 1 {
                    format!("({s})^{e}")
                } else {
                    format!("({s})")
                }
            })
            .collect(),
        points,
    }
}

/// Surds `±a ± b√m` for the printed Fermi singular list `±3 ± √2`.
pub fn signed_surds(a: i64, b: i64, m: i64) -> Vec<Surd> {
    let mut v = Vec::new();
    for sa in [-1, 1] {
        for sb in [-1, 1] {
            v.push(Surd { p: Rat::from_integer((sa * a).into()), q: Rat::from_integer((sb * b).into()), m: m.into() });
        }
    }
    v.sort_by(|a, b| a.numeric().partial_cmp(&b.numeric()).unwrap());
    v
}

#[derive(Clone, Debug, Serialize)]
pub struct OperatorReport {
    pub op: String,
    pub operator: String,
    pub corrected: bool,
    pub status: Status,
    pub coefficients: Vec<String>,
    pub recurrence: String,
    pub annihilation: Annihilation,
    pub annihilation_status: Status,
    pub singular_points: Vec<Surd>,
    pub singular_symbol: String,
    pub singular_factors: Vec<String>,
    pub expected_singular_points: Vec<Surd>,
    pub singularities_match: bool,
    /// correction factor fitted to the sequence, when relevant
    pub fitted_factor: Option<String>,
    /// for the printed Domb operator: b_2 as the recurrence predicts it
    pub predicted: Option<String>,
}

fn seq(f: impl Fn(u64) -> BigInt, n: usize) -> Vec<BigInt> {
    (0..=n as u64).map(f).collect()
}

fn same_points(a: &[Surd], b: &[Surd]) -> bool {
    let mut a = a.to_vec();
    let mut b = b.to_vec();
    a.sort();
    b.sort();
    a == b
}

/// Check one of the three operators against its sequence to order `n`.
pub fn operator_report(name: &str, corrected: bool, n: usize) -> Result<OperatorReport> {
    let (op, series, expected, fit_power, show) = match name {
        "apery" => {
            let u = seq(apery, n);
            let s = PowerSeries::from_ints("lambda", &u);
            let expected = vec![
                Surd { p: Rat::from_integer(17.into()), q: Rat::from_integer((-12).into()), m: 2.into() },
                Surd { p: Rat::from_integer(17.into()), q: Rat::from_integer(12.into()), m: 2.into() },
            ];
            (apery_operator(), s, expected, None, u)
        }
        "fermi" => {
            let u = seq(apery, n / 2);
            let s = PowerSeries::spread("xi", &u, 2, n);
            let op = if corrected { fermi_corrected() } else { fermi_printed() };
            (op, s, signed_surds(3, 1, 2), Some(2), u)
        }
        "domb" => {
            let u = seq(domb, n);
            let s = PowerSeries::from_ints("mu", &u);
            let op = if corrected { domb_corrected() } else { domb_printed() };
            let expected =
                vec![Surd::rational(Rat::new(1.into(), 36.into())), Surd::rational(Rat::new(1.into(), 4.into()))];
            (op, s, expected, Some(2), u)
        }
        _ => return Err(Error::Other(format!("unknown operator {name}"))),
    };
    let ann = annihilation_check(&op, &series)?;
    let sing = operator_singularities(&op);
    let matches = same_points(&sing.points, &expected);
    let fitted = fit_power.and_then(|a| {
        let base = if name == "fermi" { fermi_printed() } else { domb_printed() };
        fit_term_scale(&base, a, &series).map(|r| rat_string(&r))
    });
    let rec = operator_to_recurrence(&op);
    let predicted = (name == "domb").then(|| {
        let init: Vec<Rat> = series.coeffs[..2].to_vec();
        rec.extend(&init, 3).map(|u| rat_string(&u[2])).unwrap_or_default()
    });
    let printed_form = name != "apery" && !corrected;
    let ann_status = match (ann.pass, printed_form) {
        (true, _) => Status::Pass,
        (false, true) => Status::Flagged,
        (false, false) => Status::Fail,
    };
    let ok = ann.pass && matches;
    let status = if ok {
        Status::Pass
    } else if printed_form || (name == "fermi" && ann.pass) {
        // the printed Fermi singular list disagrees even with the corrected operator
        Status::Flagged
    } else {
        Status::Fail
    };
    Ok(OperatorReport {
        op: name.into(),
        operator: op.to_string(),
        corrected,
        status,
        coefficients: show.iter().map(|c| c.to_string()).collect(),
        recurrence: rec.to_string(),
        annihilation: ann,
        annihilation_status: ann_status,
        singular_points: sing.points,
        singular_symbol: sing.symbol,
        singular_factors: sing.factors,
        expected_singular_points: expected,
        singularities_match: matches,
        fitted_factor: fitted,
        predicted,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64) -> Rat {
        Rat::from_integer(n.into())
    }

    #[test]
    fn first_values() {
        let a: Vec<BigInt> = (0..4).map(apery).collect();
        assert_eq!(a, tp(&[1, 5, 73, 1445]));
        assert_eq!(sum_a(4), BigInt::from(639));
        let b: Vec<BigInt> = (0..5).map(domb).collect();
        assert_eq!(b, tp(&[1, 6, 90, 1860, 44730]));
    }

    #[test]
    fn theta_on_monomials() {
        let t = ThetaOperator::theta_power("x", 1);
        let f = PowerSeries::new("x", vec![r(0), r(0), r(0), r(1)]);
        assert_eq!(theta_apply(&t, &f).unwrap().coeffs[3], r(3));
        let t3 = ThetaOperator::theta_power("x", 3);
        let one = PowerSeries::new("x", vec![r(1), r(0)]);
        assert!(theta_apply(&t3, &one).unwrap().is_zero());
        assert!(theta_apply(&t3, &PowerSeries::new("y", vec![r(1)])).is_err());
    }

    #[test]
    fn apery_recurrence_at_one() {
        let rec = operator_to_recurrence(&apery_operator());
        let u: Vec<Rat> = (0..3).map(|n| Rat::from_integer(apery(n))).collect();
        assert!(rec.residual(&u, 2).is_zero());
        assert_eq!(8 * 73, 3 * 39 * 5 - 1);
    }

    #[test]
    fn domb_printed_predicts_fraction() {
        let rec = operator_to_recurrence(&domb_printed());
        let u = rec.extend(&[r(1), r(6)], 3).unwrap();
        assert_eq!(u[2], Rat::new(825.into(), 8.into()));
    }

    #[test]
    fn fitted_factors() {
        let b: Vec<BigInt> = (0..6).map(domb).collect();
        let s = PowerSeries::from_ints("mu", &b);
        assert_eq!(fit_term_scale(&domb_printed(), 2, &s), Some(r(36)));
        let a: Vec<BigInt> = (0..4).map(apery).collect();
        let s = PowerSeries::spread("xi", &a, 2, 6);
        assert_eq!(fit_term_scale(&fermi_printed(), 2, &s), Some(r(2)));
    }

    #[test]
    fn symbols() {
        let s = operator_singularities(&apery_operator());
        assert_eq!(s.points.len(), 2);
        assert_eq!(s.points[1].to_string(), "17+12*sqrt(2)");
        let d = operator_singularities(&domb_corrected());
        let pts: Vec<String> = d.points.iter().map(|p| p.to_string()).collect();
        assert_eq!(pts, vec!["1/36", "1/4"]);
        let f = operator_singularities(&fermi_corrected());
        assert_eq!(f.factors.len(), 2);
        assert_eq!(f.points.len(), 4);
    }

    #[test]
    fn pullback_is_corrected_fermi() {
        assert_eq!(apery_operator().pullback_square("xi"), fermi_corrected());
    }

    #[test]
    fn shifted_display() {
        let rec = operator_to_recurrence(&apery_operator());
        let s = rec.to_string();
        assert!(s.contains("u(n-2)"), "{s}");
    }
}
