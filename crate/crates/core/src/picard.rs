//! Divisor configurations on the resolved double sextic and the lattices they span.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;

use crate::cover::{contact_order, line_matrix, lines_for, BranchConfig, LiftedLine};
use crate::error::{Error, Result};
use crate::exactmath::elim::rational_points_2d;
use crate::exactmath::ops::to_rat_poly;
use crate::exactmath::{rat_int, rat_string, vars, Field, MPoly, Rat};
use crate::lattice::{
    fingerprint, fingerprints_match, rank_signature, standard_lattice, GramLattice, LatticeInvariants,
};
use crate::pencil::{branch_cubic, SValue};
use crate::singular::{classify_projective, verify_singular_locus, ProjPoint};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Fiber {
    Generic,
    S1,
    SMinus1,
}

impl Fiber {
    pub fn parse(s: &str) -> Option<Fiber> {
        match s {
            "generic" => Some(Fiber::Generic),
            "s1" | "1" => Some(Fiber::S1),
            "s-1" | "-1" => Some(Fiber::SMinus1),
            _ => None,
        }
    }

    pub fn s_value(self) -> SValue {
        match self {
            Fiber::Generic => SValue::Generic,
            Fiber::S1 => SValue::at(1),
            Fiber::SMinus1 => SValue::at(-1),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Fiber::Generic => "generic",
            Fiber::S1 => "s1",
            Fiber::SMinus1 => "s-1",
        }
    }

    pub fn picard_model(self) -> &'static str {
        match self {
            Fiber::Generic => "U+E8(-1)^2+<-12>",
            Fiber::S1 => "U+E8(-1)^2+<-4>+<-2>",
            Fiber::SMinus1 => "U+E8(-1)^2+<-12>+<-2>",
        }
    }

    pub fn transcendental_model(self) -> &'static str {
        match self {
            Fiber::Generic => "U+<12>",
            Fiber::S1 => "<2>+<4>",
            Fiber::SMinus1 => "<2>+<12>",
        }
    }
}

/// A line that meets either `E_{p,d}` or `E_{p,−d}`, undecided.
#[derive(Clone, Debug, Serialize)]
pub struct AmbiguousPair {
    pub line: String,
    pub plus: String,
    pub minus: String,
}

/// How a line meets the exceptional chain over a singular point.
#[derive(Clone, Debug, Serialize)]
pub struct Incidence {
    pub line: String,
    pub point: usize,
    pub contact: u32,
    /// distance from the middle of the chain
    pub depth: i32,
}

#[derive(Clone, Debug, Serialize)]
pub struct DivisorConfig {
    pub fiber: Fiber,
    pub labels: Vec<String>,
    pub fixed: Vec<Vec<i64>>,
    pub ambiguous: Vec<AmbiguousPair>,
    pub incidences: Vec<Incidence>,
    /// points with their A_k index
    pub singular: Vec<(ProjPoint, u32)>,
}

impl DivisorConfig {
    pub fn index(&self, label: &str) -> usize {
        self.labels.iter().position(|l| l == label).unwrap_or_else(|| panic!("no label {label}"))
    }

    pub fn entry(&self, a: &str, b: &str) -> i64 {
        self.fixed[self.index(a)][self.index(b)]
    }

    /// Gram matrix with the ambiguous pairs resolved by `bits` (0 picks `plus`).
    pub fn complete(&self, bits: u64) -> Vec<Vec<i64>> {
        let mut g = self.fixed.clone();
        for (k, p) in self.ambiguous.iter().enumerate() {
            let target = if bits >> k & 1 == 0 { &p.plus } else { &p.minus };
            let (i, j) = (self.index(&p.line), self.index(target));
            g[i][j] = 1;
            g[j][i] = 1;
        }
        g
    }
}

fn e_label(point: usize, j: i32) -> String {
    format!("E{},{}", point + 1, j)
}

/// Check the singular points of the branch curve and their types.
pub fn verify_branch_table(cfg: &BranchConfig, complete: bool) -> Result<Vec<(ProjPoint, u32)>> {
    let table = cfg.singular_table();
    for (p, k) in &table {
        let r = classify_projective(&cfg.sextic, p)?;
        if r.k != *k {
            return Err(Error::TableMismatch(format!("{p}: expected A{k}, found A{}", r.k)));
        }
    }
    if complete {
        let pts: Vec<ProjPoint> = table.iter().map(|t| t.0.clone()).collect();
        let rep = verify_singular_locus(&cfg.sextic, &pts)?;
        if !rep.pass() {
            return Err(Error::TableMismatch(format!("singular locus not certified: {:?}", rep.witness)));
        }
    }
    Ok(table)
}

pub fn build_divisor_config(fiber: Fiber) -> Result<DivisorConfig> {
    let s = fiber.s_value();
    let cfg = BranchConfig::new(&s);
    let singular = verify_branch_table(&cfg, fiber != Fiber::Generic)?;
    let lines = lines_for(&s)?;
    build_from(fiber, &cfg, &singular, &lines)
}

pub fn build_from(
    fiber: Fiber,
    cfg: &BranchConfig,
    singular: &[(ProjPoint, u32)],
    lines: &[LiftedLine],
) -> Result<DivisorConfig> {
    let mut labels = vec!["H".to_string()];
    let mut half = Vec::new();
    for (i, (_, k)) in singular.iter().enumerate() {
        if k % 2 == 0 {
            return Err(Error::TableMismatch(format!("A{k} at point {} has no symmetric chain", i + 1)));
        }
        let m = (*k as i32 + 1) / 2;
        half.push(m);
        for j in -(m - 1)..m {
            labels.push(e_label(i, j));
        }
    }
    for l in lines {
        labels.push(l.label.clone());
    }
    let n = labels.len();
    let idx = |s: &str| labels.iter().position(|l| l == s).unwrap();
    let mut g = vec![vec![0i64; n]; n];
    let set = |g: &mut Vec<Vec<i64>>, a: usize, b: usize, v: i64| {
        g[a][b] = v;
        g[b][a] = v;
    };
    set(&mut g, 0, 0, 2);
    for i in 1..n {
        set(&mut g, i, i, -2);
    }
    for (i, &m) in half.iter().enumerate() {
        for j in -(m - 1)..m - 1 {
            set(&mut g, idx(&e_label(i, j)), idx(&e_label(i, j + 1)), 1);
        }
    }
    for l in lines {
        set(&mut g, 0, idx(&l.label), 1);
    }
    let excluded: Vec<ProjPoint> = singular.iter().map(|t| t.0.clone()).collect();
    let lm = line_matrix(lines, &excluded)?;
    for a in 0..lines.len() {
        for b in 0..lines.len() {
            if a != b {
                set(&mut g, idx(&lines[a].label), idx(&lines[b].label), lm[a][b]);
            }
        }
    }
    let mut incidences = Vec::new();
    let mut ambiguous = Vec::new();
    let mut normalized = vec![false; singular.len()];
    for l in lines {
        for (i, (p, _)) in singular.iter().enumerate() {
            let c = contact_order(&cfg.sextic, &l.line, p)?;
            if c == 0 {
                continue;
            }
            if c % 2 == 1 {
                return Err(Error::Other(format!("{} has odd contact {c} at {p}", l.label)));
            }
            let depth = half[i] - (c / 2) as i32;
            if depth < 0 {
                return Err(Error::Other(format!("{} has contact {c} at the A{} point {p}", l.label, 2 * half[i] - 1)));
            }
            incidences.push(Incidence { line: l.label.clone(), point: i + 1, contact: c, depth });
            let li = idx(&l.label);
            if depth == 0 {
                set(&mut g, li, idx(&e_label(i, 0)), 1);
            } else if !normalized[i] {
                // fixes which half of the chain is called positive
                normalized[i] = true;
                set(&mut g, li, idx(&e_label(i, depth)), 1);
            } else {
                ambiguous.push(AmbiguousPair {
                    line: l.label.clone(),
                    plus: e_label(i, depth),
                    minus: e_label(i, -depth),
                });
            }
        }
    }
    Ok(DivisorConfig { fiber, labels, fixed: g, ambiguous, incidences, singular: singular.to_vec() })
}

#[derive(Clone, Debug, Serialize)]
pub struct Survivor {
    /// bit k set means the k-th ambiguous line meets the `minus` divisor
    pub bits: String,
    pub rank: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct FiberResult {
    pub fiber: Fiber,
    pub assignments: usize,
    pub survivor_count: usize,
    pub survivors: Vec<Survivor>,
    pub rank: usize,
    pub signature: (usize, usize, usize),
    pub invariant_factors: Vec<u64>,
    pub invariants: LatticeInvariants,
    #[serde(skip)]
    pub grams: Vec<Vec<Vec<i64>>>,
}

fn bit_string(bits: u64, n: usize) -> String {
    (0..n).map(|k| if bits >> k & 1 == 1 { '1' } else { '0' }).collect()
}

/// Run through all completions, keep those of rank at most `rank_bound`.
pub fn enumerate_and_filter(cfg: &DivisorConfig, rank_bound: usize) -> Result<FiberResult> {
    let k = cfg.ambiguous.len();
    let total = 1usize << k;
    let mut found: Vec<(u64, usize, Vec<Vec<i64>>)> = (0..total as u64)
        .into_par_iter()
        .filter_map(|bits| {
            let g = cfg.complete(bits);
            let r = rank_signature(&GramLattice::unlabeled(g.clone())).rank;
            (r <= rank_bound).then_some((bits, r, g))
        })
        .collect();
    found.sort_by_key(|f| f.0);
    if found.is_empty() {
        return Err(Error::SurvivorMismatch(format!("none of the {total} completions has rank <= {rank_bound}")));
    }
    let prints: Vec<LatticeInvariants> = found
        .par_iter()
        .map(|(_, _, g)| fingerprint(&GramLattice::new(cfg.labels.clone(), g.clone())))
        .collect::<Result<_>>()?;
    for (f, p) in found.iter().zip(&prints).skip(1) {
        if !fingerprints_match(&prints[0], p) {
            return Err(Error::SurvivorMismatch(format!(
                "{} vs {}: {:?} / {:?}",
                bit_string(found[0].0, k),
                bit_string(f.0, k),
                prints[0],
                p
            )));
        }
    }
    let inv = prints[0].clone();
    Ok(FiberResult {
        fiber: cfg.fiber,
        assignments: total,
        survivor_count: found.len(),
        survivors: found.iter().map(|(b, r, _)| Survivor { bits: bit_string(*b, k), rank: *r }).collect(),
        rank: inv.rank,
        signature: inv.signature,
        invariant_factors: inv.invariant_factors.clone(),
        invariants: inv,
        grams: found.into_iter().map(|f| f.2).collect(),
    })
}

/// Invariants of the orthogonal complement in the K3 lattice: rank `22 − ρ`,
/// signature `(2, 20 − ρ)`, same group, negated form.
pub fn transcendental_invariants(r: &FiberResult) -> LatticeInvariants {
    let rho = r.rank;
    LatticeInvariants {
        rank: 22 - rho,
        signature: (2, 20 - rho, 0),
        invariant_factors: r.invariant_factors.clone(),
        disc_form: r.invariants.disc_form.negated(),
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct FiberSummary {
    pub result: FiberResult,
    pub picard_model: String,
    pub model_match: bool,
    pub transcendental: LatticeInvariants,
    pub transcendental_model: String,
    pub transcendental_match: bool,
}

pub fn analyse_fiber(fiber: Fiber, rank_bound: usize) -> Result<FiberSummary> {
    let cfg = build_divisor_config(fiber)?;
    let result = enumerate_and_filter(&cfg, rank_bound)?;
    let pm = fingerprint(&standard_lattice(fiber.picard_model())?)?;
    let tm = fingerprint(&standard_lattice(fiber.transcendental_model())?)?;
    let t = transcendental_invariants(&result);
    Ok(FiberSummary {
        model_match: fingerprints_match(&result.invariants, &pm),
        transcendental_match: fingerprints_match(&t, &tm),
        picard_model: fiber.picard_model().into(),
        transcendental_model: fiber.transcendental_model().into(),
        transcendental: t,
        result,
    })
}

/// Reflect the whole chain over point `p` (`E_{p,j} ↔ E_{p,−j}`) in a Gram matrix.
pub fn reflect_chain(cfg: &DivisorConfig, g: &[Vec<i64>], point: usize) -> Vec<Vec<i64>> {
    let n = cfg.labels.len();
    let perm: Vec<usize> = (0..n)
        .map(|i| {
            let l = &cfg.labels[i];
            let prefix = format!("E{point},");
            match l.strip_prefix(&prefix).and_then(|j| j.parse::<i32>().ok()) {
                Some(j) => cfg.index(&format!("E{point},{}", -j)),
                None => i,
            }
        })
        .collect();
    (0..n).map(|i| (0..n).map(|j| g[perm[i]][perm[j]]).collect()).collect()
}

#[derive(Clone, Debug, Serialize)]
pub struct ReflectionReport {
    pub from: String,
    pub to: String,
    pub pass: bool,
    pub center: Vec<String>,
    /// `p ↦ M p`, normalized so that `M² = 1`
    pub matrix: Vec<Vec<String>>,
    /// whether `G₀` goes to `G₀` (false: the cubics are exchanged)
    pub keeps_labels: bool,
}

fn rat_cubic(i: i64, s: &Rat) -> Result<MPoly<Rat>> {
    to_rat_poly(&branch_cubic(i, &SValue::At(s.clone())))
}

/// Coefficients of a polynomial in `(a, b, x, y, z)` grouped by the `x, y, z` monomial.
fn group_xyz(p: &MPoly<Rat>) -> BTreeMap<Vec<u32>, MPoly<Rat>> {
    let ab = vars(&["a", "b"]);
    let mut out: BTreeMap<Vec<u32>, MPoly<Rat>> = BTreeMap::new();
    for (m, c) in p.terms() {
        let key = m.0[2..].to_vec();
        let t = MPoly::monomial(&ab, m.0[..2].to_vec(), c.clone());
        let e = out.entry(key).or_insert_with(|| MPoly::zero(&ab));
        *e = e.add(&t);
    }
    out
}

fn proportional(p: &MPoly<Rat>, q: &MPoly<Rat>) -> bool {
    match (p.lead(), q.lead()) {
        (Some((_, cp)), Some((_, cq))) => p.scale(cq) == q.scale(cp),
        _ => false,
    }
}

/// Harmonic homology with axis `x + y − z = 0` carrying the branch cubics at
/// `s = from` to those at `s = to`, center solved for exactly.
pub fn reflection_isomorphism_check(from: &Rat, to: &Rat) -> Result<ReflectionReport> {
    let v5 = vars(&["a", "b", "x", "y", "z"]);
    let ell = [rat_int(1), rat_int(1), rat_int(-1)];
    let src = [rat_cubic(0, from)?, rat_cubic(1, from)?];
    let dst = [rat_cubic(0, to)?, rat_cubic(1, to)?];
    let a = MPoly::<Rat>::var(&v5, 0);
    let b = MPoly::<Rat>::var(&v5, 1);
    let one = MPoly::<Rat>::one(&v5);
    let zero = MPoly::<Rat>::zero(&v5);
    // charts of the center: (a:b:1), (a:1:0), (1:0:0); pinned unknowns get equations
    type Chart = ([MPoly<Rat>; 3], Vec<MPoly<Rat>>);
    let charts: Vec<Chart> = vec![
        ([a.clone(), b.clone(), one.clone()], vec![]),
        ([a.clone(), one.clone(), zero.clone()], vec![b.clone()]),
        ([one.clone(), zero.clone(), zero.clone()], vec![a.clone(), b.clone()]),
    ];
    let ab = vars(&["a", "b"]);
    for keep in [true, false] {
        let target = if keep { [&dst[0], &dst[1]] } else { [&dst[1], &dst[0]] };
        for (c, extra) in &charts {
            let lc = c[0].scale(&ell[0]).add(&c[1].scale(&ell[1])).add(&c[2].scale(&ell[2]));
            // M' = ℓ(c)·I − 2 c ℓᵀ
            let m: Vec<Vec<MPoly<Rat>>> = (0..3)
                .map(|i| {
                    (0..3)
                        .map(|j| {
                            let d = if i == j { lc.clone() } else { zero.clone() };
                            d.sub(&c[i].scale(&ell[j].mul(&rat_int(2))))
                        })
                        .collect()
                })
                .collect();
            let mut images = vec![a.clone(), b.clone()];
            images.extend(
                (0..3).map(|i| {
                    (0..3).fold(zero.clone(), |acc, j| acc.add(&MPoly::mul(&m[i][j], &MPoly::var(&v5, j + 2))))
                }),
            );
            let mut eqs: Vec<MPoly<Rat>> = extra.iter().map(|e| e.with_vars(&ab).unwrap()).collect();
            for k in 0..2 {
                let lifted = src[k].with_vars(&v5)?;
                let pulled = group_xyz(&lifted.compose(&images));
                let t = target[k];
                let (m0, t0) = t.lead().map(|(m, c)| (m.0.clone(), c.clone())).unwrap();
                let c0 = pulled.get(&m0).cloned().unwrap_or_else(|| MPoly::zero(&ab));
                let mut keys: Vec<Vec<u32>> = pulled.keys().cloned().collect();
                keys.extend(t.terms().map(|(m, _)| m.0.clone()));
                keys.sort();
                keys.dedup();
                for key in keys {
                    let ck = pulled.get(&key).cloned().unwrap_or_else(|| MPoly::zero(&ab));
                    let tk = t.coeff(&key);
                    let e = ck.scale(&t0).sub(&c0.scale(&tk));
                    if !e.is_zero() {
                        eqs.push(e);
                    }
                }
            }
            let sols = match rational_points_2d(&eqs) {
                Ok(s) => s,
                Err(_) => continue,
            };
            for (sa, sb) in sols {
                let cv: Vec<Rat> =
                    c.iter().map(|p| p.eval(&[sa.clone(), sb.clone(), rat_int(0), rat_int(0), rat_int(0)])).collect();
                let l: Rat = (0..3).map(|i| &ell[i] * &cv[i]).sum();
                if l.is_zero() {
                    continue;
                }
                let mat: Vec<Vec<Rat>> = (0..3)
                    .map(|i| {
                        (0..3)
                            .map(|j| {
                                let d = if i == j { rat_int(1) } else { rat_int(0) };
                                d - rat_int(2) * &cv[i] * &ell[j] / &l
                            })
                            .collect()
                    })
                    .collect();
                if check_reflection(&mat, &src, &target) {
                    return Ok(ReflectionReport {
                        from: rat_string(from),
                        to: rat_string(to),
                        pass: true,
                        center: cv.iter().map(rat_string).collect(),
                        matrix: mat.iter().map(|r| r.iter().map(rat_string).collect()).collect(),
                        keeps_labels: keep,
                    });
                }
            }
        }
    }
    Ok(ReflectionReport {
        from: rat_string(from),
        to: rat_string(to),
        pass: false,
        center: vec![],
        matrix: vec![],
        keeps_labels: false,
    })
}

/// Independent recheck of a candidate matrix.
pub fn check_reflection(mat: &[Vec<Rat>], src: &[MPoly<Rat>; 2], dst: &[&MPoly<Rat>; 2]) -> bool {
    let v = src[0].vars().clone();
    let images: Vec<MPoly<Rat>> =
        (0..3).map(|i| (0..3).fold(MPoly::zero(&v), |acc, j| acc.add(&MPoly::var(&v, j).scale(&mat[i][j])))).collect();
    let maps = (0..2).all(|k| proportional(&src[k].compose(&images), dst[k]));
    let apply =
        |p: [i64; 3]| -> Vec<Rat> { (0..3).map(|i| (0..3).map(|j| &mat[i][j] * rat_int(p[j])).sum()).collect() };
    let fixed = |p: [i64; 3]| apply(p) == p.iter().map(|&x| rat_int(x)).collect::<Vec<_>>();
    let sq: Vec<Vec<Rat>> =
        (0..3).map(|i| (0..3).map(|j| (0..3).map(|k| &mat[i][k] * &mat[k][j]).sum()).collect()).collect();
    let involution = (0..3).all(|i| (0..3).all(|j| sq[i][j] == rat_int((i == j) as i64)));
    maps && fixed([1, 0, 1]) && fixed([0, 1, 1]) && involution
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generic_config_shape() {
        let c = build_divisor_config(Fiber::Generic).unwrap();
        assert_eq!(c.labels.len(), 23);
        assert_eq!(c.ambiguous.len(), 7);
        assert_eq!(c.entry("H", "L3"), 1);
        assert_eq!(c.entry("E1,1", "E1,2"), 1);
        assert_eq!(c.entry("E1,1", "E1,-1"), 0);
        assert_eq!(c.entry("L1", "E1,2"), 1);
        assert_eq!(c.entry("L1", "E2,2"), 1);
        assert_eq!(c.entry("L2", "E3,1"), 1);
        assert_eq!(c.entry("L4", "E3,0"), 1);
        assert_eq!(c.entry("L4", "E4,0"), 1);
        assert_eq!(c.entry("L1", "E4,0"), 1);
    }
}
