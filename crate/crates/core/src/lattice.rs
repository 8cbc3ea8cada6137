//! Integral lattices given by Gram matrices.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactmath::{rat_string, Rat};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GramLattice {
    pub labels: Vec<String>,
    pub gram: Vec<Vec<i64>>,
}

impl GramLattice {
    pub fn new(labels: Vec<String>, gram: Vec<Vec<i64>>) -> Self {
        let n = gram.len();
        assert_eq!(labels.len(), n);
        for (i, row) in gram.iter().enumerate() {
            assert_eq!(row.len(), n);
            for j in 0..n {
                assert_eq!(row[j], gram[j][i], "Gram matrix not symmetric at ({i},{j})");
            }
        }
        GramLattice { labels, gram }
    }

    pub fn unlabeled(gram: Vec<Vec<i64>>) -> Self {
        let labels = (0..gram.len()).map(|i| format!("e{}", i + 1)).collect();
        Self::new(labels, gram)
    }

    pub fn dim(&self) -> usize {
        self.gram.len()
    }

    pub fn is_even(&self) -> bool {
        (0..self.dim()).all(|i| self.gram[i][i] % 2 == 0)
    }

    pub fn direct_sum(&self, o: &GramLattice) -> GramLattice {
        let (n, m) = (self.dim(), o.dim());
        let mut g = vec![vec![0; n + m]; n + m];
        for i in 0..n {
            g[i][..n].copy_from_slice(&self.gram[i]);
        }
        for i in 0..m {
            g[n + i][n..].copy_from_slice(&o.gram[i]);
        }
        let mut labels = self.labels.clone();
        labels.extend(o.labels.iter().cloned());
        GramLattice { labels, gram: g }
    }

    /// `Pᵀ G P` for an integer matrix `P` (columns are the new generators).
    pub fn transform(&self, p: &[Vec<i64>]) -> GramLattice {
        let n = self.dim();
        let k = p[0].len();
        let mut g = vec![vec![0i64; k]; k];
        for a in 0..k {
            for b in 0..k {
                let mut acc = 0i128;
                for i in 0..n {
                    for j in 0..n {
                        acc += i128::from(p[i][a]) * i128::from(self.gram[i][j]) * i128::from(p[j][b]);
                    }
                }
                g[a][b] = i64::try_from(acc).expect("Gram entry overflow");
            }
        }
        GramLattice::unlabeled(g)
    }

    fn big(&self) -> Vec<Vec<BigInt>> {
        self.gram.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect()
    }
}

pub fn e8_cartan() -> Vec<Vec<i64>> {
    // Bourbaki labelling: chain 1-3-4-5-6-7-8 with 2 attached to 4
    let edges = [(0, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7), (1, 3)];
    let mut m = vec![vec![0; 8]; 8];
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = 2;
    }
    for (a, b) in edges {
        m[a][b] = -1;
        m[b][a] = -1;
    }
    m
}

/// Negated Cartan matrix of type A_k.
pub fn a_chain(k: usize) -> Vec<Vec<i64>> {
    let mut m = vec![vec![0; k]; k];
    for i in 0..k {
        m[i][i] = -2;
        if i + 1 < k {
            m[i][i + 1] = 1;
            m[i + 1][i] = 1;
        }
    }
    m
}

/// Parse expressions such as `U ⊕ E8(-1)^2 ⊕ <-12>`.
///
/// Summands: `U`, `E8(-1)`, `<n>` (or `⟨n⟩`), each optionally followed by
/// `^k`, `²` or `^{⊕k}`; separators `⊕` or `+`.
pub fn standard_lattice(spec: &str) -> Result<GramLattice> {
    let norm = spec.replace('−', "-").replace('⟨', "<").replace('⟩', ">").replace('⊕', "+").replace('²', "^2");
    let norm: String = norm.chars().filter(|c| !c.is_whitespace()).collect();
    if norm.is_empty() {
        return Err(Error::LatticeSpec("empty lattice expression".into()));
    }
    let mut out: Option<GramLattice> = None;
    let bytes = norm.as_bytes();
    let mut pos = 0;
    let fail = |pos: usize, msg: &str| Error::LatticeSpec(format!("{msg} at {pos} in {spec:?}"));
    loop {
        let (block, name) = if norm[pos..].starts_with("U") {
            pos += 1;
            (vec![vec![0, 1], vec![1, 0]], "U".to_string())
        } else if norm[pos..].starts_with("E8(-1)") {
            pos += 6;
            let m = e8_cartan().iter().map(|r| r.iter().map(|x| -x).collect()).collect();
            (m, "E8".to_string())
        } else if norm[pos..].starts_with('<') {
            let end = norm[pos..].find('>').ok_or_else(|| fail(pos, "unclosed <"))? + pos;
            let n: i64 = norm[pos + 1..end].parse().map_err(|_| fail(pos, "bad integer"))?;
            if n == 0 {
                return Err(fail(pos, "<0> is degenerate"));
            }
            pos = end + 1;
            (vec![vec![n]], format!("<{n}>"))
        } else {
            return Err(fail(pos, "expected U, E8(-1) or <n>"));
        };
        let mut reps = 1usize;
        if pos < bytes.len() && bytes[pos] == b'^' {
            pos += 1;
            let braced = norm[pos..].starts_with("{+");
            if braced {
                pos += 2;
            }
            let start = pos;
            while pos < bytes.len() && bytes[pos].is_ascii_digit() {
                pos += 1;
            }
            reps = norm[start..pos].parse().map_err(|_| fail(start, "bad exponent"))?;
            if braced {
                if pos >= bytes.len() || bytes[pos] != b'}' {
                    return Err(fail(pos, "expected }"));
                }
                pos += 1;
            }
            if reps == 0 {
                return Err(fail(start, "zero exponent"));
            }
        }
        for r in 0..reps {
            let n = block.len();
            let labels = (0..n).map(|i| format!("{name}.{r}.{i}")).collect();
            let b = GramLattice::new(labels, block.clone());
            out = Some(match out {
                None => b,
                Some(acc) => acc.direct_sum(&b),
            });
        }
        if pos == bytes.len() {
            break;
        }
        if bytes[pos] != b'+' {
            return Err(fail(pos, "expected ⊕"));
        }
        pos += 1;
    }
    Ok(out.unwrap())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct RankSignature {
    pub rank: usize,
    pub positive: usize,
    pub negative: usize,
    pub zero: usize,
}

/// Rank and signature by rational congruence diagonalization.
pub fn rank_signature(l: &GramLattice) -> RankSignature {
    let n = l.dim();
    let mut a: Vec<Vec<Rat>> =
        l.gram.iter().map(|r| r.iter().map(|&x| Rat::from_integer(x.into())).collect()).collect();
    let (mut pos, mut neg) = (0, 0);
    let mut k = 0;
    while k < n {
        let piv = (k..n).find(|&i| !a[i][i].is_zero());
        let piv = match piv {
            Some(p) => p,
            None => {
                let off = (k..n).flat_map(|i| (k..n).map(move |j| (i, j))).find(|&(i, j)| !a[i][j].is_zero());
                let Some((i, j)) = off else { break };
                // e_i += e_j makes the diagonal entry 2 a_ij
                for c in 0..n {
                    let t = a[j][c].clone();
                    a[i][c] += t;
                }
                for r in 0..n {
                    let t = a[r][j].clone();
                    a[r][i] += t;
                }
                i
            }
        };
        a.swap(piv, k);
        for row in a.iter_mut() {
            row.swap(piv, k);
        }
        let d = a[k][k].clone();
        if d.is_positive() {
            pos += 1;
        } else {
            neg += 1;
        }
        for r in k + 1..n {
            if a[r][k].is_zero() {
                continue;
            }
            let f = &a[r][k] / &d;
            for c in k..n {
                let t = &f * &a[k][c];
                a[r][c] -= t;
            }
            for rr in k..n {
                let t = &f * &a[rr][k];
                a[rr][r] -= t;
            }
        }
        k += 1;
    }
    RankSignature { rank: pos + neg, positive: pos, negative: neg, zero: n - pos - neg }
}

/// Column reduction `G V = [H | 0]` with `V` unimodular; returns `V` and the rank.
fn column_echelon(g: &[Vec<BigInt>]) -> (Vec<Vec<BigInt>>, usize) {
    let rows = g.len();
    let n = g.first().map_or(0, |r| r.len());
    let mut m: Vec<Vec<BigInt>> = g.to_vec();
    let mut v: Vec<Vec<BigInt>> = (0..n).map(|i| (0..n).map(|j| BigInt::from((i == j) as i64)).collect()).collect();
    let mut c = 0;
    for r in 0..rows {
        if c == n {
            break;
        }
        for j in c + 1..n {
            if m[r][j].is_zero() {
                continue;
            }
            let (a, b) = (m[r][c].clone(), m[r][j].clone());
            let eg = a.extended_gcd(&b);
            let (x, y) = (eg.x, eg.y);
            let (ag, bg) = (&a / &eg.gcd, &b / &eg.gcd);
            // [col_c, col_j] <- [x col_c + y col_j, -bg col_c + ag col_j]
            let combine = |mat: &mut Vec<Vec<BigInt>>| {
                for row in mat.iter_mut() {
                    let (p, q) = (row[c].clone(), row[j].clone());
                    row[c] = &x * &p + &y * &q;
                    row[j] = &ag * &q - &bg * &p;
                }
            };
            combine(&mut m);
            combine(&mut v);
        }
        if !m[r][c].is_zero() {
            c += 1;
        }
    }
    (v, c)
}

/// The induced nondegenerate lattice on `Zⁿ / ker G`.
pub fn radical_quotient(l: &GramLattice) -> GramLattice {
    let (v, r) = column_echelon(&l.big());
    if r == l.dim() {
        return l.clone();
    }
    let p: Vec<Vec<i64>> =
        v.iter().map(|row| row[..r].iter().map(|x| x.to_i64().expect("entry overflow")).collect()).collect();
    if r == 0 {
        return GramLattice::unlabeled(vec![]);
    }
    l.transform(&p)
}

/// Integer kernel basis of the Gram map (saturated).
pub fn kernel_basis(l: &GramLattice) -> Vec<Vec<i64>> {
    let (v, r) = column_echelon(&l.big());
    (r..l.dim()).map(|c| v.iter().map(|row| row[c].to_i64().unwrap()).collect()).collect()
}

pub fn determinant(l: &GramLattice) -> BigInt {
    crate::exactmath::elim::det_integer(l.big())
}

/// Smith form `U G V = D`; returns the diagonal and `V`.
pub fn smith_normal_form(g: &[Vec<BigInt>]) -> (Vec<BigInt>, Vec<Vec<BigInt>>) {
    let n = g.len();
    let mut m: Vec<Vec<BigInt>> = g.to_vec();
    let mut v: Vec<Vec<BigInt>> = (0..n).map(|i| (0..n).map(|j| BigInt::from((i == j) as i64)).collect()).collect();
    let swap_cols = |mat: &mut Vec<Vec<BigInt>>, a: usize, b: usize| {
        for row in mat.iter_mut() {
            row.swap(a, b);
        }
    };
    for t in 0..n {
        loop {
            let best = (t..n)
                .flat_map(|i| (t..n).map(move |j| (i, j)))
                .filter(|&(i, j)| !m[i][j].is_zero())
                .min_by(|&(a, b), &(c, d)| m[a][b].abs().cmp(&m[c][d].abs()));
            let Some((i, j)) = best else { break };
            m.swap(t, i);
            swap_cols(&mut m, t, j);
            swap_cols(&mut v, t, j);
            let mut dirty = false;
            for i in t + 1..n {
                if m[i][t].is_zero() {
                    continue;
                }
                let q = m[i][t].div_floor(&m[t][t]);
                for c in t..n {
                    let s = &q * &m[t][c];
                    m[i][c] -= s;
                }
                dirty |= !m[i][t].is_zero();
            }
            for j in t + 1..n {
                if m[t][j].is_zero() {
                    continue;
                }
                let q = m[t][j].div_floor(&m[t][t]);
                for r in 0..n {
                    let s = &q * &m[r][t];
                    m[r][j] -= s;
                    let s = &q * &v[r][t];
                    v[r][j] -= s;
                }
                dirty |= !m[t][j].is_zero();
            }
            if dirty {
                continue;
            }
            let bad = (t + 1..n).find(|&i| (t + 1..n).any(|j| !m[i][j].is_multiple_of(&m[t][t])));
            match bad {
                Some(i) => {
                    for c in t..n {
                        let s = m[i][c].clone();
                        m[t][c] += s;
                    }
                }
                None => break,
            }
        }
    }
    let d = (0..n).map(|i| m[i][i].clone()).collect();
    (d, v)
}

/// Finite quadratic form on the discriminant group.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct DiscForm {
    pub orders: Vec<u64>,
    /// q on generators, in [0, 2)
    #[serde(serialize_with = "ser_rats")]
    pub q: Vec<Rat>,
    /// b on pairs of generators, in [0, 1)
    #[serde(serialize_with = "ser_rat_matrix")]
    pub b: Vec<Vec<Rat>>,
}

fn ser_rats<S: serde::Serializer>(v: &[Rat], s: S) -> std::result::Result<S::Ok, S::Error> {
    v.iter().map(rat_string).collect::<Vec<_>>().serialize(s)
}

fn ser_rat_matrix<S: serde::Serializer>(v: &[Vec<Rat>], s: S) -> std::result::Result<S::Ok, S::Error> {
    v.iter().map(|r| r.iter().map(rat_string).collect::<Vec<_>>()).collect::<Vec<_>>().serialize(s)
}

fn frac_mod(x: &Rat, m: i64) -> Rat {
    let m = Rat::from_integer(m.into());
    let k = (x / &m).floor();
    x - k * m
}

impl DiscForm {
    pub fn order(&self) -> u64 {
        self.orders.iter().product()
    }

    /// The form `−q`, as carried by an orthogonal complement in a unimodular lattice.
    pub fn negated(&self) -> DiscForm {
        DiscForm {
            orders: self.orders.clone(),
            q: self.q.iter().map(|x| frac_mod(&-x, 2)).collect(),
            b: self.b.iter().map(|r| r.iter().map(|x| frac_mod(&-x, 1)).collect()).collect(),
        }
    }

    fn elements(&self) -> Vec<Vec<u64>> {
        let mut out = vec![vec![]];
        for &d in &self.orders {
            out = out.into_iter().flat_map(|v| (0..d).map(move |k| [v.clone(), vec![k]].concat())).collect();
        }
        out
    }

    fn q_of(&self, x: &[u64]) -> Rat {
        let mut acc = Rat::zero();
        for i in 0..x.len() {
            let xi = Rat::from_integer(x[i].into());
            acc += &xi * &xi * &self.q[i];
            for j in i + 1..x.len() {
                acc += Rat::from_integer((2 * x[i] * x[j]).into()) * &self.b[i][j];
            }
        }
        frac_mod(&acc, 2)
    }

    fn b_of(&self, x: &[u64], y: &[u64]) -> Rat {
        let mut acc = Rat::zero();
        for i in 0..x.len() {
            for j in 0..y.len() {
                acc += Rat::from_integer((x[i] * y[j]).into()) * &self.b[i][j];
            }
        }
        frac_mod(&acc, 1)
    }

    fn elem_order(&self, x: &[u64]) -> u64 {
        x.iter().zip(&self.orders).map(|(&k, &d)| d / k.gcd(&d)).fold(1, |a, b| a.lcm(&b))
    }
}

/// Whether two finite quadratic forms are isometric (brute force over generator images).
pub fn forms_isomorphic(a: &DiscForm, b: &DiscForm) -> bool {
    if a.order() != b.order() {
        return false;
    }
    let mut sa = a.orders.clone();
    let mut sb = b.orders.clone();
    sa.sort();
    sb.sort();
    if sa != sb {
        return false;
    }
    if a.orders.is_empty() {
        return true;
    }
    let elems = b.elements();
    let cands: Vec<Vec<&Vec<u64>>> = (0..a.orders.len())
        .map(|i| elems.iter().filter(|e| b.elem_order(e) == a.orders[i] && b.q_of(e) == a.q[i]).collect())
        .collect();
    let mut chosen: Vec<&Vec<u64>> = Vec::new();
    search(a, b, &cands, &mut chosen)
}

fn search<'a>(a: &DiscForm, b: &DiscForm, cands: &[Vec<&'a Vec<u64>>], chosen: &mut Vec<&'a Vec<u64>>) -> bool {
    let i = chosen.len();
    if i == cands.len() {
        return generates(b, chosen);
    }
    for &c in &cands[i] {
        if (0..i).all(|j| b.b_of(chosen[j], c) == a.b[j][i]) {
            chosen.push(c);
            if search(a, b, cands, chosen) {
                return true;
            }
            chosen.pop();
        }
    }
    false
}

fn generates(b: &DiscForm, gens: &[&Vec<u64>]) -> bool {
    let n = b.orders.len();
    let mut seen = std::collections::HashSet::new();
    let mut frontier = vec![vec![0u64; n]];
    seen.insert(vec![0u64; n]);
    while let Some(x) = frontier.pop() {
        for g in gens {
            let y: Vec<u64> = (0..n).map(|k| (x[k] + g[k]) % b.orders[k]).collect();
            if seen.insert(y.clone()) {
                frontier.push(y);
            }
        }
    }
    seen.len() as u64 == b.order()
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct LatticeInvariants {
    pub rank: usize,
    pub signature: (usize, usize, usize),
    pub invariant_factors: Vec<u64>,
    pub disc_form: DiscForm,
}

impl LatticeInvariants {
    pub fn abs_det(&self) -> u64 {
        self.invariant_factors.iter().product()
    }
}

/// Discriminant group and form of a nondegenerate even lattice.
pub fn discriminant_group_form(l: &GramLattice) -> Result<LatticeInvariants> {
    let rs = rank_signature(l);
    if rs.zero > 0 {
        return Err(Error::Degenerate);
    }
    if !l.is_even() {
        return Err(Error::OddLattice);
    }
    let g = l.big();
    let (d, v) = smith_normal_form(&g);
    let n = l.dim();
    let mut orders = Vec::new();
    let mut gens: Vec<Vec<Rat>> = Vec::new();
    let mut idx: Vec<usize> = (0..n).filter(|&i| d[i].abs() > BigInt::one()).collect();
    idx.sort_by(|&a, &b| d[a].abs().cmp(&d[b].abs()));
    for i in idx {
        orders.push(d[i].abs().to_u64().expect("huge invariant factor"));
        gens.push((0..n).map(|r| Rat::new(v[r][i].clone(), d[i].clone())).collect());
    }
    let pair = |x: &[Rat], y: &[Rat]| -> Rat {
        let mut acc = Rat::zero();
        for i in 0..n {
            if x[i].is_zero() {
                continue;
            }
            for j in 0..n {
                if l.gram[i][j] != 0 {
                    acc += &x[i] * &y[j] * Rat::from_integer(l.gram[i][j].into());
                }
            }
        }
        acc
    };
    let q = gens.iter().map(|x| frac_mod(&pair(x, x), 2)).collect();
    let b = gens.iter().map(|x| gens.iter().map(|y| frac_mod(&pair(x, y), 1)).collect()).collect();
    Ok(LatticeInvariants {
        rank: rs.rank,
        signature: (rs.positive, rs.negative, rs.zero),
        invariant_factors: orders.clone(),
        disc_form: DiscForm { orders, q, b },
    })
}

/// Fingerprint of any even lattice, after passing to the radical quotient.
pub fn fingerprint(l: &GramLattice) -> Result<LatticeInvariants> {
    discriminant_group_form(&radical_quotient(l))
}

/// Same rank, signature, discriminant group, and isometric discriminant forms.
pub fn invariants_match(a: &GramLattice, b: &GramLattice) -> Result<bool> {
    Ok(fingerprints_match(&fingerprint(a)?, &fingerprint(b)?))
}

pub fn fingerprints_match(a: &LatticeInvariants, b: &LatticeInvariants) -> bool {
    a.rank == b.rank
        && a.signature == b.signature
        && a.invariant_factors == b.invariant_factors
        && forms_isomorphic(&a.disc_form, &b.disc_form)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn u_and_e8() {
        let u = standard_lattice("U").unwrap();
        assert_eq!(u.gram, vec![vec![0, 1], vec![1, 0]]);
        let rs = rank_signature(&u);
        assert_eq!((rs.rank, rs.positive, rs.negative, rs.zero), (2, 1, 1, 0));
        let e8 = standard_lattice("E8(-1)").unwrap();
        let rs = rank_signature(&e8);
        assert_eq!((rs.rank, rs.positive, rs.negative, rs.zero), (8, 0, 8, 0));
        assert_eq!(determinant(&e8), BigInt::from(1));
        assert!(discriminant_group_form(&u).unwrap().invariant_factors.is_empty());
    }

    #[test]
    fn spec_forms() {
        let a = standard_lattice("U⊕E8(−1)^{⊕2}⊕⟨−12⟩").unwrap();
        assert_eq!(a.dim(), 19);
        assert_eq!(determinant(&a).abs(), BigInt::from(12));
        let b = standard_lattice("U + E8(-1)^2 + <-12>").unwrap();
        assert_eq!(a.gram, b.gram);
        assert_eq!(standard_lattice("<2>+<4>").unwrap().gram, vec![vec![2, 0], vec![0, 4]]);
        assert!(standard_lattice("U+").is_err());
        assert!(standard_lattice("V").is_err());
    }

    #[test]
    fn minus_twelve() {
        let l = standard_lattice("<-12>").unwrap();
        let inv = discriminant_group_form(&l).unwrap();
        assert_eq!(inv.invariant_factors, vec![12]);
        assert_eq!(inv.disc_form.q[0], frac_mod(&Rat::new((-1).into(), 12.into()), 2));
    }

    #[test]
    fn radical() {
        let l = GramLattice::unlabeled(vec![vec![2, 0], vec![0, 0]]);
        assert_eq!(radical_quotient(&l).gram, vec![vec![2]]);
        let l = GramLattice::unlabeled(vec![vec![2, 2], vec![2, 2]]);
        assert_eq!(radical_quotient(&l).gram, vec![vec![2]]);
        assert_eq!(kernel_basis(&l).len(), 1);
    }

    #[test]
    fn mismatch() {
        let u = standard_lattice("U").unwrap();
        let d = standard_lattice("<2>+<-2>").unwrap();
        assert!(!invariants_match(&u, &d).unwrap());
        assert!(invariants_match(&u, &u).unwrap());
    }

    #[test]
    fn twelve_versus_its_negative() {
        // <12> and <-12> have non-isometric forms; U+<12> and <-12>'s negation agree
        let p = standard_lattice("<12>").unwrap();
        let m = standard_lattice("<-12>").unwrap();
        let fp = discriminant_group_form(&p).unwrap();
        let fm = discriminant_group_form(&m).unwrap();
        assert!(!forms_isomorphic(&fp.disc_form, &fm.disc_form));
        assert!(forms_isomorphic(&fp.disc_form, &fm.disc_form.negated()));
    }

    #[test]
    fn odd_rejected() {
        let l = standard_lattice("<3>").unwrap();
        assert!(matches!(discriminant_group_form(&l), Err(Error::OddLattice)));
    }
}
