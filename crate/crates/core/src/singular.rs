//! Singular loci, A_k classification and local intersection numbers.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactmath::elim::{certify_projective, normalize_point, ElimField};
use crate::exactmath::ops::{bivariate_gcd, to_rat_poly};
use crate::exactmath::{Field, FieldElem, MPoly, Poly, Rat};

/// A point of (weighted) projective space.
#[derive(Clone, Debug)]
pub struct ProjPoint {
    pub coords: Vec<FieldElem>,
    pub weights: Vec<u32>,
}

impl ProjPoint {
    pub fn new(coords: Vec<FieldElem>) -> Self {
        assert!(coords.iter().any(|c| !c.is_zero()), "all coordinates zero");
        let weights = vec![1; coords.len()];
        ProjPoint { coords, weights }
    }

    pub fn from_ints(c: &[i64]) -> Self {
        Self::new(c.iter().map(|&x| FieldElem::from_int(x)).collect())
    }

    pub fn weighted(coords: Vec<FieldElem>, weights: Vec<u32>) -> Self {
        assert_eq!(coords.len(), weights.len());
        ProjPoint { coords, weights }
    }

    /// Representative with first nonzero coordinate 1 (unit weights only).
    pub fn normalized(&self) -> Vec<FieldElem> {
        normalize_point(&self.coords)
    }

    pub fn same_point(&self, o: &ProjPoint) -> bool {
        if self.weights.iter().all(|&w| w == 1) && o.weights.iter().all(|&w| w == 1) {
            return self.coords.len() == o.coords.len() && self.normalized() == o.normalized();
        }
        self.coords == o.coords && self.weights == o.weights
    }

    pub fn rational_coords(&self) -> Option<Vec<Rat>> {
        self.coords.iter().map(|c| c.as_rat()).collect()
    }

    pub fn strings(&self) -> Vec<String> {
        self.coords.iter().map(|c| c.to_string()).collect()
    }
}

impl fmt::Display for ProjPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.strings().join(":"))
    }
}

impl Serialize for ProjPoint {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.strings().serialize(s)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SingularLocusReport {
    /// Each candidate with whether all partials vanish there.
    pub confirmed: Vec<(ProjPoint, bool)>,
    pub complete: bool,
    pub witness: Option<String>,
    pub eliminant_degrees: Vec<Vec<u32>>,
    /// Parameter values where the generic certificate does not apply.
    pub bad_parameter_values: Vec<String>,
}

impl SingularLocusReport {
    pub fn pass(&self) -> bool {
        self.complete && self.confirmed.iter().all(|(_, ok)| *ok)
    }
}

/// Check each candidate is singular and that there are no other singular points.
pub fn verify_singular_locus(f: &Poly, candidates: &[ProjPoint]) -> Result<SingularLocusReport> {
    if !f.is_homogeneous() {
        return Err(Error::NotHomogeneous);
    }
    let grad = f.gradient();
    let confirmed: Vec<(ProjPoint, bool)> =
        candidates.iter().map(|p| (p.clone(), grad.iter().all(|g| g.eval(&p.coords).is_zero()))).collect();
    let good: Vec<Vec<FieldElem>> = confirmed.iter().filter(|(_, ok)| *ok).map(|(p, _)| p.coords.clone()).collect();
    // rational data runs over ℚ, which is much faster
    let rat_grad: Option<Vec<MPoly<Rat>>> = grad.iter().map(|g| to_rat_poly(g).ok()).collect();
    let rat_pts: Option<Vec<Vec<Rat>>> = good.iter().map(|p| p.iter().map(|c| c.as_rat()).collect()).collect();
    let cert = match (rat_grad, rat_pts) {
        (Some(g), Some(p)) => certify_projective(&g, &p)?,
        _ => certify_projective(&grad, &good)?,
    };
    Ok(SingularLocusReport {
        confirmed,
        complete: cert.complete,
        witness: cert.witness,
        eliminant_degrees: cert.eliminant_degrees,
        bad_parameter_values: cert.bad_parameter_values.iter().map(crate::exactmath::rat_string).collect(),
    })
}

/// Generic form for polynomials over any tower field.
pub fn certify_locus<F: ElimField>(f: &MPoly<F>, candidates: &[Vec<F>]) -> Result<bool> {
    Ok(certify_projective(&f.gradient(), candidates)?.complete)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SingularityReport {
    pub point: Vec<String>,
    /// The k of A_k.
    pub k: u32,
    pub milnor_number: u32,
}

impl SingularityReport {
    pub fn type_name(&self) -> String {
        format!("A{}", self.k)
    }
}

pub const DEFAULT_JET_ORDER: u32 = 10;

/// Jet bound, overridable with `K3PENCIL_JET_ORDER`.
pub fn jet_order() -> u32 {
    std::env::var("K3PENCIL_JET_ORDER").ok().and_then(|v| v.parse().ok()).unwrap_or(DEFAULT_JET_ORDER)
}

/// Classify an isolated critical point of type A_k.
pub fn milnor_ade_classify<F: Field>(f: &MPoly<F>, point: &[F]) -> Result<SingularityReport> {
    milnor_ade_classify_with(f, point, jet_order())
}

/// Classify a point of a projective hypersurface in the affine chart of its
/// last nonzero coordinate.
pub fn classify_projective(f: &Poly, p: &ProjPoint) -> Result<SingularityReport> {
    let j = (0..p.coords.len()).rev().find(|&j| !p.coords[j].is_zero()).unwrap();
    let inv = p.coords[j].inv();
    let affine: Vec<FieldElem> = (0..p.coords.len()).filter(|&k| k != j).map(|k| p.coords[k].mul(&inv)).collect();
    let mut r = milnor_ade_classify(&f.dehomogenize(j), &affine)?;
    r.point = p.strings();
    Ok(r)
}

pub fn milnor_ade_classify_with<F: Field>(f: &MPoly<F>, point: &[F], jet: u32) -> Result<SingularityReport> {
    let k = a_index(f, point, jet)?;
    Ok(SingularityReport { point: point.iter().map(|c| c.to_string()).collect(), k, milnor_number: k })
}

fn a_index<F: Field>(f: &MPoly<F>, point: &[F], jet: u32) -> Result<u32> {
    let n = f.nvars();
    let vs = f.vars().clone();
    let mut g = f.translate(point).truncate(jet);
    if !g.constant_term().is_zero() {
        return Err(Error::Other("critical value is not 0".into()));
    }
    if g.order().is_some_and(|o| o < 2) {
        return Err(Error::Other("point is not critical".into()));
    }
    let mut active: Vec<usize> = (0..n).collect();
    loop {
        let q = g.homogeneous_part(2);
        if q.is_zero() || active.is_empty() {
            break;
        }
        let sq = |g: &MPoly<F>, i: usize| {
            let mut e = vec![0; n];
            e[i] = 2;
            g.coeff(&e)
        };
        let pick = active.iter().copied().find(|&i| !sq(&g, i).is_zero());
        let i = match pick {
            Some(i) => i,
            None => {
                // only cross terms: shear x_a ↦ x_a + x_b
                let (a, b) = active
                    .iter()
                    .flat_map(|&a| active.iter().map(move |&b| (a, b)))
                    .find(|&(a, b)| {
                        a < b && {
                            let mut e = vec![0; n];
                            e[a] = 1;
                            e[b] = 1;
                            !q.coeff(&e).is_zero()
                        }
                    })
                    .expect("nonzero quadratic part has a term");
                let images: Vec<MPoly<F>> = (0..n)
                    .map(|j| if j == a { MPoly::var(&vs, a).add(&MPoly::var(&vs, b)) } else { MPoly::var(&vs, j) })
                    .collect();
                g = g.compose_trunc(&images, jet);
                b
            }
        };
        // solve ∂g/∂x_i = 0 for x_i as a power series in the others
        let two_a = sq(&g, i).mul(&F::from_int(2));
        let inv = two_a.inv();
        let dg = g.derivative(i);
        let xi = MPoly::var(&vs, i);
        let mut phi = MPoly::zero(&vs);
        for _ in 0..=jet {
            let mut images: Vec<MPoly<F>> = (0..n).map(|j| MPoly::var(&vs, j)).collect();
            images[i] = phi.clone();
            // x_i = −(∂g/∂x_i − 2a·x_i)/(2a) evaluated at x_i = φ
            let rest = dg.sub(&xi.scale(&two_a));
            let next = rest.compose_trunc(&images, jet).scale(&inv.neg());
            if next == phi {
                break;
            }
            phi = next;
        }
        let mut images: Vec<MPoly<F>> = (0..n).map(|j| MPoly::var(&vs, j)).collect();
        images[i] = phi;
        g = g.compose_trunc(&images, jet);
        active.retain(|&j| j != i);
    }
    match active.len() {
        0 => Ok(1),
        1 => match g.order() {
            Some(m) => Ok(m - 1),
            None => Err(Error::JetOrderExceeded(jet)),
        },
        r => Err(Error::NotTypeA(r)),
    }
}

/// A_{2n−1} from branch contact order n.
pub fn branch_ade_type(contact: u32) -> Result<u32> {
    if contact == 0 {
        return Err(Error::NoSingularity);
    }
    Ok(2 * contact - 1)
}

/// I_P(F, G) for plane curves given by ternary forms.
pub fn intersection_multiplicity<F: Field>(f: &MPoly<F>, g: &MPoly<F>, p: &[F]) -> Result<u32> {
    if f.nvars() != 3 || g.nvars() != 3 {
        return Err(Error::Other("plane curves need three homogeneous variables".into()));
    }
    let j = (0..3).rev().find(|&j| !p[j].is_zero()).expect("zero point");
    let inv = p[j].inv();
    let shift: Vec<F> = (0..3).filter(|&k| k != j).map(|k| p[k].mul(&inv)).collect();
    let fa = f.dehomogenize(j).translate(&shift);
    let ga = g.dehomogenize(j).translate(&shift);
    intersection_at_origin(&fa, &ga)
}

/// Fulton's algorithm at the origin for two affine plane curves.
pub fn intersection_at_origin<F: Field>(f: &MPoly<F>, g: &MPoly<F>) -> Result<u32> {
    let h = bivariate_gcd(f, g);
    let (mut f, mut g) = (f.clone(), g.clone());
    if h.total_degree().unwrap_or(0) > 0 {
        if h.constant_term().is_zero() {
            return Err(Error::InfiniteIntersection);
        }
        f = f.div_exact(&h).unwrap();
        g = g.div_exact(&h).unwrap();
    }
    let vs = f.vars().clone();
    let y = MPoly::var(&vs, 1);
    let mut acc = 0u32;
    for _ in 0..100_000 {
        if !f.constant_term().is_zero() || !g.constant_term().is_zero() {
            return Ok(acc);
        }
        let fx = f.eval_var(1, &F::zero()).to_upoly(0)?;
        let gx = g.eval_var(1, &F::zero()).to_upoly(0)?;
        match (fx.is_zero(), gx.is_zero()) {
            (true, true) => return Err(Error::InfiniteIntersection),
            (true, false) => {
                acc += lowest_degree(gx.coeffs());
                f = f.div_exact(&y).unwrap();
            }
            (false, true) => {
                acc += lowest_degree(fx.coeffs());
                g = g.div_exact(&y).unwrap();
            }
            (false, false) => {
                let (r, s) = (fx.degree().unwrap(), gx.degree().unwrap());
                if r > s {
                    std::mem::swap(&mut f, &mut g);
                    let (fx2, gx2) = (gx, fx);
                    let shift = MPoly::var(&vs, 0).pow((r - s) as u32);
                    g = g.scale(&fx2.lc()).sub(&shift.mul(&f).scale(&gx2.lc()));
                } else {
                    let shift = MPoly::var(&vs, 0).pow((s - r) as u32);
                    g = g.scale(&fx.lc()).sub(&shift.mul(&f).scale(&gx.lc()));
                }
            }
        }
    }
    Err(Error::Other("intersection multiplicity did not terminate".into()))
}

fn lowest_degree<F: Field>(c: &[F]) -> u32 {
    c.iter().position(|x| !x.is_zero()).unwrap_or(0) as u32
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::parse::parse_rat_poly;
    use crate::exactmath::{rat_int, vars};

    fn r(n: i64) -> Rat {
        rat_int(n)
    }

    #[test]
    fn morse_point() {
        let v = vars(&["x", "y", "z"]);
        let f = parse_rat_poly("x^2+y^2+z^2", &v).unwrap();
        assert_eq!(milnor_ade_classify(&f, &[r(0), r(0), r(0)]).unwrap().k, 1);
    }

    #[test]
    fn a_k_normal_forms() {
        let v = vars(&["x", "y", "z"]);
        for k in 1..=7u32 {
            let f = parse_rat_poly(&format!("x^2+y^2+z^{}", k + 1), &v).unwrap();
            assert_eq!(milnor_ade_classify(&f, &[r(0), r(0), r(0)]).unwrap().k, k);
        }
        // hidden by a shear and a cross term
        let g = parse_rat_poly("x*y+z^4+x^3", &v).unwrap();
        assert_eq!(milnor_ade_classify(&g, &[r(0), r(0), r(0)]).unwrap().k, 3);
        // curve cusp y^2 = x^3 is A2
        let c = parse_rat_poly("y^2-x^3", &vars(&["x", "y"])).unwrap();
        assert_eq!(milnor_ade_classify(&c, &[r(0), r(0)]).unwrap().k, 2);
    }

    #[test]
    fn corank_two_rejected() {
        let v = vars(&["x", "y", "z"]);
        let f = parse_rat_poly("x^2+y^3+z^3", &v).unwrap();
        assert_eq!(milnor_ade_classify(&f, &[r(0), r(0), r(0)]), Err(Error::NotTypeA(2)));
        let g = parse_rat_poly("x^2+y^2+z^12", &v).unwrap();
        assert_eq!(milnor_ade_classify(&g, &[r(0), r(0), r(0)]), Err(Error::JetOrderExceeded(10)));
    }

    #[test]
    fn fulton_basics() {
        let v = vars(&["x", "y", "z"]);
        let x = parse_rat_poly("x", &v).unwrap();
        let y = parse_rat_poly("y", &v).unwrap();
        let o = [r(0), r(0), r(1)];
        assert_eq!(intersection_multiplicity(&x, &y, &o).unwrap(), 1);
        let par = parse_rat_poly("y*z-x^2", &v).unwrap();
        assert_eq!(intersection_multiplicity(&par, &y, &o).unwrap(), 2);
        let cusp = parse_rat_poly("y^2*z-x^3", &v).unwrap();
        assert_eq!(intersection_multiplicity(&cusp, &y, &o).unwrap(), 3);
        assert_eq!(intersection_multiplicity(&cusp, &x, &o).unwrap(), 2);
        assert_eq!(intersection_multiplicity(&par.mul(&x), &par, &o), Err(Error::InfiniteIntersection));
        // common component away from the point is harmless
        let far = parse_rat_poly("x-z", &v).unwrap();
        assert_eq!(intersection_multiplicity(&far.mul(&y), &far.mul(&x), &o).unwrap(), 1);
    }

    #[test]
    fn branch_types() {
        assert_eq!(branch_ade_type(3).unwrap(), 5);
        assert_eq!(branch_ade_type(1).unwrap(), 1);
        assert_eq!(branch_ade_type(2).unwrap(), 3);
        assert!(branch_ade_type(0).is_err());
    }
}
