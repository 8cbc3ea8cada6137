//! Closed-form identities between the surface models, checked symbolically.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use crate::error::Result;
use crate::exactmath::ops::substitute_frac;
use crate::exactmath::parse::parse_poly;
use crate::exactmath::{rat_int, rat_string, substitute, Ext, Field, FieldElem, Frac, Poly, Vars};
use crate::pencil::{quartic_q_affine, r_surface, uvw, xyz};
use crate::report::Status;

#[derive(Clone, Debug, Serialize)]
pub struct Spot {
    pub point: String,
    pub lhs: String,
    pub rhs: String,
    pub pass: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct IdentityCheck {
    pub id: String,
    pub lhs: (String, String),
    pub rhs: (String, String),
    pub status: Status,
    /// `lhs.num·rhs.den − rhs.num·lhs.den`
    pub residual: String,
    /// denominators that must not vanish
    pub excluded: Vec<String>,
    pub spots: Vec<Spot>,
    pub notes: Vec<String>,
    #[serde(skip)]
    pub residual_poly: Option<Poly>,
}

fn p(src: &str, v: &Vars) -> Poly {
    parse_poly(src, v, Ext::None).unwrap()
}

fn fr(num: &str, den: &str, v: &Vars) -> Frac<FieldElem> {
    Frac::new(p(num, v), p(den, v))
}

fn check(id: &str, lhs: &Frac<FieldElem>, rhs: &Frac<FieldElem>) -> IdentityCheck {
    let r = lhs.residual(rhs);
    IdentityCheck {
        id: id.into(),
        lhs: (lhs.num().to_string(), lhs.den().to_string()),
        rhs: (rhs.num().to_string(), rhs.den().to_string()),
        status: Status::from_bool(r.is_zero()),
        residual: r.to_string(),
        excluded: Vec::new(),
        spots: Vec::new(),
        notes: Vec::new(),
        residual_poly: Some(r),
    }
}

fn spot(f: &Frac<FieldElem>, g: &Frac<FieldElem>, pt: &[i64]) -> Spot {
    let x: Vec<FieldElem> = pt.iter().map(|&c| FieldElem::from_int(c)).collect();
    let show = |r: Result<FieldElem>| r.map(|v| v.to_string()).unwrap_or_else(|_| "pole".into());
    let (a, b) = (f.eval(&x), g.eval(&x));
    let pass = matches!((&a, &b), (Ok(a), Ok(b)) if a == b);
    Spot { point: format!("{pt:?}"), lhs: show(a), rhs: show(b), pass }
}

/// `x + 1/x + y + 1/y + z + 1/z`.
pub fn laurent_f() -> Frac<FieldElem> {
    let v = xyz();
    ["x", "y", "z"].iter().map(|t| fr(&format!("{t}^2+1"), t, &v)).reduce(|a, b| a.add(&b)).unwrap()
}

/// `1/(x²−1) + 1/(y²−1) + 1/(z²−1)`.
pub fn g_sum() -> Frac<FieldElem> {
    let v = xyz();
    ["x", "y", "z"].iter().map(|t| fr("1", &format!("{t}^2-1"), &v)).reduce(|a, b| a.add(&b)).unwrap()
}

/// `t ↦ (1+t)/(1−t)` on each coordinate.
pub fn cayley_bindings() -> BTreeMap<String, (Poly, Poly)> {
    let v = xyz();
    ["x", "y", "z"].iter().map(|t| (t.to_string(), (p(&format!("1+{t}"), &v), p(&format!("1-{t}"), &v)))).collect()
}

fn cayley_g() -> Frac<FieldElem> {
    substitute_frac(&g_sum(), &cayley_bindings(), &xyz()).unwrap()
}

fn constant(c: i64) -> Frac<FieldElem> {
    Frac::constant(&xyz(), FieldElem::from_int(c))
}

pub fn remarkable_identity_check() -> IdentityCheck {
    let lhs = cayley_g().scale(&FieldElem::from_int(4));
    let rhs = laurent_f().sub(&constant(6));
    let mut c = check("remarkable_identity", &lhs, &rhs);
    c.spots.push(spot(&lhs, &rhs, &[2, 3, 5]));
    // one-variable building block: 1/(((1+x)/(1−x))² − 1) = (1−x)²/(4x)
    let v = xyz();
    let one = substitute_frac(&fr("1", "x^2-1", &v), &cayley_bindings(), &v).unwrap();
    let block = fr("(1-x)^2", "4*x", &v);
    c.notes.push(format!("building block residual: {}", one.residual(&block)));
    if !one.equals(&block) {
        c.status = Status::Fail;
    }
    c.excluded = vec!["x*y*z".into(), "(1-x)*(1-y)*(1-z)".into()];
    c
}

pub fn mandelstam_surface_check() -> IdentityCheck {
    let v = xyz();
    let lhs = ["x", "y", "z"]
        .iter()
        .map(|t| fr(&format!("(1-{t})^2"), t, &v))
        .reduce(|a, b| a.add(&b))
        .unwrap()
        .add(&constant(4));
    let rhs = laurent_f().sub(&constant(2));
    let mut c = check("mandelstam_surface", &lhs, &rhs);
    c.spots.push(spot(&lhs, &rhs, &[1, 1, 1]));

    // 4·(1 + s + G∘cayley) against F − (2 − 4s)
    let s = Frac::from_poly(p("s", &v));
    let pencil = constant(1).add(&s).add(&cayley_g()).scale(&FieldElem::from_int(4));
    let target = laurent_f().sub(&Frac::from_poly(p("2-4*s", &v)));
    let r = pencil.residual(&target);
    c.notes.push(format!("pencil map 1+s+G=0 -> F=2-4s, residual: {r}"));
    // the other sign: (x,y,z) -> (-x,-y,-z) negates F
    let neg: BTreeMap<String, (Poly, Poly)> =
        ["x", "y", "z"].iter().map(|t| (t.to_string(), (p(&format!("-{t}"), &v), p("1", &v)))).collect();
    let fneg = substitute_frac(&laurent_f(), &neg, &v).unwrap();
    let r2 = fneg.residual(&laurent_f().neg());
    c.notes.push(format!("F(-x,-y,-z) = -F, residual: {r2}; so F=-(2-4s) is the negated fibre"));
    if !r.is_zero() || !r2.is_zero() {
        c.status = Status::Fail;
    }
    c.excluded = vec!["x*y*z".into()];
    c
}

pub fn q_surface_check() -> IdentityCheck {
    let v = xyz();
    let d = "x+y-4*x*y+x^2*y+x*y^2";
    let q2 = fr("(x+y)*(1+x*y)", d, &v);
    // z = (x+y)/Q
    let z2 = Frac::from_poly(p("(x+y)^2", &v)).try_div(&q2).unwrap();
    let lhs = z2.mul(&Frac::from_poly(p("1+x*y", &v)));
    let rhs = Frac::from_poly(p(&format!("(x+y)*({d})"), &v));
    let mut c = check("q_surface", &lhs, &rhs);
    c.excluded = vec![d.into(), "x+y".into(), "1+x*y".into()];

    let at = |x: i64, y: i64| vec![FieldElem::from_int(x), FieldElem::from_int(y), FieldElem::zero()];
    let dpoly = p(d, &v);
    let d11 = dpoly.eval(&at(1, 1));
    c.notes.push(format!("at (1,1): denominator {d} = {d11}, point excluded"));
    let z2_21 = z2.eval(&at(2, 1));
    let q = quartic_q_affine();
    let on_q = |zv: i64| q.eval(&[rat_int(2), rat_int(1), rat_int(zv)]);
    let ok21 = matches!(&z2_21, Ok(v) if *v == FieldElem::one()) && on_q(1) == rat_int(0) && on_q(-1) == rat_int(0);
    c.spots.push(Spot {
        point: "(2,1)".into(),
        lhs: z2_21.map(|v| format!("z^2 = {v}")).unwrap_or_else(|_| "pole".into()),
        rhs: format!("on Q at z=±1: {}", rat_string(&on_q(1)) == "0" && rat_string(&on_q(-1)) == "0"),
        pass: ok21,
    });
    if !d11.is_zero() || !ok21 {
        c.status = Status::Fail;
    }
    c
}

pub fn quartic_family_check() -> IdentityCheck {
    let v = xyz();
    let lhs = Frac::from_poly(p("x*y*z", &v)).mul(&laurent_f().sub(&Frac::from_poly(p("2-4*s", &v))));
    let printed = p("x^2*y*z+y*z+x*y^2*z+x*z+x*y*z^2+x*y-(2-4*s)*x*y*z", &v);
    let rhs = Frac::from_poly(printed.clone());
    let mut c = check("quartic_family", &lhs, &rhs);

    let s0 = crate::exactmath::specialize(&printed, &rat_int(0), &crate::exactmath::AlphaValue::Symbolic).unwrap();
    let at0 = Frac::from_poly(p("x*y*z", &v)).mul(&laurent_f().sub(&constant(2)));
    let r0 = at0.residual(&Frac::from_poly(s0));
    c.notes.push(format!("s=0 residual: {r0}"));

    // f(1/u,1/v,1/w)·(uvw)² against the reciprocal surface
    let w = uvw();
    let f = p("1-(x^2*y^2+y^2*z^2+z^2*x^2)+2*x^2*y^2*z^2", &v);
    let inv: BTreeMap<String, (Poly, Poly)> =
        [("x", "u"), ("y", "v"), ("z", "w")].iter().map(|(a, b)| (a.to_string(), (p("1", &w), p(b, &w)))).collect();
    let (num, den) = substitute(&f, &inv, &w).unwrap();
    let lhs_r = Frac::new(num, den).mul(&Frac::from_poly(p("u^2*v^2*w^2", &w)));
    let rhs_r = Frac::from_poly(p("u^2*v^2*w^2-u^2-v^2-w^2+2", &w));
    let r1 = lhs_r.residual(&rhs_r);
    c.notes.push(format!("reciprocal map residual: {r1}"));
    if !r0.is_zero() || !r1.is_zero() {
        c.status = Status::Fail;
    }
    c.excluded = vec!["x*y*z".into()];
    c
}

/// Signed permutation `(perm, signs)` acting by `t_i ↦ sign_i · t_{perm(i)}`.
pub type SignedPerm = ([usize; 3], [i64; 3]);

pub fn signed_permutations() -> Vec<SignedPerm> {
    let perms = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
    let mut out = Vec::new();
    for p in perms {
        for bits in 0..8 {
            let s = [0, 1, 2].map(|i| if bits >> i & 1 == 1 { -1 } else { 1 });
            out.push((p, s));
        }
    }
    out
}

pub fn symmetry_group_check() -> IdentityCheck {
    let w = uvw();
    let names = ["u", "v", "w"];
    let r = r_surface();
    let mut failures = Vec::new();
    let mut images = BTreeSet::new();
    let elems = signed_permutations();
    for (perm, sg) in &elems {
        let b: BTreeMap<String, (Poly, Poly)> = (0..3)
            .map(|i| (names[i].to_string(), (p(&format!("({})*{}", sg[i], names[perm[i]]), &w), p("1", &w))))
            .collect();
        let (num, _) = substitute(&r, &b, &w).unwrap();
        if num != r {
            failures.push(format!("{perm:?} {sg:?}"));
        }
        images.insert((0..3).map(|i| b[names[i]].0.to_string()).collect::<Vec<_>>().join(","));
    }
    let order = images.len();
    let ok = failures.is_empty() && order == 48;
    let rf = Frac::from_poly(r.clone());
    IdentityCheck {
        id: "symmetry_group".into(),
        lhs: (r.to_string(), "1".into()),
        rhs: (r.to_string(), "1".into()),
        status: Status::from_bool(ok),
        residual: if failures.is_empty() { "0".into() } else { failures.join("; ") },
        excluded: Vec::new(),
        spots: Vec::new(),
        notes: vec![format!("group order {order}"), "generated by coordinate permutations and sign changes".into()],
        residual_poly: Some(rf.residual(&rf)),
    }
}

pub const IDENTITY_IDS: [&str; 5] =
    ["remarkable_identity", "mandelstam_surface", "q_surface", "quartic_family", "symmetry_group"];

pub fn run_identity(id: &str) -> Option<IdentityCheck> {
    Some(match id {
        "remarkable_identity" => remarkable_identity_check(),
        "mandelstam_surface" => mandelstam_surface_check(),
        "q_surface" => q_surface_check(),
        "quartic_family" => quartic_family_check(),
        "symmetry_group" => symmetry_group_check(),
        _ => return None,
    })
}

pub fn all_identities() -> Vec<IdentityCheck> {
    IDENTITY_IDS.iter().filter_map(|i| run_identity(i)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_pass_with_zero_residual() {
        for c in all_identities() {
            assert_eq!(c.status, Status::Pass, "{} {:?}", c.id, c.notes);
            assert!(c.residual_poly.unwrap().is_zero());
        }
    }

    #[test]
    fn spot_value() {
        let c = remarkable_identity_check();
        assert_eq!(c.spots[0].lhs, "151/30");
        assert!(c.spots[0].pass);
    }

    #[test]
    fn wrong_constant_fails() {
        let lhs = cayley_g().scale(&FieldElem::from_int(4));
        let rhs = laurent_f().sub(&constant(5));
        assert_eq!(check("x", &lhs, &rhs).status, Status::Fail);
    }

    #[test]
    fn order_48() {
        let c = symmetry_group_check();
        assert!(c.notes[0].ends_with("48"));
    }
}
