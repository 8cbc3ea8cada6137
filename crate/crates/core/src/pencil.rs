//! The fixed equations of the pencil and its models.

use crate::exactmath::parse::{parse_poly, parse_rat_poly};
use crate::exactmath::{rat_int, vars, AlphaValue, Ext, Field, FieldElem, MPoly, Poly, Rat, Vars};

/// Where on the pencil a computation lives.
#[derive(Clone, Debug, PartialEq)]
pub enum SValue {
    Generic,
    At(Rat),
}

impl SValue {
    pub fn at(n: i64) -> Self {
        SValue::At(rat_int(n))
    }

    /// Parse `generic` or a rational such as `-1` or `3/2`.
    pub fn parse(s: &str) -> Option<Self> {
        if s == "generic" {
            return Some(SValue::Generic);
        }
        s.parse::<Rat>().ok().map(SValue::At)
    }

    pub fn label(&self) -> String {
        match self {
            SValue::Generic => "generic".into(),
            SValue::At(r) => crate::exactmath::rat_string(r),
        }
    }

    /// Specialize a generic polynomial to this fiber (α kept symbolic when possible).
    pub fn apply(&self, p: &Poly) -> crate::Result<Poly> {
        match self {
            SValue::Generic => Ok(p.clone()),
            SValue::At(s0) => crate::exactmath::specialize(p, s0, &AlphaValue::Symbolic),
        }
    }
}

pub fn xyz() -> Vars {
    vars(&["x", "y", "z"])
}

pub fn xyzt() -> Vars {
    vars(&["x", "y", "z", "t"])
}

pub fn uvw() -> Vars {
    vars(&["u", "v", "w"])
}

/// The quartic `z²(t²+xy) = (x+y)((x+y)t² − 4xyt + x²y + xy²)` in `(x:y:z:t)`.
pub fn quartic_q() -> MPoly<Rat> {
    parse_rat_poly("z^2*(t^2+x*y)-(x+y)*((x+y)*t^2-4*x*y*t+x^2*y+x*y^2)", &xyzt()).unwrap()
}

/// Affine form `z²(1+xy) − (x+y)(x+y−4xy+x²y+xy²)`.
pub fn quartic_q_affine() -> MPoly<Rat> {
    parse_rat_poly("z^2*(1+x*y)-(x+y)*(x+y-4*x*y+x^2*y+x*y^2)", &xyz()).unwrap()
}

/// Expected singular points of the quartic with their A_k index.
pub fn quartic_q_table() -> Vec<([i64; 4], u32)> {
    vec![
        ([0, 0, 0, 1], 3),
        ([0, 1, 1, 0], 2),
        ([0, 1, -1, 0], 2),
        ([1, 0, 1, 0], 2),
        ([1, 0, -1, 0], 2),
        ([1, 1, 0, 1], 1),
        ([0, 0, 1, 0], 1),
        ([1, -1, 0, 0], 1),
    ]
}

/// `G_i = (x²+y²)z − 2xy(x+y) + (s+1−i)(2x−z)(2y−z)z`.
pub fn branch_cubic(i: i64, s: &SValue) -> Poly {
    let src = format!("(x^2+y^2)*z-2*x*y*(x+y)+(s+1-({i}))*(2*x-z)*(2*y-z)*z");
    let g = parse_poly(&src, &xyz(), Ext::None).unwrap();
    s.apply(&g).unwrap()
}

pub fn sextic(s: &SValue) -> Poly {
    branch_cubic(0, s).mul(&branch_cubic(1, s))
}

/// The pencil member `u²v²w² − u² − v² − w² + 2 + s(u²−1)(v²−1)(w²−1)`.
pub fn r_surface() -> Poly {
    parse_poly("u^2*v^2*w^2-u^2-v^2-w^2+2+s*(u^2-1)*(v^2-1)*(w^2-1)", &uvw(), Ext::None).unwrap()
}

/// `f_i = (1 − x²y²) + (s − i)(x²−1)(y²−1)` in `(x, y)`.
pub fn f_i(i: i64) -> Poly {
    let src = format!("(1-x^2*y^2)+(s-({i}))*(x^2-1)*(y^2-1)");
    parse_poly(&src, &vars(&["x", "y"]), Ext::None).unwrap()
}

/// `f_i` homogenized in `z`, a plane quartic.
pub fn quartic_f(i: i64) -> Poly {
    f_i(i).homogenize("z")
}

pub fn constant(v: &Vars, n: i64) -> Poly {
    MPoly::constant(v, FieldElem::from_int(n))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn branch_cubic_at_one() {
        let g = branch_cubic(0, &SValue::at(1));
        let expect = parse_poly("(x^2+y^2)*z-2*x*y*(x+y)+2*(2*x-z)*(2*y-z)*z", &xyz(), Ext::None).unwrap();
        assert_eq!(g, expect);
    }

    #[test]
    fn quartic_forms_agree() {
        assert_eq!(quartic_q().dehomogenize(3), quartic_q_affine());
        assert!(quartic_q().is_homogeneous());
    }
}
