//! Exact arithmetic: rationals, the coefficient tower ℚ ⊂ ℚ(s) ⊂ ℚ(s)(α),
//! univariate and multivariate polynomials, and elimination.

pub mod elim;
pub mod field;
pub mod fieldelem;
pub mod frac;
pub mod mpoly;
pub mod ops;
pub mod parse;
pub mod upoly;

pub use field::{rat, rat_int, rat_string, Field, Rat};
pub use fieldelem::{AlphaValue, Ext, FieldDescriptor, FieldElem, Level, RatFun};
pub use frac::Frac;
pub use mpoly::{vars, MPoly, Mono, Vars};
pub use ops::{gcd_poly, resultant, specialize, squarefree_decomposition, substitute, SquarefreeDecomposition};
pub use parse::parse_poly;
pub use upoly::UPoly;

/// Polynomials over the full tower.
pub type Poly = MPoly<FieldElem>;
