//! Exact-arithmetic verification of a pencil of K3 surfaces: singular loci,
//! double-sextic line splittings, Picard lattices of generic and special fibers,
//! and the Picard–Fuchs operators of the Apéry–Fermi family.

#![allow(clippy::needless_range_loop)]

pub mod checks;
pub mod cover;
pub mod error;
pub mod exactmath;
pub mod identities;
pub mod lattice;
pub mod pencil;
pub mod picard;
pub mod report;
pub mod series;
pub mod singular;

pub use error::{Error, Result};
