//! Fingerprints (rank, signature, discriminant form) of the named lattices,
//! and an isometry test between two presentations.

use k3pencil::checks::MODEL_SPECS;
use k3pencil::lattice::{fingerprint, invariants_match, standard_lattice, GramLattice};

fn main() -> k3pencil::Result<()> {
    for spec in MODEL_SPECS {
        let inv = fingerprint(&standard_lattice(spec)?)?;
        println!(
            "{spec:24} rank {:2} signature {:?} group {:?} q {:?}",
            inv.rank,
            inv.signature,
            inv.invariant_factors,
            inv.disc_form.q.iter().map(|x| x.to_string()).collect::<Vec<_>>()
        );
    }
    // <2> + <6> and the binary form [[2, 2], [2, 8]] have the same genus
    let a = standard_lattice("<2>+<6>")?;
    let b = GramLattice::unlabeled(vec![vec![2, 2], vec![2, 8]]);
    println!("<2>+<6> ~ [[2,2],[2,8]]: {}", invariants_match(&a, &b)?);
    let c = standard_lattice("<2>+<4>")?;
    println!("<2>+<6> ~ <2>+<4>: {}", invariants_match(&a, &c)?);
    Ok(())
}
