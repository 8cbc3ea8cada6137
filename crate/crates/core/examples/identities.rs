//! Rational-function identities relating the Laurent polynomial, the Cayley
//! substitution, the quartic Q, and the symmetry group.

use k3pencil::identities::all_identities;

fn main() {
    for c in all_identities() {
        println!("{:20} {:?}  residual {}", c.id, c.status, c.residual);
        for s in &c.spots {
            println!("    at {:?}: {} = {}", s.point, s.lhs, s.rhs);
        }
        for n in &c.notes {
            println!("    {n}");
        }
    }
}
