//! Branch cubics of the double-plane model: their intersections, the eight
//! lifted lines, and the intersection matrix of the lifts.

use k3pencil::cover::{branch_intersection_check, generic_lines, line_matrix, verify_component_lift, BranchConfig};
use k3pencil::pencil::SValue;

fn main() -> k3pencil::Result<()> {
    let b = branch_intersection_check(&SValue::Generic)?;
    for (p, m) in &b.points {
        println!("B0∩B1 at ({})  multiplicity {m}", p.strings().join(":"));
    }
    println!("Bezout sum {}, complete {}, cubics smooth {}", b.bezout_sum, b.complete, b.cubics_smooth);

    let cfg = BranchConfig::generic();
    let lines = generic_lines();
    for l in &lines {
        let c = verify_component_lift(l, &cfg)?;
        println!("{}: {}   w = {}   residual {}", l.label, l.line, l.w, c.residual);
    }
    let pts: Vec<_> = BranchConfig::branch_points().into_iter().map(|p| p.0).collect();
    for row in line_matrix(&lines, &pts)? {
        println!("{}", row.iter().map(|x| format!("{x:3}")).collect::<String>());
    }
    Ok(())
}
