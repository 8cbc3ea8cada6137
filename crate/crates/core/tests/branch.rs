use std::time::Instant;

use k3pencil::cover::{branch_intersection_check, BranchConfig};
use k3pencil::pencil::SValue;
use k3pencil::picard::verify_branch_table;
use k3pencil::singular::branch_ade_type;

#[test]
fn generic_branch_points() {
    let t = Instant::now();
    let r = branch_intersection_check(&SValue::Generic).unwrap();
    eprintln!("{:?} {:?} {:?}", r.eliminant_degrees, r.bad_parameter_values, t.elapsed());
    assert!(r.pass, "{r:?}");
    assert!(r.cubics_smooth);
    let m: Vec<u32> = r.points.iter().map(|p| p.1).collect();
    assert_eq!(m, vec![3, 3, 2, 1]);
}

#[test]
fn contact_matches_sextic_type() {
    let cfg = BranchConfig::generic();
    let table = verify_branch_table(&cfg, false).unwrap();
    for ((_, k), (_, n)) in table.iter().zip(BranchConfig::branch_points()) {
        assert_eq!(*k, branch_ade_type(n).unwrap());
    }
}

#[test]
fn generic_cubics_smooth() {
    let t = Instant::now();
    let cfg = BranchConfig::generic();
    for g in [&cfg.g0, &cfg.g1] {
        let r = k3pencil::singular::verify_singular_locus(g, &[]).unwrap();
        eprintln!("{:?} {:?} {:?}", r.eliminant_degrees, r.bad_parameter_values, t.elapsed());
        assert!(r.pass());
    }
}
