use std::time::Instant;

use k3pencil::exactmath::ops::from_rat_poly;
use k3pencil::exactmath::{Field, Rat};
use k3pencil::pencil::{quartic_q, quartic_q_table};
use k3pencil::singular::{milnor_ade_classify, verify_singular_locus, ProjPoint};

#[test]
fn quartic_locus_is_the_eight_points() {
    let t = Instant::now();
    let f = from_rat_poly(&quartic_q());
    let pts: Vec<ProjPoint> = quartic_q_table().iter().map(|(c, _)| ProjPoint::from_ints(c)).collect();
    let rep = verify_singular_locus(&f, &pts).unwrap();
    eprintln!("{:?} in {:?}", rep.eliminant_degrees, t.elapsed());
    assert!(rep.pass(), "{:?}", rep.witness);
    let fewer = verify_singular_locus(&f, &pts[..7]).unwrap();
    assert!(!fewer.pass());
}

#[test]
fn quartic_types() {
    let f = quartic_q();
    for (c, k) in quartic_q_table() {
        let j = (0..4).rev().find(|&j| c[j] != 0).unwrap();
        let aff = f.dehomogenize(j);
        let pt: Vec<Rat> = (0..4).filter(|&i| i != j).map(|i| Rat::from_int(c[i] * c[j])).collect();
        let rep = milnor_ade_classify(&aff, &pt).unwrap();
        assert_eq!(rep.k, k, "{c:?}");
    }
}
