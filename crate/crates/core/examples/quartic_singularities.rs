//! The eight singular points of the quartic Q, their types, and the
//! certificate that there are no others.

use k3pencil::exactmath::ops::from_rat_poly;
use k3pencil::pencil::{quartic_q, quartic_q_table};
use k3pencil::singular::{classify_projective, verify_singular_locus, ProjPoint};

fn main() -> k3pencil::Result<()> {
    let q = quartic_q();
    println!("Q = {q}");
    let f = from_rat_poly(&q);
    let mut pts = Vec::new();
    for (c, k) in quartic_q_table() {
        let p = ProjPoint::from_ints(&c);
        let r = classify_projective(&f, &p)?;
        println!("({}) {:3} milnor {}  expected A{k}", r.point.join(":"), r.type_name(), r.milnor_number);
        pts.push(p);
    }
    let t = std::time::Instant::now();
    let rep = verify_singular_locus(&f, &pts)?;
    println!("locus complete: {} ({:.2?}), eliminant degrees {:?}", rep.complete, t.elapsed(), rep.eliminant_degrees);
    // dropping a point must break the certificate
    let fewer = verify_singular_locus(&f, &pts[1..])?;
    println!("without the first point: complete = {}", fewer.complete);
    Ok(())
}
