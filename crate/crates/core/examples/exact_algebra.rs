//! Polynomial arithmetic over Q and over Q(s)(α): gcd, resultant, squarefree split.

use k3pencil::exactmath::parse::parse_rat_poly;
use k3pencil::exactmath::{gcd_poly, parse_poly, resultant, squarefree_decomposition, vars, Ext, Field, FieldElem};

fn main() -> k3pencil::Result<()> {
    let t = vars(&["t"]);
    let p = parse_rat_poly("(t - 1)^2*(t + 2)", &t)?;
    let q = parse_rat_poly("(t - 1)*(t^2 + 1)", &t)?;
    println!("gcd         {}", gcd_poly(&p, &q)?);
    for (f, e) in squarefree_decomposition(&p)?.factors {
        println!("factor      ({f})^{e}");
    }
    // eliminating y from two plane curves
    let v = vars(&["x", "y"]);
    let c1 = parse_rat_poly("x^2 + y^2 - 1", &v)?;
    let c2 = parse_rat_poly("y - x^2", &v)?;
    println!("res_y       {}", resultant(&c1, &c2, "y")?);

    // elements of Q(s)(α) with α² = s² − s
    let s = FieldElem::s();
    let w = vars(&["x"]);
    let f = parse_poly("x^2 - alpha^2", &w, Ext::SSquaredMinusS)?;
    let g = parse_poly("x - alpha", &w, Ext::SSquaredMinusS)?;
    println!("x² − α²     {f}");
    println!("gcd with x − α: {}", gcd_poly(&f, &g)?);
    let r = s.add(&FieldElem::one()).inv();
    println!("1/(s + 1)   {r}");
    Ok(())
}
