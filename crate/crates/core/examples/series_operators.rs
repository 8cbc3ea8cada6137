//! θ-operators for the Apéry, Fermi and Domb series: recurrences,
//! annihilation to a fixed order, singular points, and the printed-vs-fitted
//! comparison.

use k3pencil::series::{apery_operator, domb, fit_term_scale, operator_report, PowerSeries};

fn main() -> k3pencil::Result<()> {
    for (op, corrected) in [("apery", false), ("fermi", false), ("fermi", true), ("domb", false), ("domb", true)] {
        let r = operator_report(op, corrected, 50)?;
        println!("{op} ({})", if corrected { "corrected" } else { "printed" });
        println!("  {}", r.operator);
        println!("  {}", r.recurrence);
        println!(
            "  annihilates to order {}: {}   singular points {:?}",
            r.annihilation.order,
            r.annihilation.pass,
            r.singular_points.iter().map(|x| x.to_string()).collect::<Vec<_>>()
        );
    }
    // recover the μ² factor of the Domb operator from the sequence itself
    let b = PowerSeries::from_ints("mu", &(0..12).map(domb).collect::<Vec<_>>());
    let op = k3pencil::series::domb_printed();
    println!("fitted μ² scale: {:?}", fit_term_scale(&op, 2, &b).map(|x| x.to_string()));
    println!("Apéry pulled back along λ = ξ²: {}", apery_operator().pullback_square("xi"));
    Ok(())
}
