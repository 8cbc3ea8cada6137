//! Picard and transcendental fingerprints of the generic and special fibres.

use k3pencil::exactmath::rat_int;
use k3pencil::picard::{analyse_fiber, reflection_isomorphism_check, Fiber};

fn main() -> k3pencil::Result<()> {
    for fiber in [Fiber::Generic, Fiber::S1, Fiber::SMinus1] {
        let t = std::time::Instant::now();
        let s = analyse_fiber(fiber, 20)?;
        let r = &s.result;
        println!(
            "{:8} {}/{} survive, rank {}, signature {:?}, group {:?}",
            fiber.name(),
            r.survivor_count,
            r.assignments,
            r.rank,
            r.signature,
            r.invariant_factors
        );
        for v in &r.survivors {
            println!("         {}", v.bits);
        }
        println!(
            "         {} {}, transcendental {} {}  ({:.2?})",
            s.picard_model,
            if s.model_match { "matches" } else { "differs" },
            s.transcendental_model,
            if s.transcendental_match { "matches" } else { "differs" },
            t.elapsed()
        );
    }
    for (a, b) in [(0, 1), (2, -1)] {
        let r = reflection_isomorphism_check(&rat_int(a), &rat_int(b))?;
        println!("s={a} -> s={b}: {} center {:?} matrix {:?}", r.pass, r.center, r.matrix);
    }
    Ok(())
}
