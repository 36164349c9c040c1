//! Small-multiplicity arithmetic from the duality bounds.
//!
//! ```bash
//! cargo run -p hilbert-kunz --example duality_bounds
//! ```

use hilbert_kunz::bounds::{duality_bound_cm, duality_bound_gorenstein, gorenstein_threshold, minimal_multiplicity_bound};
use hilbert_kunz::zigzag::conjecture_threshold;
use hilbert_kunz::Rational;

fn main() {
    for e in 2..=6i64 {
        let e = Rational::integer(e);
        let gor = gorenstein_threshold(&e).unwrap();
        let mm = minimal_multiplicity_bound(&e).unwrap();
        let cm2 = duality_bound_cm(&e, 2).unwrap();
        println!("e = {e}: e/(e-1) = {gor}, e/2 = {mm}, type-2 CM bound = {cm2}");
    }

    let d = 4u64;
    println!("\nGorenstein, d = {d}, by embedding dimension:");
    for nu in d + 1..=d + 4 {
        let b = duality_bound_gorenstein(&Rational::integer(5), nu, d).unwrap();
        println!("  e = 5, nu = {nu}: {b}");
    }

    println!("\nthresholds 1 + m_d:");
    for d in 1..=7 {
        println!("  d = {d}: {}", conjecture_threshold(d).unwrap());
    }
}
