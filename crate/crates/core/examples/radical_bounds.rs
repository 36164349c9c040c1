//! Bounds for Gorenstein F-regular rings from chains of radical extensions.
//!
//! ```bash
//! cargo run -p hilbert-kunz --example radical_bounds
//! ```

use hilbert_kunz::bounds::{final_theorem_bound, radical_iterate, radical_recursion_bound, GapCase, RadicalParams};

fn main() {
    println!("{:>3} {:>24} {:>24}", "d", "k = e - 2", "k < e - 2");
    for d in 2..=8u32 {
        let minimal = final_theorem_bound(d, 6, GapCase::MinimalGap).unwrap();
        let general = final_theorem_bound(d, 6, GapCase::General).unwrap();
        println!("{d:>3} {:>24} {:>24}", minimal.to_decimal(12), general.to_decimal(12));
    }

    println!("\nchain bound for d = 4, e = 10, k = 5, n = 2:");
    for b in [2u64, 1] {
        for it in 0..=4 {
            let rp = RadicalParams::new(4, 10, 5, 2, b, it).unwrap();
            let value = if b == rp.n { radical_recursion_bound(&rp) } else { radical_iterate(&rp) };
            println!("  b = {b}, {it} steps: {}", value.to_decimal(8));
        }
    }
}
