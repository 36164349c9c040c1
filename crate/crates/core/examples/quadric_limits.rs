//! Closed-form Hilbert-Kunz multiplicities of quadrics approach 1 + m_d from
//! above as the characteristic grows.
//!
//! ```bash
//! cargo run -p hilbert-kunz --example quadric_limits
//! ```

use hilbert_kunz::bounds::{quadric_ehk, QuadricParams};
use hilbert_kunz::zigzag::conjecture_threshold;

fn main() {
    for d in [5u32, 6] {
        let limit = conjecture_threshold(d).unwrap();
        println!("d = {d}, 1 + m_d = {limit} ~ {}", limit.to_decimal(8));
        for p in [3u64, 5, 7, 11, 31, 101, 1009] {
            let v = quadric_ehk(QuadricParams::new(p, d).unwrap());
            println!("  p = {p:>5}: {:>40} ~ {}  excess ~ {}", v.to_string(), v.to_decimal(8), (&v - &limit).to_decimal(10));
        }
    }
}
