//! Certifying G(e) = e (v_s - (e-2) v_{s-1}) over intervals of multiplicities,
//! and searching for a slice that certifies a given interval.
//!
//! ```bash
//! cargo run -p hilbert-kunz --example interval_certificates
//! ```

use hilbert_kunz::bounds::{certify_interval, quadratic_apex};
use hilbert_kunz::Rational;

fn best_slice(d: u32, a: u64, b: u64, target: &Rational) -> (Rational, Rational) {
    (1..=(d as i64 * 100))
        .map(|k| Rational::frac(k, 100))
        .map(|s| {
            let row = certify_interval(d, a, b, &s, target).unwrap();
            (s, row.certified_bound)
        })
        .max_by(|x, y| x.1.cmp(&y.1).then(y.0.cmp(&x.0)))
        .unwrap()
}

fn main() {
    let target: Rational = "1.118".parse().unwrap();
    for (a, b, s) in [(16u64, 25u64, "2.1"), (10, 25, "2.2"), (10, 15, "2.3")] {
        let s: Rational = s.parse().unwrap();
        let row = certify_interval(6, a, b, &s, &target).unwrap();
        let apex = quadratic_apex(6, &s).map(|m| m.to_decimal(2)).unwrap_or_default();
        println!(
            "[{a}, {b}] s={s}: apex {apex}, {}, G(a) ~ {}, G(b) ~ {}, certified ~ {} ({})",
            row.shape.as_str(),
            row.g_low.to_decimal(4),
            row.g_high.to_decimal(4),
            row.certified_bound.to_decimal(4),
            if row.pass { "pass" } else { "fail" }
        );
    }

    println!("\nbest slice on a 1/100 grid:");
    for (a, b) in [(10u64, 25u64), (10, 15), (16, 25)] {
        let (s, bound) = best_slice(6, a, b, &target);
        println!("  [{a}, {b}]: s={s} certifies ~ {}", bound.to_decimal(4));
    }
}
