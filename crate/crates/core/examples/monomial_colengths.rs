//! Frobenius colengths of monomial ideals, and the slab volume recovered as a
//! limit of mixed colengths.
//!
//! ```bash
//! cargo run -p hilbert-kunz --example monomial_colengths
//! ```

use hilbert_kunz::monomial::{ehk_estimate, mixed_colength, MonomialIdeal};
use hilbert_kunz::slab::vol_slab;
use hilbert_kunz::Rational;

fn main() {
    for text in ["2 0 / 1 1 / 0 2", "3 0 / 0 2", "4 0 / 2 1 / 0 3", "2 0 0 / 0 2 0 / 0 0 2 / 1 1 1"] {
        let ideal: MonomialIdeal = text.parse().unwrap();
        let seq = ehk_estimate(&ideal, &[1, 2, 4, 8]).unwrap();
        let values: Vec<String> = seq.entries.iter().map(|e| e.normalized.to_string()).collect();
        println!("({ideal}): {}", values.join(", "));
    }

    let s = Rational::frac(3, 2);
    let exact = vol_slab(3, &s);
    println!("\nmixed colength of (x, y, z) at s = {s}, target v_s = {exact}:");
    let j = MonomialIdeal::maximal(3).unwrap();
    for q in [4u64, 8, 16, 32, 64] {
        let count = mixed_colength(&j, &s, q).unwrap();
        let approx = Rational::new(count, q.pow(3)).unwrap();
        println!("  q = {q:>3}: {count:>7} / q^3 ~ {}", approx.to_decimal(6));
    }
}
