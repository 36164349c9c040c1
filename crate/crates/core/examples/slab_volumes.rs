//! Slab volumes of the unit cube, pointwise and as polynomial pieces.
//!
//! ```bash
//! cargo run -p hilbert-kunz --example slab_volumes
//! ```

use hilbert_kunz::slab::{slab_polynomial, vol_slab};
use hilbert_kunz::Rational;

fn main() {
    let d = 6;
    let v = slab_polynomial(d);
    println!("v_s in dimension {d}:");
    for piece in v.pieces() {
        println!("  [{}, {}): {}", piece.start, piece.start + 1, piece.poly);
    }

    println!("\nvalues on a 1/2 grid:");
    for k in 0..=(2 * d as i64) {
        let s = Rational::frac(k, 2);
        let value = vol_slab(d, &s);
        println!("  s = {:>4}  v_s = {:>14}  ~ {}", s.to_string(), value.to_string(), value.to_decimal(6));
    }
}
