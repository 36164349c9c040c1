//! Coefficients of sec(x) + tan(x) by two independent routes, and the
//! conjectured thresholds 1 + m_d.
//!
//! ```bash
//! cargo run -p hilbert-kunz --example zigzag_thresholds
//! ```

use hilbert_kunz::zigzag::{euler_zigzag_numbers, secant_tangent_coeffs, zigzag_coeffs};
use hilbert_kunz::Rational;

fn main() {
    let order = 12;
    let series = secant_tangent_coeffs(order).expect("order >= 1");
    let zigzag = zigzag_coeffs(order).expect("order >= 1");
    assert_eq!(series, zigzag);
    let e = euler_zigzag_numbers(order);

    println!("{:>3} {:>10} {:>22} {:>22}  decimal", "d", "E_d", "m_d", "1 + m_d");
    for (d, m) in series.iter() {
        let t = Rational::one() + m;
        println!("{d:>3} {:>10} {:>22} {:>22}  {}", e[d as usize].to_string(), m.to_string(), t.to_string(), t.to_decimal(6));
    }
}
