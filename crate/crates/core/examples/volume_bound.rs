//! Volume lower bounds: a hand-picked slice against a grid search.
//!
//! The multiplicity-5 case reduces to a 7-dimensional Gorenstein ring with at
//! most 3 extra generators. A slice of 3.32 is enough for a bound over 1.112.
//!
//! ```bash
//! cargo run -p hilbert-kunz --example volume_bound
//! ```

use hilbert_kunz::bounds::{optimize_slice, wy_volume_bound, BoundQuery};
use hilbert_kunz::Rational;

fn main() {
    let s: Rational = "3.32".parse().unwrap();
    let q = BoundQuery::uniform(7, 5u64, 3, s.clone()).unwrap();
    let hand = wy_volume_bound(&q);
    println!("d=7 e=5 r=3 s={s}: {} ~ {}", hand, hand.to_decimal(6));

    let best = optimize_slice(7, 5u64, 3, 100).unwrap();
    println!("grid search:      s={} bound ~ {}", best.slice, best.bound.to_decimal(6));

    // Generators of higher valuation cost less volume.
    let halves = vec![Rational::frac(3, 2); 3];
    let q = BoundQuery::with_valuations(7, 5u64, halves, s).unwrap();
    println!("valuations 3/2:   bound ~ {}", wy_volume_bound(&q).to_decimal(6));

    println!("\nbest slices in dimension 5, r = e - 2:");
    for e in [5u64, 7, 11, 18, 35] {
        let best = optimize_slice(5, e, e - 2, 50).unwrap();
        println!("  e={e:>3}: s={:>10} bound ~ {}", best.slice.to_string(), best.bound.to_decimal(4));
    }
}
