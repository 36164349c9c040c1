//! Volume of the hypercube slab `{x in [0,1]^d : x_1 + ... + x_d <= s}`.
//!
//! Pointwise values come from the finite alternating sum
//!
//! ```text
//! v_s = sum_{n=0}^{floor(s)} (-1)^n (s - n)^d / (n! (d - n)!)
//! ```
//!
//! and [`slab_polynomial`] exposes the same function as `d` polynomial pieces
//! on the half-open intervals `[k, k+1)`.

use num_traits::ToPrimitive;

use crate::poly::RationalPolynomial;
use crate::rational::{factorial, Rational};

/// Exact `v_s` in dimension `d`. Zero for `s <= 0`, one for `s >= d`.
///
/// Panics if `d == 0`.
pub fn vol_slab(d: u32, s: &Rational) -> Rational {
    assert!(d >= 1, "slab volume needs dimension >= 1");
    if !s.is_positive() {
        return Rational::zero();
    }
    if *s >= Rational::from(d) {
        return Rational::one();
    }
    // 0 < s < d, so the floor fits comfortably.
    let top = s.floor().to_u32().expect("floor(s) < d");
    (0..=top)
        .map(|n| {
            let term = (s - Rational::from(n)).pow(d as i32) / (factorial(n) * factorial(d - n));
            if n % 2 == 0 {
                term
            } else {
                -term
            }
        })
        .sum()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SlabPiece {
    /// The piece is valid on `[start, start + 1)`.
    pub start: u32,
    pub poly: RationalPolynomial,
}

/// `s -> v_s` for fixed dimension as `d` polynomial pieces of degree `d`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SlabVolumePolynomial {
    dimension: u32,
    pieces: Vec<SlabPiece>,
}

impl SlabVolumePolynomial {
    pub fn dimension(&self) -> u32 {
        self.dimension
    }

    pub fn pieces(&self) -> &[SlabPiece] {
        &self.pieces
    }

    /// Polynomial valid on `[k, k+1)`, for `k < d`.
    pub fn piece(&self, k: u32) -> Option<&RationalPolynomial> {
        self.pieces.get(k as usize).map(|p| &p.poly)
    }

    pub fn eval(&self, s: &Rational) -> Rational {
        if !s.is_positive() {
            return Rational::zero();
        }
        if *s >= Rational::from(self.dimension) {
            return Rational::one();
        }
        let k = s.floor().to_u32().expect("floor(s) < d");
        self.pieces[k as usize].poly.eval(s)
    }
}

pub fn slab_polynomial(d: u32) -> SlabVolumePolynomial {
    assert!(d >= 1, "slab volume needs dimension >= 1");
    let mut pieces = Vec::with_capacity(d as usize);
    let mut acc = RationalPolynomial::zero();
    for k in 0..d {
        let weight = Rational::one() / (factorial(k) * factorial(d - k));
        let weight = if k % 2 == 0 { weight } else { -weight };
        acc = &acc + &RationalPolynomial::shifted_power(&Rational::from(k), d).scale(&weight);
        pieces.push(SlabPiece { start: k, poly: acc.clone() });
    }
    SlabVolumePolynomial { dimension: d, pieces }
}
