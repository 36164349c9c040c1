//! Maclaurin coefficients of `sec(x) + tan(x) = 1 + sum_{d>=1} m_d x^d`.
//!
//! [`secant_tangent_coeffs`] works by exact truncated power-series division.
//! [`zigzag_coeffs`] is an independent route through the boustrophedon
//! triangle for the Euler zigzag numbers `E_d`, with `m_d = E_d / d!`.

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::rational::{factorial, Rational};

/// `m_1 ..= m_D`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeriesCoefficients {
    coeffs: Vec<Rational>,
}

impl SeriesCoefficients {
    pub fn order(&self) -> u32 {
        self.coeffs.len() as u32
    }

    /// `m_d` for `1 <= d <= order`.
    pub fn get(&self, d: u32) -> Option<&Rational> {
        d.checked_sub(1).and_then(|i| self.coeffs.get(i as usize))
    }

    pub fn iter(&self) -> impl Iterator<Item = (u32, &Rational)> {
        self.coeffs.iter().enumerate().map(|(i, m)| (i as u32 + 1, m))
    }

    pub fn as_slice(&self) -> &[Rational] {
        &self.coeffs
    }
}

type Series = Vec<Rational>;

fn sin_series(len: usize) -> Series {
    (0..len)
        .map(|n| match n % 4 {
            1 => Rational::one() / factorial(n as u32),
            3 => -Rational::one() / factorial(n as u32),
            _ => Rational::zero(),
        })
        .collect()
}

fn cos_series(len: usize) -> Series {
    (0..len)
        .map(|n| match n % 4 {
            0 => Rational::one() / factorial(n as u32),
            2 => -Rational::one() / factorial(n as u32),
            _ => Rational::zero(),
        })
        .collect()
}

/// `num / den` truncated to `num.len()` terms; `den[0]` must be nonzero.
fn series_div(num: &[Rational], den: &[Rational]) -> Series {
    let lead = &den[0];
    let mut out: Series = Vec::with_capacity(num.len());
    for n in 0..num.len() {
        let mut acc = num[n].clone();
        for k in 1..=n.min(den.len() - 1) {
            acc -= &den[k] * &out[n - k];
        }
        out.push(acc / lead);
    }
    out
}

/// Series route: `tan = sin / cos`, `sec = 1 / cos`.
pub fn secant_tangent_coeffs(order: u32) -> Result<SeriesCoefficients> {
    if order == 0 {
        return Err(Error::invalid("series order must be >= 1"));
    }
    let len = order as usize + 3;
    let cos = cos_series(len);
    let tan = series_div(&sin_series(len), &cos);
    let mut one = vec![Rational::zero(); len];
    one[0] = Rational::one();
    let sec = series_div(&one, &cos);
    let coeffs = (1..=order as usize).map(|d| &tan[d] + &sec[d]).collect();
    Ok(SeriesCoefficients { coeffs })
}

/// Euler zigzag numbers `E_0 ..= E_n` from the boustrophedon triangle.
pub fn euler_zigzag_numbers(n: u32) -> Vec<BigUint> {
    let mut out = vec![BigUint::one()];
    let mut row = vec![BigUint::one()];
    for i in 1..=n as usize {
        let mut next = Vec::with_capacity(i + 1);
        next.push(BigUint::zero());
        for k in 1..=i {
            let v = &next[k - 1] + &row[i - k];
            next.push(v);
        }
        out.push(next[i].clone());
        row = next;
    }
    out
}

/// Recurrence route: `m_d = E_d / d!`.
pub fn zigzag_coeffs(order: u32) -> Result<SeriesCoefficients> {
    if order == 0 {
        return Err(Error::invalid("series order must be >= 1"));
    }
    let zigzag = euler_zigzag_numbers(order);
    let coeffs = (1..=order)
        .map(|d| Rational::from(zigzag[d as usize].clone()) / factorial(d))
        .collect();
    Ok(SeriesCoefficients { coeffs })
}

/// `1 + m_d`, the conjectured lower bound in dimension `d`.
pub fn conjecture_threshold(d: u32) -> Result<Rational> {
    let m = secant_tangent_coeffs(d)?;
    Ok(Rational::one() + m.get(d).expect("order d has m_d"))
}
