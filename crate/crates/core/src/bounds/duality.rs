use crate::error::{Error, Result};
use crate::rational::Rational;

/// Cohen-Macaulay of type `t`: `e / (e - t + 1)`.
pub fn duality_bound_cm(e: &Rational, t: u64) -> Result<Rational> {
    let den = e - Rational::from(t) + Rational::one();
    if !den.is_positive() {
        return Err(Error::invalid(format!("e - t + 1 = {den} must be positive")));
    }
    Ok(e / den)
}

/// Gorenstein of embedding dimension `nu`, not F-regular: `e / (e - nu + d)`.
pub fn duality_bound_gorenstein(e: &Rational, nu: u64, d: u64) -> Result<Rational> {
    let den = e - Rational::from(nu) + Rational::from(d);
    if !den.is_positive() {
        return Err(Error::invalid(format!("e - nu + d = {den} must be positive")));
    }
    Ok(e / den)
}

/// `e / (e - 1)`: a formally unmixed ring of dimension at least two with
/// `e_HK` below this value is Gorenstein and F-regular.
pub fn gorenstein_threshold(e: &Rational) -> Result<Rational> {
    if *e <= 1 {
        return Err(Error::invalid(format!("multiplicity {e} must be > 1")));
    }
    Ok(e / (e - Rational::one()))
}

/// Minimal multiplicity: `e / 2`.
pub fn minimal_multiplicity_bound(e: &Rational) -> Result<Rational> {
    if *e < 1 {
        return Err(Error::invalid(format!("multiplicity {e} must be >= 1")));
    }
    Ok(e / Rational::integer(2))
}
