//! `G(e) = e (v_s - (e - 2) v_{s-1})`: the volume bound with `r = e - 2`,
//! viewed as a downward parabola in the multiplicity `e` for a fixed slice.

use crate::error::{Error, Result};
use crate::rational::Rational;
use crate::slab::vol_slab;

pub fn quadratic_g(d: u32, e: &Rational, s: &Rational) -> Rational {
    let vs = vol_slab(d, s);
    let vs1 = vol_slab(d, &(s - Rational::one()));
    e * (vs - (e - Rational::integer(2)) * vs1)
}

/// Vertex `(v_s + 2 v_{s-1}) / (2 v_{s-1})` of `G`, or `None` when
/// `v_{s-1} = 0` and `G` is linear.
pub fn quadratic_apex(d: u32, s: &Rational) -> Option<Rational> {
    let vs1 = vol_slab(d, &(s - Rational::one()));
    if vs1.is_zero() {
        return None;
    }
    let two = Rational::integer(2);
    Some((vol_slab(d, s) + &two * &vs1) / (two * vs1))
}

/// How `G` behaves on the certified interval.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum IntervalShape {
    /// Apex inside `[a, b]`: the minimum over the interval is at an endpoint.
    ApexInterior,
    /// Apex right of `b`: `G` increases on `[a, b]`.
    Increasing,
    /// Apex left of `a`: `G` decreases on `[a, b]`.
    Decreasing,
    /// `v_{s-1} = 0`, so `G(e) = e v_s` is linear and non-decreasing.
    Linear,
}

impl IntervalShape {
    pub fn as_str(&self) -> &'static str {
        match self {
            IntervalShape::ApexInterior => "apex-interior",
            IntervalShape::Increasing => "increasing",
            IntervalShape::Decreasing => "decreasing",
            IntervalShape::Linear => "linear",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntervalCertRow {
    pub dimension: u32,
    pub e_low: u64,
    pub e_high: u64,
    pub slice: Rational,
    pub apex: Option<Rational>,
    pub shape: IntervalShape,
    pub g_low: Rational,
    pub g_high: Rational,
    pub certified_bound: Rational,
    pub target: Rational,
    pub pass: bool,
}

/// Lower bound for `G(e)` over every integer `e` in `[e_low, e_high]`.
pub fn certify_interval(d: u32, e_low: u64, e_high: u64, s: &Rational, target: &Rational) -> Result<IntervalCertRow> {
    if d == 0 {
        return Err(Error::invalid("dimension must be >= 1"));
    }
    if e_low == 0 || e_low > e_high {
        return Err(Error::invalid(format!("bad multiplicity interval [{e_low}, {e_high}]")));
    }
    let lo = Rational::from(e_low);
    let hi = Rational::from(e_high);
    let g_low = quadratic_g(d, &lo, s);
    let g_high = quadratic_g(d, &hi, s);
    let apex = quadratic_apex(d, s);
    let (shape, certified_bound) = match &apex {
        None => (IntervalShape::Linear, g_low.clone()),
        Some(m) if *m > hi => (IntervalShape::Increasing, g_low.clone()),
        Some(m) if *m < lo => (IntervalShape::Decreasing, g_high.clone()),
        Some(_) => (IntervalShape::ApexInterior, g_low.clone().min(g_high.clone())),
    };
    let pass = certified_bound >= *target;
    Ok(IntervalCertRow {
        dimension: d,
        e_low,
        e_high,
        slice: s.clone(),
        apex,
        shape,
        g_low,
        g_high,
        certified_bound,
        target: target.clone(),
        pass,
    })
}
