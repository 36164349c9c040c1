use crate::error::{Error, Result};
use crate::rational::Rational;
use crate::slab::vol_slab;

/// Extra generators beyond the parameter ideal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Generators {
    /// `r` generators, each of valuation (at least) one.
    Uniform(u64),
    /// One valuation `t_i > 0` per generator.
    Valuations(Vec<Rational>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundQuery {
    dimension: u32,
    multiplicity: Rational,
    slice: Rational,
    generators: Generators,
}

impl BoundQuery {
    pub fn new(dimension: u32, multiplicity: Rational, slice: Rational, generators: Generators) -> Result<Self> {
        if dimension == 0 {
            return Err(Error::invalid("dimension must be >= 1"));
        }
        if multiplicity < 1 {
            return Err(Error::invalid(format!("multiplicity {multiplicity} must be >= 1")));
        }
        if slice.is_negative() {
            return Err(Error::invalid(format!("slice {slice} must be >= 0")));
        }
        if let Generators::Valuations(ts) = &generators {
            if let Some(t) = ts.iter().find(|t| !t.is_positive()) {
                return Err(Error::invalid(format!("valuation {t} must be > 0")));
            }
        }
        Ok(BoundQuery { dimension, multiplicity, slice, generators })
    }

    pub fn uniform(dimension: u32, multiplicity: impl Into<Rational>, r: u64, slice: Rational) -> Result<Self> {
        Self::new(dimension, multiplicity.into(), slice, Generators::Uniform(r))
    }

    pub fn with_valuations(
        dimension: u32,
        multiplicity: impl Into<Rational>,
        valuations: Vec<Rational>,
        slice: Rational,
    ) -> Result<Self> {
        Self::new(dimension, multiplicity.into(), slice, Generators::Valuations(valuations))
    }

    pub fn dimension(&self) -> u32 {
        self.dimension
    }

    pub fn multiplicity(&self) -> &Rational {
        &self.multiplicity
    }

    pub fn slice(&self) -> &Rational {
        &self.slice
    }

    pub fn generators(&self) -> &Generators {
        &self.generators
    }

    /// The same query with a different slice parameter.
    pub fn at_slice(&self, slice: Rational) -> Result<Self> {
        Self::new(self.dimension, self.multiplicity.clone(), slice, self.generators.clone())
    }
}

/// `e * (v_s - sum_i v_{s - t_i})`, which reduces to `e * (v_s - r v_{s-1})`
/// for uniform generators. The result can be zero or negative.
pub fn wy_volume_bound(q: &BoundQuery) -> Rational {
    let d = q.dimension;
    let s = &q.slice;
    let deficit = match &q.generators {
        Generators::Uniform(r) => Rational::from(*r) * vol_slab(d, &(s - Rational::one())),
        Generators::Valuations(ts) => ts.iter().map(|t| vol_slab(d, &(s - t))).sum(),
    };
    &q.multiplicity * (vol_slab(d, s) - deficit)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SliceOptimum {
    pub slice: Rational,
    pub bound: Rational,
}

const REFINEMENT_ROUNDS: usize = 8;

/// Best-effort search for the slice maximizing [`wy_volume_bound`].
///
/// Scans `{k / grid : 0 <= k <= d * grid}`, then runs a fixed number of
/// refinement rounds around the incumbent, halving the step each time. Ties
/// keep the earlier (smaller) slice. The returned bound is exact, so it is a
/// valid lower bound whether or not the slice is optimal.
pub fn optimize_slice(dimension: u32, multiplicity: impl Into<Rational>, r: u64, grid: u64) -> Result<SliceOptimum> {
    if grid < 2 {
        return Err(Error::invalid("grid resolution must be >= 2"));
    }
    let base = BoundQuery::uniform(dimension, multiplicity, r, Rational::zero())?;
    let eval = |s: &Rational| wy_volume_bound(&base.at_slice(s.clone()).expect("slice >= 0"));

    let mut best = SliceOptimum { slice: Rational::zero(), bound: eval(&Rational::zero()) };
    for k in 1..=(dimension as u64 * grid) {
        let s = Rational::new(k, grid)?;
        let bound = eval(&s);
        if bound > best.bound {
            best = SliceOptimum { slice: s, bound };
        }
    }

    let mut step = Rational::new(1, grid)?;
    for _ in 0..REFINEMENT_ROUNDS {
        step = step / Rational::integer(2);
        let center = best.slice.clone();
        for s in [&center - &step, &center + &step] {
            if s.is_negative() {
                continue;
            }
            let bound = eval(&s);
            if bound > best.bound {
                best = SliceOptimum { slice: s, bound };
            }
        }
    }
    Ok(best)
}
