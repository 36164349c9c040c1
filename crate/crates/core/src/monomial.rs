//! Frobenius powers of `m`-primary monomial ideals by lattice-point counting.
//!
//! For a monomial ideal `I` in `n` variables, `R/I^[q]` has a basis of the
//! monomials outside the staircase of `I^[q]`, whose generators are the
//! generators of `I` with exponents scaled by `q`. The counts here are exact.

use std::fmt;
use std::str::FromStr;

use num_traits::ToPrimitive;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::rational::Rational;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    num_vars: usize,
    /// Minimal generators, sorted ascending.
    generators: Vec<Vec<u64>>,
    /// Exponent of the smallest pure power of each variable.
    pure_powers: Vec<u64>,
}

fn dominates(a: &[u64], b: &[u64]) -> bool {
    a.iter().zip(b).all(|(x, y)| x >= y)
}

impl MonomialIdeal {
    /// Rejects ideals that are not `m`-primary; drops redundant generators.
    pub fn new(num_vars: usize, generators: Vec<Vec<u64>>) -> Result<Self> {
        if num_vars == 0 {
            return Err(Error::InvalidIdeal("need at least one variable".into()));
        }
        if generators.is_empty() {
            return Err(Error::InvalidIdeal("no generators".into()));
        }
        for g in &generators {
            if g.len() != num_vars {
                return Err(Error::InvalidIdeal(format!(
                    "generator {g:?} has {} exponents, expected {num_vars}",
                    g.len()
                )));
            }
            if g.iter().all(|&x| x == 0) {
                return Err(Error::InvalidIdeal("the unit monomial is not allowed".into()));
            }
        }
        let mut gens = generators;
        gens.sort();
        gens.dedup();
        let minimal: Vec<Vec<u64>> = gens
            .iter()
            .filter(|g| !gens.iter().any(|h| h != *g && dominates(g, h)))
            .cloned()
            .collect();

        let mut pure_powers = Vec::with_capacity(num_vars);
        for i in 0..num_vars {
            let power = minimal
                .iter()
                .filter(|g| g.iter().enumerate().all(|(j, &x)| j == i || x == 0))
                .map(|g| g[i])
                .min();
            match power {
                Some(c) => pure_powers.push(c),
                None => {
                    return Err(Error::InvalidIdeal(format!(
                        "not m-primary: no pure power of variable {}",
                        i + 1
                    )))
                }
            }
        }
        Ok(MonomialIdeal { num_vars, generators: minimal, pure_powers })
    }

    /// The parameter ideal `(x_1^{c_1}, ..., x_n^{c_n})`.
    pub fn pure_powers(exponents: &[u64]) -> Result<Self> {
        let n = exponents.len();
        let gens = exponents
            .iter()
            .enumerate()
            .map(|(i, &c)| {
                let mut g = vec![0; n];
                g[i] = c;
                g
            })
            .collect();
        Self::new(n, gens)
    }

    /// The maximal ideal `(x_1, ..., x_n)`.
    pub fn maximal(num_vars: usize) -> Result<Self> {
        Self::pure_powers(&vec![1; num_vars])
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn generators(&self) -> &[Vec<u64>] {
        &self.generators
    }

    pub fn pure_power_exponents(&self) -> &[u64] {
        &self.pure_powers
    }

    /// True when every minimal generator is a pure power.
    pub fn is_parameter_ideal(&self) -> bool {
        self.generators.len() == self.num_vars
    }

    /// Exponents multiplied by `m`; equal to the bracket power `I^[m]`.
    pub fn scaled(&self, m: u64) -> Result<Self> {
        if m == 0 {
            return Err(Error::invalid("scale factor must be >= 1"));
        }
        let gens = self
            .generators
            .iter()
            .map(|g| g.iter().map(|&x| x * m).collect())
            .collect();
        Self::new(self.num_vars, gens)
    }

    pub fn contains(&self, point: &[u64]) -> bool {
        self.generators.iter().any(|g| dominates(point, g))
    }
}

impl fmt::Debug for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MonomialIdeal({self})")
    }
}

/// One generator per line (or `/`-separated), exponents space-separated.
impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let lines: Vec<String> = self
            .generators
            .iter()
            .map(|g| g.iter().map(u64::to_string).collect::<Vec<_>>().join(" "))
            .collect();
        write!(f, "{}", lines.join(" / "))
    }
}

/// Parses one generator per line; `/` also separates generators, `#` starts
/// a comment and blank lines are skipped.
impl FromStr for MonomialIdeal {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut gens = Vec::new();
        for line in s.lines() {
            let line = line.split('#').next().unwrap_or("");
            for chunk in line.split('/') {
                let chunk = chunk.trim();
                if chunk.is_empty() {
                    continue;
                }
                let g = chunk
                    .split_whitespace()
                    .map(|t| t.parse::<u64>().map_err(|_| Error::parse(t, "a non-negative exponent")))
                    .collect::<Result<Vec<u64>>>()?;
                gens.push(g);
            }
        }
        let n = gens.first().map(Vec::len).ok_or_else(|| Error::InvalidIdeal("no generators".into()))?;
        MonomialIdeal::new(n, gens)
    }
}

/// Count of the box `[0, dims_0) x ... x [0, dims_{n-2})` prefixes. Each
/// prefix contributes `row(prefix)` points along the last coordinate.
fn count_rows<F>(dims: &[u64], row: F) -> u64
where
    F: Fn(&[u64]) -> u64 + Sync,
{
    let (&last, prefix_dims) = dims.split_last().expect("at least one variable");
    let _ = last;
    if prefix_dims.is_empty() {
        return row(&[]);
    }
    // Partition on the first coordinate; each slab is scanned row-major.
    (0..prefix_dims[0])
        .into_par_iter()
        .map(|first| {
            let mut prefix = vec![0u64; prefix_dims.len()];
            prefix[0] = first;
            let mut total = 0u64;
            loop {
                total += row(&prefix);
                let mut i = prefix.len() - 1;
                loop {
                    if i == 0 {
                        return total;
                    }
                    prefix[i] += 1;
                    if prefix[i] < prefix_dims[i] {
                        break;
                    }
                    prefix[i] = 0;
                    i -= 1;
                }
            }
        })
        .sum()
}

fn checked_box(ideal: &MonomialIdeal, q: u64) -> Result<Vec<u64>> {
    let dims = ideal
        .pure_powers
        .iter()
        .map(|&c| c.checked_mul(q))
        .collect::<Option<Vec<u64>>>()
        .ok_or_else(|| Error::invalid("bounding box overflows u64"))?;
    dims.iter()
        .try_fold(1u64, |acc, &x| acc.checked_mul(x))
        .ok_or_else(|| Error::invalid("bounding box overflows u64"))?;
    Ok(dims)
}

/// `lambda(R / I^[q])`: lattice points not dominating any `q * g`.
pub fn frobenius_colength(ideal: &MonomialIdeal, q: u64) -> Result<u64> {
    if q == 0 {
        return Err(Error::invalid("q must be >= 1"));
    }
    let dims = checked_box(ideal, q)?;
    let n = ideal.num_vars;
    let scaled: Vec<Vec<u64>> = ideal
        .generators
        .iter()
        .map(|g| g.iter().map(|&x| x * q).collect())
        .collect();
    let last = dims[n - 1];
    Ok(count_rows(&dims, |prefix| {
        // Points in this row enter the ideal at the smallest last exponent
        // among generators whose other exponents the prefix already dominates.
        scaled
            .iter()
            .filter(|g| dominates(prefix, &g[..n - 1]))
            .map(|g| g[n - 1])
            .min()
            .unwrap_or(last)
            .min(last)
    }))
}

/// `lambda(R / (J^{floor(s q)} + J^[q]))` for a parameter ideal
/// `J = (x_1^{c_1}, ..., x_n^{c_n})`. A monomial `x^a` lies in `J^k` iff
/// `sum_i floor(a_i / c_i) >= k`.
pub fn mixed_colength(ideal: &MonomialIdeal, s: &Rational, q: u64) -> Result<u64> {
    if !ideal.is_parameter_ideal() {
        return Err(Error::InvalidIdeal("mixed colength needs pure-power generators only".into()));
    }
    if s.is_negative() {
        return Err(Error::invalid(format!("s = {s} must be >= 0")));
    }
    if q == 0 {
        return Err(Error::invalid("q must be >= 1"));
    }
    let dims = checked_box(ideal, q)?;
    let power = (s * Rational::from(q)).floor().to_u64().unwrap_or(u64::MAX);
    let c = &ideal.pure_powers;
    let n = ideal.num_vars;
    let last = dims[n - 1];
    Ok(count_rows(&dims, |prefix| {
        let used: u64 = prefix.iter().zip(c).map(|(a, ci)| a / ci).sum();
        match power.checked_sub(used) {
            None | Some(0) => 0,
            Some(left) => left.saturating_mul(c[n - 1]).min(last),
        }
    }))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColengthEntry {
    pub q: u64,
    pub colength: u64,
    /// `colength / q^n`.
    pub normalized: Rational,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColengthSequence {
    pub ideal: MonomialIdeal,
    pub entries: Vec<ColengthEntry>,
}

impl ColengthSequence {
    /// The common normalized value, if the sequence is constant.
    pub fn constant_value(&self) -> Option<&Rational> {
        let first = &self.entries.first()?.normalized;
        self.entries.iter().all(|e| &e.normalized == first).then_some(first)
    }
}

/// Raw normalized colengths `lambda(R/I^[q]) / q^n` for each `q`.
pub fn ehk_estimate(ideal: &MonomialIdeal, q_list: &[u64]) -> Result<ColengthSequence> {
    if q_list.is_empty() {
        return Err(Error::invalid("q list is empty"));
    }
    if q_list.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::invalid("q list must be strictly increasing"));
    }
    let entries = q_list
        .iter()
        .map(|&q| {
            let colength = frobenius_colength(ideal, q)?;
            let volume = Rational::from(q).pow(ideal.num_vars as i32);
            Ok(ColengthEntry { q, colength, normalized: Rational::from(colength) / volume })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(ColengthSequence { ideal: ideal.clone(), entries })
}
