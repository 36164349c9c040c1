//! Bounds propagated through chains of radical extensions `R -> S = R[z^(1/n)]`
//! of a Gorenstein ring with multiplicity `e`, embedding codimension `k` and
//! field-extension degree `b`.

use std::str::FromStr;

use num_traits::ToPrimitive;

use crate::error::{Error, Result};
use crate::rational::{factorial_big, Rational};

/// Which inequality applies: `k = e - 2` or `k < e - 2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GapCase {
    MinimalGap,
    General,
}

impl GapCase {
    pub fn as_str(&self) -> &'static str {
        match self {
            GapCase::MinimalGap => "minimal_gap",
            GapCase::General => "general",
        }
    }
}

impl FromStr for GapCase {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "minimal_gap" | "minimal-gap" => Ok(GapCase::MinimalGap),
            "general" => Ok(GapCase::General),
            _ => Err(Error::parse(s, "minimal_gap or general")),
        }
    }
}

fn check_step(e: u64, k: u64, n: u64, b: u64) -> Result<GapCase> {
    if n < 2 {
        return Err(Error::invalid(format!("root degree n = {n} must be >= 2")));
    }
    if b < 1 || b > n {
        return Err(Error::invalid(format!("extension degree b = {b} must lie in [1, n = {n}]")));
    }
    if k < 3 || e < 2 || k > e - 2 {
        return Err(Error::invalid(format!("need 3 <= k <= e - 2, got k = {k}, e = {e}")));
    }
    Ok(if k == e - 2 { GapCase::MinimalGap } else { GapCase::General })
}

/// One-step bound for `e_HK(R)` given `e_HK(S) = ehk_next`.
pub fn radical_step_bound(e: u64, k: u64, n: u64, b: u64, ehk_next: &Rational) -> Result<Rational> {
    let case = check_step(e, k, n, b)?;
    if *ehk_next < 1 {
        return Err(Error::invalid(format!("e_HK(S) = {ehk_next} must be >= 1")));
    }
    let (e, k, n, b) = (Rational::from(e), Rational::from(k), Rational::from(n), Rational::from(b));
    let one = Rational::one();
    let n1 = &n - &one;
    Ok(match case {
        GapCase::MinimalGap => {
            let den = &e * &n - Rational::integer(2);
            &e * &n1 / &den + &n * (&e - Rational::integer(2)) / (&b * &den) * ehk_next
        }
        GapCase::General => {
            let den = &n1 * &e + &k + &one;
            &e * &n1 / &den + &n * (&k + &one) / (&b * &den) * ehk_next
        }
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RadicalParams {
    pub d: u32,
    pub e: u64,
    pub k: u64,
    pub n: u64,
    pub b: u64,
    /// Number of extensions in the chain before a non-F-regular ring is reached.
    pub iterations: u32,
}

impl RadicalParams {
    pub fn new(d: u32, e: u64, k: u64, n: u64, b: u64, iterations: u32) -> Result<Self> {
        if d < 2 {
            return Err(Error::invalid(format!("dimension {d} must be >= 2")));
        }
        if e < 6 {
            return Err(Error::invalid(format!("multiplicity {e} must be >= 6")));
        }
        check_step(e, k, n, b)?;
        Ok(RadicalParams { d, e, k, n, b, iterations })
    }

    pub fn case(&self) -> GapCase {
        if self.k == self.e - 2 {
            GapCase::MinimalGap
        } else {
            GapCase::General
        }
    }

    /// Contraction factor of one step and the excess `e_HK - 1` of the chain's end.
    fn contraction(&self) -> (Rational, Rational) {
        let (e, k, n) = (Rational::from(self.e), Rational::from(self.k), Rational::from(self.n));
        let one = Rational::one();
        match self.case() {
            GapCase::MinimalGap => {
                let two = Rational::integer(2);
                ((&e - &two) / (&e * &n - &two), &e / &two - &one)
            }
            GapCase::General => {
                let kk = &k + &one;
                (&kk / ((&n - &one) * &e + &kk), one / Rational::from(self.d))
            }
        }
    }
}

/// Closed form `1 + c^iterations * excess`, where `c` is the one-step
/// contraction for equal root and field degrees.
pub fn radical_recursion_bound(rp: &RadicalParams) -> Rational {
    let (c, excess) = rp.contraction();
    Rational::one() + c.pow(rp.iterations as i32) * excess
}

/// Applies [`radical_step_bound`] `iterations` times from the chain's end
/// value, honoring `b`. Matches [`radical_recursion_bound`] when `b = n`.
pub fn radical_iterate(rp: &RadicalParams) -> Rational {
    let (_, excess) = rp.contraction();
    let mut value = Rational::one() + excess;
    for _ in 0..rp.iterations {
        value = radical_step_bound(rp.e, rp.k, rp.n, rp.b, &value).expect("validated parameters");
    }
    value
}

/// Uniform bound for Gorenstein F-regular non-complete-intersection rings.
///
/// `1 + 1/d!` once `e >= d! + 1`; otherwise the chain bound with `n` chosen
/// as `ceil(d/2)` or `ceil(d/3)` and the worst-case multiplicity.
pub fn final_theorem_bound(d: u32, e: u64, case: GapCase) -> Result<Rational> {
    if d < 2 {
        return Err(Error::invalid(format!("dimension {d} must be >= 2")));
    }
    if e < 6 {
        return Err(Error::invalid(format!("multiplicity {e} must be >= 6")));
    }
    let d_fact = factorial_big(d);
    let one = Rational::one();
    if d_fact.to_u64().is_some_and(|f| e > f) {
        return Ok(one / Rational::from(d_fact) + Rational::one());
    }
    let four = Rational::integer(4);
    let dd = Rational::from(d);
    Ok(match case {
        GapCase::MinimalGap => {
            let half = Rational::from(d.div_ceil(2));
            let c = &four / (Rational::integer(6) * half - Rational::integer(2));
            one + c.pow(d as i32) * Rational::integer(2)
        }
        GapCase::General => {
            let third = Rational::from(d.div_ceil(3));
            let c = &four / (third * Rational::from(d_fact) + &four);
            one + c.pow(d as i32) / dd
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(s: &str) -> Rational {
        s.parse().unwrap()
    }

    #[test]
    fn step_with_square_roots() {
        let x = r("9/7");
        for e in 6..20u64 {
            let er = Rational::from(e);
            let expected = &er / (r("2") * (&er - r("1"))) + (&er - r("2")) / (r("2") * (&er - r("1"))) * &x;
            assert_eq!(radical_step_bound(e, e - 2, 2, 2, &x).unwrap(), expected);
            for k in 3..e - 2 {
                let kr = Rational::from(k);
                let den = &er + &kr + r("1");
                let expected = &er / &den + (&kr + r("1")) / &den * &x;
                assert_eq!(radical_step_bound(e, k, 2, 2, &x).unwrap(), expected);
            }
        }
        assert_eq!(radical_step_bound(6, 4, 2, 2, &r("1")).unwrap(), 1);
    }

    #[test]
    fn step_contracts_towards_one() {
        for e in 5..15u64 {
            for k in 3..=e - 2 {
                for n in 2..5u64 {
                    assert_eq!(radical_step_bound(e, k, n, n, &r("1")).unwrap(), 1);
                    let x = r("3/2");
                    let y = radical_step_bound(e, k, n, n, &x).unwrap();
                    assert!(y > 1 && y < x, "e={e} k={k} n={n} y={y}");
                }
            }
        }
    }

    #[test]
    fn step_validation() {
        assert!(radical_step_bound(6, 4, 1, 1, &r("1")).is_err());
        assert!(radical_step_bound(6, 4, 2, 3, &r("1")).is_err());
        assert!(radical_step_bound(6, 4, 2, 0, &r("1")).is_err());
        assert!(radical_step_bound(6, 5, 2, 2, &r("1")).is_err());
        assert!(radical_step_bound(6, 2, 2, 2, &r("1")).is_err());
        assert!(radical_step_bound(6, 4, 2, 2, &r("1/2")).is_err());
    }

    #[test]
    fn recursion_closed_forms() {
        let rp = RadicalParams::new(4, 6, 4, 2, 2, 0).unwrap();
        assert_eq!(radical_recursion_bound(&rp), 3);
        let rp = RadicalParams::new(4, 10, 8, 2, 2, 0).unwrap();
        assert_eq!(radical_recursion_bound(&rp), 5);
        let rp = RadicalParams::new(4, 6, 4, 2, 2, 4).unwrap();
        assert_eq!(radical_recursion_bound(&rp), r("1.0512"));
        // General branch: (k+1)/((n-1)e+k+1) = 4/10 with e = 6, k = 3, n = 2.
        let rp = RadicalParams::new(3, 6, 3, 2, 2, 3).unwrap();
        assert_eq!(rp.case(), GapCase::General);
        assert_eq!(radical_recursion_bound(&rp), r("1") + r("4/10").pow(3) / r("3"));
    }

    #[test]
    fn recursion_matches_iterated_steps() {
        for d in 2..6u32 {
            for e in 6..12u64 {
                for k in 3..=e - 2 {
                    for n in 2..4u64 {
                        for it in 0..5u32 {
                            let rp = RadicalParams::new(d, e, k, n, n, it).unwrap();
                            assert_eq!(radical_recursion_bound(&rp), radical_iterate(&rp));
                        }
                    }
                }
            }
        }
        // A smaller field degree only helps.
        let even = RadicalParams::new(4, 8, 4, 3, 3, 3).unwrap();
        let lower_b = RadicalParams::new(4, 8, 4, 3, 2, 3).unwrap();
        assert!(radical_iterate(&lower_b) > radical_iterate(&even));
    }

    #[test]
    fn params_validation() {
        assert!(RadicalParams::new(1, 6, 4, 2, 2, 1).is_err());
        assert!(RadicalParams::new(3, 5, 3, 2, 2, 1).is_err());
        assert!(RadicalParams::new(3, 6, 5, 2, 2, 1).is_err());
        assert!(RadicalParams::new(3, 6, 3, 1, 1, 1).is_err());
    }

    #[test]
    fn final_theorem() {
        assert_eq!(final_theorem_bound(3, 7, GapCase::MinimalGap).unwrap(), r("7/6"));
        assert_eq!(final_theorem_bound(3, 7, GapCase::General).unwrap(), r("7/6"));
        assert_eq!(final_theorem_bound(4, 6, GapCase::MinimalGap).unwrap(), r("1.0512"));
        // 6 >= 2! + 1, so d = 2 always lands in the large-multiplicity branch.
        assert_eq!(final_theorem_bound(2, 6, GapCase::MinimalGap).unwrap(), r("3/2"));
        let expected = r("1") + (r("4") / (r("2") * r("24") + r("4"))).pow(4) / r("4");
        assert_eq!(final_theorem_bound(4, 6, GapCase::General).unwrap(), expected);
        assert_eq!(final_theorem_bound(3, 6, GapCase::MinimalGap).unwrap(), r("1") + r("2") * r("4/10").pow(3));
        assert!(final_theorem_bound(1, 6, GapCase::General).is_err());
        assert!(final_theorem_bound(4, 5, GapCase::General).is_err());
        // Large d uses big factorials without overflow.
        assert!(final_theorem_bound(25, 1_000_000, GapCase::General).unwrap() > 1);
    }

    #[test]
    fn closed_form_is_chain_bound_at_worst_case() {
        // With e = 6, k = e - 2 and n = ceil(d/2), d iterations give the closed form.
        for d in 3..8u32 {
            let n = d.div_ceil(2) as u64;
            if n < 2 {
                continue;
            }
            let rp = RadicalParams::new(d, 6, 4, n, n, d).unwrap();
            assert_eq!(radical_recursion_bound(&rp), final_theorem_bound(d, 6, GapCase::MinimalGap).unwrap());
        }
    }

    #[test]
    fn gap_case_parsing() {
        assert_eq!("minimal_gap".parse::<GapCase>().unwrap(), GapCase::MinimalGap);
        assert_eq!("general".parse::<GapCase>().unwrap(), GapCase::General);
        assert!("other".parse::<GapCase>().is_err());
    }
}
