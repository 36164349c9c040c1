use crate::error::{Error, Result};
use crate::rational::Rational;

/// The quadric hypersurface `x_0^2 + ... + x_d^2` in characteristic `p`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct QuadricParams {
    p: u64,
    d: u32,
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    (2..).take_while(|k| k * k <= n).all(|k| !n.is_multiple_of(k))
}

impl QuadricParams {
    pub fn new(p: u64, d: u32) -> Result<Self> {
        if p < 3 || !is_prime(p) {
            return Err(Error::invalid(format!("characteristic {p} must be an odd prime")));
        }
        if !(5..=6).contains(&d) {
            return Err(Error::UnsupportedDimension(d));
        }
        Ok(QuadricParams { p, d })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn d(&self) -> u32 {
        self.d
    }
}

/// Closed-form Hilbert-Kunz multiplicity of the quadric in dimension 5 or 6.
pub fn quadric_ehk(qp: QuadricParams) -> Rational {
    let p2 = Rational::from(qp.p).pow(2);
    let c = |n: i64| Rational::integer(n);
    match qp.d {
        5 => (c(17) * &p2 + c(12)) / (c(15) * &p2 + c(10)),
        6 => {
            let p4 = p2.pow(2);
            (c(781) * &p4 + c(656) * &p2 + c(315)) / (c(720) * &p4 + c(570) * &p2 + c(270))
        }
        _ => unreachable!("validated in QuadricParams::new"),
    }
}
