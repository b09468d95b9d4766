//! Orbit comparison of stable quintics.
//!
//! Under `F ↦ c · (gF)` the invariants J, K, L, H pick up the factors
//! `s², s⁴, s⁶, s⁹` for a single nonzero scalar `s`. Two stable quintics lie
//! in the same orbit iff such an `s` exists over the algebraic closure.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Signed;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::forms::BinaryForm;
use crate::invariants::quintic_invariants;
use crate::rational::Rational;

use super::pipeline::beauville_numeric;

const NAMES: [&str; 4] = ["J", "K", "L", "H"];
const S_WEIGHTS: [i64; 4] = [2, 4, 6, 9];

/// Outcome of [`gl2_equivalent`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Witness {
    /// `s^power = value`; `s` is filled in when a rational root exists.
    Scalar {
        power: i64,
        value: Rational,
        s: Option<Rational>,
    },
    Mismatch { reason: String },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Equivalence {
    pub equivalent: bool,
    pub witness: Witness,
}

fn numeric_jklh(f: &BinaryForm) -> Result<[Rational; 4]> {
    if f.order() != 5 {
        return Err(Error::WrongOrder {
            expected: 5,
            got: f.order(),
        });
    }
    if !f.is_numeric() {
        return Err(Error::Domain("equivalence needs rational coefficients".into()));
    }
    let iv = quintic_invariants(f)?;
    let [j, k, l, h, disc] = iv.values().expect("numeric");
    if disc.is_zero() {
        return Err(Error::UnstableForm);
    }
    Ok([j, k, l, h])
}

fn rpow(r: &Rational, e: i64) -> Rational {
    r.pow(e as i32)
}

/// Whether two stable quintics are in the same `GL₂`-and-scaling orbit.
///
/// Invariants are processed in the order J, K, L, H, keeping a pair
/// `(g, σ)` with `s^g = σ`; each new ratio `s^w = r` is consistent iff
/// `σ^(w/g') = r^(g/g')` with `g' = gcd(g, w)`, after which
/// `s^g' = σ^a r^b` for Bézout coefficients `a g + b w = g'`.
pub fn gl2_equivalent(f1: &BinaryForm, f2: &BinaryForm) -> Result<Equivalence> {
    let x1 = numeric_jklh(f1)?;
    let x2 = numeric_jklh(f2)?;
    let mut state: Option<(i64, Rational)> = None;
    for i in 0..4 {
        let mismatch = || Equivalence {
            equivalent: false,
            witness: Witness::Mismatch {
                reason: format!("{}-ratio mismatch", NAMES[i]),
            },
        };
        match (x1[i].is_zero(), x2[i].is_zero()) {
            (true, true) => continue,
            (true, false) | (false, true) => return Ok(mismatch()),
            (false, false) => {}
        }
        let w = S_WEIGHTS[i];
        let r = &x2[i] / &x1[i];
        state = Some(match state {
            None => (w, r),
            Some((g, sigma)) => {
                let e = g.extended_gcd(&w);
                let gp = e.gcd;
                if rpow(&sigma, w / gp) != rpow(&r, g / gp) {
                    return Ok(mismatch());
                }
                (gp, &rpow(&sigma, e.x) * &rpow(&r, e.y))
            }
        });
    }
    let (power, value) = state.ok_or(Error::UnstableForm)?;
    let s = rational_root(&value, power);
    Ok(Equivalence {
        equivalent: true,
        witness: Witness::Scalar { power, value, s },
    })
}

/// The rational `n`-th root of `r` (the positive one for even `n`), if any.
fn rational_root(r: &Rational, n: i64) -> Option<Rational> {
    if n == 1 {
        return Some(r.clone());
    }
    let n32 = n as u32;
    if r.is_negative() && n % 2 == 0 {
        return None;
    }
    let root = |x: &BigInt| -> Option<BigInt> {
        let neg = x.is_negative();
        let y = x.abs().nth_root(n32);
        if num_traits::Pow::pow(&y, n32) == x.abs() {
            Some(if neg { -y } else { y })
        } else {
            None
        }
    };
    let num = root(r.numer())?;
    let den = root(r.denom())?;
    Rational::new(num, den).ok()
}

/// Whether the ℬ-vectors of two quintics are proportional, i.e. the quintics
/// `Σ ℬᵢ z^(5−i)` have the same roots.
pub fn same_j_data(f1: &BinaryForm, f2: &BinaryForm) -> Result<bool> {
    let b1 = beauville_numeric(f1)?;
    let b2 = beauville_numeric(f2)?;
    if b1[0].is_zero() || b2[0].is_zero() {
        return Err(Error::RepeatedRoots);
    }
    Ok((1..6).all(|i| &b1[i] * &b2[0] == &b2[i] * &b1[0]))
}
