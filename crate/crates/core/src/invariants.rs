//! Invariants of the binary quartic (S, T, j) and quintic (J, K, L, H),
//! the Sylvester canonical form, and the dimension count of the invariant ring.

use std::collections::HashMap;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::forms::{discriminant, transvectant, BinaryForm};
use crate::mpoly::MPoly;
use crate::rational::{rat, ratio, Rational};

/// A binary quartic in the binomial convention
/// `q0 x1^4 + 4 q1 x1^3 x2 + 6 q2 x1^2 x2^2 + 4 q3 x1 x2^3 + q4 x2^4`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quartic {
    q: [MPoly; 5],
}

impl Quartic {
    pub fn from_binomial(q: [MPoly; 5]) -> Self {
        Quartic { q }
    }

    /// Converts a plain (no binomial factors) form of order 4.
    pub fn from_form(f: &BinaryForm) -> Result<Self> {
        if f.order() != 4 {
            return Err(Error::WrongOrder {
                expected: 4,
                got: f.order(),
            });
        }
        let q: [MPoly; 5] = f.binomial_coeffs().try_into().expect("five coefficients");
        Ok(Quartic { q })
    }

    pub fn q(&self) -> &[MPoly; 5] {
        &self.q
    }

    pub fn form(&self) -> BinaryForm {
        BinaryForm::quartic_binomial(self.q.clone())
    }

    /// `q0 q4 − 4 q1 q3 + 3 q2²`
    pub fn s(&self) -> MPoly {
        let [q0, q1, q2, q3, q4] = &self.q;
        &(&(q0 * q4) - &(q1 * q3).scale(&rat(4))) + &(q2 * q2).scale(&rat(3))
    }

    /// `q0 q2 q4 + 2 q1 q2 q3 − q2³ − q0 q3² − q1² q4`
    pub fn t(&self) -> MPoly {
        let [q0, q1, q2, q3, q4] = &self.q;
        let q2q4 = q2 * q4;
        let mut t = q0 * &q2q4;
        t = &t + &(&(q1 * q2) * q3).scale(&rat(2));
        t = &t - &(&(q2 * q2) * q2);
        t = &t - &(&(q3 * q3) * q0);
        &t - &(&(q1 * q1) * q4)
    }

    pub fn invariants(&self) -> QuarticInvariants {
        QuarticInvariants {
            s: self.s(),
            t: self.t(),
        }
    }
}

/// `½ (Q, Q)_4`, computed from the transvectant.
pub fn quartic_s_transvectant(q: &BinaryForm) -> Result<MPoly> {
    check_order(q, 4)?;
    let c = transvectant(q, q, 4)?;
    Ok(c.coeff(0).scale(&ratio(1, 2)))
}

/// `⅙ (Q, (Q, Q)_2)_4`, computed from transvectants.
pub fn quartic_t_transvectant(q: &BinaryForm) -> Result<MPoly> {
    check_order(q, 4)?;
    let h = transvectant(q, q, 2)?;
    let c = transvectant(q, &h, 4)?;
    Ok(c.coeff(0).scale(&ratio(1, 6)))
}

fn check_order(f: &BinaryForm, expected: usize) -> Result<()> {
    if f.order() != expected {
        return Err(Error::WrongOrder {
            expected,
            got: f.order(),
        });
    }
    Ok(())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuarticInvariants {
    pub s: MPoly,
    pub t: MPoly,
}

impl QuarticInvariants {
    /// `2⁸ (S³ − 27 T²)`
    pub fn disc(&self) -> MPoly {
        (&self.s.pow(3) - &self.t.pow(2).scale(&rat(27))).scale(&rat(256))
    }
}

/// `S³ / (S³ − 27 T²)` for a numeric quartic.
pub fn j_invariant(q: &Quartic) -> Result<Rational> {
    let QuarticInvariants { s, t } = q.invariants();
    let (s, t) = match (s.as_constant(), t.as_constant()) {
        (Some(s), Some(t)) => (s, t),
        _ => return Err(Error::Domain("j-invariant needs a numeric quartic".into())),
    };
    let s3 = s.pow(3);
    let den = &s3 - &(&t.pow(2) * &rat(27));
    if den.is_zero() {
        return Err(Error::DegenerateQuartic);
    }
    Ok(&s3 / &den)
}

/// The covariants C₁ … C₄ of a quintic.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuinticCovariants {
    /// `(F, F)_4`, order 2
    pub c1: BinaryForm,
    /// `(F, C₁)_2`, order 3
    pub c2: BinaryForm,
    /// `(C₂, C₂)_2`, order 2
    pub c3: BinaryForm,
    /// `(C₂, C₁)_2`, order 1
    pub c4: BinaryForm,
}

impl QuinticCovariants {
    /// `Can(F) = −C₂`
    pub fn canonizant(&self) -> BinaryForm {
        self.c2.map_coeffs(|c| -c)
    }
}

pub fn quintic_covariants(f: &BinaryForm) -> Result<QuinticCovariants> {
    check_order(f, 5)?;
    let c1 = transvectant(f, f, 4)?;
    let c2 = transvectant(f, &c1, 2)?;
    let c3 = transvectant(&c2, &c2, 2)?;
    let c4 = transvectant(&c2, &c1, 2)?;
    Ok(QuinticCovariants { c1, c2, c3, c4 })
}

/// Exact values (or polynomials) of the fundamental quintic invariants.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvariantVector {
    pub j: MPoly,
    pub k: MPoly,
    pub l: MPoly,
    pub h: MPoly,
    pub disc: MPoly,
}

impl InvariantVector {
    /// Degrees of J, K, L, H, Disc in the coefficients of the quintic.
    pub const DEGREES: [u64; 5] = [4, 8, 12, 18, 8];
    /// Weights of J, K, L, H, Disc.
    pub const WEIGHTS: [u64; 5] = [10, 20, 30, 45, 20];

    pub fn as_array(&self) -> [&MPoly; 5] {
        [&self.j, &self.k, &self.l, &self.h, &self.disc]
    }

    /// Numeric values `[J, K, L, H, Disc]`, if all are constants.
    pub fn values(&self) -> Option<[Rational; 5]> {
        let v: Option<Vec<Rational>> = self.as_array().iter().map(|p| p.as_constant()).collect();
        v.map(|v| v.try_into().expect("five values"))
    }

    pub fn to_json(&self) -> serde_json::Value {
        let names = ["J", "K", "L", "H", "Disc"];
        let mut map = serde_json::Map::new();
        for (n, p) in names.iter().zip(self.as_array()) {
            let v = match p.as_constant() {
                Some(c) => c.to_string(),
                None => p.to_string(),
            };
            map.insert(n.to_string(), serde_json::Value::String(v));
        }
        serde_json::Value::Object(map)
    }
}

/// J, K, L, H by the transvectant chain, Disc by the resultant of the partials.
pub fn quintic_invariants(f: &BinaryForm) -> Result<InvariantVector> {
    let QuinticCovariants { c1, c2: _, c3, c4 } = quintic_covariants(f)?;
    let j = transvectant(&c1, &c1, 2)?.coeff(0).scale(&ratio(-1, 2));
    let k = transvectant(&c1, &c3, 2)?.coeff(0).scale(&ratio(1, 8));
    let l = transvectant(&c3, &c3, 2)?.coeff(0).scale(&ratio(1, 96));
    let a = transvectant(&c4, &c3, 1)?;
    let b = transvectant(&c1, &c4, 1)?;
    let h = transvectant(&a, &b, 1)?.coeff(0).scale(&ratio(-1, 384));
    let disc = discriminant(f)?;
    Ok(InvariantVector { j, k, l, h, disc })
}

/// Right-hand side of the degree-36 syzygy, divided by nothing:
/// `−432L³ − 72L²KJ + 8LK³ − 2LK²J² + L²J³ + K⁴J`.
pub fn syzygy_rhs(j: &MPoly, k: &MPoly, l: &MPoly) -> MPoly {
    let l2 = l * l;
    let k2 = k * k;
    let j2 = j * j;
    let terms = [
        (rat(-432), &l2 * l),
        (rat(-72), &(&l2 * k) * j),
        (rat(8), &(l * &k2) * k),
        (rat(-2), &(l * &k2) * &j2),
        (rat(1), &(&l2 * &j2) * j),
        (rat(1), &(&k2 * &k2) * j),
    ];
    terms
        .iter()
        .fold(MPoly::zero(), |acc, (c, t)| &acc + &t.scale(c))
}

/// Whether `16 H² = −432L³ − 72L²KJ + 8LK³ − 2LK²J² + L²J³ + K⁴J` holds exactly.
pub fn verify_relation(iv: &InvariantVector) -> bool {
    let lhs = (&iv.h * &iv.h).scale(&rat(16));
    lhs == syzygy_rhs(&iv.j, &iv.k, &iv.l)
}

/// A point `(u, v, w)` of the Sylvester canonical form `u x1⁵ + v x2⁵ − w (x1 + x2)⁵`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SylvesterPoint {
    pub u: MPoly,
    pub v: MPoly,
    pub w: MPoly,
}

impl SylvesterPoint {
    pub fn new(u: impl Into<MPoly>, v: impl Into<MPoly>, w: impl Into<MPoly>) -> Self {
        SylvesterPoint {
            u: u.into(),
            v: v.into(),
            w: w.into(),
        }
    }

    pub fn symbolic() -> Self {
        SylvesterPoint::new(MPoly::var("u"), MPoly::var("v"), MPoly::var("w"))
    }

    /// The quintic `[u − w, −5w, −10w, −10w, −5w, v − w]`.
    pub fn specialize(&self) -> BinaryForm {
        let w = &self.w;
        let coeffs = vec![
            &self.u - w,
            w.scale(&rat(-5)),
            w.scale(&rat(-10)),
            w.scale(&rat(-10)),
            w.scale(&rat(-5)),
            &self.v - w,
        ];
        BinaryForm::new(coeffs).expect("six coefficients")
    }

    /// Closed forms of J, K, L, H on the canonical form.
    pub fn closed_forms(&self) -> [MPoly; 4] {
        let (u, v, w) = (&self.u, &self.v, &self.w);
        let e2 = &(&(u * v) + &(u * w)) + &(v * w);
        let e3 = &(u * v) * w;
        let e1 = &(u + v) + w;
        let j = &(&e2 * &e2) - &(&e3 * &e1).scale(&rat(4));
        let e3sq = &e3 * &e3;
        let k = &e3sq * &e2;
        let l = &e3sq * &e3sq;
        let diffs = &(&(u - v) * &(u - w)) * &(v - w);
        let h = &(&l * &e3) * &diffs;
        [j, k, l, h]
    }
}

/// An exponent triple `L^l K^k J^j`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct JklMonomial {
    pub l: u32,
    pub k: u32,
    pub j: u32,
}

impl JklMonomial {
    pub const fn new(l: u32, k: u32, j: u32) -> Self {
        JklMonomial { l, k, j }
    }

    /// Degree in the quintic's coefficients: `12 l + 8 k + 4 j`.
    pub fn degree(&self) -> u64 {
        12 * self.l as u64 + 8 * self.k as u64 + 4 * self.j as u64
    }

    pub fn mul(&self, o: &JklMonomial) -> JklMonomial {
        JklMonomial::new(self.l + o.l, self.k + o.k, self.j + o.j)
    }

    pub fn is_one(&self) -> bool {
        self.l == 0 && self.k == 0 && self.j == 0
    }

    /// Evaluates `L^l K^k J^j` with the given values of J, K, L.
    pub fn eval(&self, j: &MPoly, k: &MPoly, l: &MPoly) -> MPoly {
        &(&l.pow(self.l) * &k.pow(self.k)) * &j.pow(self.j)
    }
}

impl fmt::Display for JklMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.l, self.k, self.j)
    }
}

fn check_div4(d: u64) -> Result<()> {
    if d == 0 || !d.is_multiple_of(4) {
        return Err(Error::DegreeNotDivisible(d, 4));
    }
    Ok(())
}

fn nu(k: u64) -> u64 {
    if k >= 1 && (k - 1).is_multiple_of(6) {
        k / 6
    } else {
        k / 6 + 1
    }
}

/// Dimension of the degree-`d` invariants of the quintic, `ν(0) + … + ν(d/4)`.
pub fn graded_dimension(d: u64) -> Result<u64> {
    check_div4(d)?;
    Ok((0..=d / 4).map(nu).sum())
}

/// `3l² + 3l + 1`, the dimension in degree `24 l`.
pub fn dimension_formula(l: u64) -> u64 {
    3 * l * l + 3 * l + 1
}

/// All `L^a K^b J^c` of degree `d`, L-exponent first, descending lexicographically.
pub fn monomial_basis(d: u64) -> Result<Vec<JklMonomial>> {
    check_div4(d)?;
    let w = d / 4; // 3l + 2k + j = w
    let mut out = Vec::new();
    for l in (0..=w / 3).rev() {
        let rest = w - 3 * l;
        for k in (0..=rest / 2).rev() {
            out.push(JklMonomial::new(l as u32, k as u32, (rest - 2 * k) as u32));
        }
    }
    Ok(out)
}

/// Bindings `a_i ↦ coefficient` of a canonical form, for substitution into
/// polynomials in the generic quintic coefficients `a0 … a5`.
pub fn canonical_bindings(pt: &SylvesterPoint) -> HashMap<String, MPoly> {
    pt.specialize()
        .coeffs()
        .iter()
        .enumerate()
        .map(|(i, c)| (format!("a{i}"), c.clone()))
        .collect()
}
