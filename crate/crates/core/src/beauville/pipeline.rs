//! ℬ₀ … ℬ₅ from the quartic Tschirnhaus transformation of a quintic.
//!
//! For a monic quintic `F(λ) = λ⁵ + a1 λ⁴ + … + a5`, the quotient
//! `Q_λ(x) = F(x) / (x − λ)` is a quartic whose coefficients are polynomials
//! in λ. Substituting them into `φ = (S³ − 27T²) z − S³`, reducing modulo
//! `F(λ)` and taking the resultant with `F` gives `Σ ℬᵢ z^(5−i)`.

use std::collections::HashMap;
use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::forms::{act, resultant, BinaryForm, GroupElement};
use crate::invariants::{quintic_invariants, Quartic};
use crate::mpoly::MPoly;
use crate::rational::{rat, ratio, Rational};

use super::closed_forms::beauville_closed_forms;

pub const LAMBDA: &str = "lambda";
pub const Z: &str = "z";

/// ℬ₀ … ℬ₅ of a quintic (rationals for numeric input, polynomials otherwise).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BeauvilleVector {
    pub b: [MPoly; 6],
}

impl BeauvilleVector {
    pub fn values(&self) -> Option<[Rational; 6]> {
        let v: Option<Vec<Rational>> = self.b.iter().map(MPoly::as_constant).collect();
        v.map(|v| v.try_into().expect("six values"))
    }
}

/// Intermediates of one run of the pipeline, for inspection.
#[derive(Clone, Debug)]
pub struct TschirnhausTrace {
    /// `q0 … q4` of `Q_λ` in the binomial convention.
    pub q: [MPoly; 5],
    pub phi: MPoly,
    pub phi_reduced: MPoly,
    /// The identity `φ = quotient · F(λ) + φ̄` holds with this quotient.
    pub phi_quotient: MPoly,
    pub r_bar: MPoly,
}

/// `Q_λ` for the monic quintic with coefficients `a1 … a4` (a5 does not enter).
pub fn quartic_of_root(a: &[MPoly; 4]) -> Quartic {
    let lam = MPoly::var(LAMBDA);
    // Horner partial sums λ^k + a1 λ^(k-1) + … + a_k
    let mut partial = MPoly::one();
    let mut sums = Vec::with_capacity(4);
    for ai in a {
        partial = &(&partial * &lam) + ai;
        sums.push(partial.clone());
    }
    Quartic::from_binomial([
        MPoly::one(),
        sums[0].scale(&ratio(1, 4)),
        sums[1].scale(&ratio(1, 6)),
        sums[2].scale(&ratio(1, 4)),
        sums[3].clone(),
    ])
}

/// `φ = (S(Q)³ − 27 T(Q)²) z − S(Q)³`.
pub fn build_phi(q: &Quartic, z: &str) -> MPoly {
    let s3 = q.s().pow(3);
    let t2 = q.t().pow(2);
    let disc = &s3 - &t2.scale(&rat(27));
    &(&disc * &MPoly::var(z)) - &s3
}

/// `λ⁵ + a1 λ⁴ + … + a5`.
pub fn monic_quintic_in_lambda(a: &[MPoly; 5]) -> MPoly {
    let lam = MPoly::var(LAMBDA);
    a.iter().fold(MPoly::one(), |acc, ai| &(&acc * &lam) + ai)
}

/// Runs the pipeline for a monic quintic, returning ℬ₀ … ℬ₅ in the
/// coefficients' own variables.
pub fn pipeline_monic(a: &[MPoly; 5]) -> Result<([MPoly; 6], TschirnhausTrace)> {
    let q = quartic_of_root(&[a[0].clone(), a[1].clone(), a[2].clone(), a[3].clone()]);
    let phi = build_phi(&q, Z);
    let f_lambda = monic_quintic_in_lambda(a);
    let (quot, phi_bar) = phi.monic_divrem(&f_lambda, LAMBDA)?;

    let mut f_coeffs = vec![MPoly::one()];
    f_coeffs.extend(a.iter().cloned());
    let f = BinaryForm::new(f_coeffs)?;
    // φ̄ has formal degree 4 in λ; coefficients listed from λ⁴ down.
    let mut g_coeffs = phi_bar.univariate_coeffs(LAMBDA);
    g_coeffs.resize(5, MPoly::zero());
    g_coeffs.reverse();
    let g = BinaryForm::new(g_coeffs)?;
    let r_bar = resultant(&f, &g)?;

    let b: [MPoly; 6] = std::array::from_fn(|i| r_bar.coefficient(Z, (5 - i) as u32));
    let trace = TschirnhausTrace {
        q: q.q().clone(),
        phi,
        phi_reduced: phi_bar,
        phi_quotient: quot,
        r_bar,
    };
    Ok((b, trace))
}

/// Multiplies each term `a1^e1 … a5^e5` by `a0^(degree − Σe)`.
pub fn rehomogenize(p: &MPoly, degree: u32) -> Result<MPoly> {
    let terms = p
        .named_terms()
        .into_iter()
        .map(|(c, mut ps)| {
            let used: u32 = ps.iter().map(|(_, e)| e).sum();
            if used > degree {
                return Err(Error::Domain(format!(
                    "term of degree {used} exceeds homogenizing degree {degree}"
                )));
            }
            if used < degree {
                ps.push(("a0".to_string(), degree - used));
            }
            Ok((c, ps))
        })
        .collect::<Result<Vec<_>>>()?;
    MPoly::from_terms(&terms)
}

fn generic_cache() -> &'static OnceLock<([MPoly; 6], TschirnhausTrace)> {
    static CACHE: OnceLock<([MPoly; 6], TschirnhausTrace)> = OnceLock::new();
    &CACHE
}

/// Cartesian ℬ₀ … ℬ₅ as homogeneous degree-24 polynomials in `a0 … a5`,
/// with the trace of the underlying monic run. Computed once per process.
pub fn generic_beauville() -> Result<&'static ([MPoly; 6], TschirnhausTrace)> {
    if let Some(v) = generic_cache().get() {
        return Ok(v);
    }
    let a: [MPoly; 5] = std::array::from_fn(|i| MPoly::var(&format!("a{}", i + 1)));
    let (b, trace) = pipeline_monic(&a)?;
    let mut out = Vec::with_capacity(6);
    for bi in &b {
        out.push(rehomogenize(bi, 24)?);
    }
    let b: [MPoly; 6] = out.try_into().expect("six");
    Ok(generic_cache().get_or_init(|| (b, trace)))
}

/// ℬ₀ … ℬ₅ by the resultant route.
///
/// A numeric quintic with `a0 = 0` is first moved by a unipotent substitution
/// `x2 ↦ x2 + t x1` (an `SL₂` element, so the invariants are unchanged).
/// Symbolic input with a non-constant leading coefficient goes through the
/// Cartesian expressions.
pub fn beauville_pipeline(f: &BinaryForm) -> Result<(BeauvilleVector, TschirnhausTrace)> {
    if f.order() != 5 {
        return Err(Error::WrongOrder {
            expected: 5,
            got: f.order(),
        });
    }
    if f.is_zero() {
        return Err(Error::ZeroForm);
    }
    let mut f = f.clone();
    if f.is_numeric() && f.coeff(0).is_zero() {
        f = shear_to_nonzero_leading(&f)?;
    }
    match f.coeff(0).as_constant() {
        Some(a0) if !a0.is_zero() => {
            let inv = a0.recip()?;
            let a: [MPoly; 5] = std::array::from_fn(|i| f.coeff(i + 1).scale(&inv));
            let (b, trace) = pipeline_monic(&a)?;
            let factor = a0.pow(24);
            Ok((
                BeauvilleVector {
                    b: b.map(|bi| bi.scale(&factor)),
                },
                trace,
            ))
        }
        _ => {
            let (b, trace) = generic_beauville()?;
            let bindings: HashMap<String, MPoly> = (0..6)
                .map(|i| (format!("a{i}"), f.coeff(i).clone()))
                .collect();
            let is_generic = (0..6).all(|i| *f.coeff(i) == MPoly::var(&format!("a{i}")));
            let b = if is_generic {
                b.clone()
            } else {
                b.clone().map(|bi| bi.substitute(&bindings))
            };
            Ok((BeauvilleVector { b }, trace.clone()))
        }
    }
}

fn shear_to_nonzero_leading(f: &BinaryForm) -> Result<BinaryForm> {
    for t in 1..=6i64 {
        let g = GroupElement::from_ints([[1, 0], [t, 1]])?;
        let moved = act(&g, f);
        if !moved.coeff(0).is_zero() {
            return Ok(moved);
        }
    }
    // A nonzero quintic has at most five roots, so one of six shears works.
    Err(Error::ZeroForm)
}

/// ℬ₀ … ℬ₅ of a numeric quintic from the closed forms in J, K, L.
pub fn beauville_numeric(f: &BinaryForm) -> Result<[Rational; 6]> {
    if f.order() != 5 {
        return Err(Error::WrongOrder {
            expected: 5,
            got: f.order(),
        });
    }
    if !f.is_numeric() {
        return Err(Error::Domain("numeric fast path needs rational coefficients".into()));
    }
    if f.is_zero() {
        return Err(Error::ZeroForm);
    }
    let iv = quintic_invariants(f)?;
    let [j, k, l, _, _] = iv.values().expect("numeric form has numeric invariants");
    Ok(beauville_closed_forms().map(|p| p.eval(&j, &k, &l)))
}
