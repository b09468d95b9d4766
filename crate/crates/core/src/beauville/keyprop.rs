//! Checking the closed forms of ℬ₀ … ℬ₅ against the resultant pipeline.

use std::time::Instant;

use serde::Serialize;

use crate::error::Result;
use crate::forms::{discriminant, BinaryForm};
use crate::rational::{rat, Rational};
use crate::invariants::monomial_basis;

use super::closed_forms::beauville_closed_forms;
use super::decompose::decompose_in_jkl;
use super::jkl::{monomial_name, JklPolynomial};
use super::pipeline::generic_beauville;

#[derive(Clone, Debug, Serialize)]
pub struct CoefficientDiff {
    pub monomial: String,
    pub computed: String,
    pub expected: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct KeypropEntry {
    pub name: String,
    #[serde(rename = "match")]
    pub matches: bool,
    /// Computed coefficients in the degree-24 basis.
    pub coefficients: serde_json::Value,
    pub cartesian_terms: usize,
    pub mismatches: Vec<CoefficientDiff>,
}

#[derive(Clone, Debug, Serialize)]
pub struct KeypropReport {
    pub pass: bool,
    pub entries: Vec<KeypropEntry>,
    /// Whether the Cartesian ℬ₀ equals `2⁻⁴⁰ Disc³` in `a0 … a5`.
    pub b0_is_disc_cubed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seconds: Option<f64>,
}

/// Decomposes the computed ℬᵢ and compares them with `expected`.
pub fn verify_keyprop_against(expected: &[JklPolynomial; 6]) -> Result<KeypropReport> {
    let start = Instant::now();
    let (b, _) = generic_beauville()?;
    let basis = monomial_basis(24)?;
    let mut entries = Vec::with_capacity(6);
    for (i, bi) in b.iter().enumerate() {
        let computed = decompose_in_jkl(bi, 24)?;
        let mismatches: Vec<CoefficientDiff> = basis
            .iter()
            .filter(|m| computed.coeff(m) != expected[i].coeff(m))
            .map(|m| CoefficientDiff {
                monomial: monomial_name(m),
                computed: computed.coeff(m).to_string(),
                expected: expected[i].coeff(m).to_string(),
            })
            .collect();
        entries.push(KeypropEntry {
            name: format!("B{i}"),
            matches: mismatches.is_empty(),
            coefficients: computed.to_json(),
            cartesian_terms: bi.nterms(),
            mismatches,
        });
    }
    let disc = discriminant(&BinaryForm::generic(5, "a"))?;
    let two40 = Rational::one() / rat(2).pow(40);
    let b0_is_disc_cubed = b[0] == disc.pow(3).scale(&two40);
    Ok(KeypropReport {
        pass: entries.iter().all(|e| e.matches),
        entries,
        b0_is_disc_cubed,
        seconds: Some(start.elapsed().as_secs_f64()),
    })
}

/// Runs the symbolic pipeline and checks all six closed forms.
pub fn verify_keyprop() -> Result<KeypropReport> {
    verify_keyprop_against(&beauville_closed_forms())
}
