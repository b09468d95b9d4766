//! Writing an invariant of the quintic in the J, K, L basis by specializing to
//! the Sylvester canonical form and matching coefficients in ℚ[u, v, w].

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::invariants::{canonical_bindings, monomial_basis, SylvesterPoint};
use crate::matrix::RatMatrix;
use crate::mpoly::{MPoly, Monomial, Vars};
use crate::rational::Rational;

use super::jkl::JklPolynomial;

/// Decomposes `p`, a degree-`d` invariant in `a0 … a5`, as `Σ c · L^l K^k J^j`.
pub fn decompose_in_jkl(p: &MPoly, d: u64) -> Result<JklPolynomial> {
    let pt = SylvesterPoint::symbolic();
    let specialized = p.substitute(&canonical_bindings(&pt));
    decompose_specialized(&specialized, d)
}

/// Same as [`decompose_in_jkl`] for a polynomial already written in `u, v, w`.
pub fn decompose_specialized(specialized: &MPoly, d: u64) -> Result<JklPolynomial> {
    let basis = monomial_basis(d)?;
    let pt = SylvesterPoint::symbolic();
    let [j, k, l, _] = pt.closed_forms();
    let columns: Vec<MPoly> = basis
        .iter()
        .map(|m| {
            JklPolynomial::from_terms([(*m, Rational::one())]).expand(&j, &k, &l)
        })
        .collect();

    // One equation per (u, v, w)-monomial, columns in a common universe.
    let mut universe_names: Vec<String> = Vec::new();
    for c in columns.iter().chain(std::iter::once(specialized)) {
        universe_names.extend(c.vars().names().iter().cloned());
    }
    let universe = Vars::new(&universe_names)?;
    let columns: Vec<MPoly> = columns
        .iter()
        .map(|c| c.with_vars(&universe))
        .collect::<Result<_>>()?;
    let target = specialized.with_vars(&universe)?;

    let mut rows: BTreeMap<Monomial, usize> = BTreeMap::new();
    for c in columns.iter().chain(std::iter::once(&target)) {
        for (m, _) in c.terms() {
            let n = rows.len();
            rows.entry(*m).or_insert(n);
        }
    }
    let mut a = RatMatrix::zeros(rows.len(), columns.len());
    for (jdx, c) in columns.iter().enumerate() {
        for (m, coef) in c.terms() {
            a.set(rows[m], jdx, coef.clone());
        }
    }
    let mut rhs = vec![Rational::zero(); rows.len()];
    for (m, coef) in target.terms() {
        rhs[rows[m]] = coef.clone();
    }
    let x = a.solve(&rhs)?.ok_or(Error::NotInSubring)?;

    let result = JklPolynomial::homogeneous(d, basis.iter().copied().zip(x))?;
    let residual = &target - &result.expand(&j, &k, &l);
    if !residual.is_zero() {
        return Err(Error::NotInSubring);
    }
    Ok(result)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::forms::BinaryForm;
    use crate::invariants::{quintic_invariants, JklMonomial};
    use crate::rational::rat;

    #[test]
    fn jk_round_trip() {
        let iv = quintic_invariants(&BinaryForm::generic(5, "a")).unwrap();
        let jk = &iv.j * &iv.k;
        let d = decompose_in_jkl(&jk, 12).unwrap();
        assert_eq!(d.len(), 1);
        assert_eq!(d.coeff(&JklMonomial::new(0, 1, 1)), rat(1));
    }

    #[test]
    fn non_invariant_is_rejected() {
        let p: MPoly = "a0^4".parse().unwrap();
        assert!(matches!(decompose_in_jkl(&p, 4), Err(Error::NotInSubring)));
        assert!(decompose_in_jkl(&p, 6).is_err());
    }
}
