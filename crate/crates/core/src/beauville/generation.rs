//! Generation of the invariants in degrees divisible by 48 by ℬ₀ … ℬ₅.

use crate::error::{Error, Result};
use crate::invariants::{monomial_basis, JklMonomial};
use crate::matrix::RatMatrix;

use super::closed_forms::beauville_closed_forms;

/// The degree-48 products ℬᵢℬⱼ (i ≤ j) in the monomial basis of degree 48.
#[derive(Clone, Debug)]
pub struct Prop48 {
    /// Rows indexed by `basis`, columns by `pairs`.
    pub matrix: RatMatrix,
    pub basis: Vec<JklMonomial>,
    pub pairs: Vec<(usize, usize)>,
    pub rank: usize,
}

pub fn prop48_rank() -> Prop48 {
    let b = beauville_closed_forms();
    let basis = monomial_basis(48).expect("48 is divisible by 4");
    let pairs: Vec<(usize, usize)> = (0..6).flat_map(|i| (i..6).map(move |j| (i, j))).collect();
    let mut matrix = RatMatrix::zeros(basis.len(), pairs.len());
    for (col, &(i, j)) in pairs.iter().enumerate() {
        let prod = b[i].mul(&b[j]);
        debug_assert_eq!(prod.degree(), Some(48));
        for (row, m) in basis.iter().enumerate() {
            matrix.set(row, col, prod.coeff(m));
        }
    }
    let rank = matrix.rank();
    Prop48 {
        matrix,
        basis,
        pairs,
        rank,
    }
}

/// Factors `L^l K^k J^j` of degree `48 n` into monomials of degree exactly 48.
///
/// Divides the exponents by 4, 6 and 12; the quotient part splits into copies
/// of `L⁴`, `K⁶`, `J¹²`, and a remainder part of degree 96 splits as
/// `(L^γ₁ J^(12−3γ₁)) (K^γ₂ J^(12−2γ₂))`.
pub fn thm48_decompose(alpha: JklMonomial) -> Result<Vec<JklMonomial>> {
    let d = alpha.degree();
    if d == 0 || !d.is_multiple_of(48) {
        return Err(Error::DegreeNotDivisible(d, 48));
    }
    if d == 48 {
        return Ok(vec![alpha]);
    }
    let beta = JklMonomial::new(alpha.l / 4, alpha.k / 6, alpha.j / 12);
    let gamma = JklMonomial::new(alpha.l % 4, alpha.k % 6, alpha.j % 12);
    if gamma.is_one() {
        let mut out = Vec::new();
        out.extend(std::iter::repeat_n(JklMonomial::new(4, 0, 0), beta.l as usize));
        out.extend(std::iter::repeat_n(JklMonomial::new(0, 6, 0), beta.k as usize));
        out.extend(std::iter::repeat_n(JklMonomial::new(0, 0, 12), beta.j as usize));
        return Ok(out);
    }
    if beta.is_one() {
        // 12γ₁ + 8γ₂ + 4γ₃ ≤ 120 and 48 | d, so d = 96 here.
        debug_assert_eq!(d, 96);
        return Ok(vec![
            JklMonomial::new(gamma.l, 0, 12 - 3 * gamma.l),
            JklMonomial::new(0, gamma.k, 12 - 2 * gamma.k),
        ]);
    }
    let mut out = thm48_decompose(gamma)?;
    out.extend(thm48_decompose(JklMonomial::new(4 * beta.l, 6 * beta.k, 12 * beta.j))?);
    Ok(out)
}
