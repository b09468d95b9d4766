//! The six degree-24 invariants ℬ₀ … ℬ₅ written in the J, K, L basis.

use crate::invariants::JklMonomial;
use crate::rational::{rat, Rational};

use super::jkl::JklPolynomial;

const L2: JklMonomial = JklMonomial::new(2, 0, 0);
const LKJ: JklMonomial = JklMonomial::new(1, 1, 1);
const LJ3: JklMonomial = JklMonomial::new(1, 0, 3);
const K3: JklMonomial = JklMonomial::new(0, 3, 0);
const K2J2: JklMonomial = JklMonomial::new(0, 2, 2);
const KJ4: JklMonomial = JklMonomial::new(0, 1, 4);
const J6: JklMonomial = JklMonomial::new(0, 0, 6);

fn pw(b: i64, e: i32) -> Rational {
    rat(b).pow(e)
}

/// `sign · Π p^e`
fn c(sign: i64, factors: &[(i64, i32)]) -> Rational {
    factors.iter().fold(rat(sign), |acc, &(p, e)| acc * pw(p, e))
}

/// Prefactor and bracketed body of each ℬᵢ.
pub fn beauville_table() -> [(Rational, Vec<(JklMonomial, Rational)>); 6] {
    [
        (
            pw(5, 15) / pw(2, 40),
            vec![
                (K3, c(-1, &[(2, 21)])),
                (K2J2, c(1, &[(2, 14), (3, 1)])),
                (KJ4, c(-1, &[(2, 7), (3, 1)])),
                (J6, c(1, &[])),
            ],
        ),
        (
            pw(5, 16) / (pw(2, 35) * pw(3, 3)),
            vec![
                (K3, c(1, &[(2, 16), (7, 1)])),
                (K2J2, c(-1, &[(2, 10), (23, 1)])),
                (KJ4, c(1, &[(2, 2), (71, 1)])),
                (J6, c(-1, &[])),
            ],
        ),
        (
            pw(5, 16) / (pw(2, 30) * pw(3, 6)),
            vec![
                (LKJ, c(1, &[(2, 11), (5, 3)])),
                (LJ3, c(-1, &[(2, 4), (5, 3)])),
                (K3, c(-1, &[(2, 15), (3, 1)])),
                (K2J2, c(1, &[(2, 7), (11, 1), (13, 1)])),
                (KJ4, c(-1, &[(3, 1), (131, 1)])),
                (J6, c(2, &[])),
            ],
        ),
        (
            pw(5, 16) / (pw(2, 25) * pw(3, 9)),
            vec![
                (L2, c(-1, &[(2, 11), (5, 4)])),
                (LKJ, c(-1, &[(2, 9), (3, 1), (5, 3)])),
                (LJ3, c(1, &[(2, 1), (5, 3), (11, 1)])),
                (K3, c(1, &[(2, 9), (17, 1)])),
                (K2J2, c(-1, &[(2, 2), (23, 1), (37, 1)])),
                (KJ4, c(1, &[(3, 5)])),
                (J6, c(-2, &[])),
            ],
        ),
        (
            pw(5, 16) / (pw(2, 22) * pw(3, 12)),
            vec![
                (LKJ, c(-1, &[(2, 5), (3, 2), (5, 3)])),
                (LJ3, c(-1, &[(5, 3), (29, 1)])),
                (K3, c(-1, &[(2, 7), (11, 1)])),
                (K2J2, c(-1, &[(7, 2), (83, 1)])),
                (KJ4, c(-1, &[(2, 2), (59, 1)])),
                (J6, c(1, &[(2, 2)])),
            ],
        ),
        (
            pw(5, 15) / (pw(2, 15) * pw(3, 15)),
            vec![
                (K3, c(1, &[(3, 3)])),
                (K2J2, c(-1, &[(3, 3)])),
                (KJ4, c(1, &[(3, 2)])),
                (J6, c(-1, &[])),
            ],
        ),
    ]
}

/// ℬ₀ … ℬ₅ as homogeneous degree-24 elements of ℚ[J, K, L].
pub fn beauville_closed_forms() -> [JklPolynomial; 6] {
    beauville_table().map(|(pre, body)| {
        JklPolynomial::homogeneous(24, body.into_iter().map(|(m, c)| (m, &pre * &c)))
            .expect("every listed monomial has degree 24")
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_monomials_have_degree_24() {
        for (_, body) in beauville_table() {
            assert!(body.iter().all(|(m, _)| m.degree() == 24));
        }
    }

    #[test]
    fn b0_is_cube_of_discriminant() {
        // 2^-40 (5^5 (J^2 - 128 K))^3
        let base = JklPolynomial::from_terms([
            (JklMonomial::new(0, 0, 2), pw(5, 5)),
            (JklMonomial::new(0, 1, 0), -pw(5, 5) * rat(128)),
        ]);
        let mut cube = base.mul(&base).mul(&base).scale(&pw(2, -40));
        cube.set_degree(24).unwrap();
        assert_eq!(cube, beauville_closed_forms()[0]);
    }
}
