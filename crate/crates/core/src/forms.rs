//! Binary forms `F(x) = Σ a_i x1^(p-i) x2^i` with polynomial coefficients.

use std::fmt;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::matrix::PolyMatrix;
use crate::mpoly::MPoly;
use crate::rational::Rational;

pub const X1: &str = "x1";
pub const X2: &str = "x2";

/// A binary form of order `coeffs.len() - 1`, stored without binomial factors.
#[derive(Clone, PartialEq, Eq)]
pub struct BinaryForm {
    coeffs: Vec<MPoly>,
}

impl BinaryForm {
    pub fn new(coeffs: Vec<MPoly>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::Dimension("a form needs at least one coefficient".into()));
        }
        Ok(BinaryForm { coeffs })
    }

    pub fn from_rationals(coeffs: &[Rational]) -> Result<Self> {
        BinaryForm::new(coeffs.iter().cloned().map(MPoly::constant).collect())
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        BinaryForm {
            coeffs: coeffs.iter().map(|&c| MPoly::constant(c)).collect(),
        }
    }

    /// The generic form of the given order with coefficients `{prefix}0 … {prefix}p`.
    pub fn generic(order: usize, prefix: &str) -> Self {
        BinaryForm {
            coeffs: (0..=order).map(|i| MPoly::var(&format!("{prefix}{i}"))).collect(),
        }
    }

    /// Builds a quartic from `q0 x1^4 + 4 q1 x1^3 x2 + 6 q2 x1^2 x2^2 + 4 q3 x1 x2^3 + q4 x2^4`.
    pub fn quartic_binomial(q: [MPoly; 5]) -> Self {
        let [q0, q1, q2, q3, q4] = q;
        BinaryForm {
            coeffs: vec![
                q0,
                q1.scale(&Rational::from(4)),
                q2.scale(&Rational::from(6)),
                q3.scale(&Rational::from(4)),
                q4,
            ],
        }
    }

    /// Coefficients divided by the binomials `C(p, i)`.
    pub fn binomial_coeffs(&self) -> Vec<MPoly> {
        let p = self.order() as u64;
        self.coeffs
            .iter()
            .enumerate()
            .map(|(i, c)| c.scale(&Rational::from(binomial(p, i as u64)).recip().expect("nonzero")))
            .collect()
    }

    /// Parses the wire format `a0,a1,...,ap`.
    pub fn parse_wire(s: &str) -> Result<Self> {
        let coeffs = s
            .split(',')
            .map(|t| t.trim().parse::<Rational>())
            .collect::<Result<Vec<_>>>()?;
        BinaryForm::from_rationals(&coeffs)
    }

    /// Numeric coefficients, if every coefficient is constant.
    pub fn rationals(&self) -> Option<Vec<Rational>> {
        self.coeffs.iter().map(MPoly::as_constant).collect()
    }

    pub fn to_wire(&self) -> Option<String> {
        self.rationals()
            .map(|v| v.iter().map(ToString::to_string).collect::<Vec<_>>().join(","))
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[MPoly] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> &MPoly {
        &self.coeffs[i]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(MPoly::is_zero)
    }

    pub fn is_numeric(&self) -> bool {
        self.coeffs.iter().all(MPoly::is_constant)
    }

    /// Expands to a polynomial in `x1`, `x2`.
    pub fn to_mpoly(&self) -> MPoly {
        let p = self.order() as u32;
        let (x1, x2) = (MPoly::var(X1), MPoly::var(X2));
        self.coeffs
            .iter()
            .enumerate()
            .fold(MPoly::zero(), |acc, (i, c)| {
                &acc + &(&(c * &x1.pow(p - i as u32)) * &x2.pow(i as u32))
            })
    }

    /// Reads the coefficients of `x1^(p-i) x2^i` back out of an expanded form.
    pub fn from_mpoly(f: &MPoly, order: usize) -> Result<Self> {
        let mut coeffs = Vec::with_capacity(order + 1);
        let mut used = 0;
        for i in 0..=order {
            let c = f
                .coefficient(X1, (order - i) as u32)
                .coefficient(X2, i as u32);
            used += c.nterms();
            coeffs.push(c);
        }
        if used != f.nterms() {
            return Err(Error::Domain(format!("not a binary form of order {order}")));
        }
        BinaryForm::new(coeffs)
    }

    pub fn scale(&self, c: &MPoly) -> BinaryForm {
        BinaryForm {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// `∂F/∂x1` on coefficients.
    pub fn d_x1(&self) -> BinaryForm {
        let p = self.order();
        if p == 0 {
            return BinaryForm::new(vec![MPoly::zero()]).expect("nonempty");
        }
        BinaryForm {
            coeffs: (0..p)
                .map(|i| self.coeffs[i].scale(&Rational::from(p - i)))
                .collect(),
        }
    }

    /// `∂F/∂x2` on coefficients.
    pub fn d_x2(&self) -> BinaryForm {
        let p = self.order();
        if p == 0 {
            return BinaryForm::new(vec![MPoly::zero()]).expect("nonempty");
        }
        BinaryForm {
            coeffs: (0..p)
                .map(|i| self.coeffs[i + 1].scale(&Rational::from(i + 1)))
                .collect(),
        }
    }

    fn d_mixed(&self, n1: usize, n2: usize) -> BinaryForm {
        let mut f = self.clone();
        for _ in 0..n1 {
            f = f.d_x1();
        }
        for _ in 0..n2 {
            f = f.d_x2();
        }
        f
    }

    /// Product of forms (coefficient convolution).
    pub fn mul(&self, other: &BinaryForm) -> BinaryForm {
        let (p, q) = (self.order(), other.order());
        let mut coeffs = vec![MPoly::zero(); p + q + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    coeffs[i + j] = &coeffs[i + j] + &(a * b);
                }
            }
        }
        BinaryForm { coeffs }
    }

    pub fn add(&self, other: &BinaryForm) -> Result<BinaryForm> {
        if self.order() != other.order() {
            return Err(Error::WrongOrder {
                expected: self.order(),
                got: other.order(),
            });
        }
        Ok(BinaryForm {
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect(),
        })
    }

    pub fn map_coeffs(&self, f: impl Fn(&MPoly) -> MPoly) -> BinaryForm {
        BinaryForm {
            coeffs: self.coeffs.iter().map(f).collect(),
        }
    }
}

impl fmt::Display for BinaryForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_mpoly())
    }
}

impl fmt::Debug for BinaryForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BinaryForm{:?}", self.coeffs)
    }
}

pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::from(0);
    }
    let k = k.min(n - k);
    (0..k).fold(BigInt::from(1), |acc, i| acc * (n - i) / (i + 1))
}

pub fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::from(1), |acc, i| acc * i)
}

/// An invertible 2x2 rational matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupElement {
    g11: Rational,
    g12: Rational,
    g21: Rational,
    g22: Rational,
    det: Rational,
}

impl GroupElement {
    pub fn new(g11: Rational, g12: Rational, g21: Rational, g22: Rational) -> Result<Self> {
        let det = &(&g11 * &g22) - &(&g12 * &g21);
        if det.is_zero() {
            return Err(Error::SingularMatrix);
        }
        Ok(GroupElement { g11, g12, g21, g22, det })
    }

    pub fn from_ints(m: [[i64; 2]; 2]) -> Result<Self> {
        GroupElement::new(m[0][0].into(), m[0][1].into(), m[1][0].into(), m[1][1].into())
    }

    pub fn identity() -> Self {
        GroupElement::from_ints([[1, 0], [0, 1]]).expect("invertible")
    }

    pub fn det(&self) -> &Rational {
        &self.det
    }

    pub fn entries(&self) -> [[&Rational; 2]; 2] {
        [[&self.g11, &self.g12], [&self.g21, &self.g22]]
    }

    pub fn compose(&self, h: &GroupElement) -> GroupElement {
        let m = |a: &Rational, b: &Rational, c: &Rational, d: &Rational| &(a * b) + &(c * d);
        GroupElement::new(
            m(&self.g11, &h.g11, &self.g12, &h.g21),
            m(&self.g11, &h.g12, &self.g12, &h.g22),
            m(&self.g21, &h.g11, &self.g22, &h.g21),
            m(&self.g21, &h.g12, &self.g22, &h.g22),
        )
        .expect("product of invertible matrices")
    }

    pub fn inverse(&self) -> GroupElement {
        let d = &self.det;
        GroupElement::new(
            &self.g22 / d,
            -(&self.g12 / d),
            -(&self.g21 / d),
            &self.g11 / d,
        )
        .expect("inverse of invertible matrix")
    }
}

/// `(gF)(x) = F(g⁻¹ x)`.
pub fn act(g: &GroupElement, f: &BinaryForm) -> BinaryForm {
    let inv = g.inverse();
    let [[a, b], [c, d]] = inv.entries();
    // y1 = a x1 + b x2, y2 = c x1 + d x2
    let y1 = vec![a.clone(), b.clone()];
    let y2 = vec![c.clone(), d.clone()];
    let p = f.order();
    let pow = |v: &[Rational], e: usize| -> Vec<Rational> {
        (0..e).fold(vec![Rational::one()], |acc, _| conv(&acc, v))
    };
    let mut out = vec![MPoly::zero(); p + 1];
    for (i, ai) in f.coeffs.iter().enumerate() {
        if ai.is_zero() {
            continue;
        }
        let basis = conv(&pow(&y1, p - i), &pow(&y2, i));
        for (k, c) in basis.iter().enumerate() {
            if !c.is_zero() {
                out[k] = &out[k] + &ai.scale(c);
            }
        }
    }
    BinaryForm { coeffs: out }
}

fn conv(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

/// The k-th transvectant `(F, G)_k`.
pub fn transvectant(f: &BinaryForm, g: &BinaryForm, k: usize) -> Result<BinaryForm> {
    let (p, q) = (f.order(), g.order());
    if k > p.min(q) {
        return Err(Error::TransvectantOrder { k, p, q });
    }
    let prefactor = Rational::new(
        factorial((p - k) as u64) * factorial((q - k) as u64),
        factorial(p as u64) * factorial(q as u64),
    )?;
    let mut acc: Option<BinaryForm> = None;
    for i in 0..=k {
        let c = Rational::from(binomial(k as u64, i as u64));
        let c = if i % 2 == 1 { -c } else { c };
        let term = f
            .d_mixed(k - i, i)
            .mul(&g.d_mixed(i, k - i))
            .scale(&MPoly::constant(&c * &prefactor));
        acc = Some(match acc {
            None => term,
            Some(a) => a.add(&term)?,
        });
    }
    Ok(acc.expect("k + 1 >= 1 terms"))
}

/// The Sylvester resultant of two forms, with the rows of `f` on top.
pub fn resultant(f: &BinaryForm, g: &BinaryForm) -> Result<MPoly> {
    let (p, q) = (f.order(), g.order());
    let n = p + q;
    if n == 0 {
        return Ok(MPoly::one());
    }
    let mut rows = Vec::with_capacity(n);
    for s in 0..q {
        let mut row = vec![MPoly::zero(); n];
        for (i, a) in f.coeffs.iter().enumerate() {
            row[s + i] = a.clone();
        }
        rows.push(row);
    }
    for s in 0..p {
        let mut row = vec![MPoly::zero(); n];
        for (i, b) in g.coeffs.iter().enumerate() {
            row[s + i] = b.clone();
        }
        rows.push(row);
    }
    PolyMatrix::from_rows(rows)?.det()
}

/// `Π_{i<j} (ξ_i ξ_j)^2`, computed as `(-1)^(p(p-1)/2) / p^(p-2) · Res(∂F/∂x1, ∂F/∂x2)`.
pub fn discriminant(f: &BinaryForm) -> Result<MPoly> {
    let p = f.order();
    if p < 2 {
        return Err(Error::OrderTooSmall(p));
    }
    let r = resultant(&f.d_x1(), &f.d_x2())?;
    let mut c = Rational::from(p as i64).pow(2 - p as i32);
    if (p * (p - 1) / 2) % 2 == 1 {
        c = -c;
    }
    Ok(r.scale(&c))
}

/// Degree, order and weight of a covariant of a form of order `source_order`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CovariantMeta {
    pub degree: u64,
    pub order: u64,
    pub weight: u64,
    pub source_order: u64,
}

impl CovariantMeta {
    pub fn new(degree: u64, source_order: u64, order: u64) -> Result<Self> {
        Ok(CovariantMeta {
            degree,
            order,
            weight: weight_of(degree, source_order, order)?,
            source_order,
        })
    }
}

/// `ω = (d p − r) / 2`.
pub fn weight_of(d: u64, p: u64, r: u64) -> Result<u64> {
    let diff = (d * p) as i64 - r as i64;
    if diff < 0 || diff % 2 != 0 {
        return Err(Error::WeightParity(diff));
    }
    Ok(diff as u64 / 2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, ratio};

    fn form(s: &str) -> BinaryForm {
        BinaryForm::parse_wire(s).unwrap()
    }

    #[test]
    fn wire_round_trip() {
        let f = form("1, -5/2,0,3");
        assert_eq!(f.order(), 3);
        assert_eq!(f.to_wire().unwrap(), "1,-5/2,0,3");
        assert!(BinaryForm::parse_wire("1,,2").is_err());
        assert!(BinaryForm::parse_wire("1,x").is_err());
    }

    #[test]
    fn expand_and_read_back() {
        let f = BinaryForm::generic(5, "a");
        let g = BinaryForm::from_mpoly(&f.to_mpoly(), 5).unwrap();
        assert_eq!(f, g);
        assert!(BinaryForm::from_mpoly(&"x1^2 + x2".parse().unwrap(), 2).is_err());
    }

    #[test]
    fn identity_action() {
        let f = BinaryForm::generic(5, "a");
        assert_eq!(act(&GroupElement::identity(), &f), f);
    }

    #[test]
    fn diagonal_action_fixes_x1x2() {
        let t = ratio(7, 3);
        let g = GroupElement::new(t.clone(), rat(0), rat(0), t.recip().unwrap()).unwrap();
        let f = BinaryForm::from_ints(&[0, 1, 0]);
        assert_eq!(act(&g, &f), f);
    }

    #[test]
    fn shear_action() {
        let g = GroupElement::from_ints([[1, 1], [0, 1]]).unwrap();
        assert_eq!(act(&g, &BinaryForm::from_ints(&[0, 0, 1])), BinaryForm::from_ints(&[0, 0, 1]));
        assert_eq!(act(&g, &BinaryForm::from_ints(&[1, 0, 0])), BinaryForm::from_ints(&[1, -2, 1]));
    }

    #[test]
    fn singular_group_element() {
        assert!(matches!(
            GroupElement::from_ints([[1, 2], [2, 4]]),
            Err(Error::SingularMatrix)
        ));
    }

    #[test]
    fn transvectant_basics() {
        let f = form("1,0,1");
        let t = transvectant(&f, &f, 2).unwrap();
        assert_eq!(t.order(), 0);
        assert_eq!(t.coeff(0).as_constant().unwrap(), rat(2));
        let g = form("2,-1,3,1");
        assert_eq!(transvectant(&f, &g, 0).unwrap(), f.mul(&g));
        assert!(matches!(
            transvectant(&f, &g, 3),
            Err(Error::TransvectantOrder { k: 3, p: 2, q: 3 })
        ));
    }

    #[test]
    fn resultant_examples() {
        let r = resultant(&form("1,-1"), &form("1,1")).unwrap();
        assert_eq!(r.as_constant().unwrap(), rat(2));
        let f = BinaryForm::generic(3, "a");
        assert!(resultant(&f, &f).unwrap().is_zero());
    }

    #[test]
    fn discriminant_examples() {
        // x1^3 x2 - x1 x2^3
        let d = discriminant(&form("0,1,0,-1,0")).unwrap();
        assert_eq!(d.as_constant().unwrap(), rat(4));
        // x1^2 x2 has a repeated root
        assert!(discriminant(&form("0,1,0,0")).unwrap().is_zero());
        assert!(matches!(discriminant(&form("1,1")), Err(Error::OrderTooSmall(1))));
        // x1^2 - x2^2: roots (1,1), (-1,1), bracket = 2, squared = 4
        assert_eq!(discriminant(&form("1,0,-1")).unwrap().as_constant().unwrap(), rat(4));
    }

    #[test]
    fn weights() {
        assert_eq!(weight_of(24, 5, 0).unwrap(), 60);
        assert_eq!(weight_of(2, 4, 0).unwrap(), 4);
        assert_eq!(weight_of(1, 7, 7).unwrap(), 0);
        assert!(matches!(weight_of(1, 5, 0), Err(Error::WeightParity(5))));
        assert!(weight_of(1, 2, 4).is_err());
        let m = CovariantMeta::new(3, 5, 3).unwrap();
        assert_eq!(m.weight, 6);
        assert_eq!(m.degree * m.source_order, 2 * m.weight + m.order);
    }

    #[test]
    fn binomial_convention() {
        let q = BinaryForm::quartic_binomial([1, 2, 3, 4, 5].map(MPoly::from));
        assert_eq!(q, BinaryForm::from_ints(&[1, 8, 18, 16, 5]));
        let back: Vec<_> = q.binomial_coeffs();
        assert_eq!(back, [1, 2, 3, 4, 5].map(MPoly::from).to_vec());
    }
}
