//! Polynomials in the algebraically independent invariants J, K, L.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::invariants::JklMonomial;
use crate::mpoly::MPoly;
use crate::rational::Rational;

/// An element of ℚ[J, K, L] keyed by exponent triples.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct JklPolynomial {
    terms: BTreeMap<JklMonomial, Rational>,
    degree: Option<u64>,
}

impl JklPolynomial {
    pub fn zero() -> Self {
        JklPolynomial::default()
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (JklMonomial, Rational)>) -> Self {
        let mut out = JklPolynomial::zero();
        for (m, c) in terms {
            out.add_term(m, c);
        }
        out
    }

    /// Same as [`JklPolynomial::from_terms`], but every monomial must have degree `d`.
    pub fn homogeneous(d: u64, terms: impl IntoIterator<Item = (JklMonomial, Rational)>) -> Result<Self> {
        let mut p = JklPolynomial::from_terms(terms);
        p.set_degree(d)?;
        Ok(p)
    }

    pub fn set_degree(&mut self, d: u64) -> Result<()> {
        if let Some(m) = self.terms.keys().find(|m| m.degree() != d) {
            return Err(Error::Domain(format!("monomial {m} does not have degree {d}")));
        }
        self.degree = Some(d);
        Ok(())
    }

    pub fn degree(&self) -> Option<u64> {
        self.degree
    }

    pub fn add_term(&mut self, m: JklMonomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry(m).or_insert_with(Rational::zero);
        *e += c;
        if e.is_zero() {
            self.terms.remove(&m);
        }
        if matches!(self.degree, Some(d) if d != m.degree()) {
            self.degree = None;
        }
    }

    pub fn coeff(&self, m: &JklMonomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&JklMonomial, &Rational)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scale(&self, c: &Rational) -> JklPolynomial {
        let mut out = JklPolynomial::from_terms(self.terms.iter().map(|(m, d)| (*m, d * c)));
        out.degree = self.degree;
        out
    }

    pub fn add(&self, other: &JklPolynomial) -> JklPolynomial {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(*m, c.clone());
        }
        if self.degree != other.degree {
            out.degree = None;
        }
        out
    }

    pub fn sub(&self, other: &JklPolynomial) -> JklPolynomial {
        self.add(&other.scale(&Rational::from(-1)))
    }

    pub fn mul(&self, other: &JklPolynomial) -> JklPolynomial {
        let mut out = JklPolynomial::zero();
        for (a, c) in &self.terms {
            for (b, d) in &other.terms {
                out.add_term(a.mul(b), c * d);
            }
        }
        out.degree = match (self.degree, other.degree) {
            (Some(x), Some(y)) => Some(x + y),
            _ => None,
        };
        out
    }

    /// Substitutes polynomials for J, K, L (e.g. their Cartesian expansions or
    /// their values on the canonical form).
    pub fn expand(&self, j: &MPoly, k: &MPoly, l: &MPoly) -> MPoly {
        let mut acc = MPoly::zero();
        let mut cache: BTreeMap<(u8, u32), MPoly> = BTreeMap::new();
        let mut pw = |which: u8, e: u32| -> MPoly {
            cache
                .entry((which, e))
                .or_insert_with(|| [j, k, l][which as usize].pow(e))
                .clone()
        };
        for (m, c) in &self.terms {
            let t = &(&pw(2, m.l) * &pw(1, m.k)) * &pw(0, m.j);
            acc = &acc + &t.scale(c);
        }
        acc
    }

    pub fn eval(&self, j: &Rational, k: &Rational, l: &Rational) -> Rational {
        self.terms
            .iter()
            .map(|(m, c)| c * &(&(&l.pow(m.l as i32) * &k.pow(m.k as i32)) * &j.pow(m.j as i32)))
            .sum()
    }

    pub fn to_json(&self) -> serde_json::Value {
        let mut map = serde_json::Map::new();
        for (m, c) in self.terms.iter().rev() {
            map.insert(monomial_name(m), serde_json::Value::String(c.to_string()));
        }
        serde_json::Value::Object(map)
    }
}

/// `L^2*K*J^3`-style name; `1` for the empty monomial.
pub fn monomial_name(m: &JklMonomial) -> String {
    let mut parts = Vec::new();
    for (n, e) in [("L", m.l), ("K", m.k), ("J", m.j)] {
        match e {
            0 => {}
            1 => parts.push(n.to_string()),
            e => parts.push(format!("{n}^{e}")),
        }
    }
    if parts.is_empty() {
        "1".into()
    } else {
        parts.join("*")
    }
}

impl fmt::Display for JklPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .rev()
            .map(|(m, c)| format!("{c}*{}", monomial_name(m)))
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}
