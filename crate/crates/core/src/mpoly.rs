//! Sparse multivariate polynomials over [`Rational`] in named variables.
//!
//! Exponent vectors are packed into a `u64`, one byte per variable, with the
//! first variable of the universe in the most significant byte. Terms are kept
//! sorted by descending graded-lexicographic order and zero coefficients are
//! never stored, so two equal polynomials over the same universe have identical
//! term vectors.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use rustc_hash::FxHashMap;

use crate::error::{Error, Result};
use crate::rational::Rational;

pub const MAX_VARS: usize = 8;
const MAX_DEGREE: u32 = 255;

/// A packed exponent vector. Total degree never exceeds 255, which also keeps
/// every byte lane from overflowing when two monomials are multiplied.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Monomial(u64);

impl Monomial {
    pub const ONE: Monomial = Monomial(0);

    fn shift(i: usize) -> u32 {
        8 * (MAX_VARS - 1 - i) as u32
    }

    pub fn from_exponents(exps: &[u32]) -> Self {
        assert!(exps.len() <= MAX_VARS, "at most {MAX_VARS} variables");
        let total: u32 = exps.iter().sum();
        assert!(total <= MAX_DEGREE, "monomial degree {total} exceeds {MAX_DEGREE}");
        Monomial(
            exps.iter()
                .enumerate()
                .fold(0, |acc, (i, &e)| acc | ((e as u64) << Self::shift(i))),
        )
    }

    pub fn exponent(self, i: usize) -> u32 {
        ((self.0 >> Self::shift(i)) & 0xff) as u32
    }

    pub fn exponents(self, nvars: usize) -> Vec<u32> {
        (0..nvars).map(|i| self.exponent(i)).collect()
    }

    pub fn degree(self) -> u32 {
        (self.0.wrapping_mul(0x0101_0101_0101_0101) >> 56) as u32
    }

    fn with_exponent(self, i: usize, e: u32) -> Self {
        let s = Self::shift(i);
        let m = Monomial((self.0 & !(0xffu64 << s)) | ((e as u64) << s));
        assert!(m.degree_slow() <= MAX_DEGREE, "monomial degree exceeds {MAX_DEGREE}");
        m
    }

    fn degree_slow(self) -> u32 {
        (0..MAX_VARS).map(|i| self.exponent(i)).sum()
    }

    pub fn mul(self, other: Monomial) -> Monomial {
        assert!(
            self.degree() + other.degree() <= MAX_DEGREE,
            "monomial degree exceeds {MAX_DEGREE}"
        );
        Monomial(self.0 + other.0)
    }

    /// `self / other` if `other` divides `self`.
    pub fn div(self, other: Monomial) -> Option<Monomial> {
        let mut out = 0u64;
        for i in 0..MAX_VARS {
            let a = self.exponent(i);
            let b = other.exponent(i);
            if b > a {
                return None;
            }
            out |= ((a - b) as u64) << Self::shift(i);
        }
        Some(Monomial(out))
    }

    fn remap(self, map: &[usize]) -> Monomial {
        let mut out = 0u64;
        for (i, &j) in map.iter().enumerate() {
            out |= (self.exponent(i) as u64) << Self::shift(j);
        }
        Monomial(out)
    }

    fn key(self) -> (u32, u64) {
        (self.degree(), self.0)
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// Graded lexicographic order.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.key().cmp(&other.key())
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.exponents(MAX_VARS))
    }
}

/// Sorted, deduplicated list of variable names.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Vars(Arc<[String]>);

impl Vars {
    pub fn new<S: AsRef<str>>(names: &[S]) -> Result<Self> {
        let mut v: Vec<String> = names.iter().map(|s| s.as_ref().to_string()).collect();
        v.sort();
        v.dedup();
        if v.len() > MAX_VARS {
            return Err(Error::TooManyVariables {
                max: MAX_VARS,
                got: v.len(),
            });
        }
        if let Some(bad) = v.iter().find(|n| !valid_name(n)) {
            return Err(Error::Parse {
                what: "variable name",
                input: bad.clone(),
            });
        }
        Ok(Vars(v.into()))
    }

    pub fn empty() -> Self {
        Vars(Arc::from(Vec::<String>::new()))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.0
    }

    pub fn index(&self, name: &str) -> Option<usize> {
        self.0.binary_search_by(|n| n.as_str().cmp(name)).ok()
    }

    fn same(&self, other: &Vars) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0 == other.0
    }

    fn union(&self, other: &Vars) -> Result<Vars> {
        let mut all: Vec<&str> = self.0.iter().chain(other.0.iter()).map(String::as_str).collect();
        all.sort();
        all.dedup();
        Vars::new(&all)
    }

    /// Positions of `self`'s variables inside `target`.
    fn embedding(&self, target: &Vars) -> Vec<usize> {
        self.0
            .iter()
            .map(|n| target.index(n).expect("target contains every variable"))
            .collect()
    }
}

impl fmt::Debug for Vars {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.0.iter()).finish()
    }
}

fn valid_name(n: &str) -> bool {
    let mut cs = n.chars();
    matches!(cs.next(), Some(c) if c.is_alphabetic() || c == '_')
        && cs.all(|c| c.is_alphanumeric() || c == '_')
}

/// A sparse polynomial with rational coefficients.
#[derive(Clone)]
pub struct MPoly {
    vars: Vars,
    /// Descending graded-lex order, no zero coefficients.
    terms: Vec<(Monomial, Rational)>,
}

impl MPoly {
    pub fn zero() -> Self {
        MPoly {
            vars: Vars::empty(),
            terms: Vec::new(),
        }
    }

    pub fn one() -> Self {
        MPoly::constant(Rational::one())
    }

    pub fn constant(c: impl Into<Rational>) -> Self {
        let c = c.into();
        let terms = if c.is_zero() {
            Vec::new()
        } else {
            vec![(Monomial::ONE, c)]
        };
        MPoly {
            vars: Vars::empty(),
            terms,
        }
    }

    /// The polynomial consisting of a single variable. Panics on an invalid name.
    pub fn var(name: &str) -> Self {
        let vars = Vars::new(&[name]).expect("valid variable name");
        MPoly {
            vars,
            terms: vec![(Monomial::from_exponents(&[1]), Rational::one())],
        }
    }

    /// Builds a polynomial from `(coefficient, [(name, exponent)])` pairs.
    pub fn from_terms<S: AsRef<str>>(terms: &[(Rational, Vec<(S, u32)>)]) -> Result<Self> {
        let mut names: Vec<&str> = terms
            .iter()
            .flat_map(|(_, ps)| ps.iter().map(|(n, _)| n.as_ref()))
            .collect();
        names.sort();
        names.dedup();
        let vars = Vars::new(&names)?;
        let mut acc: FxHashMap<Monomial, Rational> = FxHashMap::default();
        for (c, ps) in terms {
            let mut exps = vec![0u32; vars.len()];
            for (n, e) in ps {
                exps[vars.index(n.as_ref()).expect("collected above")] += e;
            }
            *acc.entry(Monomial::from_exponents(&exps)).or_default() += c;
        }
        Ok(MPoly::from_map(vars, acc))
    }

    fn from_map(vars: Vars, map: impl IntoIterator<Item = (Monomial, Rational)>) -> Self {
        let mut terms: Vec<_> = map.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_unstable_by(|a, b| b.0.cmp(&a.0));
        MPoly { vars, terms }
    }

    pub fn vars(&self) -> &Vars {
        &self.vars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn nterms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> &[(Monomial, Rational)] {
        &self.terms
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|(m, _)| *m == Monomial::ONE)
    }

    /// The value of a constant polynomial.
    pub fn as_constant(&self) -> Option<Rational> {
        match self.terms.as_slice() {
            [] => Some(Rational::zero()),
            [(m, c)] if *m == Monomial::ONE => Some(c.clone()),
            _ => None,
        }
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.first().map(|(m, _)| m.degree())
    }

    pub fn is_homogeneous(&self) -> bool {
        self.terms.windows(2).all(|w| w[0].0.degree() == w[1].0.degree())
    }

    /// Highest exponent of `var`, or `None` for the zero polynomial.
    pub fn degree_in(&self, var: &str) -> Option<u32> {
        if self.is_zero() {
            return None;
        }
        Some(match self.vars.index(var) {
            None => 0,
            Some(i) => self.terms.iter().map(|(m, _)| m.exponent(i)).max().unwrap_or(0),
        })
    }

    /// Variables that actually occur in some term.
    pub fn used_vars(&self) -> Vec<String> {
        (0..self.vars.len())
            .filter(|&i| self.terms.iter().any(|(m, _)| m.exponent(i) > 0))
            .map(|i| self.vars.0[i].clone())
            .collect()
    }

    /// Each term as `(coefficient, [(name, exponent)])` with zero exponents dropped.
    pub fn named_terms(&self) -> Vec<(Rational, Vec<(String, u32)>)> {
        self.terms
            .iter()
            .map(|(m, c)| {
                let ps = (0..self.vars.len())
                    .filter(|&i| m.exponent(i) > 0)
                    .map(|i| (self.vars.0[i].clone(), m.exponent(i)))
                    .collect();
                (c.clone(), ps)
            })
            .collect()
    }

    /// Re-expresses the polynomial over a larger universe.
    pub fn with_vars(&self, target: &Vars) -> Result<MPoly> {
        if self.vars.same(target) {
            return Ok(self.clone());
        }
        if let Some(missing) = self.vars.0.iter().find(|n| target.index(n).is_none()) {
            return Err(Error::UnknownVariable(missing.clone()));
        }
        let map = self.vars.embedding(target);
        // Inserting variables with exponent zero preserves graded-lex order.
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| (m.remap(&map), c.clone()))
            .collect();
        Ok(MPoly {
            vars: target.clone(),
            terms,
        })
    }

    fn aligned(&self, other: &MPoly) -> (MPoly, MPoly) {
        if self.vars.same(&other.vars) {
            return (self.clone(), other.clone());
        }
        let u = self
            .vars
            .union(&other.vars)
            .expect("combined variable universe exceeds MAX_VARS");
        (
            self.with_vars(&u).expect("union"),
            other.with_vars(&u).expect("union"),
        )
    }

    fn merge(a: &[(Monomial, Rational)], b: &[(Monomial, Rational)], negate_b: bool) -> Vec<(Monomial, Rational)> {
        use std::cmp::Ordering::*;
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        let sign = |c: &Rational| if negate_b { -c } else { c.clone() };
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Less => {
                    out.push((b[j].0, sign(&b[j].1)));
                    j += 1;
                }
                Equal => {
                    let c = if negate_b { &a[i].1 - &b[j].1 } else { &a[i].1 + &b[j].1 };
                    if !c.is_zero() {
                        out.push((a[i].0, c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(a[i..].iter().cloned());
        out.extend(b[j..].iter().map(|(m, c)| (*m, sign(c))));
        out
    }

    fn add_impl(&self, other: &MPoly, negate: bool) -> MPoly {
        if other.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return if negate { -other } else { other.clone() };
        }
        if self.vars.same(&other.vars) {
            return MPoly {
                vars: self.vars.clone(),
                terms: Self::merge(&self.terms, &other.terms, negate),
            };
        }
        let (a, b) = self.aligned(other);
        MPoly {
            vars: a.vars.clone(),
            terms: Self::merge(&a.terms, &b.terms, negate),
        }
    }

    pub fn scale(&self, c: &Rational) -> MPoly {
        if c.is_zero() {
            return MPoly::zero().with_vars(&self.vars).expect("empty universe embeds");
        }
        MPoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(m, d)| (*m, d * c)).collect(),
        }
    }

    fn mul_impl(&self, other: &MPoly) -> MPoly {
        if self.is_zero() || other.is_zero() {
            let (a, _) = self.aligned(other);
            return MPoly {
                vars: a.vars,
                terms: Vec::new(),
            };
        }
        let (a, b) = self.aligned(other);
        let vars = a.vars.clone();
        if b.terms.len() == 1 {
            return a.mul_term(b.terms[0].0, &b.terms[0].1);
        }
        if a.terms.len() == 1 {
            return b.mul_term(a.terms[0].0, &a.terms[0].1);
        }
        let (an, ad) = integer_parts(&a.terms);
        let (bn, bd) = integer_parts(&b.terms);
        let denom = ad * bd;
        let bits = |v: &[BigInt]| v.iter().map(|x| x.bits()).max().unwrap_or(0);
        let guard = 64 - (a.terms.len().min(b.terms.len()) as u64).leading_zeros() as u64;
        let map: Vec<(Monomial, BigInt)> = if bits(&an) + bits(&bn) + guard + 2 <= 126 {
            let ai: Vec<i128> = an.iter().map(|x| x.to_i128().expect("fits")).collect();
            let bi: Vec<i128> = bn.iter().map(|x| x.to_i128().expect("fits")).collect();
            let mut acc: FxHashMap<Monomial, i128> =
                FxHashMap::with_capacity_and_hasher(a.terms.len() * 2, Default::default());
            for (i, (ma, _)) in a.terms.iter().enumerate() {
                let x = ai[i];
                for (j, (mb, _)) in b.terms.iter().enumerate() {
                    *acc.entry(ma.mul(*mb)).or_insert(0) += x * bi[j];
                }
            }
            acc.into_iter()
                .filter(|(_, c)| *c != 0)
                .map(|(m, c)| (m, BigInt::from(c)))
                .collect()
        } else {
            let mut acc: FxHashMap<Monomial, BigInt> =
                FxHashMap::with_capacity_and_hasher(a.terms.len() * 2, Default::default());
            for (i, (ma, _)) in a.terms.iter().enumerate() {
                let x = &an[i];
                for (j, (mb, _)) in b.terms.iter().enumerate() {
                    let p = x * &bn[j];
                    match acc.entry(ma.mul(*mb)) {
                        std::collections::hash_map::Entry::Occupied(mut e) => *e.get_mut() += p,
                        std::collections::hash_map::Entry::Vacant(e) => {
                            e.insert(p);
                        }
                    }
                }
            }
            acc.into_iter().filter(|(_, c)| !c.is_zero()).collect()
        };
        let one = denom.is_one();
        let terms = map.into_iter().map(|(m, n)| {
            let c = if one {
                Rational::from_integer(n)
            } else {
                Rational::new(n, denom.clone()).expect("nonzero denominator")
            };
            (m, c)
        });
        MPoly::from_map(vars, terms)
    }

    fn mul_term(&self, m: Monomial, c: &Rational) -> MPoly {
        // Multiplying by a monomial preserves the term order.
        MPoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(n, d)| (n.mul(m), d * c)).collect(),
        }
    }

    pub fn pow(&self, mut e: u32) -> MPoly {
        let mut base = self.clone();
        let mut acc = MPoly::one().with_vars(&self.vars).expect("embeds");
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Partial derivative with respect to `var`.
    pub fn diff(&self, var: &str) -> Result<MPoly> {
        let i = self
            .vars
            .index(var)
            .ok_or_else(|| Error::UnknownVariable(var.to_string()))?;
        // Dividing every surviving monomial by the same variable preserves the order.
        let terms = self
            .terms
            .iter()
            .filter(|(m, _)| m.exponent(i) > 0)
            .map(|(m, c)| {
                let e = m.exponent(i);
                (m.with_exponent(i, e - 1), c * &Rational::from(e))
            })
            .collect();
        Ok(MPoly {
            vars: self.vars.clone(),
            terms,
        })
    }

    /// Like [`MPoly::diff`] but a variable outside the universe yields zero.
    pub fn diff_or_zero(&self, var: &str) -> MPoly {
        self.diff(var).unwrap_or_else(|_| MPoly {
            vars: self.vars.clone(),
            terms: Vec::new(),
        })
    }

    /// The coefficient of `var^k`, as a polynomial in the remaining variables.
    pub fn coefficient(&self, var: &str, k: u32) -> MPoly {
        let Some(i) = self.vars.index(var) else {
            return if k == 0 {
                self.clone()
            } else {
                MPoly {
                    vars: self.vars.clone(),
                    terms: Vec::new(),
                }
            };
        };
        let terms = self
            .terms
            .iter()
            .filter(|(m, _)| m.exponent(i) == k)
            .map(|(m, c)| (m.with_exponent(i, 0), c.clone()))
            .collect();
        MPoly {
            vars: self.vars.clone(),
            terms,
        }
    }

    /// Coefficients `[c_0, c_1, …, c_deg]` of the polynomial viewed in `var`.
    pub fn univariate_coeffs(&self, var: &str) -> Vec<MPoly> {
        let deg = self.degree_in(var).unwrap_or(0);
        let Some(i) = self.vars.index(var) else {
            return vec![self.clone()];
        };
        let mut buckets: Vec<Vec<(Monomial, Rational)>> = vec![Vec::new(); deg as usize + 1];
        for (m, c) in &self.terms {
            let e = m.exponent(i);
            buckets[e as usize].push((m.with_exponent(i, 0), c.clone()));
        }
        buckets
            .into_iter()
            .map(|terms| MPoly {
                vars: self.vars.clone(),
                terms,
            })
            .collect()
    }

    /// Inverse of [`MPoly::univariate_coeffs`].
    pub fn from_univariate(coeffs: &[MPoly], var: &str) -> MPoly {
        let x = MPoly::var(var);
        let mut acc = MPoly::zero();
        for (k, c) in coeffs.iter().enumerate() {
            if !c.is_zero() {
                acc = &acc + &(c * &x.pow(k as u32));
            }
        }
        acc
    }

    /// Simultaneous substitution of variables by polynomials.
    pub fn substitute(&self, bindings: &HashMap<String, MPoly>) -> MPoly {
        let bound: Vec<(usize, &MPoly)> = (0..self.vars.len())
            .filter_map(|i| bindings.get(&self.vars.0[i]).map(|p| (i, p)))
            .collect();
        if bound.is_empty() {
            return self.clone();
        }
        let free: Vec<&str> = (0..self.vars.len())
            .filter(|i| !bound.iter().any(|(j, _)| j == i))
            .map(|i| self.vars.0[i].as_str())
            .collect();
        let mut names: Vec<&str> = free.clone();
        for (_, p) in &bound {
            names.extend(p.vars.0.iter().map(String::as_str));
        }
        names.sort();
        names.dedup();
        let target = Vars::new(&names).expect("substitution universe exceeds MAX_VARS");
        let free_map: Vec<(usize, usize)> = (0..self.vars.len())
            .filter(|i| !bound.iter().any(|(j, _)| j == i))
            .map(|i| (i, target.index(&self.vars.0[i]).expect("present")))
            .collect();
        let images: Vec<MPoly> = bound
            .iter()
            .map(|(_, p)| p.with_vars(&target).expect("present"))
            .collect();
        let mut cache: HashMap<(usize, u32), MPoly> = HashMap::new();
        let mut acc: FxHashMap<Monomial, Rational> = FxHashMap::default();
        for (m, c) in &self.terms {
            let mut exps = vec![0u32; target.len()];
            for &(i, j) in &free_map {
                exps[j] = m.exponent(i);
            }
            let mut prod = MPoly {
                vars: target.clone(),
                terms: vec![(Monomial::from_exponents(&exps), c.clone())],
            };
            for (k, (i, _)) in bound.iter().enumerate() {
                let e = m.exponent(*i);
                if e == 0 {
                    continue;
                }
                let pw = cache
                    .entry((k, e))
                    .or_insert_with(|| images[k].pow(e));
                prod = &prod * &*pw;
            }
            for (m2, c2) in prod.terms {
                *acc.entry(m2).or_default() += c2;
            }
        }
        MPoly::from_map(target, acc)
    }

    /// Evaluates at rational values for every used variable.
    pub fn eval(&self, values: &HashMap<String, Rational>) -> Result<Rational> {
        let idx: Vec<Option<&Rational>> = self.vars.0.iter().map(|n| values.get(n)).collect();
        let mut total = Rational::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (i, v) in idx.iter().enumerate() {
                let e = m.exponent(i);
                if e == 0 {
                    continue;
                }
                let v = v.ok_or_else(|| Error::UnknownVariable(self.vars.0[i].clone()))?;
                t *= v.pow(e as i32);
            }
            total += t;
        }
        Ok(total)
    }

    /// Exact quotient `self / divisor`; fails if the division leaves a remainder.
    pub fn div_exact(&self, divisor: &MPoly) -> Result<MPoly> {
        if divisor.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let (a, b) = self.aligned(divisor);
        if let Some(c) = b.as_constant() {
            return Ok(a.scale(&c.recip()?));
        }
        if b.terms.len() == 1 {
            let (bm, bc) = &b.terms[0];
            let inv = bc.recip()?;
            let terms = a
                .terms
                .iter()
                .map(|(m, c)| m.div(*bm).map(|q| (q, c * &inv)).ok_or(Error::InexactDivision))
                .collect::<Result<Vec<_>>>()?;
            return Ok(MPoly { vars: a.vars, terms });
        }
        let (lm, lc) = b.terms[0].clone();
        let lc_inv = lc.recip()?;
        let mut rem: BTreeMap<Monomial, Rational> = a.terms.iter().cloned().collect();
        let mut quot = Vec::new();
        while let Some((m, c)) = rem.pop_last() {
            let qm = m.div(lm).ok_or(Error::InexactDivision)?;
            let qc = &c * &lc_inv;
            for (bm, bc) in &b.terms[1..] {
                let key = bm.mul(qm);
                let delta = &qc * bc;
                match rem.entry(key) {
                    std::collections::btree_map::Entry::Occupied(mut e) => {
                        *e.get_mut() -= delta;
                        if e.get().is_zero() {
                            e.remove();
                        }
                    }
                    std::collections::btree_map::Entry::Vacant(e) => {
                        e.insert(-delta);
                    }
                }
            }
            quot.push((qm, qc));
        }
        Ok(MPoly {
            vars: a.vars,
            terms: quot,
        })
    }

    /// Division by a divisor that is monic in `var`:
    /// returns `(q, r)` with `self = q*divisor + r` and `deg_var r < deg_var divisor`.
    pub fn monic_divrem(&self, divisor: &MPoly, var: &str) -> Result<(MPoly, MPoly)> {
        if divisor.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let g = divisor.univariate_coeffs(var);
        let dg = g.len() - 1;
        if g[dg].as_constant().map(|c| c.is_one()) != Some(true) {
            return Err(Error::NotMonic(var.to_string()));
        }
        let mut r = self.univariate_coeffs(var);
        if r.len() <= dg {
            return Ok((MPoly::zero(), self.clone()));
        }
        let mut q = vec![MPoly::zero(); r.len() - dg];
        for top in (dg..r.len()).rev() {
            let c = std::mem::take(&mut r[top]);
            if c.is_zero() {
                continue;
            }
            for (i, gi) in g.iter().enumerate().take(dg) {
                let idx = top - dg + i;
                r[idx] = &r[idx] - &(&c * gi);
            }
            q[top - dg] = c;
        }
        r.truncate(dg);
        Ok((MPoly::from_univariate(&q, var), MPoly::from_univariate(&r, var)))
    }
}

/// Common denominator and the integer numerators it produces.
fn integer_parts(terms: &[(Monomial, Rational)]) -> (Vec<BigInt>, BigInt) {
    let den = terms
        .iter()
        .fold(BigInt::one(), |acc, (_, c)| acc.lcm(c.denom()));
    let nums = terms
        .iter()
        .map(|(_, c)| {
            if den.is_one() {
                c.numer().clone()
            } else {
                c.numer() * (&den / c.denom())
            }
        })
        .collect();
    (nums, den)
}

impl PartialEq for MPoly {
    fn eq(&self, other: &Self) -> bool {
        if self.vars.same(&other.vars) {
            return self.terms == other.terms;
        }
        if self.terms.len() != other.terms.len() {
            return false;
        }
        match self.vars.union(&other.vars) {
            Ok(_) => {
                let (a, b) = self.aligned(other);
                a.terms == b.terms
            }
            Err(_) => false,
        }
    }
}

impl Eq for MPoly {}

impl Default for MPoly {
    fn default() -> Self {
        MPoly::zero()
    }
}

impl From<Rational> for MPoly {
    fn from(c: Rational) -> Self {
        MPoly::constant(c)
    }
}

impl From<i64> for MPoly {
    fn from(c: i64) -> Self {
        MPoly::constant(c)
    }
}

impl Add<&MPoly> for &MPoly {
    type Output = MPoly;
    fn add(self, rhs: &MPoly) -> MPoly {
        self.add_impl(rhs, false)
    }
}

impl Sub<&MPoly> for &MPoly {
    type Output = MPoly;
    fn sub(self, rhs: &MPoly) -> MPoly {
        self.add_impl(rhs, true)
    }
}

impl Mul<&MPoly> for &MPoly {
    type Output = MPoly;
    fn mul(self, rhs: &MPoly) -> MPoly {
        self.mul_impl(rhs)
    }
}

impl Add for MPoly {
    type Output = MPoly;
    fn add(self, rhs: MPoly) -> MPoly {
        &self + &rhs
    }
}

impl Sub for MPoly {
    type Output = MPoly;
    fn sub(self, rhs: MPoly) -> MPoly {
        &self - &rhs
    }
}

impl Mul for MPoly {
    type Output = MPoly;
    fn mul(self, rhs: MPoly) -> MPoly {
        &self * &rhs
    }
}

impl Neg for &MPoly {
    type Output = MPoly;
    fn neg(self) -> MPoly {
        MPoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect(),
        }
    }
}

impl Neg for MPoly {
    type Output = MPoly;
    fn neg(self) -> MPoly {
        -&self
    }
}

impl fmt::Display for MPoly {
    /// `c*v1^e1*v2^e2` terms joined by ` + ` / ` - `, in descending graded-lex order.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            match (k, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let a = c.abs();
            let mut parts: Vec<String> = Vec::new();
            if *m == Monomial::ONE || !a.is_one() {
                parts.push(a.to_string());
            }
            for i in 0..self.vars.len() {
                match m.exponent(i) {
                    0 => {}
                    1 => parts.push(self.vars.0[i].clone()),
                    e => parts.push(format!("{}^{}", self.vars.0[i], e)),
                }
            }
            write!(f, "{}", parts.join("*"))?;
        }
        Ok(())
    }
}

impl fmt::Debug for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MPoly({self})")
    }
}

impl FromStr for MPoly {
    type Err = Error;

    /// Parses the format produced by `Display`; also accepts a leading `+`,
    /// repeated factors and arbitrary whitespace.
    fn from_str(s: &str) -> Result<Self> {
        let err = || Error::Parse {
            what: "polynomial",
            input: s.to_string(),
        };
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(err());
        }
        let mut raw_terms: Vec<(bool, &str)> = Vec::new();
        let mut start = 0;
        let mut neg = false;
        let bytes = compact.as_bytes();
        for (i, &b) in bytes.iter().enumerate() {
            if (b == b'+' || b == b'-') && (i == 0 || bytes[i - 1] != b'^') {
                if i > start {
                    raw_terms.push((neg, &compact[start..i]));
                } else if i != 0 {
                    return Err(err());
                }
                neg = b == b'-';
                start = i + 1;
            }
        }
        if start >= compact.len() {
            return Err(err());
        }
        raw_terms.push((neg, &compact[start..]));

        let mut out: Vec<(Rational, Vec<(String, u32)>)> = Vec::new();
        for (neg, t) in raw_terms {
            let mut coeff = Rational::one();
            let mut powers = Vec::new();
            let factors: Vec<&str> = t.split('*').collect();
            let mut k = 0;
            while k < factors.len() {
                let fac = factors[k];
                if fac.is_empty() {
                    return Err(err());
                }
                if fac.as_bytes()[0].is_ascii_digit() {
                    // `p/q` may have been split only by `*`, so the slash stays intact.
                    coeff *= fac.parse::<Rational>().map_err(|_| err())?;
                } else {
                    let (name, e) = match fac.split_once('^') {
                        Some((n, e)) => (n, e.parse::<u32>().map_err(|_| err())?),
                        None => (fac, 1),
                    };
                    if !valid_name(name) {
                        return Err(err());
                    }
                    powers.push((name.to_string(), e));
                }
                k += 1;
            }
            if neg {
                coeff = -coeff;
            }
            out.push((coeff, powers));
        }
        MPoly::from_terms(&out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, ratio};

    fn p(s: &str) -> MPoly {
        s.parse().unwrap()
    }

    #[test]
    fn products() {
        assert_eq!(&p("x1 + x2") * &p("x1 + x2"), p("x1^2 + 2*x1*x2 + x2^2"));
        assert!((&p("x1 + x2") * &MPoly::zero()).is_zero());
        assert_eq!(&p("lambda + a1") * &p("lambda - a1"), p("lambda^2 - a1^2"));
        let big = p("123456789012345678901234567890*x + 1/3");
        let sq = &big * &big;
        assert_eq!(
            sq,
            p("15241578753238836750495351562536198787501905199875019052100*x^2 + 82304526008230452600823045260*x + 1/9")
        );
    }

    #[test]
    fn derivatives() {
        assert_eq!(p("x1^5").diff("x1").unwrap(), p("5*x1^4"));
        assert!(p("x1^3 + x2").diff("x2").unwrap().as_constant().unwrap().is_one());
        assert_eq!(
            p("a0*x1^5 + a1*x1^4*x2").diff("x1").unwrap(),
            p("5*a0*x1^4 + 4*a1*x1^3*x2")
        );
        assert!(matches!(p("x1").diff("y"), Err(Error::UnknownVariable(_))));
        let f = p("x1^3*x2^2 + 7*x1*x2 - x2^4");
        let a = f.diff("x1").unwrap().diff("x2").unwrap();
        let b = f.diff("x2").unwrap().diff("x1").unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn substitution() {
        let mut b = HashMap::new();
        b.insert("x1".to_string(), p("x1 + x2"));
        assert_eq!(p("x1^2").substitute(&b), p("x1^2 + 2*x1*x2 + x2^2"));
        let mut b = HashMap::new();
        b.insert("q1".to_string(), p("1/4*lambda + 1/4*a1"));
        assert_eq!(p("q1").substitute(&b), p("1/4*lambda + 1/4*a1"));
        assert_eq!(p("q1*x").substitute(&HashMap::new()), p("q1*x"));
        // simultaneous, not sequential
        let mut b = HashMap::new();
        b.insert("x".to_string(), p("y"));
        b.insert("y".to_string(), p("x"));
        assert_eq!(p("x^2*y").substitute(&b), p("y^2*x"));
    }

    #[test]
    fn monic_division() {
        let (q, r) = p("lambda^2 + a1*lambda + a2")
            .monic_divrem(&p("lambda + a1"), "lambda")
            .unwrap();
        assert_eq!(q, p("lambda"));
        assert_eq!(r, p("a2"));
        let g = p("lambda^3 + a*lambda + 1");
        let (q, r) = g.monic_divrem(&g, "lambda").unwrap();
        assert_eq!(q, MPoly::one());
        assert!(r.is_zero());
        assert!(matches!(
            p("lambda^2").monic_divrem(&p("2*lambda + 1"), "lambda"),
            Err(Error::NotMonic(_))
        ));
        assert!(matches!(
            p("lambda^2").monic_divrem(&p("a*lambda + 1"), "lambda"),
            Err(Error::NotMonic(_))
        ));
    }

    #[test]
    fn coefficient_extraction() {
        let f = p("3*z^5 + a*z^2");
        assert_eq!(f.coefficient("z", 5), MPoly::constant(rat(3)));
        assert_eq!(f.coefficient("z", 2), p("a"));
        assert!(f.coefficient("z", 9).is_zero());
        assert_eq!(f.degree_in("z"), Some(5));
    }

    #[test]
    fn exact_division() {
        let a = p("x^2 + 3*x*y - 2*y^2 + 1/2");
        let b = p("x - 5/3*y + 7");
        let prod = &a * &b;
        assert_eq!(prod.div_exact(&b).unwrap(), a);
        assert_eq!(prod.div_exact(&a).unwrap(), b);
        assert!(matches!(p("x^2 + 1").div_exact(&p("x + 1")), Err(Error::InexactDivision)));
        assert_eq!(p("6*x^2*y").div_exact(&p("2*x")).unwrap(), p("3*x*y"));
        assert!(p("x").div_exact(&MPoly::zero()).is_err());
    }

    #[test]
    fn printing_is_canonical() {
        for s in [
            "0",
            "-1",
            "x",
            "-7/2*a^3*b + a - 1/3",
            "x1^2 + 2*x1*x2 + x2^2",
        ] {
            assert_eq!(p(s).to_string(), s);
        }
        assert_eq!(p("b + a").to_string(), "a + b");
        assert_eq!(p(" 2 * x * x - 1/2*y ").to_string(), "2*x^2 - 1/2*y");
        for bad in ["", "x +", "+", "2**x", "x^", "x^-1", "1/0*x", "x ++ y"] {
            assert!(bad.parse::<MPoly>().is_err(), "{bad:?}");
        }
    }

    #[test]
    fn grlex_order() {
        // degree first, then lex with a > b
        assert_eq!(p("b^2 + a*b + a^2 + a + b^3").to_string(), "b^3 + a^2 + a*b + b^2 + a");
        assert_eq!(p("1 + x").terms()[0].1, Rational::one());
        assert_eq!(ratio(1, 2), p("1/2").as_constant().unwrap());
    }

    #[test]
    fn too_many_variables() {
        let s = "a+b+c+d+e+f+g+h+i";
        assert!(matches!(s.parse::<MPoly>(), Err(Error::TooManyVariables { .. })));
    }

    #[test]
    fn mixed_universes() {
        let a = p("x + 1");
        let b = p("y");
        let s = &a + &b;
        assert_eq!(s.to_string(), "x + y + 1");
        assert_eq!(&s - &b, a);
        assert_eq!((&s - &b).vars().len(), 2);
    }
}
