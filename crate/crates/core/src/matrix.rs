//! Matrices of polynomials and exact rational linear algebra.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::mpoly::MPoly;
use crate::rational::Rational;

/// A dense row-major matrix of polynomials.
#[derive(Clone, Debug, PartialEq)]
pub struct PolyMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<MPoly>,
}

impl PolyMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<MPoly>) -> Result<Self> {
        if rows == 0 || cols == 0 || entries.len() != rows * cols {
            return Err(Error::Dimension(format!(
                "{} entries for a {rows}x{cols} matrix",
                entries.len()
            )));
        }
        Ok(PolyMatrix { rows, cols, entries })
    }

    pub fn from_rows(rows: Vec<Vec<MPoly>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::Dimension("ragged rows".into()));
        }
        PolyMatrix::new(r, c, rows.into_iter().flatten().collect())
    }

    pub fn identity(n: usize) -> Self {
        let entries = (0..n * n)
            .map(|k| if k / n == k % n { MPoly::one() } else { MPoly::zero() })
            .collect();
        PolyMatrix { rows: n, cols: n, entries }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &MPoly {
        &self.entries[i * self.cols + j]
    }

    fn row_vecs(&self) -> Vec<Vec<MPoly>> {
        self.entries.chunks(self.cols).map(<[MPoly]>::to_vec).collect()
    }

    /// Determinant by Bareiss fraction-free elimination; matrices below 4x4 use
    /// cofactor expansion.
    pub fn det(&self) -> Result<MPoly> {
        if self.rows != self.cols {
            return Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        if self.rows < 4 {
            return Ok(cofactor_det(&self.row_vecs()));
        }
        bareiss(self.row_vecs())
    }
}

fn cofactor_det(m: &[Vec<MPoly>]) -> MPoly {
    let n = m.len();
    match n {
        1 => m[0][0].clone(),
        2 => &(&m[0][0] * &m[1][1]) - &(&m[0][1] * &m[1][0]),
        _ => {
            let mut acc = MPoly::zero();
            for j in 0..n {
                if m[0][j].is_zero() {
                    continue;
                }
                let minor: Vec<Vec<MPoly>> = m[1..]
                    .iter()
                    .map(|row| {
                        row.iter()
                            .enumerate()
                            .filter(|(c, _)| *c != j)
                            .map(|(_, x)| x.clone())
                            .collect()
                    })
                    .collect();
                let t = &m[0][j] * &cofactor_det(&minor);
                acc = if j % 2 == 0 { &acc + &t } else { &acc - &t };
            }
            acc
        }
    }
}

fn bareiss(mut m: Vec<Vec<MPoly>>) -> Result<MPoly> {
    let n = m.len();
    let mut negate = false;
    let mut prev = MPoly::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            // Swap in the lightest nonzero pivot below.
            let Some(r) = (k + 1..n)
                .filter(|&r| !m[r][k].is_zero())
                .min_by_key(|&r| m[r][k].nterms())
            else {
                return Ok(MPoly::zero());
            };
            m.swap(k, r);
            negate = !negate;
        }
        let (top, rest) = m.split_at_mut(k + 1);
        let pivot_row = &top[k];
        let pivot = &pivot_row[k];
        rest.par_iter_mut().try_for_each(|row| -> Result<()> {
            let lead = std::mem::take(&mut row[k]);
            for j in k + 1..n {
                let mut v = pivot * &row[j];
                if !lead.is_zero() && !pivot_row[j].is_zero() {
                    v = &v - &(&lead * &pivot_row[j]);
                }
                row[j] = v.div_exact(&prev)?;
            }
            Ok(())
        })?;
        prev = m[k][k].clone();
    }
    let d = m[n - 1][n - 1].clone();
    Ok(if negate { -d } else { d })
}

/// A dense matrix of rationals.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Rational>,
}

impl RatMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        RatMatrix {
            rows,
            cols,
            entries: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::Dimension("ragged rows".into()));
        }
        Ok(RatMatrix {
            rows: r,
            cols: c,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Rational) {
        self.entries[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    /// Reduced row echelon form and its pivot columns.
    pub fn rref(&self) -> (RatMatrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m.get(i, c).is_zero()) else {
                continue;
            };
            for j in 0..m.cols {
                m.entries.swap(r * m.cols + j, p * m.cols + j);
            }
            let inv = m.get(r, c).recip().expect("nonzero pivot");
            for j in c..m.cols {
                let v = m.get(r, j) * &inv;
                m.set(r, j, v);
            }
            for i in 0..m.rows {
                if i == r || m.get(i, c).is_zero() {
                    continue;
                }
                let f = m.get(i, c).clone();
                for j in c..m.cols {
                    let v = m.get(i, j) - &(&f * m.get(r, j));
                    m.set(i, j, v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Solves `self * x = rhs`. Returns `None` when the system is inconsistent;
    /// free variables are set to zero.
    pub fn solve(&self, rhs: &[Rational]) -> Result<Option<Vec<Rational>>> {
        if rhs.len() != self.rows {
            return Err(Error::Dimension(format!(
                "right-hand side of length {} for {} rows",
                rhs.len(),
                self.rows
            )));
        }
        let mut aug = RatMatrix::zeros(self.rows, self.cols + 1);
        for i in 0..self.rows {
            for j in 0..self.cols {
                aug.set(i, j, self.get(i, j).clone());
            }
            aug.set(i, self.cols, rhs[i].clone());
        }
        let (red, pivots) = aug.rref();
        if pivots.last() == Some(&self.cols) {
            return Ok(None);
        }
        let mut x = vec![Rational::zero(); self.cols];
        for (r, &c) in pivots.iter().enumerate() {
            x[c] = red.get(r, self.cols).clone();
        }
        Ok(Some(x))
    }
}
