//! Dense linear algebra over a cyclotomic field: just enough Gaussian
//! elimination (multiplication, inversion, rank, solving) for automorphism
//! certification and change-of-basis work.

use crate::scalars::CycScalar;
use crate::{Error, Result};

/// Row-major matrix over `Q(zeta_N)`.
#[derive(Clone, Debug, PartialEq)]
pub struct Mat {
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<CycScalar>,
    pub conductor: u32,
}

impl Mat {
    pub fn zero(rows: usize, cols: usize, conductor: u32) -> Mat {
        Mat { rows, cols, data: vec![CycScalar::zero(conductor); rows * cols], conductor }
    }

    pub fn identity(n: usize, conductor: u32) -> Mat {
        let mut m = Mat::zero(n, n, conductor);
        for i in 0..n {
            *m.at_mut(i, i) = CycScalar::one(conductor);
        }
        m
    }

    pub fn at(&self, i: usize, j: usize) -> &CycScalar {
        &self.data[i * self.cols + j]
    }

    pub fn at_mut(&mut self, i: usize, j: usize) -> &mut CycScalar {
        &mut self.data[i * self.cols + j]
    }

    pub fn mul(&self, other: &Mat) -> Mat {
        assert_eq!(self.cols, other.rows);
        let mut out = Mat::zero(self.rows, other.cols, self.conductor);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.at(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.at(k, j);
                    if !b.is_zero() {
                        let t = &(a * b) + out.at(i, j);
                        *out.at_mut(i, j) = t;
                    }
                }
            }
        }
        out
    }

    pub fn apply(&self, v: &[CycScalar]) -> Vec<CycScalar> {
        assert_eq!(self.cols, v.len());
        let mut out = vec![CycScalar::zero(self.conductor); self.rows];
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.at(i, j);
                if !a.is_zero() && !v[j].is_zero() {
                    out[i] = &out[i] + &(a * &v[j]);
                }
            }
        }
        out
    }

    /// In-place reduced row echelon form; returns the pivot columns.
    pub fn rref(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..self.cols {
            if row == self.rows {
                break;
            }
            let Some(p) = (row..self.rows).find(|&r| !self.at(r, col).is_zero()) else {
                continue;
            };
            if p != row {
                for j in 0..self.cols {
                    self.data.swap(row * self.cols + j, p * self.cols + j);
                }
            }
            let inv = self.at(row, col).inv().expect("pivot is nonzero");
            for j in col..self.cols {
                let t = self.at(row, j) * &inv;
                *self.at_mut(row, j) = t;
            }
            for r in 0..self.rows {
                if r == row || self.at(r, col).is_zero() {
                    continue;
                }
                let f = self.at(r, col).clone();
                for j in col..self.cols {
                    let t = self.at(r, j) - &(&f * self.at(row, j));
                    *self.at_mut(r, j) = t;
                }
            }
            pivots.push(col);
            row += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        m.rref().len()
    }

    pub fn inverse(&self) -> Result<Mat> {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut aug = Mat::zero(n, 2 * n, self.conductor);
        for i in 0..n {
            for j in 0..n {
                *aug.at_mut(i, j) = self.at(i, j).clone();
            }
            *aug.at_mut(i, n + i) = CycScalar::one(self.conductor);
        }
        let pivots = aug.rref();
        if pivots.len() < n || pivots.iter().enumerate().any(|(i, &p)| p != i) {
            return Err(Error::invalid("matrix is not invertible"));
        }
        let mut out = Mat::zero(n, n, self.conductor);
        for i in 0..n {
            for j in 0..n {
                *out.at_mut(i, j) = aug.at(i, n + j).clone();
            }
        }
        Ok(out)
    }
}

/// Incremental echelonized span of vectors over `Q(zeta_N)`, used by the
/// generator-extension closure to detect linear dependence and express a new
/// vector in terms of the rows already absorbed.
pub struct Span {
    dim: usize,
    conductor: u32,
    /// echelon rows paired with their pivot column
    rows: Vec<(usize, Vec<CycScalar>)>,
    /// for each echelon row, its expression in the original inserted vectors
    combos: Vec<Vec<CycScalar>>,
    inserted: usize,
}

impl Span {
    pub fn new(dim: usize, conductor: u32) -> Span {
        Span { dim, conductor, rows: Vec::new(), combos: Vec::new(), inserted: 0 }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduces `v` against the span. Returns `Ok(coeffs)` if `v` is dependent,
    /// with `v = sum coeffs[k] * inserted_k` over the independent vectors in
    /// insertion order; otherwise absorbs the reduced vector and returns
    /// `Err(())`. Echelon rows are kept mutually reduced so a single forward
    /// pass fully reduces any vector.
    pub fn insert(&mut self, v: &[CycScalar]) -> std::result::Result<Vec<CycScalar>, ()> {
        assert_eq!(v.len(), self.dim);
        let zero = CycScalar::zero(self.conductor);
        let mut w = v.to_vec();
        // combo tracks v - w as a combination of the inserted vectors
        let mut combo = vec![zero.clone(); self.rows.len()];
        for (k, (piv, row)) in self.rows.iter().enumerate() {
            if w[*piv].is_zero() {
                continue;
            }
            let f = w[*piv].clone();
            for j in 0..self.dim {
                if !row[j].is_zero() {
                    w[j] = &w[j] - &(&f * &row[j]);
                }
            }
            for (j, c) in self.combos[k].iter().enumerate() {
                if !c.is_zero() {
                    combo[j] = &combo[j] + &(&f * c);
                }
            }
        }
        match w.iter().position(|c| !c.is_zero()) {
            None => Ok(combo),
            Some(piv) => {
                let inv = w[piv].inv().expect("pivot nonzero");
                for c in w.iter_mut() {
                    let t = &*c * &inv;
                    *c = t;
                }
                // new row = inv * (v - sum combo_j * inserted_j)
                let mut expr = vec![zero.clone(); self.rows.len() + 1];
                expr[self.rows.len()] = inv.clone();
                for (j, c) in combo.iter().enumerate() {
                    if !c.is_zero() {
                        expr[j] = -&(&inv * c);
                    }
                }
                // back-substitute to keep older rows reduced at the new pivot
                for k in 0..self.rows.len() {
                    self.combos[k].resize(self.rows.len() + 1, zero.clone());
                    if self.rows[k].1[piv].is_zero() {
                        continue;
                    }
                    let f = self.rows[k].1[piv].clone();
                    for j in 0..self.dim {
                        if !w[j].is_zero() {
                            self.rows[k].1[j] = &self.rows[k].1[j] - &(&f * &w[j]);
                        }
                    }
                    for (j, e) in expr.iter().enumerate() {
                        if !e.is_zero() {
                            self.combos[k][j] = &self.combos[k][j] - &(&f * e);
                        }
                    }
                }
                self.rows.push((piv, w));
                self.combos.push(expr);
                self.inserted += 1;
                Err(())
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(v: i64) -> CycScalar {
        CycScalar::from_int(24, v)
    }

    #[test]
    fn inverse_roundtrip() {
        let mut m = Mat::zero(3, 3, 24);
        let vals = [[2, 1, 0], [0, 1, 3], [1, 0, 1]];
        for i in 0..3 {
            for j in 0..3 {
                *m.at_mut(i, j) = s(vals[i][j]);
            }
        }
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv), Mat::identity(3, 24));
        assert_eq!(inv.mul(&m), Mat::identity(3, 24));
    }

    #[test]
    fn singular_detected() {
        let mut m = Mat::zero(2, 2, 24);
        *m.at_mut(0, 0) = s(1);
        *m.at_mut(0, 1) = s(2);
        *m.at_mut(1, 0) = s(2);
        *m.at_mut(1, 1) = s(4);
        assert_eq!(m.rank(), 1);
        assert!(m.inverse().is_err());
    }

    #[test]
    fn span_dependence_coefficients() {
        let mut sp = Span::new(3, 24);
        assert!(sp.insert(&[s(1), s(0), s(1)]).is_err());
        assert!(sp.insert(&[s(0), s(1), s(1)]).is_err());
        // v = 2*v0 - 3*v1
        let dep = sp.insert(&[s(2), s(-3), s(-1)]).unwrap();
        assert_eq!(dep, vec![s(2), s(-3)]);
        assert_eq!(sp.rank(), 2);
    }

    #[test]
    fn span_dependence_after_elimination_order() {
        let mut sp = Span::new(2, 24);
        assert!(sp.insert(&[s(2), s(4)]).is_err());
        assert!(sp.insert(&[s(1), s(3)]).is_err());
        let dep = sp.insert(&[s(0), s(2)]).unwrap();
        // check: 0*e1 + 2*e2 = dep0*(2,4) + dep1*(1,3)
        let x = &(&dep[0] * &s(2)) + &(&dep[1] * &s(1));
        let y = &(&dep[0] * &s(4)) + &(&dep[1] * &s(3));
        assert_eq!(x, s(0));
        assert_eq!(y, s(2));
    }
}
