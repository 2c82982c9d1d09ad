use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use super::Rational;
use crate::graph::PlumbingMatrix;
use crate::{Error, Result};

/// Dense row-major rational matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RatMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl RatMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self { rows, cols, data: vec![Rational::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Rational::from_integer(1.into()));
        }
        m
    }

    pub fn from_int_rows(rows: &[Vec<i64>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged matrix");
        let data = rows.iter().flatten().map(|&x| Rational::from_integer(x.into())).collect();
        Self { rows: r, cols: c, data }
    }

    pub fn from_plumbing(m: &PlumbingMatrix) -> Self {
        Self::from_int_rows(&m.rows())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Rational) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<Rational>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square() && (0..self.rows).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn mul(&self, other: &RatMatrix) -> Result<RatMatrix> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        let v = out.get(i, j) + a * b;
                        out.set(i, j, v);
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn neg(&self) -> Self {
        Self { rows: self.rows, cols: self.cols, data: self.data.iter().map(|x| -x).collect() }
    }
}

/// Solve `A x = b` exactly.
pub fn solve(a: &RatMatrix, b: &[Rational]) -> Result<Vec<Rational>> {
    let rhs: Vec<Vec<Rational>> = b.iter().map(|x| vec![x.clone()]).collect();
    let cols = solve_many(a, &rhs, 1)?;
    Ok(cols.into_iter().map(|mut row| row.pop().expect("one column")).collect())
}

pub fn inverse(a: &RatMatrix) -> Result<RatMatrix> {
    let n = a.rows;
    let rhs: Vec<Vec<Rational>> = RatMatrix::identity(n).to_rows();
    let x = solve_many(a, &rhs, n)?;
    let mut out = RatMatrix::zeros(n, n);
    for (i, row) in x.into_iter().enumerate() {
        for (j, v) in row.into_iter().enumerate() {
            out.set(i, j, v);
        }
    }
    Ok(out)
}

/// Gaussian elimination on `[A | B]`, skipping zero entries so tree-shaped
/// matrices stay cheap. Returns `X` (row per unknown) with `A X = B`.
fn solve_many(a: &RatMatrix, b: &[Vec<Rational>], k: usize) -> Result<Vec<Vec<Rational>>> {
    if !a.is_square() {
        return Err(Error::DimensionMismatch(format!("{}x{} matrix is not square", a.rows, a.cols)));
    }
    let n = a.rows;
    if b.len() != n || b.iter().any(|r| r.len() != k) {
        return Err(Error::DimensionMismatch(format!("right-hand side does not have {n} rows of width {k}")));
    }
    let width = n + k;
    let mut m: Vec<Vec<Rational>> = (0..n)
        .map(|i| {
            let mut row = a.row(i).to_vec();
            row.extend(b[i].iter().cloned());
            row
        })
        .collect();

    for col in 0..n {
        let pivot = (col..n).find(|&r| !m[r][col].is_zero()).ok_or(Error::SingularMatrix)?;
        m.swap(col, pivot);
        let nz: Vec<usize> = (col + 1..width).filter(|&j| !m[col][j].is_zero()).collect();
        let (head, tail) = m.split_at_mut(col + 1);
        let prow = &head[col];
        for row in tail.iter_mut() {
            if row[col].is_zero() {
                continue;
            }
            let factor = &row[col] / &prow[col];
            for &j in &nz {
                let v = &row[j] - &factor * &prow[j];
                row[j] = v;
            }
            row[col] = Rational::zero();
        }
    }

    let mut x = vec![vec![Rational::zero(); k]; n];
    for i in (0..n).rev() {
        let nz: Vec<usize> = (i + 1..n).filter(|&j| !m[i][j].is_zero()).collect();
        for c in 0..k {
            let mut acc = m[i][n + c].clone();
            for &j in &nz {
                acc -= &m[i][j] * &x[j][c];
            }
            x[i][c] = acc / &m[i][i];
        }
    }
    Ok(x)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct Inertia {
    pub n_plus: usize,
    pub n_zero: usize,
    pub n_minus: usize,
}

impl Inertia {
    pub fn signature(&self) -> i64 {
        self.n_plus as i64 - self.n_minus as i64
    }

    pub fn nullity(&self) -> usize {
        self.n_zero
    }

    pub fn dim(&self) -> usize {
        self.n_plus + self.n_zero + self.n_minus
    }
}

/// Inertia of a symmetric matrix by exact congruence diagonalisation.
///
/// Pivots on the largest remaining diagonal entry in absolute value (lowest
/// index on ties). When every remaining diagonal entry is zero but some
/// off-diagonal entry `t` is not, the 2x2 block `[[0, t], [t, 0]]` is split
/// off, contributing one positive and one negative square.
pub fn inertia(a: &RatMatrix) -> Result<Inertia> {
    if !a.is_symmetric() {
        return Err(Error::NotSymmetric);
    }
    let n = a.rows;
    let mut m = a.to_rows();
    let mut active: Vec<usize> = (0..n).collect();
    let mut out = Inertia::default();

    while !active.is_empty() {
        let pivot = active.iter().copied().filter(|&i| !m[i][i].is_zero()).fold(None::<usize>, |best, i| match best {
            Some(b) if m[b][b].abs() >= m[i][i].abs() => Some(b),
            _ => Some(i),
        });

        if let Some(p) = pivot {
            if m[p][p].is_positive() {
                out.n_plus += 1;
            } else {
                out.n_minus += 1;
            }
            active.retain(|&i| i != p);
            let nz: Vec<usize> = active.iter().copied().filter(|&j| !m[p][j].is_zero()).collect();
            let d = m[p][p].clone();
            for &i in &nz {
                let f = &m[i][p] / &d;
                for &j in &nz {
                    let v = &m[i][j] - &f * &m[p][j];
                    m[i][j] = v;
                }
            }
            continue;
        }

        let pair = active
            .iter()
            .enumerate()
            .find_map(|(pos, &i)| active[pos + 1..].iter().copied().find(|&j| !m[i][j].is_zero()).map(|j| (i, j)));
        let Some((i, j)) = pair else {
            out.n_zero += active.len();
            break;
        };
        out.n_plus += 1;
        out.n_minus += 1;
        active.retain(|&r| r != i && r != j);
        // Schur complement of [[0, t], [t, 0]]: m[k][l] -= (m[k][i] m[j][l] + m[k][j] m[i][l]) / t
        let t = m[i][j].clone();
        let nz: Vec<usize> = active.iter().copied().filter(|&r| !m[i][r].is_zero() || !m[j][r].is_zero()).collect();
        for &k in &nz {
            for &l in &nz {
                let delta = (&m[k][i] * &m[j][l] + &m[k][j] * &m[i][l]) / &t;
                let v = &m[k][l] - delta;
                m[k][l] = v;
            }
        }
    }
    Ok(out)
}
