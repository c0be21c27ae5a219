//! Dense matrices and Gaussian elimination at desk scale (dims <= 8).

use crate::error::{Error, Result};

/// Row-major dense matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct Mat {
    pub rows: usize,
    pub cols: usize,
    data: Vec<f64>,
}

const ELIM_TOL: f64 = 1e-10;

impl Mat {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![0.0; rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = 1.0;
        }
        m
    }

    pub fn from_rows(rows: &[Vec<f64>]) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::DimensionMismatch {
                expected: c,
                got: rows.iter().map(Vec::len).find(|&l| l != c).unwrap_or(c),
            });
        }
        Ok(Self {
            rows: r,
            cols: c,
            data: rows.concat(),
        })
    }

    pub fn row(&self, i: usize) -> &[f64] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<f64>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> Mat {
        let mut t = Mat::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)];
            }
        }
        t
    }

    pub fn matmul(&self, other: &Mat) -> Mat {
        assert_eq!(self.cols, other.rows);
        let mut out = Mat::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let v = self[(i, k)];
                if v == 0.0 {
                    continue;
                }
                for j in 0..other.cols {
                    out[(i, j)] += v * other[(k, j)];
                }
            }
        }
        out
    }

    pub fn apply(&self, x: &[f64]) -> Vec<f64> {
        assert_eq!(self.cols, x.len());
        (0..self.rows)
            .map(|i| crate::util::dot(self.row(i), x))
            .collect()
    }

    pub fn scale(&self, alpha: f64) -> Mat {
        Mat {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|v| alpha * v).collect(),
        }
    }

    pub fn add(&self, other: &Mat) -> Mat {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Mat {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, other: &Mat) -> Mat {
        self.add(&other.scale(-1.0))
    }

    pub fn max_abs(&self) -> f64 {
        crate::util::max_abs(&self.data)
    }

    /// Gaussian elimination with partial pivoting; returns echelon form and
    /// the pivot column indices.
    fn echelon(&self) -> (Mat, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let (best, best_val) = (r..m.rows)
                .map(|i| (i, m[(i, c)].abs()))
                .fold((r, 0.0), |acc, x| if x.1 > acc.1 { x } else { acc });
            if best_val <= ELIM_TOL {
                continue;
            }
            m.swap_rows(r, best);
            let piv = m[(r, c)];
            for j in 0..m.cols {
                m[(r, j)] /= piv;
            }
            for i in 0..m.rows {
                if i != r {
                    let f = m[(i, c)];
                    if f != 0.0 {
                        for j in 0..m.cols {
                            m[(i, j)] -= f * m[(r, j)];
                        }
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn rank(&self) -> usize {
        self.echelon().1.len()
    }

    /// Basis of {x : Ax = 0}, one vector per free column.
    pub fn nullspace(&self) -> Vec<Vec<f64>> {
        let (e, pivots) = self.echelon();
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if pivots.contains(&free) {
                continue;
            }
            let mut v = vec![0.0; self.cols];
            v[free] = 1.0;
            for (row, &pc) in pivots.iter().enumerate() {
                v[pc] = -e[(row, free)];
            }
            basis.push(v);
        }
        basis
    }

    /// Solve Ax = b for square A.
    pub fn solve(&self, b: &[f64]) -> Option<Vec<f64>> {
        assert_eq!(self.rows, self.cols);
        assert_eq!(self.rows, b.len());
        let mut aug = Mat::zeros(self.rows, self.cols + 1);
        for i in 0..self.rows {
            for j in 0..self.cols {
                aug[(i, j)] = self[(i, j)];
            }
            aug[(i, self.cols)] = b[i];
        }
        let (e, pivots) = aug.echelon();
        if pivots.len() != self.cols || pivots.contains(&self.cols) {
            return None;
        }
        let mut x = vec![0.0; self.cols];
        for (row, &pc) in pivots.iter().enumerate() {
            x[pc] = e[(row, self.cols)];
        }
        Some(x)
    }

    pub fn invert(&self) -> Option<Mat> {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut cols = Vec::with_capacity(n);
        for j in 0..n {
            let mut e = vec![0.0; n];
            e[j] = 1.0;
            cols.push(self.solve(&e)?);
        }
        let mut inv = Mat::zeros(n, n);
        for (j, col) in cols.iter().enumerate() {
            for i in 0..n {
                inv[(i, j)] = col[i];
            }
        }
        Some(inv)
    }
}

impl std::ops::Index<(usize, usize)> for Mat {
    type Output = f64;
    fn index(&self, (i, j): (usize, usize)) -> &f64 {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for Mat {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut f64 {
        &mut self.data[i * self.cols + j]
    }
}

/// True iff `v` lies in the span of `basis` (rows).
pub fn in_span(basis: &[Vec<f64>], v: &[f64], tol: f64) -> bool {
    if basis.is_empty() {
        return crate::util::max_abs(v) <= tol;
    }
    let mut rows = basis.to_vec();
    let base_rank = Mat::from_rows(&rows).map(|m| m.rank()).unwrap_or(0);
    rows.push(v.to_vec());
    let grown = Mat::from_rows(&rows).map(|m| m.rank()).unwrap_or(usize::MAX);
    let _ = tol;
    grown == base_rank
}

/// True iff the two row sets span the same subspace.
pub fn same_span(a: &[Vec<f64>], b: &[Vec<f64>]) -> bool {
    let ra = Mat::from_rows(a).map(|m| m.rank()).unwrap_or(0);
    let rb = Mat::from_rows(b).map(|m| m.rank()).unwrap_or(0);
    if ra != rb {
        return false;
    }
    let mut all = a.to_vec();
    all.extend_from_slice(b);
    Mat::from_rows(&all).map(|m| m.rank()).unwrap_or(usize::MAX) == ra
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn solve_and_invert() {
        let m = Mat::from_rows(&[vec![2.0, 1.0], vec![1.0, 3.0]]).unwrap();
        let x = m.solve(&[5.0, 10.0]).unwrap();
        assert!((x[0] - 1.0).abs() < 1e-12 && (x[1] - 3.0).abs() < 1e-12);
        let inv = m.invert().unwrap();
        let id = m.matmul(&inv);
        assert!((id[(0, 0)] - 1.0).abs() < 1e-12 && id[(0, 1)].abs() < 1e-12);
    }

    #[test]
    fn nullspace_of_row() {
        let m = Mat::from_rows(&[vec![1.0, 1.0]]).unwrap();
        let ns = m.nullspace();
        assert_eq!(ns.len(), 1);
        let v = &ns[0];
        assert!((v[0] + v[1]).abs() < 1e-12);
    }

    #[test]
    fn rank_and_span() {
        let rows = vec![vec![1.0, 0.0, 1.0], vec![0.0, 1.0, 1.0]];
        assert_eq!(Mat::from_rows(&rows).unwrap().rank(), 2);
        assert!(in_span(&rows, &[1.0, 1.0, 2.0], 1e-9));
        assert!(!in_span(&rows, &[0.0, 0.0, 1.0], 1e-9));
        assert!(same_span(
            &rows,
            &[vec![1.0, 1.0, 2.0], vec![1.0, -1.0, 0.0]]
        ));
    }
}
