//! Dense linear algebra over `Q`.

use num_traits::{One, Zero};

use crate::poly::Coefficient;

/// Row-major dense matrix with exact rational entries.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Coefficient>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![Coefficient::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Coefficient::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Coefficient>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Matrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[Coefficient] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<Coefficient>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn is_diagonal(&self) -> bool {
        (0..self.rows).all(|i| (0..self.cols).all(|j| i == j || self[(i, j)].is_zero()))
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows);
        let mut out = Matrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] += a * b;
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[Coefficient]) -> Vec<Coefficient> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .fold(Coefficient::zero(), |acc, (a, b)| acc + a * b)
            })
            .collect()
    }

    pub fn trace(&self) -> Coefficient {
        (0..self.rows.min(self.cols)).fold(Coefficient::zero(), |acc, i| acc + &self[(i, i)])
    }

    /// Reduce in place to reduced row echelon form; returns pivot columns.
    /// Pivots are the first nonzero entry in row order.
    pub fn rref(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(p) = (r..self.rows).find(|&i| !self[(i, c)].is_zero()) else {
                continue;
            };
            self.swap_rows(r, p);
            let inv = self[(r, c)].recip();
            for j in c..self.cols {
                let v = &self[(r, j)] * &inv;
                self[(r, j)] = v;
            }
            for i in 0..self.rows {
                if i == r || self[(i, c)].is_zero() {
                    continue;
                }
                let factor = self[(i, c)].clone();
                for j in c..self.cols {
                    if self[(r, j)].is_zero() {
                        continue;
                    }
                    let v = &self[(r, j)] * &factor;
                    self[(i, j)] -= v;
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        self.clone().rref().len()
    }

    /// Basis of `{v : M v = 0}`, one vector per free column, with a 1 in the
    /// free position.
    pub fn nullspace(&self) -> Vec<Vec<Coefficient>> {
        let mut m = self.clone();
        let pivots = m.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![Coefficient::zero(); self.cols];
                v[f] = Coefficient::one();
                for (row, &pc) in pivots.iter().enumerate() {
                    v[pc] = -m[(row, f)].clone();
                }
                v
            })
            .collect()
    }

    /// Characteristic polynomial `det(tI − M)` as coefficients
    /// `[c_0, …, c_n]` with `c_n = 1` (Faddeev–LeVerrier).
    pub fn charpoly(&self) -> Vec<Coefficient> {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut coeffs = vec![Coefficient::zero(); n + 1];
        coeffs[n] = Coefficient::one();
        let mut aux = Matrix::zeros(n, n);
        for k in 1..=n {
            // aux_k = M·aux_{k-1} + c_{n-k+1}·I
            let mut next = self.mul(&aux);
            for i in 0..n {
                next[(i, i)] += &coeffs[n - k + 1];
            }
            let c = -(self.mul(&next).trace()) / Coefficient::from_integer((k as i64).into());
            coeffs[n - k] = c;
            aux = next;
        }
        coeffs
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }
}

impl std::ops::Index<(usize, usize)> for Matrix {
    type Output = Coefficient;
    fn index(&self, (i, j): (usize, usize)) -> &Coefficient {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Coefficient {
        &mut self.data[i * self.cols + j]
    }
}

/// Incremental row-echelon accumulator for rank computations over large
/// sparse-ish spanning sets: rows are reduced against the pivots seen so far.
#[derive(Debug, Default)]
pub struct EchelonBasis {
    rows: Vec<(usize, Vec<Coefficient>)>,
}

impl EchelonBasis {
    pub fn new() -> Self {
        Self::default()
    }

    /// Insert a row; returns true when it increased the rank.
    pub fn insert(&mut self, mut v: Vec<Coefficient>) -> bool {
        for (p, row) in &self.rows {
            if v[*p].is_zero() {
                continue;
            }
            let f = v[*p].clone();
            for (x, y) in v.iter_mut().zip(row) {
                if !y.is_zero() {
                    *x -= &f * y;
                }
            }
        }
        let Some(p) = v.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = v[p].recip();
        for x in v.iter_mut() {
            *x *= &inv;
        }
        // keep earlier rows reduced at the new pivot
        for (_, row) in self.rows.iter_mut() {
            if row[p].is_zero() {
                continue;
            }
            let f = row[p].clone();
            for (x, y) in row.iter_mut().zip(&v) {
                if !y.is_zero() {
                    *x -= &f * y;
                }
            }
        }
        self.rows.push((p, v));
        true
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::integer;

    fn mat(rows: &[&[i64]]) -> Matrix {
        Matrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| integer(x)).collect())
                .collect(),
        )
    }

    #[test]
    fn rank_and_nullspace() {
        let m = mat(&[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]]);
        assert_eq!(m.rank(), 2);
        let ns = m.nullspace();
        assert_eq!(ns.len(), 1);
        assert!(m.mul_vec(&ns[0]).iter().all(Zero::is_zero));
    }

    #[test]
    fn charpoly_of_nilpotent_and_diagonal() {
        let n = mat(&[&[0, 1, 5], &[0, 0, 2], &[0, 0, 0]]);
        let c = n.charpoly();
        assert_eq!(c, vec![integer(0), integer(0), integer(0), integer(1)]);
        // (t-2)(t-3) = t^2 - 5t + 6
        let d = mat(&[&[2, 0], &[0, 3]]);
        assert_eq!(d.charpoly(), vec![integer(6), integer(-5), integer(1)]);
    }

    #[test]
    fn echelon_rank_matches_rref() {
        let rows: &[&[i64]] = &[&[1, 1, 0, 0], &[0, 1, 1, 0], &[1, 2, 1, 0], &[0, 0, 0, 3]];
        let mut e = EchelonBasis::new();
        for r in rows {
            e.insert(r.iter().map(|&x| integer(x)).collect());
        }
        assert_eq!(e.rank(), mat(rows).rank());
    }
}
