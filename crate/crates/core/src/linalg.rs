//! Dense matrices over Q(ζ_r). Column j holds the image of basis vector j.

use std::fmt;

use crate::scalars::{Cyclotomic, Rational};

#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    r: u32,
    rows: usize,
    cols: usize,
    data: Vec<Cyclotomic>,
}

impl Matrix {
    pub fn zeros(r: u32, rows: usize, cols: usize) -> Self {
        Matrix { r, rows, cols, data: vec![Cyclotomic::zero(r); rows * cols] }
    }

    pub fn identity(r: u32, n: usize) -> Self {
        let mut m = Self::zeros(r, n, n);
        for i in 0..n {
            m.set(i, i, Cyclotomic::one(r));
        }
        m
    }

    pub fn from_columns(r: u32, rows: usize, columns: &[Vec<Cyclotomic>]) -> Self {
        let mut m = Self::zeros(r, rows, columns.len());
        for (j, col) in columns.iter().enumerate() {
            assert_eq!(col.len(), rows);
            for (i, x) in col.iter().enumerate() {
                m.set(i, j, x.clone());
            }
        }
        m
    }

    pub fn diagonal(r: u32, entries: &[Cyclotomic]) -> Self {
        let mut m = Self::zeros(r, entries.len(), entries.len());
        for (i, x) in entries.iter().enumerate() {
            m.set(i, i, x.clone());
        }
        m
    }

    pub fn r(&self) -> u32 {
        self.r
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Cyclotomic {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, x: Cyclotomic) {
        self.data[i * self.cols + j] = x;
    }

    pub fn add_to(&mut self, i: usize, j: usize, x: &Cyclotomic) {
        self.data[i * self.cols + j] += x;
    }

    pub fn column(&self, j: usize) -> Vec<Cyclotomic> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "matrix shapes do not compose");
        let mut out = Matrix::zeros(self.r, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        out.data[i * other.cols + j] += &(a * b);
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[Cyclotomic]) -> Vec<Cyclotomic> {
        assert_eq!(self.cols, v.len());
        let mut out = vec![Cyclotomic::zero(self.r); self.rows];
        for (j, x) in v.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (i, o) in out.iter_mut().enumerate() {
                let a = self.get(i, j);
                if !a.is_zero() {
                    *o += &(a * x);
                }
            }
        }
        out
    }

    pub fn conj(&self) -> Matrix {
        Matrix { r: self.r, rows: self.rows, cols: self.cols, data: self.data.iter().map(Cyclotomic::conj).collect() }
    }

    pub fn conj_transpose(&self) -> Matrix {
        let mut out = Matrix::zeros(self.r, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(j, i, self.get(i, j).conj());
            }
        }
        out
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect();
        Matrix { r: self.r, rows: self.rows, cols: self.cols, data }
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect();
        Matrix { r: self.r, rows: self.rows, cols: self.cols, data }
    }

    pub fn scale(&self, c: &Cyclotomic) -> Matrix {
        let data = self.data.iter().map(|a| a * c).collect();
        Matrix { r: self.r, rows: self.rows, cols: self.cols, data }
    }

    pub fn scale_rational(&self, q: &Rational) -> Matrix {
        let data = self.data.iter().map(|a| a.scale(q)).collect();
        Matrix { r: self.r, rows: self.rows, cols: self.cols, data }
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn is_diagonal(&self) -> bool {
        (0..self.rows).all(|i| (0..self.cols).all(|j| i == j || self.get(i, j).is_zero()))
    }

    /// Entries strictly below the diagonal vanish.
    pub fn is_upper_triangular(&self) -> bool {
        (0..self.rows).all(|i| (0..i.min(self.cols)).all(|j| self.get(i, j).is_zero()))
    }

    /// Rank by Gaussian elimination.
    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        let mut rank = 0;
        for col in 0..m.cols {
            let Some(pivot) = (rank..m.rows).find(|&i| !m.get(i, col).is_zero()) else {
                continue;
            };
            for j in 0..m.cols {
                m.data.swap(rank * m.cols + j, pivot * m.cols + j);
            }
            let inv = m.get(rank, col).inv().expect("nonzero pivot");
            for i in rank + 1..m.rows {
                let f = m.get(i, col) * &inv;
                if f.is_zero() {
                    continue;
                }
                for j in col..m.cols {
                    let delta = &f * m.get(rank, j);
                    m.data[i * m.cols + j] -= &delta;
                }
            }
            rank += 1;
        }
        rank
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}×{} over Q(ζ_{})", self.rows, self.cols, self.r)?;
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self.get(i, j).to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::rational::int;

    fn c(r: u32, k: i64) -> Cyclotomic {
        Cyclotomic::from_rational(r, int(k))
    }

    #[test]
    fn product_and_rank() {
        let a = Matrix::from_columns(1, 2, &[vec![c(1, 1), c(1, 2)], vec![c(1, 2), c(1, 4)]]);
        assert_eq!(a.rank(), 1);
        let id = Matrix::identity(1, 2);
        assert_eq!(a.mul(&id), a);
        let z = Cyclotomic::zeta_pow(3, 1);
        let d = Matrix::diagonal(3, &[z.clone(), Cyclotomic::one(3)]);
        let prod = d.conj_transpose().mul(&d);
        assert_eq!(prod, Matrix::identity(3, 2));
        assert_eq!(d.mul_vec(&[c(3, 1), c(3, 1)]), vec![z, Cyclotomic::one(3)]);
    }
}
