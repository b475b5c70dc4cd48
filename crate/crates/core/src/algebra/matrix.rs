use std::ops::Range;

use itertools::Itertools;

use super::gf::Gf;
use crate::error::{Error, Result};

/// Square matrix of size at most 3 over a small binary field, row-major.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Mat {
    n: u8,
    e: [u8; 9],
}

impl Mat {
    pub fn zero(n: usize) -> Self {
        assert!((1..=3).contains(&n), "matrix size {n} unsupported");
        Mat {
            n: n as u8,
            e: [0; 9],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    pub fn from_rows(rows: &[&[u8]]) -> Self {
        let mut m = Self::zero(rows.len());
        for (i, r) in rows.iter().enumerate() {
            for (j, v) in r.iter().enumerate() {
                m.set(i, j, *v);
            }
        }
        m
    }

    /// Permutation matrix with a one in row `w[j]`, column `j`.
    pub fn permutation(w: &[usize]) -> Self {
        let mut m = Self::zero(w.len());
        for (j, &i) in w.iter().enumerate() {
            m.set(i, j, 1);
        }
        m
    }

    pub fn n(&self) -> usize {
        self.n as usize
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> u8 {
        self.e[i * self.n as usize + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: u8) {
        self.e[i * self.n as usize + j] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.e.iter().all(|&x| x == 0)
    }

    /// Entrywise sum; characteristic 2 makes this XOR.
    #[inline]
    pub fn add(&self, o: &Mat) -> Mat {
        let mut out = *self;
        for (x, y) in out.e.iter_mut().zip(o.e.iter()) {
            *x ^= *y;
        }
        out
    }
}

impl Gf {
    #[inline]
    pub fn mat_mul(&self, x: &Mat, y: &Mat) -> Mat {
        let n = x.n();
        let mut out = Mat::zero(n);
        for i in 0..n {
            for j in 0..n {
                let mut acc = 0u8;
                for k in 0..n {
                    acc ^= self.mul(x.get(i, k), y.get(k, j));
                }
                out.set(i, j, acc);
            }
        }
        out
    }

    /// Rank of the submatrix on the given rows and columns.
    pub fn rank(&self, m: &Mat, rows: Range<usize>, cols: Range<usize>) -> usize {
        let mut a: Vec<Vec<u8>> = rows
            .map(|i| cols.clone().map(|j| m.get(i, j)).collect())
            .collect();
        let width = cols.len();
        let mut rank = 0;
        for c in 0..width {
            let Some(p) = (rank..a.len()).find(|&r| a[r][c] != 0) else {
                continue;
            };
            a.swap(rank, p);
            let inv = self.inv(a[rank][c]).expect("nonzero pivot");
            for x in a[rank].iter_mut() {
                *x = self.mul(*x, inv);
            }
            for r in 0..a.len() {
                if r != rank && a[r][c] != 0 {
                    let f = a[r][c];
                    for cc in 0..width {
                        let sub = self.mul(f, a[rank][cc]);
                        a[r][cc] ^= sub;
                    }
                }
            }
            rank += 1;
        }
        rank
    }

    pub fn is_invertible(&self, m: &Mat) -> bool {
        self.rank(m, 0..m.n(), 0..m.n()) == m.n()
    }

    pub fn mat_inverse(&self, m: &Mat) -> Result<Mat> {
        let n = m.n();
        let mut a: Vec<Vec<u8>> = (0..n)
            .map(|i| {
                (0..2 * n)
                    .map(|j| {
                        if j < n {
                            m.get(i, j)
                        } else {
                            (j - n == i) as u8
                        }
                    })
                    .collect()
            })
            .collect();
        for c in 0..n {
            let p = (c..n)
                .find(|&r| a[r][c] != 0)
                .ok_or(Error::SingularMatrix)?;
            a.swap(c, p);
            let inv = self.inv(a[c][c])?;
            for x in a[c].iter_mut() {
                *x = self.mul(*x, inv);
            }
            for r in 0..n {
                if r != c && a[r][c] != 0 {
                    let f = a[r][c];
                    for cc in 0..2 * n {
                        let sub = self.mul(f, a[c][cc]);
                        a[r][cc] ^= sub;
                    }
                }
            }
        }
        let mut out = Mat::zero(n);
        for i in 0..n {
            for j in 0..n {
                out.set(i, j, a[i][n + j]);
            }
        }
        Ok(out)
    }

    /// Every n×n matrix, in lexicographic order of entries.
    pub fn all_matrices(&self, n: usize) -> Vec<Mat> {
        (0..n * n)
            .map(|_| 0..self.q() as u8)
            .multi_cartesian_product()
            .map(|entries| {
                let mut m = Mat::zero(n);
                for (idx, v) in entries.into_iter().enumerate() {
                    m.set(idx / n, idx % n, v);
                }
                m
            })
            .collect()
    }

    /// GL(n, GF(q)) by enumeration.
    pub fn general_linear(&self, n: usize) -> Vec<Mat> {
        self.all_matrices(n)
            .into_iter()
            .filter(|m| self.is_invertible(m))
            .collect()
    }
}

/// `|GL(n, q)| = q^{n(n-1)/2} ∏_{m=1}^n (q^m - 1)`.
pub fn gl_order(n: u32, q: u64) -> u128 {
    let q = q as u128;
    let mut acc = q.pow(n * (n.saturating_sub(1)) / 2);
    for m in 1..=n {
        acc *= q.pow(m) - 1;
    }
    acc
}
