//! Exact Smith normal form over ℤ with unimodular transforms.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Dense integer matrix in row-major order.
#[derive(Clone, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = BigInt::one();
        }
        m
    }

    /// Panics if the rows have different lengths.
    pub fn from_rows<T: Into<BigInt> + Copy>(rows: &[Vec<T>]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        assert!(rows.iter().all(|r| r.len() == cols), "ragged matrix");
        let data = rows
            .iter()
            .flat_map(|r| r.iter().map(|&x| x.into()))
            .collect();
        Self {
            rows: rows.len(),
            cols,
            data,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: BigInt) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let mut out = IntMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        out.data[i * other.cols + j] += a * b;
                    }
                }
            }
        }
        out
    }

    pub fn is_diagonal(&self) -> bool {
        (0..self.rows).all(|i| (0..self.cols).all(|j| i == j || self.get(i, j).is_zero()))
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// row[dst] += q · row[src]
    fn add_row_multiple(&mut self, dst: usize, src: usize, q: &BigInt) {
        for j in 0..self.cols {
            let v = &self.data[src * self.cols + j] * q;
            if !v.is_zero() {
                self.data[dst * self.cols + j] += v;
            }
        }
    }

    /// col[dst] += q · col[src]
    fn add_col_multiple(&mut self, dst: usize, src: usize, q: &BigInt) {
        for i in 0..self.rows {
            let v = &self.data[i * self.cols + src] * q;
            if !v.is_zero() {
                self.data[i * self.cols + dst] += v;
            }
        }
    }

    fn negate_row(&mut self, i: usize) {
        for j in 0..self.cols {
            let v = core::mem::take(&mut self.data[i * self.cols + j]);
            self.data[i * self.cols + j] = -v;
        }
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list()
            .entries((0..self.rows).map(|i| self.row(i)))
            .finish()
    }
}

/// `u · a · v = s` with `s` diagonal, its nonzero entries positive and each
/// dividing the next, and `u`, `v` unimodular. `v_inv` is the inverse of `v`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmithDecomposition {
    pub s: IntMatrix,
    pub u: IntMatrix,
    pub v: IntMatrix,
    pub v_inv: IntMatrix,
}

impl SmithDecomposition {
    pub fn diagonal(&self) -> Vec<BigInt> {
        (0..self.s.rows().min(self.s.cols()))
            .map(|i| self.s.get(i, i).clone())
            .collect()
    }

    pub fn rank(&self) -> usize {
        self.diagonal().iter().take_while(|d| !d.is_zero()).count()
    }

    /// `u · a · v == s`, `s` diagonal with the divisibility chain, and `v · v_inv == 1`.
    pub fn verify(&self, a: &IntMatrix) -> bool {
        let diag = self.diagonal();
        let chain = diag.windows(2).all(|w| {
            if w[1].is_zero() {
                true
            } else {
                !w[0].is_zero() && w[1].is_multiple_of(&w[0])
            }
        });
        self.s.is_diagonal()
            && diag.iter().all(|d| !d.is_negative())
            && chain
            && self.u.mul(a).mul(&self.v) == self.s
            && self.v.mul(&self.v_inv) == IntMatrix::identity(self.v.rows())
    }
}

/// Smith normal form with pivot = smallest nonzero absolute value.
///
/// The postcondition `u·a·v = s` is re-checked before returning.
pub fn smith_normal_form(a: &IntMatrix) -> SmithDecomposition {
    let (m, n) = (a.rows(), a.cols());
    let mut s = a.clone();
    let mut u = IntMatrix::identity(m);
    let mut v = IntMatrix::identity(n);
    let mut v_inv = IntMatrix::identity(n);

    let mut t = 0;
    while t < m.min(n) {
        let Some((pi, pj)) = smallest_entry(&s, t..m, t..n) else {
            break;
        };
        move_pivot(&mut s, &mut u, &mut v, &mut v_inv, t, pi, pj);
        loop {
            let mut dirty = false;
            for i in t + 1..m {
                if s.get(i, t).is_zero() {
                    continue;
                }
                let q = -s.get(i, t).div_floor(s.get(t, t));
                s.add_row_multiple(i, t, &q);
                u.add_row_multiple(i, t, &q);
                dirty |= !s.get(i, t).is_zero();
            }
            for j in t + 1..n {
                if s.get(t, j).is_zero() {
                    continue;
                }
                let q = -s.get(t, j).div_floor(s.get(t, t));
                s.add_col_multiple(j, t, &q);
                v.add_col_multiple(j, t, &q);
                v_inv.add_row_multiple(t, j, &-&q);
                dirty |= !s.get(t, j).is_zero();
            }
            if dirty {
                // a remainder smaller than the pivot survived: make it the pivot
                let (pi, pj) = smallest_in_cross(&s, t);
                move_pivot(&mut s, &mut u, &mut v, &mut v_inv, t, pi, pj);
                continue;
            }
            // row and column are clear; enforce divisibility of the rest
            let pivot = s.get(t, t).clone();
            let offender =
                (t + 1..m).find(|&i| (t + 1..n).any(|j| !s.get(i, j).is_multiple_of(&pivot)));
            match offender {
                Some(i) => {
                    s.add_row_multiple(t, i, &BigInt::one());
                    u.add_row_multiple(t, i, &BigInt::one());
                }
                None => break,
            }
        }
        if s.get(t, t).is_negative() {
            s.negate_row(t);
            u.negate_row(t);
        }
        t += 1;
    }
    let result = SmithDecomposition { s, u, v, v_inv };
    assert!(result.verify(a), "Smith normal form postcondition failed");
    result
}

fn smallest_entry(
    s: &IntMatrix,
    rows: core::ops::Range<usize>,
    cols: core::ops::Range<usize>,
) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for i in rows {
        for j in cols.clone() {
            let x = s.get(i, j);
            if x.is_zero() {
                continue;
            }
            if best.is_none_or(|(bi, bj)| x.abs() < s.get(bi, bj).abs()) {
                best = Some((i, j));
            }
        }
    }
    best
}

fn smallest_in_cross(s: &IntMatrix, t: usize) -> (usize, usize) {
    let down = smallest_entry(s, t..s.rows(), t..t + 1);
    let right = smallest_entry(s, t..t + 1, t..s.cols());
    match (down, right) {
        (Some(a), Some(b)) => {
            if s.get(b.0, b.1).abs() < s.get(a.0, a.1).abs() {
                b
            } else {
                a
            }
        }
        (Some(a), None) | (None, Some(a)) => a,
        (None, None) => (t, t),
    }
}

fn move_pivot(
    s: &mut IntMatrix,
    u: &mut IntMatrix,
    v: &mut IntMatrix,
    v_inv: &mut IntMatrix,
    t: usize,
    i: usize,
    j: usize,
) {
    s.swap_rows(t, i);
    u.swap_rows(t, i);
    s.swap_cols(t, j);
    v.swap_cols(t, j);
    v_inv.swap_rows(t, j);
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    /// Determinant by fraction-free (Bareiss) elimination.
    fn det(m: &IntMatrix) -> BigInt {
        let n = m.rows();
        let mut a: Vec<Vec<BigInt>> = (0..n).map(|i| m.row(i).to_vec()).collect();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n {
            if a[k][k].is_zero() {
                let Some(p) = (k + 1..n).find(|&i| !a[i][k].is_zero()) else {
                    return BigInt::zero();
                };
                a.swap(k, p);
                sign = -sign;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    a[i][j] = (&a[i][j] * &a[k][k] - &a[i][k] * &a[k][j]) / &prev;
                }
            }
            prev = a[k][k].clone();
        }
        sign * &a[n - 1][n - 1]
    }

    #[test]
    fn small_examples() {
        let d = smith_normal_form(&IntMatrix::from_rows(&[vec![2i64]]));
        assert_eq!(d.diagonal(), vec![BigInt::from(2)]);

        let a = IntMatrix::from_rows(&[vec![2i64, 4], vec![6, 8]]);
        let d = smith_normal_form(&a);
        assert_eq!(d.diagonal(), vec![BigInt::from(2), BigInt::from(4)]);
        assert_eq!(d.u.mul(&a).mul(&d.v), d.s);

        let z = IntMatrix::zeros(2, 3);
        let d = smith_normal_form(&z);
        assert!(d.diagonal().iter().all(|x| x.is_zero()));
    }

    #[test]
    fn empty_matrices() {
        let d = smith_normal_form(&IntMatrix::zeros(0, 3));
        assert_eq!(d.v.rows(), 3);
        let d = smith_normal_form(&IntMatrix::zeros(4, 0));
        assert_eq!(d.u.rows(), 4);
    }

    #[test]
    fn entry_growth_is_exact() {
        // entries far beyond 64 bits
        let big = BigInt::from(1u64 << 62) * BigInt::from(1u64 << 62);
        let mut a = IntMatrix::from_rows(&[vec![3i64, 5], vec![7, 11]]);
        a.set(0, 0, &big * 3);
        let d = smith_normal_form(&a);
        assert!(d.verify(&a));
    }

    proptest! {
        #[test]
        fn postcondition_and_unimodularity(rows in 1usize..5, cols in 1usize..5, seed in proptest::collection::vec(-20i64..20, 25)) {
            let data: Vec<Vec<i64>> = (0..rows).map(|i| (0..cols).map(|j| seed[i * 5 + j]).collect()).collect();
            let a = IntMatrix::from_rows(&data);
            let d = smith_normal_form(&a);
            prop_assert!(d.verify(&a));
            prop_assert_eq!(det(&d.u).abs(), BigInt::one());
            prop_assert_eq!(det(&d.v).abs(), BigInt::one());
            // product of the diagonal = |det| for square input
            if rows == cols {
                let prod: BigInt = d.diagonal().iter().product();
                prop_assert_eq!(prod, det(&a).abs());
            }
        }
    }
}
