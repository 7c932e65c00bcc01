//! Incremental echelon basis of an integer row lattice.
//!
//! Rows are inserted one at a time and reduced against an upper-triangular
//! basis with extended-gcd row operations, so a long list of relations
//! shrinks to at most `n` rows before the Smith normal form is taken. Once
//! the basis has full rank its determinant `D` lies in the lattice along
//! every axis, and all off-pivot entries are kept reduced modulo `D`.
//!
//! Arithmetic runs in checked `i64` and restarts in `BigInt` on overflow.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

trait LatticeInt: Clone + PartialEq + Sized {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn is_negative(&self) -> bool;
    fn add(&self, o: &Self) -> Option<Self>;
    fn sub(&self, o: &Self) -> Option<Self>;
    fn mul(&self, o: &Self) -> Option<Self>;
    fn neg(&self) -> Option<Self>;
    /// Floor division (divisor nonzero).
    fn div_floor(&self, o: &Self) -> Option<Self>;
    /// Remainder in `[0, |o|)`.
    fn modulo(&self, o: &Self) -> Option<Self>;
    fn to_big(&self) -> BigInt;
}

impl LatticeInt for i64 {
    fn zero() -> Self {
        0
    }
    fn one() -> Self {
        1
    }
    fn is_zero(&self) -> bool {
        *self == 0
    }
    fn is_negative(&self) -> bool {
        *self < 0
    }
    fn add(&self, o: &Self) -> Option<Self> {
        self.checked_add(*o)
    }
    fn sub(&self, o: &Self) -> Option<Self> {
        self.checked_sub(*o)
    }
    fn mul(&self, o: &Self) -> Option<Self> {
        self.checked_mul(*o)
    }
    fn neg(&self) -> Option<Self> {
        self.checked_neg()
    }
    fn div_floor(&self, o: &Self) -> Option<Self> {
        if *o == -1 {
            return self.checked_neg();
        }
        Some(Integer::div_floor(self, o))
    }
    fn modulo(&self, o: &Self) -> Option<Self> {
        self.checked_rem_euclid(*o)
    }
    fn to_big(&self) -> BigInt {
        BigInt::from(*self)
    }
}

impl LatticeInt for BigInt {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn is_negative(&self) -> bool {
        Signed::is_negative(self)
    }
    fn add(&self, o: &Self) -> Option<Self> {
        Some(self + o)
    }
    fn sub(&self, o: &Self) -> Option<Self> {
        Some(self - o)
    }
    fn mul(&self, o: &Self) -> Option<Self> {
        Some(self * o)
    }
    fn neg(&self) -> Option<Self> {
        Some(-self)
    }
    fn div_floor(&self, o: &Self) -> Option<Self> {
        Some(Integer::div_floor(self, o))
    }
    fn modulo(&self, o: &Self) -> Option<Self> {
        Some(Integer::mod_floor(self, &Signed::abs(o)))
    }
    fn to_big(&self) -> BigInt {
        self.clone()
    }
}

/// `(g, s, t)` with `s·a + t·b = g = gcd(a, b) > 0`.
fn ext_gcd<T: LatticeInt>(a: &T, b: &T) -> Option<(T, T, T)> {
    let (mut r0, mut r1) = (a.clone(), b.clone());
    let (mut s0, mut s1) = (T::one(), T::zero());
    let (mut t0, mut t1) = (T::zero(), T::one());
    while !r1.is_zero() {
        let q = r0.div_floor(&r1)?;
        let r2 = r0.sub(&q.mul(&r1)?)?;
        let s2 = s0.sub(&q.mul(&s1)?)?;
        let t2 = t0.sub(&q.mul(&t1)?)?;
        (r0, r1) = (r1, r2);
        (s0, s1) = (s1, s2);
        (t0, t1) = (t1, t2);
    }
    if r0.is_negative() {
        Some((r0.neg()?, s0.neg()?, t0.neg()?))
    } else {
        Some((r0, s0, t0))
    }
}

struct Echelon<T> {
    cols: usize,
    /// `pivot_row[c]` = basis row whose leading entry sits in column `c`.
    pivot_row: Vec<Option<Vec<T>>>,
    rank: usize,
    modulus: Option<T>,
}

impl<T: LatticeInt> Echelon<T> {
    fn new(cols: usize) -> Self {
        Self {
            cols,
            pivot_row: vec![None; cols],
            rank: 0,
            modulus: None,
        }
    }

    fn reduce_entries(&self, row: &mut [T]) -> Option<()> {
        if let Some(d) = &self.modulus {
            for x in row.iter_mut() {
                *x = x.modulo(d)?;
            }
        }
        Some(())
    }

    /// Returns `None` on arithmetic overflow; the basis is then unusable.
    fn insert(&mut self, mut row: Vec<T>) -> Option<()> {
        self.reduce_entries(&mut row)?;
        let mut c = 0;
        while c < self.cols {
            if row[c].is_zero() {
                c += 1;
                continue;
            }
            let Some(basis) = self.pivot_row[c].take() else {
                if row[c].is_negative() {
                    for x in row.iter_mut() {
                        *x = x.neg()?;
                    }
                }
                self.pivot_row[c] = Some(row);
                self.rank += 1;
                self.refresh_modulus()?;
                return self.hermite_reduce(c);
            };
            let mut basis = basis;
            let a = basis[c].clone();
            let b = row[c].clone();
            let changed = if b.modulo(&a)?.is_zero() {
                let q = b.div_floor(&a)?;
                for (x, y) in basis[c..].iter().zip(row[c..].iter_mut()) {
                    *y = y.sub(&q.mul(x)?)?;
                }
                self.reduce_entries(&mut row[c..])?;
                false
            } else {
                let (g, s, t) = ext_gcd(&a, &b)?;
                let (ag, bg) = (a.div_floor(&g)?, b.div_floor(&g)?);
                for (x, y) in basis[c..].iter_mut().zip(row[c..].iter_mut()) {
                    let nx = s.mul(x)?.add(&t.mul(y)?)?;
                    *y = ag.mul(y)?.sub(&bg.mul(x)?)?;
                    *x = nx;
                }
                self.reduce_entries(&mut basis[c + 1..])?;
                self.reduce_entries(&mut row[c..])?;
                true
            };
            self.pivot_row[c] = Some(basis);
            if changed {
                self.refresh_modulus()?;
                self.hermite_reduce(c)?;
            }
            c += 1;
        }
        Some(())
    }

    /// Restores "entries above each pivot lie in `[0, pivot)`" after the
    /// row with pivot `c` changed.
    fn hermite_reduce(&mut self, c: usize) -> Option<()> {
        let later: Vec<usize> = (c + 1..self.cols)
            .filter(|&k| self.pivot_row[k].is_some())
            .collect();
        let mut row = self.pivot_row[c].take().expect("pivot row exists");
        for &k in &later {
            self.reduce_by(&mut row, k)?;
        }
        self.pivot_row[c] = Some(row);
        for r in 0..c {
            let Some(mut row) = self.pivot_row[r].take() else {
                continue;
            };
            self.reduce_by(&mut row, c)?;
            for &k in &later {
                self.reduce_by(&mut row, k)?;
            }
            self.pivot_row[r] = Some(row);
        }
        Some(())
    }

    fn reduce_by(&self, row: &mut [T], k: usize) -> Option<()> {
        let pivot = self.pivot_row[k].as_ref().expect("pivot row exists");
        if row[k].is_zero() {
            return Some(());
        }
        let q = row[k].div_floor(&pivot[k])?;
        if q.is_zero() {
            return Some(());
        }
        for (y, x) in row[k..].iter_mut().zip(&pivot[k..]) {
            *y = y.sub(&q.mul(x)?)?;
        }
        self.reduce_entries(&mut row[k + 1..])
    }

    fn refresh_modulus(&mut self) -> Option<()> {
        if self.rank < self.cols {
            return Some(());
        }
        let mut d = T::one();
        for r in self.pivot_row.iter().flatten() {
            let c = r
                .iter()
                .position(|x| !x.is_zero())
                .expect("basis rows are nonzero");
            d = d.mul(&r[c])?;
        }
        self.modulus = Some(d);
        Some(())
    }

    fn rows(&self) -> Vec<Vec<BigInt>> {
        self.pivot_row
            .iter()
            .flatten()
            .map(|r| r.iter().map(LatticeInt::to_big).collect())
            .collect()
    }
}

/// An echelon basis of the lattice spanned by sparse `rows` in `ℤ^cols`.
///
/// Each input row is a list of `(column, coefficient)` pairs. The returned
/// basis spans exactly the same lattice; entries are exact.
pub fn lattice_basis(cols: usize, rows: &[Vec<(usize, i64)>]) -> Vec<Vec<BigInt>> {
    let dense = |r: &Vec<(usize, i64)>| {
        let mut out = vec![0i64; cols];
        for &(c, v) in r {
            out[c] += v;
        }
        out
    };
    let mut small = Echelon::<i64>::new(cols);
    if rows.iter().all(|r| small.insert(dense(r)).is_some()) {
        return small.rows();
    }
    let mut big = Echelon::<BigInt>::new(cols);
    for r in rows {
        big.insert(dense(r).into_iter().map(BigInt::from).collect())
            .expect("BigInt never overflows");
    }
    big.rows()
}

/// `|det|` of a full-rank echelon basis, if it fits in `u64`.
pub fn basis_index(basis: &[Vec<BigInt>]) -> Option<u64> {
    let cols = basis.first()?.len();
    if basis.len() != cols {
        return None;
    }
    let mut d = BigInt::from(1);
    for r in basis {
        let lead = r.iter().find(|x| !Zero::is_zero(*x))?;
        d *= Signed::abs(lead);
    }
    d.to_u64()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chaingroup::snf::{smith_normal_form, IntMatrix};
    use proptest::prelude::*;

    fn factors(rows: &[Vec<BigInt>], cols: usize) -> Vec<BigInt> {
        let mut m = IntMatrix::zeros(rows.len(), cols);
        for (i, r) in rows.iter().enumerate() {
            for (j, x) in r.iter().enumerate() {
                m.set(i, j, x.clone());
            }
        }
        let mut d = smith_normal_form(&m).diagonal();
        d.resize(cols, BigInt::from(0));
        d
    }

    #[test]
    fn collapses_duplicates() {
        let rows = vec![
            vec![(0, 2)],
            vec![(0, 2)],
            vec![(0, 4), (1, 2)],
            vec![(1, 6)],
        ];
        let basis = lattice_basis(2, &rows);
        assert_eq!(basis.len(), 2);
        assert_eq!(basis_index(&basis), Some(4));
    }

    #[test]
    fn overflow_falls_back_to_bigint() {
        let huge = i64::MAX / 2;
        let rows = vec![
            vec![(0, huge), (1, 3)],
            vec![(0, huge - 1), (1, 7)],
            vec![(1, huge)],
        ];
        let basis = lattice_basis(2, &rows);
        let dense: Vec<Vec<i64>> = rows
            .iter()
            .map(|r| {
                let mut d = vec![0i64; 2];
                for &(c, v) in r {
                    d[c] = v;
                }
                d
            })
            .collect();
        let direct = smith_normal_form(&IntMatrix::from_rows(&dense)).diagonal();
        assert_eq!(factors(&basis, 2), direct);
    }

    proptest! {
        #[test]
        fn same_lattice_as_input(rows in proptest::collection::vec(proptest::collection::vec((0usize..4, -6i64..7), 1..4), 0..12)) {
            let basis = lattice_basis(4, &rows);
            let mut dense: Vec<Vec<i64>> = rows
                .iter()
                .map(|r| {
                    let mut d = vec![0i64; 4];
                    for &(c, v) in r {
                        d[c] += v;
                    }
                    d
                })
                .collect();
            if dense.is_empty() {
                dense.push(vec![0; 4]);
            }
            let mut direct = smith_normal_form(&IntMatrix::from_rows(&dense)).diagonal();
            direct.resize(4, BigInt::from(0));
            prop_assert_eq!(factors(&basis, 4), direct);
        }
    }
}
