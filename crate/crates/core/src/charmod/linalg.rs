//! Row reduction over F_p.

use alloc::vec::Vec;

use super::field::PrimeField;

/// Reduces `rows` to reduced row echelon form in place, dropping zero rows.
/// Returns the pivot column of each remaining row.
pub fn rref(f: &PrimeField, rows: &mut Vec<Vec<u64>>) -> Vec<usize> {
    let ncols = rows.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..rows.len()).find(|&i| rows[i][c] != 0) else {
            continue;
        };
        rows.swap(r, p);
        let inv = f.inv(rows[r][c]);
        for x in rows[r].iter_mut() {
            *x = f.mul(*x, inv);
        }
        for i in 0..rows.len() {
            if i == r || rows[i][c] == 0 {
                continue;
            }
            let factor = rows[i][c];
            for j in c..ncols {
                let v = f.mul(factor, rows[r][j]);
                rows[i][j] = f.sub(rows[i][j], v);
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    rows.truncate(r);
    pivots
}

/// Basis of `{x : x·m = 0}` for a square matrix `m`.
pub fn left_kernel(f: &PrimeField, m: &[Vec<u64>]) -> Vec<Vec<u64>> {
    let n = m.len();
    // x·m = 0  <=>  mᵀ·xᵀ = 0
    let mut t: Vec<Vec<u64>> = (0..n).map(|j| (0..n).map(|i| m[i][j]).collect()).collect();
    let pivots = rref(f, &mut t);
    let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&fc| {
            let mut x = alloc::vec![0; n];
            x[fc] = 1;
            for (row, &pc) in t.iter().zip(&pivots) {
                x[pc] = f.neg(row[fc]);
            }
            x
        })
        .collect()
}
