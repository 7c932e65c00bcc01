//! Dense univariate polynomials over F_p and their roots.
//!
//! Coefficients are stored lowest degree first; the zero polynomial is empty.

use alloc::vec;
use alloc::vec::Vec;

use super::field::PrimeField;

/// Above this degree roots are found by distinct-degree splitting instead of
/// evaluating at every field element.
pub const EXHAUSTIVE_ROOT_LIMIT: usize = 64;

fn trim(mut a: Vec<u64>) -> Vec<u64> {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

pub fn eval(f: &PrimeField, poly: &[u64], x: u64) -> u64 {
    poly.iter().rev().fold(0, |acc, &c| f.add(f.mul(acc, x), c))
}

fn mul(f: &PrimeField, a: &[u64], b: &[u64]) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = f.add(out[i + j], f.mul(x, y));
        }
    }
    trim(out)
}

/// Quotient and remainder; `b` must be nonzero.
fn divrem(f: &PrimeField, a: &[u64], b: &[u64]) -> (Vec<u64>, Vec<u64>) {
    let mut rem = trim(a.to_vec());
    if rem.len() < b.len() {
        return (Vec::new(), rem);
    }
    let lead_inv = f.inv(*b.last().unwrap());
    let mut quot = vec![0; rem.len() - b.len() + 1];
    while rem.len() >= b.len() {
        let shift = rem.len() - b.len();
        let c = f.mul(*rem.last().unwrap(), lead_inv);
        quot[shift] = c;
        for (j, &y) in b.iter().enumerate() {
            rem[shift + j] = f.sub(rem[shift + j], f.mul(c, y));
        }
        rem = trim(rem);
    }
    (trim(quot), rem)
}

fn monic(f: &PrimeField, a: Vec<u64>) -> Vec<u64> {
    match a.last() {
        None => a,
        Some(&lead) => {
            let inv = f.inv(lead);
            a.into_iter().map(|c| f.mul(c, inv)).collect()
        }
    }
}

fn gcd(f: &PrimeField, a: &[u64], b: &[u64]) -> Vec<u64> {
    let mut x = trim(a.to_vec());
    let mut y = trim(b.to_vec());
    while !y.is_empty() {
        let (_, r) = divrem(f, &x, &y);
        x = y;
        y = r;
    }
    monic(f, x)
}

fn powmod(f: &PrimeField, base: &[u64], mut exp: u64, modulus: &[u64]) -> Vec<u64> {
    let mut result = vec![1];
    let mut b = divrem(f, base, modulus).1;
    while exp > 0 {
        if exp & 1 == 1 {
            result = divrem(f, &mul(f, &result, &b), modulus).1;
        }
        b = divrem(f, &mul(f, &b, &b), modulus).1;
        exp >>= 1;
    }
    result
}

/// Distinct roots in F_p, sorted ascending.
pub fn roots(f: &PrimeField, poly: &[u64]) -> Vec<u64> {
    let poly = trim(poly.to_vec());
    if poly.len() <= 1 {
        return Vec::new();
    }
    if poly.len() - 1 <= EXHAUSTIVE_ROOT_LIMIT {
        roots_exhaustive(f, &poly)
    } else {
        roots_splitting(f, &poly)
    }
}

pub fn roots_exhaustive(f: &PrimeField, poly: &[u64]) -> Vec<u64> {
    (0..f.modulus())
        .filter(|&x| eval(f, poly, x) == 0)
        .collect()
}

/// Roots via `gcd(poly, x^p - x)` followed by equal-degree splitting with
/// `(x + a)^((p-1)/2) - 1` for `a = 0, 1, 2, …`.
pub fn roots_splitting(f: &PrimeField, poly: &[u64]) -> Vec<u64> {
    let p = f.modulus();
    let poly = monic(f, trim(poly.to_vec()));
    let xp = powmod(f, &[0, 1], p, &poly);
    let mut xp_minus_x = xp;
    xp_minus_x.resize(xp_minus_x.len().max(2), 0);
    xp_minus_x[1] = f.sub(xp_minus_x[1], 1);
    let linear = gcd(f, &poly, &trim(xp_minus_x));
    let mut out = Vec::new();
    split_linear(f, linear, &mut out);
    out.sort_unstable();
    out
}

fn split_linear(f: &PrimeField, g: Vec<u64>, out: &mut Vec<u64>) {
    match g.len() {
        0 | 1 => return,
        2 => {
            // g = x + c (monic)
            out.push(f.neg(g[0]));
            return;
        }
        _ => {}
    }
    let half = (f.modulus() - 1) / 2;
    for a in 0..f.modulus() {
        let mut h = powmod(f, &[a, 1], half, &g);
        if h.is_empty() {
            h = vec![0];
        }
        h[0] = f.sub(h[0], 1);
        let d = gcd(f, &g, &trim(h));
        if d.len() > 1 && d.len() < g.len() {
            let (q, _) = divrem(f, &g, &d);
            split_linear(f, d, out);
            split_linear(f, monic(f, q), out);
            return;
        }
    }
    unreachable!("a squarefree product of distinct linear factors always splits");
}

/// Characteristic polynomial `det(x·I - m)` via Hessenberg reduction.
pub fn charpoly(f: &PrimeField, m: &[Vec<u64>]) -> Vec<u64> {
    let n = m.len();
    let mut h: Vec<Vec<u64>> = m.to_vec();
    for col in 1..n.saturating_sub(1) {
        // make h[i][col-1] zero below the subdiagonal
        let Some(pivot) = (col..n).find(|&i| h[i][col - 1] != 0) else {
            continue;
        };
        if pivot != col {
            h.swap(pivot, col);
            for row in h.iter_mut() {
                row.swap(pivot, col);
            }
        }
        let t_inv = f.inv(h[col][col - 1]);
        for i in col + 1..n {
            let u = f.mul(h[i][col - 1], t_inv);
            if u == 0 {
                continue;
            }
            for j in 0..n {
                let v = f.mul(u, h[col][j]);
                h[i][j] = f.sub(h[i][j], v);
            }
            for row in h.iter_mut() {
                let v = f.mul(u, row[i]);
                row[col] = f.add(row[col], v);
            }
        }
    }
    // p_k = (x - h_kk) p_{k-1} - sum_{i<k} h_ik (prod_{j=i+1..k} h_{j,j-1}) p_{i-1}
    let mut polys: Vec<Vec<u64>> = vec![vec![1]];
    for k in 0..n {
        let mut next = mul(f, &polys[k], &[f.neg(h[k][k]), 1]);
        next.resize(k + 2, 0);
        let mut t = 1;
        for i in (0..k).rev() {
            t = f.mul(t, h[i + 1][i]);
            let c = f.mul(h[i][k], t);
            if c == 0 {
                continue;
            }
            for (d, &coef) in polys[i].iter().enumerate() {
                next[d] = f.sub(next[d], f.mul(c, coef));
            }
        }
        polys.push(next);
    }
    polys.pop().unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    /// det(x·I - m) by Gaussian elimination at a single point.
    fn det_at(f: &PrimeField, m: &[Vec<u64>], x: u64) -> u64 {
        let n = m.len();
        let mut a: Vec<Vec<u64>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| f.sub(if i == j { x } else { 0 }, m[i][j]))
                    .collect()
            })
            .collect();
        let mut det = 1;
        for c in 0..n {
            let Some(p) = (c..n).find(|&r| a[r][c] != 0) else {
                return 0;
            };
            if p != c {
                a.swap(p, c);
                det = f.neg(det);
            }
            det = f.mul(det, a[c][c]);
            let inv = f.inv(a[c][c]);
            for r in c + 1..n {
                let factor = f.mul(a[r][c], inv);
                for k in c..n {
                    let v = f.mul(factor, a[c][k]);
                    a[r][k] = f.sub(a[r][k], v);
                }
            }
        }
        det
    }

    proptest! {
        #[test]
        fn charpoly_matches_determinant(entries in proptest::collection::vec(0u64..31, 1..=36)) {
            let f = PrimeField::new(31);
            let n = (entries.len() as f64).sqrt() as usize;
            let m: Vec<Vec<u64>> = (0..n).map(|i| entries[i * n..(i + 1) * n].to_vec()).collect();
            let cp = charpoly(&f, &m);
            prop_assert_eq!(cp.len(), n + 1);
            for x in [0u64, 1, 5, 17, 30] {
                prop_assert_eq!(eval(&f, &cp, x), det_at(&f, &m, x));
            }
        }

        #[test]
        fn root_strategies_agree(rs in proptest::collection::vec(0u64..97, 1..8), extra in 0u64..97) {
            let f = PrimeField::new(97);
            // product of (x - r) times an irreducible quadratic x^2 - 5 (5 is a non-residue mod 97)
            let mut poly = vec![f.neg(5), 0, 1];
            for &r in &rs {
                poly = mul(&f, &poly, &[f.neg(r), 1]);
            }
            poly = mul(&f, &poly, &[f.neg(extra), 1]);
            let a = roots_exhaustive(&f, &poly);
            let b = roots_splitting(&f, &poly);
            prop_assert_eq!(&a, &b);
            let mut expected: Vec<u64> = rs.clone();
            expected.push(extra);
            expected.sort_unstable();
            expected.dedup();
            prop_assert_eq!(a, expected);
        }
    }

    #[test]
    fn high_degree_uses_splitting() {
        let f = PrimeField::new(1201);
        let mut poly = vec![1];
        for r in 0..80 {
            poly = mul(&f, &poly, &[f.neg(r * 7 % 1201), 1]);
        }
        let got = roots(&f, &poly);
        let mut expected: Vec<u64> = (0..80).map(|r| r * 7 % 1201).collect();
        expected.sort_unstable();
        assert_eq!(got, expected);
    }
}
