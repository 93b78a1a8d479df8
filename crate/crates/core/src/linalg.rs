//! Exact dense linear algebra over `BigInt` and `BigRational`.
//!
//! Matrices are row-major `Vec<Vec<_>>`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type IntMatrix = Vec<Vec<BigInt>>;
pub type RatMatrix = Vec<Vec<BigRational>>;

pub fn to_rat_matrix(m: &[Vec<BigInt>]) -> RatMatrix {
    m.iter().map(|row| row.iter().map(|x| BigRational::from_integer(x.clone())).collect()).collect()
}

pub fn transpose<T: Clone>(m: &[Vec<T>]) -> Vec<Vec<T>> {
    if m.is_empty() {
        return Vec::new();
    }
    (0..m[0].len()).map(|j| m.iter().map(|row| row[j].clone()).collect()).collect()
}

pub fn identity_int(n: usize) -> IntMatrix {
    (0..n).map(|i| (0..n).map(|j| if i == j { BigInt::one() } else { BigInt::zero() }).collect()).collect()
}

pub fn mul_int(a: &[Vec<BigInt>], b: &[Vec<BigInt>]) -> IntMatrix {
    let inner = b.len();
    let cols = if inner == 0 { 0 } else { b[0].len() };
    a.iter()
        .map(|row| (0..cols).map(|j| (0..inner).fold(BigInt::zero(), |acc, k| acc + &row[k] * &b[k][j])).collect())
        .collect()
}

pub fn mul_rat_vec(a: &[Vec<BigRational>], v: &[BigRational]) -> Vec<BigRational> {
    a.iter().map(|row| row.iter().zip(v).fold(BigRational::zero(), |acc, (x, y)| acc + x * y)).collect()
}

/// Fraction-free Bareiss determinant.
pub fn det_int(m: &[Vec<BigInt>]) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut a: IntMatrix = m.to_vec();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                Some(i) => {
                    a.swap(i, k);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = v / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    sign * &a[n - 1][n - 1]
}

pub fn det_rat(m: &[Vec<BigRational>]) -> BigRational {
    let n = m.len();
    let mut a: RatMatrix = m.to_vec();
    let mut det = BigRational::one();
    for k in 0..n {
        let Some(p) = (k..n).find(|&i| !a[i][k].is_zero()) else {
            return BigRational::zero();
        };
        if p != k {
            a.swap(p, k);
            det = -det;
        }
        det *= &a[k][k];
        for i in k + 1..n {
            if a[i][k].is_zero() {
                continue;
            }
            let f = &a[i][k] / &a[k][k];
            for j in k..n {
                let v = &f * &a[k][j];
                a[i][j] -= v;
            }
        }
    }
    det
}

pub fn rank_rat(m: &[Vec<BigRational>]) -> usize {
    if m.is_empty() {
        return 0;
    }
    let mut a: RatMatrix = m.to_vec();
    let rows = a.len();
    let cols = a[0].len();
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(p, rank);
        for i in rank + 1..rows {
            if a[i][c].is_zero() {
                continue;
            }
            let f = &a[i][c] / &a[rank][c];
            for j in c..cols {
                let v = &f * &a[rank][j];
                a[i][j] -= v;
            }
        }
        rank += 1;
        if rank == rows {
            break;
        }
    }
    rank
}

pub fn rank_int(m: &[Vec<BigInt>]) -> usize {
    rank_rat(&to_rat_matrix(m))
}

/// Inverse by Gauss-Jordan, `None` if singular.
pub fn inverse_rat(m: &[Vec<BigRational>]) -> Option<RatMatrix> {
    let n = m.len();
    let mut a: RatMatrix = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { BigRational::one() } else { BigRational::zero() }));
            r
        })
        .collect();
    for k in 0..n {
        let p = (k..n).find(|&i| !a[i][k].is_zero())?;
        a.swap(p, k);
        let inv = a[k][k].recip();
        for x in a[k].iter_mut() {
            *x *= &inv;
        }
        for i in 0..n {
            if i == k || a[i][k].is_zero() {
                continue;
            }
            let f = a[i][k].clone();
            for j in 0..2 * n {
                let v = &f * &a[k][j];
                a[i][j] -= v;
            }
        }
    }
    Some(a.into_iter().map(|row| row[n..].to_vec()).collect())
}

/// Column-style Hermite normal form of a `d x n` integer matrix.
///
/// Returns the nonzero columns of the reduced matrix: a lower echelon basis of
/// the lattice `A Z^n`, pivots positive, entries left of each pivot reduced
/// into `[0, pivot)`.
pub fn column_hnf(a: &[Vec<BigInt>]) -> IntMatrix {
    let d = a.len();
    if d == 0 {
        return Vec::new();
    }
    let mut cols: Vec<Vec<BigInt>> = transpose(a);
    let n = cols.len();
    let mut p = 0;
    for i in 0..d {
        if p == n {
            break;
        }
        loop {
            let Some(k) =
                (p..n).filter(|&k| !cols[k][i].is_zero()).min_by(|&x, &y| cols[x][i].abs().cmp(&cols[y][i].abs()))
            else {
                break;
            };
            cols.swap(p, k);
            let mut done = true;
            for k in p + 1..n {
                if cols[k][i].is_zero() {
                    continue;
                }
                let q = cols[k][i].div_floor(&cols[p][i]);
                let pivot = cols[p].clone();
                for (x, y) in cols[k].iter_mut().zip(&pivot) {
                    *x -= &q * y;
                }
                if !cols[k][i].is_zero() {
                    done = false;
                }
            }
            if done {
                break;
            }
        }
        if cols[p][i].is_zero() {
            continue;
        }
        if cols[p][i].is_negative() {
            for x in cols[p].iter_mut() {
                *x = -x.clone();
            }
        }
        for k in 0..p {
            let q = cols[k][i].div_floor(&cols[p][i]);
            if q.is_zero() {
                continue;
            }
            let pivot = cols[p].clone();
            for (x, y) in cols[k].iter_mut().zip(&pivot) {
                *x -= &q * y;
            }
        }
        p += 1;
    }
    transpose(&cols[..p])
}

/// Index `[Z^d : A Z^n]`, or `None` when `A` does not have full row rank.
pub fn lattice_index(a: &[Vec<BigInt>]) -> Option<BigInt> {
    let h = column_hnf(a);
    let d = a.len();
    if h.is_empty() || h[0].len() < d {
        return None;
    }
    Some((0..d).fold(BigInt::one(), |acc, i| acc * &h[i][i]))
}

/// Submatrix with the given columns.
pub fn select_columns<T: Clone>(a: &[Vec<T>], cols: &[usize]) -> Vec<Vec<T>> {
    a.iter().map(|row| cols.iter().map(|&j| row[j].clone()).collect()).collect()
}

pub fn gcd_all<'a>(values: impl IntoIterator<Item = &'a BigInt>) -> BigInt {
    values.into_iter().fold(BigInt::zero(), |acc, v| acc.gcd(v))
}
