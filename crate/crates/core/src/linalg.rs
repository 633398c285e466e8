//! Dense Gaussian elimination over exact fields (`Ratio<i64>`, Gaussian
//! rationals). Matrices are small: Cartan matrices, Gram systems, and the
//! symmetric-power models used by the oracle.

use num::traits::Num;

pub type Matrix<T> = Vec<Vec<T>>;

pub fn identity<T: Num + Clone>(n: usize) -> Matrix<T> {
    (0..n)
        .map(|i| (0..n).map(|j| if i == j { T::one() } else { T::zero() }).collect())
        .collect()
}

/// Row-reduces `m` in place and returns the pivot columns.
fn row_reduce<T: Num + Clone>(m: &mut Matrix<T>) -> Vec<usize> {
    let rows = m.len();
    let cols = if rows == 0 { 0 } else { m[0].len() };
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = T::one() / m[r][c].clone();
        for x in m[r].iter_mut() {
            *x = x.clone() * inv.clone();
        }
        for i in 0..rows {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for j in 0..cols {
                    let v = m[r][j].clone() * f.clone();
                    m[i][j] = m[i][j].clone() - v;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank<T: Num + Clone>(m: &Matrix<T>) -> usize {
    let mut work = m.clone();
    row_reduce(&mut work).len()
}

pub fn inverse<T: Num + Clone>(m: &Matrix<T>) -> Option<Matrix<T>> {
    let n = m.len();
    let mut aug: Matrix<T> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { T::one() } else { T::zero() }));
            r
        })
        .collect();
    let pivots = row_reduce(&mut aug);
    if pivots.len() < n || pivots.iter().enumerate().any(|(i, &p)| p != i) {
        return None;
    }
    Some(aug.into_iter().map(|row| row[n..].to_vec()).collect())
}

/// Solves the square system `a x = b`; `None` when `a` is singular.
pub fn solve<T: Num + Clone>(a: &Matrix<T>, b: &[T]) -> Option<Vec<T>> {
    let inv = inverse(a)?;
    Some(
        inv.iter()
            .map(|row| {
                row.iter()
                    .zip(b)
                    .fold(T::zero(), |acc, (x, y)| acc + x.clone() * y.clone())
            })
            .collect(),
    )
}

pub fn mat_mul<T: Num + Clone>(a: &Matrix<T>, b: &Matrix<T>) -> Matrix<T> {
    let n = a.len();
    let k = b.len();
    let m = if k == 0 { 0 } else { b[0].len() };
    (0..n)
        .map(|i| {
            (0..m)
                .map(|j| {
                    (0..k).fold(T::zero(), |acc, t| acc + a[i][t].clone() * b[t][j].clone())
                })
                .collect()
        })
        .collect()
}
