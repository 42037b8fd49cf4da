//! Exact Gaussian elimination over the scalars.

use alloc::vec::Vec;

use crate::field::Scalar;

/// Reduced row echelon form in place; returns the pivot columns.
pub fn row_reduce(rows: &mut Vec<Vec<Scalar>>, cols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].inv().expect("pivot is nonzero");
        if !inv.is_one() {
            for x in rows[r][c..].iter_mut() {
                if !x.is_zero() {
                    *x = &*x * &inv;
                }
            }
        }
        let (head, tail) = rows.split_at_mut(r);
        let (pivot_row, tail) = tail.split_first_mut().expect("row r exists");
        for row in head.iter_mut().chain(tail.iter_mut()) {
            if row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for k in c..cols {
                if !pivot_row[k].is_zero() {
                    row[k] = &row[k] - &(&f * &pivot_row[k]);
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    rows.truncate(r);
    pivots
}

/// Rank by forward elimination only; rows above the pivot are left alone.
pub fn rank(mut rows: Vec<Vec<Scalar>>, cols: usize) -> usize {
    let mut r = 0;
    for c in 0..cols {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].inv().expect("pivot is nonzero");
        let (head, tail) = rows.split_at_mut(r + 1);
        let pivot_row = &head[r];
        for row in tail.iter_mut() {
            if row[c].is_zero() {
                continue;
            }
            let f = &row[c] * &inv;
            row[c] = Scalar::zero();
            for k in c + 1..cols {
                if !pivot_row[k].is_zero() {
                    row[k] = &row[k] - &(&f * &pivot_row[k]);
                }
            }
        }
        r += 1;
    }
    r
}

/// A basis of `{ x : A x = 0 }`.
pub fn kernel(mut rows: Vec<Vec<Scalar>>, cols: usize) -> Vec<Vec<Scalar>> {
    let pivots = row_reduce(&mut rows, cols);
    let mut basis = Vec::new();
    for free in (0..cols).filter(|c| !pivots.contains(c)) {
        let mut v = alloc::vec![Scalar::zero(); cols];
        v[free] = Scalar::one();
        for (row, &p) in rows.iter().zip(&pivots) {
            v[p] = -&row[free];
        }
        basis.push(v);
    }
    basis
}
