//! Smith normal form over an exact integer type.
//!
//! Generic over any signed integer implementing [`num_integer::Integer`], so
//! the same code runs on `i64`, `i128` or `num_bigint::BigInt`.

use num_integer::Integer;
use num_traits::Signed;

/// Scalar types accepted by [`invariant_factors`].
pub trait ExactInteger: Integer + Signed + Clone {}

impl<T: Integer + Signed + Clone> ExactInteger for T {}

/// Diagonal of the Smith normal form of a `rows x cols` matrix.
///
/// Returns `min(rows, cols)` nonnegative entries `d_1 | d_2 | ...` with all
/// zeros at the end. Pivots are chosen by minimal absolute value.
pub fn invariant_factors<T: ExactInteger>(matrix: &[Vec<T>]) -> Vec<T> {
    let rows = matrix.len();
    let cols = matrix.first().map_or(0, Vec::len);
    assert!(
        matrix.iter().all(|r| r.len() == cols),
        "ragged matrix passed to invariant_factors"
    );
    let mut a: Vec<Vec<T>> = matrix.to_vec();
    let dim = rows.min(cols);
    let mut diag = Vec::with_capacity(dim);

    for k in 0..dim {
        let Some((pi, pj)) = min_abs_entry(&a, k) else {
            break;
        };
        a.swap(k, pi);
        swap_cols(&mut a, k, pj);

        loop {
            let mut dirty = false;
            for i in k + 1..rows {
                if !a[i][k].is_zero() {
                    let q = a[i][k].div_floor(&a[k][k]);
                    row_axpy(&mut a, i, k, &q);
                    dirty |= !a[i][k].is_zero();
                }
            }
            for j in k + 1..cols {
                if !a[k][j].is_zero() {
                    let q = a[k][j].div_floor(&a[k][k]);
                    col_axpy(&mut a, j, k, &q);
                    dirty |= !a[k][j].is_zero();
                }
            }
            if dirty {
                // a remainder is now smaller than the pivot; re-pivot inside row/column k
                let (pi, pj) = min_abs_in_cross(&a, k);
                a.swap(k, pi);
                swap_cols(&mut a, k, pj);
                continue;
            }
            // row and column cleared; enforce divisibility on the remaining block
            let bad_row = (k + 1..rows).find(|&i| (k + 1..cols).any(|j| !a[i][j].is_multiple_of(&a[k][k])));
            match bad_row {
                Some(i) => {
                    let one = T::one();
                    let minus_one = -one;
                    // row_k += row_i
                    row_axpy(&mut a, k, i, &minus_one);
                }
                None => break,
            }
        }
        diag.push(a[k][k].abs());
    }
    diag.resize(dim, T::zero());
    diag
}

fn min_abs_entry<T: ExactInteger>(a: &[Vec<T>], k: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for (i, row) in a.iter().enumerate().skip(k) {
        for (j, v) in row.iter().enumerate().skip(k) {
            if v.is_zero() {
                continue;
            }
            if best.is_none_or(|(bi, bj)| v.abs() < a[bi][bj].abs()) {
                best = Some((i, j));
            }
        }
    }
    best
}

fn min_abs_in_cross<T: ExactInteger>(a: &[Vec<T>], k: usize) -> (usize, usize) {
    let mut best = (k, k);
    for i in k..a.len() {
        let v = &a[i][k];
        if !v.is_zero() && (a[best.0][best.1].is_zero() || v.abs() < a[best.0][best.1].abs()) {
            best = (i, k);
        }
    }
    for j in k..a[k].len() {
        let v = &a[k][j];
        if !v.is_zero() && (a[best.0][best.1].is_zero() || v.abs() < a[best.0][best.1].abs()) {
            best = (k, j);
        }
    }
    best
}

/// row_dst -= q * row_src
fn row_axpy<T: ExactInteger>(a: &mut [Vec<T>], dst: usize, src: usize, q: &T) {
    let src_row = a[src].clone();
    for (d, s) in a[dst].iter_mut().zip(src_row) {
        *d = d.clone() - q.clone() * s;
    }
}

/// col_dst -= q * col_src
fn col_axpy<T: ExactInteger>(a: &mut [Vec<T>], dst: usize, src: usize, q: &T) {
    for row in a.iter_mut() {
        let s = row[src].clone();
        row[dst] = row[dst].clone() - q.clone() * s;
    }
}

fn swap_cols<T>(a: &mut [Vec<T>], i: usize, j: usize) {
    if i != j {
        for row in a.iter_mut() {
            row.swap(i, j);
        }
    }
}
