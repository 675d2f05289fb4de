use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};

use super::{AlgebraError, IntegerMatrix};

/// Result of a Smith normal form computation: unimodular `u`, `v` with
/// `u * a * v = d` and `d` diagonal, nonnegative, each entry dividing the
/// next, zeros last.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SmithDecomposition {
    u: IntegerMatrix,
    d: IntegerMatrix,
    v: IntegerMatrix,
}

impl SmithDecomposition {
    pub fn u(&self) -> &IntegerMatrix {
        &self.u
    }

    pub fn d(&self) -> &IntegerMatrix {
        &self.d
    }

    pub fn v(&self) -> &IntegerMatrix {
        &self.v
    }

    /// Full diagonal of `d`, length `min(rows, cols)`, zeros included.
    pub fn diagonal(&self) -> Vec<i64> {
        (0..self.d.rows().min(self.d.cols())).map(|i| self.d.get(i, i)).collect()
    }

    /// Nonzero diagonal entries, in divisibility order.
    pub fn invariant_factors(&self) -> Vec<i64> {
        self.diagonal().into_iter().filter(|&d| d != 0).collect()
    }

    pub fn rank(&self) -> usize {
        self.invariant_factors().len()
    }
}

/// Diagonalizes an integer matrix over Z.
///
/// Pivot selection is deterministic: the entry of smallest nonzero absolute
/// value in the remaining block, ties broken by lowest row index and then
/// lowest column index. All elimination runs on big integers; the final
/// narrowing back to `i64` reports overflow instead of wrapping.
pub fn smith_normal_form(a: &IntegerMatrix) -> Result<SmithDecomposition, AlgebraError> {
    if a.is_empty() {
        return Err(AlgebraError::EmptyMatrix);
    }
    let (m, n) = (a.rows(), a.cols());
    let mut mat: Vec<Vec<BigInt>> = (0..m)
        .map(|i| a.row(i).iter().map(|&v| BigInt::from(v)).collect())
        .collect();
    let mut u = big_identity(m);
    let mut v = big_identity(n);

    for k in 0..m.min(n) {
        while let Some((pi, pj)) = select_pivot(&mat, k) {
            if pi != k {
                mat.swap(k, pi);
                u.swap(k, pi);
            }
            if pj != k {
                swap_cols(&mut mat, k, pj);
                swap_cols(&mut v, k, pj);
            }

            let mut clean = true;
            for i in (k + 1)..m {
                if !mat[i][k].is_zero() {
                    let q = &mat[i][k] / &mat[k][k];
                    row_sub(&mut mat, i, k, &q);
                    row_sub(&mut u, i, k, &q);
                    if !mat[i][k].is_zero() {
                        clean = false;
                    }
                }
            }
            for j in (k + 1)..n {
                if !mat[k][j].is_zero() {
                    let q = &mat[k][j] / &mat[k][k];
                    col_sub(&mut mat, j, k, &q);
                    col_sub(&mut v, j, k, &q);
                    if !mat[k][j].is_zero() {
                        clean = false;
                    }
                }
            }
            if !clean {
                continue;
            }

            // Row and column k are clear; force the pivot to divide the
            // rest of the block before moving on, so the diagonal chain
            // holds globally.
            match first_nondivisible(&mat, k) {
                Some(i) => {
                    row_add(&mut mat, k, i);
                    row_add(&mut u, k, i);
                }
                None => break,
            }
        }
    }

    for k in 0..m.min(n) {
        if mat[k][k].is_negative() {
            for x in &mut mat[k] {
                *x = -&*x;
            }
            for x in &mut u[k] {
                *x = -&*x;
            }
        }
    }

    Ok(SmithDecomposition {
        u: narrow(&u)?,
        d: narrow(&mat)?,
        v: narrow(&v)?,
    })
}

fn big_identity(n: usize) -> Vec<Vec<BigInt>> {
    (0..n)
        .map(|i| (0..n).map(|j| BigInt::from(i64::from(i == j))).collect())
        .collect()
}

fn select_pivot(mat: &[Vec<BigInt>], k: usize) -> Option<(usize, usize)> {
    let mut best: Option<(BigInt, usize, usize)> = None;
    for (i, row) in mat.iter().enumerate().skip(k) {
        for (j, val) in row.iter().enumerate().skip(k) {
            if val.is_zero() {
                continue;
            }
            let mag = val.abs();
            match &best {
                Some((m, _, _)) if *m <= mag => {}
                _ => best = Some((mag, i, j)),
            }
        }
    }
    best.map(|(_, i, j)| (i, j))
}

fn swap_cols(mat: &mut [Vec<BigInt>], a: usize, b: usize) {
    for row in mat {
        row.swap(a, b);
    }
}

/// row[i] -= q * row[k]
fn row_sub(mat: &mut [Vec<BigInt>], i: usize, k: usize, q: &BigInt) {
    if q.is_zero() {
        return;
    }
    let pivot_row = mat[k].clone();
    for (x, p) in mat[i].iter_mut().zip(&pivot_row) {
        *x -= q * p;
    }
}

/// col[j] -= q * col[k]
fn col_sub(mat: &mut [Vec<BigInt>], j: usize, k: usize, q: &BigInt) {
    if q.is_zero() {
        return;
    }
    for row in mat {
        let sub = q * &row[k];
        row[j] -= sub;
    }
}

/// row[k] += row[i]
fn row_add(mat: &mut [Vec<BigInt>], k: usize, i: usize) {
    let src = mat[i].clone();
    for (x, s) in mat[k].iter_mut().zip(&src) {
        *x += s;
    }
}

fn first_nondivisible(mat: &[Vec<BigInt>], k: usize) -> Option<usize> {
    let pivot = &mat[k][k];
    for (i, row) in mat.iter().enumerate().skip(k + 1) {
        for val in row.iter().skip(k + 1) {
            if !(val % pivot).is_zero() {
                return Some(i);
            }
        }
    }
    None
}

fn narrow(grid: &[Vec<BigInt>]) -> Result<IntegerMatrix, AlgebraError> {
    let rows = grid.len();
    let cols = grid.first().map_or(0, Vec::len);
    let mut entries = Vec::with_capacity(rows * cols);
    for row in grid {
        for val in row {
            entries
                .push(val.to_i64().ok_or_else(|| AlgebraError::Overflow { value: val.to_string() })?);
        }
    }
    IntegerMatrix::new(rows, cols, entries)
}
