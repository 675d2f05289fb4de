use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use super::AlgebraError;

/// Dense integer matrix, row-major. Zero rows or columns are allowed so
/// that empty presentations (no relations, or no generators) have a home.
///
/// JSON form is `{"rows": r, "cols": c, "entries": [[..], ..]}` with one
/// inner array per row; the shape is validated on deserialization.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "MatrixRepr", into = "MatrixRepr")]
pub struct IntegerMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<i64>,
}

#[derive(Serialize, Deserialize)]
struct MatrixRepr {
    rows: usize,
    cols: usize,
    entries: Vec<Vec<i64>>,
}

impl TryFrom<MatrixRepr> for IntegerMatrix {
    type Error = AlgebraError;

    fn try_from(repr: MatrixRepr) -> Result<Self, Self::Error> {
        if repr.entries.len() != repr.rows {
            return Err(AlgebraError::ShapeMismatch {
                rows: repr.rows,
                cols: repr.cols,
                len: repr.entries.len(),
            });
        }
        let mut entries = Vec::with_capacity(repr.rows * repr.cols);
        for row in &repr.entries {
            if row.len() != repr.cols {
                return Err(AlgebraError::ShapeMismatch {
                    rows: repr.rows,
                    cols: repr.cols,
                    len: row.len(),
                });
            }
            entries.extend_from_slice(row);
        }
        Ok(IntegerMatrix { rows: repr.rows, cols: repr.cols, entries })
    }
}

impl From<IntegerMatrix> for MatrixRepr {
    fn from(m: IntegerMatrix) -> Self {
        let entries = (0..m.rows).map(|i| m.row(i).to_vec()).collect();
        MatrixRepr { rows: m.rows, cols: m.cols, entries }
    }
}

impl IntegerMatrix {
    /// Builds a matrix from row-major entries; the length must be `rows * cols`.
    pub fn new(rows: usize, cols: usize, entries: Vec<i64>) -> Result<Self, AlgebraError> {
        if entries.len() != rows.checked_mul(cols).expect("matrix size") {
            return Err(AlgebraError::ShapeMismatch { rows, cols, len: entries.len() });
        }
        Ok(IntegerMatrix { rows, cols, entries })
    }

    /// Builds from explicit rows, which must all have equal length.
    /// An empty slice gives the 0x0 matrix.
    pub fn from_rows(rows: &[Vec<i64>]) -> Result<Self, AlgebraError> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        let mut entries = Vec::with_capacity(r * c);
        for row in rows {
            if row.len() != c {
                return Err(AlgebraError::ShapeMismatch { rows: r, cols: c, len: row.len() });
            }
            entries.extend_from_slice(row);
        }
        Ok(IntegerMatrix { rows: r, cols: c, entries })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntegerMatrix { rows, cols, entries: vec![0; rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    /// True when either dimension is zero.
    pub fn is_empty(&self) -> bool {
        self.rows == 0 || self.cols == 0
    }

    pub fn get(&self, row: usize, col: usize) -> i64 {
        assert!(row < self.rows && col < self.cols, "index out of range");
        self.entries[row * self.cols + col]
    }

    pub fn set(&mut self, row: usize, col: usize, value: i64) {
        assert!(row < self.rows && col < self.cols, "index out of range");
        self.entries[row * self.cols + col] = value;
    }

    pub fn row(&self, row: usize) -> &[i64] {
        assert!(row < self.rows, "row out of range");
        &self.entries[row * self.cols..(row + 1) * self.cols]
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    /// Index of the first asymmetric entry pair, if any.
    pub fn first_asymmetry(&self) -> Option<(usize, usize)> {
        if !self.is_square() {
            return None;
        }
        for i in 0..self.rows {
            for j in (i + 1)..self.cols {
                if self.get(i, j) != self.get(j, i) {
                    return Some((i, j));
                }
            }
        }
        None
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square() && self.first_asymmetry().is_none()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j));
            }
        }
        t
    }

    /// Exact product. Accumulates in big integers and reports entries that
    /// do not fit back into `i64` rather than wrapping.
    pub fn mul(&self, rhs: &IntegerMatrix) -> Result<IntegerMatrix, AlgebraError> {
        if self.cols != rhs.rows {
            return Err(AlgebraError::DimensionMismatch { expected: self.cols, got: rhs.rows });
        }
        let mut out = IntegerMatrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for j in 0..rhs.cols {
                let mut acc = BigInt::zero();
                for k in 0..self.cols {
                    acc += BigInt::from(self.get(i, k)) * BigInt::from(rhs.get(k, j));
                }
                let v = acc
                    .to_i64()
                    .ok_or_else(|| AlgebraError::Overflow { value: acc.to_string() })?;
                out.set(i, j, v);
            }
        }
        Ok(out)
    }

    /// Exact determinant by cofactor expansion; the 0x0 determinant is 1.
    pub fn det(&self) -> Result<BigInt, AlgebraError> {
        if !self.is_square() {
            return Err(AlgebraError::NotSquare { rows: self.rows, cols: self.cols });
        }
        let grid: Vec<Vec<BigInt>> = (0..self.rows)
            .map(|i| self.row(i).iter().map(|&v| BigInt::from(v)).collect())
            .collect();
        Ok(det_grid(&grid))
    }

    pub fn is_unimodular(&self) -> bool {
        self.is_square() && self.det().map(|d| d.abs().is_one()).unwrap_or(false)
    }
}

pub(crate) fn det_grid(grid: &[Vec<BigInt>]) -> BigInt {
    let n = grid.len();
    match n {
        0 => BigInt::one(),
        1 => grid[0][0].clone(),
        2 => &grid[0][0] * &grid[1][1] - &grid[0][1] * &grid[1][0],
        _ => {
            let mut acc = BigInt::zero();
            for (j, top) in grid[0].iter().enumerate() {
                if top.is_zero() {
                    continue;
                }
                let minor: Vec<Vec<BigInt>> = grid[1..]
                    .iter()
                    .map(|row| {
                        row.iter()
                            .enumerate()
                            .filter(|&(k, _)| k != j)
                            .map(|(_, v)| v.clone())
                            .collect()
                    })
                    .collect();
                let term = top * det_grid(&minor);
                if j % 2 == 0 {
                    acc += term;
                } else {
                    acc -= term;
                }
            }
            acc
        }
    }
}

impl fmt::Debug for IntegerMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntegerMatrix {}x{} ", self.rows, self.cols)?;
        f.debug_list().entries((0..self.rows).map(|i| self.row(i))).finish()
    }
}

impl fmt::Display for IntegerMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "[")?;
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", self.get(i, j))?;
            }
            write!(f, "]")?;
        }
        Ok(())
    }
}
