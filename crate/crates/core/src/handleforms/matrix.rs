//! 4x4 matrices of polynomials, used for the framing identities.

use std::fmt;

use super::poly::Poly;

/// Square polynomial matrix of fixed size 4.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyMatrix {
    entries: Vec<Poly>,
}

impl PolyMatrix {
    pub const SIZE: usize = 4;

    pub fn from_fn(mut entry: impl FnMut(usize, usize) -> Poly) -> PolyMatrix {
        let mut entries = Vec::with_capacity(Self::SIZE * Self::SIZE);
        for row in 0..Self::SIZE {
            for col in 0..Self::SIZE {
                entries.push(entry(row, col));
            }
        }
        PolyMatrix { entries }
    }

    pub fn zero() -> PolyMatrix {
        PolyMatrix::from_fn(|_, _| Poly::zero())
    }

    pub fn identity() -> PolyMatrix {
        PolyMatrix::from_fn(|r, c| if r == c { Poly::one() } else { Poly::zero() })
    }

    pub fn get(&self, row: usize, col: usize) -> &Poly {
        &self.entries[row * Self::SIZE + col]
    }

    pub fn transpose(&self) -> PolyMatrix {
        PolyMatrix::from_fn(|r, c| self.get(c, r).clone())
    }

    pub fn mul(&self, other: &PolyMatrix) -> PolyMatrix {
        PolyMatrix::from_fn(|r, c| {
            let mut total = Poly::zero();
            for k in 0..Self::SIZE {
                total = total + self.get(r, k) * other.get(k, c);
            }
            total
        })
    }

    /// Every entry multiplied by the scalar polynomial.
    pub fn scale(&self, f: &Poly) -> PolyMatrix {
        PolyMatrix::from_fn(|r, c| self.get(r, c) * f)
    }
}

impl fmt::Display for PolyMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in 0..Self::SIZE {
            let cells: Vec<String> =
                (0..Self::SIZE).map(|col| self.get(row, col).to_string()).collect();
            writeln!(f, "[{}]", cells.join(", "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::handleforms::poly::Coordinate;

    fn x(i: usize) -> Poly {
        Poly::coordinate(Coordinate::from_index(i))
    }

    #[test]
    fn identity_is_neutral() {
        let m = PolyMatrix::from_fn(|r, c| if r == c { x(r) } else { Poly::integer(1) });
        assert_eq!(m.mul(&PolyMatrix::identity()), m);
        assert_eq!(PolyMatrix::identity().mul(&m), m);
    }

    #[test]
    fn transpose_reverses_products() {
        let a = PolyMatrix::from_fn(|r, c| if (r + c) % 2 == 0 { x(0) } else { Poly::one() });
        let b = PolyMatrix::from_fn(|r, c| if r <= c { x(1) } else { Poly::zero() });
        assert_eq!(a.mul(&b).transpose(), b.transpose().mul(&a.transpose()));
    }

    #[test]
    fn scaling_distributes() {
        let m = PolyMatrix::from_fn(|r, _| x(r));
        let scaled = m.scale(&Poly::integer(3));
        assert_eq!(scaled.get(2, 0), &(Poly::integer(3) * x(2)));
    }
}
