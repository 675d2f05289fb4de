use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};
use serde::de::{self, Deserializer, MapAccess, Visitor};
use serde::ser::{SerializeMap, Serializer};
use serde::{Deserialize, Serialize};

use super::{smith_normal_form, AlgebraError, IntegerMatrix};

/// Finitely presented abelian group: `Z^generators` modulo the row span of
/// `relations`. A matrix with zero rows presents a free group.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AbelianGroupPresentation {
    generators: usize,
    relations: IntegerMatrix,
}

/// Whether a class is torsion, and if not, the gcd of its pairings with
/// all integer functionals on the group.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ClassInfo {
    Torsion,
    /// The divisor is always at least 1; 1 means some functional pairs to 1.
    NonTorsion(i64),
}

/// Isomorphism type of a finitely generated abelian group.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupStructure {
    free_rank: usize,
    /// Torsion coefficients greater than 1, each dividing the next.
    torsion: Vec<i64>,
}

impl AbelianGroupPresentation {
    /// Requires one column per generator; the row count is the number of
    /// relations and may be zero.
    pub fn new(generators: usize, relations: IntegerMatrix) -> Result<Self, AlgebraError> {
        if relations.cols() != generators {
            return Err(AlgebraError::DimensionMismatch {
                expected: generators,
                got: relations.cols(),
            });
        }
        Ok(AbelianGroupPresentation { generators, relations })
    }

    pub fn free(rank: usize) -> Self {
        AbelianGroupPresentation { generators: rank, relations: IntegerMatrix::zeros(0, rank) }
    }

    pub fn generators(&self) -> usize {
        self.generators
    }

    pub fn relations(&self) -> &IntegerMatrix {
        &self.relations
    }

    /// Torsion/divisibility data of the class `k`, given in the generator
    /// basis.
    ///
    /// A functional on the group is an integer vector orthogonal to every
    /// relation; the result is the gcd of the pairings of `k` with all of
    /// them. If every pairing vanishes the class is torsion (the zero
    /// class counts as torsion). Appending a redundant relation never
    /// changes the answer.
    pub fn class_divisibility(&self, k: &[i64]) -> Result<ClassInfo, AlgebraError> {
        if k.len() != self.generators {
            return Err(AlgebraError::DimensionMismatch {
                expected: self.generators,
                got: k.len(),
            });
        }
        if self.generators == 0 {
            return Ok(ClassInfo::Torsion);
        }

        // The functional lattice is spanned by the columns of v whose
        // diagonal entry in the Smith form is zero; pairing those columns
        // with k generates the full value ideal.
        let mut gcd = BigInt::zero();
        if self.relations.rows() == 0 {
            for &ki in k {
                gcd = gcd.gcd(&BigInt::from(ki));
            }
        } else {
            let snf = smith_normal_form(&self.relations)?;
            let diag = snf.diagonal();
            let v = snf.v();
            for col in 0..self.generators {
                let pivot = diag.get(col).copied().unwrap_or(0);
                if pivot != 0 {
                    continue;
                }
                let mut pairing = BigInt::zero();
                for (row, &ki) in k.iter().enumerate() {
                    pairing += BigInt::from(v.get(row, col)) * BigInt::from(ki);
                }
                gcd = gcd.gcd(&pairing);
            }
        }

        if gcd.is_zero() {
            Ok(ClassInfo::Torsion)
        } else {
            let d = gcd
                .to_i64()
                .ok_or_else(|| AlgebraError::Overflow { value: gcd.to_string() })?;
            Ok(ClassInfo::NonTorsion(d))
        }
    }

    /// Free rank and torsion coefficients, via the Smith form of the
    /// relation matrix.
    pub fn structure(&self) -> Result<GroupStructure, AlgebraError> {
        if self.generators == 0 || self.relations.rows() == 0 {
            return Ok(GroupStructure { free_rank: self.generators, torsion: Vec::new() });
        }
        let snf = smith_normal_form(&self.relations)?;
        let factors = snf.invariant_factors();
        Ok(GroupStructure {
            free_rank: self.generators - factors.len(),
            torsion: factors.into_iter().filter(|&d| d > 1).collect(),
        })
    }
}

impl ClassInfo {
    /// Divisor for non-torsion classes, `None` for torsion ones.
    pub fn divisor(&self) -> Option<i64> {
        match self {
            ClassInfo::Torsion => None,
            ClassInfo::NonTorsion(d) => Some(*d),
        }
    }
}

impl fmt::Display for ClassInfo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ClassInfo::Torsion => write!(f, "torsion"),
            ClassInfo::NonTorsion(d) => write!(f, "non-torsion: {d}"),
        }
    }
}

impl Serialize for ClassInfo {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        match self {
            ClassInfo::Torsion => serializer.serialize_str("torsion"),
            ClassInfo::NonTorsion(d) => {
                let mut map = serializer.serialize_map(Some(1))?;
                map.serialize_entry("non-torsion", d)?;
                map.end()
            }
        }
    }
}

impl<'de> Deserialize<'de> for ClassInfo {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        struct ClassInfoVisitor;

        impl<'de> Visitor<'de> for ClassInfoVisitor {
            type Value = ClassInfo;

            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str("\"torsion\" or {\"non-torsion\": d}")
            }

            fn visit_str<E: de::Error>(self, s: &str) -> Result<ClassInfo, E> {
                if s == "torsion" {
                    Ok(ClassInfo::Torsion)
                } else {
                    Err(E::custom(format!("unknown class info {s:?}")))
                }
            }

            fn visit_map<A: MapAccess<'de>>(self, mut map: A) -> Result<ClassInfo, A::Error> {
                let Some((key, d)) = map.next_entry::<String, i64>()? else {
                    return Err(de::Error::custom("empty class info object"));
                };
                if key != "non-torsion" {
                    return Err(de::Error::custom(format!("unknown class info key {key:?}")));
                }
                if d < 1 {
                    return Err(de::Error::custom("non-torsion divisor must be positive"));
                }
                if map.next_key::<String>()?.is_some() {
                    return Err(de::Error::custom("class info object has extra keys"));
                }
                Ok(ClassInfo::NonTorsion(d))
            }
        }

        deserializer.deserialize_any(ClassInfoVisitor)
    }
}

impl GroupStructure {
    pub fn free_rank(&self) -> usize {
        self.free_rank
    }

    pub fn torsion(&self) -> &[i64] {
        &self.torsion
    }

    pub fn is_trivial(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty()
    }

    /// Canonical name, e.g. `0`, `Z`, `Z^2 + Z/5`.
    pub fn description(&self) -> String {
        let mut parts = Vec::new();
        match self.free_rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{r}")),
        }
        for d in &self.torsion {
            parts.push(format!("Z/{d}"));
        }
        if parts.is_empty() {
            "0".to_string()
        } else {
            parts.join(" + ")
        }
    }
}

impl fmt::Display for GroupStructure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.description())
    }
}

/// First homology of the result of integer surgery on a framed link in the
/// three-sphere: one generator per meridian, relations given by the rows of
/// the symmetric linking matrix. The empty matrix presents the trivial
/// group.
pub fn surgery_h1_s3(linking: &IntegerMatrix) -> Result<AbelianGroupPresentation, AlgebraError> {
    if !linking.is_square() {
        return Err(AlgebraError::NotSquare { rows: linking.rows(), cols: linking.cols() });
    }
    if let Some((row, col)) = linking.first_asymmetry() {
        return Err(AlgebraError::NotSymmetric { row, col });
    }
    AbelianGroupPresentation::new(linking.cols(), linking.clone())
}

/// First homology of the mapping torus of a torus automorphism with
/// determinant 1: the cokernel of `a - 1` plus a free factor from the base
/// circle.
pub fn mapping_torus_h1(a: &IntegerMatrix) -> Result<AbelianGroupPresentation, AlgebraError> {
    if a.rows() != 2 || a.cols() != 2 {
        return Err(AlgebraError::NotTwoByTwo { rows: a.rows(), cols: a.cols() });
    }
    let det = a.det()?;
    if det != BigInt::from(1) {
        return Err(AlgebraError::DeterminantNotOne { det: det.to_string() });
    }
    // Relations are the columns of a - 1, written as rows, padded with a
    // zero coefficient on the free generator.
    let relations = IntegerMatrix::from_rows(&[
        vec![a.get(0, 0) - 1, a.get(1, 0), 0],
        vec![a.get(0, 1), a.get(1, 1) - 1, 0],
    ])?;
    AbelianGroupPresentation::new(3, relations)
}
